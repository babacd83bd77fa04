pub fn func_1() {
    let v_2 = ext_0();
    if 12 > 10 {
        let v_3 = 76 + 80;
        let v_4 = 740;
        let _ = 784;
        let v_5 = 803;
    } else {
        let v_6 = ext_0();
        if 11 > 10 {
            let _ = 141;
            let _ = 73 + 39;
        } else {
            let v_7 = ext_3();
            let v_8 = 688;
            if 13 > 10 {
                let v_9 = 770;
            } else {
                let v_10 = 681;
            }
        }
        let _ = 488;
    }
    pub fn func_11() {
        #[cfg(any(feature = "m1_6", feature = "m1_8"))]
        let v_12 = 860;
        #[cfg(any(feature = "m1_1", feature = "m1_7"))]
        let v_13 = 642;
    }
}
pub fn func_14() {
    pub fn func_15() {
        pub fn func_16() {
            match 3 {
                0 => {
                    let w_17 = 3;
                    let v_18 = 52 + 88;
                    let _ = 98;
                }
                _ => {}
            }
        }
        let v_19 = 753;
        #[cfg(any(feature = "m1_7", feature = "m1_8"))]
        let v_20 = func_11();
        pub fn func_21() {
            match 2 {
                0 => {
                    println!("msg_22 {}", 1);
                }
                _ => {}
            }
            match 3 {
                0 => {
                    let v_23 = 204;
                    let w_24 = 8;
                }
                _ => {}
            }
            pub fn func_25() {
                let v_26 = func_11();
                let v_27 = func_16();
                println!("msg_28 {}", 1);
            }
            match 3 {
                0 => {
                    println!("msg_29 {}", 1);
                    let w_30 = 4;
                    #[cfg(feature = "m1_5")]
                    let v_31 = ext_3();
                }
                _ => {}
            }
        }
    }
}
pub const LIMIT_32: u32 = 28 + 74;
pub type Alias_33 = u64;
pub fn func_34() {
    #[cfg(feature = "m1_5")]
    let v_35 = ext_2();
}
pub fn func_21() {
    if 12 > 10 {
        let v_36 = func_1();
        ext_1();
        println!("msg_37 {}", 1);
    } else {
        pub fn func_1() {
            pub fn func_38() {
                let v_39 = ext_1();
                ext_2();
                let v_40 = 1 + 55;
            }
        }
        let v_41 = 457;
    }
    #[cfg(feature = "m1_6")]
    let v_42 = 83;
    if 1 > 10 {
        let _ = 891;
        let v_43 = func_21();
    } else {
        pub fn func_16() {
            match 1 {
                0 => {
                    println!("msg_44 {}", 1);
                    let w_45 = 6;
                }
                _ => {}
            }
            let v_46 = func_25();
            func_14();
            pub fn func_47() {
                let v_48 = func_16();
                let w_49 = 2;
                let v_50 = 509;
            }
        }
        let v_51 = 239;
        let v_52 = 44 + 7;
        let v_53 = func_15();
    }
}
pub struct Handle_54;
impl Handle_54 {
    pub fn func_11() {
        match 1 {
            0 => {
                let v_55 = func_34();
                if 1 > 10 {
                    println!("msg_56 {}", 1);
                    let w_57 = 4;
                } else {
                    let v_58 = ext_3();
                }
                let v_59 = ext_2();
            }
            _ => {}
        }
        #[cfg(feature = "m1_2")]
        let _ = 834;
    }
    pub fn func_60() {
        let v_61 = ext_1();
        let v_62 = 376;
        if 17 > 10 {
            func_21();
        } else {
            if 0 > 10 {
                let w_63 = 6;
            } else {
                #[cfg(feature = "m1_1")]
                let _ = 11 + 65;
            }
        }
    }
}
#[cfg(not(feature = "m1_4"))]
pub type Alias_64 = u64;
use std::collections::HashMap;
pub struct Handle_65;
impl Handle_65 {
    #[cfg(not(feature = "m1_4"))]
    pub fn func_66() {
        let v_67 = ext_3();
        match 4 {
            0 => {
                let v_68 = ext_0();
            }
            _ => {}
        }
        pub fn func_69() {
            if 13 > 10 {
                let _ = 722;
                let _ = 47 + 84;
            } else {
                let w_70 = 0;
            }
            func_38();
        }
        func_47();
    }
    pub fn func_60() {
        ext_3();
        #[cfg(not(feature = "m1_4"))]
        let _ = 24 + 18;
    }
}
#[cfg(all(feature = "m1_1", not(feature = "m1_4")))]
pub fn func_71() {
    let v_72 = func_1();
    let v_73 = func_15();
    let v_74 = func_21();
    func_21();
}
pub fn func_75() {
    let _ = 99 + 47;
    match 1 {
        0 => {
            let v_76 = 16 + 89;
            pub fn func_77() {
                let v_78 = func_66();
                pub fn func_11() {
                    println!("msg_79 {}", 1);
                    let v_80 = func_71();
                }
                let v_81 = 599;
                if 5 > 10 {
                    println!("msg_82 {}", 1);
                    let v_83 = ext_3();
                    let v_84 = ext_0();
                    let w_85 = 3;
                } else {
                    println!("msg_86 {}", 1);
                    let w_87 = 8;
                }
            }
            #[cfg(not(feature = "m1_4"))]
            pub fn func_88() {
                func_1();
                match 3 {
                    0 => {
                        func_60();
                        let v_89 = func_1();
                        println!("msg_90 {}", 1);
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
}
pub struct Handle_91;
#[cfg(all(feature = "m1_1", not(feature = "m1_4")))]
impl Handle_91 {
    pub fn func_92() {
        let _ = 196;
        pub fn func_93() {
            let v_94 = func_60();
            let _ = 27;
            #[cfg(not(feature = "m1_4"))]
            let v_95 = func_66();
            let v_96 = func_66();
        }
        let v_97 = ext_0();
    }
    pub fn func_21() {
        func_75();
    }
}
pub fn func_98() {
    #[cfg(any(feature = "m1_2", feature = "m1_1"))]
    func_71();
    if 7 > 10 {
        if 9 > 10 {
            let v_99 = 41 + 87;
        } else {
            println!("msg_100 {}", 1);
        }
    } else {
        ext_3();
    }
    func_75();
}
pub struct Handle_101;
impl Handle_101 {
    pub fn func_102() {
        let v_103 = 18 + 78;
        pub fn func_104() {
            let v_105 = func_11();
        }
    }
}
pub fn func_21() {
    #[cfg(all(feature = "m1_7", not(feature = "m1_4")))]
    let v_106 = func_15();
    let v_107 = func_69();
}
pub fn func_108() {
    match 1 {
        0 => {
            let v_109 = 779;
            if 17 > 10 {
                let v_110 = 31 + 73;
                let v_111 = 30 + 50;
            } else {
                if 6 > 10 {
                    let v_112 = 365;
                    let w_113 = 4;
                } else {
                    println!("msg_114 {}", 1);
                    #[cfg(feature = "m1_3")]
                    let _ = 37 + 2;
                }
            }
        }
        _ => {}
    }
}
pub fn func_93() {
    match 0 {
        0 => {
            match 2 {
                0 => {
                    match 4 {
                        0 => {
                            let w_115 = 1;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            if 11 > 10 {
                let v_116 = 56 + 33;
            } else {
                let v_117 = 270;
                pub fn func_118() {
                    let v_119 = 5 + 3;
                    func_21();
                }
            }
            let v_120 = 20 + 62;
        }
        _ => {}
    }
    let v_121 = ext_1();
    ext_0();
    match 3 {
        0 => {
            let v_122 = 11 + 41;
            let v_123 = 722;
            #[cfg(all(feature = "m1_3", not(feature = "m1_0")))]
            let v_124 = 568;
        }
        _ => {}
    }
}
pub fn func_125() {
    ext_2();
    func_47();
    let v_126 = 690;
    if 17 > 10 {
        let v_127 = 235;
        #[cfg(feature = "m1_6")]
        let _ = 600;
        ext_3();
        let _ = 37 + 69;
    } else {
        let v_128 = 902;
        #[cfg(any(feature = "m1_2", feature = "m1_6"))]
        let v_129 = func_88();
        match 2 {
            0 => {
                match 3 {
                    0 => {
                        let v_130 = func_25();
                        ext_2();
                        println!("msg_131 {}", 1);
                    }
                    _ => {}
                }
                if 14 > 10 {
                    let v_132 = 123;
                } else {
                    #[cfg(any(feature = "m1_8", feature = "m1_7", feature = "m1_2"))]
                    let v_133 = 0;
                    func_102();
                }
            }
            _ => {}
        }
        pub fn func_134() {
            let v_135 = func_1();
            let v_136 = ext_1();
            match 2 {
                0 => {
                    ext_2();
                    #[cfg(feature = "m1_7")]
                    let v_137 = func_77();
                    #[cfg(not(feature = "m1_0"))]
                    let _ = 784;
                }
                _ => {}
            }
            let v_138 = func_47();
        }
    }
}
