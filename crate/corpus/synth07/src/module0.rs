pub fn func_1() {
    match 4 {
        0 => {
            let v_2 = 707;
            if 3 > 10 {
                let v_3 = 959;
                let v_4 = 852;
            } else {
                let v_5 = 872;
                let v_6 = 644;
            }
            let _ = 259;
        }
        _ => {}
    }
    if 2 > 10 {
        if 6 > 10 {
            let v_7 = 25 + 76;
        } else {
            #[cfg(all(feature = "feat0", not(feature = "feat25")))]
            let _ = 556;
            if 18 > 10 {
                ext_0();
                let v_8 = 646;
                let _ = 568;
                let _ = 33;
            } else {
                #[cfg(feature = "feat8")]
                let v_9 = 735;
                let w_10 = 1;
                let w_11 = 1;
            }
        }
        match 3 {
            0 => {
                match 1 {
                    0 => {
                        let _ = 847;
                        ext_3();
                        let _ = 67 + 77;
                    }
                    _ => {}
                }
                println!("msg_12 {}", 1);
                let _ = 914;
                if 3 > 10 {
                    let w_13 = 7;
                } else {
                    let w_14 = 5;
                }
            }
            _ => {}
        }
        let v_15 = 407;
    } else {
        println!("msg_16 {}", 1);
        let _ = 130;
    }
    if 18 > 10 {
        match 2 {
            0 => {
                let v_17 = 162;
            }
            _ => {}
        }
        #[cfg(feature = "feat22")]
        let v_18 = 825;
        println!("msg_19 {}", 1);
        match 0 {
            0 => {
                if 14 > 10 {
                    ext_1();
                    let w_20 = 6;
                } else {
                    let v_21 = 506;
                }
                match 4 {
                    0 => {
                        let v_22 = 116;
                        let v_23 = 48 + 17;
                        let w_24 = 5;
                    }
                    _ => {}
                }
                #[cfg(feature = "feat2")]
                let v_25 = ext_0();
                println!("msg_26 {}", 1);
            }
            _ => {}
        }
    } else {
        let v_27 = 6 + 47;
        ext_0();
    }
}
pub fn func_1() {
    match 4 {
        0 => {
            let v_28 = func_1();
            println!("msg_29 {}", 1);
        }
        _ => {}
    }
    func_1();
    func_1();
}
pub fn func_1() {
    let v_30 = 364;
    let v_31 = func_1();
    if 19 > 10 {
        pub fn func_32() {
            let _ = 82 + 14;
            match 0 {
                0 => {
                    let w_33 = 3;
                    println!("msg_34 {}", 1);
                    println!("msg_35 {}", 1);
                }
                _ => {}
            }
            let v_36 = func_1();
            let v_37 = ext_1();
        }
        #[cfg(feature = "feat17")]
        let v_38 = ext_3();
        let v_39 = func_32();
    } else {
        if 9 > 10 {
            let v_40 = 844;
        } else {
            match 1 {
                0 => {
                    let w_41 = 4;
                }
                _ => {}
            }
        }
        let _ = 670;
        ext_2();
        let v_42 = func_1();
    }
    #[cfg(feature = "feat8")]
    let v_43 = 73 + 21;
}
pub fn func_44() {
    let v_45 = 88 + 62;
    let v_46 = ext_1();
    #[cfg(feature = "feat12")]
    let v_47 = ext_0();
}
pub type Alias_48 = u64;
pub fn func_49() {
    ext_1();
}
pub mod inner_50 {
    use super::*;
    #[cfg(feature = "feat23")]
    pub const LIMIT_51: u32 = ext_1();
    #[cfg(feature = "feat21")]
    pub type Alias_52 = u64;
    pub fn func_53() {
        func_32();
        func_32();
        let v_54 = 694;
    }
}
pub struct Record_55 {
    #[cfg(all(feature = "feat0", not(feature = "feat14")))]
    pub field_56: u32,
    pub field_57: u32,
    pub field_58: u32,
    #[cfg(feature = "feat17")]
    pub field_59: u32,
}
pub fn func_53() {
    #[cfg(any(feature = "feat17", feature = "feat4"))]
    let v_60 = 43 + 31;
}
pub enum Kind_61 {
    Variant_62,
    #[cfg(any(feature = "feat23", feature = "feat8"))]
    Variant_63,
}
pub fn func_64() {
    #[cfg(any(feature = "feat0", feature = "feat22", feature = "feat12"))]
    func_44();
}
pub type Alias_65 = u64;
pub fn func_66() {
    let v_67 = 218;
}
pub struct Record_68 {
    #[cfg(feature = "feat0")]
    pub field_69: u32,
    pub field_70: u32,
    pub field_71: u32,
    pub field_72: u32,
}
pub fn func_53() {
    let v_73 = func_49();
}
pub fn func_74() {
    let _ = 736;
    let _ = 970;
    #[cfg(not(feature = "feat15"))]
    func_53();
    if 19 > 10 {
        match 0 {
            0 => {
                func_44();
                let _ = 586;
                match 4 {
                    0 => {
                        let w_75 = 3;
                        #[cfg(feature = "feat8")]
                        let v_76 = func_32();
                        let _ = 4;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    } else {
        let v_77 = func_53();
        println!("msg_78 {}", 1);
        let _ = 217;
        let v_79 = ext_3();
    }
}
pub fn func_80() {
    println!("msg_81 {}", 1);
    match 0 {
        0 => {
            let v_82 = ext_1();
            println!("msg_83 {}", 1);
            ext_3();
            let v_84 = 30 + 96;
        }
        _ => {}
    }
    println!("msg_85 {}", 1);
}
pub fn func_66() {
    println!("msg_86 {}", 1);
}
#[cfg(any(feature = "feat12", feature = "feat4", feature = "feat8"))]
pub enum Kind_87 {
    Variant_88,
    Variant_89,
    Variant_90,
    Variant_91,
}
pub fn func_92() {
    println!("msg_93 {}", 1);
    let v_94 = func_64();
    match 1 {
        0 => {
            println!("msg_95 {}", 1);
            pub fn func_49() {
                println!("msg_96 {}", 1);
                let _ = 42 + 39;
                #[cfg(feature = "feat2")]
                let v_97 = 39 + 16;
            }
            let v_98 = func_44();
            #[cfg(feature = "feat8")]
            pub fn func_99() {
                pub fn func_100() {
                    let v_101 = func_66();
                }
                let v_102 = func_53();
                let _ = 29 + 23;
            }
        }
        _ => {}
    }
    let _ = 427;
}
pub static COUNTER_103: u32 = 0;
use std::collections::HashMap;
pub fn func_104() {
    let v_105 = func_1();
}
#[cfg(feature = "feat17")]
pub fn func_106() {
    let v_107 = ext_3();
    #[cfg(feature = "feat22")]
    func_100();
    #[cfg(any(feature = "feat22", feature = "feat19"))]
    let _ = 67 + 51;
    #[cfg(not(feature = "feat14"))]
    let v_108 = 97 + 36;
}
pub fn func_109() {
    let _ = 323;
    pub fn func_110() {
        if 18 > 10 {
            let v_111 = ext_3();
        } else {
            let v_112 = 40 + 83;
            let v_113 = 73;
            if 4 > 10 {
                let w_114 = 8;
            } else {
                let v_115 = 643;
                func_74();
                let v_116 = func_80();
            }
            let v_117 = 563;
        }
        pub fn func_118() {
            let v_119 = 747;
            #[cfg(feature = "feat4")]
            let v_120 = ext_2();
        }
        let _ = 464;
    }
    let v_121 = ext_0();
    let v_122 = ext_1();
}
pub const LIMIT_123: u32 = func_53();
pub fn func_124() {
    func_32();
    if 1 > 10 {
        #[cfg(feature = "feat18")]
        func_100();
        let v_125 = func_53();
        match 4 {
            0 => {
                #[cfg(feature = "feat3")]
                pub fn func_126() {
                    let v_127 = 127;
                    let w_128 = 7;
                    let w_129 = 4;
                    let w_130 = 1;
                }
                let v_131 = ext_1();
                let _ = 697;
                #[cfg(feature = "feat8")]
                let v_132 = func_104();
            }
            _ => {}
        }
        let v_133 = ext_1();
    } else {
        func_118();
        match 4 {
            0 => {
                pub fn func_134() {
                    println!("msg_135 {}", 1);
                    let v_136 = 67 + 20;
                    let v_137 = 59 + 96;
                }
                let v_138 = func_99();
                func_100();
                #[cfg(not(feature = "feat24"))]
                let v_139 = func_44();
            }
            _ => {}
        }
        #[cfg(feature = "feat23")]
        func_64();
    }
    pub fn func_140() {
        match 1 {
            0 => {
                println!("msg_141 {}", 1);
                pub fn func_142() {
                    let _ = 996;
                    #[cfg(feature = "feat22")]
                    let v_143 = 567;
                }
                let v_144 = func_134();
            }
            _ => {}
        }
        if 11 > 10 {
            println!("msg_145 {}", 1);
            let v_146 = 63 + 10;
        } else {
            #[cfg(feature = "feat2")]
            func_104();
        }
    }
}
