#[cfg(feature = "m2_1")]
pub fn func_1() {
    if 9 > 10 {
        let v_2 = 678;
        let v_3 = ext_1();
    } else {
        if 18 > 10 {
            #[cfg(feature = "m2_5")]
            let _ = 20 + 73;
            println!("msg_4 {}", 1);
            match 3 {
                0 => {
                    let w_5 = 5;
                }
                _ => {}
            }
            pub fn func_6() {
                let v_7 = 216;
                let w_8 = 7;
                let w_9 = 0;
                let w_10 = 7;
            }
        } else {
            let v_11 = func_6();
            ext_3();
            pub fn func_12() {
                #[cfg(all(feature = "m2_5", not(feature = "m2_2")))]
                let v_13 = func_6();
                let _ = 188;
                func_6();
            }
            let v_14 = 25 + 24;
        }
        if 5 > 10 {
            if 16 > 10 {
                let w_15 = 1;
            } else {
                println!("msg_16 {}", 1);
                let _ = 30 + 83;
                let v_17 = 861;
            }
        } else {
            let v_18 = func_6();
        }
    }
}
pub fn func_19() {
    match 1 {
        0 => {
            let _ = 74 + 13;
            pub fn func_20() {
                let v_21 = 825;
                let v_22 = func_12();
                let v_23 = 2;
            }
            match 1 {
                0 => {
                    if 17 > 10 {
                        let w_24 = 0;
                        let w_25 = 8;
                        let v_26 = 169;
                    } else {
                        func_6();
                        let w_27 = 3;
                        #[cfg(not(feature = "m2_2"))]
                        let _ = 42 + 99;
                    }
                    let v_28 = ext_3();
                    let v_29 = func_6();
                    func_12();
                }
                _ => {}
            }
        }
        _ => {}
    }
    pub fn func_30() {
        let v_31 = 1 + 90;
    }
    ext_1();
}
#[cfg(not(feature = "m2_3"))]
pub type Alias_32 = u64;
pub enum Kind_33 {
    Variant_34,
    #[cfg(feature = "m2_4")]
    Variant_35,
}
pub mod inner_36 {
    use super::*;
    pub fn func_37() {
        #[cfg(all(feature = "m2_4", not(feature = "m2_6")))]
        pub fn func_38() {
            func_19();
            pub fn func_39() {
                let _ = 9 + 95;
                ext_2();
            }
            pub fn func_20() {
                let v_40 = func_6();
                println!("msg_41 {}", 1);
                #[cfg(not(feature = "m2_6"))]
                let v_42 = func_39();
            }
            let v_43 = func_12();
        }
    }
    pub struct Handle_44;
    impl Handle_44 {
        pub fn func_45() {
            #[cfg(feature = "m2_4")]
            let v_46 = func_12();
            println!("msg_47 {}", 1);
            let _ = 4 + 94;
            let v_48 = ext_2();
        }
    }
    pub mod inner_49 {
        use super::*;
        #[cfg(feature = "m2_1")]
        pub enum Kind_50 {
            Variant_51,
        }
    }
}
#[cfg(feature = "m2_5")]
pub const LIMIT_52: u32 = ext_3();
#[cfg(feature = "m2_1")]
pub struct Record_53 {
    pub field_54: u32,
    pub field_55: u32,
    #[cfg(feature = "m2_4")]
    pub field_56: u32,
    pub field_57: u32,
}
pub fn func_58() {
    if 6 > 10 {
        println!("msg_59 {}", 1);
    } else {
        if 6 > 10 {
            if 8 > 10 {
                println!("msg_60 {}", 1);
            } else {
                let v_61 = 837;
                let v_62 = 53 + 83;
                let _ = 40;
                let v_63 = 21 + 23;
            }
            let v_64 = func_1();
            if 9 > 10 {
                let w_65 = 0;
            } else {
                let w_66 = 1;
                #[cfg(all(feature = "m2_1", not(feature = "m2_2")))]
                let v_67 = 767;
                let v_68 = func_12();
            }
            let v_69 = 78 + 63;
        } else {
            #[cfg(not(feature = "m2_6"))]
            let _ = 682;
            match 3 {
                0 => {
                    println!("msg_70 {}", 1);
                    let w_71 = 4;
                    let w_72 = 2;
                }
                _ => {}
            }
        }
        match 1 {
            0 => {
                let v_73 = ext_0();
                let v_74 = func_1();
                let v_75 = func_39();
            }
            _ => {}
        }
    }
}
pub fn func_76() {
    if 18 > 10 {
        let v_77 = ext_3();
        let v_78 = 538;
        match 4 {
            0 => {
                #[cfg(not(feature = "m2_2"))]
                let v_79 = ext_0();
                func_37();
                match 4 {
                    0 => {
                        let v_80 = 686;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        match 1 {
            0 => {
                if 18 > 10 {
                    let v_81 = ext_0();
                    #[cfg(feature = "m2_0")]
                    ext_1();
                } else {
                    let w_82 = 1;
                }
                if 5 > 10 {
                    func_6();
                    println!("msg_83 {}", 1);
                } else {
                    let v_84 = func_1();
                    let w_85 = 0;
                    let v_86 = 609;
                }
                let v_87 = func_30();
            }
            _ => {}
        }
    } else {
        let v_88 = 86 + 42;
        ext_0();
        ext_3();
    }
}
#[cfg(feature = "m2_4")]
pub type Alias_89 = u64;
pub mod inner_90 {
    use super::*;
    pub const LIMIT_91: u32 = 65 + 58;
    pub fn func_92() {
        println!("msg_93 {}", 1);
        let _ = 949;
        match 3 {
            0 => {
                let v_94 = 582;
            }
            _ => {}
        }
    }
    pub struct Record_95 {
        pub field_96: u32,
        pub field_97: u32,
        pub field_98: u32,
        pub field_99: u32,
    }
}
pub struct Record_100 {
    pub field_101: u32,
    pub field_102: u32,
}
pub static COUNTER_103: u32 = 0;
pub type Alias_104 = u64;
pub fn func_105() {
    pub fn func_106() {
        let _ = 181;
    }
}
pub struct Handle_107;
impl Handle_107 {
    pub fn func_108() {
        #[cfg(feature = "m2_1")]
        let v_109 = func_39();
        match 0 {
            0 => {
                match 0 {
                    0 => {
                        let v_110 = 430;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub struct Handle_111;
impl Handle_111 {
    pub fn func_112() {
        match 1 {
            0 => {
                match 1 {
                    0 => {
                        let w_113 = 7;
                    }
                    _ => {}
                }
                #[cfg(feature = "m2_4")]
                let v_114 = ext_1();
            }
            _ => {}
        }
        let v_115 = 302;
        println!("msg_116 {}", 1);
        ext_2();
    }
}
#[cfg(not(feature = "m2_2"))]
pub fn func_117() {
    let v_118 = ext_1();
    println!("msg_119 {}", 1);
}
pub fn func_120() {
    pub fn func_121() {
        if 10 > 10 {
            func_12();
        } else {
            if 12 > 10 {
                #[cfg(any(feature = "m2_1", feature = "m2_5"))]
                let v_122 = 27 + 21;
                let _ = 93 + 91;
                let _ = 84 + 24;
                let v_123 = 282;
            } else {
                let w_124 = 8;
                let v_125 = ext_3();
                let v_126 = func_105();
            }
        }
        #[cfg(feature = "m2_4")]
        let v_127 = 311;
        match 1 {
            0 => {
                if 1 > 10 {
                    let w_128 = 2;
                } else {
                    let v_129 = 26 + 35;
                    func_6();
                }
                ext_0();
            }
            _ => {}
        }
    }
    let _ = 36 + 66;
}
