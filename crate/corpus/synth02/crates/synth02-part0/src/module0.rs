pub fn func_1() {
    #[cfg(feature = "m0_0")]
    let v_2 = 825;
    #[cfg(all(feature = "m0_0", not(feature = "m0_2")))]
    let v_3 = 162;
    match 1 {
        0 => {
            let v_4 = 901;
            let v_5 = 539;
            #[cfg(feature = "m0_3")]
            let v_6 = 884;
            println!("msg_7 {}", 1);
        }
        _ => {}
    }
}
pub fn func_8() {
    let _ = 50 + 92;
    let v_9 = func_1();
    println!("msg_10 {}", 1);
}
use std::collections::HashMap;
pub fn func_11() {
    println!("msg_12 {}", 1);
}
#[cfg(not(feature = "m0_2"))]
pub fn func_8() {
    let v_13 = 613;
    let v_14 = func_11();
    func_1();
}
pub fn func_11() {
    #[cfg(any(feature = "m0_6", feature = "m0_5", feature = "m0_4"))]
    let v_15 = ext_3();
    #[cfg(feature = "m0_1")]
    pub fn func_8() {
        #[cfg(feature = "m0_6")]
        let v_16 = func_11();
        ext_2();
        let v_17 = func_8();
    }
}
pub type Alias_18 = u64;
pub fn func_19() {
    if 0 > 10 {
        let v_20 = func_8();
        let v_21 = 25 + 45;
        pub fn func_22() {
            let v_23 = ext_1();
            pub fn func_24() {
                let w_25 = 5;
            }
        }
    } else {
        let v_26 = func_1();
        #[cfg(not(feature = "m0_2"))]
        let v_27 = func_11();
    }
}
pub static COUNTER_28: u32 = 0;
pub mod inner_29 {
    use super::*;
    #[cfg(feature = "m0_3")]
    pub fn func_30() {
        pub fn func_1() {
            pub fn func_31() {
                let v_32 = 97 + 77;
                let v_33 = func_8();
                let v_34 = 144;
                let w_35 = 8;
            }
        }
    }
}
pub fn func_36() {
    let v_37 = func_30();
    if 14 > 10 {
        match 3 {
            0 => {
                match 3 {
                    0 => {
                        println!("msg_38 {}", 1);
                        let w_39 = 8;
                    }
                    _ => {}
                }
                let v_40 = 7;
                let v_41 = ext_1();
                if 9 > 10 {
                    #[cfg(feature = "m0_4")]
                    let v_42 = 99 + 61;
                    let w_43 = 2;
                } else {
                    let w_44 = 7;
                    let w_45 = 3;
                }
            }
            _ => {}
        }
        if 17 > 10 {
            #[cfg(feature = "m0_0")]
            let v_46 = 54 + 11;
            let v_47 = func_31();
            let v_48 = 915;
            #[cfg(feature = "m0_6")]
            let v_49 = 51 + 24;
        } else {
            let v_50 = 141;
        }
        pub fn func_51() {
            let v_52 = 37 + 1;
            println!("msg_53 {}", 1);
            match 3 {
                0 => {
                    let _ = 85 + 83;
                    let v_54 = ext_3();
                    let v_55 = ext_2();
                    println!("msg_56 {}", 1);
                }
                _ => {}
            }
            let v_57 = 28 + 15;
        }
        match 4 {
            0 => {
                let v_58 = 754;
            }
            _ => {}
        }
    } else {
        let v_59 = func_11();
        let v_60 = 78 + 66;
    }
    pub fn func_61() {
        ext_3();
        match 2 {
            0 => {
                let v_62 = ext_0();
                println!("msg_63 {}", 1);
                func_1();
                #[cfg(feature = "m0_4")]
                let v_64 = ext_2();
            }
            _ => {}
        }
    }
    func_11();
}
pub fn func_65() {
    if 14 > 10 {
        println!("msg_66 {}", 1);
        let v_67 = func_31();
        let v_68 = 378;
    } else {
        if 19 > 10 {
            println!("msg_69 {}", 1);
            if 12 > 10 {
                let v_70 = func_11();
                let w_71 = 1;
                let w_72 = 0;
            } else {
                #[cfg(all(feature = "m0_0", not(feature = "m0_2")))]
                let v_73 = 22 + 53;
                let w_74 = 6;
                let v_75 = ext_3();
            }
            pub fn func_51() {
                let v_76 = ext_2();
                let v_77 = 35;
                let w_78 = 1;
            }
        } else {
            let _ = 13 + 46;
            func_22();
            println!("msg_79 {}", 1);
            match 0 {
                0 => {
                    #[cfg(feature = "m0_1")]
                    let v_80 = func_1();
                    #[cfg(any(feature = "m0_6", feature = "m0_4"))]
                    func_51();
                }
                _ => {}
            }
        }
        match 3 {
            0 => {
                println!("msg_81 {}", 1);
                match 0 {
                    0 => {
                        func_1();
                        println!("msg_82 {}", 1);
                    }
                    _ => {}
                }
                ext_3();
                let v_83 = func_31();
            }
            _ => {}
        }
        let v_84 = func_24();
    }
    match 4 {
        0 => {
            let v_85 = 676;
        }
        _ => {}
    }
}
#[cfg(all(feature = "m0_3", not(feature = "m0_2")))]
pub fn func_86() {
    let v_87 = 50 + 95;
    let v_88 = ext_1();
}
pub struct Record_89 {
    pub field_90: u32,
    pub field_91: u32,
    pub field_92: u32,
    #[cfg(not(feature = "m0_2"))]
    pub field_93: u32,
}
pub fn func_11() {
    ext_2();
}
pub struct Handle_94;
impl Handle_94 {
    #[cfg(all(feature = "m0_1", not(feature = "m0_2")))]
    pub fn func_95() {
        let v_96 = 32 + 38;
    }
}
pub enum Kind_97 {
    Variant_98,
}
pub fn func_11() {
    #[cfg(feature = "m0_1")]
    ext_2();
    func_51();
}
pub type Alias_99 = u64;
pub fn func_100() {
    println!("msg_101 {}", 1);
    let v_102 = 539;
    let _ = 21 + 58;
}
pub type Alias_103 = u64;
pub mod inner_104 {
    use super::*;
    pub fn func_105() {
        ext_3();
    }
    pub static COUNTER_106: u32 = 0;
    pub fn func_107() {
        let v_108 = func_31();
        match 4 {
            0 => {
                let v_109 = ext_1();
            }
            _ => {}
        }
    }
}
pub struct Record_110 {
    pub field_111: u32,
    pub field_112: u32,
}
pub fn func_113() {
    let _ = 29 + 35;
}
use std::collections::HashMap;
pub fn func_114() {
    println!("msg_115 {}", 1);
    let _ = 524;
    pub fn func_116() {
        let v_117 = 610;
        func_31();
        let v_118 = 20 + 12;
    }
}
pub struct Record_119 {
    pub field_120: u32,
}
pub fn func_121() {
    let v_122 = 78 + 89;
    #[cfg(feature = "m0_4")]
    let _ = 253;
    let v_123 = 83 + 18;
}
pub mod inner_124 {
    use super::*;
    pub struct Handle_125;
    impl Handle_125 {
        pub fn func_126() {
            match 1 {
                0 => {
                    let w_127 = 4;
                    let v_128 = 64 + 70;
                    let v_129 = func_65();
                    let v_130 = 875;
                }
                _ => {}
            }
            #[cfg(feature = "m0_5")]
            let _ = 13 + 51;
            let v_131 = func_36();
        }
        pub fn func_132() {
            match 4 {
                0 => {
                    #[cfg(any(feature = "m0_4", feature = "m0_0"))]
                    func_65();
                }
                _ => {}
            }
            let v_133 = func_30();
        }
    }
    pub fn func_134() {
        func_61();
        let v_135 = func_100();
        #[cfg(feature = "m0_0")]
        func_30();
        func_126();
    }
}
