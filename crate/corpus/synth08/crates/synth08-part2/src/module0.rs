pub enum Kind_1 {
    Variant_2,
    #[cfg(feature = "m2_7")]
    Variant_3,
}
pub fn func_4() {
    let v_5 = 14 + 96;
}
pub fn func_6() {
    let v_7 = func_4();
    func_4();
    func_4();
}
pub mod inner_8 {
    use super::*;
    pub mod inner_9 {
        use super::*;
        pub fn func_10() {
            let _ = 824;
            let v_11 = 97 + 77;
            #[cfg(all(feature = "m2_6", not(feature = "m2_8")))]
            ext_3();
            pub fn func_12() {
                #[cfg(not(feature = "m2_8"))]
                let v_13 = 74 + 2;
                let w_14 = 2;
            }
        }
        pub fn func_15() {
            func_10();
        }
        pub fn func_16() {
            println!("msg_17 {}", 1);
            let v_18 = 325;
        }
    }
    #[cfg(feature = "m2_9")]
    pub mod inner_19 {
        use super::*;
        pub struct Handle_20;
        #[cfg(not(feature = "m2_10"))]
        impl Handle_20 {
            pub fn func_21() {
                let v_22 = func_4();
                println!("msg_23 {}", 1);
            }
        }
        pub struct Record_24 {
            pub field_25: u32,
            pub field_26: u32,
            pub field_27: u32,
        }
    }
}
pub fn func_28() {
    let v_29 = ext_2();
    let v_30 = ext_1();
}
pub type Alias_31 = u64;
pub struct Handle_32;
#[cfg(feature = "m2_7")]
impl Handle_32 {
    pub fn func_33() {
        let v_34 = 42 + 3;
    }
    #[cfg(feature = "m2_9")]
    pub fn func_35() {
        pub fn func_36() {
            let v_37 = 607;
            func_4();
            let _ = 971;
            func_33();
        }
    }
}
use std::collections::HashMap;
#[cfg(any(feature = "m2_6", feature = "m2_6", feature = "m2_5"))]
pub const LIMIT_38: u32 = ext_1();
pub struct Handle_39;
impl Handle_39 {
    pub fn func_40() {
        println!("msg_41 {}", 1);
    }
}
use std::collections::HashMap;
pub fn func_42() {
    pub fn func_43() {
        let v_44 = func_12();
        ext_2();
        println!("msg_45 {}", 1);
        match 2 {
            0 => {
                let v_46 = 30 + 81;
                println!("msg_47 {}", 1);
                pub fn func_48() {
                    let w_49 = 1;
                    let v_50 = func_21();
                }
                let v_51 = 66;
            }
            _ => {}
        }
    }
    func_12();
}
pub fn func_52() {
    match 1 {
        0 => {
            #[cfg(any(feature = "m2_5", feature = "m2_5", feature = "m2_6"))]
            let v_53 = 795;
            match 1 {
                0 => {
                    pub fn func_10() {
                        println!("msg_54 {}", 1);
                    }
                    let _ = 28 + 63;
                    if 15 > 10 {
                        #[cfg(feature = "m2_9")]
                        let v_55 = 703;
                        let _ = 30 + 24;
                        let v_56 = 97 + 2;
                    } else {
                        let v_57 = func_33();
                    }
                    match 4 {
                        0 => {
                            let w_58 = 2;
                            #[cfg(feature = "m2_7")]
                            let v_59 = func_35();
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            match 1 {
                0 => {
                    if 9 > 10 {
                        let w_60 = 4;
                        let w_61 = 7;
                    } else {
                        let v_62 = 69 + 44;
                        func_35();
                        let v_63 = ext_1();
                        ext_2();
                    }
                    func_6();
                    ext_2();
                }
                _ => {}
            }
            println!("msg_64 {}", 1);
        }
        _ => {}
    }
    let _ = 92 + 37;
    let v_65 = func_12();
}
pub fn func_66() {
    if 3 > 10 {
        func_15();
        #[cfg(feature = "m2_6")]
        let v_67 = func_36();
        match 1 {
            0 => {
                println!("msg_68 {}", 1);
                let v_69 = func_15();
            }
            _ => {}
        }
        #[cfg(feature = "m2_7")]
        let v_70 = 83 + 26;
    } else {
        let v_71 = 41 + 15;
        let v_72 = ext_1();
    }
    println!("msg_73 {}", 1);
    func_43();
    match 1 {
        0 => {
            println!("msg_74 {}", 1);
        }
        _ => {}
    }
}
pub fn func_75() {
    let v_76 = 943;
}
pub struct Handle_77;
impl Handle_77 {
    pub fn func_78() {
        #[cfg(feature = "m2_7")]
        let v_79 = ext_0();
        #[cfg(feature = "m2_9")]
        let v_80 = func_42();
        let v_81 = func_43();
        let v_82 = 48 + 53;
    }
    pub fn func_83() {
        let v_84 = 6 + 83;
    }
}
pub fn func_33() {
    let v_85 = func_43();
}
pub type Alias_86 = u64;
pub fn func_87() {
    let v_88 = 99 + 63;
    let v_89 = 418;
    pub fn func_90() {
        pub fn func_91() {
            match 1 {
                0 => {
                    let v_92 = func_42();
                }
                _ => {}
            }
        }
        func_33();
        let v_93 = func_36();
    }
}
#[cfg(feature = "m2_5")]
pub fn func_94() {
    #[cfg(feature = "m2_6")]
    func_91();
    println!("msg_95 {}", 1);
    pub fn func_96() {
        if 13 > 10 {
            ext_1();
            let v_97 = ext_3();
            println!("msg_98 {}", 1);
            let v_99 = func_16();
        } else {
            pub fn func_100() {
                let v_101 = 55 + 16;
                let w_102 = 7;
                let v_103 = ext_2();
            }
            #[cfg(feature = "m2_9")]
            pub fn func_104() {
                let _ = 972;
                let w_105 = 0;
            }
            ext_0();
        }
        let v_106 = ext_0();
    }
}
pub fn func_107() {
    #[cfg(not(feature = "m2_2"))]
    let v_108 = func_66();
    #[cfg(feature = "m2_6")]
    pub fn func_109() {
        println!("msg_110 {}", 1);
        pub fn func_111() {
            let v_112 = func_16();
        }
        let v_113 = func_12();
    }
    let v_114 = ext_3();
}
#[cfg(feature = "m2_6")]
pub const LIMIT_115: u32 = ext_2();
pub struct Record_116 {
    pub field_117: u32,
    pub field_118: u32,
}
#[cfg(feature = "m2_9")]
pub fn func_119() {
    println!("msg_120 {}", 1);
}
use std::collections::HashMap;
pub enum Kind_121 {
    Variant_122,
    #[cfg(feature = "m2_7")]
    Variant_123,
}
pub static COUNTER_124: u32 = 0;
pub fn func_125() {
    let v_126 = func_66();
    #[cfg(feature = "m2_5")]
    let v_127 = 266;
}
pub fn func_128() {
    pub fn func_129() {
        let v_130 = 48 + 13;
        let v_131 = 117;
    }
    #[cfg(not(feature = "m2_2"))]
    let v_132 = 478;
}
pub enum Kind_133 {
    Variant_134,
    Variant_135,
    Variant_136,
    #[cfg(any(feature = "m2_9", feature = "m2_5"))]
    Variant_137,
}
pub fn func_138() {
    let v_139 = 45 + 10;
    ext_0();
}
pub mod inner_140 {
    use super::*;
    use std::collections::HashMap;
}
pub const LIMIT_141: u32 = ext_2();
pub fn func_94() {
    let v_142 = func_28();
    match 2 {
        0 => {
            #[cfg(feature = "m2_6")]
            ext_2();
            if 9 > 10 {
                #[cfg(not(feature = "m2_10"))]
                ext_0();
                let v_143 = 188;
                if 14 > 10 {
                    #[cfg(feature = "m2_9")]
                    let v_144 = func_125();
                    ext_0();
                } else {
                    let v_145 = 79 + 41;
                    let w_146 = 0;
                    let w_147 = 4;
                    func_90();
                }
            } else {
                println!("msg_148 {}", 1);
                println!("msg_149 {}", 1);
            }
            let v_150 = 176;
            #[cfg(not(feature = "m2_10"))]
            pub fn func_151() {
                if 8 > 10 {
                    let v_152 = ext_3();
                    func_33();
                    let v_153 = 16 + 28;
                    let _ = 347;
                } else {
                    func_36();
                }
                func_100();
                if 17 > 10 {
                    let v_154 = 783;
                    let v_155 = func_66();
                    println!("msg_156 {}", 1);
                    ext_3();
                } else {
                    let v_157 = func_43();
                    println!("msg_158 {}", 1);
                    let v_159 = 469;
                    let w_160 = 4;
                }
                let v_161 = 428;
            }
        }
        _ => {}
    }
}
#[cfg(not(feature = "m2_8"))]
pub fn func_162() {
    func_111();
    let v_163 = ext_1();
}
pub fn func_164() {
    let v_165 = 52 + 11;
    pub fn func_166() {
        #[cfg(all(feature = "m2_9", not(feature = "m2_10")))]
        let _ = 55 + 88;
        match 0 {
            0 => {
                pub fn func_167() {
                    let w_168 = 1;
                    let w_169 = 0;
                }
                match 2 {
                    0 => {
                        let w_170 = 0;
                        let w_171 = 5;
                        let w_172 = 8;
                    }
                    _ => {}
                }
                let _ = 80 + 56;
            }
            _ => {}
        }
        let v_173 = 168;
    }
    #[cfg(feature = "m2_5")]
    func_52();
    println!("msg_174 {}", 1);
}
