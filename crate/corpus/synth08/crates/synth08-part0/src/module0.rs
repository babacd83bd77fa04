pub const LIMIT_1: u32 = 79 + 75;
pub enum Kind_2 {
    #[cfg(feature = "m0_10")]
    Variant_3,
    Variant_4,
}
pub fn func_5() {
    let _ = 969;
    #[cfg(not(feature = "m0_4"))]
    let v_6 = 7 + 37;
}
#[cfg(feature = "m0_10")]
pub const LIMIT_7: u32 = 102;
pub fn func_8() {
    let v_9 = 152;
    let v_10 = ext_2();
    let v_11 = ext_0();
    func_5();
}
pub fn func_5() {
    #[cfg(feature = "m0_10")]
    let _ = 334;
    #[cfg(not(feature = "m0_7"))]
    func_5();
    pub fn func_12() {
        let v_13 = 92 + 53;
    }
}
pub enum Kind_14 {
    Variant_15,
    Variant_16,
}
pub fn func_17() {
    let v_18 = 314;
    #[cfg(feature = "m0_10")]
    let v_19 = 258;
    let v_20 = 30 + 23;
    if 9 > 10 {
        let v_21 = 920;
        let v_22 = 35 + 11;
        pub fn func_23() {
            let v_24 = func_12();
            #[cfg(feature = "m0_10")]
            let v_25 = 10 + 5;
        }
        #[cfg(feature = "m0_10")]
        let v_26 = 19 + 7;
    } else {
        let v_27 = func_5();
        if 9 > 10 {
            if 14 > 10 {
                #[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
                let v_28 = func_8();
            } else {
                let v_29 = 251;
            }
        } else {
            func_23();
            let v_30 = 140;
            match 1 {
                0 => {
                    let v_31 = func_12();
                    let v_32 = ext_0();
                    let v_33 = func_23();
                }
                _ => {}
            }
            pub fn func_34() {
                let w_35 = 7;
            }
        }
        ext_1();
        func_34();
    }
}
pub static COUNTER_36: u32 = 0;
#[cfg(any(feature = "m0_10", feature = "m0_10"))]
pub struct Record_37 {
    pub field_38: u32,
    pub field_39: u32,
    pub field_40: u32,
    pub field_41: u32,
}
#[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
pub fn func_42() {
    let v_43 = ext_3();
    match 2 {
        0 => {
            println!("msg_44 {}", 1);
            let v_45 = 130;
            let v_46 = ext_1();
            match 3 {
                0 => {
                    let _ = 358;
                    let v_47 = func_17();
                }
                _ => {}
            }
        }
        _ => {}
    }
    let _ = 207;
    let v_48 = 48 + 77;
}
pub enum Kind_49 {
    Variant_50,
}
#[cfg(feature = "m0_10")]
pub enum Kind_51 {
    Variant_52,
}
pub static COUNTER_53: u32 = 0;
pub static COUNTER_54: u32 = 0;
pub enum Kind_55 {
    #[cfg(any(feature = "m0_10", feature = "m0_10"))]
    Variant_56,
}
pub mod inner_57 {
    use super::*;
    pub fn func_58() {
        match 3 {
            0 => {
                let v_59 = 873;
                println!("msg_60 {}", 1);
                pub fn func_61() {
                    let w_62 = 6;
                    let v_63 = func_42();
                    let v_64 = ext_1();
                    let v_65 = 184;
                }
            }
            _ => {}
        }
        let v_66 = 26 + 81;
    }
    use std::collections::HashMap;
}
pub enum Kind_67 {
    Variant_68,
    Variant_69,
}
#[cfg(feature = "m0_10")]
use std::collections::HashMap;
pub enum Kind_70 {
    Variant_71,
    Variant_72,
    #[cfg(not(feature = "m0_8"))]
    Variant_73,
}
pub fn func_74() {
    func_23();
}
pub fn func_23() {
    let v_75 = func_5();
    pub fn func_76() {
        let v_77 = 516;
        #[cfg(feature = "m0_10")]
        let v_78 = 87 + 96;
        let v_79 = 330;
    }
    pub fn func_80() {
        let v_81 = func_34();
        ext_2();
    }
    func_74();
}
pub const LIMIT_82: u32 = 72 + 63;
pub fn func_83() {
    let _ = 96 + 33;
    match 1 {
        0 => {
            println!("msg_84 {}", 1);
            ext_3();
        }
        _ => {}
    }
}
pub fn func_61() {
    let v_85 = ext_2();
}
#[cfg(feature = "m0_10")]
pub enum Kind_86 {
    Variant_87,
    Variant_88,
    Variant_89,
    Variant_90,
}
pub struct Record_91 {
    pub field_92: u32,
}
pub fn func_93() {
    func_74();
    let v_94 = func_76();
    #[cfg(feature = "m0_10")]
    func_23();
}
pub mod inner_95 {
    use super::*;
    pub enum Kind_96 {
        Variant_97,
        Variant_98,
        Variant_99,
        Variant_100,
    }
    pub mod inner_101 {
        use super::*;
        pub const LIMIT_102: u32 = 2 + 14;
    }
}
#[cfg(feature = "m0_10")]
pub fn func_61() {
    let v_103 = func_83();
    let v_104 = func_8();
    println!("msg_105 {}", 1);
    let v_106 = func_12();
}
#[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
pub fn func_107() {
    ext_0();
}
pub struct Record_108 {
    #[cfg(feature = "m0_10")]
    pub field_109: u32,
    pub field_110: u32,
    #[cfg(feature = "m0_10")]
    pub field_111: u32,
}
pub fn func_112() {
    pub fn func_113() {
        println!("msg_114 {}", 1);
    }
    if 16 > 10 {
        if 0 > 10 {
            let v_115 = ext_3();
        } else {
            match 2 {
                0 => {
                    let v_116 = func_23();
                }
                _ => {}
            }
            match 3 {
                0 => {
                    let _ = 490;
                    let w_117 = 2;
                }
                _ => {}
            }
        }
    } else {
        ext_0();
        let _ = 356;
        let v_118 = func_42();
        #[cfg(feature = "m0_10")]
        let v_119 = ext_3();
    }
    if 5 > 10 {
        let v_120 = ext_0();
        #[cfg(feature = "m0_10")]
        let v_121 = 480;
        match 3 {
            0 => {
                println!("msg_122 {}", 1);
                func_83();
                if 14 > 10 {
                    let v_123 = 93 + 0;
                    let w_124 = 6;
                    let v_125 = func_42();
                } else {
                    let v_126 = func_93();
                }
            }
            _ => {}
        }
    } else {
        println!("msg_127 {}", 1);
        let v_128 = func_61();
        let v_129 = 92 + 56;
        #[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
        pub fn func_130() {
            let _ = 90 + 8;
        }
    }
}
pub struct Handle_131;
impl Handle_131 {
    pub fn func_132() {
        #[cfg(not(feature = "m0_7"))]
        let _ = 65 + 29;
    }
    #[cfg(any(feature = "m0_10", feature = "m0_10"))]
    pub fn func_133() {
        match 3 {
            0 => {
                let v_134 = 78 + 22;
                match 2 {
                    0 => {
                        #[cfg(not(feature = "m0_4"))]
                        let v_135 = 83 + 77;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub mod inner_136 {
    use super::*;
    use std::collections::HashMap;
}
pub enum Kind_137 {
    #[cfg(feature = "m0_10")]
    Variant_138,
    Variant_139,
    #[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
    Variant_140,
}
pub struct Record_141 {
    pub field_142: u32,
    pub field_143: u32,
    #[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
    pub field_144: u32,
}
#[cfg(all(feature = "m0_10", not(feature = "m0_4")))]
pub const LIMIT_145: u32 = func_23();
pub struct Handle_146;
impl Handle_146 {
    pub fn func_23() {
        pub fn func_147() {
            if 9 > 10 {
                #[cfg(all(feature = "m0_10", not(feature = "m0_2")))]
                let _ = 818;
                let v_148 = func_83();
            } else {
                let v_149 = ext_2();
                let w_150 = 3;
                println!("msg_151 {}", 1);
                let w_152 = 3;
            }
            let _ = 13 + 55;
            pub fn func_153() {
                println!("msg_154 {}", 1);
                #[cfg(all(feature = "m0_10", not(feature = "m0_4")))]
                let v_155 = func_107();
                #[cfg(all(feature = "m0_10", not(feature = "m0_4")))]
                let v_156 = ext_1();
                func_34();
            }
            if 11 > 10 {
                func_17();
                #[cfg(not(feature = "m0_4"))]
                func_76();
            } else {
                #[cfg(feature = "m0_10")]
                let v_157 = 36 + 19;
            }
        }
        pub fn func_158() {
            let v_159 = 65 + 62;
            println!("msg_160 {}", 1);
            #[cfg(feature = "m0_10")]
            let v_161 = 405;
            if 1 > 10 {
                func_5();
                println!("msg_162 {}", 1);
                func_112();
            } else {
                let v_163 = 70 + 62;
                #[cfg(feature = "m0_10")]
                let v_164 = func_61();
                ext_3();
            }
        }
        pub fn func_165() {
            func_107();
            let _ = 17 + 37;
        }
    }
}
pub struct Record_166 {
    pub field_167: u32,
    pub field_168: u32,
    pub field_169: u32,
}
pub fn func_170() {
    if 10 > 10 {
        pub fn func_171() {
            let v_172 = 651;
            match 0 {
                0 => {
                    let v_173 = func_8();
                    #[cfg(all(feature = "m0_10", not(feature = "m0_4")))]
                    let v_174 = func_61();
                }
                _ => {}
            }
            let v_175 = 778;
            match 3 {
                0 => {
                    let w_176 = 2;
                    let w_177 = 5;
                    #[cfg(feature = "m0_10")]
                    let v_178 = func_12();
                }
                _ => {}
            }
        }
        let v_179 = ext_3();
        match 1 {
            0 => {
                let v_180 = func_74();
                #[cfg(feature = "m0_10")]
                let v_181 = ext_1();
                let v_182 = 461;
                #[cfg(any(feature = "m0_10", feature = "m0_10"))]
                let v_183 = func_23();
            }
            _ => {}
        }
        println!("msg_184 {}", 1);
    } else {
        #[cfg(any(feature = "m0_10", feature = "m0_10"))]
        pub fn func_185() {
            let v_186 = func_113();
            pub fn func_187() {
                func_158();
                let v_188 = 780;
                #[cfg(not(feature = "m0_7"))]
                let v_189 = func_132();
                let _ = 814;
            }
        }
    }
    pub fn func_190() {
        let v_191 = 901;
    }
}
