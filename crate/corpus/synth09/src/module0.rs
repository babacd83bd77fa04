#[cfg(any(feature = "feat8", feature = "feat13"))]
use std::collections::HashMap;
pub fn func_1() {
    let _ = 19;
    let v_2 = 830;
    println!("msg_3 {}", 1);
    let _ = 48 + 18;
}
#[cfg(feature = "feat6")]
pub static COUNTER_4: u32 = 0;
pub enum Kind_5 {
    Variant_6,
}
pub struct Record_7 {
    pub field_8: u32,
    pub field_9: u32,
    pub field_10: u32,
}
pub enum Kind_11 {
    Variant_12,
    Variant_13,
    Variant_14,
}
pub struct Record_15 {
    pub field_16: u32,
    #[cfg(not(feature = "feat17"))]
    pub field_17: u32,
    pub field_18: u32,
    pub field_19: u32,
}
use std::collections::HashMap;
pub fn func_20() {
    pub fn func_21() {
        func_1();
    }
}
use std::collections::HashMap;
pub fn func_22() {
    let v_23 = func_20();
    let v_24 = func_21();
}
pub fn func_21() {
    #[cfg(feature = "feat3")]
    let v_25 = 378;
    let v_26 = func_20();
}
pub mod inner_27 {
    use super::*;
    pub enum Kind_28 {
        Variant_29,
    }
    pub struct Record_30 {
        #[cfg(feature = "feat3")]
        pub field_31: u32,
        pub field_32: u32,
    }
}
#[cfg(any(feature = "feat28", feature = "feat1"))]
pub fn func_33() {
    let v_34 = func_22();
    let v_35 = ext_1();
    let _ = 291;
}
pub enum Kind_36 {
    Variant_37,
    #[cfg(feature = "feat13")]
    Variant_38,
    Variant_39,
    Variant_40,
}
pub fn func_41() {
    let _ = 241;
    func_22();
    let v_42 = func_1();
    if 11 > 10 {
        let v_43 = 82 + 90;
        let v_44 = 166;
        func_22();
    } else {
        match 4 {
            0 => {
                let v_45 = 254;
                if 8 > 10 {
                    let w_46 = 1;
                    let v_47 = func_1();
                    let _ = 711;
                } else {
                    func_21();
                    let v_48 = 91 + 53;
                    #[cfg(all(feature = "feat16", not(feature = "feat23")))]
                    let v_49 = 820;
                    let w_50 = 7;
                }
                ext_3();
                pub fn func_51() {
                    let w_52 = 1;
                    let w_53 = 2;
                    let v_54 = 233;
                    let v_55 = 163;
                }
            }
            _ => {}
        }
        pub fn func_56() {
            let v_57 = func_20();
            if 4 > 10 {
                let w_58 = 0;
                let w_59 = 0;
            } else {
                #[cfg(any(feature = "feat28", feature = "feat19"))]
                let v_60 = ext_3();
                let _ = 228;
                func_21();
                let w_61 = 6;
            }
            pub fn func_62() {
                let w_63 = 1;
                #[cfg(all(feature = "feat20", not(feature = "feat23")))]
                let v_64 = func_22();
            }
            let v_65 = 891;
        }
    }
}
pub fn func_66() {
    let v_67 = func_21();
    let v_68 = 173;
    pub fn func_69() {
        let v_70 = 96 + 66;
        let v_71 = 587;
        let v_72 = func_20();
    }
}
#[cfg(feature = "feat19")]
pub const LIMIT_73: u32 = 943;
use std::collections::HashMap;
#[cfg(feature = "feat1")]
use std::collections::HashMap;
pub type Alias_74 = u64;
pub mod inner_75 {
    use super::*;
    #[cfg(any(feature = "feat29", feature = "feat3"))]
    pub type Alias_76 = u64;
    pub const LIMIT_77: u32 = ext_0();
}
#[cfg(feature = "feat20")]
pub fn func_78() {
    let v_79 = 91 + 23;
}
use std::collections::HashMap;
pub enum Kind_80 {
    Variant_81,
}
pub fn func_82() {
    let v_83 = func_66();
    println!("msg_84 {}", 1);
}
pub static COUNTER_85: u32 = 0;
pub fn func_86() {
    if 7 > 10 {
        match 0 {
            0 => {
                func_21();
                let v_87 = func_66();
            }
            _ => {}
        }
        match 0 {
            0 => {
                if 17 > 10 {
                    let v_88 = 93 + 3;
                    let w_89 = 3;
                    let w_90 = 4;
                } else {
                    println!("msg_91 {}", 1);
                    #[cfg(feature = "feat4")]
                    let _ = 103;
                    let v_92 = 240;
                }
            }
            _ => {}
        }
        let v_93 = 84 + 82;
    } else {
        let _ = 539;
        func_82();
    }
    match 1 {
        0 => {
            let v_94 = 28 + 33;
            let v_95 = func_41();
            func_1();
            let _ = 37 + 53;
        }
        _ => {}
    }
    #[cfg(not(feature = "feat10"))]
    let _ = 994;
    let v_96 = func_21();
}
pub struct Handle_97;
impl Handle_97 {
    pub fn func_98() {
        let v_99 = ext_1();
        let v_100 = 5 + 19;
    }
    pub fn func_101() {
        pub fn func_102() {
            match 0 {
                0 => {
                    func_41();
                    #[cfg(feature = "feat6")]
                    let v_103 = func_51();
                    func_51();
                }
                _ => {}
            }
            let _ = 24;
            if 17 > 10 {
                println!("msg_104 {}", 1);
                let w_105 = 8;
                let v_106 = ext_1();
                #[cfg(feature = "feat11")]
                let v_107 = func_1();
            } else {
                let w_108 = 6;
                let w_109 = 2;
            }
            let v_110 = 82 + 31;
        }
        println!("msg_111 {}", 1);
        #[cfg(any(feature = "feat8", feature = "feat3", feature = "feat22"))]
        let v_112 = 7 + 39;
        let v_113 = func_51();
    }
}
pub fn func_114() {
    let v_115 = ext_3();
}
pub fn func_116() {
    #[cfg(all(feature = "feat3", not(feature = "feat12")))]
    let v_117 = 219;
    let v_118 = 512;
}
pub static COUNTER_119: u32 = 0;
use std::collections::HashMap;
pub mod inner_120 {
    use super::*;
    pub struct Handle_121;
    impl Handle_121 {
        pub fn func_122() {
            let v_123 = func_41();
        }
        #[cfg(feature = "feat14")]
        pub fn func_124() {
            func_82();
        }
    }
    pub static COUNTER_125: u32 = 0;
    pub type Alias_126 = u64;
}
pub const LIMIT_127: u32 = 16 + 9;
pub type Alias_128 = u64;
pub fn func_129() {
    if 3 > 10 {
        println!("msg_130 {}", 1);
        let v_131 = func_20();
        match 4 {
            0 => {
                if 1 > 10 {
                    let w_132 = 0;
                    #[cfg(feature = "feat3")]
                    let v_133 = 94 + 43;
                } else {
                    func_51();
                    let v_134 = ext_0();
                    let v_135 = func_69();
                }
            }
            _ => {}
        }
    } else {
        println!("msg_136 {}", 1);
        let v_137 = func_22();
        let v_138 = 172;
    }
}
pub mod inner_139 {
    use super::*;
    pub type Alias_140 = u64;
    pub static COUNTER_141: u32 = 0;
}
#[cfg(feature = "feat19")]
pub type Alias_142 = u64;
pub fn func_143() {
    println!("msg_144 {}", 1);
}
use std::collections::HashMap;
pub fn func_145() {
    #[cfg(not(feature = "feat0"))]
    let _ = 572;
    func_69();
    let v_146 = 13 + 23;
    #[cfg(feature = "feat28")]
    let v_147 = func_51();
}
use std::collections::HashMap;
#[cfg(all(feature = "feat29", not(feature = "feat26")))]
pub mod inner_148 {
    use super::*;
    pub struct Record_149 {
        pub field_150: u32,
        pub field_151: u32,
        pub field_152: u32,
    }
}
use std::collections::HashMap;
pub struct Record_153 {
    pub field_154: u32,
    pub field_155: u32,
}
pub fn func_156() {
    ext_3();
    #[cfg(any(feature = "feat27", feature = "feat9", feature = "feat29"))]
    let v_157 = 44 + 13;
    let v_158 = ext_1();
}
pub struct Handle_159;
impl Handle_159 {
    pub fn func_160() {
        let v_161 = 125;
        if 4 > 10 {
            if 6 > 10 {
                let v_162 = 207;
                let v_163 = 981;
                let v_164 = func_156();
                #[cfg(feature = "feat19")]
                let v_165 = func_86();
            } else {
                let w_166 = 6;
                let v_167 = 77 + 39;
                let w_168 = 1;
            }
            if 13 > 10 {
                let v_169 = 34 + 62;
                #[cfg(not(feature = "feat21"))]
                let v_170 = ext_2();
            } else {
                let w_171 = 7;
                let w_172 = 7;
                func_82();
            }
            let v_173 = 90 + 76;
            println!("msg_174 {}", 1);
        } else {
            println!("msg_175 {}", 1);
            let v_176 = 87 + 88;
        }
    }
    pub fn func_177() {
        match 0 {
            0 => {
                if 9 > 10 {
                    let w_178 = 5;
                } else {
                    let w_179 = 4;
                    let v_180 = ext_2();
                }
                #[cfg(feature = "feat19")]
                let v_181 = func_124();
                match 1 {
                    0 => {
                        println!("msg_182 {}", 1);
                        let w_183 = 1;
                        let w_184 = 1;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        println!("msg_185 {}", 1);
        println!("msg_186 {}", 1);
    }
}
pub type Alias_187 = u64;
pub static COUNTER_188: u32 = 0;
#[cfg(feature = "feat24")]
pub enum Kind_189 {
    Variant_190,
    #[cfg(any(feature = "feat29", feature = "feat29"))]
    Variant_191,
    Variant_192,
}
pub fn func_193() {
    let _ = 87;
}
