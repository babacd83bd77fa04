pub fn func_96() {
    ext_1();
}
pub fn func_97() {
    println!("msg_98 {}", 1);
    pub fn func_99() {
        #[cfg(feature = "m2_5")]
        let v_100 = ext_0();
        let _ = 64 + 47;
        let _ = 83 + 67;
    }
}
pub mod inner_101 {
    use super::*;
    pub type Alias_102 = u64;
}
pub fn func_47() {
    let _ = 89 + 11;
    let v_103 = func_62();
    match 3 {
        0 => {
            pub fn func_104() {
                #[cfg(any(feature = "m2_5", feature = "m2_3", feature = "m2_2"))]
                let v_105 = 575;
                if 15 > 10 {
                    let w_106 = 2;
                    #[cfg(not(feature = "m2_1"))]
                    let v_107 = 46 + 65;
                } else {
                    let v_108 = ext_3();
                    let w_109 = 6;
                    func_35();
                    #[cfg(feature = "m2_3")]
                    let _ = 52 + 58;
                }
                let v_110 = 2 + 33;
                let v_111 = func_81();
            }
            pub fn func_112() {
                let _ = 884;
                if 19 > 10 {
                    func_58();
                    let v_113 = func_92();
                } else {
                    let v_114 = func_99();
                }
                let v_115 = 19 + 58;
                let v_116 = 93 + 58;
            }
            func_11();
            println!("msg_117 {}", 1);
        }
        _ => {}
    }
    let v_118 = func_99();
}
pub fn func_119() {
    let _ = 3 + 94;
}
#[cfg(feature = "m2_7")]
pub static COUNTER_120: u32 = 0;
pub const LIMIT_121: u32 = func_104();
use std::collections::HashMap;
#[cfg(all(feature = "m2_7", not(feature = "m2_6")))]
pub fn func_122() {
    if 6 > 10 {
        let v_123 = 160;
        if 9 > 10 {
            println!("msg_124 {}", 1);
            let v_125 = func_30();
            let v_126 = func_72();
        } else {
            let v_127 = ext_3();
            func_26();
        }
    } else {
        func_51();
        let v_128 = 37;
        pub fn func_129() {
            let v_130 = 388;
            let v_131 = 69 + 37;
            let v_132 = 50 + 0;
        }
    }
    let v_133 = ext_2();
    let v_134 = func_79();
    let v_135 = func_79();
}
#[cfg(feature = "m2_3")]
pub fn func_136() {
    let _ = 816;
    match 4 {
        0 => {
            #[cfg(feature = "m2_4")]
            func_28();
            let v_137 = func_72();
        }
        _ => {}
    }
    pub fn func_138() {
        let _ = 269;
        #[cfg(feature = "m2_5")]
        let v_139 = func_129();
        pub fn func_140() {
            let v_141 = ext_2();
            println!("msg_142 {}", 1);
            pub fn func_143() {
                #[cfg(any(feature = "m2_4", feature = "m2_8", feature = "m2_5"))]
                func_58();
                let w_144 = 2;
                #[cfg(feature = "m2_7")]
                func_104();
                let v_145 = 416;
            }
        }
        let v_146 = ext_3();
    }
    println!("msg_147 {}", 1);
}
pub fn func_148() {
    if 2 > 10 {
        let v_149 = func_143();
        println!("msg_150 {}", 1);
    } else {
        func_104();
    }
    #[cfg(any(feature = "m2_4", feature = "m2_2"))]
    let v_151 = ext_3();
}
use std::collections::HashMap;
pub mod inner_152 {
    use super::*;
    pub enum Kind_153 {
        Variant_154,
    }
    pub mod inner_155 {
        use super::*;
        pub fn func_156() {
            let _ = 30 + 97;
            println!("msg_157 {}", 1);
            match 0 {
                0 => {
                    println!("msg_158 {}", 1);
                }
                _ => {}
            }
            let v_159 = ext_1();
        }
        #[cfg(feature = "m2_7")]
        pub fn func_160() {
            match 4 {
                0 => {
                    func_122();
                }
                _ => {}
            }
            let v_161 = 471;
        }
    }
    pub type Alias_162 = u64;
}
pub fn func_163() {
    let v_164 = ext_1();
    match 0 {
        0 => {
            let v_165 = 108;
        }
        _ => {}
    }
    println!("msg_166 {}", 1);
}
pub static COUNTER_167: u32 = 0;
#[cfg(any(feature = "m2_3", feature = "m2_8"))]
pub static COUNTER_168: u32 = 0;
pub static COUNTER_169: u32 = 0;
use std::collections::HashMap;
#[cfg(feature = "m2_0")]
pub const LIMIT_170: u32 = ext_1();
pub static COUNTER_171: u32 = 0;
#[cfg(feature = "m2_8")]
pub struct Record_172 {
    pub field_173: u32,
    pub field_174: u32,
}
