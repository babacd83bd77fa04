pub type Alias_1 = u64;
pub struct Handle_2;
impl Handle_2 {
    #[cfg(feature = "feat17")]
    pub fn func_3() {
        match 0 {
            0 => {
                let _ = 5 + 39;
                let _ = 384;
                let v_4 = 520;
            }
            _ => {}
        }
        let v_5 = 253;
        println!("msg_6 {}", 1);
    }
}
pub static COUNTER_7: u32 = 0;
pub mod inner_8 {
    use super::*;
    #[cfg(feature = "feat18")]
    pub enum Kind_9 {
        Variant_10,
        Variant_11,
        Variant_12,
        Variant_13,
    }
}
#[cfg(all(feature = "feat18", not(feature = "feat5")))]
pub enum Kind_14 {
    Variant_15,
}
pub static COUNTER_16: u32 = 0;
pub fn func_17() {
    if 5 > 10 {
        let v_18 = func_3();
        #[cfg(not(feature = "feat15"))]
        func_3();
    } else {
        func_3();
        match 0 {
            0 => {
                let v_19 = func_3();
                let _ = 612;
                func_3();
                let v_20 = 34 + 8;
            }
            _ => {}
        }
        println!("msg_21 {}", 1);
    }
}
pub fn func_22() {
    if 2 > 10 {
        if 15 > 10 {
            let v_23 = ext_1();
            let v_24 = ext_0();
        } else {
            let _ = 66 + 26;
        }
        func_3();
        let v_25 = 69 + 5;
    } else {
        if 12 > 10 {
            let _ = 537;
            let _ = 347;
        } else {
            if 10 > 10 {
                let _ = 751;
                let w_26 = 1;
            } else {
                let v_27 = 77 + 58;
                let w_28 = 0;
            }
            let v_29 = 56 + 23;
        }
    }
    if 10 > 10 {
        #[cfg(any(feature = "feat18", feature = "feat17", feature = "feat16"))]
        let v_30 = ext_1();
        #[cfg(feature = "feat18")]
        let v_31 = 79 + 11;
    } else {
        pub fn func_32() {
            pub fn func_33() {
                let v_34 = ext_1();
                let v_35 = 85 + 25;
                let w_36 = 7;
                println!("msg_37 {}", 1);
            }
            #[cfg(feature = "feat18")]
            let v_38 = ext_2();
        }
        #[cfg(any(feature = "feat16", feature = "feat16", feature = "feat17"))]
        let _ = 69 + 97;
    }
    let _ = 228;
}
pub fn func_39() {
    match 0 {
        0 => {
            println!("msg_40 {}", 1);
            println!("msg_41 {}", 1);
            let v_42 = func_33();
            ext_3();
        }
        _ => {}
    }
    let v_43 = 25 + 11;
    #[cfg(feature = "feat16")]
    ext_2();
    func_33();
}
#[cfg(not(feature = "feat2"))]
use std::collections::HashMap;
use std::collections::HashMap;
pub mod inner_44 {
    use super::*;
    pub type Alias_45 = u64;
    pub enum Kind_46 {
        Variant_47,
        #[cfg(feature = "feat18")]
        Variant_48,
    }
    #[cfg(feature = "feat17")]
    pub enum Kind_49 {
        Variant_50,
        #[cfg(feature = "feat18")]
        Variant_51,
    }
}
pub type Alias_52 = u64;
pub struct Record_53 {
    pub field_54: u32,
    #[cfg(not(feature = "feat12"))]
    pub field_55: u32,
    pub field_56: u32,
}
pub fn func_57() {
    let v_58 = ext_3();
    match 2 {
        0 => {
            func_32();
            let v_59 = func_3();
        }
        _ => {}
    }
}
#[cfg(feature = "feat17")]
pub fn func_60() {
    #[cfg(feature = "feat18")]
    pub fn func_3() {
        let v_61 = 214;
        let v_62 = func_17();
        let v_63 = ext_0();
    }
}
pub static COUNTER_64: u32 = 0;
use std::collections::HashMap;
pub fn func_65() {
    match 1 {
        0 => {
            let v_66 = func_17();
        }
        _ => {}
    }
    let v_67 = ext_0();
    match 1 {
        0 => {
            let v_68 = 186;
            let v_69 = ext_0();
            pub fn func_70() {
                let v_71 = ext_1();
                if 1 > 10 {
                    println!("msg_72 {}", 1);
                    let v_73 = func_33();
                } else {
                    let w_74 = 4;
                    let w_75 = 7;
                    #[cfg(feature = "feat16")]
                    let v_76 = func_17();
                    let v_77 = ext_0();
                }
                #[cfg(all(feature = "feat16", not(feature = "feat15")))]
                pub fn func_39() {
                    let w_78 = 8;
                    func_3();
                    ext_3();
                    let w_79 = 7;
                }
                let v_80 = func_60();
            }
        }
        _ => {}
    }
}
pub const LIMIT_81: u32 = func_32();
pub fn func_82() {
    let v_83 = 132;
    match 3 {
        0 => {
            let v_84 = ext_1();
        }
        _ => {}
    }
}
pub fn func_85() {
    println!("msg_86 {}", 1);
    match 1 {
        0 => {
            let v_87 = 788;
        }
        _ => {}
    }
    if 5 > 10 {
        println!("msg_88 {}", 1);
    } else {
        func_33();
        let v_89 = func_32();
        let v_90 = func_3();
    }
    println!("msg_91 {}", 1);
}
pub fn func_92() {
    let v_93 = 86 + 42;
    let _ = 55;
    println!("msg_94 {}", 1);
}
#[cfg(any(feature = "feat17", feature = "feat17", feature = "feat18"))]
use std::collections::HashMap;
pub mod inner_95 {
    use super::*;
    #[cfg(not(feature = "feat2"))]
    pub fn func_3() {
        let v_96 = ext_1();
        println!("msg_97 {}", 1);
    }
    pub fn func_98() {
        match 0 {
            0 => {
                #[cfg(feature = "feat18")]
                let v_99 = 116;
            }
            _ => {}
        }
        ext_1();
    }
    pub enum Kind_100 {
        Variant_101,
        Variant_102,
    }
}
pub type Alias_103 = u64;
pub fn func_39() {
    func_82();
    println!("msg_104 {}", 1);
    let v_105 = 64 + 30;
    pub fn func_106() {
        println!("msg_107 {}", 1);
        func_92();
        match 0 {
            0 => {
                println!("msg_108 {}", 1);
                if 14 > 10 {
                    let v_109 = func_85();
                } else {
                    #[cfg(feature = "feat17")]
                    let v_110 = 2;
                    ext_0();
                    let w_111 = 2;
                    let w_112 = 2;
                }
            }
            _ => {}
        }
        let _ = 55 + 40;
    }
}
pub fn func_113() {
    func_60();
    if 14 > 10 {
        match 0 {
            0 => {
                func_17();
            }
            _ => {}
        }
    } else {
        func_85();
    }
    match 4 {
        0 => {
            let _ = 97;
            let v_114 = ext_2();
            match 4 {
                0 => {
                    let v_115 = ext_3();
                    let v_116 = ext_2();
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 3 {
        0 => {
            func_82();
            let v_117 = func_92();
        }
        _ => {}
    }
}
#[cfg(feature = "feat18")]
pub fn func_118() {
    func_17();
}
#[cfg(feature = "feat17")]
pub fn func_119() {
    if 4 > 10 {
        pub fn func_120() {
            let v_121 = ext_2();
            let _ = 77 + 52;
        }
        let v_122 = 36 + 33;
        println!("msg_123 {}", 1);
        println!("msg_124 {}", 1);
    } else {
        pub fn func_125() {
            let v_126 = 304;
        }
        if 17 > 10 {
            let v_127 = func_57();
            println!("msg_128 {}", 1);
            let v_129 = 99 + 58;
        } else {
            println!("msg_130 {}", 1);
            let _ = 114;
            println!("msg_131 {}", 1);
            func_92();
        }
        println!("msg_132 {}", 1);
    }
    pub fn func_98() {
        let v_133 = 889;
    }
    println!("msg_134 {}", 1);
}
pub fn func_135() {
    let _ = 95 + 80;
    let v_136 = 665;
}
pub mod inner_137 {
    use super::*;
    pub type Alias_138 = u64;
}
pub struct Record_139 {
    pub field_140: u32,
}
pub struct Handle_141;
impl Handle_141 {
    pub fn func_142() {
        match 2 {
            0 => {
                pub fn func_143() {
                    let w_144 = 7;
                }
                let v_145 = 502;
                let v_146 = func_65();
                println!("msg_147 {}", 1);
            }
            _ => {}
        }
        let _ = 4 + 81;
    }
    pub fn func_148() {
        let v_149 = func_113();
        let v_150 = ext_0();
        ext_0();
    }
}
pub const LIMIT_151: u32 = 14 + 58;
#[cfg(feature = "feat16")]
pub type Alias_152 = u64;
