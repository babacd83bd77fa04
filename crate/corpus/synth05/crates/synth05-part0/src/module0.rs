pub static COUNTER_1: u32 = 0;
#[cfg(feature = "m0_4")]
pub fn func_2() {
    let v_3 = 739;
    pub fn func_4() {
        match 2 {
            0 => {
                let v_5 = 58 + 40;
            }
            _ => {}
        }
        let v_6 = 354;
    }
    pub fn func_7() {
        func_4();
        println!("msg_8 {}", 1);
        println!("msg_9 {}", 1);
    }
}
pub struct Handle_10;
impl Handle_10 {
    #[cfg(feature = "m0_4")]
    pub fn func_11() {
        if 11 > 10 {
            match 4 {
                0 => {
                    #[cfg(feature = "m0_7")]
                    let v_12 = 50;
                    println!("msg_13 {}", 1);
                }
                _ => {}
            }
            println!("msg_14 {}", 1);
        } else {
            let v_15 = 231;
        }
        if 5 > 10 {
            println!("msg_16 {}", 1);
            pub fn func_17() {
                let v_18 = func_2();
                let w_19 = 7;
            }
            let v_20 = func_7();
            let v_21 = 14 + 49;
        } else {
            let v_22 = func_4();
            let v_23 = 317;
            let _ = 455;
            #[cfg(any(feature = "m0_5", feature = "m0_6"))]
            let v_24 = func_7();
        }
        let v_25 = 99 + 25;
        let v_26 = 348;
    }
    pub fn func_27() {
        pub fn func_28() {
            let v_29 = ext_3();
            pub fn func_30() {
                #[cfg(all(feature = "m0_3", not(feature = "m0_2")))]
                func_7();
                let w_31 = 1;
                let w_32 = 6;
                println!("msg_33 {}", 1);
            }
            let v_34 = 60 + 66;
        }
    }
}
pub fn func_4() {
    match 1 {
        0 => {
            let v_35 = func_7();
            let v_36 = func_7();
            func_7();
            let v_37 = func_17();
        }
        _ => {}
    }
}
pub enum Kind_38 {
    Variant_39,
    Variant_40,
    Variant_41,
    Variant_42,
}
pub struct Handle_43;
impl Handle_43 {
    pub fn func_44() {
        let v_45 = 73 + 89;
    }
    pub fn func_46() {
        pub fn func_47() {
            let _ = 8;
            match 0 {
                0 => {
                    let w_48 = 7;
                    let v_49 = ext_1();
                    #[cfg(feature = "m0_4")]
                    let v_50 = func_44();
                }
                _ => {}
            }
            let v_51 = func_30();
            if 0 > 10 {
                println!("msg_52 {}", 1);
                let _ = 57 + 77;
                func_44();
            } else {
                let _ = 95 + 67;
                let v_53 = 129;
                let v_54 = ext_0();
                let v_55 = func_2();
            }
        }
        let v_56 = 19 + 10;
        let _ = 394;
    }
}
pub const LIMIT_57: u32 = func_46();
pub fn func_58() {
    match 0 {
        0 => {
            let v_59 = func_46();
            func_27();
        }
        _ => {}
    }
    ext_1();
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_60() {
    println!("msg_61 {}", 1);
    let v_62 = ext_1();
}
pub fn func_63() {
    let v_64 = func_2();
    ext_0();
}
#[cfg(feature = "m0_8")]
pub enum Kind_65 {
    Variant_66,
    Variant_67,
}
pub type Alias_68 = u64;
pub fn func_69() {
    match 0 {
        0 => {
            pub fn func_70() {
                if 16 > 10 {
                    let v_71 = func_30();
                } else {
                    ext_3();
                    func_63();
                    let w_72 = 6;
                }
            }
        }
        _ => {}
    }
    #[cfg(feature = "m0_1")]
    let v_73 = func_4();
}
pub const LIMIT_74: u32 = 63 + 77;
pub fn func_75() {
    let v_76 = func_47();
}
pub fn func_75() {
    #[cfg(not(feature = "m0_2"))]
    let v_77 = 591;
    func_46();
    match 2 {
        0 => {
            println!("msg_78 {}", 1);
            let v_79 = func_44();
            let v_80 = func_70();
            let _ = 3 + 57;
        }
        _ => {}
    }
    let v_81 = func_27();
}
pub fn func_82() {
    if 13 > 10 {
        if 7 > 10 {
            let v_83 = func_47();
        } else {
            match 1 {
                0 => {
                    let v_84 = func_4();
                }
                _ => {}
            }
            let v_85 = 506;
        }
        #[cfg(feature = "m0_0")]
        func_7();
    } else {
        println!("msg_86 {}", 1);
        let v_87 = ext_2();
    }
    let v_88 = func_11();
    let _ = 43 + 10;
}
pub static COUNTER_89: u32 = 0;
#[cfg(all(feature = "m0_4", not(feature = "m0_2")))]
use std::collections::HashMap;
pub struct Record_90 {
    pub field_91: u32,
}
pub fn func_92() {
    let v_93 = func_46();
}
pub fn func_94() {
    if 9 > 10 {
        let v_95 = func_75();
    } else {
        let _ = 15 + 98;
        let v_96 = func_92();
        #[cfg(not(feature = "m0_2"))]
        let v_97 = 84 + 90;
        let v_98 = func_17();
    }
    let v_99 = 97 + 93;
    let v_100 = func_7();
}
pub mod inner_101 {
    use super::*;
    pub fn func_102() {
        ext_1();
    }
}
pub fn func_103() {
    match 0 {
        0 => {
            let v_104 = 210;
            let v_105 = func_102();
            func_2();
        }
        _ => {}
    }
}
pub static COUNTER_106: u32 = 0;
pub struct Handle_107;
impl Handle_107 {
    pub fn func_108() {
        let v_109 = func_11();
        let v_110 = func_47();
        #[cfg(feature = "m0_8")]
        let v_111 = ext_2();
        match 0 {
            0 => {
                #[cfg(feature = "m0_8")]
                pub fn func_112() {
                    let w_113 = 1;
                    let w_114 = 5;
                    ext_2();
                }
            }
            _ => {}
        }
    }
}
use std::collections::HashMap;
pub fn func_115() {
    pub fn func_116() {
        let _ = 54 + 24;
    }
    let v_117 = ext_1();
    #[cfg(feature = "m0_7")]
    let v_118 = ext_0();
}
#[cfg(feature = "m0_6")]
pub fn func_119() {
    func_82();
    ext_2();
    if 15 > 10 {
        let v_120 = func_58();
        println!("msg_121 {}", 1);
        let v_122 = 199;
        let _ = 553;
    } else {
        let _ = 657;
        #[cfg(not(feature = "m0_2"))]
        ext_3();
        #[cfg(feature = "m0_8")]
        let v_123 = ext_3();
        println!("msg_124 {}", 1);
    }
    println!("msg_125 {}", 1);
}
pub static COUNTER_126: u32 = 0;
pub fn func_127() {
    let v_128 = 341;
    #[cfg(feature = "m0_5")]
    let v_129 = ext_0();
    match 0 {
        0 => {
            let v_130 = func_112();
            let v_131 = func_27();
            let v_132 = func_102();
        }
        _ => {}
    }
}
pub const LIMIT_133: u32 = 342;
pub fn func_134() {
    if 15 > 10 {
        println!("msg_135 {}", 1);
        let v_136 = 72 + 8;
        func_103();
    } else {
        #[cfg(feature = "m0_7")]
        func_127();
        #[cfg(any(feature = "m0_4", feature = "m0_7", feature = "m0_1"))]
        pub fn func_137() {
            #[cfg(any(feature = "m0_8", feature = "m0_8"))]
            pub fn func_138() {
                func_47();
            }
            match 1 {
                0 => {
                    let v_139 = ext_3();
                    ext_3();
                }
                _ => {}
            }
            pub fn func_140() {
                println!("msg_141 {}", 1);
                let v_142 = 22 + 0;
                let w_143 = 4;
                ext_1();
            }
        }
        println!("msg_144 {}", 1);
    }
    let v_145 = 185;
    println!("msg_146 {}", 1);
    println!("msg_147 {}", 1);
}
use std::collections::HashMap;
#[cfg(any(feature = "m0_3", feature = "m0_8", feature = "m0_1"))]
pub fn func_148() {
    if 14 > 10 {
        pub fn func_112() {
            let v_149 = ext_0();
            let v_150 = func_112();
        }
        println!("msg_151 {}", 1);
    } else {
        if 16 > 10 {
            let v_152 = func_27();
            match 2 {
                0 => {
                    let v_153 = ext_1();
                    ext_3();
                }
                _ => {}
            }
            func_27();
            let v_154 = 710;
        } else {
            let v_155 = ext_3();
            let v_156 = func_134();
            let _ = 54 + 84;
            pub fn func_103() {
                let w_157 = 8;
            }
        }
        match 1 {
            0 => {
                match 4 {
                    0 => {
                        let w_158 = 4;
                        let w_159 = 6;
                        let w_160 = 0;
                        let _ = 258;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        match 3 {
            0 => {
                func_102();
                pub fn func_161() {
                    let w_162 = 7;
                    func_138();
                    func_44();
                    let w_163 = 2;
                }
                let v_164 = func_134();
            }
            _ => {}
        }
        let v_165 = func_2();
    }
}
