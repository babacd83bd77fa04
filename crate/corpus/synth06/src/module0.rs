pub fn func_1() {
    let v_2 = 845;
    println!("msg_3 {}", 1);
    let _ = 437;
    #[cfg(feature = "feat15")]
    let v_4 = 555;
}
pub fn func_5() {
    #[cfg(all(feature = "feat21", not(feature = "feat18")))]
    ext_3();
    println!("msg_6 {}", 1);
    let v_7 = func_1();
    let v_8 = ext_3();
}
#[cfg(feature = "feat15")]
pub fn func_9() {
    #[cfg(feature = "feat23")]
    ext_2();
}
pub fn func_10() {
    println!("msg_11 {}", 1);
}
pub struct Handle_12;
impl Handle_12 {
    pub fn func_13() {
        let v_14 = 57 + 96;
        let v_15 = func_5();
        match 1 {
            0 => {
                let v_16 = 279;
                println!("msg_17 {}", 1);
            }
            _ => {}
        }
    }
}
pub fn func_18() {
    let v_19 = 23 + 71;
    if 5 > 10 {
        #[cfg(feature = "feat23")]
        func_9();
        #[cfg(any(feature = "feat16", feature = "feat15"))]
        let v_20 = ext_3();
    } else {
        #[cfg(feature = "feat14")]
        let v_21 = func_13();
        let _ = 54 + 73;
    }
    if 8 > 10 {
        if 0 > 10 {
            println!("msg_22 {}", 1);
            let v_23 = ext_2();
            pub fn func_24() {
                let v_25 = func_13();
                println!("msg_26 {}", 1);
                println!("msg_27 {}", 1);
            }
            func_24();
        } else {
            #[cfg(feature = "feat16")]
            let v_28 = 29 + 78;
            pub fn func_29() {
                let w_30 = 0;
                #[cfg(feature = "feat15")]
                let _ = 63 + 45;
            }
        }
        let v_31 = ext_0();
        if 10 > 10 {
            if 13 > 10 {
                println!("msg_32 {}", 1);
                println!("msg_33 {}", 1);
                println!("msg_34 {}", 1);
                let v_35 = 763;
            } else {
                let v_36 = func_24();
            }
            match 2 {
                0 => {
                    let v_37 = 70 + 29;
                    let v_38 = 72 + 33;
                }
                _ => {}
            }
            let v_39 = 0 + 5;
        } else {
            match 0 {
                0 => {
                    let w_40 = 3;
                    let _ = 963;
                    let v_41 = 960;
                }
                _ => {}
            }
            func_24();
            let v_42 = 900;
        }
        println!("msg_43 {}", 1);
    } else {
        func_9();
        if 12 > 10 {
            #[cfg(feature = "feat21")]
            let v_44 = func_24();
            match 2 {
                0 => {
                    let w_45 = 5;
                    let w_46 = 3;
                    let w_47 = 7;
                    let w_48 = 4;
                }
                _ => {}
            }
        } else {
            match 3 {
                0 => {
                    let v_49 = func_10();
                    #[cfg(any(feature = "feat23", feature = "feat23", feature = "feat15"))]
                    let _ = 9 + 67;
                }
                _ => {}
            }
            let v_50 = 50 + 78;
        }
        match 4 {
            0 => {
                let v_51 = func_9();
                let v_52 = ext_2();
                pub fn func_53() {
                    func_5();
                    let v_54 = 586;
                    let v_55 = func_5();
                }
                func_1();
            }
            _ => {}
        }
    }
    let v_56 = 343;
}
#[cfg(feature = "feat16")]
pub const LIMIT_57: u32 = func_18();
pub enum Kind_58 {
    #[cfg(feature = "feat21")]
    Variant_59,
}
pub fn func_60() {
    ext_0();
    let _ = 585;
}
pub fn func_5() {
    ext_0();
    pub fn func_61() {
        println!("msg_62 {}", 1);
        let v_63 = func_1();
        if 3 > 10 {
            println!("msg_64 {}", 1);
            func_18();
            let v_65 = 9 + 97;
        } else {
            let v_66 = 50 + 92;
            func_53();
        }
    }
    match 2 {
        0 => {
            match 1 {
                0 => {
                    func_53();
                }
                _ => {}
            }
            let _ = 95 + 31;
            let v_67 = func_18();
            println!("msg_68 {}", 1);
        }
        _ => {}
    }
    func_53();
}
pub enum Kind_69 {
    Variant_70,
    #[cfg(feature = "feat21")]
    Variant_71,
}
pub struct Record_72 {
    pub field_73: u32,
}
#[cfg(feature = "feat15")]
pub struct Record_74 {
    pub field_75: u32,
    pub field_76: u32,
}
pub const LIMIT_77: u32 = func_13();
#[cfg(feature = "feat19")]
use std::collections::HashMap;
pub mod inner_78 {
    use super::*;
    pub fn func_79() {
        if 12 > 10 {
            if 5 > 10 {
                let _ = 47 + 82;
                #[cfg(all(feature = "feat16", not(feature = "feat20")))]
                let v_80 = 611;
                func_9();
            } else {
                println!("msg_81 {}", 1);
            }
        } else {
            let v_82 = func_24();
            pub fn func_83() {
                let v_84 = ext_2();
                #[cfg(feature = "feat15")]
                let v_85 = 83 + 78;
                let w_86 = 8;
                let w_87 = 2;
            }
            let v_88 = 84 + 95;
        }
        let _ = 96 + 86;
        let v_89 = func_53();
        let v_90 = func_5();
    }
}
#[cfg(feature = "feat16")]
pub fn func_91() {
    let _ = 324;
    let v_92 = func_18();
}
#[cfg(all(feature = "feat19", not(feature = "feat17")))]
pub type Alias_93 = u64;
pub const LIMIT_94: u32 = func_60();
#[cfg(feature = "feat16")]
pub struct Record_95 {
    pub field_96: u32,
}
pub fn func_97() {
    ext_1();
    let v_98 = ext_0();
    let v_99 = 1;
    let v_100 = 389;
}
pub fn func_101() {
    if 7 > 10 {
        #[cfg(feature = "feat14")]
        let v_102 = func_91();
        let v_103 = ext_1();
    } else {
        let v_104 = ext_0();
        let v_105 = ext_3();
        #[cfg(not(feature = "feat7"))]
        let v_106 = func_5();
        pub fn func_107() {
            let v_108 = 132;
            match 0 {
                0 => {
                    func_79();
                    let v_109 = func_97();
                    let w_110 = 7;
                    let w_111 = 3;
                }
                _ => {}
            }
        }
    }
    match 4 {
        0 => {
            let v_112 = 36;
            let _ = 43 + 86;
            if 7 > 10 {
                let _ = 75;
                let v_113 = ext_1();
            } else {
                pub fn func_114() {
                    #[cfg(not(feature = "feat1"))]
                    let v_115 = func_83();
                }
                let v_116 = 103;
                let v_117 = 69 + 37;
            }
            func_18();
        }
        _ => {}
    }
}
pub struct Record_118 {
    pub field_119: u32,
    pub field_120: u32,
}
pub fn func_121() {
    let v_122 = ext_2();
    let v_123 = 572;
    println!("msg_124 {}", 1);
    match 2 {
        0 => {
            ext_2();
            let v_125 = func_79();
            let v_126 = 44 + 11;
            ext_0();
        }
        _ => {}
    }
}
#[cfg(feature = "feat15")]
pub type Alias_127 = u64;
#[cfg(feature = "feat16")]
pub enum Kind_128 {
    #[cfg(not(feature = "feat20"))]
    Variant_129,
    Variant_130,
}
pub struct Record_131 {
    pub field_132: u32,
    pub field_133: u32,
}
pub fn func_134() {
    println!("msg_135 {}", 1);
    let _ = 87 + 51;
    ext_0();
    let _ = 478;
}
#[cfg(not(feature = "feat1"))]
pub const LIMIT_136: u32 = ext_3();
#[cfg(not(feature = "feat18"))]
pub fn func_60() {
    let _ = 913;
    let v_137 = 987;
}
pub fn func_138() {
    let v_139 = 831;
    let v_140 = 56 + 54;
    println!("msg_141 {}", 1);
}
pub fn func_142() {
    #[cfg(any(feature = "feat19", feature = "feat19"))]
    let _ = 14 + 18;
    let _ = 614;
    pub fn func_143() {
        ext_2();
    }
}
pub struct Record_144 {
    #[cfg(any(feature = "feat15", feature = "feat19"))]
    pub field_145: u32,
    #[cfg(not(feature = "feat1"))]
    pub field_146: u32,
}
pub fn func_147() {
    #[cfg(feature = "feat14")]
    pub fn func_1() {
        let v_148 = ext_1();
    }
}
pub fn func_149() {
    let v_150 = 60 + 63;
}
use std::collections::HashMap;
pub fn func_151() {
    #[cfg(feature = "feat15")]
    let _ = 86 + 42;
    let v_152 = ext_3();
    let v_153 = func_79();
    let _ = 37 + 13;
}
pub enum Kind_154 {
    Variant_155,
    Variant_156,
    Variant_157,
    Variant_158,
}
pub mod inner_159 {
    use super::*;
    pub fn func_160() {
        let v_161 = ext_2();
    }
    pub type Alias_162 = u64;
}
