pub struct Record_1 {
    pub field_2: u32,
}
pub struct Record_3 {
    pub field_4: u32,
    pub field_5: u32,
    pub field_6: u32,
}
pub enum Kind_7 {
    Variant_8,
    Variant_9,
    Variant_10,
}
pub fn func_11() {
    println!("msg_12 {}", 1);
    let v_13 = 892;
    let v_14 = 988;
    let v_15 = 628;
}
pub fn func_11() {
    func_11();
    let v_16 = ext_3();
}
use std::collections::HashMap;
#[cfg(not(feature = "m1_2"))]
pub fn func_17() {
    pub fn func_18() {
        match 0 {
            0 => {
                println!("msg_19 {}", 1);
                let v_20 = 60 + 93;
            }
            _ => {}
        }
        let v_21 = 434;
        let v_22 = 75 + 32;
    }
}
pub struct Record_23 {
    pub field_24: u32,
    pub field_25: u32,
    pub field_26: u32,
}
#[cfg(feature = "m1_1")]
pub type Alias_27 = u64;
#[cfg(all(feature = "m1_5", not(feature = "m1_4")))]
pub fn func_28() {
    match 4 {
        0 => {
            func_17();
            func_11();
        }
        _ => {}
    }
    let v_29 = func_18();
}
pub fn func_17() {
    let v_30 = func_18();
    #[cfg(feature = "m1_6")]
    let v_31 = 902;
    println!("msg_32 {}", 1);
}
pub const LIMIT_33: u32 = 33 + 76;
pub struct Handle_34;
impl Handle_34 {
    pub fn func_35() {
        let v_36 = func_17();
    }
    pub fn func_37() {
        #[cfg(not(feature = "m1_2"))]
        let v_38 = ext_0();
    }
}
pub struct Handle_39;
impl Handle_39 {
    pub fn func_40() {
        if 0 > 10 {
            #[cfg(all(feature = "m1_1", not(feature = "m1_4")))]
            let v_41 = ext_0();
        } else {
            if 9 > 10 {
                let w_42 = 3;
                let v_43 = 965;
                let w_44 = 1;
            } else {
                let _ = 30 + 44;
                let w_45 = 1;
                let v_46 = 193;
                let v_47 = 48 + 17;
            }
        }
        let v_48 = 183;
        let v_49 = 25 + 81;
    }
}
#[cfg(any(feature = "m1_3", feature = "m1_1"))]
pub fn func_50() {
    println!("msg_51 {}", 1);
    let v_52 = 48 + 21;
}
pub struct Record_53 {
    pub field_54: u32,
    pub field_55: u32,
    pub field_56: u32,
    pub field_57: u32,
}
pub struct Handle_58;
impl Handle_58 {
    pub fn func_59() {
        if 5 > 10 {
            if 1 > 10 {
                println!("msg_60 {}", 1);
                let v_61 = 63 + 34;
            } else {
                let w_62 = 4;
                func_17();
            }
            println!("msg_63 {}", 1);
            let v_64 = func_40();
            let v_65 = func_50();
        } else {
            pub fn func_66() {
                func_37();
                #[cfg(feature = "m1_3")]
                let v_67 = func_28();
            }
            let _ = 86 + 19;
            let v_68 = func_35();
            match 1 {
                0 => {
                    let w_69 = 3;
                }
                _ => {}
            }
        }
        func_66();
        let v_70 = 148;
        let v_71 = 352;
    }
    pub fn func_72() {
        let v_73 = 53 + 81;
        let v_74 = func_40();
        let v_75 = ext_0();
        let v_76 = 39 + 5;
    }
}
#[cfg(feature = "m1_5")]
pub type Alias_77 = u64;
pub static COUNTER_78: u32 = 0;
#[cfg(feature = "m1_3")]
pub static COUNTER_79: u32 = 0;
pub static COUNTER_80: u32 = 0;
pub fn func_81() {
    #[cfg(feature = "m1_5")]
    let v_82 = 543;
    println!("msg_83 {}", 1);
}
pub fn func_84() {
    #[cfg(not(feature = "m1_4"))]
    pub fn func_85() {
        println!("msg_86 {}", 1);
        match 2 {
            0 => {
                let v_87 = 22 + 56;
                println!("msg_88 {}", 1);
            }
            _ => {}
        }
    }
    #[cfg(feature = "m1_6")]
    let _ = 235;
}
pub static COUNTER_89: u32 = 0;
#[cfg(feature = "m1_3")]
pub enum Kind_90 {
    Variant_91,
    Variant_92,
    #[cfg(feature = "m1_5")]
    Variant_93,
    Variant_94,
}
#[cfg(feature = "m1_5")]
pub fn func_95() {
    let v_96 = func_84();
}
pub mod inner_97 {
    use super::*;
    #[cfg(feature = "m1_3")]
    pub const LIMIT_98: u32 = func_28();
}
pub fn func_99() {
    let v_100 = func_66();
    let v_101 = ext_0();
}
pub fn func_102() {
    println!("msg_103 {}", 1);
    if 19 > 10 {
        let v_104 = func_95();
        if 1 > 10 {
            let _ = 89 + 78;
            pub fn func_105() {
                let v_106 = func_28();
                #[cfg(any(feature = "m1_5", feature = "m1_6"))]
                let v_107 = 7 + 33;
                let v_108 = 101;
            }
        } else {
            let v_109 = func_81();
            let v_110 = func_95();
            func_84();
        }
        let v_111 = ext_2();
    } else {
        func_28();
        let v_112 = ext_3();
    }
}
pub fn func_113() {
    if 1 > 10 {
        match 1 {
            0 => {
                println!("msg_114 {}", 1);
            }
            _ => {}
        }
        #[cfg(all(feature = "m1_6", not(feature = "m1_4")))]
        let v_115 = 37 + 36;
        let _ = 81 + 50;
        #[cfg(any(feature = "m1_1", feature = "m1_6"))]
        let _ = 753;
    } else {
        let v_116 = ext_2();
        #[cfg(feature = "m1_1")]
        let v_117 = func_95();
    }
    println!("msg_118 {}", 1);
    if 17 > 10 {
        let v_119 = 772;
        func_95();
    } else {
        let v_120 = func_84();
        let v_121 = 682;
        if 13 > 10 {
            if 0 > 10 {
                let w_122 = 1;
            } else {
                #[cfg(not(feature = "m1_4"))]
                let _ = 565;
                let v_123 = ext_1();
                let w_124 = 7;
                let v_125 = func_72();
            }
            println!("msg_126 {}", 1);
            let v_127 = func_72();
        } else {
            pub fn func_128() {
                let v_129 = ext_0();
                let _ = 55 + 66;
            }
            if 15 > 10 {
                println!("msg_130 {}", 1);
                let w_131 = 5;
                #[cfg(any(feature = "m1_1", feature = "m1_3", feature = "m1_6"))]
                let v_132 = 58 + 75;
                ext_2();
            } else {
                #[cfg(feature = "m1_3")]
                let v_133 = 9 + 13;
            }
            pub fn func_134() {
                let v_135 = func_105();
                let w_136 = 6;
            }
        }
    }
    println!("msg_137 {}", 1);
}
pub static COUNTER_138: u32 = 0;
#[cfg(not(feature = "m1_0"))]
pub fn func_139() {
    let v_140 = func_105();
    func_95();
}
#[cfg(not(feature = "m1_2"))]
pub const LIMIT_141: u32 = ext_3();
pub const LIMIT_142: u32 = func_105();
pub struct Record_143 {
    pub field_144: u32,
    pub field_145: u32,
}
pub struct Handle_146;
impl Handle_146 {
    #[cfg(any(feature = "m1_6", feature = "m1_3"))]
    pub fn func_147() {
        match 1 {
            0 => {
                println!("msg_148 {}", 1);
            }
            _ => {}
        }
        println!("msg_149 {}", 1);
        if 17 > 10 {
            let v_150 = 65 + 88;
            let v_151 = func_84();
        } else {
            let v_152 = 870;
            let v_153 = func_18();
            println!("msg_154 {}", 1);
            func_37();
        }
        let v_155 = 50 + 61;
    }
    #[cfg(not(feature = "m1_2"))]
    pub fn func_17() {
        let v_156 = ext_3();
        ext_2();
        let v_157 = ext_0();
    }
}
