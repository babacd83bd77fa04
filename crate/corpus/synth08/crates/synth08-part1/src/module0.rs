pub struct Record_1 {
    pub field_2: u32,
    pub field_3: u32,
    pub field_4: u32,
    pub field_5: u32,
}
pub fn func_6() {
    let v_7 = 422;
}
pub fn func_8() {
    if 3 > 10 {
        println!("msg_9 {}", 1);
    } else {
        if 18 > 10 {
            pub fn func_6() {
                #[cfg(feature = "m1_2")]
                let v_10 = func_6();
                println!("msg_11 {}", 1);
            }
            let v_12 = 28;
        } else {
            match 2 {
                0 => {
                    println!("msg_13 {}", 1);
                    let v_14 = 647;
                    #[cfg(feature = "m1_7")]
                    let v_15 = 6 + 16;
                    let v_16 = func_6();
                }
                _ => {}
            }
        }
        match 4 {
            0 => {
                ext_1();
            }
            _ => {}
        }
    }
    if 17 > 10 {
        pub fn func_17() {
            println!("msg_18 {}", 1);
            let v_19 = 605;
            let v_20 = 45 + 29;
        }
        let _ = 82 + 85;
        ext_2();
        let v_21 = 123;
    } else {
        let v_22 = 728;
        #[cfg(feature = "m1_1")]
        let v_23 = 290;
        if 7 > 10 {
            if 11 > 10 {
                let v_24 = ext_2();
                let v_25 = func_17();
                let w_26 = 3;
            } else {
                let _ = 276;
            }
            println!("msg_27 {}", 1);
        } else {
            let _ = 116;
            #[cfg(not(feature = "m1_9"))]
            let v_28 = func_17();
        }
    }
}
pub fn func_29() {
    let v_30 = 61 + 70;
    let v_31 = 63 + 65;
}
pub fn func_32() {
    let v_33 = 487;
    if 3 > 10 {
        let v_34 = 73 + 85;
    } else {
        match 2 {
            0 => {
                let v_35 = ext_2();
                let v_36 = ext_3();
            }
            _ => {}
        }
        let _ = 916;
        #[cfg(feature = "m1_6")]
        let v_37 = func_17();
        match 1 {
            0 => {
                func_29();
                match 3 {
                    0 => {
                        let w_38 = 0;
                        let v_39 = 44 + 78;
                        let v_40 = 362;
                    }
                    _ => {}
                }
                match 3 {
                    0 => {
                        func_29();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    let v_41 = func_6();
    pub fn func_42() {
        if 17 > 10 {
            #[cfg(not(feature = "m1_10"))]
            let v_43 = ext_0();
            if 11 > 10 {
                let v_44 = func_8();
                let v_45 = func_17();
            } else {
                #[cfg(feature = "m1_7")]
                let v_46 = func_17();
                #[cfg(feature = "m1_8")]
                let _ = 260;
                ext_2();
                println!("msg_47 {}", 1);
            }
            match 0 {
                0 => {
                    let w_48 = 5;
                    #[cfg(feature = "m1_4")]
                    func_8();
                }
                _ => {}
            }
            let v_49 = 138;
        } else {
            let v_50 = func_8();
            if 1 > 10 {
                let w_51 = 6;
            } else {
                func_6();
                let w_52 = 3;
            }
            let v_53 = func_6();
        }
        #[cfg(any(feature = "m1_4", feature = "m1_7"))]
        func_29();
        ext_2();
    }
}
pub mod inner_54 {
    use super::*;
    #[cfg(feature = "m1_8")]
    pub type Alias_55 = u64;
    #[cfg(feature = "m1_7")]
    pub enum Kind_56 {
        Variant_57,
        Variant_58,
    }
}
pub struct Handle_59;
impl Handle_59 {
    pub fn func_60() {
        let v_61 = ext_0();
        let v_62 = 569;
        let _ = 569;
    }
}
pub fn func_6() {
    let v_63 = 551;
    ext_3();
    let v_64 = func_42();
    if 3 > 10 {
        if 10 > 10 {
            if 2 > 10 {
                println!("msg_65 {}", 1);
                #[cfg(any(feature = "m1_4", feature = "m1_2"))]
                let v_66 = 1 + 99;
            } else {
                println!("msg_67 {}", 1);
            }
        } else {
            #[cfg(not(feature = "m1_3"))]
            pub fn func_68() {
                let w_69 = 0;
                let v_70 = func_6();
                let v_71 = func_6();
            }
            let v_72 = 74 + 18;
            let v_73 = ext_3();
        }
        if 15 > 10 {
            let v_74 = func_68();
            println!("msg_75 {}", 1);
        } else {
            let v_76 = func_42();
        }
        let v_77 = 499;
    } else {
        let v_78 = func_17();
    }
}
use std::collections::HashMap;
pub fn func_79() {
    let v_80 = func_29();
    #[cfg(feature = "m1_2")]
    func_17();
    let v_81 = ext_0();
    let v_82 = func_17();
}
pub fn func_83() {
    let v_84 = 51 + 43;
    let v_85 = 72 + 26;
}
pub fn func_17() {
    ext_0();
    match 3 {
        0 => {
            if 4 > 10 {
                let v_86 = 1 + 36;
                let v_87 = ext_0();
                match 0 {
                    0 => {
                        let w_88 = 5;
                        let v_89 = func_60();
                        let v_90 = func_17();
                        println!("msg_91 {}", 1);
                    }
                    _ => {}
                }
            } else {
                println!("msg_92 {}", 1);
                if 17 > 10 {
                    let w_93 = 7;
                    let _ = 72 + 51;
                    let w_94 = 5;
                } else {
                    let v_95 = 854;
                    let v_96 = ext_1();
                    let v_97 = func_17();
                    let w_98 = 8;
                }
            }
            println!("msg_99 {}", 1);
            func_68();
            #[cfg(any(feature = "m1_8", feature = "m1_2", feature = "m1_2"))]
            let v_100 = 728;
        }
        _ => {}
    }
    let v_101 = func_6();
    println!("msg_102 {}", 1);
}
use std::collections::HashMap;
use std::collections::HashMap;
pub type Alias_103 = u64;
#[cfg(not(feature = "m1_10"))]
pub fn func_104() {
    func_60();
    let v_105 = ext_0();
}
pub fn func_106() {
    if 15 > 10 {
        func_42();
        if 6 > 10 {
            match 1 {
                0 => {
                    println!("msg_107 {}", 1);
                    let v_108 = func_68();
                    let v_109 = 983;
                }
                _ => {}
            }
            let v_110 = 33 + 58;
            let v_111 = ext_2();
        } else {
            let v_112 = ext_2();
            func_17();
        }
    } else {
        pub fn func_113() {
            let v_114 = 16 + 89;
            match 0 {
                0 => {
                    let w_115 = 4;
                    let v_116 = 44;
                }
                _ => {}
            }
        }
        let v_117 = 5 + 34;
        let _ = 23 + 72;
    }
    let _ = 77 + 10;
}
pub fn func_118() {
    pub fn func_119() {
        println!("msg_120 {}", 1);
    }
    let v_121 = 193;
    if 5 > 10 {
        pub fn func_122() {
            match 3 {
                0 => {
                    let w_123 = 3;
                    println!("msg_124 {}", 1);
                }
                _ => {}
            }
            println!("msg_125 {}", 1);
        }
        println!("msg_126 {}", 1);
        pub fn func_8() {
            pub fn func_127() {
                let v_128 = func_29();
            }
            pub fn func_129() {
                let w_130 = 1;
                let w_131 = 8;
                let v_132 = 743;
            }
        }
    } else {
        #[cfg(feature = "m1_7")]
        let v_133 = func_104();
    }
    func_42();
}
#[cfg(any(feature = "m1_4", feature = "m1_1"))]
pub struct Record_134 {
    #[cfg(feature = "m1_8")]
    pub field_135: u32,
    pub field_136: u32,
    pub field_137: u32,
    pub field_138: u32,
}
pub fn func_122() {
    func_83();
    let v_139 = ext_0();
    println!("msg_140 {}", 1);
}
pub fn func_83() {
    let v_141 = ext_2();
}
pub struct Handle_142;
#[cfg(feature = "m1_6")]
impl Handle_142 {
    pub fn func_143() {
        let v_144 = 17 + 27;
    }
}
#[cfg(feature = "m1_8")]
pub const LIMIT_145: u32 = func_60();
pub static COUNTER_146: u32 = 0;
pub enum Kind_147 {
    #[cfg(feature = "m1_8")]
    Variant_148,
    Variant_149,
    Variant_150,
}
#[cfg(feature = "m1_7")]
pub fn func_151() {
    #[cfg(any(feature = "m1_8", feature = "m1_8"))]
    pub fn func_152() {
        func_68();
    }
}
pub fn func_153() {
    match 3 {
        0 => {
            let v_154 = func_83();
        }
        _ => {}
    }
    let v_155 = 82 + 83;
}
pub const LIMIT_156: u32 = func_152();
pub type Alias_157 = u64;
use std::collections::HashMap;
pub static COUNTER_158: u32 = 0;
#[cfg(feature = "m1_2")]
pub fn func_159() {
    match 3 {
        0 => {
            let v_160 = ext_3();
            let v_161 = ext_3();
        }
        _ => {}
    }
    #[cfg(feature = "m1_8")]
    pub fn func_162() {
        if 4 > 10 {
            match 0 {
                0 => {
                    let v_163 = ext_2();
                    let w_164 = 0;
                }
                _ => {}
            }
            let v_165 = 20 + 57;
            match 3 {
                0 => {
                    let w_166 = 0;
                    let w_167 = 3;
                }
                _ => {}
            }
            let _ = 854;
        } else {
            let v_168 = func_118();
            let v_169 = 152;
        }
        println!("msg_170 {}", 1);
        let v_171 = ext_3();
        if 1 > 10 {
            if 2 > 10 {
                let v_172 = 76 + 95;
                let v_173 = ext_3();
                let w_174 = 6;
                let _ = 9 + 2;
            } else {
                let w_175 = 5;
                let v_176 = 5 + 25;
                let v_177 = func_83();
            }
            pub fn func_178() {
                let w_179 = 6;
            }
        } else {
            let _ = 0 + 66;
            let v_180 = ext_2();
        }
    }
}
