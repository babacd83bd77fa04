pub struct Record_1 {
    pub field_2: u32,
    pub field_3: u32,
}
#[cfg(any(feature = "feat0", feature = "feat3"))]
pub type Alias_4 = u64;
use std::collections::HashMap;
pub struct Record_5 {
    pub field_6: u32,
}
#[cfg(feature = "feat6")]
pub fn func_7() {
    println!("msg_8 {}", 1);
}
pub fn func_9() {
    let v_10 = 699;
    match 1 {
        0 => {
            let v_11 = func_7();
            match 0 {
                0 => {
                    #[cfg(not(feature = "feat5"))]
                    let v_12 = 524;
                    func_7();
                    let v_13 = func_7();
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub fn func_14() {
    let _ = 277;
    match 0 {
        0 => {
            ext_2();
            match 2 {
                0 => {
                    let v_15 = 650;
                    if 7 > 10 {
                        let v_16 = 530;
                        let w_17 = 7;
                        let v_18 = ext_1();
                        let v_19 = 400;
                    } else {
                        let w_20 = 7;
                    }
                    if 19 > 10 {
                        func_9();
                    } else {
                        func_9();
                        let v_21 = func_7();
                        #[cfg(all(feature = "feat4", not(feature = "feat5")))]
                        ext_1();
                    }
                    #[cfg(feature = "feat3")]
                    let v_22 = func_7();
                }
                _ => {}
            }
            if 8 > 10 {
                #[cfg(any(feature = "feat8", feature = "feat0", feature = "feat6"))]
                ext_1();
                pub fn func_7() {
                    let v_23 = ext_3();
                }
                println!("msg_24 {}", 1);
            } else {
                if 13 > 10 {
                    let w_25 = 1;
                } else {
                    println!("msg_26 {}", 1);
                    let v_27 = 95 + 69;
                    let w_28 = 1;
                    println!("msg_29 {}", 1);
                }
                let v_30 = ext_2();
                println!("msg_31 {}", 1);
            }
        }
        _ => {}
    }
    pub fn func_32() {
        ext_3();
        let v_33 = ext_1();
    }
}
pub struct Handle_34;
impl Handle_34 {
    #[cfg(feature = "feat1")]
    pub fn func_35() {
        println!("msg_36 {}", 1);
        #[cfg(any(feature = "feat8", feature = "feat3", feature = "feat4"))]
        let v_37 = func_7();
    }
    pub fn func_38() {
        let _ = 30 + 14;
    }
}
use std::collections::HashMap;
pub fn func_7() {
    #[cfg(feature = "feat1")]
    let v_39 = func_35();
}
pub fn func_40() {
    let v_41 = func_32();
    println!("msg_42 {}", 1);
    let v_43 = 975;
    if 1 > 10 {
        #[cfg(all(feature = "feat8", not(feature = "feat9")))]
        let v_44 = func_32();
        func_38();
        func_14();
        if 13 > 10 {
            ext_3();
            if 7 > 10 {
                let w_45 = 4;
            } else {
                let v_46 = ext_0();
                println!("msg_47 {}", 1);
                #[cfg(feature = "feat8")]
                let v_48 = ext_0();
                let v_49 = 97 + 88;
            }
            let v_50 = 30 + 19;
            match 0 {
                0 => {
                    let _ = 80 + 68;
                    println!("msg_51 {}", 1);
                    let v_52 = 599;
                }
                _ => {}
            }
        } else {
            match 4 {
                0 => {
                    let v_53 = func_14();
                    #[cfg(all(feature = "feat6", not(feature = "feat9")))]
                    func_7();
                }
                _ => {}
            }
            func_32();
            match 0 {
                0 => {
                    println!("msg_54 {}", 1);
                    println!("msg_55 {}", 1);
                }
                _ => {}
            }
        }
    } else {
        ext_1();
        let v_56 = ext_3();
    }
}
pub const LIMIT_57: u32 = 49 + 59;
use std::collections::HashMap;
pub type Alias_58 = u64;
#[cfg(all(feature = "feat1", not(feature = "feat5")))]
pub fn func_59() {
    println!("msg_60 {}", 1);
}
pub type Alias_61 = u64;
pub struct Record_62 {
    #[cfg(feature = "feat0")]
    pub field_63: u32,
    pub field_64: u32,
}
pub mod inner_65 {
    use super::*;
    #[cfg(any(feature = "feat3", feature = "feat7", feature = "feat7"))]
    pub enum Kind_66 {
        Variant_67,
    }
}
pub fn func_68() {
    match 0 {
        0 => {
            func_32();
        }
        _ => {}
    }
    #[cfg(any(feature = "feat4", feature = "feat6"))]
    let v_69 = ext_2();
    let v_70 = ext_0();
}
pub struct Handle_71;
impl Handle_71 {
    pub fn func_72() {
        pub fn func_73() {
            let v_74 = func_38();
        }
        println!("msg_75 {}", 1);
        let _ = 177;
    }
}
pub static COUNTER_76: u32 = 0;
pub fn func_77() {
    func_35();
    let v_78 = 12;
    pub fn func_79() {
        let v_80 = ext_2();
        pub fn func_81() {
            let v_82 = 710;
            pub fn func_72() {
                let _ = 981;
            }
            let v_83 = ext_0();
            println!("msg_84 {}", 1);
        }
        let _ = 78 + 53;
    }
}
pub fn func_73() {
    match 2 {
        0 => {
            println!("msg_85 {}", 1);
            func_35();
        }
        _ => {}
    }
    println!("msg_86 {}", 1);
    let v_87 = 996;
}
pub fn func_88() {
    let v_89 = func_7();
    println!("msg_90 {}", 1);
    let v_91 = ext_0();
    match 1 {
        0 => {
            match 2 {
                0 => {
                    if 2 > 10 {
                        let w_92 = 6;
                        let v_93 = 127;
                        let w_94 = 2;
                    } else {
                        println!("msg_95 {}", 1);
                        let w_96 = 6;
                    }
                    #[cfg(not(feature = "feat5"))]
                    ext_3();
                    ext_0();
                    match 3 {
                        0 => {
                            let w_97 = 4;
                            println!("msg_98 {}", 1);
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            if 0 > 10 {
                func_40();
            } else {
                let v_99 = func_81();
            }
            let v_100 = func_7();
            pub fn func_101() {
                let v_102 = 346;
                let v_103 = func_40();
            }
        }
        _ => {}
    }
}
pub static COUNTER_104: u32 = 0;
pub fn func_9() {
    #[cfg(feature = "feat0")]
    let v_105 = func_72();
    println!("msg_106 {}", 1);
    let v_107 = ext_0();
    func_73();
}
pub static COUNTER_108: u32 = 0;
pub fn func_79() {
    if 2 > 10 {
        #[cfg(feature = "feat8")]
        let v_109 = 62 + 90;
        let v_110 = ext_1();
        let v_111 = 427;
        match 1 {
            0 => {
                let _ = 328;
                let v_112 = 68 + 56;
                let v_113 = 28 + 18;
                match 4 {
                    0 => {
                        let v_114 = func_68();
                        let w_115 = 4;
                        ext_3();
                        #[cfg(feature = "feat7")]
                        func_9();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    } else {
        if 3 > 10 {
            if 9 > 10 {
                let v_116 = func_40();
                let w_117 = 7;
            } else {
                let v_118 = func_73();
                let v_119 = func_14();
                let w_120 = 8;
            }
            if 1 > 10 {
                println!("msg_121 {}", 1);
                println!("msg_122 {}", 1);
                let v_123 = func_35();
                let w_124 = 5;
            } else {
                println!("msg_125 {}", 1);
                let w_126 = 7;
                let w_127 = 2;
            }
            match 4 {
                0 => {
                    #[cfg(feature = "feat3")]
                    let v_128 = ext_1();
                    let w_129 = 1;
                    println!("msg_130 {}", 1);
                    println!("msg_131 {}", 1);
                }
                _ => {}
            }
        } else {
            let v_132 = func_32();
        }
        let v_133 = 798;
    }
    println!("msg_134 {}", 1);
    if 18 > 10 {
        if 19 > 10 {
            let v_135 = 53 + 36;
            pub fn func_136() {
                #[cfg(feature = "feat3")]
                ext_0();
                let w_137 = 0;
                let v_138 = 72 + 1;
                let v_139 = ext_1();
            }
            let v_140 = ext_2();
        } else {
            #[cfg(all(feature = "feat3", not(feature = "feat9")))]
            let v_141 = ext_3();
            let v_142 = 702;
        }
        #[cfg(feature = "feat4")]
        let v_143 = 566;
        match 0 {
            0 => {
                let v_144 = 78;
                if 18 > 10 {
                    let w_145 = 3;
                    let w_146 = 1;
                    let _ = 677;
                } else {
                    println!("msg_147 {}", 1);
                }
                ext_2();
                println!("msg_148 {}", 1);
            }
            _ => {}
        }
        if 0 > 10 {
            func_101();
        } else {
            if 17 > 10 {
                let w_149 = 6;
                let w_150 = 2;
                let w_151 = 8;
                let w_152 = 7;
            } else {
                let w_153 = 5;
                let _ = 89 + 80;
                let v_154 = func_14();
            }
            println!("msg_155 {}", 1);
            let v_156 = func_72();
        }
    } else {
        println!("msg_157 {}", 1);
        pub fn func_158() {
            if 16 > 10 {
                let _ = 18 + 1;
            } else {
                let w_159 = 2;
                let v_160 = ext_2();
                #[cfg(feature = "feat4")]
                ext_3();
                let v_161 = ext_2();
            }
            match 0 {
                0 => {
                    let v_162 = 458;
                    let v_163 = func_40();
                }
                _ => {}
            }
            let v_164 = 585;
            if 0 > 10 {
                let v_165 = func_9();
                let w_166 = 4;
                #[cfg(feature = "feat7")]
                ext_0();
            } else {
                func_38();
                println!("msg_167 {}", 1);
                let w_168 = 5;
                println!("msg_169 {}", 1);
            }
        }
        if 13 > 10 {
            #[cfg(all(feature = "feat1", not(feature = "feat5")))]
            let _ = 164;
        } else {
            pub fn func_170() {
                println!("msg_171 {}", 1);
                let w_172 = 4;
                println!("msg_173 {}", 1);
                #[cfg(feature = "feat8")]
                let v_174 = func_38();
            }
            pub fn func_175() {
                let v_176 = ext_2();
            }
            match 0 {
                0 => {
                    ext_2();
                }
                _ => {}
            }
            let v_177 = func_40();
        }
        let v_178 = 136;
    }
}
