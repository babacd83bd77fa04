pub struct Record_101 {
    pub field_102: u32,
    pub field_103: u32,
    #[cfg(feature = "feat10")]
    pub field_104: u32,
}
pub fn func_105() {
    #[cfg(feature = "feat12")]
    let v_106 = func_9();
}
pub fn func_107() {
    match 4 {
        0 => {
            func_105();
            println!("msg_108 {}", 1);
            if 11 > 10 {
                let v_109 = ext_0();
                ext_0();
                pub fn func_110() {
                    let v_111 = 76 + 70;
                    let v_112 = 793;
                    ext_0();
                    let w_113 = 8;
                }
            } else {
                func_38();
            }
        }
        _ => {}
    }
    let v_114 = 566;
    #[cfg(all(feature = "feat1", not(feature = "feat3")))]
    pub fn func_48() {
        let v_115 = ext_0();
    }
}
pub fn func_116() {
    let v_117 = 399;
    let _ = 542;
    match 0 {
        0 => {
            println!("msg_118 {}", 1);
        }
        _ => {}
    }
}
pub fn func_119() {
    println!("msg_120 {}", 1);
    func_116();
}
pub fn func_121() {
    let v_122 = 208;
    let v_123 = 90 + 0;
    match 0 {
        0 => {
            pub fn func_124() {
                if 19 > 10 {
                    #[cfg(not(feature = "feat11"))]
                    let v_125 = 558;
                    let w_126 = 7;
                    println!("msg_127 {}", 1);
                    println!("msg_128 {}", 1);
                } else {
                    let w_129 = 0;
                    let v_130 = func_116();
                    func_70();
                    let v_131 = ext_3();
                }
                let v_132 = ext_1();
            }
            if 5 > 10 {
                let v_133 = 138;
                println!("msg_134 {}", 1);
            } else {
                ext_0();
                let v_135 = 39 + 48;
                println!("msg_136 {}", 1);
                println!("msg_137 {}", 1);
            }
            pub fn func_138() {
                let v_139 = ext_2();
                println!("msg_140 {}", 1);
                #[cfg(feature = "feat8")]
                let v_141 = 19 + 48;
            }
        }
        _ => {}
    }
}
pub fn func_142() {
    pub fn func_143() {
        let v_144 = func_48();
        let _ = 45 + 62;
        pub fn func_145() {
            let v_146 = ext_3();
            pub fn func_147() {
                let v_148 = 462;
            }
        }
        let v_149 = 56 + 61;
    }
    let v_150 = func_48();
    let v_151 = 59 + 90;
}
pub type Alias_152 = u64;
pub struct Handle_153;
#[cfg(not(feature = "feat3"))]
impl Handle_153 {
    pub fn func_154() {
        pub fn func_155() {
            let v_156 = ext_0();
            println!("msg_157 {}", 1);
            func_35();
        }
        let v_158 = func_35();
        ext_2();
        pub fn func_159() {
            pub fn func_160() {
                let v_161 = func_11();
                let v_162 = func_35();
                let w_163 = 5;
                let w_164 = 1;
            }
            println!("msg_165 {}", 1);
            let v_166 = 665;
        }
    }
    pub fn func_167() {
        let _ = 68 + 31;
        if 17 > 10 {
            println!("msg_168 {}", 1);
            let v_169 = ext_0();
        } else {
            match 4 {
                0 => {
                    println!("msg_170 {}", 1);
                    println!("msg_171 {}", 1);
                    println!("msg_172 {}", 1);
                }
                _ => {}
            }
        }
    }
}
use std::collections::HashMap;
pub struct Record_173 {
    pub field_174: u32,
    pub field_175: u32,
    pub field_176: u32,
}
pub type Alias_177 = u64;
pub struct Handle_178;
impl Handle_178 {
    pub fn func_179() {
        let v_180 = 48 + 2;
        pub fn func_167() {
            let _ = 98 + 57;
            func_40();
            println!("msg_181 {}", 1);
            ext_1();
        }
        match 1 {
            0 => {
                if 13 > 10 {
                    let w_182 = 8;
                    let v_183 = 84 + 55;
                    println!("msg_184 {}", 1);
                    func_160();
                } else {
                    let v_185 = func_121();
                    let v_186 = ext_1();
                    let v_187 = 51 + 52;
                    let v_188 = func_1();
                }
                println!("msg_189 {}", 1);
                let v_190 = 972;
                let v_191 = 13 + 13;
            }
            _ => {}
        }
        let v_192 = func_31();
    }
    pub fn func_193() {
        let v_194 = 22 + 48;
        if 5 > 10 {
            println!("msg_195 {}", 1);
            println!("msg_196 {}", 1);
        } else {
            func_29();
            pub fn func_197() {
                println!("msg_198 {}", 1);
                println!("msg_199 {}", 1);
            }
        }
        let v_200 = 949;
    }
}
