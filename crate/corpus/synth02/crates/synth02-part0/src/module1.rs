#[cfg(all(feature = "m0_0", not(feature = "m0_2")))]
pub fn func_136() {
    let v_137 = ext_1();
    match 4 {
        0 => {
            let v_138 = ext_3();
            func_65();
        }
        _ => {}
    }
    let v_139 = 743;
}
pub fn func_140() {
    let v_141 = ext_1();
    let v_142 = func_31();
}
pub const LIMIT_143: u32 = ext_2();
pub enum Kind_144 {
    Variant_145,
    #[cfg(feature = "m0_6")]
    Variant_146,
    Variant_147,
    Variant_148,
}
pub enum Kind_149 {
    Variant_150,
    Variant_151,
}
pub mod inner_152 {
    use super::*;
    pub fn func_153() {
        #[cfg(all(feature = "m0_6", not(feature = "m0_2")))]
        ext_1();
        ext_3();
        let v_154 = 82 + 35;
        let v_155 = func_113();
    }
    pub fn func_153() {
        let v_156 = func_31();
        println!("msg_157 {}", 1);
    }
}
pub fn func_116() {
    println!("msg_158 {}", 1);
    func_31();
}
pub struct Handle_159;
#[cfg(feature = "m0_5")]
impl Handle_159 {
    #[cfg(any(feature = "m0_6", feature = "m0_6"))]
    pub fn func_160() {
        pub fn func_161() {
            pub fn func_162() {
                let w_163 = 1;
                let v_164 = ext_2();
                let v_165 = ext_3();
                let v_166 = func_24();
            }
            let v_167 = func_113();
            let v_168 = func_100();
            let v_169 = ext_0();
        }
        if 13 > 10 {
            if 14 > 10 {
                let v_170 = func_136();
            } else {
                let v_171 = 82 + 88;
            }
            let v_172 = func_36();
            let v_173 = func_95();
        } else {
            func_24();
            pub fn func_174() {
                let w_175 = 2;
                let v_176 = 902;
                func_134();
            }
        }
    }
}
pub fn func_61() {
    #[cfg(feature = "m0_0")]
    let v_177 = ext_2();
    #[cfg(feature = "m0_3")]
    let v_178 = func_113();
}
pub const LIMIT_179: u32 = ext_2();
pub fn func_180() {
    let v_181 = 25 + 43;
    func_134();
    let v_182 = func_105();
    let v_183 = func_107();
}
pub fn func_184() {
    func_22();
    #[cfg(feature = "m0_1")]
    ext_0();
    #[cfg(feature = "m0_5")]
    let v_185 = func_30();
}
pub enum Kind_186 {
    Variant_187,
    Variant_188,
    Variant_189,
}
pub enum Kind_190 {
    Variant_191,
    Variant_192,
    Variant_193,
}
#[cfg(feature = "m0_3")]
pub const LIMIT_194: u32 = func_174();
#[cfg(all(feature = "m0_5", not(feature = "m0_2")))]
pub fn func_195() {
    #[cfg(not(feature = "m0_2"))]
    let v_196 = ext_2();
    if 16 > 10 {
        ext_0();
        let v_197 = 13 + 76;
        let v_198 = ext_2();
        let v_199 = 168;
    } else {
        println!("msg_200 {}", 1);
        println!("msg_201 {}", 1);
    }
    match 4 {
        0 => {
            println!("msg_202 {}", 1);
            match 4 {
                0 => {
                    match 1 {
                        0 => {
                            let w_203 = 3;
                            let _ = 59;
                        }
                        _ => {}
                    }
                    pub fn func_204() {
                        let v_205 = 655;
                        let v_206 = func_114();
                        ext_0();
                        let v_207 = 89 + 22;
                    }
                    let v_208 = 93 + 4;
                    #[cfg(not(feature = "m0_2"))]
                    let v_209 = 330;
                }
                _ => {}
            }
            func_107();
        }
        _ => {}
    }
    if 5 > 10 {
        if 0 > 10 {
            let v_210 = func_153();
            func_116();
            if 9 > 10 {
                println!("msg_211 {}", 1);
                let w_212 = 8;
                ext_3();
                let v_213 = ext_0();
            } else {
                let _ = 559;
                let v_214 = ext_1();
                let v_215 = func_161();
                let w_216 = 3;
            }
            let v_217 = func_8();
        } else {
            let v_218 = 676;
            let _ = 223;
        }
        pub fn func_11() {
            let v_219 = 23 + 39;
            func_24();
            if 12 > 10 {
                let v_220 = func_204();
                let _ = 85 + 26;
            } else {
                let _ = 52 + 61;
                let v_221 = 4 + 64;
                let w_222 = 1;
            }
            #[cfg(not(feature = "m0_2"))]
            func_31();
        }
        match 3 {
            0 => {
                println!("msg_223 {}", 1);
                func_160();
                func_11();
                pub fn func_224() {
                    let v_225 = ext_2();
                    let w_226 = 0;
                    let w_227 = 0;
                    let v_228 = func_153();
                }
            }
            _ => {}
        }
    } else {
        match 0 {
            0 => {
                let v_229 = func_140();
                let _ = 232;
                match 2 {
                    0 => {
                        func_95();
                        let v_230 = func_161();
                    }
                    _ => {}
                }
                let v_231 = 55 + 88;
            }
            _ => {}
        }
        ext_3();
        let v_232 = 48 + 64;
        match 4 {
            0 => {
                println!("msg_233 {}", 1);
                pub fn func_234() {
                    let v_235 = func_30();
                    let _ = 3 + 85;
                }
                let v_236 = func_136();
                let v_237 = 51 + 14;
            }
            _ => {}
        }
    }
}
pub enum Kind_238 {
    Variant_239,
    Variant_240,
    Variant_241,
    #[cfg(not(feature = "m0_2"))]
    Variant_242,
}
pub struct Record_243 {
    pub field_244: u32,
    pub field_245: u32,
    pub field_246: u32,
}
pub fn func_247() {
    #[cfg(any(feature = "m0_0", feature = "m0_1", feature = "m0_5"))]
    let v_248 = func_234();
    pub fn func_249() {
        println!("msg_250 {}", 1);
        let v_251 = 16 + 14;
        pub fn func_252() {
            match 4 {
                0 => {
                    func_8();
                }
                _ => {}
            }
            let _ = 73 + 9;
            let v_253 = ext_0();
        }
    }
    if 4 > 10 {
        if 6 > 10 {
            println!("msg_254 {}", 1);
            println!("msg_255 {}", 1);
            match 2 {
                0 => {
                    let v_256 = func_234();
                    let w_257 = 6;
                    ext_3();
                    let _ = 56 + 52;
                }
                _ => {}
            }
        } else {
            pub fn func_258() {
                #[cfg(any(feature = "m0_4", feature = "m0_3"))]
                func_8();
            }
            let v_259 = 619;
            #[cfg(feature = "m0_4")]
            let v_260 = 628;
            let _ = 50 + 4;
        }
    } else {
        func_65();
        func_22();
        let v_261 = func_1();
    }
    #[cfg(not(feature = "m0_2"))]
    let _ = 5 + 62;
}
pub fn func_262() {
    match 1 {
        0 => {
            let v_263 = func_234();
        }
        _ => {}
    }
    #[cfg(all(feature = "m0_5", not(feature = "m0_2")))]
    let v_264 = 6 + 72;
}
pub fn func_265() {
    match 2 {
        0 => {
            #[cfg(feature = "m0_1")]
            let v_266 = func_134();
            match 4 {
                0 => {
                    let v_267 = 76 + 85;
                    func_132();
                }
                _ => {}
            }
        }
        _ => {}
    }
    if 11 > 10 {
        let v_268 = 89 + 48;
        func_114();
        #[cfg(feature = "m0_4")]
        let _ = 49 + 31;
        let v_269 = 6 + 11;
    } else {
        ext_0();
        let v_270 = ext_1();
    }
    let v_271 = func_121();
}
