pub fn func_147() {
    match 2 {
        0 => {
            func_53();
            println!("msg_148 {}", 1);
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub fn func_149() {
    if 14 > 10 {
        let _ = 17 + 0;
        let v_150 = 150;
    } else {
        func_99();
        #[cfg(feature = "feat22")]
        func_118();
        println!("msg_151 {}", 1);
        let v_152 = 259;
    }
    let _ = 88 + 67;
    let v_153 = func_1();
}
pub mod inner_154 {
    use super::*;
    pub fn func_155() {
        pub fn func_156() {
            let v_157 = func_66();
            let v_158 = ext_3();
            let _ = 135;
            let v_159 = func_92();
        }
        if 7 > 10 {
            ext_2();
            #[cfg(not(feature = "feat25"))]
            let v_160 = 451;
            match 3 {
                0 => {
                    let v_161 = ext_1();
                    let w_162 = 7;
                    println!("msg_163 {}", 1);
                }
                _ => {}
            }
        } else {
            let _ = 896;
            let v_164 = func_1();
        }
    }
    #[cfg(feature = "feat3")]
    pub fn func_165() {
        let _ = 428;
        match 1 {
            0 => {
                ext_3();
                func_110();
            }
            _ => {}
        }
    }
}
pub fn func_166() {
    #[cfg(feature = "feat10")]
    func_165();
    #[cfg(feature = "feat17")]
    let v_167 = func_165();
    ext_3();
}
pub fn func_168() {
    let v_169 = 69 + 59;
}
pub fn func_170() {
    if 4 > 10 {
        match 2 {
            0 => {
                pub fn func_147() {
                    println!("msg_171 {}", 1);
                    #[cfg(feature = "feat6")]
                    func_124();
                    let _ = 4 + 31;
                }
            }
            _ => {}
        }
        pub fn func_172() {
            ext_3();
            #[cfg(feature = "feat13")]
            let v_173 = 135;
            let v_174 = func_66();
        }
        match 2 {
            0 => {
                let v_175 = func_118();
            }
            _ => {}
        }
        ext_1();
    } else {
        #[cfg(all(feature = "feat21", not(feature = "feat16")))]
        let _ = 97 + 44;
        let v_176 = 59 + 5;
        #[cfg(feature = "feat3")]
        pub fn func_177() {
            #[cfg(feature = "feat19")]
            let v_178 = 202;
            ext_1();
            let v_179 = 637;
        }
    }
}
pub const LIMIT_180: u32 = 67 + 21;
#[cfg(feature = "feat18")]
pub fn func_140() {
    let v_181 = func_165();
}
pub struct Handle_182;
#[cfg(feature = "feat6")]
impl Handle_182 {
    pub fn func_183() {
        match 0 {
            0 => {
                pub fn func_184() {
                    let _ = 399;
                }
                match 0 {
                    0 => {
                        let v_185 = func_184();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
#[cfg(any(feature = "feat6", feature = "feat22"))]
pub type Alias_186 = u64;
#[cfg(feature = "feat3")]
pub enum Kind_187 {
    Variant_188,
}
pub fn func_189() {
    let v_190 = 66 + 94;
    let v_191 = 143;
    #[cfg(all(feature = "feat3", not(feature = "feat5")))]
    let v_192 = 394;
}
pub fn func_193() {
    #[cfg(feature = "feat8")]
    let _ = 41 + 0;
    let _ = 40 + 38;
}
pub type Alias_194 = u64;
pub fn func_195() {
    func_106();
}
pub fn func_196() {
    let v_197 = ext_2();
    let _ = 181;
    println!("msg_198 {}", 1);
}
pub struct Record_199 {
    pub field_200: u32,
    pub field_201: u32,
}
pub fn func_202() {
    #[cfg(feature = "feat3")]
    pub fn func_203() {
        println!("msg_204 {}", 1);
        let v_205 = 67 + 59;
        pub fn func_206() {
            let v_207 = func_195();
            #[cfg(feature = "feat23")]
            ext_1();
            ext_1();
        }
        match 0 {
            0 => {
                match 4 {
                    0 => {
                        let v_208 = 61 + 58;
                        let w_209 = 3;
                        let _ = 618;
                        func_149();
                    }
                    _ => {}
                }
                pub fn func_210() {
                    let v_211 = 93 + 83;
                }
                let v_212 = func_206();
            }
            _ => {}
        }
    }
    pub fn func_213() {
        pub fn func_214() {
            #[cfg(any(feature = "feat0", feature = "feat21", feature = "feat12"))]
            let v_215 = ext_0();
            match 2 {
                0 => {
                    println!("msg_216 {}", 1);
                    func_147();
                    let v_217 = 18 + 55;
                    let v_218 = func_195();
                }
                _ => {}
            }
        }
        pub fn func_219() {
            ext_2();
        }
        let _ = 61 + 95;
        match 3 {
            0 => {
                #[cfg(feature = "feat0")]
                let v_220 = func_147();
                func_53();
                let v_221 = 32;
            }
            _ => {}
        }
    }
}
pub fn func_222() {
    #[cfg(not(feature = "feat11"))]
    let v_223 = func_44();
    let _ = 30 + 23;
}
pub fn func_224() {
    if 18 > 10 {
        println!("msg_225 {}", 1);
        println!("msg_226 {}", 1);
        let v_227 = func_168();
        println!("msg_228 {}", 1);
    } else {
        #[cfg(any(feature = "feat23", feature = "feat4"))]
        ext_1();
    }
}
pub enum Kind_229 {
    Variant_230,
    Variant_231,
}
pub struct Record_232 {
    pub field_233: u32,
    pub field_234: u32,
    pub field_235: u32,
}
pub fn func_236() {
    let _ = 74 + 32;
    let _ = 974;
    pub fn func_237() {
        let v_238 = func_118();
        if 19 > 10 {
            let v_239 = 68 + 92;
            func_53();
            if 3 > 10 {
                let w_240 = 2;
                let w_241 = 0;
                func_196();
            } else {
                let w_242 = 1;
                let v_243 = func_118();
                let v_244 = 63;
                let v_245 = func_219();
            }
            let v_246 = ext_2();
        } else {
            #[cfg(feature = "feat13")]
            let v_247 = 30 + 43;
            let v_248 = func_189();
        }
    }
    func_206();
}
#[cfg(not(feature = "feat16"))]
pub fn func_249() {
    if 10 > 10 {
        if 9 > 10 {
            let v_250 = 74 + 96;
            let v_251 = ext_2();
            let v_252 = 978;
        } else {
            let v_253 = ext_3();
        }
        pub fn func_254() {
            let _ = 873;
            ext_1();
            let v_255 = func_166();
            let v_256 = 528;
        }
        let v_257 = 59 + 30;
        let v_258 = 1 + 75;
    } else {
        match 2 {
            0 => {
                func_149();
                if 12 > 10 {
                    let _ = 148;
                    let w_259 = 2;
                } else {
                    let _ = 597;
                }
            }
            _ => {}
        }
        let v_260 = func_74();
    }
    let v_261 = ext_1();
    let _ = 6 + 6;
    let v_262 = 14;
}
pub enum Kind_263 {
    Variant_264,
    Variant_265,
    Variant_266,
}
pub fn func_32() {
    let v_267 = func_140();
}
#[cfg(any(feature = "feat4", feature = "feat3"))]
pub struct Record_268 {
    pub field_269: u32,
    pub field_270: u32,
}
#[cfg(feature = "feat2")]
pub fn func_271() {
    let _ = 444;
    #[cfg(any(feature = "feat18", feature = "feat21", feature = "feat18"))]
    func_206();
    let v_272 = ext_1();
}
pub fn func_195() {
    println!("msg_273 {}", 1);
    func_166();
    pub fn func_274() {
        let v_275 = 50 + 11;
        ext_2();
    }
    pub fn func_149() {
        pub fn func_276() {
            #[cfg(any(feature = "feat9", feature = "feat17"))]
            pub fn func_277() {
                let v_278 = 228;
                let w_279 = 6;
            }
        }
    }
}
pub fn func_280() {
    println!("msg_281 {}", 1);
    let v_282 = func_166();
}
pub fn func_283() {
    pub fn func_284() {
        pub fn func_285() {
            println!("msg_286 {}", 1);
            #[cfg(feature = "feat3")]
            let v_287 = func_64();
            let v_288 = 29 + 3;
        }
        let _ = 523;
        match 0 {
            0 => {
                #[cfg(feature = "feat10")]
                pub fn func_289() {
                    let w_290 = 4;
                    let w_291 = 3;
                    let v_292 = func_106();
                }
            }
            _ => {}
        }
        let _ = 38 + 76;
    }
    if 16 > 10 {
        let _ = 910;
        pub fn func_293() {
            let v_294 = 120;
            #[cfg(feature = "feat8")]
            let v_295 = ext_3();
            #[cfg(feature = "feat10")]
            let v_296 = 83 + 42;
        }
    } else {
        if 5 > 10 {
            if 15 > 10 {
                #[cfg(any(feature = "feat0", feature = "feat19"))]
                ext_1();
                let v_297 = ext_1();
                let w_298 = 7;
            } else {
                let _ = 264;
            }
        } else {
            println!("msg_299 {}", 1);
            func_1();
            let v_300 = func_277();
        }
        if 15 > 10 {
            #[cfg(any(feature = "feat23", feature = "feat22", feature = "feat0"))]
            let v_301 = 49 + 71;
            #[cfg(not(feature = "feat24"))]
            pub fn func_302() {
                let v_303 = ext_2();
                let _ = 75 + 8;
                let w_304 = 6;
            }
            let v_305 = func_66();
        } else {
            let v_306 = 8 + 86;
            ext_0();
            pub fn func_307() {
                let w_308 = 0;
                let w_309 = 4;
                let w_310 = 7;
            }
        }
        let v_311 = 60 + 7;
    }
    ext_0();
    #[cfg(feature = "feat6")]
    let v_312 = func_277();
}
