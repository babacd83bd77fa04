pub fn func_121() {
    let v_163 = 6 + 18;
    let v_164 = ext_2();
}
use std::collections::HashMap;
pub static COUNTER_165: u32 = 0;
pub fn func_166() {
    let v_167 = func_5();
    if 2 > 10 {
        let v_168 = func_5();
        if 11 > 10 {
            let v_169 = ext_0();
            println!("msg_170 {}", 1);
            let _ = 417;
            match 0 {
                0 => {
                    #[cfg(feature = "feat23")]
                    let v_171 = 240;
                    let w_172 = 7;
                }
                _ => {}
            }
        } else {
            println!("msg_173 {}", 1);
            let v_174 = 891;
        }
        ext_1();
        println!("msg_175 {}", 1);
    } else {
        let v_176 = ext_0();
        let _ = 45 + 94;
    }
}
pub fn func_177() {
    func_160();
    func_53();
    #[cfg(not(feature = "feat20"))]
    let _ = 724;
}
pub fn func_178() {
    match 3 {
        0 => {
            let _ = 82 + 21;
        }
        _ => {}
    }
    let _ = 35 + 8;
    let v_179 = 375;
    println!("msg_180 {}", 1);
}
pub struct Handle_181;
#[cfg(feature = "feat4")]
impl Handle_181 {
    pub fn func_182() {
        if 3 > 10 {
            let v_183 = 989;
            println!("msg_184 {}", 1);
            let v_185 = 230;
        } else {
            #[cfg(feature = "feat14")]
            let v_186 = func_134();
            println!("msg_187 {}", 1);
            let v_188 = ext_3();
        }
        println!("msg_189 {}", 1);
    }
}
pub enum Kind_190 {
    Variant_191,
    Variant_192,
}
#[cfg(all(feature = "feat11", not(feature = "feat22")))]
pub static COUNTER_193: u32 = 0;
pub type Alias_194 = u64;
#[cfg(feature = "feat23")]
pub struct Record_195 {
    pub field_196: u32,
    pub field_197: u32,
    pub field_198: u32,
}
pub static COUNTER_199: u32 = 0;
pub type Alias_200 = u64;
pub struct Record_201 {
    #[cfg(feature = "feat11")]
    pub field_202: u32,
    pub field_203: u32,
    #[cfg(feature = "feat0")]
    pub field_204: u32,
    pub field_205: u32,
}
pub fn func_206() {
    let _ = 64 + 26;
}
#[cfg(feature = "feat8")]
pub mod inner_207 {
    use super::*;
    #[cfg(feature = "feat21")]
    pub fn func_208() {
        println!("msg_209 {}", 1);
    }
    pub fn func_210() {
        match 4 {
            0 => {
                if 9 > 10 {
                    let w_211 = 5;
                    let v_212 = 98 + 28;
                } else {
                    let w_213 = 8;
                }
            }
            _ => {}
        }
        let v_214 = 24 + 86;
    }
    pub struct Handle_215;
    impl Handle_215 {
        pub fn func_216() {
            if 10 > 10 {
                func_143();
            } else {
                println!("msg_217 {}", 1);
                let w_218 = 5;
                let w_219 = 5;
                let w_220 = 0;
            }
        }
    }
}
use std::collections::HashMap;
#[cfg(feature = "feat16")]
pub const LIMIT_221: u32 = 57 + 65;
#[cfg(feature = "feat23")]
pub const LIMIT_222: u32 = ext_0();
pub fn func_223() {
    let v_224 = func_101();
    let v_225 = func_206();
    #[cfg(feature = "feat0")]
    func_182();
    let v_226 = 509;
}
pub fn func_227() {
    if 17 > 10 {
        if 14 > 10 {
            ext_3();
            let v_228 = ext_0();
            println!("msg_229 {}", 1);
            match 3 {
                0 => {
                    let _ = 455;
                    let w_230 = 7;
                    let v_231 = 62 + 22;
                }
                _ => {}
            }
        } else {
            #[cfg(feature = "feat2")]
            pub fn func_1() {
                let v_232 = 75 + 75;
                let v_233 = 69 + 88;
            }
        }
    } else {
        func_114();
        func_121();
        let v_234 = 17 + 38;
    }
    let v_235 = 977;
}
#[cfg(any(feature = "feat5", feature = "feat14", feature = "feat15"))]
pub mod inner_236 {
    use super::*;
    pub fn func_237() {
        if 19 > 10 {
            pub fn func_238() {
                let w_239 = 5;
                func_13();
                let v_240 = func_143();
                let w_241 = 3;
            }
            pub fn func_242() {
                #[cfg(feature = "feat19")]
                let v_243 = 93 + 9;
                func_223();
                func_142();
                let w_244 = 4;
            }
            let v_245 = ext_2();
            println!("msg_246 {}", 1);
        } else {
            let v_247 = func_9();
            if 6 > 10 {
                println!("msg_248 {}", 1);
            } else {
                func_13();
                let _ = 20 + 77;
                let v_249 = 520;
            }
            if 0 > 10 {
                let w_250 = 2;
                let v_251 = 148;
            } else {
                let w_252 = 2;
                let v_253 = ext_0();
            }
            println!("msg_254 {}", 1);
        }
        if 16 > 10 {
            let v_255 = 62 + 45;
            match 2 {
                0 => {
                    let v_256 = func_147();
                    let w_257 = 2;
                    let w_258 = 7;
                }
                _ => {}
            }
            #[cfg(any(feature = "feat16", feature = "feat16", feature = "feat19"))]
            let _ = 71 + 4;
            pub fn func_259() {
                #[cfg(all(feature = "feat19", not(feature = "feat13")))]
                let v_260 = ext_2();
                func_10();
            }
        } else {
            let v_261 = func_97();
            #[cfg(not(feature = "feat7"))]
            ext_0();
            let _ = 87 + 88;
        }
    }
}
pub fn func_24() {
    pub fn func_262() {
        println!("msg_263 {}", 1);
        match 3 {
            0 => {
                match 0 {
                    0 => {
                        let w_264 = 7;
                    }
                    _ => {}
                }
                let v_265 = 37 + 45;
                let _ = 93 + 72;
            }
            _ => {}
        }
        if 6 > 10 {
            if 3 > 10 {
                println!("msg_266 {}", 1);
            } else {
                let w_267 = 5;
                let w_268 = 7;
                ext_0();
                #[cfg(feature = "feat11")]
                let v_269 = func_1();
            }
            let v_270 = ext_0();
        } else {
            let v_271 = 334;
            let v_272 = 792;
            println!("msg_273 {}", 1);
        }
    }
    let v_274 = func_79();
    pub fn func_275() {
        ext_1();
    }
}
pub type Alias_276 = u64;
use std::collections::HashMap;
use std::collections::HashMap;
pub const LIMIT_277: u32 = func_121();
#[cfg(feature = "feat8")]
pub mod inner_278 {
    use super::*;
    pub fn func_279() {
        pub fn func_280() {
            let _ = 717;
            println!("msg_281 {}", 1);
            if 1 > 10 {
                let w_282 = 0;
                #[cfg(feature = "feat23")]
                func_147();
                #[cfg(feature = "feat11")]
                ext_2();
                #[cfg(not(feature = "feat9"))]
                func_60();
            } else {
                #[cfg(any(feature = "feat12", feature = "feat16", feature = "feat15"))]
                func_29();
                let w_283 = 7;
            }
            let v_284 = func_101();
        }
    }
    #[cfg(any(feature = "feat19", feature = "feat14", feature = "feat14"))]
    pub mod inner_285 {
        use super::*;
        pub fn func_286() {
            let v_287 = 14 + 32;
            let v_288 = func_101();
            #[cfg(any(feature = "feat23", feature = "feat21", feature = "feat21"))]
            pub fn func_134() {
                let v_289 = 53 + 83;
                let _ = 68;
                let w_290 = 3;
            }
        }
    }
    #[cfg(feature = "feat11")]
    pub fn func_291() {
        let v_292 = func_83();
        println!("msg_293 {}", 1);
        pub fn func_121() {
            #[cfg(feature = "feat19")]
            let v_294 = 58 + 51;
        }
        if 19 > 10 {
            println!("msg_295 {}", 1);
            let v_296 = 35 + 5;
            println!("msg_297 {}", 1);
        } else {
            let v_298 = func_79();
            let v_299 = func_275();
            let v_300 = func_29();
        }
    }
}
pub struct Record_301 {
    pub field_302: u32,
    pub field_303: u32,
    #[cfg(any(feature = "feat0", feature = "feat23"))]
    pub field_304: u32,
}
use std::collections::HashMap;
pub struct Handle_305;
impl Handle_305 {
    pub fn func_306() {
        let _ = 366;
    }
}
pub fn func_307() {
    let _ = 55 + 73;
    let v_308 = ext_3();
    match 2 {
        0 => {
            if 17 > 10 {
                let v_309 = 47 + 94;
                #[cfg(feature = "feat21")]
                ext_0();
                let v_310 = ext_3();
            } else {
                let v_311 = func_107();
                let v_312 = func_53();
                func_147();
            }
            let v_313 = ext_0();
            println!("msg_314 {}", 1);
            let v_315 = ext_2();
        }
        _ => {}
    }
    let v_316 = ext_3();
}
use std::collections::HashMap;
pub static COUNTER_317: u32 = 0;
#[cfg(any(feature = "feat14", feature = "feat12"))]
pub fn func_318() {
    let _ = 24 + 98;
    pub fn func_319() {
        let _ = 611;
        println!("msg_320 {}", 1);
        println!("msg_321 {}", 1);
        let v_322 = 53;
    }
    #[cfg(not(feature = "feat22"))]
    let _ = 25 + 84;
    let v_323 = ext_0();
}
