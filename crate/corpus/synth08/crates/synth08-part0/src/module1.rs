pub mod inner_192 {
    use super::*;
    pub struct Record_193 {
        pub field_194: u32,
        pub field_195: u32,
        pub field_196: u32,
    }
    pub const LIMIT_197: u32 = ext_1();
    pub fn func_198() {
        let v_199 = func_74();
    }
}
pub type Alias_200 = u64;
pub enum Kind_201 {
    Variant_202,
}
pub fn func_203() {
    let v_204 = ext_1();
    let v_205 = 496;
    match 3 {
        0 => {
            func_147();
            let v_206 = func_132();
            let v_207 = func_130();
        }
        _ => {}
    }
}
#[cfg(not(feature = "m0_7"))]
use std::collections::HashMap;
pub type Alias_208 = u64;
pub struct Record_209 {
    pub field_210: u32,
    #[cfg(all(feature = "m0_5", not(feature = "m0_2")))]
    pub field_211: u32,
}
pub fn func_212() {
    ext_0();
    #[cfg(feature = "m0_6")]
    let v_213 = func_17();
}
#[cfg(feature = "m0_9")]
pub fn func_214() {
    let v_215 = func_107();
    #[cfg(feature = "m0_10")]
    let v_216 = 597;
    match 0 {
        0 => {
            let _ = 35 + 1;
            if 16 > 10 {
                println!("msg_217 {}", 1);
                pub fn func_12() {
                    let w_218 = 5;
                    println!("msg_219 {}", 1);
                }
            } else {
                let v_220 = func_23();
                let _ = 373;
                #[cfg(all(feature = "m0_10", not(feature = "m0_2")))]
                ext_2();
                let v_221 = 309;
            }
        }
        _ => {}
    }
}
pub enum Kind_222 {
    Variant_223,
    Variant_224,
}
#[cfg(any(feature = "m0_1", feature = "m0_3", feature = "m0_0"))]
use std::collections::HashMap;
pub type Alias_225 = u64;
pub struct Handle_226;
#[cfg(feature = "m0_1")]
impl Handle_226 {
    pub fn func_227() {
        pub fn func_228() {
            println!("msg_229 {}", 1);
            let v_230 = 45 + 42;
            ext_1();
            #[cfg(feature = "m0_10")]
            let v_231 = 84 + 12;
        }
    }
    pub fn func_232() {
        let _ = 52 + 26;
        pub fn func_233() {
            let v_234 = ext_0();
            pub fn func_235() {
                let w_236 = 6;
            }
            match 0 {
                0 => {
                    let w_237 = 6;
                    let v_238 = func_107();
                    #[cfg(feature = "m0_9")]
                    let v_239 = 82;
                }
                _ => {}
            }
            match 1 {
                0 => {
                    let w_240 = 8;
                    println!("msg_241 {}", 1);
                }
                _ => {}
            }
        }
        match 1 {
            0 => {
                let _ = 37;
                match 4 {
                    0 => {
                        #[cfg(not(feature = "m0_7"))]
                        func_34();
                        let v_242 = 661;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub type Alias_243 = u64;
pub struct Record_244 {
    pub field_245: u32,
}
pub fn func_246() {
    let v_247 = ext_2();
}
#[cfg(feature = "m0_0")]
pub mod inner_248 {
    use super::*;
    pub struct Handle_249;
    impl Handle_249 {
        #[cfg(feature = "m0_10")]
        pub fn func_250() {
            println!("msg_251 {}", 1);
        }
        pub fn func_252() {
            if 5 > 10 {
                let w_253 = 8;
            } else {
                let _ = 364;
                let v_254 = ext_1();
            }
            let _ = 976;
        }
    }
    pub fn func_255() {
        let v_256 = 394;
        pub fn func_107() {
            let v_257 = 79 + 19;
            println!("msg_258 {}", 1);
        }
    }
}
#[cfg(feature = "m0_1")]
pub fn func_259() {
    let _ = 31 + 46;
    let v_260 = ext_1();
    #[cfg(any(feature = "m0_3", feature = "m0_10", feature = "m0_10"))]
    let v_261 = 428;
    let v_262 = 963;
}
pub fn func_263() {
    #[cfg(not(feature = "m0_2"))]
    func_170();
    println!("msg_264 {}", 1);
    println!("msg_265 {}", 1);
}
pub type Alias_266 = u64;
pub static COUNTER_267: u32 = 0;
pub struct Record_268 {
    pub field_269: u32,
    pub field_270: u32,
}
pub fn func_271() {
    ext_2();
    func_198();
}
#[cfg(not(feature = "m0_4"))]
pub struct Record_272 {
    pub field_273: u32,
}
#[cfg(feature = "m0_1")]
pub fn func_274() {
    pub fn func_275() {
        #[cfg(feature = "m0_9")]
        pub fn func_276() {
            println!("msg_277 {}", 1);
            println!("msg_278 {}", 1);
            let v_279 = ext_2();
        }
        #[cfg(feature = "m0_5")]
        let v_280 = 27 + 38;
    }
    match 3 {
        0 => {
            let v_281 = 72 + 60;
            let _ = 831;
            println!("msg_282 {}", 1);
            #[cfg(all(feature = "m0_5", not(feature = "m0_7")))]
            let v_283 = func_80();
        }
        _ => {}
    }
    pub fn func_284() {
        match 4 {
            0 => {
                #[cfg(all(feature = "m0_6", not(feature = "m0_8")))]
                let v_285 = func_233();
            }
            _ => {}
        }
    }
    #[cfg(feature = "m0_10")]
    let _ = 296;
}
#[cfg(any(feature = "m0_3", feature = "m0_1", feature = "m0_10"))]
pub fn func_286() {
    let v_287 = 87 + 84;
    pub fn func_288() {
        func_17();
        pub fn func_289() {
            let v_290 = 0 + 87;
            println!("msg_291 {}", 1);
            if 11 > 10 {
                let v_292 = ext_1();
                let w_293 = 6;
                let v_294 = func_107();
            } else {
                let w_295 = 7;
                ext_1();
                let v_296 = 957;
            }
        }
    }
    let v_297 = func_12();
}
pub struct Record_298 {
    pub field_299: u32,
    pub field_300: u32,
    pub field_301: u32,
    pub field_302: u32,
}
pub enum Kind_303 {
    Variant_304,
}
pub fn func_274() {
    let _ = 93 + 9;
    let v_305 = func_198();
    match 2 {
        0 => {
            println!("msg_306 {}", 1);
            println!("msg_307 {}", 1);
        }
        _ => {}
    }
    func_80();
}
pub static COUNTER_308: u32 = 0;
pub fn func_309() {
    let _ = 55 + 53;
    println!("msg_310 {}", 1);
}
pub const LIMIT_311: u32 = func_80();
pub const LIMIT_312: u32 = 2 + 25;
pub fn func_313() {
    #[cfg(feature = "m0_5")]
    let v_314 = ext_3();
}
pub const LIMIT_315: u32 = func_8();
pub type Alias_316 = u64;
use std::collections::HashMap;
#[cfg(any(feature = "m0_3", feature = "m0_5", feature = "m0_5"))]
pub fn func_317() {
    println!("msg_318 {}", 1);
    if 14 > 10 {
        #[cfg(feature = "m0_6")]
        ext_3();
        let v_319 = 0 + 9;
    } else {
        #[cfg(all(feature = "m0_6", not(feature = "m0_8")))]
        pub fn func_320() {
            let v_321 = func_198();
            let _ = 73 + 83;
            if 7 > 10 {
                let v_322 = func_275();
                let v_323 = 72 + 50;
                let w_324 = 7;
            } else {
                func_286();
                let _ = 907;
            }
        }
    }
    if 10 > 10 {
        #[cfg(all(feature = "m0_6", not(feature = "m0_8")))]
        let v_325 = func_165();
        let v_326 = func_286();
    } else {
        match 0 {
            0 => {
                println!("msg_327 {}", 1);
                match 1 {
                    0 => {
                        let _ = 0;
                        println!("msg_328 {}", 1);
                        #[cfg(feature = "m0_6")]
                        let _ = 36 + 88;
                    }
                    _ => {}
                }
                let v_329 = 56;
            }
            _ => {}
        }
    }
    pub fn func_330() {
        func_284();
        let v_331 = func_246();
    }
}
pub fn func_332() {
    let _ = 420;
    let v_333 = 36 + 3;
    let v_334 = 472;
    pub fn func_335() {
        match 1 {
            0 => {
                println!("msg_336 {}", 1);
                let v_337 = func_76();
                if 13 > 10 {
                    let w_338 = 7;
                    ext_2();
                    let _ = 311;
                    let v_339 = func_61();
                } else {
                    let v_340 = 828;
                    let v_341 = func_246();
                }
            }
            _ => {}
        }
        let v_342 = 52 + 85;
        pub fn func_343() {
            pub fn func_344() {
                #[cfg(feature = "m0_3")]
                func_61();
                let w_345 = 8;
                println!("msg_346 {}", 1);
                let w_347 = 6;
            }
            let _ = 639;
            #[cfg(feature = "m0_9")]
            let v_348 = 38 + 13;
        }
        ext_1();
    }
}
pub fn func_349() {
    match 3 {
        0 => {
            let v_350 = 873;
            let v_351 = 18 + 88;
        }
        _ => {}
    }
    println!("msg_352 {}", 1);
}
pub struct Handle_353;
#[cfg(feature = "m0_0")]
impl Handle_353 {
    pub fn func_354() {
        func_170();
        func_343();
        let v_355 = 231;
    }
    pub fn func_113() {
        #[cfg(feature = "m0_6")]
        func_83();
        pub fn func_356() {
            let v_357 = func_187();
            println!("msg_358 {}", 1);
            #[cfg(feature = "m0_10")]
            let v_359 = ext_3();
        }
    }
}
