pub enum Kind_175 {
    Variant_176,
}
#[cfg(feature = "m2_5")]
pub fn func_177() {
    if 6 > 10 {
        if 5 > 10 {
            pub fn func_178() {
                let v_179 = ext_2();
            }
            let v_180 = 724;
            let v_181 = func_104();
        } else {
            if 19 > 10 {
                let v_182 = func_99();
                let w_183 = 7;
                let _ = 62 + 87;
                println!("msg_184 {}", 1);
            } else {
                let w_185 = 1;
                func_178();
            }
            func_81();
            #[cfg(feature = "m2_8")]
            pub fn func_148() {
                let w_186 = 0;
                let v_187 = func_30();
            }
            let v_188 = func_92();
        }
        func_143();
        pub fn func_11() {
            match 0 {
                0 => {
                    let w_189 = 8;
                }
                _ => {}
            }
            let v_190 = func_11();
        }
        #[cfg(feature = "m2_7")]
        let v_191 = ext_3();
    } else {
        println!("msg_192 {}", 1);
        func_62();
    }
    let v_193 = func_35();
}
pub fn func_194() {
    func_10();
    if 6 > 10 {
        let _ = 41;
        let _ = 379;
        let v_195 = func_104();
    } else {
        let v_196 = 213;
        pub fn func_197() {
            let v_198 = func_81();
            match 3 {
                0 => {
                    let w_199 = 4;
                }
                _ => {}
            }
            func_47();
            let _ = 32 + 75;
        }
    }
}
#[cfg(any(feature = "m2_5", feature = "m2_0", feature = "m2_4"))]
pub fn func_200() {
    func_71();
}
#[cfg(any(feature = "m2_0", feature = "m2_3", feature = "m2_2"))]
pub fn func_201() {
    let _ = 872;
    let v_202 = ext_3();
}
pub fn func_203() {
    ext_1();
}
pub type Alias_204 = u64;
#[cfg(any(feature = "m2_8", feature = "m2_7"))]
pub fn func_205() {
    println!("msg_206 {}", 1);
    let v_207 = ext_1();
    let v_208 = func_201();
}
pub struct Handle_209;
impl Handle_209 {
    pub fn func_210() {
        let _ = 14 + 68;
        #[cfg(all(feature = "m2_5", not(feature = "m2_6")))]
        let v_211 = 229;
        ext_2();
    }
    pub fn func_11() {
        match 3 {
            0 => {
                let v_212 = 687;
                println!("msg_213 {}", 1);
                #[cfg(feature = "m2_7")]
                let _ = 59 + 94;
            }
            _ => {}
        }
    }
}
pub fn func_214() {
    let v_215 = func_28();
}
pub struct Handle_216;
impl Handle_216 {
    pub fn func_217() {
        println!("msg_218 {}", 1);
        #[cfg(feature = "m2_0")]
        let v_219 = 411;
        ext_0();
        #[cfg(any(feature = "m2_3", feature = "m2_0", feature = "m2_5"))]
        let v_220 = func_26();
    }
    pub fn func_221() {
        ext_0();
        println!("msg_222 {}", 1);
    }
}
use std::collections::HashMap;
pub struct Record_223 {
    pub field_224: u32,
    pub field_225: u32,
}
#[cfg(feature = "m2_3")]
pub fn func_226() {
    pub fn func_227() {
        let v_228 = ext_3();
        if 11 > 10 {
            let v_229 = func_205();
            let _ = 667;
        } else {
            #[cfg(feature = "m2_4")]
            let v_230 = func_140();
        }
        println!("msg_231 {}", 1);
    }
}
#[cfg(feature = "m2_0")]
pub fn func_232() {
    pub fn func_233() {
        println!("msg_234 {}", 1);
        let v_235 = 677;
    }
}
pub fn func_236() {
    let v_237 = 767;
    let v_238 = 29 + 78;
    #[cfg(feature = "m2_3")]
    ext_3();
    let _ = 511;
}
use std::collections::HashMap;
pub fn func_239() {
    let v_240 = 93 + 76;
}
pub fn func_241() {
    let v_242 = func_71();
    if 9 > 10 {
        pub fn func_26() {
            #[cfg(feature = "m2_8")]
            let _ = 675;
            pub fn func_217() {
                let w_243 = 0;
            }
        }
        let v_244 = ext_0();
        let v_245 = ext_1();
        if 13 > 10 {
            println!("msg_246 {}", 1);
        } else {
            println!("msg_247 {}", 1);
        }
    } else {
        func_233();
        if 13 > 10 {
            println!("msg_248 {}", 1);
            let _ = 36 + 1;
            ext_3();
            let v_249 = 72 + 13;
        } else {
            println!("msg_250 {}", 1);
            if 12 > 10 {
                #[cfg(feature = "m2_3")]
                func_217();
                let w_251 = 5;
                let v_252 = ext_2();
            } else {
                #[cfg(not(feature = "m2_1"))]
                let v_253 = 565;
                ext_0();
                println!("msg_254 {}", 1);
            }
        }
        let v_255 = ext_2();
        if 11 > 10 {
            #[cfg(feature = "m2_0")]
            func_35();
            let v_256 = 35 + 43;
        } else {
            let v_257 = func_62();
        }
    }
    let v_258 = func_11();
    let v_259 = ext_1();
}
pub fn func_260() {
    let v_261 = 44;
    match 3 {
        0 => {
            #[cfg(not(feature = "m2_1"))]
            let v_262 = 12 + 72;
            func_239();
            pub fn func_263() {
                let _ = 38 + 12;
                match 4 {
                    0 => {
                        #[cfg(any(feature = "m2_2", feature = "m2_5", feature = "m2_4"))]
                        let v_264 = 150;
                    }
                    _ => {}
                }
                #[cfg(all(feature = "m2_4", not(feature = "m2_6")))]
                let v_265 = func_76();
            }
            let v_266 = ext_1();
        }
        _ => {}
    }
    match 0 {
        0 => {
            let v_267 = func_177();
            #[cfg(feature = "m2_4")]
            let v_268 = 96 + 92;
            func_232();
        }
        _ => {}
    }
    let v_269 = ext_1();
}
pub fn func_270() {
    #[cfg(not(feature = "m2_1"))]
    let v_271 = ext_2();
    let v_272 = ext_0();
}
#[cfg(feature = "m2_2")]
pub enum Kind_273 {
    Variant_274,
    Variant_275,
    #[cfg(feature = "m2_5")]
    Variant_276,
    Variant_277,
}
#[cfg(not(feature = "m2_1"))]
pub enum Kind_278 {
    Variant_279,
    Variant_280,
    Variant_281,
}
use std::collections::HashMap;
pub const LIMIT_282: u32 = 203;
pub struct Record_283 {
    pub field_284: u32,
}
pub const LIMIT_285: u32 = 659;
pub enum Kind_286 {
    Variant_287,
    Variant_288,
    Variant_289,
}
pub fn func_290() {
    let v_291 = 40 + 45;
}
pub fn func_292() {
    let v_293 = func_35();
    println!("msg_294 {}", 1);
}
pub fn func_295() {
    let _ = 55 + 57;
    let _ = 110;
    let v_296 = ext_1();
}
pub enum Kind_297 {
    Variant_298,
    Variant_299,
    Variant_300,
    Variant_301,
}
pub struct Record_302 {
    pub field_303: u32,
    pub field_304: u32,
    #[cfg(any(feature = "m2_5", feature = "m2_2"))]
    pub field_305: u32,
    pub field_306: u32,
}
pub fn func_307() {
    match 0 {
        0 => {
            let v_308 = ext_2();
            match 2 {
                0 => {
                    println!("msg_309 {}", 1);
                    func_263();
                }
                _ => {}
            }
            println!("msg_310 {}", 1);
            let v_311 = func_295();
        }
        _ => {}
    }
    #[cfg(not(feature = "m2_6"))]
    let v_312 = 13 + 83;
    let v_313 = func_97();
    ext_2();
}
pub enum Kind_314 {
    #[cfg(feature = "m2_3")]
    Variant_315,
    Variant_316,
}
pub const LIMIT_317: u32 = ext_0();
pub fn func_318() {
    let v_319 = 742;
    let v_320 = 92 + 48;
    pub fn func_321() {
        func_292();
        let v_322 = 861;
        let v_323 = ext_0();
    }
    println!("msg_324 {}", 1);
}
pub fn func_325() {
    println!("msg_326 {}", 1);
}
pub type Alias_327 = u64;
pub type Alias_328 = u64;
pub type Alias_329 = u64;
pub enum Kind_330 {
    Variant_331,
    #[cfg(feature = "m2_7")]
    Variant_332,
    Variant_333,
    Variant_334,
}
pub fn func_335() {
    let v_336 = 67 + 72;
    func_62();
    #[cfg(not(feature = "m2_6"))]
    let v_337 = func_138();
}
pub static COUNTER_338: u32 = 0;
pub const LIMIT_339: u32 = func_321();
#[cfg(feature = "m2_3")]
pub const LIMIT_340: u32 = 852;
#[cfg(feature = "m2_5")]
pub fn func_341() {
    func_51();
    let v_342 = func_156();
    if 2 > 10 {
        let _ = 364;
        let v_343 = func_233();
        let v_344 = ext_1();
    } else {
        let v_345 = func_156();
        let v_346 = ext_2();
        match 2 {
            0 => {
                pub fn func_347() {
                    let v_348 = func_104();
                    let v_349 = 364;
                    let w_350 = 1;
                }
                ext_2();
                if 15 > 10 {
                    func_11();
                    println!("msg_351 {}", 1);
                    let v_352 = func_221();
                } else {
                    func_156();
                    func_226();
                }
            }
            _ => {}
        }
        if 11 > 10 {
            let v_353 = func_11();
            #[cfg(feature = "m2_8")]
            let v_354 = 334;
            if 9 > 10 {
                #[cfg(feature = "m2_8")]
                let v_355 = func_163();
                let v_356 = ext_1();
            } else {
                let w_357 = 7;
                let v_358 = 39 + 30;
                ext_1();
                let _ = 85 + 14;
            }
            if 4 > 10 {
                func_51();
                let v_359 = func_62();
                #[cfg(not(feature = "m2_6"))]
                let v_360 = 37 + 81;
            } else {
                #[cfg(not(feature = "m2_1"))]
                ext_1();
                #[cfg(all(feature = "m2_8", not(feature = "m2_1")))]
                let v_361 = 466;
                func_104();
                println!("msg_362 {}", 1);
            }
        } else {
            func_201();
            pub fn func_363() {
                let v_364 = 992;
                let _ = 19 + 89;
                let v_365 = 58 + 20;
            }
        }
    }
}
