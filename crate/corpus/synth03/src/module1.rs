#[cfg(not(feature = "feat11"))]
pub fn func_201() {
    match 4 {
        0 => {
            ext_1();
        }
        _ => {}
    }
    let _ = 955;
    match 0 {
        0 => {
            let v_202 = 211;
            let v_203 = 10 + 81;
            let v_204 = ext_3();
        }
        _ => {}
    }
}
pub enum Kind_205 {
    Variant_206,
    #[cfg(feature = "feat4")]
    Variant_207,
}
#[cfg(feature = "feat15")]
pub mod inner_208 {
    use super::*;
    pub fn func_23() {
        match 0 {
            0 => {
                let v_209 = func_116();
            }
            _ => {}
        }
        let v_210 = func_107();
        match 4 {
            0 => {
                let v_211 = 847;
                let v_212 = 595;
                println!("msg_213 {}", 1);
                ext_2();
            }
            _ => {}
        }
        if 12 > 10 {
            match 3 {
                0 => {
                    println!("msg_214 {}", 1);
                }
                _ => {}
            }
        } else {
            let v_215 = 34 + 37;
            let _ = 794;
        }
    }
    pub struct Record_216 {
        pub field_217: u32,
        #[cfg(feature = "feat16")]
        pub field_218: u32,
    }
}
pub struct Record_219 {
    pub field_220: u32,
    #[cfg(all(feature = "feat13", not(feature = "feat11")))]
    pub field_221: u32,
}
#[cfg(not(feature = "feat11"))]
use std::collections::HashMap;
pub type Alias_222 = u64;
pub fn func_223() {
    let v_224 = 982;
    let v_225 = func_193();
}
use std::collections::HashMap;
use std::collections::HashMap;
pub enum Kind_226 {
    Variant_227,
    Variant_228,
}
#[cfg(feature = "feat0")]
pub type Alias_229 = u64;
use std::collections::HashMap;
pub fn func_230() {
    let v_231 = 50 + 61;
    if 1 > 10 {
        println!("msg_232 {}", 1);
    } else {
        if 15 > 10 {
            #[cfg(feature = "feat9")]
            let v_233 = 329;
        } else {
            println!("msg_234 {}", 1);
            #[cfg(all(feature = "feat12", not(feature = "feat11")))]
            let v_235 = 143;
        }
        let v_236 = 917;
        if 1 > 10 {
            #[cfg(feature = "feat0")]
            pub fn func_121() {
                let _ = 294;
            }
            println!("msg_237 {}", 1);
            let v_238 = func_23();
        } else {
            #[cfg(any(feature = "feat8", feature = "feat16", feature = "feat6"))]
            pub fn func_239() {
                let v_240 = func_121();
                println!("msg_241 {}", 1);
            }
        }
    }
    ext_1();
}
#[cfg(feature = "feat10")]
pub fn func_242() {
    #[cfg(not(feature = "feat11"))]
    pub fn func_243() {
        println!("msg_244 {}", 1);
        let v_245 = 80 + 66;
        let v_246 = func_197();
    }
    println!("msg_247 {}", 1);
    #[cfg(feature = "feat14")]
    let v_248 = 866;
}
pub enum Kind_249 {
    #[cfg(feature = "feat14")]
    Variant_250,
    Variant_251,
}
pub mod inner_252 {
    use super::*;
    pub fn func_66() {
        ext_0();
        ext_1();
        let v_253 = 402;
        let _ = 416;
    }
}
pub fn func_254() {
    match 3 {
        0 => {
            let _ = 429;
            let v_255 = 30 + 83;
            ext_1();
        }
        _ => {}
    }
    pub fn func_256() {
        match 1 {
            0 => {
                let v_257 = func_230();
                match 3 {
                    0 => {
                        let v_258 = func_105();
                        let w_259 = 1;
                        ext_0();
                        let _ = 40 + 50;
                    }
                    _ => {}
                }
                let v_260 = func_124();
                let v_261 = 390;
            }
            _ => {}
        }
        ext_1();
    }
}
pub fn func_138() {
    let v_262 = 200;
}
pub type Alias_263 = u64;
pub fn func_264() {
    if 16 > 10 {
        let v_265 = 392;
        println!("msg_266 {}", 1);
        #[cfg(all(feature = "feat8", not(feature = "feat3")))]
        let v_267 = func_155();
    } else {
        println!("msg_268 {}", 1);
        let v_269 = func_91();
        println!("msg_270 {}", 1);
        if 10 > 10 {
            println!("msg_271 {}", 1);
        } else {
            let v_272 = ext_3();
            pub fn func_273() {
                let w_274 = 3;
                let v_275 = 523;
                let v_276 = ext_2();
            }
            if 9 > 10 {
                let v_277 = func_155();
                let w_278 = 0;
                let w_279 = 8;
                let w_280 = 8;
            } else {
                let v_281 = 579;
                let v_282 = func_230();
            }
            let _ = 48 + 56;
        }
    }
}
pub fn func_283() {
    func_242();
    let v_284 = func_138();
    pub fn func_285() {
        #[cfg(not(feature = "feat3"))]
        let v_286 = 40 + 71;
        let _ = 5 + 69;
        let v_287 = 87 + 79;
        pub fn func_288() {
            if 19 > 10 {
                let w_289 = 3;
                func_147();
                #[cfg(not(feature = "feat3"))]
                let v_290 = 10 + 24;
                println!("msg_291 {}", 1);
            } else {
                func_159();
                let w_292 = 0;
                func_155();
                let w_293 = 5;
            }
            let v_294 = func_242();
            #[cfg(feature = "feat13")]
            pub fn func_142() {
                let w_295 = 8;
                let _ = 58 + 45;
                let w_296 = 6;
            }
        }
    }
}
#[cfg(feature = "feat5")]
pub fn func_297() {
    let v_298 = func_147();
    let v_299 = func_193();
}
pub mod inner_300 {
    use super::*;
    pub fn func_301() {
        if 1 > 10 {
            let v_302 = func_124();
            println!("msg_303 {}", 1);
            #[cfg(any(feature = "feat14", feature = "feat6", feature = "feat7"))]
            let v_304 = func_107();
            if 19 > 10 {
                let v_305 = func_1();
                let w_306 = 7;
                let w_307 = 1;
                println!("msg_308 {}", 1);
            } else {
                let w_309 = 1;
                let w_310 = 4;
            }
        } else {
            func_138();
            println!("msg_311 {}", 1);
        }
        let _ = 583;
    }
    pub fn func_312() {
        func_110();
        let v_313 = 299;
        func_138();
    }
    pub struct Handle_314;
    #[cfg(feature = "feat16")]
    impl Handle_314 {
        pub fn func_315() {
            let v_316 = 781;
            match 3 {
                0 => {
                    let v_317 = func_239();
                }
                _ => {}
            }
            let v_318 = func_138();
            println!("msg_319 {}", 1);
        }
    }
}
pub fn func_320() {
    pub fn func_321() {
        ext_1();
        let v_322 = 208;
        println!("msg_323 {}", 1);
    }
    let v_324 = func_283();
}
#[cfg(feature = "feat10")]
pub const LIMIT_325: u32 = func_145();
pub struct Handle_326;
impl Handle_326 {
    pub fn func_264() {
        let v_327 = func_223();
        #[cfg(feature = "feat6")]
        func_159();
    }
}
pub fn func_328() {
    let v_329 = 359;
    pub fn func_330() {
        println!("msg_331 {}", 1);
    }
    println!("msg_332 {}", 1);
    let v_333 = 9 + 87;
}
pub struct Record_334 {
    pub field_335: u32,
    pub field_336: u32,
}
#[cfg(feature = "feat15")]
pub mod inner_337 {
    use super::*;
    pub fn func_338() {
        let v_339 = func_154();
        func_239();
        println!("msg_340 {}", 1);
    }
    pub struct Handle_341;
    impl Handle_341 {
        pub fn func_342() {
            let v_343 = 88 + 40;
            let v_344 = func_297();
            let v_345 = 954;
        }
    }
    #[cfg(not(feature = "feat11"))]
    pub const LIMIT_346: u32 = func_23();
}
pub const LIMIT_347: u32 = 719;
pub enum Kind_348 {
    Variant_349,
    Variant_350,
    Variant_351,
}
pub enum Kind_352 {
    #[cfg(feature = "feat0")]
    Variant_353,
    Variant_354,
    Variant_355,
    Variant_356,
}
pub mod inner_357 {
    use super::*;
    pub fn func_358() {
        #[cfg(feature = "feat15")]
        pub fn func_359() {
            match 3 {
                0 => {
                    let v_360 = 812;
                    println!("msg_361 {}", 1);
                }
                _ => {}
            }
            println!("msg_362 {}", 1);
            #[cfg(feature = "feat16")]
            func_254();
            pub fn func_363() {
                let v_364 = 9 + 64;
                let w_365 = 7;
            }
        }
        if 7 > 10 {
            pub fn func_366() {
                let w_367 = 8;
                let w_368 = 0;
                let v_369 = 825;
                let w_370 = 0;
            }
            #[cfg(feature = "feat14")]
            let v_371 = ext_3();
            if 14 > 10 {
                let w_372 = 7;
                let v_373 = 57 + 2;
                #[cfg(feature = "feat12")]
                func_243();
            } else {
                let w_374 = 6;
                let v_375 = 952;
                let _ = 124;
            }
        } else {
            func_320();
            println!("msg_376 {}", 1);
            let v_377 = func_297();
        }
        let v_378 = 764;
        func_70();
    }
    pub fn func_379() {
        let v_380 = 682;
        let v_381 = func_1();
    }
    pub type Alias_382 = u64;
}
