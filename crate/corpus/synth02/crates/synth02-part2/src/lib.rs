pub mod module0;
pub mod module1;
pub struct Record_256 {
    pub field_257: u32,
    pub field_258: u32,
    pub field_259: u32,
}
pub fn func_260() {
    let v_261 = func_156();
}
pub fn func_58() {
    let v_262 = 308;
    let _ = 7 + 3;
    match 0 {
        0 => {
            if 16 > 10 {
                pub fn func_263() {
                    let w_264 = 3;
                    let _ = 79 + 0;
                    let v_265 = 271;
                }
                match 2 {
                    0 => {
                        let v_266 = 89 + 12;
                        let w_267 = 4;
                    }
                    _ => {}
                }
            } else {
                if 13 > 10 {
                    let w_268 = 3;
                    let v_269 = 54 + 54;
                } else {
                    #[cfg(all(feature = "m2_0", not(feature = "m2_2")))]
                    let v_270 = func_156();
                    #[cfg(feature = "m2_0")]
                    let v_271 = func_112();
                }
                #[cfg(all(feature = "m2_4", not(feature = "m2_6")))]
                let v_272 = func_133();
            }
            if 14 > 10 {
                println!("msg_273 {}", 1);
                pub fn func_274() {
                    let w_275 = 1;
                    let v_276 = func_39();
                    let w_277 = 1;
                    let w_278 = 1;
                }
                let v_279 = 68 + 6;
            } else {
                match 1 {
                    0 => {
                        let w_280 = 6;
                        let v_281 = ext_0();
                        let v_282 = func_156();
                        #[cfg(feature = "m2_1")]
                        let v_283 = ext_0();
                    }
                    _ => {}
                }
                match 4 {
                    0 => {
                        let w_284 = 2;
                        println!("msg_285 {}", 1);
                        let w_286 = 2;
                        let v_287 = 657;
                    }
                    _ => {}
                }
                let _ = 6 + 38;
            }
            #[cfg(feature = "m2_0")]
            pub fn func_108() {
                let v_288 = func_106();
                #[cfg(not(feature = "m2_6"))]
                let v_289 = 76 + 16;
                let _ = 71 + 11;
            }
            match 0 {
                0 => {
                    println!("msg_290 {}", 1);
                    func_76();
                    func_45();
                    match 3 {
                        0 => {
                            let w_291 = 3;
                            let w_292 = 5;
                            let w_293 = 5;
                            let v_294 = 27 + 16;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub fn func_190() {
    let v_295 = 706;
    let _ = 66 + 39;
    let _ = 45 + 77;
}
pub fn func_296() {
    #[cfg(all(feature = "m2_1", not(feature = "m2_3")))]
    let v_297 = func_1();
}
#[cfg(feature = "m2_5")]
pub fn func_298() {
    let v_299 = 947;
    if 18 > 10 {
        match 2 {
            0 => {
                let v_300 = 90 + 32;
            }
            _ => {}
        }
        match 0 {
            0 => {
                let v_301 = func_192();
                let v_302 = 46 + 80;
            }
            _ => {}
        }
        let v_303 = 134;
        match 0 {
            0 => {
                println!("msg_304 {}", 1);
                println!("msg_305 {}", 1);
                let _ = 77 + 98;
                let _ = 41 + 35;
            }
            _ => {}
        }
    } else {
        let v_306 = 9 + 49;
        let v_307 = 211;
        let v_308 = 676;
    }
    if 15 > 10 {
        let v_309 = func_120();
    } else {
        match 0 {
            0 => {
                let v_310 = func_120();
                let v_311 = 278;
                let v_312 = 781;
                func_130();
            }
            _ => {}
        }
    }
}
pub fn func_313() {
    let v_314 = ext_0();
    func_6();
    let v_315 = func_112();
}
pub const LIMIT_316: u32 = 16 + 32;
pub fn func_317() {
    let v_318 = ext_3();
    println!("msg_319 {}", 1);
}
pub enum Kind_320 {
    Variant_321,
}
pub mod inner_322 {
    use super::*;
    pub const LIMIT_323: u32 = func_130();
}
pub fn func_324() {
    match 4 {
        0 => {
            match 2 {
                0 => {
                    println!("msg_325 {}", 1);
                    let v_326 = ext_1();
                }
                _ => {}
            }
            let v_327 = 817;
            println!("msg_328 {}", 1);
        }
        _ => {}
    }
    func_162();
    println!("msg_329 {}", 1);
}
pub fn func_330() {
    let v_331 = ext_0();
}
pub fn func_332() {
    let v_333 = 934;
    let v_334 = ext_0();
}
pub fn func_335() {
    let _ = 96;
    let v_336 = 9 + 28;
}
pub const LIMIT_337: u32 = 524;
pub enum Kind_338 {
    Variant_339,
    Variant_340,
}
#[cfg(feature = "m2_0")]
pub enum Kind_341 {
    Variant_342,
    Variant_343,
    #[cfg(feature = "m2_1")]
    Variant_344,
}
pub struct Record_345 {
    pub field_346: u32,
    pub field_347: u32,
}
pub enum Kind_348 {
    Variant_349,
    Variant_350,
    Variant_351,
    Variant_352,
}
pub fn func_353() {
    let v_354 = func_152();
    let _ = 62 + 99;
    let v_355 = ext_2();
    let v_356 = ext_2();
}
pub fn func_357() {
    let v_358 = 6 + 77;
}
use std::collections::HashMap;
pub mod inner_359 {
    use super::*;
    pub fn func_117() {
        pub fn func_274() {
            println!("msg_360 {}", 1);
        }
        let v_361 = 951;
        let _ = 801;
    }
    #[cfg(not(feature = "m2_6"))]
    pub fn func_362() {
        if 0 > 10 {
            func_357();
            let v_363 = 300;
            let v_364 = func_37();
            println!("msg_365 {}", 1);
        } else {
            let _ = 29 + 20;
            if 13 > 10 {
                println!("msg_366 {}", 1);
            } else {
                let v_367 = 81 + 90;
                let _ = 83 + 20;
            }
        }
    }
}
pub fn func_368() {
    if 0 > 10 {
        match 2 {
            0 => {
                if 1 > 10 {
                    #[cfg(any(feature = "m2_0", feature = "m2_4", feature = "m2_4"))]
                    let v_369 = func_296();
                } else {
                    #[cfg(feature = "m2_5")]
                    let _ = 54 + 86;
                }
                println!("msg_370 {}", 1);
            }
            _ => {}
        }
    } else {
        #[cfg(not(feature = "m2_6"))]
        pub fn func_371() {
            match 3 {
                0 => {
                    println!("msg_372 {}", 1);
                    func_176();
                    let w_373 = 6;
                    let w_374 = 3;
                }
                _ => {}
            }
            let v_375 = func_176();
        }
        let v_376 = func_112();
        let v_377 = ext_3();
        let v_378 = func_263();
    }
}
pub fn func_379() {
    println!("msg_380 {}", 1);
    pub fn func_381() {
        if 14 > 10 {
            println!("msg_382 {}", 1);
            if 0 > 10 {
                let w_383 = 4;
                #[cfg(feature = "m2_1")]
                let v_384 = ext_1();
            } else {
                let w_385 = 4;
                #[cfg(feature = "m2_5")]
                let v_386 = func_212();
                #[cfg(all(feature = "m2_1", not(feature = "m2_2")))]
                let v_387 = 832;
            }
            let v_388 = func_39();
            println!("msg_389 {}", 1);
        } else {
            let _ = 56 + 59;
            let v_390 = 261;
            let v_391 = ext_1();
            match 1 {
                0 => {
                    let v_392 = 80 + 53;
                }
                _ => {}
            }
        }
        println!("msg_393 {}", 1);
        let v_394 = 390;
    }
    match 0 {
        0 => {
            if 14 > 10 {
                let v_395 = 56 + 69;
                ext_2();
                if 8 > 10 {
                    let w_396 = 1;
                    let v_397 = 639;
                } else {
                    let v_398 = ext_1();
                }
            } else {
                let v_399 = 5 + 0;
            }
            #[cfg(any(feature = "m2_0", feature = "m2_1", feature = "m2_1"))]
            let v_400 = func_76();
        }
        _ => {}
    }
    println!("msg_401 {}", 1);
}
