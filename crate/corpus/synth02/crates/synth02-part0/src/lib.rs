pub mod module0;
pub mod module1;
pub const LIMIT_272: u32 = func_140();
#[cfg(not(feature = "m0_2"))]
pub const LIMIT_273: u32 = 85 + 73;
pub fn func_274() {
    match 3 {
        0 => {
            func_126();
            match 3 {
                0 => {
                    let v_275 = ext_0();
                    let v_276 = ext_2();
                    let v_277 = func_195();
                }
                _ => {}
            }
            #[cfg(feature = "m0_5")]
            let v_278 = 116;
        }
        _ => {}
    }
    let v_279 = 107;
    println!("msg_280 {}", 1);
    let v_281 = 62 + 33;
}
pub fn func_282() {
    pub fn func_283() {
        let v_284 = func_116();
        match 3 {
            0 => {
                println!("msg_285 {}", 1);
                let v_286 = ext_2();
            }
            _ => {}
        }
    }
    if 11 > 10 {
        println!("msg_287 {}", 1);
    } else {
        func_31();
        let v_288 = 547;
    }
}
pub type Alias_289 = u64;
pub enum Kind_290 {
    Variant_291,
    #[cfg(feature = "m0_4")]
    Variant_292,
}
#[cfg(feature = "m0_3")]
use std::collections::HashMap;
pub fn func_293() {
    println!("msg_294 {}", 1);
    func_136();
}
use std::collections::HashMap;
#[cfg(feature = "m0_0")]
pub fn func_295() {
    println!("msg_296 {}", 1);
    func_8();
    let v_297 = func_293();
    println!("msg_298 {}", 1);
}
pub struct Handle_299;
impl Handle_299 {
    pub fn func_300() {
        if 9 > 10 {
            match 0 {
                0 => {
                    let w_301 = 2;
                }
                _ => {}
            }
            pub fn func_302() {
                let _ = 87 + 12;
                #[cfg(not(feature = "m0_2"))]
                let _ = 646;
                let v_303 = func_274();
                println!("msg_304 {}", 1);
            }
        } else {
            let v_305 = 719;
        }
        pub fn func_306() {
            let v_307 = func_116();
            if 17 > 10 {
                let w_308 = 6;
                let w_309 = 4;
                let _ = 487;
                let v_310 = 96 + 60;
            } else {
                func_136();
            }
            let _ = 41 + 8;
            #[cfg(feature = "m0_6")]
            let v_311 = 749;
        }
    }
    pub fn func_174() {
        ext_0();
        let _ = 9;
    }
}
pub fn func_312() {
    ext_0();
    let v_313 = 69;
    let v_314 = 75 + 25;
}
pub fn func_315() {
    match 2 {
        0 => {
            let v_316 = func_132();
            let v_317 = func_116();
            if 2 > 10 {
                let v_318 = func_161();
            } else {
                println!("msg_319 {}", 1);
                let v_320 = 25 + 55;
                let v_321 = func_302();
                let v_322 = 804;
            }
        }
        _ => {}
    }
    let _ = 93 + 36;
    func_153();
}
use std::collections::HashMap;
pub fn func_323() {
    #[cfg(any(feature = "m0_0", feature = "m0_3", feature = "m0_3"))]
    let _ = 93 + 30;
    #[cfg(not(feature = "m0_2"))]
    pub fn func_324() {
        println!("msg_325 {}", 1);
        let v_326 = func_134();
    }
    match 3 {
        0 => {
            let v_327 = ext_3();
            if 0 > 10 {
                pub fn func_328() {
                    let v_329 = func_224();
                    let v_330 = func_19();
                    println!("msg_331 {}", 1);
                    let v_332 = ext_0();
                }
            } else {
                #[cfg(not(feature = "m0_2"))]
                let v_333 = ext_1();
                func_252();
            }
            let v_334 = func_274();
            if 16 > 10 {
                let v_335 = 212;
                func_262();
            } else {
                if 18 > 10 {
                    let w_336 = 8;
                } else {
                    let w_337 = 5;
                    let _ = 315;
                    let w_338 = 6;
                    let v_339 = func_224();
                }
                #[cfg(not(feature = "m0_2"))]
                let _ = 187;
                #[cfg(any(feature = "m0_3", feature = "m0_1"))]
                let v_340 = func_204();
                println!("msg_341 {}", 1);
            }
        }
        _ => {}
    }
    func_1();
}
#[cfg(feature = "m0_3")]
use std::collections::HashMap;
use std::collections::HashMap;
#[cfg(feature = "m0_5")]
pub struct Record_342 {
    pub field_343: u32,
    pub field_344: u32,
    pub field_345: u32,
    pub field_346: u32,
}
pub fn func_347() {
    let v_348 = 78 + 21;
    ext_1();
}
pub fn func_349() {
    let v_350 = 345;
    match 2 {
        0 => {
            let v_351 = func_195();
            let v_352 = func_161();
            if 18 > 10 {
                pub fn func_353() {
                    let w_354 = 5;
                }
            } else {
                #[cfg(feature = "m0_3")]
                let v_355 = func_262();
                let v_356 = 71 + 36;
                let v_357 = 20 + 96;
            }
            match 4 {
                0 => {
                    let _ = 799;
                    if 4 > 10 {
                        let w_358 = 8;
                        println!("msg_359 {}", 1);
                    } else {
                        let v_360 = func_105();
                        let v_361 = func_262();
                        #[cfg(feature = "m0_6")]
                        let v_362 = 107;
                    }
                    let v_363 = ext_1();
                }
                _ => {}
            }
        }
        _ => {}
    }
    pub fn func_11() {
        let _ = 60 + 71;
        #[cfg(feature = "m0_1")]
        pub fn func_364() {
            pub fn func_365() {
                #[cfg(feature = "m0_3")]
                let v_366 = func_184();
                let w_367 = 1;
                let w_368 = 8;
                let v_369 = 26 + 73;
            }
            match 3 {
                0 => {
                    let v_370 = func_132();
                    let v_371 = ext_1();
                    let v_372 = func_61();
                    let v_373 = func_19();
                }
                _ => {}
            }
            let v_374 = func_293();
            let v_375 = func_65();
        }
        match 4 {
            0 => {
                let v_376 = func_153();
                match 0 {
                    0 => {
                        let w_377 = 8;
                        let v_378 = func_24();
                    }
                    _ => {}
                }
                match 3 {
                    0 => {
                        let v_379 = ext_1();
                        func_36();
                        let v_380 = ext_0();
                        let v_381 = func_312();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub fn func_382() {
    let v_383 = 38 + 29;
    pub fn func_384() {
        let v_385 = func_105();
        println!("msg_386 {}", 1);
        let v_387 = 37 + 51;
        if 12 > 10 {
            let _ = 96 + 12;
        } else {
            let v_388 = func_100();
            pub fn func_389() {
                let w_390 = 1;
            }
            println!("msg_391 {}", 1);
            let v_392 = func_353();
        }
    }
    pub fn func_393() {
        println!("msg_394 {}", 1);
        let v_395 = 21 + 97;
        let v_396 = 68 + 2;
    }
}
pub fn func_397() {
    if 19 > 10 {
        let _ = 22 + 51;
    } else {
        #[cfg(feature = "m0_5")]
        let _ = 63 + 0;
    }
    func_134();
}
pub mod inner_398 {
    use super::*;
    pub struct Handle_399;
    impl Handle_399 {
        pub fn func_400() {
            let v_401 = 29 + 63;
            #[cfg(any(feature = "m0_4", feature = "m0_6"))]
            let v_402 = func_249();
        }
    }
}
