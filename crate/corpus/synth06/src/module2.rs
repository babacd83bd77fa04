pub fn func_9() {
    let v_324 = 22 + 82;
}
pub fn func_325() {
    match 2 {
        0 => {
            pub fn func_259() {
                let v_326 = 658;
                let v_327 = ext_3();
                println!("msg_328 {}", 1);
            }
            let v_329 = 140;
            let v_330 = 926;
            #[cfg(feature = "feat21")]
            let v_331 = func_262();
        }
        _ => {}
    }
    #[cfg(feature = "feat19")]
    ext_2();
}
#[cfg(feature = "feat21")]
pub static COUNTER_332: u32 = 0;
pub fn func_333() {
    if 1 > 10 {
        let v_334 = func_149();
    } else {
        println!("msg_335 {}", 1);
        let _ = 11;
        let v_336 = func_216();
        match 4 {
            0 => {
                #[cfg(feature = "feat11")]
                let v_337 = func_138();
                func_178();
                println!("msg_338 {}", 1);
            }
            _ => {}
        }
    }
    let _ = 42 + 74;
    match 4 {
        0 => {
            if 8 > 10 {
                match 2 {
                    0 => {
                        let w_339 = 1;
                        let v_340 = 872;
                        println!("msg_341 {}", 1);
                        let v_342 = func_160();
                    }
                    _ => {}
                }
                #[cfg(any(feature = "feat14", feature = "feat5"))]
                let v_343 = func_101();
            } else {
                let v_344 = func_147();
                let v_345 = func_83();
                #[cfg(feature = "feat11")]
                pub fn func_346() {
                    let v_347 = 972;
                    let w_348 = 3;
                }
            }
            let v_349 = 45 + 94;
            if 0 > 10 {
                func_101();
                let v_350 = func_238();
            } else {
                #[cfg(feature = "feat8")]
                let _ = 632;
                if 9 > 10 {
                    #[cfg(not(feature = "feat7"))]
                    let v_351 = 800;
                    let v_352 = ext_0();
                    let w_353 = 3;
                } else {
                    let w_354 = 4;
                    let w_355 = 6;
                    let w_356 = 8;
                    let w_357 = 8;
                }
            }
            let _ = 113;
        }
        _ => {}
    }
}
pub static COUNTER_358: u32 = 0;
pub fn func_359() {
    if 17 > 10 {
        #[cfg(any(feature = "feat4", feature = "feat15", feature = "feat0"))]
        let v_360 = func_178();
    } else {
        #[cfg(feature = "feat15")]
        pub fn func_361() {
            let v_362 = 635;
        }
        let v_363 = 12 + 56;
    }
    if 18 > 10 {
        let v_364 = func_177();
        func_223();
    } else {
        match 0 {
            0 => {
                println!("msg_365 {}", 1);
            }
            _ => {}
        }
    }
}
pub struct Handle_366;
impl Handle_366 {
    pub fn func_367() {
        let _ = 140;
        #[cfg(feature = "feat2")]
        let v_368 = func_280();
        let _ = 481;
    }
    pub fn func_5() {
        let v_369 = ext_0();
        let v_370 = 298;
        match 1 {
            0 => {
                #[cfg(feature = "feat5")]
                pub fn func_13() {
                    let _ = 56 + 38;
                    let w_371 = 8;
                    let v_372 = func_210();
                }
                #[cfg(all(feature = "feat16", not(feature = "feat1")))]
                pub fn func_373() {
                    let w_374 = 4;
                    ext_0();
                    let _ = 490;
                    let v_375 = 136;
                }
                match 1 {
                    0 => {
                        println!("msg_376 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_377 = 95 + 19;
    }
}
pub struct Record_378 {
    pub field_379: u32,
    pub field_380: u32,
    pub field_381: u32,
}
pub fn func_382() {
    #[cfg(feature = "feat4")]
    let v_383 = 354;
    let v_384 = 166;
    let v_385 = func_24();
    match 0 {
        0 => {
            #[cfg(feature = "feat23")]
            func_177();
        }
        _ => {}
    }
}
pub mod inner_386 {
    use super::*;
    pub fn func_387() {
        let v_388 = func_318();
        pub fn func_389() {
            let _ = 28 + 41;
            let _ = 667;
            #[cfg(all(feature = "feat23", not(feature = "feat9")))]
            let v_390 = 61 + 53;
            ext_2();
        }
        if 12 > 10 {
            func_291();
            let v_391 = 616;
        } else {
            if 15 > 10 {
                let v_392 = 491;
            } else {
                let v_393 = 97 + 27;
                #[cfg(all(feature = "feat5", not(feature = "feat10")))]
                let v_394 = func_280();
            }
            let v_395 = 228;
            ext_3();
        }
    }
    pub struct Handle_396;
    impl Handle_396 {
        pub fn func_397() {
            let v_398 = 73 + 16;
            let v_399 = ext_2();
            let _ = 302;
        }
    }
}
pub struct Handle_400;
#[cfg(feature = "feat4")]
impl Handle_400 {
    pub fn func_401() {
        let v_402 = ext_1();
        let v_403 = 914;
    }
}
#[cfg(feature = "feat0")]
pub fn func_404() {
    if 13 > 10 {
        match 0 {
            0 => {
                #[cfg(not(feature = "feat20"))]
                func_29();
                println!("msg_405 {}", 1);
            }
            _ => {}
        }
        if 6 > 10 {
            #[cfg(all(feature = "feat21", not(feature = "feat20")))]
            pub fn func_406() {
                let w_407 = 8;
                let w_408 = 5;
            }
            let v_409 = 429;
        } else {
            let v_410 = func_10();
            let v_411 = func_210();
            let v_412 = 5;
        }
        let v_413 = func_147();
        let v_414 = 762;
    } else {
        println!("msg_415 {}", 1);
        let v_416 = func_121();
    }
}
pub enum Kind_417 {
    Variant_418,
    Variant_419,
    #[cfg(not(feature = "feat22"))]
    Variant_420,
    Variant_421,
}
pub fn func_422() {
    let v_423 = ext_2();
    println!("msg_424 {}", 1);
    func_404();
    pub fn func_425() {
        match 0 {
            0 => {
                match 4 {
                    0 => {
                        ext_1();
                        let w_426 = 3;
                        let v_427 = 82 + 73;
                        let v_428 = ext_3();
                    }
                    _ => {}
                }
                match 2 {
                    0 => {
                        let v_429 = 36 + 25;
                        println!("msg_430 {}", 1);
                    }
                    _ => {}
                }
                let v_431 = func_147();
            }
            _ => {}
        }
        func_178();
        #[cfg(feature = "feat14")]
        let v_432 = 787;
        let v_433 = func_275();
    }
}
use std::collections::HashMap;
pub struct Handle_434;
impl Handle_434 {
    pub fn func_435() {
        let v_436 = func_138();
        if 15 > 10 {
            #[cfg(not(feature = "feat10"))]
            func_60();
            func_18();
            let v_437 = 66 + 30;
            #[cfg(feature = "feat14")]
            let v_438 = 983;
        } else {
            #[cfg(all(feature = "feat8", not(feature = "feat17")))]
            let v_439 = func_121();
        }
        #[cfg(feature = "feat12")]
        ext_2();
        pub fn func_440() {
            #[cfg(feature = "feat14")]
            let v_441 = ext_0();
            #[cfg(feature = "feat23")]
            let _ = 87 + 28;
        }
    }
    pub fn func_442() {
        ext_2();
        let v_443 = func_401();
        match 0 {
            0 => {
                let v_444 = 22 + 94;
            }
            _ => {}
        }
        #[cfg(feature = "feat15")]
        pub fn func_445() {
            #[cfg(feature = "feat16")]
            let v_446 = 44 + 87;
        }
    }
}
pub struct Handle_447;
impl Handle_447 {
    pub fn func_448() {
        let _ = 3 + 46;
    }
}
pub enum Kind_449 {
    Variant_450,
    #[cfg(feature = "feat11")]
    Variant_451,
    Variant_452,
    Variant_453,
}
pub fn func_275() {
    let _ = 11 + 55;
    let v_454 = func_259();
}
#[cfg(not(feature = "feat13"))]
pub fn func_455() {
    let v_456 = 43 + 23;
}
pub fn func_457() {
    pub fn func_458() {
        pub fn func_9() {
            if 18 > 10 {
                println!("msg_459 {}", 1);
                let v_460 = func_401();
                #[cfg(feature = "feat8")]
                let v_461 = 24 + 20;
                let v_462 = func_121();
            } else {
                let w_463 = 5;
                let v_464 = 12 + 62;
                let w_465 = 6;
            }
            let v_466 = 316;
        }
        func_262();
    }
    println!("msg_467 {}", 1);
}
pub const LIMIT_468: u32 = ext_3();
#[cfg(not(feature = "feat20"))]
pub fn func_469() {
    func_307();
    if 3 > 10 {
        let v_470 = func_306();
        match 0 {
            0 => {
                ext_2();
                println!("msg_471 {}", 1);
                #[cfg(not(feature = "feat10"))]
                let _ = 40 + 74;
            }
            _ => {}
        }
        let _ = 60 + 36;
        func_359();
    } else {
        pub fn func_472() {
            pub fn func_473() {
                let _ = 78 + 47;
                let v_474 = 51 + 32;
                let v_475 = 41 + 86;
            }
            let v_476 = func_389();
            println!("msg_477 {}", 1);
        }
    }
    ext_3();
    match 3 {
        0 => {
            ext_2();
            let _ = 4 + 50;
        }
        _ => {}
    }
}
