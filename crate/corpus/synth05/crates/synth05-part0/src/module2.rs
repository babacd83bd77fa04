pub fn func_322() {
    let v_323 = func_11();
    println!("msg_324 {}", 1);
    if 14 > 10 {
        let _ = 67 + 7;
        let v_325 = func_28();
        func_47();
        #[cfg(feature = "m0_8")]
        let v_326 = 957;
    } else {
        println!("msg_327 {}", 1);
        let v_328 = 685;
    }
    #[cfg(any(feature = "m0_1", feature = "m0_0", feature = "m0_1"))]
    ext_2();
}
#[cfg(feature = "m0_3")]
pub fn func_329() {
    let v_330 = func_28();
    #[cfg(feature = "m0_7")]
    let v_331 = func_223();
}
#[cfg(all(feature = "m0_8", not(feature = "m0_2")))]
pub fn func_332() {
    println!("msg_333 {}", 1);
    pub fn func_334() {
        let v_335 = 4 + 64;
        pub fn func_336() {
            match 1 {
                0 => {
                    println!("msg_337 {}", 1);
                }
                _ => {}
            }
            let v_338 = 345;
            pub fn func_339() {
                let v_340 = 57 + 16;
                let w_341 = 1;
                let v_342 = ext_0();
                let _ = 86 + 42;
            }
        }
        let v_343 = func_161();
    }
}
pub fn func_344() {
    match 3 {
        0 => {
            println!("msg_345 {}", 1);
            #[cfg(feature = "m0_5")]
            let v_346 = func_28();
            func_235();
            println!("msg_347 {}", 1);
        }
        _ => {}
    }
}
pub type Alias_348 = u64;
#[cfg(not(feature = "m0_2"))]
pub fn func_349() {
    func_336();
    pub fn func_350() {
        func_312();
        let v_351 = 922;
        let v_352 = 663;
        let v_353 = 887;
    }
    pub fn func_354() {
        ext_1();
        let v_355 = 549;
        match 1 {
            0 => {
                match 1 {
                    0 => {
                        let v_356 = 824;
                        let v_357 = ext_3();
                        let v_358 = 30;
                        let v_359 = func_249();
                    }
                    _ => {}
                }
                let v_360 = ext_3();
                func_301();
                let v_361 = 92 + 28;
            }
            _ => {}
        }
    }
}
pub fn func_362() {
    let v_363 = func_226();
    println!("msg_364 {}", 1);
    #[cfg(feature = "m0_4")]
    ext_2();
    if 17 > 10 {
        if 16 > 10 {
            if 0 > 10 {
                let w_365 = 0;
                let v_366 = func_138();
                println!("msg_367 {}", 1);
                let v_368 = func_178();
            } else {
                println!("msg_369 {}", 1);
                let w_370 = 7;
                #[cfg(not(feature = "m0_2"))]
                let v_371 = 33;
                println!("msg_372 {}", 1);
            }
            func_58();
            let v_373 = ext_1();
            let v_374 = func_203();
        } else {
            if 7 > 10 {
                println!("msg_375 {}", 1);
            } else {
                let w_376 = 2;
                #[cfg(feature = "m0_7")]
                let v_377 = ext_3();
                func_2();
            }
            let v_378 = ext_1();
        }
        let _ = 20 + 15;
        pub fn func_379() {
            match 4 {
                0 => {
                    let v_380 = 485;
                }
                _ => {}
            }
            let v_381 = 64;
        }
    } else {
        println!("msg_382 {}", 1);
        let v_383 = func_127();
        ext_2();
    }
}
#[cfg(all(feature = "m0_3", not(feature = "m0_2")))]
pub fn func_384() {
    pub fn func_385() {
        if 0 > 10 {
            func_148();
            pub fn func_386() {
                let v_387 = 54 + 75;
                ext_3();
                let v_388 = 766;
                let w_389 = 2;
            }
        } else {
            println!("msg_390 {}", 1);
            println!("msg_391 {}", 1);
            if 5 > 10 {
                let _ = 72 + 72;
                let _ = 77 + 46;
                let v_392 = func_306();
            } else {
                func_28();
                let v_393 = func_140();
                let w_394 = 4;
            }
            let v_395 = 18 + 4;
        }
        let v_396 = 388;
        println!("msg_397 {}", 1);
        func_240();
    }
}
pub mod inner_398 {
    use super::*;
    pub struct Handle_399;
    impl Handle_399 {
        #[cfg(feature = "m0_7")]
        pub fn func_400() {
            println!("msg_401 {}", 1);
        }
        pub fn func_402() {
            println!("msg_403 {}", 1);
            println!("msg_404 {}", 1);
        }
    }
    pub static COUNTER_405: u32 = 0;
    pub mod inner_406 {
        use super::*;
        pub fn func_407() {
            if 7 > 10 {
                let _ = 41 + 37;
            } else {
                let v_408 = ext_1();
                let w_409 = 2;
                let w_410 = 0;
            }
            let v_411 = 4 + 2;
            #[cfg(all(feature = "m0_3", not(feature = "m0_2")))]
            let _ = 70 + 16;
            let v_412 = 27 + 26;
        }
    }
}
pub mod inner_413 {
    use super::*;
    pub fn func_414() {
        if 8 > 10 {
            match 4 {
                0 => {
                    println!("msg_415 {}", 1);
                }
                _ => {}
            }
            if 12 > 10 {
                let v_416 = func_240();
            } else {
                let w_417 = 5;
                let v_418 = 638;
            }
        } else {
            println!("msg_419 {}", 1);
        }
        let v_420 = func_69();
        #[cfg(feature = "m0_7")]
        ext_1();
    }
}
pub fn func_421() {
    pub fn func_422() {
        #[cfg(any(feature = "m0_1", feature = "m0_0", feature = "m0_4"))]
        let v_423 = func_63();
        let _ = 39 + 5;
    }
}
pub fn func_424() {
    let v_425 = ext_2();
}
pub const LIMIT_426: u32 = func_183();
pub fn func_427() {
    let _ = 53 + 83;
    if 15 > 10 {
        pub fn func_428() {
            if 4 > 10 {
                let w_429 = 2;
                let w_430 = 4;
                #[cfg(not(feature = "m0_2"))]
                let v_431 = func_407();
                let _ = 47;
            } else {
                let w_432 = 8;
                let w_433 = 2;
                let v_434 = ext_0();
                let v_435 = 277;
            }
            let v_436 = func_46();
            println!("msg_437 {}", 1);
        }
        func_422();
        let v_438 = ext_0();
    } else {
        match 3 {
            0 => {
                pub fn func_439() {
                    println!("msg_440 {}", 1);
                    let w_441 = 6;
                    ext_1();
                    #[cfg(feature = "m0_0")]
                    let v_442 = ext_0();
                }
            }
            _ => {}
        }
        let v_443 = func_191();
        let v_444 = 106;
        #[cfg(not(feature = "m0_2"))]
        let v_445 = func_94();
    }
}
#[cfg(all(feature = "m0_8", not(feature = "m0_2")))]
pub fn func_446() {
    let v_447 = ext_2();
    pub fn func_448() {
        let v_449 = ext_3();
        if 19 > 10 {
            let v_450 = 9 + 11;
            let _ = 247;
            println!("msg_451 {}", 1);
            pub fn func_452() {
                println!("msg_453 {}", 1);
            }
        } else {
            match 1 {
                0 => {
                    let v_454 = ext_0();
                }
                _ => {}
            }
            ext_1();
            println!("msg_455 {}", 1);
        }
        match 2 {
            0 => {
                let v_456 = func_191();
                println!("msg_457 {}", 1);
                let v_458 = 742;
                pub fn func_459() {
                    let v_460 = func_379();
                    let w_461 = 1;
                    let v_462 = func_119();
                    println!("msg_463 {}", 1);
                }
            }
            _ => {}
        }
    }
    let v_464 = 90 + 58;
    if 16 > 10 {
        let v_465 = func_240();
    } else {
        let _ = 469;
    }
}
pub fn func_466() {
    let v_467 = 91 + 18;
}
use std::collections::HashMap;
pub const LIMIT_468: u32 = func_92();
pub static COUNTER_469: u32 = 0;
pub struct Record_470 {
    pub field_471: u32,
    pub field_472: u32,
    #[cfg(feature = "m0_0")]
    pub field_473: u32,
    pub field_474: u32,
}
pub const LIMIT_475: u32 = 14 + 80;
pub struct Handle_476;
impl Handle_476 {
    pub fn func_466() {
        let v_477 = ext_3();
        #[cfg(feature = "m0_4")]
        let v_478 = 574;
    }
    pub fn func_479() {
        let v_480 = func_102();
        if 17 > 10 {
            let _ = 616;
        } else {
            let v_481 = func_17();
            println!("msg_482 {}", 1);
        }
        let _ = 927;
        func_421();
    }
}
pub fn func_483() {
    if 17 > 10 {
        let _ = 464;
    } else {
        #[cfg(feature = "m0_0")]
        pub fn func_484() {
            if 9 > 10 {
                let w_485 = 2;
                let v_486 = ext_3();
                let w_487 = 2;
                let v_488 = func_301();
            } else {
                let v_489 = func_384();
                let w_490 = 0;
                println!("msg_491 {}", 1);
            }
            pub fn func_492() {
                let w_493 = 5;
                let v_494 = func_46();
            }
            match 2 {
                0 => {
                    let v_495 = 820;
                    #[cfg(feature = "m0_7")]
                    let v_496 = ext_1();
                }
                _ => {}
            }
            #[cfg(feature = "m0_4")]
            let v_497 = func_446();
        }
    }
}
