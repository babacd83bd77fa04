pub fn func_363() {
    if 4 > 10 {
        ext_0();
        #[cfg(any(feature = "feat27", feature = "feat16"))]
        pub fn func_364() {
            func_305();
            func_177();
            #[cfg(all(feature = "feat28", not(feature = "feat25")))]
            pub fn func_365() {
                println!("msg_366 {}", 1);
            }
            if 1 > 10 {
                let v_367 = 991;
                let _ = 450;
                let v_368 = 27 + 54;
                let v_369 = ext_0();
            } else {
                let _ = 87 + 18;
                let v_370 = 88;
            }
        }
    } else {
        let v_371 = ext_2();
        pub fn func_372() {
            let _ = 74 + 93;
            let v_373 = ext_0();
            let _ = 98 + 58;
        }
        ext_3();
        println!("msg_374 {}", 1);
    }
    let v_375 = 868;
    #[cfg(feature = "feat16")]
    let v_376 = 175;
    let _ = 377;
}
#[cfg(feature = "feat13")]
pub enum Kind_377 {
    Variant_378,
    Variant_379,
    Variant_380,
    Variant_381,
}
pub fn func_305() {
    if 0 > 10 {
        match 4 {
            0 => {
                let v_382 = 64 + 97;
                ext_3();
                let v_383 = func_314();
            }
            _ => {}
        }
    } else {
        println!("msg_384 {}", 1);
        pub fn func_385() {
            let v_386 = ext_2();
            #[cfg(not(feature = "feat26"))]
            let v_387 = 94 + 72;
            match 0 {
                0 => {
                    let v_388 = 24 + 69;
                }
                _ => {}
            }
        }
        let _ = 58 + 78;
        println!("msg_389 {}", 1);
    }
    println!("msg_390 {}", 1);
    let v_391 = 378;
    let _ = 4 + 50;
}
pub fn func_392() {
    #[cfg(feature = "feat27")]
    let v_393 = func_252();
    match 0 {
        0 => {
            match 0 {
                0 => {
                    pub fn func_394() {
                        let _ = 47 + 69;
                        #[cfg(feature = "feat3")]
                        let _ = 19 + 33;
                    }
                    let _ = 97 + 34;
                }
                _ => {}
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat22")]
    let v_395 = func_248();
}
pub static COUNTER_396: u32 = 0;
pub type Alias_397 = u64;
pub const LIMIT_398: u32 = func_236();
pub struct Record_399 {
    pub field_400: u32,
    pub field_401: u32,
    pub field_402: u32,
}
pub fn func_403() {
    ext_3();
    #[cfg(not(feature = "feat21"))]
    let v_404 = 68 + 28;
    let v_405 = 16 + 46;
    let v_406 = 67;
}
pub fn func_407() {
    let v_408 = 931;
    pub fn func_177() {
        let v_409 = 18 + 29;
        pub fn func_410() {
            func_124();
        }
    }
    ext_2();
    #[cfg(feature = "feat29")]
    func_78();
}
pub fn func_411() {
    #[cfg(feature = "feat9")]
    func_62();
}
pub fn func_412() {
    println!("msg_413 {}", 1);
    pub fn func_414() {
        let v_415 = func_275();
    }
    ext_1();
    let v_416 = 71 + 97;
}
#[cfg(feature = "feat1")]
pub fn func_417() {
    let _ = 12 + 73;
    if 7 > 10 {
        let v_418 = func_411();
        println!("msg_419 {}", 1);
        let _ = 43 + 99;
        let v_420 = 2 + 31;
    } else {
        let v_421 = ext_1();
    }
    match 2 {
        0 => {
            let v_422 = 96;
            let v_423 = 984;
            pub fn func_424() {
                let v_425 = 57 + 69;
                #[cfg(feature = "feat29")]
                let _ = 419;
                println!("msg_426 {}", 1);
            }
        }
        _ => {}
    }
}
pub fn func_427() {
    match 3 {
        0 => {
            let _ = 320;
        }
        _ => {}
    }
    println!("msg_428 {}", 1);
}
pub struct Handle_429;
impl Handle_429 {
    pub fn func_430() {
        func_392();
        #[cfg(all(feature = "feat19", not(feature = "feat23")))]
        let v_431 = func_239();
        #[cfg(any(feature = "feat1", feature = "feat1"))]
        pub fn func_432() {
            if 1 > 10 {
                let v_433 = func_193();
                func_114();
            } else {
                let v_434 = func_101();
                let w_435 = 2;
                #[cfg(feature = "feat9")]
                func_156();
            }
            match 1 {
                0 => {
                    let w_436 = 0;
                }
                _ => {}
            }
            if 2 > 10 {
                let w_437 = 3;
            } else {
                ext_1();
                let v_438 = ext_3();
                #[cfg(not(feature = "feat0"))]
                ext_0();
            }
        }
    }
}
pub static COUNTER_439: u32 = 0;
#[cfg(feature = "feat13")]
pub fn func_440() {
    let v_441 = 825;
    match 4 {
        0 => {
            if 2 > 10 {
                println!("msg_442 {}", 1);
                func_216();
                let v_443 = func_248();
            } else {
                if 9 > 10 {
                    println!("msg_444 {}", 1);
                    ext_2();
                    let v_445 = ext_1();
                } else {
                    ext_2();
                    let v_446 = 358;
                }
            }
        }
        _ => {}
    }
}
pub fn func_447() {
    let v_448 = ext_1();
    let v_449 = func_275();
}
pub fn func_450() {
    println!("msg_451 {}", 1);
    let v_452 = 240;
    func_275();
}
pub fn func_453() {
    #[cfg(feature = "feat11")]
    let _ = 15 + 92;
    let _ = 718;
    println!("msg_454 {}", 1);
}
#[cfg(feature = "feat27")]
pub mod inner_455 {
    use super::*;
    #[cfg(any(feature = "feat29", feature = "feat28", feature = "feat28"))]
    pub fn func_456() {
        if 3 > 10 {
            println!("msg_457 {}", 1);
            let v_458 = func_22();
        } else {
            let v_459 = func_22();
            func_145();
        }
        let v_460 = func_289();
        ext_0();
    }
}
#[cfg(not(feature = "feat26"))]
pub fn func_461() {
    let v_462 = func_102();
}
pub const LIMIT_463: u32 = 797;
pub const LIMIT_464: u32 = func_414();
pub fn func_465() {
    #[cfg(feature = "feat1")]
    let v_466 = ext_1();
    println!("msg_467 {}", 1);
    let v_468 = ext_1();
}
pub mod inner_469 {
    use super::*;
    pub const LIMIT_470: u32 = 41 + 21;
}
pub fn func_471() {
    let v_472 = func_305();
}
pub mod inner_473 {
    use super::*;
    #[cfg(not(feature = "feat2"))]
    pub fn func_474() {
        let v_475 = 96 + 21;
        ext_1();
    }
    pub struct Handle_476;
    impl Handle_476 {
        pub fn func_477() {
            let v_478 = 51 + 75;
            match 3 {
                0 => {
                    let w_479 = 0;
                }
                _ => {}
            }
            if 9 > 10 {
                let w_480 = 4;
            } else {
                let v_481 = 72;
                let w_482 = 5;
                func_316();
            }
        }
        pub fn func_483() {
            let v_484 = func_124();
            let v_485 = 193;
            #[cfg(not(feature = "feat17"))]
            pub fn func_486() {
                let w_487 = 8;
                let v_488 = 12 + 5;
                let v_489 = 46 + 40;
                let w_490 = 8;
            }
        }
    }
    #[cfg(feature = "feat28")]
    pub static COUNTER_491: u32 = 0;
}
#[cfg(all(feature = "feat29", not(feature = "feat21")))]
pub fn func_21() {
    match 0 {
        0 => {
            let v_492 = func_394();
            match 2 {
                0 => {
                    match 4 {
                        0 => {
                            let v_493 = ext_3();
                            println!("msg_494 {}", 1);
                        }
                        _ => {}
                    }
                    pub fn func_156() {
                        func_210();
                    }
                    pub fn func_495() {
                        let w_496 = 1;
                        let w_497 = 4;
                        let v_498 = 969;
                    }
                }
                _ => {}
            }
            match 3 {
                0 => {
                    func_427();
                    println!("msg_499 {}", 1);
                    let v_500 = ext_0();
                }
                _ => {}
            }
            #[cfg(not(feature = "feat23"))]
            let v_501 = ext_2();
        }
        _ => {}
    }
    println!("msg_502 {}", 1);
    let _ = 79 + 70;
    let v_503 = func_353();
}
pub enum Kind_504 {
    Variant_505,
    Variant_506,
    Variant_507,
    #[cfg(feature = "feat20")]
    Variant_508,
}
pub fn func_509() {
    pub fn func_430() {
        #[cfg(feature = "feat6")]
        pub fn func_510() {
            pub fn func_511() {
                let w_512 = 3;
                println!("msg_513 {}", 1);
                let w_514 = 0;
            }
            let v_515 = ext_3();
            #[cfg(feature = "feat29")]
            let _ = 14 + 9;
            pub fn func_516() {
                let v_517 = func_417();
                let w_518 = 2;
                let v_519 = func_483();
            }
        }
        let v_520 = 390;
        func_298();
    }
    #[cfg(feature = "feat14")]
    let v_521 = func_412();
    let v_522 = func_474();
}
pub fn func_523() {
    let v_524 = func_239();
    let v_525 = 8 + 83;
    let v_526 = 87;
}
