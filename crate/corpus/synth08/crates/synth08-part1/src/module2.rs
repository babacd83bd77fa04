#[cfg(feature = "m1_2")]
pub type Alias_361 = u64;
#[cfg(feature = "m1_4")]
pub fn func_311() {
    if 15 > 10 {
        #[cfg(feature = "m1_6")]
        let v_362 = 40 + 54;
        func_151();
        match 4 {
            0 => {
                match 4 {
                    0 => {
                        println!("msg_363 {}", 1);
                        let v_364 = 743;
                    }
                    _ => {}
                }
                pub fn func_365() {
                    #[cfg(any(feature = "m1_6", feature = "m1_8", feature = "m1_8"))]
                    ext_2();
                    println!("msg_366 {}", 1);
                }
            }
            _ => {}
        }
    } else {
        #[cfg(feature = "m1_8")]
        ext_0();
        println!("msg_367 {}", 1);
    }
    if 15 > 10 {
        let v_368 = func_152();
        #[cfg(feature = "m1_6")]
        let _ = 88 + 8;
        let v_369 = 251;
    } else {
        let _ = 453;
    }
    let v_370 = 867;
    let v_371 = 650;
}
pub struct Handle_372;
impl Handle_372 {
    pub fn func_373() {
        #[cfg(feature = "m1_1")]
        let v_374 = 63 + 71;
        match 2 {
            0 => {
                ext_2();
                ext_1();
            }
            _ => {}
        }
        let v_375 = 606;
    }
}
pub fn func_376() {
    #[cfg(feature = "m1_6")]
    let v_377 = func_106();
    if 4 > 10 {
        let v_378 = 12 + 2;
        #[cfg(feature = "m1_8")]
        func_276();
        match 4 {
            0 => {
                func_129();
                let v_379 = ext_1();
            }
            _ => {}
        }
        if 14 > 10 {
            let v_380 = 263;
            let v_381 = func_187();
            let _ = 952;
            #[cfg(all(feature = "m1_7", not(feature = "m1_3")))]
            let v_382 = func_127();
        } else {
            #[cfg(feature = "m1_7")]
            let v_383 = 156;
            pub fn func_384() {
                let w_385 = 3;
                let w_386 = 4;
                let _ = 16 + 61;
                let v_387 = 9 + 56;
            }
            let v_388 = 20 + 40;
        }
    } else {
        ext_3();
        match 0 {
            0 => {
                if 15 > 10 {
                    let v_389 = ext_2();
                    let w_390 = 7;
                    let v_391 = 35;
                    let v_392 = func_328();
                } else {
                    let v_393 = func_151();
                }
            }
            _ => {}
        }
        pub fn func_394() {
            let v_395 = 58 + 58;
            let _ = 33 + 38;
        }
        func_248();
    }
    let v_396 = ext_2();
}
pub struct Handle_397;
impl Handle_397 {
    pub fn func_398() {
        let v_399 = func_322();
        let _ = 28 + 57;
        let v_400 = ext_3();
        let v_401 = func_248();
    }
}
pub fn func_402() {
    let v_403 = 611;
}
pub fn func_119() {
    match 4 {
        0 => {
            let v_404 = ext_0();
            ext_1();
            match 1 {
                0 => {
                    let v_405 = 3;
                    let v_406 = func_182();
                    #[cfg(not(feature = "m1_0"))]
                    let v_407 = 45 + 98;
                    match 0 {
                        0 => {
                            let v_408 = func_17();
                            let w_409 = 7;
                            let _ = 409;
                            let w_410 = 3;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    let v_411 = ext_1();
    if 10 > 10 {
        #[cfg(all(feature = "m1_4", not(feature = "m1_9")))]
        let v_412 = ext_1();
        let v_413 = 908;
        println!("msg_414 {}", 1);
    } else {
        pub fn func_415() {
            let _ = 5 + 92;
        }
        println!("msg_416 {}", 1);
        #[cfg(feature = "m1_1")]
        let v_417 = ext_2();
        if 4 > 10 {
            #[cfg(feature = "m1_4")]
            pub fn func_143() {
                let w_418 = 7;
                let w_419 = 7;
                let w_420 = 3;
            }
            let v_421 = func_29();
            func_143();
            match 0 {
                0 => {
                    let w_422 = 7;
                }
                _ => {}
            }
        } else {
            let v_423 = 741;
            #[cfg(not(feature = "m1_0"))]
            func_233();
            if 12 > 10 {
                let w_424 = 4;
                let w_425 = 8;
                let v_426 = ext_2();
            } else {
                let v_427 = ext_0();
                println!("msg_428 {}", 1);
            }
        }
    }
}
pub fn func_159() {
    if 16 > 10 {
        if 14 > 10 {
            let v_429 = ext_0();
        } else {
            let v_430 = 87 + 71;
            let v_431 = 817;
        }
    } else {
        if 8 > 10 {
            let v_432 = func_233();
        } else {
            let v_433 = func_308();
            func_402();
            let v_434 = ext_2();
        }
    }
    let v_435 = ext_3();
    pub fn func_436() {
        pub fn func_437() {
            pub fn func_438() {
                let w_439 = 1;
                func_415();
                #[cfg(feature = "m1_8")]
                let v_440 = func_153();
            }
            println!("msg_441 {}", 1);
        }
    }
}
pub enum Kind_442 {
    Variant_443,
    Variant_444,
    Variant_445,
}
pub fn func_446() {
    let v_447 = func_384();
}
pub fn func_448() {
    let _ = 12 + 41;
    #[cfg(any(feature = "m1_7", feature = "m1_4", feature = "m1_1"))]
    let _ = 365;
    #[cfg(feature = "m1_4")]
    ext_0();
    let v_449 = func_328();
}
pub fn func_450() {
    func_402();
    pub fn func_451() {
        println!("msg_452 {}", 1);
        ext_1();
    }
}
pub type Alias_453 = u64;
pub type Alias_454 = u64;
pub struct Record_455 {
    pub field_456: u32,
    pub field_457: u32,
    pub field_458: u32,
    pub field_459: u32,
}
pub struct Handle_460;
impl Handle_460 {
    pub fn func_461() {
        pub fn func_462() {
            let v_463 = func_311();
            let _ = 30 + 45;
        }
        let v_464 = 1 + 93;
        func_402();
    }
}
pub static COUNTER_465: u32 = 0;
pub mod inner_466 {
    use super::*;
    pub struct Record_467 {
        pub field_468: u32,
        pub field_469: u32,
        #[cfg(feature = "m1_4")]
        pub field_470: u32,
    }
}
pub fn func_471() {
    let v_472 = 95 + 46;
    #[cfg(feature = "m1_1")]
    let v_473 = func_182();
    if 10 > 10 {
        if 5 > 10 {
            match 3 {
                0 => {
                    let v_474 = func_394();
                    let v_475 = 0 + 71;
                    let v_476 = ext_2();
                    let v_477 = func_461();
                }
                _ => {}
            }
        } else {
            let v_478 = func_384();
            let v_479 = func_446();
            func_394();
        }
        pub fn func_480() {
            let _ = 85 + 24;
            if 7 > 10 {
                ext_3();
                let v_481 = ext_0();
                let v_482 = 60;
            } else {
                let w_483 = 1;
                let v_484 = ext_2();
                println!("msg_485 {}", 1);
                let w_486 = 0;
            }
            let _ = 79 + 21;
            match 3 {
                0 => {
                    let v_487 = 574;
                    #[cfg(not(feature = "m1_9"))]
                    func_276();
                    let w_488 = 6;
                }
                _ => {}
            }
        }
        #[cfg(not(feature = "m1_10"))]
        let _ = 44 + 21;
        let _ = 22 + 93;
    } else {
        func_224();
        println!("msg_489 {}", 1);
        let v_490 = 74 + 95;
        match 2 {
            0 => {
                #[cfg(not(feature = "m1_5"))]
                pub fn func_491() {
                    let w_492 = 1;
                    let v_493 = ext_2();
                }
                if 15 > 10 {
                    let w_494 = 2;
                    let v_495 = ext_3();
                    let w_496 = 7;
                } else {
                    println!("msg_497 {}", 1);
                }
                let v_498 = 24 + 60;
                pub fn func_499() {
                    let _ = 600;
                    ext_2();
                }
            }
            _ => {}
        }
    }
    let _ = 81 + 40;
}
pub const LIMIT_500: u32 = 67 + 81;
pub struct Record_501 {
    #[cfg(all(feature = "m1_2", not(feature = "m1_9")))]
    pub field_502: u32,
    pub field_503: u32,
    pub field_504: u32,
    #[cfg(feature = "m1_1")]
    pub field_505: u32,
}
use std::collections::HashMap;
pub struct Handle_506;
impl Handle_506 {
    pub fn func_328() {
        println!("msg_507 {}", 1);
    }
}
#[cfg(not(feature = "m1_3"))]
pub fn func_508() {
    if 4 > 10 {
        let v_509 = func_104();
    } else {
        let _ = 57 + 59;
        println!("msg_510 {}", 1);
        let _ = 295;
    }
    match 1 {
        0 => {
            let v_511 = 21 + 80;
        }
        _ => {}
    }
    println!("msg_512 {}", 1);
    pub fn func_513() {
        match 4 {
            0 => {
                println!("msg_514 {}", 1);
                let v_515 = func_305();
                let v_516 = 9 + 89;
            }
            _ => {}
        }
        println!("msg_517 {}", 1);
    }
}
