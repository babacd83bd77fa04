pub enum Kind_366 {
    Variant_367,
}
use std::collections::HashMap;
pub type Alias_368 = u64;
pub const LIMIT_369: u32 = func_10();
pub struct Handle_370;
impl Handle_370 {
    pub fn func_371() {
        #[cfg(all(feature = "m2_5", not(feature = "m2_6")))]
        let v_372 = func_140();
        pub fn func_96() {
            let v_373 = ext_3();
            let v_374 = 343;
        }
        let v_375 = 5 + 71;
        let v_376 = 8 + 84;
    }
}
pub fn func_377() {
    func_81();
    match 1 {
        0 => {
            let v_378 = 968;
            println!("msg_379 {}", 1);
            if 4 > 10 {
                let _ = 6 + 56;
                #[cfg(feature = "m2_5")]
                ext_3();
            } else {
                let v_380 = ext_2();
            }
            let v_381 = func_104();
        }
        _ => {}
    }
    if 18 > 10 {
        let v_382 = 70 + 43;
        pub fn func_383() {
            ext_3();
        }
        let v_384 = ext_2();
        match 0 {
            0 => {
                match 2 {
                    0 => {
                        ext_0();
                        println!("msg_385 {}", 1);
                        let w_386 = 6;
                    }
                    _ => {}
                }
                let v_387 = 592;
            }
            _ => {}
        }
    } else {
        pub fn func_388() {
            let v_389 = 43 + 40;
            if 11 > 10 {
                let v_390 = func_79();
            } else {
                let v_391 = 20 + 41;
                let v_392 = func_335();
                let w_393 = 8;
            }
            println!("msg_394 {}", 1);
        }
        if 12 > 10 {
            func_11();
            println!("msg_395 {}", 1);
            let v_396 = func_112();
        } else {
            println!("msg_397 {}", 1);
            let v_398 = 384;
        }
    }
    if 12 > 10 {
        let v_399 = 903;
        println!("msg_400 {}", 1);
        #[cfg(feature = "m2_0")]
        let v_401 = func_388();
        let v_402 = func_232();
    } else {
        #[cfg(feature = "m2_0")]
        let v_403 = ext_1();
        let v_404 = ext_1();
        let v_405 = 685;
        if 15 > 10 {
            if 17 > 10 {
                let v_406 = func_307();
                let v_407 = func_232();
                let w_408 = 7;
                func_178();
            } else {
                let v_409 = 97 + 92;
                let v_410 = 29 + 22;
                let _ = 121;
                let w_411 = 3;
            }
        } else {
            let v_412 = 59 + 18;
            let _ = 73 + 8;
            pub fn func_413() {
                ext_3();
                println!("msg_414 {}", 1);
            }
        }
    }
}
pub fn func_415() {
    let v_416 = func_140();
    #[cfg(any(feature = "m2_4", feature = "m2_4"))]
    pub fn func_417() {
        if 11 > 10 {
            let v_418 = func_178();
            let v_419 = func_413();
            #[cfg(feature = "m2_5")]
            let v_420 = func_92();
            if 11 > 10 {
                let _ = 61 + 33;
                let v_421 = 50 + 7;
                let w_422 = 4;
            } else {
                let w_423 = 1;
                let v_424 = func_325();
                func_156();
                let w_425 = 6;
            }
        } else {
            func_21();
            println!("msg_426 {}", 1);
            let v_427 = 115;
            println!("msg_428 {}", 1);
        }
    }
    pub fn func_429() {
        if 7 > 10 {
            let v_430 = ext_3();
            let v_431 = ext_3();
            let v_432 = func_233();
            match 2 {
                0 => {
                    let w_433 = 8;
                    #[cfg(feature = "m2_7")]
                    let v_434 = ext_1();
                    let v_435 = 669;
                }
                _ => {}
            }
        } else {
            ext_2();
            if 13 > 10 {
                let w_436 = 6;
                let w_437 = 4;
                let _ = 138;
                let v_438 = 895;
            } else {
                let v_439 = func_163();
                let v_440 = ext_0();
                func_260();
            }
        }
    }
}
pub fn func_441() {
    #[cfg(feature = "m2_4")]
    let v_442 = func_270();
}
pub enum Kind_443 {
    Variant_444,
    #[cfg(feature = "m2_3")]
    Variant_445,
    Variant_446,
}
pub struct Record_447 {
    pub field_448: u32,
    pub field_449: u32,
    pub field_450: u32,
    pub field_451: u32,
}
#[cfg(feature = "m2_8")]
pub fn func_452() {
    let v_453 = 456;
    let v_454 = 92 + 5;
    println!("msg_455 {}", 1);
}
#[cfg(feature = "m2_0")]
use std::collections::HashMap;
#[cfg(feature = "m2_2")]
pub static COUNTER_456: u32 = 0;
#[cfg(feature = "m2_7")]
use std::collections::HashMap;
pub fn func_457() {
    let v_458 = 90 + 28;
}
pub fn func_459() {
    func_347();
    let v_460 = func_201();
    pub fn func_461() {
        let v_462 = func_377();
        let v_463 = 90 + 90;
        let v_464 = ext_1();
    }
    #[cfg(any(feature = "m2_0", feature = "m2_2", feature = "m2_4"))]
    let v_465 = 703;
}
pub type Alias_466 = u64;
pub struct Handle_467;
impl Handle_467 {
    pub fn func_468() {
        if 4 > 10 {
            let v_469 = ext_0();
            let _ = 81 + 20;
            match 0 {
                0 => {
                    #[cfg(any(feature = "m2_5", feature = "m2_7", feature = "m2_0"))]
                    func_30();
                }
                _ => {}
            }
            let v_470 = ext_1();
        } else {
            match 1 {
                0 => {
                    let v_471 = ext_3();
                    #[cfg(not(feature = "m2_6"))]
                    ext_2();
                    let w_472 = 7;
                    let v_473 = func_71();
                }
                _ => {}
            }
            if 9 > 10 {
                println!("msg_474 {}", 1);
                ext_1();
                #[cfg(any(feature = "m2_5", feature = "m2_7", feature = "m2_0"))]
                let v_475 = 770;
            } else {
                let v_476 = 95 + 25;
            }
        }
        #[cfg(feature = "m2_0")]
        ext_0();
        let v_477 = 259;
    }
}
pub static COUNTER_478: u32 = 0;
#[cfg(feature = "m2_7")]
pub const LIMIT_479: u32 = func_97();
pub struct Record_480 {
    pub field_481: u32,
    pub field_482: u32,
    pub field_483: u32,
    #[cfg(feature = "m2_3")]
    pub field_484: u32,
}
pub const LIMIT_485: u32 = 6 + 66;
pub type Alias_486 = u64;
pub struct Record_487 {
    #[cfg(feature = "m2_2")]
    pub field_488: u32,
    pub field_489: u32,
}
pub enum Kind_490 {
    Variant_491,
}
pub fn func_492() {
    let v_493 = ext_0();
    println!("msg_494 {}", 1);
    func_30();
}
pub static COUNTER_495: u32 = 0;
use std::collections::HashMap;
pub fn func_496() {
    println!("msg_497 {}", 1);
    let v_498 = 70;
    match 1 {
        0 => {
            let v_499 = func_415();
            func_156();
            let v_500 = func_383();
        }
        _ => {}
    }
}
pub fn func_270() {
    println!("msg_501 {}", 1);
}
pub fn func_502() {
    pub fn func_503() {
        match 2 {
            0 => {
                let v_504 = 24 + 8;
                match 3 {
                    0 => {
                        func_136();
                        println!("msg_505 {}", 1);
                        func_377();
                        func_457();
                    }
                    _ => {}
                }
                #[cfg(feature = "m2_7")]
                let v_506 = ext_3();
            }
            _ => {}
        }
        let v_507 = 388;
        pub fn func_508() {
            let v_509 = ext_3();
            pub fn func_510() {
                let w_511 = 8;
                let w_512 = 7;
                let v_513 = func_21();
            }
        }
        if 8 > 10 {
            let v_514 = func_10();
            match 0 {
                0 => {
                    ext_1();
                    let w_515 = 4;
                    ext_3();
                    #[cfg(feature = "m2_8")]
                    func_47();
                }
                _ => {}
            }
            let v_516 = func_210();
            func_200();
        } else {
            let v_517 = ext_3();
            if 10 > 10 {
                println!("msg_518 {}", 1);
                let v_519 = 25 + 74;
                let v_520 = 12 + 84;
                println!("msg_521 {}", 1);
            } else {
                let v_522 = ext_0();
                #[cfg(feature = "m2_8")]
                let _ = 69 + 35;
                #[cfg(feature = "m2_8")]
                let v_523 = func_13();
            }
        }
    }
    #[cfg(any(feature = "m2_8", feature = "m2_4", feature = "m2_4"))]
    let v_524 = 65 + 8;
}
pub struct Record_525 {
    pub field_526: u32,
    pub field_527: u32,
}
pub struct Handle_528;
impl Handle_528 {
    pub fn func_529() {
        ext_2();
        #[cfg(feature = "m2_0")]
        let v_530 = ext_3();
        pub fn func_531() {
            pub fn func_532() {
                let w_533 = 6;
                let _ = 98 + 59;
            }
        }
        if 5 > 10 {
            func_197();
        } else {
            #[cfg(not(feature = "m2_6"))]
            pub fn func_534() {
                let _ = 36 + 68;
            }
            match 0 {
                0 => {
                    #[cfg(not(feature = "m2_6"))]
                    let v_535 = func_194();
                    #[cfg(feature = "m2_8")]
                    ext_1();
                    let _ = 24;
                }
                _ => {}
            }
            if 2 > 10 {
                #[cfg(feature = "m2_4")]
                let v_536 = 73 + 43;
                let v_537 = ext_2();
                let v_538 = func_58();
                let _ = 96 + 56;
            } else {
                let w_539 = 4;
                let w_540 = 6;
            }
        }
    }
    pub fn func_541() {
        #[cfg(feature = "m2_7")]
        let v_542 = func_413();
        let _ = 21 + 91;
        #[cfg(feature = "m2_2")]
        pub fn func_543() {
            let v_544 = 33 + 7;
            let v_545 = 851;
            let v_546 = func_62();
        }
    }
}
