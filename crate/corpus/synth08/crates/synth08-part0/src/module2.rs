use std::collections::HashMap;
pub fn func_360() {
    let v_361 = ext_2();
}
#[cfg(feature = "m0_6")]
pub fn func_362() {
    #[cfg(feature = "m0_9")]
    let v_363 = func_360();
    let v_364 = func_203();
    println!("msg_365 {}", 1);
}
#[cfg(feature = "m0_10")]
pub fn func_366() {
    let v_367 = 56 + 75;
    ext_3();
    let v_368 = func_250();
}
pub const LIMIT_369: u32 = 13 + 98;
#[cfg(feature = "m0_10")]
pub struct Record_370 {
    pub field_371: u32,
    pub field_372: u32,
}
pub fn func_373() {
    if 13 > 10 {
        func_335();
        let v_374 = 86 + 7;
        let v_375 = ext_3();
    } else {
        if 14 > 10 {
            func_227();
            let _ = 63 + 98;
        } else {
            ext_1();
            println!("msg_376 {}", 1);
            println!("msg_377 {}", 1);
        }
        if 2 > 10 {
            let v_378 = 817;
            pub fn func_379() {
                let v_380 = func_250();
                let v_381 = 780;
                let w_382 = 5;
                let v_383 = 147;
            }
            let v_384 = func_250();
            #[cfg(feature = "m0_10")]
            let v_385 = 215;
        } else {
            let _ = 71 + 12;
            if 14 > 10 {
                #[cfg(not(feature = "m0_8"))]
                let v_386 = 208;
                let w_387 = 7;
            } else {
                let _ = 964;
                #[cfg(feature = "m0_9")]
                ext_2();
            }
            let v_388 = func_246();
        }
    }
    let v_389 = func_113();
    match 0 {
        0 => {
            #[cfg(all(feature = "m0_9", not(feature = "m0_4")))]
            let _ = 71 + 93;
            ext_2();
            println!("msg_390 {}", 1);
        }
        _ => {}
    }
}
pub mod inner_391 {
    use super::*;
    use std::collections::HashMap;
    pub enum Kind_392 {
        Variant_393,
        Variant_394,
    }
    pub struct Handle_395;
    impl Handle_395 {
        pub fn func_396() {
            pub fn func_397() {
                let v_398 = 816;
                func_34();
            }
            match 2 {
                0 => {
                    let w_399 = 8;
                    let v_400 = func_397();
                    let v_401 = ext_1();
                }
                _ => {}
            }
            let v_402 = func_330();
            let v_403 = ext_3();
        }
    }
}
pub mod inner_404 {
    use super::*;
    pub fn func_405() {
        let v_406 = ext_3();
        #[cfg(feature = "m0_9")]
        let v_407 = 55 + 43;
    }
}
pub type Alias_408 = u64;
pub type Alias_409 = u64;
#[cfg(feature = "m0_6")]
pub struct Record_410 {
    pub field_411: u32,
    #[cfg(feature = "m0_10")]
    pub field_412: u32,
    pub field_413: u32,
    pub field_414: u32,
}
#[cfg(feature = "m0_9")]
pub static COUNTER_415: u32 = 0;
pub fn func_379() {
    #[cfg(all(feature = "m0_9", not(feature = "m0_7")))]
    pub fn func_416() {
        let v_417 = ext_0();
        println!("msg_418 {}", 1);
        func_80();
        let v_419 = ext_3();
    }
}
pub static COUNTER_420: u32 = 0;
pub fn func_421() {
    func_61();
    let v_422 = 90 + 26;
    println!("msg_423 {}", 1);
    let v_424 = func_165();
}
pub fn func_425() {
    func_343();
}
pub struct Handle_426;
impl Handle_426 {
    pub fn func_427() {
        #[cfg(any(feature = "m0_10", feature = "m0_10"))]
        let v_428 = 31 + 77;
        func_76();
        let v_429 = 2;
        let v_430 = ext_3();
    }
    pub fn func_431() {
        func_289();
    }
}
pub enum Kind_432 {
    Variant_433,
    Variant_434,
    Variant_435,
}
use std::collections::HashMap;
#[cfg(all(feature = "m0_9", not(feature = "m0_8")))]
pub static COUNTER_436: u32 = 0;
pub struct Handle_437;
impl Handle_437 {
    pub fn func_349() {
        if 2 > 10 {
            ext_2();
            println!("msg_438 {}", 1);
            let v_439 = 36;
            println!("msg_440 {}", 1);
        } else {
            ext_2();
            let v_441 = ext_3();
            func_83();
            let v_442 = func_23();
        }
        let v_443 = 98 + 59;
        let v_444 = 858;
    }
    pub fn func_354() {
        #[cfg(feature = "m0_9")]
        let v_445 = func_356();
        println!("msg_446 {}", 1);
    }
}
pub fn func_447() {
    println!("msg_448 {}", 1);
    let v_449 = func_212();
    println!("msg_450 {}", 1);
}
pub fn func_451() {
    ext_2();
}
#[cfg(feature = "m0_10")]
pub const LIMIT_452: u32 = func_320();
use std::collections::HashMap;
#[cfg(feature = "m0_5")]
pub fn func_453() {
    pub fn func_454() {
        match 2 {
            0 => {
                match 1 {
                    0 => {
                        let w_455 = 8;
                        let v_456 = ext_1();
                    }
                    _ => {}
                }
                func_451();
                func_42();
            }
            _ => {}
        }
    }
}
pub fn func_457() {
    let v_458 = ext_0();
    let v_459 = func_17();
    let v_460 = 36 + 5;
}
pub mod inner_461 {
    use super::*;
    use std::collections::HashMap;
    pub static COUNTER_462: u32 = 0;
    #[cfg(not(feature = "m0_7"))]
    pub enum Kind_463 {
        Variant_464,
        Variant_465,
        Variant_466,
        Variant_467,
    }
}
#[cfg(feature = "m0_10")]
pub mod inner_468 {
    use super::*;
    pub mod inner_469 {
        use super::*;
        pub fn func_470() {
            println!("msg_471 {}", 1);
        }
    }
}
#[cfg(feature = "m0_5")]
pub mod inner_472 {
    use super::*;
    #[cfg(feature = "m0_6")]
    pub fn func_473() {
        ext_0();
        match 3 {
            0 => {
                #[cfg(feature = "m0_10")]
                let v_474 = func_275();
                #[cfg(feature = "m0_9")]
                let v_475 = func_171();
            }
            _ => {}
        }
        #[cfg(feature = "m0_9")]
        let v_476 = 300;
        pub fn func_477() {
            match 1 {
                0 => {
                    let v_478 = 77 + 72;
                    let v_479 = ext_2();
                    let w_480 = 0;
                    let v_481 = ext_1();
                }
                _ => {}
            }
            #[cfg(all(feature = "m0_10", not(feature = "m0_7")))]
            let _ = 12 + 37;
            let v_482 = 16 + 93;
            let v_483 = ext_2();
        }
    }
    pub fn func_484() {
        let _ = 90 + 92;
        let v_485 = func_451();
        let v_486 = 195;
        let _ = 954;
    }
    pub type Alias_487 = u64;
}
pub mod inner_488 {
    use super::*;
    pub struct Handle_489;
    #[cfg(feature = "m0_5")]
    impl Handle_489 {
        pub fn func_490() {
            ext_0();
            if 10 > 10 {
                #[cfg(any(feature = "m0_9", feature = "m0_10"))]
                let v_491 = func_313();
                let _ = 50 + 57;
                let w_492 = 0;
            } else {
                let w_493 = 8;
                let _ = 95 + 18;
                #[cfg(feature = "m0_10")]
                let v_494 = func_309();
                let _ = 607;
            }
            let v_495 = ext_0();
        }
        pub fn func_496() {
            pub fn func_497() {
                func_228();
                func_335();
                #[cfg(feature = "m0_6")]
                func_23();
                #[cfg(feature = "m0_9")]
                let v_498 = func_34();
            }
            println!("msg_499 {}", 1);
            #[cfg(feature = "m0_9")]
            let v_500 = 18 + 11;
        }
    }
}
pub enum Kind_501 {
    Variant_502,
    Variant_503,
    Variant_504,
}
pub enum Kind_505 {
    Variant_506,
    Variant_507,
}
pub fn func_427() {
    let v_508 = func_61();
    let _ = 15 + 99;
    let v_509 = func_5();
    func_484();
}
#[cfg(all(feature = "m0_10", not(feature = "m0_2")))]
pub static COUNTER_510: u32 = 0;
pub fn func_511() {
    let v_512 = func_335();
}
#[cfg(all(feature = "m0_6", not(feature = "m0_7")))]
use std::collections::HashMap;
#[cfg(feature = "m0_9")]
pub struct Record_513 {
    pub field_514: u32,
    pub field_515: u32,
    pub field_516: u32,
}
#[cfg(any(feature = "m0_10", feature = "m0_9", feature = "m0_6"))]
pub mod inner_517 {
    use super::*;
    pub fn func_518() {
        let v_519 = ext_3();
    }
}
pub fn func_520() {
    #[cfg(not(feature = "m0_7"))]
    let v_521 = 169;
}
use std::collections::HashMap;
pub fn func_379() {
    let v_522 = func_34();
    let v_523 = ext_0();
    let _ = 958;
    match 2 {
        0 => {
            if 19 > 10 {
                ext_1();
                let v_524 = 360;
                let v_525 = 26;
                let v_526 = func_332();
            } else {
                func_320();
            }
            pub fn func_527() {
                let _ = 350;
                func_17();
                #[cfg(not(feature = "m0_2"))]
                let v_528 = 16 + 2;
            }
        }
        _ => {}
    }
}
pub fn func_529() {
    #[cfg(any(feature = "m0_5", feature = "m0_6"))]
    func_107();
    #[cfg(feature = "m0_9")]
    let v_530 = func_317();
    let v_531 = func_227();
}
use std::collections::HashMap;
pub struct Record_532 {
    pub field_533: u32,
    pub field_534: u32,
    pub field_535: u32,
}
