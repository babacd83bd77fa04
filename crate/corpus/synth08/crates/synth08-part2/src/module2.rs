pub const LIMIT_351: u32 = ext_0();
pub fn func_224() {
    let v_352 = func_218();
    #[cfg(feature = "m2_3")]
    let v_353 = ext_0();
    let _ = 685;
}
pub fn func_354() {
    println!("msg_355 {}", 1);
    let _ = 7 + 0;
}
#[cfg(feature = "m2_0")]
pub const LIMIT_356: u32 = ext_1();
#[cfg(feature = "m2_1")]
use std::collections::HashMap;
pub const LIMIT_357: u32 = ext_1();
pub fn func_125() {
    println!("msg_358 {}", 1);
    #[cfg(any(feature = "m2_1", feature = "m2_3", feature = "m2_9"))]
    let v_359 = ext_2();
    match 1 {
        0 => {
            let v_360 = 228;
            pub fn func_361() {
                #[cfg(feature = "m2_4")]
                let v_362 = 108;
                #[cfg(feature = "m2_5")]
                let v_363 = ext_0();
                let v_364 = func_186();
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
#[cfg(feature = "m2_6")]
pub fn func_365() {
    println!("msg_366 {}", 1);
    let v_367 = func_15();
}
pub fn func_368() {
    pub fn func_369() {
        pub fn func_370() {
            match 2 {
                0 => {
                    func_365();
                }
                _ => {}
            }
            let v_371 = 727;
            let v_372 = 791;
            match 0 {
                0 => {
                    let v_373 = 90 + 83;
                    let w_374 = 7;
                    func_162();
                }
                _ => {}
            }
        }
        let _ = 748;
        match 1 {
            0 => {
                pub fn func_361() {
                    let v_375 = func_75();
                    let w_376 = 1;
                    let w_377 = 3;
                }
                #[cfg(not(feature = "m2_8"))]
                pub fn func_378() {
                    let w_379 = 4;
                }
                pub fn func_380() {
                    let v_381 = ext_1();
                    let w_382 = 3;
                    let _ = 110;
                    let w_383 = 4;
                }
            }
            _ => {}
        }
    }
    match 2 {
        0 => {
            match 3 {
                0 => {
                    #[cfg(feature = "m2_0")]
                    let v_384 = func_224();
                    println!("msg_385 {}", 1);
                }
                _ => {}
            }
            let v_386 = func_6();
        }
        _ => {}
    }
    if 10 > 10 {
        let v_387 = ext_1();
        pub fn func_28() {
            ext_1();
        }
    } else {
        let v_388 = 41 + 22;
        let v_389 = func_320();
        let v_390 = 66 + 94;
        let v_391 = 65 + 11;
    }
}
pub fn func_392() {
    let v_393 = func_48();
}
#[cfg(feature = "m2_9")]
pub static COUNTER_394: u32 = 0;
pub fn func_395() {
    let v_396 = 42 + 19;
    let _ = 112;
    pub fn func_397() {
        let _ = 81 + 87;
        #[cfg(feature = "m2_4")]
        let v_398 = 92 + 37;
        let v_399 = ext_3();
    }
    println!("msg_400 {}", 1);
}
pub fn func_401() {
    let _ = 709;
    match 2 {
        0 => {
            let v_402 = func_368();
            ext_0();
        }
        _ => {}
    }
    #[cfg(feature = "m2_3")]
    let v_403 = func_222();
    let _ = 421;
}
pub fn func_404() {
    let v_405 = ext_0();
    func_83();
    if 8 > 10 {
        let v_406 = 206;
    } else {
        let v_407 = ext_3();
        #[cfg(any(feature = "m2_6", feature = "m2_0"))]
        let v_408 = 34 + 16;
        if 16 > 10 {
            #[cfg(feature = "m2_7")]
            let v_409 = ext_0();
            let v_410 = func_177();
            #[cfg(all(feature = "m2_7", not(feature = "m2_2")))]
            let v_411 = func_128();
            println!("msg_412 {}", 1);
        } else {
            #[cfg(feature = "m2_1")]
            func_325();
        }
    }
    ext_0();
}
pub type Alias_413 = u64;
pub const LIMIT_414: u32 = ext_2();
pub fn func_415() {
    let v_416 = func_111();
    pub fn func_241() {
        ext_2();
    }
    println!("msg_417 {}", 1);
    if 9 > 10 {
        if 17 > 10 {
            func_253();
            let v_418 = ext_2();
            let v_419 = 87;
        } else {
            #[cfg(feature = "m2_6")]
            let v_420 = 875;
            let v_421 = ext_0();
        }
    } else {
        let _ = 180;
        pub fn func_422() {
            match 0 {
                0 => {
                    let v_423 = 370;
                }
                _ => {}
            }
            #[cfg(feature = "m2_6")]
            let _ = 94;
        }
    }
}
pub mod inner_424 {
    use super::*;
    pub static COUNTER_425: u32 = 0;
    #[cfg(any(feature = "m2_5", feature = "m2_5"))]
    pub struct Record_426 {
        pub field_427: u32,
        pub field_428: u32,
        pub field_429: u32,
        pub field_430: u32,
    }
    #[cfg(feature = "m2_6")]
    pub fn func_6() {
        let v_431 = ext_0();
        if 4 > 10 {
            let v_432 = ext_1();
            let _ = 822;
        } else {
            func_404();
            if 0 > 10 {
                let w_433 = 2;
                let w_434 = 8;
                let w_435 = 7;
                #[cfg(feature = "m2_7")]
                let v_436 = func_119();
            } else {
                let w_437 = 3;
            }
            #[cfg(not(feature = "m2_2"))]
            pub fn func_325() {
                let w_438 = 5;
                let v_439 = func_4();
                let v_440 = 24 + 22;
                println!("msg_441 {}", 1);
            }
            #[cfg(not(feature = "m2_8"))]
            func_119();
        }
        println!("msg_442 {}", 1);
    }
}
#[cfg(feature = "m2_7")]
pub fn func_443() {
    let _ = 356;
    println!("msg_444 {}", 1);
    let v_445 = 62 + 52;
    ext_3();
}
pub fn func_446() {
    let v_447 = 80 + 75;
}
#[cfg(feature = "m2_0")]
pub fn func_448() {
    #[cfg(any(feature = "m2_1", feature = "m2_3"))]
    let _ = 69 + 32;
}
pub fn func_449() {
    let v_450 = func_28();
}
#[cfg(feature = "m2_7")]
pub fn func_451() {
    let v_452 = func_16();
    #[cfg(all(feature = "m2_9", not(feature = "m2_2")))]
    let v_453 = func_333();
}
pub fn func_454() {
    match 3 {
        0 => {
            println!("msg_455 {}", 1);
            pub fn func_456() {
                match 0 {
                    0 => {
                        #[cfg(feature = "m2_6")]
                        func_36();
                    }
                    _ => {}
                }
                println!("msg_457 {}", 1);
                println!("msg_458 {}", 1);
                let v_459 = ext_3();
            }
            #[cfg(all(feature = "m2_3", not(feature = "m2_10")))]
            let v_460 = 978;
        }
        _ => {}
    }
    let v_461 = 214;
    #[cfg(feature = "m2_0")]
    let v_462 = 78 + 74;
    let v_463 = func_280();
}
#[cfg(feature = "m2_6")]
pub static COUNTER_464: u32 = 0;
use std::collections::HashMap;
#[cfg(feature = "m2_4")]
pub fn func_465() {
    let v_466 = ext_0();
}
pub const LIMIT_467: u32 = func_96();
pub fn func_468() {
    let v_469 = 40 + 73;
    match 4 {
        0 => {
            let _ = 41 + 62;
        }
        _ => {}
    }
    #[cfg(any(feature = "m2_6", feature = "m2_7", feature = "m2_9"))]
    ext_0();
}
pub fn func_10() {
    println!("msg_470 {}", 1);
}
use std::collections::HashMap;
pub struct Handle_471;
impl Handle_471 {
    pub fn func_472() {
        let v_473 = 917;
        println!("msg_474 {}", 1);
        ext_0();
    }
    pub fn func_475() {
        println!("msg_476 {}", 1);
        if 13 > 10 {
            if 1 > 10 {
                let v_477 = ext_1();
            } else {
                let w_478 = 2;
                let v_479 = 17 + 34;
                let w_480 = 0;
            }
            ext_3();
            println!("msg_481 {}", 1);
            let v_482 = ext_0();
        } else {
            let v_483 = func_83();
        }
    }
}
pub type Alias_484 = u64;
pub struct Handle_485;
#[cfg(feature = "m2_5")]
impl Handle_485 {
    #[cfg(not(feature = "m2_10"))]
    pub fn func_486() {
        let v_487 = 889;
        ext_0();
        let v_488 = 90 + 14;
        println!("msg_489 {}", 1);
    }
}
pub struct Record_490 {
    pub field_491: u32,
    #[cfg(not(feature = "m2_2"))]
    pub field_492: u32,
    pub field_493: u32,
    pub field_494: u32,
}
pub enum Kind_495 {
    Variant_496,
    Variant_497,
    Variant_498,
    Variant_499,
}
use std::collections::HashMap;
pub fn func_500() {
    if 10 > 10 {
        println!("msg_501 {}", 1);
        func_284();
        match 2 {
            0 => {
                #[cfg(any(feature = "m2_9", feature = "m2_7", feature = "m2_1"))]
                let v_502 = func_253();
                pub fn func_503() {
                    let w_504 = 7;
                    let w_505 = 3;
                    let w_506 = 6;
                    let _ = 45;
                }
                let v_507 = func_241();
            }
            _ => {}
        }
        #[cfg(all(feature = "m2_7", not(feature = "m2_10")))]
        let v_508 = 17 + 44;
    } else {
        let v_509 = 22 + 12;
        let v_510 = 805;
    }
    #[cfg(feature = "m2_1")]
    func_503();
}
pub static COUNTER_511: u32 = 0;
pub fn func_512() {
    #[cfg(feature = "m2_0")]
    pub fn func_513() {
        if 6 > 10 {
            println!("msg_514 {}", 1);
            func_188();
        } else {
            let v_515 = ext_2();
            let v_516 = 298;
        }
        pub fn func_291() {
            match 1 {
                0 => {
                    let v_517 = 214;
                    func_333();
                    println!("msg_518 {}", 1);
                    func_456();
                }
                _ => {}
            }
            #[cfg(feature = "m2_1")]
            let _ = 363;
        }
    }
    let _ = 60 + 94;
}
