pub fn func_383() {
    match 3 {
        0 => {
            let v_384 = 94 + 59;
        }
        _ => {}
    }
    let v_385 = 58;
    let v_386 = func_285();
}
use std::collections::HashMap;
pub fn func_387() {
    let v_388 = 10 + 24;
    let v_389 = ext_2();
}
pub fn func_390() {
    if 10 > 10 {
        println!("msg_391 {}", 1);
        let v_392 = 148;
    } else {
        let _ = 71 + 58;
        pub fn func_393() {
            let v_394 = ext_2();
        }
        if 5 > 10 {
            let _ = 730;
            #[cfg(not(feature = "feat3"))]
            let v_395 = 33 + 10;
        } else {
            let _ = 369;
        }
        let v_396 = func_338();
    }
    println!("msg_397 {}", 1);
    func_366();
    println!("msg_398 {}", 1);
}
pub struct Handle_399;
impl Handle_399 {
    pub fn func_400() {
        let v_401 = func_358();
        let v_402 = ext_2();
        let v_403 = 41 + 16;
    }
}
pub mod inner_404 {
    use super::*;
    pub const LIMIT_405: u32 = func_26();
    pub struct Record_406 {
        pub field_407: u32,
    }
    pub fn func_408() {
        let v_409 = 30 + 72;
        println!("msg_410 {}", 1);
    }
}
pub enum Kind_411 {
    Variant_412,
}
pub struct Record_413 {
    pub field_414: u32,
    pub field_415: u32,
}
pub fn func_288() {
    func_38();
}
pub fn func_416() {
    pub fn func_417() {
        match 2 {
            0 => {
                func_154();
                let v_418 = 22 + 94;
            }
            _ => {}
        }
    }
    match 4 {
        0 => {
            let v_419 = 38 + 1;
            pub fn func_420() {
                if 4 > 10 {
                    let v_421 = 554;
                    ext_3();
                    let w_422 = 8;
                } else {
                    let v_423 = func_145();
                    func_342();
                }
            }
            ext_0();
            ext_2();
        }
        _ => {}
    }
    ext_1();
    match 2 {
        0 => {
            println!("msg_424 {}", 1);
            pub fn func_425() {
                println!("msg_426 {}", 1);
            }
        }
        _ => {}
    }
}
pub fn func_427() {
    if 13 > 10 {
        println!("msg_428 {}", 1);
        let v_429 = func_273();
        let v_430 = 234;
        func_285();
    } else {
        match 4 {
            0 => {
                let v_431 = func_359();
                pub fn func_432() {
                    let w_433 = 4;
                    let _ = 85 + 47;
                }
                let v_434 = func_379();
            }
            _ => {}
        }
        let _ = 386;
        let v_435 = func_379();
        match 0 {
            0 => {
                println!("msg_436 {}", 1);
                match 0 {
                    0 => {
                        let v_437 = ext_3();
                        let _ = 100;
                        let v_438 = 75 + 30;
                        let v_439 = 534;
                    }
                    _ => {}
                }
                #[cfg(not(feature = "feat11"))]
                let v_440 = func_193();
            }
            _ => {}
        }
    }
    pub fn func_26() {
        if 9 > 10 {
            let v_441 = 65 + 82;
            if 6 > 10 {
                println!("msg_442 {}", 1);
                let v_443 = func_416();
            } else {
                let v_444 = func_383();
                let v_445 = func_61();
                let v_446 = 3 + 67;
                let v_447 = ext_2();
            }
            let v_448 = 655;
            if 11 > 10 {
                let _ = 12 + 12;
            } else {
                let w_449 = 3;
                let w_450 = 0;
            }
        } else {
            let v_451 = func_328();
            let v_452 = 817;
            let v_453 = 57 + 1;
            println!("msg_454 {}", 1);
        }
        ext_0();
        let v_455 = func_167();
    }
    let v_456 = 20 + 77;
}
pub type Alias_457 = u64;
use std::collections::HashMap;
pub static COUNTER_458: u32 = 0;
pub const LIMIT_459: u32 = ext_1();
pub fn func_460() {
    let v_461 = func_242();
}
pub static COUNTER_462: u32 = 0;
pub fn func_463() {
    func_312();
    let v_464 = 45 + 96;
    pub fn func_465() {
        let v_466 = func_383();
        let v_467 = ext_1();
        println!("msg_468 {}", 1);
        if 13 > 10 {
            let v_469 = func_301();
            func_155();
            println!("msg_470 {}", 1);
        } else {
            if 11 > 10 {
                let v_471 = 957;
                let v_472 = 70 + 51;
                let w_473 = 8;
            } else {
                let w_474 = 3;
                let v_475 = func_143();
                let _ = 659;
            }
            match 0 {
                0 => {
                    let v_476 = func_147();
                    let v_477 = func_432();
                    let w_478 = 3;
                    ext_0();
                }
                _ => {}
            }
        }
    }
}
pub const LIMIT_479: u32 = func_288();
pub const LIMIT_480: u32 = func_230();
pub enum Kind_481 {
    Variant_482,
}
pub static COUNTER_483: u32 = 0;
#[cfg(not(feature = "feat3"))]
use std::collections::HashMap;
#[cfg(not(feature = "feat11"))]
pub fn func_484() {
    let v_485 = 88 + 89;
    pub fn func_486() {
        let v_487 = 64 + 71;
        let v_488 = func_301();
        println!("msg_489 {}", 1);
        match 2 {
            0 => {
                println!("msg_490 {}", 1);
                pub fn func_491() {
                    let v_492 = 93 + 88;
                }
                let v_493 = func_460();
                let _ = 79 + 90;
            }
            _ => {}
        }
    }
}
pub fn func_494() {
    let v_495 = func_383();
}
pub fn func_496() {
    let _ = 27 + 27;
    ext_2();
    ext_1();
    func_29();
}
pub fn func_432() {
    let _ = 725;
    println!("msg_497 {}", 1);
}
pub static COUNTER_498: u32 = 0;
pub fn func_499() {
    let v_500 = func_496();
    let v_501 = 783;
}
pub mod inner_502 {
    use super::*;
    pub fn func_503() {
        match 4 {
            0 => {
                let v_504 = 571;
            }
            _ => {}
        }
    }
}
pub fn func_505() {
    func_116();
    let _ = 17 + 83;
}
pub struct Record_506 {
    pub field_507: u32,
    pub field_508: u32,
}
pub static COUNTER_509: u32 = 0;
pub fn func_510() {
    println!("msg_511 {}", 1);
    println!("msg_512 {}", 1);
    println!("msg_513 {}", 1);
}
pub mod inner_514 {
    use super::*;
    pub fn func_515() {
        let v_516 = 638;
    }
    pub enum Kind_517 {
        Variant_518,
        Variant_519,
        Variant_520,
        Variant_521,
    }
}
pub fn func_484() {
    let v_522 = func_499();
    let v_523 = 83 + 33;
    let _ = 31 + 70;
}
pub fn func_524() {
    let v_525 = 62 + 94;
    ext_3();
    let v_526 = 420;
    func_179();
}
pub fn func_527() {
    pub fn func_528() {
        if 5 > 10 {
            println!("msg_529 {}", 1);
        } else {
            ext_1();
            let v_530 = 91 + 46;
        }
        println!("msg_531 {}", 1);
    }
    let _ = 936;
    println!("msg_532 {}", 1);
    func_40();
}
use std::collections::HashMap;
pub fn func_533() {
    if 15 > 10 {
        let v_534 = 510;
        let v_535 = 586;
    } else {
        if 16 > 10 {
            let v_536 = ext_1();
            let v_537 = 51 + 21;
            let v_538 = func_105();
            match 2 {
                0 => {
                    println!("msg_539 {}", 1);
                }
                _ => {}
            }
        } else {
            println!("msg_540 {}", 1);
        }
    }
}
pub fn func_541() {
    let v_542 = 700;
}
pub enum Kind_543 {
    Variant_544,
    Variant_545,
}
use std::collections::HashMap;
pub fn func_546() {
    ext_3();
    pub fn func_547() {
        let _ = 912;
        let v_548 = func_223();
        let v_549 = 61 + 37;
        pub fn func_550() {
            match 4 {
                0 => {
                    let w_551 = 0;
                }
                _ => {}
            }
            let _ = 89 + 43;
            let v_552 = ext_3();
        }
    }
}
pub fn func_553() {
    pub fn func_554() {
        let v_555 = ext_2();
        let _ = 50 + 80;
        func_107();
    }
    let v_556 = 781;
}
