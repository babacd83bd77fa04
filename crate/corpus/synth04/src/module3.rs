#[cfg(feature = "feat9")]
pub fn func_260() {
    let v_471 = 962;
    println!("msg_472 {}", 1);
    let v_473 = func_234();
}
pub struct Handle_474;
impl Handle_474 {
    pub fn func_475() {
        if 19 > 10 {
            #[cfg(not(feature = "feat12"))]
            let v_476 = func_166();
            let v_477 = func_125();
            if 9 > 10 {
                let _ = 998;
            } else {
                let v_478 = func_191();
            }
            let v_479 = 627;
        } else {
            #[cfg(not(feature = "feat5"))]
            func_440();
        }
        let _ = 47 + 34;
        let v_480 = ext_3();
    }
    pub fn func_481() {
        let v_482 = 701;
    }
}
pub struct Record_483 {
    pub field_484: u32,
    pub field_485: u32,
}
pub struct Handle_486;
impl Handle_486 {
    pub fn func_487() {
        let _ = 996;
        let _ = 42 + 69;
        let v_488 = ext_2();
    }
}
pub fn func_489() {
    #[cfg(feature = "feat9")]
    let v_490 = 22 + 61;
    #[cfg(feature = "feat10")]
    let v_491 = 117;
    func_377();
}
pub static COUNTER_492: u32 = 0;
pub fn func_493() {
    let v_494 = 68 + 11;
    let v_495 = ext_2();
}
pub struct Handle_496;
impl Handle_496 {
    pub fn func_497() {
        if 11 > 10 {
            let v_498 = func_120();
            let v_499 = 960;
            let v_500 = func_155();
        } else {
            println!("msg_501 {}", 1);
            #[cfg(feature = "feat16")]
            let v_502 = 91 + 5;
        }
        let v_503 = func_3();
        #[cfg(feature = "feat6")]
        let v_504 = ext_0();
    }
}
pub fn func_505() {
    pub fn func_506() {
        let v_507 = 14 + 27;
    }
    #[cfg(all(feature = "feat14", not(feature = "feat11")))]
    let _ = 57 + 58;
    let v_508 = ext_1();
    let v_509 = ext_1();
}
pub struct Record_510 {
    pub field_511: u32,
}
pub type Alias_512 = u64;
pub mod inner_513 {
    use super::*;
    pub fn func_514() {
        match 3 {
            0 => {
                println!("msg_515 {}", 1);
            }
            _ => {}
        }
        func_82();
        let _ = 600;
    }
    pub fn func_516() {
        match 3 {
            0 => {
                func_92();
                #[cfg(feature = "feat16")]
                let v_517 = func_39();
            }
            _ => {}
        }
    }
}
pub fn func_403() {
    let v_518 = func_469();
    let _ = 9 + 96;
    match 2 {
        0 => {
            let v_519 = ext_0();
            let v_520 = func_273();
            pub fn func_521() {
                let v_522 = 958;
                let v_523 = func_448();
            }
        }
        _ => {}
    }
}
#[cfg(any(feature = "feat9", feature = "feat3", feature = "feat16"))]
pub struct Record_524 {
    pub field_525: u32,
}
#[cfg(all(feature = "feat0", not(feature = "feat7")))]
pub static COUNTER_526: u32 = 0;
#[cfg(feature = "feat14")]
pub mod inner_527 {
    use super::*;
    #[cfg(any(feature = "feat16", feature = "feat17", feature = "feat17"))]
    pub fn func_528() {
        func_156();
        #[cfg(feature = "feat18")]
        ext_0();
        println!("msg_529 {}", 1);
    }
    #[cfg(feature = "feat18")]
    pub struct Record_530 {
        pub field_531: u32,
        pub field_532: u32,
        pub field_533: u32,
        pub field_534: u32,
    }
    pub struct Handle_535;
    impl Handle_535 {
        pub fn func_536() {
            match 0 {
                0 => {
                    #[cfg(feature = "feat18")]
                    let v_537 = ext_1();
                    let w_538 = 5;
                }
                _ => {}
            }
            pub fn func_539() {
                let v_540 = 88 + 53;
                let w_541 = 6;
            }
            pub fn func_542() {
                let w_543 = 3;
                let _ = 526;
                let w_544 = 5;
                let v_545 = 70 + 32;
            }
        }
    }
}
pub const LIMIT_546: u32 = func_177();
pub fn func_547() {
    match 0 {
        0 => {
            println!("msg_548 {}", 1);
            func_155();
            let v_549 = 518;
        }
        _ => {}
    }
    pub fn func_258() {
        if 16 > 10 {
            #[cfg(feature = "feat13")]
            func_70();
        } else {
            println!("msg_550 {}", 1);
            println!("msg_551 {}", 1);
            println!("msg_552 {}", 1);
            ext_1();
        }
    }
    #[cfg(any(feature = "feat10", feature = "feat8"))]
    let v_553 = func_521();
    println!("msg_554 {}", 1);
}
pub struct Handle_555;
impl Handle_555 {
    pub fn func_556() {
        let v_557 = 70 + 86;
        let v_558 = 235;
    }
}
#[cfg(not(feature = "feat12"))]
pub struct Record_559 {
    pub field_560: u32,
    pub field_561: u32,
    pub field_562: u32,
}
pub struct Handle_563;
impl Handle_563 {
    pub fn func_564() {
        let v_565 = 774;
        match 4 {
            0 => {
                let v_566 = ext_1();
            }
            _ => {}
        }
        #[cfg(any(feature = "feat6", feature = "feat3", feature = "feat16"))]
        let v_567 = func_70();
        if 4 > 10 {
            let v_568 = func_412();
            match 2 {
                0 => {
                    let w_569 = 2;
                    let _ = 540;
                    let w_570 = 0;
                    #[cfg(any(feature = "feat13", feature = "feat13"))]
                    let v_571 = 44 + 3;
                }
                _ => {}
            }
        } else {
            match 4 {
                0 => {
                    println!("msg_572 {}", 1);
                    let w_573 = 0;
                }
                _ => {}
            }
            pub fn func_574() {
                func_85();
            }
        }
    }
    pub fn func_575() {
        println!("msg_576 {}", 1);
        let v_577 = 480;
        let v_578 = func_536();
    }
}
#[cfg(any(feature = "feat13", feature = "feat8"))]
pub mod inner_579 {
    use super::*;
    pub const LIMIT_580: u32 = func_403();
    pub fn func_581() {
        ext_1();
    }
}
pub const LIMIT_582: u32 = 292;
pub fn func_583() {
    let v_584 = func_425();
    let v_585 = 63 + 4;
    match 0 {
        0 => {
            pub fn func_586() {
                println!("msg_587 {}", 1);
            }
            #[cfg(feature = "feat3")]
            let v_588 = func_506();
            func_204();
        }
        _ => {}
    }
    if 1 > 10 {
        let v_589 = 765;
        func_539();
        println!("msg_590 {}", 1);
    } else {
        func_521();
        let v_591 = func_360();
        let v_592 = 74 + 64;
    }
}
#[cfg(all(feature = "feat14", not(feature = "feat7")))]
pub mod inner_593 {
    use super::*;
    pub type Alias_594 = u64;
}
pub enum Kind_595 {
    Variant_596,
}
pub fn func_597() {
    ext_0();
    func_171();
    let v_598 = 476;
}
pub fn func_278() {
    match 2 {
        0 => {
            let v_599 = func_302();
        }
        _ => {}
    }
    #[cfg(feature = "feat1")]
    let v_600 = 82 + 25;
}
use std::collections::HashMap;
pub fn func_601() {
    if 1 > 10 {
        let _ = 11 + 42;
        println!("msg_602 {}", 1);
        let v_603 = func_536();
    } else {
        println!("msg_604 {}", 1);
        #[cfg(feature = "feat1")]
        func_481();
        let v_605 = func_583();
    }
    let v_606 = func_171();
    let _ = 24 + 98;
    let _ = 271;
}
pub type Alias_607 = u64;
pub fn func_608() {
    let v_609 = func_272();
    #[cfg(feature = "feat9")]
    let v_610 = func_542();
}
pub fn func_611() {
    #[cfg(all(feature = "feat9", not(feature = "feat12")))]
    func_516();
    pub fn func_70() {
        let v_612 = func_396();
        println!("msg_613 {}", 1);
        if 15 > 10 {
            match 2 {
                0 => {
                    let w_614 = 6;
                    let v_615 = 960;
                    func_223();
                    ext_0();
                }
                _ => {}
            }
            println!("msg_616 {}", 1);
            match 4 {
                0 => {
                    #[cfg(not(feature = "feat2"))]
                    let v_617 = func_380();
                    #[cfg(feature = "feat9")]
                    func_539();
                    let v_618 = 454;
                    let w_619 = 8;
                }
                _ => {}
            }
            let v_620 = ext_0();
        } else {
            ext_0();
        }
    }
    match 3 {
        0 => {
            #[cfg(not(feature = "feat12"))]
            func_443();
            ext_2();
            if 4 > 10 {
                let v_621 = ext_0();
                pub fn func_622() {
                    func_166();
                }
                #[cfg(all(feature = "feat6", not(feature = "feat5")))]
                ext_3();
                pub fn func_120() {
                    let v_623 = func_22();
                }
            } else {
                pub fn func_166() {
                    let v_624 = func_332();
                    let v_625 = ext_3();
                    let w_626 = 2;
                    let w_627 = 7;
                }
                let v_628 = func_153();
                let v_629 = ext_1();
            }
        }
        _ => {}
    }
}
