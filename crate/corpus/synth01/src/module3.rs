#[cfg(feature = "feat4")]
pub fn func_478() {
    println!("msg_479 {}", 1);
    if 19 > 10 {
        let _ = 42 + 15;
        #[cfg(feature = "feat9")]
        let v_480 = ext_2();
        let v_481 = ext_3();
        pub fn func_317() {
            ext_1();
            #[cfg(feature = "feat9")]
            pub fn func_482() {
                let _ = 169;
                println!("msg_483 {}", 1);
            }
            pub fn func_484() {
                let w_485 = 4;
                func_426();
                let w_486 = 2;
                let w_487 = 1;
            }
        }
    } else {
        println!("msg_488 {}", 1);
        pub fn func_469() {
            pub fn func_489() {
                #[cfg(feature = "feat8")]
                let v_490 = ext_2();
            }
        }
        if 10 > 10 {
            #[cfg(feature = "feat9")]
            let v_491 = 73 + 79;
            #[cfg(any(feature = "feat8", feature = "feat9"))]
            let v_492 = func_132();
            #[cfg(feature = "feat9")]
            let v_493 = 248;
            let v_494 = ext_3();
        } else {
            let _ = 662;
        }
        func_307();
    }
    let _ = 26 + 74;
}
pub struct Handle_495;
impl Handle_495 {
    #[cfg(feature = "feat9")]
    pub fn func_496() {
        let v_497 = 0 + 90;
    }
    #[cfg(feature = "feat4")]
    pub fn func_18() {
        if 18 > 10 {
            #[cfg(feature = "feat8")]
            let v_498 = 8 + 86;
            let v_499 = func_178();
        } else {
            let v_500 = ext_1();
        }
        #[cfg(feature = "feat8")]
        let v_501 = 42 + 53;
    }
}
pub static COUNTER_502: u32 = 0;
pub const LIMIT_503: u32 = 3 + 51;
pub struct Handle_504;
impl Handle_504 {
    pub fn func_505() {
        #[cfg(all(feature = "feat9", not(feature = "feat11")))]
        func_41();
        let v_506 = 18 + 14;
    }
    pub fn func_507() {
        let v_508 = 659;
        #[cfg(feature = "feat9")]
        let v_509 = ext_1();
        let v_510 = 249;
    }
}
pub fn func_511() {
    let v_512 = ext_2();
    match 4 {
        0 => {
            #[cfg(any(feature = "feat4", feature = "feat4"))]
            ext_2();
            match 1 {
                0 => {
                    match 2 {
                        0 => {
                            let w_513 = 5;
                            println!("msg_514 {}", 1);
                            let _ = 8 + 42;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub struct Handle_515;
impl Handle_515 {
    pub fn func_516() {
        let v_517 = ext_0();
        let v_518 = 83 + 87;
    }
    pub fn func_519() {
        pub fn func_520() {
            let v_521 = func_463();
            #[cfg(feature = "feat9")]
            let v_522 = ext_3();
            match 4 {
                0 => {
                    let w_523 = 7;
                    func_388();
                    let w_524 = 0;
                }
                _ => {}
            }
            func_352();
        }
        ext_2();
        func_172();
    }
}
pub type Alias_525 = u64;
pub fn func_526() {
    let _ = 86 + 46;
}
pub fn func_527() {
    println!("msg_528 {}", 1);
    #[cfg(feature = "feat8")]
    pub fn func_529() {
        match 3 {
            0 => {
                let _ = 31 + 80;
                println!("msg_530 {}", 1);
                match 4 {
                    0 => {
                        println!("msg_531 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let _ = 24 + 52;
        let v_532 = func_99();
    }
}
#[cfg(not(feature = "feat10"))]
pub mod inner_533 {
    use super::*;
    pub struct Handle_534;
    impl Handle_534 {
        pub fn func_535() {
            let v_536 = 13 + 98;
            let v_537 = ext_2();
            func_271();
        }
    }
    pub fn func_538() {
        func_29();
        match 1 {
            0 => {
                match 1 {
                    0 => {
                        let w_539 = 4;
                        let v_540 = 921;
                        let v_541 = 66 + 15;
                        let v_542 = 273;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_543 = 30 + 57;
        match 3 {
            0 => {
                let v_544 = func_119();
                func_482();
                let v_545 = 401;
                let v_546 = 18 + 99;
            }
            _ => {}
        }
    }
    use std::collections::HashMap;
}
pub static COUNTER_547: u32 = 0;
pub enum Kind_548 {
    #[cfg(any(feature = "feat4", feature = "feat8", feature = "feat8"))]
    Variant_549,
    Variant_550,
    Variant_551,
    Variant_552,
}
#[cfg(all(feature = "feat8", not(feature = "feat1")))]
pub const LIMIT_553: u32 = 60 + 43;
#[cfg(feature = "feat8")]
pub const LIMIT_554: u32 = 55 + 24;
#[cfg(feature = "feat9")]
pub fn func_555() {
    if 8 > 10 {
        let v_556 = 25 + 69;
        let v_557 = func_434();
        println!("msg_558 {}", 1);
        let v_559 = 189;
    } else {
        let v_560 = 30 + 19;
        func_285();
    }
}
pub fn func_561() {
    pub fn func_562() {
        #[cfg(feature = "feat9")]
        pub fn func_563() {
            if 16 > 10 {
                let w_564 = 7;
            } else {
                println!("msg_565 {}", 1);
            }
            if 12 > 10 {
                let v_566 = ext_3();
                println!("msg_567 {}", 1);
                #[cfg(not(feature = "feat2"))]
                let v_568 = ext_2();
                let v_569 = ext_1();
            } else {
                let w_570 = 2;
                let w_571 = 6;
                let w_572 = 0;
            }
            pub fn func_573() {
                let v_574 = func_409();
            }
            func_496();
        }
        #[cfg(any(feature = "feat4", feature = "feat9"))]
        let v_575 = ext_3();
    }
    match 1 {
        0 => {
            let _ = 398;
            println!("msg_576 {}", 1);
            func_388();
            match 1 {
                0 => {
                    func_398();
                    match 0 {
                        0 => {
                            println!("msg_577 {}", 1);
                            let w_578 = 3;
                            let v_579 = 510;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    let v_580 = func_252();
}
#[cfg(feature = "feat4")]
pub fn func_581() {
    println!("msg_582 {}", 1);
}
#[cfg(all(feature = "feat8", not(feature = "feat10")))]
pub fn func_583() {
    match 4 {
        0 => {
            println!("msg_584 {}", 1);
        }
        _ => {}
    }
    func_386();
    let v_585 = 571;
}
pub fn func_35() {
    match 0 {
        0 => {
            #[cfg(feature = "feat8")]
            let v_586 = func_562();
        }
        _ => {}
    }
}
pub struct Record_587 {
    pub field_588: u32,
}
#[cfg(feature = "feat9")]
pub mod inner_589 {
    use super::*;
    pub fn func_283() {
        let v_590 = func_29();
    }
    pub fn func_591() {
        let v_592 = 82;
        #[cfg(not(feature = "feat10"))]
        let v_593 = 357;
        let v_594 = func_106();
    }
    pub struct Record_595 {
        pub field_596: u32,
        pub field_597: u32,
        pub field_598: u32,
    }
}
#[cfg(feature = "feat9")]
pub type Alias_599 = u64;
pub struct Handle_600;
impl Handle_600 {
    pub fn func_601() {
        println!("msg_602 {}", 1);
        match 3 {
            0 => {
                println!("msg_603 {}", 1);
                pub fn func_1() {
                    func_526();
                }
            }
            _ => {}
        }
        func_478();
    }
}
pub fn func_604() {
    let _ = 56 + 43;
    let v_605 = 798;
}
#[cfg(feature = "feat9")]
pub fn func_606() {
    let v_607 = func_130();
    let _ = 498;
    let v_608 = 68 + 76;
    let v_609 = func_41();
}
use std::collections::HashMap;
pub fn func_610() {
    pub fn func_611() {
        pub fn func_612() {
            let v_613 = ext_3();
        }
        println!("msg_614 {}", 1);
        let v_615 = func_591();
    }
    let v_616 = 37 + 60;
    #[cfg(feature = "feat9")]
    let _ = 138;
    let v_617 = func_98();
}
#[cfg(feature = "feat8")]
pub fn func_618() {
    pub fn func_619() {
        let v_620 = 60 + 35;
        match 4 {
            0 => {
                #[cfg(not(feature = "feat1"))]
                let v_621 = ext_1();
                println!("msg_622 {}", 1);
            }
            _ => {}
        }
        println!("msg_623 {}", 1);
        if 1 > 10 {
            if 14 > 10 {
                func_6();
                func_482();
                ext_0();
            } else {
                let w_624 = 3;
            }
        } else {
            match 2 {
                0 => {
                    let _ = 19 + 49;
                    let v_625 = func_526();
                }
                _ => {}
            }
        }
    }
    println!("msg_626 {}", 1);
}
