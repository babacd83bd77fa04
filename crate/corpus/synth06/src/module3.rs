pub static COUNTER_478: u32 = 0;
pub fn func_479() {
    let v_480 = ext_3();
}
pub fn func_481() {
    func_280();
    match 3 {
        0 => {
            #[cfg(feature = "feat2")]
            let v_482 = func_457();
            let v_483 = ext_2();
            func_210();
            if 13 > 10 {
                #[cfg(feature = "feat0")]
                let _ = 35 + 77;
                if 0 > 10 {
                    let v_484 = 94 + 80;
                    let v_485 = 765;
                    println!("msg_486 {}", 1);
                    let v_487 = ext_2();
                } else {
                    let v_488 = 269;
                    let v_489 = func_210();
                    let w_490 = 1;
                }
                match 4 {
                    0 => {
                        let w_491 = 5;
                        let w_492 = 0;
                    }
                    _ => {}
                }
                let _ = 3;
            } else {
                if 19 > 10 {
                    let w_493 = 1;
                    let w_494 = 8;
                    let v_495 = 332;
                    let v_496 = func_210();
                } else {
                    let w_497 = 4;
                    println!("msg_498 {}", 1);
                    let w_499 = 0;
                }
                let v_500 = func_107();
            }
        }
        _ => {}
    }
}
pub enum Kind_501 {
    Variant_502,
    Variant_503,
    #[cfg(any(feature = "feat0", feature = "feat6", feature = "feat11"))]
    Variant_504,
}
pub struct Handle_505;
impl Handle_505 {
    pub fn func_506() {
        let _ = 78 + 58;
        func_206();
        let v_507 = ext_2();
        match 4 {
            0 => {
                let v_508 = func_442();
                pub fn func_509() {
                    let _ = 44 + 66;
                    let w_510 = 5;
                }
                let v_511 = ext_0();
                match 1 {
                    0 => {
                        let _ = 87 + 80;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub enum Kind_512 {
    Variant_513,
}
#[cfg(any(feature = "feat15", feature = "feat12"))]
pub fn func_514() {
    func_149();
    if 18 > 10 {
        let v_515 = func_406();
        pub fn func_516() {
            let _ = 52 + 58;
            println!("msg_517 {}", 1);
        }
    } else {
        let _ = 27 + 51;
    }
    let v_518 = 87 + 70;
    let v_519 = func_53();
}
#[cfg(feature = "feat2")]
pub enum Kind_520 {
    Variant_521,
    Variant_522,
}
pub struct Handle_523;
impl Handle_523 {
    pub fn func_524() {
        #[cfg(any(feature = "feat12", feature = "feat2", feature = "feat15"))]
        pub fn func_525() {
            if 12 > 10 {
                let v_526 = 45 + 8;
                let w_527 = 4;
                func_142();
                #[cfg(any(feature = "feat21", feature = "feat23", feature = "feat21"))]
                func_286();
            } else {
                #[cfg(feature = "feat23")]
                let v_528 = 595;
                let w_529 = 6;
                let w_530 = 3;
            }
            println!("msg_531 {}", 1);
            let v_532 = ext_1();
        }
        let v_533 = func_318();
        let v_534 = 506;
    }
    pub fn func_535() {
        println!("msg_536 {}", 1);
    }
}
pub struct Record_537 {
    pub field_538: u32,
    pub field_539: u32,
    pub field_540: u32,
    pub field_541: u32,
}
pub mod inner_542 {
    use super::*;
    pub fn func_543() {
        ext_3();
        pub fn func_544() {
            pub fn func_545() {
                println!("msg_546 {}", 1);
                println!("msg_547 {}", 1);
                let w_548 = 1;
            }
        }
        if 8 > 10 {
            match 2 {
                0 => {
                    println!("msg_549 {}", 1);
                    let v_550 = ext_0();
                    let v_551 = ext_3();
                    println!("msg_552 {}", 1);
                }
                _ => {}
            }
            #[cfg(feature = "feat19")]
            let v_553 = func_143();
            let v_554 = func_333();
            let v_555 = func_61();
        } else {
            match 1 {
                0 => {
                    println!("msg_556 {}", 1);
                    func_387();
                    let w_557 = 2;
                    func_13();
                }
                _ => {}
            }
            func_91();
            let v_558 = func_516();
            match 1 {
                0 => {
                    let w_559 = 4;
                    #[cfg(any(feature = "feat19", feature = "feat16", feature = "feat5"))]
                    ext_2();
                    let v_560 = func_178();
                    #[cfg(feature = "feat21")]
                    let v_561 = func_13();
                }
                _ => {}
            }
        }
    }
    pub fn func_562() {
        if 19 > 10 {
            #[cfg(feature = "feat2")]
            pub fn func_563() {
                let _ = 42 + 39;
                println!("msg_564 {}", 1);
                let v_565 = ext_1();
            }
            #[cfg(any(feature = "feat19", feature = "feat21"))]
            let v_566 = func_9();
            if 0 > 10 {
                let v_567 = func_291();
                let w_568 = 0;
                let v_569 = ext_2();
            } else {
                let w_570 = 3;
                let v_571 = 218;
                #[cfg(all(feature = "feat8", not(feature = "feat17")))]
                let v_572 = func_367();
                func_101();
            }
            ext_1();
        } else {
            #[cfg(feature = "feat19")]
            let _ = 21 + 11;
            ext_1();
            let _ = 239;
            match 3 {
                0 => {
                    func_473();
                    let w_573 = 4;
                    let w_574 = 7;
                }
                _ => {}
            }
        }
    }
}
pub fn func_575() {
    let v_576 = 458;
    println!("msg_577 {}", 1);
    #[cfg(feature = "feat12")]
    let v_578 = ext_2();
    println!("msg_579 {}", 1);
}
pub fn func_580() {
    if 14 > 10 {
        println!("msg_581 {}", 1);
        let v_582 = 412;
        let v_583 = func_333();
        match 4 {
            0 => {
                let v_584 = 912;
            }
            _ => {}
        }
    } else {
        #[cfg(feature = "feat12")]
        let v_585 = 484;
        pub fn func_208() {
            if 1 > 10 {
                let w_586 = 3;
                func_448();
                let v_587 = func_223();
            } else {
                let v_588 = 7 + 22;
            }
            let v_589 = func_182();
            if 0 > 10 {
                let v_590 = 488;
                let w_591 = 5;
            } else {
                let w_592 = 2;
                #[cfg(feature = "feat2")]
                let v_593 = ext_1();
                let _ = 29 + 82;
                println!("msg_594 {}", 1);
            }
        }
        println!("msg_595 {}", 1);
        println!("msg_596 {}", 1);
    }
    let v_597 = 83 + 61;
    #[cfg(not(feature = "feat22"))]
    let _ = 10;
}
pub fn func_598() {
    let v_599 = func_166();
}
#[cfg(feature = "feat0")]
pub fn func_600() {
    let v_601 = func_319();
}
pub fn func_602() {
    let v_603 = ext_2();
    println!("msg_604 {}", 1);
    pub fn func_605() {
        let v_606 = 849;
    }
}
use std::collections::HashMap;
pub fn func_607() {
    let v_608 = 319;
    if 15 > 10 {
        #[cfg(any(feature = "feat11", feature = "feat5", feature = "feat6"))]
        pub fn func_609() {
            let v_610 = 99 + 40;
            pub fn func_611() {
                println!("msg_612 {}", 1);
                let v_613 = func_138();
                let w_614 = 7;
            }
            let _ = 596;
        }
        let _ = 77 + 23;
        pub fn func_615() {
            if 12 > 10 {
                let w_616 = 3;
                let v_617 = 603;
            } else {
                #[cfg(feature = "feat11")]
                let _ = 427;
                let w_618 = 7;
            }
            let v_619 = 14 + 14;
            if 4 > 10 {
                ext_1();
            } else {
                let v_620 = func_319();
                let v_621 = ext_1();
                let v_622 = ext_1();
            }
        }
    } else {
        #[cfg(feature = "feat6")]
        let _ = 586;
        println!("msg_623 {}", 1);
        if 2 > 10 {
            let v_624 = func_13();
            #[cfg(feature = "feat8")]
            pub fn func_625() {
                let v_626 = 40 + 50;
                let v_627 = 600;
                let w_628 = 8;
                let _ = 544;
            }
        } else {
            let v_629 = 53 + 60;
            let v_630 = func_609();
            let v_631 = 574;
            #[cfg(feature = "feat8")]
            let v_632 = 565;
        }
        let v_633 = 75 + 13;
    }
    #[cfg(feature = "feat6")]
    let v_634 = func_182();
    let v_635 = func_389();
}
#[cfg(feature = "feat11")]
pub const LIMIT_636: u32 = 60;
pub struct Record_637 {
    #[cfg(not(feature = "feat10"))]
    pub field_638: u32,
    pub field_639: u32,
    pub field_640: u32,
    pub field_641: u32,
}
pub fn func_642() {
    func_544();
    if 16 > 10 {
        pub fn func_643() {
            let v_644 = 97 + 21;
            let v_645 = func_60();
            if 4 > 10 {
                let v_646 = func_13();
                let v_647 = ext_2();
                let w_648 = 8;
            } else {
                ext_3();
                let w_649 = 6;
            }
            ext_0();
        }
    } else {
        if 6 > 10 {
            match 2 {
                0 => {
                    let w_650 = 4;
                }
                _ => {}
            }
            pub fn func_651() {
                let w_652 = 4;
                let v_653 = func_319();
                let v_654 = func_121();
            }
        } else {
            let _ = 97 + 13;
            let v_655 = ext_3();
            let v_656 = 416;
            match 1 {
                0 => {
                    println!("msg_657 {}", 1);
                    println!("msg_658 {}", 1);
                    let v_659 = func_473();
                }
                _ => {}
            }
        }
        pub fn func_660() {
            ext_3();
            let v_661 = 31 + 93;
            let v_662 = func_182();
            #[cfg(feature = "feat6")]
            pub fn func_663() {
                #[cfg(any(feature = "feat19", feature = "feat12"))]
                let _ = 15 + 2;
                let w_664 = 4;
                let v_665 = 29 + 72;
            }
        }
        let v_666 = func_107();
    }
    pub fn func_667() {
        if 12 > 10 {
            func_178();
            let v_668 = 15 + 11;
            let v_669 = 39 + 13;
            if 5 > 10 {
                func_306();
                #[cfg(any(feature = "feat8", feature = "feat12", feature = "feat19"))]
                let _ = 39 + 77;
                let w_670 = 7;
            } else {
                let v_671 = func_563();
                println!("msg_672 {}", 1);
                let w_673 = 7;
                let w_674 = 2;
            }
        } else {
            #[cfg(all(feature = "feat14", not(feature = "feat3")))]
            func_361();
            let v_675 = 969;
            #[cfg(feature = "feat21")]
            let v_676 = func_602();
            #[cfg(feature = "feat14")]
            let v_677 = 48 + 50;
        }
    }
}
