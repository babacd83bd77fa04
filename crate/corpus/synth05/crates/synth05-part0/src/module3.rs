#[cfg(not(feature = "m0_2"))]
pub enum Kind_498 {
    #[cfg(not(feature = "m0_2"))]
    Variant_499,
    Variant_500,
}
pub struct Handle_501;
impl Handle_501 {
    pub fn func_502() {
        func_58();
        let v_503 = func_306();
        if 12 > 10 {
            func_58();
        } else {
            let v_504 = 75 + 92;
            match 4 {
                0 => {
                    #[cfg(feature = "m0_8")]
                    ext_3();
                    let v_505 = func_46();
                }
                _ => {}
            }
            match 1 {
                0 => {
                    let w_506 = 1;
                }
                _ => {}
            }
            println!("msg_507 {}", 1);
        }
    }
}
pub mod inner_508 {
    use super::*;
    pub static COUNTER_509: u32 = 0;
    pub type Alias_510 = u64;
    pub fn func_511() {
        let v_512 = 22 + 23;
    }
}
pub type Alias_513 = u64;
pub fn func_514() {
    let v_515 = ext_2();
    match 1 {
        0 => {
            let v_516 = ext_2();
        }
        _ => {}
    }
}
pub mod inner_517 {
    use super::*;
    pub struct Handle_518;
    impl Handle_518 {
        pub fn func_235() {
            if 12 > 10 {
                let w_519 = 7;
                println!("msg_520 {}", 1);
                ext_0();
                let w_521 = 6;
            } else {
                let v_522 = ext_0();
                let v_523 = ext_3();
                let v_524 = 57 + 58;
            }
            if 18 > 10 {
                ext_0();
            } else {
                let w_525 = 5;
                #[cfg(all(feature = "m0_8", not(feature = "m0_2")))]
                func_27();
                let w_526 = 8;
            }
            #[cfg(feature = "m0_8")]
            let v_527 = func_322();
        }
    }
    pub enum Kind_528 {
        Variant_529,
        Variant_530,
    }
    pub struct Handle_531;
    #[cfg(any(feature = "m0_8", feature = "m0_8"))]
    impl Handle_531 {
        pub fn func_47() {
            println!("msg_532 {}", 1);
            let v_533 = 636;
            let v_534 = func_479();
            let v_535 = func_349();
        }
        pub fn func_536() {
            let v_537 = 705;
            println!("msg_538 {}", 1);
            println!("msg_539 {}", 1);
        }
    }
}
pub enum Kind_540 {
    Variant_541,
    Variant_542,
}
pub static COUNTER_543: u32 = 0;
pub fn func_544() {
    pub fn func_545() {
        ext_1();
    }
    pub fn func_546() {
        println!("msg_547 {}", 1);
    }
    if 12 > 10 {
        #[cfg(feature = "m0_8")]
        let v_548 = func_138();
        pub fn func_484() {
            #[cfg(not(feature = "m0_2"))]
            let v_549 = ext_3();
            match 1 {
                0 => {
                    println!("msg_550 {}", 1);
                    let w_551 = 2;
                    func_386();
                    let w_552 = 4;
                }
                _ => {}
            }
        }
        println!("msg_553 {}", 1);
        let _ = 71 + 1;
    } else {
        println!("msg_554 {}", 1);
    }
}
pub type Alias_555 = u64;
pub const LIMIT_556: u32 = ext_2();
pub fn func_254() {
    match 4 {
        0 => {
            #[cfg(all(feature = "m0_8", not(feature = "m0_2")))]
            let v_557 = 55 + 6;
            pub fn func_558() {
                if 6 > 10 {
                    let v_559 = func_108();
                    #[cfg(feature = "m0_8")]
                    func_58();
                } else {
                    println!("msg_560 {}", 1);
                    let w_561 = 1;
                    #[cfg(feature = "m0_8")]
                    let _ = 93;
                    let w_562 = 1;
                }
                let v_563 = ext_1();
            }
            let v_564 = func_254();
        }
        _ => {}
    }
    let v_565 = func_448();
    pub fn func_566() {
        let v_567 = 76 + 34;
        let v_568 = 139;
        if 8 > 10 {
            match 1 {
                0 => {
                    let v_569 = 28 + 54;
                    let v_570 = 9 + 10;
                    #[cfg(feature = "m0_8")]
                    let v_571 = ext_2();
                    let v_572 = func_301();
                }
                _ => {}
            }
            func_183();
            #[cfg(feature = "m0_8")]
            let v_573 = func_47();
            if 8 > 10 {
                let _ = 804;
                let v_574 = func_502();
            } else {
                let v_575 = func_281();
                ext_2();
            }
        } else {
            let _ = 199;
            let v_576 = ext_0();
            match 0 {
                0 => {
                    println!("msg_577 {}", 1);
                }
                _ => {}
            }
        }
        let v_578 = 352;
    }
    let v_579 = 554;
}
#[cfg(feature = "m0_8")]
pub static COUNTER_580: u32 = 0;
pub const LIMIT_581: u32 = 43 + 51;
pub struct Record_582 {
    pub field_583: u32,
    pub field_584: u32,
}
pub mod inner_585 {
    use super::*;
    #[cfg(any(feature = "m0_8", feature = "m0_8"))]
    pub static COUNTER_586: u32 = 0;
    pub fn func_587() {
        let v_588 = ext_1();
        let v_589 = func_428();
        let v_590 = 650;
    }
    pub enum Kind_591 {
        Variant_592,
        Variant_593,
        #[cfg(feature = "m0_8")]
        Variant_594,
    }
}
pub fn func_595() {
    ext_3();
    if 18 > 10 {
        let v_596 = func_587();
        let v_597 = func_219();
    } else {
        let v_598 = ext_0();
        println!("msg_599 {}", 1);
        let v_600 = func_108();
    }
    match 0 {
        0 => {
            pub fn func_601() {
                if 1 > 10 {
                    let v_602 = func_137();
                    println!("msg_603 {}", 1);
                    let v_604 = 141;
                } else {
                    #[cfg(feature = "m0_8")]
                    let v_605 = ext_0();
                    let v_606 = 30 + 32;
                    println!("msg_607 {}", 1);
                }
                #[cfg(feature = "m0_8")]
                pub fn func_608() {
                    let _ = 0 + 41;
                    let v_609 = ext_0();
                    let v_610 = ext_2();
                    let v_611 = func_115();
                }
                let v_612 = func_134();
                if 7 > 10 {
                    let w_613 = 0;
                } else {
                    let w_614 = 5;
                }
            }
            println!("msg_615 {}", 1);
            let v_616 = ext_3();
            let v_617 = func_312();
        }
        _ => {}
    }
    let _ = 7 + 96;
}
pub fn func_618() {
    let v_619 = func_161();
}
use std::collections::HashMap;
pub const LIMIT_620: u32 = 12 + 91;
pub fn func_621() {
    let v_622 = func_27();
    println!("msg_623 {}", 1);
}
pub type Alias_624 = u64;
#[cfg(feature = "m0_8")]
pub mod inner_625 {
    use super::*;
    pub fn func_626() {
        let v_627 = 85 + 11;
    }
    pub fn func_211() {
        let v_628 = func_7();
        func_332();
        pub fn func_82() {
            if 16 > 10 {
                func_379();
                let v_629 = 171;
                let w_630 = 0;
                func_240();
            } else {
                let w_631 = 1;
            }
            let v_632 = func_306();
        }
    }
    pub fn func_633() {
        if 2 > 10 {
            println!("msg_634 {}", 1);
            let v_635 = ext_0();
            let v_636 = func_545();
            let v_637 = 345;
        } else {
            if 17 > 10 {
                let v_638 = 77 + 27;
                ext_2();
                let w_639 = 3;
            } else {
                println!("msg_640 {}", 1);
                println!("msg_641 {}", 1);
            }
            let v_642 = 81 + 20;
        }
        pub fn func_643() {
            let v_644 = func_421();
            let _ = 71 + 87;
        }
        let v_645 = func_254();
        println!("msg_646 {}", 1);
    }
}
use std::collections::HashMap;
pub mod inner_647 {
    use super::*;
    use std::collections::HashMap;
}
pub fn func_648() {
    ext_2();
    let _ = 333;
    let v_649 = func_301();
}
pub fn func_650() {
    if 17 > 10 {
        let _ = 14 + 50;
        #[cfg(feature = "m0_8")]
        ext_2();
        let _ = 28 + 43;
    } else {
        func_344();
        println!("msg_651 {}", 1);
        if 3 > 10 {
            let _ = 531;
            #[cfg(feature = "m0_8")]
            func_227();
            pub fn func_652() {
                let v_653 = func_566();
                #[cfg(not(feature = "m0_2"))]
                let v_654 = ext_1();
                let w_655 = 7;
                let v_656 = 44 + 43;
            }
            let v_657 = ext_3();
        } else {
            let v_658 = 62 + 89;
            match 2 {
                0 => {
                    let v_659 = 93 + 75;
                    let w_660 = 1;
                    let v_661 = func_386();
                    let w_662 = 4;
                }
                _ => {}
            }
        }
    }
    let v_663 = func_228();
    match 2 {
        0 => {
            println!("msg_664 {}", 1);
            if 7 > 10 {
                func_362();
            } else {
                func_266();
            }
            let v_665 = func_448();
            let _ = 310;
        }
        _ => {}
    }
}
