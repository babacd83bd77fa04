pub fn func_518() {
    match 3 {
        0 => {
            let v_519 = func_234();
            pub fn func_520() {
                #[cfg(feature = "m1_7")]
                let _ = 688;
            }
        }
        _ => {}
    }
    match 4 {
        0 => {
            if 14 > 10 {
                let v_521 = ext_0();
            } else {
                println!("msg_522 {}", 1);
                #[cfg(any(feature = "m1_2", feature = "m1_1", feature = "m1_6"))]
                let v_523 = func_499();
                pub fn func_524() {
                    func_384();
                    let v_525 = 18 + 99;
                }
                let v_526 = func_32();
            }
        }
        _ => {}
    }
}
pub fn func_527() {
    pub fn func_528() {
        let v_529 = func_322();
        #[cfg(all(feature = "m1_7", not(feature = "m1_0")))]
        let v_530 = 52 + 29;
        pub fn func_531() {
            #[cfg(all(feature = "m1_8", not(feature = "m1_0")))]
            let v_532 = 76 + 10;
            let v_533 = func_106();
            let v_534 = ext_0();
        }
    }
}
pub const LIMIT_535: u32 = func_6();
pub fn func_536() {
    func_143();
    let _ = 59 + 93;
}
pub enum Kind_537 {
    Variant_538,
    Variant_539,
    Variant_540,
    #[cfg(any(feature = "m1_7", feature = "m1_1", feature = "m1_8"))]
    Variant_541,
}
pub fn func_542() {
    let v_543 = 317;
    println!("msg_544 {}", 1);
    if 17 > 10 {
        println!("msg_545 {}", 1);
    } else {
        pub fn func_546() {
            let v_547 = ext_3();
            let _ = 97 + 41;
        }
        match 4 {
            0 => {
                println!("msg_548 {}", 1);
                println!("msg_549 {}", 1);
            }
            _ => {}
        }
    }
}
pub fn func_550() {
    let v_551 = 4 + 58;
    pub fn func_552() {
        pub fn func_553() {
            let v_554 = 848;
            #[cfg(any(feature = "m1_1", feature = "m1_8"))]
            let v_555 = func_480();
            match 3 {
                0 => {
                    let v_556 = 6 + 45;
                    let w_557 = 3;
                    let w_558 = 3;
                    #[cfg(feature = "m1_2")]
                    let v_559 = 225;
                }
                _ => {}
            }
            let v_560 = func_129();
        }
        #[cfg(feature = "m1_2")]
        let v_561 = ext_0();
    }
    let v_562 = func_513();
}
pub fn func_563() {
    pub fn func_365() {
        let v_564 = ext_3();
        let v_565 = 34 + 3;
    }
    #[cfg(feature = "m1_6")]
    let _ = 166;
    match 2 {
        0 => {
            match 4 {
                0 => {
                    let v_566 = func_438();
                    pub fn func_567() {
                        let w_568 = 3;
                        let _ = 491;
                    }
                    pub fn func_106() {
                        #[cfg(feature = "m1_7")]
                        let _ = 615;
                        let w_569 = 6;
                        func_384();
                        let w_570 = 7;
                    }
                    let _ = 88 + 74;
                }
                _ => {}
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub fn func_571() {
    pub fn func_572() {
        match 0 {
            0 => {
                let v_573 = ext_1();
            }
            _ => {}
        }
        println!("msg_574 {}", 1);
    }
    func_317();
    pub fn func_575() {
        func_182();
    }
    let v_576 = 640;
}
#[cfg(all(feature = "m1_4", not(feature = "m1_9")))]
pub static COUNTER_577: u32 = 0;
pub fn func_578() {
    let v_579 = func_279();
    let v_580 = 32 + 12;
    let v_581 = 589;
}
pub struct Record_582 {
    pub field_583: u32,
    pub field_584: u32,
    #[cfg(any(feature = "m1_4", feature = "m1_4", feature = "m1_6"))]
    pub field_585: u32,
}
pub fn func_586() {
    let v_587 = 744;
    let v_588 = ext_1();
    pub fn func_187() {
        let v_589 = ext_0();
        ext_0();
        let v_590 = func_376();
    }
    match 3 {
        0 => {
            let v_591 = func_536();
            if 15 > 10 {
                #[cfg(all(feature = "m1_1", not(feature = "m1_3")))]
                pub fn func_322() {
                    let w_592 = 7;
                    let v_593 = 87 + 77;
                }
                match 2 {
                    0 => {
                        let w_594 = 8;
                        func_129();
                        let v_595 = 94 + 99;
                        let v_596 = func_376();
                    }
                    _ => {}
                }
            } else {
                let v_597 = ext_0();
            }
            let v_598 = 69 + 30;
            let v_599 = 434;
        }
        _ => {}
    }
}
#[cfg(all(feature = "m1_1", not(feature = "m1_9")))]
pub type Alias_600 = u64;
#[cfg(feature = "m1_2")]
pub enum Kind_601 {
    Variant_602,
    Variant_603,
    Variant_604,
}
pub fn func_605() {
    let v_606 = ext_3();
    #[cfg(feature = "m1_6")]
    pub fn func_607() {
        if 2 > 10 {
            #[cfg(feature = "m1_8")]
            let v_608 = func_106();
            match 2 {
                0 => {
                    let v_609 = 60 + 28;
                    let v_610 = 395;
                    let v_611 = 84 + 67;
                    let v_612 = func_572();
                }
                _ => {}
            }
            pub fn func_613() {
                let v_614 = ext_2();
            }
            match 2 {
                0 => {
                    let v_615 = ext_1();
                    let _ = 78 + 89;
                }
                _ => {}
            }
        } else {
            match 1 {
                0 => {
                    let v_616 = ext_0();
                    let v_617 = func_480();
                }
                _ => {}
            }
            let _ = 641;
            println!("msg_618 {}", 1);
        }
        let _ = 54 + 34;
    }
    let v_619 = 39 + 98;
}
pub type Alias_620 = u64;
pub fn func_621() {
    let _ = 58 + 18;
    #[cfg(feature = "m1_4")]
    let v_622 = func_270();
    let _ = 72 + 74;
    let v_623 = func_373();
}
#[cfg(all(feature = "m1_1", not(feature = "m1_5")))]
pub enum Kind_624 {
    Variant_625,
}
pub const LIMIT_626: u32 = 7 + 39;
#[cfg(feature = "m1_1")]
pub fn func_627() {
    if 3 > 10 {
        let v_628 = func_292();
        pub fn func_629() {
            let v_630 = func_42();
            let v_631 = func_118();
            func_373();
        }
    } else {
        func_153();
        println!("msg_632 {}", 1);
    }
    if 18 > 10 {
        if 0 > 10 {
            let v_633 = ext_0();
            let _ = 956;
            pub fn func_634() {
                let v_635 = 24;
                let w_636 = 2;
                let v_637 = func_178();
                let w_638 = 1;
            }
        } else {
            pub fn func_639() {
                let v_640 = 70 + 6;
                let v_641 = func_621();
                println!("msg_642 {}", 1);
                let w_643 = 4;
            }
            let v_644 = 11 + 22;
        }
    } else {
        let _ = 997;
    }
    #[cfg(not(feature = "m1_5"))]
    pub fn func_645() {
        pub fn func_646() {
            println!("msg_647 {}", 1);
            let v_648 = func_287();
        }
        let v_649 = func_143();
        let v_650 = ext_2();
        println!("msg_651 {}", 1);
    }
    let _ = 71 + 6;
}
pub fn func_652() {
    #[cfg(feature = "m1_2")]
    let _ = 76 + 41;
    let v_653 = 8 + 15;
}
#[cfg(any(feature = "m1_2", feature = "m1_6", feature = "m1_7"))]
pub fn func_301() {
    let v_654 = func_365();
}
#[cfg(any(feature = "m1_7", feature = "m1_1"))]
pub fn func_415() {
    let v_655 = func_233();
    ext_1();
}
#[cfg(feature = "m1_8")]
pub fn func_656() {
    if 4 > 10 {
        if 17 > 10 {
            let v_657 = 601;
            let v_658 = 81;
            func_402();
        } else {
            let v_659 = func_118();
            let _ = 626;
        }
        let v_660 = func_536();
        if 19 > 10 {
            if 1 > 10 {
                println!("msg_661 {}", 1);
                #[cfg(not(feature = "m1_5"))]
                let v_662 = func_323();
                let v_663 = 792;
            } else {
                func_345();
            }
            pub fn func_571() {
                let v_664 = func_268();
                let w_665 = 1;
            }
            pub fn func_666() {
                let v_667 = 46 + 94;
                let v_668 = 867;
                let v_669 = func_143();
                println!("msg_670 {}", 1);
            }
        } else {
            #[cfg(not(feature = "m1_10"))]
            let v_671 = func_178();
            let v_672 = func_528();
            let _ = 40 + 35;
            let v_673 = ext_2();
        }
        #[cfg(not(feature = "m1_5"))]
        pub fn func_674() {
            let v_675 = func_438();
            match 3 {
                0 => {
                    println!("msg_676 {}", 1);
                    let w_677 = 7;
                }
                _ => {}
            }
        }
    } else {
        let _ = 18 + 22;
        let v_678 = 51 + 56;
        func_8();
    }
    let v_679 = func_674();
    let v_680 = 942;
}
#[cfg(not(feature = "m1_0"))]
use std::collections::HashMap;
#[cfg(feature = "m1_1")]
pub fn func_681() {
    let v_682 = 42 + 33;
}
pub struct Handle_683;
impl Handle_683 {
    pub fn func_684() {
        #[cfg(any(feature = "m1_2", feature = "m1_2", feature = "m1_2"))]
        let v_685 = ext_1();
        let v_686 = 711;
    }
    pub fn func_687() {
        #[cfg(any(feature = "m1_1", feature = "m1_7", feature = "m1_8"))]
        func_195();
        #[cfg(feature = "m1_6")]
        func_129();
    }
}
