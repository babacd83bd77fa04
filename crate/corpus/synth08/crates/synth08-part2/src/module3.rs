pub fn func_519() {
    println!("msg_520 {}", 1);
    pub fn func_521() {
        match 2 {
            0 => {
                println!("msg_522 {}", 1);
                match 2 {
                    0 => {
                        let w_523 = 0;
                        ext_2();
                    }
                    _ => {}
                }
                let v_524 = 131;
                let v_525 = func_218();
            }
            _ => {}
        }
        let v_526 = 417;
        let v_527 = func_91();
        ext_1();
    }
}
pub struct Handle_528;
#[cfg(not(feature = "m2_2"))]
impl Handle_528 {
    pub fn func_529() {
        let _ = 739;
        pub fn func_530() {
            match 3 {
                0 => {
                    let v_531 = func_380();
                    let w_532 = 4;
                    println!("msg_533 {}", 1);
                    let v_534 = func_78();
                }
                _ => {}
            }
            let v_535 = func_454();
            let v_536 = func_91();
        }
    }
}
pub enum Kind_537 {
    #[cfg(any(feature = "m2_1", feature = "m2_4", feature = "m2_3"))]
    Variant_538,
    Variant_539,
    Variant_540,
}
pub enum Kind_541 {
    Variant_542,
    Variant_543,
    Variant_544,
    #[cfg(feature = "m2_0")]
    Variant_545,
}
pub fn func_111() {
    #[cfg(feature = "m2_7")]
    ext_1();
}
#[cfg(feature = "m2_3")]
pub fn func_546() {
    #[cfg(feature = "m2_9")]
    func_48();
    pub fn func_547() {
        let v_548 = 15 + 81;
        if 13 > 10 {
            if 10 > 10 {
                let v_549 = func_259();
                println!("msg_550 {}", 1);
                let v_551 = func_472();
            } else {
                println!("msg_552 {}", 1);
                #[cfg(feature = "m2_6")]
                let v_553 = func_486();
                func_468();
                let w_554 = 7;
            }
        } else {
            if 12 > 10 {
                let v_555 = ext_0();
                func_486();
            } else {
                let v_556 = ext_2();
                let w_557 = 7;
                let w_558 = 7;
            }
            let v_559 = func_36();
        }
    }
}
pub enum Kind_560 {
    Variant_561,
    Variant_562,
    Variant_563,
    Variant_564,
}
pub type Alias_565 = u64;
#[cfg(feature = "m2_9")]
pub enum Kind_566 {
    Variant_567,
}
pub struct Handle_568;
impl Handle_568 {
    pub fn func_569() {
        pub fn func_570() {
            match 1 {
                0 => {
                    let v_571 = 43 + 97;
                    ext_3();
                    let v_572 = 223;
                }
                _ => {}
            }
            let _ = 2 + 88;
            let v_573 = func_178();
        }
        #[cfg(feature = "m2_3")]
        func_325();
        let v_574 = 901;
        pub fn func_575() {
            ext_0();
            let v_576 = 79 + 62;
            let _ = 228;
        }
    }
    pub fn func_256() {
        let _ = 636;
        let v_577 = 93 + 77;
        let v_578 = 131;
    }
}
pub static COUNTER_579: u32 = 0;
pub fn func_580() {
    #[cfg(not(feature = "m2_2"))]
    let v_581 = func_186();
    if 9 > 10 {
        match 4 {
            0 => {
                let v_582 = 78 + 29;
                let v_583 = 38 + 12;
                let v_584 = 62 + 69;
            }
            _ => {}
        }
    } else {
        #[cfg(any(feature = "m2_7", feature = "m2_3", feature = "m2_9"))]
        let v_585 = func_570();
        #[cfg(any(feature = "m2_7", feature = "m2_4"))]
        let v_586 = func_318();
        println!("msg_587 {}", 1);
        pub fn func_588() {
            if 19 > 10 {
                let w_589 = 2;
                let v_590 = func_12();
                println!("msg_591 {}", 1);
            } else {
                let w_592 = 7;
            }
            let v_593 = 174;
        }
    }
    #[cfg(feature = "m2_6")]
    let v_594 = func_177();
    let v_595 = 493;
}
pub mod inner_596 {
    use super::*;
    pub static COUNTER_597: u32 = 0;
    #[cfg(feature = "m2_6")]
    pub mod inner_598 {
        use super::*;
        pub fn func_599() {
            if 2 > 10 {
                let _ = 663;
                let w_600 = 2;
                let w_601 = 8;
                let v_602 = func_486();
            } else {
                ext_1();
            }
            if 2 > 10 {
                let v_603 = ext_2();
                let v_604 = func_78();
            } else {
                let w_605 = 5;
                println!("msg_606 {}", 1);
                let w_607 = 8;
            }
            #[cfg(any(feature = "m2_9", feature = "m2_9"))]
            ext_0();
            func_28();
        }
    }
}
pub fn func_608() {
    #[cfg(not(feature = "m2_8"))]
    let v_609 = 832;
    println!("msg_610 {}", 1);
    #[cfg(any(feature = "m2_6", feature = "m2_7", feature = "m2_1"))]
    let _ = 51 + 75;
}
pub type Alias_611 = u64;
#[cfg(all(feature = "m2_9", not(feature = "m2_8")))]
pub type Alias_612 = u64;
pub static COUNTER_613: u32 = 0;
#[cfg(feature = "m2_5")]
pub fn func_614() {
    #[cfg(all(feature = "m2_9", not(feature = "m2_10")))]
    let v_615 = func_259();
    let v_616 = 38 + 53;
    #[cfg(any(feature = "m2_9", feature = "m2_9", feature = "m2_7"))]
    let v_617 = func_368();
    if 7 > 10 {
        let v_618 = 290;
        let _ = 22 + 35;
    } else {
        if 1 > 10 {
            let v_619 = 29 + 91;
            println!("msg_620 {}", 1);
            let v_621 = func_90();
        } else {
            if 18 > 10 {
                println!("msg_622 {}", 1);
                #[cfg(all(feature = "m2_9", not(feature = "m2_8")))]
                func_35();
                let w_623 = 8;
                let v_624 = func_35();
            } else {
                let w_625 = 3;
                let v_626 = func_456();
                let v_627 = 3 + 21;
                let v_628 = ext_2();
            }
            pub fn func_629() {
                let _ = 282;
                let v_630 = ext_2();
                let w_631 = 3;
                let w_632 = 4;
            }
            let v_633 = func_629();
            if 12 > 10 {
                let w_634 = 1;
                let v_635 = 588;
                func_90();
            } else {
                let v_636 = 26 + 59;
                let w_637 = 2;
                ext_3();
                let v_638 = func_361();
            }
        }
        match 2 {
            0 => {
                let v_639 = ext_1();
            }
            _ => {}
        }
    }
}
pub static COUNTER_640: u32 = 0;
pub fn func_641() {
    #[cfg(not(feature = "m2_8"))]
    let v_642 = 14 + 57;
}
pub type Alias_643 = u64;
pub mod inner_644 {
    use super::*;
    pub struct Record_645 {
        pub field_646: u32,
        pub field_647: u32,
        #[cfg(feature = "m2_7")]
        pub field_648: u32,
    }
    pub fn func_649() {
        ext_2();
        match 1 {
            0 => {
                ext_3();
                let v_650 = func_177();
                if 10 > 10 {
                    println!("msg_651 {}", 1);
                    let v_652 = ext_2();
                    let v_653 = ext_2();
                } else {
                    let v_654 = func_475();
                    #[cfg(not(feature = "m2_2"))]
                    let v_655 = func_446();
                    let v_656 = func_500();
                }
                if 7 > 10 {
                    let w_657 = 7;
                    ext_0();
                } else {
                    println!("msg_658 {}", 1);
                    let w_659 = 7;
                    let v_660 = 898;
                    let w_661 = 5;
                }
            }
            _ => {}
        }
        let v_662 = ext_3();
    }
}
pub struct Handle_663;
#[cfg(feature = "m2_1")]
impl Handle_663 {
    #[cfg(feature = "m2_4")]
    pub fn func_664() {
        if 1 > 10 {
            ext_3();
        } else {
            func_448();
            if 2 > 10 {
                let w_665 = 3;
                #[cfg(not(feature = "m2_8"))]
                let v_666 = func_100();
            } else {
                ext_2();
            }
        }
        let v_667 = func_513();
        println!("msg_668 {}", 1);
        let v_669 = ext_3();
    }
    pub fn func_670() {
        ext_2();
        ext_0();
        #[cfg(feature = "m2_7")]
        let v_671 = func_448();
        println!("msg_672 {}", 1);
    }
}
pub fn func_335() {
    let _ = 896;
    match 1 {
        0 => {
            match 2 {
                0 => {
                    match 0 {
                        0 => {
                            let v_673 = ext_1();
                        }
                        _ => {}
                    }
                    let v_674 = 27 + 32;
                }
                _ => {}
            }
            func_641();
            let v_675 = func_4();
        }
        _ => {}
    }
    let v_676 = func_546();
    #[cfg(feature = "m2_0")]
    let v_677 = 18 + 20;
}
use std::collections::HashMap;
pub const LIMIT_678: u32 = 217;
pub fn func_472() {
    let v_679 = 13 + 45;
    let _ = 59 + 80;
    pub fn func_680() {
        if 10 > 10 {
            let v_681 = 257;
        } else {
            if 17 > 10 {
                #[cfg(feature = "m2_3")]
                func_35();
                let w_682 = 2;
                let v_683 = ext_0();
            } else {
                let v_684 = func_48();
                let v_685 = func_259();
                #[cfg(feature = "m2_3")]
                let v_686 = func_35();
            }
            let v_687 = 784;
            println!("msg_688 {}", 1);
            #[cfg(feature = "m2_0")]
            let v_689 = 10 + 31;
        }
        if 3 > 10 {
            match 4 {
                0 => {
                    let w_690 = 3;
                    func_125();
                }
                _ => {}
            }
            if 17 > 10 {
                let w_691 = 6;
                func_415();
                let w_692 = 4;
            } else {
                println!("msg_693 {}", 1);
                let v_694 = func_395();
                let w_695 = 7;
                let w_696 = 4;
            }
            if 13 > 10 {
                func_33();
                let w_697 = 8;
                let w_698 = 3;
            } else {
                let v_699 = func_241();
                #[cfg(feature = "m2_0")]
                let v_700 = 198;
            }
        } else {
            if 11 > 10 {
                let w_701 = 2;
            } else {
                let w_702 = 1;
            }
            let _ = 81 + 65;
        }
    }
    let v_703 = func_138();
}
