pub type Alias_536 = u64;
pub const LIMIT_537: u32 = func_313();
pub fn func_538() {
    let v_539 = func_214();
    println!("msg_540 {}", 1);
    #[cfg(any(feature = "m0_3", feature = "m0_9"))]
    let v_541 = func_520();
    let v_542 = func_80();
}
#[cfg(feature = "m0_9")]
pub struct Record_543 {
    #[cfg(feature = "m0_10")]
    pub field_544: u32,
    pub field_545: u32,
    #[cfg(any(feature = "m0_10", feature = "m0_10", feature = "m0_10"))]
    pub field_546: u32,
}
pub fn func_547() {
    if 18 > 10 {
        match 3 {
            0 => {
                func_93();
                let v_548 = ext_1();
                let _ = 389;
            }
            _ => {}
        }
        #[cfg(feature = "m0_6")]
        let _ = 539;
        match 4 {
            0 => {
                if 13 > 10 {
                    func_332();
                    let v_549 = func_271();
                    let v_550 = ext_2();
                    ext_0();
                } else {
                    let _ = 59 + 48;
                }
                func_332();
                match 0 {
                    0 => {
                        let w_551 = 8;
                        let w_552 = 2;
                        let w_553 = 7;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_554 = ext_3();
    } else {
        match 2 {
            0 => {
                let v_555 = func_185();
                #[cfg(feature = "m0_1")]
                pub fn func_556() {
                    #[cfg(all(feature = "m0_9", not(feature = "m0_8")))]
                    let v_557 = 85 + 63;
                }
            }
            _ => {}
        }
        match 4 {
            0 => {
                func_354();
            }
            _ => {}
        }
        #[cfg(any(feature = "m0_1", feature = "m0_1"))]
        let _ = 5;
    }
    let v_558 = ext_0();
}
pub enum Kind_559 {
    Variant_560,
    Variant_561,
}
pub mod inner_562 {
    use super::*;
    pub enum Kind_563 {
        #[cfg(feature = "m0_0")]
        Variant_564,
        Variant_565,
        Variant_566,
        #[cfg(feature = "m0_6")]
        Variant_567,
    }
    pub static COUNTER_568: u32 = 0;
}
pub type Alias_569 = u64;
pub static COUNTER_570: u32 = 0;
pub struct Handle_571;
impl Handle_571 {
    #[cfg(feature = "m0_3")]
    pub fn func_447() {
        #[cfg(feature = "m0_10")]
        let v_572 = 24 + 69;
        if 8 > 10 {
            func_17();
            match 0 {
                0 => {
                    let w_573 = 7;
                    let w_574 = 5;
                    let _ = 154;
                }
                _ => {}
            }
            let v_575 = func_313();
        } else {
            #[cfg(feature = "m0_10")]
            func_80();
            let _ = 583;
            let v_576 = ext_2();
            if 17 > 10 {
                let v_577 = func_451();
                let w_578 = 3;
            } else {
                let w_579 = 4;
                let w_580 = 6;
            }
        }
        pub fn func_581() {
            let _ = 1 + 43;
            if 3 > 10 {
                let w_582 = 7;
            } else {
                let _ = 23 + 34;
                println!("msg_583 {}", 1);
                let v_584 = ext_2();
            }
            pub fn func_585() {
                let w_586 = 3;
                let v_587 = func_130();
                let w_588 = 1;
                let v_589 = ext_0();
            }
        }
        let v_590 = ext_0();
    }
}
pub struct Handle_591;
#[cfg(not(feature = "m0_4"))]
impl Handle_591 {
    pub fn func_592() {
        let v_593 = ext_0();
        ext_3();
        if 1 > 10 {
            let v_594 = ext_2();
            println!("msg_595 {}", 1);
        } else {
            let v_596 = 546;
            pub fn func_597() {
                let w_598 = 6;
                let w_599 = 5;
                let w_600 = 2;
                let v_601 = func_454();
            }
            if 11 > 10 {
                println!("msg_602 {}", 1);
                let v_603 = func_496();
                let w_604 = 7;
                let v_605 = 644;
            } else {
                let v_606 = func_518();
                println!("msg_607 {}", 1);
                let v_608 = ext_0();
            }
        }
    }
    pub fn func_609() {
        func_252();
        let v_610 = 751;
    }
}
pub fn func_611() {
    let v_612 = 148;
    #[cfg(all(feature = "m0_5", not(feature = "m0_7")))]
    let v_613 = func_431();
    match 4 {
        0 => {
            println!("msg_614 {}", 1);
            println!("msg_615 {}", 1);
        }
        _ => {}
    }
    println!("msg_616 {}", 1);
}
pub type Alias_617 = u64;
pub fn func_470() {
    let _ = 95 + 49;
    pub fn func_618() {
        if 18 > 10 {
            ext_2();
            let v_619 = ext_0();
            ext_2();
        } else {
            println!("msg_620 {}", 1);
            if 13 > 10 {
                println!("msg_621 {}", 1);
                let w_622 = 1;
                ext_2();
            } else {
                #[cfg(not(feature = "m0_7"))]
                let v_623 = ext_2();
            }
            match 4 {
                0 => {
                    let w_624 = 6;
                    let v_625 = 850;
                    let v_626 = func_130();
                    let w_627 = 4;
                }
                _ => {}
            }
            let v_628 = 32 + 70;
        }
        let v_629 = func_354();
    }
}
pub fn func_630() {
    if 5 > 10 {
        pub fn func_275() {
            pub fn func_631() {
                let w_632 = 6;
                #[cfg(feature = "m0_6")]
                let v_633 = func_585();
                func_17();
                let _ = 81 + 45;
            }
            #[cfg(feature = "m0_0")]
            let _ = 82 + 91;
        }
    } else {
        let v_634 = 446;
        match 0 {
            0 => {
                let v_635 = 12 + 76;
                match 0 {
                    0 => {
                        let v_636 = ext_2();
                        println!("msg_637 {}", 1);
                        let v_638 = ext_2();
                        let w_639 = 6;
                    }
                    _ => {}
                }
                let v_640 = ext_2();
                match 0 {
                    0 => {
                        let _ = 82 + 22;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        #[cfg(feature = "m0_1")]
        let v_641 = 49 + 90;
    }
    pub fn func_212() {
        pub fn func_642() {
            match 0 {
                0 => {
                    let v_643 = 346;
                }
                _ => {}
            }
            let _ = 832;
        }
        #[cfg(feature = "m0_10")]
        let v_644 = ext_3();
        match 0 {
            0 => {
                pub fn func_645() {
                    #[cfg(all(feature = "m0_5", not(feature = "m0_4")))]
                    let v_646 = func_165();
                    let v_647 = ext_0();
                    let w_648 = 6;
                    #[cfg(feature = "m0_10")]
                    let _ = 17 + 7;
                }
                #[cfg(feature = "m0_6")]
                pub fn func_649() {
                    #[cfg(not(feature = "m0_4"))]
                    let v_650 = func_235();
                    func_74();
                }
                ext_3();
            }
            _ => {}
        }
    }
    let _ = 61 + 38;
    #[cfg(feature = "m0_3")]
    let _ = 883;
}
#[cfg(feature = "m0_5")]
pub mod inner_651 {
    use super::*;
    pub const LIMIT_652: u32 = func_397();
}
pub fn func_171() {
    let v_653 = func_171();
}
#[cfg(feature = "m0_5")]
pub type Alias_654 = u64;
pub fn func_655() {
    let v_656 = 801;
    let v_657 = 48 + 21;
    println!("msg_658 {}", 1);
    let v_659 = func_255();
}
pub static COUNTER_660: u32 = 0;
pub struct Record_661 {
    #[cfg(feature = "m0_10")]
    pub field_662: u32,
}
#[cfg(feature = "m0_6")]
pub const LIMIT_663: u32 = func_165();
pub static COUNTER_664: u32 = 0;
pub fn func_665() {
    println!("msg_666 {}", 1);
    let v_667 = ext_2();
    #[cfg(not(feature = "m0_2"))]
    let v_668 = 687;
}
pub fn func_669() {
    pub fn func_670() {
        #[cfg(feature = "m0_9")]
        pub fn func_484() {
            let v_671 = ext_1();
            func_133();
            match 4 {
                0 => {
                    let w_672 = 5;
                    let _ = 404;
                    println!("msg_673 {}", 1);
                    let w_674 = 5;
                }
                _ => {}
            }
        }
        #[cfg(not(feature = "m0_7"))]
        let _ = 639;
        let v_675 = 98 + 35;
        if 0 > 10 {
            let v_676 = 399;
            let v_677 = ext_1();
        } else {
            func_597();
            let v_678 = 297;
        }
    }
}
pub fn func_679() {
    let v_680 = ext_1();
    #[cfg(any(feature = "m0_6", feature = "m0_10"))]
    let v_681 = ext_3();
    let v_682 = func_58();
    let v_683 = func_356();
}
pub enum Kind_684 {
    #[cfg(feature = "m0_1")]
    Variant_685,
}
pub fn func_686() {
    let v_687 = 745;
    ext_2();
    println!("msg_688 {}", 1);
    match 4 {
        0 => {
            let v_689 = 85 + 76;
            let v_690 = func_362();
            let v_691 = 23 + 24;
            pub fn func_692() {
                let v_693 = ext_1();
                let _ = 46;
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub const LIMIT_694: u32 = func_665();
pub const LIMIT_695: u32 = ext_2();
pub fn func_83() {
    let v_696 = 87;
    match 1 {
        0 => {
            match 2 {
                0 => {
                    if 4 > 10 {
                        let w_697 = 8;
                        let w_698 = 2;
                        func_611();
                    } else {
                        println!("msg_699 {}", 1);
                        println!("msg_700 {}", 1);
                        println!("msg_701 {}", 1);
                        let v_702 = 823;
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    func_58();
    func_457();
}
