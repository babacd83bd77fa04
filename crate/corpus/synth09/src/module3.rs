pub fn func_527() {
    let _ = 525;
    println!("msg_528 {}", 1);
    let _ = 25 + 53;
    let v_529 = func_365();
}
pub fn func_530() {
    println!("msg_531 {}", 1);
    if 12 > 10 {
        let _ = 12 + 55;
        let v_532 = 21 + 98;
    } else {
        println!("msg_533 {}", 1);
        match 4 {
            0 => {
                func_22();
                match 0 {
                    0 => {
                        let w_534 = 5;
                        #[cfg(feature = "feat20")]
                        let v_535 = func_248();
                        let v_536 = ext_2();
                        let w_537 = 2;
                    }
                    _ => {}
                }
                let v_538 = 987;
            }
            _ => {}
        }
        if 9 > 10 {
            let v_539 = 13 + 93;
            println!("msg_540 {}", 1);
            let v_541 = 81 + 18;
        } else {
            if 18 > 10 {
                let w_542 = 2;
                let w_543 = 1;
                let v_544 = 993;
                println!("msg_545 {}", 1);
            } else {
                let v_546 = 49;
            }
            let _ = 36 + 31;
        }
        match 4 {
            0 => {
                ext_2();
                match 4 {
                    0 => {
                        println!("msg_547 {}", 1);
                        #[cfg(feature = "feat29")]
                        let _ = 34 + 83;
                        #[cfg(any(feature = "feat11", feature = "feat22"))]
                        let v_548 = 801;
                    }
                    _ => {}
                }
                let v_549 = 77 + 4;
                match 2 {
                    0 => {
                        let v_550 = ext_3();
                        let w_551 = 1;
                        ext_0();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    println!("msg_552 {}", 1);
}
pub enum Kind_553 {
    #[cfg(feature = "feat29")]
    Variant_554,
    Variant_555,
    Variant_556,
    Variant_557,
}
pub enum Kind_558 {
    Variant_559,
    Variant_560,
    Variant_561,
}
pub const LIMIT_562: u32 = 217;
pub static COUNTER_563: u32 = 0;
pub fn func_564() {
    let v_565 = ext_1();
    let _ = 87 + 46;
    pub fn func_566() {
        let v_567 = func_483();
        #[cfg(any(feature = "feat16", feature = "feat14"))]
        let v_568 = 127;
        #[cfg(feature = "feat28")]
        let v_569 = 738;
    }
    func_427();
}
pub static COUNTER_570: u32 = 0;
pub fn func_571() {
    let v_572 = 56 + 42;
}
pub enum Kind_573 {
    Variant_574,
}
pub struct Handle_575;
impl Handle_575 {
    #[cfg(feature = "feat4")]
    pub fn func_363() {
        #[cfg(feature = "feat24")]
        pub fn func_576() {
            println!("msg_577 {}", 1);
            let v_578 = 92 + 47;
        }
    }
    pub fn func_579() {
        let _ = 488;
        let v_580 = func_208();
    }
}
pub enum Kind_581 {
    Variant_582,
}
pub struct Record_583 {
    pub field_584: u32,
    pub field_585: u32,
    pub field_586: u32,
    #[cfg(feature = "feat20")]
    pub field_587: u32,
}
pub fn func_588() {
    #[cfg(feature = "feat6")]
    let _ = 461;
    let v_589 = func_114();
    #[cfg(feature = "feat16")]
    let v_590 = func_321();
}
#[cfg(not(feature = "feat15"))]
pub struct Record_591 {
    pub field_592: u32,
}
#[cfg(feature = "feat22")]
pub enum Kind_593 {
    #[cfg(all(feature = "feat28", not(feature = "feat12")))]
    Variant_594,
    Variant_595,
    #[cfg(any(feature = "feat28", feature = "feat29", feature = "feat28"))]
    Variant_596,
    Variant_597,
}
pub fn func_598() {
    pub fn func_599() {
        let v_600 = 980;
        #[cfg(feature = "feat28")]
        let v_601 = ext_3();
    }
    println!("msg_602 {}", 1);
    println!("msg_603 {}", 1);
}
pub mod inner_604 {
    use super::*;
    pub struct Handle_605;
    impl Handle_605 {
        pub fn func_606() {
            pub fn func_607() {
                println!("msg_608 {}", 1);
                let w_609 = 2;
            }
            let v_610 = func_21();
        }
    }
    use std::collections::HashMap;
}
pub fn func_611() {
    #[cfg(feature = "feat24")]
    let v_612 = func_447();
    match 4 {
        0 => {
            #[cfg(feature = "feat28")]
            let v_613 = func_240();
        }
        _ => {}
    }
    let v_614 = ext_2();
    println!("msg_615 {}", 1);
}
pub fn func_616() {
    let v_617 = 8 + 72;
}
pub fn func_618() {
    pub fn func_450() {
        match 4 {
            0 => {
                #[cfg(feature = "feat1")]
                let v_619 = ext_2();
                match 0 {
                    0 => {
                        println!("msg_620 {}", 1);
                        let w_621 = 8;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat16")]
pub type Alias_622 = u64;
pub type Alias_623 = u64;
pub fn func_624() {
    pub fn func_625() {
        println!("msg_626 {}", 1);
    }
    #[cfg(feature = "feat1")]
    let _ = 52 + 46;
}
pub enum Kind_627 {
    Variant_628,
    Variant_629,
    Variant_630,
}
pub fn func_631() {
    #[cfg(feature = "feat4")]
    let v_632 = func_611();
    let v_633 = ext_3();
    let _ = 218;
}
pub static COUNTER_634: u32 = 0;
pub enum Kind_635 {
    Variant_636,
    Variant_637,
    Variant_638,
}
pub enum Kind_639 {
    Variant_640,
    Variant_641,
    Variant_642,
    Variant_643,
}
#[cfg(feature = "feat16")]
pub fn func_644() {
    #[cfg(all(feature = "feat24", not(feature = "feat18")))]
    let _ = 30;
    if 4 > 10 {
        if 18 > 10 {
            let v_645 = 48 + 95;
            pub fn func_646() {
                ext_3();
            }
            let v_647 = ext_2();
        } else {
            if 13 > 10 {
                let v_648 = 95 + 61;
                let v_649 = func_456();
                let v_650 = func_333();
                let _ = 70 + 87;
            } else {
                println!("msg_651 {}", 1);
                let w_652 = 4;
                func_447();
            }
            ext_0();
            println!("msg_653 {}", 1);
            pub fn func_654() {
                let _ = 2;
                #[cfg(feature = "feat20")]
                let v_655 = 156;
                let w_656 = 6;
                let v_657 = ext_0();
            }
        }
        let v_658 = 99 + 28;
        func_611();
    } else {
        ext_3();
    }
    pub fn func_82() {
        if 3 > 10 {
            let v_659 = func_156();
            func_145();
        } else {
            pub fn func_606() {
                let w_660 = 7;
                println!("msg_661 {}", 1);
                println!("msg_662 {}", 1);
            }
            let v_663 = func_365();
        }
        ext_2();
        let v_664 = func_598();
    }
}
#[cfg(feature = "feat19")]
pub mod inner_665 {
    use super::*;
    #[cfg(all(feature = "feat24", not(feature = "feat2")))]
    pub static COUNTER_666: u32 = 0;
}
pub type Alias_667 = u64;
pub type Alias_668 = u64;
pub static COUNTER_669: u32 = 0;
pub enum Kind_670 {
    #[cfg(feature = "feat16")]
    Variant_671,
    Variant_672,
}
pub fn func_673() {
    pub fn func_674() {
        #[cfg(feature = "feat19")]
        pub fn func_675() {
            let v_676 = 610;
            let _ = 133;
        }
        let v_677 = 32 + 34;
        let v_678 = ext_3();
    }
}
pub struct Record_679 {
    pub field_680: u32,
}
#[cfg(feature = "feat3")]
pub fn func_215() {
    pub fn func_607() {
        pub fn func_681() {
            #[cfg(feature = "feat8")]
            let v_682 = 833;
            if 16 > 10 {
                let v_683 = 54 + 14;
                let v_684 = func_385();
                ext_3();
                let w_685 = 7;
            } else {
                let v_686 = func_530();
            }
            println!("msg_687 {}", 1);
        }
    }
}
pub struct Record_688 {
    pub field_689: u32,
    #[cfg(feature = "feat24")]
    pub field_690: u32,
}
pub static COUNTER_691: u32 = 0;
#[cfg(feature = "feat27")]
use std::collections::HashMap;
#[cfg(feature = "feat22")]
pub enum Kind_692 {
    Variant_693,
    Variant_694,
    Variant_695,
}
pub fn func_696() {
    #[cfg(feature = "feat13")]
    func_412();
}
#[cfg(all(feature = "feat9", not(feature = "feat21")))]
pub mod inner_697 {
    use super::*;
    pub fn func_698() {
        pub fn func_699() {
            println!("msg_700 {}", 1);
        }
    }
    pub static COUNTER_701: u32 = 0;
    pub enum Kind_702 {
        Variant_703,
        Variant_704,
        Variant_705,
    }
}
pub fn func_706() {
    if 7 > 10 {
        match 0 {
            0 => {
                let _ = 97 + 70;
            }
            _ => {}
        }
    } else {
        match 4 {
            0 => {
                match 3 {
                    0 => {
                        ext_1();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        pub fn func_707() {
            let v_708 = func_385();
            #[cfg(any(feature = "feat16", feature = "feat8"))]
            pub fn func_709() {
                ext_1();
            }
            match 4 {
                0 => {
                    println!("msg_710 {}", 1);
                    let w_711 = 1;
                    println!("msg_712 {}", 1);
                }
                _ => {}
            }
        }
        let v_713 = 705;
        #[cfg(feature = "feat16")]
        let v_714 = func_160();
    }
    let v_715 = ext_2();
    let v_716 = ext_1();
}
