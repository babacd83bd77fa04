pub struct Handle_557;
impl Handle_557 {
    pub fn func_558() {
        if 7 > 10 {
            let v_559 = 503;
        } else {
            pub fn func_560() {
                let v_561 = func_9();
                let w_562 = 8;
            }
            let v_563 = ext_1();
        }
        let v_564 = func_510();
        if 10 > 10 {
            match 1 {
                0 => {
                    let _ = 202;
                    let w_565 = 1;
                }
                _ => {}
            }
            println!("msg_566 {}", 1);
            let v_567 = func_320();
            let v_568 = 22 + 1;
        } else {
            let v_569 = func_254();
            match 4 {
                0 => {
                    let w_570 = 6;
                    let _ = 85 + 62;
                    let w_571 = 0;
                    #[cfg(feature = "feat7")]
                    func_527();
                }
                _ => {}
            }
        }
        match 2 {
            0 => {
                pub fn func_572() {
                    func_105();
                    let v_573 = func_494();
                    let w_574 = 6;
                }
            }
            _ => {}
        }
    }
    pub fn func_575() {
        match 1 {
            0 => {
                println!("msg_576 {}", 1);
                println!("msg_577 {}", 1);
                match 1 {
                    0 => {
                        let w_578 = 8;
                    }
                    _ => {}
                }
                let _ = 619;
            }
            _ => {}
        }
        let v_579 = func_70();
    }
}
pub enum Kind_580 {
    Variant_581,
    Variant_582,
    Variant_583,
    Variant_584,
}
pub fn func_585() {
    let _ = 656;
    let v_586 = 196;
}
pub const LIMIT_587: u32 = func_1();
pub enum Kind_588 {
    Variant_589,
    Variant_590,
    Variant_591,
}
pub struct Handle_592;
impl Handle_592 {
    pub fn func_593() {
        #[cfg(feature = "feat15")]
        let v_594 = func_283();
        let v_595 = ext_0();
    }
}
pub struct Handle_596;
impl Handle_596 {
    pub fn func_597() {
        let v_598 = 56 + 54;
        let v_599 = func_91();
    }
    #[cfg(all(feature = "feat5", not(feature = "feat3")))]
    pub fn func_600() {
        let v_601 = func_366();
        if 7 > 10 {
            let v_602 = 51;
            let v_603 = func_358();
        } else {
            func_242();
            match 1 {
                0 => {
                    let v_604 = func_533();
                }
                _ => {}
            }
        }
        let v_605 = 495;
    }
}
pub const LIMIT_606: u32 = func_297();
pub fn func_607() {
    let v_608 = 65 + 78;
}
#[cfg(feature = "feat6")]
pub fn func_609() {
    let v_610 = 434;
    let _ = 705;
    println!("msg_611 {}", 1);
    func_155();
}
pub fn func_612() {
    ext_1();
    let v_613 = 1 + 15;
    let v_614 = 9 + 71;
    println!("msg_615 {}", 1);
}
pub fn func_616() {
    let v_617 = ext_2();
    let v_618 = func_494();
    let v_619 = ext_0();
    let v_620 = func_142();
}
pub mod inner_621 {
    use super::*;
    pub fn func_622() {
        let v_623 = func_393();
        if 0 > 10 {
            println!("msg_624 {}", 1);
            let v_625 = 216;
            println!("msg_626 {}", 1);
            #[cfg(feature = "feat15")]
            let v_627 = 14 + 97;
        } else {
            if 14 > 10 {
                let w_628 = 4;
                #[cfg(feature = "feat2")]
                let v_629 = ext_1();
                func_379();
                let w_630 = 5;
            } else {
                let w_631 = 2;
                println!("msg_632 {}", 1);
            }
        }
        pub fn func_633() {
            let v_634 = 21 + 60;
            if 11 > 10 {
                let w_635 = 3;
                let w_636 = 0;
                println!("msg_637 {}", 1);
                func_607();
            } else {
                let v_638 = 245;
                let w_639 = 7;
                #[cfg(any(feature = "feat13", feature = "feat4", feature = "feat5"))]
                let _ = 60;
            }
        }
    }
    pub static COUNTER_640: u32 = 0;
    pub enum Kind_641 {
        Variant_642,
        Variant_643,
        Variant_644,
    }
}
pub const LIMIT_645: u32 = 80 + 7;
pub struct Handle_646;
impl Handle_646 {
    pub fn func_647() {
        pub fn func_648() {
            let v_649 = func_160();
        }
    }
}
#[cfg(all(feature = "feat7", not(feature = "feat11")))]
pub fn func_650() {
    let _ = 838;
    println!("msg_651 {}", 1);
}
pub struct Handle_652;
impl Handle_652 {
    pub fn func_653() {
        let _ = 47 + 12;
        let v_654 = func_390();
        pub fn func_484() {
            let v_655 = 1 + 96;
        }
    }
}
pub type Alias_656 = u64;
#[cfg(feature = "feat15")]
pub static COUNTER_657: u32 = 0;
pub type Alias_658 = u64;
pub fn func_659() {
    pub fn func_546() {
        pub fn func_660() {
            println!("msg_661 {}", 1);
            ext_0();
            #[cfg(not(feature = "feat11"))]
            let v_662 = 363;
            if 9 > 10 {
                let w_663 = 5;
                let w_664 = 3;
                let _ = 51 + 39;
                ext_3();
            } else {
                let v_665 = func_427();
                let v_666 = func_116();
                println!("msg_667 {}", 1);
            }
        }
        pub fn func_668() {
            match 0 {
                0 => {
                    let w_669 = 6;
                    let _ = 187;
                    println!("msg_670 {}", 1);
                }
                _ => {}
            }
            func_159();
        }
    }
    func_35();
}
pub struct Handle_671;
impl Handle_671 {
    pub fn func_672() {
        ext_3();
        println!("msg_673 {}", 1);
        let v_674 = 30 + 95;
    }
}
pub fn func_675() {
    let v_676 = func_393();
    let v_677 = func_155();
    let _ = 27 + 57;
    pub fn func_678() {
        let v_679 = func_154();
    }
}
pub struct Handle_680;
impl Handle_680 {
    #[cfg(feature = "feat4")]
    pub fn func_400() {
        match 0 {
            0 => {
                let v_681 = ext_0();
                let v_682 = ext_0();
            }
            _ => {}
        }
        let v_683 = 336;
        let v_684 = func_138();
        #[cfg(all(feature = "feat14", not(feature = "feat3")))]
        let v_685 = func_116();
    }
}
pub fn func_686() {
    pub fn func_687() {
        let v_688 = func_515();
        match 2 {
            0 => {
                let v_689 = func_342();
            }
            _ => {}
        }
    }
    let v_690 = 628;
    let v_691 = ext_3();
}
pub fn func_692() {
    println!("msg_693 {}", 1);
    #[cfg(feature = "feat8")]
    let _ = 216;
}
pub fn func_694() {
    let v_695 = 12 + 97;
}
#[cfg(feature = "feat16")]
pub mod inner_696 {
    use super::*;
    pub fn func_697() {
        println!("msg_698 {}", 1);
    }
    pub fn func_699() {
        pub fn func_700() {
            pub fn func_701() {
                ext_2();
                let v_702 = func_91();
                func_510();
            }
            let v_703 = 86 + 96;
            let v_704 = 348;
            func_297();
        }
        let v_705 = 896;
        println!("msg_706 {}", 1);
        let v_707 = ext_3();
    }
    pub static COUNTER_708: u32 = 0;
}
pub static COUNTER_709: u32 = 0;
#[cfg(feature = "feat15")]
pub type Alias_710 = u64;
pub fn func_711() {
    #[cfg(feature = "feat14")]
    let _ = 61;
    func_699();
    println!("msg_712 {}", 1);
    pub fn func_160() {
        let v_713 = ext_0();
        ext_1();
        match 2 {
            0 => {
                println!("msg_714 {}", 1);
                pub fn func_715() {
                    let w_716 = 0;
                    let v_717 = ext_3();
                }
                let v_718 = func_699();
                #[cfg(any(feature = "feat14", feature = "feat15", feature = "feat16"))]
                ext_3();
            }
            _ => {}
        }
    }
}
#[cfg(all(feature = "feat13", not(feature = "feat11")))]
pub fn func_719() {
    let v_720 = 375;
    func_70();
    match 3 {
        0 => {
            let _ = 921;
            pub fn func_721() {
                println!("msg_722 {}", 1);
                let _ = 36 + 82;
                if 8 > 10 {
                    let v_723 = 743;
                } else {
                    let v_724 = func_547();
                    let v_725 = func_338();
                    let v_726 = func_503();
                    let v_727 = ext_2();
                }
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub fn func_179() {
    let v_728 = func_416();
    match 2 {
        0 => {
            let v_729 = func_223();
            let v_730 = 6 + 19;
            #[cfg(not(feature = "feat3"))]
            let v_731 = func_697();
        }
        _ => {}
    }
    match 4 {
        0 => {
            pub fn func_732() {
                if 9 > 10 {
                    #[cfg(feature = "feat1")]
                    let v_733 = func_715();
                } else {
                    println!("msg_734 {}", 1);
                    func_668();
                    let w_735 = 3;
                    let w_736 = 4;
                }
                let v_737 = ext_2();
                let v_738 = 107;
            }
            pub fn func_739() {
                match 1 {
                    0 => {
                        let v_740 = func_301();
                        let w_741 = 4;
                        #[cfg(feature = "feat5")]
                        let v_742 = 11 + 35;
                        let w_743 = 1;
                    }
                    _ => {}
                }
                let v_744 = 93 + 72;
                let v_745 = 288;
                let v_746 = func_528();
            }
            ext_0();
        }
        _ => {}
    }
}
