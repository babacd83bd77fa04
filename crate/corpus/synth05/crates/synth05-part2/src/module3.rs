pub struct Record_547 {
    pub field_548: u32,
}
pub fn func_549() {
    let v_550 = ext_0();
    func_122();
}
pub fn func_551() {
    func_241();
    let v_552 = 31 + 27;
    let v_553 = 21 + 46;
    println!("msg_554 {}", 1);
}
pub type Alias_555 = u64;
pub fn func_556() {
    let v_557 = 46 + 88;
    println!("msg_558 {}", 1);
    let v_559 = 27 + 60;
    match 0 {
        0 => {
            let _ = 219;
            let v_560 = func_415();
            if 0 > 10 {
                let v_561 = func_347();
                println!("msg_562 {}", 1);
            } else {
                pub fn func_563() {
                    let v_564 = 387;
                }
                #[cfg(feature = "m2_7")]
                let v_565 = func_496();
            }
            println!("msg_566 {}", 1);
        }
        _ => {}
    }
}
pub mod inner_567 {
    use super::*;
    #[cfg(any(feature = "m2_0", feature = "m2_3", feature = "m2_7"))]
    pub fn func_568() {
        func_214();
        let v_569 = 12 + 84;
        if 7 > 10 {
            println!("msg_570 {}", 1);
            if 8 > 10 {
                let v_571 = func_388();
                let v_572 = ext_1();
            } else {
                let v_573 = func_534();
                let v_574 = ext_0();
                #[cfg(not(feature = "m2_1"))]
                func_81();
            }
            match 2 {
                0 => {
                    let w_575 = 3;
                    let w_576 = 6;
                    let _ = 25;
                }
                _ => {}
            }
            let v_577 = func_178();
        } else {
            #[cfg(not(feature = "m2_1"))]
            func_76();
        }
        let v_578 = 61 + 44;
    }
}
pub type Alias_579 = u64;
pub fn func_580() {
    let v_581 = func_239();
    let _ = 74 + 14;
    match 2 {
        0 => {
            match 3 {
                0 => {
                    func_457();
                    println!("msg_582 {}", 1);
                    pub fn func_583() {
                        func_76();
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub enum Kind_584 {
    #[cfg(feature = "m2_3")]
    Variant_585,
    Variant_586,
    Variant_587,
}
pub mod inner_588 {
    use super::*;
    #[cfg(feature = "m2_2")]
    pub fn func_589() {
        #[cfg(any(feature = "m2_7", feature = "m2_4"))]
        let v_590 = func_11();
        #[cfg(feature = "m2_5")]
        func_371();
        if 9 > 10 {
            let v_591 = 895;
            match 4 {
                0 => {
                    let v_592 = func_321();
                    let w_593 = 4;
                    let v_594 = ext_3();
                }
                _ => {}
            }
        } else {
            let v_595 = 322;
            let v_596 = 902;
            match 4 {
                0 => {
                    let w_597 = 4;
                }
                _ => {}
            }
            println!("msg_598 {}", 1);
        }
        let v_599 = func_468();
    }
    pub struct Handle_600;
    impl Handle_600 {
        pub fn func_601() {
            let v_602 = ext_2();
            let v_603 = func_58();
        }
    }
}
pub fn func_604() {
    println!("msg_605 {}", 1);
    let v_606 = 11 + 22;
}
pub enum Kind_607 {
    Variant_608,
}
pub fn func_609() {
    match 4 {
        0 => {
            println!("msg_610 {}", 1);
            match 1 {
                0 => {
                    let v_611 = 83 + 46;
                    pub fn func_612() {
                        println!("msg_613 {}", 1);
                    }
                }
                _ => {}
            }
            pub fn func_614() {
                #[cfg(feature = "m2_8")]
                let v_615 = func_239();
            }
        }
        _ => {}
    }
    let v_616 = 63 + 62;
}
pub const LIMIT_617: u32 = func_92();
pub static COUNTER_618: u32 = 0;
pub fn func_619() {
    #[cfg(feature = "m2_5")]
    let v_620 = func_148();
    if 5 > 10 {
        let v_621 = func_457();
        let _ = 574;
    } else {
        let v_622 = func_321();
        let v_623 = ext_1();
        pub fn func_624() {
            let v_625 = 59 + 17;
            println!("msg_626 {}", 1);
        }
        println!("msg_627 {}", 1);
    }
    #[cfg(feature = "m2_8")]
    func_363();
}
pub struct Record_628 {
    pub field_629: u32,
    #[cfg(any(feature = "m2_8", feature = "m2_2", feature = "m2_2"))]
    pub field_630: u32,
    #[cfg(feature = "m2_5")]
    pub field_631: u32,
    pub field_632: u32,
}
use std::collections::HashMap;
#[cfg(feature = "m2_7")]
pub enum Kind_633 {
    Variant_634,
    #[cfg(feature = "m2_8")]
    Variant_635,
}
pub mod inner_636 {
    use super::*;
    pub const LIMIT_637: u32 = func_129();
    pub struct Record_638 {
        #[cfg(feature = "m2_5")]
        pub field_639: u32,
        pub field_640: u32,
    }
    pub fn func_205() {
        pub fn func_641() {
            let v_642 = 78 + 3;
            let v_643 = 638;
            println!("msg_644 {}", 1);
        }
    }
}
use std::collections::HashMap;
pub fn func_645() {
    match 0 {
        0 => {
            let v_646 = ext_2();
            println!("msg_647 {}", 1);
            #[cfg(feature = "m2_2")]
            let v_648 = func_415();
            println!("msg_649 {}", 1);
        }
        _ => {}
    }
    #[cfg(feature = "m2_4")]
    let v_650 = 0 + 4;
}
pub struct Record_651 {
    pub field_652: u32,
    pub field_653: u32,
    pub field_654: u32,
}
pub const LIMIT_655: u32 = func_318();
pub static COUNTER_656: u32 = 0;
pub fn func_657() {
    let v_658 = func_99();
}
pub fn func_659() {
    if 1 > 10 {
        println!("msg_660 {}", 1);
    } else {
        pub fn func_661() {
            #[cfg(feature = "m2_5")]
            let v_662 = func_96();
        }
    }
    ext_2();
}
pub const LIMIT_663: u32 = func_156();
pub static COUNTER_664: u32 = 0;
pub enum Kind_665 {
    Variant_666,
}
#[cfg(feature = "m2_2")]
pub struct Record_667 {
    pub field_668: u32,
    pub field_669: u32,
    pub field_670: u32,
    pub field_671: u32,
}
#[cfg(any(feature = "m2_0", feature = "m2_3"))]
pub struct Record_672 {
    pub field_673: u32,
    pub field_674: u32,
    pub field_675: u32,
}
pub type Alias_676 = u64;
pub mod inner_677 {
    use super::*;
    pub enum Kind_678 {
        Variant_679,
        Variant_680,
        Variant_681,
        Variant_682,
    }
    use std::collections::HashMap;
}
pub fn func_683() {
    let v_684 = 594;
}
pub const LIMIT_685: u32 = ext_1();
pub enum Kind_686 {
    #[cfg(feature = "m2_4")]
    Variant_687,
    Variant_688,
    Variant_689,
}
pub static COUNTER_690: u32 = 0;
pub enum Kind_691 {
    Variant_692,
}
pub enum Kind_693 {
    Variant_694,
}
pub enum Kind_695 {
    Variant_696,
    Variant_697,
    Variant_698,
    Variant_699,
}
pub struct Handle_700;
impl Handle_700 {
    pub fn func_701() {
        let v_702 = func_457();
        let _ = 765;
    }
    #[cfg(feature = "m2_8")]
    pub fn func_383() {
        let v_703 = 90 + 28;
        println!("msg_704 {}", 1);
    }
}
pub mod inner_705 {
    use super::*;
    pub struct Handle_706;
    impl Handle_706 {
        #[cfg(feature = "m2_4")]
        pub fn func_707() {
            let v_708 = func_619();
            match 3 {
                0 => {
                    let w_709 = 0;
                    func_76();
                    println!("msg_710 {}", 1);
                    let _ = 371;
                }
                _ => {}
            }
            #[cfg(not(feature = "m2_6"))]
            func_659();
        }
        #[cfg(feature = "m2_8")]
        pub fn func_221() {
            let v_711 = ext_0();
        }
    }
    pub mod inner_712 {
        use super::*;
        pub fn func_713() {
            match 2 {
                0 => {
                    func_92();
                }
                _ => {}
            }
        }
        pub struct Handle_714;
        impl Handle_714 {
            pub fn func_429() {
                #[cfg(feature = "m2_8")]
                func_205();
                let v_715 = 87 + 45;
                func_177();
            }
        }
        pub type Alias_716 = u64;
    }
    pub const LIMIT_717: u32 = func_580();
}
#[cfg(not(feature = "m2_1"))]
pub fn func_718() {
    let v_719 = func_563();
    let v_720 = func_136();
    pub fn func_721() {
        let v_722 = ext_3();
    }
}
