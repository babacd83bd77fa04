#[cfg(feature = "feat10")]
pub mod inner_574 {
    use super::*;
    pub type Alias_575 = u64;
    pub fn func_302() {
        let _ = 97 + 2;
        println!("msg_576 {}", 1);
        match 4 {
            0 => {
                ext_3();
            }
            _ => {}
        }
        let v_577 = ext_2();
    }
}
pub fn func_578() {
    let v_579 = func_344();
}
pub fn func_580() {
    #[cfg(all(feature = "feat9", not(feature = "feat5")))]
    pub fn func_581() {
        #[cfg(not(feature = "feat7"))]
        let _ = 71 + 18;
        func_393();
    }
    let v_582 = ext_2();
    let v_583 = 710;
}
#[cfg(not(feature = "feat5"))]
pub static COUNTER_584: u32 = 0;
pub fn func_585() {
    ext_1();
    println!("msg_586 {}", 1);
    let _ = 33 + 92;
    let v_587 = 719;
}
pub const LIMIT_588: u32 = 54 + 72;
#[cfg(feature = "feat21")]
pub fn func_589() {
    let v_590 = ext_3();
    println!("msg_591 {}", 1);
    let v_592 = func_535();
}
pub fn func_593() {
    let v_594 = func_535();
    let v_595 = func_53();
    let _ = 57 + 47;
}
pub struct Record_596 {
    #[cfg(all(feature = "feat12", not(feature = "feat7")))]
    pub field_597: u32,
    #[cfg(any(feature = "feat8", feature = "feat3", feature = "feat12"))]
    pub field_598: u32,
    pub field_599: u32,
}
pub fn func_580() {
    let v_600 = 91 + 35;
    #[cfg(not(feature = "feat24"))]
    let v_601 = func_518();
    pub fn func_602() {
        println!("msg_603 {}", 1);
        let v_604 = 579;
        pub fn func_482() {
            pub fn func_605() {
                let v_606 = 75;
                let w_607 = 7;
            }
            func_74();
        }
        ext_2();
    }
    pub fn func_608() {
        func_404();
        pub fn func_609() {
            println!("msg_610 {}", 1);
        }
        match 4 {
            0 => {
                println!("msg_611 {}", 1);
                #[cfg(feature = "feat13")]
                let v_612 = 33 + 15;
                let _ = 904;
            }
            _ => {}
        }
        let v_613 = 59 + 19;
    }
}
pub fn func_614() {
    func_170();
    if 18 > 10 {
        let v_615 = func_237();
        if 12 > 10 {
            println!("msg_616 {}", 1);
            println!("msg_617 {}", 1);
        } else {
            let v_618 = 353;
        }
        #[cfg(not(feature = "feat20"))]
        let v_619 = 659;
    } else {
        #[cfg(not(feature = "feat11"))]
        let v_620 = func_100();
        let v_621 = 94 + 36;
        if 13 > 10 {
            #[cfg(any(feature = "feat18", feature = "feat8", feature = "feat12"))]
            let v_622 = ext_1();
            let v_623 = func_396();
        } else {
            #[cfg(feature = "feat3")]
            let _ = 124;
        }
    }
    println!("msg_624 {}", 1);
}
pub struct Record_625 {
    pub field_626: u32,
    pub field_627: u32,
    pub field_628: u32,
}
use std::collections::HashMap;
pub type Alias_629 = u64;
pub type Alias_630 = u64;
#[cfg(feature = "feat22")]
pub enum Kind_631 {
    Variant_632,
    Variant_633,
}
pub fn func_140() {
    pub fn func_634() {
        #[cfg(feature = "feat19")]
        let v_635 = func_538();
        let v_636 = ext_1();
        let v_637 = func_605();
    }
    if 17 > 10 {
        println!("msg_638 {}", 1);
        let _ = 623;
        if 12 > 10 {
            let v_639 = 752;
            if 5 > 10 {
                let v_640 = func_224();
                let v_641 = func_206();
            } else {
                let v_642 = 330;
                let v_643 = 84 + 58;
                let v_644 = func_64();
                println!("msg_645 {}", 1);
            }
        } else {
            let v_646 = func_585();
            println!("msg_647 {}", 1);
            match 1 {
                0 => {
                    #[cfg(not(feature = "feat1"))]
                    let v_648 = func_1();
                    let v_649 = func_213();
                    let _ = 469;
                    let v_650 = 48 + 16;
                }
                _ => {}
            }
            let v_651 = 30 + 75;
        }
        pub fn func_652() {
            let v_653 = 79 + 21;
            let v_654 = func_285();
        }
    } else {
        pub fn func_545() {
            #[cfg(not(feature = "feat5"))]
            let v_655 = ext_3();
            println!("msg_656 {}", 1);
            let v_657 = ext_0();
        }
        let v_658 = 884;
    }
}
#[cfg(feature = "feat3")]
pub struct Record_659 {
    pub field_660: u32,
    pub field_661: u32,
    pub field_662: u32,
}
pub enum Kind_663 {
    Variant_664,
    Variant_665,
}
pub fn func_666() {
    pub fn func_667() {
        ext_1();
    }
    pub fn func_668() {
        let v_669 = func_355();
        func_49();
        if 5 > 10 {
            func_195();
            pub fn func_670() {
                let w_671 = 1;
            }
            println!("msg_672 {}", 1);
        } else {
            if 19 > 10 {
                let v_673 = ext_0();
            } else {
                println!("msg_674 {}", 1);
            }
        }
    }
}
