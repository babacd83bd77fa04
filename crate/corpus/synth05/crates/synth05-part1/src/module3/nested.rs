pub const LIMIT_539: u32 = ext_2();
#[cfg(feature = "m1_8")]
pub static COUNTER_540: u32 = 0;
pub type Alias_541 = u64;
pub fn func_279() {
    let v_542 = 117;
    let _ = 631;
    #[cfg(feature = "m1_6")]
    let v_543 = func_340();
    println!("msg_544 {}", 1);
}
pub static COUNTER_545: u32 = 0;
pub static COUNTER_546: u32 = 0;
pub enum Kind_547 {
    Variant_548,
    Variant_549,
    Variant_550,
}
pub mod inner_551 {
    use super::*;
    #[cfg(any(feature = "m1_8", feature = "m1_7", feature = "m1_7"))]
    pub fn func_552() {
        if 5 > 10 {
            match 2 {
                0 => {
                    let v_553 = 621;
                    let v_554 = func_208();
                    func_479();
                }
                _ => {}
            }
            ext_0();
        } else {
            let v_555 = 80;
            let v_556 = func_447();
            let v_557 = func_296();
        }
    }
    pub fn func_558() {
        let v_559 = 28 + 91;
        let v_560 = 1 + 41;
        println!("msg_561 {}", 1);
        let v_562 = 95 + 50;
    }
}
pub type Alias_563 = u64;
#[cfg(all(feature = "m1_6", not(feature = "m1_0")))]
pub enum Kind_564 {
    Variant_565,
    Variant_566,
}
pub struct Handle_567;
impl Handle_567 {
    pub fn func_568() {
        pub fn func_569() {
            let v_570 = func_405();
            func_239();
            println!("msg_571 {}", 1);
            let v_572 = 84 + 56;
        }
        pub fn func_573() {
            let v_574 = func_334();
            #[cfg(feature = "m1_8")]
            pub fn func_575() {
                let w_576 = 7;
                let v_577 = func_104();
                let w_578 = 0;
                ext_2();
            }
            let v_579 = ext_2();
        }
        if 10 > 10 {
            match 2 {
                0 => {
                    let v_580 = func_16();
                }
                _ => {}
            }
        } else {
            println!("msg_581 {}", 1);
            println!("msg_582 {}", 1);
        }
    }
    #[cfg(feature = "m1_7")]
    pub fn func_583() {
        let v_584 = 898;
        #[cfg(not(feature = "m1_4"))]
        let v_585 = 515;
        let v_586 = 58 + 8;
    }
}
pub fn func_587() {
    let v_588 = func_453();
    ext_3();
    if 1 > 10 {
        let v_589 = ext_3();
        let v_590 = func_249();
        let v_591 = ext_1();
        func_192();
    } else {
        let _ = 135;
        let v_592 = 719;
    }
    let v_593 = 15 + 33;
}
pub struct Record_594 {
    pub field_595: u32,
    pub field_596: u32,
}
pub type Alias_597 = u64;
pub static COUNTER_598: u32 = 0;
#[cfg(feature = "m1_7")]
pub enum Kind_599 {
    #[cfg(all(feature = "m1_8", not(feature = "m1_4")))]
    Variant_600,
    Variant_601,
    Variant_602,
    Variant_603,
}
pub type Alias_604 = u64;
pub struct Record_605 {
    pub field_606: u32,
    pub field_607: u32,
}
pub fn func_218() {
    if 13 > 10 {
        let v_608 = 53 + 20;
        #[cfg(feature = "m1_7")]
        let v_609 = ext_1();
        if 12 > 10 {
            pub fn func_386() {
                let _ = 115;
                let w_610 = 4;
                func_237();
            }
            func_530();
            match 0 {
                0 => {
                    #[cfg(feature = "m1_7")]
                    let _ = 383;
                    let w_611 = 5;
                    let _ = 94;
                }
                _ => {}
            }
        } else {
            if 19 > 10 {
                let w_612 = 6;
                let v_613 = ext_0();
                let v_614 = func_239();
            } else {
                let w_615 = 3;
                let v_616 = func_69();
                func_513();
            }
            let v_617 = ext_3();
            func_242();
        }
    } else {
        let _ = 543;
        let v_618 = ext_2();
        let v_619 = ext_0();
    }
    let v_620 = ext_1();
    func_297();
    let _ = 741;
}
#[cfg(any(feature = "m1_8", feature = "m1_8"))]
use std::collections::HashMap;
pub struct Handle_621;
#[cfg(any(feature = "m1_8", feature = "m1_7", feature = "m1_8"))]
impl Handle_621 {
    pub fn func_622() {
        let v_623 = ext_0();
    }
    pub fn func_624() {
        if 6 > 10 {
            println!("msg_625 {}", 1);
            let v_626 = func_304();
            let v_627 = func_340();
            let v_628 = func_92();
        } else {
            let v_629 = 83 + 35;
            let v_630 = func_15();
            println!("msg_631 {}", 1);
        }
        let v_632 = ext_1();
        let v_633 = 479;
        let v_634 = func_66();
    }
}
