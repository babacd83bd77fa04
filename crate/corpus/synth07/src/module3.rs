pub mod inner_488 {
    use super::*;
    #[cfg(not(feature = "feat5"))]
    pub static COUNTER_489: u32 = 0;
    pub fn func_490() {
        let v_491 = 557;
        match 4 {
            0 => {
                #[cfg(feature = "feat21")]
                let v_492 = func_224();
                match 2 {
                    0 => {
                        println!("msg_493 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        #[cfg(any(feature = "feat8", feature = "feat18"))]
        let v_494 = func_165();
        #[cfg(feature = "feat6")]
        let v_495 = 30 + 28;
    }
}
pub static COUNTER_496: u32 = 0;
pub const LIMIT_497: u32 = 40 + 36;
#[cfg(not(feature = "feat11"))]
pub fn func_271() {
    match 0 {
        0 => {
            ext_3();
            if 10 > 10 {
                let _ = 95 + 30;
                let _ = 62;
                let _ = 97 + 79;
            } else {
                let v_498 = ext_0();
                println!("msg_499 {}", 1);
                let v_500 = func_344();
                match 3 {
                    0 => {
                        let w_501 = 7;
                    }
                    _ => {}
                }
            }
            let v_502 = 112;
            println!("msg_503 {}", 1);
        }
        _ => {}
    }
    func_351();
    let v_504 = ext_1();
}
pub enum Kind_505 {
    Variant_506,
    Variant_507,
}
pub struct Record_508 {
    pub field_509: u32,
    #[cfg(feature = "feat0")]
    pub field_510: u32,
}
pub fn func_511() {
    let v_512 = ext_1();
    #[cfg(feature = "feat19")]
    let v_513 = 715;
}
pub fn func_514() {
    let v_515 = ext_2();
    let _ = 8;
    let v_516 = 560;
    let _ = 578;
}
pub fn func_517() {
    func_110();
    pub fn func_518() {
        println!("msg_519 {}", 1);
        ext_1();
        match 2 {
            0 => {
                println!("msg_520 {}", 1);
                #[cfg(any(feature = "feat22", feature = "feat3"))]
                let _ = 6;
            }
            _ => {}
        }
    }
    let _ = 178;
    #[cfg(not(feature = "feat20"))]
    let v_521 = func_184();
}
pub struct Handle_522;
impl Handle_522 {
    pub fn func_523() {
        println!("msg_524 {}", 1);
        #[cfg(not(feature = "feat14"))]
        let v_525 = func_184();
        let v_526 = func_49();
    }
}
pub enum Kind_527 {
    Variant_528,
}
pub enum Kind_529 {
    Variant_530,
    Variant_531,
    Variant_532,
    Variant_533,
}
pub mod inner_534 {
    use super::*;
    pub fn func_535() {
        println!("msg_536 {}", 1);
        match 3 {
            0 => {
                #[cfg(feature = "feat19")]
                func_124();
                #[cfg(not(feature = "feat7"))]
                ext_0();
                let v_537 = func_468();
                ext_2();
            }
            _ => {}
        }
        pub fn func_538() {
            let v_539 = func_118();
        }
        let v_540 = func_462();
    }
    pub static COUNTER_541: u32 = 0;
    pub fn func_1() {
        let v_542 = func_236();
    }
}
pub enum Kind_543 {
    Variant_544,
}
pub fn func_545() {
    let v_546 = ext_2();
    let v_547 = 10 + 70;
}
pub enum Kind_548 {
    Variant_549,
}
pub enum Kind_550 {
    Variant_551,
    Variant_552,
    #[cfg(feature = "feat19")]
    Variant_553,
    #[cfg(not(feature = "feat15"))]
    Variant_554,
}
pub static COUNTER_555: u32 = 0;
#[cfg(any(feature = "feat23", feature = "feat21"))]
pub struct Record_556 {
    #[cfg(not(feature = "feat1"))]
    pub field_557: u32,
}
pub struct Record_558 {
    pub field_559: u32,
}
pub fn func_560() {
    #[cfg(feature = "feat22")]
    let v_561 = func_64();
    if 11 > 10 {
        let v_562 = 70 + 62;
        ext_1();
        let v_563 = func_462();
        println!("msg_564 {}", 1);
    } else {
        let v_565 = func_213();
        func_195();
        println!("msg_566 {}", 1);
    }
}
pub struct Handle_567;
impl Handle_567 {
    pub fn func_568() {
        match 1 {
            0 => {
                func_518();
                let v_569 = 69 + 58;
            }
            _ => {}
        }
    }
}
pub struct Record_570 {
    pub field_571: u32,
    pub field_572: u32,
    pub field_573: u32,
}
pub mod nested;
