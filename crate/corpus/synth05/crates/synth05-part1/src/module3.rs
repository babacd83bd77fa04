pub mod inner_452 {
    use super::*;
    pub fn func_453() {
        #[cfg(any(feature = "m1_8", feature = "m1_8"))]
        pub fn func_454() {
            let v_455 = 15 + 1;
            if 11 > 10 {
                let w_456 = 1;
                let w_457 = 5;
                let v_458 = func_69();
            } else {
                println!("msg_459 {}", 1);
                let w_460 = 6;
                let v_461 = 525;
            }
            let v_462 = func_93();
        }
        #[cfg(any(feature = "m1_6", feature = "m1_7", feature = "m1_6"))]
        let v_463 = 58 + 0;
        func_190();
    }
    pub type Alias_464 = u64;
}
pub fn func_465() {
    let v_466 = func_403();
}
pub fn func_467() {
    func_192();
    match 2 {
        0 => {
            #[cfg(feature = "m1_6")]
            ext_2();
            #[cfg(feature = "m1_8")]
            let v_468 = func_405();
            let v_469 = func_363();
            if 9 > 10 {
                func_160();
                let v_470 = func_14();
                if 13 > 10 {
                    let w_471 = 0;
                    let w_472 = 0;
                    let v_473 = 647;
                } else {
                    func_386();
                    let w_474 = 6;
                }
            } else {
                #[cfg(any(feature = "m1_8", feature = "m1_6", feature = "m1_7"))]
                func_416();
            }
        }
        _ => {}
    }
    let v_475 = 41 + 23;
}
pub fn func_476() {
    let v_477 = func_372();
    let _ = 972;
}
pub fn func_478() {
    pub fn func_479() {
        #[cfg(any(feature = "m1_7", feature = "m1_8", feature = "m1_8"))]
        let v_480 = func_372();
        let v_481 = ext_1();
    }
}
pub type Alias_482 = u64;
pub enum Kind_483 {
    Variant_484,
    Variant_485,
}
pub enum Kind_486 {
    Variant_487,
    Variant_488,
    Variant_489,
    Variant_490,
}
pub fn func_491() {
    let _ = 188;
    func_296();
}
pub fn func_492() {
    match 2 {
        0 => {
            let v_493 = 28 + 87;
            ext_1();
            pub fn func_494() {
                pub fn func_495() {
                    let w_496 = 0;
                    let w_497 = 6;
                }
                let v_498 = 86 + 52;
                if 18 > 10 {
                    let w_499 = 6;
                    let w_500 = 1;
                } else {
                    let v_501 = func_476();
                    let v_502 = 351;
                    println!("msg_503 {}", 1);
                    let w_504 = 0;
                }
            }
        }
        _ => {}
    }
    if 10 > 10 {
        match 4 {
            0 => {
                println!("msg_505 {}", 1);
                #[cfg(any(feature = "m1_6", feature = "m1_7", feature = "m1_6"))]
                func_453();
                pub fn func_506() {
                    let w_507 = 3;
                    let w_508 = 2;
                    let w_509 = 3;
                }
            }
            _ => {}
        }
        let v_510 = ext_3();
        let _ = 0 + 89;
    } else {
        let v_511 = 782;
        func_92();
    }
    let v_512 = 804;
}
pub fn func_513() {
    #[cfg(not(feature = "m1_4"))]
    pub fn func_514() {
        println!("msg_515 {}", 1);
    }
    if 13 > 10 {
        let v_516 = 734;
        if 7 > 10 {
            match 4 {
                0 => {
                    let _ = 954;
                    let v_517 = func_38();
                    let v_518 = func_386();
                }
                _ => {}
            }
            let v_519 = ext_1();
            if 8 > 10 {
                #[cfg(feature = "m1_6")]
                let _ = 12 + 23;
            } else {
                let v_520 = func_108();
                let w_521 = 4;
            }
        } else {
            #[cfg(feature = "m1_6")]
            let v_522 = func_403();
            #[cfg(feature = "m1_8")]
            func_134();
        }
        println!("msg_523 {}", 1);
    } else {
        let _ = 870;
        #[cfg(feature = "m1_8")]
        let v_524 = 958;
        pub fn func_525() {
            let v_526 = ext_1();
        }
    }
}
pub struct Handle_527;
impl Handle_527 {
    pub fn func_528() {
        let v_529 = func_208();
    }
    pub fn func_530() {
        pub fn func_160() {
            let v_531 = 22 + 39;
            func_478();
            println!("msg_532 {}", 1);
            match 2 {
                0 => {
                    let w_533 = 6;
                    let w_534 = 1;
                    let w_535 = 3;
                }
                _ => {}
            }
        }
        match 0 {
            0 => {
                #[cfg(feature = "m1_6")]
                let v_536 = ext_0();
                let v_537 = 60 + 8;
                pub fn func_538() {
                    let _ = 811;
                }
            }
            _ => {}
        }
    }
}
pub mod nested;
