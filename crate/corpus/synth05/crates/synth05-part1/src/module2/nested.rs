pub type Alias_391 = u64;
pub fn func_104() {
    let v_392 = 8 + 45;
    match 0 {
        0 => {
            pub fn func_393() {
                func_221();
                #[cfg(feature = "m1_8")]
                let v_394 = 93 + 63;
            }
            func_14();
            let v_395 = ext_0();
        }
        _ => {}
    }
    match 2 {
        0 => {
            #[cfg(feature = "m1_6")]
            func_316();
            if 5 > 10 {
                match 3 {
                    0 => {
                        println!("msg_396 {}", 1);
                        let w_397 = 1;
                        let v_398 = 161;
                        let w_399 = 2;
                    }
                    _ => {}
                }
            } else {
                let _ = 736;
            }
            let v_400 = 67 + 43;
        }
        _ => {}
    }
    match 0 {
        0 => {
            let v_401 = func_108();
        }
        _ => {}
    }
}
pub mod inner_402 {
    use super::*;
    #[cfg(feature = "m1_7")]
    pub fn func_403() {
        func_198();
        let _ = 86 + 46;
        #[cfg(feature = "m1_8")]
        let v_404 = 388;
    }
    pub fn func_405() {
        println!("msg_406 {}", 1);
        let v_407 = 91 + 27;
    }
    pub enum Kind_408 {
        Variant_409,
        #[cfg(feature = "m1_3")]
        Variant_410,
        Variant_411,
    }
}
#[cfg(feature = "m1_8")]
use std::collections::HashMap;
pub fn func_412() {
    println!("msg_413 {}", 1);
    match 0 {
        0 => {
            let v_414 = 99 + 91;
        }
        _ => {}
    }
}
#[cfg(feature = "m1_6")]
pub type Alias_415 = u64;
#[cfg(feature = "m1_2")]
pub fn func_416() {
    pub fn func_181() {
        let v_417 = func_201();
        let _ = 921;
        func_108();
        match 2 {
            0 => {
                let v_418 = ext_1();
                match 1 {
                    0 => {
                        let v_419 = 815;
                    }
                    _ => {}
                }
                pub fn func_420() {
                    println!("msg_421 {}", 1);
                    let w_422 = 1;
                }
            }
            _ => {}
        }
    }
    if 10 > 10 {
        if 13 > 10 {
            let v_423 = func_386();
            if 3 > 10 {
                ext_0();
                println!("msg_424 {}", 1);
                let v_425 = func_102();
            } else {
                let _ = 653;
            }
            println!("msg_426 {}", 1);
        } else {
            if 15 > 10 {
                let v_427 = ext_2();
                println!("msg_428 {}", 1);
                let v_429 = func_297();
            } else {
                func_161();
                let v_430 = 605;
            }
            #[cfg(feature = "m1_8")]
            func_237();
        }
        println!("msg_431 {}", 1);
    } else {
        match 1 {
            0 => {
                let v_432 = func_218();
                ext_0();
                let _ = 915;
                let _ = 268;
            }
            _ => {}
        }
        if 1 > 10 {
            match 4 {
                0 => {
                    #[cfg(feature = "m1_6")]
                    let _ = 838;
                    let v_433 = 41 + 15;
                    let v_434 = ext_0();
                    func_92();
                }
                _ => {}
            }
        } else {
            pub fn func_435() {
                let _ = 4 + 66;
                #[cfg(feature = "m1_5")]
                let v_436 = func_251();
                let w_437 = 5;
                let v_438 = 120;
            }
        }
    }
}
pub struct Handle_439;
impl Handle_439 {
    pub fn func_440() {
        match 2 {
            0 => {
                #[cfg(feature = "m1_6")]
                ext_2();
                let v_441 = 40;
                match 2 {
                    0 => {
                        let v_442 = 788;
                    }
                    _ => {}
                }
                func_21();
            }
            _ => {}
        }
        let v_443 = 51 + 59;
        let v_444 = ext_2();
        match 0 {
            0 => {
                let v_445 = 70 + 64;
                let v_446 = func_386();
            }
            _ => {}
        }
    }
    pub fn func_447() {
        match 1 {
            0 => {
                let v_448 = 184;
                #[cfg(feature = "m1_8")]
                let v_449 = ext_2();
            }
            _ => {}
        }
        #[cfg(feature = "m1_8")]
        let v_450 = func_296();
        #[cfg(feature = "m1_2")]
        let v_451 = 17 + 7;
    }
}
