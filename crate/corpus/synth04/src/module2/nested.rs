pub const LIMIT_390: u32 = 25 + 73;
#[cfg(feature = "feat9")]
pub enum Kind_391 {
    Variant_392,
    Variant_393,
    Variant_394,
}
#[cfg(feature = "feat10")]
pub static COUNTER_395: u32 = 0;
#[cfg(not(feature = "feat5"))]
pub fn func_396() {
    println!("msg_397 {}", 1);
}
pub enum Kind_398 {
    Variant_399,
    Variant_400,
    Variant_401,
    Variant_402,
}
pub fn func_403() {
    ext_0();
    println!("msg_404 {}", 1);
    func_314();
}
pub fn func_405() {
    #[cfg(feature = "feat9")]
    let v_406 = func_314();
    pub fn func_407() {
        #[cfg(not(feature = "feat15"))]
        let v_408 = func_339();
        println!("msg_409 {}", 1);
    }
    let _ = 13 + 48;
    match 3 {
        0 => {
            func_234();
        }
        _ => {}
    }
}
#[cfg(feature = "feat9")]
pub fn func_92() {
    let _ = 28;
}
pub fn func_410() {
    #[cfg(all(feature = "feat13", not(feature = "feat15")))]
    let v_411 = func_304();
}
#[cfg(feature = "feat18")]
pub fn func_412() {
    let v_413 = func_341();
    match 2 {
        0 => {
            match 1 {
                0 => {
                    println!("msg_414 {}", 1);
                    pub fn func_415() {
                        let w_416 = 7;
                        let v_417 = ext_0();
                    }
                    let v_418 = 13 + 7;
                    match 3 {
                        0 => {
                            let w_419 = 6;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    #[cfg(not(feature = "feat15"))]
    pub fn func_314() {
        pub fn func_420() {
            let v_421 = ext_2();
            pub fn func_422() {
                let w_423 = 6;
                let v_424 = 40 + 52;
            }
        }
    }
}
pub fn func_425() {
    #[cfg(any(feature = "feat16", feature = "feat3", feature = "feat18"))]
    let v_426 = func_302();
}
pub fn func_427() {
    let v_428 = func_302();
    if 6 > 10 {
        match 2 {
            0 => {
                let _ = 745;
                pub fn func_429() {
                    let w_430 = 3;
                    let w_431 = 7;
                    let _ = 124;
                }
                println!("msg_432 {}", 1);
            }
            _ => {}
        }
    } else {
        #[cfg(not(feature = "feat12"))]
        let _ = 75 + 18;
        let v_433 = ext_0();
    }
    let _ = 4 + 2;
}
pub struct Handle_434;
#[cfg(feature = "feat6")]
impl Handle_434 {
    pub fn func_435() {
        let v_436 = func_273();
        let v_437 = func_22();
        let v_438 = func_349();
        let v_439 = 3 + 17;
    }
    #[cfg(any(feature = "feat13", feature = "feat13"))]
    pub fn func_440() {
        let v_441 = func_297();
        println!("msg_442 {}", 1);
        func_120();
    }
}
pub fn func_443() {
    let v_444 = ext_1();
}
pub type Alias_445 = u64;
#[cfg(all(feature = "feat18", not(feature = "feat5")))]
pub fn func_304() {
    pub fn func_446() {
        let v_447 = 70 + 91;
    }
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_448() {
    let v_449 = 57 + 89;
    let v_450 = 625;
    let v_451 = func_440();
    let v_452 = 91 + 42;
}
#[cfg(feature = "feat13")]
use std::collections::HashMap;
#[cfg(feature = "feat18")]
pub enum Kind_453 {
    Variant_454,
    Variant_455,
}
#[cfg(feature = "feat17")]
pub struct Record_456 {
    pub field_457: u32,
    #[cfg(feature = "feat18")]
    pub field_458: u32,
    pub field_459: u32,
    pub field_460: u32,
}
use std::collections::HashMap;
pub enum Kind_461 {
    Variant_462,
}
pub fn func_463() {
    #[cfg(all(feature = "feat0", not(feature = "feat7")))]
    let v_464 = func_177();
    let v_465 = 986;
    match 0 {
        0 => {
            ext_1();
            func_166();
        }
        _ => {}
    }
    let v_466 = 10;
}
pub type Alias_467 = u64;
pub struct Handle_468;
#[cfg(all(feature = "feat18", not(feature = "feat2")))]
impl Handle_468 {
    pub fn func_469() {
        match 0 {
            0 => {
                match 0 {
                    0 => {
                        func_341();
                    }
                    _ => {}
                }
                let _ = 53 + 28;
                let v_470 = func_338();
                func_396();
            }
            _ => {}
        }
    }
}
