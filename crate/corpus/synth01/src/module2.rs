pub fn func_340() {
    let v_341 = ext_2();
    match 4 {
        0 => {
            let v_342 = 84 + 56;
            #[cfg(feature = "feat8")]
            pub fn func_343() {
                func_92();
                pub fn func_344() {
                    ext_3();
                }
                let _ = 49 + 15;
            }
            let v_345 = func_106();
        }
        _ => {}
    }
    match 3 {
        0 => {
            #[cfg(feature = "feat4")]
            let _ = 88 + 62;
            if 6 > 10 {
                let v_346 = func_64();
                let v_347 = ext_3();
                #[cfg(feature = "feat3")]
                ext_0();
            } else {
                let v_348 = 359;
                if 0 > 10 {
                    #[cfg(not(feature = "feat1"))]
                    let v_349 = 473;
                    let w_350 = 7;
                    ext_3();
                    let v_351 = func_6();
                } else {
                    ext_0();
                }
                pub fn func_352() {
                    let w_353 = 3;
                    ext_1();
                    let w_354 = 8;
                    println!("msg_355 {}", 1);
                }
            }
            if 13 > 10 {
                println!("msg_356 {}", 1);
            } else {
                pub fn func_357() {
                    let v_358 = ext_1();
                    func_76();
                }
                let v_359 = 740;
                match 3 {
                    0 => {
                        ext_2();
                        let v_360 = func_51();
                    }
                    _ => {}
                }
                let v_361 = 799;
            }
            match 2 {
                0 => {
                    #[cfg(all(feature = "feat3", not(feature = "feat10")))]
                    pub fn func_362() {
                        let v_363 = 357;
                        let w_364 = 5;
                        let w_365 = 8;
                        let _ = 399;
                    }
                    let v_366 = func_175();
                    println!("msg_367 {}", 1);
                    func_115();
                }
                _ => {}
            }
        }
        _ => {}
    }
    if 5 > 10 {
        println!("msg_368 {}", 1);
        match 4 {
            0 => {
                func_1();
            }
            _ => {}
        }
    } else {
        let v_369 = func_283();
        let v_370 = func_184();
        println!("msg_371 {}", 1);
    }
}
use std::collections::HashMap;
pub fn func_372() {
    println!("msg_373 {}", 1);
    println!("msg_374 {}", 1);
}
#[cfg(all(feature = "feat8", not(feature = "feat5")))]
pub fn func_375() {
    match 0 {
        0 => {
            match 1 {
                0 => {
                    let v_376 = 2 + 74;
                }
                _ => {}
            }
            if 1 > 10 {
                ext_0();
                match 1 {
                    0 => {
                        let v_377 = 488;
                        let _ = 50 + 73;
                    }
                    _ => {}
                }
                func_115();
            } else {
                let _ = 59 + 31;
                func_106();
                pub fn func_378() {
                    let v_379 = 37 + 9;
                    let v_380 = func_62();
                }
            }
            match 1 {
                0 => {
                    let v_381 = ext_1();
                    let v_382 = func_98();
                    match 1 {
                        0 => {
                            ext_2();
                            let _ = 9 + 9;
                        }
                        _ => {}
                    }
                    let v_383 = func_178();
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 0 {
        0 => {
            let v_384 = func_344();
            let v_385 = func_4();
            let _ = 553;
        }
        _ => {}
    }
}
pub fn func_386() {
    let _ = 69 + 98;
}
pub struct Handle_387;
impl Handle_387 {
    pub fn func_388() {
        func_6();
        let v_389 = func_172();
    }
}
pub fn func_279() {
    if 9 > 10 {
        let v_390 = 334;
        #[cfg(any(feature = "feat9", feature = "feat8", feature = "feat4"))]
        let v_391 = func_266();
        match 3 {
            0 => {
                let v_392 = func_29();
                match 2 {
                    0 => {
                        println!("msg_393 {}", 1);
                        let v_394 = 258;
                        let w_395 = 0;
                    }
                    _ => {}
                }
                let v_396 = func_375();
                let v_397 = func_283();
            }
            _ => {}
        }
        if 10 > 10 {
            pub fn func_398() {
                let v_399 = 623;
            }
            #[cfg(any(feature = "feat8", feature = "feat8", feature = "feat4"))]
            let _ = 131;
            let v_400 = func_271();
            println!("msg_401 {}", 1);
        } else {
            ext_1();
            func_130();
            let _ = 30 + 61;
        }
    } else {
        let v_402 = 98;
        let v_403 = ext_1();
        pub fn func_404() {
            let v_405 = 72 + 82;
            let _ = 91 + 79;
        }
    }
}
use std::collections::HashMap;
pub fn func_406() {
    #[cfg(feature = "feat3")]
    let v_407 = func_200();
    pub fn func_408() {
        #[cfg(any(feature = "feat9", feature = "feat3", feature = "feat8"))]
        let _ = 23 + 74;
        if 7 > 10 {
            pub fn func_409() {
                #[cfg(feature = "feat9")]
                func_115();
                let v_410 = 48 + 64;
                let v_411 = 41 + 37;
            }
            #[cfg(feature = "feat3")]
            ext_0();
        } else {
            match 2 {
                0 => {
                    let v_412 = func_340();
                    let w_413 = 5;
                    let w_414 = 5;
                    println!("msg_415 {}", 1);
                }
                _ => {}
            }
            #[cfg(feature = "feat4")]
            let v_416 = 43 + 16;
            println!("msg_417 {}", 1);
        }
        let v_418 = 472;
        let v_419 = ext_1();
    }
    match 3 {
        0 => {
            let v_420 = func_307();
            func_112();
            match 3 {
                0 => {
                    #[cfg(feature = "feat4")]
                    let v_421 = 966;
                }
                _ => {}
            }
            println!("msg_422 {}", 1);
        }
        _ => {}
    }
}
pub struct Handle_423;
impl Handle_423 {
    pub fn func_424() {
        let v_425 = 816;
    }
    #[cfg(any(feature = "feat9", feature = "feat9"))]
    pub fn func_426() {
        let v_427 = func_256();
        func_406();
        println!("msg_428 {}", 1);
    }
}
pub struct Record_429 {
    #[cfg(feature = "feat4")]
    pub field_430: u32,
    pub field_431: u32,
    pub field_432: u32,
    #[cfg(feature = "feat4")]
    pub field_433: u32,
}
pub fn func_434() {
    #[cfg(feature = "feat9")]
    let _ = 664;
    func_29();
    println!("msg_435 {}", 1);
}
pub const LIMIT_436: u32 = ext_3();
#[cfg(feature = "feat8")]
pub fn func_437() {
    let v_438 = ext_1();
}
pub const LIMIT_439: u32 = func_221();
#[cfg(feature = "feat4")]
pub enum Kind_440 {
    #[cfg(feature = "feat8")]
    Variant_441,
    Variant_442,
    #[cfg(any(feature = "feat9", feature = "feat9"))]
    Variant_443,
    #[cfg(feature = "feat9")]
    Variant_444,
}
#[cfg(all(feature = "feat4", not(feature = "feat0")))]
pub fn func_445() {
    ext_2();
    pub fn func_340() {
        pub fn func_446() {
            match 0 {
                0 => {
                    println!("msg_447 {}", 1);
                    let v_448 = 8 + 77;
                    let v_449 = 716;
                    let w_450 = 3;
                }
                _ => {}
            }
        }
    }
    let v_451 = 557;
}
pub enum Kind_452 {
    Variant_453,
}
#[cfg(feature = "feat3")]
pub fn func_454() {
    if 1 > 10 {
        let v_455 = func_318();
    } else {
        pub fn func_456() {
            #[cfg(feature = "feat8")]
            let v_457 = 5 + 72;
            let v_458 = 93 + 35;
        }
        let v_459 = 974;
    }
    let _ = 94 + 75;
}
pub fn func_460() {
    if 12 > 10 {
        let v_461 = 6 + 0;
        let v_462 = 997;
        pub fn func_463() {
            let v_464 = ext_1();
        }
    } else {
        ext_0();
    }
    println!("msg_465 {}", 1);
    #[cfg(feature = "feat4")]
    let v_466 = func_424();
}
#[cfg(not(feature = "feat10"))]
pub mod inner_467 {
    use super::*;
    pub type Alias_468 = u64;
}
#[cfg(feature = "feat3")]
pub fn func_469() {
    match 3 {
        0 => {
            let _ = 177;
        }
        _ => {}
    }
}
pub static COUNTER_470: u32 = 0;
pub enum Kind_471 {
    #[cfg(any(feature = "feat3", feature = "feat9"))]
    Variant_472,
    Variant_473,
}
pub mod inner_474 {
    use super::*;
    pub fn func_475() {
        match 4 {
            0 => {
                if 18 > 10 {
                    let w_476 = 1;
                } else {
                    let w_477 = 5;
                    #[cfg(all(feature = "feat9", not(feature = "feat2")))]
                    func_119();
                }
            }
            _ => {}
        }
    }
}
