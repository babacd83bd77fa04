pub fn func_313() {
    match 2 {
        0 => {
            println!("msg_314 {}", 1);
            let _ = 312;
            let v_315 = func_222();
        }
        _ => {}
    }
    #[cfg(all(feature = "feat6", not(feature = "feat16")))]
    ext_2();
    let _ = 77 + 50;
}
#[cfg(feature = "feat17")]
pub type Alias_316 = u64;
pub struct Handle_317;
impl Handle_317 {
    pub fn func_318() {
        func_284();
    }
}
pub enum Kind_319 {
    Variant_320,
    Variant_321,
    #[cfg(feature = "feat13")]
    Variant_322,
}
#[cfg(not(feature = "feat20"))]
pub fn func_323() {
    let v_324 = ext_0();
    let v_325 = 902;
    let v_326 = func_236();
    match 4 {
        0 => {
            let v_327 = ext_1();
            println!("msg_328 {}", 1);
        }
        _ => {}
    }
}
pub mod inner_329 {
    use super::*;
    #[cfg(feature = "feat9")]
    pub fn func_330() {
        let v_331 = ext_1();
        match 4 {
            0 => {
                if 3 > 10 {
                    println!("msg_332 {}", 1);
                    let v_333 = func_66();
                } else {
                    let w_334 = 4;
                    let v_335 = func_307();
                    let w_336 = 4;
                    let w_337 = 4;
                }
                pub fn func_338() {
                    let v_339 = 15 + 54;
                }
            }
            _ => {}
        }
    }
}
pub enum Kind_340 {
    Variant_341,
    #[cfg(not(feature = "feat1"))]
    Variant_342,
}
pub mod inner_343 {
    use super::*;
    pub fn func_344() {
        let _ = 58;
        pub fn func_345() {
            let v_346 = func_109();
        }
        if 1 > 10 {
            println!("msg_347 {}", 1);
            let v_348 = func_74();
        } else {
            let v_349 = func_126();
            println!("msg_350 {}", 1);
            pub fn func_351() {
                let v_352 = func_318();
                println!("msg_353 {}", 1);
            }
        }
    }
    pub fn func_354() {
        if 11 > 10 {
            #[cfg(not(feature = "feat11"))]
            pub fn func_355() {
                let v_356 = 157;
                let v_357 = 24 + 60;
            }
            let v_358 = func_210();
            func_214();
            pub fn func_359() {
                let w_360 = 8;
                let w_361 = 0;
            }
        } else {
            let v_362 = 273;
            #[cfg(all(feature = "feat18", not(feature = "feat20")))]
            let _ = 47 + 64;
            #[cfg(any(feature = "feat18", feature = "feat12"))]
            ext_3();
            #[cfg(feature = "feat18")]
            let v_363 = 97 + 70;
        }
        if 0 > 10 {
            if 15 > 10 {
                #[cfg(feature = "feat4")]
                let v_364 = 50 + 87;
                func_280();
                let w_365 = 6;
                let v_366 = 62 + 21;
            } else {
                let w_367 = 1;
            }
            println!("msg_368 {}", 1);
            let v_369 = func_302();
            ext_3();
        } else {
            if 15 > 10 {
                let w_370 = 8;
                let w_371 = 1;
            } else {
                let w_372 = 0;
                #[cfg(any(feature = "feat21", feature = "feat3"))]
                func_289();
            }
            println!("msg_373 {}", 1);
            if 10 > 10 {
                let v_374 = func_172();
            } else {
                let v_375 = ext_2();
                let _ = 84 + 88;
                let w_376 = 3;
                func_276();
            }
        }
        #[cfg(feature = "feat19")]
        let v_377 = func_202();
        func_172();
    }
    pub struct Record_378 {
        pub field_379: u32,
        pub field_380: u32,
        pub field_381: u32,
        pub field_382: u32,
    }
}
pub fn func_383() {
    match 0 {
        0 => {
            match 2 {
                0 => {
                    println!("msg_384 {}", 1);
                    let v_385 = 60 + 59;
                    println!("msg_386 {}", 1);
                }
                _ => {}
            }
            #[cfg(feature = "feat6")]
            pub fn func_387() {
                match 0 {
                    0 => {
                        println!("msg_388 {}", 1);
                    }
                    _ => {}
                }
                match 4 {
                    0 => {
                        let _ = 872;
                        let w_389 = 2;
                        let v_390 = func_149();
                    }
                    _ => {}
                }
                let v_391 = 10 + 40;
            }
            println!("msg_392 {}", 1);
        }
        _ => {}
    }
}
#[cfg(feature = "feat22")]
pub fn func_393() {
    let v_394 = func_166();
    let v_395 = 848;
}
pub fn func_396() {
    pub fn func_397() {
        let v_398 = func_274();
    }
    func_149();
    func_53();
}
pub fn func_165() {
    let v_399 = ext_1();
    ext_2();
}
#[cfg(feature = "feat4")]
pub fn func_400() {
    let v_401 = func_155();
    #[cfg(all(feature = "feat18", not(feature = "feat24")))]
    let _ = 302;
    #[cfg(feature = "feat13")]
    let v_402 = ext_0();
}
#[cfg(feature = "feat22")]
pub mod inner_403 {
    use super::*;
    pub fn func_404() {
        let v_405 = 808;
        println!("msg_406 {}", 1);
    }
}
pub fn func_407() {
    #[cfg(any(feature = "feat0", feature = "feat0", feature = "feat9"))]
    let v_408 = ext_2();
    let v_409 = 49 + 79;
    if 0 > 10 {
        let v_410 = func_237();
        #[cfg(feature = "feat17")]
        func_280();
    } else {
        let v_411 = ext_3();
    }
    if 11 > 10 {
        let v_412 = 686;
    } else {
        let v_413 = 626;
        match 1 {
            0 => {
                let v_414 = ext_1();
                println!("msg_415 {}", 1);
            }
            _ => {}
        }
        let v_416 = ext_2();
        ext_3();
    }
}
#[cfg(feature = "feat6")]
pub enum Kind_417 {
    Variant_418,
    Variant_419,
    Variant_420,
}
pub fn func_421() {
    let v_422 = 94 + 76;
    let v_423 = 83 + 26;
    let _ = 70 + 39;
    println!("msg_424 {}", 1);
}
pub fn func_425() {
    #[cfg(feature = "feat3")]
    let v_426 = func_100();
    let v_427 = func_219();
    let v_428 = ext_1();
    let v_429 = 24 + 9;
}
pub const LIMIT_430: u32 = func_400();
#[cfg(feature = "feat21")]
pub fn func_431() {
    let v_432 = 64 + 26;
    #[cfg(feature = "feat22")]
    let v_433 = func_64();
    ext_3();
}
pub enum Kind_434 {
    Variant_435,
    Variant_436,
}
pub fn func_437() {
    #[cfg(feature = "feat22")]
    let v_438 = 6 + 2;
    match 4 {
        0 => {
            let v_439 = func_351();
            match 0 {
                0 => {
                    let v_440 = func_284();
                    if 14 > 10 {
                        let v_441 = 51 + 60;
                    } else {
                        let v_442 = 22 + 29;
                        let w_443 = 3;
                        let v_444 = ext_1();
                        let w_445 = 4;
                    }
                    #[cfg(all(feature = "feat3", not(feature = "feat15")))]
                    let v_446 = ext_1();
                    if 12 > 10 {
                        #[cfg(feature = "feat19")]
                        let v_447 = func_44();
                        let v_448 = 685;
                        let v_449 = 73 + 30;
                    } else {
                        let w_450 = 1;
                        ext_3();
                        println!("msg_451 {}", 1);
                    }
                }
                _ => {}
            }
            if 10 > 10 {
                #[cfg(feature = "feat9")]
                let v_452 = 671;
                #[cfg(feature = "feat4")]
                ext_2();
                println!("msg_453 {}", 1);
                #[cfg(not(feature = "feat24"))]
                let _ = 401;
            } else {
                pub fn func_454() {
                    ext_0();
                    let _ = 270;
                    let v_455 = func_307();
                    func_283();
                }
            }
            if 12 > 10 {
                let v_456 = func_170();
                println!("msg_457 {}", 1);
            } else {
                let v_458 = 646;
            }
        }
        _ => {}
    }
    println!("msg_459 {}", 1);
    let v_460 = func_202();
}
pub mod inner_461 {
    use super::*;
    pub fn func_462() {
        let _ = 517;
        let v_463 = func_134();
        pub fn func_464() {
            let v_465 = 33 + 79;
            #[cfg(feature = "feat19")]
            pub fn func_466() {
                ext_3();
                let v_467 = func_383();
            }
            match 1 {
                0 => {
                    func_80();
                }
                _ => {}
            }
            pub fn func_468() {
                #[cfg(not(feature = "feat14"))]
                let v_469 = ext_2();
            }
        }
    }
}
pub fn func_203() {
    func_284();
    let v_470 = func_351();
    let v_471 = func_32();
}
pub static COUNTER_472: u32 = 0;
pub enum Kind_473 {
    #[cfg(feature = "feat18")]
    Variant_474,
    Variant_475,
    Variant_476,
}
pub static COUNTER_477: u32 = 0;
pub fn func_478() {
    let _ = 72 + 16;
    println!("msg_479 {}", 1);
    #[cfg(feature = "feat19")]
    let v_480 = func_109();
    println!("msg_481 {}", 1);
}
pub fn func_482() {
    let v_483 = ext_2();
    println!("msg_484 {}", 1);
    if 14 > 10 {
        println!("msg_485 {}", 1);
        let _ = 39 + 50;
    } else {
        let v_486 = 26 + 70;
        let v_487 = func_214();
    }
}
