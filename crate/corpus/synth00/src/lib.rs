pub mod module0;
pub mod module1;
pub struct Handle_308;
#[cfg(not(feature = "feat2"))]
impl Handle_308 {
    pub fn func_309() {
        println!("msg_310 {}", 1);
        match 4 {
            0 => {
                func_38();
                func_79();
                if 14 > 10 {
                    println!("msg_311 {}", 1);
                    let v_312 = ext_3();
                    println!("msg_313 {}", 1);
                } else {
                    println!("msg_314 {}", 1);
                }
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat6")]
pub enum Kind_315 {
    #[cfg(feature = "feat8")]
    Variant_316,
}
pub mod inner_317 {
    use super::*;
    pub enum Kind_318 {
        Variant_319,
        Variant_320,
        Variant_321,
    }
    #[cfg(feature = "feat0")]
    pub enum Kind_322 {
        Variant_323,
        Variant_324,
        Variant_325,
        Variant_326,
    }
    pub struct Record_327 {
        #[cfg(feature = "feat1")]
        pub field_328: u32,
    }
}
pub fn func_329() {
    println!("msg_330 {}", 1);
}
pub mod inner_331 {
    use super::*;
    pub fn func_332() {
        let v_333 = func_14();
        if 0 > 10 {
            pub fn func_334() {
                println!("msg_335 {}", 1);
                let v_336 = func_136();
            }
            println!("msg_337 {}", 1);
            match 1 {
                0 => {
                    println!("msg_338 {}", 1);
                    let w_339 = 0;
                    #[cfg(not(feature = "feat5"))]
                    let v_340 = func_88();
                    let w_341 = 8;
                }
                _ => {}
            }
        } else {
            match 1 {
                0 => {
                    let w_342 = 1;
                    let w_343 = 0;
                    let w_344 = 3;
                    let w_345 = 1;
                }
                _ => {}
            }
            #[cfg(any(feature = "feat3", feature = "feat4", feature = "feat7"))]
            let _ = 317;
            let v_346 = 1 + 67;
        }
        #[cfg(feature = "feat3")]
        let v_347 = func_227();
    }
    #[cfg(feature = "feat7")]
    pub struct Record_348 {
        pub field_349: u32,
        pub field_350: u32,
    }
}
#[cfg(feature = "feat8")]
pub fn func_351() {
    let v_352 = func_40();
}
#[cfg(not(feature = "feat5"))]
pub fn func_353() {
    let v_354 = 959;
    let v_355 = ext_1();
    let v_356 = func_59();
}
pub const LIMIT_357: u32 = func_353();
pub fn func_358() {
    let v_359 = 42 + 55;
}
pub type Alias_360 = u64;
#[cfg(feature = "feat8")]
pub type Alias_361 = u64;
pub struct Record_362 {
    #[cfg(feature = "feat4")]
    pub field_363: u32,
    pub field_364: u32,
    pub field_365: u32,
}
pub type Alias_366 = u64;
pub static COUNTER_367: u32 = 0;
#[cfg(feature = "feat3")]
pub enum Kind_368 {
    Variant_369,
    Variant_370,
}
#[cfg(feature = "feat0")]
pub struct Record_371 {
    pub field_372: u32,
    pub field_373: u32,
    pub field_374: u32,
}
pub struct Handle_375;
impl Handle_375 {
    pub fn func_376() {
        println!("msg_377 {}", 1);
        #[cfg(feature = "feat4")]
        let v_378 = 859;
        println!("msg_379 {}", 1);
        if 6 > 10 {
            if 6 > 10 {
                func_282();
                let v_380 = ext_0();
            } else {
                let w_381 = 2;
                #[cfg(feature = "feat7")]
                let _ = 882;
                let w_382 = 3;
                let v_383 = func_194();
            }
            let v_384 = func_79();
            if 18 > 10 {
                #[cfg(feature = "feat0")]
                let v_385 = 38 + 86;
                let w_386 = 5;
                let w_387 = 4;
                #[cfg(any(feature = "feat7", feature = "feat7"))]
                let v_388 = 48 + 64;
            } else {
                ext_3();
                ext_2();
                let v_389 = func_244();
                let v_390 = ext_2();
            }
            let _ = 440;
        } else {
            func_81();
        }
    }
}
pub type Alias_391 = u64;
pub struct Handle_392;
impl Handle_392 {
    #[cfg(feature = "feat7")]
    pub fn func_393() {
        let _ = 317;
    }
    pub fn func_297() {
        pub fn func_394() {
            pub fn func_395() {
                let w_396 = 7;
            }
            let v_397 = 73 + 39;
        }
        let v_398 = func_72();
    }
}
pub static COUNTER_399: u32 = 0;
pub const LIMIT_400: u32 = func_238();
pub struct Handle_401;
impl Handle_401 {
    pub fn func_402() {
        if 18 > 10 {
            match 1 {
                0 => {
                    let v_403 = 11 + 98;
                }
                _ => {}
            }
        } else {
            match 2 {
                0 => {
                    #[cfg(not(feature = "feat2"))]
                    ext_0();
                    let w_404 = 8;
                    func_376();
                    let _ = 822;
                }
                _ => {}
            }
            if 10 > 10 {
                let v_405 = func_73();
                func_304();
                #[cfg(any(feature = "feat0", feature = "feat4", feature = "feat3"))]
                func_244();
                let v_406 = func_9();
            } else {
                let v_407 = func_358();
                let v_408 = func_353();
                func_79();
                ext_3();
            }
            let v_409 = func_204();
            ext_1();
        }
        let v_410 = func_72();
        match 2 {
            0 => {
                let v_411 = ext_2();
                #[cfg(feature = "feat6")]
                let _ = 35 + 57;
                match 3 {
                    0 => {
                        let v_412 = func_257();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub fn func_413() {
    func_180();
}
pub fn func_414() {
    if 16 > 10 {
        println!("msg_415 {}", 1);
        #[cfg(not(feature = "feat9"))]
        let v_416 = 76 + 27;
        let v_417 = ext_3();
        let _ = 4 + 46;
    } else {
        let v_418 = func_334();
        pub fn func_419() {
            let _ = 82;
        }
    }
    let v_420 = ext_0();
    if 3 > 10 {
        let v_421 = ext_2();
    } else {
        match 4 {
            0 => {
                let v_422 = ext_0();
                #[cfg(all(feature = "feat3", not(feature = "feat2")))]
                let v_423 = 582;
                pub fn func_424() {
                    let v_425 = 75 + 53;
                    let v_426 = func_189();
                    #[cfg(not(feature = "feat2"))]
                    let v_427 = 82 + 58;
                    println!("msg_428 {}", 1);
                }
            }
            _ => {}
        }
        let v_429 = func_304();
    }
    let _ = 96 + 27;
}
pub enum Kind_430 {
    Variant_431,
    #[cfg(any(feature = "feat3", feature = "feat4"))]
    Variant_432,
}
pub struct Handle_433;
impl Handle_433 {
    pub fn func_181() {
        ext_1();
    }
}
#[cfg(any(feature = "feat6", feature = "feat4"))]
pub fn func_434() {
    let v_435 = func_181();
    if 12 > 10 {
        println!("msg_436 {}", 1);
        println!("msg_437 {}", 1);
    } else {
        match 3 {
            0 => {
                let v_438 = ext_2();
                #[cfg(any(feature = "feat8", feature = "feat7", feature = "feat8"))]
                let v_439 = 4 + 3;
                let v_440 = 361;
            }
            _ => {}
        }
        let v_441 = 77 + 6;
    }
    let v_442 = 27 + 99;
}
#[cfg(feature = "feat1")]
pub fn func_443() {
    ext_3();
}
pub fn func_444() {
    println!("msg_445 {}", 1);
}
pub fn func_446() {
    let _ = 59;
    let v_447 = 801;
}
#[cfg(feature = "feat7")]
pub static COUNTER_448: u32 = 0;
#[cfg(feature = "feat3")]
use std::collections::HashMap;
pub struct Record_449 {
    #[cfg(feature = "feat0")]
    pub field_450: u32,
    #[cfg(not(feature = "feat2"))]
    pub field_451: u32,
}
pub fn func_452() {
    ext_0();
    let _ = 76 + 10;
    pub fn func_453() {
        let v_454 = 74 + 33;
    }
}
