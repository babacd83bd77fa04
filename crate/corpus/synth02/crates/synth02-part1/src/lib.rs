pub mod module0;
#[cfg(feature = "m1_6")]
pub mod module1;
pub fn func_298() {
    let v_299 = 190;
    #[cfg(all(feature = "m1_1", not(feature = "m1_0")))]
    let v_300 = func_37();
    let v_301 = 53;
}
pub struct Handle_302;
impl Handle_302 {
    #[cfg(feature = "m1_6")]
    pub fn func_303() {
        if 16 > 10 {
            let v_304 = ext_1();
            match 3 {
                0 => {
                    let v_305 = func_128();
                    let v_306 = 13 + 7;
                }
                _ => {}
            }
            let v_307 = func_169();
            if 4 > 10 {
                let v_308 = 290;
            } else {
                let v_309 = func_184();
                func_84();
                println!("msg_310 {}", 1);
            }
        } else {
            let v_311 = 82 + 8;
            let v_312 = 40 + 28;
            ext_2();
        }
    }
    #[cfg(any(feature = "m1_6", feature = "m1_6"))]
    pub fn func_313() {
        println!("msg_314 {}", 1);
    }
}
pub struct Handle_315;
impl Handle_315 {
    pub fn func_279() {
        pub fn func_316() {
            #[cfg(not(feature = "m1_2"))]
            ext_1();
            if 12 > 10 {
                let v_317 = ext_3();
                func_40();
                let w_318 = 1;
            } else {
                #[cfg(any(feature = "m1_1", feature = "m1_3", feature = "m1_5"))]
                func_81();
                let v_319 = 46 + 35;
                let _ = 313;
                let v_320 = 835;
            }
            let v_321 = ext_1();
        }
        println!("msg_322 {}", 1);
        let v_323 = func_313();
        println!("msg_324 {}", 1);
    }
}
pub type Alias_325 = u64;
pub fn func_326() {
    let _ = 60;
    #[cfg(any(feature = "m1_6", feature = "m1_6"))]
    pub fn func_327() {
        match 1 {
            0 => {
                let v_328 = ext_2();
                let _ = 626;
            }
            _ => {}
        }
    }
    let v_329 = ext_1();
}
pub fn func_330() {
    #[cfg(feature = "m1_3")]
    let v_331 = 375;
    match 0 {
        0 => {
            let v_332 = func_11();
            match 1 {
                0 => {
                    func_298();
                    let v_333 = 744;
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub fn func_334() {
    let v_335 = ext_1();
}
pub mod inner_336 {
    use super::*;
    pub fn func_337() {
        if 3 > 10 {
            let v_338 = 812;
            let v_339 = ext_3();
        } else {
            let v_340 = func_105();
            let v_341 = ext_0();
            println!("msg_342 {}", 1);
        }
        let v_343 = func_169();
        func_99();
    }
    pub fn func_344() {
        #[cfg(all(feature = "m1_6", not(feature = "m1_2")))]
        let _ = 6 + 49;
        match 1 {
            0 => {
                let v_345 = func_95();
                match 0 {
                    0 => {
                        let v_346 = 40 + 46;
                    }
                    _ => {}
                }
                ext_3();
                let v_347 = func_84();
            }
            _ => {}
        }
    }
}
pub type Alias_348 = u64;
pub enum Kind_349 {
    Variant_350,
}
pub fn func_351() {
    #[cfg(all(feature = "m1_6", not(feature = "m1_2")))]
    let v_352 = 162;
    pub fn func_353() {
        let _ = 869;
        if 13 > 10 {
            println!("msg_354 {}", 1);
            println!("msg_355 {}", 1);
            pub fn func_356() {
                let w_357 = 2;
            }
            ext_3();
        } else {
            pub fn func_358() {
                ext_3();
                let v_359 = func_330();
                #[cfg(feature = "m1_1")]
                func_184();
            }
            #[cfg(any(feature = "m1_6", feature = "m1_6"))]
            let v_360 = func_182();
        }
        pub fn func_361() {
            println!("msg_362 {}", 1);
        }
    }
    let v_363 = func_353();
    let v_364 = func_72();
}
pub fn func_365() {
    println!("msg_366 {}", 1);
    let _ = 462;
    println!("msg_367 {}", 1);
    let v_368 = ext_1();
}
pub enum Kind_369 {
    Variant_370,
}
#[cfg(feature = "m1_5")]
pub fn func_85() {
    if 3 > 10 {
        match 1 {
            0 => {
                #[cfg(not(feature = "m1_4"))]
                let _ = 32 + 95;
                match 4 {
                    0 => {
                        let v_371 = 0 + 69;
                        let v_372 = ext_2();
                    }
                    _ => {}
                }
                pub fn func_373() {
                    let v_374 = func_59();
                    let v_375 = 748;
                    println!("msg_376 {}", 1);
                }
                ext_2();
            }
            _ => {}
        }
        let v_377 = func_139();
        match 3 {
            0 => {
                let v_378 = ext_1();
                let _ = 334;
                if 2 > 10 {
                    let _ = 562;
                    let _ = 904;
                    ext_2();
                    let _ = 238;
                } else {
                    func_134();
                }
            }
            _ => {}
        }
        if 11 > 10 {
            if 8 > 10 {
                println!("msg_379 {}", 1);
                let _ = 7 + 21;
                let v_380 = ext_2();
                #[cfg(any(feature = "m1_6", feature = "m1_6", feature = "m1_6"))]
                func_282();
            } else {
                let w_381 = 4;
            }
            let v_382 = func_303();
            ext_1();
        } else {
            println!("msg_383 {}", 1);
            if 0 > 10 {
                func_17();
            } else {
                let v_384 = func_358();
            }
        }
    } else {
        let v_385 = ext_1();
    }
    println!("msg_386 {}", 1);
    let v_387 = 42 + 68;
    match 1 {
        0 => {
            let v_388 = func_205();
            pub fn func_389() {
                match 4 {
                    0 => {
                        let w_390 = 5;
                        let v_391 = ext_3();
                    }
                    _ => {}
                }
                if 19 > 10 {
                    let w_392 = 0;
                } else {
                    let v_393 = 81 + 41;
                    println!("msg_394 {}", 1);
                }
                func_303();
                let v_395 = 84 + 50;
            }
            let v_396 = func_184();
            if 15 > 10 {
                if 10 > 10 {
                    let w_397 = 1;
                    let v_398 = func_66();
                    let w_399 = 8;
                    let _ = 332;
                } else {
                    #[cfg(not(feature = "m1_0"))]
                    ext_0();
                    let w_400 = 7;
                    let v_401 = func_128();
                }
            } else {
                let v_402 = ext_3();
                match 3 {
                    0 => {
                        let w_403 = 5;
                        #[cfg(not(feature = "m1_0"))]
                        let v_404 = 438;
                        func_326();
                        let w_405 = 5;
                    }
                    _ => {}
                }
                let _ = 746;
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub fn func_406() {
    println!("msg_407 {}", 1);
    let v_408 = 44 + 84;
    println!("msg_409 {}", 1);
    let v_410 = func_235();
}
pub struct Handle_411;
impl Handle_411 {
    pub fn func_412() {
        let v_413 = 31 + 61;
        let _ = 40 + 69;
        if 18 > 10 {
            #[cfg(feature = "m1_3")]
            func_18();
        } else {
            #[cfg(feature = "m1_5")]
            let _ = 119;
        }
    }
    pub fn func_95() {
        match 0 {
            0 => {
                println!("msg_414 {}", 1);
                if 6 > 10 {
                    #[cfg(not(feature = "m1_0"))]
                    func_186();
                    let w_415 = 4;
                    func_40();
                    let v_416 = ext_0();
                } else {
                    let _ = 902;
                    let v_417 = ext_2();
                    println!("msg_418 {}", 1);
                    let v_419 = 59 + 52;
                }
                let v_420 = func_334();
                #[cfg(not(feature = "m1_2"))]
                pub fn func_421() {
                    let v_422 = 575;
                    let w_423 = 2;
                    let v_424 = 986;
                    let v_425 = ext_1();
                }
            }
            _ => {}
        }
        println!("msg_426 {}", 1);
    }
}
