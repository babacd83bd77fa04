#[cfg(any(feature = "feat3", feature = "feat18"))]
pub static COUNTER_308: u32 = 0;
pub fn func_180() {
    #[cfg(feature = "feat6")]
    func_57();
    let v_309 = func_106();
    let v_310 = 755;
    pub fn func_311() {
        println!("msg_312 {}", 1);
    }
}
pub const LIMIT_313: u32 = func_39();
#[cfg(feature = "feat14")]
use std::collections::HashMap;
#[cfg(any(feature = "feat18", feature = "feat9"))]
pub fn func_314() {
    let v_315 = ext_2();
    match 1 {
        0 => {
            if 9 > 10 {
                let v_316 = func_57();
                println!("msg_317 {}", 1);
                match 2 {
                    0 => {
                        let v_318 = 47 + 29;
                    }
                    _ => {}
                }
                let v_319 = func_282();
            } else {
                let v_320 = 600;
            }
            match 1 {
                0 => {
                    let _ = 193;
                    if 5 > 10 {
                        let v_321 = 49 + 68;
                        let v_322 = func_311();
                    } else {
                        let v_323 = ext_1();
                        let v_324 = ext_1();
                        println!("msg_325 {}", 1);
                    }
                    let v_326 = 0 + 41;
                    let v_327 = ext_2();
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 4 {
        0 => {
            if 19 > 10 {
                let v_328 = func_171();
                let v_329 = 78 + 74;
            } else {
                let v_330 = 31 + 52;
            }
        }
        _ => {}
    }
}
#[cfg(feature = "feat17")]
pub fn func_331() {
    pub fn func_332() {
        func_120();
        let v_333 = func_311();
        let v_334 = func_98();
        let _ = 845;
    }
    if 6 > 10 {
        println!("msg_335 {}", 1);
        ext_3();
        let v_336 = 926;
    } else {
        let v_337 = 13 + 41;
        let _ = 967;
    }
    func_272();
}
pub fn func_338() {
    if 11 > 10 {
        pub fn func_339() {
            println!("msg_340 {}", 1);
            #[cfg(all(feature = "feat0", not(feature = "feat2")))]
            func_272();
            pub fn func_341() {
                #[cfg(not(feature = "feat11"))]
                let v_342 = 14 + 30;
                let w_343 = 2;
            }
            let v_344 = func_234();
        }
    } else {
        func_278();
        let v_345 = 83 + 77;
        let v_346 = 89 + 5;
        let v_347 = 14 + 85;
    }
    let v_348 = func_260();
}
use std::collections::HashMap;
pub fn func_349() {
    #[cfg(feature = "feat1")]
    let v_350 = func_82();
}
#[cfg(feature = "feat16")]
pub fn func_304() {
    #[cfg(any(feature = "feat18", feature = "feat17", feature = "feat18"))]
    let _ = 414;
}
pub fn func_180() {
    #[cfg(all(feature = "feat1", not(feature = "feat7")))]
    pub fn func_351() {
        if 14 > 10 {
            println!("msg_352 {}", 1);
        } else {
            let v_353 = 71 + 51;
            let v_354 = 36;
            println!("msg_355 {}", 1);
            match 1 {
                0 => {
                    func_311();
                    let w_356 = 4;
                    let v_357 = func_3();
                }
                _ => {}
            }
        }
    }
    pub fn func_32() {
        if 8 > 10 {
            #[cfg(feature = "feat18")]
            let v_358 = func_143();
            let v_359 = 72;
            pub fn func_360() {
                #[cfg(all(feature = "feat10", not(feature = "feat4")))]
                let v_361 = func_60();
                let w_362 = 0;
                let v_363 = func_143();
            }
        } else {
            match 0 {
                0 => {
                    #[cfg(feature = "feat0")]
                    let v_364 = func_331();
                    let v_365 = func_268();
                    let v_366 = 839;
                    println!("msg_367 {}", 1);
                }
                _ => {}
            }
            ext_2();
        }
        println!("msg_368 {}", 1);
        let v_369 = func_332();
    }
    #[cfg(feature = "feat10")]
    pub fn func_370() {
        println!("msg_371 {}", 1);
    }
    let v_372 = func_262();
}
pub struct Handle_373;
impl Handle_373 {
    pub fn func_142() {
        let v_374 = func_311();
        let v_375 = func_82();
        let v_376 = ext_1();
    }
    pub fn func_377() {
        let v_378 = 689;
        let v_379 = func_155();
        if 15 > 10 {
            #[cfg(feature = "feat1")]
            pub fn func_380() {
                #[cfg(feature = "feat9")]
                let _ = 156;
                let w_381 = 6;
                let v_382 = func_273();
            }
            let v_383 = ext_1();
            let v_384 = 72 + 27;
        } else {
            pub fn func_385() {
                let w_386 = 5;
                ext_2();
            }
            #[cfg(feature = "feat9")]
            let v_387 = func_302();
            println!("msg_388 {}", 1);
            let v_389 = 450;
        }
    }
}
pub mod nested;
