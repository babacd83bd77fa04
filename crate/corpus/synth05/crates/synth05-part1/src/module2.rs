pub fn func_296() {
    func_160();
    pub fn func_297() {
        #[cfg(any(feature = "m1_3", feature = "m1_8"))]
        let v_298 = ext_1();
    }
    let v_299 = 58 + 1;
}
#[cfg(any(feature = "m1_6", feature = "m1_8"))]
pub fn func_300() {
    let _ = 28 + 19;
    let v_301 = ext_3();
}
pub type Alias_302 = u64;
pub const LIMIT_303: u32 = 74 + 39;
pub fn func_304() {
    let v_305 = 71 + 69;
    match 3 {
        0 => {
            func_201();
            let v_306 = ext_1();
            pub fn func_307() {
                let v_308 = func_181();
                #[cfg(not(feature = "m1_4"))]
                pub fn func_309() {
                    let v_310 = 33 + 55;
                    let _ = 0 + 91;
                    let w_311 = 2;
                    let w_312 = 3;
                }
                #[cfg(all(feature = "m1_1", not(feature = "m1_0")))]
                let _ = 99 + 34;
            }
            println!("msg_313 {}", 1);
        }
        _ => {}
    }
    #[cfg(feature = "m1_5")]
    func_60();
}
pub const LIMIT_314: u32 = func_60();
pub struct Handle_315;
impl Handle_315 {
    pub fn func_316() {
        let v_317 = ext_0();
        if 18 > 10 {
            match 0 {
                0 => {
                    let w_318 = 3;
                    func_21();
                }
                _ => {}
            }
        } else {
            if 12 > 10 {
                let v_319 = func_237();
                ext_2();
                let _ = 869;
                let v_320 = func_102();
            } else {
                println!("msg_321 {}", 1);
                func_249();
                let w_322 = 1;
            }
        }
        let v_323 = ext_1();
        if 14 > 10 {
            #[cfg(any(feature = "m1_6", feature = "m1_5", feature = "m1_7"))]
            let v_324 = 557;
            println!("msg_325 {}", 1);
            if 7 > 10 {
                let w_326 = 3;
                let w_327 = 7;
                let v_328 = 25;
                let v_329 = 625;
            } else {
                let w_330 = 6;
            }
        } else {
            pub fn func_331() {
                let v_332 = func_181();
            }
            let v_333 = func_300();
            let _ = 478;
        }
    }
}
pub fn func_334() {
    let _ = 62 + 14;
}
pub struct Handle_335;
impl Handle_335 {
    pub fn func_336() {
        if 18 > 10 {
            println!("msg_337 {}", 1);
        } else {
            println!("msg_338 {}", 1);
            let v_339 = func_125();
        }
    }
    pub fn func_340() {
        let v_341 = 77 + 1;
        let v_342 = 257;
        if 9 > 10 {
            ext_3();
            pub fn func_343() {
                let v_344 = 891;
            }
        } else {
            func_93();
        }
        #[cfg(feature = "m1_7")]
        let v_345 = 6 + 68;
    }
}
use std::collections::HashMap;
pub type Alias_346 = u64;
pub fn func_347() {
    #[cfg(feature = "m1_6")]
    let v_348 = 96 + 23;
    let v_349 = func_334();
    let v_350 = ext_2();
}
pub fn func_351() {
    #[cfg(feature = "m1_8")]
    ext_0();
    func_71();
}
pub struct Handle_352;
impl Handle_352 {
    #[cfg(feature = "m1_8")]
    pub fn func_38() {
        let v_353 = func_340();
        let _ = 406;
        func_221();
    }
}
use std::collections::HashMap;
pub struct Record_354 {
    pub field_355: u32,
}
pub struct Handle_356;
#[cfg(not(feature = "m1_0"))]
impl Handle_356 {
    pub fn func_357() {
        let v_358 = 870;
        if 15 > 10 {
            let v_359 = func_279();
            let _ = 56 + 25;
        } else {
            let v_360 = 304;
        }
        let v_361 = 73 + 82;
        let v_362 = 46 + 95;
    }
    pub fn func_363() {
        match 1 {
            0 => {
                let v_364 = ext_2();
                match 0 {
                    0 => {
                        let v_365 = func_343();
                        func_347();
                    }
                    _ => {}
                }
                let v_366 = 994;
                let v_367 = 891;
            }
            _ => {}
        }
        let v_368 = func_239();
    }
}
pub mod inner_369 {
    use super::*;
    pub const LIMIT_370: u32 = ext_3();
}
pub struct Handle_371;
impl Handle_371 {
    pub fn func_372() {
        let v_373 = 39 + 90;
        match 4 {
            0 => {
                let v_374 = 899;
                let v_375 = ext_3();
                if 4 > 10 {
                    let v_376 = 74 + 12;
                    let v_377 = 75 + 86;
                    println!("msg_378 {}", 1);
                    #[cfg(any(feature = "m1_8", feature = "m1_8"))]
                    let _ = 47 + 4;
                } else {
                    let v_379 = func_104();
                    let v_380 = 62 + 61;
                }
                #[cfg(all(feature = "m1_5", not(feature = "m1_4")))]
                pub fn func_381() {
                    let v_382 = 917;
                }
            }
            _ => {}
        }
        pub fn func_383() {
            println!("msg_384 {}", 1);
            println!("msg_385 {}", 1);
        }
        ext_2();
    }
    pub fn func_386() {
        pub fn func_387() {
            let v_388 = func_98();
            func_265();
            let v_389 = 5 + 96;
        }
        #[cfg(all(feature = "m1_7", not(feature = "m1_4")))]
        let v_390 = ext_1();
        func_211();
    }
}
pub mod nested;
