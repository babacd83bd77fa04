pub static COUNTER_284: u32 = 0;
pub fn func_285() {
    if 9 > 10 {
        let v_286 = 416;
        let v_287 = func_258();
        #[cfg(feature = "feat29")]
        let v_288 = func_275();
    } else {
        pub fn func_289() {
            #[cfg(feature = "feat27")]
            let _ = 71 + 9;
        }
        println!("msg_290 {}", 1);
        if 3 > 10 {
            match 0 {
                0 => {
                    #[cfg(all(feature = "feat29", not(feature = "feat12")))]
                    let _ = 874;
                    let w_291 = 0;
                    let w_292 = 0;
                }
                _ => {}
            }
        } else {
            if 2 > 10 {
                println!("msg_293 {}", 1);
                let w_294 = 8;
            } else {
                let w_295 = 3;
                let w_296 = 4;
            }
            println!("msg_297 {}", 1);
            pub fn func_298() {
                #[cfg(any(feature = "feat27", feature = "feat29"))]
                let v_299 = 193;
                let w_300 = 1;
                let w_301 = 1;
                #[cfg(feature = "feat27")]
                let v_302 = func_156();
            }
        }
        println!("msg_303 {}", 1);
    }
    func_114();
}
pub struct Handle_304;
impl Handle_304 {
    pub fn func_305() {
        println!("msg_306 {}", 1);
    }
}
pub const LIMIT_307: u32 = func_248();
pub enum Kind_308 {
    Variant_309,
    Variant_310,
    Variant_311,
}
#[cfg(any(feature = "feat27", feature = "feat29"))]
pub fn func_312() {
    let v_313 = func_239();
}
pub fn func_314() {
    let v_315 = func_20();
}
pub fn func_316() {
    #[cfg(not(feature = "feat0"))]
    let v_317 = 27 + 62;
    let _ = 10 + 93;
}
pub enum Kind_318 {
    Variant_319,
    Variant_320,
}
use std::collections::HashMap;
pub fn func_321() {
    if 2 > 10 {
        #[cfg(feature = "feat29")]
        let v_322 = 945;
        match 1 {
            0 => {
                func_114();
            }
            _ => {}
        }
    } else {
        func_316();
        let v_323 = 61 + 5;
        match 2 {
            0 => {
                let v_324 = 73 + 10;
            }
            _ => {}
        }
    }
    #[cfg(feature = "feat28")]
    func_248();
}
pub fn func_325() {
    match 4 {
        0 => {
            println!("msg_326 {}", 1);
            pub fn func_124() {
                println!("msg_327 {}", 1);
                let v_328 = 456;
            }
            let v_329 = func_21();
        }
        _ => {}
    }
    let v_330 = func_1();
    func_252();
}
pub fn func_331() {
    #[cfg(any(feature = "feat29", feature = "feat27"))]
    let v_332 = func_41();
}
use std::collections::HashMap;
#[cfg(feature = "feat29")]
pub fn func_333() {
    let v_334 = func_227();
    ext_2();
    let _ = 95 + 54;
}
pub const LIMIT_335: u32 = 5 + 15;
pub fn func_336() {
    match 2 {
        0 => {
            let v_337 = 59 + 89;
        }
        _ => {}
    }
    match 3 {
        0 => {
            match 2 {
                0 => {
                    println!("msg_338 {}", 1);
                    let v_339 = 454;
                }
                _ => {}
            }
            let _ = 882;
            if 4 > 10 {
                println!("msg_340 {}", 1);
                let v_341 = 203;
            } else {
                let v_342 = func_331();
                pub fn func_248() {
                    #[cfg(all(feature = "feat27", not(feature = "feat21")))]
                    let v_343 = 31 + 92;
                    println!("msg_344 {}", 1);
                    println!("msg_345 {}", 1);
                }
                #[cfg(feature = "feat27")]
                pub fn func_346() {
                    let v_347 = func_239();
                    println!("msg_348 {}", 1);
                }
            }
        }
        _ => {}
    }
    match 4 {
        0 => {
            #[cfg(feature = "feat29")]
            let v_349 = func_333();
            let v_350 = ext_0();
            let v_351 = 79 + 44;
        }
        _ => {}
    }
    println!("msg_352 {}", 1);
}
pub fn func_353() {
    let v_354 = ext_2();
    let v_355 = 801;
    if 6 > 10 {
        let v_356 = func_86();
        pub fn func_333() {
            match 2 {
                0 => {
                    let w_357 = 2;
                    ext_1();
                    let w_358 = 2;
                }
                _ => {}
            }
            let v_359 = ext_0();
            func_278();
        }
        println!("msg_360 {}", 1);
        #[cfg(feature = "feat28")]
        let _ = 77 + 68;
    } else {
        let _ = 22 + 33;
        let _ = 157;
        println!("msg_361 {}", 1);
        let v_362 = 4 + 10;
    }
    func_177();
}
