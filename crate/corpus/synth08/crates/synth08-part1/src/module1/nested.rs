pub fn func_270() {
    let v_271 = ext_1();
    let v_272 = func_182();
    let v_273 = 88;
    pub fn func_122() {
        let v_274 = 627;
        let v_275 = 923;
    }
}
#[cfg(feature = "m1_6")]
pub fn func_276() {
    match 4 {
        0 => {
            let v_277 = func_187();
        }
        _ => {}
    }
}
pub fn func_278() {
    #[cfg(not(feature = "m1_10"))]
    pub fn func_279() {
        func_162();
        let v_280 = ext_3();
        match 3 {
            0 => {
                let v_281 = ext_3();
                let v_282 = func_79();
                ext_2();
                func_268();
            }
            _ => {}
        }
        println!("msg_283 {}", 1);
    }
    func_248();
}
#[cfg(not(feature = "m1_10"))]
pub mod inner_284 {
    use super::*;
    pub const LIMIT_285: u32 = ext_2();
}
#[cfg(all(feature = "m1_7", not(feature = "m1_3")))]
pub type Alias_286 = u64;
pub fn func_287() {
    let v_288 = func_195();
    func_122();
}
#[cfg(feature = "m1_7")]
pub type Alias_289 = u64;
use std::collections::HashMap;
pub fn func_290() {
    let v_291 = func_221();
}
pub fn func_292() {
    match 2 {
        0 => {
            println!("msg_293 {}", 1);
            let v_294 = func_119();
            let v_295 = 992;
        }
        _ => {}
    }
}
pub const LIMIT_296: u32 = func_32();
pub mod inner_297 {
    use super::*;
    pub struct Record_298 {
        pub field_299: u32,
        pub field_300: u32,
    }
    pub fn func_301() {
        let v_302 = 62 + 39;
        let v_303 = ext_2();
    }
}
pub type Alias_304 = u64;
pub fn func_305() {
    let v_306 = func_268();
    let v_307 = func_127();
    let _ = 278;
}
pub fn func_308() {
    func_265();
    #[cfg(feature = "m1_4")]
    pub fn func_309() {
        let v_310 = 50 + 22;
    }
    pub fn func_311() {
        let v_312 = ext_1();
        ext_3();
    }
    let v_313 = 60 + 33;
}
pub fn func_314() {
    func_305();
    let v_315 = 359;
}
pub struct Handle_316;
#[cfg(feature = "m1_8")]
impl Handle_316 {
    pub fn func_317() {
        let v_318 = 70 + 62;
        let v_319 = 3 + 49;
        ext_1();
        func_268();
    }
}
pub enum Kind_320 {
    Variant_321,
}
pub fn func_322() {
    let _ = 633;
    pub fn func_323() {
        #[cfg(feature = "m1_8")]
        func_290();
        if 10 > 10 {
            #[cfg(feature = "m1_6")]
            let v_324 = func_178();
            match 1 {
                0 => {
                    let v_325 = func_129();
                }
                _ => {}
            }
        } else {
            let v_326 = func_32();
        }
        println!("msg_327 {}", 1);
        pub fn func_328() {
            let v_329 = ext_3();
            if 13 > 10 {
                let w_330 = 4;
                let w_331 = 4;
                let v_332 = 424;
            } else {
                let v_333 = func_308();
            }
            println!("msg_334 {}", 1);
        }
    }
}
pub fn func_79() {
    if 11 > 10 {
        let v_335 = 73 + 48;
        let v_336 = ext_3();
    } else {
        if 0 > 10 {
            let v_337 = func_248();
            #[cfg(not(feature = "m1_0"))]
            let v_338 = ext_0();
        } else {
            if 3 > 10 {
                let v_339 = func_153();
                let w_340 = 1;
                let w_341 = 2;
                let w_342 = 4;
            } else {
                let w_343 = 8;
                #[cfg(feature = "m1_4")]
                let v_344 = func_309();
            }
            #[cfg(feature = "m1_6")]
            func_17();
        }
        pub fn func_345() {
            let _ = 96 + 20;
            let v_346 = func_233();
            let _ = 209;
        }
        let v_347 = 799;
    }
}
#[cfg(all(feature = "m1_8", not(feature = "m1_9")))]
pub mod inner_348 {
    use super::*;
    pub enum Kind_349 {
        Variant_350,
        Variant_351,
    }
    pub enum Kind_352 {
        Variant_353,
        Variant_354,
    }
    pub static COUNTER_355: u32 = 0;
}
pub const LIMIT_356: u32 = ext_1();
pub enum Kind_357 {
    Variant_358,
}
pub fn func_359() {
    match 1 {
        0 => {
            println!("msg_360 {}", 1);
        }
        _ => {}
    }
}
