pub enum Kind_2296 {
    Variant_2297,
    Variant_2298,
    Variant_2299,
}
#[cfg(feature = "feat15")]
pub static COUNTER_2300: u32 = 0;
pub static COUNTER_2301: u32 = 0;
pub mod inner_2302 {
    use super::*;
    pub fn func_2038() {
        let v_2303 = ext_2();
        if 11 > 10 {
            pub fn func_2304() {
                func_1767();
                let v_2305 = func_79();
                let w_2306 = 2;
                let w_2307 = 0;
            }
            let v_2308 = func_1313();
            let v_2309 = func_1313();
        } else {
            println!("msg_2310 {}", 1);
            ext_0();
        }
        pub fn func_2311() {
            if 4 > 10 {
                let _ = 958;
                #[cfg(all(feature = "feat5", not(feature = "feat22")))]
                let v_2312 = ext_3();
                let v_2313 = 921;
            } else {
                println!("msg_2314 {}", 1);
            }
            let v_2315 = ext_2();
            let v_2316 = 53;
        }
        pub fn func_2317() {
            println!("msg_2318 {}", 1);
            let v_2319 = ext_0();
        }
    }
}
pub fn func_2320() {
    let v_2321 = func_1560();
    ext_3();
    let v_2322 = ext_3();
}
pub mod inner_2323 {
    use super::*;
    pub static COUNTER_2324: u32 = 0;
    #[cfg(any(feature = "feat2", feature = "feat15"))]
    pub type Alias_2325 = u64;
    pub struct Handle_2326;
    impl Handle_2326 {
        pub fn func_2327() {
            pub fn func_2328() {
                let w_2329 = 3;
                println!("msg_2330 {}", 1);
                let _ = 144;
            }
            if 10 > 10 {
                let v_2331 = 59 + 86;
                let v_2332 = 57 + 36;
                #[cfg(feature = "feat11")]
                func_1707();
            } else {
                let w_2333 = 1;
            }
            let v_2334 = func_997();
            let v_2335 = func_1065();
        }
    }
}
pub mod inner_2336 {
    use super::*;
    pub fn func_2337() {
        pub fn func_2338() {
            func_1432();
        }
        func_600();
        println!("msg_2339 {}", 1);
        func_2224();
    }
    pub mod inner_2340 {
        use super::*;
        pub struct Record_2341 {
            pub field_2342: u32,
            pub field_2343: u32,
            pub field_2344: u32,
        }
        pub fn func_2345() {
            let v_2346 = ext_0();
            match 0 {
                0 => {
                    println!("msg_2347 {}", 1);
                }
                _ => {}
            }
            pub fn func_2348() {
                let w_2349 = 2;
                let w_2350 = 2;
                let v_2351 = 69 + 64;
                #[cfg(feature = "feat5")]
                func_939();
            }
            let v_2352 = 574;
        }
    }
    pub fn func_2353() {
        let v_2354 = func_1629();
        pub fn func_2355() {
            println!("msg_2356 {}", 1);
        }
        ext_1();
    }
}
pub struct Record_2357 {
    pub field_2358: u32,
    pub field_2359: u32,
}
pub fn func_425() {
    let v_2360 = 98 + 81;
    match 4 {
        0 => {
            let v_2361 = ext_2();
            println!("msg_2362 {}", 1);
        }
        _ => {}
    }
    let v_2363 = ext_2();
    if 5 > 10 {
        let v_2364 = 670;
        let v_2365 = 936;
    } else {
        println!("msg_2366 {}", 1);
        println!("msg_2367 {}", 1);
        if 1 > 10 {
            ext_3();
            pub fn func_2368() {
                let w_2369 = 3;
                let w_2370 = 1;
                ext_3();
            }
            ext_0();
        } else {
            pub fn func_2371() {
                println!("msg_2372 {}", 1);
                ext_2();
                let w_2373 = 6;
                let w_2374 = 3;
            }
            #[cfg(feature = "feat14")]
            pub fn func_2375() {
                let v_2376 = func_1295();
                let w_2377 = 4;
                println!("msg_2378 {}", 1);
            }
            let v_2379 = 139;
        }
        ext_3();
    }
}
pub fn func_2380() {
    let _ = 364;
    let v_2381 = 79 + 75;
    ext_1();
}
pub static COUNTER_2382: u32 = 0;
#[cfg(feature = "feat5")]
pub type Alias_2383 = u64;
pub type Alias_2384 = u64;
#[cfg(all(feature = "feat2", not(feature = "feat20")))]
pub mod inner_2385 {
    use super::*;
    pub enum Kind_2386 {
        Variant_2387,
        Variant_2388,
    }
    #[cfg(not(feature = "feat20"))]
    pub fn func_2389() {
        let _ = 50 + 49;
        let v_2390 = func_543();
    }
    use std::collections::HashMap;
}
#[cfg(feature = "feat21")]
pub struct Record_2391 {
    pub field_2392: u32,
    pub field_2393: u32,
    pub field_2394: u32,
    pub field_2395: u32,
}
