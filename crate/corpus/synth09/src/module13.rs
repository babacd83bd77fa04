pub enum Kind_2282 {
    #[cfg(feature = "feat29")]
    Variant_2283,
    Variant_2284,
    #[cfg(any(feature = "feat28", feature = "feat29"))]
    Variant_2285,
}
pub struct Handle_2286;
impl Handle_2286 {
    #[cfg(feature = "feat29")]
    pub fn func_2287() {
        let v_2288 = func_1828();
        let _ = 4 + 41;
    }
    pub fn func_2289() {
        func_2228();
        println!("msg_2290 {}", 1);
        let v_2291 = 81 + 18;
        if 19 > 10 {
            if 13 > 10 {
                #[cfg(feature = "feat27")]
                let v_2292 = 82 + 98;
                let w_2293 = 4;
                let w_2294 = 3;
            } else {
                let v_2295 = func_243();
            }
            let v_2296 = func_1556();
            let v_2297 = ext_2();
            let v_2298 = 828;
        } else {
            if 10 > 10 {
                let v_2299 = func_1566();
                #[cfg(feature = "feat29")]
                let v_2300 = 328;
                println!("msg_2301 {}", 1);
            } else {
                println!("msg_2302 {}", 1);
                let w_2303 = 7;
            }
            let v_2304 = 510;
        }
    }
}
pub enum Kind_2305 {
    Variant_2306,
    Variant_2307,
    Variant_2308,
}
pub type Alias_2309 = u64;
pub fn func_2310() {
    if 10 > 10 {
        let v_2311 = 40 + 50;
    } else {
        let v_2312 = ext_3();
    }
    match 1 {
        0 => {
            if 13 > 10 {
                println!("msg_2313 {}", 1);
                let v_2314 = ext_0();
                let v_2315 = func_599();
                let v_2316 = func_22();
            } else {
                let _ = 81;
                let v_2317 = 23 + 40;
                let v_2318 = 651;
                let _ = 53 + 35;
            }
            #[cfg(feature = "feat24")]
            let v_2319 = func_2252();
            let v_2320 = 777;
            let v_2321 = func_961();
        }
        _ => {}
    }
}
pub mod inner_2322 {
    use super::*;
    pub fn func_2323() {
        ext_0();
        let v_2324 = func_1774();
        pub fn func_2325() {
            let _ = 21 + 13;
            match 2 {
                0 => {
                    let v_2326 = func_509();
                }
                _ => {}
            }
            ext_1();
            #[cfg(feature = "feat28")]
            let v_2327 = func_1512();
        }
        let v_2328 = ext_3();
    }
    pub fn func_2329() {
        let v_2330 = func_1395();
    }
    pub struct Handle_2331;
    impl Handle_2331 {
        pub fn func_2332() {
            pub fn func_2333() {
                let w_2334 = 7;
            }
            #[cfg(not(feature = "feat26"))]
            pub fn func_720() {
                let v_2335 = func_962();
            }
        }
    }
}
pub enum Kind_2336 {
    Variant_2337,
    Variant_2338,
}
#[cfg(feature = "feat27")]
use std::collections::HashMap;
pub fn func_948() {
    let v_2339 = func_2125();
}
#[cfg(feature = "feat28")]
pub fn func_2340() {
    println!("msg_2341 {}", 1);
}
#[cfg(not(feature = "feat25"))]
pub type Alias_2342 = u64;
pub fn func_2343() {
    func_1380();
}
pub enum Kind_2344 {
    Variant_2345,
}
pub struct Record_2346 {
    pub field_2347: u32,
}
use std::collections::HashMap;
#[cfg(feature = "feat28")]
pub fn func_410() {
    if 3 > 10 {
        let v_2348 = func_252();
        let v_2349 = func_336();
        func_1710();
        if 5 > 10 {
            if 7 > 10 {
                let v_2350 = 166;
                let w_2351 = 5;
                let _ = 95 + 38;
                let w_2352 = 8;
            } else {
                let w_2353 = 7;
                let v_2354 = 164;
            }
            let v_2355 = func_1833();
            #[cfg(feature = "feat29")]
            let v_2356 = 119;
            #[cfg(any(feature = "feat29", feature = "feat29"))]
            let _ = 385;
        } else {
            println!("msg_2357 {}", 1);
        }
    } else {
        println!("msg_2358 {}", 1);
        match 2 {
            0 => {
                let v_2359 = func_576();
                let v_2360 = 224;
            }
            _ => {}
        }
        let v_2361 = func_1287();
        #[cfg(feature = "feat29")]
        func_709();
    }
    let v_2362 = ext_1();
    #[cfg(any(feature = "feat29", feature = "feat29"))]
    let v_2363 = 79 + 92;
    let v_2364 = 650;
}
pub fn func_2365() {
    let v_2366 = 0 + 14;
    let v_2367 = 376;
}
use std::collections::HashMap;
pub fn func_2368() {
    let v_2369 = 546;
    ext_1();
}
#[cfg(feature = "feat24")]
pub fn func_2370() {
    let v_2371 = ext_0();
    println!("msg_2372 {}", 1);
}
pub fn func_2373() {
    let v_2374 = 259;
    println!("msg_2375 {}", 1);
}
pub mod inner_2376 {
    use super::*;
    #[cfg(not(feature = "feat12"))]
    pub fn func_2377() {
        let v_2378 = ext_1();
        let v_2379 = 407;
        if 2 > 10 {
            func_1147();
            pub fn func_2380() {
                ext_3();
                let w_2381 = 0;
                let v_2382 = func_1752();
                let _ = 67 + 34;
            }
            let _ = 60 + 62;
            #[cfg(not(feature = "feat15"))]
            let v_2383 = 593;
        } else {
            let v_2384 = 4 + 86;
            let _ = 618;
            let v_2385 = func_2373();
        }
    }
    pub fn func_336() {
        let _ = 67 + 72;
        let v_2386 = ext_2();
        let v_2387 = func_1147();
        match 1 {
            0 => {
                let _ = 30 + 18;
                match 1 {
                    0 => {
                        let v_2388 = 371;
                        let v_2389 = 431;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub static COUNTER_2390: u32 = 0;
pub fn func_2391() {
    let v_2392 = ext_3();
    let v_2393 = func_1367();
}
#[cfg(all(feature = "feat27", not(feature = "feat21")))]
pub mod inner_2394 {
    use super::*;
    pub fn func_2395() {
        let v_2396 = func_2007();
        ext_3();
    }
    pub fn func_2397() {
        ext_2();
        if 16 > 10 {
            ext_0();
            let v_2398 = 24 + 7;
            func_22();
            pub fn func_2399() {
                println!("msg_2400 {}", 1);
            }
        } else {
            let _ = 40 + 98;
            let v_2401 = 558;
        }
        match 3 {
            0 => {
                #[cfg(not(feature = "feat26"))]
                let v_2402 = func_22();
            }
            _ => {}
        }
    }
}
pub struct Handle_2403;
#[cfg(feature = "feat24")]
impl Handle_2403 {
    #[cfg(feature = "feat27")]
    pub fn func_1104() {
        if 3 > 10 {
            #[cfg(feature = "feat29")]
            let _ = 232;
        } else {
            if 12 > 10 {
                let v_2404 = 639;
                let w_2405 = 6;
                let v_2406 = ext_0();
                let v_2407 = func_900();
            } else {
                println!("msg_2408 {}", 1);
            }
        }
        println!("msg_2409 {}", 1);
    }
    #[cfg(feature = "feat29")]
    pub fn func_2410() {
        ext_2();
    }
}
pub struct Record_2411 {
    #[cfg(feature = "feat27")]
    pub field_2412: u32,
    pub field_2413: u32,
}
#[cfg(all(feature = "feat29", not(feature = "feat10")))]
pub mod inner_2414 {
    use super::*;
    pub fn func_2415() {
        let v_2416 = ext_3();
        match 0 {
            0 => {
                let v_2417 = ext_3();
                println!("msg_2418 {}", 1);
                pub fn func_2419() {
                    let _ = 280;
                    let v_2420 = 48 + 41;
                    let v_2421 = 614;
                }
            }
            _ => {}
        }
        func_265();
    }
    pub fn func_2422() {
        let v_2423 = ext_0();
        let v_2424 = func_948();
        pub fn func_2425() {
            let v_2426 = func_1147();
            ext_1();
            let v_2427 = func_904();
        }
        if 14 > 10 {
            let _ = 20 + 25;
            let v_2428 = 928;
        } else {
            let v_2429 = 853;
        }
    }
    pub fn func_2365() {
        let v_2430 = 59 + 11;
        match 2 {
            0 => {
                if 16 > 10 {
                    ext_3();
                } else {
                    let w_2431 = 0;
                    println!("msg_2432 {}", 1);
                }
                let v_2433 = func_859();
                let v_2434 = func_236();
                #[cfg(not(feature = "feat25"))]
                let v_2435 = 19 + 8;
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat29")]
pub static COUNTER_2436: u32 = 0;
pub fn func_51() {
    let v_2437 = 521;
    let v_2438 = func_2062();
    match 2 {
        0 => {
            let v_2439 = 18 + 89;
            if 3 > 10 {
                #[cfg(feature = "feat27")]
                pub fn func_2440() {
                    let w_2441 = 7;
                }
                println!("msg_2442 {}", 1);
            } else {
                let v_2443 = 95 + 45;
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat28")]
    let v_2444 = func_2329();
}
#[cfg(any(feature = "feat24", feature = "feat29", feature = "feat28"))]
pub struct Record_2445 {
    pub field_2446: u32,
    pub field_2447: u32,
    pub field_2448: u32,
    pub field_2449: u32,
}
pub struct Record_2450 {
    #[cfg(feature = "feat27")]
    pub field_2451: u32,
    pub field_2452: u32,
    #[cfg(any(feature = "feat28", feature = "feat28", feature = "feat27"))]
    pub field_2453: u32,
    pub field_2454: u32,
}
#[cfg(not(feature = "feat26"))]
pub fn func_2455() {
    let _ = 30 + 76;
}
