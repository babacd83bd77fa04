pub fn func_2323() {
    let v_2324 = 466;
    #[cfg(not(feature = "feat24"))]
    let v_2325 = func_1633();
    let v_2326 = func_407();
}
pub type Alias_2327 = u64;
pub struct Handle_2328;
impl Handle_2328 {
    pub fn func_2329() {
        match 2 {
            0 => {
                let v_2330 = 63 + 80;
                match 1 {
                    0 => {
                        let w_2331 = 6;
                        let w_2332 = 4;
                    }
                    _ => {}
                }
                func_2066();
            }
            _ => {}
        }
        let v_2333 = 530;
        let v_2334 = func_2095();
        #[cfg(not(feature = "feat16"))]
        let v_2335 = func_383();
    }
}
#[cfg(feature = "feat21")]
pub fn func_2336() {
    println!("msg_2337 {}", 1);
    pub fn func_2338() {
        let v_2339 = 1 + 97;
        let v_2340 = 656;
        println!("msg_2341 {}", 1);
    }
    let v_2342 = func_670();
    match 0 {
        0 => {
            if 2 > 10 {
                pub fn func_2343() {
                    let v_2344 = func_1419();
                    let v_2345 = 47 + 57;
                }
                let v_2346 = func_2323();
                match 1 {
                    0 => {
                        let w_2347 = 6;
                    }
                    _ => {}
                }
                println!("msg_2348 {}", 1);
            } else {
                let v_2349 = 47 + 60;
                #[cfg(any(feature = "feat22", feature = "feat22", feature = "feat23"))]
                let v_2350 = 9;
                match 2 {
                    0 => {
                        let w_2351 = 8;
                    }
                    _ => {}
                }
                #[cfg(not(feature = "feat24"))]
                let v_2352 = func_1506();
            }
            #[cfg(feature = "feat22")]
            let _ = 78 + 9;
            let v_2353 = func_683();
            let v_2354 = func_2080();
        }
        _ => {}
    }
}
pub fn func_2355() {
    let _ = 91 + 77;
    println!("msg_2356 {}", 1);
    println!("msg_2357 {}", 1);
}
#[cfg(feature = "feat9")]
pub type Alias_2358 = u64;
pub fn func_1234() {
    if 8 > 10 {
        match 0 {
            0 => {
                let v_2359 = func_2262();
            }
            _ => {}
        }
        if 15 > 10 {
            let v_2360 = 18 + 21;
        } else {
            let v_2361 = func_2138();
            let v_2362 = 91 + 13;
            let v_2363 = func_1170();
        }
        match 3 {
            0 => {
                let v_2364 = 69 + 33;
            }
            _ => {}
        }
        let v_2365 = func_1633();
    } else {
        func_1421();
        ext_1();
        match 0 {
            0 => {
                let v_2366 = func_764();
                let v_2367 = ext_3();
                pub fn func_1181() {
                    let w_2368 = 5;
                    let w_2369 = 4;
                    let w_2370 = 5;
                    #[cfg(feature = "feat8")]
                    ext_0();
                }
            }
            _ => {}
        }
    }
}
pub struct Record_2371 {
    pub field_2372: u32,
    pub field_2373: u32,
}
pub const LIMIT_2374: u32 = func_1510();
pub mod inner_2375 {
    use super::*;
    pub fn func_1543() {
        #[cfg(not(feature = "feat24"))]
        let _ = 52 + 17;
        match 0 {
            0 => {
                println!("msg_2376 {}", 1);
                #[cfg(feature = "feat8")]
                let v_2377 = func_1520();
            }
            _ => {}
        }
        if 0 > 10 {
            println!("msg_2378 {}", 1);
        } else {
            let _ = 772;
        }
        let v_2379 = 44 + 70;
    }
}
pub fn func_2380() {
    #[cfg(feature = "feat8")]
    let v_2381 = 11 + 87;
    pub fn func_2382() {
        #[cfg(feature = "feat4")]
        func_80();
        if 7 > 10 {
            let _ = 766;
            if 10 > 10 {
                let _ = 887;
                let v_2383 = func_302();
                println!("msg_2384 {}", 1);
                let w_2385 = 8;
            } else {
                println!("msg_2386 {}", 1);
                let v_2387 = ext_1();
            }
            let v_2388 = 745;
            match 0 {
                0 => {
                    #[cfg(feature = "feat6")]
                    let _ = 708;
                    func_2050();
                    let _ = 9 + 78;
                }
                _ => {}
            }
        } else {
            let _ = 53;
            match 2 {
                0 => {
                    println!("msg_2389 {}", 1);
                    let v_2390 = func_894();
                    let v_2391 = 46 + 82;
                    let v_2392 = 97 + 29;
                }
                _ => {}
            }
            if 4 > 10 {
                func_237();
                let v_2393 = func_1603();
                println!("msg_2394 {}", 1);
            } else {
                println!("msg_2395 {}", 1);
                let v_2396 = 2 + 42;
                #[cfg(any(feature = "feat23", feature = "feat12", feature = "feat18"))]
                let v_2397 = ext_3();
            }
        }
        pub fn func_2398() {
            func_1100();
            if 0 > 10 {
                let v_2399 = 71 + 85;
            } else {
                #[cfg(all(feature = "feat12", not(feature = "feat1")))]
                let v_2400 = func_196();
                let v_2401 = ext_2();
                let w_2402 = 1;
                let v_2403 = ext_2();
            }
            if 3 > 10 {
                #[cfg(feature = "feat18")]
                func_2073();
                #[cfg(any(feature = "feat3", feature = "feat2", feature = "feat9"))]
                let v_2404 = ext_1();
            } else {
                let _ = 70 + 30;
                let v_2405 = func_1();
                let w_2406 = 1;
            }
        }
    }
    let v_2407 = 62 + 28;
    if 18 > 10 {
        let v_2408 = 31 + 69;
        let v_2409 = func_2001();
        let v_2410 = 860;
    } else {
        let v_2411 = ext_2();
        if 18 > 10 {
            if 0 > 10 {
                let w_2412 = 1;
            } else {
                let v_2413 = 37 + 11;
                println!("msg_2414 {}", 1);
            }
            println!("msg_2415 {}", 1);
            #[cfg(not(feature = "feat1"))]
            func_1811();
        } else {
            println!("msg_2416 {}", 1);
            match 4 {
                0 => {
                    let v_2417 = func_816();
                    #[cfg(feature = "feat3")]
                    let v_2418 = func_581();
                    let v_2419 = 644;
                }
                _ => {}
            }
        }
        ext_1();
        if 16 > 10 {
            if 1 > 10 {
                let v_2420 = 130;
                func_831();
                func_912();
                #[cfg(feature = "feat13")]
                let v_2421 = func_1106();
            } else {
                func_2002();
                let v_2422 = func_1618();
                func_454();
            }
            let _ = 19 + 51;
        } else {
            pub fn func_2423() {
                let v_2424 = 56 + 23;
            }
        }
    }
}
pub fn func_2425() {
    match 3 {
        0 => {
            ext_0();
            #[cfg(feature = "feat21")]
            func_400();
            println!("msg_2426 {}", 1);
        }
        _ => {}
    }
    if 8 > 10 {
        match 0 {
            0 => {
                #[cfg(feature = "feat2")]
                let v_2427 = 58 + 22;
                #[cfg(feature = "feat3")]
                let v_2428 = 118;
                println!("msg_2429 {}", 1);
            }
            _ => {}
        }
        let _ = 42 + 38;
        func_1510();
        func_2329();
    } else {
        let v_2430 = 159;
        if 9 > 10 {
            let v_2431 = 137;
            let v_2432 = 249;
        } else {
            let v_2433 = 26 + 35;
        }
        #[cfg(all(feature = "feat18", not(feature = "feat24")))]
        let v_2434 = func_848();
        let v_2435 = 999;
    }
}
pub struct Handle_2436;
impl Handle_2436 {
    pub fn func_2437() {
        println!("msg_2438 {}", 1);
        let _ = 18 + 23;
        let v_2439 = func_1400();
        let v_2440 = 678;
    }
}
pub mod inner_2441 {
    use super::*;
    #[cfg(feature = "feat2")]
    pub enum Kind_2442 {
        #[cfg(feature = "feat17")]
        Variant_2443,
        Variant_2444,
    }
    pub fn func_2445() {
        let v_2446 = 88 + 31;
        let v_2447 = func_210();
    }
    pub static COUNTER_2448: u32 = 0;
}
pub type Alias_2449 = u64;
pub mod inner_2450 {
    use super::*;
    pub fn func_196() {
        func_1648();
        let v_2451 = 464;
        match 2 {
            0 => {
                let v_2452 = 15 + 63;
                let v_2453 = func_1487();
                if 1 > 10 {
                    func_1108();
                    func_609();
                    let v_2454 = 563;
                    #[cfg(all(feature = "feat8", not(feature = "feat5")))]
                    let _ = 600;
                } else {
                    ext_0();
                    #[cfg(feature = "feat19")]
                    let v_2455 = 53 + 17;
                    println!("msg_2456 {}", 1);
                    let v_2457 = func_2320();
                }
                println!("msg_2458 {}", 1);
            }
            _ => {}
        }
        let v_2459 = func_722();
    }
    pub struct Record_2460 {
        pub field_2461: u32,
        pub field_2462: u32,
        pub field_2463: u32,
        pub field_2464: u32,
    }
    pub fn func_2060() {
        let v_2465 = 700;
        pub fn func_2466() {
            let _ = 264;
            let _ = 47 + 0;
        }
    }
}
pub struct Handle_2467;
#[cfg(feature = "feat2")]
impl Handle_2467 {
    pub fn func_2468() {
        func_2319();
    }
    #[cfg(feature = "feat3")]
    pub fn func_2469() {
        match 3 {
            0 => {
                let v_2470 = 24 + 26;
                let v_2471 = func_106();
            }
            _ => {}
        }
        #[cfg(feature = "feat4")]
        let v_2472 = func_1506();
        func_887();
    }
}
