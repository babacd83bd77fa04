pub fn func_2396() {
    if 2 > 10 {
        if 9 > 10 {
            let v_2397 = func_775();
            let v_2398 = 269;
            func_1515();
        } else {
            if 4 > 10 {
                let w_2399 = 1;
                func_2150();
                let _ = 79 + 37;
                println!("msg_2400 {}", 1);
            } else {
                let v_2401 = 233;
                let v_2402 = func_704();
                #[cfg(not(feature = "feat13"))]
                let _ = 394;
                #[cfg(not(feature = "feat9"))]
                let v_2403 = func_1331();
            }
            if 9 > 10 {
                #[cfg(feature = "feat8")]
                let _ = 48 + 37;
            } else {
                println!("msg_2404 {}", 1);
            }
            ext_0();
        }
        match 4 {
            0 => {
                let v_2405 = ext_1();
                println!("msg_2406 {}", 1);
                match 2 {
                    0 => {
                        let v_2407 = func_1922();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_2408 = 71 + 30;
        func_697();
    } else {
        let v_2409 = func_1994();
        let v_2410 = 297;
    }
    let v_2411 = 39 + 46;
    func_1395();
}
pub struct Handle_2412;
impl Handle_2412 {
    pub fn func_2413() {
        if 2 > 10 {
            match 3 {
                0 => {
                    let w_2414 = 5;
                    let w_2415 = 8;
                    println!("msg_2416 {}", 1);
                }
                _ => {}
            }
            pub fn func_2417() {
                let v_2418 = ext_3();
                func_1464();
            }
            #[cfg(feature = "feat0")]
            pub fn func_2419() {
                let v_2420 = 606;
                println!("msg_2421 {}", 1);
                #[cfg(feature = "feat15")]
                let v_2422 = 94 + 81;
            }
            let v_2423 = func_2208();
        } else {
            let v_2424 = 41 + 13;
        }
        let v_2425 = 51 + 39;
        #[cfg(feature = "feat2")]
        ext_0();
        if 4 > 10 {
            ext_0();
            let _ = 67 + 28;
        } else {
            println!("msg_2426 {}", 1);
            let _ = 398;
            let _ = 862;
            println!("msg_2427 {}", 1);
        }
    }
    pub fn func_2428() {
        #[cfg(feature = "feat4")]
        func_545();
        let v_2429 = func_1318();
        if 1 > 10 {
            #[cfg(any(feature = "feat6", feature = "feat19"))]
            ext_3();
            #[cfg(feature = "feat21")]
            let v_2430 = func_1926();
            func_1973();
        } else {
            if 1 > 10 {
                let w_2431 = 6;
                let w_2432 = 3;
                let v_2433 = func_223();
            } else {
                let v_2434 = func_1774();
                let _ = 512;
                let v_2435 = 358;
            }
            pub fn func_2436() {
                let w_2437 = 8;
                func_346();
                println!("msg_2438 {}", 1);
                func_61();
            }
            pub fn func_2439() {
                println!("msg_2440 {}", 1);
                let v_2441 = ext_3();
                let w_2442 = 7;
            }
        }
        let v_2443 = 94 + 82;
    }
}
pub mod inner_2444 {
    use super::*;
    pub struct Record_2445 {
        #[cfg(not(feature = "feat7"))]
        pub field_2446: u32,
        pub field_2447: u32,
        pub field_2448: u32,
    }
}
pub mod inner_2449 {
    use super::*;
    pub struct Record_2450 {
        pub field_2451: u32,
        pub field_2452: u32,
    }
}
pub fn func_2453() {
    pub fn func_544() {
        let v_2454 = 438;
    }
    let v_2455 = 88 + 74;
    let v_2456 = func_457();
    println!("msg_2457 {}", 1);
}
#[cfg(feature = "feat11")]
pub fn func_2458() {
    func_1147();
    #[cfg(all(feature = "feat19", not(feature = "feat13")))]
    let v_2459 = func_848();
}
pub fn func_2460() {
    match 3 {
        0 => {
            #[cfg(any(feature = "feat12", feature = "feat11", feature = "feat12"))]
            ext_3();
            let v_2461 = ext_0();
            let v_2462 = 749;
        }
        _ => {}
    }
}
pub type Alias_2463 = u64;
pub fn func_2464() {
    println!("msg_2465 {}", 1);
    if 8 > 10 {
        let v_2466 = func_2317();
        let v_2467 = 87 + 88;
    } else {
        let v_2468 = func_275();
        #[cfg(feature = "feat14")]
        let v_2469 = 60 + 70;
    }
    pub fn func_2470() {
        pub fn func_2471() {
            let v_2472 = 523;
        }
        let v_2473 = func_667();
        let v_2474 = func_615();
        let v_2475 = ext_3();
    }
}
#[cfg(feature = "feat2")]
pub fn func_2476() {
    func_1835();
    if 4 > 10 {
        let _ = 645;
    } else {
        let v_2477 = ext_0();
        let v_2478 = ext_1();
        let v_2479 = func_1301();
    }
    let v_2480 = ext_0();
    if 15 > 10 {
        if 17 > 10 {
            match 1 {
                0 => {
                    let v_2481 = 23 + 58;
                    let v_2482 = ext_2();
                    let w_2483 = 6;
                    println!("msg_2484 {}", 1);
                }
                _ => {}
            }
            #[cfg(not(feature = "feat22"))]
            pub fn func_2485() {
                let v_2486 = 422;
            }
        } else {
            pub fn func_1301() {
                let w_2487 = 6;
            }
            let v_2488 = func_1334();
            pub fn func_2489() {
                let w_2490 = 0;
                let w_2491 = 1;
                let v_2492 = ext_0();
            }
        }
        if 5 > 10 {
            let v_2493 = func_1153();
        } else {
            func_938();
            let v_2494 = func_1774();
            let v_2495 = func_563();
        }
        let v_2496 = ext_2();
        let v_2497 = ext_2();
    } else {
        let v_2498 = func_151();
        let v_2499 = 620;
        func_1408();
        let _ = 755;
    }
}
#[cfg(feature = "feat6")]
pub mod inner_2500 {
    use super::*;
    #[cfg(all(feature = "feat19", not(feature = "feat3")))]
    pub enum Kind_2501 {
        Variant_2502,
    }
}
pub struct Handle_2503;
impl Handle_2503 {
    pub fn func_2504() {
        let v_2505 = func_615();
        let v_2506 = func_1749();
        if 9 > 10 {
            pub fn func_2507() {
                let w_2508 = 5;
                let v_2509 = func_2259();
            }
            let v_2510 = 71 + 97;
            let v_2511 = ext_2();
        } else {
            println!("msg_2512 {}", 1);
        }
    }
    pub fn func_2513() {
        let v_2514 = func_667();
        pub fn func_2515() {
            func_2348();
        }
        if 2 > 10 {
            let v_2516 = func_373();
            let _ = 67 + 15;
            #[cfg(any(feature = "feat6", feature = "feat15", feature = "feat6"))]
            pub fn func_2517() {
                let v_2518 = func_1408();
                let w_2519 = 6;
                let v_2520 = func_1243();
            }
        } else {
            #[cfg(not(feature = "feat17"))]
            let v_2521 = func_872();
            pub fn func_2522() {
                let v_2523 = ext_3();
                let _ = 318;
            }
            let v_2524 = func_406();
        }
        let v_2525 = 12 + 98;
    }
}
#[cfg(feature = "feat16")]
use std::collections::HashMap;
#[cfg(feature = "feat6")]
pub const LIMIT_2526: u32 = func_1470();
pub const LIMIT_2527: u32 = 40 + 34;
pub mod inner_2528 {
    use super::*;
    pub struct Handle_2529;
    impl Handle_2529 {
        pub fn func_2530() {
            #[cfg(feature = "feat4")]
            let v_2531 = func_2284();
            ext_3();
            if 16 > 10 {
                let v_2532 = ext_2();
                let v_2533 = 78 + 33;
            } else {
                let w_2534 = 4;
                let w_2535 = 8;
            }
        }
        pub fn func_2536() {
            match 0 {
                0 => {
                    #[cfg(any(feature = "feat21", feature = "feat4"))]
                    let v_2537 = func_2050();
                }
                _ => {}
            }
            ext_3();
            println!("msg_2538 {}", 1);
        }
    }
}
pub fn func_2539() {
    let v_2540 = 66 + 74;
    pub fn func_2541() {
        #[cfg(any(feature = "feat12", feature = "feat15", feature = "feat23"))]
        let v_2542 = 924;
        let _ = 813;
    }
    func_2375();
    if 14 > 10 {
        if 3 > 10 {
            if 3 > 10 {
                let w_2543 = 3;
                let v_2544 = func_1307();
            } else {
                let v_2545 = 68 + 37;
                let w_2546 = 5;
                println!("msg_2547 {}", 1);
                let v_2548 = 35 + 88;
            }
        } else {
            println!("msg_2549 {}", 1);
        }
        println!("msg_2550 {}", 1);
        println!("msg_2551 {}", 1);
        let v_2552 = func_1293();
    } else {
        let v_2553 = func_422();
    }
}
#[cfg(feature = "feat12")]
pub fn func_2554() {
    #[cfg(feature = "feat23")]
    let v_2555 = func_440();
    let v_2556 = 270;
}
pub fn func_2557() {
    pub fn func_2558() {
        match 2 {
            0 => {
                let v_2559 = func_1054();
                #[cfg(all(feature = "feat8", not(feature = "feat1")))]
                let v_2560 = ext_1();
                let _ = 869;
            }
            _ => {}
        }
        let _ = 10 + 37;
        #[cfg(feature = "feat12")]
        let v_2561 = 53 + 83;
    }
}
use std::collections::HashMap;
pub fn func_2562() {
    if 0 > 10 {
        let v_2563 = ext_3();
        let _ = 179;
        func_361();
        #[cfg(feature = "feat4")]
        func_1609();
    } else {
        let v_2564 = ext_3();
        match 4 {
            0 => {
                let v_2565 = func_643();
            }
            _ => {}
        }
    }
    println!("msg_2566 {}", 1);
    #[cfg(not(feature = "feat1"))]
    let v_2567 = func_1773();
    let _ = 37 + 21;
}
