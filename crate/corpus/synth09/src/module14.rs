pub struct Handle_2456;
impl Handle_2456 {
    pub fn func_2457() {
        #[cfg(not(feature = "feat12"))]
        let v_2458 = 78 + 56;
        pub fn func_2459() {
            let v_2460 = func_1261();
            let v_2461 = 7 + 32;
            let _ = 964;
        }
        let v_2462 = func_599();
        match 0 {
            0 => {
                let v_2463 = ext_1();
                let _ = 653;
                let v_2464 = func_1128();
                println!("msg_2465 {}", 1);
            }
            _ => {}
        }
    }
    pub fn func_2466() {
        if 9 > 10 {
            let v_2467 = 785;
        } else {
            pub fn func_2468() {
                println!("msg_2469 {}", 1);
                let w_2470 = 5;
            }
            func_1263();
            ext_3();
        }
        println!("msg_2471 {}", 1);
    }
}
pub struct Record_2472 {
    pub field_2473: u32,
    pub field_2474: u32,
}
pub enum Kind_2475 {
    Variant_2476,
    Variant_2477,
    Variant_2478,
    Variant_2479,
}
pub fn func_2480() {
    match 2 {
        0 => {
            let v_2481 = ext_0();
            let v_2482 = func_122();
        }
        _ => {}
    }
}
pub enum Kind_2483 {
    Variant_2484,
}
pub enum Kind_2485 {
    Variant_2486,
}
pub fn func_2487() {
    let v_2488 = 62 + 60;
    let _ = 36 + 64;
    let v_2489 = 846;
    let v_2490 = ext_0();
}
pub fn func_2491() {
    match 1 {
        0 => {
            let v_2492 = ext_2();
        }
        _ => {}
    }
    func_1286();
}
pub fn func_2493() {
    if 1 > 10 {
        let v_2494 = func_987();
    } else {
        pub fn func_2495() {
            let _ = 371;
            let v_2496 = 993;
            func_618();
            let v_2497 = 769;
        }
        let v_2498 = func_1150();
        let v_2499 = 298;
    }
}
pub enum Kind_2500 {
    Variant_2501,
    Variant_2502,
}
pub enum Kind_2503 {
    Variant_2504,
}
pub const LIMIT_2505: u32 = 499;
pub const LIMIT_2506: u32 = func_1202();
pub fn func_2507() {
    if 6 > 10 {
        println!("msg_2508 {}", 1);
        println!("msg_2509 {}", 1);
        println!("msg_2510 {}", 1);
    } else {
        let v_2511 = func_1361();
        let v_2512 = func_1287();
    }
    let v_2513 = 35 + 40;
    if 11 > 10 {
        pub fn func_2514() {
            let v_2515 = func_2194();
        }
        match 4 {
            0 => {
                let v_2516 = ext_0();
                let v_2517 = func_236();
            }
            _ => {}
        }
        pub fn func_2518() {
            func_962();
            #[cfg(not(feature = "feat7"))]
            func_1504();
            pub fn func_2519() {
                ext_0();
                println!("msg_2520 {}", 1);
                let v_2521 = ext_2();
                println!("msg_2522 {}", 1);
            }
            func_1759();
        }
    } else {
        let v_2523 = ext_3();
        let v_2524 = ext_3();
    }
}
pub fn func_2525() {
    let v_2526 = func_116();
}
pub fn func_2527() {
    func_782();
}
#[cfg(not(feature = "feat15"))]
pub fn func_2528() {
    match 1 {
        0 => {
            func_2493();
            let v_2529 = func_1882();
            let v_2530 = func_236();
        }
        _ => {}
    }
    if 4 > 10 {
        func_1851();
        let v_2531 = func_926();
        let v_2532 = ext_0();
    } else {
        let v_2533 = func_102();
        func_530();
        pub fn func_2115() {
            let _ = 93 + 94;
        }
        #[cfg(not(feature = "feat26"))]
        ext_0();
    }
}
pub fn func_2534() {
    pub fn func_2535() {
        #[cfg(not(feature = "feat21"))]
        let v_2536 = 317;
        match 1 {
            0 => {
                let v_2537 = ext_3();
                if 4 > 10 {
                    let w_2538 = 4;
                    let _ = 70 + 70;
                    let v_2539 = func_1512();
                    let _ = 37 + 12;
                } else {
                    let w_2540 = 3;
                    func_926();
                    let v_2541 = ext_3();
                }
                let v_2542 = ext_1();
                println!("msg_2543 {}", 1);
            }
            _ => {}
        }
        if 18 > 10 {
            let v_2544 = 36 + 49;
            ext_0();
            let v_2545 = 786;
            let v_2546 = ext_1();
        } else {
            let v_2547 = 27 + 83;
            let v_2548 = ext_0();
            let v_2549 = ext_3();
            println!("msg_2550 {}", 1);
        }
        pub fn func_2551() {
            let v_2552 = 65 + 14;
            pub fn func_631() {
                let v_2553 = func_2425();
                let v_2554 = func_239();
                let _ = 927;
            }
        }
    }
}
use std::collections::HashMap;
pub fn func_2555() {
    pub fn func_2556() {
        match 2 {
            0 => {
                match 0 {
                    0 => {
                        func_143();
                        ext_1();
                    }
                    _ => {}
                }
                let v_2557 = ext_3();
                let v_2558 = func_2399();
            }
            _ => {}
        }
        let v_2559 = 2 + 91;
        if 3 > 10 {
            println!("msg_2560 {}", 1);
            let v_2561 = func_477();
            let v_2562 = 870;
            let v_2563 = func_2459();
        } else {
            let v_2564 = func_1134();
            println!("msg_2565 {}", 1);
            let v_2566 = func_2422();
            let v_2567 = func_1547();
        }
    }
}
pub fn func_2568() {
    ext_2();
}
pub fn func_2569() {
    let v_2570 = func_1348();
    let _ = 223;
    func_298();
    let v_2571 = 88 + 54;
}
pub type Alias_2572 = u64;
pub fn func_2573() {
    let v_2574 = 97 + 13;
    let v_2575 = func_2368();
    if 17 > 10 {
        let v_2576 = func_2514();
        let v_2577 = ext_0();
    } else {
        println!("msg_2578 {}", 1);
        let v_2579 = func_1789();
        let v_2580 = func_2568();
        pub fn func_2581() {
            println!("msg_2582 {}", 1);
            pub fn func_2583() {
                let v_2584 = ext_2();
                let v_2585 = 715;
                let v_2586 = ext_2();
            }
        }
    }
}
#[cfg(not(feature = "feat21"))]
pub fn func_2587() {
    pub fn func_2588() {
        match 2 {
            0 => {
                let v_2589 = 21 + 73;
                ext_0();
            }
            _ => {}
        }
        func_826();
    }
    func_2062();
    let v_2590 = func_681();
}
pub fn func_2591() {
    let v_2592 = 260;
}
pub fn func_1554() {
    let v_2593 = func_2333();
    let v_2594 = ext_2();
    let _ = 54 + 54;
    let v_2595 = 536;
}
pub fn func_2596() {
    let _ = 83 + 33;
    let v_2597 = 66;
}
use std::collections::HashMap;
#[cfg(not(feature = "feat18"))]
pub struct Record_2598 {
    pub field_2599: u32,
}
pub fn func_2600() {
    println!("msg_2601 {}", 1);
}
pub type Alias_2602 = u64;
use std::collections::HashMap;
pub enum Kind_2603 {
    Variant_2604,
}
pub struct Record_2605 {
    pub field_2606: u32,
    #[cfg(not(feature = "feat7"))]
    pub field_2607: u32,
}
pub const LIMIT_2608: u32 = 40 + 73;
pub fn func_2609() {
    let v_2610 = 759;
    let v_2611 = ext_3();
}
pub fn func_2612() {
    let v_2613 = ext_2();
    func_1833();
}
pub static COUNTER_2614: u32 = 0;
pub fn func_2615() {
    if 13 > 10 {
        match 0 {
            0 => {
                let v_2616 = 447;
                if 19 > 10 {
                    let v_2617 = func_961();
                    let v_2618 = ext_0();
                    let w_2619 = 6;
                } else {
                    let v_2620 = 55 + 78;
                    let v_2621 = 37 + 52;
                }
                if 1 > 10 {
                    let w_2622 = 1;
                    let w_2623 = 8;
                    let v_2624 = 73 + 69;
                } else {
                    let w_2625 = 0;
                    func_346();
                    let w_2626 = 1;
                    let v_2627 = 39 + 46;
                }
                let v_2628 = 5 + 59;
            }
            _ => {}
        }
        let v_2629 = func_2062();
        println!("msg_2630 {}", 1);
        let v_2631 = ext_1();
    } else {
        match 2 {
            0 => {
                if 6 > 10 {
                    let w_2632 = 6;
                } else {
                    println!("msg_2633 {}", 1);
                    let w_2634 = 4;
                    #[cfg(not(feature = "feat12"))]
                    let _ = 97 + 34;
                    let w_2635 = 0;
                }
            }
            _ => {}
        }
    }
    let v_2636 = ext_2();
    let v_2637 = 837;
}
pub fn func_2638() {
    #[cfg(not(feature = "feat17"))]
    let _ = 541;
}
pub mod inner_2639 {
    use super::*;
    pub fn func_2640() {
        let _ = 558;
        if 10 > 10 {
            let v_2641 = func_2528();
            pub fn func_2642() {
                let w_2643 = 4;
                let w_2644 = 7;
                println!("msg_2645 {}", 1);
                let v_2646 = func_2072();
            }
            let _ = 76 + 61;
        } else {
            let v_2647 = 722;
            println!("msg_2648 {}", 1);
            println!("msg_2649 {}", 1);
        }
        let v_2650 = ext_2();
        let v_2651 = 226;
    }
    use std::collections::HashMap;
    pub fn func_2652() {
        let v_2653 = func_1148();
        let v_2654 = 67 + 78;
        match 2 {
            0 => {
                let _ = 824;
                let v_2655 = 15 + 0;
                let v_2656 = 136;
            }
            _ => {}
        }
        if 12 > 10 {
            let v_2657 = ext_1();
            let v_2658 = 32 + 48;
            match 0 {
                0 => {
                    let w_2659 = 5;
                }
                _ => {}
            }
        } else {
            #[cfg(not(feature = "feat12"))]
            let v_2660 = 46 + 47;
            println!("msg_2661 {}", 1);
        }
    }
}
