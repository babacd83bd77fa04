#[cfg(feature = "feat18")]
pub static COUNTER_2473: u32 = 0;
#[cfg(not(feature = "feat24"))]
pub enum Kind_2474 {
    Variant_2475,
    Variant_2476,
}
pub fn func_2477() {
    pub fn func_2478() {
        let v_2479 = 22 + 24;
    }
    if 0 > 10 {
        #[cfg(feature = "feat9")]
        ext_2();
        println!("msg_2480 {}", 1);
    } else {
        #[cfg(feature = "feat17")]
        func_236();
        #[cfg(feature = "feat2")]
        pub fn func_2481() {
            pub fn func_189() {
                ext_2();
                let w_2482 = 3;
                let v_2483 = 36 + 61;
                let v_2484 = 776;
            }
        }
    }
}
pub fn func_2485() {
    if 9 > 10 {
        let _ = 775;
    } else {
        let v_2486 = 728;
        let v_2487 = 372;
    }
    let v_2488 = 954;
    let v_2489 = func_1809();
    println!("msg_2490 {}", 1);
}
use std::collections::HashMap;
pub fn func_2491() {
    if 16 > 10 {
        match 4 {
            0 => {
                func_876();
                #[cfg(feature = "feat23")]
                func_852();
                println!("msg_2492 {}", 1);
            }
            _ => {}
        }
    } else {
        println!("msg_2493 {}", 1);
    }
    #[cfg(not(feature = "feat15"))]
    ext_0();
    let _ = 55 + 44;
    let v_2494 = func_1412();
}
pub fn func_2495() {
    #[cfg(feature = "feat21")]
    let v_2496 = func_1393();
    match 2 {
        0 => {
            let _ = 60;
            match 4 {
                0 => {
                    let v_2497 = func_344();
                    match 4 {
                        0 => {
                            println!("msg_2498 {}", 1);
                            let v_2499 = ext_3();
                            let v_2500 = func_490();
                            #[cfg(feature = "feat8")]
                            let v_2501 = func_196();
                        }
                        _ => {}
                    }
                    let v_2502 = 464;
                    match 4 {
                        0 => {
                            let w_2503 = 7;
                            let v_2504 = ext_3();
                            let w_2505 = 3;
                            func_307();
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            match 1 {
                0 => {
                    #[cfg(not(feature = "feat24"))]
                    let v_2506 = func_293();
                    func_1096();
                    let v_2507 = func_118();
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub fn func_2508() {
    if 12 > 10 {
        func_210();
        if 3 > 10 {
            let v_2509 = func_1256();
            println!("msg_2510 {}", 1);
        } else {
            println!("msg_2511 {}", 1);
            func_2228();
            #[cfg(not(feature = "feat15"))]
            let v_2512 = func_1234();
        }
    } else {
        let v_2513 = func_2126();
    }
    let _ = 942;
    let v_2514 = func_1264();
}
pub struct Record_2515 {
    pub field_2516: u32,
    pub field_2517: u32,
    pub field_2518: u32,
}
#[cfg(feature = "feat23")]
pub fn func_2519() {
    pub fn func_2520() {
        func_1440();
        pub fn func_2521() {
            let _ = 615;
            func_222();
        }
        let _ = 496;
        pub fn func_2522() {
            ext_3();
        }
    }
    #[cfg(not(feature = "feat11"))]
    let v_2523 = func_2445();
    func_2222();
}
use std::collections::HashMap;
pub enum Kind_2524 {
    Variant_2525,
}
pub enum Kind_2526 {
    Variant_2527,
    Variant_2528,
}
pub fn func_2529() {
    func_2466();
    func_2120();
    func_490();
    let v_2530 = 72 + 36;
}
pub struct Record_2531 {
    pub field_2532: u32,
    #[cfg(all(feature = "feat21", not(feature = "feat11")))]
    pub field_2533: u32,
    pub field_2534: u32,
    #[cfg(feature = "feat2")]
    pub field_2535: u32,
}
pub enum Kind_2536 {
    Variant_2537,
    Variant_2538,
    Variant_2539,
    Variant_2540,
}
pub type Alias_2541 = u64;
pub type Alias_2542 = u64;
#[cfg(all(feature = "feat9", not(feature = "feat11")))]
pub fn func_2543() {
    let _ = 565;
}
pub fn func_2544() {
    println!("msg_2545 {}", 1);
    let v_2546 = func_1199();
    func_1007();
    #[cfg(any(feature = "feat6", feature = "feat13", feature = "feat6"))]
    func_1524();
}
#[cfg(feature = "feat4")]
pub enum Kind_2547 {
    Variant_2548,
    Variant_2549,
    Variant_2550,
}
pub const LIMIT_2551: u32 = 888;
pub type Alias_2552 = u64;
pub const LIMIT_2553: u32 = ext_0();
pub fn func_2138() {
    pub fn func_2554() {
        let _ = 875;
        func_514();
        let v_2555 = 92 + 54;
        pub fn func_2556() {
            let _ = 222;
            pub fn func_2557() {
                let w_2558 = 6;
                func_2159();
                #[cfg(any(feature = "feat2", feature = "feat3", feature = "feat22"))]
                let v_2559 = ext_3();
            }
            pub fn func_2560() {
                let _ = 73 + 32;
                let v_2561 = 459;
                let w_2562 = 4;
            }
            #[cfg(feature = "feat17")]
            let v_2563 = func_602();
        }
    }
    #[cfg(feature = "feat21")]
    let v_2564 = func_2469();
    let _ = 280;
    if 18 > 10 {
        let v_2565 = 778;
        func_866();
        let v_2566 = ext_2();
    } else {
        let v_2567 = 62 + 98;
        let _ = 74 + 63;
    }
}
#[cfg(all(feature = "feat10", not(feature = "feat14")))]
pub fn func_2568() {
    let v_2569 = func_1785();
    func_796();
    func_1910();
}
pub fn func_2570() {
    match 1 {
        0 => {
            func_1879();
            let v_2571 = 30 + 33;
        }
        _ => {}
    }
}
pub const LIMIT_2572: u32 = ext_1();
pub static COUNTER_2573: u32 = 0;
pub struct Handle_2574;
impl Handle_2574 {
    pub fn func_1748() {
        #[cfg(all(feature = "feat12", not(feature = "feat14")))]
        ext_0();
        if 1 > 10 {
            let v_2575 = 50 + 74;
            func_1638();
        } else {
            println!("msg_2576 {}", 1);
            if 14 > 10 {
                println!("msg_2577 {}", 1);
                let v_2578 = ext_1();
            } else {
                let v_2579 = func_909();
                let v_2580 = 625;
                #[cfg(feature = "feat2")]
                func_1348();
                #[cfg(all(feature = "feat21", not(feature = "feat24")))]
                let v_2581 = 628;
            }
        }
        match 0 {
            0 => {
                #[cfg(feature = "feat13")]
                let v_2582 = func_1650();
            }
            _ => {}
        }
        let _ = 688;
    }
}
#[cfg(feature = "feat22")]
pub const LIMIT_2583: u32 = func_490();
pub struct Handle_2584;
#[cfg(feature = "feat8")]
impl Handle_2584 {
    pub fn func_2585() {
        if 11 > 10 {
            pub fn func_2586() {
                #[cfg(feature = "feat17")]
                let _ = 189;
            }
            let v_2587 = func_2219();
            let v_2588 = func_2102();
        } else {
            let _ = 55 + 69;
            let v_2589 = 18 + 22;
            match 0 {
                0 => {
                    let w_2590 = 4;
                    let v_2591 = 523;
                    let w_2592 = 2;
                    let v_2593 = 7 + 11;
                }
                _ => {}
            }
            let v_2594 = ext_3();
        }
        let _ = 97 + 6;
    }
    #[cfg(feature = "feat17")]
    pub fn func_1434() {
        #[cfg(not(feature = "feat24"))]
        let v_2595 = 11 + 75;
        if 2 > 10 {
            if 7 > 10 {
                let w_2596 = 8;
            } else {
                let w_2597 = 3;
                let v_2598 = func_1669();
            }
            let v_2599 = func_189();
            func_1920();
        } else {
            ext_2();
            let v_2600 = ext_1();
            println!("msg_2601 {}", 1);
        }
        let v_2602 = ext_3();
        match 1 {
            0 => {
                println!("msg_2603 {}", 1);
                let v_2604 = func_1530();
                let v_2605 = 311;
            }
            _ => {}
        }
    }
}
use std::collections::HashMap;
pub fn func_2606() {
    let v_2607 = ext_3();
}
#[cfg(feature = "feat22")]
pub fn func_2608() {
    let v_2609 = func_2468();
    println!("msg_2610 {}", 1);
    let v_2611 = ext_0();
}
pub enum Kind_2612 {
    Variant_2613,
    Variant_2614,
    Variant_2615,
    Variant_2616,
}
pub struct Record_2617 {
    pub field_2618: u32,
}
#[cfg(feature = "feat6")]
pub mod inner_2619 {
    use super::*;
    #[cfg(feature = "feat10")]
    pub enum Kind_2620 {
        Variant_2621,
        #[cfg(any(feature = "feat13", feature = "feat19", feature = "feat17"))]
        Variant_2622,
        Variant_2623,
        Variant_2624,
    }
}
pub fn func_2625() {
    let _ = 836;
    if 2 > 10 {
        let v_2626 = ext_3();
        pub fn func_2627() {
            #[cfg(feature = "feat0")]
            let _ = 751;
        }
        pub fn func_1195() {
            pub fn func_2628() {
                let w_2629 = 7;
                let w_2630 = 3;
                let v_2631 = func_2103();
            }
            #[cfg(feature = "feat6")]
            let _ = 100;
        }
    } else {
        pub fn func_2632() {
            match 0 {
                0 => {
                    let _ = 569;
                }
                _ => {}
            }
            let v_2633 = ext_0();
        }
    }
    if 2 > 10 {
        let v_2634 = 137;
        let v_2635 = func_1599();
        #[cfg(feature = "feat13")]
        let v_2636 = func_323();
        let v_2637 = 955;
    } else {
        let v_2638 = 481;
        #[cfg(feature = "feat4")]
        func_1007();
        let _ = 572;
        pub fn func_2639() {
            let v_2640 = ext_1();
        }
    }
}
