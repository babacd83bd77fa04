use std::collections::HashMap;
pub fn func_2568() {
    if 19 > 10 {
        #[cfg(feature = "feat21")]
        func_1140();
        let v_2569 = 869;
        match 1 {
            0 => {
                match 1 {
                    0 => {
                        let w_2570 = 7;
                        println!("msg_2571 {}", 1);
                    }
                    _ => {}
                }
                match 4 {
                    0 => {
                        let v_2572 = 77 + 32;
                        let w_2573 = 5;
                        let w_2574 = 3;
                        let v_2575 = 57 + 42;
                    }
                    _ => {}
                }
                #[cfg(any(feature = "feat12", feature = "feat12"))]
                let _ = 63 + 40;
            }
            _ => {}
        }
        ext_0();
    } else {
        func_2371();
        match 3 {
            0 => {
                ext_0();
            }
            _ => {}
        }
        println!("msg_2576 {}", 1);
        pub fn func_2577() {
            println!("msg_2578 {}", 1);
            let _ = 589;
            if 8 > 10 {
                let w_2579 = 3;
                let v_2580 = 82 + 20;
                let w_2581 = 1;
                let w_2582 = 3;
            } else {
                let v_2583 = ext_1();
                let w_2584 = 7;
            }
        }
    }
    ext_2();
}
pub struct Handle_2585;
impl Handle_2585 {
    pub fn func_2586() {
        if 2 > 10 {
            let _ = 753;
            let v_2587 = func_2208();
        } else {
            #[cfg(feature = "feat16")]
            let v_2588 = 73 + 26;
        }
        if 15 > 10 {
            let _ = 12 + 70;
            func_1392();
            match 2 {
                0 => {
                    let w_2589 = 4;
                    let _ = 682;
                    let _ = 60 + 36;
                    let _ = 553;
                }
                _ => {}
            }
            let v_2590 = ext_0();
        } else {
            if 17 > 10 {
                let v_2591 = 642;
                let v_2592 = func_692();
            } else {
                let w_2593 = 2;
                let v_2594 = 875;
            }
            #[cfg(any(feature = "feat21", feature = "feat19"))]
            ext_0();
            let v_2595 = func_1595();
        }
        let _ = 1 + 54;
    }
    pub fn func_2596() {
        #[cfg(all(feature = "feat15", not(feature = "feat13")))]
        let v_2597 = 130;
    }
}
#[cfg(feature = "feat21")]
pub fn func_2598() {
    let v_2599 = 51 + 33;
}
pub mod inner_2600 {
    use super::*;
    pub fn func_2601() {
        let v_2602 = func_1308();
        pub fn func_2049() {
            println!("msg_2603 {}", 1);
        }
        let v_2604 = func_1749();
        println!("msg_2605 {}", 1);
    }
    pub fn func_2606() {
        let v_2607 = 588;
    }
}
pub type Alias_2608 = u64;
pub static COUNTER_2609: u32 = 0;
pub enum Kind_2610 {
    Variant_2611,
    Variant_2612,
}
pub fn func_2613() {
    let v_2614 = 85 + 42;
    pub fn func_2043() {
        let v_2615 = 12 + 38;
        #[cfg(feature = "feat14")]
        let v_2616 = func_2453();
    }
    let v_2617 = func_208();
    #[cfg(feature = "feat23")]
    let _ = 23;
}
#[cfg(feature = "feat14")]
pub fn func_2618() {
    let v_2619 = 446;
    let v_2620 = 159;
    let v_2621 = 792;
}
pub struct Record_2622 {
    pub field_2623: u32,
    pub field_2624: u32,
    pub field_2625: u32,
}
pub struct Handle_2626;
impl Handle_2626 {
    pub fn func_2627() {
        match 2 {
            0 => {
                let v_2628 = func_898();
            }
            _ => {}
        }
        let v_2629 = func_435();
    }
    pub fn func_2630() {
        pub fn func_2631() {
            if 10 > 10 {
                func_1058();
                #[cfg(not(feature = "feat13"))]
                let _ = 65 + 12;
                let v_2632 = 22 + 68;
            } else {
                let v_2633 = ext_3();
            }
            let v_2634 = func_134();
            println!("msg_2635 {}", 1);
            let _ = 485;
        }
        let v_2636 = func_9();
    }
}
pub fn func_2637() {
    let v_2638 = 81 + 38;
}
pub fn func_2639() {
    pub fn func_2640() {
        #[cfg(feature = "feat14")]
        let v_2641 = 430;
        let v_2642 = func_1200();
    }
    let v_2643 = func_1818();
    println!("msg_2644 {}", 1);
}
pub struct Record_2645 {
    pub field_2646: u32,
    pub field_2647: u32,
    #[cfg(not(feature = "feat9"))]
    pub field_2648: u32,
}
#[cfg(any(feature = "feat16", feature = "feat14"))]
pub enum Kind_2649 {
    Variant_2650,
}
pub static COUNTER_2651: u32 = 0;
pub type Alias_2652 = u64;
pub struct Record_2653 {
    pub field_2654: u32,
    #[cfg(feature = "feat21")]
    pub field_2655: u32,
    pub field_2656: u32,
}
pub fn func_2657() {
    if 19 > 10 {
        #[cfg(feature = "feat23")]
        let v_2658 = func_359();
        match 2 {
            0 => {
                let v_2659 = 39 + 45;
                let v_2660 = func_1609();
                let v_2661 = 604;
            }
            _ => {}
        }
    } else {
        let _ = 647;
        let v_2662 = ext_2();
        println!("msg_2663 {}", 1);
    }
}
#[cfg(feature = "feat19")]
pub fn func_1713() {
    let v_2664 = 502;
    func_1595();
    #[cfg(feature = "feat21")]
    let v_2665 = func_2504();
    pub fn func_2666() {
        ext_0();
        let v_2667 = func_1298();
        if 3 > 10 {
            #[cfg(feature = "feat21")]
            pub fn func_2668() {
                let v_2669 = func_1402();
                let v_2670 = 598;
            }
            let v_2671 = ext_2();
            let v_2672 = func_923();
            println!("msg_2673 {}", 1);
        } else {
            println!("msg_2674 {}", 1);
        }
    }
}
pub struct Record_2675 {
    #[cfg(feature = "feat12")]
    pub field_2676: u32,
}
#[cfg(feature = "feat11")]
pub fn func_2677() {
    let v_2678 = 535;
}
pub fn func_2679() {
    let _ = 5 + 70;
    println!("msg_2680 {}", 1);
}
pub mod inner_2681 {
    use super::*;
    pub static COUNTER_2682: u32 = 0;
}
pub fn func_2683() {
    pub fn func_2684() {
        let v_2685 = func_442();
    }
    let v_2686 = ext_2();
    let v_2687 = func_1246();
}
#[cfg(all(feature = "feat16", not(feature = "feat10")))]
pub static COUNTER_2688: u32 = 0;
pub fn func_2689() {
    pub fn func_2690() {
        pub fn func_2691() {
            #[cfg(not(feature = "feat17"))]
            pub fn func_2692() {
                let w_2693 = 4;
                let v_2694 = ext_2();
            }
            pub fn func_2695() {
                println!("msg_2696 {}", 1);
            }
            let v_2697 = func_1765();
        }
        let v_2698 = 446;
        if 3 > 10 {
            match 0 {
                0 => {
                    func_406();
                }
                _ => {}
            }
            match 1 {
                0 => {
                    func_1932();
                    let v_2699 = func_1029();
                    let w_2700 = 3;
                    let v_2701 = func_448();
                }
                _ => {}
            }
            let v_2702 = ext_2();
        } else {
            let v_2703 = func_2220();
            let v_2704 = 394;
            #[cfg(feature = "feat16")]
            let v_2705 = 46 + 32;
        }
    }
}
pub enum Kind_2706 {
    Variant_2707,
    Variant_2708,
    Variant_2709,
}
pub type Alias_2710 = u64;
pub mod inner_2711 {
    use super::*;
    pub fn func_667() {
        if 6 > 10 {
            let v_2712 = 256;
        } else {
            func_333();
            println!("msg_2713 {}", 1);
            let v_2714 = func_686();
        }
        let v_2715 = 135;
        #[cfg(feature = "feat16")]
        let v_2716 = func_924();
        let v_2717 = func_389();
    }
    pub type Alias_2718 = u64;
}
pub fn func_2719() {
    let v_2720 = func_1241();
    println!("msg_2721 {}", 1);
    #[cfg(feature = "feat12")]
    pub fn func_2722() {
        match 3 {
            0 => {
                #[cfg(not(feature = "feat17"))]
                let v_2723 = 881;
                let v_2724 = 15 + 77;
                let v_2725 = ext_2();
            }
            _ => {}
        }
        #[cfg(feature = "feat21")]
        let v_2726 = func_1996();
        let _ = 407;
    }
}
pub struct Handle_2727;
#[cfg(all(feature = "feat12", not(feature = "feat3")))]
impl Handle_2727 {
    pub fn func_2728() {
        let v_2729 = 77 + 13;
        if 1 > 10 {
            println!("msg_2730 {}", 1);
        } else {
            let v_2731 = func_2148();
            if 12 > 10 {
                let w_2732 = 3;
                let v_2733 = func_2320();
                let v_2734 = func_2072();
                let w_2735 = 1;
            } else {
                let w_2736 = 1;
            }
            println!("msg_2737 {}", 1);
        }
        let _ = 33 + 76;
        if 8 > 10 {
            let v_2738 = func_227();
            let v_2739 = func_1061();
            let v_2740 = ext_3();
            let v_2741 = ext_2();
        } else {
            func_1630();
        }
    }
    pub fn func_1555() {
        let _ = 24 + 38;
        let _ = 63 + 27;
        if 14 > 10 {
            pub fn func_1973() {
                let w_2742 = 5;
                println!("msg_2743 {}", 1);
            }
            let v_2744 = ext_1();
            pub fn func_2745() {
                let v_2746 = 491;
                let v_2747 = 325;
                #[cfg(not(feature = "feat18"))]
                let v_2748 = func_2439();
            }
        } else {
            #[cfg(not(feature = "feat9"))]
            let v_2749 = 673;
        }
        if 3 > 10 {
            let v_2750 = func_101();
        } else {
            let v_2751 = ext_3();
            if 10 > 10 {
                let _ = 6 + 19;
                let w_2752 = 1;
                func_2596();
            } else {
                let v_2753 = 480;
                let v_2754 = func_1819();
                println!("msg_2755 {}", 1);
            }
        }
    }
}
