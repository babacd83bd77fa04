pub mod inner_2641 {
    use super::*;
    pub fn func_2642() {
        #[cfg(not(feature = "feat20"))]
        let v_2643 = ext_1();
        let _ = 969;
    }
    pub type Alias_2644 = u64;
}
pub struct Handle_2645;
impl Handle_2645 {
    #[cfg(feature = "feat3")]
    pub fn func_2646() {
        pub fn func_2647() {
            match 0 {
                0 => {
                    let v_2648 = func_2193();
                    let w_2649 = 1;
                    let w_2650 = 5;
                }
                _ => {}
            }
            let v_2651 = func_764();
            println!("msg_2652 {}", 1);
        }
        match 2 {
            0 => {
                #[cfg(feature = "feat12")]
                let v_2653 = ext_2();
                let v_2654 = func_271();
                let v_2655 = func_847();
            }
            _ => {}
        }
        if 11 > 10 {
            let v_2656 = func_1221();
            #[cfg(feature = "feat9")]
            let v_2657 = 33 + 17;
            let v_2658 = func_2477();
            let v_2659 = 52 + 96;
        } else {
            #[cfg(feature = "feat17")]
            let _ = 98 + 71;
        }
    }
}
pub struct Record_2660 {
    #[cfg(not(feature = "feat16"))]
    pub field_2661: u32,
    pub field_2662: u32,
}
pub fn func_2663() {
    println!("msg_2664 {}", 1);
}
pub fn func_1091() {
    pub fn func_2665() {
        pub fn func_2666() {
            if 10 > 10 {
                func_585();
                let v_2667 = 446;
                let w_2668 = 2;
                ext_0();
            } else {
                #[cfg(feature = "feat12")]
                let v_2669 = 58 + 14;
                let w_2670 = 3;
                let _ = 31 + 32;
                let w_2671 = 6;
            }
            #[cfg(feature = "feat8")]
            let _ = 11 + 44;
            #[cfg(any(feature = "feat17", feature = "feat2"))]
            let v_2672 = ext_2();
        }
        pub fn func_2477() {
            let v_2673 = 41 + 84;
            func_2222();
        }
        let v_2674 = func_1390();
    }
}
#[cfg(any(feature = "feat22", feature = "feat13"))]
use std::collections::HashMap;
pub const LIMIT_2675: u32 = 799;
pub fn func_2676() {
    let v_2677 = ext_3();
    match 3 {
        0 => {
            if 6 > 10 {
                #[cfg(feature = "feat8")]
                ext_0();
                let v_2678 = func_254();
                if 6 > 10 {
                    let w_2679 = 0;
                    ext_3();
                } else {
                    let _ = 7 + 99;
                    let v_2680 = ext_0();
                }
                let v_2681 = ext_3();
            } else {
                let v_2682 = func_1043();
                let _ = 103;
            }
        }
        _ => {}
    }
    ext_2();
    let v_2683 = 116;
}
pub enum Kind_2684 {
    Variant_2685,
    #[cfg(any(feature = "feat13", feature = "feat6"))]
    Variant_2686,
    Variant_2687,
    #[cfg(not(feature = "feat11"))]
    Variant_2688,
}
pub type Alias_2689 = u64;
pub fn func_2690() {
    let v_2691 = func_222();
    #[cfg(feature = "feat0")]
    let v_2692 = func_2585();
}
pub fn func_2693() {
    pub fn func_2694() {
        let v_2695 = 89;
        let v_2696 = func_2336();
        func_2120();
    }
    let v_2697 = ext_0();
}
pub const LIMIT_2698: u32 = 980;
#[cfg(feature = "feat9")]
pub type Alias_2699 = u64;
pub static COUNTER_2700: u32 = 0;
pub struct Record_2701 {
    pub field_2702: u32,
    pub field_2703: u32,
}
pub struct Handle_2704;
impl Handle_2704 {
    pub fn func_1298() {
        let v_2705 = func_1339();
        pub fn func_2706() {
            match 2 {
                0 => {
                    let v_2707 = func_2468();
                    let _ = 930;
                }
                _ => {}
            }
            let v_2708 = func_1910();
            let v_2709 = 825;
            println!("msg_2710 {}", 1);
        }
        println!("msg_2711 {}", 1);
    }
}
pub mod inner_2712 {
    use super::*;
    pub struct Record_2713 {
        pub field_2714: u32,
        pub field_2715: u32,
    }
    pub fn func_2716() {
        func_142();
        if 0 > 10 {
            let v_2717 = 664;
            let v_2718 = func_1994();
            let v_2719 = func_359();
            let _ = 906;
        } else {
            let v_2720 = func_1493();
        }
    }
}
pub enum Kind_2721 {
    Variant_2722,
    Variant_2723,
    Variant_2724,
}
pub fn func_2725() {
    let _ = 52;
    let v_2726 = func_1882();
    let v_2727 = ext_1();
    let v_2728 = func_124();
}
pub type Alias_2729 = u64;
#[cfg(any(feature = "feat6", feature = "feat23", feature = "feat3"))]
pub fn func_2730() {
    println!("msg_2731 {}", 1);
    let v_2732 = 63 + 66;
    let v_2733 = func_2323();
}
pub const LIMIT_2734: u32 = func_1149();
pub fn func_2735() {
    func_2177();
    println!("msg_2736 {}", 1);
    let v_2737 = 66 + 51;
    let _ = 65 + 45;
}
pub static COUNTER_2738: u32 = 0;
pub fn func_2739() {
    pub fn func_2466() {
        let v_2740 = 22 + 76;
        ext_0();
        func_833();
        #[cfg(feature = "feat2")]
        ext_0();
    }
    if 2 > 10 {
        println!("msg_2741 {}", 1);
        ext_2();
        match 4 {
            0 => {
                let v_2742 = ext_0();
                println!("msg_2743 {}", 1);
                func_1494();
            }
            _ => {}
        }
        let v_2744 = func_307();
    } else {
        pub fn func_2745() {
            let v_2746 = 316;
        }
        #[cfg(feature = "feat3")]
        let v_2747 = 157;
        pub fn func_2748() {
            let _ = 68 + 12;
            let v_2749 = func_213();
            match 4 {
                0 => {
                    #[cfg(feature = "feat12")]
                    let v_2750 = ext_2();
                    println!("msg_2751 {}", 1);
                    #[cfg(feature = "feat3")]
                    let v_2752 = func_1618();
                    let w_2753 = 7;
                }
                _ => {}
            }
        }
        #[cfg(any(feature = "feat2", feature = "feat8"))]
        let v_2754 = ext_0();
    }
    let v_2755 = func_1774();
    pub fn func_2756() {
        println!("msg_2757 {}", 1);
        let v_2758 = 77 + 82;
        #[cfg(feature = "feat2")]
        func_1664();
    }
}
pub fn func_2759() {
    pub fn func_2760() {
        let _ = 16 + 72;
        match 0 {
            0 => {
                #[cfg(not(feature = "feat24"))]
                func_862();
                pub fn func_2761() {
                    let v_2762 = func_568();
                    let v_2763 = 69 + 14;
                    let v_2764 = 727;
                }
                #[cfg(any(feature = "feat19", feature = "feat22", feature = "feat19"))]
                ext_3();
            }
            _ => {}
        }
        pub fn func_2765() {
            let v_2766 = ext_0();
            let _ = 99 + 64;
        }
        let v_2767 = 392;
    }
    ext_1();
}
#[cfg(feature = "feat9")]
pub struct Record_2768 {
    pub field_2769: u32,
    pub field_2770: u32,
}
pub static COUNTER_2771: u32 = 0;
pub type Alias_2772 = u64;
pub fn func_206() {
    if 4 > 10 {
        #[cfg(any(feature = "feat23", feature = "feat10"))]
        let v_2773 = func_219();
        println!("msg_2774 {}", 1);
        if 0 > 10 {
            #[cfg(feature = "feat3")]
            let v_2775 = ext_2();
            let v_2776 = ext_1();
        } else {
            pub fn func_2777() {
                let v_2778 = func_1644();
                let w_2779 = 0;
            }
            let _ = 58 + 85;
        }
        func_1603();
    } else {
        pub fn func_2780() {
            match 1 {
                0 => {
                    let w_2781 = 2;
                    let w_2782 = 1;
                    let v_2783 = 46 + 85;
                }
                _ => {}
            }
        }
        func_1400();
    }
}
pub fn func_2784() {
    if 18 > 10 {
        let v_2785 = 49 + 51;
        func_932();
        if 11 > 10 {
            let v_2786 = func_2198();
            func_2663();
        } else {
            let v_2787 = 5 + 26;
            println!("msg_2788 {}", 1);
        }
    } else {
        #[cfg(feature = "feat9")]
        let _ = 60;
        ext_1();
    }
    #[cfg(not(feature = "feat14"))]
    pub fn func_1664() {
        let _ = 68 + 58;
        let _ = 21 + 37;
        match 1 {
            0 => {
                match 3 {
                    0 => {
                        let v_2789 = 152;
                        let w_2790 = 7;
                        println!("msg_2791 {}", 1);
                    }
                    _ => {}
                }
                pub fn func_2792() {
                    let v_2793 = func_2508();
                }
                let v_2794 = 324;
            }
            _ => {}
        }
    }
    let v_2795 = 314;
}
pub fn func_2796() {
    let v_2797 = 884;
    let _ = 46 + 27;
}
pub fn func_2025() {
    let v_2798 = func_1879();
    let v_2799 = 24 + 84;
    #[cfg(feature = "feat10")]
    func_1136();
}
pub const LIMIT_2800: u32 = 785;
pub fn func_2801() {
    if 13 > 10 {
        if 11 > 10 {
            let v_2802 = func_887();
        } else {
            if 4 > 10 {
                let v_2803 = func_2336();
            } else {
                let _ = 60 + 22;
                ext_1();
            }
            let v_2804 = func_2570();
        }
        let v_2805 = 50 + 24;
        let v_2806 = func_2126();
        let v_2807 = func_2193();
    } else {
        pub fn func_2808() {
            let v_2809 = func_909();
            pub fn func_2810() {
                let v_2811 = 30 + 6;
                println!("msg_2812 {}", 1);
                let w_2813 = 3;
                func_2520();
            }
            #[cfg(feature = "feat6")]
            pub fn func_2814() {
                println!("msg_2815 {}", 1);
                let w_2816 = 1;
                let w_2817 = 2;
                let v_2818 = func_400();
            }
            pub fn func_2819() {
                let v_2820 = 28 + 73;
            }
        }
        let v_2821 = func_927();
        #[cfg(any(feature = "feat12", feature = "feat18", feature = "feat4"))]
        let v_2822 = ext_3();
    }
}
