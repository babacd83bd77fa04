pub fn func_2662() {
    let v_2663 = ext_1();
    #[cfg(not(feature = "feat25"))]
    let _ = 182;
}
pub struct Handle_2664;
impl Handle_2664 {
    pub fn func_2665() {
        let v_2666 = func_1228();
        let v_2667 = func_1710();
        #[cfg(not(feature = "feat0"))]
        let v_2668 = ext_0();
        func_2140();
    }
}
pub enum Kind_2669 {
    Variant_2670,
    Variant_2671,
    Variant_2672,
}
pub fn func_2673() {
    let v_2674 = ext_2();
    let v_2675 = 69 + 80;
    println!("msg_2676 {}", 1);
}
pub struct Record_2677 {
    pub field_2678: u32,
    pub field_2679: u32,
    #[cfg(not(feature = "feat17"))]
    pub field_2680: u32,
    pub field_2681: u32,
}
pub fn func_2682() {
    let v_2683 = func_2468();
}
pub struct Handle_2684;
impl Handle_2684 {
    pub fn func_2685() {
        let v_2686 = 930;
        pub fn func_2687() {
            let v_2688 = 9 + 48;
            println!("msg_2689 {}", 1);
            pub fn func_2690() {
                let w_2691 = 4;
                let v_2692 = func_1848();
                let v_2693 = func_2612();
            }
            func_625();
        }
    }
    pub fn func_2581() {
        pub fn func_2694() {
            let v_2695 = 221;
            func_1962();
        }
    }
}
pub const LIMIT_2696: u32 = 276;
pub enum Kind_2697 {
    Variant_2698,
    Variant_2699,
    Variant_2700,
    Variant_2701,
}
pub type Alias_2702 = u64;
pub type Alias_2703 = u64;
pub fn func_2588() {
    let v_2704 = func_1890();
    println!("msg_2705 {}", 1);
    let v_2706 = ext_3();
}
pub fn func_2707() {
    let v_2708 = 67 + 52;
}
pub static COUNTER_2709: u32 = 0;
pub fn func_2710() {
    match 2 {
        0 => {
            pub fn func_2711() {
                let v_2712 = 667;
            }
        }
        _ => {}
    }
    println!("msg_2713 {}", 1);
}
pub fn func_2714() {
    func_2054();
    let v_2715 = 45 + 63;
    let v_2716 = 7 + 87;
}
pub struct Handle_2717;
impl Handle_2717 {
    pub fn func_2718() {
        if 6 > 10 {
            if 9 > 10 {
                let w_2719 = 3;
                let v_2720 = 11 + 7;
                let w_2721 = 2;
                ext_2();
            } else {
                #[cfg(not(feature = "feat15"))]
                let v_2722 = 267;
                func_2370();
                let _ = 65 + 2;
                func_2014();
            }
            let v_2723 = 91 + 80;
            let v_2724 = func_2690();
        } else {
            #[cfg(not(feature = "feat0"))]
            let v_2725 = func_143();
            match 0 {
                0 => {
                    let v_2726 = func_1803();
                    let v_2727 = 98 + 49;
                    let v_2728 = 661;
                    let v_2729 = 590;
                }
                _ => {}
            }
            let v_2730 = 40 + 98;
        }
        let v_2731 = 303;
        let v_2732 = 19 + 47;
    }
}
pub struct Handle_2733;
impl Handle_2733 {
    pub fn func_2734() {
        if 1 > 10 {
            #[cfg(not(feature = "feat18"))]
            let v_2735 = func_2239();
        } else {
            if 10 > 10 {
                let v_2736 = 74 + 27;
                let w_2737 = 5;
            } else {
                println!("msg_2738 {}", 1);
            }
            let v_2739 = func_1104();
            match 0 {
                0 => {
                    let w_2740 = 6;
                }
                _ => {}
            }
        }
        pub fn func_2741() {
            if 16 > 10 {
                let w_2742 = 4;
                let _ = 654;
                let v_2743 = 562;
                let v_2744 = ext_2();
            } else {
                let v_2745 = func_1002();
                #[cfg(not(feature = "feat15"))]
                let v_2746 = func_2089();
            }
        }
        func_1334();
    }
    pub fn func_2747() {
        let _ = 379;
        println!("msg_2748 {}", 1);
    }
}
pub fn func_2749() {
    let _ = 647;
}
pub fn func_2750() {
    let v_2751 = func_2340();
}
pub enum Kind_2752 {
    Variant_2753,
    Variant_2754,
}
use std::collections::HashMap;
pub fn func_2755() {
    ext_3();
    let v_2756 = func_392();
    func_199();
    let v_2757 = 72 + 45;
}
pub fn func_2758() {
    match 2 {
        0 => {
            let _ = 34 + 8;
        }
        _ => {}
    }
}
pub fn func_2759() {
    match 4 {
        0 => {
            let v_2760 = func_1995();
            let v_2761 = ext_0();
        }
        _ => {}
    }
    pub fn func_2762() {
        pub fn func_2763() {
            func_2127();
        }
    }
    func_908();
    let v_2764 = ext_3();
}
pub struct Handle_2765;
impl Handle_2765 {
    pub fn func_2766() {
        func_331();
        let _ = 4 + 24;
        let _ = 59 + 75;
        let v_2767 = func_2673();
    }
    pub fn func_2768() {
        pub fn func_2769() {
            pub fn func_2770() {
                let w_2771 = 6;
                let v_2772 = 76 + 77;
                println!("msg_2773 {}", 1);
                let w_2774 = 5;
            }
            if 13 > 10 {
                let _ = 553;
                let v_2775 = 13 + 45;
            } else {
                println!("msg_2776 {}", 1);
                let w_2777 = 8;
                let v_2778 = ext_3();
                let w_2779 = 1;
            }
        }
    }
}
pub static COUNTER_2780: u32 = 0;
pub type Alias_2781 = u64;
pub struct Handle_2782;
impl Handle_2782 {
    pub fn func_2783() {
        let v_2784 = 47 + 3;
        let v_2785 = ext_3();
    }
    pub fn func_2786() {
        let _ = 20 + 47;
    }
}
pub static COUNTER_2787: u32 = 0;
pub fn func_2788() {
    let v_2789 = ext_2();
    let _ = 55 + 31;
    match 4 {
        0 => {
            ext_1();
            println!("msg_2790 {}", 1);
        }
        _ => {}
    }
    let v_2791 = 431;
}
pub fn func_2792() {
    ext_3();
    match 2 {
        0 => {
            let v_2793 = func_2747();
            if 11 > 10 {
                match 3 {
                    0 => {
                        let w_2794 = 7;
                    }
                    _ => {}
                }
                let v_2795 = 575;
                let v_2796 = 24 + 9;
                func_2140();
            } else {
                let v_2797 = 49 + 3;
                if 1 > 10 {
                    let w_2798 = 8;
                } else {
                    let v_2799 = 402;
                    let v_2800 = ext_2();
                }
            }
            println!("msg_2801 {}", 1);
        }
        _ => {}
    }
}
pub struct Handle_2802;
impl Handle_2802 {
    pub fn func_2803() {
        func_2786();
        let v_2804 = 3 + 19;
        pub fn func_2805() {
            pub fn func_2806() {
                #[cfg(not(feature = "feat7"))]
                func_331();
                let v_2807 = 611;
                let v_2808 = 256;
                let v_2809 = 375;
            }
            let v_2810 = func_1746();
        }
        if 16 > 10 {
            let v_2811 = func_759();
        } else {
            let v_2812 = ext_1();
            let v_2813 = func_216();
        }
    }
    pub fn func_2814() {
        let _ = 37 + 88;
        let v_2815 = 361;
        let v_2816 = ext_1();
    }
}
pub static COUNTER_2817: u32 = 0;
pub fn func_2818() {
    let v_2819 = func_527();
    println!("msg_2820 {}", 1);
}
pub fn func_2821() {
    let v_2822 = 81 + 65;
}
pub fn func_2823() {
    let _ = 185;
    let _ = 889;
}
pub type Alias_2824 = u64;
pub fn func_2734() {
    pub fn func_2825() {
        let v_2826 = ext_1();
    }
    func_2652();
}
pub mod inner_2827 {
    use super::*;
    pub mod inner_2828 {
        use super::*;
        pub static COUNTER_2829: u32 = 0;
        pub const LIMIT_2830: u32 = 239;
    }
}
pub static COUNTER_2831: u32 = 0;
pub struct Handle_2832;
impl Handle_2832 {
    pub fn func_2833() {
        match 4 {
            0 => {
                match 2 {
                    0 => {
                        ext_0();
                        println!("msg_2834 {}", 1);
                    }
                    _ => {}
                }
                if 16 > 10 {
                    let v_2835 = ext_1();
                    let w_2836 = 5;
                } else {
                    let v_2837 = func_598();
                    let w_2838 = 3;
                    let v_2839 = func_1731();
                    let w_2840 = 1;
                }
                let v_2841 = ext_2();
                match 4 {
                    0 => {
                        let w_2842 = 8;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        pub fn func_2519() {
            let _ = 78 + 40;
        }
        func_1380();
        let _ = 2 + 79;
    }
}
use std::collections::HashMap;
pub fn func_2843() {
    let v_2844 = func_2707();
}
pub fn func_2845() {
    match 2 {
        0 => {
            let v_2846 = func_1286();
            ext_3();
            pub fn func_2847() {
                if 9 > 10 {
                    let _ = 405;
                } else {
                    let w_2848 = 5;
                    let w_2849 = 5;
                }
            }
            let v_2850 = func_1134();
        }
        _ => {}
    }
    let v_2851 = func_447();
    let v_2852 = func_984();
}
