#[cfg(feature = "feat12")]
pub mod module0;
pub mod module1;
pub mod module2;
pub mod module3;
pub mod module4;
pub mod module5;
#[cfg(feature = "feat21")]
pub mod module6;
pub mod module7;
pub mod module8;
#[cfg(feature = "feat14")]
pub mod module9;
pub mod module10;
pub mod module11;
pub mod module12;
pub mod module13;
pub mod module14;
#[cfg(feature = "feat8")]
pub mod module15;
pub fn func_2756() {
    let v_2757 = ext_1();
    pub fn func_2758() {
        let v_2759 = func_2246();
    }
    match 4 {
        0 => {
            println!("msg_2760 {}", 1);
            ext_1();
            #[cfg(feature = "feat16")]
            let v_2761 = 32 + 79;
            #[cfg(feature = "feat14")]
            let v_2762 = func_944();
        }
        _ => {}
    }
}
pub mod inner_2763 {
    use super::*;
    pub type Alias_2764 = u64;
    pub fn func_13() {
        if 16 > 10 {
            let v_2765 = 6 + 69;
        } else {
            let v_2766 = ext_3();
            println!("msg_2767 {}", 1);
            let v_2768 = func_2380();
            func_1102();
        }
        pub fn func_2769() {
            #[cfg(feature = "feat5")]
            let v_2770 = 729;
            func_721();
            let v_2771 = ext_0();
        }
        let v_2772 = 885;
    }
    pub struct Record_2773 {
        pub field_2774: u32,
    }
}
pub fn func_2775() {
    let v_2776 = 103;
}
use std::collections::HashMap;
use std::collections::HashMap;
pub struct Record_2777 {
    pub field_2778: u32,
    pub field_2779: u32,
    pub field_2780: u32,
}
pub static COUNTER_2781: u32 = 0;
pub enum Kind_2782 {
    Variant_2783,
    Variant_2784,
    #[cfg(feature = "feat6")]
    Variant_2785,
}
pub type Alias_2786 = u64;
pub fn func_2787() {
    let v_2788 = func_994();
    ext_3();
}
pub const LIMIT_2789: u32 = 65 + 43;
use std::collections::HashMap;
pub fn func_2790() {
    let v_2791 = 84 + 13;
}
pub fn func_2792() {
    match 3 {
        0 => {
            func_1102();
            #[cfg(feature = "feat23")]
            func_2284();
            #[cfg(feature = "feat21")]
            let v_2793 = ext_3();
            let v_2794 = func_2088();
        }
        _ => {}
    }
    let v_2795 = 217;
    println!("msg_2796 {}", 1);
    let _ = 6 + 72;
}
pub fn func_2797() {
    func_60();
}
pub const LIMIT_2798: u32 = func_1304();
pub const LIMIT_2799: u32 = func_1308();
pub fn func_2800() {
    pub fn func_2801() {
        if 11 > 10 {
            let _ = 570;
        } else {
            #[cfg(not(feature = "feat18"))]
            ext_2();
        }
        #[cfg(feature = "feat2")]
        pub fn func_2802() {
            #[cfg(not(feature = "feat13"))]
            ext_3();
        }
    }
}
pub struct Handle_2803;
impl Handle_2803 {
    pub fn func_2684() {
        println!("msg_2804 {}", 1);
    }
}
pub fn func_2805() {
    let v_2806 = 72 + 77;
    println!("msg_2807 {}", 1);
    let _ = 771;
}
pub fn func_2150() {
    let v_2808 = 29 + 26;
    if 0 > 10 {
        #[cfg(all(feature = "feat16", not(feature = "feat9")))]
        ext_0();
    } else {
        #[cfg(feature = "feat5")]
        func_208();
        if 17 > 10 {
            match 3 {
                0 => {
                    let _ = 519;
                }
                _ => {}
            }
            let _ = 65;
            let v_2809 = func_715();
            #[cfg(any(feature = "feat19", feature = "feat8"))]
            func_134();
        } else {
            pub fn func_143() {
                let v_2810 = 82;
            }
            pub fn func_2811() {
                let v_2812 = 22 + 50;
                let w_2813 = 3;
            }
        }
        func_2719();
    }
}
pub fn func_1807() {
    #[cfg(all(feature = "feat21", not(feature = "feat7")))]
    let v_2814 = 345;
}
pub struct Record_2815 {
    pub field_2816: u32,
    pub field_2817: u32,
    pub field_2818: u32,
}
pub const LIMIT_2819: u32 = 747;
pub fn func_906() {
    pub fn func_2820() {
        let v_2821 = 43 + 32;
        if 0 > 10 {
            let _ = 72 + 21;
        } else {
            let _ = 59 + 38;
            match 3 {
                0 => {
                    let w_2822 = 7;
                    let w_2823 = 8;
                    let _ = 11 + 59;
                }
                _ => {}
            }
        }
    }
    if 16 > 10 {
        match 0 {
            0 => {
                println!("msg_2824 {}", 1);
            }
            _ => {}
        }
        match 3 {
            0 => {
                ext_0();
                ext_3();
                if 13 > 10 {
                    ext_0();
                    println!("msg_2825 {}", 1);
                    println!("msg_2826 {}", 1);
                    let v_2827 = func_1718();
                } else {
                    let v_2828 = func_1630();
                    func_1147();
                    let w_2829 = 5;
                }
                func_1367();
            }
            _ => {}
        }
        if 14 > 10 {
            #[cfg(feature = "feat12")]
            let _ = 516;
            let v_2830 = func_1388();
        } else {
            let v_2831 = 51 + 21;
            pub fn func_1887() {
                #[cfg(feature = "feat15")]
                let v_2832 = ext_0();
            }
            let v_2833 = func_1408();
            let v_2834 = ext_2();
        }
        let v_2835 = ext_1();
    } else {
        println!("msg_2836 {}", 1);
    }
    #[cfg(feature = "feat14")]
    let v_2837 = 94 + 29;
}
pub enum Kind_2838 {
    Variant_2839,
    Variant_2840,
    Variant_2841,
}
pub enum Kind_2842 {
    Variant_2843,
    Variant_2844,
}
pub mod inner_2845 {
    use super::*;
    pub struct Handle_2846;
    impl Handle_2846 {
        pub fn func_2536() {
            ext_0();
        }
        pub fn func_2847() {
            pub fn func_2848() {
                let v_2849 = 57 + 57;
                let w_2850 = 5;
            }
            let v_2851 = 962;
        }
    }
}
pub fn func_2852() {
    let _ = 23 + 43;
}
#[cfg(feature = "feat15")]
use std::collections::HashMap;
pub const LIMIT_2853: u32 = func_734();
pub fn func_2562() {
    let v_2854 = 2 + 53;
}
pub fn func_2855() {
    func_53();
}
pub mod inner_2856 {
    use super::*;
    pub fn func_2857() {
        #[cfg(feature = "feat5")]
        pub fn func_2858() {
            pub fn func_2859() {
                let v_2860 = func_625();
                let v_2861 = ext_1();
                let w_2862 = 7;
                println!("msg_2863 {}", 1);
            }
        }
    }
    pub enum Kind_2864 {
        Variant_2865,
        Variant_2866,
        Variant_2867,
    }
}
pub fn func_53() {
    if 3 > 10 {
        pub fn func_1467() {
            let v_2868 = 410;
            if 10 > 10 {
                let w_2869 = 3;
                let v_2870 = ext_0();
            } else {
                let w_2871 = 2;
                let v_2872 = 21 + 81;
                println!("msg_2873 {}", 1);
            }
            println!("msg_2874 {}", 1);
        }
        #[cfg(feature = "feat11")]
        let v_2875 = 642;
        let v_2876 = 79 + 80;
    } else {
        if 5 > 10 {
            if 19 > 10 {
                let v_2877 = ext_0();
                #[cfg(feature = "feat0")]
                let v_2878 = 607;
            } else {
                let v_2879 = 94 + 6;
                let w_2880 = 8;
                let w_2881 = 5;
            }
            pub fn func_2882() {
                func_1779();
            }
        } else {
            if 14 > 10 {
                let v_2883 = 80 + 54;
            } else {
                func_514();
                let _ = 79 + 29;
                let _ = 44 + 11;
            }
            if 10 > 10 {
                let w_2884 = 7;
            } else {
                let w_2885 = 2;
                println!("msg_2886 {}", 1);
                let v_2887 = 81 + 23;
                func_2161();
            }
            let v_2888 = 40 + 77;
        }
        pub fn func_2889() {
            let _ = 998;
            println!("msg_2890 {}", 1);
        }
        println!("msg_2891 {}", 1);
        let _ = 49 + 29;
    }
    let v_2892 = 239;
    println!("msg_2893 {}", 1);
    let _ = 425;
}
pub mod inner_2894 {
    use super::*;
    pub fn func_2895() {
        match 4 {
            0 => {
                #[cfg(all(feature = "feat21", not(feature = "feat13")))]
                let v_2896 = ext_0();
                func_1774();
                if 10 > 10 {
                    let v_2897 = 60 + 44;
                    let w_2898 = 0;
                    let v_2899 = 8 + 29;
                } else {
                    let v_2900 = func_2049();
                    println!("msg_2901 {}", 1);
                }
            }
            _ => {}
        }
        if 12 > 10 {
            println!("msg_2902 {}", 1);
            #[cfg(feature = "feat8")]
            let v_2903 = ext_2();
        } else {
            println!("msg_2904 {}", 1);
            let v_2905 = ext_3();
            let v_2906 = 666;
            match 4 {
                0 => {
                    let _ = 256;
                    let v_2907 = func_906();
                    let v_2908 = 96 + 0;
                    #[cfg(not(feature = "feat3"))]
                    let v_2909 = 536;
                }
                _ => {}
            }
        }
        println!("msg_2910 {}", 1);
        if 2 > 10 {
            let v_2911 = ext_2();
            let _ = 827;
            let v_2912 = func_2107();
            #[cfg(feature = "feat14")]
            let v_2913 = func_2049();
        } else {
            pub fn func_2914() {
                let w_2915 = 5;
            }
        }
    }
}
