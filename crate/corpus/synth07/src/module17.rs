pub struct Handle_2823;
impl Handle_2823 {
    #[cfg(feature = "feat18")]
    pub fn func_2824() {
        let _ = 9 + 17;
        let v_2825 = 11 + 19;
    }
    pub fn func_2826() {
        #[cfg(feature = "feat6")]
        let v_2827 = func_147();
        println!("msg_2828 {}", 1);
        pub fn func_1234() {
            if 0 > 10 {
                let _ = 76 + 46;
                let w_2829 = 5;
                func_1352();
            } else {
                println!("msg_2830 {}", 1);
            }
            let v_2831 = 77 + 95;
            #[cfg(any(feature = "feat2", feature = "feat8", feature = "feat21"))]
            let _ = 408;
        }
        func_277();
    }
}
pub static COUNTER_2832: u32 = 0;
pub fn func_2833() {
    #[cfg(not(feature = "feat5"))]
    let v_2834 = 17 + 50;
    ext_3();
}
pub struct Handle_2835;
impl Handle_2835 {
    pub fn func_2836() {
        if 14 > 10 {
            #[cfg(any(feature = "feat8", feature = "feat21", feature = "feat13"))]
            pub fn func_2837() {
                let v_2838 = 440;
            }
        } else {
            #[cfg(not(feature = "feat1"))]
            let v_2839 = 251;
            println!("msg_2840 {}", 1);
        }
    }
    pub fn func_2841() {
        ext_2();
        match 3 {
            0 => {
                #[cfg(feature = "feat18")]
                let v_2842 = ext_2();
                #[cfg(feature = "feat0")]
                let v_2843 = func_482();
                if 19 > 10 {
                    let w_2844 = 0;
                    #[cfg(not(feature = "feat1"))]
                    let v_2845 = 129;
                    #[cfg(feature = "feat12")]
                    let _ = 20 + 95;
                    func_354();
                } else {
                    let w_2846 = 3;
                }
                match 4 {
                    0 => {
                        println!("msg_2847 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub const LIMIT_2848: u32 = 172;
pub const LIMIT_2849: u32 = func_1187();
#[cfg(feature = "feat18")]
use std::collections::HashMap;
pub fn func_2850() {
    let v_2851 = 70 + 88;
    let v_2852 = ext_3();
    let v_2853 = 60 + 35;
    match 3 {
        0 => {
            #[cfg(feature = "feat12")]
            let v_2854 = ext_1();
        }
        _ => {}
    }
}
pub const LIMIT_2855: u32 = 545;
pub fn func_2856() {
    let v_2857 = func_907();
}
#[cfg(not(feature = "feat24"))]
use std::collections::HashMap;
pub fn func_2858() {
    let v_2859 = 11 + 82;
    let v_2860 = func_1040();
}
#[cfg(all(feature = "feat17", not(feature = "feat7")))]
use std::collections::HashMap;
pub fn func_2861() {
    println!("msg_2862 {}", 1);
    ext_0();
    let _ = 276;
}
pub fn func_2863() {
    match 4 {
        0 => {
            ext_0();
            pub fn func_2864() {
                match 4 {
                    0 => {
                        func_202();
                        #[cfg(all(feature = "feat19", not(feature = "feat15")))]
                        let v_2865 = ext_0();
                    }
                    _ => {}
                }
                match 0 {
                    0 => {
                        let v_2866 = func_927();
                    }
                    _ => {}
                }
                func_170();
            }
        }
        _ => {}
    }
    let v_2867 = 93 + 60;
}
pub mod inner_2868 {
    use super::*;
    pub struct Handle_2869;
    #[cfg(all(feature = "feat13", not(feature = "feat16")))]
    impl Handle_2869 {
        pub fn func_2870() {
            let v_2871 = 996;
            if 4 > 10 {
                ext_0();
            } else {
                let _ = 365;
                let v_2872 = func_2222();
                let w_2873 = 7;
                let w_2874 = 3;
            }
        }
        pub fn func_2875() {
            let _ = 73 + 17;
            let v_2876 = func_1067();
            let v_2877 = func_942();
        }
    }
    pub fn func_2878() {
        func_214();
        let _ = 66 + 23;
    }
}
use std::collections::HashMap;
#[cfg(any(feature = "feat23", feature = "feat9"))]
pub struct Record_2879 {
    pub field_2880: u32,
    pub field_2881: u32,
    pub field_2882: u32,
}
pub fn func_2883() {
    func_1480();
    match 1 {
        0 => {
            func_1199();
        }
        _ => {}
    }
    match 2 {
        0 => {
            match 1 {
                0 => {
                    let v_2884 = 583;
                    let v_2885 = 607;
                }
                _ => {}
            }
            pub fn func_2886() {
                #[cfg(feature = "feat22")]
                let v_2887 = func_110();
                if 12 > 10 {
                    println!("msg_2888 {}", 1);
                    let w_2889 = 5;
                } else {
                    #[cfg(feature = "feat6")]
                    ext_3();
                }
            }
            let v_2890 = 45 + 83;
        }
        _ => {}
    }
    let v_2891 = func_2060();
}
pub fn func_1989() {
    pub fn func_2892() {
        ext_2();
    }
}
pub static COUNTER_2893: u32 = 0;
pub fn func_2894() {
    #[cfg(any(feature = "feat6", feature = "feat6"))]
    let v_2895 = func_2296();
}
use std::collections::HashMap;
pub const LIMIT_2896: u32 = func_32();
pub fn func_2897() {
    match 0 {
        0 => {
            pub fn func_2898() {
                #[cfg(all(feature = "feat3", not(feature = "feat25")))]
                let v_2899 = ext_2();
                match 3 {
                    0 => {
                        println!("msg_2900 {}", 1);
                        let v_2901 = 353;
                    }
                    _ => {}
                }
                #[cfg(all(feature = "feat22", not(feature = "feat1")))]
                let _ = 84 + 34;
                #[cfg(all(feature = "feat17", not(feature = "feat7")))]
                let _ = 39 + 88;
            }
            let v_2902 = 489;
            let v_2903 = 94;
            let v_2904 = ext_2();
        }
        _ => {}
    }
}
pub static COUNTER_2905: u32 = 0;
pub struct Record_2906 {
    pub field_2907: u32,
    pub field_2908: u32,
    pub field_2909: u32,
    pub field_2910: u32,
}
#[cfg(feature = "feat13")]
pub fn func_2911() {
    #[cfg(feature = "feat23")]
    let v_2912 = 639;
    println!("msg_2913 {}", 1);
}
pub mod inner_2914 {
    use super::*;
    pub fn func_2915() {
        let v_2916 = ext_2();
        let v_2917 = ext_3();
    }
    pub mod inner_2918 {
        use super::*;
        pub struct Record_2919 {
            pub field_2920: u32,
            pub field_2921: u32,
        }
    }
}
pub enum Kind_2922 {
    #[cfg(all(feature = "feat17", not(feature = "feat5")))]
    Variant_2923,
}
pub struct Handle_2924;
impl Handle_2924 {
    #[cfg(feature = "feat2")]
    pub fn func_2925() {
        println!("msg_2926 {}", 1);
        let v_2927 = ext_0();
    }
}
pub mod inner_2928 {
    use super::*;
    pub fn func_2929() {
        if 17 > 10 {
            pub fn func_2930() {
                let v_2931 = func_170();
            }
            let v_2932 = 74 + 80;
        } else {
            pub fn func_53() {
                #[cfg(feature = "feat3")]
                let v_2933 = 249;
                #[cfg(not(feature = "feat14"))]
                let _ = 679;
                let w_2934 = 6;
            }
        }
        let _ = 80 + 83;
    }
}
use std::collections::HashMap;
pub fn func_2935() {
    ext_0();
    func_1244();
    pub fn func_2936() {
        if 5 > 10 {
            let v_2937 = func_670();
        } else {
            let _ = 77 + 42;
            if 10 > 10 {
                let w_2938 = 4;
                let w_2939 = 7;
                let v_2940 = func_2323();
                let w_2941 = 0;
            } else {
                #[cfg(not(feature = "feat1"))]
                ext_0();
            }
        }
        match 2 {
            0 => {
                #[cfg(feature = "feat2")]
                func_758();
                let v_2942 = ext_1();
            }
            _ => {}
        }
        if 8 > 10 {
            match 1 {
                0 => {
                    let v_2943 = func_2343();
                    #[cfg(not(feature = "feat16"))]
                    let v_2944 = func_355();
                }
                _ => {}
            }
            println!("msg_2945 {}", 1);
            if 12 > 10 {
                let v_2946 = 12 + 68;
                let w_2947 = 4;
                #[cfg(any(feature = "feat21", feature = "feat13"))]
                func_478();
                println!("msg_2948 {}", 1);
            } else {
                let v_2949 = func_2810();
                let v_2950 = 199;
                let w_2951 = 6;
            }
            pub fn func_2952() {
                func_2307();
                let v_2953 = ext_3();
                println!("msg_2954 {}", 1);
                #[cfg(feature = "feat9")]
                func_1743();
            }
        } else {
            println!("msg_2955 {}", 1);
            func_1207();
            let v_2956 = func_1278();
            let v_2957 = func_1656();
        }
    }
    #[cfg(all(feature = "feat6", not(feature = "feat14")))]
    func_183();
}
pub static COUNTER_2958: u32 = 0;
pub static COUNTER_2959: u32 = 0;
pub struct Handle_2960;
#[cfg(feature = "feat2")]
impl Handle_2960 {
    #[cfg(not(feature = "feat15"))]
    pub fn func_2961() {
        println!("msg_2962 {}", 1);
        pub fn func_2963() {
            let _ = 143;
        }
    }
    pub fn func_2964() {
        let v_2965 = func_602();
    }
}
pub struct Record_2966 {
    pub field_2967: u32,
}
pub fn func_2968() {
    pub fn func_2969() {
        let v_2970 = ext_1();
    }
    func_1847();
}
