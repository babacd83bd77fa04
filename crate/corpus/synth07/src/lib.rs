pub mod module0;
pub mod module1;
pub mod module2;
pub mod module3;
pub mod module4;
pub mod module5;
pub mod module6;
pub mod module7;
pub mod module8;
pub mod module9;
pub mod module10;
pub mod module11;
#[cfg(feature = "feat8")]
pub mod module12;
#[cfg(not(feature = "feat11"))]
pub mod module13;
pub mod module14;
pub mod module15;
pub mod module16;
pub mod module17;
pub const LIMIT_2971: u32 = ext_2();
#[cfg(any(feature = "feat0", feature = "feat17"))]
pub mod inner_2972 {
    use super::*;
    pub static COUNTER_2973: u32 = 0;
    #[cfg(feature = "feat21")]
    pub mod inner_2974 {
        use super::*;
        pub struct Record_2975 {
            pub field_2976: u32,
        }
        pub type Alias_2977 = u64;
        #[cfg(feature = "feat23")]
        pub mod inner_2978 {
            use super::*;
            pub fn func_2979() {
                let v_2980 = func_862();
                let v_2981 = func_2102();
                let v_2982 = ext_0();
            }
        }
    }
    pub fn func_2983() {
        println!("msg_2984 {}", 1);
    }
}
#[cfg(feature = "feat17")]
pub enum Kind_2985 {
    #[cfg(feature = "feat19")]
    Variant_2986,
    #[cfg(not(feature = "feat11"))]
    Variant_2987,
}
pub fn func_2988() {
    println!("msg_2989 {}", 1);
    let v_2990 = 938;
    println!("msg_2991 {}", 1);
    ext_1();
}
pub struct Handle_2992;
impl Handle_2992 {
    #[cfg(any(feature = "feat17", feature = "feat4"))]
    pub fn func_2993() {
        #[cfg(feature = "feat19")]
        let v_2994 = 42 + 4;
        match 2 {
            0 => {
                println!("msg_2995 {}", 1);
                let v_2996 = func_1168();
                pub fn func_2997() {
                    let _ = 77 + 70;
                    func_106();
                    let w_2998 = 2;
                }
                if 10 > 10 {
                    println!("msg_2999 {}", 1);
                    let v_3000 = 62 + 63;
                    let w_3001 = 6;
                } else {
                    let w_3002 = 4;
                    let v_3003 = func_2199();
                }
            }
            _ => {}
        }
    }
    pub fn func_2174() {
        let v_3004 = func_1534();
        println!("msg_3005 {}", 1);
    }
}
pub type Alias_3006 = u64;
#[cfg(not(feature = "feat14"))]
pub fn func_3007() {
    ext_3();
}
pub mod inner_3008 {
    use super::*;
    pub static COUNTER_3009: u32 = 0;
    pub fn func_3010() {
        let v_3011 = ext_3();
    }
    pub static COUNTER_3012: u32 = 0;
}
pub type Alias_3013 = u64;
#[cfg(not(feature = "feat24"))]
pub enum Kind_3014 {
    Variant_3015,
    Variant_3016,
    #[cfg(not(feature = "feat14"))]
    Variant_3017,
}
pub type Alias_3018 = u64;
pub enum Kind_3019 {
    Variant_3020,
    Variant_3021,
    Variant_3022,
}
pub mod inner_3023 {
    use super::*;
    #[cfg(feature = "feat17")]
    pub fn func_3024() {
        pub fn func_514() {
            #[cfg(feature = "feat18")]
            pub fn func_3025() {
                let w_3026 = 4;
                let w_3027 = 6;
                let w_3028 = 3;
            }
        }
        if 4 > 10 {
            let v_3029 = func_80();
            let _ = 795;
            let v_3030 = ext_1();
        } else {
            let v_3031 = ext_1();
            println!("msg_3032 {}", 1);
        }
    }
    pub struct Record_3033 {
        pub field_3034: u32,
        pub field_3035: u32,
        #[cfg(any(feature = "feat9", feature = "feat21"))]
        pub field_3036: u32,
    }
    pub enum Kind_3037 {
        Variant_3038,
        Variant_3039,
    }
}
pub static COUNTER_3040: u32 = 0;
pub const LIMIT_3041: u32 = 780;
#[cfg(feature = "feat21")]
pub static COUNTER_3042: u32 = 0;
pub fn func_3043() {
    let v_3044 = 14 + 39;
    #[cfg(feature = "feat0")]
    func_109();
    let v_3045 = ext_0();
    let v_3046 = func_421();
}
pub static COUNTER_3047: u32 = 0;
#[cfg(feature = "feat8")]
pub fn func_3048() {
    println!("msg_3049 {}", 1);
    let v_3050 = ext_1();
    pub fn func_839() {
        let v_3051 = 63 + 85;
        println!("msg_3052 {}", 1);
    }
    if 10 > 10 {
        if 12 > 10 {
            if 11 > 10 {
                let w_3053 = 3;
                let w_3054 = 1;
                let _ = 29 + 43;
            } else {
                let w_3055 = 4;
                #[cfg(feature = "feat22")]
                let v_3056 = func_66();
                println!("msg_3057 {}", 1);
                let w_3058 = 0;
            }
        } else {
            if 7 > 10 {
                let _ = 23 + 42;
                let v_3059 = 48 + 14;
            } else {
                let v_3060 = func_193();
                let w_3061 = 1;
            }
            if 7 > 10 {
                #[cfg(feature = "feat22")]
                let v_3062 = 18 + 43;
            } else {
                let v_3063 = 53 + 32;
            }
            if 5 > 10 {
                let v_3064 = ext_0();
            } else {
                #[cfg(not(feature = "feat24"))]
                let v_3065 = 848;
                let v_3066 = 30 + 27;
                let _ = 16 + 26;
            }
            let v_3067 = ext_3();
        }
    } else {
        match 4 {
            0 => {
                println!("msg_3068 {}", 1);
                let v_3069 = func_1013();
                let v_3070 = ext_1();
            }
            _ => {}
        }
        #[cfg(feature = "feat10")]
        let v_3071 = func_2557();
        let v_3072 = ext_2();
    }
}
pub fn func_3073() {
    #[cfg(any(feature = "feat10", feature = "feat21", feature = "feat17"))]
    let v_3074 = 71 + 77;
    #[cfg(any(feature = "feat0", feature = "feat10", feature = "feat22"))]
    let v_3075 = func_698();
}
pub mod inner_3076 {
    use super::*;
    pub struct Handle_3077;
    impl Handle_3077 {
        pub fn func_3078() {
            match 0 {
                0 => {
                    let w_3079 = 4;
                    #[cfg(feature = "feat13")]
                    let v_3080 = func_2520();
                }
                _ => {}
            }
            let v_3081 = 862;
            #[cfg(feature = "feat23")]
            ext_2();
        }
    }
}
#[cfg(feature = "feat22")]
pub static COUNTER_3082: u32 = 0;
pub const LIMIT_3083: u32 = 905;
pub mod inner_3084 {
    use super::*;
    pub fn func_3085() {
        match 3 {
            0 => {
                let v_3086 = 90 + 90;
                let v_3087 = ext_0();
                pub fn func_3088() {
                    func_2663();
                }
                #[cfg(feature = "feat21")]
                let v_3089 = ext_3();
            }
            _ => {}
        }
        let v_3090 = ext_0();
        if 6 > 10 {
            #[cfg(not(feature = "feat25"))]
            let v_3091 = 6 + 2;
            pub fn func_3092() {
                #[cfg(any(feature = "feat21", feature = "feat19", feature = "feat22"))]
                func_764();
                let v_3093 = ext_1();
                let v_3094 = func_2760();
            }
            pub fn func_3095() {
                let v_3096 = ext_0();
                let w_3097 = 4;
                #[cfg(feature = "feat2")]
                let v_3098 = ext_1();
                let v_3099 = func_2925();
            }
            let v_3100 = 6;
        } else {
            if 19 > 10 {
                #[cfg(feature = "feat22")]
                let _ = 728;
                let v_3101 = func_852();
                let v_3102 = 86;
                let w_3103 = 0;
            } else {
                let v_3104 = 729;
                let w_3105 = 7;
                let v_3106 = 38 + 28;
                #[cfg(feature = "feat4")]
                let v_3107 = 69 + 84;
            }
            if 19 > 10 {
                let w_3108 = 1;
                let v_3109 = func_274();
                println!("msg_3110 {}", 1);
                let v_3111 = func_478();
            } else {
                let w_3112 = 0;
                let _ = 88 + 38;
            }
            println!("msg_3113 {}", 1);
        }
        func_2560();
    }
    pub struct Handle_3114;
    impl Handle_3114 {
        pub fn func_3115() {
            pub fn func_3116() {
                println!("msg_3117 {}", 1);
            }
            ext_3();
        }
        pub fn func_3118() {
            println!("msg_3119 {}", 1);
        }
    }
}
pub mod inner_3120 {
    use super::*;
    pub fn func_177() {
        let _ = 66 + 89;
        pub fn func_3121() {
            let _ = 68 + 49;
        }
    }
    pub struct Handle_3122;
    impl Handle_3122 {
        pub fn func_3123() {
            let _ = 53 + 88;
            let _ = 89 + 44;
        }
        pub fn func_3124() {
            let _ = 661;
        }
    }
    use std::collections::HashMap;
}
pub fn func_3125() {
    #[cfg(feature = "feat21")]
    pub fn func_3126() {
        println!("msg_3127 {}", 1);
        let v_3128 = ext_1();
        #[cfg(feature = "feat22")]
        pub fn func_3129() {
            func_206();
            func_2824();
            let v_3130 = 64 + 5;
        }
        ext_3();
    }
    match 4 {
        0 => {
            println!("msg_3131 {}", 1);
            let v_3132 = func_142();
            println!("msg_3133 {}", 1);
        }
        _ => {}
    }
    let v_3134 = func_1721();
    match 2 {
        0 => {
            #[cfg(all(feature = "feat13", not(feature = "feat24")))]
            func_3085();
            match 2 {
                0 => {
                    #[cfg(feature = "feat8")]
                    let v_3135 = 839;
                    let v_3136 = 148;
                    let v_3137 = func_393();
                    let v_3138 = 565;
                }
                _ => {}
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
#[cfg(feature = "feat4")]
pub fn func_3139() {
    let v_3140 = 212;
    func_1860();
}
pub fn func_3141() {
    #[cfg(feature = "feat4")]
    ext_0();
    let v_3142 = func_2606();
    let v_3143 = ext_2();
    match 2 {
        0 => {
            let v_3144 = func_1869();
            let v_3145 = ext_2();
            if 13 > 10 {
                if 16 > 10 {
                    let v_3146 = func_2690();
                    let w_3147 = 2;
                    #[cfg(not(feature = "feat5"))]
                    ext_0();
                } else {
                    let v_3148 = 25 + 95;
                    func_593();
                    let v_3149 = 40 + 2;
                    println!("msg_3150 {}", 1);
                }
            } else {
                let v_3151 = func_109();
                let v_3152 = 373;
                let v_3153 = func_1599();
                let _ = 28 + 16;
            }
        }
        _ => {}
    }
}
