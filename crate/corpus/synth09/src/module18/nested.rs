pub fn func_3246() {
    pub fn func_3247() {
        let _ = 378;
    }
    #[cfg(any(feature = "feat13", feature = "feat22", feature = "feat19"))]
    let v_3248 = ext_0();
    println!("msg_3249 {}", 1);
    println!("msg_3250 {}", 1);
}
pub fn func_3251() {
    if 19 > 10 {
        pub fn func_3252() {
            let v_3253 = func_2115();
        }
        let v_3254 = func_3181();
        let v_3255 = 4;
        let _ = 7 + 46;
    } else {
        #[cfg(not(feature = "feat2"))]
        pub fn func_3256() {
            pub fn func_3257() {
                let v_3258 = func_3122();
                let w_3259 = 1;
                let w_3260 = 8;
                let w_3261 = 8;
            }
            let v_3262 = ext_2();
            let v_3263 = 20 + 94;
        }
        let _ = 964;
        match 2 {
            0 => {
                func_3193();
                pub fn func_3264() {
                    let w_3265 = 1;
                    #[cfg(feature = "feat13")]
                    let v_3266 = func_1636();
                    let v_3267 = 694;
                    let v_3268 = 966;
                }
                pub fn func_3269() {
                    ext_0();
                    println!("msg_3270 {}", 1);
                    let w_3271 = 5;
                }
            }
            _ => {}
        }
    }
    println!("msg_3272 {}", 1);
    let v_3273 = 456;
    let v_3274 = ext_3();
}
pub fn func_3275() {
    println!("msg_3276 {}", 1);
    #[cfg(feature = "feat27")]
    let v_3277 = func_1882();
    #[cfg(feature = "feat24")]
    pub fn func_3278() {
        println!("msg_3279 {}", 1);
        match 1 {
            0 => {
                if 3 > 10 {
                    let v_3280 = func_56();
                } else {
                    let w_3281 = 5;
                }
            }
            _ => {}
        }
        let v_3282 = func_392();
    }
    pub fn func_3283() {
        pub fn func_3284() {
            ext_3();
            pub fn func_3285() {
                ext_0();
                let w_3286 = 0;
                #[cfg(all(feature = "feat13", not(feature = "feat21")))]
                let v_3287 = func_143();
            }
            if 5 > 10 {
                #[cfg(feature = "feat11")]
                let v_3288 = func_1184();
                let w_3289 = 2;
                let w_3290 = 2;
                ext_1();
            } else {
                func_2805();
                #[cfg(feature = "feat19")]
                let v_3291 = func_456();
                let w_3292 = 5;
                let w_3293 = 3;
            }
            let v_3294 = 933;
        }
        match 2 {
            0 => {
                println!("msg_3295 {}", 1);
                let v_3296 = func_1150();
                func_606();
                pub fn func_3297() {
                    func_2194();
                    let w_3298 = 7;
                    let w_3299 = 3;
                }
            }
            _ => {}
        }
        pub fn func_3300() {
            let _ = 466;
            let _ = 83;
            let v_3301 = ext_0();
        }
    }
}
pub enum Kind_3302 {
    Variant_3303,
    Variant_3304,
    Variant_3305,
}
pub static COUNTER_3306: u32 = 0;
pub enum Kind_3307 {
    #[cfg(feature = "feat29")]
    Variant_3308,
    Variant_3309,
    Variant_3310,
}
#[cfg(feature = "feat19")]
pub struct Record_3311 {
    pub field_3312: u32,
    pub field_3313: u32,
    pub field_3314: u32,
}
pub const LIMIT_3315: u32 = func_2528();
pub fn func_3316() {
    #[cfg(feature = "feat22")]
    func_3027();
    println!("msg_3317 {}", 1);
    if 13 > 10 {
        println!("msg_3318 {}", 1);
        println!("msg_3319 {}", 1);
    } else {
        let _ = 50 + 79;
        let _ = 20 + 46;
        match 2 {
            0 => {
                let v_3320 = 490;
                let v_3321 = 24 + 40;
                let v_3322 = func_2741();
            }
            _ => {}
        }
    }
    match 0 {
        0 => {
            pub fn func_3323() {
                #[cfg(feature = "feat14")]
                let v_3324 = 263;
            }
            if 15 > 10 {
                let v_3325 = func_2788();
                func_2992();
            } else {
                let v_3326 = 87 + 52;
                let v_3327 = 87 + 62;
                if 11 > 10 {
                    #[cfg(all(feature = "feat11", not(feature = "feat23")))]
                    let v_3328 = 9 + 43;
                    let w_3329 = 8;
                    println!("msg_3330 {}", 1);
                    ext_0();
                } else {
                    let v_3331 = func_1367();
                }
                if 5 > 10 {
                    let w_3332 = 3;
                    println!("msg_3333 {}", 1);
                    let v_3334 = func_69();
                    let _ = 41 + 64;
                } else {
                    let v_3335 = 521;
                    let w_3336 = 4;
                }
            }
        }
        _ => {}
    }
}
pub mod inner_3337 {
    use super::*;
    pub mod inner_3338 {
        use super::*;
        pub fn func_3339() {
            match 4 {
                0 => {
                    func_853();
                    let w_3340 = 3;
                    #[cfg(feature = "feat29")]
                    let v_3341 = 90 + 7;
                    let w_3342 = 5;
                }
                _ => {}
            }
            let v_3343 = ext_1();
            println!("msg_3344 {}", 1);
            pub fn func_21() {
                #[cfg(feature = "feat28")]
                let v_3345 = func_1813();
                let w_3346 = 3;
            }
        }
        pub struct Handle_3347;
        impl Handle_3347 {
            pub fn func_1803() {
                println!("msg_3348 {}", 1);
                let w_3349 = 3;
            }
            #[cfg(feature = "feat11")]
            pub fn func_3350() {
                let w_3351 = 1;
            }
        }
        pub static COUNTER_3352: u32 = 0;
    }
    pub struct Handle_3353;
    #[cfg(feature = "feat9")]
    impl Handle_3353 {
        pub fn func_3354() {
            let v_3355 = func_1313();
            if 5 > 10 {
                func_2119();
                let _ = 150;
                func_1249();
                #[cfg(not(feature = "feat18"))]
                let v_3356 = func_1636();
            } else {
                let v_3357 = func_3264();
            }
            println!("msg_3358 {}", 1);
        }
        pub fn func_3359() {
            match 3 {
                0 => {
                    func_1841();
                }
                _ => {}
            }
        }
    }
}
