#[cfg(any(feature = "feat4", feature = "feat16"))]
pub mod inner_3360 {
    use super::*;
    #[cfg(feature = "feat19")]
    pub const LIMIT_3361: u32 = 469;
    #[cfg(any(feature = "feat28", feature = "feat22", feature = "feat29"))]
    pub fn func_3362() {
        let v_3363 = func_3233();
        if 0 > 10 {
            pub fn func_3364() {
                func_527();
                let v_3365 = ext_2();
            }
            let v_3366 = 90 + 80;
        } else {
            ext_1();
            let v_3367 = 782;
        }
        let v_3368 = func_2084();
        let v_3369 = 33 + 1;
    }
}
#[cfg(all(feature = "feat1", not(feature = "feat2")))]
pub type Alias_3370 = u64;
use std::collections::HashMap;
#[cfg(feature = "feat11")]
pub struct Record_3371 {
    pub field_3372: u32,
    #[cfg(any(feature = "feat22", feature = "feat20", feature = "feat29"))]
    pub field_3373: u32,
    pub field_3374: u32,
}
pub fn func_3375() {
    if 16 > 10 {
        println!("msg_3376 {}", 1);
        #[cfg(feature = "feat24")]
        let _ = 50 + 25;
        pub fn func_3377() {
            if 13 > 10 {
                ext_2();
                let w_3378 = 8;
                let v_3379 = ext_0();
            } else {
                #[cfg(feature = "feat4")]
                let v_3380 = 18;
                let v_3381 = ext_3();
                let v_3382 = func_2763();
                let w_3383 = 3;
            }
            let v_3384 = func_3150();
        }
    } else {
        println!("msg_3385 {}", 1);
    }
    let v_3386 = func_2194();
    let _ = 237;
}
pub fn func_3387() {
    let v_3388 = ext_0();
    #[cfg(feature = "feat5")]
    let v_3389 = func_417();
}
#[cfg(all(feature = "feat6", not(feature = "feat15")))]
use std::collections::HashMap;
pub fn func_3390() {
    pub fn func_3391() {
        let v_3392 = 65 + 79;
    }
}
pub const LIMIT_3393: u32 = 48 + 60;
pub const LIMIT_3394: u32 = ext_1();
pub fn func_3395() {
    let v_3396 = ext_3();
}
pub mod inner_3397 {
    use super::*;
    pub fn func_3398() {
        let v_3399 = 854;
    }
    pub mod inner_3400 {
        use super::*;
        pub struct Handle_3401;
        impl Handle_3401 {
            pub fn func_3402() {
                func_66();
                let w_3403 = 2;
                let w_3404 = 7;
            }
        }
        #[cfg(feature = "feat24")]
        pub static COUNTER_3405: u32 = 0;
    }
}
pub struct Handle_3406;
impl Handle_3406 {
    #[cfg(feature = "feat13")]
    pub fn func_3407() {
        ext_0();
    }
}
pub mod inner_3408 {
    use super::*;
    pub fn func_3409() {
        match 4 {
            0 => {
                pub fn func_3410() {
                    let v_3411 = 57 + 11;
                    #[cfg(feature = "feat13")]
                    let v_3412 = 852;
                    println!("msg_3413 {}", 1);
                    #[cfg(feature = "feat8")]
                    let v_3414 = 185;
                }
                let v_3415 = ext_2();
                let v_3416 = ext_3();
                println!("msg_3417 {}", 1);
            }
            _ => {}
        }
        #[cfg(feature = "feat3")]
        let _ = 532;
        println!("msg_3418 {}", 1);
        if 18 > 10 {
            let _ = 824;
        } else {
            let v_3419 = 56;
            let v_3420 = func_2758();
        }
    }
    pub static COUNTER_3421: u32 = 0;
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_3422() {
    pub fn func_3423() {
        match 1 {
            0 => {
                let _ = 106;
                pub fn func_440() {
                    let w_3424 = 7;
                }
                println!("msg_3425 {}", 1);
            }
            _ => {}
        }
        match 4 {
            0 => {
                let v_3426 = ext_0();
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat6")]
pub enum Kind_3427 {
    Variant_3428,
    Variant_3429,
    Variant_3430,
}
pub fn func_3431() {
    pub fn func_3432() {
        let _ = 25 + 4;
        #[cfg(any(feature = "feat29", feature = "feat6"))]
        func_2156();
        let v_3433 = 324;
        match 0 {
            0 => {
                let v_3434 = func_941();
                let _ = 362;
            }
            _ => {}
        }
    }
    func_102();
}
pub const LIMIT_3435: u32 = func_3089();
use std::collections::HashMap;
pub fn func_3436() {
    let v_3437 = func_1504();
    match 2 {
        0 => {
            println!("msg_3438 {}", 1);
            let v_3439 = 9 + 25;
        }
        _ => {}
    }
    let v_3440 = func_1535();
}
use std::collections::HashMap;
pub mod inner_3441 {
    use super::*;
    pub struct Handle_3442;
    impl Handle_3442 {
        pub fn func_3443() {
            ext_2();
            match 4 {
                0 => {
                    let v_3444 = func_314();
                }
                _ => {}
            }
            let v_3445 = func_1144();
        }
        pub fn func_3446() {
            let v_3447 = 56 + 82;
            let v_3448 = 89 + 8;
        }
    }
}
pub fn func_3449() {
    #[cfg(feature = "feat14")]
    let v_3450 = func_760();
    match 2 {
        0 => {
            let v_3451 = func_1535();
            let v_3452 = 332;
        }
        _ => {}
    }
    if 5 > 10 {
        match 4 {
            0 => {
                let v_3453 = 451;
                match 3 {
                    0 => {
                        println!("msg_3454 {}", 1);
                    }
                    _ => {}
                }
                ext_3();
            }
            _ => {}
        }
        if 15 > 10 {
            pub fn func_3455() {
                let v_3456 = 910;
                let w_3457 = 5;
                let v_3458 = ext_1();
                let w_3459 = 1;
            }
            if 15 > 10 {
                let w_3460 = 0;
            } else {
                let w_3461 = 4;
                let w_3462 = 2;
                let w_3463 = 8;
                println!("msg_3464 {}", 1);
            }
        } else {
            if 12 > 10 {
                let v_3465 = ext_2();
                let v_3466 = func_2818();
            } else {
                ext_0();
                let v_3467 = 97 + 65;
                let w_3468 = 7;
                let w_3469 = 0;
            }
            println!("msg_3470 {}", 1);
            if 6 > 10 {
                let v_3471 = func_2329();
                let v_3472 = ext_3();
            } else {
                let _ = 20 + 67;
            }
        }
    } else {
        let v_3473 = ext_0();
    }
}
pub mod inner_3474 {
    use super::*;
    pub fn func_3475() {
        let v_3476 = func_365();
        match 4 {
            0 => {
                let v_3477 = ext_2();
                ext_0();
                if 2 > 10 {
                    let w_3478 = 0;
                    println!("msg_3479 {}", 1);
                    let w_3480 = 2;
                    println!("msg_3481 {}", 1);
                } else {
                    let v_3482 = func_2380();
                    let v_3483 = 98;
                    let _ = 76;
                    let w_3484 = 7;
                }
            }
            _ => {}
        }
        func_1056();
        func_432();
    }
    pub fn func_3485() {
        func_2332();
    }
}
#[cfg(all(feature = "feat27", not(feature = "feat0")))]
pub fn func_3486() {
    let v_3487 = ext_1();
    pub fn func_3488() {
        let v_3489 = ext_0();
        println!("msg_3490 {}", 1);
        let v_3491 = func_3432();
        match 0 {
            0 => {
                if 9 > 10 {
                    let v_3492 = ext_3();
                    let w_3493 = 7;
                    println!("msg_3494 {}", 1);
                    let w_3495 = 4;
                } else {
                    let v_3496 = 253;
                }
                let _ = 802;
                println!("msg_3497 {}", 1);
            }
            _ => {}
        }
    }
    match 3 {
        0 => {
            let v_3498 = 22 + 31;
            println!("msg_3499 {}", 1);
            let v_3500 = 97 + 24;
            let v_3501 = ext_0();
        }
        _ => {}
    }
}
pub enum Kind_3502 {
    Variant_3503,
    #[cfg(feature = "feat13")]
    Variant_3504,
    Variant_3505,
}
use std::collections::HashMap;
pub struct Handle_3506;
#[cfg(feature = "feat11")]
impl Handle_3506 {
    pub fn func_3507() {
        let v_3508 = 197;
    }
    #[cfg(feature = "feat29")]
    pub fn func_3509() {
        let v_3510 = func_2151();
        if 8 > 10 {
            if 11 > 10 {
                let v_3511 = ext_0();
                let w_3512 = 5;
            } else {
                func_2528();
            }
        } else {
            let _ = 19 + 80;
            if 15 > 10 {
                let w_3513 = 3;
                let _ = 688;
            } else {
                let v_3514 = 637;
                println!("msg_3515 {}", 1);
            }
            pub fn func_3516() {
                let v_3517 = func_1590();
            }
            let v_3518 = func_1803();
        }
        let v_3519 = 33 + 94;
        func_1313();
    }
}
pub fn func_3520() {
    ext_3();
    let v_3521 = 549;
    if 9 > 10 {
        pub fn func_3522() {
            pub fn func_3523() {
                let w_3524 = 4;
                func_3431();
                let w_3525 = 7;
            }
        }
        if 15 > 10 {
            if 13 > 10 {
                let v_3526 = ext_3();
                let w_3527 = 0;
                let w_3528 = 3;
                let w_3529 = 1;
            } else {
                let w_3530 = 7;
                let v_3531 = func_1581();
            }
            println!("msg_3532 {}", 1);
            let v_3533 = func_759();
            #[cfg(not(feature = "feat12"))]
            pub fn func_3534() {
                let _ = 556;
                ext_0();
                let w_3535 = 8;
                let w_3536 = 7;
            }
        } else {
            let v_3537 = 662;
            func_1786();
        }
        println!("msg_3538 {}", 1);
        let v_3539 = 292;
    } else {
        println!("msg_3540 {}", 1);
        println!("msg_3541 {}", 1);
        let v_3542 = 51 + 10;
        let v_3543 = func_1813();
    }
}
