pub enum Kind_3544 {
    Variant_3545,
}
use std::collections::HashMap;
pub static COUNTER_3546: u32 = 0;
#[cfg(feature = "feat13")]
pub type Alias_3547 = u64;
pub fn func_3548() {
    let _ = 979;
    let v_3549 = func_2038();
}
pub fn func_3550() {
    #[cfg(feature = "feat29")]
    let _ = 54 + 96;
}
pub enum Kind_3551 {
    Variant_3552,
    #[cfg(not(feature = "feat0"))]
    Variant_3553,
}
pub const LIMIT_3554: u32 = ext_2();
#[cfg(feature = "feat6")]
pub enum Kind_3555 {
    Variant_3556,
}
pub fn func_3557() {
    match 2 {
        0 => {
            func_1439();
        }
        _ => {}
    }
    if 11 > 10 {
        let _ = 60;
        let v_3558 = 737;
        func_2806();
    } else {
        let v_3559 = func_3402();
        let v_3560 = func_2749();
        let v_3561 = func_3264();
        let _ = 843;
    }
    let v_3562 = func_1766();
}
pub type Alias_3563 = u64;
pub fn func_3564() {
    func_2591();
    #[cfg(feature = "feat27")]
    let v_3565 = func_1804();
}
pub enum Kind_3566 {
    Variant_3567,
    Variant_3568,
    Variant_3569,
}
pub static COUNTER_3570: u32 = 0;
pub fn func_3571() {
    match 0 {
        0 => {
            pub fn func_3572() {
                let v_3573 = ext_2();
                match 2 {
                    0 => {
                        func_3354();
                    }
                    _ => {}
                }
            }
            println!("msg_3574 {}", 1);
        }
        _ => {}
    }
    ext_3();
    let v_3575 = 467;
}
pub fn func_3576() {
    let v_3577 = func_2228();
}
use std::collections::HashMap;
pub struct Handle_3578;
impl Handle_3578 {
    pub fn func_3579() {
        #[cfg(feature = "feat4")]
        let _ = 438;
        #[cfg(feature = "feat27")]
        func_2035();
        println!("msg_3580 {}", 1);
        let v_3581 = 365;
    }
}
pub const LIMIT_3582: u32 = 63 + 33;
pub fn func_3583() {
    let _ = 66 + 50;
    if 12 > 10 {
        func_3407();
        pub fn func_3584() {
            pub fn func_3585() {
                let v_3586 = 61 + 1;
                #[cfg(feature = "feat6")]
                let v_3587 = ext_3();
                let v_3588 = 838;
                println!("msg_3589 {}", 1);
            }
            let v_3590 = ext_2();
            match 3 {
                0 => {
                    let v_3591 = func_3572();
                    let v_3592 = func_2419();
                    func_2551();
                    let v_3593 = ext_2();
                }
                _ => {}
            }
            let v_3594 = func_66();
        }
        if 17 > 10 {
            let _ = 812;
            match 4 {
                0 => {
                    let w_3595 = 2;
                }
                _ => {}
            }
            println!("msg_3596 {}", 1);
        } else {
            #[cfg(not(feature = "feat25"))]
            pub fn func_2127() {
                let w_3597 = 6;
                let _ = 478;
            }
            println!("msg_3598 {}", 1);
        }
        #[cfg(feature = "feat4")]
        pub fn func_1924() {
            match 0 {
                0 => {
                    #[cfg(any(feature = "feat11", feature = "feat20"))]
                    let v_3599 = 66 + 55;
                    let v_3600 = func_1731();
                }
                _ => {}
            }
        }
    } else {
        println!("msg_3601 {}", 1);
        let v_3602 = ext_1();
        let v_3603 = ext_0();
    }
    let v_3604 = ext_3();
}
pub struct Handle_3605;
#[cfg(feature = "feat29")]
impl Handle_3605 {
    pub fn func_3606() {
        match 2 {
            0 => {
                func_3024();
                let v_3607 = ext_2();
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat3")]
pub fn func_3608() {
    #[cfg(feature = "feat29")]
    ext_2();
    println!("msg_3609 {}", 1);
    #[cfg(feature = "feat24")]
    let v_3610 = func_2814();
}
pub enum Kind_3611 {
    Variant_3612,
    Variant_3613,
}
use std::collections::HashMap;
pub type Alias_3614 = u64;
pub fn func_1701() {
    println!("msg_3615 {}", 1);
    let v_3616 = func_1094();
    let v_3617 = func_177();
}
pub mod inner_3618 {
    use super::*;
    #[cfg(feature = "feat22")]
    pub enum Kind_3619 {
        #[cfg(not(feature = "feat17"))]
        Variant_3620,
    }
    use std::collections::HashMap;
    pub fn func_3621() {
        let _ = 357;
    }
}
pub static COUNTER_3622: u32 = 0;
pub fn func_3623() {
    let v_3624 = 803;
}
pub const LIMIT_3625: u32 = func_1759();
pub fn func_3523() {
    println!("msg_3626 {}", 1);
    let _ = 39 + 38;
}
pub fn func_3627() {
    let _ = 714;
    pub fn func_3628() {
        let v_3629 = ext_1();
    }
    let v_3630 = 143;
}
use std::collections::HashMap;
pub static COUNTER_3631: u32 = 0;
pub struct Record_3632 {
    pub field_3633: u32,
}
#[cfg(feature = "feat5")]
pub struct Record_3634 {
    #[cfg(feature = "feat20")]
    pub field_3635: u32,
}
pub const LIMIT_3636: u32 = 54 + 74;
#[cfg(any(feature = "feat24", feature = "feat6", feature = "feat27"))]
pub type Alias_3637 = u64;
pub fn func_3638() {
    let v_3639 = func_2803();
    let _ = 30 + 54;
}
pub struct Handle_3640;
impl Handle_3640 {
    pub fn func_3641() {
        let v_3642 = ext_0();
        match 0 {
            0 => {
                if 3 > 10 {
                    let _ = 45 + 47;
                    let w_3643 = 4;
                    let v_3644 = func_3036();
                    let v_3645 = func_1236();
                } else {
                    func_2200();
                }
                ext_1();
                let v_3646 = func_576();
                let v_3647 = func_231();
            }
            _ => {}
        }
        let v_3648 = ext_0();
        let v_3649 = ext_0();
    }
}
pub fn func_3650() {
    #[cfg(any(feature = "feat9", feature = "feat8", feature = "feat13"))]
    func_982();
    match 2 {
        0 => {
            println!("msg_3651 {}", 1);
            let _ = 13 + 44;
            match 3 {
                0 => {
                    let v_3652 = func_1791();
                    match 0 {
                        0 => {
                            func_3251();
                            func_3247();
                        }
                        _ => {}
                    }
                    let v_3653 = ext_1();
                }
                _ => {}
            }
            match 2 {
                0 => {
                    ext_0();
                    pub fn func_3654() {
                        let w_3655 = 3;
                        let w_3656 = 8;
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
}
#[cfg(any(feature = "feat5", feature = "feat6", feature = "feat16"))]
pub fn func_3657() {
    match 1 {
        0 => {
            let v_3658 = func_1800();
            ext_0();
            let v_3659 = ext_0();
        }
        _ => {}
    }
}
pub struct Handle_3660;
impl Handle_3660 {
    #[cfg(feature = "feat1")]
    pub fn func_3661() {
        let v_3662 = 23 + 60;
    }
}
pub struct Handle_3663;
impl Handle_3663 {
    pub fn func_2642() {
        if 0 > 10 {
            let v_3664 = 68 + 65;
            let v_3665 = 293;
            if 10 > 10 {
                func_2718();
                #[cfg(any(feature = "feat4", feature = "feat13", feature = "feat5"))]
                func_3040();
            } else {
                let v_3666 = 14 + 97;
                #[cfg(feature = "feat14")]
                let v_3667 = 55 + 85;
                println!("msg_3668 {}", 1);
                let w_3669 = 3;
            }
        } else {
            match 3 {
                0 => {
                    let v_3670 = ext_0();
                    let v_3671 = 49 + 36;
                }
                _ => {}
            }
            match 1 {
                0 => {
                    let v_3672 = func_2333();
                    let w_3673 = 4;
                }
                _ => {}
            }
            let v_3674 = func_1800();
            let v_3675 = ext_0();
        }
    }
    pub fn func_3676() {
        #[cfg(feature = "feat20")]
        let v_3677 = func_1064();
        if 9 > 10 {
            func_530();
            let v_3678 = func_1148();
        } else {
            let v_3679 = func_2215();
        }
        match 0 {
            0 => {
                pub fn func_3680() {
                    let v_3681 = 955;
                    let v_3682 = 220;
                }
                let _ = 3 + 97;
                match 1 {
                    0 => {
                        println!("msg_3683 {}", 1);
                        let w_3684 = 3;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub static COUNTER_3685: u32 = 0;
pub mod inner_3686 {
    use super::*;
    #[cfg(any(feature = "feat8", feature = "feat5", feature = "feat5"))]
    pub const LIMIT_3687: u32 = ext_1();
    pub fn func_3688() {
        match 4 {
            0 => {
                let v_3689 = 86 + 29;
                #[cfg(feature = "feat4")]
                let v_3690 = 31 + 35;
            }
            _ => {}
        }
        let v_3691 = ext_0();
    }
    #[cfg(feature = "feat13")]
    pub fn func_3692() {
        let _ = 45;
        let v_3693 = 93 + 64;
        let v_3694 = 38 + 29;
        #[cfg(feature = "feat24")]
        func_1360();
    }
}
pub fn func_3695() {
    let v_3696 = 103;
    let v_3697 = func_1620();
}
