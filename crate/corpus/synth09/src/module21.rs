pub fn func_3698() {
    func_2770();
    match 0 {
        0 => {
            let v_3699 = func_2569();
            let _ = 54 + 21;
            match 1 {
                0 => {
                    let v_3700 = 558;
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 4 {
        0 => {
            let v_3701 = func_2365();
        }
        _ => {}
    }
    let _ = 90 + 56;
}
pub const LIMIT_3702: u32 = func_1150();
pub fn func_3703() {
    println!("msg_3704 {}", 1);
    #[cfg(all(feature = "feat8", not(feature = "feat12")))]
    let v_3705 = func_2707();
}
#[cfg(feature = "feat1")]
pub const LIMIT_3706: u32 = func_2370();
pub struct Handle_3707;
impl Handle_3707 {
    pub fn func_3708() {
        if 7 > 10 {
            match 0 {
                0 => {
                    let v_3709 = 252;
                    let v_3710 = ext_3();
                }
                _ => {}
            }
            let v_3711 = 65 + 86;
            let v_3712 = ext_1();
            match 2 {
                0 => {
                    let w_3713 = 4;
                    let w_3714 = 1;
                    #[cfg(any(feature = "feat14", feature = "feat28"))]
                    let _ = 378;
                }
                _ => {}
            }
        } else {
            match 4 {
                0 => {
                    func_3657();
                }
                _ => {}
            }
            let _ = 827;
            println!("msg_3715 {}", 1);
            let v_3716 = ext_1();
        }
    }
}
pub fn func_3717() {
    let _ = 751;
    let v_3718 = func_3410();
    println!("msg_3719 {}", 1);
}
pub mod inner_3720 {
    use super::*;
    #[cfg(not(feature = "feat10"))]
    pub fn func_3721() {
        match 3 {
            0 => {
                match 2 {
                    0 => {
                        let v_3722 = 27 + 49;
                    }
                    _ => {}
                }
                let v_3723 = func_3105();
                let _ = 903;
            }
            _ => {}
        }
        println!("msg_3724 {}", 1);
        ext_0();
    }
    pub static COUNTER_3725: u32 = 0;
    pub fn func_3726() {
        match 2 {
            0 => {
                #[cfg(all(feature = "feat3", not(feature = "feat10")))]
                let v_3727 = 664;
                let v_3728 = ext_0();
            }
            _ => {}
        }
        match 2 {
            0 => {
                match 4 {
                    0 => {
                        let w_3729 = 5;
                        println!("msg_3730 {}", 1);
                        println!("msg_3731 {}", 1);
                        let w_3732 = 8;
                    }
                    _ => {}
                }
                println!("msg_3733 {}", 1);
                let v_3734 = func_1397();
                if 7 > 10 {
                    println!("msg_3735 {}", 1);
                    let w_3736 = 2;
                    println!("msg_3737 {}", 1);
                    let w_3738 = 5;
                } else {
                    let v_3739 = func_2615();
                    let v_3740 = func_364();
                    let _ = 114;
                    #[cfg(feature = "feat19")]
                    let v_3741 = 201;
                }
            }
            _ => {}
        }
    }
}
pub fn func_3742() {
    if 7 > 10 {
        func_1824();
        if 9 > 10 {
            let v_3743 = 25 + 58;
            println!("msg_3744 {}", 1);
        } else {
            #[cfg(any(feature = "feat9", feature = "feat11"))]
            let v_3745 = 530;
        }
        #[cfg(any(feature = "feat5", feature = "feat24", feature = "feat9"))]
        let v_3746 = 560;
    } else {
        let v_3747 = 49 + 35;
        if 16 > 10 {
            let v_3748 = func_2999();
            let v_3749 = ext_0();
            println!("msg_3750 {}", 1);
            let v_3751 = ext_0();
        } else {
            match 4 {
                0 => {
                    #[cfg(not(feature = "feat10"))]
                    func_870();
                }
                _ => {}
            }
            #[cfg(feature = "feat16")]
            ext_1();
            pub fn func_3752() {
                func_289();
                let w_3753 = 7;
                let w_3754 = 4;
                let v_3755 = func_3703();
            }
            if 3 > 10 {
                func_2845();
                let v_3756 = 536;
                func_222();
            } else {
                let w_3757 = 4;
            }
        }
        let v_3758 = func_718();
        func_1203();
    }
    let _ = 52 + 43;
}
pub type Alias_3759 = u64;
#[cfg(feature = "feat6")]
pub fn func_3760() {
    let v_3761 = ext_2();
    if 11 > 10 {
        let v_3762 = 664;
        #[cfg(feature = "feat24")]
        let v_3763 = 637;
        pub fn func_3764() {
            let v_3765 = ext_0();
        }
        let v_3766 = func_1169();
    } else {
        if 19 > 10 {
            if 12 > 10 {
                let w_3767 = 7;
                let v_3768 = func_1263();
                func_1228();
            } else {
                let _ = 579;
                func_1147();
            }
            ext_3();
        } else {
            if 13 > 10 {
                let _ = 876;
                let v_3769 = func_2527();
                let _ = 43 + 79;
                let _ = 99 + 46;
            } else {
                let v_3770 = func_1813();
            }
            println!("msg_3771 {}", 1);
            if 7 > 10 {
                func_3628();
                #[cfg(any(feature = "feat22", feature = "feat24", feature = "feat22"))]
                let _ = 453;
                #[cfg(feature = "feat28")]
                let v_3772 = ext_1();
                let w_3773 = 7;
            } else {
                let v_3774 = 86 + 8;
                let v_3775 = ext_2();
            }
            let v_3776 = func_1512();
        }
    }
    let v_3777 = func_407();
    pub fn func_3778() {
        println!("msg_3779 {}", 1);
    }
}
pub mod nested;
