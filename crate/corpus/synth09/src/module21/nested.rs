pub fn func_3780() {
    let v_3781 = func_1184();
    func_2783();
    let v_3782 = ext_0();
}
pub struct Record_3783 {
    pub field_3784: u32,
    pub field_3785: u32,
    pub field_3786: u32,
}
pub struct Handle_3787;
#[cfg(feature = "feat11")]
impl Handle_3787 {
    pub fn func_3788() {
        println!("msg_3789 {}", 1);
        let v_3790 = func_926();
        #[cfg(not(feature = "feat15"))]
        let v_3791 = 939;
    }
}
use std::collections::HashMap;
pub fn func_3792() {
    let v_3793 = func_122();
    if 3 > 10 {
        func_3606();
        let v_3794 = 84 + 21;
    } else {
        pub fn func_3795() {
            if 1 > 10 {
                func_2904();
                let v_3796 = 51 + 25;
                #[cfg(feature = "feat1")]
                let v_3797 = func_819();
                let v_3798 = func_1746();
            } else {
                let w_3799 = 0;
                let v_3800 = func_407();
                let w_3801 = 4;
            }
            match 3 {
                0 => {
                    func_33();
                }
                _ => {}
            }
        }
        match 4 {
            0 => {
                let v_3802 = 34 + 40;
                let v_3803 = func_1002();
                pub fn func_2419() {
                    let v_3804 = 943;
                    let v_3805 = ext_1();
                }
                ext_3();
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat20")]
pub fn func_3806() {
    func_1865();
    ext_2();
    let v_3807 = func_1898();
}
#[cfg(feature = "feat24")]
pub static COUNTER_3808: u32 = 0;
pub struct Record_3809 {
    pub field_3810: u32,
    #[cfg(feature = "feat22")]
    pub field_3811: u32,
}
#[cfg(not(feature = "feat26"))]
pub const LIMIT_3812: u32 = func_2956();
pub fn func_3813() {
    if 2 > 10 {
        println!("msg_3814 {}", 1);
    } else {
        let v_3815 = ext_0();
        #[cfg(feature = "feat19")]
        let v_3816 = 9 + 47;
    }
}
pub static COUNTER_3817: u32 = 0;
pub fn func_3818() {
    ext_3();
    ext_3();
    ext_1();
    let v_3819 = 152;
}
#[cfg(any(feature = "feat8", feature = "feat24", feature = "feat1"))]
pub enum Kind_3820 {
    Variant_3821,
    Variant_3822,
    Variant_3823,
    Variant_3824,
}
pub struct Handle_3825;
#[cfg(any(feature = "feat5", feature = "feat24"))]
impl Handle_3825 {
    pub fn func_3826() {
        let v_3827 = func_3703();
        let _ = 218;
        println!("msg_3828 {}", 1);
    }
    pub fn func_3829() {
        if 12 > 10 {
            println!("msg_3830 {}", 1);
            #[cfg(feature = "feat27")]
            let v_3831 = 424;
        } else {
            func_1512();
        }
        let v_3832 = ext_1();
        let _ = 658;
        match 0 {
            0 => {
                let v_3833 = ext_1();
                if 0 > 10 {
                    #[cfg(feature = "feat29")]
                    ext_1();
                    let v_3834 = func_3818();
                    let v_3835 = func_3742();
                    let w_3836 = 8;
                } else {
                    let _ = 273;
                    ext_2();
                }
                let v_3837 = ext_2();
            }
            _ => {}
        }
    }
}
pub struct Handle_3838;
impl Handle_3838 {
    #[cfg(not(feature = "feat23"))]
    pub fn func_982() {
        println!("msg_3839 {}", 1);
        let v_3840 = func_1086();
        func_3557();
    }
    pub fn func_3841() {
        match 1 {
            0 => {
                match 4 {
                    0 => {
                        let v_3842 = func_2758();
                        let v_3843 = func_953();
                    }
                    _ => {}
                }
                let v_3844 = func_2786();
                let v_3845 = 337;
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat14")]
pub fn func_1616() {
    #[cfg(not(feature = "feat7"))]
    pub fn func_3846() {
        #[cfg(not(feature = "feat26"))]
        let v_3847 = 188;
        if 17 > 10 {
            pub fn func_3848() {
                let w_3849 = 2;
                let v_3850 = 6 + 13;
                println!("msg_3851 {}", 1);
            }
            func_1590();
            let v_3852 = 90 + 96;
        } else {
            let v_3853 = func_3180();
            println!("msg_3854 {}", 1);
        }
    }
    let v_3855 = ext_2();
}
pub type Alias_3856 = u64;
#[cfg(feature = "feat3")]
pub fn func_3857() {
    pub fn func_3858() {
        let v_3859 = 883;
        let v_3860 = func_1544();
    }
    if 13 > 10 {
        let v_3861 = 82 + 27;
    } else {
        match 3 {
            0 => {
                let _ = 99 + 11;
                ext_2();
            }
            _ => {}
        }
        println!("msg_3862 {}", 1);
    }
}
