pub mod module0;
#[cfg(feature = "feat24")]
pub mod module1;
pub mod module2;
pub mod module3;
pub mod module4;
pub mod module5;
pub mod module6;
pub mod module7;
#[cfg(all(feature = "feat27", not(feature = "feat26")))]
pub mod module8;
pub mod module9;
pub mod module10;
pub mod module11;
pub mod module12;
#[cfg(feature = "feat22")]
pub mod module13;
#[cfg(all(feature = "feat9", not(feature = "feat23")))]
pub mod module14;
#[cfg(not(feature = "feat21"))]
pub mod module15;
pub mod module16;
pub mod module17;
pub mod module18;
pub mod module19;
pub mod module20;
pub mod module21;
pub struct Record_3863 {
    pub field_3864: u32,
    pub field_3865: u32,
    pub field_3866: u32,
}
pub fn func_3867() {
    let v_3868 = 918;
    pub fn func_3869() {
        let v_3870 = func_2168();
        println!("msg_3871 {}", 1);
        let v_3872 = 57 + 48;
    }
}
#[cfg(any(feature = "feat14", feature = "feat5", feature = "feat24"))]
pub enum Kind_3873 {
    Variant_3874,
    Variant_3875,
    Variant_3876,
}
pub static COUNTER_3877: u32 = 0;
pub fn func_3878() {
    if 5 > 10 {
        #[cfg(any(feature = "feat1", feature = "feat6"))]
        let v_3879 = func_941();
        pub fn func_3880() {
            let v_3881 = 98 + 15;
            if 13 > 10 {
                let w_3882 = 8;
            } else {
                let w_3883 = 3;
            }
            let v_3884 = ext_3();
            #[cfg(feature = "feat19")]
            let v_3885 = ext_0();
        }
    } else {
        func_3013();
        #[cfg(feature = "feat4")]
        let v_3886 = 26 + 98;
        let v_3887 = 507;
    }
    let v_3888 = func_1706();
    match 0 {
        0 => {
            let v_3889 = func_236();
            let v_3890 = func_982();
        }
        _ => {}
    }
}
pub fn func_3891() {
    let v_3892 = 38 + 66;
    println!("msg_3893 {}", 1);
    #[cfg(feature = "feat14")]
    let v_3894 = 463;
}
pub struct Handle_3895;
impl Handle_3895 {
    pub fn func_3896() {
        if 4 > 10 {
            if 9 > 10 {
                let v_3897 = 295;
            } else {
                let v_3898 = 46 + 51;
                let w_3899 = 0;
                let _ = 59 + 79;
                let v_3900 = func_939();
            }
            let _ = 634;
            let v_3901 = func_2495();
            func_611();
        } else {
            let v_3902 = func_527();
            pub fn func_3903() {
                #[cfg(feature = "feat9")]
                let v_3904 = 17 + 59;
                println!("msg_3905 {}", 1);
                let _ = 58 + 62;
            }
            let v_3906 = func_1532();
            let v_3907 = 86 + 55;
        }
    }
    pub fn func_3908() {
        let v_3909 = 952;
    }
}
pub fn func_3910() {
    #[cfg(feature = "feat11")]
    let v_3911 = 57 + 80;
    if 18 > 10 {
        println!("msg_3912 {}", 1);
        ext_0();
        if 15 > 10 {
            pub fn func_239() {
                let v_3913 = ext_3();
                let v_3914 = func_2662();
                let v_3915 = func_201();
                let v_3916 = func_2072();
            }
            func_3275();
        } else {
            let v_3917 = func_1898();
            #[cfg(feature = "feat13")]
            let v_3918 = ext_1();
            println!("msg_3919 {}", 1);
        }
    } else {
        #[cfg(feature = "feat16")]
        let v_3920 = ext_0();
    }
    println!("msg_3921 {}", 1);
    let v_3922 = 91 + 25;
}
pub fn func_2455() {
    func_790();
}
pub struct Record_3923 {
    pub field_3924: u32,
    pub field_3925: u32,
    pub field_3926: u32,
}
pub fn func_3927() {
    let v_3928 = func_2072();
    let v_3929 = func_1800();
    let v_3930 = func_2067();
    match 4 {
        0 => {
            println!("msg_3931 {}", 1);
        }
        _ => {}
    }
}
pub struct Record_3932 {
    pub field_3933: u32,
    #[cfg(not(feature = "feat2"))]
    pub field_3934: u32,
    pub field_3935: u32,
}
pub fn func_3936() {
    let v_3937 = 28 + 0;
    let v_3938 = 832;
    let v_3939 = func_3841();
    let v_3940 = ext_0();
}
pub fn func_3941() {
    let v_3942 = ext_0();
    func_2956();
}
#[cfg(feature = "feat24")]
pub type Alias_3943 = u64;
#[cfg(feature = "feat28")]
pub fn func_3944() {
    if 19 > 10 {
        let v_3945 = 24 + 4;
    } else {
        let v_3946 = ext_3();
        func_1453();
        let v_3947 = ext_1();
        #[cfg(feature = "feat29")]
        let v_3948 = ext_1();
    }
    if 15 > 10 {
        let v_3949 = func_1547();
        let v_3950 = ext_2();
    } else {
        match 3 {
            0 => {
                let v_3951 = 96 + 90;
                let v_3952 = 189;
                pub fn func_3953() {
                    func_2904();
                    ext_3();
                    func_116();
                    let v_3954 = 13 + 66;
                }
            }
            _ => {}
        }
    }
    func_231();
}
#[cfg(feature = "feat14")]
pub enum Kind_3955 {
    #[cfg(any(feature = "feat22", feature = "feat20"))]
    Variant_3956,
    Variant_3957,
    Variant_3958,
    #[cfg(not(feature = "feat17"))]
    Variant_3959,
}
pub struct Handle_3960;
impl Handle_3960 {
    pub fn func_3961() {
        let v_3962 = 774;
    }
    pub fn func_3963() {
        let v_3964 = 55 + 42;
        let v_3965 = func_78();
    }
}
pub fn func_3966() {
    pub fn func_3967() {
        let _ = 284;
        let v_3968 = 852;
        println!("msg_3969 {}", 1);
        let v_3970 = ext_1();
    }
    println!("msg_3971 {}", 1);
}
#[cfg(any(feature = "feat27", feature = "feat4", feature = "feat28"))]
pub mod inner_3972 {
    use super::*;
    pub fn func_3973() {
        let v_3974 = 157;
        let v_3975 = 44 + 79;
    }
}
pub fn func_3976() {
    let v_3977 = ext_0();
}
#[cfg(feature = "feat14")]
pub fn func_3978() {
    pub fn func_3979() {
        if 0 > 10 {
            #[cfg(not(feature = "feat2"))]
            let v_3980 = func_2256();
        } else {
            func_1995();
        }
        println!("msg_3981 {}", 1);
    }
    println!("msg_3982 {}", 1);
}
pub mod inner_3983 {
    use super::*;
    #[cfg(feature = "feat8")]
    pub enum Kind_3984 {
        Variant_3985,
        Variant_3986,
        Variant_3987,
    }
}
#[cfg(feature = "feat28")]
pub static COUNTER_3988: u32 = 0;
pub fn func_3475() {
    func_523();
}
pub struct Handle_3989;
#[cfg(any(feature = "feat28", feature = "feat6"))]
impl Handle_3989 {
    pub fn func_3990() {
        println!("msg_3991 {}", 1);
        match 4 {
            0 => {
                func_3237();
                func_984();
                let _ = 58 + 36;
            }
            _ => {}
        }
        let v_3992 = 706;
    }
    pub fn func_3993() {
        let _ = 129;
    }
}
pub fn func_3994() {
    let v_3995 = 789;
}
pub enum Kind_3996 {
    Variant_3997,
    #[cfg(feature = "feat8")]
    Variant_3998,
    Variant_3999,
}
pub fn func_3695() {
    let v_4000 = ext_3();
    pub fn func_4001() {
        let v_4002 = 845;
        println!("msg_4003 {}", 1);
        #[cfg(feature = "feat27")]
        let v_4004 = ext_0();
    }
}
pub type Alias_4005 = u64;
pub fn func_1236() {
    println!("msg_4006 {}", 1);
}
pub enum Kind_4007 {
    Variant_4008,
    #[cfg(feature = "feat28")]
    Variant_4009,
}
pub fn func_4010() {
    #[cfg(any(feature = "feat22", feature = "feat8", feature = "feat4"))]
    func_2323();
    pub fn func_4011() {
        let _ = 966;
        #[cfg(any(feature = "feat22", feature = "feat27", feature = "feat24"))]
        let _ = 78 + 39;
        pub fn func_4012() {
            let v_4013 = func_1079();
            match 4 {
                0 => {
                    let _ = 41 + 14;
                    #[cfg(feature = "feat27")]
                    ext_2();
                }
                _ => {}
            }
            #[cfg(feature = "feat19")]
            ext_3();
            match 0 {
                0 => {
                    let v_4014 = 773;
                    let _ = 704;
                    let w_4015 = 6;
                }
                _ => {}
            }
        }
        let v_4016 = func_646();
    }
    match 4 {
        0 => {
            func_681();
            pub fn func_4017() {
                let v_4018 = func_483();
                func_1793();
            }
            let v_4019 = func_644();
        }
        _ => {}
    }
}
pub type Alias_4020 = u64;
pub type Alias_4021 = u64;
pub fn func_4022() {
    pub fn func_129() {
        match 3 {
            0 => {
                let v_4023 = func_3117();
                #[cfg(feature = "feat29")]
                let v_4024 = 82 + 62;
                ext_3();
            }
            _ => {}
        }
        let v_4025 = func_2397();
        println!("msg_4026 {}", 1);
    }
    ext_1();
}
pub fn func_4027() {
    #[cfg(not(feature = "feat12"))]
    ext_2();
    println!("msg_4028 {}", 1);
    func_1722();
    func_3520();
}
pub enum Kind_4029 {
    Variant_4030,
    Variant_4031,
}
pub mod inner_4032 {
    use super::*;
    pub fn func_2770() {
        pub fn func_4033() {
            if 16 > 10 {
                let w_4034 = 6;
                func_1962();
            } else {
                let w_4035 = 7;
                let w_4036 = 6;
                let v_4037 = 40 + 5;
                let _ = 769;
            }
            println!("msg_4038 {}", 1);
            pub fn func_4039() {
                println!("msg_4040 {}", 1);
                #[cfg(all(feature = "feat19", not(feature = "feat15")))]
                let _ = 8 + 60;
                println!("msg_4041 {}", 1);
                let w_4042 = 0;
            }
        }
        let _ = 79 + 79;
        let v_4043 = ext_1();
    }
}
pub fn func_4044() {
    func_2673();
}
pub type Alias_4045 = u64;
