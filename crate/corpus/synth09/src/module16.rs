pub type Alias_2853 = u64;
pub const LIMIT_2854: u32 = 54;
use std::collections::HashMap;
pub fn func_2855() {
    let v_2856 = func_674();
    let v_2857 = ext_0();
}
pub static COUNTER_2858: u32 = 0;
#[cfg(feature = "feat8")]
pub fn func_2859() {
    func_857();
    println!("msg_2860 {}", 1);
    let v_2861 = 57;
}
pub static COUNTER_2862: u32 = 0;
pub fn func_2863() {
    if 11 > 10 {
        if 11 > 10 {
            func_2170();
            if 6 > 10 {
                let w_2864 = 7;
                let w_2865 = 7;
            } else {
                let w_2866 = 2;
                #[cfg(feature = "feat13")]
                let v_2867 = 106;
            }
        } else {
            println!("msg_2868 {}", 1);
            let v_2869 = func_1441();
            let v_2870 = 35;
            let v_2871 = 751;
        }
    } else {
        func_2007();
    }
}
pub fn func_2872() {
    let v_2873 = func_363();
    #[cfg(feature = "feat11")]
    let v_2874 = func_1079();
    pub fn func_2875() {
        let _ = 74 + 71;
        let v_2876 = func_2855();
        match 2 {
            0 => {
                let v_2877 = func_934();
                let v_2878 = ext_3();
                #[cfg(feature = "feat27")]
                let _ = 31 + 53;
            }
            _ => {}
        }
        #[cfg(feature = "feat5")]
        let v_2879 = ext_0();
    }
    #[cfg(all(feature = "feat27", not(feature = "feat2")))]
    func_365();
}
pub const LIMIT_2880: u32 = 41 + 34;
pub enum Kind_2881 {
    #[cfg(any(feature = "feat16", feature = "feat6"))]
    Variant_2882,
    Variant_2883,
}
pub struct Handle_2884;
impl Handle_2884 {
    pub fn func_2885() {
        #[cfg(feature = "feat19")]
        let _ = 193;
        let v_2886 = ext_3();
        #[cfg(feature = "feat5")]
        let v_2887 = 669;
        func_2170();
    }
    pub fn func_2888() {
        let v_2889 = func_2422();
    }
}
pub fn func_1898() {
    let v_2890 = func_706();
    println!("msg_2891 {}", 1);
    match 0 {
        0 => {
            let v_2892 = func_424();
            let v_2893 = 79 + 43;
        }
        _ => {}
    }
    pub fn func_2894() {
        println!("msg_2895 {}", 1);
        if 8 > 10 {
            #[cfg(not(feature = "feat23"))]
            let v_2896 = func_20();
            func_2459();
            #[cfg(all(feature = "feat14", not(feature = "feat10")))]
            pub fn func_2897() {
                let v_2898 = 60;
                let _ = 282;
            }
            let v_2899 = ext_0();
        } else {
            match 1 {
                0 => {
                    let w_2900 = 2;
                    let v_2901 = func_2786();
                }
                _ => {}
            }
            println!("msg_2902 {}", 1);
        }
        println!("msg_2903 {}", 1);
        pub fn func_2904() {
            let v_2905 = 54;
        }
    }
}
pub fn func_427() {
    if 12 > 10 {
        let v_2906 = 252;
        if 17 > 10 {
            #[cfg(feature = "feat6")]
            let v_2907 = func_892();
            let v_2908 = 84 + 89;
            let v_2909 = 32 + 88;
            if 5 > 10 {
                #[cfg(feature = "feat9")]
                let v_2910 = func_2170();
                let v_2911 = func_1496();
                #[cfg(feature = "feat14")]
                let _ = 25 + 18;
            } else {
                #[cfg(feature = "feat14")]
                let v_2912 = 97 + 27;
            }
        } else {
            if 2 > 10 {
                let v_2913 = 205;
                let _ = 207;
            } else {
                let w_2914 = 6;
                let v_2915 = ext_1();
                let w_2916 = 8;
                let _ = 20 + 91;
            }
            let v_2917 = func_940();
        }
        pub fn func_2918() {
            match 4 {
                0 => {
                    let w_2919 = 7;
                }
                _ => {}
            }
            if 6 > 10 {
                let w_2920 = 8;
                println!("msg_2921 {}", 1);
                let w_2922 = 5;
                let _ = 706;
            } else {
                func_33();
            }
            if 9 > 10 {
                let w_2923 = 3;
            } else {
                #[cfg(feature = "feat6")]
                let v_2924 = 88 + 2;
                let v_2925 = 470;
            }
            println!("msg_2926 {}", 1);
        }
        let v_2927 = ext_1();
    } else {
        match 1 {
            0 => {
                match 3 {
                    0 => {
                        let v_2928 = 34 + 91;
                        let w_2929 = 8;
                        let w_2930 = 1;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    let _ = 64 + 33;
    println!("msg_2931 {}", 1);
    let v_2932 = 63 + 18;
}
#[cfg(feature = "feat14")]
pub type Alias_2933 = u64;
#[cfg(not(feature = "feat7"))]
pub fn func_2934() {
    func_2734();
    println!("msg_2935 {}", 1);
    let v_2936 = func_1824();
}
pub mod nested;
