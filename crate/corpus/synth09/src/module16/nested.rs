pub mod inner_2937 {
    use super::*;
    pub struct Record_2938 {
        pub field_2939: u32,
        pub field_2940: u32,
    }
}
use std::collections::HashMap;
pub fn func_2941() {
    match 3 {
        0 => {
            pub fn func_2942() {
                pub fn func_1020() {
                    #[cfg(feature = "feat29")]
                    let _ = 45 + 26;
                    let v_2943 = 81 + 71;
                }
                func_1640();
            }
            let _ = 756;
            match 4 {
                0 => {
                    let v_2944 = 528;
                    if 6 > 10 {
                        let v_2945 = 321;
                        let _ = 919;
                        let w_2946 = 3;
                        let v_2947 = 544;
                    } else {
                        let v_2948 = 77 + 0;
                        let v_2949 = 60 + 38;
                        let w_2950 = 1;
                        let v_2951 = func_2440();
                    }
                    pub fn func_2952() {
                        let v_2953 = 2 + 73;
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    let v_2954 = ext_0();
    println!("msg_2955 {}", 1);
}
#[cfg(feature = "feat20")]
pub fn func_2956() {
    println!("msg_2957 {}", 1);
    pub fn func_2958() {
        if 9 > 10 {
            let v_2959 = 895;
            let _ = 246;
            let v_2960 = func_1104();
            let v_2961 = func_1871();
        } else {
            if 12 > 10 {
                let _ = 861;
                let v_2962 = func_1104();
                let _ = 406;
                func_385();
            } else {
                let v_2963 = ext_2();
                func_145();
            }
        }
        println!("msg_2964 {}", 1);
        let v_2965 = ext_0();
    }
}
use std::collections::HashMap;
pub fn func_2966() {
    func_926();
    match 0 {
        0 => {
            let v_2967 = 201;
            ext_1();
        }
        _ => {}
    }
}
#[cfg(not(feature = "feat26"))]
pub fn func_2968() {
    let _ = 709;
}
pub mod inner_2969 {
    use super::*;
    pub fn func_2970() {
        match 2 {
            0 => {
                #[cfg(feature = "feat11")]
                let v_2971 = func_1056();
                #[cfg(feature = "feat24")]
                let v_2972 = 129;
                let v_2973 = ext_3();
                #[cfg(feature = "feat11")]
                func_1866();
            }
            _ => {}
        }
    }
}
use std::collections::HashMap;
pub struct Record_2974 {
    pub field_2975: u32,
}
pub fn func_2976() {
    func_1202();
    if 18 > 10 {
        if 2 > 10 {
            let v_2977 = func_2188();
        } else {
            #[cfg(any(feature = "feat9", feature = "feat24"))]
            let v_2978 = func_1184();
            if 10 > 10 {
                func_160();
                let v_2979 = 106;
            } else {
                #[cfg(feature = "feat19")]
                let v_2980 = ext_2();
                #[cfg(any(feature = "feat14", feature = "feat13", feature = "feat14"))]
                let v_2981 = 18 + 39;
            }
            println!("msg_2982 {}", 1);
            ext_2();
        }
        #[cfg(feature = "feat27")]
        let v_2983 = 705;
        ext_2();
    } else {
        let v_2984 = 29 + 61;
    }
    let v_2985 = func_102();
}
pub enum Kind_2986 {
    Variant_2987,
}
pub struct Record_2988 {
    pub field_2989: u32,
    pub field_2990: u32,
    #[cfg(feature = "feat14")]
    pub field_2991: u32,
}
use std::collections::HashMap;
pub fn func_2992() {
    let v_2993 = ext_3();
}
pub static COUNTER_2994: u32 = 0;
pub fn func_2995() {
    let v_2996 = func_411();
    let v_2997 = func_2252();
    match 3 {
        0 => {
            println!("msg_2998 {}", 1);
            pub fn func_2999() {
                if 3 > 10 {
                    let v_3000 = ext_1();
                    println!("msg_3001 {}", 1);
                    let w_3002 = 0;
                    let w_3003 = 3;
                } else {
                    let _ = 575;
                    let v_3004 = 49 + 29;
                    let v_3005 = ext_0();
                    let w_3006 = 3;
                }
                println!("msg_3007 {}", 1);
            }
            let v_3008 = func_20();
            #[cfg(all(feature = "feat3", not(feature = "feat2")))]
            let _ = 991;
        }
        _ => {}
    }
    #[cfg(feature = "feat22")]
    func_22();
}
pub struct Record_3009 {
    pub field_3010: u32,
    pub field_3011: u32,
    pub field_3012: u32,
}
pub fn func_3013() {
    #[cfg(any(feature = "feat19", feature = "feat4"))]
    let v_3014 = ext_2();
}
pub enum Kind_3015 {
    #[cfg(feature = "feat3")]
    Variant_3016,
    Variant_3017,
    Variant_3018,
    Variant_3019,
}
use std::collections::HashMap;
pub fn func_3020() {
    let v_3021 = ext_3();
    match 0 {
        0 => {
            func_2187();
        }
        _ => {}
    }
    let v_3022 = 741;
}
