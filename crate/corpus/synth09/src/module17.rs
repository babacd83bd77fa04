use std::collections::HashMap;
#[cfg(not(feature = "feat10"))]
pub fn func_3023() {
    ext_3();
}
pub fn func_3024() {
    let v_3025 = 689;
}
#[cfg(not(feature = "feat26"))]
pub static COUNTER_3026: u32 = 0;
use std::collections::HashMap;
pub fn func_3027() {
    let v_3028 = 17 + 15;
    let v_3029 = 407;
    if 8 > 10 {
        func_1504();
        pub fn func_2525() {
            func_1916();
        }
        let _ = 524;
        match 2 {
            0 => {
                let v_3030 = func_1815();
                match 4 {
                    0 => {
                        let w_3031 = 3;
                        #[cfg(feature = "feat28")]
                        let v_3032 = func_1124();
                        let w_3033 = 4;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    } else {
        let v_3034 = 297;
    }
}
pub static COUNTER_3035: u32 = 0;
pub fn func_3036() {
    let v_3037 = ext_3();
    let v_3038 = ext_1();
}
pub fn func_3039() {
    #[cfg(feature = "feat5")]
    pub fn func_3040() {
        #[cfg(any(feature = "feat6", feature = "feat19", feature = "feat22"))]
        func_982();
        func_2956();
        let v_3041 = ext_2();
    }
    #[cfg(all(feature = "feat6", not(feature = "feat23")))]
    func_2419();
    if 18 > 10 {
        let v_3042 = ext_0();
        let v_3043 = 387;
        let v_3044 = func_177();
    } else {
        let v_3045 = func_2042();
        #[cfg(feature = "feat20")]
        let _ = 368;
        let v_3046 = 66 + 77;
        if 9 > 10 {
            if 7 > 10 {
                let w_3047 = 8;
                let v_3048 = 451;
            } else {
                #[cfg(feature = "feat3")]
                func_333();
                #[cfg(not(feature = "feat23"))]
                let v_3049 = 69 + 42;
                #[cfg(feature = "feat19")]
                let v_3050 = 60 + 35;
                let v_3051 = 338;
            }
            func_1020();
            ext_0();
            func_1566();
        } else {
            func_807();
            match 4 {
                0 => {
                    println!("msg_3052 {}", 1);
                    let v_3053 = func_1795();
                }
                _ => {}
            }
        }
    }
    let v_3054 = 672;
}
pub fn func_3055() {
    let v_3056 = func_78();
    println!("msg_3057 {}", 1);
    let _ = 70 + 92;
}
pub const LIMIT_3058: u32 = 61 + 25;
pub fn func_3059() {
    #[cfg(feature = "feat9")]
    let v_3060 = 95 + 65;
    match 3 {
        0 => {
            let _ = 66 + 82;
            let v_3061 = func_699();
            #[cfg(not(feature = "feat21"))]
            func_1716();
            if 8 > 10 {
                println!("msg_3062 {}", 1);
                pub fn func_3063() {
                    #[cfg(feature = "feat1")]
                    let v_3064 = 629;
                    println!("msg_3065 {}", 1);
                    func_392();
                }
                if 2 > 10 {
                    let _ = 62 + 6;
                    let v_3066 = 2 + 32;
                } else {
                    let v_3067 = 69 + 36;
                }
                match 1 {
                    0 => {
                        let v_3068 = ext_1();
                    }
                    _ => {}
                }
            } else {
                let v_3069 = 40;
                println!("msg_3070 {}", 1);
            }
        }
        _ => {}
    }
}
pub fn func_3071() {
    let v_3072 = 298;
    #[cfg(feature = "feat1")]
    pub fn func_2391() {
        #[cfg(feature = "feat27")]
        let v_3073 = func_2942();
        func_2568();
        func_2788();
    }
    println!("msg_3074 {}", 1);
    let _ = 30 + 36;
}
pub static COUNTER_3075: u32 = 0;
use std::collections::HashMap;
pub const LIMIT_3076: u32 = 983;
#[cfg(feature = "feat24")]
pub fn func_3077() {
    if 18 > 10 {
        match 0 {
            0 => {
                func_1124();
                println!("msg_3078 {}", 1);
                let v_3079 = func_1924();
                #[cfg(feature = "feat27")]
                func_2468();
            }
            _ => {}
        }
    } else {
        pub fn func_3080() {
            match 3 {
                0 => {
                    let v_3081 = 33 + 98;
                }
                _ => {}
            }
            let _ = 837;
        }
    }
}
pub fn func_145() {
    match 0 {
        0 => {
            match 3 {
                0 => {
                    #[cfg(feature = "feat24")]
                    let v_3082 = 97 + 30;
                    func_681();
                    let v_3083 = ext_1();
                    match 1 {
                        0 => {
                            #[cfg(feature = "feat5")]
                            let _ = 296;
                            let _ = 751;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            #[cfg(feature = "feat19")]
            let v_3084 = func_1602();
        }
        _ => {}
    }
}
pub mod nested;
