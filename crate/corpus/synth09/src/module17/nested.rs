pub mod inner_3085 {
    use super::*;
    pub fn func_1828() {
        #[cfg(all(feature = "feat8", not(feature = "feat0")))]
        func_1816();
        println!("msg_3086 {}", 1);
        let _ = 856;
    }
    pub struct Record_3087 {
        pub field_3088: u32,
    }
    use std::collections::HashMap;
}
pub fn func_3089() {
    if 8 > 10 {
        ext_3();
    } else {
        let v_3090 = ext_0();
        let v_3091 = ext_3();
        let v_3092 = func_1924();
        let v_3093 = func_1620();
    }
    let v_3094 = func_2266();
    func_675();
    if 9 > 10 {
        let v_3095 = 217;
    } else {
        let v_3096 = ext_2();
    }
}
#[cfg(not(feature = "feat0"))]
pub static COUNTER_3097: u32 = 0;
pub const LIMIT_3098: u32 = func_1361();
#[cfg(feature = "feat20")]
pub fn func_3099() {
    func_1871();
}
#[cfg(any(feature = "feat1", feature = "feat9", feature = "feat1"))]
pub mod inner_3100 {
    use super::*;
    pub enum Kind_3101 {
        Variant_3102,
        Variant_3103,
        #[cfg(not(feature = "feat0"))]
        Variant_3104,
    }
    pub fn func_3105() {
        #[cfg(all(feature = "feat11", not(feature = "feat7")))]
        pub fn func_3106() {
            let v_3107 = 587;
            func_2135();
        }
    }
}
pub fn func_3077() {
    if 7 > 10 {
        let v_3108 = ext_3();
        match 0 {
            0 => {
                let v_3109 = 4 + 12;
                let _ = 870;
                ext_1();
                #[cfg(feature = "feat5")]
                let v_3110 = ext_1();
            }
            _ => {}
        }
        pub fn func_3111() {
            match 1 {
                0 => {
                    let w_3112 = 6;
                }
                _ => {}
            }
            func_1578();
            println!("msg_3113 {}", 1);
            func_364();
        }
        let v_3114 = 866;
    } else {
        let v_3115 = ext_1();
        let v_3116 = func_2377();
        #[cfg(not(feature = "feat7"))]
        let _ = 671;
        pub fn func_3117() {
            pub fn func_3118() {
                func_1184();
                let w_3119 = 0;
                println!("msg_3120 {}", 1);
                let w_3121 = 6;
            }
        }
    }
    match 4 {
        0 => {
            if 7 > 10 {
                pub fn func_3122() {
                    ext_3();
                }
                let v_3123 = 83 + 66;
                match 3 {
                    0 => {
                        let v_3124 = 74 + 3;
                        ext_2();
                    }
                    _ => {}
                }
                #[cfg(feature = "feat4")]
                let v_3125 = ext_1();
            } else {
                pub fn func_3126() {
                    let w_3127 = 2;
                    let w_3128 = 4;
                    let v_3129 = func_1202();
                    let w_3130 = 4;
                }
                let v_3131 = 949;
            }
            #[cfg(feature = "feat1")]
            let v_3132 = ext_2();
        }
        _ => {}
    }
}
pub fn func_3133() {
    if 3 > 10 {
        let v_3134 = 44;
    } else {
        pub fn func_3135() {
            let v_3136 = 66 + 58;
            match 1 {
                0 => {
                    println!("msg_3137 {}", 1);
                    #[cfg(feature = "feat13")]
                    let _ = 873;
                    let v_3138 = func_1868();
                }
                _ => {}
            }
            match 2 {
                0 => {
                    let _ = 149;
                }
                _ => {}
            }
        }
        match 2 {
            0 => {
                match 2 {
                    0 => {
                        let v_3139 = 87 + 56;
                    }
                    _ => {}
                }
                if 6 > 10 {
                    ext_3();
                    let w_3140 = 2;
                } else {
                    let v_3141 = 78 + 91;
                    let v_3142 = ext_1();
                    let w_3143 = 1;
                    let w_3144 = 7;
                }
                let v_3145 = func_2215();
                let v_3146 = func_1553();
            }
            _ => {}
        }
        let v_3147 = func_2992();
        let v_3148 = ext_3();
    }
    println!("msg_3149 {}", 1);
    pub fn func_3150() {
        match 2 {
            0 => {
                println!("msg_3151 {}", 1);
                println!("msg_3152 {}", 1);
            }
            _ => {}
        }
        func_285();
        let v_3153 = func_2487();
        if 5 > 10 {
            func_495();
            println!("msg_3154 {}", 1);
        } else {
            let v_3155 = 404;
            pub fn func_3156() {
                println!("msg_3157 {}", 1);
                let v_3158 = 147;
            }
            let v_3159 = 565;
            let v_3160 = func_66();
        }
    }
    let v_3161 = 498;
}
