pub mod inner_3162 {
    use super::*;
    pub type Alias_3163 = u64;
}
pub type Alias_3164 = u64;
#[cfg(all(feature = "feat20", not(feature = "feat25")))]
pub fn func_3165() {
    pub fn func_2200() {
        let v_3166 = ext_0();
        if 11 > 10 {
            pub fn func_3167() {
                let _ = 971;
                let v_3168 = func_1038();
                let v_3169 = ext_0();
                let v_3170 = 37 + 9;
            }
            println!("msg_3171 {}", 1);
        } else {
            if 11 > 10 {
                let v_3172 = 892;
                let w_3173 = 6;
                let v_3174 = ext_1();
            } else {
                println!("msg_3175 {}", 1);
            }
            let v_3176 = func_889();
        }
    }
    let v_3177 = func_814();
    println!("msg_3178 {}", 1);
}
pub mod inner_3179 {
    use super::*;
    pub fn func_3180() {
        func_1890();
        match 2 {
            0 => {
                pub fn func_3181() {
                    println!("msg_3182 {}", 1);
                }
                println!("msg_3183 {}", 1);
                match 3 {
                    0 => {
                        let w_3184 = 7;
                        let v_3185 = func_474();
                    }
                    _ => {}
                }
                let v_3186 = ext_0();
            }
            _ => {}
        }
        let v_3187 = 427;
    }
}
pub fn func_3188() {
    #[cfg(feature = "feat13")]
    pub fn func_3189() {
        let v_3190 = ext_2();
    }
    println!("msg_3191 {}", 1);
    func_1774();
    #[cfg(feature = "feat27")]
    func_3055();
}
pub type Alias_3192 = u64;
pub fn func_3193() {
    let _ = 405;
    let _ = 720;
    match 1 {
        0 => {
            let v_3194 = func_2422();
            #[cfg(feature = "feat27")]
            let v_3195 = func_1361();
            let v_3196 = 769;
            if 8 > 10 {
                let v_3197 = func_231();
            } else {
                let v_3198 = func_2340();
                let v_3199 = func_3106();
            }
        }
        _ => {}
    }
    if 4 > 10 {
        pub fn func_3200() {
            #[cfg(feature = "feat27")]
            let _ = 17 + 86;
            if 14 > 10 {
                let v_3201 = func_86();
                println!("msg_3202 {}", 1);
            } else {
                ext_3();
                let w_3203 = 3;
                ext_1();
            }
        }
        println!("msg_3204 {}", 1);
    } else {
        if 19 > 10 {
            func_2089();
            let v_3205 = ext_0();
        } else {
            println!("msg_3206 {}", 1);
            match 1 {
                0 => {
                    let v_3207 = func_289();
                    let w_3208 = 6;
                    #[cfg(feature = "feat4")]
                    let v_3209 = ext_3();
                }
                _ => {}
            }
            println!("msg_3210 {}", 1);
            let v_3211 = 576;
        }
        pub fn func_3212() {
            pub fn func_3213() {
                let w_3214 = 5;
            }
        }
        match 2 {
            0 => {
                let v_3215 = ext_2();
                pub fn func_840() {
                    let v_3216 = func_353();
                }
                let v_3217 = 31 + 55;
                let v_3218 = func_447();
            }
            _ => {}
        }
        let v_3219 = ext_1();
    }
}
pub struct Handle_3220;
#[cfg(all(feature = "feat8", not(feature = "feat0")))]
impl Handle_3220 {
    pub fn func_3221() {
        ext_1();
        ext_0();
    }
}
pub fn func_3222() {
    let v_3223 = ext_2();
    match 2 {
        0 => {
            println!("msg_3224 {}", 1);
            let v_3225 = 175;
            if 10 > 10 {
                #[cfg(any(feature = "feat16", feature = "feat29"))]
                let v_3226 = func_2843();
                if 1 > 10 {
                    let _ = 223;
                    #[cfg(feature = "feat1")]
                    let _ = 86 + 26;
                    let v_3227 = func_2054();
                } else {
                    println!("msg_3228 {}", 1);
                    let v_3229 = 42 + 42;
                    #[cfg(not(feature = "feat7"))]
                    let v_3230 = func_407();
                    let v_3231 = ext_0();
                }
            } else {
                match 3 {
                    0 => {
                        let w_3232 = 5;
                    }
                    _ => {}
                }
            }
            pub fn func_3233() {
                let v_3234 = 69 + 12;
                let _ = 541;
                let v_3235 = func_2999();
            }
        }
        _ => {}
    }
}
pub struct Handle_3236;
impl Handle_3236 {
    #[cfg(feature = "feat22")]
    pub fn func_3237() {
        let _ = 78 + 27;
        let v_3238 = 99 + 68;
        let v_3239 = ext_2();
    }
}
pub struct Handle_3240;
impl Handle_3240 {
    pub fn func_3241() {
        if 12 > 10 {
            let v_3242 = 54 + 36;
            #[cfg(feature = "feat11")]
            let v_3243 = ext_1();
        } else {
            ext_3();
            println!("msg_3244 {}", 1);
            #[cfg(all(feature = "feat3", not(feature = "feat21")))]
            func_1221();
            println!("msg_3245 {}", 1);
        }
    }
}
pub mod nested;
