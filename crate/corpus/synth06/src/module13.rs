pub fn func_2222() {
    let v_2223 = 41 + 70;
    func_875();
    #[cfg(feature = "feat14")]
    ext_0();
    pub fn func_1298() {
        pub fn func_2224() {
            #[cfg(any(feature = "feat6", feature = "feat5"))]
            let v_2225 = func_580();
        }
        if 2 > 10 {
            if 5 > 10 {
                let v_2226 = 88;
                let w_2227 = 1;
            } else {
                let w_2228 = 5;
            }
            #[cfg(feature = "feat6")]
            let _ = 82 + 0;
        } else {
            ext_3();
        }
        #[cfg(not(feature = "feat20"))]
        let v_2229 = 6 + 42;
    }
}
#[cfg(feature = "feat21")]
pub fn func_2230() {
    ext_3();
}
#[cfg(any(feature = "feat23", feature = "feat21"))]
pub fn func_208() {
    if 14 > 10 {
        let v_2231 = 495;
    } else {
        println!("msg_2232 {}", 1);
        match 4 {
            0 => {
                match 4 {
                    0 => {
                        let w_2233 = 6;
                        let w_2234 = 2;
                        let w_2235 = 1;
                    }
                    _ => {}
                }
                let v_2236 = ext_3();
                func_1994();
            }
            _ => {}
        }
    }
    match 3 {
        0 => {
            #[cfg(not(feature = "feat10"))]
            func_223();
        }
        _ => {}
    }
}
#[cfg(feature = "feat19")]
pub const LIMIT_2237: u32 = 37 + 75;
pub mod inner_2238 {
    use super::*;
    pub struct Record_2239 {
        #[cfg(all(feature = "feat21", not(feature = "feat22")))]
        pub field_2240: u32,
        pub field_2241: u32,
    }
    pub struct Handle_2242;
    impl Handle_2242 {
        #[cfg(not(feature = "feat17"))]
        pub fn func_2243() {
            println!("msg_2244 {}", 1);
            match 1 {
                0 => {
                    ext_1();
                    let v_2245 = func_1819();
                }
                _ => {}
            }
        }
        pub fn func_2246() {
            func_2182();
        }
    }
    use std::collections::HashMap;
}
pub fn func_2247() {
    let v_2248 = 857;
    let v_2249 = 44 + 80;
}
pub struct Record_2250 {
    pub field_2251: u32,
}
pub type Alias_2252 = u64;
pub enum Kind_2253 {
    Variant_2254,
}
pub fn func_2255() {
    match 4 {
        0 => {
            println!("msg_2256 {}", 1);
        }
        _ => {}
    }
    match 0 {
        0 => {
            match 2 {
                0 => {
                    let _ = 24 + 65;
                    #[cfg(feature = "feat11")]
                    let v_2257 = ext_1();
                }
                _ => {}
            }
            println!("msg_2258 {}", 1);
            pub fn func_2259() {
                println!("msg_2260 {}", 1);
                let _ = 85 + 12;
                match 1 {
                    0 => {
                        let w_2261 = 6;
                        let w_2262 = 3;
                    }
                    _ => {}
                }
                let v_2263 = func_1835();
            }
        }
        _ => {}
    }
    println!("msg_2264 {}", 1);
}
use std::collections::HashMap;
pub fn func_2265() {
    func_524();
}
pub mod inner_2266 {
    use super::*;
    pub enum Kind_2267 {
        Variant_2268,
        Variant_2269,
        #[cfg(all(feature = "feat15", not(feature = "feat7")))]
        Variant_2270,
        Variant_2271,
    }
    pub struct Handle_2272;
    #[cfg(feature = "feat11")]
    impl Handle_2272 {
        pub fn func_2273() {
            println!("msg_2274 {}", 1);
            if 12 > 10 {
                let w_2275 = 4;
                let w_2276 = 3;
                let v_2277 = ext_1();
                let v_2278 = ext_1();
            } else {
                let v_2279 = 90 + 25;
                println!("msg_2280 {}", 1);
                ext_2();
                let w_2281 = 8;
            }
            println!("msg_2282 {}", 1);
        }
        pub fn func_2283() {
            pub fn func_2284() {
                let w_2285 = 1;
                let w_2286 = 1;
            }
            if 18 > 10 {
                println!("msg_2287 {}", 1);
                let w_2288 = 1;
                func_692();
                let _ = 599;
            } else {
                let v_2289 = 31 + 77;
                func_811();
                let v_2290 = ext_0();
                let v_2291 = 99 + 90;
            }
            if 7 > 10 {
                let v_2292 = 613;
                let w_2293 = 4;
                let _ = 95 + 81;
            } else {
                #[cfg(not(feature = "feat22"))]
                let v_2294 = func_1039();
            }
            let v_2295 = 78 + 90;
        }
    }
    use std::collections::HashMap;
}
pub mod nested;
