pub static COUNTER_2172: u32 = 0;
pub struct Handle_2173;
impl Handle_2173 {
    pub fn func_2174() {
        let v_2175 = func_580();
    }
    pub fn func_2176() {
        pub fn func_2177() {
            let _ = 3 + 83;
            match 2 {
                0 => {
                    let v_2178 = ext_1();
                    let w_2179 = 6;
                    let w_2180 = 1;
                }
                _ => {}
            }
        }
    }
}
pub fn func_2181() {
    let v_2182 = func_74();
    if 5 > 10 {
        let v_2183 = func_1879();
        let v_2184 = func_538();
        let v_2185 = 37 + 83;
    } else {
        let v_2186 = 45 + 10;
        pub fn func_2187() {
            let v_2188 = func_1388();
            let v_2189 = 2 + 59;
        }
    }
}
use std::collections::HashMap;
pub enum Kind_2190 {
    Variant_2191,
}
pub fn func_184() {
    match 0 {
        0 => {
            match 0 {
                0 => {
                    match 4 {
                        0 => {
                            let v_2192 = 265;
                            let _ = 973;
                        }
                        _ => {}
                    }
                    let _ = 247;
                    pub fn func_2193() {
                        let v_2194 = 654;
                    }
                    let _ = 89 + 13;
                }
                _ => {}
            }
        }
        _ => {}
    }
    let v_2195 = ext_1();
    match 0 {
        0 => {
            let v_2196 = ext_2();
            func_2153();
            pub fn func_1677() {
                let v_2197 = 448;
            }
            pub fn func_2198() {
                let _ = 953;
                func_1809();
                pub fn func_2199() {
                    let v_2200 = 47 + 33;
                }
            }
        }
        _ => {}
    }
    func_2103();
}
pub const LIMIT_2201: u32 = 769;
pub fn func_1291() {
    func_1067();
    let v_2202 = 83 + 75;
}
pub static COUNTER_2203: u32 = 0;
pub enum Kind_2204 {
    Variant_2205,
    Variant_2206,
    Variant_2207,
}
pub fn func_2208() {
    match 0 {
        0 => {
            let v_2209 = func_2159();
            let v_2210 = func_816();
        }
        _ => {}
    }
    match 2 {
        0 => {
            func_1310();
            let v_2211 = func_393();
            let _ = 827;
            let v_2212 = 70 + 59;
        }
        _ => {}
    }
    let v_2213 = func_323();
}
pub struct Record_2214 {
    pub field_2215: u32,
    pub field_2216: u32,
    pub field_2217: u32,
}
pub struct Handle_2218;
impl Handle_2218 {
    pub fn func_2219() {
        let v_2220 = 558;
        let v_2221 = ext_3();
        pub fn func_2222() {
            println!("msg_2223 {}", 1);
            let v_2224 = func_140();
            if 5 > 10 {
                let v_2225 = ext_3();
                let w_2226 = 0;
            } else {
                let w_2227 = 7;
            }
        }
        let _ = 716;
    }
    pub fn func_2228() {
        let _ = 63 + 42;
    }
}
pub struct Handle_2229;
impl Handle_2229 {
    pub fn func_1348() {
        println!("msg_2230 {}", 1);
        ext_2();
    }
    pub fn func_2231() {
        if 10 > 10 {
            if 1 > 10 {
                let v_2232 = 98 + 98;
                #[cfg(not(feature = "feat20"))]
                let v_2233 = 999;
                let w_2234 = 6;
                let w_2235 = 7;
            } else {
                let _ = 42 + 53;
            }
            let v_2236 = ext_0();
        } else {
            #[cfg(not(feature = "feat7"))]
            pub fn func_2237() {
                let w_2238 = 0;
                let v_2239 = 182;
                let v_2240 = func_1586();
            }
            match 0 {
                0 => {
                    let v_2241 = func_1571();
                    println!("msg_2242 {}", 1);
                    let w_2243 = 1;
                    let _ = 33 + 27;
                }
                _ => {}
            }
        }
    }
}
pub fn func_2244() {
    let v_2245 = 381;
    match 2 {
        0 => {
            let v_2246 = 26 + 39;
            match 2 {
                0 => {
                    let _ = 81 + 83;
                    let v_2247 = func_1138();
                }
                _ => {}
            }
            if 1 > 10 {
                func_1493();
                if 17 > 10 {
                    let v_2248 = func_602();
                    let v_2249 = 21 + 90;
                    let w_2250 = 5;
                } else {
                    func_1221();
                    println!("msg_2251 {}", 1);
                }
            } else {
                println!("msg_2252 {}", 1);
                if 9 > 10 {
                    let w_2253 = 2;
                    println!("msg_2254 {}", 1);
                } else {
                    let w_2255 = 3;
                    let v_2256 = 14 + 29;
                }
                ext_1();
            }
            let v_2257 = 60 + 50;
        }
        _ => {}
    }
    if 13 > 10 {
        pub fn func_2258() {
            match 2 {
                0 => {
                    func_866();
                    let w_2259 = 6;
                }
                _ => {}
            }
            println!("msg_2260 {}", 1);
        }
    } else {
        let _ = 736;
    }
    let v_2261 = 345;
}
pub fn func_2262() {
    func_1339();
    let v_2263 = func_195();
    let v_2264 = 40 + 34;
}
pub static COUNTER_2265: u32 = 0;
use std::collections::HashMap;
pub enum Kind_2266 {
    Variant_2267,
}
pub const LIMIT_2268: u32 = func_857();
use std::collections::HashMap;
pub const LIMIT_2269: u32 = 654;
pub fn func_2270() {
    let v_2271 = func_140();
    match 4 {
        0 => {
            match 3 {
                0 => {
                    pub fn func_2272() {
                        let w_2273 = 1;
                        func_177();
                    }
                    match 3 {
                        0 => {
                            let w_2274 = 0;
                            let w_2275 = 7;
                            func_1007();
                            let v_2276 = 425;
                        }
                        _ => {}
                    }
                    let v_2277 = 596;
                }
                _ => {}
            }
            let v_2278 = func_195();
            let _ = 26 + 89;
        }
        _ => {}
    }
    match 4 {
        0 => {
            if 15 > 10 {
                let v_2279 = 618;
                let v_2280 = func_1018();
                let _ = 49;
                let v_2281 = 94 + 91;
            } else {
                let v_2282 = 987;
                match 1 {
                    0 => {
                        let v_2283 = func_1989();
                    }
                    _ => {}
                }
            }
            match 3 {
                0 => {
                    println!("msg_2284 {}", 1);
                    let _ = 91 + 93;
                }
                _ => {}
            }
            match 3 {
                0 => {
                    println!("msg_2285 {}", 1);
                    pub fn func_2286() {
                        let v_2287 = ext_0();
                        let v_2288 = 33 + 95;
                    }
                }
                _ => {}
            }
            let v_2289 = 73 + 6;
        }
        _ => {}
    }
}
pub mod inner_2290 {
    use super::*;
    pub enum Kind_2291 {
        Variant_2292,
        Variant_2293,
        Variant_2294,
    }
    pub fn func_2295() {
        pub fn func_2296() {
            let v_2297 = func_2110();
        }
    }
    pub fn func_2298() {
        match 2 {
            0 => {
                match 2 {
                    0 => {
                        let w_2299 = 6;
                        let v_2300 = 90;
                        ext_0();
                        let _ = 77 + 86;
                    }
                    _ => {}
                }
                let _ = 14 + 68;
                ext_2();
                let v_2301 = ext_0();
            }
            _ => {}
        }
        if 9 > 10 {
            match 2 {
                0 => {
                    let w_2302 = 2;
                    let v_2303 = func_1149();
                    let v_2304 = func_518();
                    let w_2305 = 7;
                }
                _ => {}
            }
            println!("msg_2306 {}", 1);
            pub fn func_2307() {
                let w_2308 = 8;
            }
            let v_2309 = 58 + 24;
        } else {
            println!("msg_2310 {}", 1);
            println!("msg_2311 {}", 1);
            if 6 > 10 {
                let v_2312 = ext_3();
            } else {
                let v_2313 = 87;
                func_857();
                let v_2314 = ext_2();
            }
        }
        if 13 > 10 {
            let v_2315 = func_396();
            func_214();
        } else {
            let v_2316 = func_1256();
        }
        pub fn func_1388() {
            let _ = 25 + 62;
            let v_2317 = ext_0();
            println!("msg_2318 {}", 1);
        }
    }
}
pub fn func_2319() {
    ext_2();
}
pub fn func_2320() {
    func_858();
    let v_2321 = 91 + 43;
}
use std::collections::HashMap;
pub const LIMIT_2322: u32 = 784;
