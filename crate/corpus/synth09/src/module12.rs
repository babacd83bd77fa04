pub type Alias_2111 = u64;
#[cfg(all(feature = "feat6", not(feature = "feat21")))]
use std::collections::HashMap;
#[cfg(feature = "feat29")]
pub type Alias_2112 = u64;
pub type Alias_2113 = u64;
pub type Alias_2114 = u64;
pub fn func_2115() {
    let v_2116 = func_782();
    if 9 > 10 {
        match 4 {
            0 => {
                match 3 {
                    0 => {
                        let w_2117 = 4;
                        println!("msg_2118 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        ext_2();
        func_62();
    } else {
        let _ = 743;
        pub fn func_2119() {
            let v_2120 = 232;
        }
        let v_2121 = 0;
        println!("msg_2122 {}", 1);
    }
    #[cfg(any(feature = "feat22", feature = "feat27", feature = "feat19"))]
    let v_2123 = func_1446();
}
use std::collections::HashMap;
#[cfg(all(feature = "feat13", not(feature = "feat25")))]
pub static COUNTER_2124: u32 = 0;
pub fn func_2125() {
    match 0 {
        0 => {
            #[cfg(feature = "feat20")]
            let v_2126 = func_1444();
        }
        _ => {}
    }
}
pub fn func_2127() {
    match 2 {
        0 => {
            func_1221();
            match 4 {
                0 => {
                    #[cfg(all(feature = "feat1", not(feature = "feat12")))]
                    let v_2128 = func_566();
                    if 4 > 10 {
                        #[cfg(feature = "feat1")]
                        func_681();
                        let w_2129 = 3;
                        let w_2130 = 6;
                        let v_2131 = 561;
                    } else {
                        println!("msg_2132 {}", 1);
                        let w_2133 = 4;
                        let w_2134 = 0;
                    }
                    pub fn func_2135() {
                        let v_2136 = func_1203();
                        let v_2137 = func_1126();
                        println!("msg_2138 {}", 1);
                        let w_2139 = 8;
                    }
                }
                _ => {}
            }
            if 0 > 10 {
                pub fn func_2140() {
                    func_1816();
                    let w_2141 = 6;
                    #[cfg(feature = "feat29")]
                    let v_2142 = func_706();
                    let v_2143 = 110;
                }
                let v_2144 = 86 + 2;
                let v_2145 = func_432();
                #[cfg(all(feature = "feat3", not(feature = "feat0")))]
                func_471();
            } else {
                #[cfg(feature = "feat11")]
                let _ = 10 + 62;
                if 13 > 10 {
                    println!("msg_2146 {}", 1);
                    let v_2147 = ext_0();
                    let w_2148 = 5;
                } else {
                    let v_2149 = func_1633();
                    let _ = 95 + 52;
                }
            }
        }
        _ => {}
    }
    println!("msg_2150 {}", 1);
}
#[cfg(feature = "feat9")]
pub fn func_2151() {
    #[cfg(feature = "feat29")]
    let v_2152 = func_961();
}
pub struct Handle_2153;
impl Handle_2153 {
    #[cfg(all(feature = "feat3", not(feature = "feat21")))]
    pub fn func_706() {
        let v_2154 = func_385();
        let _ = 145;
        func_1504();
        let v_2155 = func_1803();
    }
    pub fn func_2156() {
        println!("msg_2157 {}", 1);
        if 8 > 10 {
            let v_2158 = func_265();
        } else {
            #[cfg(not(feature = "feat25"))]
            let v_2159 = 96 + 3;
            println!("msg_2160 {}", 1);
            match 4 {
                0 => {
                    let v_2161 = ext_3();
                    ext_3();
                    let w_2162 = 6;
                    let v_2163 = ext_3();
                }
                _ => {}
            }
        }
        let v_2164 = 90 + 36;
    }
}
#[cfg(not(feature = "feat18"))]
pub type Alias_2165 = u64;
#[cfg(any(feature = "feat29", feature = "feat1"))]
pub mod inner_2166 {
    use super::*;
    pub type Alias_2167 = u64;
}
pub fn func_2168() {
    pub fn func_2169() {
        pub fn func_2170() {
            if 6 > 10 {
                ext_2();
                let w_2171 = 6;
            } else {
                let w_2172 = 5;
                let v_2173 = func_2056();
            }
            println!("msg_2174 {}", 1);
        }
        println!("msg_2175 {}", 1);
        let v_2176 = 47 + 51;
        match 0 {
            0 => {
                let v_2177 = 76 + 18;
            }
            _ => {}
        }
    }
    let v_2178 = ext_1();
}
pub static COUNTER_2179: u32 = 0;
pub fn func_2180() {
    match 2 {
        0 => {
            pub fn func_598() {
                pub fn func_2181() {
                    let _ = 23 + 34;
                    let v_2182 = 54 + 81;
                    let v_2183 = 949;
                    let w_2184 = 1;
                }
                ext_0();
                let v_2185 = func_1816();
            }
            println!("msg_2186 {}", 1);
        }
        _ => {}
    }
    ext_3();
    pub fn func_2187() {
        func_889();
    }
    match 2 {
        0 => {
            pub fn func_2188() {
                pub fn func_2189() {
                    let v_2190 = ext_1();
                    let _ = 97 + 15;
                }
                match 4 {
                    0 => {
                        let w_2191 = 8;
                        func_735();
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
}
pub static COUNTER_2192: u32 = 0;
pub const LIMIT_2193: u32 = func_477();
pub fn func_2194() {
    println!("msg_2195 {}", 1);
    #[cfg(feature = "feat6")]
    let v_2196 = 13 + 74;
}
pub struct Record_2197 {
    pub field_2198: u32,
    pub field_2199: u32,
}
#[cfg(feature = "feat20")]
pub fn func_2200() {
    let v_2201 = 663;
    let v_2202 = func_2181();
    let v_2203 = 13 + 52;
    func_696();
}
#[cfg(any(feature = "feat29", feature = "feat27", feature = "feat28"))]
pub static COUNTER_2204: u32 = 0;
pub type Alias_2205 = u64;
pub type Alias_2206 = u64;
#[cfg(feature = "feat24")]
pub type Alias_2207 = u64;
pub mod inner_2208 {
    use super::*;
    #[cfg(all(feature = "feat27", not(feature = "feat26")))]
    pub fn func_2209() {
        let _ = 23 + 70;
        let v_2210 = func_1701();
    }
    pub type Alias_2211 = u64;
    pub fn func_2212() {
        let v_2213 = 976;
        println!("msg_2214 {}", 1);
        pub fn func_2215() {
            let _ = 239;
        }
        #[cfg(feature = "feat6")]
        let v_2216 = func_2187();
    }
}
#[cfg(feature = "feat1")]
pub fn func_2217() {
    match 1 {
        0 => {
            if 19 > 10 {
                func_853();
                let v_2218 = 839;
                #[cfg(feature = "feat4")]
                let v_2219 = 149;
                let v_2220 = func_450();
            } else {
                if 9 > 10 {
                    let w_2221 = 3;
                    println!("msg_2222 {}", 1);
                    let v_2223 = 9 + 48;
                } else {
                    let w_2224 = 5;
                    let v_2225 = 22 + 33;
                }
                func_69();
                let v_2226 = func_1770();
                let v_2227 = ext_3();
            }
            #[cfg(feature = "feat14")]
            let _ = 305;
            func_145();
        }
        _ => {}
    }
    ext_3();
    func_21();
}
pub fn func_2228() {
    let _ = 36;
    func_859();
    func_41();
    let v_2229 = 85 + 7;
}
#[cfg(not(feature = "feat17"))]
pub static COUNTER_2230: u32 = 0;
pub fn func_2231() {
    ext_1();
    let v_2232 = 76 + 46;
    if 13 > 10 {
        let _ = 9 + 41;
        let v_2233 = ext_0();
        ext_2();
        let _ = 73 + 66;
    } else {
        let v_2234 = ext_1();
        pub fn func_2235() {
            let v_2236 = func_1547();
        }
    }
}
pub type Alias_2237 = u64;
pub mod inner_2238 {
    use super::*;
    #[cfg(feature = "feat20")]
    pub fn func_2239() {
        let v_2240 = 9 + 21;
        let v_2241 = func_1971();
        let v_2242 = 98 + 64;
        let v_2243 = ext_2();
    }
    pub enum Kind_2244 {
        Variant_2245,
        Variant_2246,
        Variant_2247,
        Variant_2248,
    }
}
pub static COUNTER_2249: u32 = 0;
#[cfg(feature = "feat28")]
pub const LIMIT_2250: u32 = ext_1();
#[cfg(any(feature = "feat13", feature = "feat13", feature = "feat28"))]
pub mod inner_2251 {
    use super::*;
    #[cfg(feature = "feat29")]
    pub fn func_2252() {
        let v_2253 = 191;
        let v_2254 = 428;
        let _ = 118;
    }
    #[cfg(feature = "feat29")]
    use std::collections::HashMap;
    #[cfg(feature = "feat29")]
    pub type Alias_2255 = u64;
}
#[cfg(not(feature = "feat0"))]
pub fn func_2256() {
    let v_2257 = 903;
    println!("msg_2258 {}", 1);
    pub fn func_2259() {
        let v_2260 = ext_3();
        if 16 > 10 {
            match 4 {
                0 => {
                    let w_2261 = 8;
                    let v_2262 = ext_3();
                    let w_2263 = 1;
                    let _ = 93 + 90;
                }
                _ => {}
            }
        } else {
            if 8 > 10 {
                let v_2264 = 21 + 59;
            } else {
                #[cfg(not(feature = "feat10"))]
                func_864();
                let w_2265 = 8;
            }
            pub fn func_2266() {
                let w_2267 = 4;
            }
            if 3 > 10 {
                ext_3();
                let v_2268 = ext_3();
                let v_2269 = 932;
                println!("msg_2270 {}", 1);
            } else {
                let v_2271 = 38 + 0;
            }
        }
    }
    pub fn func_2272() {
        let v_2273 = 414;
        pub fn func_2274() {
            match 3 {
                0 => {
                    let v_2275 = func_1532();
                    println!("msg_2276 {}", 1);
                }
                _ => {}
            }
            println!("msg_2277 {}", 1);
            if 17 > 10 {
                let v_2278 = 712;
                let w_2279 = 4;
            } else {
                let v_2280 = 71 + 85;
                func_385();
            }
            println!("msg_2281 {}", 1);
        }
    }
}
