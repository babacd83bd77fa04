pub struct Record_2144 {
    #[cfg(not(feature = "feat10"))]
    pub field_2145: u32,
    pub field_2146: u32,
    pub field_2147: u32,
}
pub fn func_2148() {
    func_149();
}
pub fn func_2149() {
    pub fn func_151() {
        pub fn func_2150() {
            println!("msg_2151 {}", 1);
            let v_2152 = func_1367();
        }
        pub fn func_2153() {
            pub fn func_1148() {
                let v_2154 = func_1630();
            }
            func_1141();
            let v_2155 = 885;
        }
    }
    ext_3();
    let v_2156 = 963;
    let v_2157 = func_2043();
}
pub fn func_2158() {
    let v_2159 = func_1274();
    #[cfg(feature = "feat8")]
    let _ = 8 + 83;
    #[cfg(feature = "feat19")]
    let v_2160 = func_1687();
}
pub fn func_2161() {
    match 0 {
        0 => {
            let v_2162 = ext_2();
            let v_2163 = func_259();
        }
        _ => {}
    }
}
pub fn func_2164() {
    #[cfg(feature = "feat0")]
    pub fn func_2165() {
        if 19 > 10 {
            let _ = 657;
            pub fn func_2166() {
                let w_2167 = 1;
                #[cfg(feature = "feat8")]
                let v_2168 = ext_3();
            }
        } else {
            if 16 > 10 {
                let w_2169 = 1;
                println!("msg_2170 {}", 1);
            } else {
                let v_2171 = func_2085();
                #[cfg(feature = "feat15")]
                let v_2172 = func_878();
                let w_2173 = 5;
                let v_2174 = func_307();
            }
            #[cfg(feature = "feat2")]
            func_1050();
            #[cfg(not(feature = "feat9"))]
            pub fn func_1337() {
                let w_2175 = 5;
                let w_2176 = 7;
            }
            let _ = 306;
        }
    }
    let v_2177 = func_776();
    match 0 {
        0 => {
            let v_2178 = 87 + 58;
            println!("msg_2179 {}", 1);
            let v_2180 = 56 + 55;
            ext_0();
        }
        _ => {}
    }
    #[cfg(any(feature = "feat5", feature = "feat15"))]
    let v_2181 = func_455();
}
pub fn func_2182() {
    #[cfg(all(feature = "feat16", not(feature = "feat18")))]
    let v_2183 = ext_2();
    let v_2184 = 7 + 80;
}
pub struct Record_2185 {
    #[cfg(feature = "feat8")]
    pub field_2186: u32,
    #[cfg(feature = "feat15")]
    pub field_2187: u32,
    pub field_2188: u32,
}
pub fn func_2189() {
    match 2 {
        0 => {
            func_166();
            let v_2190 = 336;
            let v_2191 = 9 + 92;
        }
        _ => {}
    }
    let v_2192 = func_1815();
    func_744();
}
pub fn func_2193() {
    if 16 > 10 {
        if 3 > 10 {
            match 2 {
                0 => {
                    func_1158();
                    let v_2194 = func_1283();
                    println!("msg_2195 {}", 1);
                    let v_2196 = func_455();
                }
                _ => {}
            }
            let v_2197 = ext_1();
        } else {
            let v_2198 = 18 + 62;
            match 2 {
                0 => {
                    #[cfg(feature = "feat6")]
                    let v_2199 = func_1169();
                    let w_2200 = 0;
                    let v_2201 = func_1081();
                }
                _ => {}
            }
        }
    } else {
        let v_2202 = 11 + 92;
        #[cfg(feature = "feat23")]
        let v_2203 = func_2063();
        if 15 > 10 {
            println!("msg_2204 {}", 1);
        } else {
            let v_2205 = ext_3();
        }
    }
    let v_2206 = 320;
}
pub struct Handle_2207;
impl Handle_2207 {
    pub fn func_2208() {
        match 2 {
            0 => {
                match 3 {
                    0 => {
                        println!("msg_2209 {}", 1);
                        let w_2210 = 4;
                        let w_2211 = 1;
                        let w_2212 = 3;
                    }
                    _ => {}
                }
                let v_2213 = 82 + 77;
                let _ = 435;
            }
            _ => {}
        }
        let v_2214 = func_1749();
        ext_2();
        match 0 {
            0 => {
                let v_2215 = ext_0();
                let v_2216 = ext_0();
                println!("msg_2217 {}", 1);
            }
            _ => {}
        }
    }
}
pub struct Handle_2218;
impl Handle_2218 {
    pub fn func_291() {
        let v_2219 = 8;
    }
    pub fn func_2220() {
        let v_2221 = ext_0();
    }
}
