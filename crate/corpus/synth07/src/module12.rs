pub struct Handle_1988;
impl Handle_1988 {
    pub fn func_1989() {
        #[cfg(feature = "feat9")]
        let v_1990 = func_1352();
        let v_1991 = func_918();
        #[cfg(feature = "feat17")]
        let v_1992 = 33 + 87;
        #[cfg(not(feature = "feat25"))]
        let v_1993 = ext_2();
    }
}
#[cfg(not(feature = "feat11"))]
pub fn func_1994() {
    let _ = 39 + 59;
    match 2 {
        0 => {
            func_140();
        }
        _ => {}
    }
}
pub fn func_1995() {
    match 3 {
        0 => {
            #[cfg(feature = "feat13")]
            let v_1996 = 36 + 18;
            func_1910();
            let v_1997 = 736;
        }
        _ => {}
    }
    #[cfg(feature = "feat22")]
    let v_1998 = ext_1();
    let v_1999 = ext_3();
}
pub static COUNTER_2000: u32 = 0;
pub fn func_2001() {
    ext_0();
}
pub fn func_2002() {
    let v_2003 = 83 + 81;
    let v_2004 = 760;
    let v_2005 = 234;
}
pub fn func_2006() {
    let v_2007 = 56 + 70;
    #[cfg(not(feature = "feat7"))]
    let v_2008 = 751;
}
pub type Alias_2009 = u64;
pub const LIMIT_2010: u32 = func_437();
pub struct Record_2011 {
    pub field_2012: u32,
    pub field_2013: u32,
}
pub fn func_2014() {
    #[cfg(feature = "feat13")]
    func_338();
    println!("msg_2015 {}", 1);
    let _ = 75 + 95;
}
#[cfg(feature = "feat22")]
pub mod inner_2016 {
    use super::*;
    pub struct Record_2017 {
        pub field_2018: u32,
    }
}
pub fn func_1358() {
    println!("msg_2019 {}", 1);
}
pub fn func_2020() {
    pub fn func_2021() {
        let v_2022 = ext_1();
        println!("msg_2023 {}", 1);
        let v_2024 = 92 + 21;
        if 4 > 10 {
            pub fn func_2025() {
                let _ = 181;
                #[cfg(feature = "feat23")]
                let _ = 683;
                let v_2026 = ext_2();
            }
            if 5 > 10 {
                let w_2027 = 2;
                #[cfg(feature = "feat21")]
                let v_2028 = 27 + 37;
            } else {
                let v_2029 = func_1680();
                let v_2030 = 353;
                #[cfg(any(feature = "feat19", feature = "feat10", feature = "feat12"))]
                let v_2031 = 317;
            }
            match 4 {
                0 => {
                    let w_2032 = 2;
                    let w_2033 = 5;
                    let v_2034 = ext_3();
                    let v_2035 = func_149();
                }
                _ => {}
            }
            pub fn func_2036() {
                let w_2037 = 3;
            }
        } else {
            let v_2038 = 398;
            let _ = 755;
        }
    }
}
pub fn func_2039() {
    let _ = 8 + 47;
}
pub const LIMIT_2040: u32 = func_858();
pub struct Handle_2041;
impl Handle_2041 {
    pub fn func_2042() {
        let v_2043 = func_1008();
        match 3 {
            0 => {
                println!("msg_2044 {}", 1);
            }
            _ => {}
        }
    }
}
pub enum Kind_2045 {
    Variant_2046,
    Variant_2047,
    Variant_2048,
    Variant_2049,
}
pub fn func_2050() {
    let v_2051 = func_345();
    match 1 {
        0 => {
            let v_2052 = 95;
            println!("msg_2053 {}", 1);
        }
        _ => {}
    }
    pub fn func_2054() {
        match 4 {
            0 => {
                pub fn func_2055() {
                    let v_2056 = 69;
                }
                println!("msg_2057 {}", 1);
            }
            _ => {}
        }
        let v_2058 = ext_2();
        func_1784();
        let v_2059 = 516;
    }
    let _ = 697;
}
#[cfg(feature = "feat23")]
use std::collections::HashMap;
pub fn func_2060() {
    func_313();
    let v_2061 = func_979();
    #[cfg(feature = "feat10")]
    let v_2062 = func_104();
    if 9 > 10 {
        if 12 > 10 {
            let v_2063 = ext_3();
            pub fn func_2064() {
                let w_2065 = 8;
            }
        } else {
            pub fn func_2066() {
                let w_2067 = 3;
                #[cfg(any(feature = "feat10", feature = "feat17", feature = "feat22"))]
                let v_2068 = func_64();
                let v_2069 = func_1653();
                #[cfg(feature = "feat23")]
                let _ = 56;
            }
            let _ = 10 + 52;
            let v_2070 = func_585();
            let v_2071 = func_1586();
        }
    } else {
        #[cfg(feature = "feat10")]
        let v_2072 = 685;
        pub fn func_2073() {
            let v_2074 = func_1994();
            let v_2075 = ext_0();
        }
        println!("msg_2076 {}", 1);
        let v_2077 = func_1765();
    }
}
use std::collections::HashMap;
pub fn func_1719() {
    match 3 {
        0 => {
            let v_2078 = func_1358();
            if 6 > 10 {
                func_468();
                let v_2079 = 916;
                pub fn func_2080() {
                    println!("msg_2081 {}", 1);
                    let v_2082 = 26 + 98;
                }
            } else {
                let v_2083 = func_118();
                match 4 {
                    0 => {
                        let w_2084 = 5;
                    }
                    _ => {}
                }
            }
            #[cfg(feature = "feat9")]
            let v_2085 = 128;
            if 9 > 10 {
                println!("msg_2086 {}", 1);
                let _ = 18 + 89;
            } else {
                if 7 > 10 {
                    let w_2087 = 7;
                    let v_2088 = 978;
                    let v_2089 = 57 + 62;
                    ext_1();
                } else {
                    func_99();
                    let w_2090 = 8;
                    let w_2091 = 8;
                }
                func_1146();
                let v_2092 = func_283();
                let v_2093 = 782;
            }
        }
        _ => {}
    }
    let v_2094 = func_224();
}
pub fn func_2095() {
    match 2 {
        0 => {
            match 2 {
                0 => {
                    println!("msg_2096 {}", 1);
                    let v_2097 = func_1653();
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 2 {
        0 => {
            let v_2098 = 753;
            let v_2099 = func_1462();
            let v_2100 = 545;
        }
        _ => {}
    }
}
pub struct Handle_2101;
impl Handle_2101 {
    #[cfg(feature = "feat9")]
    pub fn func_2102() {
        func_99();
    }
    pub fn func_2103() {
        println!("msg_2104 {}", 1);
        #[cfg(feature = "feat18")]
        let v_2105 = ext_3();
        func_831();
        println!("msg_2106 {}", 1);
    }
}
pub struct Record_2107 {
    pub field_2108: u32,
}
pub static COUNTER_2109: u32 = 0;
pub fn func_2110() {
    let v_2111 = func_1994();
    let v_2112 = 943;
}
pub fn func_2113() {
    pub fn func_2114() {
        let v_2115 = func_1291();
        #[cfg(all(feature = "feat12", not(feature = "feat5")))]
        ext_3();
        let v_2116 = func_1566();
    }
    let v_2117 = 609;
}
pub type Alias_2118 = u64;
pub static COUNTER_2119: u32 = 0;
#[cfg(feature = "feat21")]
pub fn func_2120() {
    let v_2121 = ext_3();
    let _ = 900;
    let v_2122 = func_1469();
    let v_2123 = 97 + 10;
}
#[cfg(feature = "feat23")]
pub struct Record_2124 {
    pub field_2125: u32,
}
#[cfg(not(feature = "feat14"))]
pub fn func_2126() {
    let v_2127 = 263;
}
pub enum Kind_2128 {
    Variant_2129,
    #[cfg(feature = "feat12")]
    Variant_2130,
    #[cfg(feature = "feat9")]
    Variant_2131,
    Variant_2132,
}
pub static COUNTER_2133: u32 = 0;
pub enum Kind_2134 {
    Variant_2135,
    Variant_2136,
}
#[cfg(any(feature = "feat22", feature = "feat18"))]
pub mod inner_2137 {
    use super::*;
    pub fn func_2138() {
        func_318();
        #[cfg(not(feature = "feat16"))]
        let v_2139 = func_971();
        println!("msg_2140 {}", 1);
    }
    use std::collections::HashMap;
}
use std::collections::HashMap;
pub struct Record_2141 {
    pub field_2142: u32,
}
#[cfg(any(feature = "feat23", feature = "feat18"))]
pub fn func_2143() {
    let v_2144 = func_147();
}
pub struct Record_2145 {
    pub field_2146: u32,
}
pub fn func_2147() {
    let _ = 0 + 35;
    match 3 {
        0 => {
            let v_2148 = 70 + 68;
            let _ = 225;
        }
        _ => {}
    }
    let v_2149 = ext_0();
    pub fn func_2150() {
        let v_2151 = func_147();
        let v_2152 = 825;
        #[cfg(feature = "feat23")]
        pub fn func_2153() {
            let _ = 863;
            let v_2154 = ext_2();
        }
    }
}
pub const LIMIT_2155: u32 = func_1045();
pub fn func_2156() {
    if 2 > 10 {
        let v_2157 = ext_2();
        println!("msg_2158 {}", 1);
    } else {
        pub fn func_2159() {
            func_568();
        }
        println!("msg_2160 {}", 1);
    }
    let v_2161 = func_396();
    println!("msg_2162 {}", 1);
    let v_2163 = func_2153();
}
pub struct Handle_2164;
impl Handle_2164 {
    pub fn func_1352() {
        let v_2165 = ext_1();
        pub fn func_2166() {
            let _ = 65 + 4;
            #[cfg(not(feature = "feat7"))]
            let v_2167 = func_709();
            let v_2168 = ext_0();
            let v_2169 = 829;
        }
        let v_2170 = ext_0();
        let v_2171 = 60 + 40;
    }
}
