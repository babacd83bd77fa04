pub fn func_2043() {
    let v_2044 = ext_0();
    if 10 > 10 {
        println!("msg_2045 {}", 1);
        println!("msg_2046 {}", 1);
    } else {
        let v_2047 = 534;
    }
    let v_2048 = func_924();
}
pub fn func_2049() {
    pub fn func_2050() {
        let v_2051 = func_1385();
        let v_2052 = 81 + 52;
        let v_2053 = func_506();
        #[cfg(feature = "feat21")]
        let v_2054 = func_758();
    }
    let v_2055 = ext_3();
    let _ = 947;
    let v_2056 = 84 + 79;
}
pub fn func_2057() {
    let v_2058 = 75 + 70;
    let v_2059 = func_1692();
    println!("msg_2060 {}", 1);
    pub fn func_2061() {
        println!("msg_2062 {}", 1);
        pub fn func_2063() {
            let v_2064 = 3;
            #[cfg(not(feature = "feat17"))]
            let _ = 339;
            #[cfg(any(feature = "feat6", feature = "feat14", feature = "feat2"))]
            let v_2065 = func_1041();
            println!("msg_2066 {}", 1);
        }
        let v_2067 = 861;
    }
}
#[cfg(feature = "feat12")]
pub type Alias_2068 = u64;
#[cfg(all(feature = "feat19", not(feature = "feat22")))]
pub fn func_2069() {
    let v_2070 = 69 + 83;
    let v_2071 = 985;
    ext_1();
}
pub fn func_2072() {
    let v_2073 = func_660();
    func_1140();
    if 0 > 10 {
        let v_2074 = 22 + 54;
        let v_2075 = ext_3();
    } else {
        let _ = 16 + 34;
    }
}
pub mod inner_2076 {
    use super::*;
    pub type Alias_2077 = u64;
    #[cfg(any(feature = "feat14", feature = "feat11", feature = "feat15"))]
    pub struct Record_2078 {
        pub field_2079: u32,
        pub field_2080: u32,
    }
}
#[cfg(feature = "feat19")]
pub static COUNTER_2081: u32 = 0;
pub fn func_2082() {
    let v_2083 = func_359();
}
pub fn func_1419() {
    #[cfg(feature = "feat5")]
    let _ = 95 + 86;
    let v_2084 = ext_2();
}
#[cfg(feature = "feat8")]
pub fn func_2085() {
    ext_1();
    println!("msg_2086 {}", 1);
    #[cfg(feature = "feat14")]
    pub fn func_2087() {
        pub fn func_121() {
            pub fn func_2088() {
                println!("msg_2089 {}", 1);
                println!("msg_2090 {}", 1);
                let v_2091 = func_994();
            }
            #[cfg(feature = "feat16")]
            ext_3();
            match 0 {
                0 => {
                    let _ = 87 + 35;
                    let v_2092 = 93 + 46;
                    let w_2093 = 3;
                }
                _ => {}
            }
        }
    }
    func_1909();
}
pub enum Kind_2094 {
    Variant_2095,
    Variant_2096,
    #[cfg(feature = "feat21")]
    Variant_2097,
}
pub struct Handle_2098;
impl Handle_2098 {
    pub fn func_2099() {
        let v_2100 = 422;
        ext_0();
        pub fn func_2101() {
            if 9 > 10 {
                let v_2102 = func_1437();
            } else {
                let v_2103 = ext_3();
                #[cfg(feature = "feat21")]
                ext_1();
            }
            let v_2104 = func_262();
        }
    }
}
pub fn func_535() {
    let v_2105 = 73 + 64;
}
pub struct Handle_2106;
impl Handle_2106 {
    #[cfg(feature = "feat14")]
    pub fn func_2107() {
        let v_2108 = func_114();
        match 2 {
            0 => {
                pub fn func_2109() {
                    let w_2110 = 0;
                    let v_2111 = 660;
                    let w_2112 = 4;
                }
            }
            _ => {}
        }
        pub fn func_2113() {
            let v_2114 = func_1931();
            let v_2115 = func_692();
        }
    }
    pub fn func_2116() {
        println!("msg_2117 {}", 1);
        let v_2118 = 18 + 83;
    }
}
pub struct Record_2119 {
    pub field_2120: u32,
}
pub static COUNTER_2121: u32 = 0;
pub struct Handle_2122;
impl Handle_2122 {
    pub fn func_2123() {
        pub fn func_2124() {
            match 4 {
                0 => {
                    println!("msg_2125 {}", 1);
                    #[cfg(feature = "feat23")]
                    let v_2126 = func_1191();
                    println!("msg_2127 {}", 1);
                    #[cfg(feature = "feat4")]
                    let _ = 436;
                }
                _ => {}
            }
            ext_2();
            func_1629();
            match 2 {
                0 => {
                    let _ = 87 + 2;
                    println!("msg_2128 {}", 1);
                    let v_2129 = func_1908();
                    let v_2130 = ext_2();
                }
                _ => {}
            }
        }
    }
    pub fn func_2131() {
        if 1 > 10 {
            println!("msg_2132 {}", 1);
        } else {
            if 11 > 10 {
                let w_2133 = 3;
            } else {
                let w_2134 = 7;
                let w_2135 = 4;
                #[cfg(feature = "feat11")]
                let _ = 80 + 88;
                let v_2136 = func_609();
            }
            if 17 > 10 {
                let v_2137 = func_1847();
            } else {
                #[cfg(feature = "feat23")]
                let v_2138 = func_1638();
            }
            match 1 {
                0 => {
                    let w_2139 = 6;
                    let w_2140 = 6;
                }
                _ => {}
            }
            ext_1();
        }
        #[cfg(all(feature = "feat5", not(feature = "feat3")))]
        let _ = 47 + 99;
        if 15 > 10 {
            ext_1();
        } else {
            ext_2();
            let v_2141 = 813;
            let v_2142 = func_2043();
        }
        let v_2143 = func_1770();
    }
}
pub mod nested;
