pub fn func_908() {
    func_51();
}
pub fn func_1930() {
    ext_0();
    println!("msg_1931 {}", 1);
    func_707();
    let v_1932 = ext_2();
}
pub fn func_1933() {
    let v_1934 = func_941();
    println!("msg_1935 {}", 1);
    let v_1936 = 66;
}
pub static COUNTER_1937: u32 = 0;
#[cfg(feature = "feat22")]
pub enum Kind_1938 {
    Variant_1939,
    Variant_1940,
}
pub fn func_1941() {
    match 3 {
        0 => {
            if 13 > 10 {
                ext_0();
                let v_1942 = func_1188();
                let v_1943 = ext_1();
            } else {
                #[cfg(feature = "feat11")]
                let v_1944 = func_403();
            }
            let _ = 77 + 7;
            let v_1945 = 58 + 0;
        }
        _ => {}
    }
    if 3 > 10 {
        func_961();
        match 4 {
            0 => {
                match 1 {
                    0 => {
                        let v_1946 = ext_3();
                        #[cfg(feature = "feat8")]
                        func_51();
                        let v_1947 = func_227();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        if 3 > 10 {
            let v_1948 = 384;
        } else {
            let v_1949 = 93 + 57;
            let v_1950 = ext_2();
        }
        if 5 > 10 {
            func_477();
            pub fn func_1951() {
                #[cfg(feature = "feat14")]
                let v_1952 = 27 + 24;
            }
            if 19 > 10 {
                ext_1();
                let w_1953 = 8;
                let v_1954 = 51 + 1;
            } else {
                println!("msg_1955 {}", 1);
                let v_1956 = func_1866();
                let w_1957 = 8;
            }
            let v_1958 = ext_0();
        } else {
            func_289();
            pub fn func_1959() {
                let w_1960 = 8;
            }
            let v_1961 = func_385();
        }
    } else {
        let _ = 23 + 83;
        pub fn func_1962() {
            println!("msg_1963 {}", 1);
            if 1 > 10 {
                func_974();
            } else {
                #[cfg(feature = "feat14")]
                func_988();
                let w_1964 = 7;
                let w_1965 = 4;
                ext_1();
            }
        }
    }
}
pub const LIMIT_1966: u32 = 33 + 21;
pub fn func_1967() {
    println!("msg_1968 {}", 1);
    let v_1969 = 0 + 66;
    let v_1970 = func_1422();
}
pub fn func_1971() {
    let v_1972 = ext_0();
    let v_1973 = ext_3();
    let _ = 407;
}
pub struct Record_1974 {
    pub field_1975: u32,
    pub field_1976: u32,
    #[cfg(feature = "feat11")]
    pub field_1977: u32,
}
pub struct Record_1978 {
    pub field_1979: u32,
    pub field_1980: u32,
    pub field_1981: u32,
}
pub enum Kind_1982 {
    Variant_1983,
    #[cfg(any(feature = "feat11", feature = "feat27"))]
    Variant_1984,
}
#[cfg(feature = "feat3")]
pub const LIMIT_1985: u32 = func_1184();
pub mod inner_1986 {
    use super::*;
    #[cfg(not(feature = "feat18"))]
    pub struct Record_1987 {
        pub field_1988: u32,
        pub field_1989: u32,
        pub field_1990: u32,
        pub field_1991: u32,
    }
    pub mod inner_1992 {
        use super::*;
        pub fn func_1401() {
            let v_1993 = func_941();
            println!("msg_1994 {}", 1);
            pub fn func_1995() {
                let v_1996 = func_114();
            }
            match 2 {
                0 => {
                    #[cfg(feature = "feat8")]
                    let v_1997 = 251;
                    let v_1998 = 689;
                }
                _ => {}
            }
        }
    }
}
pub enum Kind_1999 {
    #[cfg(feature = "feat4")]
    Variant_2000,
    Variant_2001,
}
pub struct Record_2002 {
    pub field_2003: u32,
    pub field_2004: u32,
    pub field_2005: u32,
    pub field_2006: u32,
}
#[cfg(feature = "feat29")]
pub fn func_2007() {
    let _ = 36 + 55;
    let _ = 886;
    match 2 {
        0 => {
            let v_2008 = 47 + 59;
        }
        _ => {}
    }
}
pub struct Handle_2009;
impl Handle_2009 {
    pub fn func_2010() {
        let v_2011 = func_145();
    }
}
pub fn func_2012() {
    pub fn func_616() {
        let v_2013 = 5 + 48;
        pub fn func_889() {
            pub fn func_2014() {
                let v_2015 = func_1395();
                let v_2016 = ext_2();
                let v_2017 = func_1126();
                let w_2018 = 2;
            }
            #[cfg(feature = "feat11")]
            func_1263();
        }
    }
}
pub enum Kind_2019 {
    Variant_2020,
    Variant_2021,
}
use std::collections::HashMap;
pub struct Record_2022 {
    pub field_2023: u32,
    pub field_2024: u32,
    pub field_2025: u32,
    pub field_2026: u32,
}
pub static COUNTER_2027: u32 = 0;
pub fn func_160() {
    println!("msg_2028 {}", 1);
    let v_2029 = 744;
    if 16 > 10 {
        let v_2030 = 91 + 69;
        let v_2031 = func_1380();
        let v_2032 = func_723();
    } else {
        match 0 {
            0 => {
                let _ = 390;
                func_1800();
                match 3 {
                    0 => {
                        let w_2033 = 5;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub type Alias_2034 = u64;
#[cfg(feature = "feat6")]
pub fn func_2035() {
    let v_2036 = ext_1();
    println!("msg_2037 {}", 1);
    func_20();
}
pub fn func_2038() {
    let v_2039 = func_1();
}
pub type Alias_2040 = u64;
pub struct Handle_2041;
#[cfg(feature = "feat5")]
impl Handle_2041 {
    pub fn func_2042() {
        if 5 > 10 {
            #[cfg(any(feature = "feat6", feature = "feat27", feature = "feat9"))]
            let v_2043 = 19 + 91;
            if 5 > 10 {
                let v_2044 = func_1851();
                let w_2045 = 2;
                let w_2046 = 1;
            } else {
                println!("msg_2047 {}", 1);
            }
            println!("msg_2048 {}", 1);
        } else {
            func_698();
            let v_2049 = func_840();
            func_477();
        }
        match 2 {
            0 => {
                func_1184();
                if 6 > 10 {
                    let _ = 928;
                    #[cfg(feature = "feat16")]
                    let v_2050 = ext_3();
                    println!("msg_2051 {}", 1);
                } else {
                    let w_2052 = 7;
                }
                let v_2053 = 33 + 78;
            }
            _ => {}
        }
        pub fn func_2054() {
            let v_2055 = ext_0();
            pub fn func_2056() {
                let v_2057 = func_1800();
                #[cfg(feature = "feat20")]
                let v_2058 = 399;
                println!("msg_2059 {}", 1);
                #[cfg(any(feature = "feat27", feature = "feat28", feature = "feat24"))]
                let v_2060 = func_1056();
            }
        }
        let v_2061 = 80;
    }
}
#[cfg(not(feature = "feat17"))]
pub fn func_2062() {
    let v_2063 = 383;
    let v_2064 = 322;
    if 13 > 10 {
        let v_2065 = func_1924();
        let v_2066 = func_1795();
        pub fn func_2067() {
            let v_2068 = 666;
            pub fn func_2069() {
                let w_2070 = 1;
            }
        }
        #[cfg(not(feature = "feat21"))]
        let v_2071 = func_1527();
    } else {
        pub fn func_2072() {
            let v_2073 = 522;
            let v_2074 = 24 + 16;
        }
        let v_2075 = func_124();
    }
    if 0 > 10 {
        let _ = 94 + 99;
        let _ = 497;
        match 2 {
            0 => {
                println!("msg_2076 {}", 1);
            }
            _ => {}
        }
    } else {
        let v_2077 = 41 + 78;
    }
}
pub const LIMIT_2078: u32 = func_814();
pub const LIMIT_2079: u32 = func_1187();
pub mod inner_2080 {
    use super::*;
    pub enum Kind_2081 {
        Variant_2082,
        Variant_2083,
    }
    use std::collections::HashMap;
    pub fn func_1913() {
        pub fn func_2084() {
            let v_2085 = 320;
            let v_2086 = 634;
            println!("msg_2087 {}", 1);
        }
        println!("msg_2088 {}", 1);
        ext_0();
        pub fn func_2089() {
            match 3 {
                0 => {
                    let v_2090 = 42 + 65;
                    let w_2091 = 3;
                }
                _ => {}
            }
            println!("msg_2092 {}", 1);
        }
    }
}
#[cfg(not(feature = "feat23"))]
pub const LIMIT_2093: u32 = ext_2();
pub enum Kind_2094 {
    Variant_2095,
    Variant_2096,
    Variant_2097,
}
pub fn func_2098() {
    let v_2099 = ext_0();
    let v_2100 = 30 + 92;
    if 2 > 10 {
        let v_2101 = 652;
        let v_2102 = func_1602();
    } else {
        let v_2103 = func_145();
        match 1 {
            0 => {
                let v_2104 = 756;
                #[cfg(feature = "feat5")]
                let _ = 27 + 29;
                let v_2105 = ext_3();
                match 2 {
                    0 => {
                        let w_2106 = 3;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat20")]
pub enum Kind_2107 {
    Variant_2108,
    Variant_2109,
    #[cfg(not(feature = "feat10"))]
    Variant_2110,
}
