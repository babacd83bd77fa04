#[cfg(feature = "feat5")]
pub type Alias_1874 = u64;
#[cfg(feature = "feat15")]
pub type Alias_1875 = u64;
pub fn func_1876() {
    ext_1();
    let v_1877 = ext_1();
    if 8 > 10 {
        let v_1878 = func_275();
        #[cfg(not(feature = "feat22"))]
        let v_1879 = 99 + 82;
        func_216();
    } else {
        let v_1880 = func_1692();
        let v_1881 = ext_0();
        let v_1882 = 70 + 78;
        let v_1883 = func_1853();
    }
    println!("msg_1884 {}", 1);
}
pub fn func_397() {
    println!("msg_1885 {}", 1);
    println!("msg_1886 {}", 1);
}
#[cfg(feature = "feat2")]
pub fn func_1887() {
    let v_1888 = 929;
    println!("msg_1889 {}", 1);
}
pub fn func_1890() {
    println!("msg_1891 {}", 1);
    let v_1892 = 90 + 68;
    println!("msg_1893 {}", 1);
}
pub fn func_1894() {
    let v_1895 = func_210();
}
pub mod inner_1896 {
    use super::*;
    #[cfg(not(feature = "feat1"))]
    pub mod inner_1897 {
        use super::*;
        pub mod inner_1898 {
            use super::*;
            pub fn func_1899() {
                let v_1900 = 10 + 83;
                let w_1901 = 2;
                println!("msg_1902 {}", 1);
            }
        }
        pub fn func_121() {
            let v_1903 = func_1847();
            match 0 {
                0 => {
                    let v_1904 = 868;
                    let v_1905 = func_997();
                }
                _ => {}
            }
            let v_1906 = ext_1();
            let v_1907 = func_1570();
        }
    }
    pub fn func_1908() {
        pub fn func_1909() {
            match 0 {
                0 => {
                    let w_1910 = 7;
                    ext_0();
                    let w_1911 = 3;
                    func_1();
                }
                _ => {}
            }
            let v_1912 = func_1065();
        }
        let v_1913 = 1 + 80;
        let v_1914 = 799;
        if 16 > 10 {
            pub fn func_1915() {
                println!("msg_1916 {}", 1);
                #[cfg(feature = "feat2")]
                let v_1917 = 879;
                let v_1918 = 544;
            }
            let v_1919 = ext_0();
            let v_1920 = 27 + 27;
        } else {
            let v_1921 = func_1565();
            let _ = 461;
        }
    }
}
pub fn func_1922() {
    let v_1923 = ext_1();
    let v_1924 = ext_1();
    let v_1925 = ext_3();
    pub fn func_1926() {
        let v_1927 = func_448();
    }
}
pub static COUNTER_1928: u32 = 0;
pub type Alias_1929 = u64;
use std::collections::HashMap;
pub struct Handle_1930;
impl Handle_1930 {
    pub fn func_1931() {
        match 0 {
            0 => {
                pub fn func_1932() {
                    let v_1933 = ext_0();
                    let w_1934 = 6;
                    let v_1935 = 776;
                    let w_1936 = 7;
                }
            }
            _ => {}
        }
        match 0 {
            0 => {
                println!("msg_1937 {}", 1);
                let v_1938 = func_223();
                match 4 {
                    0 => {
                        let v_1939 = 58 + 36;
                        let v_1940 = func_994();
                    }
                    _ => {}
                }
                let _ = 32 + 64;
            }
            _ => {}
        }
    }
}
pub type Alias_1941 = u64;
pub fn func_1150() {
    match 2 {
        0 => {
            let _ = 53 + 14;
            println!("msg_1942 {}", 1);
        }
        _ => {}
    }
    pub fn func_1922() {
        func_401();
        let v_1943 = 85 + 10;
        let v_1944 = ext_1();
        #[cfg(feature = "feat14")]
        let v_1945 = func_318();
    }
    func_1206();
    func_885();
}
pub const LIMIT_1946: u32 = func_1385();
#[cfg(not(feature = "feat9"))]
pub fn func_1947() {
    match 0 {
        0 => {
            pub fn func_1791() {
                println!("msg_1948 {}", 1);
                let _ = 79 + 65;
                func_1375();
                if 10 > 10 {
                    let w_1949 = 7;
                } else {
                    let w_1950 = 1;
                }
            }
            ext_2();
        }
        _ => {}
    }
    let _ = 51 + 88;
    let v_1951 = func_1926();
}
pub fn func_1952() {
    func_1402();
    println!("msg_1953 {}", 1);
    if 14 > 10 {
        let v_1954 = ext_3();
        func_1437();
        println!("msg_1955 {}", 1);
    } else {
        let v_1956 = func_1773();
        println!("msg_1957 {}", 1);
    }
    println!("msg_1958 {}", 1);
}
pub fn func_1959() {
    match 4 {
        0 => {
            func_1392();
            let v_1960 = 62 + 44;
            match 3 {
                0 => {
                    if 8 > 10 {
                        let w_1961 = 1;
                        let v_1962 = ext_0();
                    } else {
                        let w_1963 = 2;
                        let w_1964 = 1;
                        println!("msg_1965 {}", 1);
                        let w_1966 = 4;
                    }
                    if 16 > 10 {
                        #[cfg(any(feature = "feat2", feature = "feat23", feature = "feat4"))]
                        let _ = 464;
                    } else {
                        let w_1967 = 5;
                        func_1051();
                        let v_1968 = ext_2();
                    }
                    if 6 > 10 {
                        func_91();
                        let w_1969 = 8;
                    } else {
                        let v_1970 = ext_0();
                        let w_1971 = 8;
                        println!("msg_1972 {}", 1);
                    }
                    func_1931();
                }
                _ => {}
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat14")]
    func_1469();
    pub fn func_1973() {
        match 3 {
            0 => {
                let v_1974 = func_1256();
                let _ = 58 + 70;
                #[cfg(feature = "feat12")]
                let v_1975 = 677;
                match 1 {
                    0 => {
                        ext_3();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        println!("msg_1976 {}", 1);
    }
}
use std::collections::HashMap;
pub fn func_1977() {
    #[cfg(feature = "feat0")]
    let _ = 20 + 72;
    let v_1978 = 666;
    println!("msg_1979 {}", 1);
}
pub fn func_1980() {
    let v_1981 = func_1195();
}
pub static COUNTER_1982: u32 = 0;
pub type Alias_1983 = u64;
pub fn func_1984() {
    let _ = 13 + 33;
}
use std::collections::HashMap;
pub type Alias_1985 = u64;
pub static COUNTER_1986: u32 = 0;
pub const LIMIT_1987: u32 = ext_1();
use std::collections::HashMap;
#[cfg(feature = "feat21")]
pub mod inner_1988 {
    use super::*;
    pub struct Record_1989 {
        #[cfg(any(feature = "feat23", feature = "feat23"))]
        pub field_1990: u32,
        pub field_1991: u32,
        pub field_1992: u32,
        pub field_1993: u32,
    }
    #[cfg(feature = "feat23")]
    pub fn func_1994() {
        let v_1995 = func_885();
        pub fn func_1996() {
            pub fn func_1997() {
                let w_1998 = 7;
            }
        }
        let v_1999 = 123;
        let v_2000 = 27;
    }
}
pub type Alias_2001 = u64;
pub static COUNTER_2002: u32 = 0;
pub enum Kind_2003 {
    #[cfg(feature = "feat4")]
    Variant_2004,
    Variant_2005,
    Variant_2006,
    Variant_2007,
}
pub struct Record_2008 {
    pub field_2009: u32,
    pub field_2010: u32,
    pub field_2011: u32,
    pub field_2012: u32,
}
pub enum Kind_2013 {
    Variant_2014,
    Variant_2015,
    Variant_2016,
    Variant_2017,
}
pub fn func_2018() {
    let v_2019 = 3 + 74;
}
#[cfg(feature = "feat4")]
pub struct Record_2020 {
    pub field_2021: u32,
    pub field_2022: u32,
}
pub fn func_2023() {
    if 1 > 10 {
        let v_2024 = 462;
        func_1515();
    } else {
        println!("msg_2025 {}", 1);
        let _ = 855;
    }
    if 19 > 10 {
        pub fn func_2026() {
            let v_2027 = ext_0();
            let v_2028 = func_879();
            println!("msg_2029 {}", 1);
            pub fn func_697() {
                let w_2030 = 4;
                func_704();
                let w_2031 = 0;
            }
        }
        match 0 {
            0 => {
                let v_2032 = func_1847();
                let v_2033 = 67 + 82;
            }
            _ => {}
        }
        match 1 {
            0 => {
                #[cfg(feature = "feat0")]
                let v_2034 = ext_0();
                println!("msg_2035 {}", 1);
                #[cfg(any(feature = "feat14", feature = "feat6", feature = "feat11"))]
                ext_2();
            }
            _ => {}
        }
    } else {
        println!("msg_2036 {}", 1);
        match 0 {
            0 => {
                #[cfg(feature = "feat5")]
                let v_2037 = ext_0();
                #[cfg(any(feature = "feat11", feature = "feat4", feature = "feat21"))]
                pub fn func_2038() {
                    #[cfg(all(feature = "feat23", not(feature = "feat18")))]
                    let v_2039 = 9 + 75;
                    let w_2040 = 5;
                    let v_2041 = func_535();
                    #[cfg(not(feature = "feat17"))]
                    let v_2042 = 674;
                }
            }
            _ => {}
        }
    }
}
