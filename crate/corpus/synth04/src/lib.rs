#[cfg(feature = "feat14")]
pub mod module0;
#[cfg(not(feature = "feat2"))]
pub mod module1;
pub mod module2;
pub mod module3;
pub mod module4;
pub mod module5;
pub mod module6;
pub mod module7;
pub mod module8;
#[cfg(feature = "feat6")]
pub mod module9;
pub mod module10;
pub fn func_1860() {
    if 10 > 10 {
        pub fn func_1861() {
            match 2 {
                0 => {
                    let w_1862 = 0;
                    let v_1863 = func_807();
                    let v_1864 = func_1400();
                }
                _ => {}
            }
            let v_1865 = func_982();
            let v_1866 = ext_1();
            #[cfg(feature = "feat8")]
            pub fn func_1867() {
                println!("msg_1868 {}", 1);
                let w_1869 = 8;
                let v_1870 = 88 + 73;
            }
        }
        func_1849();
        let v_1871 = func_1663();
    } else {
        ext_1();
    }
}
#[cfg(feature = "feat18")]
pub enum Kind_1872 {
    Variant_1873,
    Variant_1874,
    Variant_1875,
    Variant_1876,
}
pub type Alias_1877 = u64;
#[cfg(all(feature = "feat8", not(feature = "feat12")))]
pub fn func_1878() {
    match 1 {
        0 => {
            println!("msg_1879 {}", 1);
            let v_1880 = func_1480();
            ext_1();
            let v_1881 = ext_3();
        }
        _ => {}
    }
    println!("msg_1882 {}", 1);
}
#[cfg(not(feature = "feat5"))]
pub struct Record_1883 {
    pub field_1884: u32,
}
pub const LIMIT_1885: u32 = 876;
use std::collections::HashMap;
#[cfg(feature = "feat9")]
pub fn func_1886() {
    let v_1887 = func_1640();
    let v_1888 = 64 + 22;
    let v_1889 = 662;
    pub fn func_1890() {
        pub fn func_1891() {
            match 4 {
                0 => {
                    func_260();
                    #[cfg(feature = "feat16")]
                    let v_1892 = func_893();
                    let v_1893 = 42 + 41;
                }
                _ => {}
            }
            func_1728();
            match 2 {
                0 => {
                    let v_1894 = 53 + 41;
                    let v_1895 = 85;
                    let v_1896 = 112;
                    let v_1897 = 699;
                }
                _ => {}
            }
            #[cfg(any(feature = "feat18", feature = "feat10"))]
            let v_1898 = ext_3();
        }
    }
}
pub fn func_1899() {
    println!("msg_1900 {}", 1);
    pub fn func_806() {
        println!("msg_1901 {}", 1);
        ext_3();
        match 2 {
            0 => {
                let v_1902 = func_1787();
                let v_1903 = ext_0();
                let v_1904 = func_1526();
            }
            _ => {}
        }
    }
}
pub struct Handle_1905;
impl Handle_1905 {
    #[cfg(any(feature = "feat9", feature = "feat6", feature = "feat6"))]
    pub fn func_1906() {
        println!("msg_1907 {}", 1);
        let v_1908 = func_1729();
    }
}
pub fn func_1466() {
    let v_1909 = 98 + 65;
    #[cfg(any(feature = "feat17", feature = "feat18", feature = "feat17"))]
    pub fn func_1910() {
        let v_1911 = func_1685();
        let v_1912 = func_1390();
        func_360();
    }
}
pub fn func_1913() {
    let v_1914 = ext_3();
    func_1787();
}
pub static COUNTER_1915: u32 = 0;
use std::collections::HashMap;
pub enum Kind_1916 {
    Variant_1917,
}
pub fn func_1134() {
    #[cfg(feature = "feat10")]
    let v_1918 = 783;
    let v_1919 = 70 + 82;
    let v_1920 = 19 + 73;
    let v_1921 = ext_3();
}
pub static COUNTER_1922: u32 = 0;
pub const LIMIT_1923: u32 = 4 + 32;
pub enum Kind_1924 {
    #[cfg(any(feature = "feat16", feature = "feat9", feature = "feat16"))]
    Variant_1925,
    Variant_1926,
}
pub fn func_1927() {
    let v_1928 = 17 + 18;
    pub fn func_1355() {
        let v_1929 = 923;
        if 15 > 10 {
            if 10 > 10 {
                let _ = 86 + 49;
                let v_1930 = func_119();
                #[cfg(not(feature = "feat7"))]
                let v_1931 = func_278();
            } else {
                let _ = 586;
                let w_1932 = 3;
                let w_1933 = 3;
                func_838();
            }
        } else {
            #[cfg(any(feature = "feat0", feature = "feat0", feature = "feat18"))]
            let v_1934 = ext_2();
            println!("msg_1935 {}", 1);
        }
        let v_1936 = func_1125();
        let v_1937 = ext_3();
    }
    let v_1938 = 47 + 96;
}
use std::collections::HashMap;
pub fn func_1939() {
    let v_1940 = ext_0();
    if 8 > 10 {
        #[cfg(feature = "feat10")]
        let v_1941 = func_1860();
        println!("msg_1942 {}", 1);
        let _ = 77 + 35;
        println!("msg_1943 {}", 1);
    } else {
        let v_1944 = 591;
        pub fn func_1945() {
            if 17 > 10 {
                let w_1946 = 7;
                let v_1947 = func_1242();
                #[cfg(feature = "feat3")]
                let v_1948 = func_806();
            } else {
                #[cfg(not(feature = "feat7"))]
                ext_1();
                let w_1949 = 3;
                let v_1950 = func_125();
                let w_1951 = 0;
            }
            if 17 > 10 {
                let v_1952 = func_1697();
                func_854();
            } else {
                let w_1953 = 8;
                println!("msg_1954 {}", 1);
                let w_1955 = 7;
            }
            match 4 {
                0 => {
                    println!("msg_1956 {}", 1);
                    #[cfg(feature = "feat18")]
                    let _ = 191;
                }
                _ => {}
            }
        }
        let v_1957 = 880;
    }
    let v_1958 = ext_1();
    pub fn func_1959() {
        println!("msg_1960 {}", 1);
        let _ = 184;
        ext_3();
        match 4 {
            0 => {
                let v_1961 = 98 + 62;
            }
            _ => {}
        }
    }
}
pub struct Record_1962 {
    pub field_1963: u32,
    pub field_1964: u32,
    pub field_1965: u32,
}
pub fn func_1966() {
    pub fn func_1967() {
        let v_1968 = 393;
        match 3 {
            0 => {
                pub fn func_1969() {
                    let v_1970 = ext_2();
                    let w_1971 = 7;
                }
                func_370();
            }
            _ => {}
        }
        func_1765();
        if 9 > 10 {
            let v_1972 = ext_1();
            let v_1973 = func_57();
            if 7 > 10 {
                let v_1974 = func_17();
                let w_1975 = 7;
            } else {
                let w_1976 = 4;
                let v_1977 = func_1139();
                let w_1978 = 3;
                ext_2();
            }
        } else {
            pub fn func_1979() {
                let v_1980 = ext_2();
            }
            let v_1981 = func_796();
            #[cfg(all(feature = "feat16", not(feature = "feat11")))]
            let _ = 66 + 77;
        }
    }
}
#[cfg(any(feature = "feat1", feature = "feat14", feature = "feat9"))]
pub fn func_1982() {
    let v_1983 = 803;
    pub fn func_1497() {
        if 18 > 10 {
            pub fn func_1984() {
                func_1215();
                let v_1985 = func_575();
                #[cfg(feature = "feat17")]
                let v_1986 = 169;
                let v_1987 = 62 + 88;
            }
            let _ = 61 + 17;
        } else {
            println!("msg_1988 {}", 1);
        }
        let _ = 200;
        pub fn func_1989() {
            let v_1990 = func_1984();
            pub fn func_1991() {
                let _ = 686;
                #[cfg(any(feature = "feat16", feature = "feat17", feature = "feat17"))]
                let v_1992 = func_70();
                let v_1993 = ext_1();
            }
            pub fn func_1994() {
                let v_1995 = 884;
                let v_1996 = 55 + 84;
            }
            let v_1997 = func_282();
        }
        #[cfg(feature = "feat18")]
        let v_1998 = 282;
    }
}
pub fn func_1999() {
    println!("msg_2000 {}", 1);
    let v_2001 = 151;
    match 3 {
        0 => {
            func_1969();
            if 9 > 10 {
                match 1 {
                    0 => {
                        let v_2002 = 712;
                    }
                    _ => {}
                }
                #[cfg(not(feature = "feat15"))]
                let v_2003 = ext_2();
                func_156();
                let _ = 942;
            } else {
                let v_2004 = ext_3();
            }
            #[cfg(feature = "feat1")]
            let v_2005 = 837;
        }
        _ => {}
    }
    let _ = 305;
}
#[cfg(feature = "feat13")]
pub fn func_2006() {
    let v_2007 = func_493();
    let v_2008 = 89 + 89;
    ext_3();
    #[cfg(any(feature = "feat14", feature = "feat16", feature = "feat17"))]
    func_1438();
}
pub fn func_2009() {
    let v_2010 = 620;
    func_377();
    #[cfg(feature = "feat1")]
    let v_2011 = func_637();
    match 0 {
        0 => {
            match 2 {
                0 => {
                    pub fn func_2012() {
                        let v_2013 = func_1400();
                    }
                    #[cfg(feature = "feat18")]
                    let v_2014 = 581;
                    let _ = 220;
                }
                _ => {}
            }
        }
        _ => {}
    }
}
#[cfg(feature = "feat17")]
pub fn func_262() {
    let v_2015 = ext_3();
    pub fn func_2016() {
        if 11 > 10 {
            #[cfg(feature = "feat18")]
            let v_2017 = func_1698();
            match 0 {
                0 => {
                    println!("msg_2018 {}", 1);
                    let v_2019 = ext_1();
                    let v_2020 = func_705();
                }
                _ => {}
            }
            let v_2021 = func_934();
        } else {
            func_1890();
            let v_2022 = 806;
        }
        match 4 {
            0 => {
                #[cfg(feature = "feat18")]
                let v_2023 = 909;
                pub fn func_2024() {
                    let w_2025 = 2;
                    let v_2026 = func_1526();
                    let v_2027 = ext_2();
                }
            }
            _ => {}
        }
        pub fn func_2028() {
            let v_2029 = 61 + 30;
            if 4 > 10 {
                let w_2030 = 3;
                let w_2031 = 5;
                #[cfg(feature = "feat18")]
                let v_2032 = 69 + 3;
                let w_2033 = 2;
            } else {
                println!("msg_2034 {}", 1);
                ext_3();
                ext_1();
            }
            if 6 > 10 {
                let v_2035 = 796;
            } else {
                let v_2036 = ext_3();
                println!("msg_2037 {}", 1);
            }
            let v_2038 = func_1939();
        }
    }
    let v_2039 = ext_2();
}
