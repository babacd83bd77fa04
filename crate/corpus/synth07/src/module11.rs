pub static COUNTER_1823: u32 = 0;
pub static COUNTER_1824: u32 = 0;
pub const LIMIT_1825: u32 = 364;
pub struct Record_1826 {
    pub field_1827: u32,
    pub field_1828: u32,
}
pub type Alias_1829 = u64;
#[cfg(any(feature = "feat12", feature = "feat3", feature = "feat19"))]
pub const LIMIT_1830: u32 = ext_0();
pub mod inner_1831 {
    use super::*;
    pub struct Record_1832 {
        pub field_1833: u32,
    }
}
pub fn func_1834() {
    match 4 {
        0 => {
            let v_1835 = ext_1();
            println!("msg_1836 {}", 1);
            match 4 {
                0 => {
                    println!("msg_1837 {}", 1);
                }
                _ => {}
            }
            println!("msg_1838 {}", 1);
        }
        _ => {}
    }
    let v_1839 = ext_1();
    #[cfg(feature = "feat19")]
    let v_1840 = 819;
}
pub enum Kind_1841 {
    #[cfg(feature = "feat12")]
    Variant_1842,
}
pub const LIMIT_1843: u32 = 503;
pub fn func_1844() {
    println!("msg_1845 {}", 1);
}
use std::collections::HashMap;
#[cfg(feature = "feat2")]
use std::collections::HashMap;
pub const LIMIT_1846: u32 = 57 + 5;
use std::collections::HashMap;
pub fn func_1847() {
    let v_1848 = 80 + 8;
}
pub fn func_124() {
    let v_1849 = func_1653();
    pub fn func_1850() {
        let v_1851 = ext_0();
    }
    if 19 > 10 {
        let v_1852 = ext_0();
    } else {
        let v_1853 = func_1008();
        let v_1854 = 2 + 21;
        println!("msg_1855 {}", 1);
        let v_1856 = func_1653();
    }
}
pub fn func_1360() {
    let v_1857 = func_147();
    let v_1858 = 85 + 96;
}
use std::collections::HashMap;
pub fn func_1859() {
    pub fn func_1860() {
        let v_1861 = 98 + 76;
        let v_1862 = 37 + 5;
    }
}
pub enum Kind_1863 {
    #[cfg(feature = "feat21")]
    Variant_1864,
    Variant_1865,
    Variant_1866,
}
pub fn func_1867() {
    let v_1868 = 810;
    pub fn func_1869() {
        func_1187();
        func_1571();
    }
    let v_1870 = ext_1();
}
pub fn func_1871() {
    match 3 {
        0 => {
            let _ = 69 + 31;
        }
        _ => {}
    }
}
pub struct Record_1872 {
    pub field_1873: u32,
    #[cfg(not(feature = "feat1"))]
    pub field_1874: u32,
    pub field_1875: u32,
}
#[cfg(not(feature = "feat25"))]
pub fn func_1876() {
    let v_1877 = 765;
}
pub type Alias_1878 = u64;
use std::collections::HashMap;
pub fn func_1879() {
    println!("msg_1880 {}", 1);
    let v_1881 = 631;
    match 0 {
        0 => {
            pub fn func_1882() {
                pub fn func_1462() {
                    let w_1883 = 4;
                    let w_1884 = 0;
                }
                pub fn func_1885() {
                    let v_1886 = func_971();
                }
                #[cfg(any(feature = "feat8", feature = "feat22", feature = "feat23"))]
                let v_1887 = func_1656();
            }
        }
        _ => {}
    }
    ext_3();
}
#[cfg(all(feature = "feat22", not(feature = "feat24")))]
pub fn func_1888() {
    ext_3();
}
pub type Alias_1889 = u64;
pub mod inner_1890 {
    use super::*;
    pub mod inner_1891 {
        use super::*;
        #[cfg(feature = "feat0")]
        pub static COUNTER_1892: u32 = 0;
        #[cfg(feature = "feat10")]
        pub mod inner_1893 {
            use super::*;
            pub struct Handle_1894;
            impl Handle_1894 {
                pub fn func_1500() {
                    println!("msg_1895 {}", 1);
                }
            }
        }
        pub type Alias_1896 = u64;
    }
    pub struct Record_1897 {
        #[cfg(all(feature = "feat22", not(feature = "feat25")))]
        pub field_1898: u32,
        pub field_1899: u32,
        pub field_1900: u32,
    }
    #[cfg(not(feature = "feat7"))]
    pub fn func_666() {
        let v_1901 = 97 + 55;
    }
}
pub static COUNTER_1902: u32 = 0;
pub type Alias_1903 = u64;
use std::collections::HashMap;
pub fn func_1904() {
    let _ = 41 + 51;
    #[cfg(feature = "feat13")]
    let _ = 29 + 27;
    #[cfg(any(feature = "feat0", feature = "feat17"))]
    func_560();
}
use std::collections::HashMap;
pub enum Kind_1905 {
    #[cfg(feature = "feat8")]
    Variant_1906,
    Variant_1907,
    Variant_1908,
}
pub fn func_1909() {
    pub fn func_1910() {
        if 11 > 10 {
            let v_1911 = func_1644();
        } else {
            let v_1912 = 15 + 68;
            println!("msg_1913 {}", 1);
            let v_1914 = 18 + 7;
            match 3 {
                0 => {
                    let w_1915 = 4;
                    #[cfg(any(feature = "feat12", feature = "feat23", feature = "feat3"))]
                    let v_1916 = func_1771();
                    let v_1917 = func_1082();
                    let _ = 548;
                }
                _ => {}
            }
        }
        println!("msg_1918 {}", 1);
        let v_1919 = ext_1();
    }
    let _ = 750;
    #[cfg(feature = "feat17")]
    pub fn func_1920() {
        #[cfg(feature = "feat22")]
        func_1491();
        if 8 > 10 {
            if 4 > 10 {
                let v_1921 = 310;
            } else {
                func_224();
                let w_1922 = 8;
            }
        } else {
            ext_2();
        }
        if 13 > 10 {
            match 4 {
                0 => {
                    let v_1923 = func_667();
                    let w_1924 = 1;
                }
                _ => {}
            }
            match 0 {
                0 => {
                    let v_1925 = 39 + 98;
                    let v_1926 = func_1187();
                    #[cfg(feature = "feat23")]
                    let v_1927 = ext_3();
                    let w_1928 = 6;
                }
                _ => {}
            }
        } else {
            #[cfg(feature = "feat21")]
            let v_1929 = func_1412();
            pub fn func_1930() {
                let w_1931 = 8;
                let v_1932 = func_80();
                let v_1933 = ext_1();
            }
            let v_1934 = func_283();
        }
        let v_1935 = 851;
    }
    if 13 > 10 {
        println!("msg_1936 {}", 1);
        pub fn func_1719() {
            func_1181();
            if 4 > 10 {
                let _ = 616;
                let w_1937 = 5;
                func_1677();
            } else {
                let w_1938 = 6;
                let w_1939 = 8;
                let v_1940 = func_1819();
                let v_1941 = ext_0();
            }
            func_581();
        }
        println!("msg_1942 {}", 1);
    } else {
        func_1480();
    }
}
pub fn func_1943() {
    #[cfg(any(feature = "feat21", feature = "feat12", feature = "feat6"))]
    let _ = 571;
}
pub fn func_1944() {
    match 4 {
        0 => {
            match 2 {
                0 => {
                    let v_1945 = 596;
                }
                _ => {}
            }
        }
        _ => {}
    }
    let v_1946 = func_1860();
}
pub fn func_1506() {
    match 3 {
        0 => {
            println!("msg_1947 {}", 1);
            #[cfg(feature = "feat12")]
            let v_1948 = 41 + 17;
            #[cfg(feature = "feat18")]
            let v_1949 = func_773();
            let v_1950 = func_1276();
        }
        _ => {}
    }
    let _ = 13 + 94;
    match 4 {
        0 => {
            let v_1951 = func_1669();
            let _ = 71 + 80;
        }
        _ => {}
    }
}
pub fn func_237() {
    let v_1952 = 575;
    let v_1953 = func_1400();
    let v_1954 = func_1792();
    match 1 {
        0 => {
            #[cfg(feature = "feat2")]
            let v_1955 = ext_1();
            if 1 > 10 {
                let v_1956 = func_518();
                let v_1957 = 856;
                match 1 {
                    0 => {
                        println!("msg_1958 {}", 1);
                        let v_1959 = 657;
                    }
                    _ => {}
                }
            } else {
                #[cfg(not(feature = "feat7"))]
                pub fn func_1960() {
                    #[cfg(not(feature = "feat16"))]
                    func_237();
                }
                if 4 > 10 {
                    let w_1961 = 4;
                    func_1358();
                    let v_1962 = func_765();
                    let w_1963 = 1;
                } else {
                    func_1609();
                    let w_1964 = 7;
                }
                if 18 > 10 {
                    let w_1965 = 4;
                    #[cfg(not(feature = "feat1"))]
                    let v_1966 = 482;
                    let v_1967 = 2 + 69;
                    let v_1968 = ext_3();
                } else {
                    #[cfg(any(feature = "feat19", feature = "feat10", feature = "feat6"))]
                    let v_1969 = 345;
                    let v_1970 = 58 + 69;
                }
            }
            let v_1971 = 43 + 52;
            println!("msg_1972 {}", 1);
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub mod inner_1973 {
    use super::*;
    pub enum Kind_1974 {
        #[cfg(feature = "feat2")]
        Variant_1975,
        Variant_1976,
    }
    pub struct Handle_1977;
    impl Handle_1977 {
        pub fn func_1978() {
            println!("msg_1979 {}", 1);
        }
        pub fn func_147() {
            pub fn func_1980() {
                let _ = 66 + 58;
            }
            #[cfg(feature = "feat17")]
            func_1743();
        }
    }
}
pub mod inner_1981 {
    use super::*;
    pub const LIMIT_1982: u32 = func_1043();
    pub type Alias_1983 = u64;
    pub enum Kind_1984 {
        #[cfg(feature = "feat8")]
        Variant_1985,
        Variant_1986,
        #[cfg(feature = "feat0")]
        Variant_1987,
    }
}
