#[cfg(feature = "feat4")]
pub fn func_1766() {
    func_1629();
    func_385();
}
#[cfg(feature = "feat3")]
pub struct Record_1767 {
    pub field_1768: u32,
}
use std::collections::HashMap;
pub const LIMIT_1769: u32 = func_1038();
pub fn func_1770() {
    pub fn func_1771() {
        let v_1772 = func_1052();
        let v_1773 = ext_3();
        pub fn func_1774() {
            pub fn func_1775() {
                let v_1776 = 98 + 83;
                func_1348();
                let v_1777 = func_896();
                let _ = 4;
            }
        }
        match 3 {
            0 => {
                #[cfg(feature = "feat11")]
                let _ = 84 + 61;
                let v_1778 = 22 + 72;
                let v_1779 = func_1037();
                #[cfg(feature = "feat27")]
                let v_1780 = func_177();
            }
            _ => {}
        }
    }
    println!("msg_1781 {}", 1);
    if 4 > 10 {
        println!("msg_1782 {}", 1);
        let v_1783 = func_143();
    } else {
        func_1701();
    }
    func_1395();
}
pub fn func_1547() {
    let v_1784 = 32 + 96;
}
pub struct Handle_1785;
impl Handle_1785 {
    pub fn func_1786() {
        ext_3();
        #[cfg(any(feature = "feat11", feature = "feat4"))]
        ext_1();
        println!("msg_1787 {}", 1);
        let v_1788 = 15;
    }
    pub fn func_1789() {
        match 1 {
            0 => {
                let v_1790 = func_1706();
            }
            _ => {}
        }
    }
}
#[cfg(any(feature = "feat28", feature = "feat5", feature = "feat1"))]
pub fn func_1791() {
    let v_1792 = 67 + 59;
}
#[cfg(feature = "feat5")]
pub fn func_1793() {
    let v_1794 = func_1094();
}
pub fn func_1795() {
    match 4 {
        0 => {
            let v_1796 = func_1144();
            let v_1797 = func_516();
        }
        _ => {}
    }
    let v_1798 = func_331();
}
pub static COUNTER_1799: u32 = 0;
pub fn func_1800() {
    #[cfg(feature = "feat28")]
    let v_1801 = 9;
    if 17 > 10 {
        println!("msg_1802 {}", 1);
    } else {
        pub fn func_1803() {
            pub fn func_1804() {
                func_78();
                let w_1805 = 1;
                let v_1806 = func_1581();
                let v_1807 = 42 + 53;
            }
            let v_1808 = func_730();
        }
        let v_1809 = ext_1();
        #[cfg(any(feature = "feat4", feature = "feat11"))]
        ext_1();
        println!("msg_1810 {}", 1);
    }
    let v_1811 = func_1759();
    let v_1812 = func_527();
}
pub fn func_1813() {
    func_1144();
    let v_1814 = func_1491();
}
pub fn func_1815() {
    if 5 > 10 {
        func_1512();
        match 0 {
            0 => {
                let _ = 996;
                func_1620();
                pub fn func_1816() {
                    let w_1817 = 7;
                    let v_1818 = 39 + 10;
                }
                println!("msg_1819 {}", 1);
            }
            _ => {}
        }
    } else {
        #[cfg(not(feature = "feat7"))]
        let v_1820 = 35 + 27;
        let v_1821 = 2 + 79;
        func_1795();
        let v_1822 = 872;
    }
    let v_1823 = func_644();
}
pub fn func_1824() {
    func_98();
    #[cfg(any(feature = "feat29", feature = "feat3"))]
    let v_1825 = 64 + 62;
    ext_0();
    if 16 > 10 {
        let _ = 916;
        if 14 > 10 {
            let v_1826 = ext_1();
            let _ = 712;
            println!("msg_1827 {}", 1);
            let _ = 54 + 33;
        } else {
            #[cfg(feature = "feat24")]
            func_1002();
            pub fn func_1828() {
                let v_1829 = func_1086();
                let v_1830 = 74 + 65;
                #[cfg(feature = "feat16")]
                let v_1831 = 90 + 60;
            }
        }
    } else {
        pub fn func_1832() {
            pub fn func_1833() {
                let w_1834 = 5;
                let v_1835 = func_571();
            }
        }
    }
}
pub struct Record_1836 {
    #[cfg(all(feature = "feat22", not(feature = "feat26")))]
    pub field_1837: u32,
}
pub mod inner_1838 {
    use super::*;
    pub type Alias_1839 = u64;
    pub struct Handle_1840;
    impl Handle_1840 {
        pub fn func_1841() {
            match 0 {
                0 => {
                    func_1800();
                    let v_1842 = func_707();
                    let v_1843 = 64 + 88;
                    ext_2();
                }
                _ => {}
            }
            ext_1();
        }
        pub fn func_1465() {
            if 14 > 10 {
                #[cfg(not(feature = "feat23"))]
                let _ = 78 + 6;
                func_314();
            } else {
                #[cfg(feature = "feat22")]
                let v_1844 = func_1002();
            }
            println!("msg_1845 {}", 1);
            match 0 {
                0 => {
                    let v_1846 = func_145();
                    println!("msg_1847 {}", 1);
                }
                _ => {}
            }
            #[cfg(not(feature = "feat7"))]
            pub fn func_1848() {
                let w_1849 = 2;
                let w_1850 = 7;
            }
        }
    }
}
pub fn func_1851() {
    let v_1852 = func_1731();
    func_984();
    #[cfg(any(feature = "feat8", feature = "feat3", feature = "feat14"))]
    ext_2();
}
pub fn func_1527() {
    let _ = 78;
    println!("msg_1853 {}", 1);
}
pub type Alias_1854 = u64;
#[cfg(any(feature = "feat19", feature = "feat27"))]
pub enum Kind_1855 {
    Variant_1856,
    Variant_1857,
    Variant_1858,
}
#[cfg(feature = "feat11")]
pub const LIMIT_1859: u32 = func_598();
pub fn func_1860() {
    func_1037();
    #[cfg(any(feature = "feat8", feature = "feat28"))]
    let v_1861 = 388;
    #[cfg(all(feature = "feat19", not(feature = "feat25")))]
    let v_1862 = 636;
    let v_1863 = 63;
}
#[cfg(feature = "feat6")]
pub static COUNTER_1864: u32 = 0;
pub fn func_1865() {
    #[cfg(feature = "feat5")]
    func_1251();
    ext_0();
    match 1 {
        0 => {
            match 0 {
                0 => {
                    func_1249();
                }
                _ => {}
            }
        }
        _ => {}
    }
}
#[cfg(not(feature = "feat26"))]
pub fn func_1866() {
    let v_1867 = 242;
}
#[cfg(feature = "feat3")]
pub fn func_1868() {
    let v_1869 = func_530();
}
pub type Alias_1870 = u64;
use std::collections::HashMap;
pub fn func_1871() {
    let v_1872 = 653;
}
pub fn func_1873() {
    pub fn func_1874() {
        ext_1();
        if 3 > 10 {
            if 2 > 10 {
                func_1742();
                let v_1875 = 863;
                let w_1876 = 5;
                let w_1877 = 2;
            } else {
                let v_1878 = func_1202();
            }
            if 16 > 10 {
                #[cfg(not(feature = "feat15"))]
                let v_1879 = 735;
            } else {
                let v_1880 = 54 + 33;
                let w_1881 = 1;
                ext_2();
            }
            #[cfg(feature = "feat1")]
            pub fn func_1882() {
                let w_1883 = 0;
            }
        } else {
            let v_1884 = ext_1();
            match 0 {
                0 => {
                    let w_1885 = 8;
                    ext_3();
                    let w_1886 = 4;
                }
                _ => {}
            }
            if 2 > 10 {
                let w_1887 = 5;
                func_1532();
                println!("msg_1888 {}", 1);
            } else {
                let w_1889 = 4;
            }
            pub fn func_1890() {
                let _ = 58 + 11;
                let v_1891 = func_1397();
            }
        }
    }
    let v_1892 = 997;
    let v_1893 = func_904();
}
pub mod inner_1894 {
    use super::*;
    pub fn func_1395() {
        let _ = 950;
        ext_0();
        func_101();
        let v_1895 = 96 + 43;
    }
}
#[cfg(any(feature = "feat6", feature = "feat24", feature = "feat11"))]
pub struct Record_1896 {
    pub field_1897: u32,
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_1898() {
    let v_1899 = func_1532();
    println!("msg_1900 {}", 1);
    #[cfg(feature = "feat14")]
    let v_1901 = ext_1();
    if 6 > 10 {
        pub fn func_1851() {
            #[cfg(feature = "feat9")]
            let v_1902 = 597;
            func_1636();
            let v_1903 = func_982();
        }
        #[cfg(feature = "feat14")]
        let v_1904 = ext_1();
        #[cfg(all(feature = "feat1", not(feature = "feat26")))]
        let v_1905 = 67 + 20;
        let v_1906 = ext_1();
    } else {
        if 8 > 10 {
            let v_1907 = func_365();
            println!("msg_1908 {}", 1);
            println!("msg_1909 {}", 1);
        } else {
            let v_1910 = func_1162();
        }
    }
}
pub struct Record_1911 {
    pub field_1912: u32,
}
#[cfg(feature = "feat6")]
pub fn func_1913() {
    let v_1914 = ext_1();
    println!("msg_1915 {}", 1);
    match 2 {
        0 => {
            #[cfg(any(feature = "feat11", feature = "feat16", feature = "feat13"))]
            pub fn func_1916() {
                let v_1917 = 77 + 63;
                let v_1918 = ext_1();
                match 2 {
                    0 => {
                        let w_1919 = 1;
                        let v_1920 = func_285();
                        let w_1921 = 2;
                        #[cfg(not(feature = "feat12"))]
                        let v_1922 = ext_1();
                    }
                    _ => {}
                }
                println!("msg_1923 {}", 1);
            }
            pub fn func_1924() {
                if 10 > 10 {
                    #[cfg(feature = "feat16")]
                    let _ = 991;
                    ext_3();
                } else {
                    let w_1925 = 3;
                    let v_1926 = 892;
                }
                func_124();
                let v_1927 = func_1544();
            }
            let v_1928 = 507;
        }
        _ => {}
    }
    let v_1929 = func_1228();
}
