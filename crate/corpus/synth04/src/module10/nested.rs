pub fn func_194() {
    let v_1784 = 21 + 60;
    println!("msg_1785 {}", 1);
}
pub fn func_1549() {
    #[cfg(feature = "feat0")]
    let v_1786 = func_1016();
}
pub fn func_1787() {
    if 0 > 10 {
        let v_1788 = 78 + 22;
        let _ = 874;
        func_1549();
        pub fn func_807() {
            #[cfg(any(feature = "feat18", feature = "feat18"))]
            func_297();
            let _ = 30 + 3;
            let v_1789 = 716;
            match 0 {
                0 => {
                    #[cfg(feature = "feat17")]
                    let v_1790 = 82;
                    #[cfg(not(feature = "feat12"))]
                    let v_1791 = 22 + 84;
                }
                _ => {}
            }
        }
    } else {
        let v_1792 = func_792();
        func_204();
    }
}
pub fn func_1793() {
    let v_1794 = 84 + 48;
    match 2 {
        0 => {
            match 1 {
                0 => {
                    match 4 {
                        0 => {
                            let w_1795 = 5;
                            #[cfg(feature = "feat1")]
                            let v_1796 = ext_2();
                            println!("msg_1797 {}", 1);
                            let v_1798 = 578;
                        }
                        _ => {}
                    }
                    let v_1799 = func_989();
                    if 14 > 10 {
                        let _ = 10 + 61;
                        let w_1800 = 5;
                    } else {
                        let v_1801 = 97 + 12;
                        let v_1802 = func_1787();
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat18")]
    let v_1803 = func_370();
    match 2 {
        0 => {
            let v_1804 = func_1062();
            let v_1805 = 95;
            #[cfg(feature = "feat0")]
            let _ = 799;
        }
        _ => {}
    }
}
#[cfg(any(feature = "feat6", feature = "feat16", feature = "feat9"))]
pub enum Kind_1806 {
    Variant_1807,
    Variant_1808,
    Variant_1809,
    Variant_1810,
}
pub enum Kind_1811 {
    Variant_1812,
}
pub fn func_1813() {
    #[cfg(feature = "feat1")]
    let v_1814 = 35 + 17;
    let v_1815 = 23;
}
pub struct Handle_1816;
impl Handle_1816 {
    pub fn func_1817() {
        #[cfg(feature = "feat0")]
        pub fn func_1818() {
            let v_1819 = func_1705();
            #[cfg(all(feature = "feat14", not(feature = "feat5")))]
            let v_1820 = func_1187();
        }
        let v_1821 = func_1068();
        if 0 > 10 {
            let v_1822 = 7;
        } else {
            let _ = 76;
            let v_1823 = ext_0();
        }
        ext_1();
    }
    pub fn func_1824() {
        let v_1825 = func_272();
        let _ = 93 + 72;
    }
}
pub static COUNTER_1826: u32 = 0;
pub const LIMIT_1827: u32 = 27 + 93;
pub fn func_1828() {
    println!("msg_1829 {}", 1);
    #[cfg(feature = "feat3")]
    let _ = 69 + 45;
}
pub fn func_1830() {
    let v_1831 = 51 + 42;
    match 0 {
        0 => {
            match 2 {
                0 => {
                    pub fn func_1832() {
                        #[cfg(not(feature = "feat5"))]
                        let v_1833 = 39 + 18;
                        let w_1834 = 8;
                        println!("msg_1835 {}", 1);
                        #[cfg(feature = "feat13")]
                        let v_1836 = func_1654();
                    }
                    func_516();
                    println!("msg_1837 {}", 1);
                }
                _ => {}
            }
            println!("msg_1838 {}", 1);
            match 0 {
                0 => {
                    let v_1839 = func_1713();
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 2 {
        0 => {
            let v_1840 = func_17();
            pub fn func_22() {
                if 9 > 10 {
                    func_752();
                    let v_1841 = 663;
                    let w_1842 = 5;
                    let v_1843 = 363;
                } else {
                    let _ = 87 + 82;
                    let v_1844 = 863;
                    let w_1845 = 1;
                }
            }
        }
        _ => {}
    }
    let v_1846 = ext_2();
}
pub type Alias_1847 = u64;
pub fn func_1813() {
    let v_1848 = 461;
}
pub fn func_1849() {
    #[cfg(feature = "feat1")]
    func_1592();
    let v_1850 = func_1054();
    let v_1851 = ext_0();
    let v_1852 = 68 + 90;
}
pub type Alias_1853 = u64;
pub fn func_1854() {
    let _ = 656;
    if 4 > 10 {
        println!("msg_1855 {}", 1);
        let v_1856 = func_1611();
        #[cfg(feature = "feat17")]
        let v_1857 = 469;
    } else {
        #[cfg(not(feature = "feat11"))]
        let v_1858 = 92 + 4;
        let v_1859 = 18 + 81;
        let _ = 35 + 36;
    }
}
