#[cfg(any(feature = "feat19", feature = "feat12"))]
pub fn func_1713() {
    println!("msg_1714 {}", 1);
    println!("msg_1715 {}", 1);
    match 1 {
        0 => {
            println!("msg_1716 {}", 1);
            let v_1717 = 498;
            pub fn func_1718() {
                if 7 > 10 {
                    let v_1719 = func_1029();
                    #[cfg(feature = "feat23")]
                    let _ = 822;
                    let w_1720 = 2;
                } else {
                    let w_1721 = 5;
                    println!("msg_1722 {}", 1);
                    let v_1723 = 358;
                }
            }
            let v_1724 = 47 + 31;
        }
        _ => {}
    }
}
#[cfg(feature = "feat12")]
pub fn func_1725() {
    let v_1726 = func_1470();
}
#[cfg(feature = "feat14")]
pub enum Kind_1727 {
    #[cfg(all(feature = "feat19", not(feature = "feat18")))]
    Variant_1728,
    #[cfg(not(feature = "feat17"))]
    Variant_1729,
    Variant_1730,
    #[cfg(any(feature = "feat23", feature = "feat19", feature = "feat23"))]
    Variant_1731,
}
#[cfg(feature = "feat21")]
pub fn func_1732() {
    match 3 {
        0 => {
            let v_1733 = ext_1();
            let v_1734 = 310;
            match 4 {
                0 => {
                    if 10 > 10 {
                        let w_1735 = 7;
                        let w_1736 = 1;
                    } else {
                        #[cfg(any(feature = "feat23", feature = "feat23"))]
                        func_1385();
                    }
                }
                _ => {}
            }
            let v_1737 = func_1220();
        }
        _ => {}
    }
    match 3 {
        0 => {
            if 15 > 10 {
                pub fn func_1738() {
                    #[cfg(not(feature = "feat1"))]
                    let _ = 748;
                }
                let v_1739 = func_1117();
                let v_1740 = func_1408();
                let v_1741 = func_160();
            } else {
                let v_1742 = 495;
                match 3 {
                    0 => {
                        #[cfg(feature = "feat23")]
                        let v_1743 = 126;
                        let w_1744 = 0;
                        let v_1745 = func_955();
                    }
                    _ => {}
                }
                let v_1746 = 62 + 98;
            }
            println!("msg_1747 {}", 1);
        }
        _ => {}
    }
    func_469();
    match 4 {
        0 => {
            ext_2();
            println!("msg_1748 {}", 1);
        }
        _ => {}
    }
}
pub fn func_1749() {
    pub fn func_1750() {
        #[cfg(feature = "feat8")]
        let v_1751 = ext_1();
        let v_1752 = func_1627();
        let _ = 21 + 35;
    }
    if 13 > 10 {
        #[cfg(feature = "feat21")]
        let v_1753 = func_692();
    } else {
        println!("msg_1754 {}", 1);
        #[cfg(not(feature = "feat13"))]
        let _ = 80 + 97;
        if 14 > 10 {
            let _ = 130;
            func_1022();
            #[cfg(feature = "feat0")]
            let v_1755 = 51 + 35;
        } else {
            println!("msg_1756 {}", 1);
            match 4 {
                0 => {
                    let w_1757 = 7;
                    let w_1758 = 8;
                }
                _ => {}
            }
            if 5 > 10 {
                #[cfg(feature = "feat14")]
                let v_1759 = 80 + 21;
                let w_1760 = 5;
                let v_1761 = ext_3();
                println!("msg_1762 {}", 1);
            } else {
                #[cfg(feature = "feat2")]
                let v_1763 = 0 + 47;
            }
        }
        let v_1764 = 67;
    }
    let _ = 502;
}
pub fn func_1765() {
    pub fn func_1766() {
        ext_3();
        pub fn func_1767() {
            func_1318();
        }
        let v_1768 = 729;
    }
}
pub type Alias_1769 = u64;
pub fn func_1770() {
    let v_1771 = 81 + 94;
}
pub const LIMIT_1772: u32 = 914;
pub fn func_1773() {
    pub fn func_1774() {
        let v_1775 = 76 + 27;
        let v_1776 = 2 + 54;
        let v_1777 = func_744();
    }
    println!("msg_1778 {}", 1);
}
pub fn func_1779() {
    let v_1780 = 22 + 85;
}
pub enum Kind_1781 {
    Variant_1782,
    Variant_1783,
    Variant_1784,
    Variant_1785,
}
pub type Alias_1786 = u64;
pub fn func_1787() {
    #[cfg(not(feature = "feat18"))]
    let v_1788 = ext_1();
    let v_1789 = 44 + 85;
    ext_1();
    let v_1790 = func_615();
}
#[cfg(feature = "feat23")]
pub fn func_1791() {
    pub fn func_1627() {
        pub fn func_1792() {
            pub fn func_1793() {
                let w_1794 = 5;
                func_1150();
                let v_1795 = func_955();
            }
        }
        println!("msg_1796 {}", 1);
    }
    println!("msg_1797 {}", 1);
    match 3 {
        0 => {
            match 3 {
                0 => {
                    pub fn func_1798() {
                        let w_1799 = 3;
                        let _ = 78 + 70;
                        let v_1800 = 92 + 96;
                        let w_1801 = 7;
                    }
                    println!("msg_1802 {}", 1);
                    let v_1803 = func_1792();
                    println!("msg_1804 {}", 1);
                }
                _ => {}
            }
            let _ = 965;
            println!("msg_1805 {}", 1);
        }
        _ => {}
    }
    println!("msg_1806 {}", 1);
}
pub fn func_1807() {
    pub fn func_1181() {
        let v_1808 = func_307();
        let v_1809 = func_216();
        pub fn func_1810() {
            #[cfg(feature = "feat19")]
            let v_1811 = 49 + 91;
            let v_1812 = 107;
            let _ = 790;
            ext_2();
        }
    }
    let v_1813 = 94 + 5;
    let v_1814 = func_1301();
}
#[cfg(feature = "feat15")]
pub fn func_1815() {
    #[cfg(feature = "feat21")]
    let v_1816 = 859;
    pub fn func_524() {
        let v_1817 = 825;
        let _ = 53 + 65;
    }
    pub fn func_1818() {
        pub fn func_1819() {
            func_1246();
        }
    }
}
#[cfg(feature = "feat6")]
pub struct Record_1820 {
    pub field_1821: u32,
    pub field_1822: u32,
    #[cfg(feature = "feat12")]
    pub field_1823: u32,
    pub field_1824: u32,
}
pub type Alias_1825 = u64;
pub static COUNTER_1826: u32 = 0;
pub fn func_1255() {
    pub fn func_1827() {
        if 19 > 10 {
            let v_1828 = func_223();
            let v_1829 = 813;
            println!("msg_1830 {}", 1);
            let v_1831 = 909;
        } else {
            match 3 {
                0 => {
                    let v_1832 = func_1338();
                    println!("msg_1833 {}", 1);
                }
                _ => {}
            }
            #[cfg(feature = "feat21")]
            let v_1834 = func_53();
        }
        #[cfg(any(feature = "feat6", feature = "feat11", feature = "feat21"))]
        pub fn func_1835() {
            pub fn func_1836() {
                let v_1837 = func_879();
                #[cfg(feature = "feat23")]
                func_1056();
            }
            if 8 > 10 {
                println!("msg_1838 {}", 1);
                let w_1839 = 7;
                let v_1840 = func_1437();
            } else {
                let _ = 898;
                let v_1841 = ext_3();
                let v_1842 = ext_1();
                let v_1843 = 40 + 92;
            }
            ext_2();
            let v_1844 = 888;
        }
        let v_1845 = ext_2();
        let _ = 50 + 68;
    }
    let v_1846 = func_544();
    pub fn func_1467() {
        pub fn func_1847() {
            #[cfg(feature = "feat15")]
            let _ = 411;
        }
        let v_1848 = 74 + 94;
    }
}
pub type Alias_1849 = u64;
pub enum Kind_1850 {
    Variant_1851,
    Variant_1852,
}
pub fn func_1853() {
    pub fn func_1854() {
        let v_1855 = 974;
        if 16 > 10 {
            func_401();
            func_440();
            let _ = 85 + 53;
            let v_1856 = ext_3();
        } else {
            let v_1857 = 770;
        }
        func_458();
        #[cfg(any(feature = "feat21", feature = "feat0"))]
        let v_1858 = func_29();
    }
    let v_1859 = func_1196();
    let v_1860 = func_1147();
}
#[cfg(all(feature = "feat0", not(feature = "feat1")))]
pub fn func_1861() {
    let v_1862 = 77;
    pub fn func_1863() {
        println!("msg_1864 {}", 1);
        pub fn func_1865() {
            match 1 {
                0 => {
                    let w_1866 = 1;
                }
                _ => {}
            }
            match 1 {
                0 => {
                    let w_1867 = 3;
                    func_1029();
                    let v_1868 = ext_1();
                }
                _ => {}
            }
            match 0 {
                0 => {
                    let v_1869 = ext_2();
                }
                _ => {}
            }
        }
        let _ = 534;
    }
    match 2 {
        0 => {
            match 3 {
                0 => {
                    match 1 {
                        0 => {
                            let v_1870 = ext_1();
                            let v_1871 = func_387();
                        }
                        _ => {}
                    }
                    ext_2();
                    let v_1872 = func_771();
                }
                _ => {}
            }
            let v_1873 = func_306();
        }
        _ => {}
    }
    let _ = 483;
}
