pub fn func_1664() {
    match 2 {
        0 => {
            pub fn func_1665() {
                let _ = 122;
                let _ = 225;
                let _ = 87;
                println!("msg_1666 {}", 1);
            }
            if 1 > 10 {
                func_1491();
                let v_1667 = 63 + 7;
            } else {
                ext_3();
                println!("msg_1668 {}", 1);
                pub fn func_1669() {
                    let w_1670 = 5;
                }
                match 1 {
                    0 => {
                        let v_1671 = func_842();
                        println!("msg_1672 {}", 1);
                        let v_1673 = ext_3();
                        #[cfg(not(feature = "feat11"))]
                        let _ = 59 + 98;
                    }
                    _ => {}
                }
            }
            let v_1674 = ext_2();
        }
        _ => {}
    }
    match 0 {
        0 => {
            let v_1675 = 477;
        }
        _ => {}
    }
    #[cfg(all(feature = "feat23", not(feature = "feat15")))]
    ext_0();
}
pub struct Handle_1676;
impl Handle_1676 {
    #[cfg(feature = "feat19")]
    pub fn func_1677() {
        if 2 > 10 {
            let v_1678 = func_1256();
            println!("msg_1679 {}", 1);
            #[cfg(any(feature = "feat22", feature = "feat22"))]
            let _ = 78 + 37;
        } else {
            let _ = 74 + 27;
            pub fn func_1680() {
                #[cfg(any(feature = "feat23", feature = "feat23"))]
                let _ = 929;
                let w_1681 = 7;
                println!("msg_1682 {}", 1);
                let w_1683 = 8;
            }
        }
    }
    #[cfg(feature = "feat23")]
    pub fn func_1684() {
        if 7 > 10 {
            match 2 {
                0 => {
                    let v_1685 = func_277();
                }
                _ => {}
            }
            pub fn func_1686() {
                let w_1687 = 1;
                let w_1688 = 1;
                let v_1689 = ext_1();
                let v_1690 = func_397();
            }
            println!("msg_1691 {}", 1);
        } else {
            let v_1692 = 831;
        }
        match 0 {
            0 => {
                let _ = 458;
                if 12 > 10 {
                    let w_1693 = 3;
                } else {
                    let w_1694 = 6;
                    let w_1695 = 8;
                    let v_1696 = func_1276();
                }
                let _ = 732;
            }
            _ => {}
        }
        let _ = 291;
        if 0 > 10 {
            match 0 {
                0 => {
                    func_764();
                    let v_1697 = 88 + 50;
                    let w_1698 = 2;
                }
                _ => {}
            }
            println!("msg_1699 {}", 1);
            if 0 > 10 {
                let w_1700 = 0;
            } else {
                let v_1701 = ext_2();
                let w_1702 = 8;
                let w_1703 = 5;
                let v_1704 = func_172();
            }
            #[cfg(not(feature = "feat14"))]
            func_816();
        } else {
            let _ = 34 + 22;
            let _ = 82 + 16;
        }
    }
}
pub fn func_1705() {
    if 6 > 10 {
        let v_1706 = func_80();
        func_832();
        ext_2();
    } else {
        println!("msg_1707 {}", 1);
        if 14 > 10 {
            let v_1708 = 89 + 46;
        } else {
            ext_2();
            if 16 > 10 {
                let w_1709 = 7;
                let w_1710 = 1;
                ext_3();
            } else {
                let w_1711 = 4;
                let v_1712 = 26 + 68;
                let w_1713 = 4;
            }
        }
        println!("msg_1714 {}", 1);
        let v_1715 = ext_0();
    }
    let v_1716 = func_709();
}
pub static COUNTER_1717: u32 = 0;
pub const LIMIT_1718: u32 = 45 + 53;
use std::collections::HashMap;
pub fn func_1719() {
    println!("msg_1720 {}", 1);
}
pub fn func_1721() {
    println!("msg_1722 {}", 1);
    let v_1723 = 91 + 42;
}
pub fn func_1724() {
    match 1 {
        0 => {
            if 2 > 10 {
                match 2 {
                    0 => {
                        let _ = 106;
                        ext_3();
                    }
                    _ => {}
                }
                match 3 {
                    0 => {
                        #[cfg(all(feature = "feat22", not(feature = "feat20")))]
                        ext_0();
                    }
                    _ => {}
                }
                let v_1725 = func_354();
                println!("msg_1726 {}", 1);
            } else {
                println!("msg_1727 {}", 1);
                let v_1728 = 81;
                if 1 > 10 {
                    let v_1729 = 507;
                    let w_1730 = 8;
                    let v_1731 = 73 + 24;
                } else {
                    let w_1732 = 8;
                    #[cfg(feature = "feat19")]
                    let v_1733 = 67 + 8;
                    let v_1734 = 50 + 50;
                }
            }
        }
        _ => {}
    }
    let v_1735 = func_1360();
    match 0 {
        0 => {
            if 6 > 10 {
                println!("msg_1736 {}", 1);
            } else {
                #[cfg(feature = "feat17")]
                let v_1737 = func_224();
                let v_1738 = 789;
            }
            let v_1739 = 827;
            let v_1740 = 579;
            println!("msg_1741 {}", 1);
        }
        _ => {}
    }
    println!("msg_1742 {}", 1);
}
pub fn func_1743() {
    println!("msg_1744 {}", 1);
    let v_1745 = 42 + 4;
}
pub fn func_1746() {
    let v_1747 = 446;
}
pub fn func_1748() {
    let v_1749 = ext_3();
    let v_1750 = func_1168();
    let v_1751 = func_345();
}
pub struct Handle_1752;
#[cfg(not(feature = "feat11"))]
impl Handle_1752 {
    pub fn func_1753() {
        println!("msg_1754 {}", 1);
    }
}
pub fn func_1755() {
    func_100();
    let v_1756 = func_1753();
    println!("msg_1757 {}", 1);
}
#[cfg(feature = "feat4")]
pub type Alias_1758 = u64;
pub type Alias_1759 = u64;
pub type Alias_1760 = u64;
pub fn func_1269() {
    let v_1761 = 42 + 87;
    #[cfg(feature = "feat23")]
    let v_1762 = func_277();
    println!("msg_1763 {}", 1);
    pub fn func_1764() {
        func_518();
    }
}
pub fn func_1765() {
    println!("msg_1766 {}", 1);
}
pub type Alias_1767 = u64;
pub fn func_1388() {
    let _ = 11 + 37;
    let v_1768 = func_466();
}
pub static COUNTER_1769: u32 = 0;
pub type Alias_1770 = u64;
pub fn func_1771() {
    println!("msg_1772 {}", 1);
    match 0 {
        0 => {
            println!("msg_1773 {}", 1);
            func_1187();
            #[cfg(feature = "feat23")]
            pub fn func_1774() {
                match 4 {
                    0 => {
                        let w_1775 = 2;
                        let w_1776 = 5;
                        let _ = 6 + 18;
                    }
                    _ => {}
                }
                func_1669();
            }
            let v_1777 = 628;
        }
        _ => {}
    }
}
pub mod inner_1778 {
    use super::*;
    pub type Alias_1779 = u64;
    pub fn func_924() {
        func_788();
    }
    pub fn func_1780() {
        match 4 {
            0 => {
                let v_1781 = 648;
            }
            _ => {}
        }
    }
}
pub fn func_1782() {
    println!("msg_1783 {}", 1);
    func_1721();
}
pub fn func_1784() {
    #[cfg(feature = "feat12")]
    pub fn func_1785() {
        pub fn func_1786() {
            let v_1787 = func_1774();
            match 2 {
                0 => {
                    let _ = 76 + 57;
                    let v_1788 = 957;
                    let v_1789 = 257;
                    let v_1790 = func_1007();
                }
                _ => {}
            }
        }
        #[cfg(not(feature = "feat20"))]
        let v_1791 = func_1149();
        pub fn func_1792() {
            if 13 > 10 {
                func_454();
                #[cfg(feature = "feat18")]
                let v_1793 = func_387();
            } else {
                let v_1794 = func_971();
                let v_1795 = 587;
            }
            match 0 {
                0 => {
                    func_980();
                    println!("msg_1796 {}", 1);
                    let w_1797 = 1;
                }
                _ => {}
            }
        }
        let v_1798 = 43 + 8;
    }
}
pub fn func_1799() {
    let v_1800 = func_727();
    ext_0();
    let v_1801 = 0 + 15;
    pub fn func_1802() {
        let v_1803 = 589;
        #[cfg(feature = "feat22")]
        let v_1804 = 819;
        let v_1805 = 618;
    }
}
pub type Alias_1806 = u64;
pub const LIMIT_1807: u32 = 344;
pub const LIMIT_1808: u32 = ext_1();
pub fn func_1809() {
    let v_1810 = 102;
}
pub fn func_1811() {
    let v_1812 = func_1298();
    println!("msg_1813 {}", 1);
    match 4 {
        0 => {
            let v_1814 = ext_1();
            if 0 > 10 {
                func_1040();
                #[cfg(any(feature = "feat4", feature = "feat8", feature = "feat3"))]
                func_1782();
            } else {
                let v_1815 = 26 + 35;
                let v_1816 = ext_1();
            }
            println!("msg_1817 {}", 1);
        }
        _ => {}
    }
}
pub fn func_1818() {
    let _ = 71 + 71;
    pub fn func_1819() {
        let v_1820 = ext_0();
        let v_1821 = func_302();
    }
}
pub type Alias_1822 = u64;
