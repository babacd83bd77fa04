pub mod module0;
pub mod module1;
#[cfg(feature = "feat16")]
pub mod module2;
pub mod module3;
#[cfg(any(feature = "feat5", feature = "feat5", feature = "feat15"))]
pub mod module4;
pub mod module5;
pub mod module6;
pub mod module7;
pub mod module8;
pub enum Kind_1613 {
    Variant_1614,
    Variant_1615,
    #[cfg(feature = "feat9")]
    Variant_1616,
    Variant_1617,
}
pub fn func_1434() {
    match 4 {
        0 => {
            println!("msg_1618 {}", 1);
            func_1411();
            func_1447();
        }
        _ => {}
    }
    let v_1619 = 711;
}
pub mod inner_1620 {
    use super::*;
    use std::collections::HashMap;
}
pub fn func_1621() {
    let v_1622 = 34 + 85;
    let v_1623 = 557;
}
pub enum Kind_1624 {
    Variant_1625,
    Variant_1626,
    Variant_1627,
    #[cfg(feature = "feat9")]
    Variant_1628,
}
pub const LIMIT_1629: u32 = ext_3();
pub enum Kind_1630 {
    Variant_1631,
}
pub type Alias_1632 = u64;
pub fn func_1633() {
    match 2 {
        0 => {
            #[cfg(not(feature = "feat11"))]
            let v_1634 = func_160();
            println!("msg_1635 {}", 1);
            let v_1636 = func_1321();
            pub fn func_1637() {
                match 2 {
                    0 => {
                        #[cfg(feature = "feat9")]
                        func_633();
                        let v_1638 = 417;
                        let w_1639 = 6;
                        let v_1640 = 529;
                    }
                    _ => {}
                }
                let v_1641 = func_230();
                let v_1642 = func_160();
                match 2 {
                    0 => {
                        println!("msg_1643 {}", 1);
                        let w_1644 = 6;
                        let v_1645 = func_1486();
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
    let v_1646 = 903;
}
pub struct Record_1647 {
    pub field_1648: u32,
    pub field_1649: u32,
    pub field_1650: u32,
}
pub fn func_1651() {
    let _ = 30 + 91;
    let v_1652 = func_1369();
    println!("msg_1653 {}", 1);
}
pub enum Kind_1654 {
    Variant_1655,
}
pub const LIMIT_1656: u32 = ext_3();
pub fn func_1657() {
    pub fn func_1658() {
        println!("msg_1659 {}", 1);
    }
    let v_1660 = 96 + 27;
}
pub const LIMIT_1661: u32 = ext_2();
pub struct Handle_1662;
impl Handle_1662 {
    pub fn func_1663() {
        match 1 {
            0 => {
                let v_1664 = ext_3();
                let v_1665 = func_1528();
                let v_1666 = ext_3();
            }
            _ => {}
        }
        let v_1667 = func_1114();
    }
    pub fn func_1668() {
        pub fn func_1669() {
            let v_1670 = func_965();
            let v_1671 = ext_2();
        }
        if 17 > 10 {
            pub fn func_1672() {
                let v_1673 = func_524();
            }
            pub fn func_510() {
                let v_1674 = 82;
            }
            #[cfg(feature = "feat6")]
            let _ = 11 + 29;
        } else {
            println!("msg_1675 {}", 1);
            pub fn func_1676() {
                let v_1677 = func_653();
                let v_1678 = ext_0();
                println!("msg_1679 {}", 1);
                let w_1680 = 5;
            }
            #[cfg(feature = "feat4")]
            let v_1681 = 89;
            match 2 {
                0 => {
                    let w_1682 = 4;
                }
                _ => {}
            }
        }
    }
}
pub fn func_1683() {
    let v_1684 = 90 + 37;
    let v_1685 = 532;
    let v_1686 = 11 + 22;
}
pub enum Kind_1687 {
    #[cfg(feature = "feat0")]
    Variant_1688,
    Variant_1689,
}
#[cfg(feature = "feat14")]
use std::collections::HashMap;
pub static COUNTER_1690: u32 = 0;
#[cfg(feature = "feat16")]
pub struct Record_1691 {
    pub field_1692: u32,
    pub field_1693: u32,
    pub field_1694: u32,
}
pub mod inner_1695 {
    use super::*;
    #[cfg(feature = "feat8")]
    pub fn func_1696() {
        #[cfg(any(feature = "feat12", feature = "feat14", feature = "feat16"))]
        let _ = 567;
        let _ = 65 + 45;
        if 10 > 10 {
            let v_1697 = func_721();
            let v_1698 = ext_3();
            if 9 > 10 {
                let w_1699 = 6;
                let w_1700 = 7;
                println!("msg_1701 {}", 1);
            } else {
                #[cfg(feature = "feat15")]
                let v_1702 = func_1668();
                println!("msg_1703 {}", 1);
            }
        } else {
            let v_1704 = ext_2();
            func_288();
        }
    }
}
pub fn func_1705() {
    let v_1706 = func_147();
}
pub fn func_1707() {
    #[cfg(feature = "feat13")]
    let _ = 59 + 67;
}
#[cfg(feature = "feat7")]
pub enum Kind_1708 {
    Variant_1709,
    #[cfg(not(feature = "feat3"))]
    Variant_1710,
    #[cfg(feature = "feat16")]
    Variant_1711,
    Variant_1712,
}
pub enum Kind_1713 {
    Variant_1714,
    #[cfg(any(feature = "feat9", feature = "feat7", feature = "feat10"))]
    Variant_1715,
    Variant_1716,
    Variant_1717,
}
pub fn func_1718() {
    pub fn func_1719() {
        pub fn func_1561() {
            let _ = 122;
            pub fn func_1720() {
                let w_1721 = 4;
                let v_1722 = 167;
            }
            match 0 {
                0 => {
                    let v_1723 = 147;
                    let w_1724 = 7;
                }
                _ => {}
            }
            let v_1725 = func_363();
        }
        ext_2();
        println!("msg_1726 {}", 1);
    }
    let v_1727 = func_585();
    let v_1728 = 82 + 60;
}
pub fn func_1729() {
    if 7 > 10 {
        func_1607();
        println!("msg_1730 {}", 1);
    } else {
        func_826();
        if 5 > 10 {
            match 4 {
                0 => {
                    func_1035();
                    let w_1731 = 7;
                    let v_1732 = ext_2();
                    let w_1733 = 8;
                }
                _ => {}
            }
            match 4 {
                0 => {
                    let w_1734 = 1;
                    println!("msg_1735 {}", 1);
                }
                _ => {}
            }
            println!("msg_1736 {}", 1);
        } else {
            #[cfg(feature = "feat14")]
            ext_1();
        }
    }
    match 4 {
        0 => {
            let v_1737 = 41 + 86;
            let v_1738 = 49 + 83;
        }
        _ => {}
    }
    func_701();
}
pub struct Record_1739 {
    #[cfg(feature = "feat10")]
    pub field_1740: u32,
    pub field_1741: u32,
}
#[cfg(any(feature = "feat4", feature = "feat6", feature = "feat14"))]
pub fn func_1742() {
    func_1047();
    let v_1743 = 16 + 97;
}
pub fn func_1744() {
    #[cfg(feature = "feat8")]
    let v_1745 = ext_1();
    println!("msg_1746 {}", 1);
    let v_1747 = func_524();
    let v_1748 = 3 + 45;
}
#[cfg(feature = "feat9")]
use std::collections::HashMap;
pub fn func_1749() {
    let v_1750 = func_154();
    pub fn func_1751() {
        println!("msg_1752 {}", 1);
        let v_1753 = 8 + 60;
        if 15 > 10 {
            #[cfg(feature = "feat2")]
            func_1705();
            let v_1754 = ext_0();
            let _ = 988;
        } else {
            let v_1755 = ext_1();
            match 1 {
                0 => {
                    let w_1756 = 8;
                }
                _ => {}
            }
            ext_3();
        }
    }
}
pub const LIMIT_1757: u32 = 70 + 19;
pub fn func_1758() {
    ext_3();
    let v_1759 = func_1056();
    if 11 > 10 {
        #[cfg(all(feature = "feat10", not(feature = "feat3")))]
        let v_1760 = func_1155();
    } else {
        let v_1761 = 376;
        let v_1762 = func_942();
    }
    match 0 {
        0 => {
            let _ = 675;
            let v_1763 = ext_2();
        }
        _ => {}
    }
}
pub fn func_1764() {
    func_503();
    let v_1765 = 824;
    #[cfg(feature = "feat9")]
    pub fn func_1766() {
        if 11 > 10 {
            let _ = 544;
            pub fn func_1767() {
                let w_1768 = 2;
                let w_1769 = 7;
            }
            println!("msg_1770 {}", 1);
            let v_1771 = func_61();
        } else {
            println!("msg_1772 {}", 1);
            let v_1773 = 372;
            let v_1774 = func_432();
        }
    }
    #[cfg(any(feature = "feat13", feature = "feat7"))]
    let _ = 538;
}
pub fn func_1775() {
    let v_1776 = ext_2();
    pub fn func_1777() {
        let v_1778 = 63 + 16;
        let v_1779 = 97 + 42;
    }
}
pub fn func_1780() {
    pub fn func_1781() {
        pub fn func_1782() {
            pub fn func_383() {
                let w_1783 = 8;
            }
        }
        let v_1784 = func_1447();
    }
}
pub mod inner_1785 {
    use super::*;
    pub mod inner_1786 {
        use super::*;
        pub fn func_1787() {
            let v_1788 = ext_1();
            let v_1789 = 85 + 89;
            println!("msg_1790 {}", 1);
            ext_2();
        }
    }
    pub const LIMIT_1791: u32 = 47 + 54;
    pub fn func_1792() {
        pub fn func_1793() {
            func_264();
            match 1 {
                0 => {
                    let v_1794 = func_363();
                }
                _ => {}
            }
            let v_1795 = ext_1();
        }
        let v_1796 = 357;
        let v_1797 = ext_0();
    }
}
