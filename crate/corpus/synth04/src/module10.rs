pub fn func_1705() {
    match 3 {
        0 => {
            let _ = 88 + 95;
        }
        _ => {}
    }
    println!("msg_1706 {}", 1);
    ext_2();
    pub fn func_1330() {
        let v_1707 = func_1086();
        let v_1708 = ext_3();
        println!("msg_1709 {}", 1);
        let v_1710 = ext_1();
    }
}
pub enum Kind_1711 {
    Variant_1712,
}
pub fn func_1713() {
    println!("msg_1714 {}", 1);
    let v_1715 = ext_3();
}
use std::collections::HashMap;
pub type Alias_1716 = u64;
pub enum Kind_1717 {
    Variant_1718,
    Variant_1719,
    Variant_1720,
    Variant_1721,
}
pub struct Record_1722 {
    pub field_1723: u32,
    pub field_1724: u32,
    pub field_1725: u32,
    pub field_1726: u32,
}
#[cfg(feature = "feat8")]
use std::collections::HashMap;
pub mod inner_1727 {
    use super::*;
    pub fn func_1728() {
        #[cfg(feature = "feat10")]
        pub fn func_1729() {
            if 10 > 10 {
                #[cfg(feature = "feat16")]
                let v_1730 = ext_0();
            } else {
                #[cfg(feature = "feat18")]
                let v_1731 = 357;
                let _ = 576;
                let v_1732 = 437;
            }
            let v_1733 = func_830();
            let v_1734 = func_339();
            if 11 > 10 {
                let w_1735 = 8;
            } else {
                let w_1736 = 6;
                let w_1737 = 3;
                let w_1738 = 2;
            }
        }
        let v_1739 = 424;
        #[cfg(any(feature = "feat8", feature = "feat9", feature = "feat13"))]
        pub fn func_1740() {
            func_1335();
            match 4 {
                0 => {
                    func_302();
                    func_106();
                    let w_1741 = 7;
                    func_968();
                }
                _ => {}
            }
        }
    }
    pub enum Kind_1742 {
        #[cfg(feature = "feat9")]
        Variant_1743,
        Variant_1744,
    }
    pub const LIMIT_1745: u32 = func_521();
}
pub const LIMIT_1746: u32 = func_385();
pub struct Handle_1747;
impl Handle_1747 {
    pub fn func_1748() {
        let v_1749 = 637;
    }
}
pub fn func_1488() {
    let _ = 21 + 81;
    let v_1750 = ext_0();
}
pub fn func_1751() {
    match 3 {
        0 => {
            func_180();
            func_1348();
            func_360();
        }
        _ => {}
    }
    pub fn func_1752() {
        pub fn func_425() {
            let v_1753 = func_1590();
        }
    }
    match 2 {
        0 => {
            ext_0();
        }
        _ => {}
    }
    #[cfg(feature = "feat0")]
    let v_1754 = ext_1();
}
pub struct Handle_1755;
#[cfg(all(feature = "feat8", not(feature = "feat12")))]
impl Handle_1755 {
    pub fn func_1756() {
        let v_1757 = ext_0();
    }
}
pub fn func_1758() {
    if 14 > 10 {
        let v_1759 = func_818();
        func_1549();
        #[cfg(feature = "feat14")]
        let v_1760 = func_278();
    } else {
        #[cfg(feature = "feat10")]
        ext_2();
        func_272();
        let v_1761 = 455;
        #[cfg(any(feature = "feat18", feature = "feat8"))]
        let _ = 334;
    }
    let v_1762 = func_262();
    pub fn func_1409() {
        #[cfg(feature = "feat9")]
        let v_1763 = 180;
        println!("msg_1764 {}", 1);
        pub fn func_1765() {
            #[cfg(feature = "feat8")]
            let v_1766 = func_1526();
            if 6 > 10 {
                #[cfg(feature = "feat8")]
                ext_3();
            } else {
                let v_1767 = 67;
            }
            func_489();
        }
        pub fn func_1768() {
            let _ = 69 + 30;
            match 2 {
                0 => {
                    let w_1769 = 0;
                    let w_1770 = 3;
                    let v_1771 = 144;
                }
                _ => {}
            }
            let v_1772 = 351;
        }
    }
}
#[cfg(feature = "feat18")]
pub mod inner_1773 {
    use super::*;
    pub type Alias_1774 = u64;
    pub type Alias_1775 = u64;
    pub enum Kind_1776 {
        Variant_1777,
        Variant_1778,
        Variant_1779,
    }
}
pub struct Handle_1780;
#[cfg(feature = "feat3")]
impl Handle_1780 {
    pub fn func_1781() {
        func_506();
        let v_1782 = 62 + 50;
    }
}
pub fn func_1783() {
    #[cfg(not(feature = "feat2"))]
    func_1312();
}
pub mod nested;
