pub fn func_1620() {
    match 4 {
        0 => {
            match 4 {
                0 => {
                    let v_1666 = 64 + 86;
                    match 4 {
                        0 => {
                            #[cfg(feature = "feat11")]
                            let _ = 404;
                            let v_1667 = ext_3();
                            let w_1668 = 5;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub enum Kind_1669 {
    Variant_1670,
}
use std::collections::HashMap;
pub struct Record_1671 {
    pub field_1672: u32,
    #[cfg(any(feature = "feat27", feature = "feat27", feature = "feat13"))]
    pub field_1673: u32,
    pub field_1674: u32,
    pub field_1675: u32,
}
pub fn func_1676() {
    pub fn func_1677() {
        let v_1678 = func_1056();
        let v_1679 = func_730();
        ext_0();
    }
    #[cfg(any(feature = "feat20", feature = "feat3", feature = "feat6"))]
    pub fn func_1680() {
        let v_1681 = func_210();
        if 8 > 10 {
            let v_1682 = ext_2();
            func_899();
            let v_1683 = 73 + 90;
        } else {
            if 6 > 10 {
                let w_1684 = 2;
                #[cfg(not(feature = "feat10"))]
                let v_1685 = ext_3();
            } else {
                let _ = 76 + 70;
            }
            if 16 > 10 {
                let _ = 400;
            } else {
                let v_1686 = func_616();
                let v_1687 = ext_1();
                let v_1688 = func_900();
                let v_1689 = 200;
            }
        }
        match 0 {
            0 => {
                match 0 {
                    0 => {
                        let v_1690 = func_199();
                        let v_1691 = func_790();
                        println!("msg_1692 {}", 1);
                        func_432();
                    }
                    _ => {}
                }
                let v_1693 = func_673();
                match 1 {
                    0 => {
                        #[cfg(feature = "feat28")]
                        func_646();
                        let v_1694 = func_1037();
                        #[cfg(any(feature = "feat22", feature = "feat29"))]
                        let v_1695 = ext_1();
                        let v_1696 = ext_2();
                    }
                    _ => {}
                }
                #[cfg(feature = "feat29")]
                let v_1697 = ext_2();
            }
            _ => {}
        }
        func_1422();
    }
    let _ = 206;
}
pub type Alias_1698 = u64;
use std::collections::HashMap;
pub const LIMIT_1699: u32 = 875;
pub const LIMIT_1700: u32 = func_1287();
pub fn func_1701() {
    println!("msg_1702 {}", 1);
}
pub static COUNTER_1703: u32 = 0;
pub const LIMIT_1704: u32 = 27 + 76;
pub type Alias_1705 = u64;
#[cfg(any(feature = "feat19", feature = "feat5"))]
pub fn func_1706() {
    let v_1707 = func_706();
    #[cfg(feature = "feat29")]
    let v_1708 = ext_2();
    #[cfg(not(feature = "feat12"))]
    let v_1709 = func_411();
}
pub fn func_1710() {
    #[cfg(any(feature = "feat27", feature = "feat20", feature = "feat11"))]
    let v_1711 = 29 + 12;
}
pub const LIMIT_1712: u32 = func_1701();
pub fn func_1128() {
    let v_1713 = 614;
    let v_1714 = ext_3();
}
pub type Alias_1715 = u64;
pub fn func_1101() {
    pub fn func_1716() {
        let _ = 711;
        println!("msg_1717 {}", 1);
        let v_1718 = 7 + 98;
        let v_1719 = 275;
    }
    let v_1720 = func_51();
    let v_1721 = 319;
}
pub fn func_1722() {
    let v_1723 = func_1578();
    if 6 > 10 {
        match 0 {
            0 => {
                let v_1724 = func_403();
                println!("msg_1725 {}", 1);
                pub fn func_644() {
                    let w_1726 = 1;
                }
            }
            _ => {}
        }
        #[cfg(any(feature = "feat24", feature = "feat1", feature = "feat28"))]
        let _ = 16 + 96;
    } else {
        if 2 > 10 {
            println!("msg_1727 {}", 1);
            #[cfg(feature = "feat27")]
            let v_1728 = 62 + 18;
            let v_1729 = func_1512();
            if 5 > 10 {
                ext_1();
            } else {
                let v_1730 = func_1134();
            }
        } else {
            pub fn func_1731() {
                let v_1732 = 205;
                let _ = 76 + 54;
                let v_1733 = 668;
            }
            let v_1734 = ext_0();
        }
        let v_1735 = 220;
    }
}
pub struct Record_1736 {
    pub field_1737: u32,
    pub field_1738: u32,
}
pub mod inner_1739 {
    use super::*;
    pub const LIMIT_1740: u32 = func_1104();
    pub mod inner_1741 {
        use super::*;
        pub fn func_1() {
            pub fn func_1742() {
                let w_1743 = 0;
                let v_1744 = 908;
            }
            #[cfg(feature = "feat4")]
            let _ = 163;
            println!("msg_1745 {}", 1);
        }
        pub fn func_1746() {
            if 8 > 10 {
                let v_1747 = 747;
            } else {
                println!("msg_1748 {}", 1);
                let v_1749 = func_926();
                let v_1750 = 51 + 95;
                let w_1751 = 5;
            }
            pub fn func_1752() {
                println!("msg_1753 {}", 1);
                let w_1754 = 4;
                let w_1755 = 2;
                let w_1756 = 5;
            }
            let v_1757 = ext_1();
            let v_1758 = ext_1();
        }
        pub fn func_1759() {
            match 1 {
                0 => {
                    let w_1760 = 2;
                }
                _ => {}
            }
            match 0 {
                0 => {
                    let v_1761 = 19 + 40;
                    let v_1762 = ext_2();
                    let w_1763 = 2;
                    #[cfg(all(feature = "feat16", not(feature = "feat0")))]
                    let v_1764 = ext_0();
                }
                _ => {}
            }
            let v_1765 = func_1439();
        }
    }
}
