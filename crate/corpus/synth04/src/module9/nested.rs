use std::collections::HashMap;
pub enum Kind_1597 {
    Variant_1598,
    Variant_1599,
    #[cfg(any(feature = "feat10", feature = "feat13", feature = "feat14"))]
    Variant_1600,
    Variant_1601,
}
pub const LIMIT_1602: u32 = 198;
pub fn func_1603() {
    let _ = 79 + 71;
}
pub struct Record_1604 {
    pub field_1605: u32,
}
pub const LIMIT_1606: u32 = ext_2();
pub mod inner_1607 {
    use super::*;
    pub fn func_1608() {
        let _ = 50 + 95;
        println!("msg_1609 {}", 1);
    }
    pub struct Handle_1610;
    impl Handle_1610 {
        pub fn func_1611() {
            let v_1612 = ext_0();
            #[cfg(not(feature = "feat15"))]
            pub fn func_1613() {
                let w_1614 = 6;
                let w_1615 = 3;
                func_714();
                func_475();
            }
            match 3 {
                0 => {
                    let v_1616 = 688;
                    let w_1617 = 4;
                    let _ = 86 + 96;
                }
                _ => {}
            }
        }
    }
    pub struct Record_1618 {
        pub field_1619: u32,
    }
}
pub fn func_1620() {
    pub fn func_1621() {
        #[cfg(not(feature = "feat15"))]
        func_877();
        let v_1622 = ext_1();
    }
    let v_1623 = func_622();
}
pub fn func_1624() {
    println!("msg_1625 {}", 1);
}
pub struct Record_1626 {
    pub field_1627: u32,
    #[cfg(feature = "feat8")]
    pub field_1628: u32,
    #[cfg(feature = "feat13")]
    pub field_1629: u32,
}
pub type Alias_1630 = u64;
#[cfg(feature = "feat17")]
pub static COUNTER_1631: u32 = 0;
pub mod inner_1632 {
    use super::*;
    #[cfg(feature = "feat9")]
    pub const LIMIT_1633: u32 = 735;
    pub const LIMIT_1634: u32 = 645;
    pub struct Record_1635 {
        pub field_1636: u32,
        pub field_1637: u32,
        pub field_1638: u32,
        pub field_1639: u32,
    }
}
pub fn func_1640() {
    let v_1641 = ext_1();
    if 6 > 10 {
        #[cfg(any(feature = "feat10", feature = "feat14", feature = "feat18"))]
        let v_1642 = func_835();
    } else {
        let v_1643 = ext_0();
        ext_1();
    }
    let v_1644 = func_982();
}
#[cfg(feature = "feat18")]
pub struct Record_1645 {
    pub field_1646: u32,
    pub field_1647: u32,
    pub field_1648: u32,
}
pub static COUNTER_1649: u32 = 0;
use std::collections::HashMap;
#[cfg(feature = "feat9")]
pub fn func_469() {
    let _ = 162;
    let v_1650 = ext_3();
}
pub fn func_1651() {
    let v_1652 = 51 + 28;
}
pub struct Handle_1653;
impl Handle_1653 {
    pub fn func_1654() {
        let v_1655 = 80 + 67;
        #[cfg(any(feature = "feat10", feature = "feat16"))]
        pub fn func_1656() {
            match 3 {
                0 => {
                    #[cfg(feature = "feat17")]
                    let v_1657 = 252;
                    let w_1658 = 3;
                }
                _ => {}
            }
            let v_1659 = 14 + 7;
            let _ = 87 + 21;
            let v_1660 = 13 + 48;
        }
    }
}
pub mod inner_1661 {
    use super::*;
    pub mod inner_1662 {
        use super::*;
        pub fn func_1663() {
            let v_1664 = 40 + 26;
        }
        pub fn func_1665() {
            let _ = 649;
            if 2 > 10 {
                #[cfg(not(feature = "feat11"))]
                let v_1666 = 28 + 76;
                let v_1667 = func_262();
                #[cfg(feature = "feat18")]
                func_516();
            } else {
                let w_1668 = 7;
                #[cfg(not(feature = "feat5"))]
                let v_1669 = func_331();
                let v_1670 = 41 + 10;
            }
            let v_1671 = ext_2();
            let v_1672 = ext_0();
        }
        pub fn func_297() {
            if 10 > 10 {
                let v_1673 = ext_3();
                let w_1674 = 0;
                let _ = 660;
                #[cfg(feature = "feat13")]
                let v_1675 = ext_2();
            } else {
                let w_1676 = 6;
                #[cfg(feature = "feat9")]
                let v_1677 = 366;
            }
            let v_1678 = ext_1();
            let v_1679 = func_1474();
            match 2 {
                0 => {
                    let _ = 49 + 30;
                }
                _ => {}
            }
        }
    }
    pub struct Handle_1680;
    impl Handle_1680 {
        pub fn func_1681() {
            println!("msg_1682 {}", 1);
        }
    }
}
pub struct Record_1683 {
    pub field_1684: u32,
}
pub fn func_1685() {
    func_796();
}
pub fn func_1686() {
    if 15 > 10 {
        #[cfg(feature = "feat13")]
        let v_1687 = func_782();
    } else {
        match 2 {
            0 => {
                let v_1688 = func_487();
                let v_1689 = ext_3();
                if 17 > 10 {
                    #[cfg(feature = "feat9")]
                    let v_1690 = 67 + 95;
                    let _ = 157;
                } else {
                    let w_1691 = 8;
                    let v_1692 = 518;
                    let v_1693 = func_1654();
                }
            }
            _ => {}
        }
        println!("msg_1694 {}", 1);
        #[cfg(feature = "feat10")]
        ext_3();
        func_1413();
    }
    #[cfg(all(feature = "feat10", not(feature = "feat5")))]
    let v_1695 = func_1086();
    println!("msg_1696 {}", 1);
    pub fn func_1697() {
        pub fn func_1698() {
            if 16 > 10 {
                let v_1699 = 26 + 4;
            } else {
                let v_1700 = ext_3();
            }
            println!("msg_1701 {}", 1);
            let v_1702 = func_1474();
            let v_1703 = func_828();
        }
        let v_1704 = ext_1();
    }
}
