pub fn func_1555() {
    #[cfg(feature = "feat15")]
    let v_1556 = 91 + 60;
    let v_1557 = 62 + 43;
    println!("msg_1558 {}", 1);
}
pub mod inner_1559 {
    use super::*;
    pub fn func_1560() {
        let v_1561 = 66 + 3;
        println!("msg_1562 {}", 1);
    }
    pub const LIMIT_1563: u32 = func_944();
    pub struct Handle_1564;
    impl Handle_1564 {
        pub fn func_1565() {
            if 9 > 10 {
                let v_1566 = 955;
                let w_1567 = 7;
            } else {
                let v_1568 = 71;
                let v_1569 = func_275();
            }
        }
        #[cfg(feature = "feat21")]
        pub fn func_1570() {
            if 4 > 10 {
                let v_1571 = 16 + 34;
                let w_1572 = 1;
                #[cfg(all(feature = "feat23", not(feature = "feat1")))]
                let v_1573 = func_602();
                let v_1574 = 440;
            } else {
                #[cfg(not(feature = "feat7"))]
                let v_1575 = ext_0();
                let v_1576 = 53;
                #[cfg(feature = "feat23")]
                let v_1577 = 49 + 25;
            }
            #[cfg(feature = "feat23")]
            let v_1578 = func_605();
            #[cfg(any(feature = "feat23", feature = "feat23", feature = "feat23"))]
            let v_1579 = 66 + 33;
        }
    }
}
pub mod inner_1580 {
    use super::*;
    pub fn func_1581() {
        ext_3();
    }
}
use std::collections::HashMap;
#[cfg(feature = "feat19")]
pub type Alias_1582 = u64;
pub mod inner_1583 {
    use super::*;
    pub fn func_1584() {
        let v_1585 = ext_1();
    }
}
pub fn func_1586() {
    match 1 {
        0 => {
            if 1 > 10 {
                let v_1587 = 53 + 59;
                let v_1588 = func_790();
                match 1 {
                    0 => {
                        let v_1589 = ext_2();
                    }
                    _ => {}
                }
                let v_1590 = func_151();
            } else {
                let _ = 49 + 62;
                #[cfg(any(feature = "feat16", feature = "feat16", feature = "feat16"))]
                let v_1591 = 225;
                #[cfg(all(feature = "feat16", not(feature = "feat17")))]
                func_151();
            }
            #[cfg(feature = "feat15")]
            let v_1592 = 469;
            #[cfg(feature = "feat19")]
            let _ = 78 + 19;
        }
        _ => {}
    }
    let v_1593 = func_798();
    let _ = 25 + 44;
}
pub static COUNTER_1594: u32 = 0;
pub fn func_1595() {
    match 3 {
        0 => {
            println!("msg_1596 {}", 1);
            match 0 {
                0 => {
                    let v_1597 = 236;
                    #[cfg(any(feature = "feat21", feature = "feat16", feature = "feat23"))]
                    let v_1598 = ext_1();
                }
                _ => {}
            }
        }
        _ => {}
    }
    println!("msg_1599 {}", 1);
}
pub enum Kind_1600 {
    Variant_1601,
    Variant_1602,
    Variant_1603,
    Variant_1604,
}
pub struct Record_1605 {
    #[cfg(not(feature = "feat13"))]
    pub field_1606: u32,
    pub field_1607: u32,
    pub field_1608: u32,
}
#[cfg(any(feature = "feat16", feature = "feat23", feature = "feat23"))]
pub fn func_1609() {
    pub fn func_1610() {
        let v_1611 = 6 + 78;
        match 2 {
            0 => {
                let v_1612 = 703;
                match 3 {
                    0 => {
                        let v_1613 = 15 + 42;
                        let w_1614 = 7;
                        let v_1615 = 19 + 27;
                    }
                    _ => {}
                }
                println!("msg_1616 {}", 1);
            }
            _ => {}
        }
        match 1 {
            0 => {
                let v_1617 = 41 + 61;
                match 3 {
                    0 => {
                        let v_1618 = 849;
                        println!("msg_1619 {}", 1);
                        let w_1620 = 0;
                        let w_1621 = 0;
                    }
                    _ => {}
                }
                println!("msg_1622 {}", 1);
                match 2 {
                    0 => {
                        let v_1623 = 464;
                        let w_1624 = 0;
                        println!("msg_1625 {}", 1);
                        let w_1626 = 5;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub fn func_1627() {
    let v_1628 = func_1274();
}
#[cfg(feature = "feat23")]
pub fn func_1629() {
    pub fn func_1630() {
        if 16 > 10 {
            if 13 > 10 {
                let w_1631 = 5;
                let v_1632 = func_279();
                println!("msg_1633 {}", 1);
            } else {
                let v_1634 = func_1334();
                let v_1635 = ext_1();
            }
        } else {
            let _ = 38 + 24;
        }
        match 4 {
            0 => {
                let v_1636 = func_1470();
            }
            _ => {}
        }
        let v_1637 = func_1395();
    }
    if 1 > 10 {
        pub fn func_1638() {
            let v_1639 = 48 + 60;
            pub fn func_1640() {
                println!("msg_1641 {}", 1);
                let w_1642 = 6;
                let v_1643 = func_1555();
                let v_1644 = func_866();
            }
        }
        match 4 {
            0 => {
                let v_1645 = func_1231();
            }
            _ => {}
        }
        func_1191();
    } else {
        let v_1646 = func_509();
        let v_1647 = ext_1();
        let v_1648 = func_1367();
        if 6 > 10 {
            if 17 > 10 {
                let v_1649 = 2;
                func_387();
            } else {
                let v_1650 = 148;
            }
            pub fn func_442() {
                let v_1651 = 314;
                let v_1652 = func_611();
                let w_1653 = 7;
                let w_1654 = 4;
            }
        } else {
            match 0 {
                0 => {
                    let v_1655 = func_1231();
                }
                _ => {}
            }
            let v_1656 = 945;
            if 19 > 10 {
                ext_1();
                let _ = 245;
                func_223();
            } else {
                let w_1657 = 0;
            }
        }
    }
}
pub const LIMIT_1658: u32 = func_1470();
pub mod inner_1659 {
    use super::*;
    pub fn func_1660() {
        if 0 > 10 {
            if 0 > 10 {
                func_1400();
                let v_1661 = func_404();
            } else {
                let v_1662 = func_401();
                println!("msg_1663 {}", 1);
                func_704();
                let v_1664 = func_1316();
            }
            let v_1665 = 1 + 28;
        } else {
            pub fn func_1666() {
                println!("msg_1667 {}", 1);
                func_401();
                let v_1668 = 78 + 12;
            }
            #[cfg(all(feature = "feat23", not(feature = "feat13")))]
            let v_1669 = func_776();
        }
        #[cfg(any(feature = "feat23", feature = "feat19"))]
        let _ = 92 + 46;
    }
    pub const LIMIT_1670: u32 = 237;
    pub struct Record_1671 {
        #[cfg(feature = "feat19")]
        pub field_1672: u32,
        #[cfg(feature = "feat23")]
        pub field_1673: u32,
        pub field_1674: u32,
        pub field_1675: u32,
    }
}
pub fn func_776() {
    let _ = 10 + 49;
    if 13 > 10 {
        let v_1676 = func_1054();
        if 3 > 10 {
            let v_1677 = 51 + 37;
        } else {
            #[cfg(feature = "feat16")]
            let _ = 167;
            #[cfg(not(feature = "feat13"))]
            func_13();
            let v_1678 = func_544();
        }
    } else {
        println!("msg_1679 {}", 1);
        let v_1680 = func_788();
        match 3 {
            0 => {
                ext_2();
            }
            _ => {}
        }
        #[cfg(feature = "feat15")]
        let v_1681 = func_29();
    }
    let v_1682 = func_704();
}
pub static COUNTER_1683: u32 = 0;
pub const LIMIT_1684: u32 = ext_3();
#[cfg(feature = "feat23")]
pub mod inner_1685 {
    use super::*;
    pub fn func_1686() {
        func_697();
    }
    pub fn func_1687() {
        match 4 {
            0 => {
                ext_1();
                let v_1688 = func_545();
                let v_1689 = 45 + 39;
            }
            _ => {}
        }
        func_514();
        let v_1690 = func_1316();
        let _ = 36 + 27;
    }
    pub type Alias_1691 = u64;
}
pub fn func_1692() {
    let v_1693 = ext_2();
    #[cfg(feature = "feat19")]
    let _ = 776;
    println!("msg_1694 {}", 1);
}
pub fn func_1695() {
    match 3 {
        0 => {
            let v_1696 = 12 + 64;
            pub fn func_1464() {
                func_660();
                match 0 {
                    0 => {
                        let v_1697 = func_242();
                        let v_1698 = func_1367();
                        let w_1699 = 6;
                    }
                    _ => {}
                }
                let v_1700 = func_286();
            }
            #[cfg(feature = "feat19")]
            let v_1701 = func_544();
            ext_0();
        }
        _ => {}
    }
}
pub const LIMIT_1702: u32 = 91 + 84;
#[cfg(any(feature = "feat16", feature = "feat19"))]
pub const LIMIT_1703: u32 = func_607();
use std::collections::HashMap;
pub fn func_1704() {
    if 18 > 10 {
        let v_1705 = func_544();
        println!("msg_1706 {}", 1);
    } else {
        if 0 > 10 {
            func_1609();
            pub fn func_1707() {
                ext_2();
                let _ = 96 + 27;
            }
            #[cfg(feature = "feat21")]
            pub fn func_1708() {
                let w_1709 = 3;
            }
        } else {
            match 0 {
                0 => {
                    println!("msg_1710 {}", 1);
                }
                _ => {}
            }
            if 8 > 10 {
                func_10();
            } else {
                let v_1711 = func_831();
                let v_1712 = func_53();
            }
        }
    }
}
