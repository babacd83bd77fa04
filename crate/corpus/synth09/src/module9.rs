pub type Alias_1580 = u64;
pub fn func_1581() {
    println!("msg_1582 {}", 1);
    let v_1583 = ext_0();
    let v_1584 = func_1441();
    println!("msg_1585 {}", 1);
}
pub const LIMIT_1586: u32 = func_1439();
pub fn func_1587() {
    let v_1588 = 7 + 29;
    #[cfg(feature = "feat28")]
    let v_1589 = 874;
}
#[cfg(feature = "feat4")]
pub fn func_1590() {
    if 8 > 10 {
        ext_2();
        let v_1591 = func_1012();
    } else {
        let v_1592 = func_864();
        pub fn func_215() {
            let _ = 65 + 82;
            pub fn func_1593() {
                let v_1594 = 26 + 52;
                #[cfg(feature = "feat16")]
                let v_1595 = 32 + 8;
            }
            let v_1596 = func_160();
        }
    }
    match 0 {
        0 => {
            println!("msg_1597 {}", 1);
        }
        _ => {}
    }
}
pub const LIMIT_1598: u32 = 963;
pub const LIMIT_1599: u32 = func_1477();
pub type Alias_1600 = u64;
pub fn func_1601() {
    match 1 {
        0 => {
            pub fn func_1602() {
                func_1578();
                println!("msg_1603 {}", 1);
            }
        }
        _ => {}
    }
    println!("msg_1604 {}", 1);
    #[cfg(not(feature = "feat25"))]
    let _ = 88 + 44;
    pub fn func_599() {
        let v_1605 = 77 + 16;
        ext_2();
    }
}
pub fn func_114() {
    match 3 {
        0 => {
            let _ = 579;
            let v_1606 = func_364();
            let v_1607 = func_1401();
            pub fn func_720() {
                if 0 > 10 {
                    println!("msg_1608 {}", 1);
                } else {
                    let w_1609 = 1;
                    let v_1610 = 46 + 78;
                    let w_1611 = 0;
                }
                let v_1612 = 751;
                let v_1613 = 50 + 21;
            }
        }
        _ => {}
    }
}
#[cfg(all(feature = "feat1", not(feature = "feat0")))]
pub static COUNTER_1614: u32 = 0;
pub struct Handle_1615;
#[cfg(not(feature = "feat23"))]
impl Handle_1615 {
    pub fn func_1616() {
        let v_1617 = 19 + 39;
        let v_1618 = 287;
    }
}
pub static COUNTER_1619: u32 = 0;
pub fn func_1620() {
    func_860();
    match 4 {
        0 => {
            let v_1621 = func_116();
            let v_1622 = 786;
            let _ = 85 + 30;
            #[cfg(feature = "feat29")]
            func_624();
        }
        _ => {}
    }
}
pub fn func_1623() {
    let v_1624 = func_1587();
    let v_1625 = func_530();
    let v_1626 = func_143();
}
pub static COUNTER_1627: u32 = 0;
pub type Alias_1628 = u64;
use std::collections::HashMap;
pub fn func_1629() {
    println!("msg_1630 {}", 1);
    println!("msg_1631 {}", 1);
    func_314();
    func_208();
}
pub struct Handle_1632;
impl Handle_1632 {
    pub fn func_1633() {
        let v_1634 = 63 + 76;
    }
}
pub static COUNTER_1635: u32 = 0;
pub fn func_1636() {
    if 10 > 10 {
        pub fn func_1637() {
            #[cfg(not(feature = "feat23"))]
            let v_1638 = 247;
            #[cfg(feature = "feat8")]
            let v_1639 = ext_1();
            #[cfg(not(feature = "feat26"))]
            pub fn func_1640() {
                let w_1641 = 1;
                let v_1642 = ext_2();
                let v_1643 = func_857();
            }
            if 18 > 10 {
                let w_1644 = 5;
                let v_1645 = func_62();
                let v_1646 = 694;
            } else {
                let w_1647 = 0;
                let v_1648 = 53 + 69;
                #[cfg(any(feature = "feat6", feature = "feat19"))]
                let v_1649 = func_1007();
            }
        }
        pub fn func_576() {
            match 3 {
                0 => {
                    println!("msg_1650 {}", 1);
                    let w_1651 = 8;
                    let w_1652 = 7;
                    let w_1653 = 1;
                }
                _ => {}
            }
            let v_1654 = 18 + 85;
            let v_1655 = func_1290();
        }
        let v_1656 = 18 + 81;
        #[cfg(feature = "feat28")]
        let v_1657 = 36;
    } else {
        let v_1658 = ext_2();
        match 2 {
            0 => {
                match 0 {
                    0 => {
                        let w_1659 = 7;
                    }
                    _ => {}
                }
                #[cfg(feature = "feat5")]
                pub fn func_231() {
                    let v_1660 = 741;
                    let v_1661 = func_1124();
                    let _ = 51 + 65;
                }
            }
            _ => {}
        }
        match 4 {
            0 => {
                func_193();
                #[cfg(feature = "feat14")]
                func_450();
            }
            _ => {}
        }
        let v_1662 = 90 + 53;
    }
    let v_1663 = ext_0();
}
pub type Alias_1664 = u64;
pub type Alias_1665 = u64;
pub mod nested;
