#[cfg(not(feature = "feat7"))]
pub fn func_1584() {
    let v_1585 = 539;
}
pub fn func_1586() {
    let v_1587 = func_213();
    match 2 {
        0 => {
            let v_1588 = 15 + 64;
            if 18 > 10 {
                if 10 > 10 {
                    let w_1589 = 6;
                    let v_1590 = ext_3();
                } else {
                    ext_2();
                    #[cfg(any(feature = "feat9", feature = "feat22", feature = "feat2"))]
                    let v_1591 = 61 + 66;
                    let v_1592 = ext_3();
                    let v_1593 = func_773();
                }
                match 3 {
                    0 => {
                        let v_1594 = 303;
                        func_1043();
                    }
                    _ => {}
                }
            } else {
                match 4 {
                    0 => {
                        let w_1595 = 4;
                        let v_1596 = func_206();
                        #[cfg(feature = "feat6")]
                        let _ = 76 + 4;
                    }
                    _ => {}
                }
            }
            #[cfg(any(feature = "feat12", feature = "feat0"))]
            let v_1597 = 114;
        }
        _ => {}
    }
    println!("msg_1598 {}", 1);
    func_667();
}
pub fn func_1599() {
    let v_1600 = 552;
    let v_1601 = 85 + 23;
    let v_1602 = func_92();
}
pub fn func_1603() {
    let _ = 928;
    match 1 {
        0 => {
            let v_1604 = func_1149();
            let v_1605 = ext_2();
            #[cfg(feature = "feat10")]
            let v_1606 = ext_0();
        }
        _ => {}
    }
}
pub static COUNTER_1607: u32 = 0;
pub const LIMIT_1608: u32 = 137;
pub fn func_1609() {
    #[cfg(feature = "feat21")]
    let _ = 43 + 43;
    match 0 {
        0 => {
            let v_1610 = 833;
            let v_1611 = ext_0();
        }
        _ => {}
    }
    let v_1612 = ext_1();
    #[cfg(feature = "feat0")]
    let _ = 693;
}
pub enum Kind_1613 {
    Variant_1614,
}
#[cfg(any(feature = "feat19", feature = "feat18", feature = "feat21"))]
pub const LIMIT_1615: u32 = func_1543();
pub const LIMIT_1616: u32 = func_397();
pub fn func_478() {
    #[cfg(feature = "feat13")]
    let v_1617 = 375;
    pub fn func_1618() {
        let _ = 14;
        #[cfg(any(feature = "feat10", feature = "feat0", feature = "feat19"))]
        ext_1();
    }
}
pub fn func_1619() {
    if 5 > 10 {
        let v_1620 = func_932();
        #[cfg(feature = "feat0")]
        let v_1621 = 17 + 39;
        ext_3();
        match 4 {
            0 => {
                println!("msg_1622 {}", 1);
            }
            _ => {}
        }
    } else {
        let v_1623 = 918;
    }
    let v_1624 = ext_1();
    let v_1625 = func_1520();
}
pub const LIMIT_1626: u32 = func_387();
pub enum Kind_1627 {
    Variant_1628,
    Variant_1629,
    Variant_1630,
    Variant_1631,
}
pub static COUNTER_1632: u32 = 0;
pub fn func_1633() {
    #[cfg(feature = "feat23")]
    func_580();
    if 6 > 10 {
        let v_1634 = func_1149();
    } else {
        func_397();
        if 3 > 10 {
            #[cfg(not(feature = "feat24"))]
            let v_1635 = func_1414();
            let v_1636 = ext_1();
        } else {
            let v_1637 = 160;
            pub fn func_1638() {
                let w_1639 = 6;
                #[cfg(feature = "feat2")]
                let v_1640 = ext_1();
            }
        }
        #[cfg(all(feature = "feat12", not(feature = "feat24")))]
        let v_1641 = func_668();
        println!("msg_1642 {}", 1);
    }
    ext_3();
}
pub struct Handle_1643;
impl Handle_1643 {
    pub fn func_1644() {
        println!("msg_1645 {}", 1);
        let v_1646 = func_468();
        if 16 > 10 {
            let v_1647 = func_1619();
            ext_0();
            pub fn func_1648() {
                let v_1649 = 17 + 23;
            }
            let _ = 44 + 80;
        } else {
            pub fn func_1650() {
                let v_1651 = 2 + 23;
                let v_1652 = func_698();
            }
            #[cfg(feature = "feat10")]
            func_155();
        }
        pub fn func_1653() {
            let v_1654 = func_193();
            let v_1655 = ext_1();
        }
    }
    pub fn func_1656() {
        if 16 > 10 {
            println!("msg_1657 {}", 1);
            let v_1658 = ext_3();
            match 1 {
                0 => {
                    let _ = 345;
                    #[cfg(any(feature = "feat0", feature = "feat23", feature = "feat6"))]
                    let v_1659 = 35 + 56;
                    let w_1660 = 5;
                }
                _ => {}
            }
        } else {
            let v_1661 = func_602();
            func_140();
            #[cfg(feature = "feat6")]
            ext_0();
        }
        #[cfg(not(feature = "feat25"))]
        let v_1662 = ext_3();
        func_1358();
        println!("msg_1663 {}", 1);
    }
}
