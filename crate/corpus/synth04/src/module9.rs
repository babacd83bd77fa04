pub mod inner_1504 {
    use super::*;
    pub mod inner_1505 {
        use super::*;
        pub fn func_1506() {
            let v_1507 = 198;
            let v_1508 = ext_0();
            let _ = 330;
            let v_1509 = ext_1();
        }
    }
    pub fn func_1510() {
        if 15 > 10 {
            if 9 > 10 {
                let v_1511 = 484;
                let w_1512 = 3;
                let v_1513 = 92 + 6;
                println!("msg_1514 {}", 1);
            } else {
                let w_1515 = 6;
            }
            pub fn func_1438() {
                let v_1516 = ext_2();
                let v_1517 = func_192();
                let v_1518 = func_806();
                println!("msg_1519 {}", 1);
            }
        } else {
            let v_1520 = func_643();
            let _ = 0 + 18;
            let v_1521 = func_842();
            println!("msg_1522 {}", 1);
        }
        let v_1523 = 37;
        let _ = 712;
    }
    pub mod inner_1524 {
        use super::*;
        pub fn func_1525() {
            pub fn func_1526() {
                let v_1527 = 77 + 32;
            }
            #[cfg(feature = "feat18")]
            let _ = 14 + 74;
        }
    }
}
pub fn func_1528() {
    pub fn func_1529() {
        match 2 {
            0 => {
                println!("msg_1530 {}", 1);
                let v_1531 = func_180();
                #[cfg(all(feature = "feat16", not(feature = "feat15")))]
                let v_1532 = 782;
                println!("msg_1533 {}", 1);
            }
            _ => {}
        }
        #[cfg(any(feature = "feat13", feature = "feat18", feature = "feat16"))]
        let v_1534 = ext_0();
    }
    ext_2();
    ext_0();
    let v_1535 = ext_3();
}
pub enum Kind_1536 {
    Variant_1537,
}
pub fn func_1538() {
    let v_1539 = 602;
    let v_1540 = 253;
    func_1016();
    let v_1541 = func_331();
}
pub enum Kind_1542 {
    #[cfg(feature = "feat17")]
    Variant_1543,
    Variant_1544,
    Variant_1545,
    Variant_1546,
}
pub fn func_1547() {
    if 3 > 10 {
        println!("msg_1548 {}", 1);
    } else {
        func_1418();
        func_85();
        pub fn func_1549() {
            let v_1550 = func_258();
        }
        let v_1551 = func_1466();
    }
    let _ = 519;
    println!("msg_1552 {}", 1);
    println!("msg_1553 {}", 1);
}
use std::collections::HashMap;
pub struct Handle_1554;
impl Handle_1554 {
    pub fn func_1555() {
        let v_1556 = 835;
    }
    pub fn func_1304() {
        pub fn func_1557() {
            pub fn func_1558() {
                let w_1559 = 5;
                let v_1560 = ext_3();
                ext_3();
            }
        }
        let v_1561 = func_974();
        let v_1562 = ext_1();
        #[cfg(feature = "feat10")]
        ext_2();
    }
}
use std::collections::HashMap;
#[cfg(feature = "feat14")]
pub enum Kind_1563 {
    Variant_1564,
    Variant_1565,
    Variant_1566,
}
pub fn func_1567() {
    let v_1568 = func_703();
    let v_1569 = ext_1();
    match 1 {
        0 => {
            let v_1570 = ext_1();
            match 4 {
                0 => {
                    let v_1571 = 36 + 55;
                    ext_0();
                    let v_1572 = func_1290();
                    match 1 {
                        0 => {
                            let v_1573 = 38;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            #[cfg(all(feature = "feat14", not(feature = "feat11")))]
            let v_1574 = func_1016();
        }
        _ => {}
    }
}
pub fn func_1575() {
    ext_1();
    match 1 {
        0 => {
            #[cfg(any(feature = "feat14", feature = "feat17", feature = "feat13"))]
            let v_1576 = 125;
            #[cfg(all(feature = "feat17", not(feature = "feat11")))]
            ext_2();
        }
        _ => {}
    }
}
pub struct Handle_1577;
impl Handle_1577 {
    pub fn func_1578() {
        let v_1579 = func_487();
        let v_1580 = 581;
        let v_1581 = ext_1();
        match 1 {
            0 => {
                pub fn func_965() {
                    let w_1582 = 4;
                    #[cfg(feature = "feat13")]
                    let v_1583 = ext_0();
                    let v_1584 = 17 + 53;
                }
                pub fn func_1585() {
                    ext_1();
                    let v_1586 = 365;
                    let w_1587 = 7;
                }
                println!("msg_1588 {}", 1);
                let v_1589 = 703;
            }
            _ => {}
        }
    }
    pub fn func_1590() {
        println!("msg_1591 {}", 1);
        pub fn func_1592() {
            if 9 > 10 {
                #[cfg(all(feature = "feat18", not(feature = "feat4")))]
                ext_0();
                let v_1593 = ext_1();
            } else {
                let v_1594 = func_925();
                func_1187();
                let v_1595 = 448;
            }
        }
        #[cfg(feature = "feat9")]
        let _ = 634;
        let v_1596 = ext_1();
    }
}
pub mod nested;
