pub struct Record_1442 {
    pub field_1443: u32,
    pub field_1444: u32,
}
pub fn func_1445() {
    println!("msg_1446 {}", 1);
}
pub fn func_1447() {
    let v_1448 = 8 + 29;
    println!("msg_1449 {}", 1);
    #[cfg(all(feature = "feat12", not(feature = "feat11")))]
    let v_1450 = ext_0();
}
pub struct Handle_1451;
impl Handle_1451 {
    pub fn func_1452() {
        pub fn func_1453() {
            if 11 > 10 {
                let w_1454 = 0;
                println!("msg_1455 {}", 1);
                ext_0();
                func_1263();
            } else {
                let w_1456 = 1;
                let _ = 519;
                #[cfg(any(feature = "feat15", feature = "feat13", feature = "feat2"))]
                let _ = 76;
            }
        }
        match 3 {
            0 => {
                let v_1457 = 13 + 19;
            }
            _ => {}
        }
        let v_1458 = func_597();
        func_622();
    }
}
pub struct Handle_1459;
impl Handle_1459 {
    pub fn func_1460() {
        pub fn func_1461() {
            let v_1462 = 385;
            let v_1463 = ext_0();
            func_692();
        }
        #[cfg(feature = "feat1")]
        ext_1();
    }
    pub fn func_1464() {
        ext_2();
        if 10 > 10 {
            let v_1465 = func_1263();
            match 1 {
                0 => {
                    let w_1466 = 0;
                    let v_1467 = func_899();
                    let w_1468 = 6;
                    let v_1469 = 72 + 47;
                }
                _ => {}
            }
        } else {
            #[cfg(feature = "feat2")]
            let v_1470 = func_942();
            let v_1471 = ext_0();
        }
    }
}
use std::collections::HashMap;
#[cfg(feature = "feat9")]
pub fn func_1472() {
    let v_1473 = func_1461();
    let v_1474 = ext_1();
}
pub fn func_484() {
    ext_3();
    let _ = 339;
}
pub fn func_1475() {
    match 0 {
        0 => {
            println!("msg_1476 {}", 1);
            #[cfg(feature = "feat12")]
            let v_1477 = func_1422();
            pub fn func_1478() {
                if 3 > 10 {
                    println!("msg_1479 {}", 1);
                } else {
                    #[cfg(feature = "feat16")]
                    func_167();
                    let w_1480 = 1;
                    let v_1481 = 475;
                    let v_1482 = func_201();
                }
                let v_1483 = 191;
            }
            let _ = 7 + 40;
        }
        _ => {}
    }
}
pub struct Handle_1484;
impl Handle_1484 {
    #[cfg(all(feature = "feat5", not(feature = "feat11")))]
    pub fn func_1485() {
        pub fn func_1486() {
            let v_1487 = 95 + 83;
            let v_1488 = func_612();
            if 3 > 10 {
                func_903();
                let v_1489 = func_699();
                let _ = 998;
            } else {
                let v_1490 = 66 + 21;
            }
            let v_1491 = func_463();
        }
    }
}
use std::collections::HashMap;
#[cfg(any(feature = "feat1", feature = "feat0", feature = "feat2"))]
pub fn func_1492() {
    println!("msg_1493 {}", 1);
    match 0 {
        0 => {
            println!("msg_1494 {}", 1);
            #[cfg(feature = "feat5")]
            func_546();
        }
        _ => {}
    }
}
pub enum Kind_1495 {
    Variant_1496,
    Variant_1497,
    Variant_1498,
}
pub const LIMIT_1499: u32 = 793;
pub mod inner_1500 {
    use super::*;
    pub fn func_1501() {
        match 3 {
            0 => {
                func_1091();
            }
            _ => {}
        }
        match 1 {
            0 => {
                println!("msg_1502 {}", 1);
            }
            _ => {}
        }
        println!("msg_1503 {}", 1);
    }
}
#[cfg(feature = "feat7")]
pub fn func_533() {
    let v_1504 = 53 + 42;
}
pub fn func_1505() {
    let v_1506 = func_283();
    match 1 {
        0 => {
            let v_1507 = func_160();
            println!("msg_1508 {}", 1);
            let v_1509 = func_933();
            let v_1510 = 619;
        }
        _ => {}
    }
    let v_1511 = func_1304();
    let v_1512 = func_1001();
}
pub type Alias_1513 = u64;
pub enum Kind_1514 {
    Variant_1515,
    Variant_1516,
}
pub fn func_1517() {
    if 10 > 10 {
        println!("msg_1518 {}", 1);
        let _ = 43 + 60;
        let v_1519 = func_40();
    } else {
        let v_1520 = func_700();
        let _ = 99 + 32;
        func_320();
        if 16 > 10 {
            let v_1521 = 61 + 76;
            let v_1522 = func_558();
        } else {
            if 19 > 10 {
                let w_1523 = 3;
                let v_1524 = func_1045();
                let v_1525 = func_107();
            } else {
                let w_1526 = 3;
            }
            println!("msg_1527 {}", 1);
            pub fn func_1528() {
                let w_1529 = 2;
                let w_1530 = 4;
                #[cfg(feature = "feat2")]
                let v_1531 = 166;
                let _ = 3 + 22;
            }
            match 1 {
                0 => {
                    func_1178();
                    let v_1532 = 61;
                    println!("msg_1533 {}", 1);
                }
                _ => {}
            }
        }
    }
    let v_1534 = 77 + 59;
}
#[cfg(feature = "feat15")]
pub fn func_1535() {
    pub fn func_1536() {
        let v_1537 = func_379();
        pub fn func_802() {
            let v_1538 = func_1026();
            ext_1();
            let v_1539 = 66 + 40;
        }
        if 17 > 10 {
            let v_1540 = func_1178();
        } else {
            let v_1541 = func_554();
            #[cfg(feature = "feat16")]
            ext_0();
            let _ = 79 + 25;
            let v_1542 = 763;
        }
        let v_1543 = func_358();
    }
    #[cfg(any(feature = "feat16", feature = "feat16"))]
    func_61();
    #[cfg(feature = "feat16")]
    func_31();
}
pub const LIMIT_1544: u32 = 579;
pub struct Record_1545 {
    pub field_1546: u32,
    pub field_1547: u32,
    #[cfg(any(feature = "feat2", feature = "feat2", feature = "feat7"))]
    pub field_1548: u32,
    pub field_1549: u32,
}
#[cfg(all(feature = "feat12", not(feature = "feat3")))]
pub enum Kind_1550 {
    Variant_1551,
}
pub fn func_1552() {
    match 2 {
        0 => {
            let v_1553 = ext_3();
            let _ = 29 + 59;
            if 8 > 10 {
                let v_1554 = 136;
            } else {
                let v_1555 = func_998();
                #[cfg(any(feature = "feat10", feature = "feat8"))]
                let v_1556 = func_1422();
                #[cfg(feature = "feat14")]
                let v_1557 = func_1045();
                let v_1558 = 40 + 59;
            }
            pub fn func_1559() {
                #[cfg(all(feature = "feat0", not(feature = "feat11")))]
                let v_1560 = func_928();
                #[cfg(any(feature = "feat10", feature = "feat10"))]
                pub fn func_1561() {
                    println!("msg_1562 {}", 1);
                    println!("msg_1563 {}", 1);
                }
            }
        }
        _ => {}
    }
    pub fn func_1564() {
        func_1011();
    }
    #[cfg(feature = "feat10")]
    let v_1565 = 712;
    match 1 {
        0 => {
            let v_1566 = ext_0();
            ext_0();
        }
        _ => {}
    }
}
pub type Alias_1567 = u64;
#[cfg(any(feature = "feat1", feature = "feat5"))]
pub mod inner_1568 {
    use super::*;
    pub fn func_1569() {
        match 1 {
            0 => {
                match 1 {
                    0 => {
                        println!("msg_1570 {}", 1);
                        let w_1571 = 8;
                    }
                    _ => {}
                }
                let v_1572 = 39 + 54;
            }
            _ => {}
        }
        if 15 > 10 {
            let v_1573 = func_982();
            let _ = 22 + 18;
        } else {
            #[cfg(feature = "feat8")]
            let v_1574 = func_719();
        }
    }
    use std::collections::HashMap;
    pub fn func_1575() {
        if 5 > 10 {
            let v_1576 = func_879();
        } else {
            func_1295();
            let v_1577 = ext_0();
            func_816();
        }
    }
}
use std::collections::HashMap;
pub fn func_1578() {
    match 2 {
        0 => {
            let v_1579 = 703;
            match 1 {
                0 => {
                    pub fn func_1580() {
                        let v_1581 = func_330();
                        let v_1582 = func_1132();
                        let w_1583 = 6;
                        let v_1584 = func_223();
                    }
                    match 4 {
                        0 => {
                            let v_1585 = ext_0();
                            let v_1586 = ext_0();
                            let w_1587 = 6;
                            println!("msg_1588 {}", 1);
                        }
                        _ => {}
                    }
                    #[cfg(feature = "feat8")]
                    let v_1589 = 407;
                    let v_1590 = func_585();
                }
                _ => {}
            }
            let v_1591 = func_273();
            let v_1592 = func_1559();
        }
        _ => {}
    }
    if 10 > 10 {
        let v_1593 = 12 + 75;
        println!("msg_1594 {}", 1);
        let _ = 787;
        if 5 > 10 {
            if 12 > 10 {
                func_1369();
                println!("msg_1595 {}", 1);
                let v_1596 = 57 + 42;
            } else {
                let v_1597 = func_572();
                #[cfg(feature = "feat8")]
                let v_1598 = 93;
                #[cfg(feature = "feat9")]
                let v_1599 = ext_0();
            }
            let v_1600 = 52 + 34;
            match 4 {
                0 => {
                    let v_1601 = 939;
                    #[cfg(feature = "feat15")]
                    let v_1602 = 27 + 51;
                    let v_1603 = func_223();
                }
                _ => {}
            }
        } else {
            match 3 {
                0 => {
                    let v_1604 = 439;
                    let v_1605 = ext_2();
                    println!("msg_1606 {}", 1);
                }
                _ => {}
            }
            pub fn func_1607() {
                #[cfg(not(feature = "feat11"))]
                let v_1608 = 91 + 24;
                let v_1609 = 206;
                let _ = 965;
            }
            func_1026();
        }
    } else {
        let v_1610 = func_95();
        let v_1611 = 35 + 81;
        let v_1612 = ext_3();
    }
}
