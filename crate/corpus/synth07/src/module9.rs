pub fn func_1195() {
    println!("msg_1502 {}", 1);
    let v_1503 = 0 + 93;
    let v_1504 = func_882();
}
pub mod inner_1505 {
    use super::*;
    pub fn func_1506() {
        println!("msg_1507 {}", 1);
        let v_1508 = func_1434();
        #[cfg(feature = "feat9")]
        let _ = 973;
    }
    pub struct Handle_1509;
    impl Handle_1509 {
        pub fn func_1510() {
            println!("msg_1511 {}", 1);
            #[cfg(feature = "feat12")]
            pub fn func_1512() {
                #[cfg(any(feature = "feat22", feature = "feat23", feature = "feat23"))]
                let v_1513 = func_210();
                let _ = 51 + 74;
                let _ = 88;
                #[cfg(any(feature = "feat17", feature = "feat21"))]
                let _ = 800;
            }
            let v_1514 = 92;
        }
        pub fn func_1515() {
            match 1 {
                0 => {
                    let v_1516 = func_1462();
                    let v_1517 = func_1040();
                    let w_1518 = 3;
                }
                _ => {}
            }
        }
    }
}
pub mod inner_1519 {
    use super::*;
    pub fn func_1520() {
        match 3 {
            0 => {
                #[cfg(feature = "feat0")]
                func_202();
                let v_1521 = func_667();
                match 4 {
                    0 => {
                        let v_1522 = ext_3();
                        let v_1523 = 392;
                        func_1181();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    pub fn func_1524() {
        let v_1525 = func_355();
        if 17 > 10 {
            let _ = 71 + 40;
        } else {
            match 2 {
                0 => {
                    let w_1526 = 5;
                    let v_1527 = func_1067();
                    ext_0();
                    println!("msg_1528 {}", 1);
                }
                _ => {}
            }
        }
        let v_1529 = func_462();
        pub fn func_1530() {
            let _ = 69;
            let v_1531 = 910;
            let v_1532 = func_237();
        }
    }
}
pub type Alias_1533 = u64;
pub fn func_1534() {
    let _ = 54 + 25;
    #[cfg(not(feature = "feat20"))]
    let v_1535 = 3 + 79;
}
pub enum Kind_1536 {
    Variant_1537,
    Variant_1538,
}
pub fn func_1539() {
    match 0 {
        0 => {
            pub fn func_758() {
                match 0 {
                    0 => {
                        println!("msg_1540 {}", 1);
                    }
                    _ => {}
                }
                let v_1541 = func_302();
            }
            if 18 > 10 {
                let v_1542 = func_1494();
                pub fn func_1543() {
                    let v_1544 = ext_2();
                    let w_1545 = 7;
                    let w_1546 = 1;
                }
            } else {
                #[cfg(feature = "feat22")]
                let v_1547 = ext_2();
            }
        }
        _ => {}
    }
}
#[cfg(feature = "feat0")]
pub mod inner_1548 {
    use super::*;
    pub fn func_1549() {
        if 9 > 10 {
            func_927();
        } else {
            if 11 > 10 {
                let v_1550 = ext_0();
                let v_1551 = ext_3();
                let w_1552 = 4;
            } else {
                let v_1553 = 59 + 12;
                let v_1554 = 15 + 3;
                let v_1555 = func_1138();
            }
            func_833();
            let v_1556 = func_1515();
            if 8 > 10 {
                func_464();
                let v_1557 = func_866();
                println!("msg_1558 {}", 1);
                let v_1559 = ext_3();
            } else {
                let _ = 660;
                let w_1560 = 2;
            }
        }
        let v_1561 = func_104();
        let v_1562 = func_224();
    }
}
pub fn func_1563() {
    let v_1564 = 77 + 72;
    println!("msg_1565 {}", 1);
}
#[cfg(not(feature = "feat5"))]
pub fn func_1566() {
    match 1 {
        0 => {
            pub fn func_1567() {
                println!("msg_1568 {}", 1);
                match 4 {
                    0 => {
                        let w_1569 = 7;
                        func_99();
                    }
                    _ => {}
                }
            }
            let v_1570 = func_1278();
            pub fn func_1571() {
                let v_1572 = 68 + 36;
            }
        }
        _ => {}
    }
    let v_1573 = func_765();
    let v_1574 = func_1103();
    func_922();
}
pub struct Record_1575 {
    pub field_1576: u32,
    #[cfg(feature = "feat6")]
    pub field_1577: u32,
    pub field_1578: u32,
    pub field_1579: u32,
}
use std::collections::HashMap;
pub fn func_1580() {
    match 2 {
        0 => {
            let _ = 707;
        }
        _ => {}
    }
    match 2 {
        0 => {
            let v_1581 = func_1127();
            #[cfg(feature = "feat12")]
            let v_1582 = func_124();
        }
        _ => {}
    }
    let v_1583 = func_1469();
}
pub mod nested;
