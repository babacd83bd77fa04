pub fn func_210() {
    #[cfg(not(feature = "feat26"))]
    let v_1378 = 16;
}
pub fn func_1379() {
    pub fn func_1380() {
        let v_1381 = func_1134();
        let v_1382 = 211;
    }
}
pub enum Kind_1383 {
    Variant_1384,
    Variant_1385,
    Variant_1386,
    Variant_1387,
}
pub mod inner_1388 {
    use super::*;
    pub static COUNTER_1389: u32 = 0;
    pub enum Kind_1390 {
        Variant_1391,
        Variant_1392,
    }
    pub const LIMIT_1393: u32 = 51 + 54;
}
pub mod inner_1394 {
    use super::*;
    pub fn func_1395() {
        let v_1396 = 752;
        pub fn func_1397() {
            let v_1398 = func_1334();
        }
    }
    use std::collections::HashMap;
    pub struct Handle_1399;
    impl Handle_1399 {
        pub fn func_1184() {
            let v_1400 = func_760();
        }
        pub fn func_1401() {
            let v_1402 = ext_1();
            let v_1403 = 839;
            let v_1404 = ext_1();
            func_1287();
        }
    }
}
pub struct Record_1405 {
    pub field_1406: u32,
    pub field_1407: u32,
}
pub const LIMIT_1408: u32 = ext_2();
pub enum Kind_1409 {
    Variant_1410,
    Variant_1411,
}
#[cfg(not(feature = "feat18"))]
pub enum Kind_1412 {
    Variant_1413,
    Variant_1414,
    Variant_1415,
}
pub const LIMIT_1416: u32 = func_1395();
pub static COUNTER_1417: u32 = 0;
pub fn func_1418() {
    let v_1419 = 44 + 73;
    func_908();
    let _ = 94 + 1;
    let v_1420 = func_1348();
}
pub fn func_403() {
    match 4 {
        0 => {
            match 2 {
                0 => {
                    let _ = 185;
                    let v_1421 = 874;
                    let _ = 18;
                    pub fn func_1422() {
                        println!("msg_1423 {}", 1);
                        let w_1424 = 1;
                        ext_1();
                    }
                }
                _ => {}
            }
            let v_1425 = func_1094();
            let _ = 93 + 53;
        }
        _ => {}
    }
    let v_1426 = ext_1();
    match 0 {
        0 => {
            match 0 {
                0 => {
                    let _ = 81 + 57;
                }
                _ => {}
            }
            let v_1427 = func_982();
            func_926();
            match 2 {
                0 => {
                    ext_1();
                    if 7 > 10 {
                        let w_1428 = 4;
                        let v_1429 = func_1190();
                        let v_1430 = 26;
                    } else {
                        let w_1431 = 6;
                        let w_1432 = 5;
                        let w_1433 = 2;
                    }
                    match 2 {
                        0 => {
                            let w_1434 = 3;
                            let w_1435 = 2;
                            let v_1436 = 806;
                        }
                        _ => {}
                    }
                    let v_1437 = 64 + 97;
                }
                _ => {}
            }
        }
        _ => {}
    }
    ext_2();
}
pub static COUNTER_1438: u32 = 0;
pub fn func_1439() {
    let v_1440 = 72 + 25;
}
pub fn func_1441() {
    println!("msg_1442 {}", 1);
    let v_1443 = 65;
}
pub fn func_1444() {
    let v_1445 = 166;
    pub fn func_759() {
        func_450();
        pub fn func_1446() {
            if 16 > 10 {
                let v_1447 = ext_1();
                let w_1448 = 0;
            } else {
                let w_1449 = 5;
                let v_1450 = 843;
                let w_1451 = 5;
            }
            println!("msg_1452 {}", 1);
        }
        pub fn func_1453() {
            if 4 > 10 {
                ext_3();
                let w_1454 = 0;
            } else {
                let v_1455 = 9 + 80;
                let v_1456 = func_1();
                let w_1457 = 5;
                let w_1458 = 3;
            }
        }
        pub fn func_1251() {
            pub fn func_760() {
                let v_1459 = func_904();
                let _ = 21 + 49;
            }
            let v_1460 = func_511();
            ext_0();
            let v_1461 = func_1124();
        }
    }
}
pub struct Record_1462 {
    #[cfg(not(feature = "feat2"))]
    pub field_1463: u32,
    pub field_1464: u32,
}
pub fn func_1465() {
    println!("msg_1466 {}", 1);
    if 5 > 10 {
        match 3 {
            0 => {
                if 0 > 10 {
                    let w_1467 = 2;
                    let v_1468 = func_248();
                    let w_1469 = 6;
                } else {
                    let w_1470 = 2;
                    let w_1471 = 8;
                }
                match 4 {
                    0 => {
                        let v_1472 = func_229();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        if 16 > 10 {
            let v_1473 = ext_1();
            let v_1474 = 38 + 78;
            println!("msg_1475 {}", 1);
            let v_1476 = 20 + 41;
        } else {
            pub fn func_1477() {
                let v_1478 = 24 + 21;
                let v_1479 = 668;
                let v_1480 = func_588();
            }
        }
    } else {
        pub fn func_1124() {
            #[cfg(not(feature = "feat21"))]
            let v_1481 = func_156();
            let _ = 459;
            println!("msg_1482 {}", 1);
        }
        let v_1483 = func_860();
        let v_1484 = func_1101();
    }
    let v_1485 = 921;
    if 9 > 10 {
        let v_1486 = 821;
        match 1 {
            0 => {
                let v_1487 = 8 + 82;
                match 1 {
                    0 => {
                        let v_1488 = 20 + 60;
                        let _ = 510;
                    }
                    _ => {}
                }
                let v_1489 = ext_1();
            }
            _ => {}
        }
        if 5 > 10 {
            let v_1490 = func_941();
            pub fn func_1491() {
                let w_1492 = 2;
                let v_1493 = ext_3();
                println!("msg_1494 {}", 1);
                #[cfg(not(feature = "feat26"))]
                let v_1495 = func_1007();
            }
            pub fn func_1496() {
                let v_1497 = 471;
            }
        } else {
            let v_1498 = func_265();
        }
        let v_1499 = 901;
    } else {
        let v_1500 = ext_2();
        let v_1501 = 649;
    }
}
pub fn func_571() {
    let v_1502 = func_129();
}
pub static COUNTER_1503: u32 = 0;
pub fn func_1504() {
    let v_1505 = 30 + 67;
    println!("msg_1506 {}", 1);
}
pub struct Record_1507 {
    pub field_1508: u32,
    pub field_1509: u32,
    pub field_1510: u32,
    pub field_1511: u32,
}
pub fn func_1512() {
    #[cfg(not(feature = "feat12"))]
    let _ = 35 + 2;
    if 6 > 10 {
        func_1228();
        if 7 > 10 {
            match 1 {
                0 => {
                    println!("msg_1513 {}", 1);
                    let v_1514 = 65 + 20;
                }
                _ => {}
            }
        } else {
            match 3 {
                0 => {
                    let v_1515 = ext_0();
                    let w_1516 = 2;
                }
                _ => {}
            }
            func_82();
            let v_1517 = 22 + 91;
        }
        println!("msg_1518 {}", 1);
        let _ = 28 + 76;
    } else {
        let v_1519 = func_102();
        let v_1520 = func_826();
    }
}
pub mod inner_1521 {
    use super::*;
    pub enum Kind_1522 {
        Variant_1523,
        Variant_1524,
        Variant_1525,
        Variant_1526,
    }
    pub fn func_1527() {
        println!("msg_1528 {}", 1);
        let v_1529 = 335;
    }
    pub static COUNTER_1530: u32 = 0;
}
pub struct Handle_1531;
impl Handle_1531 {
    pub fn func_1532() {
        match 3 {
            0 => {
                func_231();
                println!("msg_1533 {}", 1);
                let v_1534 = ext_0();
            }
            _ => {}
        }
        pub fn func_1535() {
            let v_1536 = 898;
            let v_1537 = 12 + 44;
        }
    }
    pub fn func_1538() {
        println!("msg_1539 {}", 1);
        let v_1540 = func_624();
        if 19 > 10 {
            let v_1541 = 169;
            func_440();
        } else {
            let v_1542 = ext_2();
            ext_1();
        }
    }
}
pub mod inner_1543 {
    use super::*;
    pub fn func_1544() {
        ext_0();
        match 2 {
            0 => {
                let v_1545 = 14 + 76;
                let v_1546 = func_417();
            }
            _ => {}
        }
    }
}
pub fn func_1547() {
    let v_1548 = func_1397();
    let _ = 952;
}
pub struct Record_1549 {
    pub field_1550: u32,
    pub field_1551: u32,
}
pub struct Handle_1552;
impl Handle_1552 {
    pub fn func_1553() {
        ext_3();
    }
    pub fn func_1554() {
        println!("msg_1555 {}", 1);
        ext_2();
        pub fn func_1556() {
            let v_1557 = 237;
            let _ = 998;
            let v_1558 = func_654();
        }
        let v_1559 = 973;
    }
}
pub struct Handle_1560;
impl Handle_1560 {
    pub fn func_1561() {
        pub fn func_1562() {
            match 2 {
                0 => {
                    let w_1563 = 6;
                    let w_1564 = 0;
                    func_953();
                }
                _ => {}
            }
            let v_1565 = func_1022();
            let _ = 300;
        }
        func_145();
        pub fn func_1566() {
            println!("msg_1567 {}", 1);
            let v_1568 = func_1477();
            let _ = 17 + 35;
        }
        if 0 > 10 {
            let v_1569 = ext_0();
        } else {
            let v_1570 = 97 + 89;
            func_1169();
            if 6 > 10 {
                let w_1571 = 0;
                let w_1572 = 5;
                let v_1573 = 72 + 80;
                let w_1574 = 3;
            } else {
                let w_1575 = 3;
                let v_1576 = ext_3();
            }
            let v_1577 = 75 + 75;
        }
    }
    pub fn func_1578() {
        let v_1579 = func_86();
        let _ = 286;
        #[cfg(not(feature = "feat25"))]
        let _ = 33 + 66;
    }
}
