pub fn func_1373() {
    #[cfg(feature = "feat21")]
    let v_1374 = ext_3();
    pub fn func_1375() {
        match 1 {
            0 => {
                #[cfg(feature = "feat8")]
                let v_1376 = 582;
                let v_1377 = ext_3();
            }
            _ => {}
        }
        match 0 {
            0 => {
                #[cfg(feature = "feat5")]
                pub fn func_1378() {
                    let v_1379 = 29 + 21;
                    let w_1380 = 3;
                    let w_1381 = 8;
                }
                println!("msg_1382 {}", 1);
                let v_1383 = 57 + 68;
            }
            _ => {}
        }
        #[cfg(feature = "feat8")]
        let v_1384 = ext_1();
        pub fn func_1385() {
            let v_1386 = func_1295();
            match 1 {
                0 => {
                    let w_1387 = 3;
                }
                _ => {}
            }
            pub fn func_1388() {
                func_166();
                let w_1389 = 4;
            }
        }
    }
    println!("msg_1390 {}", 1);
}
#[cfg(feature = "feat23")]
pub const LIMIT_1391: u32 = func_1388();
#[cfg(feature = "feat0")]
pub fn func_1392() {
    let v_1393 = 636;
}
pub struct Handle_1394;
impl Handle_1394 {
    pub fn func_1395() {
        #[cfg(feature = "feat6")]
        let v_1396 = 43 + 11;
    }
    pub fn func_1397() {
        let _ = 41 + 54;
        let v_1398 = 912;
        let v_1399 = 297;
    }
}
pub fn func_1400() {
    let v_1401 = ext_3();
    #[cfg(feature = "feat0")]
    pub fn func_1402() {
        println!("msg_1403 {}", 1);
        let v_1404 = func_879();
        let v_1405 = 41 + 67;
        let v_1406 = func_1150();
    }
    let v_1407 = func_686();
}
pub fn func_1408() {
    let v_1409 = func_237();
    let _ = 288;
    match 2 {
        0 => {
            func_790();
            let _ = 73 + 1;
            let v_1410 = func_1206();
        }
        _ => {}
    }
    let v_1411 = 21 + 88;
}
use std::collections::HashMap;
pub const LIMIT_1412: u32 = 22 + 47;
pub enum Kind_1413 {
    Variant_1414,
    Variant_1415,
    Variant_1416,
    Variant_1417,
}
pub struct Handle_1418;
impl Handle_1418 {
    pub fn func_1419() {
        if 15 > 10 {
            let v_1420 = func_237();
            let v_1421 = 64 + 2;
            let v_1422 = 874;
            let v_1423 = ext_1();
        } else {
            let v_1424 = 22 + 51;
        }
        match 0 {
            0 => {
                let v_1425 = 77 + 33;
                let v_1426 = ext_0();
                let v_1427 = ext_0();
            }
            _ => {}
        }
        println!("msg_1428 {}", 1);
    }
    pub fn func_862() {
        let v_1429 = 93 + 15;
        let v_1430 = func_997();
        let v_1431 = ext_0();
    }
}
pub fn func_1432() {
    func_1308();
    match 1 {
        0 => {
            let v_1433 = 485;
            match 0 {
                0 => {
                    match 1 {
                        0 => {
                            let w_1434 = 8;
                        }
                        _ => {}
                    }
                    println!("msg_1435 {}", 1);
                    #[cfg(feature = "feat14")]
                    let _ = 21 + 54;
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub const LIMIT_1436: u32 = func_1378();
#[cfg(feature = "feat19")]
pub fn func_1437() {
    let v_1438 = 710;
    let _ = 985;
    println!("msg_1439 {}", 1);
    match 0 {
        0 => {
            let _ = 651;
            let v_1440 = func_776();
        }
        _ => {}
    }
}
pub const LIMIT_1441: u32 = 44 + 93;
pub fn func_1442() {
    println!("msg_1443 {}", 1);
    let v_1444 = func_1050();
    func_472();
}
pub struct Handle_1445;
impl Handle_1445 {
    pub fn func_1446() {
        println!("msg_1447 {}", 1);
        let _ = 48 + 48;
        #[cfg(feature = "feat12")]
        let _ = 676;
        let v_1448 = 81 + 49;
    }
}
pub struct Handle_1449;
impl Handle_1449 {
    pub fn func_1450() {
        let v_1451 = func_97();
    }
    pub fn func_1452() {
        #[cfg(feature = "feat16")]
        let v_1453 = func_473();
        func_1012();
        pub fn func_1054() {
            if 0 > 10 {
                let w_1454 = 1;
                let v_1455 = func_1196();
                println!("msg_1456 {}", 1);
                let v_1457 = func_147();
            } else {
                let v_1458 = 787;
                let w_1459 = 2;
                let w_1460 = 6;
                let w_1461 = 8;
            }
            println!("msg_1462 {}", 1);
        }
    }
}
pub type Alias_1463 = u64;
pub fn func_1464() {
    let _ = 24 + 38;
}
pub struct Record_1465 {
    pub field_1466: u32,
}
pub fn func_1467() {
    let v_1468 = func_607();
    if 9 > 10 {
        pub fn func_1469() {
            pub fn func_1470() {
                let w_1471 = 4;
                let w_1472 = 8;
                println!("msg_1473 {}", 1);
            }
            if 17 > 10 {
                let _ = 52 + 11;
                let v_1474 = 80;
                #[cfg(feature = "feat21")]
                func_734();
            } else {
                let _ = 616;
            }
        }
        println!("msg_1475 {}", 1);
        let v_1476 = 422;
        let v_1477 = ext_2();
    } else {
        #[cfg(any(feature = "feat12", feature = "feat2", feature = "feat2"))]
        pub fn func_1478() {
            let v_1479 = 48 + 55;
            let _ = 23 + 35;
        }
        #[cfg(feature = "feat6")]
        let v_1480 = func_773();
    }
    func_143();
    #[cfg(feature = "feat19")]
    func_1313();
}
pub fn func_1481() {
    ext_2();
    if 18 > 10 {
        println!("msg_1482 {}", 1);
        func_318();
    } else {
        let _ = 405;
        pub fn func_387() {
            #[cfg(feature = "feat4")]
            let v_1483 = func_9();
            if 12 > 10 {
                let w_1484 = 5;
                let v_1485 = 81 + 2;
                func_479();
            } else {
                let v_1486 = 79 + 81;
                let v_1487 = ext_2();
                let w_1488 = 0;
                #[cfg(any(feature = "feat5", feature = "feat16"))]
                let v_1489 = func_1304();
            }
        }
        let v_1490 = func_1225();
    }
    if 18 > 10 {
        func_1470();
        if 6 > 10 {
            if 15 > 10 {
                println!("msg_1491 {}", 1);
                let w_1492 = 7;
                let w_1493 = 1;
                func_1022();
            } else {
                let w_1494 = 5;
            }
            let v_1495 = func_686();
            println!("msg_1496 {}", 1);
        } else {
            if 12 > 10 {
                let v_1497 = ext_1();
                #[cfg(any(feature = "feat14", feature = "feat5"))]
                func_442();
            } else {
                println!("msg_1498 {}", 1);
                let v_1499 = func_924();
                #[cfg(all(feature = "feat12", not(feature = "feat3")))]
                let v_1500 = 242;
                #[cfg(any(feature = "feat11", feature = "feat2"))]
                let v_1501 = func_811();
            }
            println!("msg_1502 {}", 1);
            if 2 > 10 {
                #[cfg(any(feature = "feat4", feature = "feat19", feature = "feat8"))]
                let v_1503 = 25 + 69;
                let v_1504 = 624;
            } else {
                let v_1505 = ext_2();
            }
            println!("msg_1506 {}", 1);
        }
        ext_2();
        let v_1507 = 17;
    } else {
        match 1 {
            0 => {
                let v_1508 = func_684();
            }
            _ => {}
        }
        println!("msg_1509 {}", 1);
        match 2 {
            0 => {
                pub fn func_1510() {
                    let v_1511 = func_138();
                    let _ = 622;
                }
            }
            _ => {}
        }
        let v_1512 = 18 + 66;
    }
    func_775();
}
pub mod inner_1513 {
    use super::*;
    pub mod inner_1514 {
        use super::*;
        pub fn func_1515() {
            println!("msg_1516 {}", 1);
        }
        pub mod inner_1517 {
            use super::*;
            pub type Alias_1518 = u64;
            #[cfg(not(feature = "feat17"))]
            pub const LIMIT_1519: u32 = func_1288();
        }
    }
}
pub enum Kind_1520 {
    Variant_1521,
    Variant_1522,
    Variant_1523,
}
pub struct Handle_1524;
#[cfg(feature = "feat21")]
impl Handle_1524 {
    pub fn func_382() {
        let v_1525 = 98 + 87;
    }
    pub fn func_1526() {
        if 0 > 10 {
            let v_1527 = func_1256();
            if 18 > 10 {
                let v_1528 = 642;
                let w_1529 = 1;
                let w_1530 = 2;
                ext_2();
            } else {
                let w_1531 = 6;
            }
        } else {
            let _ = 87 + 5;
        }
        if 19 > 10 {
            pub fn func_611() {
                let v_1532 = 11 + 32;
                let w_1533 = 2;
                println!("msg_1534 {}", 1);
            }
            if 18 > 10 {
                let w_1535 = 7;
                ext_3();
                let v_1536 = ext_1();
                let w_1537 = 3;
            } else {
                let w_1538 = 8;
                let _ = 51 + 72;
                let w_1539 = 8;
            }
            let v_1540 = 2 + 45;
            let v_1541 = 780;
        } else {
            let v_1542 = ext_1();
            let v_1543 = 13 + 5;
            let v_1544 = 636;
        }
        let _ = 59 + 98;
        if 3 > 10 {
            if 14 > 10 {
                let v_1545 = ext_0();
                let v_1546 = 6 + 58;
            } else {
                println!("msg_1547 {}", 1);
                let w_1548 = 6;
                let w_1549 = 7;
            }
            let v_1550 = 752;
            let v_1551 = 396;
        } else {
            let v_1552 = ext_2();
            pub fn func_1553() {
                let _ = 611;
                ext_3();
                let v_1554 = func_721();
            }
        }
    }
}
