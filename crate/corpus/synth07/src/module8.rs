#[cfg(feature = "feat4")]
pub fn func_1333() {
    let _ = 31 + 86;
}
pub enum Kind_1334 {
    Variant_1335,
    Variant_1336,
    Variant_1337,
}
use std::collections::HashMap;
pub mod inner_1338 {
    use super::*;
    pub fn func_1339() {
        if 18 > 10 {
            let v_1340 = func_758();
            func_585();
        } else {
            func_1013();
            if 14 > 10 {
                let w_1341 = 6;
            } else {
                let v_1342 = 28 + 77;
                let w_1343 = 5;
                let v_1344 = func_685();
                let v_1345 = func_1134();
            }
        }
        #[cfg(any(feature = "feat23", feature = "feat23", feature = "feat22"))]
        func_1127();
    }
    pub mod inner_1346 {
        use super::*;
        pub struct Handle_1347;
        impl Handle_1347 {
            pub fn func_1348() {
                ext_2();
            }
            pub fn func_1349() {
                let v_1350 = func_330();
                let _ = 498;
                let v_1351 = 289;
            }
        }
        pub fn func_1352() {
            func_887();
        }
    }
}
pub const LIMIT_1353: u32 = 77 + 38;
pub enum Kind_1354 {
    Variant_1355,
    Variant_1356,
}
pub struct Handle_1357;
impl Handle_1357 {
    pub fn func_1358() {
        println!("msg_1359 {}", 1);
        pub fn func_1360() {
            if 10 > 10 {
                let v_1361 = func_118();
                let v_1362 = ext_1();
                let v_1363 = ext_1();
            } else {
                #[cfg(feature = "feat3")]
                let _ = 763;
                let w_1364 = 1;
            }
        }
    }
}
pub struct Handle_1365;
#[cfg(not(feature = "feat5"))]
impl Handle_1365 {
    pub fn func_1366() {
        if 4 > 10 {
            func_932();
            let v_1367 = 0 + 77;
            if 11 > 10 {
                let v_1368 = func_852();
                let v_1369 = 28 + 52;
                let w_1370 = 7;
            } else {
                ext_0();
                let v_1371 = func_905();
                let w_1372 = 6;
                let w_1373 = 5;
            }
        } else {
            if 10 > 10 {
                println!("msg_1374 {}", 1);
                let w_1375 = 4;
                let v_1376 = 70 + 62;
            } else {
                let v_1377 = func_276();
                let w_1378 = 7;
            }
            let v_1379 = func_764();
        }
    }
}
#[cfg(feature = "feat17")]
pub enum Kind_1380 {
    Variant_1381,
    Variant_1382,
    #[cfg(feature = "feat23")]
    Variant_1383,
}
pub struct Record_1384 {
    pub field_1385: u32,
    pub field_1386: u32,
}
pub mod inner_1387 {
    use super::*;
    #[cfg(any(feature = "feat23", feature = "feat13", feature = "feat10"))]
    pub fn func_1388() {
        let v_1389 = 461;
    }
}
pub fn func_1390() {
    println!("msg_1391 {}", 1);
    let v_1392 = ext_1();
}
pub fn func_1393() {
    println!("msg_1394 {}", 1);
    let v_1395 = func_832();
}
pub mod inner_1396 {
    use super::*;
    pub fn func_1397() {
        let v_1398 = func_421();
    }
    pub const LIMIT_1399: u32 = 15 + 37;
    #[cfg(feature = "feat6")]
    pub fn func_1400() {
        let _ = 600;
        match 4 {
            0 => {
                println!("msg_1401 {}", 1);
            }
            _ => {}
        }
        let v_1402 = func_614();
        #[cfg(all(feature = "feat17", not(feature = "feat15")))]
        let v_1403 = 766;
    }
}
pub fn func_1404() {
    let v_1405 = ext_2();
}
pub type Alias_1406 = u64;
#[cfg(any(feature = "feat19", feature = "feat22", feature = "feat22"))]
pub fn func_942() {
    ext_1();
}
pub fn func_1407() {
    ext_3();
    #[cfg(feature = "feat18")]
    let v_1408 = ext_1();
    match 1 {
        0 => {
            #[cfg(feature = "feat18")]
            let v_1409 = func_1126();
        }
        _ => {}
    }
}
pub struct Handle_1410;
impl Handle_1410 {
    pub fn func_1411() {
        pub fn func_1412() {
            #[cfg(feature = "feat13")]
            let v_1413 = ext_1();
            #[cfg(feature = "feat13")]
            pub fn func_1414() {
                let w_1415 = 8;
                ext_0();
            }
            let v_1416 = 59;
            if 4 > 10 {
                let w_1417 = 4;
            } else {
                let v_1418 = 54 + 26;
            }
        }
    }
    pub fn func_1419() {
        #[cfg(feature = "feat18")]
        ext_2();
    }
}
pub static COUNTER_1420: u32 = 0;
pub fn func_1352() {
    match 2 {
        0 => {
            let _ = 681;
            pub fn func_1421() {
                match 2 {
                    0 => {
                        let w_1422 = 3;
                        let w_1423 = 6;
                        #[cfg(any(feature = "feat9", feature = "feat22", feature = "feat23"))]
                        ext_3();
                        let v_1424 = 30 + 51;
                    }
                    _ => {}
                }
            }
            if 16 > 10 {
                let _ = 98 + 27;
            } else {
                let v_1425 = ext_2();
                let v_1426 = 19 + 85;
            }
            if 18 > 10 {
                #[cfg(all(feature = "feat8", not(feature = "feat16")))]
                let v_1427 = func_210();
                #[cfg(feature = "feat13")]
                let v_1428 = func_1292();
                func_980();
                func_780();
            } else {
                if 1 > 10 {
                    let w_1429 = 5;
                    println!("msg_1430 {}", 1);
                    let v_1431 = 15 + 46;
                    let v_1432 = func_74();
                } else {
                    func_847();
                    println!("msg_1433 {}", 1);
                }
                pub fn func_1434() {
                    ext_3();
                    let _ = 26 + 56;
                    let _ = 364;
                    println!("msg_1435 {}", 1);
                }
            }
        }
        _ => {}
    }
}
pub mod inner_1436 {
    use super::*;
    pub struct Record_1437 {
        pub field_1438: u32,
        pub field_1439: u32,
    }
    #[cfg(feature = "feat21")]
    pub fn func_1440() {
        #[cfg(feature = "feat23")]
        let v_1441 = ext_0();
        if 12 > 10 {
            match 1 {
                0 => {
                    let v_1442 = func_1008();
                    let v_1443 = ext_0();
                    #[cfg(any(feature = "feat22", feature = "feat22"))]
                    let _ = 32 + 1;
                    let v_1444 = ext_1();
                }
                _ => {}
            }
            match 0 {
                0 => {
                    let v_1445 = func_156();
                    let w_1446 = 8;
                    let v_1447 = 39 + 72;
                }
                _ => {}
            }
            println!("msg_1448 {}", 1);
        } else {
            let v_1449 = 26 + 7;
            if 19 > 10 {
                let w_1450 = 6;
                let v_1451 = 91 + 53;
                let _ = 556;
            } else {
                let w_1452 = 1;
            }
            println!("msg_1453 {}", 1);
        }
        #[cfg(not(feature = "feat14"))]
        func_165();
        let _ = 344;
    }
}
#[cfg(feature = "feat19")]
pub enum Kind_1454 {
    Variant_1455,
    Variant_1456,
    Variant_1457,
    #[cfg(all(feature = "feat23", not(feature = "feat24")))]
    Variant_1458,
}
pub type Alias_1459 = u64;
#[cfg(any(feature = "feat9", feature = "feat6"))]
pub fn func_1460() {
    let _ = 73 + 30;
    let v_1461 = func_118();
}
pub fn func_1462() {
    match 2 {
        0 => {
            let v_1463 = func_511();
            let v_1464 = 0 + 63;
            let v_1465 = 45 + 72;
            #[cfg(any(feature = "feat19", feature = "feat0", feature = "feat22"))]
            ext_0();
        }
        _ => {}
    }
    let v_1466 = 76 + 2;
    let v_1467 = 58 + 20;
    let v_1468 = func_166();
}
pub fn func_1469() {
    let v_1470 = func_839();
}
pub mod inner_1471 {
    use super::*;
    pub struct Handle_1472;
    impl Handle_1472 {
        pub fn func_1473() {
            println!("msg_1474 {}", 1);
            pub fn func_140() {
                let v_1475 = func_1264();
                let v_1476 = func_1043();
                let w_1477 = 4;
                let w_1478 = 8;
            }
            let v_1479 = ext_3();
        }
        pub fn func_1480() {
            if 11 > 10 {
                let _ = 86 + 96;
                let v_1481 = 479;
            } else {
                func_924();
                let w_1482 = 7;
                let v_1483 = func_979();
            }
            if 13 > 10 {
                let w_1484 = 7;
                let w_1485 = 4;
            } else {
                func_249();
                #[cfg(not(feature = "feat1"))]
                let v_1486 = func_1245();
            }
            pub fn func_1487() {
                let v_1488 = ext_0();
                let w_1489 = 5;
                let v_1490 = 995;
            }
        }
    }
    pub fn func_1491() {
        let v_1492 = func_64();
    }
}
pub fn func_1493() {
    pub fn func_1494() {
        #[cfg(feature = "feat18")]
        let _ = 404;
        let _ = 16 + 80;
    }
    #[cfg(any(feature = "feat8", feature = "feat4", feature = "feat8"))]
    let v_1495 = 997;
    if 4 > 10 {
        func_523();
    } else {
        match 3 {
            0 => {
                let v_1496 = func_1473();
                func_714();
                ext_2();
            }
            _ => {}
        }
        println!("msg_1497 {}", 1);
        match 0 {
            0 => {
                #[cfg(all(feature = "feat4", not(feature = "feat1")))]
                let v_1498 = 80 + 42;
                let v_1499 = func_1339();
                #[cfg(feature = "feat13")]
                pub fn func_1500() {
                    let w_1501 = 7;
                }
            }
            _ => {}
        }
    }
    let _ = 13 + 34;
}
