pub fn func_1335() {
    pub fn func_1336() {
        #[cfg(all(feature = "feat14", not(feature = "feat7")))]
        let v_1337 = 761;
        match 3 {
            0 => {
                #[cfg(not(feature = "feat4"))]
                let v_1338 = ext_2();
                match 4 {
                    0 => {
                        let v_1339 = ext_3();
                    }
                    _ => {}
                }
                if 5 > 10 {
                    func_380();
                    println!("msg_1340 {}", 1);
                } else {
                    let v_1341 = ext_2();
                }
                pub fn func_1342() {
                    println!("msg_1343 {}", 1);
                    let w_1344 = 0;
                    let v_1345 = 35 + 75;
                    let v_1346 = func_802();
                }
            }
            _ => {}
        }
    }
    let v_1347 = 219;
}
pub fn func_1348() {
    println!("msg_1349 {}", 1);
}
pub mod inner_1350 {
    use super::*;
    #[cfg(feature = "feat9")]
    pub fn func_1351() {
        #[cfg(all(feature = "feat13", not(feature = "feat4")))]
        let v_1352 = func_1171();
        println!("msg_1353 {}", 1);
        pub fn func_1354() {
            pub fn func_1355() {
                #[cfg(any(feature = "feat10", feature = "feat13", feature = "feat14"))]
                let v_1356 = 77 + 80;
                let w_1357 = 3;
                #[cfg(feature = "feat16")]
                let v_1358 = func_1134();
            }
        }
        if 3 > 10 {
            let v_1359 = ext_1();
            #[cfg(feature = "feat18")]
            let v_1360 = func_1054();
        } else {
            func_338();
            #[cfg(feature = "feat14")]
            let v_1361 = 261;
            func_113();
        }
    }
}
pub fn func_1362() {
    let v_1363 = 328;
    if 1 > 10 {
        let v_1364 = 11 + 68;
        ext_0();
        if 7 > 10 {
            if 15 > 10 {
                let v_1365 = 3 + 36;
                let w_1366 = 6;
            } else {
                println!("msg_1367 {}", 1);
                let w_1368 = 5;
                let v_1369 = ext_1();
                let w_1370 = 3;
            }
            match 1 {
                0 => {
                    let w_1371 = 5;
                }
                _ => {}
            }
            let v_1372 = func_304();
        } else {
            let v_1373 = 55 + 97;
            if 17 > 10 {
                let v_1374 = ext_0();
            } else {
                let v_1375 = 328;
                let v_1376 = ext_0();
                let w_1377 = 2;
                let w_1378 = 8;
            }
            let v_1379 = 61 + 94;
            pub fn func_1380() {
                let v_1381 = 95 + 6;
                let v_1382 = func_869();
                #[cfg(not(feature = "feat15"))]
                let _ = 728;
                let w_1383 = 0;
            }
        }
        let v_1384 = 918;
    } else {
        let v_1385 = func_717();
    }
    func_1177();
}
use std::collections::HashMap;
pub struct Handle_1386;
impl Handle_1386 {
    #[cfg(any(feature = "feat10", feature = "feat8"))]
    pub fn func_1387() {
        println!("msg_1388 {}", 1);
    }
}
pub struct Handle_1389;
impl Handle_1389 {
    pub fn func_1390() {
        #[cfg(feature = "feat8")]
        let v_1391 = func_1320();
        if 19 > 10 {
            if 19 > 10 {
                #[cfg(all(feature = "feat0", not(feature = "feat7")))]
                let v_1392 = func_120();
            } else {
                let v_1393 = 753;
                let _ = 71 + 11;
                let v_1394 = func_420();
                println!("msg_1395 {}", 1);
            }
        } else {
            let v_1396 = func_861();
            let v_1397 = func_351();
        }
        let _ = 87 + 9;
    }
}
pub type Alias_1398 = u64;
pub fn func_861() {
    let v_1399 = 45 + 35;
    match 2 {
        0 => {
            let _ = 211;
            match 3 {
                0 => {
                    pub fn func_1400() {
                        println!("msg_1401 {}", 1);
                        println!("msg_1402 {}", 1);
                    }
                    #[cfg(feature = "feat0")]
                    func_341();
                    match 3 {
                        0 => {
                            let w_1403 = 5;
                            let w_1404 = 0;
                            #[cfg(feature = "feat0")]
                            let v_1405 = 57 + 90;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            println!("msg_1406 {}", 1);
        }
        _ => {}
    }
    match 3 {
        0 => {
            let v_1407 = 369;
        }
        _ => {}
    }
    let v_1408 = 594;
}
#[cfg(feature = "feat0")]
use std::collections::HashMap;
#[cfg(any(feature = "feat16", feature = "feat3"))]
pub fn func_1409() {
    let v_1410 = 99 + 56;
    let _ = 990;
    let _ = 297;
    let v_1411 = 29 + 69;
}
pub const LIMIT_1412: u32 = func_1193();
pub fn func_1413() {
    println!("msg_1414 {}", 1);
    #[cfg(not(feature = "feat4"))]
    let v_1415 = ext_2();
    let v_1416 = func_1348();
}
pub struct Handle_1417;
impl Handle_1417 {
    pub fn func_1418() {
        func_767();
        let v_1419 = 230;
        let v_1420 = 405;
        let v_1421 = 523;
    }
}
pub enum Kind_1422 {
    Variant_1423,
    Variant_1424,
    #[cfg(not(feature = "feat4"))]
    Variant_1425,
    Variant_1426,
}
pub const LIMIT_1427: u32 = ext_1();
use std::collections::HashMap;
pub fn func_427() {
    match 2 {
        0 => {
            let v_1428 = func_917();
        }
        _ => {}
    }
}
#[cfg(feature = "feat10")]
pub fn func_1429() {
    func_743();
    match 0 {
        0 => {
            match 1 {
                0 => {
                    pub fn func_1430() {
                        println!("msg_1431 {}", 1);
                        println!("msg_1432 {}", 1);
                    }
                    let v_1433 = ext_2();
                    let _ = 69 + 99;
                    println!("msg_1434 {}", 1);
                }
                _ => {}
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat13")]
    let v_1435 = func_17();
    ext_1();
}
pub fn func_1436() {
    let v_1437 = func_119();
}
pub fn func_1438() {
    let v_1439 = ext_3();
}
pub fn func_1440() {
    if 19 > 10 {
        println!("msg_1441 {}", 1);
        ext_0();
        func_1151();
        #[cfg(not(feature = "feat5"))]
        let v_1442 = 477;
    } else {
        match 1 {
            0 => {
                let v_1443 = ext_0();
            }
            _ => {}
        }
    }
    ext_1();
}
#[cfg(feature = "feat18")]
pub static COUNTER_1444: u32 = 0;
pub fn func_1409() {
    if 19 > 10 {
        let v_1445 = 821;
        let v_1446 = func_148();
        let _ = 30 + 68;
    } else {
        func_377();
        let v_1447 = ext_0();
        let v_1448 = ext_2();
        #[cfg(any(feature = "feat0", feature = "feat3", feature = "feat1"))]
        let v_1449 = 254;
    }
    #[cfg(feature = "feat10")]
    let _ = 279;
    match 4 {
        0 => {
            #[cfg(feature = "feat18")]
            let v_1450 = ext_2();
            println!("msg_1451 {}", 1);
            let v_1452 = 82 + 10;
        }
        _ => {}
    }
}
pub fn func_1453() {
    func_714();
    if 19 > 10 {
        println!("msg_1454 {}", 1);
        let v_1455 = 705;
        match 3 {
            0 => {
                let _ = 40;
                let v_1456 = 25 + 61;
                let v_1457 = 27 + 50;
            }
            _ => {}
        }
    } else {
        let v_1458 = 326;
    }
    let _ = 10 + 26;
    let v_1459 = func_407();
}
pub mod inner_1460 {
    use super::*;
    pub struct Record_1461 {
        pub field_1462: u32,
        pub field_1463: u32,
        pub field_1464: u32,
        pub field_1465: u32,
    }
}
pub fn func_1466() {
    #[cfg(feature = "feat17")]
    let v_1467 = func_1251();
    let v_1468 = ext_3();
    #[cfg(not(feature = "feat11"))]
    let v_1469 = 620;
}
pub struct Handle_1470;
impl Handle_1470 {
    pub fn func_1471() {
        let v_1472 = func_1362();
        let v_1473 = ext_2();
    }
}
pub fn func_1474() {
    let v_1475 = func_1177();
    let v_1476 = 902;
    #[cfg(feature = "feat16")]
    pub fn func_861() {
        let v_1477 = 13 + 17;
        let v_1478 = func_1301();
    }
}
pub struct Handle_1479;
impl Handle_1479 {
    pub fn func_1480() {
        pub fn func_1481() {
            ext_2();
            let v_1482 = ext_1();
            let v_1483 = ext_3();
            if 3 > 10 {
                let v_1484 = 78 + 25;
                println!("msg_1485 {}", 1);
                let v_1486 = 189;
            } else {
                let _ = 20 + 41;
            }
        }
        println!("msg_1487 {}", 1);
    }
    pub fn func_1488() {
        let v_1489 = func_60();
        println!("msg_1490 {}", 1);
    }
}
pub const LIMIT_1491: u32 = ext_1();
pub fn func_690() {
    func_1488();
    let v_1492 = 43 + 74;
    #[cfg(feature = "feat9")]
    let v_1493 = ext_3();
    let v_1494 = 520;
}
pub static COUNTER_1495: u32 = 0;
use std::collections::HashMap;
#[cfg(not(feature = "feat5"))]
pub fn func_1496() {
    if 9 > 10 {
        pub fn func_1497() {
            let _ = 29 + 17;
            let v_1498 = 907;
            ext_1();
            let _ = 31 + 11;
        }
        let v_1499 = func_1430();
    } else {
        let v_1500 = 62 + 66;
        match 2 {
            0 => {
                let v_1501 = 40 + 18;
                match 4 {
                    0 => {
                        let w_1502 = 5;
                    }
                    _ => {}
                }
                let v_1503 = func_856();
            }
            _ => {}
        }
    }
    ext_3();
    func_1312();
    func_556();
}
