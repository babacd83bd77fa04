pub struct Record_1360 {
    pub field_1361: u32,
}
pub struct Handle_1362;
impl Handle_1362 {
    pub fn func_1363() {
        func_1321();
        ext_2();
    }
}
pub struct Record_1364 {
    #[cfg(feature = "feat13")]
    pub field_1365: u32,
    #[cfg(feature = "feat9")]
    pub field_1366: u32,
    pub field_1367: u32,
    pub field_1368: u32,
}
#[cfg(feature = "feat5")]
pub fn func_1369() {
    func_954();
    match 0 {
        0 => {
            let v_1370 = 81 + 38;
            let v_1371 = func_1160();
            let _ = 36 + 38;
            let v_1372 = ext_3();
        }
        _ => {}
    }
    if 5 > 10 {
        if 19 > 10 {
            if 1 > 10 {
                let w_1373 = 7;
                println!("msg_1374 {}", 1);
                println!("msg_1375 {}", 1);
            } else {
                let w_1376 = 5;
                let w_1377 = 1;
                let v_1378 = ext_2();
                func_1363();
            }
            let v_1379 = func_616();
        } else {
            pub fn func_1380() {
                let _ = 60 + 37;
                #[cfg(not(feature = "feat3"))]
                func_505();
                let _ = 29 + 1;
                #[cfg(feature = "feat12")]
                ext_0();
            }
            let _ = 51 + 0;
            #[cfg(feature = "feat10")]
            ext_3();
        }
    } else {
        let _ = 197;
        if 16 > 10 {
            let _ = 910;
            if 8 > 10 {
                let v_1381 = func_1096();
            } else {
                let v_1382 = ext_3();
                let v_1383 = ext_0();
                #[cfg(all(feature = "feat16", not(feature = "feat11")))]
                let v_1384 = func_301();
            }
            println!("msg_1385 {}", 1);
            match 0 {
                0 => {
                    println!("msg_1386 {}", 1);
                    let w_1387 = 2;
                }
                _ => {}
            }
        } else {
            match 1 {
                0 => {
                    func_928();
                    let w_1388 = 7;
                    println!("msg_1389 {}", 1);
                }
                _ => {}
            }
            pub fn func_1390() {
                let w_1391 = 3;
                let v_1392 = func_928();
                println!("msg_1393 {}", 1);
                let _ = 71 + 55;
            }
            match 0 {
                0 => {
                    let v_1394 = 328;
                    let v_1395 = func_142();
                }
                _ => {}
            }
        }
        let v_1396 = 62 + 65;
    }
}
pub enum Kind_1397 {
    Variant_1398,
    Variant_1399,
}
pub fn func_342() {
    let v_1400 = ext_3();
    let v_1401 = func_672();
    println!("msg_1402 {}", 1);
}
pub enum Kind_1403 {
    Variant_1404,
    Variant_1405,
    Variant_1406,
    Variant_1407,
}
pub mod inner_1408 {
    use super::*;
    #[cfg(feature = "feat6")]
    pub fn func_1409() {
        let v_1410 = func_890();
    }
    #[cfg(feature = "feat16")]
    pub fn func_1411() {
        let v_1412 = ext_2();
        let _ = 99 + 95;
    }
}
pub mod inner_1413 {
    use super::*;
    pub type Alias_1414 = u64;
}
use std::collections::HashMap;
pub fn func_121() {
    pub fn func_1415() {
        let v_1416 = 87 + 67;
        ext_0();
    }
}
pub type Alias_1417 = u64;
pub fn func_1418() {
    let v_1419 = func_26();
    println!("msg_1420 {}", 1);
    let v_1421 = func_965();
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_1422() {
    #[cfg(not(feature = "feat3"))]
    let v_1423 = 418;
    println!("msg_1424 {}", 1);
}
pub fn func_1425() {
    let v_1426 = func_1230();
    #[cfg(feature = "feat1")]
    let v_1427 = ext_1();
    let v_1428 = ext_3();
    let v_1429 = 44 + 48;
}
#[cfg(feature = "feat15")]
pub fn func_1430() {
    let v_1431 = func_1363();
}
pub const LIMIT_1432: u32 = 88 + 48;
pub static COUNTER_1433: u32 = 0;
pub fn func_1434() {
    func_342();
    match 1 {
        0 => {
            let v_1435 = func_908();
            pub fn func_38() {
                match 3 {
                    0 => {
                        func_694();
                    }
                    _ => {}
                }
                func_647();
                match 0 {
                    0 => {
                        let w_1436 = 0;
                        let v_1437 = func_701();
                        let w_1438 = 3;
                    }
                    _ => {}
                }
                println!("msg_1439 {}", 1);
            }
            let v_1440 = 32;
            let _ = 431;
        }
        _ => {}
    }
    let v_1441 = func_366();
    #[cfg(any(feature = "feat14", feature = "feat7"))]
    let _ = 7 + 79;
}
