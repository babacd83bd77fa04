pub fn func_1274() {
    let v_1275 = 851;
}
pub struct Record_1276 {
    #[cfg(feature = "feat19")]
    pub field_1277: u32,
}
pub enum Kind_1278 {
    Variant_1279,
    Variant_1280,
}
pub enum Kind_1281 {
    Variant_1282,
}
pub fn func_1283() {
    println!("msg_1284 {}", 1);
    ext_0();
    let v_1285 = ext_1();
    match 2 {
        0 => {
            let v_1286 = ext_3();
            println!("msg_1287 {}", 1);
            match 0 {
                0 => {
                    pub fn func_1288() {
                        let v_1289 = 39 + 65;
                        let v_1290 = 11 + 93;
                    }
                    let v_1291 = ext_2();
                }
                _ => {}
            }
            let v_1292 = ext_3();
        }
        _ => {}
    }
}
pub fn func_1293() {
    let v_1294 = ext_1();
    pub fn func_1295() {
        let v_1296 = func_1141();
        #[cfg(feature = "feat2")]
        let v_1297 = 528;
    }
    func_1202();
}
pub fn func_1298() {
    func_845();
    let v_1299 = func_516();
    match 0 {
        0 => {
            #[cfg(any(feature = "feat8", feature = "feat15"))]
            let v_1300 = 128;
            ext_1();
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub fn func_1301() {
    let v_1302 = 395;
}
pub struct Handle_1303;
impl Handle_1303 {
    pub fn func_1304() {
        func_643();
        ext_2();
        let v_1305 = func_697();
        let v_1306 = 469;
    }
}
#[cfg(feature = "feat4")]
pub fn func_1307() {
    match 3 {
        0 => {
            if 4 > 10 {
                func_143();
                pub fn func_1308() {
                    let _ = 51 + 92;
                    #[cfg(all(feature = "feat5", not(feature = "feat20")))]
                    let v_1309 = 684;
                    let v_1310 = func_479();
                    func_1061();
                }
                let v_1311 = func_1();
            } else {
                func_1065();
            }
        }
        _ => {}
    }
    func_1140();
    println!("msg_1312 {}", 1);
}
#[cfg(feature = "feat6")]
pub fn func_1313() {
    #[cfg(not(feature = "feat22"))]
    let v_1314 = 71 + 90;
    let _ = 6 + 20;
    let v_1315 = ext_3();
    pub fn func_1316() {
        let v_1317 = func_602();
        #[cfg(all(feature = "feat16", not(feature = "feat13")))]
        pub fn func_1318() {
            match 0 {
                0 => {
                    let w_1319 = 0;
                    let v_1320 = 43 + 11;
                    ext_3();
                }
                _ => {}
            }
            if 6 > 10 {
                let v_1321 = func_481();
                let w_1322 = 3;
                func_575();
            } else {
                let w_1323 = 8;
                println!("msg_1324 {}", 1);
            }
            let v_1325 = ext_3();
            let v_1326 = func_160();
        }
    }
}
use std::collections::HashMap;
pub struct Record_1327 {
    #[cfg(any(feature = "feat11", feature = "feat11"))]
    pub field_1328: u32,
    pub field_1329: u32,
    pub field_1330: u32,
}
#[cfg(all(feature = "feat5", not(feature = "feat13")))]
pub fn func_1331() {
    println!("msg_1332 {}", 1);
}
pub static COUNTER_1333: u32 = 0;
pub fn func_1334() {
    println!("msg_1335 {}", 1);
    let v_1336 = 174;
}
pub fn func_1337() {
    pub fn func_1338() {
        ext_0();
        let v_1339 = func_1308();
        if 6 > 10 {
            let v_1340 = ext_2();
        } else {
            if 19 > 10 {
                func_906();
                let w_1341 = 0;
                let w_1342 = 0;
                let v_1343 = 9 + 76;
            } else {
                let w_1344 = 3;
                let v_1345 = ext_3();
                let w_1346 = 0;
            }
            if 9 > 10 {
                let _ = 399;
            } else {
                #[cfg(not(feature = "feat20"))]
                let v_1347 = func_442();
                let w_1348 = 1;
                let v_1349 = func_609();
                let w_1350 = 5;
            }
            println!("msg_1351 {}", 1);
        }
    }
    func_847();
    if 1 > 10 {
        #[cfg(feature = "feat12")]
        let v_1352 = 155;
        let v_1353 = 303;
        if 9 > 10 {
            let v_1354 = 911;
            let v_1355 = ext_2();
            let v_1356 = func_13();
            if 2 > 10 {
                let w_1357 = 6;
                let w_1358 = 0;
                func_923();
                let w_1359 = 8;
            } else {
                let v_1360 = func_216();
                println!("msg_1361 {}", 1);
                let v_1362 = 51 + 4;
            }
        } else {
            match 1 {
                0 => {
                    let w_1363 = 7;
                    #[cfg(not(feature = "feat3"))]
                    let v_1364 = ext_2();
                    let w_1365 = 2;
                    let v_1366 = 28 + 84;
                }
                _ => {}
            }
            func_387();
            pub fn func_1367() {
                let v_1368 = func_862();
                let v_1369 = func_389();
                let w_1370 = 6;
            }
        }
    } else {
        println!("msg_1371 {}", 1);
        func_359();
        let v_1372 = 14;
    }
}
