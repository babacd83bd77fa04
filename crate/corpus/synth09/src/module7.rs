pub fn func_1215() {
    let v_1216 = 68 + 45;
    println!("msg_1217 {}", 1);
    pub fn func_834() {
        let v_1218 = 38 + 35;
        func_984();
    }
    let v_1219 = 930;
}
#[cfg(feature = "feat24")]
pub mod inner_1220 {
    use super::*;
    pub fn func_850() {
        #[cfg(feature = "feat27")]
        pub fn func_1221() {
            #[cfg(feature = "feat28")]
            let v_1222 = func_908();
        }
        let v_1223 = 47 + 75;
        match 0 {
            0 => {
                if 10 > 10 {
                    let v_1224 = 871;
                    println!("msg_1225 {}", 1);
                } else {
                    let v_1226 = 827;
                }
            }
            _ => {}
        }
    }
    #[cfg(feature = "feat28")]
    pub fn func_1056() {
        let _ = 66 + 58;
    }
    pub const LIMIT_1227: u32 = ext_1();
}
pub fn func_1228() {
    let v_1229 = func_836();
    if 7 > 10 {
        println!("msg_1230 {}", 1);
        let v_1231 = 6 + 68;
    } else {
        let v_1232 = ext_0();
    }
}
pub fn func_1233() {
    let v_1234 = func_625();
    let v_1235 = func_790();
}
pub fn func_1236() {
    let v_1237 = ext_3();
    let v_1238 = func_987();
    let v_1239 = func_1228();
}
pub mod inner_1240 {
    use super::*;
    #[cfg(feature = "feat29")]
    pub mod inner_1241 {
        use super::*;
        pub const LIMIT_1242: u32 = ext_3();
        pub fn func_1243() {
            let v_1244 = func_243();
        }
        pub struct Record_1245 {
            pub field_1246: u32,
            pub field_1247: u32,
            pub field_1248: u32,
        }
    }
}
use std::collections::HashMap;
pub fn func_1249() {
    println!("msg_1250 {}", 1);
    match 1 {
        0 => {
            let _ = 808;
            func_826();
        }
        _ => {}
    }
}
pub fn func_1251() {
    if 5 > 10 {
        if 5 > 10 {
            #[cfg(feature = "feat19")]
            let v_1252 = func_1104();
            let v_1253 = 586;
        } else {
            func_410();
        }
        println!("msg_1254 {}", 1);
    } else {
        if 12 > 10 {
            if 16 > 10 {
                let v_1255 = ext_3();
                func_1147();
                let w_1256 = 5;
            } else {
                let w_1257 = 8;
            }
            if 9 > 10 {
                let v_1258 = func_1038();
            } else {
                let v_1259 = func_222();
                println!("msg_1260 {}", 1);
            }
            #[cfg(feature = "feat1")]
            let _ = 965;
            #[cfg(feature = "feat6")]
            pub fn func_1261() {
                let w_1262 = 2;
            }
        } else {
            pub fn func_1263() {
                let v_1264 = ext_2();
                func_285();
                let v_1265 = ext_0();
            }
        }
        ext_3();
    }
}
pub static COUNTER_1266: u32 = 0;
pub fn func_471() {
    match 3 {
        0 => {
            let v_1267 = 234;
            let v_1268 = func_760();
            pub fn func_98() {
                let v_1269 = func_631();
                if 18 > 10 {
                    println!("msg_1270 {}", 1);
                    let v_1271 = func_312();
                    let w_1272 = 6;
                    let v_1273 = 8 + 62;
                } else {
                    func_1052();
                    func_417();
                }
            }
            println!("msg_1274 {}", 1);
        }
        _ => {}
    }
    match 3 {
        0 => {
            pub fn func_314() {
                let v_1275 = func_102();
                match 3 {
                    0 => {
                        let v_1276 = ext_2();
                    }
                    _ => {}
                }
            }
            ext_1();
            let v_1277 = func_1020();
            let v_1278 = ext_2();
        }
        _ => {}
    }
}
#[cfg(any(feature = "feat6", feature = "feat28"))]
pub const LIMIT_1279: u32 = 73 + 30;
pub const LIMIT_1280: u32 = func_1190();
#[cfg(all(feature = "feat8", not(feature = "feat10")))]
pub struct Record_1281 {
    pub field_1282: u32,
    pub field_1283: u32,
}
pub type Alias_1284 = u64;
pub const LIMIT_1285: u32 = 90 + 94;
pub fn func_1286() {
    pub fn func_1287() {
        let v_1288 = func_607();
        if 19 > 10 {
            let v_1289 = 74 + 57;
        } else {
            pub fn func_1290() {
                let w_1291 = 3;
                let w_1292 = 8;
                let v_1293 = func_353();
                let w_1294 = 7;
            }
            match 4 {
                0 => {
                    let _ = 1 + 13;
                    println!("msg_1295 {}", 1);
                }
                _ => {}
            }
            println!("msg_1296 {}", 1);
            let v_1297 = func_1094();
        }
        if 15 > 10 {
            match 4 {
                0 => {
                    let v_1298 = 22 + 4;
                    let w_1299 = 1;
                    let w_1300 = 7;
                }
                _ => {}
            }
            let v_1301 = 55 + 20;
        } else {
            match 4 {
                0 => {
                    ext_3();
                    let v_1302 = ext_2();
                    let v_1303 = func_483();
                    let _ = 96 + 25;
                }
                _ => {}
            }
            println!("msg_1304 {}", 1);
            if 3 > 10 {
                #[cfg(feature = "feat14")]
                func_427();
                let v_1305 = ext_0();
            } else {
                println!("msg_1306 {}", 1);
            }
            let v_1307 = 26;
        }
    }
    if 2 > 10 {
        let v_1308 = func_427();
        let v_1309 = 37 + 11;
        println!("msg_1310 {}", 1);
    } else {
        ext_3();
        println!("msg_1311 {}", 1);
        #[cfg(feature = "feat19")]
        let v_1312 = 676;
    }
}
use std::collections::HashMap;
pub fn func_1313() {
    let v_1314 = func_62();
    #[cfg(not(feature = "feat7"))]
    func_262();
    if 2 > 10 {
        let _ = 930;
        println!("msg_1315 {}", 1);
    } else {
        if 4 > 10 {
            match 1 {
                0 => {
                    let w_1316 = 5;
                    #[cfg(feature = "feat4")]
                    let v_1317 = func_900();
                    let w_1318 = 0;
                    let w_1319 = 8;
                }
                _ => {}
            }
        } else {
            #[cfg(feature = "feat14")]
            let _ = 212;
            match 3 {
                0 => {
                    println!("msg_1320 {}", 1);
                    let v_1321 = ext_1();
                    let w_1322 = 7;
                }
                _ => {}
            }
            if 8 > 10 {
                let v_1323 = func_1286();
                let v_1324 = func_853();
            } else {
                println!("msg_1325 {}", 1);
                let v_1326 = 866;
                ext_2();
                let v_1327 = func_654();
            }
            if 15 > 10 {
                let v_1328 = func_1184();
                println!("msg_1329 {}", 1);
            } else {
                println!("msg_1330 {}", 1);
                #[cfg(feature = "feat9")]
                let v_1331 = 202;
                let v_1332 = func_1263();
                #[cfg(feature = "feat24")]
                let v_1333 = func_98();
            }
        }
    }
}
pub fn func_1334() {
    if 12 > 10 {
        ext_0();
        match 3 {
            0 => {
                match 1 {
                    0 => {
                        let w_1335 = 3;
                        println!("msg_1336 {}", 1);
                        let w_1337 = 8;
                    }
                    _ => {}
                }
                if 19 > 10 {
                    #[cfg(any(feature = "feat4", feature = "feat3"))]
                    func_236();
                    #[cfg(not(feature = "feat2"))]
                    let v_1338 = func_571();
                    let v_1339 = func_1130();
                } else {
                    let v_1340 = func_363();
                }
            }
            _ => {}
        }
    } else {
        match 1 {
            0 => {
                match 0 {
                    0 => {
                        let w_1341 = 4;
                        let w_1342 = 8;
                        func_1261();
                    }
                    _ => {}
                }
                match 2 {
                    0 => {
                        func_62();
                    }
                    _ => {}
                }
                ext_0();
            }
            _ => {}
        }
        let v_1343 = 628;
        let v_1344 = 23 + 45;
        ext_1();
    }
    if 10 > 10 {
        let _ = 13 + 91;
    } else {
        let v_1345 = func_453();
        println!("msg_1346 {}", 1);
        let v_1347 = ext_2();
        pub fn func_1348() {
            let v_1349 = 874;
            if 9 > 10 {
                let w_1350 = 4;
                let v_1351 = func_598();
                println!("msg_1352 {}", 1);
            } else {
                let v_1353 = 2 + 69;
                let w_1354 = 6;
                let v_1355 = func_1202();
                println!("msg_1356 {}", 1);
            }
            #[cfg(all(feature = "feat22", not(feature = "feat12")))]
            let v_1357 = 75 + 34;
        }
    }
    #[cfg(feature = "feat8")]
    let v_1358 = 60 + 64;
}
pub struct Handle_1359;
impl Handle_1359 {
    #[cfg(feature = "feat13")]
    pub fn func_1360() {
        pub fn func_1361() {
            let v_1362 = 93 + 87;
        }
        let v_1363 = 879;
    }
    pub fn func_1364() {
        #[cfg(feature = "feat27")]
        let v_1365 = 316;
        let _ = 703;
        let v_1366 = ext_2();
        #[cfg(any(feature = "feat29", feature = "feat19"))]
        pub fn func_523() {
            pub fn func_1367() {
                let v_1368 = 761;
                let w_1369 = 5;
                let v_1370 = func_699();
                let w_1371 = 7;
            }
            if 17 > 10 {
                let w_1372 = 8;
                let _ = 89 + 11;
                let w_1373 = 1;
                let v_1374 = 875;
            } else {
                let v_1375 = func_450();
                let v_1376 = func_675();
            }
            ext_1();
            println!("msg_1377 {}", 1);
        }
    }
}
