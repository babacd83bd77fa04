pub const LIMIT_1273: u32 = func_510();
#[cfg(any(feature = "feat2", feature = "feat10"))]
pub fn func_1274() {
    let v_1275 = 311;
    let _ = 175;
    if 15 > 10 {
        let v_1276 = 41 + 62;
        let v_1277 = func_818();
        match 1 {
            0 => {
                let v_1278 = func_715();
                match 0 {
                    0 => {
                        let w_1279 = 8;
                    }
                    _ => {}
                }
                println!("msg_1280 {}", 1);
                if 12 > 10 {
                    #[cfg(feature = "feat12")]
                    let v_1281 = 72 + 89;
                } else {
                    let w_1282 = 6;
                    let v_1283 = 32 + 57;
                    let v_1284 = 77 + 47;
                    println!("msg_1285 {}", 1);
                }
            }
            _ => {}
        }
        let v_1286 = func_732();
    } else {
        #[cfg(feature = "feat14")]
        let v_1287 = func_1114();
        let _ = 86 + 25;
    }
}
pub struct Handle_1288;
impl Handle_1288 {
    #[cfg(feature = "feat7")]
    pub fn func_1289() {
        func_686();
    }
    #[cfg(not(feature = "feat3"))]
    pub fn func_1290() {
        println!("msg_1291 {}", 1);
        pub fn func_1292() {
            #[cfg(not(feature = "feat3"))]
            let v_1293 = func_408();
            let _ = 527;
            println!("msg_1294 {}", 1);
        }
        pub fn func_752() {
            pub fn func_1295() {
                let w_1296 = 3;
                let v_1297 = func_998();
                println!("msg_1298 {}", 1);
                let v_1299 = func_315();
            }
            println!("msg_1300 {}", 1);
            if 8 > 10 {
                let _ = 25 + 39;
                println!("msg_1301 {}", 1);
                let w_1302 = 5;
            } else {
                let v_1303 = 63 + 45;
            }
        }
        let _ = 924;
    }
}
pub fn func_1304() {
    let v_1305 = 88 + 66;
    if 5 > 10 {
        let v_1306 = ext_3();
        if 18 > 10 {
            pub fn func_1307() {
                let _ = 8 + 66;
                let w_1308 = 6;
                println!("msg_1309 {}", 1);
            }
            func_876();
        } else {
            println!("msg_1310 {}", 1);
        }
    } else {
        if 12 > 10 {
            let v_1311 = func_854();
            if 13 > 10 {
                let w_1312 = 5;
                let w_1313 = 2;
                println!("msg_1314 {}", 1);
                let v_1315 = ext_0();
            } else {
                #[cfg(any(feature = "feat9", feature = "feat10"))]
                let v_1316 = 84 + 83;
                let w_1317 = 6;
                println!("msg_1318 {}", 1);
                let v_1319 = 13 + 26;
            }
        } else {
            let v_1320 = func_285();
            pub fn func_1321() {
                let v_1322 = 90 + 34;
                let v_1323 = func_193();
            }
        }
    }
    println!("msg_1324 {}", 1);
}
pub struct Handle_1325;
impl Handle_1325 {
    pub fn func_193() {
        #[cfg(feature = "feat15")]
        let v_1326 = func_121();
        println!("msg_1327 {}", 1);
        let v_1328 = func_560();
    }
}
pub enum Kind_1329 {
    #[cfg(feature = "feat0")]
    Variant_1330,
}
pub const LIMIT_1331: u32 = func_967();
pub fn func_1332() {
    let v_1333 = 21 + 22;
    pub fn func_1292() {
        func_1116();
        pub fn func_1334() {
            if 6 > 10 {
                let w_1335 = 1;
                let v_1336 = func_390();
                println!("msg_1337 {}", 1);
            } else {
                #[cfg(any(feature = "feat1", feature = "feat16", feature = "feat7"))]
                let v_1338 = ext_1();
            }
            let v_1339 = ext_1();
            println!("msg_1340 {}", 1);
        }
        func_425();
    }
}
#[cfg(feature = "feat13")]
pub fn func_1341() {
    let _ = 881;
    let v_1342 = 540;
}
pub const LIMIT_1343: u32 = 35 + 6;
pub mod inner_1344 {
    use super::*;
    pub fn func_1345() {
        let v_1346 = func_701();
        let _ = 503;
    }
    pub fn func_1347() {
        println!("msg_1348 {}", 1);
    }
}
pub fn func_1349() {
    ext_2();
    pub fn func_831() {
        pub fn func_1350() {
            let _ = 191;
        }
        let v_1351 = 97 + 54;
    }
    if 10 > 10 {
        println!("msg_1352 {}", 1);
    } else {
        if 18 > 10 {
            let v_1353 = 795;
        } else {
            let v_1354 = 445;
            let v_1355 = ext_0();
        }
    }
}
pub fn func_1356() {
    let v_1357 = ext_3();
    ext_2();
    pub fn func_1358() {
        #[cfg(not(feature = "feat3"))]
        let v_1359 = func_491();
    }
}
pub mod nested;
