pub struct Handle_1173;
impl Handle_1173 {
    pub fn func_466() {
        let v_1174 = 88 + 88;
        let v_1175 = 67 + 85;
        let v_1176 = 14 + 30;
        println!("msg_1177 {}", 1);
    }
    pub fn func_203() {
        println!("msg_1178 {}", 1);
        let v_1179 = 239;
        println!("msg_1180 {}", 1);
    }
}
pub fn func_1181() {
    func_924();
    pub fn func_1182() {
        let v_1183 = func_698();
        #[cfg(all(feature = "feat4", not(feature = "feat7")))]
        let v_1184 = 292;
    }
    let v_1185 = func_714();
}
#[cfg(feature = "feat22")]
pub fn func_466() {
    let v_1186 = 58 + 38;
    #[cfg(feature = "feat23")]
    pub fn func_1187() {
        func_193();
        println!("msg_1188 {}", 1);
    }
    if 13 > 10 {
        func_907();
        let v_1189 = ext_3();
    } else {
        let v_1190 = ext_2();
        #[cfg(feature = "feat23")]
        let v_1191 = 133;
        pub fn func_1192() {
            let v_1193 = func_788();
            let _ = 642;
            let _ = 33 + 61;
        }
        let v_1194 = func_1127();
    }
}
pub fn func_1195() {
    let v_1196 = func_307();
    #[cfg(all(feature = "feat23", not(feature = "feat16")))]
    let v_1197 = 11 + 98;
    let v_1198 = func_104();
    match 0 {
        0 => {
            pub fn func_1199() {
                if 18 > 10 {
                    let w_1200 = 3;
                    let w_1201 = 5;
                } else {
                    let w_1202 = 8;
                    let w_1203 = 8;
                    #[cfg(feature = "feat0")]
                    let v_1204 = ext_1();
                }
            }
            ext_3();
        }
        _ => {}
    }
}
#[cfg(feature = "feat10")]
pub fn func_1205() {
    if 15 > 10 {
        if 18 > 10 {
            let _ = 77 + 61;
            let v_1206 = func_652();
            pub fn func_1207() {
                let w_1208 = 2;
                let v_1209 = ext_3();
                let w_1210 = 0;
                func_106();
            }
        } else {
            println!("msg_1211 {}", 1);
            #[cfg(any(feature = "feat17", feature = "feat17", feature = "feat13"))]
            func_437();
        }
        println!("msg_1212 {}", 1);
        #[cfg(not(feature = "feat7"))]
        let v_1213 = func_1049();
        let v_1214 = func_195();
    } else {
        let v_1215 = 0 + 33;
        match 2 {
            0 => {
                ext_0();
                match 1 {
                    0 => {
                        let w_1216 = 3;
                        let v_1217 = 32 + 20;
                        let v_1218 = ext_2();
                        ext_0();
                    }
                    _ => {}
                }
                ext_1();
            }
            _ => {}
        }
    }
}
pub mod inner_1219 {
    use super::*;
    pub struct Handle_1220;
    impl Handle_1220 {
        #[cfg(any(feature = "feat13", feature = "feat9"))]
        pub fn func_1221() {
            match 4 {
                0 => {
                    let v_1222 = func_1057();
                    let w_1223 = 3;
                    let v_1224 = 366;
                }
                _ => {}
            }
            #[cfg(not(feature = "feat1"))]
            let v_1225 = 69 + 96;
            pub fn func_222() {
                let w_1226 = 2;
                let w_1227 = 1;
                let w_1228 = 8;
            }
            let v_1229 = func_882();
        }
    }
}
pub mod inner_1230 {
    use super::*;
    pub type Alias_1231 = u64;
    pub mod inner_1232 {
        use super::*;
        use std::collections::HashMap;
        pub struct Handle_1233;
        impl Handle_1233 {
            pub fn func_1234() {
                let v_1235 = func_407();
                let v_1236 = func_302();
            }
        }
    }
}
pub mod inner_1237 {
    use super::*;
    pub static COUNTER_1238: u32 = 0;
}
pub enum Kind_1239 {
    Variant_1240,
    Variant_1241,
    #[cfg(feature = "feat12")]
    Variant_1242,
}
#[cfg(feature = "feat21")]
pub fn func_1243() {
    let _ = 54;
}
pub fn func_1244() {
    #[cfg(feature = "feat9")]
    pub fn func_1245() {
        match 0 {
            0 => {
                let v_1246 = func_668();
                let v_1247 = 571;
                if 19 > 10 {
                    println!("msg_1248 {}", 1);
                } else {
                    let w_1249 = 1;
                    func_866();
                    println!("msg_1250 {}", 1);
                    let v_1251 = ext_0();
                }
                let v_1252 = ext_2();
            }
            _ => {}
        }
        #[cfg(all(feature = "feat18", not(feature = "feat5")))]
        let v_1253 = func_847();
    }
    println!("msg_1254 {}", 1);
    #[cfg(any(feature = "feat13", feature = "feat9", feature = "feat0"))]
    let v_1255 = func_196();
    pub fn func_1256() {
        let v_1257 = ext_0();
    }
}
pub static COUNTER_1258: u32 = 0;
pub enum Kind_1259 {
    Variant_1260,
    Variant_1261,
}
#[cfg(feature = "feat0")]
pub const LIMIT_1262: u32 = 17 + 90;
use std::collections::HashMap;
pub fn func_1244() {
    func_848();
    let v_1263 = func_284();
    let _ = 306;
}
#[cfg(any(feature = "feat17", feature = "feat8"))]
pub fn func_1264() {
    let v_1265 = 21 + 13;
    let v_1266 = 600;
}
pub fn func_666() {
    let _ = 862;
    match 2 {
        0 => {
            let v_1267 = func_979();
            func_468();
        }
        _ => {}
    }
    let v_1268 = func_1182();
    #[cfg(feature = "feat6")]
    func_1103();
}
pub fn func_1269() {
    let v_1270 = func_833();
}
#[cfg(feature = "feat21")]
pub const LIMIT_1271: u32 = func_1187();
pub enum Kind_1272 {
    Variant_1273,
    Variant_1274,
    Variant_1275,
}
pub fn func_1276() {
    let v_1277 = func_848();
    pub fn func_1278() {
        match 2 {
            0 => {
                let v_1279 = 299;
                func_758();
            }
            _ => {}
        }
        let v_1280 = 37 + 52;
        let v_1281 = 21 + 39;
        let v_1282 = func_396();
    }
    let v_1283 = func_482();
    if 5 > 10 {
        let v_1284 = func_1278();
        func_109();
        let v_1285 = func_538();
        #[cfg(feature = "feat18")]
        let v_1286 = func_882();
    } else {
        #[cfg(feature = "feat6")]
        let v_1287 = 12 + 13;
        let _ = 558;
        let v_1288 = ext_0();
        println!("msg_1289 {}", 1);
    }
}
pub type Alias_1290 = u64;
pub fn func_1291() {
    pub fn func_1207() {
        pub fn func_1205() {
            pub fn func_1292() {
                let v_1293 = func_425();
                #[cfg(any(feature = "feat21", feature = "feat23", feature = "feat12"))]
                let v_1294 = 641;
            }
        }
    }
    match 1 {
        0 => {
            let _ = 91;
        }
        _ => {}
    }
    let v_1295 = ext_2();
    func_109();
}
pub struct Record_1296 {
    pub field_1297: u32,
}
pub fn func_1298() {
    let v_1299 = func_330();
    #[cfg(feature = "feat6")]
    pub fn func_1300() {
        let v_1301 = ext_1();
        if 2 > 10 {
            match 0 {
                0 => {
                    func_585();
                    let v_1302 = func_882();
                }
                _ => {}
            }
            if 15 > 10 {
                let w_1303 = 5;
                func_170();
            } else {
                let v_1304 = 79 + 85;
                let v_1305 = func_922();
            }
            let v_1306 = func_1276();
            match 3 {
                0 => {
                    let _ = 81 + 7;
                    #[cfg(feature = "feat23")]
                    let v_1307 = func_1256();
                }
                _ => {}
            }
        } else {
            #[cfg(not(feature = "feat20"))]
            let v_1308 = ext_3();
            func_1023();
        }
        match 4 {
            0 => {
                let v_1309 = func_147();
                pub fn func_1310() {
                    let w_1311 = 7;
                    let w_1312 = 5;
                }
            }
            _ => {}
        }
    }
    match 4 {
        0 => {
            #[cfg(feature = "feat6")]
            let v_1313 = func_909();
            println!("msg_1314 {}", 1);
            let _ = 723;
        }
        _ => {}
    }
    let _ = 87 + 65;
}
pub struct Record_1315 {
    pub field_1316: u32,
}
pub fn func_1168() {
    match 4 {
        0 => {
            let v_1317 = 174;
            #[cfg(feature = "feat23")]
            let v_1318 = ext_2();
            let v_1319 = func_837();
        }
        _ => {}
    }
    if 7 > 10 {
        if 9 > 10 {
            let v_1320 = func_156();
            pub fn func_156() {
                let w_1321 = 8;
                func_1067();
                let w_1322 = 5;
                #[cfg(feature = "feat13")]
                let v_1323 = 71 + 55;
            }
        } else {
            #[cfg(feature = "feat8")]
            let v_1324 = func_318();
            println!("msg_1325 {}", 1);
            let v_1326 = 29;
        }
        if 16 > 10 {
            #[cfg(not(feature = "feat20"))]
            let v_1327 = func_330();
            func_968();
        } else {
            func_214();
            func_602();
            ext_3();
            let v_1328 = func_971();
        }
        let v_1329 = func_848();
    } else {
        let v_1330 = 590;
        println!("msg_1331 {}", 1);
        let v_1332 = 34 + 17;
    }
}
