pub fn func_1151() {
    ext_1();
    println!("msg_1152 {}", 1);
}
pub enum Kind_1153 {
    #[cfg(feature = "feat14")]
    Variant_1154,
    Variant_1155,
}
pub type Alias_1156 = u64;
pub fn func_1157() {
    match 1 {
        0 => {
            func_752();
            println!("msg_1158 {}", 1);
            let v_1159 = func_443();
            func_574();
        }
        _ => {}
    }
}
#[cfg(feature = "feat14")]
pub fn func_1160() {
    let v_1161 = 79 + 20;
    let v_1162 = ext_0();
}
pub type Alias_1163 = u64;
pub struct Handle_1164;
impl Handle_1164 {
    pub fn func_1165() {
        if 10 > 10 {
            if 8 > 10 {
                let v_1166 = ext_1();
                let w_1167 = 3;
            } else {
                let w_1168 = 6;
                let v_1169 = 373;
            }
            #[cfg(feature = "feat18")]
            let v_1170 = 69 + 0;
            ext_1();
        } else {
            pub fn func_1171() {
                let w_1172 = 6;
                let v_1173 = ext_3();
            }
            let v_1174 = func_539();
        }
        let v_1175 = ext_0();
        println!("msg_1176 {}", 1);
    }
    pub fn func_106() {
        pub fn func_1177() {
            let v_1178 = 69 + 49;
            ext_1();
            let v_1179 = 50 + 27;
        }
        if 7 > 10 {
            let v_1180 = 606;
        } else {
            func_1139();
            let v_1181 = func_974();
            let v_1182 = func_92();
        }
        let v_1183 = func_542();
        let _ = 853;
    }
}
pub struct Handle_1184;
impl Handle_1184 {
    #[cfg(not(feature = "feat12"))]
    pub fn func_1185() {
        ext_0();
        func_171();
        println!("msg_1186 {}", 1);
        let _ = 258;
    }
    pub fn func_1187() {
        func_601();
        let v_1188 = func_360();
        match 3 {
            0 => {
                let v_1189 = 66 + 93;
            }
            _ => {}
        }
    }
}
pub static COUNTER_1190: u32 = 0;
pub fn func_830() {
    let v_1191 = ext_1();
}
pub type Alias_1192 = u64;
pub fn func_1193() {
    println!("msg_1194 {}", 1);
}
use std::collections::HashMap;
pub const LIMIT_1195: u32 = 746;
pub struct Record_1196 {
    pub field_1197: u32,
    pub field_1198: u32,
}
pub fn func_1011() {
    let v_1199 = 536;
    pub fn func_1200() {
        #[cfg(feature = "feat3")]
        let v_1201 = 4 + 6;
    }
    match 2 {
        0 => {
            println!("msg_1202 {}", 1);
            #[cfg(feature = "feat10")]
            let v_1203 = func_884();
            let _ = 70;
        }
        _ => {}
    }
}
#[cfg(feature = "feat8")]
pub type Alias_1204 = u64;
pub struct Record_1205 {
    pub field_1206: u32,
    pub field_1207: u32,
}
pub mod inner_1208 {
    use super::*;
    #[cfg(feature = "feat18")]
    pub enum Kind_1209 {
        Variant_1210,
        Variant_1211,
        Variant_1212,
        Variant_1213,
    }
    pub const LIMIT_1214: u32 = func_429();
}
use std::collections::HashMap;
pub fn func_1215() {
    let v_1216 = 99 + 34;
}
pub struct Record_1217 {
    pub field_1218: u32,
    pub field_1219: u32,
}
pub mod inner_1220 {
    use super::*;
    #[cfg(feature = "feat6")]
    pub static COUNTER_1221: u32 = 0;
    pub fn func_1222() {
        match 4 {
            0 => {
                if 6 > 10 {
                    let v_1223 = ext_0();
                    func_487();
                    let w_1224 = 5;
                    let v_1225 = func_806();
                } else {
                    let v_1226 = 620;
                    let w_1227 = 2;
                }
                if 2 > 10 {
                    let v_1228 = 688;
                    let w_1229 = 5;
                } else {
                    let _ = 29 + 50;
                }
                let v_1230 = ext_1();
            }
            _ => {}
        }
        #[cfg(feature = "feat3")]
        let v_1231 = 96 + 0;
        func_865();
        #[cfg(feature = "feat14")]
        let v_1232 = func_923();
    }
}
pub mod inner_1233 {
    use super::*;
    #[cfg(any(feature = "feat18", feature = "feat3"))]
    pub mod inner_1234 {
        use super::*;
        pub static COUNTER_1235: u32 = 0;
        pub enum Kind_1236 {
            Variant_1237,
            Variant_1238,
            Variant_1239,
            Variant_1240,
        }
    }
}
#[cfg(feature = "feat0")]
pub mod inner_1241 {
    use super::*;
    pub fn func_1242() {
        println!("msg_1243 {}", 1);
        let v_1244 = 842;
        func_380();
        #[cfg(any(feature = "feat6", feature = "feat6"))]
        let v_1245 = func_469();
    }
}
pub fn func_1246() {
    let v_1247 = 951;
    if 8 > 10 {
        let v_1248 = ext_3();
        let v_1249 = 189;
        let v_1250 = 49 + 67;
    } else {
        if 3 > 10 {
            pub fn func_1251() {
                #[cfg(any(feature = "feat13", feature = "feat9", feature = "feat10"))]
                ext_3();
            }
        } else {
            let v_1252 = ext_2();
            ext_2();
            let v_1253 = func_448();
            #[cfg(feature = "feat13")]
            let v_1254 = func_113();
        }
    }
    let v_1255 = ext_0();
    let v_1256 = ext_2();
}
pub struct Record_1257 {
    pub field_1258: u32,
    pub field_1259: u32,
    pub field_1260: u32,
    pub field_1261: u32,
}
pub struct Record_1262 {
    pub field_1263: u32,
    pub field_1264: u32,
}
pub struct Handle_1265;
impl Handle_1265 {
    pub fn func_440() {
        let v_1266 = 176;
        pub fn func_1267() {
            func_481();
            match 4 {
                0 => {
                    let v_1268 = 29 + 8;
                    let v_1269 = 980;
                    let w_1270 = 5;
                    let w_1271 = 3;
                }
                _ => {}
            }
            if 13 > 10 {
                println!("msg_1272 {}", 1);
                let v_1273 = ext_2();
            } else {
                println!("msg_1274 {}", 1);
                let v_1275 = 48 + 33;
                let v_1276 = func_688();
            }
            let _ = 80;
        }
        println!("msg_1277 {}", 1);
        if 12 > 10 {
            match 3 {
                0 => {
                    let v_1278 = func_396();
                    let v_1279 = ext_2();
                    println!("msg_1280 {}", 1);
                }
                _ => {}
            }
        } else {
            let v_1281 = 32 + 73;
            let v_1282 = 92 + 97;
            if 17 > 10 {
                let w_1283 = 6;
                #[cfg(feature = "feat13")]
                ext_2();
                let w_1284 = 4;
                #[cfg(feature = "feat13")]
                let _ = 755;
            } else {
                func_57();
                #[cfg(not(feature = "feat5"))]
                let _ = 56;
                func_727();
            }
        }
    }
}
pub fn func_1285() {
    func_556();
    let v_1286 = func_1062();
    println!("msg_1287 {}", 1);
    println!("msg_1288 {}", 1);
}
pub static COUNTER_1289: u32 = 0;
pub fn func_1290() {
    let v_1291 = func_377();
    println!("msg_1292 {}", 1);
}
pub const LIMIT_1293: u32 = 718;
pub static COUNTER_1294: u32 = 0;
pub enum Kind_1295 {
    Variant_1296,
    Variant_1297,
    Variant_1298,
    #[cfg(not(feature = "feat5"))]
    Variant_1299,
}
pub type Alias_1300 = u64;
#[cfg(feature = "feat16")]
use std::collections::HashMap;
pub fn func_1301() {
    pub fn func_1302() {
        #[cfg(feature = "feat13")]
        let v_1303 = func_688();
        pub fn func_1304() {
            match 4 {
                0 => {
                    let w_1305 = 2;
                }
                _ => {}
            }
            let v_1306 = 43 + 3;
            match 2 {
                0 => {
                    println!("msg_1307 {}", 1);
                }
                _ => {}
            }
            let v_1308 = ext_0();
        }
        #[cfg(feature = "feat14")]
        let v_1309 = 65 + 79;
    }
    println!("msg_1310 {}", 1);
    let v_1311 = func_925();
    let _ = 527;
}
pub fn func_1312() {
    #[cfg(feature = "feat3")]
    let v_1313 = func_514();
    let _ = 35 + 67;
}
#[cfg(feature = "feat13")]
pub fn func_1314() {
    #[cfg(not(feature = "feat4"))]
    let v_1315 = func_1089();
    func_752();
    pub fn func_1157() {
        println!("msg_1316 {}", 1);
        let v_1317 = ext_0();
        #[cfg(any(feature = "feat16", feature = "feat14", feature = "feat16"))]
        let v_1318 = ext_0();
        match 4 {
            0 => {
                ext_1();
                let v_1319 = func_155();
                pub fn func_1320() {
                    let w_1321 = 2;
                    let v_1322 = ext_2();
                    println!("msg_1323 {}", 1);
                    let w_1324 = 2;
                }
                pub fn func_1325() {
                    func_852();
                    let w_1326 = 1;
                    let v_1327 = ext_1();
                }
            }
            _ => {}
        }
    }
    pub fn func_1328() {
        let v_1329 = 398;
    }
}
pub fn func_1330() {
    let v_1331 = ext_0();
    let v_1332 = func_673();
    match 1 {
        0 => {
            #[cfg(any(feature = "feat8", feature = "feat6", feature = "feat8"))]
            let v_1333 = ext_0();
        }
        _ => {}
    }
    let v_1334 = ext_3();
}
