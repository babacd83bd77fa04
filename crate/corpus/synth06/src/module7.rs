pub const LIMIT_1180: u32 = 80 + 43;
pub fn func_1181() {
    let v_1182 = 29 + 45;
    #[cfg(feature = "feat2")]
    pub fn func_182() {
        let _ = 378;
        let v_1183 = ext_3();
    }
    pub fn func_1184() {
        let v_1185 = ext_3();
        let _ = 211;
        let v_1186 = 108;
    }
    println!("msg_1187 {}", 1);
}
pub struct Record_1188 {
    #[cfg(feature = "feat14")]
    pub field_1189: u32,
}
pub type Alias_1190 = u64;
pub fn func_1191() {
    let v_1192 = 62 + 67;
}
pub struct Record_1193 {
    pub field_1194: u32,
}
pub fn func_1195() {
    #[cfg(feature = "feat14")]
    pub fn func_1196() {
        let _ = 614;
    }
    if 17 > 10 {
        #[cfg(any(feature = "feat2", feature = "feat21", feature = "feat15"))]
        let _ = 21 + 49;
    } else {
        func_138();
    }
    println!("msg_1197 {}", 1);
}
pub type Alias_1198 = u64;
pub type Alias_1199 = u64;
pub fn func_1200() {
    let v_1201 = func_143();
    #[cfg(feature = "feat4")]
    pub fn func_1202() {
        #[cfg(feature = "feat16")]
        let v_1203 = 271;
        let v_1204 = 921;
        let v_1205 = ext_0();
        pub fn func_1206() {
            let v_1207 = ext_1();
        }
    }
    let v_1208 = 53 + 29;
}
pub fn func_684() {
    let v_1209 = ext_0();
    if 3 > 10 {
        let v_1210 = ext_0();
        let v_1211 = func_1041();
        let v_1212 = 835;
    } else {
        #[cfg(feature = "feat19")]
        let v_1213 = 275;
    }
    let v_1214 = 67 + 84;
}
pub type Alias_1215 = u64;
pub type Alias_1216 = u64;
pub fn func_1217() {
    #[cfg(not(feature = "feat13"))]
    let v_1218 = 119;
}
pub fn func_866() {
    match 2 {
        0 => {
            let v_1219 = func_946();
            pub fn func_1220() {
                let v_1221 = func_1107();
                let v_1222 = 740;
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat2")]
    let v_1223 = func_607();
}
use std::collections::HashMap;
pub static COUNTER_1224: u32 = 0;
#[cfg(any(feature = "feat21", feature = "feat11", feature = "feat21"))]
pub fn func_1225() {
    println!("msg_1226 {}", 1);
    println!("msg_1227 {}", 1);
    func_5();
}
pub enum Kind_1228 {
    Variant_1229,
    Variant_1230,
}
pub fn func_1231() {
    let v_1232 = ext_2();
    let v_1233 = 992;
    #[cfg(feature = "feat5")]
    let v_1234 = func_872();
}
pub fn func_875() {
    let v_1235 = 97 + 33;
    pub fn func_1153() {
        #[cfg(any(feature = "feat23", feature = "feat14"))]
        let _ = 71 + 26;
        println!("msg_1236 {}", 1);
        #[cfg(feature = "feat16")]
        let v_1237 = 881;
        match 2 {
            0 => {
                println!("msg_1238 {}", 1);
                let _ = 72;
                let v_1239 = func_481();
            }
            _ => {}
        }
    }
    #[cfg(feature = "feat14")]
    let v_1240 = 932;
    ext_0();
}
#[cfg(feature = "feat15")]
pub fn func_1241() {
    if 6 > 10 {
        #[cfg(feature = "feat21")]
        let v_1242 = ext_0();
        #[cfg(not(feature = "feat22"))]
        pub fn func_1243() {
            let v_1244 = func_13();
            func_744();
        }
        let _ = 34 + 99;
        match 1 {
            0 => {
                #[cfg(feature = "feat23")]
                let v_1245 = 70 + 99;
            }
            _ => {}
        }
    } else {
        pub fn func_1246() {
            pub fn func_1() {
                let v_1247 = 14 + 12;
                println!("msg_1248 {}", 1);
                println!("msg_1249 {}", 1);
                let v_1250 = 92 + 29;
            }
        }
        let v_1251 = 77 + 36;
        let _ = 61 + 26;
        let v_1252 = func_134();
    }
}
pub fn func_1253() {
    let v_1254 = ext_1();
    pub fn func_1255() {
        pub fn func_1256() {
            println!("msg_1257 {}", 1);
            if 16 > 10 {
                let w_1258 = 7;
                let w_1259 = 6;
            } else {
                let v_1260 = func_319();
                let _ = 43 + 2;
                let w_1261 = 4;
            }
        }
        let v_1262 = ext_1();
        #[cfg(not(feature = "feat10"))]
        let v_1263 = 641;
        #[cfg(feature = "feat0")]
        let v_1264 = func_238();
    }
    pub fn func_306() {
        let v_1265 = ext_0();
        pub fn func_1266() {
            if 6 > 10 {
                let v_1267 = func_771();
                let v_1268 = func_667();
            } else {
                let w_1269 = 1;
                let _ = 82 + 15;
                let w_1270 = 1;
                let w_1271 = 0;
            }
            println!("msg_1272 {}", 1);
            let _ = 77 + 34;
        }
        println!("msg_1273 {}", 1);
    }
}
pub mod nested;
