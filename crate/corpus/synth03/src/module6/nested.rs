#[cfg(feature = "feat6")]
pub enum Kind_1171 {
    Variant_1172,
    #[cfg(feature = "feat9")]
    Variant_1173,
    Variant_1174,
}
pub type Alias_1175 = u64;
pub static COUNTER_1176: u32 = 0;
pub fn func_1004() {
    #[cfg(feature = "feat4")]
    let v_1177 = ext_0();
}
pub fn func_1178() {
    let v_1179 = func_787();
}
#[cfg(feature = "feat5")]
pub mod inner_1180 {
    use super::*;
    pub fn func_1181() {
        println!("msg_1182 {}", 1);
    }
    pub fn func_1183() {
        #[cfg(feature = "feat7")]
        pub fn func_1184() {
            let v_1185 = 752;
            let v_1186 = func_931();
            match 0 {
                0 => {
                    let v_1187 = 644;
                    let w_1188 = 5;
                    #[cfg(feature = "feat15")]
                    let v_1189 = func_560();
                    let w_1190 = 4;
                }
                _ => {}
            }
        }
        match 3 {
            0 => {
                let v_1191 = func_107();
                let v_1192 = 167;
                match 2 {
                    0 => {
                        let v_1193 = func_931();
                        let v_1194 = ext_2();
                        let v_1195 = func_1();
                    }
                    _ => {}
                }
                match 1 {
                    0 => {
                        println!("msg_1196 {}", 1);
                        let w_1197 = 2;
                        let w_1198 = 5;
                        ext_2();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    pub const LIMIT_1199: u32 = 72 + 36;
}
pub fn func_1200() {
    let v_1201 = 698;
    if 12 > 10 {
        let v_1202 = 83;
        println!("msg_1203 {}", 1);
    } else {
        match 3 {
            0 => {
                println!("msg_1204 {}", 1);
                if 17 > 10 {
                    let v_1205 = 66 + 33;
                    let w_1206 = 0;
                    let v_1207 = func_1008();
                } else {
                    func_264();
                }
            }
            _ => {}
        }
        if 16 > 10 {
            let v_1208 = ext_1();
            let _ = 43 + 17;
        } else {
            if 16 > 10 {
                println!("msg_1209 {}", 1);
                #[cfg(feature = "feat5")]
                let v_1210 = func_1047();
                #[cfg(any(feature = "feat15", feature = "feat15", feature = "feat8"))]
                ext_2();
                ext_0();
            } else {
                #[cfg(any(feature = "feat8", feature = "feat13"))]
                let v_1211 = func_827();
                ext_1();
                func_913();
            }
            if 18 > 10 {
                println!("msg_1212 {}", 1);
                #[cfg(feature = "feat8")]
                ext_3();
            } else {
                println!("msg_1213 {}", 1);
            }
            if 14 > 10 {
                let v_1214 = 397;
                println!("msg_1215 {}", 1);
                let w_1216 = 5;
                let _ = 574;
            } else {
                let v_1217 = func_816();
                let _ = 742;
                let _ = 60;
                let w_1218 = 6;
            }
            #[cfg(feature = "feat7")]
            pub fn func_1219() {
                let v_1220 = 98 + 52;
                println!("msg_1221 {}", 1);
            }
        }
        if 3 > 10 {
            #[cfg(feature = "feat2")]
            func_328();
        } else {
            let v_1222 = 790;
            println!("msg_1223 {}", 1);
        }
        #[cfg(feature = "feat5")]
        ext_1();
    }
}
pub enum Kind_1224 {
    Variant_1225,
    Variant_1226,
}
use std::collections::HashMap;
pub fn func_1227() {
    let v_1228 = 26;
    let v_1229 = 875;
    func_593();
}
pub fn func_1230() {
    if 10 > 10 {
        println!("msg_1231 {}", 1);
    } else {
        pub fn func_1232() {
            pub fn func_1233() {
                let _ = 77 + 42;
            }
            match 0 {
                0 => {
                    println!("msg_1234 {}", 1);
                    let w_1235 = 1;
                    let v_1236 = func_273();
                    let w_1237 = 0;
                }
                _ => {}
            }
            let v_1238 = 201;
            let v_1239 = ext_1();
        }
        let v_1240 = func_982();
    }
}
pub const LIMIT_1241: u32 = 28 + 60;
pub struct Record_1242 {
    pub field_1243: u32,
    pub field_1244: u32,
    #[cfg(feature = "feat2")]
    pub field_1245: u32,
}
pub fn func_1246() {
    println!("msg_1247 {}", 1);
    pub fn func_1248() {
        let v_1249 = func_1230();
        func_826();
    }
    func_197();
    pub fn func_1250() {
        if 8 > 10 {
            println!("msg_1251 {}", 1);
            pub fn func_1252() {
                let v_1253 = 86;
                let _ = 37 + 83;
            }
            if 10 > 10 {
                let v_1254 = 201;
                #[cfg(any(feature = "feat6", feature = "feat0"))]
                let v_1255 = 19 + 73;
                let v_1256 = ext_2();
                let w_1257 = 2;
            } else {
                let w_1258 = 4;
                let w_1259 = 6;
                let w_1260 = 3;
            }
            let v_1261 = func_1091();
        } else {
            #[cfg(feature = "feat9")]
            let v_1262 = 609;
            let _ = 588;
        }
        if 3 > 10 {
            pub fn func_1263() {
                ext_3();
            }
        } else {
            if 10 > 10 {
                #[cfg(feature = "feat4")]
                let _ = 25 + 60;
                #[cfg(feature = "feat9")]
                let v_1264 = 50;
                let w_1265 = 0;
                println!("msg_1266 {}", 1);
            } else {
                let v_1267 = 51 + 91;
                let w_1268 = 2;
            }
            match 1 {
                0 => {
                    let w_1269 = 4;
                    let v_1270 = 98 + 13;
                }
                _ => {}
            }
        }
        let v_1271 = 98 + 99;
        let v_1272 = 890;
    }
}
