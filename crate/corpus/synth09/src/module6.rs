pub type Alias_1051 = u64;
#[cfg(all(feature = "feat1", not(feature = "feat17")))]
pub fn func_1052() {
    match 3 {
        0 => {
            let v_1053 = ext_2();
            match 4 {
                0 => {
                    let v_1054 = func_414();
                    func_314();
                    let v_1055 = func_681();
                }
                _ => {}
            }
        }
        _ => {}
    }
    pub fn func_1056() {
        let v_1057 = func_939();
        let v_1058 = func_576();
    }
    ext_1();
}
pub mod inner_1059 {
    use super::*;
    #[cfg(feature = "feat20")]
    pub struct Record_1060 {
        pub field_1061: u32,
        pub field_1062: u32,
        pub field_1063: u32,
    }
    pub fn func_1064() {
        let v_1065 = ext_2();
        if 17 > 10 {
            let v_1066 = ext_3();
            let _ = 38 + 28;
        } else {
            #[cfg(feature = "feat24")]
            let v_1067 = 59;
        }
    }
}
pub enum Kind_1068 {
    Variant_1069,
}
pub type Alias_1070 = u64;
#[cfg(feature = "feat22")]
use std::collections::HashMap;
pub static COUNTER_1071: u32 = 0;
pub static COUNTER_1072: u32 = 0;
pub struct Record_1073 {
    #[cfg(not(feature = "feat15"))]
    pub field_1074: u32,
    #[cfg(not(feature = "feat10"))]
    pub field_1075: u32,
    pub field_1076: u32,
}
pub static COUNTER_1077: u32 = 0;
pub type Alias_1078 = u64;
pub fn func_1079() {
    match 2 {
        0 => {
            match 1 {
                0 => {
                    let v_1080 = ext_1();
                    match 0 {
                        0 => {
                            let w_1081 = 7;
                            let v_1082 = 42 + 66;
                            println!("msg_1083 {}", 1);
                            #[cfg(all(feature = "feat22", not(feature = "feat2")))]
                            let v_1084 = 52 + 71;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            pub fn func_1085() {
                func_926();
            }
            pub fn func_1086() {
                func_101();
                match 2 {
                    0 => {
                        let v_1087 = 318;
                        println!("msg_1088 {}", 1);
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
}
pub struct Record_1089 {
    pub field_1090: u32,
    #[cfg(feature = "feat5")]
    pub field_1091: u32,
    pub field_1092: u32,
}
#[cfg(feature = "feat16")]
pub const LIMIT_1093: u32 = func_424();
pub fn func_1094() {
    println!("msg_1095 {}", 1);
}
pub struct Record_1096 {
    pub field_1097: u32,
}
use std::collections::HashMap;
pub type Alias_1098 = u64;
#[cfg(feature = "feat13")]
pub static COUNTER_1099: u32 = 0;
pub type Alias_1100 = u64;
use std::collections::HashMap;
pub fn func_1101() {
    if 7 > 10 {
        let v_1102 = 170;
        func_411();
    } else {
        println!("msg_1103 {}", 1);
        pub fn func_1104() {
            let v_1105 = 945;
            let v_1106 = ext_0();
        }
    }
}
pub const LIMIT_1107: u32 = 342;
pub fn func_465() {
    if 3 > 10 {
        let v_1108 = ext_0();
        let v_1109 = 591;
        let v_1110 = func_453();
        ext_2();
    } else {
        match 4 {
            0 => {
                match 4 {
                    0 => {
                        let w_1111 = 2;
                        let w_1112 = 5;
                        let v_1113 = 448;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    #[cfg(all(feature = "feat19", not(feature = "feat12")))]
    pub fn func_1114() {
        match 2 {
            0 => {
                #[cfg(not(feature = "feat25"))]
                ext_3();
                println!("msg_1115 {}", 1);
                let v_1116 = func_114();
                match 3 {
                    0 => {
                        let w_1117 = 0;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_1118 = 76;
    }
    println!("msg_1119 {}", 1);
}
#[cfg(not(feature = "feat0"))]
pub fn func_961() {
    let v_1120 = func_193();
    let v_1121 = 94 + 26;
    let v_1122 = 409;
    println!("msg_1123 {}", 1);
}
pub fn func_1124() {
    let v_1125 = ext_3();
    #[cfg(feature = "feat16")]
    pub fn func_1126() {
        let v_1127 = ext_2();
    }
}
pub fn func_1128() {
    match 3 {
        0 => {
            let v_1129 = ext_2();
        }
        _ => {}
    }
    #[cfg(not(feature = "feat7"))]
    pub fn func_1130() {
        let v_1131 = func_606();
    }
}
pub fn func_807() {
    #[cfg(not(feature = "feat10"))]
    let _ = 50 + 74;
    #[cfg(any(feature = "feat29", feature = "feat28"))]
    let v_1132 = ext_0();
    let v_1133 = func_461();
}
pub fn func_1134() {
    match 4 {
        0 => {
            let v_1135 = func_982();
            func_527();
            if 10 > 10 {
                let v_1136 = func_900();
                let _ = 936;
                let v_1137 = func_571();
            } else {
                if 17 > 10 {
                    let _ = 674;
                    let _ = 24 + 95;
                    let w_1138 = 2;
                } else {
                    let w_1139 = 5;
                    #[cfg(not(feature = "feat21"))]
                    let v_1140 = 753;
                    println!("msg_1141 {}", 1);
                }
            }
        }
        _ => {}
    }
    let v_1142 = 851;
    let v_1143 = 941;
}
pub fn func_1144() {
    #[cfg(any(feature = "feat29", feature = "feat3", feature = "feat16"))]
    let v_1145 = 808;
}
pub type Alias_1146 = u64;
pub fn func_1147() {
    let _ = 35 + 93;
    pub fn func_1148() {
        ext_0();
        match 2 {
            0 => {
                let v_1149 = func_735();
            }
            _ => {}
        }
    }
    let _ = 60;
    pub fn func_1150() {
        let v_1151 = 35 + 47;
        #[cfg(all(feature = "feat5", not(feature = "feat21")))]
        let v_1152 = ext_0();
        let v_1153 = 25 + 64;
        if 10 > 10 {
            let v_1154 = func_274();
            let v_1155 = 23 + 83;
        } else {
            ext_2();
        }
    }
}
#[cfg(not(feature = "feat7"))]
pub struct Record_1156 {
    pub field_1157: u32,
    pub field_1158: u32,
    pub field_1159: u32,
    pub field_1160: u32,
}
pub static COUNTER_1161: u32 = 0;
pub fn func_1162() {
    match 2 {
        0 => {
            let v_1163 = func_1079();
        }
        _ => {}
    }
    let v_1164 = func_706();
}
pub struct Record_1165 {
    pub field_1166: u32,
    pub field_1167: u32,
    #[cfg(not(feature = "feat2"))]
    pub field_1168: u32,
}
pub fn func_1169() {
    let _ = 101;
    match 1 {
        0 => {
            func_1147();
            #[cfg(all(feature = "feat11", not(feature = "feat7")))]
            let v_1170 = 76 + 39;
            #[cfg(any(feature = "feat3", feature = "feat27", feature = "feat8"))]
            let v_1171 = func_201();
            if 5 > 10 {
                if 17 > 10 {
                    let w_1172 = 5;
                } else {
                    println!("msg_1173 {}", 1);
                    func_160();
                }
                ext_2();
                match 4 {
                    0 => {
                        let v_1174 = func_859();
                    }
                    _ => {}
                }
            } else {
                if 9 > 10 {
                    let v_1175 = 151;
                } else {
                    let v_1176 = func_896();
                    let v_1177 = ext_0();
                    let _ = 78 + 27;
                }
            }
        }
        _ => {}
    }
    if 13 > 10 {
        #[cfg(feature = "feat8")]
        let v_1178 = func_156();
    } else {
        func_365();
        let v_1179 = func_285();
    }
    let v_1180 = 340;
}
pub fn func_618() {
    #[cfg(any(feature = "feat27", feature = "feat6"))]
    let v_1181 = func_229();
    let v_1182 = 50 + 56;
}
pub const LIMIT_1183: u32 = 419;
pub fn func_1184() {
    println!("msg_1185 {}", 1);
    let v_1186 = 127;
}
#[cfg(feature = "feat29")]
pub fn func_1187() {
    pub fn func_1188() {
        let v_1189 = 52 + 55;
        pub fn func_1190() {
            func_21();
        }
        let v_1191 = ext_2();
    }
    ext_3();
    let _ = 38;
    if 17 > 10 {
        let v_1192 = 26 + 60;
        let v_1193 = ext_3();
        let _ = 3 + 72;
    } else {
        let v_1194 = 537;
        let v_1195 = 439;
        let v_1196 = 70;
    }
}
#[cfg(all(feature = "feat14", not(feature = "feat25")))]
pub enum Kind_1197 {
    Variant_1198,
}
pub enum Kind_1199 {
    Variant_1200,
    Variant_1201,
}
pub fn func_1202() {
    pub fn func_566() {
        pub fn func_1203() {
            #[cfg(not(feature = "feat26"))]
            let v_1204 = ext_1();
            let v_1205 = func_403();
            let _ = 662;
            ext_1();
        }
        #[cfg(feature = "feat22")]
        ext_1();
        let v_1206 = func_826();
        let _ = 19 + 96;
    }
    match 4 {
        0 => {
            println!("msg_1207 {}", 1);
            if 13 > 10 {
                let _ = 65 + 17;
                match 2 {
                    0 => {
                        let v_1208 = 51 + 51;
                    }
                    _ => {}
                }
                match 0 {
                    0 => {
                        let v_1209 = func_98();
                        func_908();
                        let w_1210 = 8;
                        func_987();
                    }
                    _ => {}
                }
            } else {
                println!("msg_1211 {}", 1);
                if 8 > 10 {
                    let w_1212 = 7;
                } else {
                    let v_1213 = ext_1();
                }
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat11")]
    let v_1214 = 275;
}
