#[cfg(feature = "m2_4")]
pub mod module0;
#[cfg(feature = "m2_6")]
pub mod module1;
pub mod module2;
pub mod module3;
#[cfg(any(feature = "m2_4", feature = "m2_0"))]
pub mod module4;
#[cfg(not(feature = "m2_10"))]
pub mod module5;
pub mod inner_1043 {
    use super::*;
    pub fn func_1044() {
        println!("msg_1045 {}", 1);
        let v_1046 = 688;
        let v_1047 = ext_0();
        if 17 > 10 {
            println!("msg_1048 {}", 1);
            #[cfg(not(feature = "m2_8"))]
            pub fn func_1049() {
                println!("msg_1050 {}", 1);
                println!("msg_1051 {}", 1);
                let v_1052 = 469;
            }
            if 14 > 10 {
                let v_1053 = func_856();
                let v_1054 = func_6();
            } else {
                #[cfg(feature = "m2_3")]
                let v_1055 = 40 + 42;
                let v_1056 = 542;
                let w_1057 = 5;
                let w_1058 = 5;
            }
            #[cfg(feature = "m2_6")]
            let v_1059 = func_881();
        } else {
            #[cfg(feature = "m2_7")]
            let v_1060 = ext_0();
            let v_1061 = 28 + 83;
            pub fn func_1062() {
                func_569();
                let w_1063 = 0;
            }
        }
    }
    pub fn func_1064() {
        #[cfg(any(feature = "m2_9", feature = "m2_3", feature = "m2_4"))]
        let v_1065 = ext_2();
    }
    pub fn func_785() {
        println!("msg_1066 {}", 1);
        ext_2();
        let v_1067 = func_521();
    }
}
pub type Alias_1068 = u64;
pub fn func_1069() {
    match 1 {
        0 => {
            match 1 {
                0 => {
                    match 2 {
                        0 => {
                            func_961();
                            let v_1070 = func_284();
                            let v_1071 = ext_1();
                        }
                        _ => {}
                    }
                    func_707();
                    match 3 {
                        0 => {
                            #[cfg(not(feature = "m2_2"))]
                            let v_1072 = ext_1();
                            let w_1073 = 1;
                            ext_2();
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            func_923();
            let v_1074 = ext_1();
            let _ = 65 + 30;
        }
        _ => {}
    }
}
#[cfg(feature = "m2_6")]
pub enum Kind_1075 {
    #[cfg(all(feature = "m2_9", not(feature = "m2_2")))]
    Variant_1076,
}
pub struct Record_1077 {
    pub field_1078: u32,
    pub field_1079: u32,
}
use std::collections::HashMap;
pub struct Handle_1080;
impl Handle_1080 {
    #[cfg(feature = "m2_5")]
    pub fn func_1081() {
        let v_1082 = func_10();
        #[cfg(feature = "m2_6")]
        let v_1083 = 206;
        if 3 > 10 {
            if 17 > 10 {
                #[cfg(feature = "m2_7")]
                func_107();
                let _ = 43 + 82;
            } else {
                println!("msg_1084 {}", 1);
            }
            func_824();
            let _ = 682;
        } else {
            let v_1085 = 0 + 18;
            match 2 {
                0 => {
                    let v_1086 = 60 + 83;
                }
                _ => {}
            }
            pub fn func_1087() {
                func_178();
                let _ = 577;
            }
            match 3 {
                0 => {
                    let w_1088 = 1;
                }
                _ => {}
            }
        }
        let v_1089 = 274;
    }
    pub fn func_1090() {
        println!("msg_1091 {}", 1);
    }
}
use std::collections::HashMap;
pub fn func_1092() {
    pub fn func_1093() {
        let v_1094 = ext_1();
        pub fn func_1095() {
            let v_1096 = 380;
        }
        let _ = 578;
    }
    if 4 > 10 {
        let v_1097 = 987;
        let v_1098 = func_805();
        func_397();
        if 3 > 10 {
            pub fn func_1099() {
                let w_1100 = 6;
            }
            pub fn func_1101() {
                ext_1();
                let v_1102 = func_354();
                let v_1103 = func_12();
            }
            println!("msg_1104 {}", 1);
            let _ = 788;
        } else {
            match 4 {
                0 => {
                    println!("msg_1105 {}", 1);
                }
                _ => {}
            }
            match 3 {
                0 => {
                    let v_1106 = 96 + 65;
                    let v_1107 = ext_1();
                    let v_1108 = func_774();
                }
                _ => {}
            }
        }
    } else {
        func_818();
        match 0 {
            0 => {
                func_974();
                func_774();
                println!("msg_1109 {}", 1);
            }
            _ => {}
        }
        if 17 > 10 {
            func_971();
            #[cfg(any(feature = "m2_5", feature = "m2_6", feature = "m2_5"))]
            let v_1110 = 78 + 28;
            let v_1111 = func_614();
        } else {
            let v_1112 = 77 + 4;
            pub fn func_1113() {
                #[cfg(feature = "m2_4")]
                func_989();
            }
            #[cfg(any(feature = "m2_9", feature = "m2_0", feature = "m2_7"))]
            func_953();
            if 18 > 10 {
                let w_1114 = 3;
                let v_1115 = 256;
            } else {
                #[cfg(any(feature = "m2_3", feature = "m2_3", feature = "m2_9"))]
                func_503();
                let _ = 14 + 38;
            }
        }
    }
}
pub fn func_1116() {
    #[cfg(all(feature = "m2_4", not(feature = "m2_2")))]
    let v_1117 = 726;
    match 1 {
        0 => {
            if 17 > 10 {
                match 3 {
                    0 => {
                        #[cfg(feature = "m2_3")]
                        let v_1118 = ext_3();
                    }
                    _ => {}
                }
                let v_1119 = func_710();
                let v_1120 = func_903();
                let v_1121 = func_764();
            } else {
                if 2 > 10 {
                    let w_1122 = 6;
                    let w_1123 = 2;
                    println!("msg_1124 {}", 1);
                    let w_1125 = 8;
                } else {
                    let v_1126 = func_664();
                    println!("msg_1127 {}", 1);
                }
                match 4 {
                    0 => {
                        let w_1128 = 4;
                    }
                    _ => {}
                }
                println!("msg_1129 {}", 1);
                #[cfg(feature = "m2_9")]
                let v_1130 = 65 + 45;
            }
            pub fn func_1131() {
                let v_1132 = func_87();
                match 2 {
                    0 => {
                        let w_1133 = 4;
                        let v_1134 = 142;
                    }
                    _ => {}
                }
            }
            if 18 > 10 {
                let v_1135 = func_1093();
                let v_1136 = func_456();
            } else {
                let _ = 811;
                #[cfg(feature = "m2_6")]
                let v_1137 = ext_2();
            }
        }
        _ => {}
    }
    let v_1138 = func_109();
    #[cfg(not(feature = "m2_2"))]
    let v_1139 = func_978();
}
pub fn func_1140() {
    let v_1141 = ext_2();
    let v_1142 = 87 + 91;
    match 1 {
        0 => {
            println!("msg_1143 {}", 1);
            println!("msg_1144 {}", 1);
            let v_1145 = func_249();
            let v_1146 = func_547();
        }
        _ => {}
    }
}
pub fn func_1147() {
    pub fn func_1148() {
        if 12 > 10 {
            match 1 {
                0 => {
                    let _ = 80;
                }
                _ => {}
            }
            #[cfg(feature = "m2_1")]
            let v_1149 = 20 + 78;
        } else {
            if 0 > 10 {
                let w_1150 = 2;
                let w_1151 = 3;
                let _ = 588;
            } else {
                ext_0();
                #[cfg(feature = "m2_7")]
                let v_1152 = 11 + 79;
                let w_1153 = 5;
            }
            match 4 {
                0 => {
                    let v_1154 = func_575();
                }
                _ => {}
            }
            let v_1155 = ext_2();
            println!("msg_1156 {}", 1);
        }
        match 0 {
            0 => {
                let v_1157 = 64;
                match 2 {
                    0 => {
                        let w_1158 = 2;
                        println!("msg_1159 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub fn func_1160() {
    match 0 {
        0 => {
            if 2 > 10 {
                match 3 {
                    0 => {
                        let v_1161 = func_1090();
                        let v_1162 = func_1049();
                    }
                    _ => {}
                }
                let v_1163 = func_151();
                pub fn func_1164() {
                    println!("msg_1165 {}", 1);
                    func_1093();
                }
                let v_1166 = 975;
            } else {
                #[cfg(feature = "m2_7")]
                pub fn func_1167() {
                    let v_1168 = 994;
                    let w_1169 = 8;
                    let w_1170 = 4;
                }
            }
        }
        _ => {}
    }
    let v_1171 = func_1148();
    let v_1172 = func_861();
}
pub fn func_1173() {
    #[cfg(any(feature = "m2_4", feature = "m2_6", feature = "m2_5"))]
    pub fn func_1174() {
        if 17 > 10 {
            match 0 {
                0 => {
                    let v_1175 = 88 + 91;
                    let v_1176 = ext_1();
                    let w_1177 = 0;
                    let w_1178 = 7;
                }
                _ => {}
            }
            let v_1179 = 90 + 66;
        } else {
            let v_1180 = func_218();
            ext_3();
            pub fn func_1181() {
                let v_1182 = func_253();
                #[cfg(feature = "m2_9")]
                let v_1183 = 19 + 55;
                let w_1184 = 2;
            }
        }
        match 3 {
            0 => {
                let v_1185 = 29 + 3;
                let _ = 748;
                let _ = 667;
            }
            _ => {}
        }
        let v_1186 = 65 + 70;
        println!("msg_1187 {}", 1);
    }
    if 6 > 10 {
        ext_0();
        let v_1188 = func_782();
        match 0 {
            0 => {
                #[cfg(feature = "m2_5")]
                func_422();
            }
            _ => {}
        }
        match 0 {
            0 => {
                let _ = 307;
                println!("msg_1189 {}", 1);
            }
            _ => {}
        }
    } else {
        if 19 > 10 {
            let v_1190 = func_800();
            let v_1191 = 142;
            match 4 {
                0 => {
                    let w_1192 = 2;
                    let v_1193 = func_107();
                    let _ = 99 + 3;
                    let w_1194 = 8;
                }
                _ => {}
            }
        } else {
            let v_1195 = 369;
            let v_1196 = ext_0();
            match 0 {
                0 => {
                    let v_1197 = ext_1();
                    let v_1198 = 527;
                    let v_1199 = 80;
                }
                _ => {}
            }
            let v_1200 = 90 + 16;
        }
        let v_1201 = 272;
    }
}
