#[cfg(feature = "m0_9")]
pub mod module0;
pub mod module1;
#[cfg(feature = "m0_3")]
pub mod module2;
pub mod module3;
pub mod module4;
pub mod module5;
pub fn func_1031() {
    match 2 {
        0 => {
            let v_1032 = func_232();
            let _ = 19 + 28;
            pub fn func_1033() {
                pub fn func_1034() {
                    let _ = 30 + 25;
                    let v_1035 = func_727();
                    let v_1036 = 52 + 39;
                }
                #[cfg(feature = "m0_1")]
                let v_1037 = func_793();
                let _ = 576;
                pub fn func_1038() {
                    println!("msg_1039 {}", 1);
                    #[cfg(feature = "m0_9")]
                    let _ = 82 + 89;
                    let w_1040 = 2;
                    let v_1041 = func_187();
                }
            }
            match 2 {
                0 => {
                    println!("msg_1042 {}", 1);
                    if 4 > 10 {
                        println!("msg_1043 {}", 1);
                        let w_1044 = 4;
                    } else {
                        let _ = 79 + 49;
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    let v_1045 = ext_1();
    if 10 > 10 {
        let v_1046 = func_819();
        pub fn func_1047() {
            let _ = 836;
            match 2 {
                0 => {
                    let v_1048 = func_431();
                    println!("msg_1049 {}", 1);
                }
                _ => {}
            }
            func_252();
            let v_1050 = func_5();
        }
        let v_1051 = 81 + 85;
        println!("msg_1052 {}", 1);
    } else {
        let v_1053 = 53 + 65;
        ext_1();
        let _ = 67 + 87;
        func_860();
    }
    #[cfg(feature = "m0_10")]
    pub fn func_1054() {
        let v_1055 = 500;
        func_497();
        let v_1056 = 484;
        let _ = 20 + 67;
    }
}
pub static COUNTER_1057: u32 = 0;
pub type Alias_1058 = u64;
pub fn func_1059() {
    let v_1060 = func_1054();
    ext_2();
    func_246();
}
#[cfg(feature = "m0_6")]
pub type Alias_1061 = u64;
pub fn func_1062() {
    let _ = 808;
    pub fn func_1063() {
        println!("msg_1064 {}", 1);
        println!("msg_1065 {}", 1);
        println!("msg_1066 {}", 1);
    }
    let v_1067 = ext_1();
    let v_1068 = ext_0();
}
pub fn func_74() {
    match 0 {
        0 => {
            let v_1069 = func_732();
            #[cfg(not(feature = "m0_2"))]
            pub fn func_1070() {
                let v_1071 = ext_3();
                let v_1072 = func_1059();
                let v_1073 = ext_2();
                let v_1074 = func_344();
            }
        }
        _ => {}
    }
    #[cfg(feature = "m0_3")]
    pub fn func_1075() {
        let _ = 272;
    }
    match 2 {
        0 => {
            match 4 {
                0 => {
                    func_185();
                    let v_1076 = func_1014();
                    let v_1077 = 58 + 93;
                }
                _ => {}
            }
        }
        _ => {}
    }
    let _ = 465;
}
pub fn func_1078() {
    let _ = 84 + 63;
    func_819();
}
pub struct Handle_1079;
impl Handle_1079 {
    pub fn func_1080() {
        let _ = 72 + 1;
    }
    pub fn func_1081() {
        let v_1082 = ext_3();
        pub fn func_1083() {
            ext_0();
        }
    }
}
pub fn func_1084() {
    match 3 {
        0 => {
            let _ = 92 + 64;
            if 14 > 10 {
                let v_1085 = 66 + 85;
                let _ = 157;
                println!("msg_1086 {}", 1);
            } else {
                let v_1087 = ext_0();
            }
        }
        _ => {}
    }
}
pub mod inner_1088 {
    use super::*;
    #[cfg(not(feature = "m0_7"))]
    pub fn func_1089() {
        println!("msg_1090 {}", 1);
        let v_1091 = func_454();
        let v_1092 = func_130();
    }
    pub struct Record_1093 {
        pub field_1094: u32,
        pub field_1095: u32,
        #[cfg(feature = "m0_6")]
        pub field_1096: u32,
        pub field_1097: u32,
    }
    pub struct Handle_1098;
    impl Handle_1098 {
        pub fn func_1099() {
            pub fn func_1100() {
                let v_1101 = 42 + 22;
                let w_1102 = 6;
                let w_1103 = 2;
            }
            #[cfg(all(feature = "m0_6", not(feature = "m0_4")))]
            let v_1104 = 729;
        }
    }
}
pub fn func_1105() {
    let v_1106 = 804;
    if 8 > 10 {
        let _ = 42 + 76;
    } else {
        pub fn func_1107() {
            let v_1108 = 10;
        }
        match 4 {
            0 => {
                let _ = 50 + 22;
            }
            _ => {}
        }
        ext_0();
    }
    match 3 {
        0 => {
            match 0 {
                0 => {
                    match 0 {
                        0 => {
                            let w_1109 = 4;
                            let v_1110 = func_692();
                            func_212();
                            let v_1111 = func_511();
                        }
                        _ => {}
                    }
                    match 2 {
                        0 => {
                            #[cfg(any(feature = "m0_3", feature = "m0_5", feature = "m0_6"))]
                            ext_3();
                            func_170();
                            #[cfg(feature = "m0_9")]
                            let v_1112 = 720;
                        }
                        _ => {}
                    }
                    #[cfg(not(feature = "m0_8"))]
                    pub fn func_1113() {
                        let v_1114 = func_344();
                    }
                    ext_2();
                }
                _ => {}
            }
            func_1027();
            match 4 {
                0 => {
                    pub fn func_1115() {
                        let v_1116 = 468;
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
}
pub type Alias_1117 = u64;
pub fn func_1118() {
    func_1083();
}
pub fn func_1119() {
    pub fn func_1120() {
        let _ = 21 + 19;
        let v_1121 = func_971();
        let _ = 45 + 64;
        ext_0();
    }
    println!("msg_1122 {}", 1);
    pub fn func_263() {
        pub fn func_1123() {
            println!("msg_1124 {}", 1);
        }
        #[cfg(feature = "m0_3")]
        let _ = 871;
        println!("msg_1125 {}", 1);
    }
    let _ = 28 + 75;
}
pub fn func_1126() {
    if 0 > 10 {
        #[cfg(feature = "m0_6")]
        let v_1127 = func_1081();
    } else {
        match 3 {
            0 => {
                #[cfg(not(feature = "m0_7"))]
                func_23();
                match 3 {
                    0 => {
                        let _ = 58 + 91;
                        let v_1128 = func_819();
                        let w_1129 = 1;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_1130 = ext_0();
        let v_1131 = ext_0();
    }
    println!("msg_1132 {}", 1);
    let v_1133 = ext_3();
}
pub fn func_1134() {
    println!("msg_1135 {}", 1);
    println!("msg_1136 {}", 1);
    println!("msg_1137 {}", 1);
}
pub struct Record_1138 {
    pub field_1139: u32,
    pub field_1140: u32,
    pub field_1141: u32,
}
#[cfg(feature = "m0_6")]
pub const LIMIT_1142: u32 = func_740();
#[cfg(all(feature = "m0_9", not(feature = "m0_4")))]
pub static COUNTER_1143: u32 = 0;
pub fn func_1144() {
    if 18 > 10 {
        println!("msg_1145 {}", 1);
        #[cfg(any(feature = "m0_0", feature = "m0_5"))]
        let v_1146 = 87 + 75;
        func_645();
        let v_1147 = func_1115();
    } else {
        pub fn func_1148() {
            let _ = 63 + 43;
        }
        println!("msg_1149 {}", 1);
        let v_1150 = ext_1();
    }
    println!("msg_1151 {}", 1);
}
pub fn func_1152() {
    if 9 > 10 {
        ext_3();
        let v_1153 = 51;
        if 2 > 10 {
            let v_1154 = 78 + 26;
        } else {
            println!("msg_1155 {}", 1);
            if 6 > 10 {
                let v_1156 = 56 + 34;
                let v_1157 = 36 + 61;
                func_496();
            } else {
                let w_1158 = 3;
                println!("msg_1159 {}", 1);
            }
            if 14 > 10 {
                let w_1160 = 7;
            } else {
                let v_1161 = func_263();
                #[cfg(feature = "m0_9")]
                let v_1162 = ext_0();
            }
        }
    } else {
        match 0 {
            0 => {
                let _ = 42 + 45;
                println!("msg_1163 {}", 1);
                let v_1164 = func_187();
                pub fn func_1165() {
                    let w_1166 = 2;
                    let v_1167 = 76 + 95;
                    #[cfg(not(feature = "m0_4"))]
                    let v_1168 = func_784();
                }
            }
            _ => {}
        }
        match 4 {
            0 => {
                #[cfg(any(feature = "m0_3", feature = "m0_3"))]
                let _ = 4 + 40;
                let v_1169 = ext_2();
                match 0 {
                    0 => {
                        ext_3();
                    }
                    _ => {}
                }
                let v_1170 = 58 + 48;
            }
            _ => {}
        }
        func_815();
        if 17 > 10 {
            pub fn func_1171() {
                let w_1172 = 5;
                let v_1173 = 77 + 71;
            }
            let v_1174 = func_416();
            let v_1175 = func_1144();
        } else {
            let _ = 50 + 9;
            let v_1176 = func_779();
        }
    }
    let v_1177 = func_490();
}
pub fn func_1178() {
    if 6 > 10 {
        #[cfg(not(feature = "m0_8"))]
        let v_1179 = 89 + 54;
        let v_1180 = 89 + 84;
    } else {
        if 11 > 10 {
            let v_1181 = 29 + 57;
            let v_1182 = ext_2();
        } else {
            let v_1183 = func_250();
            if 4 > 10 {
                println!("msg_1184 {}", 1);
                let w_1185 = 1;
            } else {
                let v_1186 = ext_1();
            }
            func_988();
            ext_2();
        }
    }
    match 1 {
        0 => {
            match 3 {
                0 => {
                    if 1 > 10 {
                        let w_1187 = 5;
                        let w_1188 = 2;
                        func_427();
                    } else {
                        #[cfg(any(feature = "m0_0", feature = "m0_9", feature = "m0_1"))]
                        let v_1189 = func_80();
                        let v_1190 = 58 + 65;
                        let w_1191 = 1;
                    }
                    println!("msg_1192 {}", 1);
                    pub fn func_1193() {
                        func_373();
                        #[cfg(all(feature = "m0_0", not(feature = "m0_7")))]
                        ext_2();
                        let w_1194 = 8;
                        let _ = 501;
                    }
                    pub fn func_147() {
                        println!("msg_1195 {}", 1);
                        let _ = 471;
                        let v_1196 = func_703();
                        #[cfg(any(feature = "m0_5", feature = "m0_9", feature = "m0_5"))]
                        let v_1197 = 641;
                    }
                }
                _ => {}
            }
            pub fn func_1198() {
                match 0 {
                    0 => {
                        func_112();
                        let w_1199 = 0;
                        let w_1200 = 3;
                        let v_1201 = 88 + 22;
                    }
                    _ => {}
                }
            }
            let v_1202 = func_863();
        }
        _ => {}
    }
}
