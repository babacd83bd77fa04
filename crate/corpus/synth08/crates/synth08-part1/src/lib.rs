pub mod module0;
pub mod module1;
pub mod module2;
pub mod module3;
pub mod module4;
pub mod module5;
pub fn func_1027() {
    if 15 > 10 {
        if 15 > 10 {
            match 3 {
                0 => {
                    #[cfg(any(feature = "m1_1", feature = "m1_8", feature = "m1_8"))]
                    let v_1028 = ext_1();
                    let v_1029 = 970;
                }
                _ => {}
            }
        } else {
            let v_1030 = 55 + 65;
            #[cfg(any(feature = "m1_1", feature = "m1_8"))]
            let v_1031 = ext_2();
            if 15 > 10 {
                let w_1032 = 7;
                func_143();
                let v_1033 = func_898();
            } else {
                func_806();
                let v_1034 = func_248();
                let v_1035 = ext_2();
            }
            match 3 {
                0 => {
                    #[cfg(feature = "m1_2")]
                    let v_1036 = 51 + 3;
                }
                _ => {}
            }
        }
    } else {
        match 2 {
            0 => {
                pub fn func_1037() {
                    let w_1038 = 6;
                    let w_1039 = 7;
                }
                let _ = 95 + 5;
            }
            _ => {}
        }
    }
}
pub struct Record_1040 {
    pub field_1041: u32,
    pub field_1042: u32,
    pub field_1043: u32,
    pub field_1044: u32,
}
pub enum Kind_1045 {
    Variant_1046,
    Variant_1047,
    Variant_1048,
}
pub fn func_1049() {
    let v_1050 = func_268();
}
pub fn func_1051() {
    match 1 {
        0 => {
            println!("msg_1052 {}", 1);
            println!("msg_1053 {}", 1);
        }
        _ => {}
    }
}
pub fn func_524() {
    pub fn func_1054() {
        match 0 {
            0 => {
                func_528();
                if 17 > 10 {
                    let w_1055 = 8;
                    func_571();
                } else {
                    ext_1();
                    let _ = 448;
                    println!("msg_1056 {}", 1);
                }
                let v_1057 = ext_3();
            }
            _ => {}
        }
        let v_1058 = 671;
    }
}
#[cfg(feature = "m1_2")]
pub static COUNTER_1059: u32 = 0;
use std::collections::HashMap;
pub const LIMIT_1060: u32 = ext_1();
#[cfg(all(feature = "m1_1", not(feature = "m1_3")))]
use std::collections::HashMap;
#[cfg(feature = "m1_8")]
pub fn func_1061() {
    let v_1062 = ext_1();
    let v_1063 = 448;
    pub fn func_1064() {
        let v_1065 = func_862();
        if 0 > 10 {
            pub fn func_1066() {
                ext_0();
            }
            let v_1067 = func_301();
            let v_1068 = ext_3();
            let v_1069 = func_957();
        } else {
            let _ = 170;
            let _ = 581;
            ext_3();
            let v_1070 = func_552();
        }
    }
    pub fn func_979() {
        println!("msg_1071 {}", 1);
        let v_1072 = func_278();
    }
}
#[cfg(feature = "m1_7")]
pub fn func_1073() {
    if 13 > 10 {
        match 0 {
            0 => {
                println!("msg_1074 {}", 1);
                ext_2();
                match 2 {
                    0 => {
                        println!("msg_1075 {}", 1);
                        #[cfg(any(feature = "m1_8", feature = "m1_8", feature = "m1_8"))]
                        func_528();
                        let w_1076 = 4;
                    }
                    _ => {}
                }
                println!("msg_1077 {}", 1);
            }
            _ => {}
        }
    } else {
        let v_1078 = func_248();
        match 1 {
            0 => {
                match 0 {
                    0 => {
                        println!("msg_1079 {}", 1);
                        let v_1080 = func_518();
                        ext_0();
                        #[cfg(any(feature = "m1_8", feature = "m1_8", feature = "m1_8"))]
                        let v_1081 = func_674();
                    }
                    _ => {}
                }
                match 1 {
                    0 => {
                        let v_1082 = 32 + 52;
                        ext_3();
                    }
                    _ => {}
                }
                #[cfg(not(feature = "m1_5"))]
                let v_1083 = ext_0();
                match 0 {
                    0 => {
                        let w_1084 = 2;
                        let v_1085 = func_546();
                        let w_1086 = 6;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub enum Kind_1087 {
    Variant_1088,
    Variant_1089,
    Variant_1090,
    Variant_1091,
}
pub fn func_1092() {
    #[cfg(feature = "m1_6")]
    let v_1093 = ext_1();
}
pub enum Kind_1094 {
    Variant_1095,
    Variant_1096,
}
pub struct Record_1097 {
    #[cfg(any(feature = "m1_1", feature = "m1_1", feature = "m1_6"))]
    pub field_1098: u32,
    pub field_1099: u32,
    pub field_1100: u32,
    pub field_1101: u32,
}
pub fn func_1102() {
    if 9 > 10 {
        let v_1103 = func_8();
        let v_1104 = 608;
        match 0 {
            0 => {
                match 2 {
                    0 => {
                        let _ = 1 + 66;
                        println!("msg_1105 {}", 1);
                        let v_1106 = ext_2();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        #[cfg(feature = "m1_7")]
        let _ = 570;
    } else {
        match 0 {
            0 => {
                func_613();
                let v_1107 = ext_2();
            }
            _ => {}
        }
    }
}
pub fn func_1108() {
    ext_3();
    let v_1109 = 40 + 79;
    match 3 {
        0 => {
            ext_1();
        }
        _ => {}
    }
    let v_1110 = ext_0();
}
pub struct Handle_1111;
impl Handle_1111 {
    pub fn func_1112() {
        #[cfg(feature = "m1_7")]
        let v_1113 = 114;
        println!("msg_1114 {}", 1);
        func_936();
        #[cfg(feature = "m1_2")]
        let v_1115 = func_578();
    }
}
pub struct Handle_1116;
impl Handle_1116 {
    pub fn func_1117() {
        #[cfg(feature = "m1_7")]
        let v_1118 = func_705();
        let v_1119 = func_451();
    }
}
pub enum Kind_1120 {
    Variant_1121,
    Variant_1122,
    #[cfg(feature = "m1_2")]
    Variant_1123,
}
pub static COUNTER_1124: u32 = 0;
pub static COUNTER_1125: u32 = 0;
pub fn func_1126() {
    ext_0();
}
pub fn func_1066() {
    println!("msg_1127 {}", 1);
    pub fn func_1128() {
        ext_1();
        let v_1129 = 882;
        match 4 {
            0 => {
                let v_1130 = 70 + 35;
                pub fn func_1131() {
                    let _ = 33;
                }
                println!("msg_1132 {}", 1);
                match 0 {
                    0 => {
                        ext_2();
                        let w_1133 = 6;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        pub fn func_1134() {
            #[cfg(feature = "m1_2")]
            pub fn func_1135() {
                let v_1136 = ext_1();
                func_520();
            }
            #[cfg(all(feature = "m1_1", not(feature = "m1_5")))]
            let v_1137 = func_822();
            let v_1138 = func_376();
            #[cfg(not(feature = "m1_10"))]
            pub fn func_1139() {
                let v_1140 = func_862();
            }
        }
    }
    println!("msg_1141 {}", 1);
    if 9 > 10 {
        #[cfg(any(feature = "m1_1", feature = "m1_4"))]
        let v_1142 = 58 + 8;
        println!("msg_1143 {}", 1);
    } else {
        let v_1144 = ext_2();
        pub fn func_1145() {
            if 12 > 10 {
                func_518();
                let w_1146 = 7;
            } else {
                let w_1147 = 3;
                let w_1148 = 4;
            }
        }
        pub fn func_1149() {
            println!("msg_1150 {}", 1);
            #[cfg(feature = "m1_7")]
            let v_1151 = 89 + 13;
        }
    }
}
#[cfg(not(feature = "m1_0"))]
use std::collections::HashMap;
pub fn func_1152() {
    #[cfg(any(feature = "m1_8", feature = "m1_2"))]
    let _ = 417;
    let v_1153 = 95 + 9;
    #[cfg(not(feature = "m1_10"))]
    pub fn func_1154() {
        let v_1155 = 67 + 40;
        pub fn func_1156() {
            let v_1157 = func_1064();
            let v_1158 = func_119();
            let v_1159 = func_373();
            #[cfg(not(feature = "m1_0"))]
            let v_1160 = 71 + 10;
        }
    }
}
#[cfg(any(feature = "m1_4", feature = "m1_4", feature = "m1_8"))]
pub fn func_1161() {
    pub fn func_1162() {
        let v_1163 = 300;
        println!("msg_1164 {}", 1);
        let v_1165 = 143;
        ext_0();
    }
    let v_1166 = 358;
}
use std::collections::HashMap;
pub mod inner_1167 {
    use super::*;
    pub mod inner_1168 {
        use super::*;
        pub fn func_1169() {
            func_195();
            let _ = 42 + 2;
            let _ = 32 + 34;
            pub fn func_1170() {
                println!("msg_1171 {}", 1);
            }
        }
        pub fn func_1172() {
            println!("msg_1173 {}", 1);
            match 3 {
                0 => {
                    #[cfg(all(feature = "m1_2", not(feature = "m1_9")))]
                    let v_1174 = func_118();
                    let w_1175 = 7;
                }
                _ => {}
            }
        }
    }
}
#[cfg(feature = "m1_7")]
pub static COUNTER_1176: u32 = 0;
pub fn func_1177() {
    ext_1();
    #[cfg(any(feature = "m1_1", feature = "m1_8", feature = "m1_2"))]
    func_681();
}
#[cfg(feature = "m1_1")]
pub fn func_1178() {
    let v_1179 = func_113();
    let v_1180 = 88 + 27;
}
