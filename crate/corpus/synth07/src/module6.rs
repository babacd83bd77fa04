pub const LIMIT_1003: u32 = 42;
use std::collections::HashMap;
pub const LIMIT_1004: u32 = 66 + 46;
pub static COUNTER_1005: u32 = 0;
pub struct Handle_1006;
#[cfg(feature = "feat2")]
impl Handle_1006 {
    pub fn func_1007() {
        pub fn func_1008() {
            let v_1009 = 352;
            match 1 {
                0 => {
                    let v_1010 = func_165();
                }
                _ => {}
            }
            let v_1011 = 69 + 88;
        }
        let v_1012 = func_683();
    }
    pub fn func_1013() {
        #[cfg(not(feature = "feat16"))]
        func_593();
        match 2 {
            0 => {
                let v_1014 = func_302();
                let v_1015 = 15 + 46;
            }
            _ => {}
        }
        #[cfg(feature = "feat19")]
        let v_1016 = 583;
    }
}
pub mod inner_1017 {
    use super::*;
    pub fn func_1018() {
        func_100();
        let v_1019 = 862;
    }
}
pub const LIMIT_1020: u32 = func_518();
#[cfg(any(feature = "feat10", feature = "feat2", feature = "feat19"))]
pub const LIMIT_1021: u32 = ext_0();
pub mod inner_1022 {
    use super::*;
    pub fn func_1023() {
        let v_1024 = 37 + 82;
        match 1 {
            0 => {
                let v_1025 = func_431();
                println!("msg_1026 {}", 1);
                let v_1027 = 6 + 81;
            }
            _ => {}
        }
    }
    pub mod inner_1028 {
        use super::*;
        #[cfg(feature = "feat6")]
        pub mod inner_1029 {
            use super::*;
            pub const LIMIT_1030: u32 = 47 + 16;
        }
    }
    pub type Alias_1031 = u64;
}
pub mod inner_1032 {
    use super::*;
    pub const LIMIT_1033: u32 = 49;
    pub fn func_425() {
        let v_1034 = func_958();
        let v_1035 = func_927();
        let v_1036 = 63 + 86;
    }
    pub struct Record_1037 {
        pub field_1038: u32,
    }
}
#[cfg(any(feature = "feat13", feature = "feat6", feature = "feat3"))]
pub const LIMIT_1039: u32 = func_330();
#[cfg(any(feature = "feat19", feature = "feat18"))]
pub fn func_1040() {
    let _ = 976;
}
pub static COUNTER_1041: u32 = 0;
use std::collections::HashMap;
pub struct Handle_1042;
impl Handle_1042 {
    #[cfg(feature = "feat2")]
    pub fn func_1043() {
        println!("msg_1044 {}", 1);
        #[cfg(feature = "feat17")]
        let _ = 456;
    }
    pub fn func_1045() {
        pub fn func_968() {
            let v_1046 = ext_0();
            let v_1047 = ext_0();
        }
        #[cfg(any(feature = "feat12", feature = "feat3"))]
        let v_1048 = func_184();
        pub fn func_1049() {
            let v_1050 = ext_2();
            if 19 > 10 {
                let v_1051 = func_560();
                let w_1052 = 6;
                let w_1053 = 8;
            } else {
                let w_1054 = 7;
                func_848();
            }
        }
    }
}
pub fn func_1055() {
    let v_1056 = func_283();
}
pub fn func_1057() {
    match 1 {
        0 => {
            let _ = 72;
        }
        _ => {}
    }
    #[cfg(not(feature = "feat25"))]
    let v_1058 = ext_2();
    if 0 > 10 {
        println!("msg_1059 {}", 1);
        let v_1060 = 647;
        let v_1061 = func_66();
    } else {
        #[cfg(not(feature = "feat14"))]
        func_866();
        match 0 {
            0 => {
                #[cfg(all(feature = "feat21", not(feature = "feat7")))]
                let v_1062 = func_968();
                #[cfg(feature = "feat3")]
                let v_1063 = func_652();
            }
            _ => {}
        }
        let v_1064 = 401;
        let v_1065 = 36 + 28;
    }
}
pub struct Handle_1066;
impl Handle_1066 {
    #[cfg(feature = "feat8")]
    pub fn func_1067() {
        match 2 {
            0 => {
                if 8 > 10 {
                    let v_1068 = ext_3();
                    println!("msg_1069 {}", 1);
                    let v_1070 = func_421();
                    println!("msg_1071 {}", 1);
                } else {
                    #[cfg(not(feature = "feat11"))]
                    let v_1072 = 58 + 19;
                    let v_1073 = ext_1();
                    #[cfg(feature = "feat18")]
                    func_437();
                }
                #[cfg(not(feature = "feat5"))]
                let v_1074 = func_134();
                match 3 {
                    0 => {
                        let v_1075 = 95 + 90;
                    }
                    _ => {}
                }
                pub fn func_1076() {
                    #[cfg(feature = "feat19")]
                    let v_1077 = 63 + 17;
                    let v_1078 = ext_3();
                    let w_1079 = 1;
                }
            }
            _ => {}
        }
        let v_1080 = 25 + 32;
        let v_1081 = func_195();
    }
    pub fn func_1082() {
        if 3 > 10 {
            let v_1083 = 766;
            println!("msg_1084 {}", 1);
            let v_1085 = func_183();
            func_924();
        } else {
            let v_1086 = ext_3();
            let _ = 341;
        }
        println!("msg_1087 {}", 1);
        func_302();
        #[cfg(feature = "feat17")]
        let v_1088 = 284;
    }
}
#[cfg(feature = "feat10")]
pub mod inner_1089 {
    use super::*;
    pub struct Handle_1090;
    impl Handle_1090 {
        pub fn func_1091() {
            #[cfg(feature = "feat19")]
            func_193();
            if 1 > 10 {
                let v_1092 = 54 + 92;
                let w_1093 = 0;
            } else {
                func_307();
                let w_1094 = 6;
                let v_1095 = func_32();
            }
        }
        pub fn func_1096() {
            #[cfg(not(feature = "feat5"))]
            func_1049();
            match 1 {
                0 => {
                    let v_1097 = 32 + 40;
                    let v_1098 = func_53();
                    println!("msg_1099 {}", 1);
                }
                _ => {}
            }
            pub fn func_1100() {
                #[cfg(feature = "feat13")]
                ext_3();
                let w_1101 = 1;
                #[cfg(feature = "feat23")]
                let v_1102 = 538;
            }
            let _ = 183;
        }
    }
    pub fn func_1103() {
        pub fn func_1104() {
            ext_0();
            let v_1105 = func_285();
        }
    }
}
pub fn func_1106() {
    println!("msg_1107 {}", 1);
    pub fn func_1108() {
        #[cfg(feature = "feat19")]
        let v_1109 = func_100();
        func_468();
        let _ = 833;
        let _ = 69 + 45;
    }
    let v_1110 = 950;
}
pub struct Handle_1111;
impl Handle_1111 {
    pub fn func_1112() {
        match 2 {
            0 => {
                let _ = 178;
                let v_1113 = func_538();
            }
            _ => {}
        }
        let v_1114 = func_560();
    }
    pub fn func_1115() {
        let v_1116 = func_764();
        let v_1117 = func_1082();
        if 9 > 10 {
            if 18 > 10 {
                let v_1118 = 87 + 46;
                let v_1119 = func_177();
            } else {
                let w_1120 = 3;
                let v_1121 = func_313();
            }
        } else {
            match 1 {
                0 => {
                    let w_1122 = 0;
                    let v_1123 = func_685();
                }
                _ => {}
            }
        }
        println!("msg_1124 {}", 1);
    }
}
pub const LIMIT_1125: u32 = func_1106();
pub fn func_1126() {
    pub fn func_1127() {
        let v_1128 = ext_2();
        func_1067();
    }
    let v_1129 = 95 + 85;
}
pub type Alias_1130 = u64;
pub type Alias_1131 = u64;
pub static COUNTER_1132: u32 = 0;
use std::collections::HashMap;
pub const LIMIT_1133: u32 = 88 + 25;
pub fn func_1134() {
    let v_1135 = 3 + 71;
    pub fn func_1136() {
        #[cfg(feature = "feat21")]
        let v_1137 = 902;
    }
    pub fn func_1138() {
        println!("msg_1139 {}", 1);
    }
}
pub struct Handle_1140;
impl Handle_1140 {
    #[cfg(feature = "feat22")]
    pub fn func_1141() {
        let v_1142 = 337;
        #[cfg(feature = "feat23")]
        let _ = 50 + 46;
        if 4 > 10 {
            println!("msg_1143 {}", 1);
        } else {
            println!("msg_1144 {}", 1);
            match 4 {
                0 => {
                    let v_1145 = 116;
                }
                _ => {}
            }
            pub fn func_1146() {
                let w_1147 = 7;
                let v_1148 = func_907();
            }
        }
    }
}
pub fn func_1149() {
    let v_1150 = func_1141();
    #[cfg(all(feature = "feat22", not(feature = "feat25")))]
    let v_1151 = 7 + 91;
    func_698();
    let _ = 511;
}
#[cfg(feature = "feat21")]
pub mod inner_1152 {
    use super::*;
    pub fn func_1146() {
        let v_1153 = func_652();
        if 18 > 10 {
            let v_1154 = func_968();
        } else {
            let v_1155 = ext_2();
        }
        #[cfg(any(feature = "feat22", feature = "feat23"))]
        let v_1156 = func_667();
        let v_1157 = ext_3();
    }
    pub enum Kind_1158 {
        #[cfg(feature = "feat23")]
        Variant_1159,
        Variant_1160,
    }
    pub enum Kind_1161 {
        #[cfg(feature = "feat23")]
        Variant_1162,
        Variant_1163,
        Variant_1164,
    }
}
pub const LIMIT_1165: u32 = ext_1();
pub static COUNTER_1166: u32 = 0;
pub struct Handle_1167;
impl Handle_1167 {
    #[cfg(feature = "feat4")]
    pub fn func_1168() {
        let v_1169 = 594;
    }
    pub fn func_1170() {
        let v_1171 = func_670();
        let v_1172 = func_791();
    }
}
