pub type Alias_1078 = u64;
pub struct Record_1079 {
    pub field_1080: u32,
    #[cfg(feature = "feat0")]
    pub field_1081: u32,
    pub field_1082: u32,
    pub field_1083: u32,
}
pub struct Record_1084 {
    #[cfg(feature = "feat12")]
    pub field_1085: u32,
}
pub fn func_1086() {
    let v_1087 = func_672();
    println!("msg_1088 {}", 1);
}
pub static COUNTER_1089: u32 = 0;
pub mod inner_1090 {
    use super::*;
    pub fn func_1091() {
        let v_1092 = 73 + 52;
        println!("msg_1093 {}", 1);
        let v_1094 = 42 + 42;
    }
}
pub const LIMIT_1095: u32 = 6 + 15;
pub fn func_1096() {
    if 0 > 10 {
        pub fn func_1097() {
            let v_1098 = func_854();
            let v_1099 = func_1031();
            let v_1100 = func_668();
        }
        println!("msg_1101 {}", 1);
    } else {
        let v_1102 = func_860();
        println!("msg_1103 {}", 1);
        println!("msg_1104 {}", 1);
        let v_1105 = 366;
    }
    #[cfg(feature = "feat9")]
    pub fn func_1106() {
        let v_1107 = func_465();
        let v_1108 = ext_0();
    }
}
pub struct Handle_1109;
impl Handle_1109 {
    pub fn func_1110() {
        match 3 {
            0 => {
                let v_1111 = func_982();
            }
            _ => {}
        }
        let v_1112 = func_393();
    }
}
use std::collections::HashMap;
pub const LIMIT_1113: u32 = 82 + 24;
#[cfg(feature = "feat14")]
pub fn func_1114() {
    pub fn func_1115() {
        pub fn func_1116() {
            let v_1117 = 23 + 32;
        }
        let v_1118 = func_978();
    }
    if 10 > 10 {
        let v_1119 = func_1086();
        match 3 {
            0 => {
                #[cfg(feature = "feat16")]
                let v_1120 = 909;
            }
            _ => {}
        }
        let v_1121 = 7 + 30;
    } else {
        let v_1122 = func_533();
        let v_1123 = func_831();
    }
    if 8 > 10 {
        let v_1124 = 879;
        func_547();
        #[cfg(feature = "feat16")]
        func_91();
        let v_1125 = func_1045();
    } else {
        #[cfg(feature = "feat16")]
        func_593();
        func_965();
        let v_1126 = 36 + 44;
        #[cfg(any(feature = "feat15", feature = "feat16", feature = "feat15"))]
        func_953();
    }
}
pub enum Kind_1127 {
    #[cfg(feature = "feat0")]
    Variant_1128,
    Variant_1129,
    Variant_1130,
    Variant_1131,
}
pub fn func_1132() {
    #[cfg(feature = "feat1")]
    let v_1133 = 743;
    let v_1134 = func_494();
}
pub fn func_1135() {
    if 16 > 10 {
        match 2 {
            0 => {
                match 2 {
                    0 => {
                        let v_1136 = ext_0();
                        #[cfg(any(feature = "feat7", feature = "feat9", feature = "feat16"))]
                        let _ = 33;
                        #[cfg(feature = "feat16")]
                        let v_1137 = 99 + 8;
                    }
                    _ => {}
                }
                let v_1138 = 10 + 95;
                println!("msg_1139 {}", 1);
            }
            _ => {}
        }
        pub fn func_1140() {
            if 3 > 10 {
                let w_1141 = 1;
            } else {
                let v_1142 = 84 + 95;
                let w_1143 = 7;
                let v_1144 = 813;
            }
            let v_1145 = func_465();
            let v_1146 = 817;
            let v_1147 = 56 + 87;
        }
        ext_3();
    } else {
        match 4 {
            0 => {
                if 11 > 10 {
                    println!("msg_1148 {}", 1);
                    let w_1149 = 2;
                    #[cfg(feature = "feat12")]
                    func_692();
                    let v_1150 = ext_0();
                } else {
                    let w_1151 = 8;
                    let v_1152 = func_908();
                    #[cfg(feature = "feat1")]
                    let v_1153 = ext_0();
                }
            }
            _ => {}
        }
        let v_1154 = 39 + 33;
        func_486();
    }
}
pub fn func_1155() {
    if 12 > 10 {
        #[cfg(feature = "feat8")]
        let v_1156 = 38 + 67;
        let v_1157 = func_393();
    } else {
        let v_1158 = func_105();
        let v_1159 = 681;
        match 3 {
            0 => {
                pub fn func_1160() {
                    let w_1161 = 4;
                    let w_1162 = 2;
                }
                func_1097();
                println!("msg_1163 {}", 1);
                if 11 > 10 {
                    let w_1164 = 3;
                    let w_1165 = 5;
                } else {
                    let w_1166 = 7;
                    let w_1167 = 7;
                    let v_1168 = ext_2();
                }
            }
            _ => {}
        }
    }
    let v_1169 = func_427();
    let v_1170 = ext_2();
    ext_0();
}
pub mod nested;
