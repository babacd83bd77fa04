pub struct Handle_1101;
impl Handle_1101 {
    #[cfg(not(feature = "feat3"))]
    pub fn func_1102() {
        let v_1103 = func_1065();
        #[cfg(not(feature = "feat20"))]
        let _ = 0 + 90;
        let v_1104 = 1 + 51;
        let v_1105 = func_938();
    }
    pub fn func_1106() {
        pub fn func_1107() {
            #[cfg(any(feature = "feat23", feature = "feat23"))]
            func_721();
            if 14 > 10 {
                let v_1108 = 6 + 22;
                let _ = 80 + 28;
            } else {
                func_692();
                let v_1109 = func_704();
                let v_1110 = func_469();
            }
            let _ = 588;
            let v_1111 = ext_2();
        }
    }
}
pub enum Kind_1112 {
    Variant_1113,
    Variant_1114,
    Variant_1115,
    Variant_1116,
}
pub fn func_1117() {
    if 10 > 10 {
        if 2 > 10 {
            func_955();
        } else {
            if 1 > 10 {
                let w_1118 = 0;
                let v_1119 = func_422();
                let v_1120 = ext_1();
            } else {
                let w_1121 = 6;
                let w_1122 = 4;
                let v_1123 = ext_3();
                let w_1124 = 5;
            }
            pub fn func_1125() {
                let v_1126 = 88;
                let w_1127 = 4;
                #[cfg(not(feature = "feat22"))]
                func_147();
                let w_1128 = 8;
            }
            if 6 > 10 {
                let v_1129 = func_275();
                #[cfg(feature = "feat23")]
                let v_1130 = func_775();
                ext_2();
                let v_1131 = 935;
            } else {
                let w_1132 = 6;
                println!("msg_1133 {}", 1);
                let w_1134 = 2;
                let w_1135 = 8;
            }
            let _ = 18 + 72;
        }
        let v_1136 = func_898();
    } else {
        let v_1137 = 83 + 80;
        func_798();
    }
    let v_1138 = func_406();
    let v_1139 = func_319();
    pub fn func_1140() {
        ext_0();
        let _ = 49 + 17;
        pub fn func_1141() {
            match 1 {
                0 => {
                    let _ = 218;
                    println!("msg_1142 {}", 1);
                    let v_1143 = 66 + 65;
                }
                _ => {}
            }
        }
        let v_1144 = 55 + 20;
    }
}
use std::collections::HashMap;
pub struct Handle_1145;
impl Handle_1145 {
    pub fn func_448() {
        let v_1146 = ext_0();
        #[cfg(feature = "feat23")]
        pub fn func_1147() {
            let _ = 792;
        }
    }
    pub fn func_1148() {
        func_107();
        println!("msg_1149 {}", 1);
        pub fn func_1150() {
            #[cfg(feature = "feat23")]
            let _ = 714;
            println!("msg_1151 {}", 1);
        }
        #[cfg(feature = "feat23")]
        let _ = 940;
    }
}
pub struct Handle_1152;
#[cfg(feature = "feat23")]
impl Handle_1152 {
    pub fn func_1153() {
        if 6 > 10 {
            let v_1154 = ext_2();
            let v_1155 = ext_2();
            let _ = 80 + 62;
        } else {
            pub fn func_1148() {
                let v_1156 = func_1029();
            }
        }
        let v_1157 = 46 + 70;
    }
    pub fn func_1158() {
        let v_1159 = 18 + 66;
        match 1 {
            0 => {
                let v_1160 = func_373();
                let v_1161 = func_544();
                let v_1162 = ext_2();
            }
            _ => {}
        }
        let _ = 88 + 66;
    }
}
pub fn func_1163() {
    func_545();
    match 4 {
        0 => {
            let v_1164 = ext_2();
            if 3 > 10 {
                #[cfg(feature = "feat23")]
                func_878();
                let v_1165 = func_1125();
            } else {
                let v_1166 = 89 + 65;
                let v_1167 = 517;
            }
        }
        _ => {}
    }
    ext_1();
    func_445();
}
pub struct Handle_1168;
impl Handle_1168 {
    pub fn func_1169() {
        if 16 > 10 {
            let v_1170 = func_237();
        } else {
            if 14 > 10 {
                let v_1171 = func_121();
                let w_1172 = 3;
            } else {
                let _ = 430;
                let _ = 0 + 67;
                #[cfg(feature = "feat23")]
                let v_1173 = 617;
            }
            let v_1174 = ext_2();
            let v_1175 = ext_0();
            let _ = 717;
        }
    }
}
pub const LIMIT_1176: u32 = func_151();
pub type Alias_1177 = u64;
#[cfg(all(feature = "feat23", not(feature = "feat9")))]
pub enum Kind_1178 {
    Variant_1179,
}
