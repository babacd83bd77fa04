pub fn func_1005() {
    #[cfg(feature = "feat10")]
    let v_1006 = 57 + 96;
    match 3 {
        0 => {
            let v_1007 = ext_0();
        }
        _ => {}
    }
    let v_1008 = func_601();
}
#[cfg(all(feature = "feat0", not(feature = "feat15")))]
pub fn func_469() {
    let _ = 164;
    println!("msg_1009 {}", 1);
}
pub fn func_1010() {
    ext_3();
    pub fn func_1011() {
        if 4 > 10 {
            func_3();
        } else {
            func_767();
            ext_3();
            let v_1012 = func_907();
        }
        match 0 {
            0 => {
                println!("msg_1013 {}", 1);
            }
            _ => {}
        }
    }
    let v_1014 = ext_2();
    let v_1015 = func_608();
}
#[cfg(not(feature = "feat4"))]
pub fn func_1016() {
    let v_1017 = func_422();
    let v_1018 = func_92();
}
pub mod inner_1019 {
    use super::*;
    pub fn func_1020() {
        let v_1021 = func_331();
        let v_1022 = 711;
        pub fn func_1023() {
            let _ = 82 + 59;
            func_92();
            let v_1024 = func_493();
        }
    }
}
pub fn func_1025() {
    #[cfg(not(feature = "feat5"))]
    let _ = 87 + 79;
}
pub type Alias_1026 = u64;
pub type Alias_1027 = u64;
#[cfg(feature = "feat13")]
pub const LIMIT_1028: u32 = ext_2();
#[cfg(feature = "feat17")]
pub enum Kind_1029 {
    Variant_1030,
    Variant_1031,
    Variant_1032,
}
pub struct Handle_1033;
impl Handle_1033 {
    pub fn func_1034() {
        let v_1035 = func_258();
        pub fn func_1036() {
            let v_1037 = 549;
        }
        let v_1038 = func_723();
        func_1011();
    }
}
pub enum Kind_1039 {
    Variant_1040,
    Variant_1041,
    #[cfg(feature = "feat8")]
    Variant_1042,
}
pub static COUNTER_1043: u32 = 0;
pub mod inner_1044 {
    use super::*;
    #[cfg(any(feature = "feat1", feature = "feat10"))]
    pub fn func_1045() {
        if 6 > 10 {
            let v_1046 = func_982();
        } else {
            let v_1047 = func_192();
            let v_1048 = ext_1();
            let v_1049 = 56 + 93;
        }
    }
    #[cfg(feature = "feat13")]
    pub fn func_505() {
        match 3 {
            0 => {
                match 0 {
                    0 => {
                        let v_1050 = ext_1();
                        let _ = 97 + 62;
                        println!("msg_1051 {}", 1);
                        let _ = 844;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub static COUNTER_1052: u32 = 0;
use std::collections::HashMap;
pub struct Handle_1053;
impl Handle_1053 {
    pub fn func_1054() {
        println!("msg_1055 {}", 1);
        match 2 {
            0 => {
                #[cfg(feature = "feat6")]
                let v_1056 = func_349();
            }
            _ => {}
        }
        let v_1057 = ext_0();
        match 4 {
            0 => {
                let v_1058 = 72 + 65;
                println!("msg_1059 {}", 1);
                let v_1060 = func_302();
                #[cfg(all(feature = "feat8", not(feature = "feat4")))]
                let v_1061 = 70 + 56;
            }
            _ => {}
        }
    }
    pub fn func_1062() {
        if 6 > 10 {
            let v_1063 = 82 + 36;
        } else {
            let v_1064 = func_370();
            ext_1();
        }
        #[cfg(feature = "feat6")]
        let _ = 11 + 61;
    }
}
#[cfg(feature = "feat6")]
pub enum Kind_1065 {
    Variant_1066,
    #[cfg(any(feature = "feat17", feature = "feat8"))]
    Variant_1067,
}
pub fn func_1068() {
    if 9 > 10 {
        #[cfg(feature = "feat10")]
        let _ = 26 + 51;
        if 6 > 10 {
            ext_1();
        } else {
            let v_1069 = func_854();
            let v_1070 = func_262();
        }
        let v_1071 = func_791();
    } else {
        #[cfg(not(feature = "feat15"))]
        let v_1072 = 955;
        #[cfg(feature = "feat3")]
        let v_1073 = func_547();
        #[cfg(all(feature = "feat1", not(feature = "feat5")))]
        pub fn func_1074() {
            let v_1075 = ext_1();
            func_403();
            let v_1076 = 791;
        }
    }
    let v_1077 = ext_2();
    func_302();
    let v_1078 = func_168();
}
pub enum Kind_1079 {
    Variant_1080,
    Variant_1081,
    Variant_1082,
}
pub static COUNTER_1083: u32 = 0;
pub static COUNTER_1084: u32 = 0;
pub struct Handle_1085;
impl Handle_1085 {
    pub fn func_1086() {
        func_802();
        let v_1087 = func_171();
        let v_1088 = func_688();
        #[cfg(feature = "feat6")]
        func_142();
    }
}
pub fn func_1089() {
    println!("msg_1090 {}", 1);
    match 0 {
        0 => {
            match 3 {
                0 => {
                    let _ = 682;
                    let v_1091 = ext_2();
                    println!("msg_1092 {}", 1);
                    println!("msg_1093 {}", 1);
                }
                _ => {}
            }
        }
        _ => {}
    }
    #[cfg(feature = "feat17")]
    let v_1094 = func_32();
    let v_1095 = 848;
}
pub fn func_1096() {
    let v_1097 = ext_0();
    #[cfg(not(feature = "feat5"))]
    func_931();
}
pub fn func_1098() {
    println!("msg_1099 {}", 1);
    match 4 {
        0 => {
            match 0 {
                0 => {
                    func_218();
                    let v_1100 = ext_3();
                    #[cfg(feature = "feat6")]
                    func_505();
                }
                _ => {}
            }
            match 4 {
                0 => {
                    let _ = 971;
                    let v_1101 = func_564();
                    let _ = 484;
                }
                _ => {}
            }
            #[cfg(any(feature = "feat6", feature = "feat16", feature = "feat0"))]
            let _ = 74;
            let _ = 294;
        }
        _ => {}
    }
    match 0 {
        0 => {
            let v_1102 = func_586();
        }
        _ => {}
    }
    #[cfg(feature = "feat6")]
    let v_1103 = 318;
}
#[cfg(feature = "feat13")]
use std::collections::HashMap;
#[cfg(feature = "feat8")]
pub fn func_1104() {
    println!("msg_1105 {}", 1);
    println!("msg_1106 {}", 1);
    let v_1107 = ext_2();
    #[cfg(feature = "feat17")]
    let v_1108 = func_1020();
}
pub static COUNTER_1109: u32 = 0;
pub fn func_1110() {
    let v_1111 = 718;
    let v_1112 = func_282();
    if 18 > 10 {
        if 15 > 10 {
            pub fn func_1113() {
                let v_1114 = func_385();
                let v_1115 = 131;
                println!("msg_1116 {}", 1);
                println!("msg_1117 {}", 1);
            }
            println!("msg_1118 {}", 1);
        } else {
            let v_1119 = ext_0();
        }
        let v_1120 = func_539();
        if 5 > 10 {
            match 4 {
                0 => {
                    println!("msg_1121 {}", 1);
                    let v_1122 = func_925();
                    let w_1123 = 2;
                }
                _ => {}
            }
        } else {
            println!("msg_1124 {}", 1);
            pub fn func_1125() {
                func_202();
            }
        }
    } else {
        let v_1126 = func_191();
        let v_1127 = 90 + 53;
        if 11 > 10 {
            println!("msg_1128 {}", 1);
            let v_1129 = func_826();
        } else {
            println!("msg_1130 {}", 1);
            let v_1131 = func_202();
            func_556();
            if 15 > 10 {
                let v_1132 = ext_3();
                let _ = 1 + 20;
            } else {
                println!("msg_1133 {}", 1);
                func_1034();
                let _ = 789;
            }
        }
    }
}
pub fn func_1134() {
    #[cfg(all(feature = "feat8", not(feature = "feat15")))]
    let v_1135 = func_135();
    println!("msg_1136 {}", 1);
    match 2 {
        0 => {
            let v_1137 = ext_1();
            let v_1138 = func_852();
        }
        _ => {}
    }
}
pub fn func_1139() {
    match 2 {
        0 => {
            if 11 > 10 {
                let v_1140 = ext_2();
                let v_1141 = func_218();
                #[cfg(any(feature = "feat6", feature = "feat9", feature = "feat9"))]
                func_304();
                let _ = 78 + 83;
            } else {
                #[cfg(feature = "feat1")]
                let _ = 87 + 61;
                func_574();
                match 2 {
                    0 => {
                        let v_1142 = ext_3();
                        let v_1143 = ext_2();
                        #[cfg(feature = "feat16")]
                        func_135();
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
    println!("msg_1144 {}", 1);
    if 16 > 10 {
        let v_1145 = 25 + 18;
        if 10 > 10 {
            let _ = 75 + 13;
            let v_1146 = func_852();
        } else {
            func_835();
        }
    } else {
        #[cfg(feature = "feat10")]
        ext_3();
        #[cfg(feature = "feat16")]
        let _ = 287;
        func_516();
    }
}
pub fn func_1147() {
    let v_1148 = 20 + 66;
    #[cfg(feature = "feat14")]
    let _ = 203;
    let v_1149 = 351;
    println!("msg_1150 {}", 1);
}
