pub struct Record_1017 {
    pub field_1018: u32,
}
pub static COUNTER_1019: u32 = 0;
pub enum Kind_1020 {
    Variant_1021,
}
pub fn func_1022() {
    if 18 > 10 {
        let v_1023 = ext_1();
        let v_1024 = 74 + 83;
        println!("msg_1025 {}", 1);
    } else {
        func_758();
        let v_1026 = ext_0();
        println!("msg_1027 {}", 1);
    }
}
#[cfg(feature = "feat23")]
pub mod inner_1028 {
    use super::*;
    pub fn func_1029() {
        if 5 > 10 {
            func_514();
            if 4 > 10 {
                let v_1030 = func_682();
                #[cfg(not(feature = "feat13"))]
                let v_1031 = 44 + 23;
            } else {
                func_223();
                let v_1032 = ext_3();
                let _ = 20 + 35;
                let w_1033 = 8;
            }
        } else {
            let v_1034 = 89 + 63;
        }
        match 4 {
            0 => {
                ext_2();
                let v_1035 = 37 + 84;
            }
            _ => {}
        }
    }
    pub enum Kind_1036 {
        Variant_1037,
        Variant_1038,
    }
}
use std::collections::HashMap;
pub fn func_1039() {
    println!("msg_1040 {}", 1);
    pub fn func_1041() {
        if 10 > 10 {
            let v_1042 = func_151();
            let _ = 76 + 30;
            let v_1043 = ext_0();
        } else {
            let v_1044 = func_404();
            pub fn func_387() {
                let w_1045 = 3;
            }
            println!("msg_1046 {}", 1);
            match 2 {
                0 => {
                    let _ = 421;
                }
                _ => {}
            }
        }
        println!("msg_1047 {}", 1);
    }
    let _ = 82 + 92;
    #[cfg(all(feature = "feat23", not(feature = "feat7")))]
    let _ = 65 + 7;
}
use std::collections::HashMap;
#[cfg(feature = "feat23")]
pub const LIMIT_1048: u32 = 86 + 6;
#[cfg(not(feature = "feat17"))]
pub mod inner_1049 {
    use super::*;
    pub fn func_1050() {
        let _ = 93 + 91;
        pub fn func_1051() {
            let v_1052 = 54 + 46;
            let v_1053 = 144;
        }
    }
    pub fn func_1054() {
        let v_1055 = ext_2();
        func_775();
    }
}
pub fn func_1056() {
    let v_1057 = func_367();
}
#[cfg(feature = "feat23")]
pub fn func_1058() {
    let v_1059 = ext_3();
}
pub struct Handle_1060;
impl Handle_1060 {
    pub fn func_1061() {
        ext_1();
        let v_1062 = 790;
    }
}
pub static COUNTER_1063: u32 = 0;
pub struct Handle_1064;
impl Handle_1064 {
    pub fn func_1065() {
        let v_1066 = func_692();
    }
}
pub fn func_1067() {
    #[cfg(feature = "feat23")]
    pub fn func_237() {
        let v_1068 = func_956();
        let v_1069 = 95 + 56;
    }
    match 0 {
        0 => {
            let v_1070 = 32 + 1;
        }
        _ => {}
    }
}
pub static COUNTER_1071: u32 = 0;
use std::collections::HashMap;
#[cfg(feature = "feat23")]
use std::collections::HashMap;
pub struct Record_1072 {
    pub field_1073: u32,
    pub field_1074: u32,
    #[cfg(feature = "feat23")]
    pub field_1075: u32,
    pub field_1076: u32,
}
use std::collections::HashMap;
pub struct Handle_1077;
impl Handle_1077 {
    #[cfg(feature = "feat23")]
    pub fn func_151() {
        let v_1078 = func_1();
        let v_1079 = func_389();
        let v_1080 = ext_2();
    }
    #[cfg(any(feature = "feat23", feature = "feat23", feature = "feat23"))]
    pub fn func_1081() {
        match 3 {
            0 => {
                if 0 > 10 {
                    let w_1082 = 7;
                } else {
                    ext_2();
                }
                #[cfg(not(feature = "feat22"))]
                pub fn func_79() {
                    let w_1083 = 4;
                    let v_1084 = func_545();
                }
                if 8 > 10 {
                    let w_1085 = 8;
                    let v_1086 = func_382();
                } else {
                    let v_1087 = func_939();
                    let v_1088 = 335;
                }
            }
            _ => {}
        }
        let v_1089 = 565;
        if 9 > 10 {
            let v_1090 = func_562();
            let v_1091 = ext_1();
        } else {
            match 4 {
                0 => {
                    println!("msg_1092 {}", 1);
                    let w_1093 = 1;
                    let w_1094 = 4;
                    let w_1095 = 2;
                }
                _ => {}
            }
            if 0 > 10 {
                let _ = 65;
                ext_1();
                let w_1096 = 4;
            } else {
                let v_1097 = ext_1();
                let v_1098 = ext_1();
                println!("msg_1099 {}", 1);
            }
            let v_1100 = ext_3();
            func_160();
        }
    }
}
pub mod nested;
