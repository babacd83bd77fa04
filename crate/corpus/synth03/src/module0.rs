pub fn func_1() {
    if 6 > 10 {
        if 4 > 10 {
            if 4 > 10 {
                let w_2 = 5;
                let v_3 = ext_0();
                let w_4 = 1;
            } else {
                let v_5 = 291;
                ext_1();
            }
            let v_6 = 747;
            println!("msg_7 {}", 1);
        } else {
            let v_8 = 950;
            pub fn func_9() {
                let v_10 = 794;
                let _ = 925;
            }
            #[cfg(not(feature = "feat3"))]
            pub fn func_11() {
                let v_12 = ext_1();
            }
            func_11();
        }
        println!("msg_13 {}", 1);
    } else {
        let v_14 = 33 + 75;
        ext_1();
    }
    let v_15 = func_11();
    let v_16 = ext_2();
    let v_17 = func_11();
}
#[cfg(all(feature = "feat2", not(feature = "feat11")))]
pub fn func_9() {
    match 0 {
        0 => {
            ext_2();
            func_1();
            let v_18 = func_1();
        }
        _ => {}
    }
}
pub struct Record_19 {
    #[cfg(feature = "feat13")]
    pub field_20: u32,
    pub field_21: u32,
    #[cfg(not(feature = "feat3"))]
    pub field_22: u32,
}
pub fn func_23() {
    match 4 {
        0 => {
            let v_24 = 3 + 8;
            let _ = 26 + 21;
        }
        _ => {}
    }
    let v_25 = ext_3();
    pub fn func_26() {
        #[cfg(feature = "feat13")]
        let v_27 = 66 + 97;
        match 4 {
            0 => {
                func_1();
                println!("msg_28 {}", 1);
            }
            _ => {}
        }
        pub fn func_29() {
            func_11();
            let _ = 419;
            let v_30 = func_1();
            pub fn func_31() {
                let v_32 = func_9();
                let v_33 = ext_0();
                println!("msg_34 {}", 1);
            }
        }
    }
}
pub fn func_35() {
    println!("msg_36 {}", 1);
}
pub static COUNTER_37: u32 = 0;
pub fn func_38() {
    if 14 > 10 {
        println!("msg_39 {}", 1);
        #[cfg(feature = "feat6")]
        pub fn func_40() {
            func_23();
            println!("msg_41 {}", 1);
            match 3 {
                0 => {
                    let w_42 = 8;
                    let v_43 = 5 + 63;
                    let v_44 = func_23();
                    let w_45 = 3;
                }
                _ => {}
            }
            println!("msg_46 {}", 1);
        }
        func_1();
        let v_47 = func_26();
    } else {
        pub fn func_48() {
            let v_49 = func_26();
            let v_50 = ext_2();
            let v_51 = func_23();
        }
    }
}
pub const LIMIT_52: u32 = func_35();
pub static COUNTER_53: u32 = 0;
pub mod inner_54 {
    use super::*;
    pub enum Kind_55 {
        Variant_56,
        Variant_57,
        Variant_58,
        Variant_59,
    }
}
pub type Alias_60 = u64;
pub fn func_61() {
    let v_62 = 848;
    let v_63 = 207;
    #[cfg(feature = "feat15")]
    let v_64 = func_35();
    let v_65 = 46 + 69;
}
pub fn func_66() {
    if 8 > 10 {
        let v_67 = ext_3();
        if 7 > 10 {
            let v_68 = ext_2();
            let v_69 = ext_3();
        } else {
            pub fn func_70() {
                let v_71 = 17 + 41;
                let v_72 = ext_0();
                let w_73 = 0;
            }
        }
    } else {
        let _ = 35 + 79;
        let _ = 16 + 70;
        match 0 {
            0 => {
                if 12 > 10 {
                    let w_74 = 7;
                    let v_75 = 871;
                    let w_76 = 4;
                    let w_77 = 0;
                } else {
                    let v_78 = 72 + 15;
                    let v_79 = 80 + 90;
                    #[cfg(any(feature = "feat4", feature = "feat0", feature = "feat15"))]
                    let v_80 = 28;
                    let w_81 = 6;
                }
                let v_82 = 922;
                #[cfg(feature = "feat12")]
                let _ = 294;
            }
            _ => {}
        }
    }
}
pub enum Kind_83 {
    Variant_84,
    Variant_85,
    Variant_86,
}
pub struct Record_87 {
    pub field_88: u32,
    #[cfg(any(feature = "feat12", feature = "feat4"))]
    pub field_89: u32,
    #[cfg(feature = "feat2")]
    pub field_90: u32,
}
pub fn func_91() {
    match 1 {
        0 => {
            let v_92 = ext_2();
        }
        _ => {}
    }
    if 18 > 10 {
        println!("msg_93 {}", 1);
    } else {
        let v_94 = func_29();
        pub fn func_95() {
            let v_96 = 75 + 34;
            let _ = 660;
            match 1 {
                0 => {
                    let v_97 = 70 + 63;
                }
                _ => {}
            }
            match 2 {
                0 => {
                    let w_98 = 5;
                }
                _ => {}
            }
        }
        let v_99 = ext_2();
    }
    func_61();
    let v_100 = ext_2();
}
pub mod nested;
