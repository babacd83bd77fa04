pub fn func_1() {
    let _ = 213;
    if 2 > 10 {
        #[cfg(not(feature = "feat5"))]
        let v_2 = 699;
        let v_3 = 286;
    } else {
        pub fn func_4() {
            #[cfg(feature = "feat9")]
            let v_5 = 722;
            #[cfg(feature = "feat9")]
            let _ = 671;
            #[cfg(feature = "feat4")]
            pub fn func_6() {
                let w_7 = 7;
                println!("msg_8 {}", 1);
            }
        }
        #[cfg(feature = "feat4")]
        let v_9 = func_6();
        let v_10 = 9;
    }
}
#[cfg(feature = "feat3")]
pub static COUNTER_11: u32 = 0;
pub enum Kind_12 {
    #[cfg(feature = "feat4")]
    Variant_13,
    Variant_14,
}
pub fn func_4() {
    match 4 {
        0 => {
            let v_15 = func_6();
            #[cfg(feature = "feat4")]
            let v_16 = 962;
            match 0 {
                0 => {
                    pub fn func_4() {
                        let w_17 = 1;
                    }
                    pub fn func_18() {
                        let _ = 538;
                        let w_19 = 0;
                        let v_20 = func_4();
                        let w_21 = 2;
                    }
                    println!("msg_22 {}", 1);
                    if 6 > 10 {
                        let w_23 = 1;
                        let v_24 = func_1();
                    } else {
                        let v_25 = func_18();
                        let v_26 = func_4();
                        let w_27 = 7;
                        let v_28 = ext_2();
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    match 0 {
        0 => {
            pub fn func_29() {
                let v_30 = 700;
            }
            println!("msg_31 {}", 1);
        }
        _ => {}
    }
    if 19 > 10 {
        match 2 {
            0 => {
                #[cfg(feature = "feat8")]
                func_4();
                let v_32 = ext_1();
            }
            _ => {}
        }
        #[cfg(feature = "feat8")]
        let _ = 969;
        let v_33 = func_6();
        let v_34 = 664;
    } else {
        func_4();
        match 4 {
            0 => {
                func_1();
            }
            _ => {}
        }
        pub fn func_35() {
            let _ = 572;
            match 3 {
                0 => {
                    let _ = 856;
                    let w_36 = 3;
                    #[cfg(feature = "feat9")]
                    let v_37 = func_29();
                    let w_38 = 0;
                }
                _ => {}
            }
        }
        ext_1();
    }
    let v_39 = 89 + 71;
}
pub mod inner_40 {
    use super::*;
    #[cfg(feature = "feat8")]
    pub fn func_41() {
        #[cfg(not(feature = "feat5"))]
        let _ = 536;
        println!("msg_42 {}", 1);
        let v_43 = 960;
        match 0 {
            0 => {
                println!("msg_44 {}", 1);
                let v_45 = func_29();
                let v_46 = ext_0();
                match 1 {
                    0 => {
                        let v_47 = 10 + 95;
                        println!("msg_48 {}", 1);
                        println!("msg_49 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    use std::collections::HashMap;
}
pub struct Handle_50;
#[cfg(feature = "feat8")]
impl Handle_50 {
    pub fn func_51() {
        let v_52 = ext_2();
        let v_53 = ext_1();
        match 0 {
            0 => {
                let v_54 = func_41();
                if 11 > 10 {
                    let v_55 = 546;
                    let w_56 = 5;
                    let w_57 = 3;
                } else {
                    #[cfg(feature = "feat9")]
                    func_29();
                    let _ = 42 + 90;
                    #[cfg(not(feature = "feat5"))]
                    let v_58 = 11 + 66;
                    func_18();
                }
                let v_59 = func_18();
            }
            _ => {}
        }
        let v_60 = func_29();
    }
}
pub const LIMIT_61: u32 = 52 + 86;
#[cfg(any(feature = "feat4", feature = "feat3"))]
pub fn func_62() {
    #[cfg(not(feature = "feat6"))]
    func_4();
}
pub static COUNTER_63: u32 = 0;
pub fn func_64() {
    if 5 > 10 {
        #[cfg(feature = "feat8")]
        let v_65 = func_18();
    } else {
        let v_66 = 46 + 82;
        let v_67 = func_51();
        let v_68 = 898;
        let v_69 = func_6();
    }
    println!("msg_70 {}", 1);
    match 4 {
        0 => {
            println!("msg_71 {}", 1);
            #[cfg(all(feature = "feat9", not(feature = "feat11")))]
            let _ = 48 + 90;
            if 3 > 10 {
                let v_72 = func_1();
            } else {
                let _ = 9 + 45;
                let v_73 = ext_2();
            }
        }
        _ => {}
    }
    println!("msg_74 {}", 1);
}
pub mod nested;
