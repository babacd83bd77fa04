pub enum Kind_1 {
    Variant_2,
    #[cfg(feature = "m2_3")]
    Variant_3,
}
pub struct Record_4 {
    pub field_5: u32,
    pub field_6: u32,
    pub field_7: u32,
    #[cfg(not(feature = "m2_1"))]
    pub field_8: u32,
}
use std::collections::HashMap;
#[cfg(all(feature = "m2_3", not(feature = "m2_1")))]
pub const LIMIT_9: u32 = 669;
pub fn func_10() {
    pub fn func_11() {
        let v_12 = 971;
        #[cfg(feature = "m2_8")]
        let _ = 233;
        if 12 > 10 {
            #[cfg(feature = "m2_7")]
            pub fn func_13() {
                let v_14 = 19 + 39;
                let v_15 = 967;
                let _ = 896;
                ext_0();
            }
            let v_16 = 23 + 55;
        } else {
            if 12 > 10 {
                #[cfg(feature = "m2_0")]
                func_13();
                let v_17 = ext_0();
            } else {
                println!("msg_18 {}", 1);
                let v_19 = func_13();
                let _ = 79 + 82;
            }
        }
    }
    let v_20 = 56 + 80;
}
pub fn func_21() {
    #[cfg(not(feature = "m2_6"))]
    let v_22 = 969;
    func_10();
}
use std::collections::HashMap;
pub type Alias_23 = u64;
use std::collections::HashMap;
pub type Alias_24 = u64;
pub fn func_21() {
    let _ = 92 + 68;
    match 2 {
        0 => {
            func_13();
        }
        _ => {}
    }
    let v_25 = func_13();
}
pub fn func_26() {
    let v_27 = func_11();
}
use std::collections::HashMap;
pub fn func_28() {
    println!("msg_29 {}", 1);
}
pub fn func_30() {
    let v_31 = ext_1();
    #[cfg(feature = "m2_8")]
    let v_32 = func_26();
    let v_33 = 5;
}
pub static COUNTER_34: u32 = 0;
#[cfg(feature = "m2_0")]
pub fn func_35() {
    #[cfg(feature = "m2_5")]
    let v_36 = 371;
    match 0 {
        0 => {
            #[cfg(all(feature = "m2_5", not(feature = "m2_1")))]
            let v_37 = func_26();
        }
        _ => {}
    }
    let _ = 355;
    if 4 > 10 {
        if 8 > 10 {
            match 3 {
                0 => {
                    let v_38 = 917;
                    println!("msg_39 {}", 1);
                }
                _ => {}
            }
            let v_40 = ext_3();
            println!("msg_41 {}", 1);
        } else {
            if 7 > 10 {
                let v_42 = ext_0();
                let v_43 = func_30();
            } else {
                let _ = 91 + 54;
                let w_44 = 7;
                let w_45 = 6;
                let v_46 = 68;
            }
        }
        pub fn func_47() {
            let v_48 = 552;
            let v_49 = ext_2();
        }
        if 17 > 10 {
            #[cfg(feature = "m2_8")]
            let v_50 = 3 + 61;
            pub fn func_51() {
                let v_52 = 92 + 66;
                let v_53 = func_13();
                let w_54 = 0;
            }
        } else {
            match 2 {
                0 => {
                    let w_55 = 7;
                    let w_56 = 7;
                }
                _ => {}
            }
        }
        func_47();
    } else {
        println!("msg_57 {}", 1);
        ext_1();
        func_51();
    }
}
pub fn func_58() {
    println!("msg_59 {}", 1);
    let v_60 = 773;
    let v_61 = 545;
}
#[cfg(feature = "m2_2")]
pub fn func_62() {
    #[cfg(any(feature = "m2_3", feature = "m2_8"))]
    let v_63 = func_11();
}
pub type Alias_64 = u64;
#[cfg(feature = "m2_0")]
pub static COUNTER_65: u32 = 0;
pub struct Record_66 {
    pub field_67: u32,
    pub field_68: u32,
    pub field_69: u32,
    pub field_70: u32,
}
pub fn func_71() {
    pub fn func_72() {
        let v_73 = 99 + 77;
        #[cfg(any(feature = "m2_3", feature = "m2_7", feature = "m2_4"))]
        let v_74 = func_35();
        let v_75 = 54 + 50;
    }
}
pub fn func_76() {
    func_26();
    let v_77 = 648;
    let v_78 = func_47();
}
use std::collections::HashMap;
pub fn func_79() {
    func_62();
}
pub type Alias_80 = u64;
pub fn func_81() {
    let _ = 0 + 91;
    func_21();
    println!("msg_82 {}", 1);
}
pub fn func_81() {
    let v_83 = 567;
    let v_84 = ext_2();
    println!("msg_85 {}", 1);
    #[cfg(all(feature = "m2_4", not(feature = "m2_6")))]
    pub fn func_11() {
        match 3 {
            0 => {
                if 14 > 10 {
                    let v_86 = func_11();
                    ext_0();
                    println!("msg_87 {}", 1);
                    println!("msg_88 {}", 1);
                } else {
                    let v_89 = ext_2();
                    let v_90 = ext_0();
                }
            }
            _ => {}
        }
        let v_91 = ext_2();
        pub fn func_92() {
            let v_93 = func_26();
            let v_94 = 410;
            println!("msg_95 {}", 1);
            ext_3();
        }
        func_72();
    }
}
pub mod nested;
