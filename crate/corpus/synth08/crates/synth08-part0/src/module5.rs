#[cfg(not(feature = "m0_2"))]
pub fn func_875() {
    let v_876 = func_823();
}
use std::collections::HashMap;
pub static COUNTER_877: u32 = 0;
pub fn func_878() {
    match 0 {
        0 => {
            if 12 > 10 {
                println!("msg_879 {}", 1);
                let v_880 = 31 + 55;
                if 0 > 10 {
                    let v_881 = func_597();
                    let w_882 = 2;
                    let w_883 = 5;
                } else {
                    let v_884 = 450;
                    println!("msg_885 {}", 1);
                    println!("msg_886 {}", 1);
                    let _ = 72 + 48;
                }
                println!("msg_887 {}", 1);
            } else {
                let v_888 = func_198();
                let v_889 = func_34();
                #[cfg(not(feature = "m0_2"))]
                let v_890 = func_425();
                match 4 {
                    0 => {
                        let v_891 = func_832();
                        let w_892 = 4;
                    }
                    _ => {}
                }
            }
            #[cfg(any(feature = "m0_9", feature = "m0_3"))]
            let _ = 408;
            let v_893 = func_233();
        }
        _ => {}
    }
    let _ = 871;
    #[cfg(all(feature = "m0_3", not(feature = "m0_7")))]
    let v_894 = ext_1();
    #[cfg(not(feature = "m0_8"))]
    let v_895 = func_477();
}
#[cfg(not(feature = "m0_4"))]
pub fn func_631() {
    #[cfg(not(feature = "m0_2"))]
    func_405();
}
pub fn func_896() {
    let v_897 = ext_3();
}
pub mod inner_898 {
    use super::*;
    pub const LIMIT_899: u32 = 80 + 70;
}
pub fn func_900() {
    if 0 > 10 {
        #[cfg(feature = "m0_1")]
        let v_901 = 826;
        match 3 {
            0 => {
                if 17 > 10 {
                    let v_902 = 244;
                    let v_903 = 34;
                } else {
                    let v_904 = 44 + 72;
                    let w_905 = 2;
                }
                if 6 > 10 {
                    let v_906 = 56 + 17;
                    println!("msg_907 {}", 1);
                    let w_908 = 7;
                    println!("msg_909 {}", 1);
                } else {
                    let v_910 = 38 + 66;
                    let _ = 56 + 60;
                }
                let v_911 = ext_0();
            }
            _ => {}
        }
    } else {
        let v_912 = 53 + 86;
    }
}
pub static COUNTER_913: u32 = 0;
#[cfg(not(feature = "m0_4"))]
pub const LIMIT_914: u32 = func_171();
pub fn func_915() {
    let v_916 = 384;
    println!("msg_917 {}", 1);
}
use std::collections::HashMap;
pub struct Record_918 {
    pub field_919: u32,
    pub field_920: u32,
    pub field_921: u32,
    pub field_922: u32,
}
pub fn func_366() {
    pub fn func_147() {
        let v_923 = func_80();
        func_42();
        let v_924 = func_863();
    }
}
use std::collections::HashMap;
pub fn func_421() {
    let _ = 82 + 4;
}
#[cfg(feature = "m0_3")]
pub static COUNTER_925: u32 = 0;
pub fn func_926() {
    match 2 {
        0 => {
            let _ = 95 + 45;
            let _ = 287;
            if 8 > 10 {
                ext_1();
                let v_927 = ext_0();
                ext_1();
            } else {
                #[cfg(not(feature = "m0_8"))]
                let v_928 = func_669();
                let _ = 426;
                match 0 {
                    0 => {
                        let v_929 = 54 + 69;
                        let w_930 = 7;
                    }
                    _ => {}
                }
                #[cfg(feature = "m0_10")]
                let v_931 = func_58();
            }
            #[cfg(feature = "m0_9")]
            let v_932 = 26 + 27;
        }
        _ => {}
    }
    let v_933 = func_320();
}
pub struct Record_934 {
    pub field_935: u32,
    pub field_936: u32,
}
pub enum Kind_937 {
    Variant_938,
    #[cfg(feature = "m0_9")]
    Variant_939,
    Variant_940,
}
use std::collections::HashMap;
pub fn func_941() {
    if 9 > 10 {
        let _ = 52 + 84;
        let v_942 = 43 + 13;
        match 0 {
            0 => {
                let v_943 = 77 + 61;
                let _ = 12 + 17;
                println!("msg_944 {}", 1);
            }
            _ => {}
        }
    } else {
        #[cfg(feature = "m0_0")]
        let v_945 = func_276();
        let v_946 = ext_0();
        match 1 {
            0 => {
                #[cfg(feature = "m0_3")]
                let v_947 = 83 + 56;
                pub fn func_948() {
                    let w_949 = 4;
                }
                func_585();
            }
            _ => {}
        }
    }
    println!("msg_950 {}", 1);
    match 4 {
        0 => {
            match 0 {
                0 => {
                    println!("msg_951 {}", 1);
                }
                _ => {}
            }
            match 0 {
                0 => {
                    func_288();
                    match 3 {
                        0 => {
                            let v_952 = func_585();
                            let v_953 = func_228();
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            let v_954 = ext_1();
        }
        _ => {}
    }
}
pub mod inner_955 {
    use super::*;
    pub struct Handle_956;
    impl Handle_956 {
        pub fn func_957() {
            println!("msg_958 {}", 1);
        }
    }
}
pub const LIMIT_959: u32 = ext_3();
pub struct Handle_960;
impl Handle_960 {
    #[cfg(feature = "m0_3")]
    pub fn func_961() {
        let v_962 = func_645();
    }
}
pub fn func_963() {
    let v_964 = func_529();
    println!("msg_965 {}", 1);
    let v_966 = ext_1();
    let v_967 = func_198();
}
pub static COUNTER_968: u32 = 0;
pub fn func_686() {
    #[cfg(all(feature = "m0_0", not(feature = "m0_2")))]
    let _ = 929;
    func_431();
}
pub mod inner_969 {
    use super::*;
    pub type Alias_970 = u64;
}
pub fn func_971() {
    if 0 > 10 {
        let v_972 = func_274();
    } else {
        let v_973 = ext_2();
        let v_974 = func_477();
        let _ = 96 + 21;
    }
}
#[cfg(feature = "m0_5")]
pub fn func_975() {
    println!("msg_976 {}", 1);
    let v_977 = 87 + 41;
}
pub fn func_978() {
    let v_979 = ext_3();
    let v_980 = 57 + 91;
    match 2 {
        0 => {
            if 2 > 10 {
                let v_981 = 103;
                func_709();
            } else {
                #[cfg(feature = "m0_3")]
                let v_982 = func_801();
                #[cfg(all(feature = "m0_5", not(feature = "m0_7")))]
                let v_983 = func_529();
            }
            let v_984 = func_431();
        }
        _ => {}
    }
}
#[cfg(feature = "m0_5")]
pub struct Record_985 {
    pub field_986: u32,
    pub field_987: u32,
}
pub fn func_988() {
    #[cfg(feature = "m0_9")]
    pub fn func_989() {
        #[cfg(feature = "m0_10")]
        let v_990 = ext_3();
        let v_991 = func_259();
        println!("msg_992 {}", 1);
    }
    let v_993 = 641;
    if 18 > 10 {
        if 8 > 10 {
            ext_2();
            match 2 {
                0 => {
                    let w_994 = 7;
                    let v_995 = ext_2();
                    let _ = 547;
                    let w_996 = 4;
                }
                _ => {}
            }
            pub fn func_997() {
                let v_998 = func_396();
            }
        } else {
            let v_999 = ext_3();
            let _ = 44;
            let v_1000 = func_679();
        }
        let v_1001 = 12 + 19;
        #[cfg(feature = "m0_9")]
        pub fn func_130() {
            let _ = 75 + 91;
            let v_1002 = func_556();
            let _ = 91 + 22;
        }
        #[cfg(feature = "m0_9")]
        func_332();
    } else {
        println!("msg_1003 {}", 1);
        #[cfg(feature = "m0_6")]
        let v_1004 = func_997();
        match 4 {
            0 => {
                func_286();
                if 9 > 10 {
                    let v_1005 = func_170();
                    let w_1006 = 7;
                    let w_1007 = 4;
                } else {
                    let v_1008 = ext_0();
                    let w_1009 = 3;
                    let _ = 42 + 89;
                }
                let v_1010 = func_597();
            }
            _ => {}
        }
    }
}
pub mod inner_1011 {
    use super::*;
    #[cfg(feature = "m0_0")]
    pub fn func_1012() {
        match 0 {
            0 => {
                match 3 {
                    0 => {
                        let _ = 609;
                        let v_1013 = func_252();
                    }
                    _ => {}
                }
                pub fn func_1014() {
                    let w_1015 = 2;
                    func_926();
                    let v_1016 = 95 + 99;
                    let _ = 967;
                }
                let v_1017 = ext_1();
            }
            _ => {}
        }
    }
    pub enum Kind_1018 {
        Variant_1019,
        #[cfg(not(feature = "m0_7"))]
        Variant_1020,
    }
    #[cfg(feature = "m0_6")]
    pub struct Record_1021 {
        pub field_1022: u32,
        pub field_1023: u32,
    }
}
pub fn func_1024() {
    let v_1025 = func_330();
    println!("msg_1026 {}", 1);
    if 8 > 10 {
        #[cfg(not(feature = "m0_4"))]
        func_963();
        match 0 {
            0 => {
                #[cfg(any(feature = "m0_3", feature = "m0_6", feature = "m0_5"))]
                pub fn func_1027() {
                    let v_1028 = ext_1();
                    #[cfg(feature = "m0_10")]
                    let v_1029 = func_427();
                }
            }
            _ => {}
        }
    } else {
        let v_1030 = ext_3();
    }
}
