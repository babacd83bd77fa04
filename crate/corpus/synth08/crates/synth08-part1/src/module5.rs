#[cfg(feature = "m1_8")]
pub fn func_878() {
    func_42();
    if 14 > 10 {
        let v_879 = ext_0();
        let v_880 = ext_0();
        let v_881 = ext_1();
        pub fn func_882() {
            func_42();
        }
    } else {
        pub fn func_621() {
            match 4 {
                0 => {
                    let v_883 = 95 + 1;
                    let v_884 = 50;
                    let _ = 2 + 91;
                }
                _ => {}
            }
            match 0 {
                0 => {
                    let v_885 = 95;
                    let v_886 = ext_2();
                }
                _ => {}
            }
            println!("msg_887 {}", 1);
            let v_888 = ext_0();
        }
        let v_889 = func_761();
    }
    match 0 {
        0 => {
            let v_890 = ext_2();
            func_770();
        }
        _ => {}
    }
}
pub enum Kind_891 {
    Variant_892,
    Variant_893,
    #[cfg(feature = "m1_4")]
    Variant_894,
}
pub struct Handle_895;
impl Handle_895 {
    pub fn func_896() {
        let v_897 = 0 + 42;
    }
    pub fn func_898() {
        let v_899 = func_822();
        #[cfg(not(feature = "m1_0"))]
        let _ = 5 + 32;
        let v_900 = ext_3();
        let v_901 = 98 + 76;
    }
}
pub struct Record_902 {
    pub field_903: u32,
    #[cfg(feature = "m1_7")]
    pub field_904: u32,
    pub field_905: u32,
}
pub fn func_906() {
    let v_907 = 78 + 21;
    println!("msg_908 {}", 1);
    if 2 > 10 {
        match 2 {
            0 => {
                pub fn func_909() {
                    #[cfg(feature = "m1_2")]
                    let v_910 = func_520();
                }
                pub fn func_911() {
                    let v_912 = 53 + 13;
                }
            }
            _ => {}
        }
        pub fn func_913() {
            let _ = 54 + 36;
            println!("msg_914 {}", 1);
            let v_915 = func_127();
            pub fn func_769() {
                let v_916 = 306;
            }
        }
        let _ = 98 + 58;
        println!("msg_917 {}", 1);
    } else {
        #[cfg(feature = "m1_1")]
        let v_918 = 65 + 7;
        let _ = 977;
        if 1 > 10 {
            let v_919 = ext_0();
            match 0 {
                0 => {
                    let w_920 = 2;
                    let w_921 = 4;
                    let w_922 = 2;
                }
                _ => {}
            }
            match 0 {
                0 => {
                    println!("msg_923 {}", 1);
                    func_721();
                }
                _ => {}
            }
        } else {
            ext_0();
            #[cfg(feature = "m1_6")]
            let v_924 = 56 + 69;
            match 4 {
                0 => {
                    let v_925 = ext_1();
                    func_796();
                    let _ = 807;
                }
                _ => {}
            }
            let v_926 = func_761();
        }
        let v_927 = 92 + 85;
    }
    #[cfg(any(feature = "m1_6", feature = "m1_4"))]
    pub fn func_552() {
        let _ = 67 + 33;
        ext_3();
        #[cfg(any(feature = "m1_8", feature = "m1_8", feature = "m1_7"))]
        let v_928 = func_730();
    }
}
#[cfg(feature = "m1_7")]
pub mod inner_929 {
    use super::*;
    use std::collections::HashMap;
    pub type Alias_930 = u64;
}
#[cfg(not(feature = "m1_0"))]
pub static COUNTER_931: u32 = 0;
pub enum Kind_932 {
    Variant_933,
    Variant_934,
}
#[cfg(any(feature = "m1_2", feature = "m1_7", feature = "m1_7"))]
use std::collections::HashMap;
pub type Alias_935 = u64;
pub fn func_936() {
    let v_937 = 42;
    match 0 {
        0 => {
            ext_2();
            #[cfg(not(feature = "m1_0"))]
            let _ = 900;
            func_780();
            let _ = 774;
        }
        _ => {}
    }
}
pub fn func_646() {
    let v_938 = 175;
    println!("msg_939 {}", 1);
    match 3 {
        0 => {
            func_639();
            pub fn func_940() {
                println!("msg_941 {}", 1);
                let v_942 = 894;
            }
        }
        _ => {}
    }
}
#[cfg(feature = "m1_4")]
pub fn func_536() {
    let v_943 = func_567();
    match 0 {
        0 => {
            match 4 {
                0 => {
                    let v_944 = func_844();
                }
                _ => {}
            }
            #[cfg(not(feature = "m1_3"))]
            func_17();
            println!("msg_945 {}", 1);
        }
        _ => {}
    }
}
pub struct Record_946 {
    pub field_947: u32,
    pub field_948: u32,
    pub field_949: u32,
}
pub const LIMIT_950: u32 = 80 + 76;
pub mod inner_951 {
    use super::*;
    pub const LIMIT_952: u32 = func_276();
}
pub fn func_953() {
    match 0 {
        0 => {
            println!("msg_954 {}", 1);
            println!("msg_955 {}", 1);
            if 5 > 10 {
                let v_956 = func_122();
            } else {
                pub fn func_957() {
                    let v_958 = 90 + 59;
                    #[cfg(feature = "m1_6")]
                    let v_959 = func_801();
                    let _ = 79 + 73;
                }
                let _ = 43 + 1;
                #[cfg(feature = "m1_4")]
                func_79();
                pub fn func_104() {
                    println!("msg_960 {}", 1);
                    let v_961 = ext_1();
                }
            }
        }
        _ => {}
    }
    println!("msg_962 {}", 1);
}
use std::collections::HashMap;
pub const LIMIT_963: u32 = func_309();
pub struct Record_964 {
    pub field_965: u32,
    pub field_966: u32,
    pub field_967: u32,
}
pub const LIMIT_968: u32 = ext_1();
pub type Alias_969 = u64;
#[cfg(not(feature = "m1_3"))]
pub fn func_970() {
    let v_971 = func_309();
}
#[cfg(feature = "m1_1")]
pub fn func_972() {
    ext_2();
    let v_973 = 906;
    match 4 {
        0 => {
            #[cfg(feature = "m1_4")]
            let v_974 = 39 + 36;
        }
        _ => {}
    }
    match 2 {
        0 => {
            let v_975 = ext_3();
            let v_976 = 37 + 39;
        }
        _ => {}
    }
}
pub const LIMIT_977: u32 = 10 + 93;
pub struct Handle_978;
impl Handle_978 {
    #[cfg(all(feature = "m1_7", not(feature = "m1_5")))]
    pub fn func_979() {
        let v_980 = func_839();
        let v_981 = 539;
        match 0 {
            0 => {
                func_508();
                #[cfg(not(feature = "m1_3"))]
                let _ = 839;
            }
            _ => {}
        }
        ext_3();
    }
}
pub mod inner_982 {
    use super::*;
    #[cfg(feature = "m1_1")]
    pub struct Record_983 {
        pub field_984: u32,
    }
}
pub struct Handle_985;
impl Handle_985 {
    pub fn func_986() {
        let v_987 = func_462();
        match 4 {
            0 => {
                #[cfg(feature = "m1_8")]
                let v_988 = func_68();
                let v_989 = 302;
                let v_990 = ext_2();
                if 4 > 10 {
                    #[cfg(any(feature = "m1_8", feature = "m1_4"))]
                    let v_991 = 65 + 73;
                    func_311();
                    #[cfg(feature = "m1_6")]
                    let _ = 970;
                } else {
                    let w_992 = 5;
                }
            }
            _ => {}
        }
        #[cfg(feature = "m1_7")]
        pub fn func_187() {
            #[cfg(feature = "m1_8")]
            let v_993 = 786;
            if 13 > 10 {
                let v_994 = func_796();
                let v_995 = func_730();
                let w_996 = 6;
                let w_997 = 6;
            } else {
                #[cfg(feature = "m1_8")]
                let _ = 75 + 54;
                let v_998 = 72;
                let w_999 = 1;
                let v_1000 = func_234();
            }
        }
    }
}
pub static COUNTER_1001: u32 = 0;
pub mod inner_1002 {
    use super::*;
    pub enum Kind_1003 {
        Variant_1004,
    }
    pub type Alias_1005 = u64;
}
pub fn func_1006() {
    #[cfg(feature = "m1_7")]
    let v_1007 = ext_1();
    func_689();
    let v_1008 = func_796();
    if 13 > 10 {
        let v_1009 = func_233();
    } else {
        println!("msg_1010 {}", 1);
        match 2 {
            0 => {
                println!("msg_1011 {}", 1);
                pub fn func_1012() {
                    func_290();
                    let v_1013 = 86 + 52;
                    let w_1014 = 6;
                }
                println!("msg_1015 {}", 1);
                let v_1016 = func_394();
            }
            _ => {}
        }
        #[cfg(feature = "m1_4")]
        ext_3();
        let v_1017 = 26 + 24;
    }
}
#[cfg(not(feature = "m1_10"))]
pub fn func_550() {
    let v_1018 = 755;
    func_224();
}
pub type Alias_1019 = u64;
pub fn func_1020() {
    ext_1();
    println!("msg_1021 {}", 1);
    pub fn func_1022() {
        pub fn func_1023() {
            match 2 {
                0 => {
                    #[cfg(feature = "m1_7")]
                    let v_1024 = ext_1();
                }
                _ => {}
            }
        }
        let v_1025 = func_122();
        let _ = 28 + 11;
        let v_1026 = func_311();
    }
}
