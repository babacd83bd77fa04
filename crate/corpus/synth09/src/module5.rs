pub enum Kind_884 {
    Variant_885,
    Variant_886,
    #[cfg(feature = "feat4")]
    Variant_887,
}
pub struct Handle_888;
impl Handle_888 {
    pub fn func_889() {
        #[cfg(feature = "feat16")]
        let v_890 = 19 + 44;
        let v_891 = 42 + 36;
    }
}
pub fn func_892() {
    func_305();
    let v_893 = 788;
    let v_894 = 169;
}
#[cfg(feature = "feat28")]
pub mod inner_895 {
    use super::*;
    #[cfg(feature = "feat29")]
    pub fn func_896() {
        let v_897 = 217;
        let v_898 = func_216();
        pub fn func_899() {
            pub fn func_900() {
                let _ = 72 + 83;
                let _ = 93 + 8;
                let v_901 = 405;
                println!("msg_902 {}", 1);
            }
        }
    }
    pub type Alias_903 = u64;
}
pub fn func_904() {
    let v_905 = 880;
    println!("msg_906 {}", 1);
    #[cfg(feature = "feat29")]
    let v_907 = 603;
}
pub fn func_908() {
    func_156();
    func_252();
    if 16 > 10 {
        let _ = 132;
        #[cfg(feature = "feat6")]
        let v_909 = ext_2();
    } else {
        let v_910 = func_465();
        let v_911 = 29 + 99;
    }
}
pub enum Kind_912 {
    Variant_913,
    Variant_914,
    #[cfg(feature = "feat5")]
    Variant_915,
    #[cfg(feature = "feat9")]
    Variant_916,
}
#[cfg(feature = "feat22")]
pub enum Kind_917 {
    #[cfg(feature = "feat27")]
    Variant_918,
}
pub enum Kind_919 {
    Variant_920,
    #[cfg(feature = "feat1")]
    Variant_921,
    Variant_922,
}
use std::collections::HashMap;
use std::collections::HashMap;
pub mod inner_923 {
    use super::*;
    pub enum Kind_924 {
        Variant_925,
    }
    pub fn func_926() {
        #[cfg(feature = "feat14")]
        let v_927 = 61 + 65;
        match 2 {
            0 => {
                println!("msg_928 {}", 1);
                let v_929 = 92 + 34;
                #[cfg(any(feature = "feat5", feature = "feat20"))]
                let v_930 = 461;
            }
            _ => {}
        }
        #[cfg(feature = "feat16")]
        let v_931 = ext_0();
        func_372();
    }
}
#[cfg(any(feature = "feat19", feature = "feat4", feature = "feat24"))]
pub const LIMIT_932: u32 = 7 + 62;
#[cfg(feature = "feat9")]
pub type Alias_933 = u64;
use std::collections::HashMap;
#[cfg(feature = "feat1")]
use std::collections::HashMap;
#[cfg(feature = "feat19")]
pub fn func_934() {
    let v_935 = ext_3();
    println!("msg_936 {}", 1);
    let v_937 = func_611();
    println!("msg_938 {}", 1);
}
use std::collections::HashMap;
pub fn func_939() {
    pub fn func_940() {
        #[cfg(feature = "feat9")]
        let _ = 91 + 92;
    }
    func_720();
    match 3 {
        0 => {
            #[cfg(any(feature = "feat14", feature = "feat11"))]
            pub fn func_941() {
                #[cfg(any(feature = "feat27", feature = "feat16", feature = "feat19"))]
                ext_3();
                let v_942 = func_646();
            }
            let v_943 = 922;
            if 0 > 10 {
                println!("msg_944 {}", 1);
            } else {
                if 7 > 10 {
                    let w_945 = 2;
                } else {
                    let v_946 = func_709();
                    let v_947 = 593;
                }
            }
            let _ = 85 + 86;
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub fn func_948() {
    match 3 {
        0 => {
            let v_949 = 80 + 66;
            ext_1();
        }
        _ => {}
    }
    match 1 {
        0 => {
            if 0 > 10 {
                let v_950 = ext_3();
            } else {
                println!("msg_951 {}", 1);
                func_900();
                #[cfg(feature = "feat9")]
                let _ = 94 + 36;
            }
            ext_2();
            let v_952 = 72 + 49;
        }
        _ => {}
    }
}
#[cfg(feature = "feat20")]
pub fn func_953() {
    let v_954 = 36 + 26;
}
pub fn func_955() {
    println!("msg_956 {}", 1);
    let v_957 = 759;
}
pub struct Record_958 {
    pub field_959: u32,
}
#[cfg(not(feature = "feat10"))]
pub fn func_78() {
    func_576();
    let v_960 = func_101();
    if 19 > 10 {
        pub fn func_961() {
            let _ = 15 + 81;
            func_760();
        }
        pub fn func_962() {
            func_566();
        }
    } else {
        println!("msg_963 {}", 1);
    }
    let _ = 711;
}
pub struct Handle_964;
impl Handle_964 {
    pub fn func_965() {
        func_939();
        if 15 > 10 {
            #[cfg(feature = "feat11")]
            let v_966 = func_934();
            if 14 > 10 {
                let w_967 = 4;
                let w_968 = 1;
            } else {
                func_208();
                let v_969 = 21 + 0;
                let w_970 = 6;
            }
            let v_971 = 310;
        } else {
            println!("msg_972 {}", 1);
            match 1 {
                0 => {
                    let w_973 = 0;
                }
                _ => {}
            }
        }
    }
    pub fn func_974() {
        pub fn func_579() {
            println!("msg_975 {}", 1);
            match 4 {
                0 => {
                    let v_976 = func_646();
                    let v_977 = func_953();
                    let v_978 = 761;
                }
                _ => {}
            }
            func_208();
        }
    }
}
pub const LIMIT_979: u32 = func_486();
#[cfg(all(feature = "feat20", not(feature = "feat25")))]
pub static COUNTER_980: u32 = 0;
pub struct Handle_981;
impl Handle_981 {
    pub fn func_982() {
        #[cfg(feature = "feat19")]
        let v_983 = 488;
    }
    #[cfg(any(feature = "feat27", feature = "feat8", feature = "feat22"))]
    pub fn func_984() {
        let v_985 = func_607();
        #[cfg(feature = "feat29")]
        let v_986 = ext_3();
        #[cfg(all(feature = "feat29", not(feature = "feat2")))]
        func_215();
    }
}
pub fn func_987() {
    pub fn func_988() {
        #[cfg(any(feature = "feat20", feature = "feat16", feature = "feat22"))]
        pub fn func_365() {
            let _ = 862;
        }
    }
    ext_3();
    if 16 > 10 {
        let v_989 = func_566();
        match 4 {
            0 => {
                ext_0();
            }
            _ => {}
        }
        match 0 {
            0 => {
                #[cfg(not(feature = "feat26"))]
                let v_990 = 74 + 48;
            }
            _ => {}
        }
        let v_991 = 212;
    } else {
        func_471();
    }
    if 5 > 10 {
        let v_992 = 654;
        match 4 {
            0 => {
                let v_993 = func_607();
                println!("msg_994 {}", 1);
                let v_995 = 58 + 55;
            }
            _ => {}
        }
        let v_996 = func_298();
    } else {
        let v_997 = func_872();
        ext_3();
        let v_998 = func_759();
        match 1 {
            0 => {
                let v_999 = 43 + 24;
                let v_1000 = 96 + 40;
            }
            _ => {}
        }
    }
}
pub struct Handle_1001;
impl Handle_1001 {
    #[cfg(feature = "feat3")]
    pub fn func_1002() {
        pub fn func_414() {
            #[cfg(any(feature = "feat9", feature = "feat24", feature = "feat22"))]
            let v_1003 = 8 + 13;
            let v_1004 = 659;
            let v_1005 = 56 + 69;
        }
        let _ = 508;
    }
}
pub type Alias_1006 = u64;
pub fn func_965() {
    #[cfg(feature = "feat11")]
    pub fn func_1007() {
        let v_1008 = 56 + 8;
        let v_1009 = func_644();
        func_857();
    }
    let v_1010 = 72 + 72;
    #[cfg(all(feature = "feat14", not(feature = "feat12")))]
    let v_1011 = 881;
    match 1 {
        0 => {
            pub fn func_1012() {
                if 3 > 10 {
                    let w_1013 = 7;
                    let w_1014 = 7;
                    #[cfg(any(feature = "feat9", feature = "feat20"))]
                    let v_1015 = ext_1();
                } else {
                    let v_1016 = func_474();
                    let w_1017 = 6;
                    let _ = 93 + 28;
                    let v_1018 = 670;
                }
            }
        }
        _ => {}
    }
}
pub type Alias_1019 = u64;
pub fn func_1020() {
    let v_1021 = 771;
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_1022() {
    let v_1023 = func_124();
    let v_1024 = func_760();
}
pub static COUNTER_1025: u32 = 0;
use std::collections::HashMap;
pub static COUNTER_1026: u32 = 0;
pub struct Record_1027 {
    pub field_1028: u32,
    #[cfg(not(feature = "feat15"))]
    pub field_1029: u32,
}
pub mod inner_1030 {
    use super::*;
    pub mod inner_1031 {
        use super::*;
        pub struct Handle_1032;
        impl Handle_1032 {
            pub fn func_392() {
                #[cfg(feature = "feat27")]
                let v_1033 = 98 + 6;
                func_814();
                let v_1034 = ext_3();
            }
        }
    }
}
pub static COUNTER_1035: u32 = 0;
pub type Alias_1036 = u64;
use std::collections::HashMap;
pub fn func_1037() {
    if 10 > 10 {
        let _ = 615;
        pub fn func_1038() {
            match 1 {
                0 => {
                    let _ = 862;
                    let v_1039 = 349;
                }
                _ => {}
            }
        }
        match 4 {
            0 => {
                let _ = 63 + 89;
                #[cfg(any(feature = "feat1", feature = "feat29", feature = "feat4"))]
                let v_1040 = func_82();
                let v_1041 = 98 + 37;
                println!("msg_1042 {}", 1);
            }
            _ => {}
        }
        let v_1043 = func_934();
    } else {
        #[cfg(feature = "feat22")]
        let v_1044 = ext_3();
        let v_1045 = func_850();
    }
    #[cfg(not(feature = "feat25"))]
    let v_1046 = func_732();
    ext_3();
    if 17 > 10 {
        let v_1047 = 17 + 42;
    } else {
        let v_1048 = ext_2();
        #[cfg(feature = "feat6")]
        let v_1049 = 98 + 7;
        println!("msg_1050 {}", 1);
    }
}
