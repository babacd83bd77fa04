pub fn func_917() {
    let v_918 = ext_0();
    ext_0();
    let v_919 = ext_2();
}
pub fn func_920() {
    let _ = 929;
    #[cfg(feature = "feat5")]
    func_61();
}
pub struct Record_921 {
    pub field_922: u32,
    #[cfg(any(feature = "feat7", feature = "feat4", feature = "feat10"))]
    pub field_923: u32,
    pub field_924: u32,
    pub field_925: u32,
}
pub fn func_926() {
    println!("msg_927 {}", 1);
    func_116();
    let _ = 16 + 44;
}
pub fn func_928() {
    #[cfg(all(feature = "feat2", not(feature = "feat11")))]
    let _ = 565;
    match 0 {
        0 => {
            let v_929 = 28 + 24;
        }
        _ => {}
    }
    let _ = 2 + 31;
}
pub const LIMIT_930: u32 = func_700();
pub fn func_931() {
    match 1 {
        0 => {
            println!("msg_932 {}", 1);
            #[cfg(feature = "feat4")]
            pub fn func_933() {
                let v_934 = 111;
                let v_935 = func_143();
                #[cfg(any(feature = "feat15", feature = "feat16"))]
                pub fn func_936() {
                    let _ = 84 + 39;
                    func_787();
                    let v_937 = 67 + 54;
                    let v_938 = 73 + 77;
                }
            }
            let v_939 = func_541();
        }
        _ => {}
    }
    if 2 > 10 {
        #[cfg(all(feature = "feat12", not(feature = "feat11")))]
        let v_940 = func_499();
        #[cfg(all(feature = "feat12", not(feature = "feat3")))]
        let v_941 = func_600();
        pub fn func_942() {
            let v_943 = func_672();
        }
        match 0 {
            0 => {
                if 3 > 10 {
                    let w_944 = 8;
                    let v_945 = 671;
                } else {
                    let v_946 = func_119();
                    println!("msg_947 {}", 1);
                    let w_948 = 3;
                    let v_949 = 301;
                }
                let v_950 = 24 + 76;
            }
            _ => {}
        }
    } else {
        #[cfg(not(feature = "feat11"))]
        let v_951 = func_320();
        #[cfg(feature = "feat14")]
        let v_952 = 122;
    }
}
pub fn func_953() {
    pub fn func_954() {
        #[cfg(feature = "feat14")]
        let v_955 = ext_0();
        #[cfg(feature = "feat12")]
        let _ = 68 + 70;
    }
    let v_956 = 35 + 14;
}
pub mod inner_957 {
    use super::*;
    pub struct Handle_958;
    impl Handle_958 {
        pub fn func_959() {
            let _ = 399;
            let v_960 = 1 + 22;
            if 14 > 10 {
                #[cfg(any(feature = "feat10", feature = "feat14", feature = "feat16"))]
                ext_2();
                let v_961 = 5 + 94;
                let v_962 = func_560();
                #[cfg(not(feature = "feat3"))]
                let _ = 624;
            } else {
                let w_963 = 2;
                println!("msg_964 {}", 1);
            }
        }
        pub fn func_965() {
            func_338();
        }
    }
    pub static COUNTER_966: u32 = 0;
}
#[cfg(any(feature = "feat9", feature = "feat16", feature = "feat14"))]
pub fn func_967() {
    let v_968 = 15;
}
pub mod inner_969 {
    use super::*;
    pub fn func_970() {
        let v_971 = func_585();
        let v_972 = 570;
        if 10 > 10 {
            #[cfg(feature = "feat7")]
            let v_973 = 683;
            ext_1();
            let v_974 = ext_3();
        } else {
            let v_975 = 385;
            let _ = 76 + 86;
        }
    }
    pub mod inner_976 {
        use super::*;
        pub type Alias_977 = u64;
        pub fn func_978() {
            let v_979 = func_721();
            let v_980 = func_1();
            func_273();
        }
    }
}
pub mod inner_981 {
    use super::*;
    pub fn func_982() {
        #[cfg(feature = "feat13")]
        let _ = 176;
        #[cfg(feature = "feat2")]
        let _ = 923;
        #[cfg(not(feature = "feat11"))]
        let v_983 = 705;
        let _ = 11 + 23;
    }
    pub mod inner_984 {
        use super::*;
        pub fn func_124() {
            let v_985 = 933;
            if 12 > 10 {
                let v_986 = func_879();
                let w_987 = 2;
                let v_988 = 333;
            } else {
                #[cfg(not(feature = "feat3"))]
                func_860();
                ext_3();
                let w_989 = 6;
            }
            let _ = 79 + 35;
        }
        pub const LIMIT_990: u32 = func_330();
        pub fn func_752() {
            let v_991 = func_648();
            if 2 > 10 {
                println!("msg_992 {}", 1);
            } else {
                let v_993 = 38;
                let v_994 = 31 + 51;
            }
            let _ = 288;
            let v_995 = func_107();
        }
    }
    pub fn func_996() {
        let _ = 12 + 59;
    }
}
pub struct Handle_997;
impl Handle_997 {
    #[cfg(feature = "feat12")]
    pub fn func_998() {
        match 4 {
            0 => {
                match 1 {
                    0 => {
                        let v_999 = 17 + 24;
                        let v_1000 = 67 + 50;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        func_719();
    }
}
pub fn func_1001() {
    #[cfg(feature = "feat12")]
    let v_1002 = func_143();
    ext_2();
    let v_1003 = func_763();
}
pub fn func_1004() {
    println!("msg_1005 {}", 1);
    let v_1006 = 31 + 49;
    let v_1007 = 586;
}
pub fn func_1008() {
    let v_1009 = ext_2();
}
pub struct Handle_1010;
impl Handle_1010 {
    pub fn func_1011() {
        let v_1012 = func_167();
        println!("msg_1013 {}", 1);
        let v_1014 = func_256();
        #[cfg(feature = "feat10")]
        func_201();
    }
    pub fn func_119() {
        if 8 > 10 {
            let v_1015 = func_9();
            let v_1016 = func_1001();
        } else {
            println!("msg_1017 {}", 1);
            println!("msg_1018 {}", 1);
            println!("msg_1019 {}", 1);
            println!("msg_1020 {}", 1);
        }
        let v_1021 = func_510();
        match 4 {
            0 => {
                let v_1022 = 733;
                let v_1023 = ext_1();
                let v_1024 = func_400();
            }
            _ => {}
        }
        func_600();
    }
}
pub static COUNTER_1025: u32 = 0;
pub fn func_1026() {
    func_931();
    match 2 {
        0 => {
            println!("msg_1027 {}", 1);
            let v_1028 = 89 + 13;
            #[cfg(feature = "feat10")]
            let v_1029 = func_802();
        }
        _ => {}
    }
    let v_1030 = 61;
    pub fn func_1031() {
        #[cfg(feature = "feat10")]
        let v_1032 = 943;
        let v_1033 = 129;
    }
}
pub static COUNTER_1034: u32 = 0;
pub fn func_1035() {
    let v_1036 = func_575();
    let v_1037 = func_48();
    println!("msg_1038 {}", 1);
}
pub struct Record_1039 {
    pub field_1040: u32,
}
pub fn func_1041() {
    if 16 > 10 {
        let v_1042 = 49 + 46;
        #[cfg(feature = "feat8")]
        let v_1043 = ext_1();
        pub fn func_1044() {
            pub fn func_1045() {
                func_996();
                let v_1046 = 527;
            }
        }
    } else {
        #[cfg(feature = "feat10")]
        pub fn func_1047() {
            let v_1048 = func_782();
        }
        func_920();
        let _ = 55 + 28;
        #[cfg(feature = "feat7")]
        let v_1049 = ext_0();
    }
}
pub enum Kind_1050 {
    Variant_1051,
    Variant_1052,
}
pub struct Handle_1053;
impl Handle_1053 {
    pub fn func_1031() {
        #[cfg(feature = "feat2")]
        let v_1054 = func_763();
        let v_1055 = 43;
        pub fn func_1056() {
            #[cfg(any(feature = "feat2", feature = "feat1", feature = "feat1"))]
            func_600();
            match 3 {
                0 => {
                    let v_1057 = func_499();
                }
                _ => {}
            }
            if 0 > 10 {
                func_701();
                #[cfg(all(feature = "feat12", not(feature = "feat11")))]
                let v_1058 = 11 + 0;
                #[cfg(not(feature = "feat11"))]
                ext_0();
                println!("msg_1059 {}", 1);
            } else {
                let v_1060 = ext_2();
                let w_1061 = 8;
                let v_1062 = 14 + 53;
                let w_1063 = 2;
            }
        }
        println!("msg_1064 {}", 1);
    }
}
pub fn func_861() {
    let v_1065 = func_967();
    let _ = 358;
    let v_1066 = 73 + 99;
}
pub struct Record_1067 {
    pub field_1068: u32,
    pub field_1069: u32,
}
pub mod inner_1070 {
    use super::*;
    pub fn func_1071() {
        #[cfg(feature = "feat16")]
        pub fn func_1072() {
            func_408();
            let _ = 20 + 61;
            println!("msg_1073 {}", 1);
        }
        #[cfg(any(feature = "feat2", feature = "feat14", feature = "feat10"))]
        let v_1074 = 80 + 14;
    }
}
pub fn func_1075() {
    func_719();
    let v_1076 = 958;
    match 1 {
        0 => {
            let v_1077 = func_546();
        }
        _ => {}
    }
}
