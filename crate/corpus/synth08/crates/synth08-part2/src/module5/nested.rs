pub const LIMIT_945: u32 = func_735();
pub struct Handle_946;
impl Handle_946 {
    pub fn func_947() {
        let v_948 = func_733();
    }
}
pub struct Record_949 {
    pub field_950: u32,
    pub field_951: u32,
}
pub fn func_188() {
    let v_952 = ext_0();
    func_664();
    pub fn func_953() {
        let v_954 = 998;
        if 8 > 10 {
            println!("msg_955 {}", 1);
            ext_2();
            println!("msg_956 {}", 1);
        } else {
            if 3 > 10 {
                let w_957 = 2;
                let _ = 50 + 16;
            } else {
                let w_958 = 3;
                println!("msg_959 {}", 1);
                let w_960 = 1;
            }
        }
    }
}
pub fn func_961() {
    match 4 {
        0 => {
            match 0 {
                0 => {
                    println!("msg_962 {}", 1);
                }
                _ => {}
            }
            let v_963 = func_824();
            let v_964 = 272;
        }
        _ => {}
    }
    let v_965 = 56;
}
pub enum Kind_966 {
    Variant_967,
    Variant_968,
}
pub fn func_969() {
    ext_1();
}
pub type Alias_970 = u64;
pub fn func_971() {
    let v_972 = 63 + 55;
}
pub struct Handle_973;
impl Handle_973 {
    pub fn func_974() {
        let v_975 = ext_3();
        let v_976 = 14 + 19;
        let v_977 = 36 + 47;
    }
}
pub fn func_978() {
    let v_979 = func_546();
    let v_980 = ext_0();
    println!("msg_981 {}", 1);
}
pub fn func_982() {
    println!("msg_983 {}", 1);
    let v_984 = func_104();
    let v_985 = func_33();
}
pub struct Record_986 {
    pub field_987: u32,
}
pub struct Handle_988;
impl Handle_988 {
    pub fn func_971() {
        func_889();
        pub fn func_989() {
            let v_990 = func_821();
            let v_991 = func_896();
            func_475();
        }
    }
}
pub type Alias_992 = u64;
pub fn func_993() {
    let v_994 = func_177();
    let v_995 = func_378();
    match 3 {
        0 => {
            let v_996 = 690;
            println!("msg_997 {}", 1);
            println!("msg_998 {}", 1);
            if 11 > 10 {
                match 0 {
                    0 => {
                        println!("msg_999 {}", 1);
                    }
                    _ => {}
                }
                let v_1000 = 599;
            } else {
                func_733();
                #[cfg(not(feature = "m2_10"))]
                let _ = 306;
                func_365();
            }
        }
        _ => {}
    }
}
pub fn func_1001() {
    if 19 > 10 {
        match 1 {
            0 => {
                let v_1002 = ext_0();
                let v_1003 = 80 + 46;
            }
            _ => {}
        }
    } else {
        let v_1004 = 526;
    }
    if 8 > 10 {
        let v_1005 = 253;
    } else {
        pub fn func_1006() {
            let v_1007 = ext_3();
            let v_1008 = func_889();
            match 4 {
                0 => {
                    let v_1009 = func_91();
                    let w_1010 = 0;
                    let w_1011 = 4;
                    let w_1012 = 2;
                }
                _ => {}
            }
            let v_1013 = 193;
        }
        let _ = 71 + 50;
        func_547();
        func_862();
    }
    let v_1014 = func_982();
}
pub fn func_1015() {
    println!("msg_1016 {}", 1);
    ext_3();
}
pub struct Handle_1017;
impl Handle_1017 {
    #[cfg(not(feature = "m2_8"))]
    pub fn func_1018() {
        let v_1019 = 7 + 80;
        func_291();
    }
}
pub enum Kind_1020 {
    Variant_1021,
}
pub fn func_1022() {
    let v_1023 = 693;
    let v_1024 = 83 + 8;
    pub fn func_1025() {
        let v_1026 = ext_3();
        func_821();
        let v_1027 = 655;
        match 2 {
            0 => {
                let v_1028 = 19 + 1;
                if 9 > 10 {
                    let v_1029 = func_16();
                    let v_1030 = 61 + 30;
                    let v_1031 = 18 + 98;
                } else {
                    let w_1032 = 8;
                    let w_1033 = 0;
                    let v_1034 = 35 + 76;
                }
                println!("msg_1035 {}", 1);
                let v_1036 = ext_3();
            }
            _ => {}
        }
    }
}
pub fn func_1037() {
    pub fn func_1038() {
        let v_1039 = func_138();
        let v_1040 = ext_3();
        println!("msg_1041 {}", 1);
        let _ = 24 + 22;
    }
    let v_1042 = func_365();
}
