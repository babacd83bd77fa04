pub fn func_922() {
    let _ = 977;
}
pub struct Handle_923;
#[cfg(feature = "feat19")]
impl Handle_923 {
    pub fn func_924() {
        let _ = 87 + 70;
    }
}
pub static COUNTER_925: u32 = 0;
pub static COUNTER_926: u32 = 0;
pub fn func_927() {
    if 12 > 10 {
        match 0 {
            0 => {
                if 15 > 10 {
                    let _ = 32 + 67;
                    let v_928 = func_714();
                    let w_929 = 5;
                    let _ = 553;
                } else {
                    let v_930 = func_882();
                    let w_931 = 8;
                }
                pub fn func_932() {
                    let w_933 = 3;
                    let v_934 = 133;
                    let v_935 = 32;
                    #[cfg(all(feature = "feat21", not(feature = "feat11")))]
                    let v_936 = ext_0();
                }
            }
            _ => {}
        }
        if 0 > 10 {
            #[cfg(not(feature = "feat7"))]
            let _ = 13 + 52;
            let v_937 = func_431();
            let v_938 = 82 + 99;
            let v_939 = 0 + 66;
        } else {
            #[cfg(feature = "feat19")]
            let v_940 = 619;
            #[cfg(feature = "feat12")]
            let v_941 = func_104();
        }
        #[cfg(not(feature = "feat1"))]
        pub fn func_942() {
            let v_943 = func_866();
            if 14 > 10 {
                let v_944 = ext_1();
                println!("msg_945 {}", 1);
                let v_946 = ext_2();
            } else {
                let w_947 = 1;
                let w_948 = 2;
                let w_949 = 7;
                let v_950 = 17 + 31;
            }
            let v_951 = ext_0();
            match 2 {
                0 => {
                    let w_952 = 2;
                    let w_953 = 6;
                }
                _ => {}
            }
        }
    } else {
        let v_954 = func_791();
        let v_955 = 42 + 25;
    }
    let _ = 809;
    let v_956 = 93 + 81;
    let v_957 = ext_2();
}
pub fn func_958() {
    match 0 {
        0 => {
            let v_959 = func_514();
            let _ = 823;
        }
        _ => {}
    }
    let v_960 = func_839();
    match 3 {
        0 => {
            let _ = 73 + 68;
            func_210();
            if 19 > 10 {
                let v_961 = func_189();
                match 4 {
                    0 => {
                        let v_962 = func_634();
                    }
                    _ => {}
                }
                func_396();
                #[cfg(not(feature = "feat20"))]
                let v_963 = ext_1();
            } else {
                let v_964 = func_1();
                let v_965 = func_535();
            }
        }
        _ => {}
    }
}
pub static COUNTER_966: u32 = 0;
pub mod inner_967 {
    use super::*;
    pub fn func_968() {
        let _ = 236;
        #[cfg(all(feature = "feat21", not(feature = "feat16")))]
        let v_969 = ext_1();
        let v_970 = func_355();
    }
    pub fn func_971() {
        let v_972 = 569;
        println!("msg_973 {}", 1);
        let v_974 = ext_1();
        let v_975 = ext_1();
    }
}
pub const LIMIT_976: u32 = 529;
pub type Alias_977 = u64;
pub struct Handle_978;
impl Handle_978 {
    #[cfg(feature = "feat19")]
    pub fn func_979() {
        match 2 {
            0 => {
                pub fn func_980() {
                    let _ = 250;
                    let _ = 66 + 74;
                }
                println!("msg_981 {}", 1);
                println!("msg_982 {}", 1);
            }
            _ => {}
        }
        let _ = 35 + 6;
        match 0 {
            0 => {
                let v_983 = 68;
                println!("msg_984 {}", 1);
            }
            _ => {}
        }
        if 16 > 10 {
            if 9 > 10 {
                let v_985 = ext_1();
                let v_986 = 87 + 94;
                let w_987 = 4;
                #[cfg(any(feature = "feat23", feature = "feat23", feature = "feat23"))]
                let v_988 = 544;
            } else {
                let v_989 = func_468();
                let w_990 = 2;
            }
            let v_991 = 73 + 87;
            func_274();
        } else {
            match 1 {
                0 => {
                    println!("msg_992 {}", 1);
                    let w_993 = 3;
                    let v_994 = ext_1();
                }
                _ => {}
            }
            func_668();
            #[cfg(feature = "feat22")]
            let _ = 53 + 2;
            match 2 {
                0 => {
                    let v_995 = 552;
                    func_49();
                }
                _ => {}
            }
        }
    }
    pub fn func_996() {
        let v_997 = func_862();
    }
}
pub enum Kind_998 {
    Variant_999,
    Variant_1000,
    Variant_1001,
    Variant_1002,
}
