pub struct Handle_899;
impl Handle_899 {
    pub fn func_900() {
        let v_901 = func_506();
        ext_2();
        let v_902 = func_278();
        if 9 > 10 {
            let v_903 = func_204();
        } else {
            if 6 > 10 {
                let v_904 = ext_3();
            } else {
                let w_905 = 1;
                func_260();
            }
            println!("msg_906 {}", 1);
        }
    }
    #[cfg(all(feature = "feat3", not(feature = "feat4")))]
    pub fn func_907() {
        if 2 > 10 {
            let v_908 = func_65();
            println!("msg_909 {}", 1);
        } else {
            if 14 > 10 {
                let w_910 = 0;
                let w_911 = 5;
                let v_912 = 441;
                let v_913 = ext_3();
            } else {
                let _ = 993;
            }
        }
        let _ = 34 + 53;
        let _ = 69;
    }
}
pub fn func_914() {
    let _ = 180;
    if 16 > 10 {
        let v_915 = func_528();
    } else {
        println!("msg_916 {}", 1);
        match 2 {
            0 => {
                pub fn func_917() {
                    let w_918 = 3;
                    println!("msg_919 {}", 1);
                }
                let v_920 = 251;
                pub fn func_655() {
                    let v_921 = func_852();
                }
                #[cfg(feature = "feat18")]
                let _ = 440;
            }
            _ => {}
        }
        let v_922 = ext_1();
    }
    pub fn func_923() {
        let v_924 = func_425();
    }
    pub fn func_925() {
        let v_926 = 75 + 70;
        #[cfg(feature = "feat13")]
        let v_927 = 21 + 23;
        pub fn func_928() {
            let v_929 = 46 + 56;
            #[cfg(feature = "feat0")]
            ext_0();
        }
    }
}
pub mod inner_930 {
    use super::*;
    pub fn func_931() {
        #[cfg(feature = "feat6")]
        let v_932 = 65 + 85;
        let v_933 = 54 + 10;
        #[cfg(feature = "feat6")]
        pub fn func_934() {
            println!("msg_935 {}", 1);
            println!("msg_936 {}", 1);
            if 1 > 10 {
                #[cfg(any(feature = "feat18", feature = "feat14"))]
                ext_3();
                let v_937 = 15 + 0;
                let v_938 = 95 + 90;
                let w_939 = 5;
            } else {
                let _ = 53 + 77;
                #[cfg(any(feature = "feat14", feature = "feat13", feature = "feat10"))]
                let v_940 = 880;
                let _ = 42 + 64;
                let _ = 830;
            }
        }
        #[cfg(feature = "feat14")]
        func_429();
    }
    #[cfg(not(feature = "feat4"))]
    pub static COUNTER_941: u32 = 0;
    pub fn func_942() {
        let _ = 647;
        #[cfg(feature = "feat3")]
        func_331();
        if 3 > 10 {
            let v_943 = func_487();
            let v_944 = func_405();
        } else {
            let v_945 = func_135();
            if 11 > 10 {
                let v_946 = ext_0();
                let v_947 = 17 + 45;
                ext_3();
                println!("msg_948 {}", 1);
            } else {
                let w_949 = 1;
                let v_950 = func_427();
                let w_951 = 1;
                let w_952 = 6;
            }
            pub fn func_953() {
                let v_954 = 62 + 12;
                let w_955 = 0;
                let v_956 = func_717();
            }
        }
        #[cfg(all(feature = "feat8", not(feature = "feat2")))]
        let v_957 = 936;
    }
}
pub struct Record_958 {
    pub field_959: u32,
    pub field_960: u32,
    pub field_961: u32,
    pub field_962: u32,
}
pub static COUNTER_963: u32 = 0;
pub type Alias_964 = u64;
pub fn func_965() {
    #[cfg(feature = "feat14")]
    pub fn func_966() {
        let v_967 = 78 + 21;
    }
    #[cfg(feature = "feat8")]
    pub fn func_968() {
        let v_969 = 114;
        let v_970 = func_142();
    }
    println!("msg_971 {}", 1);
    let v_972 = 45 + 76;
}
#[cfg(feature = "feat16")]
pub mod inner_973 {
    use super::*;
    pub fn func_974() {
        #[cfg(feature = "feat17")]
        let v_975 = 5 + 82;
        func_865();
        let v_976 = 61 + 58;
    }
}
#[cfg(feature = "feat13")]
pub struct Record_977 {
    pub field_978: u32,
    pub field_979: u32,
    pub field_980: u32,
    pub field_981: u32,
}
pub fn func_982() {
    let v_983 = ext_2();
}
pub fn func_984() {
    if 11 > 10 {
        ext_3();
        let v_985 = func_420();
        let v_986 = func_118();
    } else {
        println!("msg_987 {}", 1);
        let v_988 = 635;
        if 2 > 10 {
            #[cfg(not(feature = "feat4"))]
            pub fn func_989() {
                println!("msg_990 {}", 1);
            }
            println!("msg_991 {}", 1);
            let v_992 = 402;
            let v_993 = func_637();
        } else {
            match 1 {
                0 => {
                    let v_994 = 567;
                    ext_0();
                }
                _ => {}
            }
        }
    }
    #[cfg(feature = "feat10")]
    let v_995 = func_192();
    let v_996 = 52 + 31;
    match 2 {
        0 => {
            match 3 {
                0 => {
                    if 1 > 10 {
                        let v_997 = func_192();
                        func_304();
                        let w_998 = 2;
                        let v_999 = 66 + 38;
                    } else {
                        let w_1000 = 0;
                        let w_1001 = 0;
                        let v_1002 = func_965();
                    }
                }
                _ => {}
            }
            let v_1003 = func_234();
            let v_1004 = func_830();
        }
        _ => {}
    }
}
