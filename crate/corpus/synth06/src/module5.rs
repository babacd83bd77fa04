pub fn func_845() {
    let v_846 = func_509();
    pub fn func_847() {
        pub fn func_848() {
            if 15 > 10 {
                let v_849 = 43 + 25;
                println!("msg_850 {}", 1);
            } else {
                let v_851 = 87 + 90;
                let _ = 54;
            }
        }
        if 18 > 10 {
            println!("msg_852 {}", 1);
            let v_853 = ext_0();
            let v_854 = 71 + 24;
            if 7 > 10 {
                let w_855 = 8;
                func_306();
                let w_856 = 6;
            } else {
                let v_857 = 842;
                #[cfg(feature = "feat4")]
                let v_858 = ext_0();
            }
        } else {
            let v_859 = ext_2();
            let v_860 = ext_0();
        }
        let v_861 = func_798();
    }
}
pub fn func_862() {
    if 7 > 10 {
        pub fn func_863() {
            if 16 > 10 {
                println!("msg_864 {}", 1);
            } else {
                #[cfg(feature = "feat12")]
                func_404();
                println!("msg_865 {}", 1);
            }
            pub fn func_866() {
                let v_867 = ext_2();
                let w_868 = 1;
                let w_869 = 6;
                let _ = 792;
            }
        }
    } else {
        let _ = 97;
        println!("msg_870 {}", 1);
    }
    println!("msg_871 {}", 1);
}
pub fn func_872() {
    println!("msg_873 {}", 1);
    let v_874 = func_682();
    pub fn func_875() {
        #[cfg(feature = "feat5")]
        let v_876 = func_680();
        println!("msg_877 {}", 1);
        pub fn func_878() {
            #[cfg(any(feature = "feat5", feature = "feat23"))]
            pub fn func_879() {
                let v_880 = 870;
            }
        }
    }
    println!("msg_881 {}", 1);
}
pub struct Record_882 {
    pub field_883: u32,
    pub field_884: u32,
}
pub fn func_885() {
    func_361();
    let v_886 = 8;
}
pub fn func_887() {
    match 0 {
        0 => {
            let v_888 = func_878();
        }
        _ => {}
    }
    let v_889 = func_680();
    let _ = 28 + 19;
}
use std::collections::HashMap;
pub mod inner_890 {
    use super::*;
    pub fn func_891() {
        let v_892 = 801;
        if 7 > 10 {
            let v_893 = 66 + 75;
        } else {
            match 2 {
                0 => {
                    let w_894 = 8;
                    let w_895 = 7;
                    let w_896 = 3;
                    let v_897 = func_667();
                }
                _ => {}
            }
            pub fn func_898() {
                let w_899 = 7;
                #[cfg(not(feature = "feat7"))]
                let v_900 = func_545();
                let v_901 = func_609();
            }
            match 0 {
                0 => {
                    #[cfg(feature = "feat4")]
                    func_367();
                    let v_902 = 80 + 73;
                }
                _ => {}
            }
            println!("msg_903 {}", 1);
        }
    }
    #[cfg(feature = "feat21")]
    pub const LIMIT_904: u32 = func_562();
}
pub struct Handle_905;
impl Handle_905 {
    pub fn func_206() {
        pub fn func_906() {
            println!("msg_907 {}", 1);
            if 5 > 10 {
                println!("msg_908 {}", 1);
            } else {
                let v_909 = ext_0();
                let v_910 = func_692();
                func_562();
            }
            if 5 > 10 {
                let v_911 = 541;
                let v_912 = 72 + 33;
                let v_913 = ext_3();
                let v_914 = func_831();
            } else {
                let w_915 = 4;
                let v_916 = 57 + 2;
                let w_917 = 2;
            }
        }
        pub fn func_918() {
            let v_919 = func_143();
        }
        let v_920 = 941;
    }
    #[cfg(all(feature = "feat5", not(feature = "feat7")))]
    pub fn func_776() {
        let _ = 800;
        let v_921 = ext_2();
        let v_922 = ext_3();
    }
}
pub fn func_845() {
    if 7 > 10 {
        #[cfg(feature = "feat15")]
        pub fn func_923() {
            pub fn func_924() {
                #[cfg(feature = "feat23")]
                func_506();
                let w_925 = 0;
                let v_926 = func_445();
                println!("msg_927 {}", 1);
            }
            println!("msg_928 {}", 1);
            println!("msg_929 {}", 1);
            let v_930 = func_845();
        }
    } else {
        #[cfg(feature = "feat0")]
        let v_931 = 768;
    }
    println!("msg_932 {}", 1);
    #[cfg(feature = "feat19")]
    let v_933 = func_811();
    let v_934 = 485;
}
pub struct Handle_935;
impl Handle_935 {
    pub fn func_177() {
        #[cfg(feature = "feat8")]
        func_29();
        let v_936 = 54 + 15;
        #[cfg(feature = "feat21")]
        let v_937 = ext_1();
    }
    pub fn func_938() {
        pub fn func_939() {
            println!("msg_940 {}", 1);
            let v_941 = 22 + 25;
        }
        let v_942 = ext_1();
        println!("msg_943 {}", 1);
    }
}
pub fn func_944() {
    let v_945 = func_291();
}
pub fn func_946() {
    let v_947 = func_866();
    let v_948 = 571;
}
pub const LIMIT_949: u32 = func_29();
#[cfg(feature = "feat6")]
pub fn func_318() {
    println!("msg_950 {}", 1);
    println!("msg_951 {}", 1);
    pub fn func_373() {
        let v_952 = func_692();
        let v_953 = 36 + 10;
    }
    let v_954 = 963;
}
pub fn func_955() {
    pub fn func_956() {
        println!("msg_957 {}", 1);
        let v_958 = ext_3();
        if 6 > 10 {
            #[cfg(any(feature = "feat8", feature = "feat21", feature = "feat21"))]
            let v_959 = ext_0();
            println!("msg_960 {}", 1);
            match 3 {
                0 => {
                    let w_961 = 3;
                    func_469();
                }
                _ => {}
            }
            match 4 {
                0 => {
                    let w_962 = 2;
                    let w_963 = 6;
                    let w_964 = 0;
                    let v_965 = func_208();
                }
                _ => {}
            }
        } else {
            let v_966 = 66 + 69;
        }
    }
    if 4 > 10 {
        if 9 > 10 {
            let v_967 = 94 + 8;
            if 12 > 10 {
                #[cfg(any(feature = "feat16", feature = "feat23"))]
                let v_968 = 12 + 70;
                let w_969 = 3;
                let w_970 = 3;
            } else {
                let v_971 = ext_0();
                let v_972 = func_279();
                let w_973 = 1;
                #[cfg(feature = "feat12")]
                let v_974 = 90 + 43;
            }
        } else {
            match 0 {
                0 => {
                    #[cfg(not(feature = "feat20"))]
                    let v_975 = func_473();
                    let w_976 = 8;
                }
                _ => {}
            }
            println!("msg_977 {}", 1);
        }
        println!("msg_978 {}", 1);
        let v_979 = 36;
    } else {
        func_758();
        let v_980 = ext_0();
        #[cfg(feature = "feat12")]
        func_445();
    }
}
pub enum Kind_981 {
    Variant_982,
    Variant_983,
    #[cfg(feature = "feat23")]
    Variant_984,
    #[cfg(feature = "feat21")]
    Variant_985,
}
pub struct Handle_986;
#[cfg(feature = "feat6")]
impl Handle_986 {
    #[cfg(all(feature = "feat16", not(feature = "feat1")))]
    pub fn func_987() {
        let v_988 = 30;
        println!("msg_989 {}", 1);
        println!("msg_990 {}", 1);
        let v_991 = func_346();
    }
    pub fn func_524() {
        let _ = 860;
    }
}
pub static COUNTER_992: u32 = 0;
use std::collections::HashMap;
pub type Alias_993 = u64;
pub fn func_994() {
    match 0 {
        0 => {
            func_615();
            #[cfg(any(feature = "feat21", feature = "feat16"))]
            let v_995 = func_151();
            let v_996 = 844;
            func_545();
        }
        _ => {}
    }
    match 3 {
        0 => {
            pub fn func_997() {
                let v_998 = func_275();
                if 9 > 10 {
                    let _ = 843;
                } else {
                    let w_999 = 8;
                    let v_1000 = 5 + 75;
                    ext_3();
                }
            }
            #[cfg(not(feature = "feat7"))]
            let v_1001 = 4 + 95;
            println!("msg_1002 {}", 1);
            let v_1003 = func_866();
        }
        _ => {}
    }
    match 3 {
        0 => {
            if 14 > 10 {
                pub fn func_715() {
                    println!("msg_1004 {}", 1);
                    #[cfg(not(feature = "feat20"))]
                    ext_0();
                }
                let v_1005 = func_956();
                let v_1006 = func_944();
            } else {
                if 13 > 10 {
                    #[cfg(feature = "feat2")]
                    let v_1007 = 58 + 93;
                    let _ = 288;
                    #[cfg(feature = "feat4")]
                    ext_3();
                } else {
                    let v_1008 = 450;
                    let w_1009 = 1;
                    let w_1010 = 8;
                    let v_1011 = 314;
                }
            }
        }
        _ => {}
    }
}
pub fn func_1012() {
    match 0 {
        0 => {
            let v_1013 = 1 + 97;
            match 1 {
                0 => {
                    match 1 {
                        0 => {
                            let w_1014 = 8;
                            ext_2();
                            let v_1015 = 177;
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
            #[cfg(feature = "feat16")]
            let v_1016 = 180;
        }
        _ => {}
    }
}
