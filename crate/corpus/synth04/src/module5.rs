pub fn func_797() {
    #[cfg(any(feature = "feat16", feature = "feat1"))]
    let v_798 = 57 + 17;
    func_218();
    let v_799 = ext_3();
    if 11 > 10 {
        let v_800 = 766;
    } else {
        ext_1();
        let v_801 = ext_1();
    }
}
pub fn func_802() {
    let v_803 = ext_3();
    match 1 {
        0 => {
            let v_804 = 79 + 72;
        }
        _ => {}
    }
    let v_805 = ext_2();
}
use std::collections::HashMap;
pub fn func_806() {
    pub fn func_807() {
        #[cfg(all(feature = "feat0", not(feature = "feat4")))]
        let v_808 = func_60();
        if 12 > 10 {
            if 19 > 10 {
                let w_809 = 1;
                ext_3();
                println!("msg_810 {}", 1);
                let _ = 929;
            } else {
                let v_811 = 807;
            }
            let v_812 = 87;
            match 1 {
                0 => {
                    let v_813 = 956;
                    let v_814 = ext_0();
                }
                _ => {}
            }
            let v_815 = 83 + 10;
        } else {
            println!("msg_816 {}", 1);
            println!("msg_817 {}", 1);
            pub fn func_818() {
                let w_819 = 4;
                let _ = 193;
                let w_820 = 2;
                let v_821 = 85 + 80;
            }
        }
        let v_822 = func_218();
        println!("msg_823 {}", 1);
    }
}
pub static COUNTER_824: u32 = 0;
#[cfg(feature = "feat1")]
use std::collections::HashMap;
pub struct Handle_825;
impl Handle_825 {
    pub fn func_826() {
        let v_827 = func_425();
    }
    pub fn func_828() {
        let v_829 = 86 + 6;
        #[cfg(feature = "feat1")]
        pub fn func_830() {
            println!("msg_831 {}", 1);
            let v_832 = 55 + 4;
            let v_833 = func_714();
        }
    }
}
pub const LIMIT_834: u32 = func_689();
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_835() {
    #[cfg(any(feature = "feat8", feature = "feat9", feature = "feat14"))]
    let v_836 = func_703();
    let v_837 = func_542();
}
pub fn func_838() {
    func_314();
    if 8 > 10 {
        pub fn func_258() {
            let v_839 = func_489();
            let v_840 = func_331();
        }
        let v_841 = func_125();
        pub fn func_842() {
            let v_843 = func_57();
        }
        match 2 {
            0 => {
                match 2 {
                    0 => {
                        let v_844 = func_377();
                        let v_845 = 939;
                        println!("msg_846 {}", 1);
                    }
                    _ => {}
                }
                func_802();
            }
            _ => {}
        }
    } else {
        let _ = 387;
    }
    #[cfg(feature = "feat10")]
    ext_3();
    if 17 > 10 {
        #[cfg(any(feature = "feat8", feature = "feat8", feature = "feat9"))]
        ext_1();
        if 9 > 10 {
            println!("msg_847 {}", 1);
        } else {
            ext_1();
            let v_848 = 96 + 72;
            let v_849 = 59 + 74;
        }
    } else {
        #[cfg(feature = "feat18")]
        let v_850 = 30 + 18;
        let v_851 = ext_3();
    }
}
pub fn func_852() {
    #[cfg(feature = "feat9")]
    let v_853 = func_260();
    match 2 {
        0 => {
            #[cfg(any(feature = "feat18", feature = "feat16", feature = "feat18"))]
            pub fn func_854() {
                let v_855 = 857;
                pub fn func_856() {
                    let w_857 = 6;
                }
            }
            let v_858 = func_575();
            let v_859 = 1 + 70;
        }
        _ => {}
    }
}
pub fn func_705() {
    match 1 {
        0 => {
            let v_860 = 55 + 54;
            pub fn func_861() {
                #[cfg(feature = "feat10")]
                let _ = 123;
                #[cfg(feature = "feat16")]
                let v_862 = 39 + 93;
                let v_863 = func_194();
                let v_864 = 44 + 67;
            }
        }
        _ => {}
    }
}
pub fn func_865() {
    let v_866 = func_703();
    ext_2();
    println!("msg_867 {}", 1);
    let v_868 = ext_0();
}
pub fn func_869() {
    if 2 > 10 {
        println!("msg_870 {}", 1);
        let v_871 = 91 + 18;
        func_689();
        pub fn func_872() {
            let v_873 = func_32();
            println!("msg_874 {}", 1);
        }
    } else {
        ext_2();
    }
    let v_875 = 72 + 30;
    let v_876 = 631;
    let _ = 7 + 28;
}
pub fn func_877() {
    pub fn func_878() {
        match 0 {
            0 => {
                let v_879 = 296;
                println!("msg_880 {}", 1);
                println!("msg_881 {}", 1);
                let v_882 = 42 + 87;
            }
            _ => {}
        }
        match 2 {
            0 => {
                let v_883 = func_797();
            }
            _ => {}
        }
    }
    match 3 {
        0 => {
            match 3 {
                0 => {
                    ext_2();
                    pub fn func_884() {
                        println!("msg_885 {}", 1);
                        let _ = 65;
                    }
                    if 6 > 10 {
                        println!("msg_886 {}", 1);
                        println!("msg_887 {}", 1);
                        let w_888 = 4;
                        #[cfg(not(feature = "feat7"))]
                        ext_3();
                    } else {
                        #[cfg(all(feature = "feat10", not(feature = "feat5")))]
                        let v_889 = func_838();
                    }
                }
                _ => {}
            }
            #[cfg(feature = "feat9")]
            func_564();
            let v_890 = 844;
            let v_891 = 297;
        }
        _ => {}
    }
    let v_892 = ext_2();
    pub fn func_893() {
        let v_894 = 243;
        if 3 > 10 {
            let v_895 = ext_3();
            let v_896 = 93 + 53;
            let _ = 693;
        } else {
            #[cfg(feature = "feat9")]
            let v_897 = func_435();
            let v_898 = ext_2();
        }
        let _ = 357;
    }
}
pub mod nested;
