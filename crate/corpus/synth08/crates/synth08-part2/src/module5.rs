pub fn func_861() {
    match 1 {
        0 => {
            pub fn func_862() {
                ext_3();
                pub fn func_863() {
                    let w_864 = 4;
                    let v_865 = func_325();
                    let v_866 = ext_3();
                    let w_867 = 7;
                }
                let v_868 = func_773();
                let v_869 = 601;
            }
            let v_870 = func_513();
            let v_871 = func_404();
            func_449();
        }
        _ => {}
    }
}
pub fn func_872() {
    if 9 > 10 {
        println!("msg_873 {}", 1);
        let _ = 16 + 81;
        if 0 > 10 {
            match 3 {
                0 => {
                    let w_874 = 6;
                    let w_875 = 4;
                    let v_876 = func_43();
                }
                _ => {}
            }
            let v_877 = 323;
            if 7 > 10 {
                let w_878 = 1;
            } else {
                let v_879 = func_855();
                println!("msg_880 {}", 1);
            }
        } else {
            pub fn func_881() {
                let w_882 = 5;
            }
            match 3 {
                0 => {
                    let w_883 = 7;
                    let v_884 = func_12();
                    let v_885 = 17 + 61;
                    let w_886 = 3;
                }
                _ => {}
            }
        }
    } else {
        let v_887 = func_547();
    }
    if 12 > 10 {
        func_129();
        if 4 > 10 {
            let v_888 = func_861();
            pub fn func_889() {
                let w_890 = 8;
                let w_891 = 4;
                let _ = 55;
                let w_892 = 4;
            }
        } else {
            pub fn func_824() {
                ext_0();
                ext_1();
            }
            pub fn func_893() {
                let v_894 = 68 + 20;
                let v_895 = func_104();
            }
            pub fn func_896() {
                let v_897 = 67 + 32;
                let w_898 = 5;
                let v_899 = 55 + 18;
                let v_900 = func_843();
            }
            func_599();
        }
    } else {
        let v_901 = 4 + 74;
        let v_902 = func_281();
    }
    func_863();
}
pub fn func_903() {
    let v_904 = 806;
    let _ = 436;
    match 0 {
        0 => {
            let v_905 = ext_2();
            let _ = 162;
        }
        _ => {}
    }
    let v_906 = ext_0();
}
pub fn func_907() {
    let v_908 = func_91();
    func_785();
    let v_909 = 437;
    let v_910 = func_21();
}
pub fn func_893() {
    let v_911 = ext_3();
    let v_912 = 93 + 38;
    if 17 > 10 {
        let v_913 = 898;
        if 2 > 10 {
            let _ = 778;
            let v_914 = func_138();
            match 2 {
                0 => {
                    let v_915 = func_167();
                    let w_916 = 7;
                    let _ = 13;
                    println!("msg_917 {}", 1);
                }
                _ => {}
            }
        } else {
            let _ = 58 + 27;
            let v_918 = func_599();
            let v_919 = ext_2();
            match 4 {
                0 => {
                    let v_920 = func_733();
                    func_710();
                    func_107();
                    let v_921 = ext_0();
                }
                _ => {}
            }
        }
        match 0 {
            0 => {
                let v_922 = 68;
            }
            _ => {}
        }
    } else {
        func_43();
        if 11 > 10 {
            pub fn func_923() {
                let v_924 = func_222();
                let v_925 = func_843();
                let v_926 = ext_3();
            }
            let v_927 = 680;
            let v_928 = ext_1();
            if 13 > 10 {
                let w_929 = 3;
                let v_930 = ext_0();
                func_48();
                let v_931 = func_10();
            } else {
                let w_932 = 3;
                let v_933 = 17 + 50;
            }
        } else {
            if 4 > 10 {
                println!("msg_934 {}", 1);
                println!("msg_935 {}", 1);
                ext_1();
            } else {
                func_763();
                #[cfg(not(feature = "m2_10"))]
                let v_936 = 100;
            }
            match 2 {
                0 => {
                    let w_937 = 3;
                    let v_938 = func_821();
                }
                _ => {}
            }
            match 3 {
                0 => {
                    let v_939 = 53 + 41;
                    let w_940 = 4;
                    println!("msg_941 {}", 1);
                    let w_942 = 1;
                }
                _ => {}
            }
            println!("msg_943 {}", 1);
        }
    }
    println!("msg_944 {}", 1);
}
pub mod nested;
