pub fn func_683() {
    let v_825 = func_518();
    ext_0();
    func_274();
    let v_826 = func_109();
}
#[cfg(feature = "feat0")]
pub fn func_827() {
    let v_828 = ext_1();
}
use std::collections::HashMap;
pub const LIMIT_829: u32 = func_195();
pub const LIMIT_830: u32 = ext_0();
pub fn func_831() {
    #[cfg(feature = "feat17")]
    pub fn func_832() {
        #[cfg(all(feature = "feat21", not(feature = "feat24")))]
        func_330();
        pub fn func_833() {
            let v_834 = 53 + 9;
            let _ = 99 + 98;
            #[cfg(any(feature = "feat21", feature = "feat18"))]
            ext_1();
        }
    }
    #[cfg(feature = "feat22")]
    ext_0();
}
pub enum Kind_835 {
    #[cfg(not(feature = "feat15"))]
    Variant_836,
}
#[cfg(feature = "feat0")]
pub fn func_837() {
    let v_838 = ext_0();
}
#[cfg(not(feature = "feat20"))]
use std::collections::HashMap;
pub fn func_839() {
    #[cfg(feature = "feat13")]
    let v_840 = 876;
    let v_841 = 914;
}
pub fn func_842() {
    println!("msg_843 {}", 1);
}
pub enum Kind_844 {
    Variant_845,
}
use std::collections::HashMap;
pub struct Handle_846;
#[cfg(any(feature = "feat0", feature = "feat9", feature = "feat10"))]
impl Handle_846 {
    pub fn func_847() {
        match 2 {
            0 => {
                pub fn func_848() {
                    let w_849 = 6;
                    let w_850 = 6;
                    let v_851 = 523;
                }
            }
            _ => {}
        }
        #[cfg(all(feature = "feat13", not(feature = "feat1")))]
        let _ = 6 + 41;
        pub fn func_852() {
            println!("msg_853 {}", 1);
            #[cfg(feature = "feat19")]
            let v_854 = ext_2();
        }
        let v_855 = ext_2();
    }
}
pub static COUNTER_856: u32 = 0;
pub fn func_857() {
    func_804();
    func_134();
}
pub fn func_858() {
    pub fn func_859() {
        let v_860 = func_765();
        println!("msg_861 {}", 1);
        if 11 > 10 {
            pub fn func_862() {
                let v_863 = ext_0();
                let w_864 = 6;
                let v_865 = 640;
            }
            #[cfg(any(feature = "feat8", feature = "feat3", feature = "feat4"))]
            pub fn func_866() {
                println!("msg_867 {}", 1);
                let w_868 = 2;
                let w_869 = 7;
            }
            let v_870 = ext_0();
            let v_871 = ext_2();
        } else {
            let v_872 = 15 + 76;
            match 1 {
                0 => {
                    let v_873 = func_839();
                    let v_874 = func_210();
                }
                _ => {}
            }
        }
        println!("msg_875 {}", 1);
    }
    pub fn func_876() {
        #[cfg(feature = "feat2")]
        let v_877 = 984;
        if 4 > 10 {
            if 18 > 10 {
                println!("msg_878 {}", 1);
                #[cfg(all(feature = "feat12", not(feature = "feat14")))]
                let v_879 = 144;
            } else {
                println!("msg_880 {}", 1);
            }
            func_142();
            #[cfg(not(feature = "feat16"))]
            let v_881 = func_124();
        } else {
            #[cfg(not(feature = "feat5"))]
            pub fn func_882() {
                func_189();
                println!("msg_883 {}", 1);
            }
            #[cfg(feature = "feat8")]
            let v_884 = 52 + 96;
        }
        println!("msg_885 {}", 1);
        ext_0();
    }
}
pub type Alias_886 = u64;
#[cfg(not(feature = "feat11"))]
pub fn func_887() {
    let v_888 = func_788();
    let v_889 = func_605();
    let v_890 = func_848();
    if 12 > 10 {
        let v_891 = func_166();
        let v_892 = 315;
        let _ = 502;
    } else {
        println!("msg_893 {}", 1);
        pub fn func_894() {
            func_177();
            println!("msg_895 {}", 1);
            println!("msg_896 {}", 1);
        }
        println!("msg_897 {}", 1);
        let v_898 = func_307();
    }
}
pub enum Kind_899 {
    #[cfg(feature = "feat10")]
    Variant_900,
}
pub static COUNTER_901: u32 = 0;
pub type Alias_902 = u64;
#[cfg(not(feature = "feat7"))]
pub struct Record_903 {
    pub field_904: u32,
}
pub fn func_905() {
    let v_906 = 758;
}
pub fn func_907() {
    ext_0();
    let v_908 = func_168();
    pub fn func_909() {
        #[cfg(feature = "feat10")]
        pub fn func_910() {
            let _ = 489;
            println!("msg_911 {}", 1);
            pub fn func_912() {
                let w_913 = 2;
            }
        }
        let v_914 = 1 + 96;
    }
    println!("msg_915 {}", 1);
}
#[cfg(not(feature = "feat20"))]
pub type Alias_916 = u64;
pub static COUNTER_917: u32 = 0;
pub fn func_918() {
    let v_919 = func_722();
    #[cfg(feature = "feat8")]
    let v_920 = func_758();
    println!("msg_921 {}", 1);
}
pub mod nested;
