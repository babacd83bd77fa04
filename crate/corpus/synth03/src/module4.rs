pub struct Record_747 {
    pub field_748: u32,
    pub field_749: u32,
}
pub mod inner_750 {
    use super::*;
    #[cfg(feature = "feat16")]
    pub const LIMIT_751: u32 = 836;
    use std::collections::HashMap;
}
pub fn func_752() {
    let v_753 = 55 + 22;
    println!("msg_754 {}", 1);
    match 3 {
        0 => {
            let _ = 52;
            let v_755 = func_600();
        }
        _ => {}
    }
    match 4 {
        0 => {
            #[cfg(feature = "feat16")]
            let v_756 = func_593();
            let v_757 = ext_2();
        }
        _ => {}
    }
}
pub fn func_758() {
    func_223();
    let v_759 = 126;
    if 4 > 10 {
        ext_1();
    } else {
        println!("msg_760 {}", 1);
        match 3 {
            0 => {
                match 0 {
                    0 => {
                        let w_761 = 3;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    if 3 > 10 {
        let v_762 = 289;
        func_283();
        pub fn func_763() {
            println!("msg_764 {}", 1);
        }
    } else {
        let v_765 = 131;
        match 4 {
            0 => {
                #[cfg(not(feature = "feat11"))]
                let v_766 = ext_0();
                let v_767 = 730;
                if 10 > 10 {
                    let v_768 = 46 + 25;
                } else {
                    let v_769 = 244;
                }
                match 4 {
                    0 => {
                        let w_770 = 7;
                        let v_771 = func_711();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
pub struct Record_772 {
    pub field_773: u32,
    pub field_774: u32,
    pub field_775: u32,
}
pub struct Record_776 {
    pub field_777: u32,
}
pub struct Record_778 {
    #[cfg(feature = "feat16")]
    pub field_779: u32,
    pub field_780: u32,
}
pub type Alias_781 = u64;
pub fn func_782() {
    ext_1();
}
pub struct Record_783 {
    pub field_784: u32,
    #[cfg(feature = "feat16")]
    pub field_785: u32,
    pub field_786: u32,
}
pub fn func_787() {
    ext_1();
}
pub fn func_788() {
    func_11();
    println!("msg_789 {}", 1);
}
pub fn func_790() {
    let v_791 = func_787();
    pub fn func_792() {
        #[cfg(feature = "feat16")]
        let v_793 = 99 + 15;
        #[cfg(feature = "feat16")]
        let v_794 = func_35();
        let v_795 = 935;
        println!("msg_796 {}", 1);
    }
}
pub fn func_797() {
    if 19 > 10 {
        match 1 {
            0 => {
                ext_2();
            }
            _ => {}
        }
        println!("msg_798 {}", 1);
        let _ = 238;
    } else {
        let v_799 = 60 + 59;
    }
}
pub mod inner_800 {
    use super::*;
    pub type Alias_801 = u64;
    #[cfg(feature = "feat16")]
    pub fn func_802() {
        let v_803 = ext_0();
        let v_804 = 904;
    }
}
pub struct Record_805 {
    pub field_806: u32,
}
pub fn func_807() {
    let _ = 249;
}
pub static COUNTER_808: u32 = 0;
pub static COUNTER_809: u32 = 0;
pub const LIMIT_810: u32 = 52 + 24;
pub type Alias_811 = u64;
pub fn func_812() {
    func_633();
}
pub static COUNTER_813: u32 = 0;
pub fn func_814() {
    println!("msg_815 {}", 1);
}
#[cfg(feature = "feat16")]
pub fn func_816() {
    let _ = 16 + 23;
    let v_817 = ext_0();
    func_379();
    let _ = 82 + 34;
}
pub fn func_119() {
    let _ = 757;
    func_554();
}
pub fn func_818() {
    let v_819 = 38 + 70;
}
pub static COUNTER_820: u32 = 0;
pub struct Record_821 {
    #[cfg(feature = "feat16")]
    pub field_822: u32,
}
pub enum Kind_823 {
    Variant_824,
    Variant_825,
}
pub fn func_826() {
    pub fn func_827() {
        let v_828 = 26 + 53;
        let v_829 = func_160();
    }
    let v_830 = 441;
    match 2 {
        0 => {
            pub fn func_831() {
                if 5 > 10 {
                    let v_832 = ext_3();
                    let v_833 = ext_3();
                    let v_834 = 42;
                    let v_835 = func_792();
                } else {
                    #[cfg(not(feature = "feat3"))]
                    let v_836 = 60 + 7;
                    let v_837 = 418;
                    let w_838 = 0;
                    #[cfg(any(feature = "feat16", feature = "feat16"))]
                    let v_839 = 364;
                }
            }
            let v_840 = ext_1();
            #[cfg(feature = "feat16")]
            let v_841 = func_697();
        }
        _ => {}
    }
}
pub const LIMIT_842: u32 = 84 + 50;
#[cfg(feature = "feat16")]
pub struct Record_843 {
    pub field_844: u32,
    pub field_845: u32,
    pub field_846: u32,
}
pub static COUNTER_847: u32 = 0;
pub type Alias_848 = u64;
#[cfg(feature = "feat16")]
pub type Alias_849 = u64;
pub struct Handle_850;
impl Handle_850 {
    pub fn func_851() {
        let v_852 = 748;
        let v_853 = func_66();
    }
    pub fn func_854() {
        println!("msg_855 {}", 1);
    }
}
pub mod inner_856 {
    use super::*;
    pub fn func_857() {
        #[cfg(feature = "feat16")]
        let v_858 = func_721();
        #[cfg(feature = "feat16")]
        let v_859 = func_160();
    }
    use std::collections::HashMap;
    #[cfg(feature = "feat16")]
    pub fn func_860() {
        if 14 > 10 {
            pub fn func_861() {
                let w_862 = 6;
                let v_863 = ext_3();
                let w_864 = 7;
            }
            println!("msg_865 {}", 1);
            let v_866 = func_510();
        } else {
            func_541();
            match 1 {
                0 => {
                    let v_867 = func_179();
                    let v_868 = 817;
                    let v_869 = func_814();
                }
                _ => {}
            }
            let v_870 = func_711();
        }
    }
}
#[cfg(feature = "feat16")]
pub mod inner_871 {
    use super::*;
    pub mod inner_872 {
        use super::*;
        pub struct Handle_873;
        impl Handle_873 {
            pub fn func_874() {
                let v_875 = func_668();
                ext_2();
            }
            #[cfg(not(feature = "feat11"))]
            pub fn func_876() {
                let v_877 = func_142();
                println!("msg_878 {}", 1);
            }
        }
        pub fn func_879() {
            println!("msg_880 {}", 1);
            func_121();
            func_715();
            let _ = 549;
        }
    }
    pub fn func_881() {
        let v_882 = func_61();
        let v_883 = func_648();
        match 2 {
            0 => {
                if 1 > 10 {
                    let w_884 = 7;
                } else {
                    #[cfg(not(feature = "feat3"))]
                    let v_885 = ext_1();
                    let v_886 = func_408();
                }
                let v_887 = ext_1();
                let v_888 = 995;
            }
            _ => {}
        }
        let v_889 = func_510();
    }
}
#[cfg(feature = "feat16")]
pub fn func_890() {
    func_827();
    ext_0();
}
#[cfg(feature = "feat16")]
use std::collections::HashMap;
pub mod inner_891 {
    use super::*;
    pub struct Record_892 {
        pub field_893: u32,
        pub field_894: u32,
        pub field_895: u32,
        pub field_896: u32,
    }
    pub mod inner_897 {
        use super::*;
        #[cfg(feature = "feat16")]
        pub static COUNTER_898: u32 = 0;
        pub fn func_899() {
            #[cfg(feature = "feat16")]
            let v_900 = ext_3();
            #[cfg(all(feature = "feat16", not(feature = "feat3")))]
            let v_901 = 20 + 89;
            let v_902 = 650;
        }
    }
}
pub fn func_903() {
    match 1 {
        0 => {
            let v_904 = 992;
            let _ = 64 + 45;
            let v_905 = ext_3();
            let v_906 = 919;
        }
        _ => {}
    }
    let v_907 = 975;
}
pub fn func_908() {
    match 2 {
        0 => {
            func_223();
        }
        _ => {}
    }
    match 0 {
        0 => {
            let v_909 = 783;
            let v_910 = 589;
            let v_911 = 52 + 23;
            let v_912 = ext_0();
        }
        _ => {}
    }
}
use std::collections::HashMap;
#[cfg(feature = "feat16")]
pub fn func_913() {
    let v_914 = ext_3();
    ext_3();
    let v_915 = 91 + 78;
    let v_916 = func_572();
}
