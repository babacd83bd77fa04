pub mod module0;
pub mod module1;
pub mod module2;
pub mod module3;
pub const LIMIT_723: u32 = 518;
pub struct Record_724 {
    pub field_725: u32,
    #[cfg(feature = "m2_8")]
    pub field_726: u32,
    pub field_727: u32,
}
pub fn func_728() {
    match 3 {
        0 => {
            let v_729 = ext_3();
            let v_730 = ext_2();
        }
        _ => {}
    }
    func_28();
    let v_731 = 183;
}
use std::collections::HashMap;
pub static COUNTER_732: u32 = 0;
pub fn func_733() {
    if 18 > 10 {
        let _ = 36 + 50;
        let v_734 = func_97();
    } else {
        match 4 {
            0 => {
                ext_3();
            }
            _ => {}
        }
    }
    pub fn func_735() {
        match 0 {
            0 => {
                #[cfg(not(feature = "m2_1"))]
                let v_736 = func_413();
            }
            _ => {}
        }
    }
    if 5 > 10 {
        let v_737 = func_140();
        let v_738 = 4 + 58;
        println!("msg_739 {}", 1);
    } else {
        let v_740 = 763;
        let v_741 = ext_2();
        println!("msg_742 {}", 1);
    }
}
pub fn func_743() {
    println!("msg_744 {}", 1);
    let _ = 977;
}
pub struct Handle_745;
impl Handle_745 {
    pub fn func_746() {
        let _ = 83 + 48;
    }
}
#[cfg(all(feature = "m2_0", not(feature = "m2_1")))]
pub fn func_747() {
    let v_748 = func_58();
    if 10 > 10 {
        let v_749 = ext_3();
        let v_750 = 95 + 88;
        let _ = 80 + 64;
        let v_751 = ext_1();
    } else {
        println!("msg_752 {}", 1);
        pub fn func_753() {
            println!("msg_754 {}", 1);
        }
        let _ = 134;
        match 2 {
            0 => {
                func_81();
                let v_755 = 58 + 59;
                let v_756 = ext_1();
                println!("msg_757 {}", 1);
            }
            _ => {}
        }
    }
    match 2 {
        0 => {
            let v_758 = func_112();
            let v_759 = ext_1();
            let v_760 = ext_1();
            let v_761 = 892;
        }
        _ => {}
    }
}
pub fn func_762() {
    let v_763 = 46 + 59;
    #[cfg(feature = "m2_0")]
    let v_764 = 893;
}
#[cfg(any(feature = "m2_5", feature = "m2_7"))]
pub type Alias_765 = u64;
pub struct Handle_766;
impl Handle_766 {
    pub fn func_767() {
        #[cfg(all(feature = "m2_4", not(feature = "m2_1")))]
        let _ = 502;
        func_657();
        let v_768 = ext_1();
        func_129();
    }
}
pub mod inner_769 {
    use super::*;
    #[cfg(not(feature = "m2_6"))]
    pub fn func_770() {
        let v_771 = func_713();
        ext_2();
        let _ = 13 + 63;
    }
    pub fn func_772() {
        let v_773 = 501;
        match 0 {
            0 => {
                pub fn func_774() {
                    let w_775 = 3;
                }
                pub fn func_776() {
                    #[cfg(feature = "m2_3")]
                    let v_777 = func_388();
                }
            }
            _ => {}
        }
        let v_778 = 87 + 55;
    }
    pub mod inner_779 {
        use super::*;
        pub fn func_762() {
            let v_780 = ext_3();
            let v_781 = func_612();
            let v_782 = func_721();
        }
        pub struct Record_783 {
            pub field_784: u32,
            pub field_785: u32,
            pub field_786: u32,
        }
    }
}
#[cfg(not(feature = "m2_1"))]
pub fn func_787() {
    #[cfg(not(feature = "m2_1"))]
    let v_788 = 99 + 31;
    let _ = 212;
    if 1 > 10 {
        let v_789 = ext_2();
        ext_1();
        let _ = 36 + 58;
    } else {
        let v_790 = 79 + 1;
        println!("msg_791 {}", 1);
    }
}
pub static COUNTER_792: u32 = 0;
pub type Alias_793 = u64;
#[cfg(feature = "m2_3")]
pub struct Record_794 {
    pub field_795: u32,
}
pub const LIMIT_796: u32 = 92 + 70;
pub static COUNTER_797: u32 = 0;
pub type Alias_798 = u64;
use std::collections::HashMap;
pub const LIMIT_799: u32 = func_335();
#[cfg(feature = "m2_3")]
pub struct Record_800 {
    #[cfg(any(feature = "m2_8", feature = "m2_7"))]
    pub field_801: u32,
    pub field_802: u32,
}
pub fn func_803() {
    let v_804 = ext_2();
    let _ = 56 + 10;
    func_735();
    println!("msg_805 {}", 1);
}
pub fn func_347() {
    let v_806 = func_112();
    #[cfg(feature = "m2_5")]
    pub fn func_807() {
        match 2 {
            0 => {
                let v_808 = func_534();
                #[cfg(feature = "m2_7")]
                func_803();
                match 3 {
                    0 => {
                        let v_809 = 81 + 60;
                        #[cfg(feature = "m2_7")]
                        let v_810 = 54 + 60;
                    }
                    _ => {}
                }
                match 0 {
                    0 => {
                        let w_811 = 7;
                        println!("msg_812 {}", 1);
                        let w_813 = 3;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        if 13 > 10 {
            #[cfg(feature = "m2_7")]
            ext_2();
        } else {
            let v_814 = ext_0();
        }
    }
    #[cfg(not(feature = "m2_6"))]
    pub fn func_815() {
        match 1 {
            0 => {
                pub fn func_816() {
                    let v_817 = func_295();
                    let v_818 = func_99();
                }
                match 0 {
                    0 => {
                        let v_819 = ext_3();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_820 = 89 + 57;
        let _ = 484;
    }
    let v_821 = func_26();
}
pub fn func_822() {
    pub fn func_325() {
        if 6 > 10 {
            println!("msg_823 {}", 1);
            let v_824 = 1 + 40;
            func_227();
        } else {
            let _ = 502;
            let v_825 = 225;
            let v_826 = 25 + 42;
        }
    }
}
#[cfg(all(feature = "m2_2", not(feature = "m2_1")))]
use std::collections::HashMap;
pub fn func_827() {
    let _ = 79 + 71;
    let v_828 = func_217();
    if 7 > 10 {
        println!("msg_829 {}", 1);
    } else {
        if 16 > 10 {
            println!("msg_830 {}", 1);
        } else {
            println!("msg_831 {}", 1);
            if 19 > 10 {
                let w_832 = 7;
            } else {
                let v_833 = 62 + 22;
                let w_834 = 6;
            }
        }
        let v_835 = 472;
    }
    let v_836 = func_10();
}
pub fn func_837() {
    let v_838 = func_156();
    if 11 > 10 {
        if 3 > 10 {
            match 0 {
                0 => {
                    let v_839 = ext_0();
                    let w_840 = 6;
                    let w_841 = 4;
                    let v_842 = 192;
                }
                _ => {}
            }
        } else {
            if 14 > 10 {
                let w_843 = 8;
            } else {
                let w_844 = 4;
            }
            let v_845 = 72 + 12;
            #[cfg(not(feature = "m2_1"))]
            let v_846 = func_413();
        }
        let v_847 = 916;
        if 5 > 10 {
            #[cfg(not(feature = "m2_6"))]
            let v_848 = func_459();
            #[cfg(not(feature = "m2_6"))]
            let _ = 92 + 79;
        } else {
            pub fn func_849() {
                let w_850 = 8;
                let w_851 = 2;
                let v_852 = 394;
            }
            let _ = 22 + 67;
            let v_853 = 29 + 15;
        }
        let v_854 = ext_2();
    } else {
        if 18 > 10 {
            let v_855 = func_510();
            let v_856 = 68 + 7;
            println!("msg_857 {}", 1);
        } else {
            pub fn func_858() {
                let v_859 = ext_0();
                let w_860 = 4;
            }
        }
        let v_861 = func_205();
        pub fn func_862() {
            let v_863 = 133;
            println!("msg_864 {}", 1);
        }
    }
    match 3 {
        0 => {
            if 16 > 10 {
                pub fn func_865() {
                    let w_866 = 2;
                    let w_867 = 1;
                    let v_868 = func_263();
                    let v_869 = func_97();
                }
                let v_870 = 7 + 56;
                let v_871 = func_47();
            } else {
                func_263();
                pub fn func_177() {
                    let v_872 = 78 + 10;
                    let w_873 = 2;
                }
            }
        }
        _ => {}
    }
}
#[cfg(not(feature = "m2_6"))]
pub struct Record_874 {
    pub field_875: u32,
    pub field_876: u32,
    pub field_877: u32,
}
pub struct Handle_878;
impl Handle_878 {
    pub fn func_879() {
        let _ = 97 + 28;
        let v_880 = func_743();
        match 0 {
            0 => {
                let v_881 = func_601();
            }
            _ => {}
        }
        let v_882 = 69 + 47;
    }
    #[cfg(not(feature = "m2_6"))]
    pub fn func_883() {
        let v_884 = 89 + 28;
        let v_885 = func_232();
        let v_886 = func_865();
        let v_887 = 657;
    }
}
