pub fn func_703() {
    let v_704 = 201;
    println!("msg_705 {}", 1);
    let _ = 636;
    println!("msg_706 {}", 1);
}
#[cfg(feature = "m0_6")]
use std::collections::HashMap;
#[cfg(not(feature = "m0_4"))]
pub const LIMIT_707: u32 = func_255();
pub fn func_708() {
    pub fn func_709() {
        println!("msg_710 {}", 1);
    }
    #[cfg(feature = "m0_9")]
    pub fn func_711() {
        let v_712 = 58 + 81;
        match 0 {
            0 => {
                println!("msg_713 {}", 1);
                let v_714 = 62 + 45;
                ext_2();
            }
            _ => {}
        }
        println!("msg_715 {}", 1);
    }
    let v_716 = 609;
    let v_717 = 74 + 47;
}
pub fn func_718() {
    let v_719 = func_703();
    match 2 {
        0 => {
            if 12 > 10 {
                let v_720 = func_665();
            } else {
                if 5 > 10 {
                    let v_721 = ext_1();
                    let v_722 = ext_1();
                    #[cfg(feature = "m0_6")]
                    let v_723 = 868;
                } else {
                    #[cfg(any(feature = "m0_5", feature = "m0_6", feature = "m0_6"))]
                    let v_724 = func_227();
                    let _ = 662;
                    let v_725 = func_158();
                }
                let v_726 = 42 + 36;
            }
            pub fn func_727() {
                let _ = 58 + 31;
                let v_728 = ext_3();
                #[cfg(any(feature = "m0_1", feature = "m0_5"))]
                let v_729 = func_618();
                println!("msg_730 {}", 1);
            }
        }
        _ => {}
    }
}
pub fn func_731() {
    ext_3();
    ext_2();
    match 0 {
        0 => {
            pub fn func_732() {
                let v_733 = 74 + 86;
                println!("msg_734 {}", 1);
                let v_735 = ext_0();
                println!("msg_736 {}", 1);
            }
        }
        _ => {}
    }
}
#[cfg(feature = "m0_3")]
pub fn func_737() {
    let v_738 = ext_2();
    if 8 > 10 {
        match 3 {
            0 => {
                ext_2();
            }
            _ => {}
        }
        func_335();
    } else {
        let v_739 = 87 + 6;
        pub fn func_740() {
            #[cfg(not(feature = "m0_4"))]
            let _ = 574;
        }
        if 12 > 10 {
            match 0 {
                0 => {
                    let v_741 = 65 + 23;
                    let v_742 = 911;
                    let v_743 = 76 + 38;
                    let w_744 = 7;
                }
                _ => {}
            }
            let v_745 = ext_1();
            pub fn func_746() {
                let v_747 = func_711();
                let v_748 = 16 + 66;
                let v_749 = 199;
            }
            let v_750 = ext_2();
        } else {
            pub fn func_751() {
                #[cfg(not(feature = "m0_4"))]
                let v_752 = ext_2();
            }
            let v_753 = 857;
            func_61();
            func_83();
        }
        let v_754 = 393;
    }
}
pub fn func_755() {
    match 3 {
        0 => {
            let v_756 = func_529();
            let v_757 = 374;
        }
        _ => {}
    }
}
pub mod inner_758 {
    use super::*;
    pub static COUNTER_759: u32 = 0;
    pub mod inner_760 {
        use super::*;
        #[cfg(feature = "m0_10")]
        pub const LIMIT_761: u32 = func_158();
    }
    pub mod inner_762 {
        use super::*;
        #[cfg(feature = "m0_3")]
        pub struct Record_763 {
            pub field_764: u32,
            pub field_765: u32,
        }
        pub fn func_212() {
            if 5 > 10 {
                #[cfg(any(feature = "m0_0", feature = "m0_9"))]
                let v_766 = ext_2();
                let v_767 = 88 + 64;
                func_737();
                #[cfg(feature = "m0_10")]
                let v_768 = ext_1();
            } else {
                println!("msg_769 {}", 1);
                println!("msg_770 {}", 1);
                let v_771 = func_107();
                let w_772 = 0;
            }
            let v_773 = 10 + 13;
            if 0 > 10 {
                #[cfg(all(feature = "m0_1", not(feature = "m0_2")))]
                let v_774 = func_212();
                let w_775 = 5;
                let w_776 = 4;
                func_692();
            } else {
                println!("msg_777 {}", 1);
                func_170();
            }
            let _ = 845;
        }
        pub struct Handle_778;
        impl Handle_778 {
            pub fn func_779() {
                let w_780 = 8;
                let w_781 = 2;
                let v_782 = func_527();
            }
        }
    }
}
pub type Alias_783 = u64;
#[cfg(not(feature = "m0_4"))]
pub fn func_784() {
    let v_785 = 441;
    let v_786 = ext_0();
    println!("msg_787 {}", 1);
}
pub struct Record_788 {
    pub field_789: u32,
    pub field_790: u32,
    pub field_791: u32,
    pub field_792: u32,
}
use std::collections::HashMap;
#[cfg(any(feature = "m0_0", feature = "m0_0"))]
pub fn func_793() {
    pub fn func_794() {
        let v_795 = func_332();
    }
    #[cfg(feature = "m0_9")]
    ext_3();
    if 10 > 10 {
        let _ = 12;
        let v_796 = 188;
        let v_797 = ext_2();
        let v_798 = func_343();
    } else {
        match 3 {
            0 => {
                let _ = 182;
            }
            _ => {}
        }
    }
}
#[cfg(feature = "m0_1")]
pub static COUNTER_799: u32 = 0;
pub mod inner_800 {
    use super::*;
    pub fn func_801() {
        let v_802 = func_12();
        let v_803 = 460;
    }
    pub fn func_804() {
        match 4 {
            0 => {
                let v_805 = 1 + 28;
            }
            _ => {}
        }
        ext_0();
        let v_806 = func_255();
        #[cfg(feature = "m0_10")]
        let _ = 70 + 83;
    }
}
pub fn func_807() {
    if 18 > 10 {
        let _ = 2 + 50;
        let v_808 = 869;
        let v_809 = func_630();
    } else {
        let v_810 = func_190();
        #[cfg(feature = "m0_6")]
        let v_811 = ext_3();
    }
    let v_812 = func_708();
    let v_813 = 345;
}
pub mod inner_814 {
    use super::*;
    pub fn func_815() {
        let _ = 520;
        let v_816 = 96 + 88;
    }
}
pub mod inner_817 {
    use super::*;
    pub static COUNTER_818: u32 = 0;
    #[cfg(any(feature = "m0_3", feature = "m0_9"))]
    pub fn func_819() {
        match 3 {
            0 => {
                #[cfg(any(feature = "m0_10", feature = "m0_10"))]
                let v_820 = func_609();
            }
            _ => {}
        }
        let v_821 = ext_2();
        println!("msg_822 {}", 1);
    }
    pub fn func_212() {
        pub fn func_823() {
            match 1 {
                0 => {
                    #[cfg(feature = "m0_3")]
                    let _ = 852;
                    let v_824 = 743;
                    let _ = 78 + 84;
                    let v_825 = func_93();
                }
                _ => {}
            }
            let v_826 = ext_3();
        }
        match 3 {
            0 => {
                let _ = 67 + 81;
                #[cfg(not(feature = "m0_2"))]
                let _ = 56 + 59;
                println!("msg_827 {}", 1);
            }
            _ => {}
        }
        if 1 > 10 {
            #[cfg(all(feature = "m0_1", not(feature = "m0_2")))]
            let _ = 70 + 80;
            let _ = 72 + 67;
        } else {
            let _ = 983;
            println!("msg_828 {}", 1);
            pub fn func_829() {
                let w_830 = 8;
                let _ = 724;
            }
            #[cfg(feature = "m0_5")]
            let v_831 = ext_3();
        }
        func_284();
    }
}
pub fn func_832() {
    let v_833 = 392;
    if 5 > 10 {
        let v_834 = func_819();
        let v_835 = ext_2();
    } else {
        pub fn func_784() {
            let v_836 = func_686();
            #[cfg(feature = "m0_10")]
            let v_837 = ext_0();
            let v_838 = ext_0();
        }
    }
    let v_839 = func_42();
}
#[cfg(feature = "m0_9")]
pub fn func_840() {
    func_379();
    let v_841 = func_784();
    if 19 > 10 {
        let v_842 = 63 + 52;
        let v_843 = func_490();
        let _ = 911;
        let v_844 = 61 + 79;
    } else {
        if 12 > 10 {
            #[cfg(feature = "m0_10")]
            pub fn func_845() {
                let w_846 = 7;
                let v_847 = ext_3();
                let v_848 = func_447();
            }
            let v_849 = func_470();
            println!("msg_850 {}", 1);
            pub fn func_851() {
                #[cfg(feature = "m0_10")]
                let v_852 = func_286();
            }
        } else {
            let v_853 = 398;
            let v_854 = func_309();
        }
    }
}
pub static COUNTER_855: u32 = 0;
pub type Alias_856 = u64;
pub fn func_857() {
    let v_858 = func_274();
    if 10 > 10 {
        let v_859 = func_649();
    } else {
        pub fn func_860() {
            func_793();
        }
        let _ = 266;
        #[cfg(not(feature = "m0_2"))]
        let v_861 = ext_2();
    }
    println!("msg_862 {}", 1);
    let _ = 124;
}
#[cfg(not(feature = "m0_2"))]
pub fn func_863() {
    let v_864 = ext_1();
    let v_865 = func_61();
    let v_866 = 178;
}
pub fn func_867() {
    ext_3();
    match 2 {
        0 => {
            let v_868 = func_42();
            func_133();
            pub fn func_869() {
                #[cfg(not(feature = "m0_7"))]
                let v_870 = func_246();
                let v_871 = func_784();
            }
            let v_872 = func_12();
        }
        _ => {}
    }
    match 3 {
        0 => {
            let v_873 = 739;
            let v_874 = 62 + 16;
            let _ = 49 + 56;
        }
        _ => {}
    }
}
