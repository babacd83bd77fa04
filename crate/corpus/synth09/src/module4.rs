pub mod inner_717 {
    use super::*;
    pub fn func_718() {
        match 0 {
            0 => {
                println!("msg_719 {}", 1);
                pub fn func_720() {
                    println!("msg_721 {}", 1);
                    let w_722 = 3;
                }
            }
            _ => {}
        }
    }
    pub fn func_723() {
        match 4 {
            0 => {
                match 4 {
                    0 => {
                        println!("msg_724 {}", 1);
                        let v_725 = 67;
                        let v_726 = ext_1();
                    }
                    _ => {}
                }
                let v_727 = func_160();
            }
            _ => {}
        }
        let v_728 = func_69();
    }
    pub static COUNTER_729: u32 = 0;
}
pub fn func_730() {
    func_1();
    #[cfg(feature = "feat8")]
    let v_731 = 982;
}
pub fn func_732() {
    println!("msg_733 {}", 1);
    let v_734 = 72 + 64;
    if 3 > 10 {
        func_145();
    } else {
        pub fn func_735() {
            println!("msg_736 {}", 1);
        }
        if 12 > 10 {
            let v_737 = func_278();
            println!("msg_738 {}", 1);
        } else {
            func_336();
            #[cfg(feature = "feat3")]
            let v_739 = func_654();
            if 19 > 10 {
                let v_740 = ext_3();
                let v_741 = func_631();
                let w_742 = 6;
            } else {
                let v_743 = ext_1();
                let w_744 = 7;
                func_599();
            }
            if 17 > 10 {
                let v_745 = func_474();
                let v_746 = 54 + 73;
                #[cfg(any(feature = "feat4", feature = "feat1", feature = "feat14"))]
                let v_747 = ext_1();
            } else {
                let w_748 = 8;
                println!("msg_749 {}", 1);
                let w_750 = 8;
                let v_751 = func_289();
            }
        }
        println!("msg_752 {}", 1);
        match 1 {
            0 => {
                func_483();
                let v_753 = 434;
                match 2 {
                    0 => {
                        let v_754 = func_231();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    if 12 > 10 {
        match 2 {
            0 => {
                let v_755 = func_252();
            }
            _ => {}
        }
        match 2 {
            0 => {
                println!("msg_756 {}", 1);
                let v_757 = ext_1();
            }
            _ => {}
        }
    } else {
        let v_758 = func_673();
    }
}
use std::collections::HashMap;
pub fn func_759() {
    if 0 > 10 {
        match 1 {
            0 => {
                pub fn func_760() {
                    println!("msg_761 {}", 1);
                    let _ = 17 + 71;
                    println!("msg_762 {}", 1);
                    let w_763 = 3;
                }
                println!("msg_764 {}", 1);
                #[cfg(feature = "feat28")]
                let v_765 = 335;
            }
            _ => {}
        }
        #[cfg(feature = "feat22")]
        let _ = 49 + 64;
        let v_766 = 762;
        let v_767 = ext_1();
    } else {
        match 1 {
            0 => {
                let v_768 = 897;
                let v_769 = ext_1();
                let v_770 = 27 + 47;
                if 12 > 10 {
                    let w_771 = 5;
                } else {
                    let v_772 = 700;
                    let v_773 = 168;
                    let v_774 = func_229();
                    func_450();
                }
            }
            _ => {}
        }
        let v_775 = func_193();
        func_511();
    }
    let v_776 = func_1();
    if 7 > 10 {
        #[cfg(feature = "feat13")]
        let v_777 = func_509();
        let v_778 = 359;
        match 4 {
            0 => {
                let v_779 = func_305();
            }
            _ => {}
        }
        let v_780 = 719;
    } else {
        #[cfg(feature = "feat11")]
        let v_781 = func_424();
    }
}
pub fn func_782() {
    let _ = 77 + 16;
    match 3 {
        0 => {
            ext_0();
            if 8 > 10 {
                ext_2();
                println!("msg_783 {}", 1);
                let v_784 = func_461();
                let v_785 = ext_0();
            } else {
                let v_786 = ext_2();
                #[cfg(all(feature = "feat3", not(feature = "feat23")))]
                let v_787 = func_215();
                func_231();
                let v_788 = func_631();
            }
            println!("msg_789 {}", 1);
        }
        _ => {}
    }
    ext_3();
}
pub fn func_790() {
    println!("msg_791 {}", 1);
    pub fn func_792() {
        let v_793 = 484;
        let v_794 = func_239();
        if 5 > 10 {
            let v_795 = func_331();
            if 17 > 10 {
                let v_796 = ext_1();
            } else {
                println!("msg_797 {}", 1);
            }
            let v_798 = func_22();
            let v_799 = func_432();
        } else {
            let v_800 = func_316();
        }
        #[cfg(feature = "feat14")]
        let v_801 = 63 + 78;
    }
    let v_802 = ext_1();
}
pub static COUNTER_803: u32 = 0;
#[cfg(all(feature = "feat20", not(feature = "feat25")))]
pub struct Record_804 {
    pub field_805: u32,
    pub field_806: u32,
}
pub fn func_807() {
    let v_808 = 60 + 24;
    #[cfg(not(feature = "feat2"))]
    pub fn func_325() {
        let v_809 = 87 + 6;
        let v_810 = ext_1();
        let v_811 = func_606();
    }
}
pub mod inner_812 {
    use super::*;
    pub const LIMIT_813: u32 = func_392();
    pub fn func_814() {
        println!("msg_815 {}", 1);
        println!("msg_816 {}", 1);
        #[cfg(not(feature = "feat10"))]
        let v_817 = func_236();
        let v_818 = 198;
    }
}
#[cfg(feature = "feat5")]
use std::collections::HashMap;
pub fn func_819() {
    println!("msg_820 {}", 1);
    let _ = 89 + 75;
    match 3 {
        0 => {
            if 19 > 10 {
                let v_821 = 369;
                let v_822 = func_564();
                let v_823 = 55 + 30;
                #[cfg(feature = "feat14")]
                let v_824 = ext_0();
            } else {
                #[cfg(not(feature = "feat25"))]
                let v_825 = 7;
                pub fn func_826() {
                    let v_827 = 13 + 67;
                    let w_828 = 2;
                    let v_829 = ext_3();
                    let _ = 372;
                }
                let v_830 = func_723();
                if 5 > 10 {
                    func_696();
                    ext_3();
                    println!("msg_831 {}", 1);
                } else {
                    let w_832 = 2;
                    #[cfg(any(feature = "feat27", feature = "feat8"))]
                    let v_833 = ext_0();
                }
            }
            pub fn func_834() {
                let v_835 = ext_1();
            }
            match 2 {
                0 => {
                    pub fn func_836() {
                        println!("msg_837 {}", 1);
                        let v_838 = func_403();
                        println!("msg_839 {}", 1);
                    }
                    pub fn func_840() {
                        let w_841 = 8;
                        let w_842 = 5;
                        let v_843 = func_210();
                    }
                }
                _ => {}
            }
            #[cfg(any(feature = "feat1", feature = "feat19"))]
            let v_844 = ext_2();
        }
        _ => {}
    }
}
#[cfg(feature = "feat14")]
use std::collections::HashMap;
pub struct Record_845 {
    #[cfg(feature = "feat20")]
    pub field_846: u32,
    #[cfg(any(feature = "feat9", feature = "feat9"))]
    pub field_847: u32,
    pub field_848: u32,
    pub field_849: u32,
}
pub fn func_850() {
    let v_851 = ext_0();
}
#[cfg(feature = "feat14")]
pub fn func_852() {
    pub fn func_853() {
        println!("msg_854 {}", 1);
        #[cfg(any(feature = "feat16", feature = "feat29", feature = "feat22"))]
        func_41();
        let v_855 = func_440();
        let v_856 = 622;
    }
    pub fn func_857() {
        let v_858 = 621;
    }
}
pub fn func_859() {
    let _ = 34 + 97;
    let _ = 4 + 8;
    func_720();
    func_857();
}
pub fn func_860() {
    let v_861 = ext_2();
}
use std::collections::HashMap;
pub type Alias_862 = u64;
use std::collections::HashMap;
pub struct Handle_863;
impl Handle_863 {
    pub fn func_864() {
        #[cfg(feature = "feat22")]
        let v_865 = 797;
        #[cfg(not(feature = "feat12"))]
        pub fn func_571() {
            let v_866 = ext_1();
            let _ = 739;
            if 19 > 10 {
                let w_867 = 7;
            } else {
                let w_868 = 5;
                let v_869 = ext_2();
            }
        }
    }
    pub fn func_870() {
        #[cfg(feature = "feat9")]
        let v_871 = 650;
        let _ = 8 + 69;
    }
}
pub fn func_872() {
    if 7 > 10 {
        func_516();
        #[cfg(feature = "feat8")]
        let v_873 = func_116();
        #[cfg(all(feature = "feat1", not(feature = "feat23")))]
        let _ = 32 + 66;
        let v_874 = func_78();
    } else {
        #[cfg(all(feature = "feat28", not(feature = "feat12")))]
        let v_875 = func_860();
        if 6 > 10 {
            let _ = 615;
        } else {
            #[cfg(feature = "feat19")]
            let v_876 = ext_0();
        }
    }
    match 0 {
        0 => {
            func_471();
            let v_877 = 78 + 29;
            match 0 {
                0 => {
                    println!("msg_878 {}", 1);
                    match 4 {
                        0 => {
                            let _ = 89 + 68;
                            #[cfg(any(feature = "feat13", feature = "feat24", feature = "feat13"))]
                            func_646();
                            let v_879 = 504;
                        }
                        _ => {}
                    }
                    let v_880 = ext_0();
                }
                _ => {}
            }
            let v_881 = ext_1();
        }
        _ => {}
    }
    let v_882 = ext_2();
    println!("msg_883 {}", 1);
}
