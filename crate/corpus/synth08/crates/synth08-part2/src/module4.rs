pub enum Kind_704 {
    Variant_705,
}
pub fn func_706() {
    func_629();
}
pub fn func_707() {
    match 1 {
        0 => {
            let v_708 = 803;
            let v_709 = func_96();
        }
        _ => {}
    }
    func_546();
    pub fn func_710() {
        let v_711 = 661;
        pub fn func_547() {
            println!("msg_712 {}", 1);
        }
    }
    if 2 > 10 {
        let v_713 = func_222();
    } else {
        let v_714 = 164;
        let v_715 = 229;
    }
}
pub fn func_716() {
    if 3 > 10 {
        if 2 > 10 {
            println!("msg_717 {}", 1);
            let v_718 = 125;
        } else {
            #[cfg(any(feature = "m2_6", feature = "m2_5"))]
            let _ = 441;
            match 2 {
                0 => {
                    let w_719 = 6;
                    let v_720 = 68 + 35;
                    let v_721 = ext_3();
                    let w_722 = 0;
                }
                _ => {}
            }
            let v_723 = ext_0();
        }
        let v_724 = ext_3();
        ext_3();
        println!("msg_725 {}", 1);
    } else {
        println!("msg_726 {}", 1);
    }
    #[cfg(feature = "m2_6")]
    func_16();
    let v_727 = 59 + 81;
    println!("msg_728 {}", 1);
}
pub const LIMIT_729: u32 = func_119();
#[cfg(feature = "m2_5")]
pub fn func_730() {
    let v_731 = 463;
}
pub struct Handle_732;
impl Handle_732 {
    pub fn func_733() {
        #[cfg(all(feature = "m2_5", not(feature = "m2_2")))]
        let v_734 = func_500();
    }
}
#[cfg(feature = "m2_7")]
pub fn func_735() {
    println!("msg_736 {}", 1);
}
pub struct Handle_737;
impl Handle_737 {
    pub fn func_738() {
        #[cfg(feature = "m2_9")]
        let _ = 13 + 41;
        let v_739 = 43 + 56;
        #[cfg(not(feature = "m2_2"))]
        let v_740 = 11 + 20;
    }
    pub fn func_741() {
        let v_742 = 64 + 86;
        if 16 > 10 {
            let v_743 = func_580();
            let v_744 = func_177();
            let v_745 = func_588();
        } else {
            pub fn func_443() {
                println!("msg_746 {}", 1);
                println!("msg_747 {}", 1);
            }
            let v_748 = ext_3();
            println!("msg_749 {}", 1);
            println!("msg_750 {}", 1);
        }
        match 0 {
            0 => {
                let v_751 = ext_0();
                let v_752 = 54 + 31;
                println!("msg_753 {}", 1);
            }
            _ => {}
        }
    }
}
#[cfg(feature = "m2_7")]
pub const LIMIT_754: u32 = 187;
pub fn func_755() {
    let v_756 = func_354();
    match 2 {
        0 => {
            func_370();
            func_446();
        }
        _ => {}
    }
    let v_757 = func_512();
}
pub fn func_758() {
    let v_759 = func_580();
    pub fn func_760() {
        func_575();
    }
}
pub fn func_192() {
    let v_761 = func_629();
    println!("msg_762 {}", 1);
    pub fn func_763() {
        pub fn func_764() {
            func_177();
            func_395();
            let v_765 = func_472();
            let v_766 = func_28();
        }
    }
    match 0 {
        0 => {
            let v_767 = 47;
            #[cfg(feature = "m2_9")]
            let _ = 361;
            let _ = 55 + 95;
            #[cfg(feature = "m2_7")]
            let _ = 50 + 58;
        }
        _ => {}
    }
}
pub mod inner_768 {
    use super::*;
    pub fn func_769() {
        let v_770 = 50 + 28;
        println!("msg_771 {}", 1);
        println!("msg_772 {}", 1);
    }
    use std::collections::HashMap;
    pub fn func_773() {
        func_40();
        let _ = 74 + 99;
        func_333();
    }
}
#[cfg(all(feature = "m2_7", not(feature = "m2_8")))]
pub fn func_774() {
    let v_775 = 48 + 40;
    pub fn func_776() {
        println!("msg_777 {}", 1);
        let v_778 = 146;
        let v_779 = func_575();
        let _ = 76 + 64;
    }
    match 3 {
        0 => {
            let v_780 = func_91();
            match 1 {
                0 => {
                    let v_781 = func_241();
                    pub fn func_782() {
                        func_12();
                        let w_783 = 2;
                        println!("msg_784 {}", 1);
                        let _ = 616;
                    }
                    pub fn func_785() {
                        let v_786 = func_249();
                        ext_0();
                        let w_787 = 8;
                    }
                    println!("msg_788 {}", 1);
                }
                _ => {}
            }
            let v_789 = func_104();
        }
        _ => {}
    }
}
#[cfg(feature = "m2_6")]
pub fn func_790() {
    println!("msg_791 {}", 1);
    if 6 > 10 {
        let _ = 399;
        println!("msg_792 {}", 1);
        let _ = 205;
    } else {
        let v_793 = func_218();
        pub fn func_794() {
            #[cfg(not(feature = "m2_8"))]
            let _ = 152;
            let v_795 = 149;
        }
        #[cfg(feature = "m2_9")]
        let v_796 = ext_2();
    }
}
pub const LIMIT_797: u32 = 268;
pub static COUNTER_798: u32 = 0;
#[cfg(any(feature = "m2_7", feature = "m2_7"))]
pub fn func_125() {
    match 2 {
        0 => {
            func_380();
            pub fn func_799() {
                let _ = 492;
                pub fn func_800() {
                    let _ = 97 + 42;
                    let v_801 = 170;
                }
                ext_3();
                func_186();
            }
        }
        _ => {}
    }
}
#[cfg(feature = "m2_9")]
use std::collections::HashMap;
pub fn func_802() {
    let v_803 = 171;
    ext_0();
    #[cfg(not(feature = "m2_2"))]
    let _ = 134;
}
pub struct Handle_804;
impl Handle_804 {
    pub fn func_805() {
        let v_806 = 49 + 16;
        if 10 > 10 {
            if 13 > 10 {
                let v_807 = 54 + 63;
                let w_808 = 5;
            } else {
                let w_809 = 3;
                let v_810 = func_15();
                let w_811 = 3;
                let v_812 = ext_0();
            }
            let _ = 62 + 44;
            match 3 {
                0 => {
                    let _ = 32 + 82;
                    let w_813 = 8;
                    let v_814 = func_128();
                }
                _ => {}
            }
        } else {
            pub fn func_815() {
                let v_816 = ext_3();
                let v_817 = func_28();
                let _ = 234;
            }
        }
    }
    pub fn func_818() {
        let v_819 = 76;
        func_404();
    }
}
pub const LIMIT_820: u32 = func_380();
pub fn func_821() {
    pub fn func_822() {
        let v_823 = 51 + 38;
        #[cfg(feature = "m2_5")]
        pub fn func_824() {
            match 1 {
                0 => {
                    let v_825 = func_512();
                }
                _ => {}
            }
        }
        match 3 {
            0 => {
                if 13 > 10 {
                    let w_826 = 3;
                    let v_827 = ext_1();
                    let v_828 = func_253();
                    let w_829 = 3;
                } else {
                    let w_830 = 0;
                    let w_831 = 7;
                    let w_832 = 4;
                }
                match 0 {
                    0 => {
                        let _ = 63 + 81;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        println!("msg_833 {}", 1);
    }
    if 8 > 10 {
        #[cfg(not(feature = "m2_8"))]
        let v_834 = 65 + 57;
        if 13 > 10 {
            let v_835 = ext_2();
            println!("msg_836 {}", 1);
            pub fn func_837() {
                let _ = 800;
                let v_838 = 1 + 79;
                let w_839 = 4;
                let v_840 = ext_3();
            }
        } else {
            match 0 {
                0 => {
                    let w_841 = 6;
                    let _ = 724;
                }
                _ => {}
            }
        }
    } else {
        let v_842 = ext_3();
        match 0 {
            0 => {
                pub fn func_843() {
                    let w_844 = 8;
                    func_529();
                }
            }
            _ => {}
        }
    }
    if 10 > 10 {
        match 0 {
            0 => {
                if 1 > 10 {
                    let _ = 974;
                } else {
                    let v_845 = ext_3();
                    let w_846 = 6;
                    let v_847 = 60 + 23;
                    let w_848 = 6;
                }
                let v_849 = 38 + 58;
                match 1 {
                    0 => {
                        let v_850 = 36;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    } else {
        let v_851 = 30 + 85;
        func_129();
        println!("msg_852 {}", 1);
    }
    #[cfg(any(feature = "m2_5", feature = "m2_7"))]
    let v_853 = 898;
}
pub struct Handle_854;
impl Handle_854 {
    pub fn func_855() {
        match 3 {
            0 => {
                #[cfg(feature = "m2_7")]
                func_738();
            }
            _ => {}
        }
        ext_1();
    }
    pub fn func_856() {
        let v_857 = func_280();
        match 4 {
            0 => {
                let v_858 = 89;
                let v_859 = 60 + 17;
            }
            _ => {}
        }
        let v_860 = func_641();
    }
}
