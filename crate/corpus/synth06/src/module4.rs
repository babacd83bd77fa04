pub mod inner_678 {
    use super::*;
    pub fn func_679() {
        let _ = 22 + 14;
    }
    pub fn func_680() {
        let _ = 80 + 65;
    }
    pub struct Handle_681;
    impl Handle_681 {
        pub fn func_682() {
            let v_683 = 618;
        }
    }
}
pub fn func_684() {
    let v_685 = func_262();
}
pub fn func_686() {
    println!("msg_687 {}", 1);
    match 0 {
        0 => {
            let _ = 6 + 56;
            ext_2();
            let v_688 = func_680();
            let v_689 = 38 + 99;
        }
        _ => {}
    }
    let v_690 = func_177();
}
pub struct Handle_691;
impl Handle_691 {
    pub fn func_692() {
        #[cfg(feature = "feat11")]
        let _ = 398;
        match 0 {
            0 => {
                if 10 > 10 {
                    let w_693 = 8;
                    let v_694 = ext_3();
                } else {
                    let w_695 = 5;
                }
                println!("msg_696 {}", 1);
                #[cfg(feature = "feat2")]
                pub fn func_697() {
                    #[cfg(feature = "feat14")]
                    let _ = 230;
                }
            }
            _ => {}
        }
        let v_698 = func_79();
        ext_0();
    }
}
use std::collections::HashMap;
pub fn func_699() {
    #[cfg(feature = "feat23")]
    let v_700 = func_422();
}
pub type Alias_701 = u64;
pub fn func_702() {
    #[cfg(feature = "feat23")]
    func_667();
}
pub const LIMIT_703: u32 = 562;
pub fn func_704() {
    let v_705 = ext_1();
    let v_706 = 74 + 16;
    func_684();
}
#[cfg(feature = "feat12")]
pub struct Record_707 {
    pub field_708: u32,
    pub field_709: u32,
}
pub type Alias_710 = u64;
pub struct Record_711 {
    pub field_712: u32,
    pub field_713: u32,
    pub field_714: u32,
}
pub fn func_306() {
    let _ = 613;
}
pub fn func_715() {
    match 3 {
        0 => {
            let v_716 = 43 + 78;
            func_346();
            match 4 {
                0 => {
                    pub fn func_469() {
                        let w_717 = 5;
                        #[cfg(any(feature = "feat0", feature = "feat19"))]
                        let v_718 = 14 + 66;
                    }
                    let v_719 = 60 + 20;
                }
                _ => {}
            }
        }
        _ => {}
    }
}
#[cfg(all(feature = "feat2", not(feature = "feat3")))]
pub fn func_10() {
    if 19 > 10 {
        let v_720 = 45 + 48;
        pub fn func_721() {
            if 2 > 10 {
                println!("msg_722 {}", 1);
                println!("msg_723 {}", 1);
                let w_724 = 0;
            } else {
                func_667();
                let w_725 = 3;
                let v_726 = ext_0();
                println!("msg_727 {}", 1);
            }
            let v_728 = 69 + 52;
            println!("msg_729 {}", 1);
        }
    } else {
        let v_730 = func_286();
        let v_731 = func_242();
        let v_732 = func_660();
        let v_733 = func_607();
    }
    pub fn func_734() {
        if 3 > 10 {
            let v_735 = func_387();
            match 4 {
                0 => {
                    println!("msg_736 {}", 1);
                    let _ = 206;
                    let v_737 = ext_0();
                    println!("msg_738 {}", 1);
                }
                _ => {}
            }
            ext_3();
            match 1 {
                0 => {
                    let _ = 84 + 96;
                    let w_739 = 4;
                    let w_740 = 3;
                }
                _ => {}
            }
        } else {
            let v_741 = 560;
            println!("msg_742 {}", 1);
            let v_743 = ext_2();
            pub fn func_744() {
                let w_745 = 6;
            }
        }
        let v_746 = 433;
        let _ = 727;
    }
    if 8 > 10 {
        let v_747 = func_715();
        let v_748 = func_744();
        let v_749 = 79 + 24;
        let _ = 71 + 22;
    } else {
        let v_750 = ext_1();
        if 10 > 10 {
            let _ = 710;
            match 3 {
                0 => {
                    func_151();
                    func_24();
                }
                _ => {}
            }
            let v_751 = 529;
        } else {
            let v_752 = 719;
            let v_753 = ext_2();
            let v_754 = func_397();
        }
        let v_755 = ext_2();
        let v_756 = 866;
    }
    let v_757 = func_506();
}
pub fn func_758() {
    let v_759 = func_397();
    let v_760 = func_702();
    if 15 > 10 {
        let v_761 = func_1();
    } else {
        let v_762 = ext_2();
        #[cfg(all(feature = "feat23", not(feature = "feat13")))]
        let v_763 = func_744();
    }
}
#[cfg(any(feature = "feat19", feature = "feat21"))]
pub const LIMIT_764: u32 = 37 + 70;
#[cfg(feature = "feat21")]
pub fn func_318() {
    println!("msg_765 {}", 1);
    let v_766 = func_472();
    let v_767 = 8 + 62;
}
pub enum Kind_768 {
    Variant_769,
}
#[cfg(not(feature = "feat9"))]
use std::collections::HashMap;
use std::collections::HashMap;
pub struct Handle_770;
#[cfg(feature = "feat5")]
impl Handle_770 {
    pub fn func_771() {
        let v_772 = func_642();
    }
    pub fn func_773() {
        println!("msg_774 {}", 1);
    }
}
pub fn func_775() {
    pub fn func_776() {
        match 2 {
            0 => {
                if 4 > 10 {
                    ext_2();
                    func_237();
                } else {
                    let v_777 = 227;
                }
                let v_778 = func_151();
                if 12 > 10 {
                    let v_779 = func_9();
                } else {
                    let v_780 = 913;
                    let v_781 = 173;
                }
                #[cfg(feature = "feat4")]
                let v_782 = 98 + 41;
            }
            _ => {}
        }
        match 0 {
            0 => {
                let _ = 940;
                match 0 {
                    0 => {
                        let v_783 = ext_1();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_784 = func_506();
        let v_785 = func_280();
    }
    println!("msg_786 {}", 1);
}
pub const LIMIT_787: u32 = 63 + 27;
pub fn func_788() {
    match 3 {
        0 => {
            let v_789 = 280;
        }
        _ => {}
    }
    #[cfg(feature = "feat8")]
    func_524();
    #[cfg(all(feature = "feat19", not(feature = "feat22")))]
    let _ = 22 + 56;
    pub fn func_790() {
        let v_791 = func_143();
        let v_792 = 37 + 99;
        match 1 {
            0 => {
                let v_793 = 49 + 70;
                match 0 {
                    0 => {
                        let v_794 = 115;
                    }
                    _ => {}
                }
                let _ = 142;
            }
            _ => {}
        }
    }
}
pub enum Kind_795 {
    Variant_796,
    Variant_797,
}
pub fn func_798() {
    let v_799 = func_699();
}
pub struct Record_800 {
    pub field_801: u32,
    pub field_802: u32,
    pub field_803: u32,
    pub field_804: u32,
}
pub enum Kind_805 {
    Variant_806,
    Variant_807,
    Variant_808,
}
pub struct Record_809 {
    pub field_810: u32,
}
pub fn func_811() {
    func_182();
    match 2 {
        0 => {
            let v_812 = 413;
            let v_813 = 974;
            if 15 > 10 {
                match 2 {
                    0 => {
                        let w_814 = 8;
                        let v_815 = 37 + 22;
                        let v_816 = 967;
                        ext_3();
                    }
                    _ => {}
                }
                let v_817 = func_9();
                let v_818 = func_10();
                let v_819 = func_543();
            } else {
                pub fn func_820() {
                    #[cfg(not(feature = "feat20"))]
                    let v_821 = ext_1();
                    let v_822 = func_397();
                    let v_823 = 67 + 32;
                    let v_824 = 60 + 39;
                }
                let v_825 = func_481();
                let v_826 = 516;
                let v_827 = 19 + 64;
            }
        }
        _ => {}
    }
}
#[cfg(feature = "feat6")]
pub const LIMIT_828: u32 = 96 + 72;
pub mod inner_829 {
    use super::*;
    pub struct Handle_830;
    impl Handle_830 {
        #[cfg(not(feature = "feat18"))]
        pub fn func_831() {
            let v_832 = 286;
            match 0 {
                0 => {
                    println!("msg_833 {}", 1);
                    let w_834 = 4;
                    let v_835 = 96 + 7;
                }
                _ => {}
            }
        }
        pub fn func_836() {
            let v_837 = func_831();
            let v_838 = func_692();
            let v_839 = 302;
        }
    }
    pub enum Kind_840 {
        #[cfg(feature = "feat14")]
        Variant_841,
        Variant_842,
        Variant_843,
        Variant_844,
    }
}
