pub type Alias_675 = u64;
pub struct Handle_676;
impl Handle_676 {
    pub fn func_214() {
        let _ = 741;
        #[cfg(feature = "feat10")]
        let _ = 99 + 33;
        if 16 > 10 {
            match 4 {
                0 => {
                    #[cfg(any(feature = "feat2", feature = "feat0"))]
                    let v_677 = ext_0();
                    #[cfg(feature = "feat0")]
                    func_110();
                    let v_678 = 576;
                    let w_679 = 7;
                }
                _ => {}
            }
            func_172();
        } else {
            let v_680 = func_166();
            let v_681 = func_1();
        }
    }
}
pub struct Handle_682;
#[cfg(feature = "feat6")]
impl Handle_682 {
    pub fn func_683() {
        func_652();
        match 3 {
            0 => {
                let v_684 = ext_0();
            }
            _ => {}
        }
    }
}
pub fn func_685() {
    if 9 > 10 {
        let v_686 = ext_1();
        #[cfg(feature = "feat13")]
        let v_687 = func_92();
    } else {
        if 5 > 10 {
            let v_688 = 12 + 10;
            println!("msg_689 {}", 1);
            match 0 {
                0 => {
                    let w_690 = 2;
                    let w_691 = 0;
                    let w_692 = 5;
                    let v_693 = 73 + 71;
                }
                _ => {}
            }
        } else {
            let v_694 = ext_3();
            match 4 {
                0 => {
                    let v_695 = func_545();
                }
                _ => {}
            }
            let v_696 = 16 + 94;
        }
    }
    let _ = 270;
    #[cfg(feature = "feat10")]
    let v_697 = func_482();
}
use std::collections::HashMap;
#[cfg(feature = "feat21")]
pub fn func_698() {
    let v_699 = 40 + 14;
    if 2 > 10 {
        let v_700 = ext_3();
        #[cfg(feature = "feat23")]
        let v_701 = 39;
        let v_702 = ext_1();
    } else {
        if 11 > 10 {
            func_170();
            if 15 > 10 {
                let v_703 = 5 + 33;
                let v_704 = 6 + 62;
            } else {
                #[cfg(any(feature = "feat22", feature = "feat23"))]
                let v_705 = func_283();
                func_397();
                let w_706 = 4;
            }
            match 4 {
                0 => {
                    #[cfg(all(feature = "feat22", not(feature = "feat16")))]
                    let v_707 = func_545();
                }
                _ => {}
            }
            let v_708 = 827;
        } else {
            pub fn func_709() {
                let w_710 = 7;
                let w_711 = 7;
            }
            println!("msg_712 {}", 1);
        }
        let v_713 = 616;
        func_147();
    }
}
pub fn func_714() {
    let _ = 65 + 44;
    let v_715 = func_685();
    #[cfg(feature = "feat17")]
    let _ = 981;
    match 1 {
        0 => {
            let v_716 = func_124();
            if 12 > 10 {
                #[cfg(any(feature = "feat4", feature = "feat0"))]
                let v_717 = ext_2();
            } else {
                func_330();
                let v_718 = func_224();
                #[cfg(feature = "feat12")]
                pub fn func_517() {
                    let v_719 = 430;
                    let w_720 = 4;
                }
            }
        }
        _ => {}
    }
}
use std::collections::HashMap;
pub const LIMIT_721: u32 = 85 + 50;
pub fn func_722() {
    let v_723 = func_709();
    let v_724 = ext_0();
}
pub fn func_709() {
    println!("msg_725 {}", 1);
}
pub struct Handle_726;
#[cfg(feature = "feat0")]
impl Handle_726 {
    pub fn func_727() {
        if 16 > 10 {
            match 4 {
                0 => {
                    let v_728 = func_134();
                    let w_729 = 8;
                    #[cfg(any(feature = "feat18", feature = "feat19"))]
                    let _ = 41 + 47;
                    println!("msg_730 {}", 1);
                }
                _ => {}
            }
            match 1 {
                0 => {
                    let w_731 = 5;
                    let v_732 = func_124();
                    let v_733 = func_355();
                    let _ = 11 + 93;
                }
                _ => {}
            }
            println!("msg_734 {}", 1);
        } else {
            let v_735 = ext_2();
            #[cfg(feature = "feat19")]
            let v_736 = 79 + 77;
            #[cfg(feature = "feat3")]
            let v_737 = 377;
        }
        #[cfg(feature = "feat18")]
        let v_738 = ext_1();
    }
}
pub enum Kind_739 {
    Variant_740,
}
pub fn func_222() {
    #[cfg(feature = "feat12")]
    let v_741 = 977;
    if 1 > 10 {
        #[cfg(all(feature = "feat18", not(feature = "feat25")))]
        let v_742 = func_511();
        if 7 > 10 {
            match 0 {
                0 => {
                    println!("msg_743 {}", 1);
                    let w_744 = 7;
                }
                _ => {}
            }
            if 3 > 10 {
                let w_745 = 6;
                let w_746 = 3;
                ext_0();
                let w_747 = 2;
            } else {
                let v_748 = 94 + 26;
            }
            #[cfg(feature = "feat17")]
            pub fn func_166() {
                let w_749 = 1;
                let _ = 395;
            }
            let v_750 = 47 + 79;
        } else {
            println!("msg_751 {}", 1);
            let v_752 = func_249();
            let _ = 29 + 30;
            #[cfg(not(feature = "feat11"))]
            func_104();
        }
        let _ = 12 + 21;
        let v_753 = 13 + 2;
    } else {
        match 1 {
            0 => {
                if 8 > 10 {
                    let w_754 = 2;
                } else {
                    let v_755 = 544;
                }
            }
            _ => {}
        }
        #[cfg(any(feature = "feat23", feature = "feat13"))]
        let v_756 = ext_0();
        println!("msg_757 {}", 1);
        pub fn func_758() {
            #[cfg(not(feature = "feat11"))]
            let v_759 = 61 + 1;
            let v_760 = 433;
            if 16 > 10 {
                let v_761 = 693;
                let _ = 467;
            } else {
                #[cfg(any(feature = "feat6", feature = "feat9"))]
                let v_762 = ext_1();
            }
        }
    }
    let v_763 = func_404();
}
pub fn func_764() {
    #[cfg(all(feature = "feat21", not(feature = "feat5")))]
    pub fn func_765() {
        println!("msg_766 {}", 1);
        let v_767 = 240;
        let v_768 = func_727();
    }
    let v_769 = ext_3();
    println!("msg_770 {}", 1);
    #[cfg(feature = "feat2")]
    let v_771 = ext_1();
}
pub struct Handle_772;
impl Handle_772 {
    pub fn func_773() {
        if 10 > 10 {
            let _ = 66 + 52;
        } else {
            if 5 > 10 {
                let v_774 = 624;
                let w_775 = 8;
            } else {
                let w_776 = 6;
            }
            let v_777 = func_351();
            let v_778 = 42 + 45;
            let v_779 = func_80();
        }
    }
    pub fn func_780() {
        println!("msg_781 {}", 1);
    }
}
pub enum Kind_782 {
    Variant_783,
    Variant_784,
    Variant_785,
}
pub const LIMIT_786: u32 = 469;
#[cfg(feature = "feat18")]
pub const LIMIT_787: u32 = ext_3();
#[cfg(any(feature = "feat19", feature = "feat19", feature = "feat21"))]
pub fn func_788() {
    #[cfg(feature = "feat23")]
    let v_789 = ext_2();
}
#[cfg(any(feature = "feat8", feature = "feat10", feature = "feat21"))]
pub fn func_518() {
    let v_790 = 148;
    let _ = 808;
}
pub fn func_791() {
    func_210();
    if 7 > 10 {
        if 16 > 10 {
            match 3 {
                0 => {
                    let v_792 = 746;
                }
                _ => {}
            }
            let v_793 = func_714();
            let _ = 771;
        } else {
            func_284();
            let v_794 = 36 + 55;
            if 1 > 10 {
                let _ = 859;
                let w_795 = 8;
            } else {
                func_468();
            }
            pub fn func_796() {
                #[cfg(feature = "feat4")]
                ext_1();
                let v_797 = 81 + 50;
            }
        }
        let _ = 87 + 83;
        let v_798 = 10 + 43;
        match 1 {
            0 => {
                if 15 > 10 {
                    let v_799 = 980;
                    ext_0();
                    let v_800 = ext_0();
                } else {
                    let _ = 31 + 41;
                    let w_801 = 6;
                    ext_3();
                }
                #[cfg(feature = "feat19")]
                let v_802 = ext_2();
            }
            _ => {}
        }
    } else {
        let _ = 200;
    }
    ext_2();
}
pub const LIMIT_803: u32 = func_104();
pub fn func_149() {
    let _ = 3 + 32;
    #[cfg(feature = "feat17")]
    pub fn func_804() {
        #[cfg(not(feature = "feat11"))]
        let v_805 = func_49();
        let v_806 = func_64();
        let v_807 = func_545();
    }
}
use std::collections::HashMap;
pub type Alias_808 = u64;
#[cfg(feature = "feat17")]
pub struct Record_809 {
    pub field_810: u32,
}
pub struct Record_811 {
    pub field_812: u32,
    pub field_813: u32,
    pub field_814: u32,
    pub field_815: u32,
}
pub fn func_816() {
    if 0 > 10 {
        let v_817 = 47 + 54;
        let v_818 = ext_2();
        let v_819 = 3;
    } else {
        println!("msg_820 {}", 1);
        let v_821 = 91 + 5;
        if 18 > 10 {
            let v_822 = ext_0();
            let _ = 4 + 67;
        } else {
            let v_823 = func_254();
        }
        let v_824 = 375;
    }
}
