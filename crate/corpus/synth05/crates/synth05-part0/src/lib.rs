pub mod module0;
#[cfg(feature = "m0_5")]
pub mod module1;
pub mod module2;
#[cfg(feature = "m0_7")]
pub mod module3;
pub static COUNTER_666: u32 = 0;
pub fn func_667() {
    let v_668 = 171;
    if 18 > 10 {
        pub fn func_669() {
            func_386();
        }
        if 13 > 10 {
            #[cfg(all(feature = "m0_1", not(feature = "m0_2")))]
            let v_670 = ext_2();
            if 6 > 10 {
                func_349();
            } else {
                println!("msg_671 {}", 1);
                let _ = 82 + 48;
                #[cfg(feature = "m0_7")]
                let v_672 = 137;
            }
        } else {
            println!("msg_673 {}", 1);
            match 1 {
                0 => {
                    let v_674 = 267;
                    let w_675 = 0;
                    let v_676 = 52 + 48;
                }
                _ => {}
            }
            let v_677 = 58 + 34;
            match 3 {
                0 => {
                    let v_678 = 40 + 61;
                    let v_679 = ext_1();
                }
                _ => {}
            }
        }
        #[cfg(feature = "m0_0")]
        let v_680 = 16;
        let v_681 = func_618();
    } else {
        match 0 {
            0 => {
                pub fn func_682() {
                    #[cfg(any(feature = "m0_1", feature = "m0_1"))]
                    let _ = 337;
                    let v_683 = ext_1();
                    println!("msg_684 {}", 1);
                    #[cfg(feature = "m0_1")]
                    let v_685 = ext_3();
                }
                println!("msg_686 {}", 1);
                let v_687 = func_459();
            }
            _ => {}
        }
        println!("msg_688 {}", 1);
    }
    let v_689 = ext_1();
}
pub fn func_690() {
    let v_691 = func_595();
    let v_692 = ext_1();
    let v_693 = 40 + 79;
}
use std::collections::HashMap;
#[cfg(feature = "m0_7")]
pub fn func_694() {
    println!("msg_695 {}", 1);
    match 0 {
        0 => {
            println!("msg_696 {}", 1);
            let _ = 554;
        }
        _ => {}
    }
    func_595();
}
#[cfg(all(feature = "m0_7", not(feature = "m0_2")))]
pub type Alias_697 = u64;
#[cfg(feature = "m0_5")]
pub fn func_698() {
    match 2 {
        0 => {
            let v_699 = ext_1();
            func_119();
            if 5 > 10 {
                let v_700 = 29 + 35;
                if 6 > 10 {
                    let _ = 55 + 12;
                    let w_701 = 6;
                    let v_702 = ext_0();
                } else {
                    func_332();
                }
                func_75();
            } else {
                println!("msg_703 {}", 1);
            }
        }
        _ => {}
    }
    let v_704 = 69 + 31;
    let v_705 = func_407();
    pub fn func_706() {
        #[cfg(not(feature = "m0_2"))]
        let v_707 = func_448();
        let v_708 = ext_2();
    }
}
pub fn func_709() {
    #[cfg(feature = "m0_7")]
    let v_710 = 579;
    let _ = 562;
    match 4 {
        0 => {
            #[cfg(not(feature = "m0_2"))]
            let v_711 = 679;
            if 0 > 10 {
                let _ = 423;
                let v_712 = func_492();
                println!("msg_713 {}", 1);
                #[cfg(not(feature = "m0_2"))]
                let v_714 = ext_0();
            } else {
                #[cfg(any(feature = "m0_3", feature = "m0_6", feature = "m0_8"))]
                let v_715 = 946;
            }
            let v_716 = func_228();
        }
        _ => {}
    }
}
#[cfg(feature = "m0_6")]
use std::collections::HashMap;
pub static COUNTER_717: u32 = 0;
pub enum Kind_718 {
    Variant_719,
    Variant_720,
    Variant_721,
    Variant_722,
}
pub static COUNTER_723: u32 = 0;
#[cfg(feature = "m0_5")]
pub fn func_724() {
    match 4 {
        0 => {
            #[cfg(feature = "m0_7")]
            pub fn func_725() {
                pub fn func_726() {
                    #[cfg(feature = "m0_8")]
                    let _ = 73 + 79;
                    let v_727 = 96 + 63;
                    #[cfg(feature = "m0_8")]
                    let v_728 = 961;
                }
                let _ = 41 + 39;
                #[cfg(feature = "m0_8")]
                pub fn func_729() {
                    let w_730 = 7;
                    func_94();
                    let v_731 = func_70();
                }
            }
            #[cfg(not(feature = "m0_2"))]
            let _ = 477;
            #[cfg(feature = "m0_8")]
            let v_732 = func_211();
        }
        _ => {}
    }
}
pub static COUNTER_733: u32 = 0;
pub struct Handle_734;
impl Handle_734 {
    pub fn func_735() {
        let v_736 = func_446();
        let v_737 = func_191();
    }
}
pub fn func_738() {
    let v_739 = func_329();
}
pub type Alias_740 = u64;
pub mod inner_741 {
    use super::*;
    pub fn func_336() {
        func_148();
    }
    #[cfg(feature = "m0_3")]
    pub struct Record_742 {
        #[cfg(feature = "m0_8")]
        pub field_743: u32,
    }
}
pub fn func_744() {
    let v_745 = 640;
    func_191();
}
pub enum Kind_746 {
    Variant_747,
    Variant_748,
}
pub fn func_749() {
    if 3 > 10 {
        let v_750 = func_339();
        let v_751 = 491;
        let _ = 74 + 85;
        if 19 > 10 {
            let v_752 = func_446();
            let v_753 = func_252();
            #[cfg(feature = "m0_1")]
            let v_754 = func_466();
            let v_755 = 731;
        } else {
            let v_756 = ext_3();
        }
    } else {
        if 10 > 10 {
            #[cfg(feature = "m0_7")]
            pub fn func_757() {
                let w_758 = 0;
                println!("msg_759 {}", 1);
            }
        } else {
            match 1 {
                0 => {
                    #[cfg(any(feature = "m0_6", feature = "m0_7", feature = "m0_8"))]
                    let v_760 = func_69();
                    let v_761 = ext_2();
                    ext_1();
                    println!("msg_762 {}", 1);
                }
                _ => {}
            }
        }
        let v_763 = 795;
        let _ = 98;
    }
    let v_764 = ext_0();
    let v_765 = func_384();
    match 2 {
        0 => {
            match 4 {
                0 => {
                    let v_766 = ext_0();
                    #[cfg(any(feature = "m0_7", feature = "m0_1", feature = "m0_4"))]
                    pub fn func_102() {
                        let w_767 = 5;
                        let w_768 = 6;
                        #[cfg(any(feature = "m0_8", feature = "m0_8", feature = "m0_8"))]
                        func_70();
                        let w_769 = 2;
                    }
                    println!("msg_770 {}", 1);
                    ext_2();
                }
                _ => {}
            }
            let v_771 = 40 + 28;
        }
        _ => {}
    }
}
pub struct Handle_772;
impl Handle_772 {
    #[cfg(feature = "m0_0")]
    pub fn func_773() {
        let v_774 = func_545();
        if 14 > 10 {
            let v_775 = func_621();
            if 16 > 10 {
                ext_0();
                let w_776 = 2;
            } else {
                #[cfg(feature = "m0_6")]
                let v_777 = func_386();
                let v_778 = 246;
                println!("msg_779 {}", 1);
            }
            let _ = 38 + 37;
            match 0 {
                0 => {
                    let w_780 = 4;
                }
                _ => {}
            }
        } else {
            pub fn func_781() {
                let w_782 = 6;
                println!("msg_783 {}", 1);
            }
            match 2 {
                0 => {
                    ext_3();
                    func_254();
                    let w_784 = 6;
                    let w_785 = 1;
                }
                _ => {}
            }
        }
    }
    pub fn func_786() {
        let v_787 = func_301();
    }
}
#[cfg(any(feature = "m0_6", feature = "m0_1", feature = "m0_4"))]
pub fn func_788() {
    pub fn func_789() {
        let v_790 = ext_0();
        println!("msg_791 {}", 1);
        #[cfg(all(feature = "m0_7", not(feature = "m0_2")))]
        func_400();
        #[cfg(not(feature = "m0_2"))]
        let _ = 91 + 84;
    }
    let v_792 = ext_3();
    println!("msg_793 {}", 1);
    func_4();
}
use std::collections::HashMap;
pub fn func_794() {
    let v_795 = func_178();
}
pub const LIMIT_796: u32 = 79 + 69;
pub enum Kind_797 {
    Variant_798,
    Variant_799,
}
#[cfg(feature = "m0_5")]
pub struct Record_800 {
    #[cfg(feature = "m0_7")]
    pub field_801: u32,
    pub field_802: u32,
    pub field_803: u32,
    pub field_804: u32,
}
pub type Alias_805 = u64;
pub enum Kind_806 {
    Variant_807,
}
pub fn func_808() {
    let v_809 = 686;
}
pub mod inner_810 {
    use super::*;
    #[cfg(feature = "m0_1")]
    pub enum Kind_811 {
        Variant_812,
        #[cfg(feature = "m0_6")]
        Variant_813,
        Variant_814,
    }
    pub static COUNTER_815: u32 = 0;
    pub mod inner_816 {
        use super::*;
        pub struct Record_817 {
            pub field_818: u32,
        }
    }
}
pub struct Handle_819;
impl Handle_819 {
    pub fn func_820() {
        if 5 > 10 {
            let v_821 = 28 + 15;
            #[cfg(all(feature = "m0_0", not(feature = "m0_2")))]
            func_652();
            if 18 > 10 {
                func_191();
                let w_822 = 3;
            } else {
                #[cfg(not(feature = "m0_2"))]
                let v_823 = func_384();
                func_421();
                println!("msg_824 {}", 1);
                #[cfg(not(feature = "m0_2"))]
                let v_825 = 538;
            }
        } else {
            #[cfg(feature = "m0_5")]
            func_161();
        }
    }
    pub fn func_826() {
        println!("msg_827 {}", 1);
        println!("msg_828 {}", 1);
        println!("msg_829 {}", 1);
    }
}
