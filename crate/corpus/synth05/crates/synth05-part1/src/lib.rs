pub mod module0;
pub mod module1;
pub mod module2;
#[cfg(feature = "m1_5")]
pub mod module3;
pub type Alias_635 = u64;
pub struct Record_636 {
    pub field_637: u32,
    #[cfg(feature = "m1_6")]
    pub field_638: u32,
    #[cfg(feature = "m1_7")]
    pub field_639: u32,
}
pub struct Handle_640;
impl Handle_640 {
    pub fn func_641() {
        let v_642 = 182;
    }
}
pub enum Kind_643 {
    Variant_644,
    Variant_645,
}
pub fn func_646() {
    let v_647 = 75 + 80;
    let _ = 275;
}
#[cfg(feature = "m1_2")]
pub fn func_648() {
    let _ = 679;
}
pub fn func_649() {
    pub fn func_334() {
        let v_650 = func_573();
        match 4 {
            0 => {
                let v_651 = ext_2();
                let v_652 = ext_1();
                #[cfg(feature = "m1_6")]
                pub fn func_653() {
                    ext_1();
                }
                if 7 > 10 {
                    let v_654 = 717;
                } else {
                    let w_655 = 2;
                    let v_656 = func_479();
                    let w_657 = 3;
                }
            }
            _ => {}
        }
        let v_658 = func_21();
        println!("msg_659 {}", 1);
    }
    let v_660 = ext_1();
    #[cfg(feature = "m1_2")]
    ext_3();
    println!("msg_661 {}", 1);
}
pub type Alias_662 = u64;
#[cfg(all(feature = "m1_3", not(feature = "m1_4")))]
pub fn func_60() {
    if 2 > 10 {
        let v_663 = 86 + 43;
        let v_664 = func_34();
        let v_665 = 581;
        func_506();
    } else {
        println!("msg_666 {}", 1);
    }
    ext_0();
    let _ = 24 + 97;
}
pub enum Kind_667 {
    Variant_668,
}
pub type Alias_669 = u64;
pub fn func_670() {
    ext_3();
    if 11 > 10 {
        let v_671 = func_69();
        func_336();
    } else {
        match 3 {
            0 => {
                let v_672 = 64 + 85;
                match 4 {
                    0 => {
                        let w_673 = 0;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let _ = 51 + 62;
        #[cfg(feature = "m1_8")]
        let v_674 = 769;
        let v_675 = 51 + 51;
    }
    pub fn func_676() {
        if 4 > 10 {
            match 1 {
                0 => {
                    #[cfg(feature = "m1_6")]
                    let v_677 = func_307();
                    println!("msg_678 {}", 1);
                    let v_679 = 64 + 83;
                    println!("msg_680 {}", 1);
                }
                _ => {}
            }
            let v_681 = func_494();
            #[cfg(not(feature = "m1_4"))]
            func_118();
        } else {
            let v_682 = 7 + 33;
            pub fn func_683() {
                let w_684 = 5;
                let v_685 = ext_0();
                println!("msg_686 {}", 1);
                ext_1();
            }
            println!("msg_687 {}", 1);
        }
        match 0 {
            0 => {
                let v_688 = 947;
                func_125();
                pub fn func_689() {
                    let v_690 = 62 + 98;
                    let w_691 = 0;
                    #[cfg(feature = "m1_5")]
                    ext_3();
                }
            }
            _ => {}
        }
        let v_692 = 17 + 42;
        let v_693 = ext_3();
    }
}
pub fn func_694() {
    pub fn func_695() {
        let v_696 = func_304();
        let v_697 = ext_1();
        #[cfg(not(feature = "m1_4"))]
        let v_698 = ext_1();
    }
    let v_699 = ext_2();
    println!("msg_700 {}", 1);
}
pub const LIMIT_701: u32 = func_648();
use std::collections::HashMap;
#[cfg(feature = "m1_2")]
pub const LIMIT_702: u32 = func_653();
pub type Alias_703 = u64;
pub fn func_704() {
    pub fn func_705() {
        match 3 {
            0 => {
                println!("msg_706 {}", 1);
                println!("msg_707 {}", 1);
                #[cfg(any(feature = "m1_6", feature = "m1_5"))]
                let v_708 = 7 + 13;
                let v_709 = ext_1();
            }
            _ => {}
        }
        println!("msg_710 {}", 1);
    }
    if 17 > 10 {
        let _ = 455;
    } else {
        if 1 > 10 {
            if 0 > 10 {
                println!("msg_711 {}", 1);
                let w_712 = 2;
            } else {
                #[cfg(feature = "m1_1")]
                let _ = 12 + 99;
                let w_713 = 3;
            }
            if 2 > 10 {
                #[cfg(all(feature = "m1_8", not(feature = "m1_0")))]
                let v_714 = ext_1();
                let v_715 = 13 + 38;
                let v_716 = func_465();
                let w_717 = 5;
            } else {
                let _ = 67 + 73;
                let v_718 = 826;
                let v_719 = func_47();
            }
            let v_720 = func_279();
        } else {
            #[cfg(feature = "m1_2")]
            let v_721 = func_525();
            let _ = 355;
            pub fn func_92() {
                let _ = 97 + 5;
                #[cfg(feature = "m1_6")]
                func_296();
                println!("msg_722 {}", 1);
                let v_723 = func_386();
            }
        }
        let v_724 = func_641();
        match 2 {
            0 => {
                if 13 > 10 {
                    println!("msg_725 {}", 1);
                } else {
                    let v_726 = func_198();
                    println!("msg_727 {}", 1);
                    println!("msg_728 {}", 1);
                    #[cfg(feature = "m1_8")]
                    let v_729 = 327;
                }
                let v_730 = 46 + 4;
            }
            _ => {}
        }
    }
    func_75();
}
pub mod inner_731 {
    use super::*;
    pub static COUNTER_732: u32 = 0;
}
pub fn func_733() {
    println!("msg_734 {}", 1);
    func_201();
    #[cfg(feature = "m1_6")]
    let _ = 90 + 93;
    if 6 > 10 {
        let v_735 = 901;
        let v_736 = func_161();
        if 1 > 10 {
            #[cfg(feature = "m1_5")]
            pub fn func_737() {
                #[cfg(feature = "m1_6")]
                func_125();
                let v_738 = 250;
            }
            let v_739 = ext_3();
            #[cfg(feature = "m1_7")]
            let v_740 = func_104();
        } else {
            #[cfg(feature = "m1_1")]
            func_316();
            let v_741 = func_495();
        }
    } else {
        let v_742 = ext_1();
        match 1 {
            0 => {
                let _ = 25 + 50;
            }
            _ => {}
        }
        let v_743 = 198;
        func_168();
    }
}
pub struct Record_744 {
    pub field_745: u32,
    pub field_746: u32,
    pub field_747: u32,
    pub field_748: u32,
}
pub fn func_749() {
    println!("msg_750 {}", 1);
    if 7 > 10 {
        println!("msg_751 {}", 1);
        pub fn func_752() {
            #[cfg(feature = "m1_5")]
            let v_753 = func_506();
            let v_754 = ext_2();
            let _ = 56 + 78;
            let v_755 = func_261();
        }
    } else {
        if 8 > 10 {
            match 0 {
                0 => {
                    ext_0();
                }
                _ => {}
            }
        } else {
            let v_756 = func_21();
            let v_757 = func_552();
            let v_758 = func_14();
            let v_759 = func_316();
        }
        pub fn func_760() {
            func_420();
            let v_761 = func_363();
            let v_762 = ext_3();
            let v_763 = func_622();
        }
        if 13 > 10 {
            ext_2();
            let v_764 = func_71();
            let v_765 = 157;
        } else {
            #[cfg(feature = "m1_3")]
            ext_2();
            println!("msg_766 {}", 1);
            let v_767 = func_309();
        }
        if 0 > 10 {
            let v_768 = func_575();
            #[cfg(feature = "m1_8")]
            let v_769 = 59 + 52;
            let _ = 798;
        } else {
            if 7 > 10 {
                let v_770 = 939;
                let w_771 = 0;
                let v_772 = 95 + 81;
                let _ = 25 + 77;
            } else {
                let w_773 = 3;
                let v_774 = func_75();
            }
            pub fn func_775() {
                let w_776 = 5;
                println!("msg_777 {}", 1);
            }
            let v_778 = func_646();
            #[cfg(feature = "m1_6")]
            func_416();
        }
    }
    match 4 {
        0 => {
            println!("msg_779 {}", 1);
            println!("msg_780 {}", 1);
            let v_781 = func_494();
            let _ = 3 + 92;
        }
        _ => {}
    }
    let v_782 = func_196();
}
pub fn func_783() {
    #[cfg(any(feature = "m1_7", feature = "m1_8"))]
    ext_1();
    let _ = 21;
    ext_2();
    println!("msg_784 {}", 1);
}
pub mod inner_785 {
    use super::*;
    pub struct Handle_786;
    impl Handle_786 {
        pub fn func_787() {
            pub fn func_788() {
                let v_789 = ext_1();
                let w_790 = 5;
                let v_791 = 2 + 77;
            }
            if 17 > 10 {
                let v_792 = 164;
                let w_793 = 2;
                let v_794 = 73 + 94;
                let w_795 = 7;
            } else {
                let _ = 502;
            }
        }
        pub fn func_796() {
            println!("msg_797 {}", 1);
            let v_798 = func_340();
        }
    }
}
