pub mod module0;
pub mod module1;
pub mod module2;
#[cfg(feature = "feat3")]
pub mod module3;
pub fn func_627() {
    let v_628 = 31 + 59;
}
#[cfg(feature = "feat4")]
pub fn func_555() {
    if 18 > 10 {
        pub fn func_629() {
            let v_630 = 89 + 13;
            #[cfg(any(feature = "feat9", feature = "feat9", feature = "feat8"))]
            let v_631 = func_484();
            match 3 {
                0 => {
                    let w_632 = 7;
                    #[cfg(not(feature = "feat6"))]
                    let v_633 = 248;
                    let _ = 116;
                }
                _ => {}
            }
        }
        match 0 {
            0 => {
                pub fn func_634() {
                    println!("msg_635 {}", 1);
                    let v_636 = ext_1();
                    let _ = 505;
                }
                ext_2();
                println!("msg_637 {}", 1);
            }
            _ => {}
        }
        let v_638 = 31 + 99;
    } else {
        #[cfg(any(feature = "feat9", feature = "feat9", feature = "feat8"))]
        func_460();
    }
    let _ = 63 + 51;
    let v_639 = ext_1();
    let v_640 = 76 + 32;
}
pub mod inner_641 {
    use super::*;
    #[cfg(any(feature = "feat3", feature = "feat4"))]
    pub fn func_642() {
        let v_643 = func_271();
    }
    pub fn func_644() {
        pub fn func_645() {
            let v_646 = func_172();
            let v_647 = 788;
        }
        pub fn func_648() {
            pub fn func_649() {
                let w_650 = 3;
                #[cfg(feature = "feat3")]
                func_250();
                let w_651 = 7;
                let v_652 = ext_2();
            }
        }
    }
    pub fn func_653() {
        pub fn func_654() {
            #[cfg(any(feature = "feat8", feature = "feat3", feature = "feat9"))]
            let v_655 = func_51();
            let v_656 = func_307();
        }
    }
}
pub struct Handle_657;
impl Handle_657 {
    pub fn func_658() {
        let v_659 = func_340();
        println!("msg_660 {}", 1);
        match 4 {
            0 => {
                let v_661 = func_460();
                func_76();
            }
            _ => {}
        }
    }
    pub fn func_662() {
        let _ = 880;
        let _ = 28 + 7;
        let v_663 = func_240();
    }
}
use std::collections::HashMap;
pub fn func_475() {
    if 15 > 10 {
        let v_664 = 93 + 87;
        let v_665 = 27 + 40;
    } else {
        #[cfg(feature = "feat9")]
        let _ = 96 + 46;
    }
}
pub type Alias_666 = u64;
#[cfg(any(feature = "feat4", feature = "feat3", feature = "feat9"))]
pub fn func_667() {
    if 8 > 10 {
        pub fn func_668() {
            println!("msg_669 {}", 1);
        }
    } else {
        let v_670 = 632;
        let v_671 = ext_3();
        let v_672 = 23 + 14;
    }
    let v_673 = func_41();
    let v_674 = 129;
    match 3 {
        0 => {
            #[cfg(not(feature = "feat0"))]
            let v_675 = func_606();
            func_256();
        }
        _ => {}
    }
}
pub static COUNTER_676: u32 = 0;
pub type Alias_677 = u64;
pub type Alias_678 = u64;
pub struct Handle_679;
impl Handle_679 {
    pub fn func_680() {
        ext_3();
        println!("msg_681 {}", 1);
        match 0 {
            0 => {
                let v_682 = 91 + 60;
            }
            _ => {}
        }
        let _ = 36 + 80;
    }
    pub fn func_683() {
        let v_684 = func_489();
    }
}
pub enum Kind_685 {
    Variant_686,
}
pub fn func_687() {
    let v_688 = 415;
    pub fn func_689() {
        pub fn func_690() {
            let v_691 = 83;
            let v_692 = func_357();
        }
        match 2 {
            0 => {
                match 1 {
                    0 => {
                        let w_693 = 1;
                    }
                    _ => {}
                }
                println!("msg_694 {}", 1);
                let v_695 = 96 + 26;
                println!("msg_696 {}", 1);
            }
            _ => {}
        }
        #[cfg(feature = "feat8")]
        let v_697 = 38 + 27;
    }
}
pub type Alias_698 = u64;
pub fn func_699() {
    pub fn func_700() {
        let v_701 = ext_1();
    }
}
pub fn func_702() {
    #[cfg(all(feature = "feat9", not(feature = "feat5")))]
    let v_703 = func_200();
    let v_704 = func_181();
    let v_705 = 997;
}
pub mod inner_706 {
    use super::*;
    #[cfg(feature = "feat8")]
    pub fn func_707() {
        let v_708 = func_627();
        #[cfg(not(feature = "feat7"))]
        let v_709 = ext_3();
    }
    #[cfg(any(feature = "feat8", feature = "feat4", feature = "feat4"))]
    pub fn func_642() {
        let v_710 = 340;
        println!("msg_711 {}", 1);
    }
}
use std::collections::HashMap;
pub fn func_699() {
    if 13 > 10 {
        pub fn func_712() {
            pub fn func_713() {
                println!("msg_714 {}", 1);
                let v_715 = ext_1();
                let w_716 = 4;
            }
            pub fn func_717() {
                let v_718 = 645;
                let w_719 = 0;
                println!("msg_720 {}", 1);
            }
            println!("msg_721 {}", 1);
            pub fn func_722() {
                let _ = 4 + 3;
                #[cfg(feature = "feat3")]
                let v_723 = func_119();
                let v_724 = ext_1();
                func_535();
            }
        }
        match 2 {
            0 => {
                pub fn func_725() {
                    println!("msg_726 {}", 1);
                }
                let v_727 = ext_0();
                println!("msg_728 {}", 1);
            }
            _ => {}
        }
        pub fn func_729() {
            let _ = 648;
            #[cfg(feature = "feat9")]
            let _ = 91 + 74;
        }
    } else {
        let v_730 = func_722();
        #[cfg(feature = "feat4")]
        let v_731 = func_484();
        func_618();
        pub fn func_732() {
            match 4 {
                0 => {
                    let v_733 = 5 + 42;
                    let v_734 = 29 + 96;
                }
                _ => {}
            }
        }
    }
}
pub fn func_735() {
    if 10 > 10 {
        let v_736 = func_445();
    } else {
        let v_737 = 935;
        println!("msg_738 {}", 1);
    }
    if 4 > 10 {
        println!("msg_739 {}", 1);
    } else {
        let _ = 38 + 45;
    }
}
pub fn func_740() {
    #[cfg(not(feature = "feat1"))]
    let _ = 831;
}
pub mod inner_741 {
    use super::*;
    pub struct Handle_742;
    #[cfg(feature = "feat4")]
    impl Handle_742 {
        pub fn func_743() {
            let v_744 = ext_1();
            match 3 {
                0 => {
                    let v_745 = 694;
                    let w_746 = 5;
                    let v_747 = 60;
                    let _ = 104;
                }
                _ => {}
            }
            let _ = 544;
        }
    }
}
pub fn func_527() {
    if 12 > 10 {
        if 4 > 10 {
            let v_748 = func_561();
        } else {
            if 6 > 10 {
                println!("msg_749 {}", 1);
            } else {
                ext_1();
                let v_750 = func_271();
                let v_751 = ext_1();
            }
            match 4 {
                0 => {
                    let w_752 = 2;
                    let v_753 = func_618();
                }
                _ => {}
            }
        }
        let _ = 712;
        if 0 > 10 {
            let v_754 = 40 + 85;
            #[cfg(feature = "feat9")]
            pub fn func_317() {
                let w_755 = 6;
                let w_756 = 7;
                println!("msg_757 {}", 1);
            }
            println!("msg_758 {}", 1);
            let v_759 = 2 + 14;
        } else {
            if 1 > 10 {
                let v_760 = 11 + 33;
            } else {
                #[cfg(any(feature = "feat9", feature = "feat8"))]
                let _ = 525;
                let v_761 = 1 + 58;
                let _ = 874;
            }
            match 4 {
                0 => {
                    let v_762 = 328;
                }
                _ => {}
            }
        }
    } else {
        func_482();
        let v_763 = 90 + 25;
    }
    let v_764 = 43 + 64;
    func_307();
}
pub type Alias_765 = u64;
pub fn func_766() {
    #[cfg(not(feature = "feat2"))]
    let v_767 = func_606();
}
pub enum Kind_768 {
    Variant_769,
}
#[cfg(feature = "feat8")]
pub const LIMIT_770: u32 = 77 + 78;
pub static COUNTER_771: u32 = 0;
#[cfg(feature = "feat9")]
pub fn func_772() {
    let v_773 = 616;
}
pub fn func_774() {
    match 1 {
        0 => {
            let v_775 = ext_1();
            println!("msg_776 {}", 1);
        }
        _ => {}
    }
}
pub fn func_777() {
    let v_778 = 4 + 37;
    #[cfg(any(feature = "feat4", feature = "feat3", feature = "feat4"))]
    func_344();
}
pub fn func_779() {
    println!("msg_780 {}", 1);
}
#[cfg(all(feature = "feat3", not(feature = "feat6")))]
use std::collections::HashMap;
pub fn func_781() {
    pub fn func_782() {
        #[cfg(feature = "feat8")]
        pub fn func_783() {
            pub fn func_784() {
                let w_785 = 2;
                let v_786 = func_511();
            }
            let _ = 54 + 60;
            let v_787 = func_563();
            let v_788 = ext_2();
        }
    }
    #[cfg(any(feature = "feat9", feature = "feat4"))]
    let v_789 = 99;
    #[cfg(feature = "feat8")]
    func_732();
}
