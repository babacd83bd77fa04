pub type Alias_688 = u64;
pub fn func_689() {
    let v_690 = 185;
    pub fn func_691() {
        func_605();
        let v_692 = 30 + 92;
        let v_693 = 635;
    }
    func_129();
}
pub mod inner_694 {
    use super::*;
    pub struct Handle_695;
    impl Handle_695 {
        pub fn func_696() {
            let _ = 42 + 74;
            let v_697 = func_689();
        }
        pub fn func_698() {
            let v_699 = func_462();
            match 0 {
                0 => {
                    let v_700 = 5 + 54;
                    let w_701 = 8;
                    let v_702 = func_143();
                }
                _ => {}
            }
            let v_703 = ext_1();
            let _ = 797;
        }
    }
    pub mod inner_704 {
        use super::*;
        pub fn func_705() {
            println!("msg_706 {}", 1);
            func_536();
        }
        pub struct Handle_707;
        #[cfg(feature = "m1_6")]
        impl Handle_707 {
            pub fn func_708() {
                #[cfg(feature = "m1_7")]
                func_627();
                let v_709 = ext_1();
            }
        }
        pub const LIMIT_710: u32 = func_113();
    }
    pub mod inner_711 {
        use super::*;
        pub fn func_712() {
            #[cfg(feature = "m1_1")]
            let v_713 = 386;
            match 2 {
                0 => {
                    let _ = 87 + 17;
                    let v_714 = ext_2();
                    println!("msg_715 {}", 1);
                    #[cfg(all(feature = "m1_7", not(feature = "m1_3")))]
                    let v_716 = 138;
                }
                _ => {}
            }
            match 1 {
                0 => {
                    let w_717 = 5;
                    #[cfg(feature = "m1_2")]
                    let v_718 = func_528();
                    let w_719 = 5;
                    let v_720 = ext_0();
                }
                _ => {}
            }
        }
        pub fn func_721() {
            match 2 {
                0 => {
                    let w_722 = 5;
                    let v_723 = func_513();
                    let _ = 464;
                    let w_724 = 4;
                }
                _ => {}
            }
            func_309();
            pub fn func_279() {
                let v_725 = 220;
                let w_726 = 2;
            }
            let v_727 = 48 + 97;
        }
        pub static COUNTER_728: u32 = 0;
    }
}
pub const LIMIT_729: u32 = func_106();
#[cfg(any(feature = "m1_7", feature = "m1_2"))]
pub fn func_730() {
    pub fn func_731() {
        func_187();
        match 2 {
            0 => {
                let v_732 = 79 + 91;
                let v_733 = func_113();
                println!("msg_734 {}", 1);
            }
            _ => {}
        }
        match 0 {
            0 => {
                func_575();
                let v_735 = 68 + 99;
                if 7 > 10 {
                    #[cfg(feature = "m1_8")]
                    let v_736 = func_152();
                    #[cfg(not(feature = "m1_9"))]
                    let v_737 = 379;
                } else {
                    let v_738 = func_520();
                }
            }
            _ => {}
        }
        pub fn func_739() {
            if 19 > 10 {
                let v_740 = func_698();
                let w_741 = 8;
                #[cfg(feature = "m1_8")]
                let v_742 = ext_0();
            } else {
                let v_743 = func_287();
            }
            println!("msg_744 {}", 1);
        }
    }
}
#[cfg(feature = "m1_1")]
pub type Alias_745 = u64;
pub type Alias_746 = u64;
pub fn func_747() {
    println!("msg_748 {}", 1);
}
#[cfg(feature = "m1_1")]
pub fn func_749() {
    let v_750 = 69 + 17;
}
pub const LIMIT_751: u32 = 83 + 44;
#[cfg(feature = "m1_2")]
pub struct Record_752 {
    pub field_753: u32,
    pub field_754: u32,
    pub field_755: u32,
}
pub fn func_756() {
    match 2 {
        0 => {
            let v_757 = 94;
            let v_758 = func_681();
            let v_759 = func_159();
            println!("msg_760 {}", 1);
        }
        _ => {}
    }
    match 2 {
        0 => {
            pub fn func_761() {
                #[cfg(feature = "m1_7")]
                func_233();
                #[cfg(feature = "m1_2")]
                let v_762 = func_684();
                let v_763 = 241;
                pub fn func_268() {
                    #[cfg(any(feature = "m1_4", feature = "m1_6"))]
                    let v_764 = func_311();
                }
            }
        }
        _ => {}
    }
}
pub struct Record_765 {
    pub field_766: u32,
    pub field_767: u32,
    pub field_768: u32,
}
pub fn func_769() {
    pub fn func_770() {
        pub fn func_771() {
            let v_772 = func_627();
            let v_773 = 447;
        }
        func_731();
        println!("msg_774 {}", 1);
        let _ = 684;
    }
    #[cfg(feature = "m1_1")]
    let v_775 = func_345();
    println!("msg_776 {}", 1);
}
pub mod nested;
