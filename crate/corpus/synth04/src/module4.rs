pub fn func_630() {
    func_142();
}
pub const LIMIT_631: u32 = ext_0();
pub fn func_338() {
    let v_632 = func_448();
    println!("msg_633 {}", 1);
    println!("msg_634 {}", 1);
    let v_635 = func_113();
}
#[cfg(any(feature = "feat6", feature = "feat9"))]
use std::collections::HashMap;
pub mod inner_636 {
    use super::*;
    pub fn func_637() {
        func_425();
        let v_638 = 174;
        #[cfg(any(feature = "feat18", feature = "feat3"))]
        let v_639 = ext_1();
        println!("msg_640 {}", 1);
    }
    #[cfg(any(feature = "feat13", feature = "feat8"))]
    pub mod inner_641 {
        use super::*;
        #[cfg(not(feature = "feat12"))]
        pub const LIMIT_642: u32 = 85 + 25;
        pub fn func_643() {
            match 4 {
                0 => {
                    let w_644 = 1;
                    let v_645 = 926;
                    let v_646 = 157;
                    let w_647 = 0;
                }
                _ => {}
            }
            let v_648 = func_260();
            let v_649 = ext_0();
            let v_650 = 53 + 54;
        }
        pub struct Record_651 {
            pub field_652: u32,
            pub field_653: u32,
            pub field_654: u32,
        }
    }
    pub fn func_655() {
        let v_656 = func_192();
    }
}
pub mod inner_657 {
    use super::*;
    pub static COUNTER_658: u32 = 0;
    pub mod inner_659 {
        use super::*;
        #[cfg(feature = "feat9")]
        pub enum Kind_660 {
            Variant_661,
            Variant_662,
            Variant_663,
            #[cfg(any(feature = "feat16", feature = "feat17"))]
            Variant_664,
        }
    }
    #[cfg(feature = "feat14")]
    use std::collections::HashMap;
}
pub static COUNTER_665: u32 = 0;
pub struct Record_666 {
    pub field_667: u32,
    #[cfg(feature = "feat1")]
    pub field_668: u32,
}
pub struct Record_669 {
    #[cfg(feature = "feat13")]
    pub field_670: u32,
}
pub mod inner_671 {
    use super::*;
    pub mod inner_672 {
        use super::*;
        pub fn func_673() {
            let v_674 = 993;
            #[cfg(feature = "feat16")]
            let v_675 = 644;
            ext_1();
            match 1 {
                0 => {
                    let v_676 = func_539();
                    println!("msg_677 {}", 1);
                    let w_678 = 1;
                }
                _ => {}
            }
        }
        pub mod inner_679 {
            use super::*;
            pub const LIMIT_680: u32 = 66 + 52;
        }
        pub mod inner_681 {
            use super::*;
            pub const LIMIT_682: u32 = 19;
            #[cfg(feature = "feat10")]
            use std::collections::HashMap;
            pub fn func_155() {
                let w_683 = 2;
                ext_1();
                println!("msg_684 {}", 1);
            }
        }
    }
    pub mod inner_685 {
        use super::*;
        pub static COUNTER_686: u32 = 0;
        pub static COUNTER_687: u32 = 0;
    }
}
pub fn func_688() {
    pub fn func_446() {
        pub fn func_689() {
            match 0 {
                0 => {
                    func_260();
                }
                _ => {}
            }
            pub fn func_690() {
                let _ = 68 + 62;
                let v_691 = func_611();
            }
            match 3 {
                0 => {
                    #[cfg(feature = "feat14")]
                    let v_692 = ext_2();
                    func_272();
                    #[cfg(all(feature = "feat6", not(feature = "feat7")))]
                    let v_693 = ext_3();
                }
                _ => {}
            }
            let v_694 = 634;
        }
        println!("msg_695 {}", 1);
        println!("msg_696 {}", 1);
    }
    match 1 {
        0 => {
            if 4 > 10 {
                let v_697 = func_396();
                println!("msg_698 {}", 1);
                if 7 > 10 {
                    let v_699 = 214;
                    #[cfg(feature = "feat9")]
                    let v_700 = 962;
                    func_360();
                } else {
                    func_514();
                    #[cfg(feature = "feat10")]
                    let v_701 = func_673();
                    let v_702 = 36 + 82;
                }
            } else {
                #[cfg(feature = "feat0")]
                pub fn func_703() {
                    let v_704 = 9 + 12;
                }
                pub fn func_705() {
                    let v_706 = 62 + 97;
                    let v_707 = func_493();
                }
                println!("msg_708 {}", 1);
            }
        }
        _ => {}
    }
    let v_709 = func_349();
}
use std::collections::HashMap;
pub struct Record_710 {
    pub field_711: u32,
    pub field_712: u32,
}
pub struct Handle_713;
#[cfg(not(feature = "feat4"))]
impl Handle_713 {
    pub fn func_714() {
        let v_715 = ext_3();
        let v_716 = ext_1();
    }
    pub fn func_717() {
        match 2 {
            0 => {
                println!("msg_718 {}", 1);
                let v_719 = 362;
                let v_720 = ext_0();
            }
            _ => {}
        }
        println!("msg_721 {}", 1);
        let v_722 = 238;
        pub fn func_723() {
            let _ = 73 + 60;
            if 18 > 10 {
                func_314();
            } else {
                ext_1();
            }
            let v_724 = 732;
        }
    }
}
pub mod nested;
