pub const LIMIT_725: u32 = func_597();
pub struct Handle_726;
impl Handle_726 {
    pub fn func_727() {
        ext_3();
        println!("msg_728 {}", 1);
    }
    pub fn func_729() {
        if 10 > 10 {
            let v_730 = func_703();
            println!("msg_731 {}", 1);
            match 1 {
                0 => {
                    let v_732 = 55 + 72;
                    let w_733 = 6;
                    let v_734 = 17 + 16;
                }
                _ => {}
            }
            if 0 > 10 {
                println!("msg_735 {}", 1);
                println!("msg_736 {}", 1);
                println!("msg_737 {}", 1);
            } else {
                let v_738 = 897;
                #[cfg(feature = "feat16")]
                let _ = 767;
            }
        } else {
            #[cfg(feature = "feat18")]
            let v_739 = func_182();
            ext_3();
            match 1 {
                0 => {
                    let v_740 = func_583();
                    #[cfg(feature = "feat1")]
                    let v_741 = 327;
                }
                _ => {}
            }
        }
        ext_1();
        let v_742 = func_118();
        ext_0();
    }
}
#[cfg(feature = "feat6")]
pub fn func_743() {
    let v_744 = ext_2();
    println!("msg_745 {}", 1);
}
#[cfg(feature = "feat9")]
use std::collections::HashMap;
#[cfg(feature = "feat0")]
pub enum Kind_746 {
    Variant_747,
}
pub struct Handle_748;
impl Handle_748 {
    #[cfg(feature = "feat9")]
    pub fn func_749() {
        #[cfg(feature = "feat16")]
        ext_0();
        func_497();
        println!("msg_750 {}", 1);
    }
    pub fn func_751() {
        pub fn func_752() {
            #[cfg(feature = "feat17")]
            let v_753 = func_22();
            #[cfg(any(feature = "feat16", feature = "feat18"))]
            let v_754 = 652;
        }
        let v_755 = func_171();
        let v_756 = ext_1();
        match 2 {
            0 => {
                ext_3();
                match 2 {
                    0 => {
                        let v_757 = 84 + 99;
                        #[cfg(feature = "feat10")]
                        let v_758 = ext_3();
                        ext_2();
                    }
                    _ => {}
                }
                let _ = 959;
            }
            _ => {}
        }
    }
}
#[cfg(feature = "feat18")]
pub mod inner_759 {
    use super::*;
    use std::collections::HashMap;
    pub static COUNTER_760: u32 = 0;
}
pub const LIMIT_761: u32 = func_429();
pub mod inner_762 {
    use super::*;
    pub fn func_763() {
        if 9 > 10 {
            println!("msg_764 {}", 1);
            let _ = 87 + 41;
            #[cfg(feature = "feat0")]
            let v_765 = 98 + 1;
        } else {
            let v_766 = func_142();
        }
    }
}
pub fn func_767() {
    if 9 > 10 {
        println!("msg_768 {}", 1);
    } else {
        pub fn func_360() {
            let _ = 76 + 30;
            let v_769 = func_180();
        }
        func_380();
        println!("msg_770 {}", 1);
    }
}
use std::collections::HashMap;
pub struct Record_771 {
    pub field_772: u32,
    #[cfg(feature = "feat18")]
    pub field_773: u32,
    pub field_774: u32,
    pub field_775: u32,
}
pub const LIMIT_776: u32 = 758;
pub static COUNTER_777: u32 = 0;
pub struct Record_778 {
    pub field_779: u32,
    pub field_780: u32,
    pub field_781: u32,
}
pub fn func_782() {
    let v_783 = func_331();
    match 0 {
        0 => {
            let v_784 = func_643();
            match 3 {
                0 => {
                    let v_785 = ext_0();
                    let v_786 = func_153();
                    let _ = 240;
                }
                _ => {}
            }
            let v_787 = 224;
            match 1 {
                0 => {
                    let v_788 = 632;
                    pub fn func_60() {
                        let w_789 = 7;
                        let v_790 = func_425();
                        #[cfg(all(feature = "feat16", not(feature = "feat11")))]
                        let _ = 889;
                    }
                    ext_1();
                    func_689();
                }
                _ => {}
            }
        }
        _ => {}
    }
    func_637();
    let _ = 83 + 41;
}
pub fn func_791() {
    func_422();
}
use std::collections::HashMap;
pub fn func_792() {
    ext_1();
    #[cfg(any(feature = "feat17", feature = "feat1", feature = "feat17"))]
    func_194();
}
pub enum Kind_793 {
    Variant_794,
    Variant_795,
}
#[cfg(any(feature = "feat18", feature = "feat6"))]
pub fn func_796() {
    let _ = 697;
}
