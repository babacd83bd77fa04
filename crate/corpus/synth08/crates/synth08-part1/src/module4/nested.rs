pub struct Record_777 {
    pub field_778: u32,
    pub field_779: u32,
}
pub fn func_780() {
    match 3 {
        0 => {
            let v_781 = ext_3();
            #[cfg(not(feature = "m1_3"))]
            let v_782 = ext_1();
            let v_783 = func_646();
            let v_784 = ext_2();
        }
        _ => {}
    }
    let v_785 = 769;
    pub fn func_238() {
        match 2 {
            0 => {
                println!("msg_786 {}", 1);
                println!("msg_787 {}", 1);
                match 4 {
                    0 => {
                        let v_788 = ext_3();
                    }
                    _ => {}
                }
                if 9 > 10 {
                    let v_789 = func_122();
                    let w_790 = 3;
                    let v_791 = 29 + 6;
                    let w_792 = 3;
                } else {
                    let v_793 = 899;
                    let v_794 = func_705();
                    let w_795 = 1;
                }
            }
            _ => {}
        }
        pub fn func_143() {
            pub fn func_796() {
                let w_797 = 3;
                println!("msg_798 {}", 1);
                func_106();
            }
            func_42();
        }
    }
    let v_799 = 56 + 87;
}
pub type Alias_800 = u64;
#[cfg(all(feature = "m1_7", not(feature = "m1_5")))]
pub fn func_801() {
    let v_802 = func_689();
}
pub fn func_803() {
    func_531();
}
#[cfg(not(feature = "m1_0"))]
use std::collections::HashMap;
use std::collections::HashMap;
pub const LIMIT_804: u32 = func_681();
use std::collections::HashMap;
pub static COUNTER_805: u32 = 0;
use std::collections::HashMap;
pub fn func_806() {
    func_365();
}
pub enum Kind_807 {
    #[cfg(feature = "m1_2")]
    Variant_808,
    Variant_809,
    Variant_810,
    #[cfg(feature = "m1_1")]
    Variant_811,
}
#[cfg(feature = "m1_7")]
pub const LIMIT_812: u32 = func_79();
pub mod inner_813 {
    use super::*;
    pub struct Record_814 {
        pub field_815: u32,
        #[cfg(feature = "m1_1")]
        pub field_816: u32,
        #[cfg(feature = "m1_6")]
        pub field_817: u32,
    }
    pub type Alias_818 = u64;
    pub enum Kind_819 {
        Variant_820,
    }
}
pub mod inner_821 {
    use super::*;
    pub fn func_822() {
        #[cfg(feature = "m1_2")]
        let _ = 9 + 16;
        #[cfg(any(feature = "m1_8", feature = "m1_4", feature = "m1_1"))]
        let v_823 = func_761();
    }
}
pub mod inner_824 {
    use super::*;
    pub type Alias_825 = u64;
    pub static COUNTER_826: u32 = 0;
}
pub static COUNTER_827: u32 = 0;
pub struct Record_828 {
    #[cfg(feature = "m1_6")]
    pub field_829: u32,
    #[cfg(feature = "m1_8")]
    pub field_830: u32,
}
#[cfg(feature = "m1_7")]
pub fn func_831() {
    let v_832 = 30 + 17;
    let v_833 = 34 + 4;
    let v_834 = func_747();
    if 18 > 10 {
        let v_835 = func_634();
        if 14 > 10 {
            func_268();
            let v_836 = func_705();
        } else {
            ext_0();
            println!("msg_837 {}", 1);
            let v_838 = 13 + 50;
        }
        #[cfg(feature = "m1_8")]
        pub fn func_839() {
            func_806();
            let v_840 = 98 + 94;
            match 3 {
                0 => {
                    #[cfg(not(feature = "m1_10"))]
                    let v_841 = func_438();
                }
                _ => {}
            }
        }
    } else {
        pub fn func_842() {
            let _ = 69 + 20;
        }
    }
}
pub const LIMIT_843: u32 = func_586();
pub fn func_844() {
    let v_845 = 725;
    if 7 > 10 {
        #[cfg(not(feature = "m1_9"))]
        let v_846 = 45 + 58;
    } else {
        #[cfg(feature = "m1_6")]
        let v_847 = func_508();
        let v_848 = func_437();
        ext_3();
        println!("msg_849 {}", 1);
    }
    #[cfg(feature = "m1_4")]
    let v_850 = 225;
}
#[cfg(not(feature = "m1_3"))]
pub type Alias_851 = u64;
pub enum Kind_852 {
    Variant_853,
    Variant_854,
    Variant_855,
    Variant_856,
}
pub struct Handle_857;
impl Handle_857 {
    pub fn func_858() {
        let v_859 = func_844();
        func_345();
    }
}
#[cfg(feature = "m1_2")]
pub fn func_860() {
    let v_861 = ext_3();
    pub fn func_862() {
        func_122();
    }
}
#[cfg(feature = "m1_4")]
pub mod inner_863 {
    use super::*;
    pub mod inner_864 {
        use super::*;
        pub mod inner_865 {
            use super::*;
            pub fn func_866() {
                let w_867 = 1;
            }
        }
        #[cfg(all(feature = "m1_7", not(feature = "m1_5")))]
        pub struct Record_868 {
            #[cfg(not(feature = "m1_5"))]
            pub field_869: u32,
            pub field_870: u32,
        }
        #[cfg(feature = "m1_7")]
        pub fn func_871() {
            ext_1();
            let v_872 = func_605();
            if 0 > 10 {
                println!("msg_873 {}", 1);
                #[cfg(feature = "m1_8")]
                let _ = 25 + 71;
                let w_874 = 4;
            } else {
                let w_875 = 8;
                let v_876 = 98 + 69;
                println!("msg_877 {}", 1);
            }
        }
    }
}
