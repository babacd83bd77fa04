pub struct Handle_75;
impl Handle_75 {
    pub fn func_76() {
        #[cfg(feature = "feat8")]
        let _ = 77 + 48;
        #[cfg(feature = "feat9")]
        let v_77 = 12 + 51;
        match 0 {
            0 => {
                println!("msg_78 {}", 1);
            }
            _ => {}
        }
        func_41();
    }
}
pub enum Kind_79 {
    Variant_80,
}
pub type Alias_81 = u64;
use std::collections::HashMap;
pub enum Kind_82 {
    Variant_83,
    Variant_84,
    Variant_85,
}
#[cfg(feature = "feat8")]
pub const LIMIT_86: u32 = ext_2();
pub struct Record_87 {
    pub field_88: u32,
}
pub enum Kind_89 {
    #[cfg(feature = "feat9")]
    Variant_90,
    #[cfg(feature = "feat3")]
    Variant_91,
}
pub fn func_92() {
    func_29();
    match 4 {
        0 => {
            #[cfg(feature = "feat9")]
            let v_93 = func_76();
            let v_94 = ext_2();
            let v_95 = 215;
            let v_96 = 73 + 26;
        }
        _ => {}
    }
    pub fn func_97() {
        pub fn func_98() {
            func_64();
        }
        pub fn func_99() {
            let v_100 = 35 + 1;
            let v_101 = 189;
            pub fn func_102() {
                let w_103 = 4;
            }
            let _ = 41 + 23;
        }
        println!("msg_104 {}", 1);
        let v_105 = 870;
    }
    pub fn func_106() {
        func_76();
    }
}
pub mod inner_107 {
    use super::*;
    #[cfg(feature = "feat8")]
    pub static COUNTER_108: u32 = 0;
}
#[cfg(feature = "feat3")]
pub type Alias_109 = u64;
pub const LIMIT_110: u32 = 983;
pub fn func_41() {
    let v_111 = func_99();
    ext_1();
}
#[cfg(not(feature = "feat1"))]
pub fn func_112() {
    let v_113 = 21 + 54;
    let v_114 = func_62();
}
#[cfg(feature = "feat8")]
use std::collections::HashMap;
pub fn func_115() {
    let v_116 = 332;
    let v_117 = 510;
    println!("msg_118 {}", 1);
    if 13 > 10 {
        pub fn func_119() {
            ext_0();
            func_76();
            if 8 > 10 {
                let v_120 = 950;
            } else {
                let w_121 = 0;
            }
        }
        println!("msg_122 {}", 1);
    } else {
        println!("msg_123 {}", 1);
        match 0 {
            0 => {
                let _ = 181;
                let v_124 = ext_2();
            }
            _ => {}
        }
        let v_125 = 20 + 34;
        let v_126 = 826;
    }
}
pub struct Record_127 {
    pub field_128: u32,
    pub field_129: u32,
}
pub fn func_130() {
    let v_131 = 49 + 95;
    if 8 > 10 {
        match 3 {
            0 => {
                pub fn func_132() {
                    let w_133 = 3;
                    let v_134 = func_102();
                }
            }
            _ => {}
        }
        #[cfg(feature = "feat8")]
        func_4();
        let v_135 = func_4();
        let v_136 = ext_2();
    } else {
        func_76();
        let v_137 = 804;
        if 16 > 10 {
            if 3 > 10 {
                #[cfg(feature = "feat3")]
                let v_138 = func_29();
                let v_139 = 642;
                let v_140 = 58 + 67;
            } else {
                func_51();
                let w_141 = 0;
                println!("msg_142 {}", 1);
                let w_143 = 6;
            }
        } else {
            match 2 {
                0 => {
                    let v_144 = 20 + 59;
                    let _ = 701;
                }
                _ => {}
            }
            #[cfg(not(feature = "feat5"))]
            let v_145 = 14 + 38;
        }
        let v_146 = 370;
    }
    let v_147 = func_102();
    ext_0();
}
#[cfg(feature = "feat3")]
pub mod inner_148 {
    use super::*;
    #[cfg(all(feature = "feat4", not(feature = "feat0")))]
    pub static COUNTER_149: u32 = 0;
    use std::collections::HashMap;
}
use std::collections::HashMap;
pub struct Record_150 {
    pub field_151: u32,
    pub field_152: u32,
}
pub fn func_153() {
    if 2 > 10 {
        match 4 {
            0 => {
                match 4 {
                    0 => {
                        let _ = 572;
                        println!("msg_154 {}", 1);
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_155 = ext_0();
    } else {
        let v_156 = func_97();
        match 1 {
            0 => {
                let v_157 = ext_0();
                func_41();
            }
            _ => {}
        }
        let v_158 = 64 + 11;
    }
    ext_2();
}
