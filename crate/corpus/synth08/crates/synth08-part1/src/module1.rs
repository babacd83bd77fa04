pub fn func_6() {
    println!("msg_181 {}", 1);
    #[cfg(any(feature = "m1_1", feature = "m1_4", feature = "m1_8"))]
    pub fn func_182() {
        let v_183 = func_29();
        let v_184 = func_42();
        let _ = 377;
    }
}
pub static COUNTER_185: u32 = 0;
pub struct Handle_186;
impl Handle_186 {
    pub fn func_187() {
        let v_188 = 692;
    }
    pub fn func_6() {
        let _ = 96 + 99;
        #[cfg(not(feature = "m1_9"))]
        let v_189 = func_187();
        let v_190 = 41 + 64;
    }
}
pub const LIMIT_191: u32 = ext_0();
pub const LIMIT_192: u32 = ext_0();
pub const LIMIT_193: u32 = 632;
#[cfg(feature = "m1_6")]
pub type Alias_194 = u64;
pub fn func_195() {
    if 4 > 10 {
        let v_196 = func_182();
        if 13 > 10 {
            #[cfg(feature = "m1_7")]
            let v_197 = func_42();
        } else {
            if 2 > 10 {
                func_127();
            } else {
                func_106();
                println!("msg_198 {}", 1);
                let v_199 = func_178();
                #[cfg(not(feature = "m1_5"))]
                let v_200 = ext_0();
            }
        }
    } else {
        let v_201 = 78 + 28;
        #[cfg(any(feature = "m1_8", feature = "m1_7", feature = "m1_1"))]
        let v_202 = func_182();
        println!("msg_203 {}", 1);
    }
}
pub const LIMIT_204: u32 = 83 + 42;
pub static COUNTER_205: u32 = 0;
pub mod inner_206 {
    use super::*;
    pub enum Kind_207 {
        Variant_208,
        Variant_209,
        Variant_210,
        Variant_211,
    }
}
pub const LIMIT_212: u32 = ext_0();
pub static COUNTER_213: u32 = 0;
#[cfg(any(feature = "m1_4", feature = "m1_8"))]
pub fn func_214() {
    if 18 > 10 {
        pub fn func_68() {
            let v_215 = 63;
            let v_216 = 714;
            let v_217 = ext_3();
        }
    } else {
        let v_218 = func_159();
        let v_219 = func_151();
        let _ = 36 + 23;
    }
    ext_2();
    println!("msg_220 {}", 1);
}
pub fn func_221() {
    let _ = 60 + 20;
    #[cfg(feature = "m1_6")]
    func_79();
    let v_222 = func_187();
    let v_223 = ext_1();
}
pub fn func_224() {
    println!("msg_225 {}", 1);
    match 0 {
        0 => {
            let v_226 = 91 + 42;
            let v_227 = 56 + 30;
            let v_228 = 81 + 93;
        }
        _ => {}
    }
    println!("msg_229 {}", 1);
}
pub static COUNTER_230: u32 = 0;
pub mod inner_231 {
    use super::*;
    pub const LIMIT_232: u32 = func_129();
    pub fn func_233() {
        pub fn func_234() {
            match 4 {
                0 => {
                    #[cfg(feature = "m1_8")]
                    let v_235 = func_187();
                    let w_236 = 8;
                    println!("msg_237 {}", 1);
                }
                _ => {}
            }
            pub fn func_238() {
                let v_239 = func_182();
                let w_240 = 6;
                let v_241 = func_122();
            }
            if 7 > 10 {
                let v_242 = 35;
            } else {
                let v_243 = func_42();
                let v_244 = func_221();
                let w_245 = 8;
            }
        }
    }
}
pub mod inner_246 {
    use super::*;
    pub type Alias_247 = u64;
}
pub fn func_248() {
    func_195();
    #[cfg(feature = "m1_4")]
    let v_249 = func_83();
    match 4 {
        0 => {
            let v_250 = 104;
            #[cfg(not(feature = "m1_5"))]
            pub fn func_8() {
                match 4 {
                    0 => {
                        let _ = 77 + 30;
                    }
                    _ => {}
                }
                let v_251 = func_6();
                let _ = 74 + 38;
                match 1 {
                    0 => {
                        let w_252 = 0;
                        let w_253 = 3;
                        let w_254 = 5;
                        let v_255 = func_159();
                    }
                    _ => {}
                }
            }
            let v_256 = ext_0();
            if 12 > 10 {
                println!("msg_257 {}", 1);
                let v_258 = func_79();
                let v_259 = 743;
                let _ = 59 + 8;
            } else {
                func_113();
            }
        }
        _ => {}
    }
}
#[cfg(all(feature = "m1_2", not(feature = "m1_0")))]
pub type Alias_260 = u64;
pub mod inner_261 {
    use super::*;
    pub fn func_195() {
        let v_262 = 71 + 15;
        #[cfg(not(feature = "m1_9"))]
        func_60();
        let v_263 = ext_3();
    }
    pub struct Handle_264;
    impl Handle_264 {
        pub fn func_265() {
            println!("msg_266 {}", 1);
            let _ = 2 + 45;
            #[cfg(feature = "m1_8")]
            let v_267 = 679;
            let _ = 44 + 50;
        }
        pub fn func_268() {
            let v_269 = 940;
            ext_2();
            let _ = 79 + 94;
            let _ = 570;
        }
    }
}
pub mod nested;
