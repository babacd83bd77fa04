use std::collections::HashMap;
pub struct Record_194 {
    pub field_195: u32,
    pub field_196: u32,
}
pub struct Record_197 {
    #[cfg(not(feature = "feat26"))]
    pub field_198: u32,
}
#[cfg(feature = "feat28")]
pub fn func_199() {
    println!("msg_200 {}", 1);
}
#[cfg(feature = "feat29")]
pub fn func_201() {
    match 3 {
        0 => {
            println!("msg_202 {}", 1);
            let v_203 = func_156();
            func_177();
            if 7 > 10 {
                let v_204 = 92 + 93;
                let _ = 784;
                let v_205 = 69 + 17;
            } else {
                let v_206 = ext_3();
            }
        }
        _ => {}
    }
    let v_207 = func_143();
}
pub fn func_208() {
    pub fn func_51() {
        let v_209 = 83;
    }
    pub fn func_210() {
        let _ = 36;
        func_41();
    }
    let _ = 36;
    let v_211 = 62 + 95;
}
pub enum Kind_212 {
    Variant_213,
    Variant_214,
}
use std::collections::HashMap;
pub fn func_215() {
    pub fn func_216() {
        match 0 {
            0 => {
                let v_217 = ext_3();
            }
            _ => {}
        }
        ext_0();
    }
    match 4 {
        0 => {
            match 4 {
                0 => {
                    let v_218 = func_22();
                    func_208();
                    let v_219 = func_66();
                    let _ = 22 + 40;
                }
                _ => {}
            }
            #[cfg(feature = "feat28")]
            let v_220 = ext_3();
        }
        _ => {}
    }
    match 2 {
        0 => {
            let v_221 = func_20();
        }
        _ => {}
    }
}
#[cfg(not(feature = "feat17"))]
pub fn func_222() {
    let v_223 = 896;
    ext_3();
    let v_224 = func_86();
    let v_225 = func_129();
}
pub static COUNTER_226: u32 = 0;
pub fn func_227() {
    let v_228 = 141;
}
pub fn func_229() {
    println!("msg_230 {}", 1);
    pub fn func_231() {
        if 11 > 10 {
            let v_232 = 726;
            let v_233 = 939;
        } else {
            #[cfg(feature = "feat29")]
            let v_234 = func_177();
            let v_235 = func_21();
        }
        pub fn func_236() {
            func_208();
            #[cfg(feature = "feat28")]
            let _ = 607;
            println!("msg_237 {}", 1);
        }
        let v_238 = func_160();
        let _ = 941;
    }
}
pub fn func_239() {
    if 2 > 10 {
        #[cfg(any(feature = "feat28", feature = "feat28", feature = "feat29"))]
        let _ = 73 + 84;
        if 7 > 10 {
            ext_1();
            pub fn func_240() {
                func_51();
            }
        } else {
            let v_241 = func_102();
            let v_242 = func_1();
            pub fn func_243() {
                println!("msg_244 {}", 1);
            }
        }
        #[cfg(feature = "feat27")]
        let v_245 = func_201();
        let _ = 54 + 88;
    } else {
        println!("msg_246 {}", 1);
    }
}
pub static COUNTER_247: u32 = 0;
pub fn func_248() {
    let v_249 = ext_2();
    let _ = 287;
    let v_250 = ext_1();
    let v_251 = func_101();
}
pub fn func_252() {
    let v_253 = func_69();
    match 1 {
        0 => {
            let v_254 = 798;
            let v_255 = func_124();
            let v_256 = ext_1();
            #[cfg(feature = "feat29")]
            ext_2();
        }
        _ => {}
    }
    let v_257 = ext_1();
}
pub fn func_258() {
    match 0 {
        0 => {
            #[cfg(not(feature = "feat23"))]
            func_51();
            let v_259 = ext_2();
            #[cfg(feature = "feat27")]
            let v_260 = func_51();
        }
        _ => {}
    }
    println!("msg_261 {}", 1);
    if 3 > 10 {
        pub fn func_243() {
            pub fn func_262() {
                let w_263 = 2;
            }
            let _ = 822;
        }
    } else {
        println!("msg_264 {}", 1);
        pub fn func_265() {
            let v_266 = 592;
            if 19 > 10 {
                let w_267 = 2;
                func_262();
                #[cfg(any(feature = "feat28", feature = "feat29"))]
                let v_268 = 260;
            } else {
                let _ = 888;
            }
            if 3 > 10 {
                let v_269 = 791;
                ext_1();
                let v_270 = func_243();
            } else {
                let v_271 = 400;
            }
        }
        let v_272 = func_265();
        let v_273 = func_124();
    }
    pub fn func_274() {
        pub fn func_275() {
            ext_2();
            ext_3();
            let v_276 = ext_0();
            println!("msg_277 {}", 1);
        }
        ext_3();
        pub fn func_278() {
            let v_279 = ext_0();
            let v_280 = func_78();
            let v_281 = func_145();
            let v_282 = func_56();
        }
        let v_283 = 94 + 59;
    }
}
pub mod nested;
