pub static COUNTER_158: u32 = 0;
use std::collections::HashMap;
pub fn func_159() {
    ext_0();
    let v_160 = ext_0();
    let v_161 = 54 + 42;
}
pub mod inner_162 {
    use super::*;
    pub struct Record_163 {
        pub field_164: u32,
        pub field_165: u32,
        pub field_166: u32,
    }
    pub fn func_167() {
        println!("msg_168 {}", 1);
    }
    pub fn func_169() {
        let v_170 = func_11();
        if 2 > 10 {
            if 12 > 10 {
                let v_171 = ext_2();
                let v_172 = ext_1();
                ext_2();
            } else {
                let v_173 = ext_0();
            }
            let _ = 73 + 28;
            if 14 > 10 {
                let w_174 = 0;
            } else {
                let v_175 = func_139();
                let v_176 = 36 + 61;
                func_18();
                let v_177 = 16 + 52;
            }
            let v_178 = 399;
        } else {
            let v_179 = func_99();
        }
        match 3 {
            0 => {
                #[cfg(not(feature = "m1_4"))]
                let _ = 32 + 97;
            }
            _ => {}
        }
        let v_180 = func_17();
    }
}
pub const LIMIT_181: u32 = 688;
pub fn func_182() {
    let v_183 = ext_1();
    pub fn func_184() {
        let _ = 35 + 87;
        let v_185 = 529;
        let _ = 628;
    }
}
pub fn func_186() {
    func_147();
    pub fn func_187() {
        match 4 {
            0 => {
                func_50();
                if 10 > 10 {
                    let w_188 = 0;
                    let v_189 = func_59();
                    let w_190 = 4;
                } else {
                    let w_191 = 2;
                    let w_192 = 8;
                    func_66();
                    let w_193 = 0;
                }
                let v_194 = func_81();
            }
            _ => {}
        }
        pub fn func_195() {
            let v_196 = 437;
        }
        println!("msg_197 {}", 1);
        let v_198 = func_182();
    }
    let v_199 = 86 + 41;
}
pub static COUNTER_200: u32 = 0;
pub enum Kind_201 {
    Variant_202,
    Variant_203,
    Variant_204,
}
pub fn func_205() {
    let v_206 = 805;
}
pub static COUNTER_207: u32 = 0;
pub static COUNTER_208: u32 = 0;
pub static COUNTER_209: u32 = 0;
pub static COUNTER_210: u32 = 0;
use std::collections::HashMap;
pub fn func_85() {
    let v_211 = func_169();
    let _ = 96 + 40;
    let v_212 = 23 + 36;
}
pub type Alias_213 = u64;
pub fn func_214() {
    let v_215 = ext_3();
    func_18();
}
pub enum Kind_216 {
    Variant_217,
}
pub fn func_218() {
    let v_219 = 717;
    ext_3();
    match 3 {
        0 => {
            let v_220 = 59 + 83;
            let v_221 = 33 + 94;
            let _ = 200;
        }
        _ => {}
    }
    let v_222 = func_35();
}
pub enum Kind_223 {
    Variant_224,
    #[cfg(not(feature = "m1_0"))]
    Variant_225,
}
pub mod inner_226 {
    use super::*;
    pub struct Record_227 {
        pub field_228: u32,
        pub field_229: u32,
        pub field_230: u32,
        pub field_231: u32,
    }
    pub type Alias_232 = u64;
}
pub fn func_233() {
    let v_234 = ext_2();
    match 1 {
        0 => {
            let _ = 358;
            match 3 {
                0 => {
                    let _ = 82 + 52;
                }
                _ => {}
            }
            pub fn func_235() {
                let v_236 = 155;
                let v_237 = ext_2();
                let v_238 = 178;
                match 2 {
                    0 => {
                        let v_239 = func_139();
                        println!("msg_240 {}", 1);
                        let w_241 = 5;
                    }
                    _ => {}
                }
            }
            match 3 {
                0 => {
                    pub fn func_242() {
                        let v_243 = 88;
                    }
                    let v_244 = func_35();
                    let v_245 = 77 + 73;
                }
                _ => {}
            }
        }
        _ => {}
    }
    func_72();
    ext_1();
}
pub fn func_205() {
    let _ = 876;
    let v_246 = ext_1();
    if 3 > 10 {
        println!("msg_247 {}", 1);
    } else {
        let v_248 = ext_0();
    }
    let v_249 = func_113();
}
pub struct Handle_250;
impl Handle_250 {
    pub fn func_251() {
        if 2 > 10 {
            let v_252 = 7 + 65;
            let v_253 = 639;
            let v_254 = func_99();
            let v_255 = 858;
        } else {
            println!("msg_256 {}", 1);
        }
        match 4 {
            0 => {
                let _ = 82 + 77;
                let v_257 = 850;
            }
            _ => {}
        }
    }
}
pub fn func_258() {
    if 1 > 10 {
        if 15 > 10 {
            func_17();
        } else {
            match 1 {
                0 => {
                    let v_259 = 477;
                    func_218();
                    let v_260 = func_11();
                    let w_261 = 1;
                }
                _ => {}
            }
            let v_262 = ext_0();
            let v_263 = 47 + 26;
        }
        let v_264 = ext_3();
        let v_265 = func_59();
        if 17 > 10 {
            let v_266 = func_147();
            pub fn func_267() {
                let v_268 = 7 + 48;
                let v_269 = ext_3();
                let w_270 = 5;
                let _ = 87 + 97;
            }
            if 14 > 10 {
                let w_271 = 7;
                func_184();
            } else {
                let w_272 = 3;
            }
            let v_273 = 8 + 78;
        } else {
            println!("msg_274 {}", 1);
            if 17 > 10 {
                func_102();
            } else {
                let w_275 = 4;
            }
            let v_276 = func_233();
        }
    } else {
        let _ = 26 + 39;
        let v_277 = ext_1();
        ext_0();
        pub fn func_278() {
            pub fn func_279() {
                println!("msg_280 {}", 1);
                let _ = 824;
            }
        }
    }
    let v_281 = func_17();
}
pub fn func_282() {
    match 2 {
        0 => {
            if 12 > 10 {
                if 4 > 10 {
                    println!("msg_283 {}", 1);
                    let w_284 = 2;
                    #[cfg(not(feature = "m1_0"))]
                    let _ = 29;
                } else {
                    let v_285 = 5 + 92;
                }
                match 0 {
                    0 => {
                        let w_286 = 5;
                        let w_287 = 0;
                    }
                    _ => {}
                }
                match 0 {
                    0 => {
                        let w_288 = 6;
                        let v_289 = 12 + 98;
                    }
                    _ => {}
                }
            } else {
                println!("msg_290 {}", 1);
                let _ = 91 + 5;
            }
            let v_291 = func_66();
            println!("msg_292 {}", 1);
        }
        _ => {}
    }
    let v_293 = 69 + 61;
}
pub fn func_294() {
    let v_295 = func_17();
    let v_296 = func_113();
    ext_2();
    let v_297 = ext_1();
}
