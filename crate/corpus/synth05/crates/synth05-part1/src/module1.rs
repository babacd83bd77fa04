pub fn func_134() {
    let v_139 = 479;
    println!("msg_140 {}", 1);
    println!("msg_141 {}", 1);
    if 7 > 10 {
        #[cfg(any(feature = "m1_6", feature = "m1_3"))]
        let v_142 = 394;
    } else {
        pub fn func_143() {
            println!("msg_144 {}", 1);
            println!("msg_145 {}", 1);
            let v_146 = 76;
            if 4 > 10 {
                let v_147 = ext_1();
                let w_148 = 5;
            } else {
                #[cfg(feature = "m1_1")]
                func_60();
            }
        }
        let v_149 = func_66();
    }
}
#[cfg(feature = "m1_7")]
pub struct Record_150 {
    pub field_151: u32,
    pub field_152: u32,
    pub field_153: u32,
    pub field_154: u32,
}
pub enum Kind_155 {
    #[cfg(all(feature = "m1_5", not(feature = "m1_0")))]
    Variant_156,
    Variant_157,
    Variant_158,
}
use std::collections::HashMap;
pub fn func_108() {
    ext_1();
    let v_159 = 45 + 95;
}
pub fn func_160() {
    pub fn func_161() {
        let v_162 = func_38();
        match 1 {
            0 => {
                ext_2();
                let v_163 = ext_0();
                #[cfg(feature = "m1_5")]
                let v_164 = 332;
            }
            _ => {}
        }
        func_75();
        func_75();
    }
    if 12 > 10 {
        let v_165 = 42 + 42;
        let v_166 = func_66();
    } else {
        #[cfg(feature = "m1_5")]
        ext_2();
        if 0 > 10 {
            println!("msg_167 {}", 1);
            pub fn func_168() {
                #[cfg(feature = "m1_3")]
                let _ = 53 + 73;
                #[cfg(all(feature = "m1_6", not(feature = "m1_4")))]
                let _ = 391;
                func_118();
                let _ = 12 + 12;
            }
            let v_169 = func_11();
        } else {
            let v_170 = func_168();
            func_75();
            func_14();
        }
        let _ = 26 + 98;
        let v_171 = func_102();
    }
}
#[cfg(all(feature = "m1_2", not(feature = "m1_0")))]
pub enum Kind_172 {
    Variant_173,
}
pub fn func_174() {
    if 6 > 10 {
        if 11 > 10 {
            let _ = 87;
        } else {
            println!("msg_175 {}", 1);
        }
    } else {
        if 0 > 10 {
            let v_176 = func_92();
        } else {
            let _ = 30 + 11;
        }
    }
}
pub const LIMIT_177: u32 = func_1();
pub struct Record_178 {
    pub field_179: u32,
    pub field_180: u32,
}
pub fn func_181() {
    println!("msg_182 {}", 1);
    #[cfg(not(feature = "m1_0"))]
    let v_183 = 15 + 7;
}
pub struct Record_184 {
    pub field_185: u32,
    pub field_186: u32,
    pub field_187: u32,
    pub field_188: u32,
}
pub struct Handle_189;
impl Handle_189 {
    pub fn func_190() {
        #[cfg(feature = "m1_1")]
        let v_191 = ext_2();
        #[cfg(feature = "m1_3")]
        ext_0();
        pub fn func_192() {
            match 1 {
                0 => {
                    let _ = 511;
                }
                _ => {}
            }
            pub fn func_161() {
                let v_193 = 80 + 72;
                let w_194 = 3;
                let v_195 = func_92();
            }
        }
        pub fn func_196() {
            let v_197 = 189;
            let _ = 159;
            #[cfg(feature = "m1_5")]
            pub fn func_198() {
                println!("msg_199 {}", 1);
                let w_200 = 8;
            }
        }
    }
    pub fn func_201() {
        if 5 > 10 {
            let v_202 = func_34();
            #[cfg(feature = "m1_7")]
            let v_203 = func_174();
            ext_1();
            println!("msg_204 {}", 1);
        } else {
            println!("msg_205 {}", 1);
        }
        println!("msg_206 {}", 1);
        let v_207 = 66 + 73;
    }
}
pub fn func_208() {
    let _ = 363;
    let v_209 = func_92();
}
pub fn func_190() {
    match 0 {
        0 => {
            ext_2();
            let v_210 = 520;
            pub fn func_211() {
                let v_212 = 36 + 26;
                match 1 {
                    0 => {
                        let w_213 = 0;
                    }
                    _ => {}
                }
                println!("msg_214 {}", 1);
            }
            println!("msg_215 {}", 1);
        }
        _ => {}
    }
    #[cfg(feature = "m1_8")]
    let v_216 = 69 + 33;
}
pub struct Handle_217;
impl Handle_217 {
    #[cfg(feature = "m1_1")]
    pub fn func_218() {
        let v_219 = 176;
        let v_220 = 35 + 23;
        let _ = 46 + 8;
        func_118();
    }
    #[cfg(feature = "m1_8")]
    pub fn func_221() {
        match 0 {
            0 => {
                ext_1();
                let v_222 = ext_0();
            }
            _ => {}
        }
        println!("msg_223 {}", 1);
        let _ = 367;
        ext_3();
    }
}
#[cfg(not(feature = "m1_0"))]
pub fn func_71() {
    match 4 {
        0 => {
            let v_224 = func_75();
            let v_225 = func_168();
            let _ = 388;
            if 12 > 10 {
                println!("msg_226 {}", 1);
                if 2 > 10 {
                    let w_227 = 8;
                    let v_228 = 85 + 9;
                    let v_229 = 32 + 28;
                } else {
                    func_168();
                    println!("msg_230 {}", 1);
                    let v_231 = ext_1();
                }
                println!("msg_232 {}", 1);
            } else {
                pub fn func_92() {
                    let v_233 = func_143();
                    let v_234 = ext_1();
                    func_218();
                }
            }
        }
        _ => {}
    }
    let v_235 = ext_1();
    let v_236 = func_66();
    let _ = 107;
}
pub fn func_237() {
    let v_238 = 900;
    func_1();
}
pub fn func_239() {
    let v_240 = 35 + 15;
    println!("msg_241 {}", 1);
    pub fn func_242() {
        match 2 {
            0 => {
                let v_243 = func_66();
                if 8 > 10 {
                    let v_244 = ext_0();
                } else {
                    let v_245 = 487;
                    func_21();
                    let _ = 53 + 69;
                }
            }
            _ => {}
        }
        println!("msg_246 {}", 1);
    }
    pub fn func_247() {
        #[cfg(all(feature = "m1_2", not(feature = "m1_4")))]
        let _ = 180;
        println!("msg_248 {}", 1);
        #[cfg(any(feature = "m1_2", feature = "m1_3", feature = "m1_2"))]
        let _ = 579;
        ext_3();
    }
}
pub fn func_249() {
    ext_1();
    ext_2();
}
pub static COUNTER_250: u32 = 0;
pub fn func_251() {
    func_16();
}
pub enum Kind_252 {
    Variant_253,
    Variant_254,
    #[cfg(feature = "m1_3")]
    Variant_255,
}
use std::collections::HashMap;
pub mod inner_256 {
    use super::*;
    pub struct Record_257 {
        pub field_258: u32,
        pub field_259: u32,
    }
    pub fn func_211() {
        let v_260 = 0 + 68;
        pub fn func_261() {
            let v_262 = func_201();
            let v_263 = func_102();
        }
        func_88();
    }
}
#[cfg(feature = "m1_6")]
pub const LIMIT_264: u32 = ext_2();
pub fn func_265() {
    println!("msg_266 {}", 1);
    if 8 > 10 {
        if 2 > 10 {
            func_34();
            #[cfg(not(feature = "m1_0"))]
            let v_267 = ext_2();
            let v_268 = ext_2();
            #[cfg(feature = "m1_8")]
            let v_269 = ext_2();
        } else {
            func_60();
            let _ = 32 + 40;
            let v_270 = 117;
            let v_271 = func_15();
        }
    } else {
        let v_272 = func_1();
        match 2 {
            0 => {
                pub fn func_273() {
                    println!("msg_274 {}", 1);
                    let _ = 65 + 66;
                    let _ = 109;
                    #[cfg(feature = "m1_8")]
                    let v_275 = 265;
                }
                println!("msg_276 {}", 1);
                let v_277 = 28 + 35;
                println!("msg_278 {}", 1);
            }
            _ => {}
        }
        if 12 > 10 {
            pub fn func_279() {
                let w_280 = 8;
                let w_281 = 5;
                let w_282 = 7;
            }
            match 3 {
                0 => {
                    println!("msg_283 {}", 1);
                }
                _ => {}
            }
            #[cfg(feature = "m1_7")]
            pub fn func_284() {
                let v_285 = ext_2();
                let w_286 = 1;
                let v_287 = ext_0();
            }
        } else {
            if 12 > 10 {
                println!("msg_288 {}", 1);
                ext_0();
                #[cfg(not(feature = "m1_4"))]
                let v_289 = func_161();
                let _ = 264;
            } else {
                let w_290 = 2;
            }
            match 0 {
                0 => {
                    #[cfg(not(feature = "m1_0"))]
                    func_211();
                    ext_0();
                    func_21();
                }
                _ => {}
            }
            #[cfg(feature = "m1_8")]
            func_247();
        }
        #[cfg(not(feature = "m1_4"))]
        let v_291 = func_25();
    }
    match 2 {
        0 => {
            let v_292 = 57 + 4;
            println!("msg_293 {}", 1);
            match 4 {
                0 => {
                    let v_294 = ext_1();
                }
                _ => {}
            }
            let v_295 = func_125();
        }
        _ => {}
    }
    let _ = 504;
}
