pub struct Handle_166;
impl Handle_166 {
    pub fn func_82() {
        match 1 {
            0 => {
                if 10 > 10 {
                    let _ = 211;
                    let w_167 = 0;
                    let w_168 = 4;
                    let v_169 = func_138();
                } else {
                    let w_170 = 1;
                    let _ = 314;
                    let w_171 = 3;
                }
                if 9 > 10 {
                    let v_172 = func_138();
                    let v_173 = 63 + 60;
                    #[cfg(all(feature = "m0_8", not(feature = "m0_2")))]
                    let v_174 = 195;
                    println!("msg_175 {}", 1);
                } else {
                    let v_176 = 17 + 67;
                }
                let v_177 = 46 + 42;
                pub fn func_178() {
                    let w_179 = 2;
                    #[cfg(any(feature = "m0_7", feature = "m0_8", feature = "m0_6"))]
                    let v_180 = 127;
                }
            }
            _ => {}
        }
        let v_181 = 521;
        let _ = 93 + 23;
        match 4 {
            0 => {
                #[cfg(feature = "m0_8")]
                let v_182 = func_28();
                let _ = 82 + 27;
            }
            _ => {}
        }
    }
}
#[cfg(feature = "m0_7")]
pub fn func_183() {
    if 18 > 10 {
        let v_184 = func_116();
        pub fn func_185() {
            func_7();
            let v_186 = func_47();
        }
    } else {
        let v_187 = ext_0();
        #[cfg(feature = "m0_8")]
        let v_188 = func_47();
        let v_189 = func_70();
    }
}
use std::collections::HashMap;
pub fn func_27() {
    if 17 > 10 {
        let _ = 59 + 36;
        #[cfg(feature = "m0_6")]
        let v_190 = func_60();
    } else {
        let _ = 68 + 29;
        pub fn func_191() {
            let v_192 = func_7();
            if 0 > 10 {
                println!("msg_193 {}", 1);
                println!("msg_194 {}", 1);
                let w_195 = 6;
                let w_196 = 2;
            } else {
                let v_197 = 247;
                println!("msg_198 {}", 1);
                let v_199 = func_17();
                func_11();
            }
        }
        let v_200 = func_137();
    }
}
pub static COUNTER_201: u32 = 0;
pub const LIMIT_202: u32 = func_108();
pub fn func_203() {
    #[cfg(not(feature = "m0_2"))]
    let v_204 = 76 + 41;
    match 0 {
        0 => {
            #[cfg(feature = "m0_6")]
            func_115();
            let _ = 70 + 63;
            println!("msg_205 {}", 1);
            let _ = 47 + 60;
        }
        _ => {}
    }
}
pub type Alias_206 = u64;
pub enum Kind_207 {
    Variant_208,
    #[cfg(feature = "m0_8")]
    Variant_209,
    Variant_210,
}
pub fn func_211() {
    if 3 > 10 {
        let v_212 = ext_2();
        let v_213 = func_191();
    } else {
        #[cfg(feature = "m0_6")]
        let _ = 17 + 1;
        println!("msg_214 {}", 1);
        pub fn func_63() {
            println!("msg_215 {}", 1);
        }
    }
    let v_216 = func_103();
}
pub const LIMIT_217: u32 = func_108();
pub fn func_218() {
    pub fn func_219() {
        let v_220 = 41 + 72;
        let _ = 20 + 65;
        func_137();
    }
    #[cfg(all(feature = "m0_6", not(feature = "m0_2")))]
    func_94();
    let v_221 = func_69();
}
pub type Alias_222 = u64;
pub fn func_223() {
    let v_224 = ext_1();
}
pub struct Handle_225;
impl Handle_225 {
    pub fn func_226() {
        pub fn func_227() {
            #[cfg(feature = "m0_7")]
            pub fn func_228() {
                let w_229 = 6;
                #[cfg(feature = "m0_8")]
                let v_230 = func_30();
                func_119();
            }
            pub fn func_44() {
                let w_231 = 1;
                let w_232 = 5;
            }
        }
    }
}
pub const LIMIT_233: u32 = func_203();
pub type Alias_234 = u64;
pub fn func_235() {
    if 11 > 10 {
        println!("msg_236 {}", 1);
    } else {
        let v_237 = 499;
        func_185();
    }
    #[cfg(feature = "m0_6")]
    let v_238 = ext_2();
}
pub static COUNTER_239: u32 = 0;
pub fn func_63() {
    pub fn func_240() {
        let v_241 = 851;
        if 16 > 10 {
            match 0 {
                0 => {
                    ext_1();
                    let w_242 = 2;
                    let _ = 71;
                    func_102();
                }
                _ => {}
            }
            println!("msg_243 {}", 1);
            let v_244 = 729;
        } else {
            func_60();
            println!("msg_245 {}", 1);
        }
        let v_246 = 648;
        let v_247 = 17 + 84;
    }
    ext_0();
    let v_248 = 57 + 4;
}
pub fn func_249() {
    func_137();
    let v_250 = 772;
    ext_3();
    let v_251 = func_102();
}
#[cfg(not(feature = "m0_2"))]
pub fn func_252() {
    match 2 {
        0 => {
            let _ = 40 + 47;
        }
        _ => {}
    }
}
pub static COUNTER_253: u32 = 0;
pub fn func_254() {
    #[cfg(any(feature = "m0_7", feature = "m0_8"))]
    let v_255 = func_44();
}
pub fn func_256() {
    if 6 > 10 {
        func_134();
        let v_257 = func_4();
        let v_258 = func_30();
    } else {
        match 4 {
            0 => {
                let v_259 = func_178();
                #[cfg(any(feature = "m0_6", feature = "m0_6"))]
                func_108();
                #[cfg(any(feature = "m0_6", feature = "m0_7", feature = "m0_8"))]
                func_112();
            }
            _ => {}
        }
        if 14 > 10 {
            println!("msg_260 {}", 1);
        } else {
            if 2 > 10 {
                let v_261 = ext_0();
                let w_262 = 0;
                let w_263 = 5;
            } else {
                println!("msg_264 {}", 1);
                ext_0();
                let v_265 = 40 + 61;
                let _ = 489;
            }
        }
        let _ = 748;
    }
}
use std::collections::HashMap;
pub fn func_47() {
    if 7 > 10 {
        pub fn func_266() {
            let v_267 = func_226();
            println!("msg_268 {}", 1);
        }
    } else {
        func_70();
        func_46();
        #[cfg(feature = "m0_6")]
        let _ = 54 + 35;
        #[cfg(feature = "m0_8")]
        ext_3();
    }
    #[cfg(feature = "m0_7")]
    let v_269 = func_60();
    #[cfg(any(feature = "m0_7", feature = "m0_8", feature = "m0_7"))]
    let v_270 = 90 + 37;
}
pub enum Kind_271 {
    Variant_272,
    Variant_273,
    #[cfg(feature = "m0_6")]
    Variant_274,
    Variant_275,
}
pub fn func_276() {
    if 17 > 10 {
        pub fn func_277() {
            let v_278 = 87 + 53;
        }
        if 0 > 10 {
            match 3 {
                0 => {
                    let v_279 = ext_0();
                    println!("msg_280 {}", 1);
                }
                _ => {}
            }
            pub fn func_281() {
                let v_282 = ext_1();
                println!("msg_283 {}", 1);
                println!("msg_284 {}", 1);
                ext_1();
            }
            ext_1();
            match 4 {
                0 => {
                    #[cfg(not(feature = "m0_2"))]
                    let v_285 = ext_2();
                    let _ = 15 + 47;
                    func_116();
                    let w_286 = 5;
                }
                _ => {}
            }
        } else {
            let v_287 = func_127();
        }
        let v_288 = func_102();
        pub fn func_4() {
            let v_289 = 10 + 57;
            let v_290 = func_235();
            if 3 > 10 {
                let w_291 = 4;
            } else {
                ext_1();
                println!("msg_292 {}", 1);
                let w_293 = 1;
            }
        }
    } else {
        if 18 > 10 {
            let v_294 = func_11();
            let v_295 = ext_2();
        } else {
            let v_296 = func_277();
            if 7 > 10 {
                let w_297 = 2;
            } else {
                let w_298 = 6;
            }
            let v_299 = 67 + 83;
        }
    }
    let v_300 = 436;
}
#[cfg(feature = "m0_7")]
use std::collections::HashMap;
#[cfg(feature = "m0_7")]
pub fn func_301() {
    let v_302 = 834;
    println!("msg_303 {}", 1);
    let v_304 = 658;
    println!("msg_305 {}", 1);
}
pub fn func_306() {
    let v_307 = func_115();
    let v_308 = func_102();
    match 4 {
        0 => {
            #[cfg(feature = "m0_6")]
            func_70();
            println!("msg_309 {}", 1);
            match 0 {
                0 => {
                    ext_0();
                }
                _ => {}
            }
            if 1 > 10 {
                println!("msg_310 {}", 1);
                match 2 {
                    0 => {
                        let v_311 = func_116();
                    }
                    _ => {}
                }
                pub fn func_312() {
                    let v_313 = 302;
                    let v_314 = func_27();
                }
                let v_315 = ext_3();
            } else {
                println!("msg_316 {}", 1);
                ext_2();
                if 7 > 10 {
                    let w_317 = 2;
                } else {
                    let v_318 = func_266();
                    let v_319 = 80 + 12;
                    println!("msg_320 {}", 1);
                    let v_321 = func_7();
                }
            }
        }
        _ => {}
    }
}
