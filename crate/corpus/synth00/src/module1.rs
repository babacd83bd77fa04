pub fn func_179() {
    match 3 {
        0 => {
            #[cfg(feature = "feat4")]
            pub fn func_180() {
                pub fn func_181() {
                    let v_182 = 290;
                    let v_183 = func_35();
                    func_79();
                }
                if 1 > 10 {
                    let w_184 = 6;
                    let w_185 = 5;
                } else {
                    #[cfg(feature = "feat8")]
                    let _ = 69 + 48;
                }
                let v_186 = func_38();
                ext_1();
            }
        }
        _ => {}
    }
    let v_187 = func_175();
    println!("msg_188 {}", 1);
}
pub fn func_189() {
    #[cfg(feature = "feat6")]
    let v_190 = 81 + 46;
}
pub enum Kind_191 {
    Variant_192,
}
pub type Alias_193 = u64;
pub fn func_194() {
    let _ = 830;
    let v_195 = ext_1();
    pub fn func_196() {
        let v_197 = 68 + 21;
        let v_198 = func_136();
        pub fn func_79() {
            println!("msg_199 {}", 1);
            println!("msg_200 {}", 1);
            let v_201 = ext_0();
            if 3 > 10 {
                let v_202 = ext_3();
            } else {
                func_175();
                let v_203 = func_32();
            }
        }
        pub fn func_204() {
            println!("msg_205 {}", 1);
        }
    }
}
pub fn func_206() {
    #[cfg(feature = "feat8")]
    pub fn func_101() {
        let v_207 = ext_3();
        let v_208 = func_180();
    }
}
pub fn func_209() {
    let v_210 = 25 + 46;
}
pub enum Kind_211 {
    Variant_212,
    #[cfg(feature = "feat6")]
    Variant_213,
}
pub fn func_214() {
    println!("msg_215 {}", 1);
    let v_216 = 53 + 42;
}
pub const LIMIT_217: u32 = func_179();
pub fn func_88() {
    println!("msg_218 {}", 1);
}
pub fn func_179() {
    match 1 {
        0 => {
            match 1 {
                0 => {
                    let _ = 765;
                    let v_219 = func_101();
                    let v_220 = ext_2();
                }
                _ => {}
            }
            func_35();
        }
        _ => {}
    }
    let _ = 723;
    match 1 {
        0 => {
            match 0 {
                0 => {
                    let v_221 = func_181();
                    #[cfg(any(feature = "feat1", feature = "feat8"))]
                    pub fn func_222() {
                        let v_223 = ext_2();
                    }
                    let v_224 = func_194();
                    println!("msg_225 {}", 1);
                }
                _ => {}
            }
            let v_226 = ext_0();
            pub fn func_227() {
                if 4 > 10 {
                    let w_228 = 4;
                } else {
                    let v_229 = func_81();
                }
                let v_230 = 9 + 8;
                println!("msg_231 {}", 1);
            }
            pub fn func_232() {
                match 0 {
                    0 => {
                        let v_233 = func_73();
                        let w_234 = 7;
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
    func_136();
}
pub enum Kind_235 {
    Variant_236,
    Variant_237,
}
pub fn func_204() {
    if 10 > 10 {
        #[cfg(feature = "feat8")]
        pub fn func_238() {
            let v_239 = func_79();
        }
        match 4 {
            0 => {
                let v_240 = ext_3();
                ext_0();
            }
            _ => {}
        }
        if 19 > 10 {
            let v_241 = func_81();
            #[cfg(all(feature = "feat1", not(feature = "feat5")))]
            let v_242 = ext_1();
            ext_0();
        } else {
            match 0 {
                0 => {
                    let w_243 = 1;
                }
                _ => {}
            }
            pub fn func_244() {
                println!("msg_245 {}", 1);
                let v_246 = 83 + 71;
                let v_247 = ext_2();
            }
            #[cfg(feature = "feat0")]
            let v_248 = 57 + 45;
            if 8 > 10 {
                println!("msg_249 {}", 1);
            } else {
                let v_250 = 965;
                func_88();
                println!("msg_251 {}", 1);
            }
        }
    } else {
        let v_252 = 602;
        #[cfg(feature = "feat4")]
        let v_253 = func_77();
        func_181();
    }
}
pub fn func_254() {
    ext_1();
    let v_255 = 360;
    let v_256 = ext_1();
    ext_1();
}
pub fn func_257() {
    let _ = 91 + 76;
    if 14 > 10 {
        if 18 > 10 {
            #[cfg(feature = "feat1")]
            func_214();
            let v_258 = 2 + 53;
            #[cfg(feature = "feat4")]
            let v_259 = 439;
        } else {
            #[cfg(feature = "feat0")]
            let v_260 = func_77();
            match 1 {
                0 => {
                    let w_261 = 8;
                }
                _ => {}
            }
            println!("msg_262 {}", 1);
            println!("msg_263 {}", 1);
        }
        match 4 {
            0 => {
                let v_264 = func_81();
                if 11 > 10 {
                    let w_265 = 1;
                    let w_266 = 6;
                } else {
                    let w_267 = 8;
                    let v_268 = func_158();
                    let w_269 = 0;
                }
                pub fn func_194() {
                    func_79();
                }
                func_77();
            }
            _ => {}
        }
    } else {
        if 11 > 10 {
            let v_270 = func_158();
            let v_271 = func_175();
        } else {
            let v_272 = func_179();
            func_180();
            let v_273 = 28 + 15;
        }
        if 6 > 10 {
            println!("msg_274 {}", 1);
            match 3 {
                0 => {
                    let v_275 = ext_1();
                }
                _ => {}
            }
        } else {
            let v_276 = 25 + 88;
            pub fn func_196() {
                let v_277 = ext_3();
            }
            ext_3();
        }
    }
}
pub struct Record_278 {
    #[cfg(feature = "feat7")]
    pub field_279: u32,
    #[cfg(any(feature = "feat1", feature = "feat0", feature = "feat6"))]
    pub field_280: u32,
    #[cfg(not(feature = "feat5"))]
    pub field_281: u32,
}
#[cfg(feature = "feat1")]
pub fn func_282() {
    if 9 > 10 {
        let v_283 = ext_2();
        match 3 {
            0 => {
                let v_284 = 441;
            }
            _ => {}
        }
        if 10 > 10 {
            let v_285 = ext_1();
            if 14 > 10 {
                let w_286 = 2;
            } else {
                let w_287 = 5;
                let w_288 = 2;
                #[cfg(any(feature = "feat3", feature = "feat3"))]
                let v_289 = ext_3();
                let v_290 = func_77();
            }
        } else {
            println!("msg_291 {}", 1);
            func_238();
            #[cfg(feature = "feat3")]
            func_232();
        }
        let v_292 = 15 + 37;
    } else {
        let v_293 = func_9();
        pub fn func_294() {
            if 2 > 10 {
                let v_295 = func_175();
            } else {
                func_68();
                let v_296 = func_254();
            }
        }
        #[cfg(feature = "feat7")]
        pub fn func_297() {
            match 0 {
                0 => {
                    let v_298 = 266;
                }
                _ => {}
            }
        }
        if 6 > 10 {
            #[cfg(feature = "feat3")]
            func_179();
        } else {
            if 18 > 10 {
                let v_299 = ext_1();
                let v_300 = ext_3();
                let v_301 = func_73();
            } else {
                let w_302 = 1;
            }
        }
    }
    let v_303 = func_9();
}
pub fn func_304() {
    let v_305 = ext_3();
}
#[cfg(feature = "feat4")]
pub mod inner_306 {
    use super::*;
    pub const LIMIT_307: u32 = 119;
}
