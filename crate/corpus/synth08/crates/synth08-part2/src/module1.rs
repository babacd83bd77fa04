pub struct Handle_175;
impl Handle_175 {
    pub fn func_176() {
        func_42();
        #[cfg(feature = "m2_9")]
        func_75();
    }
}
pub fn func_177() {
    pub fn func_178() {
        let v_179 = 507;
    }
    match 3 {
        0 => {
            func_109();
            func_15();
            let v_180 = func_42();
        }
        _ => {}
    }
    #[cfg(feature = "m2_7")]
    let v_181 = 130;
    let _ = 60 + 29;
}
pub fn func_182() {
    let v_183 = ext_0();
    #[cfg(feature = "m2_7")]
    func_91();
    let v_184 = func_96();
    let v_185 = 414;
}
pub fn func_186() {
    func_107();
    #[cfg(feature = "m2_9")]
    let _ = 1 + 63;
    let v_187 = 246;
}
pub fn func_188() {
    let v_189 = 20;
    if 6 > 10 {
        let v_190 = func_87();
        if 6 > 10 {
            match 3 {
                0 => {
                    let v_191 = func_104();
                }
                _ => {}
            }
            #[cfg(feature = "m2_7")]
            pub fn func_192() {
                let w_193 = 6;
                func_42();
                let w_194 = 7;
                let w_195 = 1;
            }
        } else {
            #[cfg(feature = "m2_7")]
            let v_196 = 84 + 36;
            match 2 {
                0 => {
                    let w_197 = 3;
                    println!("msg_198 {}", 1);
                    let v_199 = 56 + 0;
                }
                _ => {}
            }
            if 17 > 10 {
                #[cfg(feature = "m2_9")]
                let v_200 = 19 + 75;
            } else {
                let v_201 = 30 + 38;
            }
            println!("msg_202 {}", 1);
        }
        pub fn func_203() {
            let v_204 = 50 + 26;
            println!("msg_205 {}", 1);
            pub fn func_94() {
                #[cfg(any(feature = "m2_9", feature = "m2_7", feature = "m2_7"))]
                let v_206 = func_91();
                let w_207 = 8;
                #[cfg(feature = "m2_7")]
                ext_0();
            }
        }
        println!("msg_208 {}", 1);
    } else {
        if 6 > 10 {
            #[cfg(feature = "m2_9")]
            let v_209 = func_166();
            let v_210 = func_109();
        } else {
            println!("msg_211 {}", 1);
        }
        if 9 > 10 {
            pub fn func_212() {
                let v_213 = func_33();
            }
            #[cfg(feature = "m2_7")]
            let v_214 = 91 + 67;
            let v_215 = 15 + 50;
        } else {
            func_15();
            let v_216 = ext_1();
            #[cfg(feature = "m2_7")]
            let v_217 = 50 + 44;
        }
    }
}
pub fn func_218() {
    let v_219 = 76 + 20;
    println!("msg_220 {}", 1);
    let _ = 443;
    let v_221 = ext_0();
}
use std::collections::HashMap;
pub fn func_222() {
    #[cfg(all(feature = "m2_7", not(feature = "m2_8")))]
    let v_223 = 300;
    pub fn func_224() {
        if 12 > 10 {
            let v_225 = 488;
            #[cfg(feature = "m2_9")]
            let v_226 = 67 + 89;
            #[cfg(feature = "m2_7")]
            func_91();
        } else {
            println!("msg_227 {}", 1);
            if 4 > 10 {
                let w_228 = 0;
                let v_229 = ext_0();
            } else {
                let v_230 = 1 + 25;
            }
            if 19 > 10 {
                let v_231 = ext_2();
            } else {
                let w_232 = 0;
                let v_233 = 19;
                #[cfg(feature = "m2_7")]
                let _ = 329;
            }
            if 15 > 10 {
                let v_234 = 11 + 79;
                let w_235 = 5;
                #[cfg(feature = "m2_9")]
                let v_236 = func_35();
            } else {
                let v_237 = 14 + 35;
                let w_238 = 4;
                let w_239 = 7;
                let w_240 = 6;
            }
        }
        pub fn func_241() {
            let v_242 = func_52();
            let v_243 = func_138();
            if 1 > 10 {
                let w_244 = 4;
                println!("msg_245 {}", 1);
                func_164();
            } else {
                func_43();
                func_192();
                println!("msg_246 {}", 1);
            }
            if 14 > 10 {
                let v_247 = ext_0();
            } else {
                #[cfg(not(feature = "m2_8"))]
                ext_2();
                let v_248 = ext_1();
            }
        }
        pub fn func_249() {
            let _ = 790;
        }
        let _ = 642;
    }
    let v_250 = func_203();
}
#[cfg(feature = "m2_9")]
pub enum Kind_251 {
    Variant_252,
}
#[cfg(any(feature = "m2_9", feature = "m2_7", feature = "m2_7"))]
pub fn func_253() {
    let v_254 = 51 + 51;
    let v_255 = func_182();
}
pub fn func_256() {
    #[cfg(not(feature = "m2_8"))]
    let v_257 = func_111();
    let v_258 = 848;
}
pub fn func_259() {
    func_40();
    match 2 {
        0 => {
            if 11 > 10 {
                if 5 > 10 {
                    let v_260 = 60 + 26;
                    let v_261 = 128;
                } else {
                    let v_262 = func_188();
                    let w_263 = 0;
                }
                #[cfg(feature = "m2_7")]
                let v_264 = 50 + 90;
                match 3 {
                    0 => {
                        let v_265 = 596;
                        let v_266 = ext_2();
                        let v_267 = 43 + 94;
                    }
                    _ => {}
                }
                match 4 {
                    0 => {
                        let w_268 = 7;
                    }
                    _ => {}
                }
            } else {
                let v_269 = 35 + 16;
                if 1 > 10 {
                    let w_270 = 7;
                    #[cfg(not(feature = "m2_2"))]
                    let _ = 515;
                    let v_271 = 814;
                    let w_272 = 2;
                } else {
                    let v_273 = 29 + 10;
                    let w_274 = 0;
                }
            }
        }
        _ => {}
    }
    #[cfg(not(feature = "m2_10"))]
    let v_275 = 404;
    #[cfg(feature = "m2_7")]
    let v_276 = func_94();
}
pub const LIMIT_277: u32 = ext_2();
pub struct Record_278 {
    #[cfg(feature = "m2_9")]
    pub field_279: u32,
}
use std::collections::HashMap;
pub fn func_280() {
    match 1 {
        0 => {
            pub fn func_281() {
                #[cfg(feature = "m2_7")]
                let v_282 = func_52();
            }
            let v_283 = func_281();
            pub fn func_284() {
                println!("msg_285 {}", 1);
                match 1 {
                    0 => {
                        println!("msg_286 {}", 1);
                    }
                    _ => {}
                }
                let v_287 = ext_2();
            }
            #[cfg(feature = "m2_9")]
            let v_288 = 59 + 64;
        }
        _ => {}
    }
    let v_289 = func_21();
    let v_290 = ext_1();
    #[cfg(feature = "m2_9")]
    pub fn func_291() {
        let v_292 = 51 + 96;
        if 18 > 10 {
            let _ = 642;
            if 16 > 10 {
                let v_293 = 3 + 81;
                let v_294 = ext_3();
                let v_295 = func_256();
            } else {
                println!("msg_296 {}", 1);
                func_33();
                let w_297 = 2;
            }
            pub fn func_281() {
                let v_298 = func_176();
                let w_299 = 4;
                let w_300 = 3;
                let w_301 = 3;
            }
            if 9 > 10 {
                let w_302 = 5;
                #[cfg(not(feature = "m2_10"))]
                let v_303 = 554;
            } else {
                ext_2();
                let w_304 = 4;
                let v_305 = func_100();
            }
        } else {
            if 5 > 10 {
                let w_306 = 5;
            } else {
                let w_307 = 7;
                let v_308 = 36 + 35;
            }
            let v_309 = func_178();
            let v_310 = func_87();
        }
        let v_311 = ext_3();
        match 3 {
            0 => {
                println!("msg_312 {}", 1);
                println!("msg_313 {}", 1);
                let v_314 = 55 + 33;
            }
            _ => {}
        }
    }
}
pub fn func_315() {
    match 2 {
        0 => {
            ext_3();
            let _ = 38 + 59;
        }
        _ => {}
    }
    #[cfg(feature = "m2_7")]
    let v_316 = func_33();
    println!("msg_317 {}", 1);
    pub fn func_318() {
        let _ = 313;
        println!("msg_319 {}", 1);
    }
}
pub fn func_320() {
    ext_1();
    println!("msg_321 {}", 1);
    if 11 > 10 {
        let v_322 = ext_2();
        let v_323 = func_164();
        let v_324 = 729;
    } else {
        pub fn func_325() {
            if 7 > 10 {
                #[cfg(feature = "m2_7")]
                let v_326 = 33 + 31;
                let v_327 = func_280();
                let w_328 = 7;
                let v_329 = func_28();
            } else {
                let w_330 = 7;
            }
            #[cfg(feature = "m2_7")]
            let v_331 = 9 + 11;
        }
        #[cfg(feature = "m2_9")]
        let v_332 = 96 + 76;
        let _ = 193;
    }
}
pub fn func_333() {
    println!("msg_334 {}", 1);
}
pub fn func_335() {
    #[cfg(feature = "m2_7")]
    let v_336 = 71 + 7;
    func_177();
    match 4 {
        0 => {
            println!("msg_337 {}", 1);
            match 1 {
                0 => {
                    match 1 {
                        0 => {
                            let _ = 52 + 29;
                            println!("msg_338 {}", 1);
                            let v_339 = func_66();
                        }
                        _ => {}
                    }
                    let v_340 = 7 + 50;
                    let v_341 = func_315();
                    if 9 > 10 {
                        #[cfg(not(feature = "m2_10"))]
                        let v_342 = func_192();
                        println!("msg_343 {}", 1);
                        func_224();
                        #[cfg(not(feature = "m2_8"))]
                        let _ = 5 + 48;
                    } else {
                        let _ = 60 + 87;
                        #[cfg(feature = "m2_9")]
                        let v_344 = 59;
                        let v_345 = 7 + 49;
                        let v_346 = 126;
                    }
                }
                _ => {}
            }
            let v_347 = ext_2();
            match 0 {
                0 => {
                    let v_348 = 693;
                    println!("msg_349 {}", 1);
                    match 4 {
                        0 => {
                            func_43();
                        }
                        _ => {}
                    }
                    let v_350 = func_259();
                }
                _ => {}
            }
        }
        _ => {}
    }
}
