pub static COUNTER_159: u32 = 0;
pub fn func_18() {
    let v_160 = 249;
    func_76();
}
pub fn func_161() {
    #[cfg(feature = "feat8")]
    ext_3();
    let v_162 = 527;
    let v_163 = 328;
    println!("msg_164 {}", 1);
}
pub enum Kind_165 {
    Variant_166,
    Variant_167,
    Variant_168,
}
pub fn func_169() {
    let v_170 = func_18();
    println!("msg_171 {}", 1);
}
#[cfg(feature = "feat9")]
pub fn func_172() {
    let v_173 = func_4();
    let v_174 = func_35();
    #[cfg(not(feature = "feat7"))]
    ext_0();
    pub fn func_175() {
        if 11 > 10 {
            println!("msg_176 {}", 1);
        } else {
            let v_177 = 332;
        }
        pub fn func_178() {
            let v_179 = func_6();
            ext_0();
            let v_180 = func_99();
        }
        match 3 {
            0 => {
                pub fn func_181() {
                    let v_182 = ext_1();
                    let v_183 = func_64();
                }
                pub fn func_184() {
                    let v_185 = ext_2();
                    let w_186 = 8;
                    println!("msg_187 {}", 1);
                    let v_188 = 52 + 36;
                }
            }
            _ => {}
        }
        let v_189 = 250;
    }
}
pub const LIMIT_190: u32 = func_51();
pub enum Kind_191 {
    #[cfg(any(feature = "feat9", feature = "feat4"))]
    Variant_192,
    Variant_193,
    Variant_194,
    Variant_195,
}
pub const LIMIT_196: u32 = func_115();
use std::collections::HashMap;
#[cfg(feature = "feat8")]
pub type Alias_197 = u64;
pub static COUNTER_198: u32 = 0;
#[cfg(feature = "feat8")]
pub fn func_172() {
    #[cfg(not(feature = "feat2"))]
    let v_199 = 45 + 22;
}
pub fn func_200() {
    let v_201 = 379;
    #[cfg(feature = "feat3")]
    let _ = 824;
    let v_202 = 73 + 56;
    if 2 > 10 {
        let v_203 = func_18();
        if 4 > 10 {
            if 10 > 10 {
                let w_204 = 0;
                let v_205 = 83 + 98;
            } else {
                let _ = 14 + 18;
                let w_206 = 2;
                let v_207 = 45 + 4;
                println!("msg_208 {}", 1);
            }
            let v_209 = ext_3();
        } else {
            let v_210 = 43 + 13;
            match 3 {
                0 => {
                    println!("msg_211 {}", 1);
                    func_102();
                    let w_212 = 5;
                }
                _ => {}
            }
            let v_213 = func_35();
            match 2 {
                0 => {
                    println!("msg_214 {}", 1);
                    let w_215 = 4;
                }
                _ => {}
            }
        }
    } else {
        let v_216 = ext_0();
        if 16 > 10 {
            let v_217 = func_6();
            pub fn func_130() {
                let w_218 = 3;
                func_181();
                let v_219 = func_119();
            }
        } else {
            #[cfg(all(feature = "feat8", not(feature = "feat1")))]
            let v_220 = ext_0();
            func_130();
        }
        pub fn func_221() {
            let v_222 = 955;
        }
        let v_223 = 48 + 84;
    }
}
pub const LIMIT_224: u32 = func_221();
pub struct Record_225 {
    pub field_226: u32,
    pub field_227: u32,
}
#[cfg(feature = "feat4")]
pub static COUNTER_228: u32 = 0;
pub const LIMIT_229: u32 = 79 + 62;
pub enum Kind_230 {
    #[cfg(feature = "feat8")]
    Variant_231,
}
pub mod inner_232 {
    use super::*;
    pub struct Record_233 {
        pub field_234: u32,
        pub field_235: u32,
        pub field_236: u32,
        pub field_237: u32,
    }
    pub struct Handle_238;
    impl Handle_238 {
        pub fn func_239() {
            let _ = 382;
            pub fn func_240() {
                #[cfg(feature = "feat9")]
                func_1();
                let w_241 = 4;
            }
            println!("msg_242 {}", 1);
            ext_0();
        }
        pub fn func_1() {
            let _ = 527;
            println!("msg_243 {}", 1);
            let v_244 = func_112();
        }
    }
    #[cfg(any(feature = "feat3", feature = "feat3"))]
    pub fn func_161() {
        let v_245 = 425;
    }
}
#[cfg(not(feature = "feat7"))]
pub struct Record_246 {
    pub field_247: u32,
    pub field_248: u32,
    #[cfg(not(feature = "feat5"))]
    pub field_249: u32,
}
#[cfg(feature = "feat4")]
pub fn func_250() {
    let v_251 = func_4();
}
#[cfg(not(feature = "feat1"))]
pub fn func_252() {
    let v_253 = func_99();
    func_4();
    let v_254 = 67 + 33;
}
pub type Alias_255 = u64;
use std::collections::HashMap;
pub fn func_256() {
    #[cfg(feature = "feat8")]
    let v_257 = 99 + 75;
    let _ = 64;
    println!("msg_258 {}", 1);
}
pub type Alias_259 = u64;
use std::collections::HashMap;
pub type Alias_260 = u64;
pub struct Record_261 {
    pub field_262: u32,
    pub field_263: u32,
    #[cfg(any(feature = "feat8", feature = "feat8"))]
    pub field_264: u32,
}
pub fn func_265() {
    func_97();
    ext_3();
    func_76();
}
pub fn func_266() {
    #[cfg(feature = "feat4")]
    let v_267 = 409;
    let v_268 = 762;
}
pub fn func_269() {
    #[cfg(feature = "feat8")]
    pub fn func_130() {
        let _ = 14 + 46;
        #[cfg(any(feature = "feat9", feature = "feat9"))]
        let _ = 383;
        #[cfg(any(feature = "feat9", feature = "feat9", feature = "feat9"))]
        let v_270 = 80 + 51;
        func_181();
    }
    func_92();
}
#[cfg(not(feature = "feat7"))]
pub fn func_271() {
    let v_272 = 908;
    ext_0();
    #[cfg(not(feature = "feat5"))]
    let v_273 = 790;
}
pub const LIMIT_274: u32 = func_97();
#[cfg(feature = "feat3")]
pub static COUNTER_275: u32 = 0;
pub fn func_276() {
    match 2 {
        0 => {
            let v_277 = func_35();
        }
        _ => {}
    }
    let v_278 = ext_3();
}
pub fn func_279() {
    let v_280 = 374;
    let v_281 = func_161();
}
pub struct Handle_282;
impl Handle_282 {
    pub fn func_283() {
        let v_284 = 0 + 53;
        pub fn func_285() {
            #[cfg(feature = "feat8")]
            func_41();
            if 11 > 10 {
                let _ = 282;
                #[cfg(not(feature = "feat5"))]
                let v_286 = ext_2();
            } else {
                let w_287 = 1;
                let _ = 66 + 66;
                let v_288 = 6 + 26;
            }
            if 1 > 10 {
                let w_289 = 6;
                let v_290 = func_265();
                let _ = 279;
            } else {
                let w_291 = 4;
            }
        }
        if 3 > 10 {
            if 19 > 10 {
                ext_3();
                let v_292 = func_76();
                let v_293 = func_119();
                #[cfg(all(feature = "feat8", not(feature = "feat6")))]
                let v_294 = func_239();
            } else {
                let _ = 767;
                #[cfg(feature = "feat8")]
                let v_295 = ext_2();
            }
            let v_296 = 86 + 66;
            println!("msg_297 {}", 1);
            let _ = 962;
        } else {
            match 2 {
                0 => {
                    let v_298 = func_132();
                }
                _ => {}
            }
            let v_299 = ext_1();
        }
        #[cfg(feature = "feat9")]
        let v_300 = func_276();
    }
}
pub fn func_301() {
    func_6();
    let v_302 = func_29();
}
pub struct Handle_303;
impl Handle_303 {
    pub fn func_304() {
        let v_305 = 26 + 61;
        #[cfg(feature = "feat3")]
        func_119();
        func_285();
    }
}
pub struct Handle_306;
impl Handle_306 {
    pub fn func_307() {
        let v_308 = ext_0();
        match 4 {
            0 => {
                let v_309 = ext_0();
                #[cfg(feature = "feat3")]
                let _ = 993;
                let v_310 = func_115();
            }
            _ => {}
        }
        let v_311 = ext_0();
        let v_312 = func_304();
    }
}
pub const LIMIT_313: u32 = ext_2();
pub struct Record_314 {
    #[cfg(all(feature = "feat4", not(feature = "feat7")))]
    pub field_315: u32,
}
pub static COUNTER_316: u32 = 0;
pub fn func_317() {
    match 3 {
        0 => {
            pub fn func_318() {
                let v_319 = 47 + 19;
                #[cfg(all(feature = "feat8", not(feature = "feat5")))]
                let v_320 = ext_2();
                if 9 > 10 {
                    let w_321 = 5;
                } else {
                    let w_322 = 2;
                    let v_323 = func_18();
                    let v_324 = func_161();
                }
                println!("msg_325 {}", 1);
            }
            #[cfg(feature = "feat4")]
            let v_326 = func_4();
            let v_327 = ext_3();
            ext_1();
        }
        _ => {}
    }
}
pub struct Record_328 {
    pub field_329: u32,
    pub field_330: u32,
    #[cfg(feature = "feat9")]
    pub field_331: u32,
    pub field_332: u32,
}
#[cfg(feature = "feat3")]
pub mod inner_333 {
    use super::*;
    pub const LIMIT_334: u32 = func_130();
    #[cfg(feature = "feat8")]
    pub enum Kind_335 {
        Variant_336,
        Variant_337,
        Variant_338,
        Variant_339,
    }
}
