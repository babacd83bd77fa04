pub fn func_153() {
    let v_154 = func_57();
    pub fn func_155() {
        func_92();
        if 6 > 10 {
            pub fn func_156() {
                let w_157 = 2;
                let v_158 = 89 + 3;
            }
            let v_159 = 5 + 66;
        } else {
            let v_160 = func_22();
            let v_161 = 148;
        }
        let v_162 = func_113();
        let v_163 = func_17();
    }
    let _ = 369;
}
pub enum Kind_164 {
    Variant_165,
}
pub fn func_166() {
    let v_167 = func_142();
}
pub fn func_168() {
    func_32();
    let v_169 = func_3();
    match 1 {
        0 => {
            func_135();
            let _ = 775;
            let v_170 = func_17();
        }
        _ => {}
    }
    pub fn func_171() {
        let v_172 = func_148();
        if 10 > 10 {
            let v_173 = func_106();
            func_148();
        } else {
            let v_174 = ext_3();
            let v_175 = 452;
            let v_176 = ext_3();
        }
        pub fn func_177() {
            println!("msg_178 {}", 1);
        }
        let v_179 = ext_0();
    }
}
pub fn func_180() {
    let v_181 = ext_1();
    pub fn func_182() {
        if 8 > 10 {
            pub fn func_119() {
                let w_183 = 3;
                ext_1();
                let _ = 76 + 40;
            }
        } else {
            let v_184 = func_148();
            if 1 > 10 {
                let v_185 = 68 + 46;
                let w_186 = 5;
                println!("msg_187 {}", 1);
                println!("msg_188 {}", 1);
            } else {
                println!("msg_189 {}", 1);
                func_98();
            }
            let v_190 = func_106();
        }
    }
}
pub fn func_191() {
    match 0 {
        0 => {
            pub fn func_192() {
                println!("msg_193 {}", 1);
                pub fn func_194() {
                    let v_195 = func_22();
                }
                let _ = 864;
            }
            let v_196 = 319;
            match 4 {
                0 => {
                    let v_197 = ext_3();
                    let v_198 = 46 + 28;
                }
                _ => {}
            }
        }
        _ => {}
    }
    if 9 > 10 {
        let v_199 = ext_2();
        let _ = 298;
        match 4 {
            0 => {
                let v_200 = ext_1();
            }
            _ => {}
        }
        println!("msg_201 {}", 1);
    } else {
        match 2 {
            0 => {
                pub fn func_202() {
                    let w_203 = 8;
                }
                pub fn func_204() {
                    let w_205 = 5;
                    let w_206 = 2;
                    let v_207 = func_60();
                    println!("msg_208 {}", 1);
                }
                let v_209 = 28;
            }
            _ => {}
        }
        let v_210 = func_32();
        if 0 > 10 {
            let v_211 = 7 + 93;
        } else {
            let v_212 = ext_1();
            let v_213 = func_119();
        }
        if 11 > 10 {
            match 1 {
                0 => {
                    let _ = 75 + 74;
                    let _ = 68 + 17;
                    let v_214 = func_168();
                    let v_215 = ext_0();
                }
                _ => {}
            }
            let v_216 = 92 + 1;
            let v_217 = 256;
        } else {
            #[cfg(not(feature = "feat11"))]
            pub fn func_218() {
                println!("msg_219 {}", 1);
                println!("msg_220 {}", 1);
                let w_221 = 7;
                let _ = 148;
            }
            match 3 {
                0 => {
                    let v_222 = func_60();
                }
                _ => {}
            }
            pub fn func_223() {
                let w_224 = 4;
                println!("msg_225 {}", 1);
                let w_226 = 4;
                let v_227 = 169;
            }
            println!("msg_228 {}", 1);
        }
    }
    if 10 > 10 {
        let _ = 413;
        let v_229 = 57 + 10;
    } else {
        let v_230 = func_142();
    }
    func_177();
}
pub fn func_82() {
    let _ = 49 + 22;
    match 0 {
        0 => {
            let v_231 = ext_0();
            let v_232 = ext_0();
            println!("msg_233 {}", 1);
        }
        _ => {}
    }
}
use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_234() {
    func_192();
    match 2 {
        0 => {
            println!("msg_235 {}", 1);
            let v_236 = ext_0();
            let v_237 = ext_2();
            if 19 > 10 {
                match 4 {
                    0 => {
                        let v_238 = 33 + 55;
                        println!("msg_239 {}", 1);
                        let w_240 = 6;
                    }
                    _ => {}
                }
                let v_241 = ext_0();
                match 0 {
                    0 => {
                        let w_242 = 8;
                    }
                    _ => {}
                }
            } else {
                let v_243 = ext_2();
                match 2 {
                    0 => {
                        func_65();
                        let v_244 = 208;
                        println!("msg_245 {}", 1);
                    }
                    _ => {}
                }
                let v_246 = func_156();
                match 3 {
                    0 => {
                        let v_247 = func_143();
                        let v_248 = ext_2();
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
    if 14 > 10 {
        let v_249 = func_92();
        let v_250 = 220;
        let v_251 = func_194();
        let _ = 864;
    } else {
        let v_252 = func_171();
        match 1 {
            0 => {
                match 0 {
                    0 => {
                        let w_253 = 7;
                        let _ = 68;
                        let v_254 = 97 + 34;
                        let w_255 = 6;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    println!("msg_256 {}", 1);
}
pub mod inner_257 {
    use super::*;
    pub fn func_258() {
        let _ = 32 + 41;
        let v_259 = func_143();
    }
}
pub fn func_260() {
    let v_261 = func_171();
}
use std::collections::HashMap;
pub fn func_262() {
    if 0 > 10 {
        match 0 {
            0 => {
                let v_263 = func_135();
                println!("msg_264 {}", 1);
                match 0 {
                    0 => {
                        let w_265 = 5;
                        let w_266 = 6;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        let v_267 = ext_1();
        pub fn func_268() {
            match 3 {
                0 => {
                    func_168();
                    let v_269 = 98 + 35;
                    func_234();
                }
                _ => {}
            }
        }
    } else {
        println!("msg_270 {}", 1);
        let v_271 = 854;
        pub fn func_272() {
            pub fn func_273() {
                let v_274 = ext_1();
                let v_275 = 42 + 82;
                let v_276 = 536;
            }
        }
        func_32();
    }
    println!("msg_277 {}", 1);
    let _ = 68 + 97;
}
pub fn func_278() {
    match 0 {
        0 => {
            println!("msg_279 {}", 1);
            let v_280 = func_60();
        }
        _ => {}
    }
    let v_281 = 302;
}
pub fn func_282() {
    pub fn func_148() {
        let _ = 19 + 80;
    }
    pub fn func_98() {
        match 0 {
            0 => {
                let v_283 = func_262();
                println!("msg_284 {}", 1);
                let v_285 = func_106();
                println!("msg_286 {}", 1);
            }
            _ => {}
        }
        match 2 {
            0 => {
                match 1 {
                    0 => {
                        let w_287 = 2;
                        let v_288 = func_278();
                        let v_289 = 45 + 3;
                        let v_290 = func_143();
                    }
                    _ => {}
                }
                let v_291 = 228;
                if 16 > 10 {
                    let w_292 = 0;
                } else {
                    let v_293 = 663;
                }
                func_177();
            }
            _ => {}
        }
        let _ = 12 + 97;
    }
    match 2 {
        0 => {
            func_223();
        }
        _ => {}
    }
    let v_294 = 900;
}
pub static COUNTER_295: u32 = 0;
pub static COUNTER_296: u32 = 0;
pub fn func_297() {
    if 12 > 10 {
        println!("msg_298 {}", 1);
        func_143();
        func_22();
    } else {
        let v_299 = ext_1();
    }
    let v_300 = 24 + 45;
}
pub struct Handle_301;
impl Handle_301 {
    pub fn func_302() {
        let v_303 = 1;
    }
}
pub fn func_304() {
    match 0 {
        0 => {
            let v_305 = 339;
        }
        _ => {}
    }
    let v_306 = 64 + 60;
    match 0 {
        0 => {
            let v_307 = ext_0();
        }
        _ => {}
    }
    ext_2();
}
