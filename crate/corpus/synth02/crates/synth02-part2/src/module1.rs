use std::collections::HashMap;
use std::collections::HashMap;
pub fn func_130() {
    let v_131 = 151;
    let v_132 = 93 + 85;
    let _ = 7;
}
use std::collections::HashMap;
#[cfg(feature = "m2_0")]
pub fn func_133() {
    let v_134 = func_6();
    #[cfg(feature = "m2_5")]
    let _ = 77 + 52;
}
pub mod inner_135 {
    use super::*;
    pub struct Handle_136;
    impl Handle_136 {
        pub fn func_137() {
            match 3 {
                0 => {
                    func_37();
                    println!("msg_138 {}", 1);
                    let v_139 = 820;
                    println!("msg_140 {}", 1);
                }
                _ => {}
            }
            #[cfg(feature = "m2_0")]
            let v_141 = func_108();
        }
    }
}
pub fn func_142() {
    println!("msg_143 {}", 1);
    let v_144 = 17 + 48;
    println!("msg_145 {}", 1);
    pub fn func_146() {
        match 2 {
            0 => {
                match 3 {
                    0 => {
                        let v_147 = 12 + 51;
                        #[cfg(feature = "m2_1")]
                        let v_148 = ext_2();
                        let w_149 = 3;
                        let v_150 = func_105();
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
}
use std::collections::HashMap;
pub fn func_151() {
    #[cfg(feature = "m2_1")]
    func_137();
}
pub fn func_152() {
    if 3 > 10 {
        match 0 {
            0 => {
                #[cfg(not(feature = "m2_6"))]
                func_121();
                let v_153 = ext_1();
                func_117();
            }
            _ => {}
        }
        let v_154 = 336;
        println!("msg_155 {}", 1);
    } else {
        func_112();
    }
    func_92();
}
use std::collections::HashMap;
#[cfg(any(feature = "m2_4", feature = "m2_5", feature = "m2_0"))]
pub fn func_156() {
    pub fn func_157() {
        println!("msg_158 {}", 1);
        let _ = 135;
        let v_159 = func_137();
        ext_3();
    }
    let v_160 = func_45();
    let v_161 = 932;
    pub fn func_162() {
        if 8 > 10 {
            let _ = 15 + 10;
            let _ = 49 + 9;
            let v_163 = 78 + 96;
        } else {
            pub fn func_164() {
                ext_2();
            }
        }
    }
}
pub enum Kind_165 {
    #[cfg(all(feature = "m2_5", not(feature = "m2_3")))]
    Variant_166,
    Variant_167,
    Variant_168,
    Variant_169,
}
pub fn func_170() {
    match 1 {
        0 => {
            let v_171 = 28 + 20;
            func_6();
        }
        _ => {}
    }
    match 2 {
        0 => {
            let v_172 = func_146();
            func_38();
            func_20();
            let v_173 = 174;
        }
        _ => {}
    }
    #[cfg(feature = "m2_4")]
    func_92();
}
#[cfg(feature = "m2_0")]
pub type Alias_174 = u64;
pub mod inner_175 {
    use super::*;
    pub fn func_176() {
        let v_177 = func_105();
        pub fn func_1() {
            let _ = 362;
            match 3 {
                0 => {
                    let w_178 = 3;
                    let w_179 = 8;
                    let w_180 = 3;
                    let w_181 = 0;
                }
                _ => {}
            }
            if 8 > 10 {
                func_156();
                let v_182 = ext_2();
                let v_183 = 454;
            } else {
                let w_184 = 3;
                let w_185 = 5;
                let w_186 = 0;
            }
        }
        println!("msg_187 {}", 1);
        let v_188 = 73;
    }
    pub type Alias_189 = u64;
}
pub fn func_190() {
    println!("msg_191 {}", 1);
    pub fn func_192() {
        match 2 {
            0 => {
                func_162();
            }
            _ => {}
        }
        let v_193 = 989;
        func_39();
    }
}
#[cfg(not(feature = "m2_3"))]
pub static COUNTER_194: u32 = 0;
#[cfg(all(feature = "m2_5", not(feature = "m2_2")))]
pub static COUNTER_195: u32 = 0;
pub enum Kind_196 {
    Variant_197,
}
pub type Alias_198 = u64;
pub enum Kind_199 {
    Variant_200,
}
#[cfg(feature = "m2_0")]
pub fn func_201() {
    println!("msg_202 {}", 1);
    if 13 > 10 {
        ext_3();
        let v_203 = 957;
        let v_204 = 44 + 48;
        if 7 > 10 {
            let v_205 = func_58();
        } else {
            let v_206 = 86;
            #[cfg(all(feature = "m2_4", not(feature = "m2_3")))]
            let v_207 = func_112();
            println!("msg_208 {}", 1);
            let _ = 29 + 77;
        }
    } else {
        let v_209 = 285;
    }
    func_146();
    let v_210 = func_37();
}
pub struct Handle_211;
impl Handle_211 {
    pub fn func_212() {
        let _ = 17 + 72;
        let v_213 = 48 + 99;
        if 9 > 10 {
            if 13 > 10 {
                #[cfg(any(feature = "m2_1", feature = "m2_5", feature = "m2_0"))]
                let v_214 = ext_2();
                let v_215 = ext_0();
                let v_216 = ext_1();
                let w_217 = 6;
            } else {
                println!("msg_218 {}", 1);
            }
            let v_219 = func_176();
            match 1 {
                0 => {
                    let v_220 = 654;
                    let w_221 = 7;
                    let w_222 = 2;
                }
                _ => {}
            }
            let v_223 = func_37();
        } else {
            let _ = 876;
        }
        let _ = 10 + 12;
    }
    pub fn func_224() {
        match 2 {
            0 => {
                func_120();
                let v_225 = 62 + 37;
                let v_226 = 635;
                ext_2();
            }
            _ => {}
        }
        match 3 {
            0 => {
                let _ = 351;
                #[cfg(any(feature = "m2_4", feature = "m2_0", feature = "m2_1"))]
                let v_227 = 61 + 83;
                match 3 {
                    0 => {
                        let v_228 = func_156();
                        let w_229 = 6;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
        pub fn func_230() {
            func_152();
            let v_231 = ext_3();
            #[cfg(feature = "m2_5")]
            let v_232 = func_30();
            println!("msg_233 {}", 1);
        }
    }
}
pub fn func_234() {
    if 7 > 10 {
        let v_235 = func_170();
        println!("msg_236 {}", 1);
        if 15 > 10 {
            let v_237 = func_201();
            let _ = 371;
        } else {
            println!("msg_238 {}", 1);
            pub fn func_239() {
                let w_240 = 2;
            }
            #[cfg(feature = "m2_5")]
            let v_241 = 60 + 75;
            if 8 > 10 {
                #[cfg(feature = "m2_0")]
                let v_242 = func_12();
                let v_243 = func_151();
            } else {
                func_20();
            }
        }
    } else {
        let v_244 = func_162();
    }
    #[cfg(feature = "m2_5")]
    let v_245 = func_230();
}
pub fn func_121() {
    println!("msg_246 {}", 1);
    pub fn func_105() {
        #[cfg(feature = "m2_1")]
        let v_247 = 47 + 43;
        if 11 > 10 {
            println!("msg_248 {}", 1);
            #[cfg(feature = "m2_4")]
            let v_249 = 715;
            let v_250 = 464;
            println!("msg_251 {}", 1);
        } else {
            let v_252 = 288;
            let v_253 = ext_2();
            func_230();
        }
        let v_254 = 582;
    }
    let v_255 = 11 + 18;
}
