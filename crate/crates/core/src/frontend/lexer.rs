//! A tolerant tokenizer for the supported Rust subset.
//!
//! Only the distinctions the item/statement parser needs are kept: identifiers,
//! string contents (for `feature = "x"`), lifetimes, and punctuation. Every
//! other literal collapses to [`Tok::Lit`].

use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Str(String),
    Lit,
    Lifetime(String),
    Punct(&'static str),
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: u32,
}

impl Token {
    pub fn is_punct(&self, p: &str) -> bool {
        matches!(&self.tok, Tok::Punct(q) if *q == p)
    }

    pub fn is_ident(&self, name: &str) -> bool {
        matches!(&self.tok, Tok::Ident(s) if s == name)
    }

    pub fn ident(&self) -> Option<&str> {
        match &self.tok {
            Tok::Ident(s) => Some(s),
            _ => None,
        }
    }
}

const PUNCTS_2: &[&str] = &["::", "->", "=>"];
const PUNCTS_1: &[&str] = &[
    "#", "!", "[", "]", "(", ")", "{", "}", "<", ">", ",", ";", ":", "=", ".", "|", "&", "+", "-",
    "*", "/", "%", "^", "?", "@", "$", "~",
];

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    path: &'a str,
}

impl Cursor<'_> {
    fn peek(&self, off: usize) -> Option<char> {
        self.chars.get(self.pos + off).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn err(&self, line: u32, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            path: self.path.to_string(),
            line,
            message: message.into(),
        }
    }

    fn skip_block_comment(&mut self, start_line: u32) -> Result<(), SyntaxError> {
        // positioned after the opening `/*`
        let mut depth = 1usize;
        while depth > 0 {
            match (self.peek(0), self.peek(1)) {
                (Some('/'), Some('*')) => {
                    self.pos += 2;
                    depth += 1;
                }
                (Some('*'), Some('/')) => {
                    self.pos += 2;
                    depth -= 1;
                }
                (Some(_), _) => {
                    self.bump();
                }
                (None, _) => return Err(self.err(start_line, "unterminated block comment")),
            }
        }
        Ok(())
    }

    fn quoted(&mut self, start_line: u32) -> Result<String, SyntaxError> {
        // positioned after the opening quote
        let mut out = String::new();
        loop {
            match self.bump() {
                Some('"') => return Ok(out),
                Some('\\') => match self.bump() {
                    Some('n') => out.push('\n'),
                    Some('t') => out.push('\t'),
                    Some('r') => out.push('\r'),
                    Some('0') => out.push('\0'),
                    Some(c) => out.push(c),
                    None => {}
                },
                Some(c) => out.push(c),
                None => return Err(self.err(start_line, "unterminated string literal")),
            }
        }
    }

    fn raw_quoted(&mut self, start_line: u32) -> Result<String, SyntaxError> {
        // positioned at the first `#` or `"` after the `r`
        let mut hashes = 0usize;
        while self.peek(0) == Some('#') {
            hashes += 1;
            self.pos += 1;
        }
        if self.bump() != Some('"') {
            return Err(self.err(start_line, "malformed raw string literal"));
        }
        let mut out = String::new();
        loop {
            match self.bump() {
                Some('"') if (0..hashes).all(|i| self.peek(i) == Some('#')) => {
                    self.pos += hashes;
                    return Ok(out);
                }
                Some(c) => out.push(c),
                None => return Err(self.err(start_line, "unterminated raw string literal")),
            }
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c.is_alphanumeric()
}

pub fn tokenize(path: &str, text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut cur = Cursor {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        path,
    };
    let mut out = Vec::new();
    while let Some(c) = cur.peek(0) {
        let line = cur.line;
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '/' && cur.peek(1) == Some('/') {
            while let Some(c) = cur.peek(0) {
                if c == '\n' {
                    break;
                }
                cur.pos += 1;
            }
            continue;
        }
        if c == '/' && cur.peek(1) == Some('*') {
            cur.pos += 2;
            cur.skip_block_comment(line)?;
            continue;
        }
        // string-like literals with prefixes: r"", r#""#, b"", br"", c""
        let prefixed_raw = match (c, cur.peek(1), cur.peek(2)) {
            ('r', Some('"'), _) | ('r', Some('#'), Some('"' | '#')) => Some(1),
            ('b' | 'c', Some('r'), Some('"' | '#')) => Some(2),
            _ => None,
        };
        if let Some(skip) = prefixed_raw {
            cur.pos += skip;
            let s = cur.raw_quoted(line)?;
            out.push(Token { tok: Tok::Str(s), line });
            continue;
        }
        if (c == 'b' || c == 'c') && cur.peek(1) == Some('"') {
            cur.pos += 2;
            let s = cur.quoted(line)?;
            out.push(Token { tok: Tok::Str(s), line });
            continue;
        }
        if c == 'b' && cur.peek(1) == Some('\'') {
            cur.pos += 1;
            char_literal(&mut cur, line)?;
            out.push(Token { tok: Tok::Lit, line });
            continue;
        }
        if c == '"' {
            cur.bump();
            let s = cur.quoted(line)?;
            out.push(Token { tok: Tok::Str(s), line });
            continue;
        }
        if c == '\'' {
            // char literal or lifetime/label
            let is_char = matches!((cur.peek(1), cur.peek(2)), (Some('\\'), _) | (Some(_), Some('\'')));
            if is_char {
                char_literal(&mut cur, line)?;
                out.push(Token { tok: Tok::Lit, line });
            } else {
                cur.bump();
                let mut name = String::from("'");
                while let Some(c) = cur.peek(0).filter(|c| is_ident_continue(*c)) {
                    name.push(c);
                    cur.pos += 1;
                }
                out.push(Token {
                    tok: Tok::Lifetime(name),
                    line,
                });
            }
            continue;
        }
        if c.is_ascii_digit() {
            while cur.peek(0).is_some_and(is_ident_continue) {
                cur.pos += 1;
            }
            if cur.peek(0) == Some('.') && cur.peek(1).is_some_and(|d| d.is_ascii_digit()) {
                cur.pos += 1;
                while cur.peek(0).is_some_and(is_ident_continue) {
                    cur.pos += 1;
                }
            }
            out.push(Token { tok: Tok::Lit, line });
            continue;
        }
        if is_ident_start(c) {
            let mut name = String::new();
            if c == 'r' && cur.peek(1) == Some('#') {
                cur.pos += 2;
            }
            while let Some(c) = cur.peek(0).filter(|c| is_ident_continue(*c)) {
                name.push(c);
                cur.pos += 1;
            }
            out.push(Token {
                tok: Tok::Ident(name),
                line,
            });
            continue;
        }
        let two: String = [Some(c), cur.peek(1)].into_iter().flatten().collect();
        if let Some(p) = PUNCTS_2.iter().find(|p| **p == two) {
            cur.pos += 2;
            out.push(Token {
                tok: Tok::Punct(p),
                line,
            });
            continue;
        }
        let one = c.to_string();
        if let Some(p) = PUNCTS_1.iter().find(|p| **p == one) {
            cur.pos += 1;
            out.push(Token {
                tok: Tok::Punct(p),
                line,
            });
            continue;
        }
        return Err(cur.err(line, format!("unexpected character {c:?}")));
    }
    Ok(out)
}

fn char_literal(cur: &mut Cursor<'_>, line: u32) -> Result<(), SyntaxError> {
    cur.bump(); // opening quote
    loop {
        match cur.bump() {
            Some('\\') => {
                cur.bump();
            }
            Some('\'') => return Ok(()),
            Some('\n') | None => return Err(cur.err(line, "unterminated character literal")),
            Some(_) => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<Tok> {
        tokenize("t.rs", src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn lifetimes_and_chars() {
        assert_eq!(
            kinds("'a 'b' '\\n'"),
            vec![Tok::Lifetime("'a".into()), Tok::Lit, Tok::Lit]
        );
    }

    #[test]
    fn raw_strings_and_comments() {
        let toks = kinds("r#\"x\"y\"# /* a /* nested */ */ // tail\n b\"z\"");
        assert_eq!(toks, vec![Tok::Str("x\"y".into()), Tok::Str("z".into())]);
    }

    #[test]
    fn line_numbers_follow_newlines() {
        let toks = tokenize("t.rs", "a\n\nb").unwrap();
        assert_eq!(toks[1].line, 3);
    }

    #[test]
    fn multi_char_punct() {
        assert_eq!(
            kinds("a::b -> c => d"),
            vec![
                Tok::Ident("a".into()),
                Tok::Punct("::"),
                Tok::Ident("b".into()),
                Tok::Punct("->"),
                Tok::Ident("c".into()),
                Tok::Punct("=>"),
                Tok::Ident("d".into()),
            ]
        );
    }

    #[test]
    fn unterminated_string_is_an_error() {
        let err = tokenize("t.rs", "\"abc").unwrap_err();
        assert_eq!(err.line, 1);
    }
}
