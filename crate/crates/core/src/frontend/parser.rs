//! Recursive-descent parser for the supported item/statement subset.
//!
//! Expressions are not parsed into a full tree. The scanner walks their tokens
//! and keeps only the structure the weighting needs: calls, macro
//! invocations, blocks, `if`/`match`/loop skeletons.

use super::ast::{AstNode, NodeKind, Span};
use super::lexer::{tokenize, Tok, Token};
use super::predicate::parse_predicate_tokens;
use super::{CfgPredicate, SyntaxError};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    /// Statement or initializer; ends at `;` (consumed) or an enclosing close.
    Stmt,
    /// `if`/`while`/`match` header; ends before the `{` of the body.
    Cond,
    /// Match arm body; ends at `,` (consumed) or the closing `}`.
    Arm,
    /// Inside a delimited group; ends at its close.
    Group,
}

pub(crate) struct Parser<'a> {
    toks: Vec<Token>,
    /// For every opening delimiter, the index of its close (and vice versa).
    matching: Vec<usize>,
    pos: usize,
    path: &'a str,
}

/// Parses one file into a `module` node holding its items.
pub fn parse_file(path: &str, text: &str) -> Result<AstNode, SyntaxError> {
    let toks = tokenize(path, text)?;
    let matching = match_delimiters(path, &toks)?;
    let mut p = Parser {
        toks,
        matching,
        pos: 0,
        path,
    };
    let end = p.toks.len();
    let items = p.items(end)?;
    let last_line = p.toks.last().map_or(1, |t| t.line);
    let mut module = AstNode::new(
        NodeKind::Module,
        Some(module_name(path)),
        Span {
            file: path.to_string(),
            start: 1,
            end: last_line,
        },
    );
    module.children = items;
    Ok(module)
}

fn module_name(path: &str) -> String {
    let mut parts = path.rsplit('/');
    let file = parts.next().unwrap_or(path);
    let stem = file.strip_suffix(".rs").unwrap_or(file);
    if stem == "mod" {
        if let Some(dir) = parts.next() {
            return dir.to_string();
        }
    }
    stem.to_string()
}

fn match_delimiters(path: &str, toks: &[Token]) -> Result<Vec<usize>, SyntaxError> {
    let mut matching = vec![NONE; toks.len()];
    let mut stack: Vec<(usize, &str)> = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        let Tok::Punct(p) = &t.tok else { continue };
        match *p {
            "(" | "[" | "{" => stack.push((i, p)),
            ")" | "]" | "}" => {
                let want = match *p {
                    ")" => "(",
                    "]" => "[",
                    _ => "{",
                };
                match stack.pop() {
                    Some((j, open)) if open == want => {
                        matching[i] = j;
                        matching[j] = i;
                    }
                    _ => {
                        return Err(SyntaxError {
                            path: path.to_string(),
                            line: t.line,
                            message: format!("unbalanced `{p}`"),
                        })
                    }
                }
            }
            _ => {}
        }
    }
    if let Some((j, open)) = stack.pop() {
        return Err(SyntaxError {
            path: path.to_string(),
            line: toks[j].line,
            message: format!("unclosed `{open}`"),
        });
    }
    Ok(matching)
}

const ITEM_KEYWORDS: &[&str] = &[
    "fn",
    "struct",
    "enum",
    "impl",
    "trait",
    "mod",
    "use",
    "static",
    "type",
    "macro_rules",
    "extern",
    "pub",
];

const EXPR_KEYWORDS: &[&str] = &[
    "let", "return", "break", "continue", "move", "in", "as", "mut", "ref", "box", "yield",
    "await", "dyn", "impl", "where", "true", "false", "else",
];

impl Parser<'_> {
    fn peek(&self, off: usize) -> Option<&Token> {
        self.toks.get(self.pos + off)
    }

    fn at_punct(&self, p: &str) -> bool {
        self.peek(0).is_some_and(|t| t.is_punct(p))
    }

    fn at_ident(&self, name: &str) -> bool {
        self.peek(0).is_some_and(|t| t.is_ident(name))
    }

    fn nth_is_punct(&self, off: usize, p: &str) -> bool {
        self.peek(off).is_some_and(|t| t.is_punct(p))
    }

    fn nth_is_ident(&self, off: usize, name: &str) -> bool {
        self.peek(off).is_some_and(|t| t.is_ident(name))
    }

    fn line(&self) -> u32 {
        self.peek(0)
            .or(self.toks.last())
            .map_or(1, |t| t.line)
    }

    fn prev_line(&self) -> u32 {
        if self.pos == 0 {
            return 1;
        }
        self.toks
            .get(self.pos - 1)
            .or(self.toks.last())
            .map_or(1, |t| t.line)
    }

    fn span(&self, start: u32) -> Span {
        Span {
            file: self.path.to_string(),
            start,
            end: self.prev_line().max(start),
        }
    }

    fn err(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            path: self.path.to_string(),
            line: self.line(),
            message: message.into(),
        }
    }

    fn is_open(&self) -> bool {
        self.at_punct("(") || self.at_punct("[") || self.at_punct("{")
    }

    fn is_close(&self) -> bool {
        self.at_punct(")") || self.at_punct("]") || self.at_punct("}")
    }

    /// Skips the group opening at the current position.
    fn skip_group(&mut self) {
        let close = self.matching[self.pos];
        self.pos = close + 1;
    }

    fn take_ident(&mut self) -> Option<String> {
        let name = self.peek(0)?.ident()?.to_string();
        self.pos += 1;
        Some(name)
    }

    /// Advances to the first of `stops` at nesting depth zero before `end`.
    /// Returns whether a stop token was found (it is not consumed).
    fn skip_until(&mut self, stops: &[&str], end: usize, angles: bool) -> bool {
        let mut depth = 0usize;
        while self.pos < end {
            if depth == 0 && stops.iter().any(|s| self.at_punct(s)) {
                return true;
            }
            if self.is_open() {
                self.skip_group();
                continue;
            }
            if self.is_close() {
                return false;
            }
            if angles && self.at_punct("<") {
                depth += 1;
            } else if angles && self.at_punct(">") {
                depth = depth.saturating_sub(1);
            }
            self.pos += 1;
        }
        false
    }

    fn skip_angles(&mut self) {
        // positioned at `<`
        let mut depth = 0usize;
        while self.pos < self.toks.len() {
            if self.is_open() {
                self.skip_group();
                continue;
            }
            if self.is_close() {
                return;
            }
            if self.at_punct("<") {
                depth += 1;
            } else if self.at_punct(">") {
                depth -= 1;
                if depth == 0 {
                    self.pos += 1;
                    return;
                }
            }
            self.pos += 1;
        }
    }

    /// Parses outer attributes, returning the `cfg` predicates among them.
    /// Inner attributes and non-`cfg` attributes are skipped.
    fn outer_attrs(&mut self) -> Result<Vec<CfgPredicate>, SyntaxError> {
        let mut preds = Vec::new();
        loop {
            if !self.at_punct("#") {
                return Ok(preds);
            }
            if self.nth_is_punct(1, "!") && self.nth_is_punct(2, "[") {
                self.pos += 2;
                self.skip_group();
                continue;
            }
            if !self.nth_is_punct(1, "[") {
                return Ok(preds);
            }
            self.pos += 1;
            let close = self.matching[self.pos];
            let open = self.pos;
            if self.toks[open + 1].is_ident("cfg")
                && self.toks.get(open + 2).is_some_and(|t| t.is_punct("("))
            {
                let paren = open + 2;
                let paren_close = self.matching[paren];
                if paren_close + 1 != close {
                    self.pos = paren_close + 1;
                    return Err(self.err("unexpected tokens after cfg(...)"));
                }
                let line = self.toks[paren].line;
                preds.push(parse_predicate_tokens(
                    self.path,
                    &self.toks[paren + 1..paren_close],
                    line,
                )?);
            }
            self.pos = close + 1;
        }
    }

    fn items(&mut self, end: usize) -> Result<Vec<AstNode>, SyntaxError> {
        let mut out = Vec::new();
        while self.pos < end {
            if self.at_punct(";") {
                self.pos += 1;
                continue;
            }
            let before = self.pos;
            let start = self.line();
            let attrs = self.outer_attrs()?;
            if self.pos >= end {
                break;
            }
            let node = self.item(attrs, start)?;
            out.push(node);
            if self.pos == before {
                self.pos += 1;
            }
        }
        Ok(out)
    }

    fn skip_qualifiers(&mut self) {
        loop {
            if self.at_ident("pub") {
                self.pos += 1;
                if self.at_punct("(") {
                    self.skip_group();
                }
            } else if (self.at_ident("unsafe")
                || self.at_ident("async")
                || self.at_ident("default")
                || self.at_ident("auto"))
                && self.peek(1).and_then(Token::ident).is_some_and(|n| {
                    matches!(
                        n,
                        "fn" | "impl" | "trait" | "unsafe" | "async" | "extern" | "const" | "type"
                    )
                })
            {
                self.pos += 1;
            } else if self.at_ident("const")
                && self
                    .peek(1)
                    .and_then(Token::ident)
                    .is_some_and(|n| matches!(n, "fn" | "unsafe" | "async" | "extern"))
            {
                self.pos += 1;
            } else if self.at_ident("extern")
                && matches!(self.peek(1).map(|t| &t.tok), Some(Tok::Str(_)))
                && self.nth_is_ident(2, "fn")
            {
                self.pos += 2;
            } else if self.at_ident("extern") && self.nth_is_ident(1, "fn") {
                self.pos += 1;
            } else {
                return;
            }
        }
    }

    fn item(&mut self, attrs: Vec<CfgPredicate>, start: u32) -> Result<AstNode, SyntaxError> {
        self.skip_qualifiers();
        let kw = self.peek(0).and_then(Token::ident).unwrap_or("").to_string();
        let mut node = match kw.as_str() {
            "fn" => self.function()?,
            "struct" => self.structure(NodeKind::Struct)?,
            "union" if matches!(self.peek(1).map(|t| &t.tok), Some(Tok::Ident(_))) => {
                self.structure(NodeKind::Union)?
            }
            "enum" => self.enumeration()?,
            "impl" => self.implementation()?,
            "trait" => self.trait_def()?,
            "mod" => self.module()?,
            "use" => self.simple_to_semicolon(NodeKind::Use, None),
            "extern" if self.nth_is_ident(1, "crate") => {
                let ident = self.peek(2).and_then(Token::ident).map(str::to_string);
                self.simple_to_semicolon(NodeKind::ExternCrate, ident)
            }
            "const" | "static" => self.constant()?,
            "type" => {
                let ident = self.peek(1).and_then(Token::ident).map(str::to_string);
                self.simple_to_semicolon(NodeKind::TypeAlias, ident)
            }
            "macro_rules" if self.nth_is_punct(1, "!") => {
                self.pos += 2;
                let ident = self.take_ident();
                self.finish_macro(ident)
            }
            _ if !kw.is_empty() && self.path_then_bang() => {
                let segs = self.path_segments();
                self.pos += 1; // `!`
                let ident = if matches!(self.peek(0).map(|t| &t.tok), Some(Tok::Ident(_))) {
                    self.take_ident()
                } else {
                    segs.last().cloned()
                };
                self.finish_macro(ident)
            }
            _ => self.opaque(),
        };
        node.attributes = attrs;
        node.span = self.span(start);
        Ok(node)
    }

    fn path_then_bang(&self) -> bool {
        let mut i = self.pos;
        loop {
            match self.toks.get(i) {
                Some(t) if t.ident().is_some() => i += 1,
                _ => return false,
            }
            match self.toks.get(i) {
                Some(t) if t.is_punct("::") => i += 1,
                Some(t) if t.is_punct("!") => return true,
                _ => return false,
            }
        }
    }

    fn finish_macro(&mut self, ident: Option<String>) -> AstNode {
        if self.is_open() {
            self.skip_group();
        }
        if self.at_punct(";") {
            self.pos += 1;
        }
        AstNode::new(NodeKind::Macro, ident, Span::default())
    }

    fn simple_to_semicolon(&mut self, kind: NodeKind, ident: Option<String>) -> AstNode {
        let end = self.toks.len();
        if self.skip_until(&[";"], end, false) {
            self.pos += 1;
        }
        AstNode::new(kind, ident, Span::default())
    }

    fn opaque(&mut self) -> AstNode {
        loop {
            if self.pos >= self.toks.len() || self.is_close() {
                break;
            }
            if self.at_punct(";") {
                self.pos += 1;
                break;
            }
            if self.at_punct("{") {
                self.skip_group();
                break;
            }
            if self.is_open() {
                self.skip_group();
            } else {
                self.pos += 1;
            }
        }
        AstNode::new(NodeKind::Opaque, None, Span::default())
    }

    fn generics(&mut self) -> Result<Vec<AstNode>, SyntaxError> {
        let mut out = Vec::new();
        if !self.at_punct("<") {
            return Ok(out);
        }
        self.pos += 1;
        loop {
            if self.pos >= self.toks.len() || self.is_close() {
                return Ok(out);
            }
            if self.at_punct(">") {
                self.pos += 1;
                return Ok(out);
            }
            let start = self.line();
            let attrs = self.outer_attrs()?;
            if self.at_ident("const") {
                self.pos += 1;
            }
            let ident = match self.peek(0).map(|t| &t.tok) {
                Some(Tok::Lifetime(l)) => Some(l.clone()),
                Some(Tok::Ident(n)) => Some(n.clone()),
                _ => None,
            };
            let before = self.pos;
            // skip to the next `,` or the closing `>` at depth zero
            let mut depth = 0usize;
            while self.pos < self.toks.len() && !self.is_close() {
                if self.is_open() {
                    self.skip_group();
                    continue;
                }
                if depth == 0 && (self.at_punct(",") || self.at_punct(">")) {
                    break;
                }
                if self.at_punct("<") {
                    depth += 1;
                } else if self.at_punct(">") {
                    depth -= 1;
                }
                self.pos += 1;
            }
            if ident.is_some() {
                let mut node = AstNode::new(NodeKind::Generic, ident, self.span(start));
                node.attributes = attrs;
                out.push(node);
            }
            if self.at_punct(",") || self.pos == before {
                self.pos += 1;
            }
        }
    }

    fn function(&mut self) -> Result<AstNode, SyntaxError> {
        self.pos += 1; // `fn`
        let ident = self.take_ident();
        let mut children = self.generics()?;
        let end = self.toks.len();
        self.skip_until(&["{", ";"], end, false);
        let kind = if self.at_punct("{") {
            children.extend(self.block()?);
            NodeKind::Fn
        } else {
            if self.at_punct(";") {
                self.pos += 1;
            }
            NodeKind::FnDecl
        };
        let mut node = AstNode::new(kind, ident, Span::default());
        node.children = children;
        Ok(node)
    }

    fn fields(&mut self, named: bool) -> Result<Vec<AstNode>, SyntaxError> {
        // positioned at `{` or `(`
        let close = self.matching[self.pos];
        self.pos += 1;
        let mut out = Vec::new();
        let mut index = 0usize;
        while self.pos < close {
            let start = self.line();
            let attrs = self.outer_attrs()?;
            if self.pos >= close {
                break;
            }
            if self.at_ident("pub") {
                self.pos += 1;
                if self.at_punct("(") {
                    self.skip_group();
                }
            }
            let ident = if named {
                self.peek(0).and_then(Token::ident).map(str::to_string)
            } else {
                Some(index.to_string())
            };
            self.skip_until(&[","], close, true);
            let mut node = AstNode::new(NodeKind::Field, ident, self.span(start));
            node.attributes = attrs;
            out.push(node);
            index += 1;
            if self.at_punct(",") {
                self.pos += 1;
            }
        }
        self.pos = close + 1;
        Ok(out)
    }

    fn structure(&mut self, kind: NodeKind) -> Result<AstNode, SyntaxError> {
        self.pos += 1;
        let ident = self.take_ident();
        let mut children = self.generics()?;
        while self.pos < self.toks.len() && !self.is_close() {
            if self.at_punct("(") {
                children.extend(self.fields(false)?);
            } else if self.at_punct("{") {
                children.extend(self.fields(true)?);
                break;
            } else if self.at_punct(";") {
                self.pos += 1;
                break;
            } else {
                self.pos += 1;
            }
        }
        let mut node = AstNode::new(kind, ident, Span::default());
        node.children = children;
        Ok(node)
    }

    fn enumeration(&mut self) -> Result<AstNode, SyntaxError> {
        self.pos += 1;
        let ident = self.take_ident();
        let mut children = self.generics()?;
        let end = self.toks.len();
        if self.skip_until(&["{"], end, false) {
            let close = self.matching[self.pos];
            self.pos += 1;
            while self.pos < close {
                let start = self.line();
                let attrs = self.outer_attrs()?;
                if self.pos >= close {
                    break;
                }
                let name = self.peek(0).and_then(Token::ident).map(str::to_string);
                self.skip_until(&[","], close, false);
                let mut node = AstNode::new(NodeKind::Variant, name, self.span(start));
                node.attributes = attrs;
                children.push(node);
                if self.at_punct(",") {
                    self.pos += 1;
                }
            }
            self.pos = close + 1;
        }
        let mut node = AstNode::new(NodeKind::Enum, ident, Span::default());
        node.children = children;
        Ok(node)
    }

    /// Parses a `{ items }` body positioned at `{`.
    fn item_body(&mut self) -> Result<Vec<AstNode>, SyntaxError> {
        let close = self.matching[self.pos];
        self.pos += 1;
        let items = self.items(close)?;
        self.pos = close + 1;
        Ok(items)
    }

    fn implementation(&mut self) -> Result<AstNode, SyntaxError> {
        self.pos += 1;
        let mut children = self.generics()?;
        // self type: last identifier at angle depth zero before `where`/`{`
        let mut ident = None;
        let mut depth = 0usize;
        while self.pos < self.toks.len() && !self.is_close() {
            if self.at_punct("{") && depth == 0 {
                break;
            }
            if self.at_ident("where") && depth == 0 {
                self.skip_until(&["{"], self.toks.len(), true);
                break;
            }
            if self.is_open() {
                self.skip_group();
                continue;
            }
            match &self.toks[self.pos].tok {
                Tok::Punct("<") => depth += 1,
                Tok::Punct(">") => depth = depth.saturating_sub(1),
                Tok::Ident(n)
                    if depth == 0 && !matches!(n.as_str(), "for" | "dyn" | "unsafe" | "const") =>
                {
                    ident = Some(n.clone())
                }
                _ => {}
            }
            self.pos += 1;
        }
        if self.at_punct("{") {
            children.extend(self.item_body()?);
        }
        let mut node = AstNode::new(NodeKind::Impl, ident, Span::default());
        node.children = children;
        Ok(node)
    }

    fn trait_def(&mut self) -> Result<AstNode, SyntaxError> {
        self.pos += 1;
        let ident = self.take_ident();
        let mut children = self.generics()?;
        let end = self.toks.len();
        if self.skip_until(&["{", ";"], end, true) && self.at_punct("{") {
            children.extend(self.item_body()?);
        } else if self.at_punct(";") {
            self.pos += 1;
        }
        let mut node = AstNode::new(NodeKind::Trait, ident, Span::default());
        node.children = children;
        Ok(node)
    }

    fn module(&mut self) -> Result<AstNode, SyntaxError> {
        self.pos += 1;
        let ident = self.take_ident();
        if self.at_punct("{") {
            let mut node = AstNode::new(NodeKind::Module, ident, Span::default());
            node.children = self.item_body()?;
            Ok(node)
        } else {
            if self.at_punct(";") {
                self.pos += 1;
            }
            Ok(AstNode::new(NodeKind::ModDecl, ident, Span::default()))
        }
    }

    fn constant(&mut self) -> Result<AstNode, SyntaxError> {
        let kind = if self.at_ident("static") {
            NodeKind::Static
        } else {
            NodeKind::Const
        };
        self.pos += 1;
        if self.at_ident("mut") {
            self.pos += 1;
        }
        let ident = self.take_ident();
        let end = self.toks.len();
        self.skip_until(&["=", ";"], end, false);
        let mut node = AstNode::new(kind, ident, Span::default());
        if self.at_punct("=") {
            self.pos += 1;
            node.children = self.scan(Ctx::Stmt)?;
        } else if self.at_punct(";") {
            self.pos += 1;
        }
        Ok(node)
    }

    // ---- statements ----

    /// Parses a `{ ... }` block positioned at `{`, returning its statements.
    fn block(&mut self) -> Result<Vec<AstNode>, SyntaxError> {
        let close = self.matching[self.pos];
        self.pos += 1;
        let mut out = Vec::new();
        while self.pos < close {
            let before = self.pos;
            if let Some(stmt) = self.statement(close)? {
                out.push(stmt);
            }
            if self.pos == before {
                self.pos += 1;
            }
        }
        self.pos = close + 1;
        Ok(out)
    }

    fn is_item_start(&self) -> bool {
        let Some(kw) = self.peek(0).and_then(Token::ident) else {
            return false;
        };
        let next = self.peek(1).and_then(Token::ident);
        if ITEM_KEYWORDS.contains(&kw) {
            return !(kw == "type" && next.is_none());
        }
        match kw {
            "const" => !self.nth_is_punct(1, "{"),
            "unsafe" | "async" => {
                matches!(next, Some("fn" | "impl" | "trait" | "extern" | "unsafe"))
            }
            "union" => next.is_some(),
            _ => false,
        }
    }

    fn is_block_like_start(&self) -> bool {
        if self.at_punct("{") {
            return true;
        }
        if matches!(self.peek(0).map(|t| &t.tok), Some(Tok::Lifetime(_))) {
            return self.nth_is_punct(1, ":");
        }
        match self.peek(0).and_then(Token::ident) {
            Some("if" | "match" | "loop" | "while" | "for") => true,
            Some("unsafe") => self.nth_is_punct(1, "{"),
            Some("async") => {
                self.nth_is_punct(1, "{") || (self.nth_is_ident(1, "move") && self.nth_is_punct(2, "{"))
            }
            _ => false,
        }
    }

    fn statement(&mut self, close: usize) -> Result<Option<AstNode>, SyntaxError> {
        let start = self.line();
        let attrs = self.outer_attrs()?;
        if self.pos >= close {
            return Ok(None);
        }
        if self.at_punct(";") {
            self.pos += 1;
            return Ok(None);
        }
        let mut node = if self.at_ident("let") {
            self.pos += 1;
            self.skip_until(&["=", ";"], close, false);
            let mut node = AstNode::new(NodeKind::Let, None, Span::default());
            if self.at_punct("=") {
                self.pos += 1;
                node.children = self.scan(Ctx::Stmt)?;
            } else if self.at_punct(";") {
                self.pos += 1;
            }
            node
        } else if self.is_item_start() {
            return self.item(attrs, start).map(Some);
        } else if self.is_block_like_start() {
            let mut node = self.block_like()?;
            if self.at_punct(".") || self.at_punct("?") {
                node.children.extend(self.scan(Ctx::Stmt)?);
            } else if self.at_punct(";") {
                self.pos += 1;
            }
            node
        } else {
            let mut nodes = self.scan(Ctx::Stmt)?;
            if nodes.len() == 1 && matches!(nodes[0].kind, NodeKind::Call | NodeKind::Macro) {
                nodes.pop().expect("one node")
            } else {
                let mut node = AstNode::new(NodeKind::ExprStmt, None, Span::default());
                node.children = nodes;
                node
            }
        };
        node.attributes = attrs;
        node.span = self.span(start);
        Ok(Some(node))
    }

    fn block_node(&mut self, start: u32, kind: NodeKind) -> Result<AstNode, SyntaxError> {
        let mut node = AstNode::new(kind, None, Span::default());
        if self.at_punct("{") {
            node.children = self.block()?;
        }
        node.span = self.span(start);
        Ok(node)
    }

    fn block_like(&mut self) -> Result<AstNode, SyntaxError> {
        let start = self.line();
        if matches!(self.peek(0).map(|t| &t.tok), Some(Tok::Lifetime(_))) {
            self.pos += 2;
        }
        match self.peek(0).and_then(Token::ident) {
            Some("if") => self.if_expr(),
            Some("match") => self.match_expr(),
            Some("loop") => {
                self.pos += 1;
                self.block_node(start, NodeKind::Loop)
            }
            Some("while" | "for") => {
                self.pos += 1;
                let header = self.scan(Ctx::Cond)?;
                let mut node = self.block_node(start, NodeKind::Loop)?;
                node.children.splice(0..0, header);
                Ok(node)
            }
            Some("unsafe" | "async" | "const") => {
                self.pos += 1;
                if self.at_ident("move") {
                    self.pos += 1;
                }
                self.block_node(start, NodeKind::Block)
            }
            _ => self.block_node(start, NodeKind::Block),
        }
    }

    fn if_expr(&mut self) -> Result<AstNode, SyntaxError> {
        let start = self.line();
        self.pos += 1; // `if`
        let mut children = self.scan(Ctx::Cond)?;
        if self.at_punct("{") {
            let then_start = self.line();
            children.push(self.block_node(then_start, NodeKind::Block)?);
            if self.at_ident("else") {
                self.pos += 1;
                if self.at_ident("if") {
                    children.push(self.if_expr()?);
                } else if self.at_punct("{") {
                    let else_start = self.line();
                    children.push(self.block_node(else_start, NodeKind::Block)?);
                }
            }
        }
        let mut node = AstNode::new(NodeKind::If, None, Span::default());
        node.children = children;
        node.span = self.span(start);
        Ok(node)
    }

    fn match_expr(&mut self) -> Result<AstNode, SyntaxError> {
        let start = self.line();
        self.pos += 1; // `match`
        let mut children = self.scan(Ctx::Cond)?;
        if self.at_punct("{") {
            let close = self.matching[self.pos];
            self.pos += 1;
            while self.pos < close {
                let arm_start = self.line();
                let attrs = self.outer_attrs()?;
                if self.pos >= close {
                    break;
                }
                let before = self.pos;
                if !self.skip_until(&["=>"], close, false) {
                    if self.pos == before {
                        self.pos += 1;
                    }
                    continue;
                }
                self.pos += 1; // `=>`
                let body = if self.at_punct("{") {
                    let b = self.block()?;
                    if self.at_punct(",") {
                        self.pos += 1;
                    }
                    b
                } else {
                    self.scan(Ctx::Arm)?
                };
                let mut arm = AstNode::new(NodeKind::Arm, None, self.span(arm_start));
                arm.attributes = attrs;
                arm.children = body;
                children.push(arm);
            }
            self.pos = close + 1;
        }
        let mut node = AstNode::new(NodeKind::Match, None, Span::default());
        node.children = children;
        node.span = self.span(start);
        Ok(node)
    }

    // ---- expressions ----

    fn path_segments(&mut self) -> Vec<String> {
        let mut segs = Vec::new();
        if self.at_punct("::") {
            self.pos += 1;
        }
        while let Some(name) = self.peek(0).and_then(Token::ident) {
            segs.push(name.to_string());
            self.pos += 1;
            if !self.at_punct("::") {
                break;
            }
            if self.nth_is_punct(1, "<") {
                self.pos += 1;
                self.skip_angles();
                if !self.at_punct("::") {
                    break;
                }
            }
            if self.peek(1).and_then(Token::ident).is_none() {
                break;
            }
            self.pos += 1;
        }
        segs
    }

    /// Scans a delimited group positioned at its opening delimiter.
    fn scan_group(&mut self) -> Result<Vec<AstNode>, SyntaxError> {
        let close = self.matching[self.pos];
        self.pos += 1;
        let mut out = Vec::new();
        while self.pos < close {
            let before = self.pos;
            out.extend(self.scan(Ctx::Group)?);
            if self.pos == before {
                self.pos += 1;
            }
        }
        self.pos = close + 1;
        Ok(out)
    }

    fn call_node(&mut self, ident: Option<String>, start: u32) -> Result<AstNode, SyntaxError> {
        let mut node = AstNode::new(NodeKind::Call, ident, Span::default());
        node.children = self.scan_group()?;
        node.span = self.span(start);
        Ok(node)
    }

    fn scan(&mut self, ctx: Ctx) -> Result<Vec<AstNode>, SyntaxError> {
        let mut out = Vec::new();
        while let Some(tok) = self.peek(0) {
            let start = tok.line;
            match &tok.tok {
                Tok::Punct(";") => {
                    if ctx == Ctx::Group {
                        self.pos += 1;
                        continue;
                    }
                    if ctx == Ctx::Stmt {
                        self.pos += 1;
                    }
                    return Ok(out);
                }
                Tok::Punct(",") => {
                    self.pos += 1;
                    if ctx == Ctx::Arm {
                        return Ok(out);
                    }
                }
                Tok::Punct("{") => {
                    if ctx == Ctx::Cond {
                        return Ok(out);
                    }
                    out.push(self.block_node(start, NodeKind::Block)?);
                }
                Tok::Punct("(" | "[") => out.extend(self.scan_group()?),
                Tok::Punct(")" | "]" | "}") => return Ok(out),
                Tok::Punct("#") if self.nth_is_punct(1, "[") => {
                    self.pos += 1;
                    self.skip_group();
                }
                Tok::Punct(".") => {
                    self.pos += 1;
                    if let Some(name) = self.peek(0).and_then(Token::ident).map(str::to_string) {
                        self.pos += 1;
                        if self.at_punct("::") && self.nth_is_punct(1, "<") {
                            self.pos += 1;
                            self.skip_angles();
                        }
                        if self.at_punct("(") {
                            out.push(self.call_node(Some(name), start)?);
                        }
                    }
                }
                Tok::Lifetime(_) => {
                    self.pos += 1;
                    if self.at_punct(":") {
                        self.pos += 1;
                    }
                }
                Tok::Ident(word) => match word.as_str() {
                    "if" => out.push(self.if_expr()?),
                    "match" => out.push(self.match_expr()?),
                    "loop" | "while" | "for" => out.push(self.block_like()?),
                    "unsafe" | "async" | "const"
                        if self.nth_is_punct(1, "{")
                            || (self.nth_is_ident(1, "move") && self.nth_is_punct(2, "{")) =>
                    {
                        out.push(self.block_like()?)
                    }
                    "let" => {
                        // `if let` / `while let`: the pattern is not code
                        self.pos += 1;
                        let end = self.toks.len();
                        if self.skip_until(&["="], end, false) {
                            self.pos += 1;
                        }
                    }
                    w if EXPR_KEYWORDS.contains(&w) => self.pos += 1,
                    _ => {
                        let segs = self.path_segments();
                        if self.at_punct("!")
                            && (self.nth_is_punct(1, "(")
                                || self.nth_is_punct(1, "[")
                                || self.nth_is_punct(1, "{"))
                        {
                            self.pos += 1;
                            self.skip_group();
                            let mut node =
                                AstNode::new(NodeKind::Macro, segs.last().cloned(), Span::default());
                            node.span = self.span(start);
                            out.push(node);
                        } else if self.at_punct("(") {
                            out.push(self.call_node(segs.last().cloned(), start)?);
                        } else if self.at_punct("{") && ctx != Ctx::Cond {
                            // struct literal
                            out.extend(self.scan_group()?);
                        } else if segs.is_empty() {
                            self.pos += 1;
                        }
                    }
                },
                _ => self.pos += 1,
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> AstNode {
        parse_file("src/lib.rs", src).unwrap()
    }

    fn kinds(n: &AstNode) -> Vec<NodeKind> {
        n.children.iter().map(|c| c.kind).collect()
    }

    #[test]
    fn cfg_attribute_attaches_to_item() {
        let m = parse("#[cfg(feature = \"a\")]\nfn foo() {}\nfn qux() {}");
        assert_eq!(m.children.len(), 2);
        let foo = &m.children[0];
        assert_eq!(foo.ident.as_deref(), Some("foo"));
        assert_eq!(foo.attributes, vec![CfgPredicate::Single("a".into())]);
        assert_eq!(foo.span.start, 1);
        assert_eq!(foo.span.end, 2);
        assert!(m.children[1].attributes.is_empty());
    }

    #[test]
    fn any_predicate() {
        let m = parse("#[cfg(any(feature = \"b\", feature = \"c\"))] fn foo() {}");
        assert_eq!(
            m.children[0].attributes,
            vec![CfgPredicate::Any(vec![
                CfgPredicate::Single("b".into()),
                CfgPredicate::Single("c".into())
            ])]
        );
    }

    #[test]
    fn multiple_attributes_are_kept_in_order() {
        let m = parse("#[cfg(a)]\n#[inline]\n#[cfg(not(b))]\nfn f() {}");
        assert_eq!(
            m.children[0].attributes,
            vec![
                CfgPredicate::Single("a".into()),
                CfgPredicate::Not("b".into())
            ]
        );
    }

    #[test]
    fn function_body_statements() {
        let m = parse("fn f() { let a = 1; let b = g(a); h(); if x { k() } else { } }");
        let f = &m.children[0];
        assert_eq!(
            kinds(f),
            vec![NodeKind::Let, NodeKind::Let, NodeKind::Call, NodeKind::If]
        );
        assert_eq!(f.children[1].children[0].ident.as_deref(), Some("g"));
        assert_eq!(f.children[2].ident.as_deref(), Some("h"));
    }

    #[test]
    fn method_and_path_calls() {
        let m = parse("fn f() { let v = a::b::<u8>(x).c(); self.d::<T>(); }");
        let f = &m.children[0];
        let let_calls: Vec<_> = f.children[0]
            .children
            .iter()
            .map(|c| c.ident.clone().unwrap())
            .collect();
        assert_eq!(let_calls, vec!["b", "c"]);
        assert_eq!(f.children[1].ident.as_deref(), Some("d"));
    }

    #[test]
    fn struct_literal_is_not_a_block() {
        let m = parse("fn f() { let p = Point { x: g(), y: 2 }; }");
        let l = &m.children[0].children[0];
        assert_eq!(kinds(l), vec![NodeKind::Call]);
    }

    #[test]
    fn match_arms_with_cfg() {
        let m = parse(
            "fn f(x: u8) { match x { 0 => a(), #[cfg(feature = \"z\")] 1 => { b(); c(); } _ => {} } }",
        );
        let mt = &m.children[0].children[0];
        assert_eq!(mt.kind, NodeKind::Match);
        assert_eq!(
            kinds(mt),
            vec![NodeKind::Arm, NodeKind::Arm, NodeKind::Arm]
        );
        assert_eq!(mt.children[1].attributes.len(), 1);
        assert_eq!(mt.children[1].children.len(), 2);
    }

    #[test]
    fn items_of_every_supported_kind() {
        let src = r#"
            use std::io;
            extern crate alloc;
            mod inner { pub fn g() {} }
            mod external;
            pub struct S<T: Clone> { #[cfg(feature = "x")] pub a: Vec<T>, b: HashMap<u8, u16> }
            struct Tuple(u8, u16);
            enum E { A, #[cfg(unix)] B(u8), C { x: u8 } = 3 }
            impl<T> Trait for S<T> where T: Clone { fn m(&self) {} }
            trait Tr { fn sig(&self); type Item; }
            const C: u32 = make();
            static mut ST: u8 = 0;
            type Alias = u8;
            macro_rules! mac { () => {} }
            mac!();
            unsafe fn uf() {}
            pub(crate) async fn af() {}
        "#;
        let m = parse(src);
        assert_eq!(
            kinds(&m),
            vec![
                NodeKind::Use,
                NodeKind::ExternCrate,
                NodeKind::Module,
                NodeKind::ModDecl,
                NodeKind::Struct,
                NodeKind::Struct,
                NodeKind::Enum,
                NodeKind::Impl,
                NodeKind::Trait,
                NodeKind::Const,
                NodeKind::Static,
                NodeKind::TypeAlias,
                NodeKind::Macro,
                NodeKind::Macro,
                NodeKind::Fn,
                NodeKind::Fn,
            ]
        );
        let s = &m.children[4];
        assert_eq!(kinds(s), vec![NodeKind::Generic, NodeKind::Field, NodeKind::Field]);
        assert_eq!(s.children[1].attributes.len(), 1);
        let e = &m.children[6];
        assert_eq!(e.children.len(), 3);
        assert_eq!(m.children[7].ident.as_deref(), Some("S"));
        assert_eq!(kinds(&m.children[8]), vec![NodeKind::FnDecl, NodeKind::TypeAlias]);
        assert_eq!(m.children[9].children[0].ident.as_deref(), Some("make"));
    }

    #[test]
    fn nested_items_in_function() {
        let m = parse("#[cfg(feature = \"a\")] fn foo() { #[cfg(feature = \"b\")] fn bar() { let x = 1; } fn qux() { bar(); } }");
        let foo = &m.children[0];
        assert_eq!(kinds(foo), vec![NodeKind::Fn, NodeKind::Fn]);
    }

    #[test]
    fn malformed_predicate_reports_line() {
        let err = parse_file("src/lib.rs", "fn a() {}\n#[cfg(any(feature = ))]\nfn b() {}")
            .unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.path, "src/lib.rs");
    }

    #[test]
    fn unbalanced_delimiters_error() {
        assert!(parse_file("x.rs", "fn a() {").is_err());
        assert!(parse_file("x.rs", "fn a() }").is_err());
    }

    #[test]
    fn unsupported_code_never_errors() {
        let m = parse("extern \"C\" { fn ext(); } impl !Send for X {} auto trait A {} x y z;");
        assert!(!m.children.is_empty());
    }

    #[test]
    fn inner_attributes_are_skipped() {
        let m = parse("#![allow(dead_code)]\n#![cfg(feature = \"x\")]\nfn a() {}");
        assert_eq!(kinds(&m), vec![NodeKind::Fn]);
        assert!(m.children[0].attributes.is_empty());
    }

    #[test]
    fn loops_and_labels() {
        let m = parse("fn f() { 'outer: for i in it() { while g(i) { break 'outer; } } loop { h(); } }");
        let f = &m.children[0];
        assert_eq!(kinds(f), vec![NodeKind::Loop, NodeKind::Loop]);
        assert_eq!(f.children[0].children[0].ident.as_deref(), Some("it"));
    }
}
