use serde::{Deserialize, Serialize};

use super::CfgPredicate;

/// Syntactic category of a tree node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Root,
    Module,
    /// `mod name;` whose file could not be found among the inputs.
    ModDecl,
    Fn,
    /// Function signature without a body (trait methods, foreign items).
    FnDecl,
    Struct,
    Enum,
    Union,
    Impl,
    Trait,
    Const,
    Static,
    TypeAlias,
    Use,
    ExternCrate,
    Generic,
    Field,
    Variant,
    Macro,
    Let,
    ExprStmt,
    Call,
    Block,
    If,
    Match,
    Arm,
    Loop,
    Opaque,
}

impl NodeKind {
    pub const ALL: [NodeKind; 28] = [
        NodeKind::Root,
        NodeKind::Module,
        NodeKind::ModDecl,
        NodeKind::Fn,
        NodeKind::FnDecl,
        NodeKind::Struct,
        NodeKind::Enum,
        NodeKind::Union,
        NodeKind::Impl,
        NodeKind::Trait,
        NodeKind::Const,
        NodeKind::Static,
        NodeKind::TypeAlias,
        NodeKind::Use,
        NodeKind::ExternCrate,
        NodeKind::Generic,
        NodeKind::Field,
        NodeKind::Variant,
        NodeKind::Macro,
        NodeKind::Let,
        NodeKind::ExprStmt,
        NodeKind::Call,
        NodeKind::Block,
        NodeKind::If,
        NodeKind::Match,
        NodeKind::Arm,
        NodeKind::Loop,
        NodeKind::Opaque,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Root => "root",
            NodeKind::Module => "module",
            NodeKind::ModDecl => "mod_decl",
            NodeKind::Fn => "fn",
            NodeKind::FnDecl => "fn_decl",
            NodeKind::Struct => "struct",
            NodeKind::Enum => "enum",
            NodeKind::Union => "union",
            NodeKind::Impl => "impl",
            NodeKind::Trait => "trait",
            NodeKind::Const => "const",
            NodeKind::Static => "static",
            NodeKind::TypeAlias => "type_alias",
            NodeKind::Use => "use",
            NodeKind::ExternCrate => "extern_crate",
            NodeKind::Generic => "generic",
            NodeKind::Field => "field",
            NodeKind::Variant => "variant",
            NodeKind::Macro => "macro",
            NodeKind::Let => "let",
            NodeKind::ExprStmt => "expr_stmt",
            NodeKind::Call => "call",
            NodeKind::Block => "block",
            NodeKind::If => "if",
            NodeKind::Match => "match",
            NodeKind::Arm => "arm",
            NodeKind::Loop => "loop",
            NodeKind::Opaque => "opaque",
        }
    }

    pub fn from_name(name: &str) -> Option<NodeKind> {
        NodeKind::ALL.into_iter().find(|k| k.as_str() == name)
    }

    /// Named definitions whose weight a call by the same identifier inherits.
    pub fn is_definition(self) -> bool {
        matches!(
            self,
            NodeKind::Fn
                | NodeKind::Struct
                | NodeKind::Enum
                | NodeKind::Union
                | NodeKind::Trait
                | NodeKind::Const
                | NodeKind::Static
                | NodeKind::Module
        )
    }

    /// Terms that carry no semantics for a feature on their own.
    pub fn is_irrelevant(self) -> bool {
        matches!(self, NodeKind::Use | NodeKind::ExternCrate | NodeKind::Generic)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub file: String,
    pub start: u32,
    pub end: u32,
}

/// A node of the attributed syntax tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AstNode {
    pub kind: NodeKind,
    pub ident: Option<String>,
    /// One predicate per `#[cfg(...)]` outer attribute, in source order.
    pub attributes: Vec<CfgPredicate>,
    pub children: Vec<AstNode>,
    pub span: Span,
}

impl AstNode {
    pub fn new(kind: NodeKind, ident: Option<String>, span: Span) -> Self {
        AstNode {
            kind,
            ident,
            attributes: Vec::new(),
            children: Vec::new(),
            span,
        }
    }

    pub fn root() -> Self {
        AstNode::new(NodeKind::Root, None, Span::default())
    }

    /// Total number of nodes in the subtree, including `self`.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(AstNode::size).sum::<usize>()
    }

    /// Pre-order walk.
    pub fn walk(&self, f: &mut impl FnMut(&AstNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }
}
