//! Syntax tree for UniCode programs.
//!
//! The JSON form produced by serde is the documented tooling shape: every
//! statement and expression is an object with a `kind` tag, its children as
//! named fields, and a `span`.

use serde::{Deserialize, Serialize};

use super::span::SourceSpan;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniCodeAst {
    pub leading_comments: Vec<String>,
    pub functions: Vec<FunctionDecl>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionDecl {
    pub name: String,
    pub params: Vec<String>,
    pub body: Vec<Stmt>,
    /// Comment lines directly above the header, joined with `\n`.
    pub doc_comment: Option<String>,
    pub span: SourceSpan,
}

/// Assignment destination: a variable with zero or more subscripts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Target {
    pub name: String,
    pub indices: Vec<Expr>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElifArm {
    pub cond: Expr,
    pub body: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stmt {
    #[serde(flatten)]
    pub kind: StmtKind,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum StmtKind {
    Assign { target: Target, value: Expr },
    If { cond: Expr, then_body: Vec<Stmt>, elif_arms: Vec<ElifArm>, else_body: Option<Vec<Stmt>> },
    While { cond: Expr, body: Vec<Stmt> },
    ForRange { var: String, from: Expr, to: Expr, step: Expr, body: Vec<Stmt> },
    ForEach { var: String, iterable: Expr, body: Vec<Stmt> },
    Return { value: Option<Expr> },
    Input { target: Target },
    Output { value: Expr },
    /// A bare call; the expression is always `ExprKind::Call`.
    ExprStmt { call: Expr },
    Comment { text: String },
    /// Descriptive step with no executable meaning (`DO: ...`).
    NaturalStep { text: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnaryOp {
    Neg,
    Not,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Mod,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

impl BinaryOp {
    /// Binding strength; larger binds tighter.
    pub fn precedence(self) -> u8 {
        use BinaryOp::*;
        match self {
            Or => 1,
            And => 2,
            Eq | Ne | Lt | Le | Gt | Ge => 4,
            Add | Sub => 5,
            Mul | Div | Mod => 6,
        }
    }

    pub fn is_comparison(self) -> bool {
        self.precedence() == 4
    }

    /// Canonical UniCode spelling.
    pub fn symbol(self) -> &'static str {
        use BinaryOp::*;
        match self {
            Add => "+",
            Sub => "-",
            Mul => "*",
            Div => "/",
            Mod => "MOD",
            Eq => "==",
            Ne => "!=",
            Lt => "<",
            Le => "<=",
            Gt => ">",
            Ge => ">=",
            And => "AND",
            Or => "OR",
        }
    }
}

pub const NOT_PRECEDENCE: u8 = 3;
pub const NEG_PRECEDENCE: u8 = 7;
pub const POSTFIX_PRECEDENCE: u8 = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expr {
    #[serde(flatten)]
    pub kind: ExprKind,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ExprKind {
    IntLit { value: i64 },
    FloatLit { value: f64 },
    StringLit { value: String },
    BoolLit { value: bool },
    ListLit { items: Vec<Expr> },
    Var { name: String },
    Index { base: Box<Expr>, index: Box<Expr> },
    Unary { op: UnaryOp, operand: Box<Expr> },
    Binary { op: BinaryOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Call { name: String, args: Vec<Expr> },
}

impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Expr { kind, span: SourceSpan::default() }
    }

    pub fn at(kind: ExprKind, span: SourceSpan) -> Self {
        Expr { kind, span }
    }

    pub fn int(value: i64) -> Self {
        Expr::new(ExprKind::IntLit { value })
    }

    pub fn var(name: &str) -> Self {
        Expr::new(ExprKind::Var { name: name.to_string() })
    }

    pub fn binary(op: BinaryOp, lhs: Expr, rhs: Expr) -> Self {
        Expr::new(ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) })
    }

    pub fn call(name: &str, args: Vec<Expr>) -> Self {
        Expr::new(ExprKind::Call { name: name.to_string(), args })
    }

    pub fn is_int(&self, expected: i64) -> bool {
        matches!(self.kind, ExprKind::IntLit { value } if value == expected)
    }

    /// Binding strength of the outermost node.
    pub fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary { op, .. } => op.precedence(),
            ExprKind::Unary { op: UnaryOp::Not, .. } => NOT_PRECEDENCE,
            ExprKind::Unary { op: UnaryOp::Neg, .. } => NEG_PRECEDENCE,
            _ => POSTFIX_PRECEDENCE,
        }
    }

    /// Constant value for integer literals, possibly negated.
    pub fn const_int(&self) -> Option<i64> {
        match &self.kind {
            ExprKind::IntLit { value } => Some(*value),
            ExprKind::Unary { op: UnaryOp::Neg, operand } => operand.const_int().and_then(i64::checked_neg),
            _ => None,
        }
    }

    pub fn walk<'a>(&'a self, visit: &mut dyn FnMut(&'a Expr)) {
        visit(self);
        match &self.kind {
            ExprKind::ListLit { items } => items.iter().for_each(|e| e.walk(visit)),
            ExprKind::Index { base, index } => {
                base.walk(visit);
                index.walk(visit);
            }
            ExprKind::Unary { operand, .. } => operand.walk(visit),
            ExprKind::Binary { lhs, rhs, .. } => {
                lhs.walk(visit);
                rhs.walk(visit);
            }
            ExprKind::Call { args, .. } => args.iter().for_each(|e| e.walk(visit)),
            _ => {}
        }
    }

    fn clear_spans(&mut self) {
        self.span = SourceSpan::default();
        match &mut self.kind {
            ExprKind::ListLit { items } => items.iter_mut().for_each(Expr::clear_spans),
            ExprKind::Index { base, index } => {
                base.clear_spans();
                index.clear_spans();
            }
            ExprKind::Unary { operand, .. } => operand.clear_spans(),
            ExprKind::Binary { lhs, rhs, .. } => {
                lhs.clear_spans();
                rhs.clear_spans();
            }
            ExprKind::Call { args, .. } => args.iter_mut().for_each(Expr::clear_spans),
            _ => {}
        }
    }
}

impl Target {
    pub fn var(name: &str) -> Self {
        Target { name: name.to_string(), indices: Vec::new(), span: SourceSpan::default() }
    }
}

impl Stmt {
    pub fn new(kind: StmtKind) -> Self {
        Stmt { kind, span: SourceSpan::default() }
    }

    pub fn is_comment(&self) -> bool {
        matches!(self.kind, StmtKind::Comment { .. })
    }

    /// Nested statement lists in source order.
    pub fn bodies(&self) -> Vec<&Vec<Stmt>> {
        match &self.kind {
            StmtKind::If { then_body, elif_arms, else_body, .. } => {
                let mut out = vec![then_body];
                out.extend(elif_arms.iter().map(|arm| &arm.body));
                out.extend(else_body.iter());
                out
            }
            StmtKind::While { body, .. } | StmtKind::ForRange { body, .. } | StmtKind::ForEach { body, .. } => {
                vec![body]
            }
            _ => Vec::new(),
        }
    }

    fn bodies_mut(&mut self) -> Vec<&mut Vec<Stmt>> {
        match &mut self.kind {
            StmtKind::If { then_body, elif_arms, else_body, .. } => {
                let mut out = vec![then_body];
                out.extend(elif_arms.iter_mut().map(|arm| &mut arm.body));
                out.extend(else_body.iter_mut());
                out
            }
            StmtKind::While { body, .. } | StmtKind::ForRange { body, .. } | StmtKind::ForEach { body, .. } => {
                vec![body]
            }
            _ => Vec::new(),
        }
    }

    /// Expressions owned directly by this statement (not by nested bodies).
    pub fn exprs(&self) -> Vec<&Expr> {
        match &self.kind {
            StmtKind::Assign { target, value } => target.indices.iter().chain(std::iter::once(value)).collect(),
            StmtKind::If { cond, elif_arms, .. } => {
                std::iter::once(cond).chain(elif_arms.iter().map(|arm| &arm.cond)).collect()
            }
            StmtKind::While { cond, .. } => vec![cond],
            StmtKind::ForRange { from, to, step, .. } => vec![from, to, step],
            StmtKind::ForEach { iterable, .. } => vec![iterable],
            StmtKind::Return { value } => value.iter().collect(),
            StmtKind::Input { target } => target.indices.iter().collect(),
            StmtKind::Output { value } => vec![value],
            StmtKind::ExprStmt { call } => vec![call],
            StmtKind::Comment { .. } | StmtKind::NaturalStep { .. } => Vec::new(),
        }
    }

    /// Pre-order traversal over this statement and everything nested in it.
    pub fn walk<'a>(&'a self, visit: &mut dyn FnMut(&'a Stmt)) {
        visit(self);
        for body in self.bodies() {
            for stmt in body {
                stmt.walk(visit);
            }
        }
    }

    fn clear_spans(&mut self) {
        self.span = SourceSpan::default();
        match &mut self.kind {
            StmtKind::Assign { target, value } => {
                clear_target(target);
                value.clear_spans();
            }
            StmtKind::If { cond, elif_arms, .. } => {
                cond.clear_spans();
                elif_arms.iter_mut().for_each(|arm| arm.cond.clear_spans());
            }
            StmtKind::While { cond, .. } => cond.clear_spans(),
            StmtKind::ForRange { from, to, step, .. } => {
                from.clear_spans();
                to.clear_spans();
                step.clear_spans();
            }
            StmtKind::ForEach { iterable, .. } => iterable.clear_spans(),
            StmtKind::Return { value } => value.iter_mut().for_each(Expr::clear_spans),
            StmtKind::Input { target } => clear_target(target),
            StmtKind::Output { value } => value.clear_spans(),
            StmtKind::ExprStmt { call } => call.clear_spans(),
            StmtKind::Comment { .. } | StmtKind::NaturalStep { .. } => {}
        }
        for body in self.bodies_mut() {
            body.iter_mut().for_each(Stmt::clear_spans);
        }
    }
}

fn clear_target(target: &mut Target) {
    target.span = SourceSpan::default();
    target.indices.iter_mut().for_each(Expr::clear_spans);
}

fn strip_body(body: &mut Vec<Stmt>) {
    body.retain(|s| !s.is_comment());
    for stmt in body.iter_mut() {
        for nested in stmt.bodies_mut() {
            strip_body(nested);
        }
    }
}

impl FunctionDecl {
    pub fn walk<'a>(&'a self, visit: &mut dyn FnMut(&'a Stmt)) {
        for stmt in &self.body {
            stmt.walk(visit);
        }
    }
}

impl UniCodeAst {
    pub fn function(&self, name: &str) -> Option<&FunctionDecl> {
        self.functions.iter().find(|f| f.name == name)
    }

    /// Same tree with every span reset, for structural comparison.
    pub fn canonical(&self) -> UniCodeAst {
        let mut out = self.clone();
        for function in &mut out.functions {
            function.span = SourceSpan::default();
            function.body.iter_mut().for_each(Stmt::clear_spans);
        }
        out
    }

    /// Drops leading comments, doc comments and `Comment` statements.
    ///
    /// A block whose only statements were comments becomes empty.
    pub fn strip_comments(&self) -> UniCodeAst {
        let mut out = self.clone();
        out.leading_comments.clear();
        for function in &mut out.functions {
            function.doc_comment = None;
            strip_body(&mut function.body);
        }
        out
    }

    pub fn walk<'a>(&'a self, visit: &mut dyn FnMut(&'a Stmt)) {
        for function in &self.functions {
            function.walk(visit);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("AST serializes")
    }
}
