//! Reader for the Python the transpiler emits. Anything outside that
//! grammar is rejected with the span where it starts.

use crate::lang::ast::*;
use crate::lang::span::SourceSpan;
use crate::transpile::{is_reserved, unmangle, TargetLanguage, RESERVED_PREFIX};
use crate::transpile::{RUNTIME_BEGIN, RUNTIME_END};

use super::LiftError;

type LResult<T> = Result<T, LiftError>;

fn out_of_subset<T>(span: SourceSpan, reason: impl Into<String>) -> LResult<T> {
    Err(LiftError::OutOfSubset { span, reason: reason.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Float(f64),
    Str(String),
    Op(&'static str),
    Newline,
    Indent,
    Dedent,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: SourceSpan,
}

const OPERATORS: &[&str] = &[
    "==", "!=", "<=", ">=", "**", "//", "->", "+=", "-=", "*=", "/=", "%=", "(", ")", "[", "]", "{", "}", ",", ":", ".",
    "=", "<", ">", "+", "-", "*", "/", "%", "@",
];

fn tokenize(source: &str) -> LResult<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut indents = vec![0usize];
    let mut in_runtime = false;
    let mut last_line = 1;
    for (index, raw) in source.lines().enumerate() {
        let line_no = index as u32 + 1;
        last_line = line_no;
        let trimmed = raw.trim();
        if trimmed == RUNTIME_BEGIN {
            in_runtime = true;
            continue;
        }
        if trimmed == RUNTIME_END {
            in_runtime = false;
            continue;
        }
        if in_runtime || trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let chars: Vec<char> = raw.chars().collect();
        let width = chars.iter().take_while(|c| **c == ' ').count();
        if chars.get(width) == Some(&'\t') {
            return out_of_subset(SourceSpan::point(line_no, width as u32 + 1), "tab indentation");
        }
        let here = SourceSpan::point(line_no, 1);
        if width > *indents.last().unwrap() {
            indents.push(width);
            tokens.push(Token { tok: Tok::Indent, span: here });
        } else {
            while width < *indents.last().unwrap() {
                indents.pop();
                tokens.push(Token { tok: Tok::Dedent, span: here });
            }
            if width != *indents.last().unwrap() {
                return out_of_subset(here, "dedent to an unknown indentation level");
            }
        }
        line_tokens(&chars, width, line_no, &mut tokens)?;
        let end = SourceSpan::point(line_no, chars.len() as u32 + 1);
        tokens.push(Token { tok: Tok::Newline, span: end });
    }
    let end = SourceSpan::point(last_line + 1, 1);
    for _ in 1..indents.len() {
        tokens.push(Token { tok: Tok::Dedent, span: end });
    }
    tokens.push(Token { tok: Tok::Eof, span: end });
    Ok(tokens)
}

fn line_tokens(chars: &[char], start: usize, line: u32, out: &mut Vec<Token>) -> LResult<()> {
    let mut i = start;
    let span = |from: usize, to: usize| SourceSpan::new(line, from as u32 + 1, line, to as u32 + 1);
    while i < chars.len() {
        let c = chars[i];
        if c == ' ' {
            i += 1;
            continue;
        }
        if c == '#' {
            break;
        }
        let from = i;
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Name(chars[from..i].iter().collect()), span: span(from, i) });
        } else if c.is_ascii_digit() {
            let tok = number(chars, &mut i).ok_or(()).or_else(|_| out_of_subset(span(from, i), "malformed number"))?;
            out.push(Token { tok, span: span(from, i) });
        } else if c == '"' {
            let text = string(chars, &mut i, line)?;
            out.push(Token { tok: Tok::Str(text), span: span(from, i) });
        } else if let Some(op) = OPERATORS.iter().find(|op| op.chars().enumerate().all(|(k, oc)| chars.get(i + k) == Some(&oc))) {
            i += op.len();
            out.push(Token { tok: Tok::Op(op), span: span(from, i) });
        } else {
            return out_of_subset(span(from, from + 1), format!("unexpected character {c:?}"));
        }
    }
    Ok(())
}

fn number(chars: &[char], i: &mut usize) -> Option<Tok> {
    let from = *i;
    let digits = |i: &mut usize| {
        let s = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        *i > s
    };
    digits(i);
    let mut float = false;
    if chars.get(*i) == Some(&'.') && chars.get(*i + 1).is_some_and(|c| c.is_ascii_digit()) {
        *i += 1;
        digits(i);
        float = true;
    }
    if matches!(chars.get(*i), Some('e' | 'E')) {
        *i += 1;
        if matches!(chars.get(*i), Some('+' | '-')) {
            *i += 1;
        }
        if !digits(i) {
            return None;
        }
        float = true;
    }
    if chars.get(*i).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
        return None;
    }
    let text: String = chars[from..*i].iter().collect();
    if float {
        text.parse().ok().map(Tok::Float)
    } else {
        text.parse().ok().map(Tok::Int)
    }
}

fn string(chars: &[char], i: &mut usize, line: u32) -> LResult<String> {
    let from = *i;
    *i += 1;
    let mut out = String::new();
    loop {
        let here = SourceSpan::new(line, *i as u32 + 1, line, *i as u32 + 2);
        match chars.get(*i) {
            None => return out_of_subset(SourceSpan::point(line, from as u32 + 1), "unterminated string"),
            Some('"') => {
                *i += 1;
                return Ok(out);
            }
            Some('\\') => {
                let escape = chars.get(*i + 1).copied();
                *i += 2;
                let hex = |i: &mut usize, n: usize| -> LResult<char> {
                    let digits: String = chars.get(*i..*i + n).map(|d| d.iter().collect()).unwrap_or_default();
                    *i += n;
                    u32::from_str_radix(&digits, 16)
                        .ok()
                        .filter(|_| digits.len() == n)
                        .and_then(char::from_u32)
                        .ok_or(())
                        .or_else(|_| out_of_subset(here, "bad escape"))
                };
                match escape {
                    Some('\\') => out.push('\\'),
                    Some('"') => out.push('"'),
                    Some('n') => out.push('\n'),
                    Some('t') => out.push('\t'),
                    Some('r') => out.push('\r'),
                    Some('x') => out.push(hex(i, 2)?),
                    Some('u') => out.push(hex(i, 4)?),
                    Some('U') => out.push(hex(i, 8)?),
                    _ => return out_of_subset(here, "escape the transpiler never emits"),
                }
            }
            Some(c) => {
                out.push(*c);
                *i += 1;
            }
        }
    }
}

/// Placeholder for `m.keys()`, only valid directly inside `list(...)`.
const KEYS_VIEW: &str = "\u{0}keys";

const PYTHON_KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue", "def", "del",
    "elif", "else", "except", "finally", "for", "from", "global", "if", "import", "in", "is", "lambda", "nonlocal",
    "not", "or", "pass", "raise", "return", "try", "while", "with", "yield",
];

pub(super) fn lift_python(source: &str) -> LResult<UniCodeAst> {
    let tokens = tokenize(source)?;
    let mut parser = Parser { tokens, pos: 0 };
    parser.program()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        &self.tokens[(self.pos + offset).min(self.tokens.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn at_op(&self, op: &str) -> bool {
        matches!(&self.peek().tok, Tok::Op(o) if *o == op)
    }

    fn at_name(&self, name: &str) -> bool {
        matches!(&self.peek().tok, Tok::Name(n) if n == name)
    }

    fn unexpected<T>(&self, wanted: &str) -> LResult<T> {
        let found = match &self.peek().tok {
            Tok::Name(n) => format!("`{n}`"),
            Tok::Op(o) => format!("`{o}`"),
            Tok::Int(_) | Tok::Float(_) => "number".into(),
            Tok::Str(_) => "string".into(),
            Tok::Newline => "end of line".into(),
            Tok::Indent => "indentation".into(),
            Tok::Dedent => "dedent".into(),
            Tok::Eof => "end of input".into(),
        };
        out_of_subset(self.peek().span, format!("expected {wanted}, found {found}"))
    }

    fn expect_op(&mut self, op: &str) -> LResult<SourceSpan> {
        if self.at_op(op) {
            Ok(self.bump().span)
        } else {
            self.unexpected(&format!("`{op}`"))
        }
    }

    fn expect_name(&mut self, name: &str) -> LResult<SourceSpan> {
        if self.at_name(name) {
            Ok(self.bump().span)
        } else {
            self.unexpected(&format!("`{name}`"))
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> LResult<SourceSpan> {
        if self.peek().tok == tok {
            Ok(self.bump().span)
        } else {
            self.unexpected(wanted)
        }
    }

    /// A user-level identifier with any target mangling removed.
    fn identifier(&mut self) -> LResult<(String, SourceSpan)> {
        let token = self.peek().clone();
        let Tok::Name(raw) = &token.tok else {
            return self.unexpected("an identifier");
        };
        if PYTHON_KEYWORDS.contains(&raw.as_str()) {
            return self.unexpected("an identifier");
        }
        let name = unmangle(raw);
        if name != *raw {
            if !is_reserved(TargetLanguage::Python, &name) {
                return out_of_subset(token.span, format!("`{raw}` is not a name the transpiler would mangle"));
            }
        } else if raw.starts_with(RESERVED_PREFIX) {
            return out_of_subset(token.span, format!("runtime name `{raw}` used as an identifier"));
        } else if is_reserved(TargetLanguage::Python, raw) {
            return out_of_subset(token.span, format!("`{raw}` would have been mangled"));
        }
        self.bump();
        Ok((name.to_string(), token.span))
    }

    fn program(&mut self) -> LResult<UniCodeAst> {
        let mut functions = Vec::new();
        loop {
            match &self.peek().tok {
                Tok::Eof => break,
                Tok::Name(n) if n == "def" => functions.push(self.function()?),
                Tok::Name(n) if n == "if" && matches!(self.peek_at(1), Tok::Name(m) if m == "__name__") => {
                    self.main_block()?;
                }
                Tok::Op("@") => return out_of_subset(self.peek().span, "decorators are never emitted"),
                _ => return out_of_subset(self.peek().span, "top-level statement outside a function"),
            }
        }
        if functions.is_empty() {
            return out_of_subset(self.peek().span, "no function definitions");
        }
        for function in &functions {
            let mut stray = None;
            function.walk(&mut |stmt: &Stmt| {
                for expr in stmt.exprs() {
                    expr.walk(&mut |e: &Expr| {
                        if matches!(&e.kind, ExprKind::Call { name, .. } if name == KEYS_VIEW) {
                            stray.get_or_insert(e.span);
                        }
                    });
                }
            });
            if let Some(span) = stray {
                return out_of_subset(span, "`.keys()` outside `list(...)`");
            }
        }
        Ok(UniCodeAst { leading_comments: Vec::new(), functions })
    }

    /// `if __name__ == "__main__":` driver block, which carries no program logic.
    fn main_block(&mut self) -> LResult<()> {
        self.expect_name("if")?;
        self.expect_name("__name__")?;
        self.expect_op("==")?;
        if self.peek().tok != Tok::Str("__main__".into()) {
            return self.unexpected("\"__main__\"");
        }
        self.bump();
        self.expect_op(":")?;
        self.expect(Tok::Newline, "end of line")?;
        self.expect(Tok::Indent, "an indented block")?;
        let mut depth = 1;
        while depth > 0 {
            match self.bump().tok {
                Tok::Indent => depth += 1,
                Tok::Dedent => depth -= 1,
                Tok::Eof => break,
                _ => {}
            }
        }
        if self.peek().tok != Tok::Eof {
            return out_of_subset(self.peek().span, "code after the driver block");
        }
        Ok(())
    }

    fn function(&mut self) -> LResult<FunctionDecl> {
        let start = self.expect_name("def")?;
        let (name, _) = self.identifier()?;
        self.expect_op("(")?;
        let mut params = Vec::new();
        if !self.at_op(")") {
            loop {
                params.push(self.identifier()?.0);
                if !self.at_op(",") {
                    break;
                }
                self.bump();
            }
        }
        self.expect_op(")")?;
        if self.at_op("->") {
            return out_of_subset(self.peek().span, "return annotations are never emitted");
        }
        self.expect_op(":")?;
        let body = self.block()?;
        let span = start.to(body.last().map(|s| s.span).unwrap_or(start));
        Ok(FunctionDecl { name, params, body, doc_comment: None, span })
    }

    fn block(&mut self) -> LResult<Vec<Stmt>> {
        self.expect(Tok::Newline, "end of line")?;
        self.expect(Tok::Indent, "an indented block")?;
        let mut body = Vec::new();
        while !matches!(self.peek().tok, Tok::Dedent | Tok::Eof) {
            if let Some(stmt) = self.statement()? {
                body.push(stmt);
            }
        }
        self.expect(Tok::Dedent, "dedent")?;
        Ok(body)
    }

    fn end_of_line(&mut self) -> LResult<()> {
        self.expect(Tok::Newline, "end of line").map(|_| ())
    }

    fn statement(&mut self) -> LResult<Option<Stmt>> {
        let start = self.peek().span;
        let keyword = match &self.peek().tok {
            Tok::Name(n) => n.clone(),
            _ => String::new(),
        };
        let kind = match keyword.as_str() {
            "pass" => {
                self.bump();
                self.end_of_line()?;
                return Ok(None);
            }
            "if" => self.if_statement()?,
            "while" => {
                self.bump();
                let cond = self.expr()?;
                self.expect_op(":")?;
                StmtKind::While { cond, body: self.block()? }
            }
            "for" => self.for_statement()?,
            "return" => {
                self.bump();
                let value = if self.peek().tok == Tok::Newline { None } else { Some(self.expr()?) };
                self.end_of_line()?;
                StmtKind::Return { value }
            }
            "print" if matches!(self.peek_at(1), Tok::Op("(")) => {
                self.bump();
                self.expect_op("(")?;
                self.expect_name("uc_format")?;
                self.expect_op("(")?;
                let value = self.expr()?;
                self.expect_op(")")?;
                self.expect_op(")")?;
                self.end_of_line()?;
                StmtKind::Output { value }
            }
            "def" | "class" | "import" | "from" | "global" | "nonlocal" | "del" | "try" | "with" | "raise"
            | "assert" | "break" | "continue" | "lambda" | "yield" | "async" => {
                return out_of_subset(start, format!("`{keyword}` is never emitted"));
            }
            _ => self.simple_statement()?,
        };
        let end = self.tokens[self.pos.saturating_sub(1)].span;
        Ok(Some(Stmt { kind, span: start.to(end) }))
    }

    fn if_statement(&mut self) -> LResult<StmtKind> {
        self.expect_name("if")?;
        let cond = self.expr()?;
        self.expect_op(":")?;
        let then_body = self.block()?;
        let mut elif_arms = Vec::new();
        while self.at_name("elif") {
            self.bump();
            let cond = self.expr()?;
            self.expect_op(":")?;
            elif_arms.push(ElifArm { cond, body: self.block()? });
        }
        let else_body = if self.at_name("else") {
            self.bump();
            self.expect_op(":")?;
            Some(self.block()?)
        } else {
            None
        };
        Ok(StmtKind::If { cond, then_body, elif_arms, else_body })
    }

    fn for_statement(&mut self) -> LResult<StmtKind> {
        self.expect_name("for")?;
        let (var, _) = self.identifier()?;
        if self.at_op(",") {
            return out_of_subset(self.peek().span, "tuple unpacking is never emitted");
        }
        self.expect_name("in")?;
        if self.at_name("uc_range") && matches!(self.peek_at(1), Tok::Op("(")) {
            let at = self.bump().span;
            let args = self.arguments()?;
            self.expect_op(":")?;
            let body = self.block()?;
            let mut args = args.into_iter();
            return match (args.next(), args.next(), args.next(), args.next()) {
                (Some(from), Some(to), step, None) => {
                    let step = step.unwrap_or_else(|| Expr::int(1));
                    Ok(StmtKind::ForRange { var, from, to, step, body })
                }
                _ => out_of_subset(at, "uc_range takes two or three arguments"),
            };
        }
        let iterable = self.expr()?;
        self.expect_op(":")?;
        Ok(StmtKind::ForEach { var, iterable, body: self.block()? })
    }

    fn simple_statement(&mut self) -> LResult<StmtKind> {
        let start = self.peek().span;
        let lhs = self.expr()?;
        if self.at_op("=") {
            self.bump();
            let target = to_target(lhs)?;
            if self.at_name("uc_input") && matches!(self.peek_at(1), Tok::Op("(")) && matches!(self.peek_at(2), Tok::Op(")")) {
                self.bump();
                self.bump();
                self.bump();
                self.end_of_line()?;
                return Ok(StmtKind::Input { target });
            }
            let value = self.expr()?;
            if self.at_op("=") {
                return out_of_subset(self.peek().span, "chained assignment is never emitted");
            }
            self.end_of_line()?;
            return Ok(StmtKind::Assign { target, value });
        }
        if let Tok::Op(op @ ("+=" | "-=" | "*=" | "/=" | "%=")) = self.peek().tok {
            return out_of_subset(self.peek().span, format!("augmented assignment `{op}` is never emitted"));
        }
        self.end_of_line()?;
        match lhs.kind {
            ExprKind::Call { .. } => Ok(StmtKind::ExprStmt { call: lhs }),
            _ => out_of_subset(start, "expression statement that is not a call"),
        }
    }

    fn arguments(&mut self) -> LResult<Vec<Expr>> {
        self.expect_op("(")?;
        let mut args = Vec::new();
        if !self.at_op(")") {
            loop {
                args.push(self.expr()?);
                if !self.at_op(",") {
                    break;
                }
                self.bump();
            }
        }
        if matches!(self.peek().tok, Tok::Op("=")) {
            return out_of_subset(self.peek().span, "keyword arguments are never emitted");
        }
        self.expect_op(")")?;
        Ok(args)
    }

    fn expr(&mut self) -> LResult<Expr> {
        self.logical("or", BinaryOp::Or)
    }

    fn logical(&mut self, word: &str, op: BinaryOp) -> LResult<Expr> {
        let next = |p: &mut Self| if op == BinaryOp::Or { p.logical("and", BinaryOp::And) } else { p.not_expr() };
        let mut lhs = next(self)?;
        while self.at_name(word) {
            self.bump();
            let rhs = next(self)?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr::at(ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span);
        }
        Ok(lhs)
    }

    fn not_expr(&mut self) -> LResult<Expr> {
        if self.at_name("not") {
            let start = self.bump().span;
            let operand = self.not_expr()?;
            let span = start.to(operand.span);
            return Ok(Expr::at(ExprKind::Unary { op: UnaryOp::Not, operand: Box::new(operand) }, span));
        }
        self.comparison()
    }

    fn comparison_op(&self) -> Option<Option<BinaryOp>> {
        match &self.peek().tok {
            Tok::Op("==") => Some(Some(BinaryOp::Eq)),
            Tok::Op("!=") => Some(Some(BinaryOp::Ne)),
            Tok::Op("<") => Some(Some(BinaryOp::Lt)),
            Tok::Op("<=") => Some(Some(BinaryOp::Le)),
            Tok::Op(">") => Some(Some(BinaryOp::Gt)),
            Tok::Op(">=") => Some(Some(BinaryOp::Ge)),
            Tok::Name(n) if n == "in" => Some(None),
            Tok::Name(n) if n == "is" => Some(None),
            _ => None,
        }
    }

    fn comparison(&mut self) -> LResult<Expr> {
        let lhs = self.arith()?;
        let Some(op) = self.comparison_op() else {
            return Ok(lhs);
        };
        let at = self.bump();
        if at.tok == Tok::Name("is".into()) {
            return out_of_subset(at.span, "`is` is never emitted");
        }
        if self.at_name("not") {
            return out_of_subset(self.peek().span, "`not in` is never emitted");
        }
        let rhs = self.arith()?;
        if self.comparison_op().is_some() {
            return out_of_subset(self.peek().span, "chained comparison");
        }
        let span = lhs.span.to(rhs.span);
        Ok(match op {
            Some(op) => Expr::at(ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span),
            None => Expr::at(ExprKind::Call { name: "CONTAINS".into(), args: vec![rhs, lhs] }, span),
        })
    }

    fn binary_level(&mut self, ops: &[(&str, BinaryOp)], next: fn(&mut Self) -> LResult<Expr>) -> LResult<Expr> {
        let mut lhs = next(self)?;
        while let Some(op) = ops.iter().find(|(sym, _)| self.at_op(sym)).map(|(_, op)| *op) {
            self.bump();
            let rhs = next(self)?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr::at(ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span);
        }
        Ok(lhs)
    }

    fn arith(&mut self) -> LResult<Expr> {
        self.binary_level(&[("+", BinaryOp::Add), ("-", BinaryOp::Sub)], Self::term)
    }

    fn term(&mut self) -> LResult<Expr> {
        if self.at_op("//") || self.at_op("**") || self.at_op("@") {
            return out_of_subset(self.peek().span, "operator never emitted");
        }
        let e = self.binary_level(&[("*", BinaryOp::Mul), ("/", BinaryOp::Div), ("%", BinaryOp::Mod)], Self::unary)?;
        if self.at_op("//") || self.at_op("**") || self.at_op("@") {
            return out_of_subset(self.peek().span, "operator never emitted");
        }
        Ok(e)
    }

    fn unary(&mut self) -> LResult<Expr> {
        if self.at_op("-") {
            let start = self.bump().span;
            let operand = self.unary()?;
            let span = start.to(operand.span);
            return Ok(Expr::at(ExprKind::Unary { op: UnaryOp::Neg, operand: Box::new(operand) }, span));
        }
        if self.at_op("+") {
            return out_of_subset(self.peek().span, "unary plus is never emitted");
        }
        self.postfix()
    }

    fn postfix(&mut self) -> LResult<Expr> {
        let mut base = self.atom()?;
        loop {
            if self.at_op("[") {
                self.bump();
                let first = self.expr()?;
                if self.at_op(":") {
                    self.bump();
                    let second = self.expr()?;
                    let end = self.expect_op("]")?;
                    let span = base.span.to(end);
                    base = Expr::at(ExprKind::Call { name: "SUBSTRING".into(), args: vec![base, first, second] }, span);
                } else {
                    let end = self.expect_op("]")?;
                    let span = base.span.to(end);
                    base = Expr::at(ExprKind::Index { base: Box::new(base), index: Box::new(first) }, span);
                }
            } else if self.at_op(".") {
                self.bump();
                let method = self.peek().clone();
                let (builtin, arity) = match &method.tok {
                    Tok::Name(m) if m == "append" => ("APPEND", 1),
                    Tok::Name(m) if m == "pop" => ("REMOVE_AT", 1),
                    Tok::Name(m) if m == "get" => ("GET", 1),
                    Tok::Name(m) if m == "keys" => (KEYS_VIEW, 0),
                    _ => return out_of_subset(method.span, "method never emitted"),
                };
                self.bump();
                let args = self.arguments()?;
                if args.len() != arity {
                    return out_of_subset(method.span, format!("`{builtin}` with {} argument(s)", args.len()));
                }
                let span = base.span.to(self.tokens[self.pos - 1].span);
                let mut all = vec![base];
                all.extend(args);
                base = Expr::at(ExprKind::Call { name: builtin.into(), args: all }, span);
            } else if self.at_op("(") {
                return out_of_subset(self.peek().span, "call of a computed value");
            } else {
                return Ok(base);
            }
        }
    }

    fn atom(&mut self) -> LResult<Expr> {
        let token = self.peek().clone();
        let span = token.span;
        let kind = match &token.tok {
            Tok::Int(v) => {
                self.bump();
                ExprKind::IntLit { value: *v }
            }
            Tok::Float(v) => {
                self.bump();
                ExprKind::FloatLit { value: *v }
            }
            Tok::Str(s) => {
                self.bump();
                if matches!(self.peek().tok, Tok::Str(_)) {
                    return out_of_subset(self.peek().span, "implicit string concatenation");
                }
                ExprKind::StringLit { value: s.clone() }
            }
            Tok::Name(n) if n == "True" || n == "False" => {
                self.bump();
                ExprKind::BoolLit { value: n == "True" }
            }
            Tok::Op("(") => {
                self.bump();
                let inner = self.expr()?;
                if self.at_op(",") {
                    return out_of_subset(self.peek().span, "tuples are never emitted");
                }
                self.expect_op(")")?;
                return Ok(inner);
            }
            Tok::Op("[") => {
                self.bump();
                let mut items = Vec::new();
                if !self.at_op("]") {
                    loop {
                        items.push(self.expr()?);
                        if !self.at_op(",") {
                            break;
                        }
                        self.bump();
                    }
                }
                if self.at_name("for") {
                    return out_of_subset(self.peek().span, "comprehensions are never emitted");
                }
                let end = self.expect_op("]")?;
                return Ok(Expr::at(ExprKind::ListLit { items }, span.to(end)));
            }
            Tok::Op("{") => {
                self.bump();
                let end = self.expect_op("}")?;
                return Ok(Expr::at(ExprKind::Call { name: "NEW_MAP".into(), args: vec![] }, span.to(end)));
            }
            Tok::Name(n) if matches!(self.peek_at(1), Tok::Op("(")) => return self.call(n.clone(), span),
            Tok::Name(_) => {
                let (name, _) = self.identifier()?;
                ExprKind::Var { name }
            }
            _ => return self.unexpected("an expression"),
        };
        Ok(Expr::at(kind, span))
    }

    fn call(&mut self, callee: String, start: SourceSpan) -> LResult<Expr> {
        let builtin = match callee.as_str() {
            "len" => Some(("LENGTH", 1)),
            "int" => Some(("TO_INT", 1)),
            "uc_floor" => Some(("FLOOR", 1)),
            "uc_format" => Some(("TO_STRING", 1)),
            "max" => Some(("MAX", 2)),
            "min" => Some(("MIN", 2)),
            "abs" => Some(("ABS", 1)),
            "sorted" => Some(("SORTED", 1)),
            "uc_put" => Some(("PUT", 3)),
            "list" => Some(("KEYS", 1)),
            _ => None,
        };
        let name = match builtin {
            Some((name, _)) => {
                self.bump();
                name.to_string()
            }
            None => self.identifier()?.0,
        };
        let mut args = self.arguments()?;
        let span = start.to(self.tokens[self.pos - 1].span);
        if let Some((name, arity)) = builtin {
            if args.len() != arity {
                return out_of_subset(start, format!("`{callee}` with {} argument(s) maps to no {name} call", args.len()));
            }
            if name == "KEYS" {
                match args.pop().map(|a| a.kind) {
                    Some(ExprKind::Call { name, args: inner }) if name == KEYS_VIEW => args = inner,
                    _ => return out_of_subset(start, "`list(...)` is only emitted around `.keys()`"),
                }
            }
        }
        Ok(Expr::at(ExprKind::Call { name, args }, span))
    }
}

fn to_target(e: Expr) -> LResult<Target> {
    let span = e.span;
    let mut indices = Vec::new();
    let mut cursor = e;
    loop {
        match cursor.kind {
            ExprKind::Index { base, index } => {
                indices.push(*index);
                cursor = *base;
            }
            ExprKind::Var { name } => {
                indices.reverse();
                return Ok(Target { name, indices, span });
            }
            _ => return out_of_subset(span, "assignment to something other than a variable or element"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(src: &str) -> String {
        match lift_python(src) {
            Err(LiftError::OutOfSubset { reason, .. }) => reason,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tokens_and_escapes() {
        let toks = tokenize("x = \"a\\x01\\u00e9\\\"\" # note\n").unwrap();
        assert_eq!(toks[2].tok, Tok::Str("a\u{1}é\"".into()));
        assert_eq!(toks[3].tok, Tok::Newline);
        let toks = tokenize("y = 1e+16 + 2.5 + 7\n").unwrap();
        assert_eq!(toks[2].tok, Tok::Float(1e16));
        assert_eq!(toks[6].tok, Tok::Int(7));
    }

    #[test]
    fn rejections() {
        assert!(err("@cache\ndef f():\n    return 1\n").contains("decorator"));
        assert!(err("def f(a):\n    return 1 < a < 3\n").contains("chained"));
        assert!(err("x = 1\n").contains("top-level"));
        assert!(err("def f(a):\n    a += 1\n").contains("augmented"));
        assert!(err("def f(a):\n    return [x for x in a]\n").contains("comprehension"));
        assert!(err("def f(a):\n    return a.keys()\n").contains("keys"));
        assert!(err("def f(uc_tmp):\n    return 1\n").contains("runtime name"));
        assert!(err("def f(len):\n    return 1\n").contains("mangled"));
    }

    #[test]
    fn out_of_subset_points_at_the_construct() {
        match lift_python("def f():\n    return 2 ** 3\n") {
            Err(LiftError::OutOfSubset { span, .. }) => assert_eq!((span.start_line, span.start_col), (2, 14)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn contains_keys_and_slices() {
        let ast = lift_python("def f(m, s):\n    return ((1 in list(m.keys())) and s[1:-1] == {})\n").unwrap();
        let printed = crate::lang::printer::pretty_print(&ast);
        assert!(printed.contains("RETURN CONTAINS(KEYS(m), 1) AND SUBSTRING(s, 1, -1) == NEW_MAP()"), "{printed}");
    }
}
