//! Recursive-descent parser.
//!
//! Blocks are delimited by `END <KIND>` keywords; INDENT/DEDENT tokens are
//! dropped before parsing, so indentation never changes the tree. The
//! validator's formatting rule checks layout separately.
//!
//! ```text
//! program   := { COMMENT NL | NL } function { ... }
//! function  := FUNCTION ident "(" [ident {"," ident}] ")" NL block END FUNCTION
//! block     := stmt { stmt }
//! stmt      := SET target TO expr
//!            | IF expr THEN NL block { ELSE IF expr THEN NL block } [ ELSE NL block ] END IF
//!            | WHILE expr DO NL block END WHILE
//!            | FOR ident FROM expr TO expr [STEP expr] DO NL block END FOR
//!            | FOR EACH ident IN expr DO NL block END FOR
//!            | RETURN [expr] | INPUT target | OUTPUT expr | call
//!            | COMMENT | "DO:" PROSE
//! target    := ident { "[" expr "]" }
//! expr      := or ;  or := and {OR and} ;  and := not {AND not}
//! not       := NOT not | cmp ;  cmp := add {cmpop add}
//! add       := mul {("+"|"-") mul} ;  mul := unary {("*"|"/"|MOD) unary}
//! unary     := "-" unary | postfix ;  postfix := primary {"[" expr "]"}
//! primary   := literal | ident ["(" args ")"] | "(" expr ")" | "[" [expr {"," expr}] "]"
//! ```

use std::collections::HashSet;

use super::ast::*;
use super::diagnostic::Diagnostic;
use super::lexer::{tokenize_with, LexOptions, Token, TokenKind, PROSE_MARKER};
use super::span::SourceSpan;

pub fn parse(text: &str) -> Result<UniCodeAst, Vec<Diagnostic>> {
    parse_with(text, &LexOptions::default())
}

pub fn parse_with(text: &str, options: &LexOptions) -> Result<UniCodeAst, Vec<Diagnostic>> {
    let tokens: Vec<Token> = tokenize_with(text, options)?
        .into_iter()
        .filter(|t| !matches!(t.kind, TokenKind::Indent | TokenKind::Dedent))
        .collect();
    let mut parser = Parser { tokens, pos: 0, last: SourceSpan::default() };
    let ast = parser.program().map_err(|d| vec![d])?;
    let problems = check_names(&ast);
    if problems.is_empty() {
        Ok(ast)
    } else {
        Err(problems)
    }
}

/// Parses a single expression (used by tooling and tests).
pub fn parse_expr(text: &str) -> Result<Expr, Vec<Diagnostic>> {
    let tokens: Vec<Token> = tokenize_with(text, &LexOptions::default())?
        .into_iter()
        .filter(|t| !matches!(t.kind, TokenKind::Indent | TokenKind::Dedent))
        .collect();
    let mut parser = Parser { tokens, pos: 0, last: SourceSpan::default() };
    let expr = parser.expr().map_err(|d| vec![d])?;
    parser.skip_newlines();
    if parser.peek().kind != TokenKind::Eof {
        return Err(vec![parser.unexpected("end of input")]);
    }
    Ok(expr)
}

fn check_names(ast: &UniCodeAst) -> Vec<Diagnostic> {
    let mut problems = Vec::new();
    if ast.functions.is_empty() {
        problems.push(Diagnostic::error("P005.empty-program", "program declares no function", SourceSpan::default()));
    }
    let mut seen = HashSet::new();
    for function in &ast.functions {
        if !seen.insert(function.name.as_str()) {
            problems.push(Diagnostic::error(
                "P002.duplicate-function",
                format!("function `{}` is declared more than once", function.name),
                function.span,
            ));
        }
        let mut params = HashSet::new();
        for param in &function.params {
            if !params.insert(param.as_str()) {
                problems.push(Diagnostic::error(
                    "P003.duplicate-parameter",
                    format!("parameter `{param}` of `{}` is listed more than once", function.name),
                    function.span,
                ));
            }
        }
    }
    problems
}

/// Undoes string-literal escaping. The lexer has already rejected bad escapes.
pub fn unescape(body: &str) -> String {
    let mut out = String::with_capacity(body.len());
    let mut chars = body.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('n') => out.push('\n'),
            Some('t') => out.push('\t'),
            Some('r') => out.push('\r'),
            Some(other) => out.push(other),
            None => {}
        }
    }
    out
}

type PResult<T> = Result<T, Diagnostic>;

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    /// Span of the most recently consumed token other than a newline.
    last: SourceSpan,
}

fn describe(token: &Token) -> String {
    match token.kind {
        TokenKind::Eof => "end of input".into(),
        TokenKind::Newline => "end of line".into(),
        _ => format!("`{}`", token.text),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let token = self.peek().clone();
        if token.kind != TokenKind::Eof {
            self.pos += 1;
        }
        if token.kind != TokenKind::Newline {
            self.last = token.span;
        }
        token
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        let token = self.peek();
        Diagnostic::error("P001.syntax", format!("expected {wanted}, found {}", describe(token)), token.span)
    }

    fn expect_keyword(&mut self, keyword: &str) -> PResult<Token> {
        if self.peek().is_keyword(keyword) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&format!("`{keyword}`")))
        }
    }

    fn expect_op(&mut self, op: &str) -> PResult<Token> {
        if self.peek().is_op(op) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&format!("`{op}`")))
        }
    }

    fn expect_ident(&mut self, what: &str) -> PResult<Token> {
        if self.peek().kind == TokenKind::Identifier {
            Ok(self.bump())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn at_line_end(&self) -> bool {
        matches!(self.peek().kind, TokenKind::Newline | TokenKind::Eof | TokenKind::Comment)
    }

    /// A trailing comment is left in place and becomes the next statement.
    fn end_line(&mut self) -> PResult<()> {
        match self.peek().kind {
            TokenKind::Newline => {
                self.bump();
                Ok(())
            }
            TokenKind::Eof | TokenKind::Comment => Ok(()),
            _ => Err(self.unexpected("end of line")),
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek().kind == TokenKind::Newline {
            self.bump();
        }
    }

    fn program(&mut self) -> PResult<UniCodeAst> {
        let mut leading_comments = Vec::new();
        let mut functions = Vec::new();
        let mut pending: Vec<String> = Vec::new();
        loop {
            let token = self.peek().clone();
            match token.kind {
                TokenKind::Eof => {
                    leading_comments.append(&mut pending);
                    break;
                }
                TokenKind::Newline => {
                    // comment lines consume their own newline, so this is a blank line
                    self.bump();
                    leading_comments.append(&mut pending);
                }
                TokenKind::Comment => {
                    self.bump();
                    pending.push(comment_text(&token.text));
                    self.end_line()?;
                }
                _ if token.is_keyword("FUNCTION") => {
                    let doc = if pending.is_empty() { None } else { Some(pending.join("\n")) };
                    pending.clear();
                    functions.push(self.function(doc)?);
                }
                _ => return Err(self.unexpected("`FUNCTION`")),
            }
        }
        Ok(UniCodeAst { leading_comments, functions })
    }

    fn function(&mut self, doc_comment: Option<String>) -> PResult<FunctionDecl> {
        let start = self.expect_keyword("FUNCTION")?.span;
        let name = self.expect_ident("a function name")?.text;
        self.expect_op("(")?;
        let mut params = Vec::new();
        if !self.peek().is_op(")") {
            loop {
                params.push(self.expect_ident("a parameter name")?.text);
                if self.peek().is_op(",") {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect_op(")")?;
        self.end_line()?;
        let body = self.block()?;
        self.expect_end("FUNCTION")?;
        let span = start.to(self.last);
        self.end_line()?;
        Ok(FunctionDecl { name, params, body, doc_comment, span })
    }

    fn expect_end(&mut self, kind: &str) -> PResult<()> {
        self.expect_keyword("END")?;
        self.expect_keyword(kind)?;
        Ok(())
    }

    fn block(&mut self) -> PResult<Vec<Stmt>> {
        let mut body = Vec::new();
        loop {
            let token = self.peek();
            match token.kind {
                TokenKind::Newline => {
                    self.bump();
                }
                TokenKind::Eof => return Err(self.unexpected("`END`")),
                _ if token.is_keyword("END") || token.is_keyword("ELSE") => break,
                _ => body.push(self.stmt()?),
            }
        }
        if body.is_empty() {
            let token = self.peek();
            return Err(Diagnostic::error("P004.empty-block", "block has no statements", token.span));
        }
        Ok(body)
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let token = self.peek().clone();
        let start = token.span;
        let kind = match token.kind {
            TokenKind::Comment => {
                self.bump();
                self.end_line()?;
                return Ok(Stmt { kind: StmtKind::Comment { text: comment_text(&token.text) }, span: start });
            }
            TokenKind::Keyword => match token.text.as_str() {
                PROSE_MARKER => {
                    self.bump();
                    let prose = self.bump();
                    self.end_line()?;
                    return Ok(Stmt {
                        kind: StmtKind::NaturalStep { text: prose.text.trim().to_string() },
                        span: start.to(prose.span),
                    });
                }
                "SET" => {
                    self.bump();
                    let target = self.target()?;
                    self.expect_keyword("TO")?;
                    let value = self.expr()?;
                    StmtKind::Assign { target, value }
                }
                "IF" => return self.if_stmt(),
                "WHILE" => {
                    self.bump();
                    let cond = self.expr()?;
                    self.expect_keyword("DO")?;
                    self.end_line()?;
                    let body = self.block()?;
                    self.expect_end("WHILE")?;
                    StmtKind::While { cond, body }
                }
                "FOR" => self.for_stmt()?,
                "RETURN" => {
                    self.bump();
                    let value = if self.at_line_end() { None } else { Some(self.expr()?) };
                    StmtKind::Return { value }
                }
                "INPUT" => {
                    self.bump();
                    StmtKind::Input { target: self.target()? }
                }
                "OUTPUT" => {
                    self.bump();
                    StmtKind::Output { value: self.expr()? }
                }
                _ => return Err(self.unexpected("a statement")),
            },
            TokenKind::Identifier => {
                let call = self.expr()?;
                if !matches!(call.kind, ExprKind::Call { .. }) {
                    return Err(Diagnostic::error(
                        "P001.syntax",
                        "only a call may stand alone as a statement",
                        call.span,
                    ));
                }
                StmtKind::ExprStmt { call }
            }
            _ => return Err(self.unexpected("a statement")),
        };
        let span = start.to(self.last);
        self.end_line()?;
        Ok(Stmt { kind, span })
    }

    fn if_stmt(&mut self) -> PResult<Stmt> {
        let start = self.expect_keyword("IF")?.span;
        let cond = self.expr()?;
        self.expect_keyword("THEN")?;
        self.end_line()?;
        let then_body = self.block()?;
        let mut elif_arms = Vec::new();
        let mut else_body = None;
        while self.peek().is_keyword("ELSE") {
            self.bump();
            if self.peek().is_keyword("IF") {
                self.bump();
                let cond = self.expr()?;
                self.expect_keyword("THEN")?;
                self.end_line()?;
                let body = self.block()?;
                elif_arms.push(ElifArm { cond, body });
            } else {
                self.end_line()?;
                else_body = Some(self.block()?);
                break;
            }
        }
        self.expect_end("IF")?;
        let span = start.to(self.last);
        self.end_line()?;
        Ok(Stmt { kind: StmtKind::If { cond, then_body, elif_arms, else_body }, span })
    }

    fn for_stmt(&mut self) -> PResult<StmtKind> {
        let for_span = self.expect_keyword("FOR")?.span;
        if self.peek().is_keyword("EACH") {
            self.bump();
            let var = self.expect_ident("a loop variable")?.text;
            self.expect_keyword("IN")?;
            let iterable = self.expr()?;
            self.expect_keyword("DO")?;
            self.end_line()?;
            let body = self.block()?;
            self.expect_end("FOR")?;
            return Ok(StmtKind::ForEach { var, iterable, body });
        }
        let var = self.expect_ident("a loop variable")?.text;
        self.expect_keyword("FROM")?;
        let from = self.expr()?;
        self.expect_keyword("TO")?;
        let to = self.expr()?;
        let step = if self.peek().is_keyword("STEP") {
            self.bump();
            self.expr()?
        } else {
            Expr::at(ExprKind::IntLit { value: 1 }, for_span)
        };
        self.expect_keyword("DO")?;
        self.end_line()?;
        let body = self.block()?;
        self.expect_end("FOR")?;
        Ok(StmtKind::ForRange { var, from, to, step, body })
    }

    fn target(&mut self) -> PResult<Target> {
        let name_token = self.expect_ident("a variable name")?;
        let mut indices = Vec::new();
        while self.peek().is_op("[") {
            self.bump();
            indices.push(self.expr()?);
            self.expect_op("]")?;
        }
        Ok(Target { name: name_token.text, indices, span: name_token.span.to(self.last) })
    }

    fn expr(&mut self) -> PResult<Expr> {
        self.or_expr()
    }

    fn binary_level(
        &mut self,
        next: fn(&mut Self) -> PResult<Expr>,
        op_of: fn(&Token) -> Option<BinaryOp>,
    ) -> PResult<Expr> {
        let mut lhs = next(self)?;
        while let Some(op) = op_of(self.peek()) {
            self.bump();
            let rhs = next(self)?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr::at(ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span);
        }
        Ok(lhs)
    }

    fn or_expr(&mut self) -> PResult<Expr> {
        self.binary_level(Self::and_expr, |t| t.is_keyword("OR").then_some(BinaryOp::Or))
    }

    fn and_expr(&mut self) -> PResult<Expr> {
        self.binary_level(Self::not_expr, |t| t.is_keyword("AND").then_some(BinaryOp::And))
    }

    fn not_expr(&mut self) -> PResult<Expr> {
        if self.peek().is_keyword("NOT") {
            let start = self.bump().span;
            let operand = self.not_expr()?;
            let span = start.to(operand.span);
            return Ok(Expr::at(ExprKind::Unary { op: UnaryOp::Not, operand: Box::new(operand) }, span));
        }
        self.cmp_expr()
    }

    fn cmp_expr(&mut self) -> PResult<Expr> {
        self.binary_level(Self::add_expr, |t| {
            if t.kind != TokenKind::Operator {
                return None;
            }
            Some(match t.text.as_str() {
                "==" | "=" => BinaryOp::Eq,
                "!=" | "≠" => BinaryOp::Ne,
                "<" => BinaryOp::Lt,
                "<=" | "≤" => BinaryOp::Le,
                ">" => BinaryOp::Gt,
                ">=" | "≥" => BinaryOp::Ge,
                _ => return None,
            })
        })
    }

    fn add_expr(&mut self) -> PResult<Expr> {
        self.binary_level(Self::mul_expr, |t| {
            if t.is_op("+") {
                Some(BinaryOp::Add)
            } else if t.is_op("-") {
                Some(BinaryOp::Sub)
            } else {
                None
            }
        })
    }

    fn mul_expr(&mut self) -> PResult<Expr> {
        self.binary_level(Self::unary_expr, |t| {
            if t.is_op("*") {
                Some(BinaryOp::Mul)
            } else if t.is_op("/") {
                Some(BinaryOp::Div)
            } else if t.is_keyword("MOD") {
                Some(BinaryOp::Mod)
            } else {
                None
            }
        })
    }

    fn unary_expr(&mut self) -> PResult<Expr> {
        if self.peek().is_op("-") {
            let start = self.bump().span;
            let operand = self.unary_expr()?;
            let span = start.to(operand.span);
            return Ok(Expr::at(ExprKind::Unary { op: UnaryOp::Neg, operand: Box::new(operand) }, span));
        }
        self.postfix_expr()
    }

    fn postfix_expr(&mut self) -> PResult<Expr> {
        let mut base = self.primary()?;
        while self.peek().is_op("[") {
            self.bump();
            let index = self.expr()?;
            let close = self.expect_op("]")?.span;
            let span = base.span.to(close);
            base = Expr::at(ExprKind::Index { base: Box::new(base), index: Box::new(index) }, span);
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let token = self.peek().clone();
        let span = token.span;
        let kind = match token.kind {
            TokenKind::IntLiteral => ExprKind::IntLit {
                value: token.text.parse().map_err(|_| self.unexpected("an integer in range"))?,
            },
            TokenKind::FloatLiteral => ExprKind::FloatLit {
                value: token.text.parse().map_err(|_| self.unexpected("a float literal"))?,
            },
            TokenKind::StringLiteral => {
                let inner = &token.text[1..token.text.len() - 1];
                ExprKind::StringLit { value: unescape(inner) }
            }
            TokenKind::BoolLiteral => ExprKind::BoolLit { value: token.text == "TRUE" },
            TokenKind::Identifier => {
                self.bump();
                if self.peek().is_op("(") {
                    self.bump();
                    let args = self.list_until(")")?;
                    return Ok(Expr::at(ExprKind::Call { name: token.text, args }, span.to(self.last)));
                }
                return Ok(Expr::at(ExprKind::Var { name: token.text }, span));
            }
            TokenKind::Operator if token.text == "(" => {
                self.bump();
                let inner = self.expr()?;
                self.expect_op(")")?;
                return Ok(inner);
            }
            TokenKind::Operator if token.text == "[" => {
                self.bump();
                let items = self.list_until("]")?;
                return Ok(Expr::at(ExprKind::ListLit { items }, span.to(self.last)));
            }
            _ => return Err(self.unexpected("an expression")),
        };
        self.bump();
        Ok(Expr::at(kind, span))
    }

    /// Comma-separated expressions up to and including `close`.
    fn list_until(&mut self, close: &str) -> PResult<Vec<Expr>> {
        let mut items = Vec::new();
        if self.peek().is_op(close) {
            self.bump();
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if self.peek().is_op(",") {
                self.bump();
                continue;
            }
            self.expect_op(close)?;
            return Ok(items);
        }
    }
}

fn comment_text(raw: &str) -> String {
    raw.trim_start_matches("//").trim().to_string()
}
