//! Emission for targets that route every operation through runtime helpers:
//! JavaScript plus the tagged-value targets C++, Rust, Go and Java. The
//! helpers share names across targets, so one emitter drives all five and a
//! [`Dialect`] supplies the syntax that differs.

use crate::lang::ast::*;
use crate::numfmt::format_float;

use super::{locals, mangle, render_template, TargetLanguage, TranspileOptions, JAVA_TESTS_MARKER};

pub(crate) const BUILTIN_TEMPLATES: &[(&str, &str)] = &[
    ("LENGTH", "uc_length({0})"),
    ("APPEND", "uc_append({0}, {1})"),
    ("REMOVE_AT", "uc_remove_at({0}, {1})"),
    ("SUBSTRING", "uc_substring({0}, {1}, {2})"),
    ("TO_STRING", "uc_to_string({0})"),
    ("TO_INT", "uc_to_int({0})"),
    ("FLOOR", "uc_floor({0})"),
    ("MAX", "uc_max({0}, {1})"),
    ("MIN", "uc_min({0}, {1})"),
    ("ABS", "uc_abs({0})"),
    ("SORTED", "uc_sorted({0})"),
    ("CONTAINS", "uc_contains({0}, {1})"),
    ("KEYS", "uc_keys({0})"),
    ("GET", "uc_get({0}, {1})"),
    ("PUT", "uc_put({0}, {1}, {2})"),
    ("NEW_MAP", "uc_new_map()"),
];

const INDENT: &str = "    ";

trait Dialect {
    fn target(&self) -> TargetLanguage;
    fn prelude(&self) -> &'static str;
    /// Depth of top-level functions (Java nests them in a class).
    fn base_depth(&self) -> usize {
        0
    }
    fn forward_declarations(&self, _functions: &[(String, Vec<String>)]) -> Vec<String> {
        Vec::new()
    }
    fn function_open(&self, name: &str, params: &[String]) -> String;
    fn local(&self, name: &str) -> Vec<String>;
    fn temp(&self, name: &str, value: &str) -> String;
    fn function_tail(&self, body: &[Stmt]) -> Option<String>;
    fn trailer(&self) -> String {
        String::new()
    }
    fn main_open(&self) -> String;
    fn main_close(&self) -> Vec<String> {
        vec!["}".to_string()]
    }
    fn int(&self, value: i64) -> String;
    fn float(&self, value: f64) -> String;
    fn string(&self, value: &str) -> String;
    fn boolean(&self, value: bool) -> String;
    fn none(&self) -> &'static str;
    fn list(&self, items: &[String]) -> String;
    fn var(&self, name: &str) -> String {
        name.to_string()
    }
    /// Wraps a native boolean back into a value.
    fn wrap_bool(&self, native: &str) -> String;
    fn cond_open(&self, keyword: &str, cond: &str) -> String {
        format!("{keyword} (uc_truthy({cond})) {{")
    }
    fn while_open(&self, cond: &str) -> String {
        self.cond_open("while", cond)
    }
    fn comment(&self, text: &str) -> String {
        let text = text.trim_end_matches('\\');
        if text.is_empty() {
            "//".to_string()
        } else {
            format!("// {text}")
        }
    }
}

pub(crate) fn emit(ast: &UniCodeAst, target: TargetLanguage, opts: &TranspileOptions, driver: Option<&[Stmt]>) -> String {
    match target {
        TargetLanguage::Javascript => Emitter::new(&JavaScript, opts).program(ast, driver),
        TargetLanguage::Cpp => Emitter::new(&Cpp, opts).program(ast, driver),
        TargetLanguage::RustT => Emitter::new(&Rust, opts).program(ast, driver),
        TargetLanguage::Go => Emitter::new(&Go, opts).program(ast, driver),
        TargetLanguage::Java => Emitter::new(&Java, opts).program(ast, driver),
        TargetLanguage::Python => unreachable!("python has its own emitter"),
    }
}

struct Emitter<'a, D: Dialect> {
    d: &'a D,
    opts: &'a TranspileOptions,
    out: String,
    temps: usize,
}

impl<'a, D: Dialect> Emitter<'a, D> {
    fn new(d: &'a D, opts: &'a TranspileOptions) -> Self {
        Emitter { d, opts, out: String::new(), temps: 0 }
    }

    fn line(&mut self, depth: usize, text: &str) {
        for _ in 0..depth {
            self.out.push_str(INDENT);
        }
        self.out.push_str(text);
        self.out.push('\n');
    }

    fn name(&self, ident: &str) -> String {
        mangle(self.d.target(), ident)
    }

    fn program(mut self, ast: &UniCodeAst, driver: Option<&[Stmt]>) -> String {
        self.out.push_str(self.d.prelude());
        let base = self.d.base_depth();
        if self.opts.emit_comments && !ast.leading_comments.is_empty() {
            self.out.push('\n');
            for text in &ast.leading_comments {
                let line = self.d.comment(text);
                self.line(base, &line);
            }
        }
        let signatures: Vec<(String, Vec<String>)> = ast
            .functions
            .iter()
            .map(|f| (self.name(&f.name), f.params.iter().map(|p| self.name(p)).collect()))
            .collect();
        let forward = self.d.forward_declarations(&signatures);
        if !forward.is_empty() {
            self.out.push('\n');
            for line in forward {
                self.line(base, &line);
            }
        }
        for (function, (name, params)) in ast.functions.iter().zip(&signatures) {
            self.out.push('\n');
            if self.opts.emit_comments {
                for text in function.doc_comment.iter().flat_map(|d| d.split('\n')) {
                    let line = self.d.comment(text);
                    self.line(base, &line);
                }
            }
            let open = self.d.function_open(name, params);
            self.line(base, &open);
            for local in locals(function) {
                for line in self.d.local(&self.name(&local)) {
                    self.line(base + 1, &line);
                }
            }
            self.temps = 0;
            self.block(&function.body, base + 1);
            if let Some(tail) = self.d.function_tail(&function.body) {
                self.line(base + 1, &tail);
            }
            self.line(base, "}");
        }
        if let Some(stmts) = driver {
            self.out.push('\n');
            let open = self.d.main_open();
            self.line(base, &open);
            self.block(stmts, base + 1);
            for line in self.d.main_close() {
                self.line(base, &line);
            }
        }
        self.out.push_str(&self.d.trailer());
        self.out
    }

    fn block(&mut self, body: &[Stmt], depth: usize) {
        for stmt in body {
            self.statement(stmt, depth);
        }
    }

    fn fresh(&mut self, stem: &str) -> String {
        self.temps += 1;
        format!("uc_{stem}{}", self.temps)
    }

    fn assign(&mut self, target: &Target, value: String, depth: usize) {
        let name = self.name(&target.name);
        match target.indices.split_last() {
            None => self.line(depth, &format!("{name} = {value};")),
            Some((last, init)) => {
                let mut base = self.d.var(&name);
                for index in init {
                    base = format!("uc_index({base}, {})", self.expr(index));
                }
                let index = self.expr(last);
                self.line(depth, &format!("uc_set_index({base}, {index}, {value});"));
            }
        }
    }

    fn statement(&mut self, stmt: &Stmt, depth: usize) {
        match &stmt.kind {
            StmtKind::Assign { target, value } => {
                let value = self.expr(value);
                self.assign(target, value, depth);
            }
            StmtKind::If { cond, then_body, elif_arms, else_body } => {
                let open = self.d.cond_open("if", &self.expr(cond));
                self.line(depth, &open);
                self.block(then_body, depth + 1);
                for arm in elif_arms {
                    let open = self.d.cond_open("} else if", &self.expr(&arm.cond));
                    self.line(depth, &open);
                    self.block(&arm.body, depth + 1);
                }
                if let Some(body) = else_body {
                    self.line(depth, "} else {");
                    self.block(body, depth + 1);
                }
                self.line(depth, "}");
            }
            StmtKind::While { cond, body } => {
                let open = self.d.while_open(&self.expr(cond));
                self.line(depth, &open);
                self.block(body, depth + 1);
                self.line(depth, "}");
            }
            StmtKind::ForRange { var, from, to, step, body } => {
                let (f, t, s, i) = (self.fresh("f"), self.fresh("t"), self.fresh("s"), self.fresh("i"));
                self.line(depth, "{");
                let inner = depth + 1;
                let decls = [
                    self.d.temp(&f, &self.expr(from)),
                    self.d.temp(&t, &self.expr(to)),
                    self.d.temp(&s, &format!("uc_step({})", self.expr(step))),
                    self.d.temp(&i, &self.d.var(&f)),
                ];
                for decl in decls {
                    self.line(inner, &decl);
                }
                let (vi, vt, vs) = (self.d.var(&i), self.d.var(&t), self.d.var(&s));
                let cond = self.d.wrap_bool(&format!("uc_range_ok({vi}, {vt}, {vs})"));
                let open = self.d.while_open(&cond);
                self.line(inner, &open);
                let name = self.name(var);
                self.line(inner + 1, &format!("{name} = {vi};"));
                self.block(body, inner + 1);
                self.line(inner + 1, &format!("{i} = uc_add({vi}, {vs});"));
                self.line(inner, "}");
                self.line(depth, "}");
            }
            StmtKind::ForEach { var, iterable, body } => {
                let (c, n) = (self.fresh("c"), self.fresh("n"));
                self.line(depth, "{");
                let inner = depth + 1;
                let decls = [
                    self.d.temp(&c, &format!("uc_iter({})", self.expr(iterable))),
                    self.d.temp(&n, &self.d.int(0)),
                ];
                for decl in decls {
                    self.line(inner, &decl);
                }
                let (vc, vn) = (self.d.var(&c), self.d.var(&n));
                let open = self.d.while_open(&format!("uc_lt({vn}, uc_length({vc}))"));
                self.line(inner, &open);
                let name = self.name(var);
                self.line(inner + 1, &format!("{name} = uc_index({vc}, {vn});"));
                self.block(body, inner + 1);
                let one = self.d.int(1);
                self.line(inner + 1, &format!("{n} = uc_add({vn}, {one});"));
                self.line(inner, "}");
                self.line(depth, "}");
            }
            StmtKind::Return { value } => {
                let value = match value {
                    Some(v) => self.expr(v),
                    None => self.d.none().to_string(),
                };
                self.line(depth, &format!("return {value};"));
            }
            StmtKind::Input { target } => self.assign(target, "uc_input()".to_string(), depth),
            StmtKind::Output { value } => {
                let value = self.expr(value);
                self.line(depth, &format!("uc_output({value});"));
            }
            StmtKind::ExprStmt { call } => {
                let call = self.expr(call);
                self.line(depth, &format!("{call};"));
            }
            StmtKind::Comment { text } => {
                if self.opts.emit_comments {
                    let line = self.d.comment(text);
                    self.line(depth, &line);
                }
            }
            StmtKind::NaturalStep { .. } => unreachable!("rejected by the subset check"),
        }
    }

    fn expr(&self, e: &Expr) -> String {
        let d = self.d;
        match &e.kind {
            ExprKind::IntLit { value } => d.int(*value),
            ExprKind::FloatLit { value } => d.float(*value),
            ExprKind::StringLit { value } => d.string(value),
            ExprKind::BoolLit { value } => d.boolean(*value),
            ExprKind::ListLit { items } => d.list(&items.iter().map(|i| self.expr(i)).collect::<Vec<_>>()),
            ExprKind::Var { name } => d.var(&self.name(name)),
            ExprKind::Index { base, index } => format!("uc_index({}, {})", self.expr(base), self.expr(index)),
            ExprKind::Unary { op: UnaryOp::Neg, operand } => format!("uc_neg({})", self.expr(operand)),
            ExprKind::Unary { op: UnaryOp::Not, operand } => format!("uc_not({})", self.expr(operand)),
            ExprKind::Binary { op: op @ (BinaryOp::And | BinaryOp::Or), lhs, rhs } => {
                let joiner = if *op == BinaryOp::And { "&&" } else { "||" };
                d.wrap_bool(&format!("uc_truthy({}) {joiner} uc_truthy({})", self.expr(lhs), self.expr(rhs)))
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let helper = match op {
                    BinaryOp::Add => "uc_add",
                    BinaryOp::Sub => "uc_sub",
                    BinaryOp::Mul => "uc_mul",
                    BinaryOp::Div => "uc_div",
                    BinaryOp::Mod => "uc_mod",
                    BinaryOp::Eq => "uc_eq",
                    BinaryOp::Ne => "uc_ne",
                    BinaryOp::Lt => "uc_lt",
                    BinaryOp::Le => "uc_le",
                    BinaryOp::Gt => "uc_gt",
                    BinaryOp::Ge => "uc_ge",
                    BinaryOp::And | BinaryOp::Or => unreachable!(),
                };
                format!("{helper}({}, {})", self.expr(lhs), self.expr(rhs))
            }
            ExprKind::Call { name, args } => match BUILTIN_TEMPLATES.iter().find(|(b, _)| b == name) {
                Some((_, template)) => render_template(template, |i, _| self.expr(&args[i])),
                None => format!(
                    "{}({})",
                    self.name(name),
                    args.iter().map(|a| self.expr(a)).collect::<Vec<_>>().join(", ")
                ),
            },
        }
    }
}

/// Whether execution can fall off the end of `body`.
fn completes_normally(body: &[Stmt]) -> bool {
    match body.iter().rev().find(|s| !s.is_comment()) {
        None => true,
        Some(stmt) => match &stmt.kind {
            StmtKind::Return { .. } => false,
            StmtKind::If { then_body, elif_arms, else_body: Some(else_body), .. } => {
                completes_normally(then_body)
                    || elif_arms.iter().any(|arm| completes_normally(&arm.body))
                    || completes_normally(else_body)
            }
            _ => true,
        },
    }
}

/// Escapes for C-family string literals; `unicode` selects how non-ASCII
/// characters are written.
fn c_string(value: &str, unicode: fn(char) -> String) -> String {
    let mut out = String::from("\"");
    for c in value.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if c.is_ascii_control() => out.push_str(&unicode(c)),
            c if c.is_ascii() => out.push(c),
            c => out.push_str(&unicode(c)),
        }
    }
    out.push('"');
    out
}

struct JavaScript;
struct Cpp;
struct Rust;
struct Go;
struct Java;

impl Dialect for JavaScript {
    fn target(&self) -> TargetLanguage {
        TargetLanguage::Javascript
    }
    fn prelude(&self) -> &'static str {
        include_str!("../../runtime/javascript.js")
    }
    fn function_open(&self, name: &str, params: &[String]) -> String {
        format!("function {name}({}) {{", params.join(", "))
    }
    fn local(&self, name: &str) -> Vec<String> {
        vec![format!("let {name} = null;")]
    }
    fn temp(&self, name: &str, value: &str) -> String {
        format!("let {name} = {value};")
    }
    fn function_tail(&self, _body: &[Stmt]) -> Option<String> {
        Some("return null;".into())
    }
    fn main_open(&self) -> String {
        "{".into()
    }
    fn int(&self, value: i64) -> String {
        format!("{value}n")
    }
    fn float(&self, value: f64) -> String {
        format_float(value)
    }
    fn string(&self, value: &str) -> String {
        serde_json::to_string(value).expect("strings serialize")
    }
    fn boolean(&self, value: bool) -> String {
        value.to_string()
    }
    fn none(&self) -> &'static str {
        "null"
    }
    fn list(&self, items: &[String]) -> String {
        format!("[{}]", items.join(", "))
    }
    fn wrap_bool(&self, native: &str) -> String {
        format!("({native})")
    }
}

impl Dialect for Cpp {
    fn target(&self) -> TargetLanguage {
        TargetLanguage::Cpp
    }
    fn prelude(&self) -> &'static str {
        include_str!("../../runtime/cpp.hpp")
    }
    fn forward_declarations(&self, functions: &[(String, Vec<String>)]) -> Vec<String> {
        functions
            .iter()
            .map(|(name, params)| {
                let params: Vec<String> = params.iter().map(|p| format!("Value {p}")).collect();
                format!("Value {name}({});", params.join(", "))
            })
            .collect()
    }
    fn function_open(&self, name: &str, params: &[String]) -> String {
        let params: Vec<String> = params.iter().map(|p| format!("Value {p}")).collect();
        format!("Value {name}({}) {{", params.join(", "))
    }
    fn local(&self, name: &str) -> Vec<String> {
        vec![format!("Value {name};")]
    }
    fn temp(&self, name: &str, value: &str) -> String {
        format!("Value {name} = {value};")
    }
    fn function_tail(&self, _body: &[Stmt]) -> Option<String> {
        Some("return Value();".into())
    }
    fn main_open(&self) -> String {
        "int main() {".into()
    }
    fn main_close(&self) -> Vec<String> {
        vec![format!("{INDENT}return 0;"), "}".into()]
    }
    fn int(&self, value: i64) -> String {
        if value == i64::MIN {
            "uc_int(INT64_MIN)".into()
        } else {
            format!("uc_int({value}LL)")
        }
    }
    fn float(&self, value: f64) -> String {
        format!("uc_float({})", format_float(value))
    }
    fn string(&self, value: &str) -> String {
        // UTF-8 bytes as octal escapes keep the source ASCII.
        let mut out = String::from("uc_str(std::string(\"");
        let mut len = 0;
        for b in value.bytes() {
            match b {
                b'"' => out.push_str("\\\""),
                b'\\' => out.push_str("\\\\"),
                b'\n' => out.push_str("\\n"),
                b'\t' => out.push_str("\\t"),
                b'\r' => out.push_str("\\r"),
                0x20..=0x7e if b != b'?' => out.push(b as char),
                b => out.push_str(&format!("\\{b:03o}")),
            }
            len += 1;
        }
        out.push_str(&format!("\", {len}))"));
        out
    }
    fn boolean(&self, value: bool) -> String {
        format!("uc_bool({value})")
    }
    fn none(&self) -> &'static str {
        "Value()"
    }
    fn list(&self, items: &[String]) -> String {
        format!("uc_list({{{}}})", items.join(", "))
    }
    fn wrap_bool(&self, native: &str) -> String {
        format!("uc_bool({native})")
    }
    fn cond_open(&self, keyword: &str, cond: &str) -> String {
        format!("{keyword} (uc_truthy({cond})) {{")
    }
}

impl Dialect for Rust {
    fn target(&self) -> TargetLanguage {
        TargetLanguage::RustT
    }
    fn prelude(&self) -> &'static str {
        include_str!("../../runtime/rust.rs")
    }
    fn function_open(&self, name: &str, params: &[String]) -> String {
        let params: Vec<String> = params.iter().map(|p| format!("mut {p}: Value")).collect();
        format!("fn {name}({}) -> Value {{", params.join(", "))
    }
    fn local(&self, name: &str) -> Vec<String> {
        vec![format!("let mut {name} = Value::None;")]
    }
    fn temp(&self, name: &str, value: &str) -> String {
        format!("let mut {name} = {value};")
    }
    fn function_tail(&self, _body: &[Stmt]) -> Option<String> {
        Some("Value::None".into())
    }
    fn main_open(&self) -> String {
        "fn main() {".into()
    }
    fn int(&self, value: i64) -> String {
        if value == i64::MIN {
            "Value::Int(i64::MIN)".into()
        } else {
            format!("Value::Int({value})")
        }
    }
    fn float(&self, value: f64) -> String {
        format!("Value::Float({value:?})")
    }
    fn string(&self, value: &str) -> String {
        format!("uc_str({})", c_string(value, |c| format!("\\u{{{:x}}}", c as u32)))
    }
    fn boolean(&self, value: bool) -> String {
        format!("Value::Bool({value})")
    }
    fn none(&self) -> &'static str {
        "Value::None"
    }
    fn list(&self, items: &[String]) -> String {
        format!("uc_list(vec![{}])", items.join(", "))
    }
    fn var(&self, name: &str) -> String {
        format!("{name}.clone()")
    }
    fn wrap_bool(&self, native: &str) -> String {
        format!("Value::Bool({native})")
    }
    fn cond_open(&self, keyword: &str, cond: &str) -> String {
        format!("{keyword} uc_truthy({cond}) {{")
    }
    fn while_open(&self, cond: &str) -> String {
        format!("while uc_truthy({cond}) {{")
    }
}

impl Dialect for Go {
    fn target(&self) -> TargetLanguage {
        TargetLanguage::Go
    }
    fn prelude(&self) -> &'static str {
        include_str!("../../runtime/go.go")
    }
    fn function_open(&self, name: &str, params: &[String]) -> String {
        let params: Vec<String> = params.iter().map(|p| format!("{p} Value")).collect();
        format!("func {name}({}) Value {{", params.join(", "))
    }
    fn local(&self, name: &str) -> Vec<String> {
        vec![format!("var {name} Value = nil"), format!("_ = {name}")]
    }
    fn temp(&self, name: &str, value: &str) -> String {
        format!("var {name} Value = {value}")
    }
    fn function_tail(&self, _body: &[Stmt]) -> Option<String> {
        Some("return nil".into())
    }
    fn main_open(&self) -> String {
        "func main() {".into()
    }
    fn int(&self, value: i64) -> String {
        format!("int64({value})")
    }
    fn float(&self, value: f64) -> String {
        format!("float64({})", format_float(value))
    }
    fn string(&self, value: &str) -> String {
        c_string(value, |c| {
            if (c as u32) < 0x80 {
                format!("\\x{:02x}", c as u32)
            } else {
                format!("\\U{:08x}", c as u32)
            }
        })
    }
    fn boolean(&self, value: bool) -> String {
        value.to_string()
    }
    fn none(&self) -> &'static str {
        "nil"
    }
    fn list(&self, items: &[String]) -> String {
        format!("uc_list({})", items.join(", "))
    }
    fn wrap_bool(&self, native: &str) -> String {
        format!("({native})")
    }
    fn cond_open(&self, keyword: &str, cond: &str) -> String {
        format!("{keyword} uc_truthy({cond}) {{")
    }
    fn while_open(&self, cond: &str) -> String {
        format!("for uc_truthy({cond}) {{")
    }
}

impl Dialect for Java {
    fn target(&self) -> TargetLanguage {
        TargetLanguage::Java
    }
    fn prelude(&self) -> &'static str {
        include_str!("../../runtime/java.java")
    }
    fn base_depth(&self) -> usize {
        1
    }
    fn function_open(&self, name: &str, params: &[String]) -> String {
        let params: Vec<String> = params.iter().map(|p| format!("Value {p}")).collect();
        format!("static Value {name}({}) {{", params.join(", "))
    }
    fn local(&self, name: &str) -> Vec<String> {
        vec![format!("Value {name} = Value.NULL;")]
    }
    fn temp(&self, name: &str, value: &str) -> String {
        format!("Value {name} = {value};")
    }
    fn function_tail(&self, body: &[Stmt]) -> Option<String> {
        completes_normally(body).then(|| "return Value.NULL;".into())
    }
    fn trailer(&self) -> String {
        format!("\n{JAVA_TESTS_MARKER}\n}}\n")
    }
    fn main_open(&self) -> String {
        "public static void main(String[] args) {".into()
    }
    fn int(&self, value: i64) -> String {
        if value == i64::MIN {
            "Value.ofInt(Long.MIN_VALUE)".into()
        } else {
            format!("Value.ofInt({value}L)")
        }
    }
    fn float(&self, value: f64) -> String {
        format!("Value.ofFloat({})", format_float(value))
    }
    fn string(&self, value: &str) -> String {
        let mut out = String::from("Value.ofStr(\"");
        for unit in value.encode_utf16() {
            match unit {
                0x22 => out.push_str("\\\""),
                0x5c => out.push_str("\\\\"),
                0x0a => out.push_str("\\n"),
                0x09 => out.push_str("\\t"),
                0x0d => out.push_str("\\r"),
                0x20..=0x7e => out.push(unit as u8 as char),
                unit => out.push_str(&format!("\\u{unit:04x}")),
            }
        }
        out.push_str("\")");
        out
    }
    fn boolean(&self, value: bool) -> String {
        if value { "Value.TRUE" } else { "Value.FALSE" }.into()
    }
    fn none(&self) -> &'static str {
        "Value.NULL"
    }
    fn list(&self, items: &[String]) -> String {
        format!("uc_list({})", items.join(", "))
    }
    fn wrap_bool(&self, native: &str) -> String {
        format!("Value.ofBool({native})")
    }
    fn comment(&self, text: &str) -> String {
        let text = text.trim_end_matches('\\').replace("\\u", "\\ u");
        if text.is_empty() {
            "//".to_string()
        } else {
            format!("// {text}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parser::parse;

    #[test]
    fn java_return_only_when_reachable() {
        let ast = parse("FUNCTION f(x)\n    IF x THEN\n        RETURN 1\n    ELSE\n        RETURN 2\n    END IF\nEND FUNCTION\n").unwrap();
        assert!(!completes_normally(&ast.functions[0].body));
        let ast = parse("FUNCTION f(x)\n    IF x THEN\n        RETURN 1\n    END IF\nEND FUNCTION\n").unwrap();
        assert!(completes_normally(&ast.functions[0].body));
    }

    #[test]
    fn literal_spellings() {
        assert_eq!(Cpp.string("a\"é?"), "uc_str(std::string(\"a\\\"\\303\\251\\077\", 5))");
        assert_eq!(Rust.string("é\u{1}"), "uc_str(\"\\u{e9}\\u{1}\")");
        assert_eq!(Go.string("é\u{1}"), "\"\\U000000e9\\x01\"");
        assert_eq!(Java.string("😀"), "Value.ofStr(\"\\ud83d\\ude00\")");
        assert_eq!(JavaScript.int(-3), "-3n");
        assert_eq!(Rust.float(1e16), "Value::Float(1e16)");
    }

    #[test]
    fn java_comments_cannot_smuggle_unicode_escapes() {
        assert_eq!(Java.comment("see \\u000a"), "// see \\ u000a");
        assert_eq!(Cpp.comment("trailing \\"), "// trailing ");
    }
}
