//! Python emission. Values are native Python values; the prelude between
//! the runtime markers supplies display formatting, inclusive ranges and
//! line input.

use crate::lang::ast::*;
use crate::numfmt::format_float;

use super::{mangle, render_template, TargetLanguage, TranspileOptions};

pub(crate) const PRELUDE: &str = include_str!("../../runtime/python.py");
pub const RUNTIME_BEGIN: &str = "# unicode-runtime: begin";
pub const RUNTIME_END: &str = "# unicode-runtime: end";

pub(crate) const BUILTIN_TEMPLATES: &[(&str, &str)] = &[
    ("LENGTH", "len({0})"),
    ("APPEND", "{0:p}.append({1})"),
    ("REMOVE_AT", "{0:p}.pop({1})"),
    ("SUBSTRING", "{0:p}[{1}:{2}]"),
    ("TO_STRING", "uc_format({0})"),
    ("TO_INT", "int({0})"),
    ("FLOOR", "uc_floor({0})"),
    ("MAX", "max({0}, {1})"),
    ("MIN", "min({0}, {1})"),
    ("ABS", "abs({0})"),
    ("SORTED", "sorted({0})"),
    ("CONTAINS", "({1:c} in {0:c})"),
    ("KEYS", "list({0:p}.keys())"),
    ("GET", "{0:p}.get({1})"),
    ("PUT", "uc_put({0}, {1}, {2})"),
    ("NEW_MAP", "{}"),
];

const INDENT: &str = "    ";

pub(crate) fn emit(ast: &UniCodeAst, opts: &TranspileOptions, driver: Option<&[Stmt]>) -> String {
    let mut out = String::from(PRELUDE);
    if opts.emit_comments && !ast.leading_comments.is_empty() {
        out.push('\n');
        for line in &ast.leading_comments {
            out.push_str(&comment(line));
            out.push('\n');
        }
    }
    for function in &ast.functions {
        out.push_str("\n\n");
        if opts.emit_comments {
            for line in function.doc_comment.iter().flat_map(|d| d.split('\n')) {
                out.push_str(&comment(line));
                out.push('\n');
            }
        }
        let params: Vec<String> = function.params.iter().map(|p| name(p)).collect();
        out.push_str(&format!("def {}({}):\n", name(&function.name), params.join(", ")));
        block(&function.body, 1, opts, &mut out);
    }
    if let Some(stmts) = driver {
        out.push_str("\n\nif __name__ == \"__main__\":\n");
        block(stmts, 1, opts, &mut out);
    }
    out
}

fn name(ident: &str) -> String {
    mangle(TargetLanguage::Python, ident)
}

fn comment(text: &str) -> String {
    if text.is_empty() {
        "#".to_string()
    } else {
        format!("# {text}")
    }
}

fn block(body: &[Stmt], depth: usize, opts: &TranspileOptions, out: &mut String) {
    let pad = INDENT.repeat(depth);
    let mut executable = false;
    for stmt in body {
        if stmt.is_comment() && !opts.emit_comments {
            continue;
        }
        executable |= !stmt.is_comment();
        statement(stmt, depth, opts, out);
    }
    if !executable {
        out.push_str(&format!("{pad}pass\n"));
    }
}

fn target(t: &Target) -> String {
    let mut out = name(&t.name);
    for index in &t.indices {
        out.push_str(&format!("[{}]", expr(index)));
    }
    out
}

fn statement(stmt: &Stmt, depth: usize, opts: &TranspileOptions, out: &mut String) {
    let pad = INDENT.repeat(depth);
    match &stmt.kind {
        StmtKind::Assign { target: t, value } => out.push_str(&format!("{pad}{} = {}\n", target(t), expr(value))),
        StmtKind::If { cond, then_body, elif_arms, else_body } => {
            out.push_str(&format!("{pad}if {}:\n", expr(cond)));
            block(then_body, depth + 1, opts, out);
            for arm in elif_arms {
                out.push_str(&format!("{pad}elif {}:\n", expr(&arm.cond)));
                block(&arm.body, depth + 1, opts, out);
            }
            if let Some(body) = else_body {
                out.push_str(&format!("{pad}else:\n"));
                block(body, depth + 1, opts, out);
            }
        }
        StmtKind::While { cond, body } => {
            out.push_str(&format!("{pad}while {}:\n", expr(cond)));
            block(body, depth + 1, opts, out);
        }
        StmtKind::ForRange { var, from, to, step, body } => {
            let range = if step.is_int(1) {
                format!("uc_range({}, {})", expr(from), expr(to))
            } else {
                format!("uc_range({}, {}, {})", expr(from), expr(to), expr(step))
            };
            out.push_str(&format!("{pad}for {} in {range}:\n", name(var)));
            block(body, depth + 1, opts, out);
        }
        StmtKind::ForEach { var, iterable, body } => {
            out.push_str(&format!("{pad}for {} in {}:\n", name(var), expr(iterable)));
            block(body, depth + 1, opts, out);
        }
        StmtKind::Return { value: Some(value) } => out.push_str(&format!("{pad}return {}\n", expr(value))),
        StmtKind::Return { value: None } => out.push_str(&format!("{pad}return\n")),
        StmtKind::Input { target: t } => out.push_str(&format!("{pad}{} = uc_input()\n", target(t))),
        StmtKind::Output { value } => out.push_str(&format!("{pad}print(uc_format({}))\n", expr(value))),
        StmtKind::ExprStmt { call } => out.push_str(&format!("{pad}{}\n", expr(call))),
        StmtKind::Comment { text } => out.push_str(&format!("{pad}{}\n", comment(text))),
        StmtKind::NaturalStep { .. } => unreachable!("rejected by the subset check"),
    }
}

pub(crate) fn expr(e: &Expr) -> String {
    match &e.kind {
        ExprKind::IntLit { value } => value.to_string(),
        ExprKind::FloatLit { value } => format_float(*value),
        ExprKind::StringLit { value } => quote(value),
        ExprKind::BoolLit { value } => if *value { "True" } else { "False" }.to_string(),
        ExprKind::ListLit { items } => format!("[{}]", items.iter().map(expr).collect::<Vec<_>>().join(", ")),
        ExprKind::Var { name: n } => name(n),
        ExprKind::Index { base, index } => format!("{}[{}]", operand(base, POSTFIX_PRECEDENCE), expr(index)),
        ExprKind::Unary { op: UnaryOp::Neg, operand: inner } => format!("-{}", operand(inner, NEG_PRECEDENCE)),
        ExprKind::Unary { op: UnaryOp::Not, operand: inner } => format!("not {}", operand(inner, NOT_PRECEDENCE)),
        ExprKind::Binary { op, lhs, rhs } => {
            let prec = op.precedence();
            // Python chains comparisons, so nested ones are always parenthesized.
            let lhs_min = if op.is_comparison() { prec + 1 } else { prec };
            format!("{} {} {}", operand(lhs, lhs_min), symbol(*op), operand(rhs, prec + 1))
        }
        ExprKind::Call { name: callee, args } => match BUILTIN_TEMPLATES.iter().find(|(b, _)| b == callee) {
            Some((_, template)) => render_template(template, |i, min| {
                if min == POSTFIX_PRECEDENCE && matches!(args[i].kind, ExprKind::IntLit { .. }) {
                    format!("({})", expr(&args[i]))
                } else {
                    operand(&args[i], min)
                }
            }),
            None => format!("{}({})", name(callee), args.iter().map(expr).collect::<Vec<_>>().join(", ")),
        },
    }
}

fn operand(e: &Expr, min_precedence: u8) -> String {
    if e.precedence() < min_precedence {
        format!("({})", expr(e))
    } else {
        expr(e)
    }
}

fn symbol(op: BinaryOp) -> &'static str {
    match op {
        BinaryOp::Mod => "%",
        BinaryOp::And => "and",
        BinaryOp::Or => "or",
        other => other.symbol(),
    }
}

/// Double-quoted Python literal; control characters use `\x` escapes.
pub fn quote(value: &str) -> String {
    let mut out = String::with_capacity(value.len() + 2);
    out.push('"');
    for c in value.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 || c == '\u{7f}' => out.push_str(&format!("\\x{:02x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parser::parse;
    use crate::transpile::{transpile, TargetLanguage};

    fn body_of(src: &str) -> String {
        let code = transpile(&parse(src).unwrap(), TargetLanguage::Python, &TranspileOptions::default()).unwrap().code;
        code[PRELUDE.len()..].trim().to_string()
    }

    #[test]
    fn set_becomes_assignment() {
        let out = body_of("FUNCTION f()\n    SET x TO 1\n    RETURN x\nEND FUNCTION\n");
        assert_eq!(out, "def f():\n    x = 1\n    return x");
    }

    #[test]
    fn comparisons_never_chain() {
        let e = crate::lang::parser::parse_expr("a < b == c").unwrap();
        assert_eq!(expr(&e), "(a < b) == c");
    }

    #[test]
    fn builtin_templates() {
        let cases = [
            ("CONTAINS(xs, a == b)", "((a == b) in xs)"),
            ("APPEND(5, 1)", "(5).append(1)"),
            ("SUBSTRING(s + t, 1, -1)", "(s + t)[1:-1]"),
            ("KEYS(NEW_MAP())", "list({}.keys())"),
            ("len + LENGTH(xs)", "uc_v_len + len(xs)"),
            ("NOT a AND b MOD 2 == 0", "not a and b % 2 == 0"),
        ];
        for (src, want) in cases {
            assert_eq!(expr(&crate::lang::parser::parse_expr(src).unwrap()), want, "{src}");
        }
    }

    #[test]
    fn comment_only_blocks_get_pass() {
        let src = "FUNCTION f(x)\n    IF x THEN\n        RETURN 1\n    ELSE\n        // nothing to do\n    END IF\nEND FUNCTION\n";
        assert!(body_of(src).contains("    else:\n        # nothing to do\n        pass"));
        let ast = parse(src).unwrap();
        let opts = TranspileOptions { emit_comments: false, ..Default::default() };
        let code = transpile(&ast, TargetLanguage::Python, &opts).unwrap().code;
        assert!(!code[PRELUDE.len()..].contains('#'));
        assert!(code.contains("    else:\n        pass"));
    }

    #[test]
    fn string_escapes() {
        assert_eq!(quote("a\"b\\c\nd\u{1}é"), "\"a\\\"b\\\\c\\nd\\x01é\"");
    }
}
