//! Canonical layout: 4-space indentation, one statement per line, uppercase
//! keywords, ASCII operators, a single blank line between functions.

use super::ast::*;
use crate::numfmt::format_float;

pub const INDENT: &str = "    ";

pub fn pretty_print(ast: &UniCodeAst) -> String {
    let mut out = String::new();
    for comment in &ast.leading_comments {
        push_comment(&mut out, 0, comment);
    }
    if !ast.leading_comments.is_empty() {
        out.push('\n');
    }
    for (i, function) in ast.functions.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        print_function(&mut out, function);
    }
    out
}

fn push_comment(out: &mut String, depth: usize, text: &str) {
    for line in text.split('\n') {
        out.push_str(&INDENT.repeat(depth));
        if line.is_empty() {
            out.push_str("//\n");
        } else {
            out.push_str("// ");
            out.push_str(line);
            out.push('\n');
        }
    }
}

fn print_function(out: &mut String, function: &FunctionDecl) {
    if let Some(doc) = &function.doc_comment {
        push_comment(out, 0, doc);
    }
    out.push_str(&format!("FUNCTION {}({})\n", function.name, function.params.join(", ")));
    print_body(out, 1, &function.body);
    out.push_str("END FUNCTION\n");
}

fn print_body(out: &mut String, depth: usize, body: &[Stmt]) {
    for stmt in body {
        print_stmt(out, depth, stmt);
    }
}

fn line(out: &mut String, depth: usize, text: &str) {
    out.push_str(&INDENT.repeat(depth));
    out.push_str(text);
    out.push('\n');
}

pub fn print_target(target: &Target) -> String {
    let mut text = target.name.clone();
    for index in &target.indices {
        text.push('[');
        text.push_str(&print_expr(index));
        text.push(']');
    }
    text
}

fn print_stmt(out: &mut String, depth: usize, stmt: &Stmt) {
    match &stmt.kind {
        StmtKind::Assign { target, value } => {
            line(out, depth, &format!("SET {} TO {}", print_target(target), print_expr(value)))
        }
        StmtKind::If { cond, then_body, elif_arms, else_body } => {
            line(out, depth, &format!("IF {} THEN", print_expr(cond)));
            print_body(out, depth + 1, then_body);
            for arm in elif_arms {
                line(out, depth, &format!("ELSE IF {} THEN", print_expr(&arm.cond)));
                print_body(out, depth + 1, &arm.body);
            }
            if let Some(body) = else_body {
                line(out, depth, "ELSE");
                print_body(out, depth + 1, body);
            }
            line(out, depth, "END IF");
        }
        StmtKind::While { cond, body } => {
            line(out, depth, &format!("WHILE {} DO", print_expr(cond)));
            print_body(out, depth + 1, body);
            line(out, depth, "END WHILE");
        }
        StmtKind::ForRange { var, from, to, step, body } => {
            let step_text = if step.is_int(1) { String::new() } else { format!(" STEP {}", print_expr(step)) };
            line(out, depth, &format!("FOR {var} FROM {} TO {}{step_text} DO", print_expr(from), print_expr(to)));
            print_body(out, depth + 1, body);
            line(out, depth, "END FOR");
        }
        StmtKind::ForEach { var, iterable, body } => {
            line(out, depth, &format!("FOR EACH {var} IN {} DO", print_expr(iterable)));
            print_body(out, depth + 1, body);
            line(out, depth, "END FOR");
        }
        StmtKind::Return { value: Some(value) } => line(out, depth, &format!("RETURN {}", print_expr(value))),
        StmtKind::Return { value: None } => line(out, depth, "RETURN"),
        StmtKind::Input { target } => line(out, depth, &format!("INPUT {}", print_target(target))),
        StmtKind::Output { value } => line(out, depth, &format!("OUTPUT {}", print_expr(value))),
        StmtKind::ExprStmt { call } => line(out, depth, &print_expr(call)),
        StmtKind::Comment { text } => push_comment(out, depth, text),
        StmtKind::NaturalStep { text } if text.is_empty() => line(out, depth, "DO:"),
        StmtKind::NaturalStep { text } => line(out, depth, &format!("DO: {text}")),
    }
}

pub fn quote_string(value: &str) -> String {
    let mut out = String::with_capacity(value.len() + 2);
    out.push('"');
    for c in value.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn print_expr(expr: &Expr) -> String {
    match &expr.kind {
        ExprKind::IntLit { value } => value.to_string(),
        ExprKind::FloatLit { value } => format_float(*value),
        ExprKind::StringLit { value } => quote_string(value),
        ExprKind::BoolLit { value } => if *value { "TRUE" } else { "FALSE" }.to_string(),
        ExprKind::ListLit { items } => format!("[{}]", join(items)),
        ExprKind::Var { name } => name.clone(),
        ExprKind::Index { base, index } => {
            format!("{}[{}]", operand(base, POSTFIX_PRECEDENCE), print_expr(index))
        }
        ExprKind::Unary { op: UnaryOp::Neg, operand: inner } => {
            format!("-{}", operand(inner, NEG_PRECEDENCE))
        }
        ExprKind::Unary { op: UnaryOp::Not, operand: inner } => {
            format!("NOT {}", operand(inner, NOT_PRECEDENCE))
        }
        ExprKind::Binary { op, lhs, rhs } => {
            let prec = op.precedence();
            // left-associative: the right operand needs strictly tighter binding
            format!("{} {} {}", operand(lhs, prec), op.symbol(), operand(rhs, prec + 1))
        }
        ExprKind::Call { name, args } => format!("{name}({})", join(args)),
    }
}

fn join(items: &[Expr]) -> String {
    items.iter().map(print_expr).collect::<Vec<_>>().join(", ")
}

fn operand(expr: &Expr, min_precedence: u8) -> String {
    let text = print_expr(expr);
    if expr.precedence() < min_precedence {
        format!("({text})")
    } else {
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parser::{parse, parse_expr};

    const ADD: &str = "FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n";

    #[test]
    fn add_prints_canonically() {
        assert_eq!(pretty_print(&parse(ADD).unwrap()), ADD);
    }

    #[test]
    fn sloppy_layout_is_normalized() {
        let src = "FUNCTION add(a,b)\n  RETURN a+b\n      END FUNCTION";
        assert_eq!(pretty_print(&parse(src).unwrap()), ADD);
    }

    #[test]
    fn parentheses_follow_precedence() {
        for (input, expected) in [
            ("(a + b) * c", "(a + b) * c"),
            ("a + (b * c)", "a + b * c"),
            ("a - (b - c)", "a - (b - c)"),
            ("(a - b) - c", "a - b - c"),
            ("NOT (a AND b)", "NOT (a AND b)"),
            ("NOT a = b", "NOT a == b"),
            ("a == (NOT b)", "a == (NOT b)"),
            ("-(a + 1)", "-(a + 1)"),
            ("- -a", "--a"),
            ("(xs + ys)[0]", "(xs + ys)[0]"),
            ("a ≤ b", "a <= b"),
            ("x MOD (y MOD z)", "x MOD (y MOD z)"),
        ] {
            let expr = parse_expr(input).unwrap();
            let printed = print_expr(&expr);
            assert_eq!(printed, expected, "{input}");
            let mut reparsed = parse_expr(&printed).unwrap();
            let mut original = expr.clone();
            // compare structure through a throwaway program
            let wrap = |e: &mut Expr| {
                UniCodeAst {
                    leading_comments: vec![],
                    functions: vec![FunctionDecl {
                        name: "f".into(),
                        params: vec![],
                        body: vec![Stmt::new(StmtKind::Return { value: Some(e.clone()) })],
                        doc_comment: None,
                        span: Default::default(),
                    }],
                }
                .canonical()
            };
            assert_eq!(wrap(&mut reparsed), wrap(&mut original), "{input}");
        }
    }

    #[test]
    fn step_one_is_omitted() {
        let src = "FUNCTION f(n)\n    FOR i FROM 1 TO n STEP 1 DO\n        OUTPUT i\n    END FOR\n    FOR j FROM n TO 1 STEP -1 DO\n        OUTPUT j\n    END FOR\nEND FUNCTION\n";
        let printed = pretty_print(&parse(src).unwrap());
        assert!(printed.contains("FOR i FROM 1 TO n DO\n"));
        assert!(printed.contains("FOR j FROM n TO 1 STEP -1 DO\n"));
    }

    #[test]
    fn printing_is_deterministic() {
        let ast = parse(ADD).unwrap();
        assert_eq!(pretty_print(&ast).as_bytes(), pretty_print(&ast.clone()).as_bytes());
    }
}
