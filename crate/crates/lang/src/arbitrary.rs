//! proptest strategies producing valid UniCode syntax trees.

use proptest::collection::vec;
use proptest::option;
use proptest::prelude::*;

use crate::lang::ast::*;
use crate::lang::builtins::BUILTINS;

pub fn identifier() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,6}"
}

fn line_text() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 ,.;:'\"/()-]{0,24}".prop_map(|s| s.trim().to_string())
}

fn string_value() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 \"\\\\\n\t\r,.!é漢]{0,10}"
}

fn float_value() -> impl Strategy<Value = f64> {
    prop_oneof![
        (0u32..10_000).prop_map(|n| n as f64 / 8.0),
        any::<f64>().prop_filter("finite, non-negative", |v| v.is_finite() && v.is_sign_positive()),
    ]
}

pub fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..=i64::MAX).prop_map(|value| Expr::new(ExprKind::IntLit { value })),
        float_value().prop_map(|value| Expr::new(ExprKind::FloatLit { value })),
        string_value().prop_map(|value| Expr::new(ExprKind::StringLit { value })),
        any::<bool>().prop_map(|value| Expr::new(ExprKind::BoolLit { value })),
        identifier().prop_map(|name| Expr::new(ExprKind::Var { name })),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        let binary_ops = prop_oneof![
            Just(BinaryOp::Add),
            Just(BinaryOp::Sub),
            Just(BinaryOp::Mul),
            Just(BinaryOp::Div),
            Just(BinaryOp::Mod),
            Just(BinaryOp::Eq),
            Just(BinaryOp::Ne),
            Just(BinaryOp::Lt),
            Just(BinaryOp::Le),
            Just(BinaryOp::Gt),
            Just(BinaryOp::Ge),
            Just(BinaryOp::And),
            Just(BinaryOp::Or),
        ];
        let call_name = prop_oneof![
            identifier(),
            (0..BUILTINS.len()).prop_map(|i| BUILTINS[i].name.to_string()),
        ];
        prop_oneof![
            vec(inner.clone(), 0..3).prop_map(|items| Expr::new(ExprKind::ListLit { items })),
            (inner.clone(), inner.clone()).prop_map(|(base, index)| Expr::new(ExprKind::Index {
                base: Box::new(base),
                index: Box::new(index)
            })),
            (prop_oneof![Just(UnaryOp::Neg), Just(UnaryOp::Not)], inner.clone())
                .prop_map(|(op, operand)| Expr::new(ExprKind::Unary { op, operand: Box::new(operand) })),
            (binary_ops, inner.clone(), inner.clone()).prop_map(|(op, lhs, rhs)| Expr::binary(op, lhs, rhs)),
            (call_name, vec(inner, 0..3)).prop_map(|(name, args)| Expr::new(ExprKind::Call { name, args })),
        ]
    })
}

fn call() -> impl Strategy<Value = Expr> {
    (identifier(), vec(expr(), 0..3)).prop_map(|(name, args)| Expr::new(ExprKind::Call { name, args }))
}

fn target() -> impl Strategy<Value = Target> {
    (identifier(), vec(expr(), 0..2)).prop_map(|(name, indices)| Target { indices, ..Target::var(&name) })
}

fn simple_stmt() -> impl Strategy<Value = Stmt> {
    prop_oneof![
        (target(), expr()).prop_map(|(target, value)| StmtKind::Assign { target, value }),
        option::of(expr()).prop_map(|value| StmtKind::Return { value }),
        target().prop_map(|target| StmtKind::Input { target }),
        expr().prop_map(|value| StmtKind::Output { value }),
        call().prop_map(|call| StmtKind::ExprStmt { call }),
        line_text().prop_map(|text| StmtKind::Comment { text }),
        line_text().prop_map(|text| StmtKind::NaturalStep { text }),
    ]
    .prop_map(Stmt::new)
}

pub fn stmt() -> impl Strategy<Value = Stmt> {
    simple_stmt().prop_recursive(3, 16, 3, |inner| {
        let body = vec(inner, 1..3);
        prop_oneof![
            (
                expr(),
                body.clone(),
                vec((expr(), body.clone()), 0..2),
                option::of(body.clone())
            )
                .prop_map(|(cond, then_body, arms, else_body)| StmtKind::If {
                    cond,
                    then_body,
                    elif_arms: arms.into_iter().map(|(cond, body)| ElifArm { cond, body }).collect(),
                    else_body,
                }),
            (expr(), body.clone()).prop_map(|(cond, body)| StmtKind::While { cond, body }),
            (identifier(), expr(), expr(), expr(), body.clone())
                .prop_map(|(var, from, to, step, body)| StmtKind::ForRange { var, from, to, step, body }),
            (identifier(), expr(), body)
                .prop_map(|(var, iterable, body)| StmtKind::ForEach { var, iterable, body }),
        ]
        .prop_map(Stmt::new)
    })
}

fn doc_comment() -> impl Strategy<Value = Option<String>> {
    option::of(vec(line_text(), 1..3).prop_map(|lines| lines.join("\n")))
}

pub fn program() -> impl Strategy<Value = UniCodeAst> {
    let function = (identifier(), vec(identifier(), 0..4), vec(stmt(), 1..4), doc_comment());
    (vec(line_text(), 0..2), vec(function, 1..4)).prop_map(|(leading_comments, functions)| {
        let mut names = std::collections::HashSet::new();
        let functions = functions
            .into_iter()
            .enumerate()
            .map(|(i, (name, params, body, doc_comment))| {
                let name = if names.insert(name.clone()) { name } else { format!("{name}_{i}") };
                names.insert(name.clone());
                let mut seen = std::collections::HashSet::new();
                let params = params.into_iter().filter(|p| seen.insert(p.clone())).collect();
                FunctionDecl { name, params, body, doc_comment, span: Default::default() }
            })
            .collect();
        UniCodeAst { leading_comments, functions }
    })
}

/// Identifiers for executable-subset programs: never `uc_`-prefixed, never
/// equal to a generated function name, and sometimes a word a target
/// reserves so that mangling gets exercised.
pub fn subset_identifier() -> BoxedStrategy<String> {
    prop_oneof![
        4 => "[a-z][a-z0-9]{0,5}",
        1 => prop::sample::select(vec!["len", "list", "print", "range", "max", "int", "str", "class", "let", "new", "func", "self"])
            .prop_map(str::to_string),
    ]
    .boxed()
}

type Signatures = std::sync::Arc<Vec<(String, usize)>>;

fn call_with_arity(name: String, arity: usize, arg: BoxedStrategy<Expr>) -> BoxedStrategy<Expr> {
    vec(arg, arity).prop_map(move |args| Expr::new(ExprKind::Call { name: name.clone(), args })).boxed()
}

/// Builtin or user call with the right number of arguments.
fn subset_call(functions: Signatures, arg: BoxedStrategy<Expr>) -> BoxedStrategy<Expr> {
    let builtin = (0..BUILTINS.len())
        .prop_flat_map({
            let arg = arg.clone();
            move |i| call_with_arity(BUILTINS[i].name.to_string(), BUILTINS[i].arity, arg.clone())
        })
        .boxed();
    let user = (0..functions.len())
        .prop_flat_map(move |i| call_with_arity(functions[i].0.clone(), functions[i].1, arg.clone()))
        .boxed();
    prop_oneof![builtin, user].boxed()
}

fn subset_expr(functions: Signatures) -> BoxedStrategy<Expr> {
    let leaf = prop_oneof![
        (0i64..=i64::MAX).prop_map(|value| Expr::new(ExprKind::IntLit { value })),
        float_value().prop_map(|value| Expr::new(ExprKind::FloatLit { value })),
        string_value().prop_map(|value| Expr::new(ExprKind::StringLit { value })),
        any::<bool>().prop_map(|value| Expr::new(ExprKind::BoolLit { value })),
        subset_identifier().prop_map(|name| Expr::new(ExprKind::Var { name })),
    ];
    leaf.prop_recursive(4, 24, 3, move |inner| {
        let inner = inner.boxed();
        let binary_ops = prop::sample::select(vec![
            BinaryOp::Add,
            BinaryOp::Sub,
            BinaryOp::Mul,
            BinaryOp::Div,
            BinaryOp::Mod,
            BinaryOp::Eq,
            BinaryOp::Ne,
            BinaryOp::Lt,
            BinaryOp::Le,
            BinaryOp::Gt,
            BinaryOp::Ge,
            BinaryOp::And,
            BinaryOp::Or,
        ]);
        prop_oneof![
            vec(inner.clone(), 0..3).prop_map(|items| Expr::new(ExprKind::ListLit { items })),
            (inner.clone(), inner.clone()).prop_map(|(base, index)| Expr::new(ExprKind::Index {
                base: Box::new(base),
                index: Box::new(index)
            })),
            (prop_oneof![Just(UnaryOp::Neg), Just(UnaryOp::Not)], inner.clone())
                .prop_map(|(op, operand)| Expr::new(ExprKind::Unary { op, operand: Box::new(operand) })),
            (binary_ops, inner.clone(), inner.clone()).prop_map(|(op, lhs, rhs)| Expr::binary(op, lhs, rhs)),
            subset_call(functions.clone(), inner),
        ]
    })
    .boxed()
}

fn subset_stmt(functions: Signatures) -> BoxedStrategy<Stmt> {
    let e = subset_expr(functions.clone());
    let target = (subset_identifier(), vec(e.clone(), 0..2))
        .prop_map(|(name, indices)| Target { indices, ..Target::var(&name) });
    let simple = prop_oneof![
        (target.clone(), e.clone()).prop_map(|(target, value)| StmtKind::Assign { target, value }),
        option::of(e.clone()).prop_map(|value| StmtKind::Return { value }),
        target.prop_map(|target| StmtKind::Input { target }),
        e.clone().prop_map(|value| StmtKind::Output { value }),
        subset_call(functions, e.clone()).prop_map(|call| StmtKind::ExprStmt { call }),
        line_text().prop_map(|text| StmtKind::Comment { text }),
    ]
    .prop_map(Stmt::new);
    simple
        .prop_recursive(3, 16, 3, move |inner| {
            let body = vec(inner, 1..3);
            prop_oneof![
                (e.clone(), body.clone(), vec((e.clone(), body.clone()), 0..2), option::of(body.clone())).prop_map(
                    |(cond, then_body, arms, else_body)| StmtKind::If {
                        cond,
                        then_body,
                        elif_arms: arms.into_iter().map(|(cond, body)| ElifArm { cond, body }).collect(),
                        else_body,
                    }
                ),
                (e.clone(), body.clone()).prop_map(|(cond, body)| StmtKind::While { cond, body }),
                (subset_identifier(), e.clone(), e.clone(), e.clone(), body.clone())
                    .prop_map(|(var, from, to, step, body)| StmtKind::ForRange { var, from, to, step, body }),
                (subset_identifier(), e.clone(), body)
                    .prop_map(|(var, iterable, body)| StmtKind::ForEach { var, iterable, body }),
            ]
            .prop_map(Stmt::new)
        })
        .boxed()
}

/// Programs inside the executable subset: no natural-language steps, calls
/// only to builtins or declared functions with matching arity, and no
/// variable sharing a function's name.
pub fn subset_program() -> impl Strategy<Value = UniCodeAst> {
    vec(vec(subset_identifier(), 0..4), 1..4).prop_flat_map(|param_lists| {
        let params: Vec<Vec<String>> = param_lists
            .into_iter()
            .map(|ps| {
                let mut seen = std::collections::HashSet::new();
                ps.into_iter().filter(|p| seen.insert(p.clone())).collect()
            })
            .collect();
        let signatures: Signatures =
            std::sync::Arc::new(params.iter().enumerate().map(|(i, ps)| (format!("fn_{i}"), ps.len())).collect());
        let bodies = vec(vec(subset_stmt(signatures.clone()), 1..4), params.len());
        (vec(line_text(), 0..2), bodies, vec(doc_comment(), params.len())).prop_map(move |(leading_comments, bodies, docs)| {
            let functions = bodies
                .into_iter()
                .zip(docs)
                .enumerate()
                .map(|(i, (body, doc_comment))| FunctionDecl {
                    name: format!("fn_{i}"),
                    params: params[i].clone(),
                    body,
                    doc_comment,
                    span: Default::default(),
                })
                .collect();
            UniCodeAst { leading_comments, functions }
        })
    })
}
