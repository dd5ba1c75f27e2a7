//! Mechanical translation of executable UniCode into six target languages.
//!
//! Python and JavaScript values map onto the host language directly (with
//! BigInt integers in JavaScript). C++, Rust, Go and Java get a small
//! tagged-value runtime emitted in front of the translated functions.

mod names;
mod python;
mod tagged;
mod toolchain;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lang::ast::*;
use crate::lang::builtins::{builtin, BUILTINS};
use crate::lang::span::SourceSpan;

pub use names::{is_reserved, mangle, unmangle, RESERVED_PREFIX};
pub use python::{quote as python_quote, RUNTIME_BEGIN, RUNTIME_END};
pub use toolchain::{ToolchainDescriptor, Toolchains};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetLanguage {
    Python,
    Javascript,
    Cpp,
    Go,
    RustT,
    Java,
}

impl TargetLanguage {
    pub const ALL: [TargetLanguage; 6] = [
        TargetLanguage::Python,
        TargetLanguage::Javascript,
        TargetLanguage::Cpp,
        TargetLanguage::Go,
        TargetLanguage::RustT,
        TargetLanguage::Java,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TargetLanguage::Python => "python",
            TargetLanguage::Javascript => "javascript",
            TargetLanguage::Cpp => "cpp",
            TargetLanguage::Go => "go",
            TargetLanguage::RustT => "rust_t",
            TargetLanguage::Java => "java",
        }
    }

    /// Name as people write it, for prompts.
    pub fn display_name(self) -> &'static str {
        match self {
            TargetLanguage::Python => "Python",
            TargetLanguage::Javascript => "JavaScript",
            TargetLanguage::Cpp => "C++",
            TargetLanguage::Go => "Go",
            TargetLanguage::RustT => "Rust",
            TargetLanguage::Java => "Java",
        }
    }

    /// Accepts the canonical names plus common aliases (`js`, `c++`, `rust`).
    pub fn parse(name: &str) -> Option<TargetLanguage> {
        match name.to_ascii_lowercase().as_str() {
            "python" | "py" | "python3" => Some(TargetLanguage::Python),
            "javascript" | "js" | "node" => Some(TargetLanguage::Javascript),
            "cpp" | "c++" | "cxx" => Some(TargetLanguage::Cpp),
            "go" | "golang" => Some(TargetLanguage::Go),
            "rust_t" | "rust" | "rs" => Some(TargetLanguage::RustT),
            "java" => Some(TargetLanguage::Java),
            _ => None,
        }
    }

    pub fn is_statically_typed(self) -> bool {
        matches!(self, TargetLanguage::Cpp | TargetLanguage::Go | TargetLanguage::RustT | TargetLanguage::Java)
    }
}

impl fmt::Display for TargetLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DynamicValueMode {
    NativeDynamic,
    #[default]
    TaggedVariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TranspileOptions {
    pub emit_comments: bool,
    pub dynamic_value_mode: DynamicValueMode,
}

impl Default for TranspileOptions {
    fn default() -> Self {
        TranspileOptions { emit_comments: true, dynamic_value_mode: DynamicValueMode::TaggedVariant }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmittedSource {
    pub language: TargetLanguage,
    pub code: String,
    /// Target-side name of the first function.
    pub entry_symbol: String,
}

/// Line in emitted Java where test or driver members are spliced in.
pub const JAVA_TESTS_MARKER: &str = "    // uc-tests";

impl EmittedSource {
    /// The program text with a test harness attached at the place the
    /// target's entry convention expects it.
    pub fn with_tests(&self, tests: &str) -> String {
        attach_tests(self.language, &self.code, tests)
    }
}

/// Joins a program and its test harness: spliced into the class for Java,
/// appended after a blank line otherwise.
pub fn attach_tests(language: TargetLanguage, code: &str, tests: &str) -> String {
    if language == TargetLanguage::Java && code.contains(JAVA_TESTS_MARKER) {
        return code.replacen(JAVA_TESTS_MARKER, tests.trim_end(), 1);
    }
    let mut out = code.to_string();
    if !out.is_empty() && !out.ends_with('\n') {
        out.push('\n');
    }
    out.push('\n');
    out.push_str(tests);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

/// UniCode literal for a JSON number, string, bool or array.
pub fn literal_expr(value: &serde_json::Value) -> Option<Expr> {
    use serde_json::Value;
    let negate = |e: Expr| Expr::new(ExprKind::Unary { op: UnaryOp::Neg, operand: Box::new(e) });
    Some(match value {
        Value::Bool(value) => Expr::new(ExprKind::BoolLit { value: *value }),
        Value::String(value) => Expr::new(ExprKind::StringLit { value: value.clone() }),
        Value::Number(n) => match (n.as_i64(), n.as_f64()) {
            (Some(i), _) if i >= 0 => Expr::int(i),
            (Some(i), _) if i > i64::MIN => negate(Expr::int(-i)),
            (None, Some(f)) if n.is_f64() && f.is_finite() => {
                let literal = Expr::new(ExprKind::FloatLit { value: f.abs() });
                if f.is_sign_negative() { negate(literal) } else { literal }
            }
            _ => return None,
        },
        Value::Array(items) => {
            Expr::new(ExprKind::ListLit { items: items.iter().map(literal_expr).collect::<Option<Vec<_>>>()? })
        }
        Value::Null | Value::Object(_) => return None,
    })
}

/// An expression spelled the way the python target emits it.
pub fn python_expr(e: &Expr) -> String {
    python::expr(e)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetViolation {
    pub span: SourceSpan,
    pub reason: String,
}

impl fmt::Display for SubsetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranspileError {
    #[error("program is outside the executable subset: {}", join(.0))]
    SubsetViolation(Vec<SubsetViolation>),
    #[error("no toolchain descriptor for target `{0}`")]
    UnsupportedTarget(String),
    #[error("{mode:?} values are not available for statically typed target `{target}`")]
    UnsupportedMode { target: TargetLanguage, mode: DynamicValueMode },
}

fn join(violations: &[SubsetViolation]) -> String {
    violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Every reason `transpile` could reject `ast` for, in source order.
pub fn check_executable_subset(ast: &UniCodeAst) -> Result<(), Vec<SubsetViolation>> {
    let mut violations = Vec::new();
    let arities: HashMap<&str, usize> = ast.functions.iter().map(|f| (f.name.as_str(), f.params.len())).collect();
    let reserved = |name: &str, span: SourceSpan| SubsetViolation {
        span,
        reason: format!("identifier `{name}` uses the reserved `{RESERVED_PREFIX}` prefix"),
    };

    for function in &ast.functions {
        if function.name.starts_with(RESERVED_PREFIX) {
            violations.push(reserved(&function.name, function.span));
        }
        let mut reported = HashSet::new();
        let mut check_var = |name: &str, span: SourceSpan, violations: &mut Vec<SubsetViolation>| {
            if !reported.insert(name.to_string()) {
                return;
            }
            if name.starts_with(RESERVED_PREFIX) {
                violations.push(reserved(name, span));
            }
            if arities.contains_key(name) {
                violations.push(SubsetViolation { span, reason: format!("variable `{name}` shadows the function of the same name") });
            }
        };
        for param in &function.params {
            check_var(param, function.span, &mut violations);
        }
        function.walk(&mut |stmt| {
            match &stmt.kind {
                StmtKind::NaturalStep { text } => violations.push(SubsetViolation {
                    span: stmt.span,
                    reason: format!("natural-language step is not executable: `DO: {text}`"),
                }),
                StmtKind::Assign { target, .. } | StmtKind::Input { target } => {
                    check_var(&target.name, target.span, &mut violations)
                }
                StmtKind::ForRange { var, .. } | StmtKind::ForEach { var, .. } => {
                    check_var(var, stmt.span, &mut violations)
                }
                _ => {}
            }
            for expr in stmt.exprs() {
                expr.walk(&mut |e| match &e.kind {
                    ExprKind::Var { name } => check_var(name, e.span, &mut violations),
                    ExprKind::Call { name, args } => {
                        let expected = builtin(name).map(|b| b.arity).or_else(|| arities.get(name.as_str()).copied());
                        match expected {
                            None => violations.push(SubsetViolation {
                                span: e.span,
                                reason: format!("call to undeclared function `{name}`"),
                            }),
                            Some(n) if n != args.len() => violations.push(SubsetViolation {
                                span: e.span,
                                reason: format!("`{name}` takes {n} argument(s) but is given {}", args.len()),
                            }),
                            Some(_) => {}
                        }
                    }
                    _ => {}
                });
            }
        });
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Builtin name to the target expression template. `{N}` is argument N;
/// `{N:p}` and `{N:c}` ask for postfix-operand and comparison-operand
/// parenthesization.
pub fn builtin_mapping(target: TargetLanguage) -> BTreeMap<&'static str, &'static str> {
    let table: &[(&str, &str)] = match target {
        TargetLanguage::Python => python::BUILTIN_TEMPLATES,
        _ => tagged::BUILTIN_TEMPLATES,
    };
    let map: BTreeMap<_, _> = table.iter().copied().collect();
    debug_assert!(BUILTINS.iter().all(|b| map.contains_key(b.name)));
    map
}

pub fn transpile(ast: &UniCodeAst, target: TargetLanguage, opts: &TranspileOptions) -> Result<EmittedSource, TranspileError> {
    transpile_with(ast, target, opts, Toolchains::builtin())
}

/// As [`transpile`], resolving the target against a loaded toolchain config.
pub fn transpile_with(
    ast: &UniCodeAst,
    target: TargetLanguage,
    opts: &TranspileOptions,
    toolchains: &Toolchains,
) -> Result<EmittedSource, TranspileError> {
    emit(ast, target, opts, toolchains, None)
}

/// Call of the entry function with literal arguments, used by [`transpile_driver`].
pub type DriverCase = Vec<Expr>;

/// A runnable program: the translated functions plus a main that prints the
/// display form of `entry(args)` once per case.
pub fn transpile_driver(
    ast: &UniCodeAst,
    target: TargetLanguage,
    opts: &TranspileOptions,
    cases: &[DriverCase],
) -> Result<EmittedSource, TranspileError> {
    emit(ast, target, opts, Toolchains::builtin(), Some(cases))
}

fn emit(
    ast: &UniCodeAst,
    target: TargetLanguage,
    opts: &TranspileOptions,
    toolchains: &Toolchains,
    driver: Option<&[DriverCase]>,
) -> Result<EmittedSource, TranspileError> {
    if toolchains.get(target).is_none() {
        return Err(TranspileError::UnsupportedTarget(target.name().to_string()));
    }
    if target.is_statically_typed() && opts.dynamic_value_mode == DynamicValueMode::NativeDynamic {
        return Err(TranspileError::UnsupportedMode { target, mode: opts.dynamic_value_mode });
    }
    check_executable_subset(ast).map_err(TranspileError::SubsetViolation)?;
    let driver_stmts = driver.map(|cases| driver_body(ast, cases));
    let code = match target {
        TargetLanguage::Python => python::emit(ast, opts, driver_stmts.as_deref()),
        _ => tagged::emit(ast, target, opts, driver_stmts.as_deref()),
    };
    let entry_symbol = mangle(target, &ast.functions[0].name);
    Ok(EmittedSource { language: target, code, entry_symbol })
}

fn driver_body(ast: &UniCodeAst, cases: &[DriverCase]) -> Vec<Stmt> {
    let entry = &ast.functions[0].name;
    cases
        .iter()
        .map(|args| Stmt::new(StmtKind::Output { value: Expr::call(entry, args.clone()) }))
        .collect()
}

/// Variables a function assigns or reads, excluding parameters, in order of
/// first appearance.
pub(crate) fn locals(function: &FunctionDecl) -> Vec<String> {
    let mut seen: HashSet<String> = function.params.iter().cloned().collect();
    let mut out = Vec::new();
    let mut add = |name: &str| {
        if seen.insert(name.to_string()) {
            out.push(name.to_string());
        }
    };
    function.walk(&mut |stmt| {
        match &stmt.kind {
            StmtKind::Assign { target, .. } | StmtKind::Input { target } => add(&target.name),
            StmtKind::ForRange { var, .. } | StmtKind::ForEach { var, .. } => add(var),
            _ => {}
        }
        for expr in stmt.exprs() {
            expr.walk(&mut |e| {
                if let ExprKind::Var { name } = &e.kind {
                    add(name);
                }
            });
        }
    });
    out
}

/// Splits a builtin template into literal text and `(argument, min precedence)` holes.
pub(crate) fn render_template(template: &str, mut arg: impl FnMut(usize, u8) -> String) -> String {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        let Some(close) = rest[open..].find('}').map(|c| open + c) else { break };
        let hole = &rest[open + 1..close];
        let (index, modifier) = hole.split_once(':').unwrap_or((hole, ""));
        match index.parse::<usize>() {
            Ok(index) => {
                out.push_str(&rest[..open]);
                let min_prec = match modifier {
                    "p" => POSTFIX_PRECEDENCE,
                    "c" => 5,
                    _ => 0,
                };
                out.push_str(&arg(index, min_prec));
            }
            Err(_) => out.push_str(&rest[..=close]),
        }
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parser::parse;

    #[test]
    fn add_is_in_the_subset() {
        let ast = parse("FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n").unwrap();
        assert!(check_executable_subset(&ast).is_ok());
    }

    #[test]
    fn natural_step_is_one_violation_at_its_span() {
        let ast = parse("FUNCTION f(xs)\n    DO: sort the list somehow\n    RETURN xs\nEND FUNCTION\n").unwrap();
        let violations = check_executable_subset(&ast).unwrap_err();
        assert_eq!(violations.len(), 1);
        assert_eq!((violations[0].span.start_line, violations[0].span.start_col), (2, 5));
        let err = transpile(&ast, TargetLanguage::Python, &TranspileOptions::default()).unwrap_err();
        assert!(matches!(err, TranspileError::SubsetViolation(v) if v.len() == 1));
    }

    #[test]
    fn undeclared_helper_is_named() {
        let ast = parse("FUNCTION f(x)\n    RETURN helper(x)\nEND FUNCTION\n").unwrap();
        let violations = check_executable_subset(&ast).unwrap_err();
        assert_eq!(violations.len(), 1);
        assert!(violations[0].reason.contains("`helper`"));
    }

    #[test]
    fn arity_reserved_names_and_shadowing() {
        let src = "FUNCTION f(uc_x)\n    SET f TO LENGTH(uc_x, 1)\n    RETURN g(1)\nEND FUNCTION\n\nFUNCTION g(a, b)\n    RETURN a\nEND FUNCTION\n";
        let reasons: Vec<String> =
            check_executable_subset(&parse(src).unwrap()).unwrap_err().into_iter().map(|v| v.reason).collect();
        assert_eq!(reasons.len(), 4, "{reasons:?}");
        assert!(reasons[0].contains("reserved"));
        assert!(reasons.iter().any(|r| r.contains("shadows")));
        assert!(reasons.iter().any(|r| r.contains("`LENGTH` takes 1")));
        assert!(reasons.iter().any(|r| r.contains("`g` takes 2")));
    }

    #[test]
    fn mappings_are_total() {
        for target in TargetLanguage::ALL {
            let map = builtin_mapping(target);
            for b in BUILTINS {
                assert!(map.contains_key(b.name), "{target} lacks {}", b.name);
            }
        }
        assert_eq!(builtin_mapping(TargetLanguage::Python)["LENGTH"], "len({0})");
    }

    #[test]
    fn native_dynamic_is_rejected_for_static_targets() {
        let ast = parse("FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n").unwrap();
        let opts = TranspileOptions { dynamic_value_mode: DynamicValueMode::NativeDynamic, ..Default::default() };
        assert!(transpile(&ast, TargetLanguage::Python, &opts).is_ok());
        assert!(matches!(transpile(&ast, TargetLanguage::Cpp, &opts), Err(TranspileError::UnsupportedMode { .. })));
    }

    #[test]
    fn unknown_toolchain_is_unsupported() {
        let ast = parse("FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n").unwrap();
        let only_python = Toolchains::from_toml_str("[python]\nextension = \"py\"\nrun = [\"python3\", \"{src}\"]\nversion = [\"python3\", \"--version\"]\n").unwrap();
        let opts = TranspileOptions::default();
        assert!(transpile_with(&ast, TargetLanguage::Python, &opts, &only_python).is_ok());
        assert_eq!(
            transpile_with(&ast, TargetLanguage::Go, &opts, &only_python),
            Err(TranspileError::UnsupportedTarget("go".into()))
        );
    }

    #[test]
    fn template_holes() {
        let rendered = render_template("({1:c} in {0})", |i, p| format!("<{i}@{p}>"));
        assert_eq!(rendered, "(<1@5> in <0@0>)");
        assert_eq!(render_template("{}", |_, _| unreachable!()), "{}");
    }

    #[test]
    fn locals_skip_params_and_keep_order() {
        let ast = parse("FUNCTION f(a)\n    SET b TO a + c\n    FOR i FROM 1 TO 3 DO\n        SET b TO b + i\n    END FOR\n    RETURN b\nEND FUNCTION\n").unwrap();
        assert_eq!(locals(&ast.functions[0]), vec!["b", "c", "i"]);
    }

    #[test]
    fn target_names_round_trip() {
        for target in TargetLanguage::ALL {
            assert_eq!(TargetLanguage::parse(target.name()), Some(target));
            let json = serde_json::to_string(&target).unwrap();
            assert_eq!(json, format!("\"{}\"", target.name()));
        }
    }
}
