//! Style and structure checks, one rule family per principle of the
//! universal-code definition.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::ast::*;
use super::builtins::is_builtin;
use super::diagnostic::Diagnostic;
use super::printer::INDENT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Principle {
    #[serde(rename = "R1")]
    Comments,
    #[serde(rename = "R2")]
    Variables,
    #[serde(rename = "R3")]
    InputOutput,
    #[serde(rename = "R4")]
    Conditionals,
    #[serde(rename = "R5")]
    Loops,
    #[serde(rename = "R6")]
    Functions,
    #[serde(rename = "R7")]
    Formatting,
}

impl Principle {
    pub const ALL: [Principle; 7] = [
        Principle::Comments,
        Principle::Variables,
        Principle::InputOutput,
        Principle::Conditionals,
        Principle::Loops,
        Principle::Functions,
        Principle::Formatting,
    ];

    /// Prefix shared by every rule id of this family.
    pub fn rule_prefix(self) -> &'static str {
        match self {
            Principle::Comments => "R1",
            Principle::Variables => "R2",
            Principle::InputOutput => "R3",
            Principle::Conditionals => "R4",
            Principle::Loops => "R5",
            Principle::Functions => "R6",
            Principle::Formatting => "R7",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Principle::Comments => "comments",
            Principle::Variables => "variables",
            Principle::InputOutput => "input-output",
            Principle::Conditionals => "conditionals",
            Principle::Loops => "loops",
            Principle::Functions => "functions",
            Principle::Formatting => "formatting",
        }
    }

    pub fn of_rule(rule_id: &str) -> Option<Principle> {
        Principle::ALL.into_iter().find(|p| rule_id.split('.').next() == Some(p.rule_prefix()))
    }
}

/// Which rule families are active.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub name: String,
    pub active: BTreeSet<Principle>,
}

impl Default for Profile {
    fn default() -> Self {
        Profile::all()
    }
}

impl Profile {
    pub fn all() -> Self {
        Profile { name: "all".into(), active: Principle::ALL.into_iter().collect() }
    }

    /// Resolves `all`, `structure`, `style`, `none`, or a comma list such as `R1,R5`.
    pub fn named(name: &str) -> Option<Self> {
        use Principle::*;
        let active: BTreeSet<Principle> = match name {
            "all" => Principle::ALL.into_iter().collect(),
            "structure" => [InputOutput, Conditionals, Loops, Functions].into_iter().collect(),
            "style" => [Comments, Variables, Formatting].into_iter().collect(),
            "none" => BTreeSet::new(),
            list => {
                let mut set = BTreeSet::new();
                for part in list.split(',').map(str::trim) {
                    set.insert(Principle::ALL.into_iter().find(|p| p.rule_prefix().eq_ignore_ascii_case(part))?);
                }
                set
            }
        };
        Some(Profile { name: name.to_string(), active })
    }

    pub fn is_active(&self, principle: Principle) -> bool {
        self.active.contains(&principle)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub profile: String,
    pub diagnostics: Vec<Diagnostic>,
    /// `true` = pass. Inactive principles pass trivially.
    pub principle_scores: BTreeMap<Principle, bool>,
}

impl ValidationReport {
    pub fn passes(&self, principle: Principle) -> bool {
        self.principle_scores.get(&principle).copied().unwrap_or(true)
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }

    pub fn failing(&self) -> Vec<Principle> {
        self.principle_scores.iter().filter(|(_, ok)| !**ok).map(|(p, _)| *p).collect()
    }
}

/// Call names that perform reads or writes and should be INPUT/OUTPUT.
const IO_CALLS: &[&str] = &[
    "print", "println", "printf", "puts", "write", "writeln", "display", "echo", "show", "read", "readline",
    "read_line", "scan", "scanf", "gets", "input", "output", "prompt",
];

pub fn validate(ast: &UniCodeAst, profile: &Profile) -> ValidationReport {
    let mut diagnostics = Vec::new();
    let declared: HashSet<&str> = ast.functions.iter().map(|f| f.name.as_str()).collect();
    let snake = Regex::new(r"^[a-z][a-z0-9]*(_[a-z0-9]+)*$").unwrap();

    for function in &ast.functions {
        if profile.is_active(Principle::Comments) {
            let mut has_comment = false;
            function.walk(&mut |s| has_comment |= s.is_comment());
            if function.doc_comment.is_none() && !has_comment {
                diagnostics.push(Diagnostic::warning(
                    "R1.missing-comments",
                    format!("function `{}` has no doc comment and no explanatory comment", function.name),
                    function.span,
                ));
            }
        }
        if profile.is_active(Principle::Variables) {
            check_short_names(function, &mut diagnostics);
        }
        if profile.is_active(Principle::InputOutput) {
            function.walk(&mut |stmt| {
                for expr in stmt.exprs() {
                    expr.walk(&mut |e| {
                        if let ExprKind::Call { name, .. } = &e.kind {
                            let lower = name.to_ascii_lowercase();
                            if !is_builtin(name) && !declared.contains(name.as_str()) && IO_CALLS.contains(&lower.as_str()) {
                                diagnostics.push(Diagnostic::error(
                                    "R3.io-call",
                                    format!("`{name}(...)` performs I/O; use INPUT or OUTPUT statements"),
                                    e.span,
                                ));
                            }
                        }
                    });
                }
            });
        }
        if profile.is_active(Principle::Conditionals) {
            function.walk(&mut |stmt| {
                if let StmtKind::If { else_body: Some(body), .. } = &stmt.kind {
                    if body.iter().all(Stmt::is_comment) {
                        diagnostics.push(Diagnostic::warning(
                            "R4.empty-else",
                            "ELSE arm has no executable statement",
                            stmt.span,
                        ));
                    }
                }
            });
        }
        if profile.is_active(Principle::Loops) {
            function.walk(&mut |stmt| {
                if let StmtKind::ForRange { from, to, step, .. } = &stmt.kind {
                    if let (Some(from), Some(to), Some(step)) = (from.const_int(), to.const_int(), step.const_int()) {
                        let never = (step > 0 && from > to) || (step < 0 && from < to);
                        if never || step == 0 {
                            let reason = if step == 0 { "has a zero step" } else { "never executes" };
                            diagnostics.push(Diagnostic::warning(
                                "R5.loop-never-runs",
                                format!("loop from {from} to {to} with step {step} {reason}"),
                                stmt.span,
                            ));
                        }
                    }
                }
            });
        }
        if profile.is_active(Principle::Functions) && !snake.is_match(&function.name) {
            diagnostics.push(Diagnostic::warning(
                "R6.function-name",
                format!("function name `{}` is not lower_snake_case", function.name),
                function.span,
            ));
        }
        if profile.is_active(Principle::Formatting) {
            check_layout(function, &mut diagnostics);
        }
    }

    let mut principle_scores = BTreeMap::new();
    for principle in Principle::ALL {
        let failed = diagnostics.iter().any(|d| Principle::of_rule(&d.rule_id) == Some(principle));
        principle_scores.insert(principle, !failed);
    }
    ValidationReport { profile: profile.name.clone(), diagnostics, principle_scores }
}

fn check_short_names(function: &FunctionDecl, diagnostics: &mut Vec<Diagnostic>) {
    let mut reported = HashSet::new();
    function.walk(&mut |stmt| {
        let target = match &stmt.kind {
            StmtKind::Assign { target, .. } | StmtKind::Input { target } => target,
            _ => return,
        };
        let is_param = function.params.contains(&target.name);
        if target.name.chars().count() == 1 && !is_param && reported.insert(target.name.clone()) {
            diagnostics.push(Diagnostic::warning(
                "R2.short-variable",
                format!("variable `{}` has a single-letter name; describe its purpose", target.name),
                target.span,
            ));
        }
    });
}

fn check_layout(function: &FunctionDecl, diagnostics: &mut Vec<Diagnostic>) {
    if function.span.start_col != 1 {
        diagnostics.push(Diagnostic::warning(
            "R7.indentation",
            format!("function `{}` should start in column 1", function.name),
            function.span,
        ));
    }
    fn visit(body: &[Stmt], depth: usize, diagnostics: &mut Vec<Diagnostic>) {
        let expected = (depth * INDENT.len() + 1) as u32;
        for stmt in body {
            if stmt.span.start_col != expected {
                diagnostics.push(Diagnostic::warning(
                    "R7.indentation",
                    format!("statement starts in column {}, expected {expected}", stmt.span.start_col),
                    stmt.span,
                ));
            }
            for nested in stmt.bodies() {
                visit(nested, depth + 1, diagnostics);
            }
        }
    }
    visit(&function.body, 1, diagnostics);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parser::parse;

    fn report(src: &str) -> ValidationReport {
        validate(&parse(src).unwrap(), &Profile::all())
    }

    #[test]
    fn documented_add_passes_everything() {
        let r = report("// Sum of two numbers.\nFUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n");
        assert!(r.diagnostics.is_empty(), "{:?}", r.diagnostics);
        assert!(Principle::ALL.iter().all(|p| r.passes(*p)));
    }

    #[test]
    fn short_accumulator_is_flagged_at_its_span() {
        let src = "// Totals a list.\nFUNCTION total(values)\n    SET q TO 0\n    FOR EACH v IN values DO\n        SET q TO q + v\n    END FOR\n    RETURN q\nEND FUNCTION\n";
        let r = report(src);
        assert_eq!(r.failing(), vec![Principle::Variables]);
        let d = &r.diagnostics[0];
        assert_eq!(d.rule_id, "R2.short-variable");
        assert_eq!((d.span.start_line, d.span.start_col), (3, 9));
        assert_eq!(r.diagnostics.len(), 1, "reported once per name");
    }

    #[test]
    fn descending_loop_with_default_step() {
        let src = "// Counts down wrongly.\nFUNCTION countdown()\n    FOR i FROM 5 TO 1 DO\n        OUTPUT i\n    END FOR\nEND FUNCTION\n";
        let r = report(src);
        assert_eq!(r.failing(), vec![Principle::Loops]);
        assert!(r.diagnostics[0].message.contains("never executes"));
    }

    #[test]
    fn profile_disables_families() {
        let src = "FUNCTION BadName(x)\n    RETURN x\nEND FUNCTION\n";
        let all = report(src);
        assert_eq!(all.failing(), vec![Principle::Comments, Principle::Functions]);
        let structure = validate(&parse(src).unwrap(), &Profile::named("structure").unwrap());
        assert_eq!(structure.failing(), vec![Principle::Functions]);
        let only_r1 = validate(&parse(src).unwrap(), &Profile::named("R1").unwrap());
        assert_eq!(only_r1.failing(), vec![Principle::Comments]);
        assert!(Profile::named("R9").is_none());
    }

    #[test]
    fn validator_is_deterministic() {
        let src = "FUNCTION f(x)\n  SET y TO PRINT(x)\n  RETURN y\nEND FUNCTION\n";
        let ast = parse(src).unwrap();
        assert_eq!(validate(&ast, &Profile::all()), validate(&ast, &Profile::all()));
    }
}
