use serde::{Deserialize, Serialize};

use super::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub rule_id: String,
    pub message: String,
    pub span: SourceSpan,
}

impl Diagnostic {
    pub fn error(rule_id: &str, message: impl Into<String>, span: SourceSpan) -> Self {
        debug_assert!(rule_is_registered(rule_id), "unregistered rule {rule_id}");
        Diagnostic { severity: Severity::Error, rule_id: rule_id.to_string(), message: message.into(), span }
    }

    pub fn warning(rule_id: &str, message: impl Into<String>, span: SourceSpan) -> Self {
        debug_assert!(rule_is_registered(rule_id), "unregistered rule {rule_id}");
        Diagnostic { severity: Severity::Warning, rule_id: rule_id.to_string(), message: message.into(), span }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}: {severity}[{}]: {}", self.span, self.rule_id, self.message)
    }
}

/// Every rule id a diagnostic may carry, with a one-line description.
///
/// `L*` lexer, `P*` parser, `R1`..`R7` validator principles.
pub const RULE_REGISTRY: &[(&str, &str)] = &[
    ("L001.unexpected-char", "character that starts no token"),
    ("L002.unterminated-string", "string literal not closed before end of line"),
    ("L003.bad-escape", "unknown escape sequence in string literal"),
    ("L004.inconsistent-dedent", "dedent to a column that matches no enclosing block"),
    ("L005.bad-number", "numeric literal out of range"),
    ("P001.syntax", "token sequence not accepted by the grammar"),
    ("P002.duplicate-function", "two functions with the same name"),
    ("P003.duplicate-parameter", "parameter listed twice"),
    ("P004.empty-block", "block statement with an empty body"),
    ("P005.empty-program", "program without any function"),
    ("R1.missing-comments", "function has neither a doc comment nor any comment"),
    ("R2.short-variable", "single-letter variable outside a loop counter"),
    ("R3.io-call", "reads or writes through a call instead of INPUT/OUTPUT"),
    ("R4.empty-else", "ELSE arm without executable statements"),
    ("R5.loop-never-runs", "counted loop whose constant bounds admit no iteration"),
    ("R6.function-name", "function name is not lower_snake_case"),
    ("R7.indentation", "statement indentation differs from the canonical layout"),
];

pub fn rule_is_registered(rule_id: &str) -> bool {
    RULE_REGISTRY.iter().any(|(id, _)| *id == rule_id)
}
