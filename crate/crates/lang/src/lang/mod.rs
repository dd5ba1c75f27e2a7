//! The UniCode language: tokens, syntax tree, parser, canonical printer and
//! validator.

pub mod ast;
pub mod builtins;
pub mod diagnostic;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod span;
pub mod validate;

pub use ast::*;
pub use diagnostic::{Diagnostic, Severity, RULE_REGISTRY};
pub use lexer::{reconstruct, tokenize, tokenize_with, LexOptions, Token, TokenKind};
pub use parser::{parse, parse_expr, parse_with};
pub use printer::{pretty_print, print_expr};
pub use span::SourceSpan;
pub use validate::{validate, Principle, Profile, ValidationReport};
