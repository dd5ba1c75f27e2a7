//! Code to UniCode.
//!
//! [`lift`] inverts the transpiler on its own Python output and never calls a
//! model. [`lift_llm`] handles arbitrary code by prompting a [`Generator`].

mod python;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicoder_gateway::{FinishReason, GenerationRequest, Generator};

use crate::lang::ast::UniCodeAst;
use crate::lang::diagnostic::Diagnostic;
use crate::lang::parser::parse;
use crate::lang::printer::pretty_print;
use crate::lang::span::SourceSpan;
use crate::prompts::{first_fenced_block, PromptTemplate, SLOT_ANSWER, SLOT_DEFINITION, SLOT_QUESTION};
use crate::transpile::{check_executable_subset, TargetLanguage};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Deterministic,
    Llm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftResult {
    pub unicode: UniCodeAst,
    /// The program as text: the model's reply for LLM lifts, the canonical
    /// printing otherwise.
    pub text: String,
    pub provenance: Provenance,
    pub source_language: TargetLanguage,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LiftError {
    #[error("{span}: outside the transpiler's emission grammar: {reason}")]
    OutOfSubset { span: SourceSpan, reason: String },
    #[error("deterministic lifting is not available for {0}")]
    UnsupportedLanguage(TargetLanguage),
    #[error("model output did not parse as UniCode: {}", first_message(.diagnostics))]
    ParseFailed { diagnostics: Vec<Diagnostic>, response: String },
    #[error("generation failed: {0}")]
    GenerationFailed(String),
}

fn first_message(diagnostics: &[Diagnostic]) -> String {
    diagnostics.first().map(|d| d.to_string()).unwrap_or_else(|| "no diagnostics".into())
}

/// Recovers the UniCode program from code the transpiler emitted for `lang`.
pub fn lift(source: &str, lang: TargetLanguage) -> Result<LiftResult, LiftError> {
    if lang != TargetLanguage::Python {
        return Err(LiftError::UnsupportedLanguage(lang));
    }
    let unicode = python::lift_python(source)?;
    if let Err(violations) = check_executable_subset(&unicode) {
        let first = &violations[0];
        return Err(LiftError::OutOfSubset { span: first.span, reason: first.reason.clone() });
    }
    let text = pretty_print(&unicode);
    Ok(LiftResult { unicode, text, provenance: Provenance::Deterministic, source_language: lang })
}

pub const LIFT_SYSTEM_TEXT: &str = "You translate source code into UniCode pseudocode.";

/// Inputs for an LLM lift beyond the code itself.
#[derive(Debug, Clone)]
pub struct LiftPrompt<'a> {
    pub question: Option<&'a str>,
    pub definition: &'a str,
    pub template: PromptTemplate,
    /// Audit label passed through to the gateway.
    pub tag: &'a str,
}

impl<'a> LiftPrompt<'a> {
    pub fn new(definition: &'a str) -> Self {
        LiftPrompt { question: None, definition, template: PromptTemplate::lift(), tag: "lift" }
    }

    pub fn render(&self, source: &str, lang: TargetLanguage) -> String {
        let question = self
            .question
            .map(str::to_string)
            .unwrap_or_else(|| format!("Describe what this {lang} code does, as UniCode."));
        self.template.fill(&[(SLOT_DEFINITION, self.definition), (SLOT_QUESTION, &question), (SLOT_ANSWER, source)])
    }
}

/// Lifts arbitrary code through a model with the bundled prompt template.
pub fn lift_llm(
    source: &str,
    lang: TargetLanguage,
    generator: &dyn Generator,
    definition_text: &str,
) -> Result<LiftResult, LiftError> {
    lift_llm_with(source, lang, generator, &LiftPrompt::new(definition_text))
}

/// Two attempts at most: a reply that does not parse is answered once with
/// its diagnostics.
pub fn lift_llm_with(
    source: &str,
    lang: TargetLanguage,
    generator: &dyn Generator,
    prompt: &LiftPrompt<'_>,
) -> Result<LiftResult, LiftError> {
    if prompt.definition.trim().is_empty() {
        return Err(LiftError::GenerationFailed("definition text is empty".into()));
    }
    let first = prompt.render(source, lang);
    let mut user_text = first.clone();
    let mut failure = LiftError::GenerationFailed("no attempt made".into());
    for _ in 0..2 {
        let request = GenerationRequest::new(LIFT_SYSTEM_TEXT, user_text.clone()).with_tag(prompt.tag);
        let response = match generator.generate(&request) {
            Ok(r) if r.finish_reason != FinishReason::Error => r,
            Ok(_) => {
                failure = LiftError::GenerationFailed("empty response".into());
                continue;
            }
            Err(e) => {
                failure = LiftError::GenerationFailed(e.to_string());
                continue;
            }
        };
        let text = first_fenced_block(&response.text).unwrap_or(&response.text);
        match parse(text) {
            Ok(unicode) => {
                let text = text.to_string();
                return Ok(LiftResult { unicode, text, provenance: Provenance::Llm, source_language: lang });
            }
            Err(diagnostics) => {
                user_text = reprompt(&first, &response.text, &diagnostics);
                failure = LiftError::ParseFailed { diagnostics, response: response.text };
            }
        }
    }
    Err(failure)
}

fn reprompt(first: &str, reply: &str, diagnostics: &[Diagnostic]) -> String {
    let mut text = format!("{first}\n\nYour previous reply was:\n\n{reply}\n\nIt does not parse:\n");
    for d in diagnostics {
        text.push_str(&format!("- {d}\n"));
    }
    text.push_str("\nReply again with a corrected UniCode program in a single fenced block.");
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::ast::StmtKind;
    use crate::transpile::{transpile, TranspileOptions};
    use std::sync::Mutex;
    use unicoder_gateway::{GatewayError, GenerationResponse};

    const ADD: &str = "// Adds two numbers.\nFUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n";

    #[test]
    fn add_round_trips() {
        let ast = parse(ADD).unwrap();
        let code = transpile(&ast, TargetLanguage::Python, &TranspileOptions::default()).unwrap().code;
        let lifted = lift(&code, TargetLanguage::Python).unwrap();
        assert_eq!(lifted.provenance, Provenance::Deterministic);
        assert_eq!(lifted.unicode.canonical(), ast.strip_comments().canonical());
    }

    #[test]
    fn only_python_is_lifted_deterministically() {
        assert_eq!(lift("", TargetLanguage::Go), Err(LiftError::UnsupportedLanguage(TargetLanguage::Go)));
    }

    struct Scripted {
        replies: Mutex<Vec<Result<String, GatewayError>>>,
        prompts: Mutex<Vec<String>>,
    }

    impl Scripted {
        fn new(replies: Vec<Result<&str, GatewayError>>) -> Self {
            let replies = replies.into_iter().rev().map(|r| r.map(str::to_string)).collect();
            Scripted { replies: Mutex::new(replies), prompts: Mutex::new(Vec::new()) }
        }
    }

    impl Generator for Scripted {
        fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
            self.prompts.lock().unwrap().push(request.user_text.clone());
            let reply = self.replies.lock().unwrap().pop().expect("unexpected extra request")?;
            Ok(GenerationResponse::new(reply, FinishReason::Stop, "scripted"))
        }
    }

    #[test]
    fn llm_reply_with_natural_steps_is_kept() {
        let g = Scripted::new(vec![Ok("Sure.\n```\nFUNCTION f(xs)\n    DO: sort xs\n    RETURN xs\nEND FUNCTION\n```\n")]);
        let lifted = lift_llm("def f(xs): ...", TargetLanguage::Python, &g, "DEF").unwrap();
        assert_eq!(lifted.provenance, Provenance::Llm);
        assert!(matches!(lifted.unicode.functions[0].body[0].kind, StmtKind::NaturalStep { .. }));
        let prompt = &g.prompts.lock().unwrap()[0];
        assert!(prompt.contains("DEF") && prompt.contains("def f(xs): ..."));
    }

    #[test]
    fn prose_fails_after_one_reprompt() {
        let g = Scripted::new(vec![Ok("I cannot help."), Ok("Still just prose.")]);
        let err = lift_llm("x", TargetLanguage::Python, &g, "DEF").unwrap_err();
        assert!(matches!(err, LiftError::ParseFailed { .. }));
        let prompts = g.prompts.lock().unwrap();
        assert_eq!(prompts.len(), 2);
        assert!(prompts[1].contains("I cannot help.") && prompts[1].contains("does not parse"));
    }

    #[test]
    fn reprompt_can_recover() {
        let g = Scripted::new(vec![Ok("FUNCTION f(\n"), Ok(ADD)]);
        assert!(lift_llm("x", TargetLanguage::Python, &g, "DEF").is_ok());
    }

    #[test]
    fn generator_errors_become_generation_failed() {
        let g = Scripted::new(vec![Err(GatewayError::Timeout), Err(GatewayError::Timeout)]);
        let err = lift_llm("x", TargetLanguage::Python, &g, "DEF").unwrap_err();
        assert!(matches!(err, LiftError::GenerationFailed(_)));
    }
}
