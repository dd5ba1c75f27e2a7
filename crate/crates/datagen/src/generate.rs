//! Triplets from instruction pairs and from raw snippets.

use thiserror::Error;
use unicoder_gateway::{FinishReason, GenerationRequest, Generator};
use unicoder_lang::lift::{lift_llm_with, LiftError, LiftPrompt};
use unicoder_lang::prompts::{first_fenced_block, PromptTemplate, SLOT_LANGUAGE};

use crate::types::{Answer, CodeSnippet, InstructionPair, Origin, Triplet, DEFAULT_TOKEN_CAP};

pub const SNIPPET_TEMPLATE: &str = include_str!("../../../prompts/snippet_qa.txt");
pub const SLOT_CODE: &str = "Code";
pub const SNIPPET_SYSTEM_TEXT: &str = "You write self-contained programming exercises.";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{origin_id}: {reason}")]
    Precondition { origin_id: String, reason: String },
    #[error("{origin_id}: generation failed at the {step} step: {cause}")]
    GenerationFailed { origin_id: String, step: Step, cause: String },
    #[error("{origin_id}: reply has no {section} section")]
    MissingSection { origin_id: String, section: &'static str },
}

impl GenError {
    pub fn origin_id(&self) -> &str {
        match self {
            GenError::Precondition { origin_id, .. }
            | GenError::GenerationFailed { origin_id, .. }
            | GenError::MissingSection { origin_id, .. } => origin_id,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    QuestionAnswer,
    UniCode,
}

impl std::fmt::Display for Step {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Step::QuestionAnswer => "question-answer",
            Step::UniCode => "unicode",
        })
    }
}

/// Prompts and limits for generation. Defaults are the bundled templates.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub lift_template: PromptTemplate,
    pub snippet_template: PromptTemplate,
    pub token_cap: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            lift_template: PromptTemplate::lift(),
            snippet_template: PromptTemplate::new(SNIPPET_TEMPLATE, &[SLOT_LANGUAGE, SLOT_CODE]).expect("bundled template"),
            token_cap: DEFAULT_TOKEN_CAP,
        }
    }
}

fn precondition(origin_id: &str, reason: impl Into<String>) -> GenError {
    GenError::Precondition { origin_id: origin_id.to_string(), reason: reason.into() }
}

/// Fills the lift template with the pair and asks for its UniCode. A reply
/// that never parses still yields a triplet, flagged.
pub fn gen_unicode_for_pair(
    pair: &InstructionPair,
    generator: &dyn Generator,
    definition_text: &str,
    config: &GenConfig,
) -> Result<Triplet, GenError> {
    gen_unicode(pair, Origin::FromPair, generator, definition_text, config)
}

fn gen_unicode(
    pair: &InstructionPair,
    origin: Origin,
    generator: &dyn Generator,
    definition_text: &str,
    config: &GenConfig,
) -> Result<Triplet, GenError> {
    if pair.question.trim().is_empty() {
        return Err(precondition(&pair.origin_id, "question is empty"));
    }
    if pair.answer.code.trim().is_empty() {
        return Err(precondition(&pair.origin_id, "answer code is empty"));
    }
    let prompt = LiftPrompt {
        question: Some(&pair.question),
        definition: definition_text,
        template: config.lift_template.clone(),
        tag: "gen-unicode",
    };
    let base = Triplet {
        origin,
        origin_id: pair.origin_id.clone(),
        language: pair.answer.language,
        question: pair.question.clone(),
        answer: pair.answer.clone(),
        unicode: String::new(),
        unicode_parses: true,
        unicode_diagnostics: Vec::new(),
    };
    match lift_llm_with(&pair.answer.code, pair.answer.language, generator, &prompt) {
        Ok(lifted) => Ok(Triplet { unicode: normalize_block(&lifted.text), ..base }),
        Err(LiftError::ParseFailed { diagnostics, response }) => {
            let text = first_fenced_block(&response).unwrap_or(&response);
            Ok(Triplet {
                unicode: normalize_block(text),
                unicode_parses: false,
                unicode_diagnostics: diagnostics.iter().map(|d| d.to_string()).collect(),
                ..base
            })
        }
        Err(e) => Err(GenError::GenerationFailed {
            origin_id: pair.origin_id.clone(),
            step: Step::UniCode,
            cause: e.to_string(),
        }),
    }
}

/// Trailing newline exactly once, no leading blank lines.
fn normalize_block(text: &str) -> String {
    let mut out = text.trim_start_matches(['\n', '\r']).trim_end().to_string();
    out.push('\n');
    out
}

/// Two steps: a question and answer written from the snippet, then the
/// UniCode for that pair.
pub fn gen_triplet_from_snippet(
    snippet: &CodeSnippet,
    generator: &dyn Generator,
    definition_text: &str,
    config: &GenConfig,
) -> Result<Triplet, GenError> {
    if snippet.code.trim().is_empty() {
        return Err(precondition(&snippet.origin_id, "snippet is empty"));
    }
    let estimate = snippet.token_estimate();
    if estimate > config.token_cap {
        return Err(precondition(
            &snippet.origin_id,
            format!("snippet is about {estimate} tokens, over the cap of {}", config.token_cap),
        ));
    }
    let user_text = config
        .snippet_template
        .fill(&[(SLOT_LANGUAGE, snippet.language.display_name()), (SLOT_CODE, snippet.code.trim_end())]);
    let request = GenerationRequest::new(SNIPPET_SYSTEM_TEXT, user_text).with_tag("gen-qa");
    let failed = |cause: String| GenError::GenerationFailed {
        origin_id: snippet.origin_id.clone(),
        step: Step::QuestionAnswer,
        cause,
    };
    let reply = match generator.generate(&request) {
        Ok(r) if r.finish_reason != FinishReason::Error => r.text,
        Ok(_) => return Err(failed("empty response".into())),
        Err(e) => return Err(failed(e.to_string())),
    };
    let (question, code) = split_question_answer(&reply).map_err(|section| GenError::MissingSection {
        origin_id: snippet.origin_id.clone(),
        section,
    })?;
    let pair = InstructionPair {
        origin_id: snippet.origin_id.clone(),
        question,
        answer: Answer { language: snippet.language, code },
    };
    gen_unicode(&pair, Origin::FromSnippet, generator, definition_text, config)
}

/// Reads the `### Question` and `### Answer` sections of a reply. The
/// answer's code is its first fenced block, or the whole section without
/// one. Names the first section that is missing or empty.
pub fn split_question_answer(reply: &str) -> Result<(String, String), &'static str> {
    let q_start = reply.find("### Question").ok_or("Question")?;
    let after_q = &reply[q_start + "### Question".len()..];
    let a_rel = after_q.find("### Answer");
    let question = after_q[..a_rel.unwrap_or(after_q.len())].trim();
    if question.is_empty() {
        return Err("Question");
    }
    let answer_section = &after_q[a_rel.ok_or("Answer")? + "### Answer".len()..];
    let code = first_fenced_block(answer_section).unwrap_or(answer_section).trim_matches('\n').trim_end();
    if code.trim().is_empty() {
        return Err("Answer");
    }
    Ok((question.to_string(), format!("{code}\n")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use unicoder_lang::transpile::TargetLanguage;
    use std::sync::Mutex;
    use unicoder_gateway::{GatewayError, GenerationResponse};

    struct Scripted(Mutex<Vec<String>>, Mutex<Vec<String>>);

    impl Scripted {
        fn new(replies: &[&str]) -> Self {
            Scripted(Mutex::new(replies.iter().rev().map(|s| s.to_string()).collect()), Mutex::new(Vec::new()))
        }
    }

    impl Generator for Scripted {
        fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
            self.1.lock().unwrap().push(request.user_text.clone());
            let reply = self.0.lock().unwrap().pop().ok_or(GatewayError::Timeout)?;
            Ok(GenerationResponse::new(reply, FinishReason::Stop, "scripted"))
        }
    }

    fn pair(code: &str) -> InstructionPair {
        InstructionPair {
            origin_id: "p1".into(),
            question: "Add two numbers.".into(),
            answer: Answer { language: TargetLanguage::Python, code: code.into() },
        }
    }

    const PLAN: &str = "FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n";

    #[test]
    fn prose_around_the_fence_is_dropped() {
        let g = Scripted::new(&[&format!("Sure! Here it is:\n\n```unicode\n{PLAN}```\nHope this helps.")]);
        let t = gen_unicode_for_pair(&pair("def add(a, b): return a + b"), &g, "DEF", &GenConfig::default()).unwrap();
        assert_eq!(t.unicode, PLAN);
        assert!(t.unicode_parses);
        let prompt = &g.1.lock().unwrap()[0];
        assert!(prompt.contains("DEF") && prompt.contains("Add two numbers.") && prompt.contains("def add"));
    }

    #[test]
    fn unparseable_unicode_is_kept_and_flagged() {
        let g = Scripted::new(&["```\nFUNCTION add(\n```", "```\nFUNCTION add(\n```"]);
        let t = gen_unicode_for_pair(&pair("x"), &g, "DEF", &GenConfig::default()).unwrap();
        assert!(!t.unicode_parses);
        assert_eq!(t.unicode, "FUNCTION add(\n");
        assert!(!t.unicode_diagnostics.is_empty());
    }

    #[test]
    fn empty_answer_is_a_precondition_error() {
        let g = Scripted::new(&[]);
        let err = gen_unicode_for_pair(&pair("  \n"), &g, "DEF", &GenConfig::default()).unwrap_err();
        assert!(matches!(err, GenError::Precondition { .. }));
        assert!(g.1.lock().unwrap().is_empty());
    }

    #[test]
    fn snippet_pipeline_runs_both_steps() {
        let qa = "### Question\nWrite add(a, b).\n\n### Answer\n```python\ndef add(a, b):\n    return a + b\n```\n";
        let g = Scripted::new(&[qa, &format!("```\n{PLAN}```")]);
        let snippet = CodeSnippet { origin_id: "s1".into(), language: TargetLanguage::Python, code: "a + b".into() };
        let t = gen_triplet_from_snippet(&snippet, &g, "DEF", &GenConfig::default()).unwrap();
        assert_eq!(t.origin, Origin::FromSnippet);
        assert_eq!(t.question, "Write add(a, b).");
        assert_eq!(t.answer.code, "def add(a, b):\n    return a + b\n");
        assert_eq!(t.unicode, PLAN);
        assert!(g.1.lock().unwrap()[0].contains("Python"));
    }

    #[test]
    fn missing_sections_are_named() {
        assert_eq!(split_question_answer("just prose"), Err("Question"));
        assert_eq!(split_question_answer("### Question\nDo it.\n"), Err("Answer"));
        assert_eq!(split_question_answer("### Question\n\n### Answer\nx"), Err("Question"));
        assert_eq!(split_question_answer("### Question\nq\n### Answer\n```\n```"), Err("Answer"));
        let g = Scripted::new(&["### Question\nDo it.\n"]);
        let snippet = CodeSnippet { origin_id: "s".into(), language: TargetLanguage::Go, code: "x".into() };
        let err = gen_triplet_from_snippet(&snippet, &g, "DEF", &GenConfig::default()).unwrap_err();
        assert_eq!(err, GenError::MissingSection { origin_id: "s".into(), section: "Answer" });
    }

    #[test]
    fn oversized_snippet_is_refused() {
        let g = Scripted::new(&[]);
        let snippet = CodeSnippet { origin_id: "big".into(), language: TargetLanguage::Python, code: "x ".repeat(800) };
        let err = gen_triplet_from_snippet(&snippet, &g, "DEF", &GenConfig::default()).unwrap_err();
        assert!(matches!(err, GenError::Precondition { .. }), "{err}");
    }

    #[test]
    fn failures_name_their_step() {
        let g = Scripted::new(&[]);
        let snippet = CodeSnippet { origin_id: "s".into(), language: TargetLanguage::Python, code: "x".into() };
        let err = gen_triplet_from_snippet(&snippet, &g, "DEF", &GenConfig::default()).unwrap_err();
        assert!(matches!(err, GenError::GenerationFailed { step: Step::QuestionAnswer, .. }));
        let g = Scripted::new(&["### Question\nq\n### Answer\n```\ncode\n```"]);
        let err = gen_triplet_from_snippet(&snippet, &g, "DEF", &GenConfig::default()).unwrap_err();
        assert!(matches!(err, GenError::GenerationFailed { step: Step::UniCode, .. }));
    }
}
