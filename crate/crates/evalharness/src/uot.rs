//! Two-stage inference: question to UniCode, then question plus UniCode to
//! code.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicoder_gateway::{FinishReason, GenerationRequest, Generator};
use unicoder_lang::prompts::{
    first_fenced_block, PromptTemplate, SLOT_DEFINITION, SLOT_LANGUAGE, SLOT_QUESTION, SLOT_UNICODE,
};
use unicoder_lang::transpile::TargetLanguage;
use unicoder_lang::{parse, Diagnostic};

pub const UOT_SYSTEM_TEXT: &str = "You are a careful programmer. You plan in UniCode before writing code.";

#[derive(Debug, Clone, PartialEq, Error)]
#[error("stage {stage} failed: {cause}")]
pub struct StageFailed {
    pub stage: u8,
    pub cause: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UotOutput {
    pub unicode_text: String,
    pub code: String,
    pub target: TargetLanguage,
    /// Full model replies, kept for audit.
    pub stage1_raw: String,
    pub stage2_raw: String,
}

pub struct UotPrompts {
    pub stage1: PromptTemplate,
    pub stage2: PromptTemplate,
}

impl Default for UotPrompts {
    fn default() -> Self {
        UotPrompts { stage1: PromptTemplate::uot_stage1(), stage2: PromptTemplate::uot_stage2() }
    }
}

fn ask(generator: &dyn Generator, user_text: &str, tag: &str) -> Result<String, String> {
    let request = GenerationRequest::new(UOT_SYSTEM_TEXT, user_text).with_tag(tag);
    match generator.generate(&request) {
        Ok(r) if r.finish_reason != FinishReason::Error => Ok(r.text),
        Ok(_) => Err("empty response".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn fenced_or_whole(text: &str) -> String {
    let body = first_fenced_block(text).unwrap_or(text);
    let mut body = body.trim_matches('\n').to_string();
    body.push('\n');
    body
}

/// Stage 1: a UniCode plan that parses. One retry, which carries the
/// diagnostics of the first reply.
pub fn plan(
    question: &str,
    generator: &dyn Generator,
    definition_text: &str,
    prompts: &UotPrompts,
) -> Result<(String, String), StageFailed> {
    let fail = |cause: String| StageFailed { stage: 1, cause };
    let first = prompts.stage1.fill(&[(SLOT_DEFINITION, definition_text), (SLOT_QUESTION, question)]);
    let mut user_text = first.clone();
    let mut cause = String::new();
    for _ in 0..2 {
        let raw = match ask(generator, &user_text, "uot-stage1") {
            Ok(raw) => raw,
            Err(e) => {
                cause = e;
                continue;
            }
        };
        let text = fenced_or_whole(&raw);
        match parse(&text) {
            Ok(_) => return Ok((text, raw)),
            Err(diagnostics) => {
                cause = format!("UniCode does not parse: {}", diagnostics[0]);
                user_text = retry_prompt(&first, &raw, &diagnostics);
            }
        }
    }
    Err(fail(cause))
}

fn retry_prompt(first: &str, reply: &str, diagnostics: &[Diagnostic]) -> String {
    let mut text = format!("{first}\n\nYour previous reply was:\n\n{reply}\n\nIt does not parse:\n");
    for d in diagnostics {
        text.push_str(&format!("- {d}\n"));
    }
    text.push_str("\nReply again with a corrected UniCode program in a single fenced block.");
    text
}

/// Stage 2: code in `target` given the question and the plan. One retry on
/// an empty or failed generation.
pub fn implement(
    question: &str,
    unicode_text: &str,
    target: TargetLanguage,
    generator: &dyn Generator,
    prompts: &UotPrompts,
) -> Result<(String, String), StageFailed> {
    let user_text = prompts.stage2.fill(&[
        (SLOT_LANGUAGE, target.display_name()),
        (SLOT_QUESTION, question),
        (SLOT_UNICODE, unicode_text.trim_end()),
    ]);
    let mut cause = String::new();
    for _ in 0..2 {
        match ask(generator, &user_text, "uot-stage2") {
            Ok(raw) => {
                let code = fenced_or_whole(&raw);
                if !code.trim().is_empty() {
                    return Ok((code, raw));
                }
                cause = "reply contains no code".into();
            }
            Err(e) => cause = e,
        }
    }
    Err(StageFailed { stage: 2, cause })
}

pub fn uot_infer(
    question: &str,
    generator: &dyn Generator,
    definition_text: &str,
    target: TargetLanguage,
) -> Result<UotOutput, StageFailed> {
    uot_infer_with(question, generator, definition_text, target, &UotPrompts::default())
}

pub fn uot_infer_with(
    question: &str,
    generator: &dyn Generator,
    definition_text: &str,
    target: TargetLanguage,
    prompts: &UotPrompts,
) -> Result<UotOutput, StageFailed> {
    let (unicode_text, stage1_raw) = plan(question, generator, definition_text, prompts)?;
    let (code, stage2_raw) = implement(question, &unicode_text, target, generator, prompts)?;
    Ok(UotOutput { unicode_text, code, target, stage1_raw, stage2_raw })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;
    use unicoder_gateway::{GatewayError, GenerationResponse};

    struct Scripted(Mutex<Vec<&'static str>>, Mutex<Vec<String>>);

    impl Scripted {
        fn new(mut replies: Vec<&'static str>) -> Self {
            replies.reverse();
            Scripted(Mutex::new(replies), Mutex::new(Vec::new()))
        }
    }

    impl Generator for Scripted {
        fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
            self.1.lock().unwrap().push(request.user_text.clone());
            let reply = self.0.lock().unwrap().pop().ok_or(GatewayError::Timeout)?;
            Ok(GenerationResponse::new(reply, FinishReason::Stop, "scripted"))
        }
    }

    const PLAN: &str = "```\nFUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n```";

    #[test]
    fn both_stages_are_kept() {
        let g = Scripted::new(vec![PLAN, "```python\ndef add(a, b):\n    return a + b\n```"]);
        let out = uot_infer("Add two numbers.", &g, "DEF", TargetLanguage::Python).unwrap();
        assert!(out.unicode_text.starts_with("FUNCTION add"));
        assert_eq!(out.code, "def add(a, b):\n    return a + b\n");
        assert_eq!(out.stage1_raw, PLAN);
        let prompts = g.1.lock().unwrap();
        assert!(prompts[0].contains("DEF") && prompts[0].contains("Add two numbers."));
        assert!(prompts[1].contains("Python") && prompts[1].contains("RETURN a + b"));
    }

    #[test]
    fn unparseable_plan_twice_fails_stage_one() {
        let g = Scripted::new(vec!["no plan", "still no plan"]);
        let err = uot_infer("q", &g, "DEF", TargetLanguage::Python).unwrap_err();
        assert_eq!(err.stage, 1);
        assert!(g.1.lock().unwrap()[1].contains("does not parse"));
    }

    #[test]
    fn stage_two_gets_one_retry() {
        let g = Scripted::new(vec![PLAN]);
        let err = uot_infer("q", &g, "DEF", TargetLanguage::Go).unwrap_err();
        assert_eq!(err.stage, 2);
        assert_eq!(g.1.lock().unwrap().len(), 3);
    }
}
