//! Prompt templates with `{Slot Name}` placeholders.
//!
//! The bundled copies are compiled in; callers may load edited versions from
//! disk at run time.

use std::path::Path;

pub const DEFINITION: &str = include_str!("../../../prompts/unicode_definition.md");
pub const LIFT_TEMPLATE: &str = include_str!("../../../prompts/lift_unicode.txt");
pub const UOT_STAGE1_TEMPLATE: &str = include_str!("../../../prompts/uot_stage1.txt");
pub const UOT_STAGE2_TEMPLATE: &str = include_str!("../../../prompts/uot_stage2.txt");

pub const SLOT_DEFINITION: &str = "Definition of Universal Code";
pub const SLOT_QUESTION: &str = "Question";
pub const SLOT_ANSWER: &str = "Answer";
pub const SLOT_UNICODE: &str = "UniCode";
pub const SLOT_LANGUAGE: &str = "Language";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromptTemplate {
    text: String,
}

impl PromptTemplate {
    /// Fails when a required slot is missing from `text`.
    pub fn new(text: impl Into<String>, required: &[&str]) -> Result<Self, String> {
        let text = text.into();
        let missing: Vec<&str> = required.iter().copied().filter(|s| !text.contains(&format!("{{{s}}}"))).collect();
        if !missing.is_empty() {
            return Err(format!("template lacks slot(s): {}", missing.join(", ")));
        }
        Ok(PromptTemplate { text })
    }

    pub fn load(path: &Path, required: &[&str]) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        PromptTemplate::new(text, required).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn lift() -> Self {
        PromptTemplate::new(LIFT_TEMPLATE, &[SLOT_DEFINITION, SLOT_QUESTION, SLOT_ANSWER]).expect("bundled template")
    }

    pub fn uot_stage1() -> Self {
        PromptTemplate::new(UOT_STAGE1_TEMPLATE, &[SLOT_DEFINITION, SLOT_QUESTION]).expect("bundled template")
    }

    pub fn uot_stage2() -> Self {
        PromptTemplate::new(UOT_STAGE2_TEMPLATE, &[SLOT_QUESTION, SLOT_UNICODE, SLOT_LANGUAGE]).expect("bundled template")
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Substitutes every slot in one pass, so slot values that themselves
    /// contain `{...}` are left untouched.
    pub fn fill(&self, slots: &[(&str, &str)]) -> String {
        let mut out = String::with_capacity(self.text.len());
        let mut rest = self.text.as_str();
        'scan: while let Some(open) = rest.find('{') {
            out.push_str(&rest[..open]);
            let after = &rest[open + 1..];
            for (name, value) in slots {
                if let Some(tail) = after.strip_prefix(name).and_then(|t| t.strip_prefix('}')) {
                    out.push_str(value);
                    rest = tail;
                    continue 'scan;
                }
            }
            out.push('{');
            rest = after;
        }
        out.push_str(rest);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fill_is_single_pass() {
        let t = PromptTemplate::new("a {X} b {Y} {Z}", &["X"]).unwrap();
        assert_eq!(t.fill(&[("X", "{Y}"), ("Y", "2")]), "a {Y} b 2 {Z}");
    }

    #[test]
    fn missing_slot_is_reported() {
        assert!(PromptTemplate::new("{Question}", &[SLOT_QUESTION, SLOT_ANSWER]).unwrap_err().contains("Answer"));
    }

    #[test]
    fn bundled_lift_template_has_all_slots() {
        let filled = PromptTemplate::lift().fill(&[(SLOT_DEFINITION, "D"), (SLOT_QUESTION, "Q"), (SLOT_ANSWER, "A")]);
        assert!(!filled.contains('{') || filled.contains("```"));
        assert!(filled.contains("### Question\nQ\n"));
    }
}

/// Body of the first ``` fenced block, without the info string.
pub fn first_fenced_block(text: &str) -> Option<&str> {
    let open = text.find("```")?;
    let after = &text[open + 3..];
    let body_start = after.find('\n')? + 1;
    let body = &after[body_start..];
    let close = body.find("```").unwrap_or(body.len());
    Some(body[..close].trim_end_matches([' ', '\t']))
}
