use serde::{Deserialize, Serialize};
use unicoder_lang::transpile::TargetLanguage;

/// Language-tagged code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Answer {
    pub language: TargetLanguage,
    pub code: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstructionPair {
    pub origin_id: String,
    pub question: String,
    pub answer: Answer,
}

pub const DEFAULT_TOKEN_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSnippet {
    pub origin_id: String,
    pub language: TargetLanguage,
    pub code: String,
}

impl CodeSnippet {
    pub fn token_estimate(&self) -> usize {
        token_estimate(&self.code)
    }
}

/// Whitespace-separated words times 1.3, rounded up. Approximate by design;
/// real counts depend on the tokenizer.
pub fn token_estimate(text: &str) -> usize {
    let words = text.split_whitespace().count();
    (words * 13).div_ceil(10)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    FromPair,
    FromSnippet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triplet {
    pub origin: Origin,
    pub origin_id: String,
    pub language: TargetLanguage,
    pub question: String,
    pub answer: Answer,
    pub unicode: String,
    /// Whether `unicode` parses. Unparsed text is kept for trainers that
    /// use it raw.
    pub unicode_parses: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unicode_diagnostics: Vec<String>,
}

/// Scores outside 0..=10 never come from the model; this marks a reply
/// the score could not be read from.
pub const UNSCOREABLE: f64 = -1.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredTriplet {
    pub triplet: Triplet,
    pub score: f64,
    pub rationale: String,
    #[serde(default)]
    pub unscoreable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Qa,
    Qp,
    Pa,
    Uot,
}

impl Objective {
    pub const ALL: [Objective; 4] = [Objective::Qa, Objective::Qp, Objective::Pa, Objective::Uot];

    pub fn name(self) -> &'static str {
        match self {
            Objective::Qa => "qa",
            Objective::Qp => "qp",
            Objective::Pa => "pa",
            Objective::Uot => "uot",
        }
    }

    pub fn parse(text: &str) -> Option<Objective> {
        Objective::ALL.into_iter().find(|o| o.name() == text.trim().to_ascii_lowercase())
    }

    /// Whether the objective needs the UniCode of a triplet.
    pub fn needs_unicode(self) -> bool {
        self != Objective::Qa
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SftRecord {
    pub objective: Objective,
    pub origin_id: String,
    pub language: TargetLanguage,
    pub prompt: String,
    pub completion: String,
    /// Character offset into `prompt + completion` where the trained part
    /// starts; always the prompt's length in characters.
    pub loss_mask_boundary: usize,
}

/// One line of an audit file: an input item that did not make it through a
/// stage, and why.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub origin_id: String,
    pub stage: String,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_estimate_rounds_up() {
        assert_eq!(token_estimate(""), 0);
        assert_eq!(token_estimate("a"), 2);
        assert_eq!(token_estimate("a b c d e f g h i j"), 13);
    }

    #[test]
    fn objective_names_round_trip() {
        for o in Objective::ALL {
            assert_eq!(Objective::parse(o.name()), Some(o));
            assert_eq!(serde_json::to_value(o).unwrap(), o.name());
        }
    }
}
