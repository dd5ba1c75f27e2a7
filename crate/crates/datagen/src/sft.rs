//! Supervised fine-tuning records for the four objectives.

use std::path::Path;

use serde::Deserialize;
use unicoder_lang::prompts::{PromptTemplate, SLOT_LANGUAGE, SLOT_QUESTION, SLOT_UNICODE};

use crate::types::{AuditEntry, Objective, SftRecord, Triplet};

pub const BUNDLED_TEMPLATES: &str = include_str!("../../../prompts/sft_templates.toml");

#[derive(Debug, Clone, Deserialize)]
struct TemplateFile {
    separator: String,
    qa: String,
    qp: String,
    pa: String,
    uot: String,
}

/// A prompt per objective plus the separator between UniCode and code in
/// uot completions.
#[derive(Debug, Clone)]
pub struct TemplateSet {
    pub qa: PromptTemplate,
    pub qp: PromptTemplate,
    pub pa: PromptTemplate,
    pub uot: PromptTemplate,
    pub separator: String,
}

impl TemplateSet {
    pub fn bundled() -> Self {
        TemplateSet::from_toml(BUNDLED_TEMPLATES).expect("bundled templates are valid")
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        TemplateSet::from_toml(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// qa, qp and uot prompts must use {Question} and never {UniCode}; pa
    /// must use {UniCode} and never {Question}.
    pub fn from_toml(text: &str) -> Result<Self, String> {
        let file: TemplateFile = toml::from_str(text).map_err(|e| e.to_string())?;
        let from_question = |name: &str, text: String| {
            if text.contains(&format!("{{{SLOT_UNICODE}}}")) {
                return Err(format!("{name} template may not show the UniCode"));
            }
            PromptTemplate::new(text, &[SLOT_QUESTION]).map_err(|e| format!("{name}: {e}"))
        };
        if file.pa.contains(&format!("{{{SLOT_QUESTION}}}")) {
            return Err("pa template may not show the question".into());
        }
        if file.separator.is_empty() {
            return Err("separator is empty".into());
        }
        Ok(TemplateSet {
            qa: from_question("qa", file.qa)?,
            qp: from_question("qp", file.qp)?,
            pa: PromptTemplate::new(file.pa, &[SLOT_UNICODE]).map_err(|e| format!("pa: {e}"))?,
            uot: from_question("uot", file.uot)?,
            separator: file.separator,
        })
    }

    pub fn template(&self, objective: Objective) -> &PromptTemplate {
        match objective {
            Objective::Qa => &self.qa,
            Objective::Qp => &self.qp,
            Objective::Pa => &self.pa,
            Objective::Uot => &self.uot,
        }
    }
}

fn block(text: &str) -> String {
    let mut out = text.trim_end().to_string();
    out.push('\n');
    out
}

/// The record for one objective: qa maps q to a, qp maps q to p, pa maps p
/// to a, and uot maps q to p, the separator, then a.
pub fn record(triplet: &Triplet, objective: Objective, templates: &TemplateSet) -> SftRecord {
    let question = triplet.question.trim();
    let unicode = block(&triplet.unicode);
    let answer = block(&triplet.answer.code);
    let prompt = templates.template(objective).fill(&[
        (SLOT_QUESTION, question),
        (SLOT_UNICODE, unicode.trim_end()),
        (SLOT_LANGUAGE, triplet.language.display_name()),
    ]);
    let completion = match objective {
        Objective::Qa | Objective::Pa => answer,
        Objective::Qp => unicode,
        Objective::Uot => format!("{}{}{answer}", unicode.trim_end(), templates.separator),
    };
    SftRecord {
        objective,
        origin_id: triplet.origin_id.clone(),
        language: triplet.language,
        loss_mask_boundary: prompt.chars().count(),
        prompt,
        completion,
    }
}

/// One record per triplet and objective, in triplet order and then
/// objective order. Triplets whose UniCode is missing or unparsed only get
/// a qa record.
pub fn pack_sft(triplets: &[Triplet], objectives: &[Objective], templates: &TemplateSet) -> (Vec<SftRecord>, Vec<AuditEntry>) {
    let mut selected: Vec<Objective> = objectives.to_vec();
    selected.sort();
    selected.dedup();
    let mut records = Vec::new();
    let mut audit = Vec::new();
    for triplet in triplets {
        if triplet.question.trim().is_empty() || triplet.answer.code.trim().is_empty() {
            audit.push(AuditEntry {
                origin_id: triplet.origin_id.clone(),
                stage: "pack-sft".into(),
                reason: "question or answer is empty".into(),
                score: None,
            });
            continue;
        }
        let unusable = if triplet.unicode.trim().is_empty() {
            Some("no UniCode")
        } else if !triplet.unicode_parses {
            Some("UniCode does not parse")
        } else {
            None
        };
        for &objective in &selected {
            if let (true, Some(why)) = (objective.needs_unicode(), unusable) {
                audit.push(AuditEntry {
                    origin_id: triplet.origin_id.clone(),
                    stage: "pack-sft".into(),
                    reason: format!("{why}, {} skipped", objective.name()),
                    score: None,
                });
                continue;
            }
            records.push(record(triplet, objective, templates));
        }
    }
    (records, audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{Answer, Origin};
    use unicoder_lang::transpile::TargetLanguage;

    fn triplet(unicode: &str) -> Triplet {
        Triplet {
            origin: Origin::FromPair,
            origin_id: "t1".into(),
            language: TargetLanguage::Go,
            question: "Add two numbers.".into(),
            answer: Answer { language: TargetLanguage::Go, code: "func add(a, b int) int { return a + b }".into() },
            unicode: unicode.into(),
            unicode_parses: true,
            unicode_diagnostics: Vec::new(),
        }
    }

    const P: &str = "FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n";

    #[test]
    fn four_records_with_the_right_fields() {
        let t = TemplateSet::bundled();
        let (records, audit) = pack_sft(&[triplet(P)], &Objective::ALL, &t);
        assert!(audit.is_empty());
        assert_eq!(records.iter().map(|r| r.objective).collect::<Vec<_>>(), Objective::ALL);
        let a = "func add(a, b int) int { return a + b }\n";
        let [qa, qp, pa, uot] = &records[..] else { panic!() };
        assert!(qa.prompt.contains("Add two numbers.") && !qa.prompt.contains("RETURN"));
        assert_eq!(qa.completion, a);
        assert!(qp.prompt.contains("Add two numbers."));
        assert_eq!(qp.completion, P);
        assert!(pa.prompt.contains("RETURN a + b") && !pa.prompt.contains("Add two numbers."));
        assert_eq!(pa.completion, a);
        assert_eq!(uot.completion, format!("{}{}{a}", P.trim_end(), t.separator));
        assert!(qa.prompt.contains("Go"));
        for r in &records {
            assert_eq!(r.loss_mask_boundary, r.prompt.chars().count());
        }
    }

    #[test]
    fn missing_unicode_keeps_only_qa() {
        let (records, audit) = pack_sft(&[triplet("  ")], &Objective::ALL, &TemplateSet::bundled());
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].objective, Objective::Qa);
        assert_eq!(audit.len(), 3);
    }

    #[test]
    fn unparsed_unicode_keeps_only_qa() {
        let mut t = triplet("FUNCTION add(\n");
        t.unicode_parses = false;
        let (records, audit) = pack_sft(&[t], &Objective::ALL, &TemplateSet::bundled());
        assert_eq!(records.iter().map(|r| r.objective).collect::<Vec<_>>(), [Objective::Qa]);
        assert!(audit.iter().all(|a| a.reason.starts_with("UniCode does not parse")));
    }

    #[test]
    fn single_objective_gives_one_record_per_triplet() {
        let triplets = vec![triplet(P); 100];
        let (records, _) = pack_sft(&triplets, &[Objective::Qa], &TemplateSet::bundled());
        assert_eq!(records.len(), 100);
    }

    #[test]
    fn templates_cannot_leak_the_target() {
        let bad = BUNDLED_TEMPLATES.replace("Write UniCode pseudocode that solves", "Given {UniCode}, write UniCode for");
        assert!(TemplateSet::from_toml(&bad).is_err());
    }
}
