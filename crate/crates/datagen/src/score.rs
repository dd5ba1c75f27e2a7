//! Model-graded quality filter.

use std::sync::OnceLock;

use regex::Regex;
use unicoder_gateway::{FinishReason, GenerationRequest, Generator};
use unicoder_lang::prompts::{PromptTemplate, SLOT_ANSWER, SLOT_LANGUAGE, SLOT_QUESTION, SLOT_UNICODE};

use crate::types::{ScoredTriplet, Triplet, UNSCOREABLE};

pub const RUBRIC_TEMPLATE: &str = include_str!("../../../prompts/score_rubric.txt");
pub const SCORER_SYSTEM_TEXT: &str = "You grade training data for code models.";
pub const DEFAULT_THRESHOLD: f64 = 6.0;

pub fn rubric() -> PromptTemplate {
    PromptTemplate::new(RUBRIC_TEMPLATE, &[SLOT_QUESTION, SLOT_ANSWER, SLOT_UNICODE, SLOT_LANGUAGE]).expect("bundled template")
}

/// The number after the first `Score:`, if it is within 0..=10.
pub fn extract_score(reply: &str) -> Option<f64> {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| Regex::new(r"(?i)\bscore\s*[:=]\s*\**\s*(\d+(?:\.\d+)?)").unwrap());
    let value: f64 = re.captures(reply)?[1].parse().ok()?;
    (0.0..=10.0).contains(&value).then_some(value)
}

fn rationale(reply: &str) -> String {
    let mut lines = reply.lines().skip_while(|l| l.trim().is_empty());
    let first = lines.next().unwrap_or("");
    let rest: Vec<&str> = lines.collect();
    let text = if extract_score(first).is_some() { rest.join("\n") } else { reply.to_string() };
    text.trim().to_string()
}

pub fn score_triplet(triplet: &Triplet, generator: &dyn Generator, template: &PromptTemplate) -> ScoredTriplet {
    let user_text = template.fill(&[
        (SLOT_QUESTION, triplet.question.trim_end()),
        (SLOT_ANSWER, triplet.answer.code.trim_end()),
        (SLOT_UNICODE, triplet.unicode.trim_end()),
        (SLOT_LANGUAGE, triplet.language.display_name()),
    ]);
    let request = GenerationRequest::new(SCORER_SYSTEM_TEXT, user_text).with_tag("score");
    let reply = match generator.generate(&request) {
        Ok(r) if r.finish_reason != FinishReason::Error => r.text,
        Ok(_) => String::new(),
        Err(e) => {
            return ScoredTriplet {
                triplet: triplet.clone(),
                score: UNSCOREABLE,
                rationale: format!("scorer failed: {e}"),
                unscoreable: true,
            }
        }
    };
    match extract_score(&reply) {
        Some(score) => ScoredTriplet { triplet: triplet.clone(), score, rationale: rationale(&reply), unscoreable: false },
        None => ScoredTriplet {
            triplet: triplet.clone(),
            score: UNSCOREABLE,
            rationale: reply.trim().to_string(),
            unscoreable: true,
        },
    }
}

/// Splits scored triplets at `threshold`. Unscoreable ones are always
/// rejected.
pub fn partition(scored: Vec<ScoredTriplet>, threshold: f64) -> (Vec<ScoredTriplet>, Vec<ScoredTriplet>) {
    scored.into_iter().partition(|s| !s.unscoreable && s.score >= threshold)
}

pub fn check_threshold(threshold: f64) -> Result<f64, String> {
    if (0.0..=10.0).contains(&threshold) {
        Ok(threshold)
    } else {
        Err(format!("threshold {threshold} is outside 0..=10"))
    }
}

pub fn score_and_filter(
    triplets: &[Triplet],
    generator: &dyn Generator,
    threshold: f64,
) -> Result<(Vec<ScoredTriplet>, Vec<ScoredTriplet>), String> {
    check_threshold(threshold)?;
    let template = rubric();
    let scored = triplets.iter().map(|t| score_triplet(t, generator, &template)).collect();
    Ok(partition(scored, threshold))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{Answer, Origin};
    use unicoder_gateway::{GatewayError, GenerationResponse};
    use unicoder_lang::transpile::TargetLanguage;

    struct Fixed(&'static str);

    impl Generator for Fixed {
        fn generate(&self, _: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
            Ok(GenerationResponse::new(self.0, FinishReason::Stop, "fixed"))
        }
    }

    fn triplet() -> Triplet {
        Triplet {
            origin: Origin::FromSnippet,
            origin_id: "s".into(),
            language: TargetLanguage::Python,
            question: "q".into(),
            answer: Answer { language: TargetLanguage::Python, code: "a".into() },
            unicode: "p".into(),
            unicode_parses: false,
            unicode_diagnostics: Vec::new(),
        }
    }

    #[test]
    fn extraction() {
        assert_eq!(extract_score("Score: 8\nGood."), Some(8.0));
        assert_eq!(extract_score("**Score:** 7.5"), Some(7.5));
        assert_eq!(extract_score("score = 10"), Some(10.0));
        assert_eq!(extract_score("Score: 11"), None);
        assert_eq!(extract_score("Looks fine to me."), None);
    }

    #[test]
    fn threshold_splits_kept_and_rejected() {
        let (kept, rejected) = score_and_filter(&[triplet()], &Fixed("Score: 8\nSolid."), 6.0).unwrap();
        assert_eq!((kept.len(), rejected.len()), (1, 0));
        assert_eq!(kept[0].rationale, "Solid.");
        let (kept, rejected) = score_and_filter(&[triplet()], &Fixed("Score: 3\nWrong."), 6.0).unwrap();
        assert_eq!((kept.len(), rejected.len()), (0, 1));
        assert_eq!(rejected[0].score, 3.0);
    }

    #[test]
    fn prose_is_rejected_with_the_sentinel() {
        let (kept, rejected) = score_and_filter(&[triplet()], &Fixed("I like it."), 0.0).unwrap();
        assert!(kept.is_empty());
        assert!(rejected[0].unscoreable);
        assert_eq!(rejected[0].score, UNSCOREABLE);
    }

    #[test]
    fn threshold_must_be_in_range() {
        assert!(score_and_filter(&[], &Fixed(""), 10.5).is_err());
    }
}
