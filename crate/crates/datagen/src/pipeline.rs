//! Corpus generation over many inputs, and JSON-lines I/O.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;
use unicoder_gateway::Generator;

use crate::generate::{gen_triplet_from_snippet, gen_unicode_for_pair, GenConfig, GenError};
use crate::score::{check_threshold, partition, rubric, score_triplet, DEFAULT_THRESHOLD};
use crate::types::{AuditEntry, CodeSnippet, InstructionPair, Triplet};

#[derive(Debug, Error)]
pub enum JsonlError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
}

/// Reads one value per non-blank line.
pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, JsonlError> {
    let text = std::fs::read_to_string(path).map_err(|source| JsonlError::Io { path: path.display().to_string(), source })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| JsonlError::Parse {
                path: path.display().to_string(),
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn to_jsonl<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn write_jsonl<T: Serialize>(path: &Path, items: &[T]) -> Result<(), JsonlError> {
    let io = |source| JsonlError::Io { path: path.display().to_string(), source };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(io)?;
    }
    let mut file = std::fs::File::create(path).map_err(io)?;
    file.write_all(to_jsonl(items).as_bytes()).map_err(io)
}

pub enum GenInput {
    Pairs(Vec<InstructionPair>),
    Snippets(Vec<CodeSnippet>),
}

#[derive(Debug, Clone)]
pub struct GenDataOptions {
    pub config: GenConfig,
    /// Applied to snippet triplets only.
    pub threshold: f64,
    pub jobs: usize,
}

impl Default for GenDataOptions {
    fn default() -> Self {
        GenDataOptions { config: GenConfig::default(), threshold: DEFAULT_THRESHOLD, jobs: 4 }
    }
}

#[derive(Debug, Clone, Default)]
pub struct GenDataOutput {
    pub corpus: Vec<Triplet>,
    pub audit: Vec<AuditEntry>,
}

fn audit(origin_id: &str, stage: &str, reason: String, score: Option<f64>) -> AuditEntry {
    AuditEntry { origin_id: origin_id.to_string(), stage: stage.to_string(), reason, score }
}

/// Generates triplets concurrently. The corpus is grouped by language and
/// otherwise in input order; the audit is in input order. Neither depends on
/// scheduling.
pub fn gen_data(
    input: &GenInput,
    generator: &dyn Generator,
    definition_text: &str,
    options: &GenDataOptions,
) -> Result<GenDataOutput, String> {
    check_threshold(options.threshold)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.jobs.max(1)).build().map_err(|e| e.to_string())?;
    let config = &options.config;
    let generated: Vec<Result<Triplet, GenError>> = pool.install(|| match input {
        GenInput::Pairs(pairs) => {
            pairs.par_iter().map(|p| gen_unicode_for_pair(p, generator, definition_text, config)).collect()
        }
        GenInput::Snippets(snippets) => {
            snippets.par_iter().map(|s| gen_triplet_from_snippet(s, generator, definition_text, config)).collect()
        }
    });

    let mut out = GenDataOutput::default();
    let mut triplets = Vec::new();
    for result in generated {
        match result {
            Ok(t) => {
                if !t.unicode_parses {
                    let reason = format!("UniCode kept unparsed: {}", t.unicode_diagnostics.first().cloned().unwrap_or_default());
                    out.audit.push(audit(&t.origin_id, "parse", reason, None));
                }
                triplets.push(t);
            }
            Err(e) => out.audit.push(audit(e.origin_id(), "generate", e.to_string(), None)),
        }
    }

    if let GenInput::Snippets(_) = input {
        let template = rubric();
        let scored: Vec<_> = pool.install(|| triplets.par_iter().map(|t| score_triplet(t, generator, &template)).collect());
        let order: Vec<String> = scored.iter().map(|s| s.triplet.origin_id.clone()).collect();
        let (kept, rejected) = partition(scored, options.threshold);
        let mut rejected_audit: Vec<(usize, AuditEntry)> = rejected
            .into_iter()
            .map(|s| {
                let position = order.iter().position(|id| *id == s.triplet.origin_id).unwrap_or(usize::MAX);
                let reason = if s.unscoreable {
                    format!("unscoreable: {}", s.rationale)
                } else {
                    format!("score {} below {}: {}", s.score, options.threshold, s.rationale)
                };
                (position, audit(&s.triplet.origin_id, "score", reason, Some(s.score)))
            })
            .collect();
        rejected_audit.sort_by_key(|(p, _)| *p);
        out.audit.extend(rejected_audit.into_iter().map(|(_, a)| a));
        triplets = kept.into_iter().map(|s| s.triplet).collect();
    }

    triplets.sort_by_key(|t| t.language);
    out.corpus = triplets;
    Ok(out)
}
