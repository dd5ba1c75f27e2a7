//! Union of corpora with stable ordering and content deduplication.

use std::collections::HashSet;

use sha2::{Digest, Sha256};

use crate::types::Triplet;

/// Hash over question, answer language, answer code and UniCode.
pub fn content_hash(triplet: &Triplet) -> String {
    let mut hasher = Sha256::new();
    for part in [triplet.question.as_str(), triplet.answer.language.name(), &triplet.answer.code, &triplet.unicode] {
        hasher.update((part.len() as u64).to_le_bytes());
        hasher.update(part.as_bytes());
    }
    hex::encode(hasher.finalize())
}

/// Sorted by (language, origin, origin_id); the first copy of each content
/// hash wins. Returns the merged corpus and the number of duplicates dropped.
pub fn merge_corpora(corpora: Vec<Vec<Triplet>>) -> (Vec<Triplet>, usize) {
    let mut all: Vec<Triplet> = corpora.into_iter().flatten().collect();
    all.sort_by(|a, b| (a.language, a.origin, &a.origin_id).cmp(&(b.language, b.origin, &b.origin_id)));
    let mut seen = HashSet::new();
    let before = all.len();
    all.retain(|t| seen.insert(content_hash(t)));
    let dropped = before - all.len();
    (all, dropped)
}
