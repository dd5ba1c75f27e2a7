//! Execution outcomes keyed by what determines them.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::problem::Problem;
use crate::sandbox::{ExecOutcome, Limits};

/// Hex SHA-256 over the problem, the candidate code, the limits and the
/// toolchain version. Fields are length-prefixed so no two inputs collide by
/// concatenation.
pub fn outcome_key(problem: &Problem, code: &str, limits: &Limits, toolchain_version: &str) -> String {
    let problem_json = serde_json::to_string(problem).expect("problem serializes");
    let limits_json = serde_json::to_string(limits).expect("limits serialize");
    let mut hasher = Sha256::new();
    for part in [problem_json.as_str(), code, limits_json.as_str(), toolchain_version] {
        hasher.update((part.len() as u64).to_le_bytes());
        hasher.update(part.as_bytes());
    }
    hex::encode(hasher.finalize())
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    outcome: ExecOutcome,
}

/// In-memory map, optionally backed by an append-only JSON-lines file.
#[derive(Default)]
pub struct OutcomeCache {
    entries: Mutex<HashMap<String, ExecOutcome>>,
    file: Option<Mutex<File>>,
    path: Option<PathBuf>,
}

impl OutcomeCache {
    pub fn in_memory() -> Self {
        OutcomeCache::default()
    }

    /// Opens or creates the file; unreadable lines are ignored.
    pub fn open(path: &Path) -> std::io::Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                if let Ok(entry) = serde_json::from_str::<Entry>(&line?) {
                    entries.insert(entry.key, entry.outcome);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(OutcomeCache { entries: Mutex::new(entries), file: Some(Mutex::new(file)), path: Some(path.to_path_buf()) })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, key: &str) -> Option<ExecOutcome> {
        self.entries.lock().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: String, outcome: ExecOutcome) -> std::io::Result<()> {
        if let Some(file) = &self.file {
            let line = serde_json::to_string(&Entry { key: key.clone(), outcome: outcome.clone() })?;
            let mut file = file.lock().unwrap();
            writeln!(file, "{line}")?;
        }
        self.entries.lock().unwrap().insert(key, outcome);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
