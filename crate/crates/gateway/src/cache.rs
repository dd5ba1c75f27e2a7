use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::{GatewayError, GenerationRequest, GenerationResponse};

/// One line of the cache file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub request: GenerationRequest,
    pub response: GenerationResponse,
}

/// Append-only, content-addressed store of request/response pairs.
///
/// The on-disk form is JSON lines of [`CacheEntry`]. When a key appears more
/// than once the first occurrence wins.
#[derive(Debug, Default)]
pub struct ReplayCache {
    path: Option<PathBuf>,
    entries: Mutex<HashMap<String, CacheEntry>>,
    file_lock: Mutex<()>,
}

impl ReplayCache {
    pub fn in_memory() -> Self {
        ReplayCache::default()
    }

    /// Loads `path` if it exists; a missing file is an empty cache.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, GatewayError> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let file = File::open(&path)
                .map_err(|e| GatewayError::Cache(format!("{}: {e}", path.display())))?;
            for (index, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(|e| GatewayError::Cache(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                let entry: CacheEntry = serde_json::from_str(&line).map_err(|e| {
                    GatewayError::Cache(format!("{}:{}: {e}", path.display(), index + 1))
                })?;
                entries.entry(entry.key.clone()).or_insert(entry);
            }
        }
        Ok(ReplayCache { path: Some(path), entries: Mutex::new(entries), file_lock: Mutex::new(()) })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &str) -> Option<GenerationResponse> {
        self.entries.lock().unwrap().get(key).map(|e| e.response.clone())
    }

    /// Inserts in memory only. Returns false if the key already existed.
    pub fn insert(&self, entry: CacheEntry) -> bool {
        let mut entries = self.entries.lock().unwrap();
        if entries.contains_key(&entry.key) {
            return false;
        }
        entries.insert(entry.key.clone(), entry);
        true
    }

    /// Inserts and appends to the backing file. Existing keys are left alone.
    pub fn append(&self, entry: CacheEntry) -> Result<bool, GatewayError> {
        let _guard = self.file_lock.lock().unwrap();
        let line = serde_json::to_string(&entry).map_err(|e| GatewayError::Cache(e.to_string()))?;
        if !self.insert(entry) {
            return Ok(false);
        }
        if let Some(path) = &self.path {
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| GatewayError::Cache(format!("{}: {e}", path.display())))?;
            writeln!(file, "{line}").map_err(|e| GatewayError::Cache(e.to_string()))?;
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FinishReason;

    fn entry(user: &str, text: &str) -> CacheEntry {
        let request = GenerationRequest::new("sys", user);
        CacheEntry {
            key: request.cache_key(),
            request,
            response: GenerationResponse::new(text, FinishReason::Stop, "test"),
        }
    }

    #[test]
    fn append_then_reload() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let cache = ReplayCache::open(&path).unwrap();
        assert!(cache.is_empty());
        assert!(cache.append(entry("a", "first")).unwrap());
        assert!(!cache.append(entry("a", "second")).unwrap());
        assert!(cache.append(entry("b", "other")).unwrap());

        let reloaded = ReplayCache::open(&path).unwrap();
        assert_eq!(reloaded.len(), 2);
        let key = GenerationRequest::new("sys", "a").cache_key();
        assert_eq!(reloaded.get(&key).unwrap().text, "first");
        let lines = std::fs::read_to_string(&path).unwrap();
        assert_eq!(lines.lines().count(), 2);
    }

    #[test]
    fn malformed_line_names_position() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        std::fs::write(&path, "{not json}\n").unwrap();
        let err = ReplayCache::open(&path).unwrap_err();
        assert!(err.to_string().contains(":1:"), "{err}");
    }
}
