use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Condvar, Mutex};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::backend::{Backend, BackendError, HttpBackend};
use crate::cache::{CacheEntry, ReplayCache};
use crate::{GatewayError, GenerationRequest, GenerationResponse, Generator, DEFAULT_API_KEY_ENV};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Live,
    Record,
    #[default]
    Replay,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Live => "live",
            Mode::Record => "record",
            Mode::Replay => "replay",
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GatewayConfig {
    pub mode: Mode,
    pub endpoint: Option<String>,
    pub model: String,
    /// Name of the environment variable that holds the credential.
    pub api_key_env: String,
    pub cache_path: Option<PathBuf>,
    pub max_concurrency: usize,
    pub max_retries: u32,
    pub backoff_base_ms: u64,
    pub request_timeout_s: u64,
}

impl Default for GatewayConfig {
    fn default() -> Self {
        GatewayConfig {
            mode: Mode::Replay,
            endpoint: None,
            model: "gpt-4-1106-preview".into(),
            api_key_env: DEFAULT_API_KEY_ENV.into(),
            cache_path: None,
            max_concurrency: 4,
            max_retries: 5,
            backoff_base_ms: 500,
            request_timeout_s: 120,
        }
    }
}

impl GatewayConfig {
    pub fn replay(cache_path: impl Into<PathBuf>) -> Self {
        GatewayConfig { mode: Mode::Replay, cache_path: Some(cache_path.into()), ..Default::default() }
    }

    pub fn record(cache_path: impl Into<PathBuf>) -> Self {
        GatewayConfig { mode: Mode::Record, cache_path: Some(cache_path.into()), ..Default::default() }
    }
}

/// What [`probe`] found out about a configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BackendDescriptor {
    pub mode: Mode,
    pub backend_id: Option<String>,
    pub cache_path: Option<PathBuf>,
    pub cache_entries: usize,
    pub problems: Vec<String>,
}

impl BackendDescriptor {
    pub fn is_ready(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Inspects a configuration without making any request.
pub fn probe(config: &GatewayConfig) -> BackendDescriptor {
    let mut problems = Vec::new();
    let cache_entries = match &config.cache_path {
        Some(path) => match ReplayCache::open(path) {
            Ok(cache) => cache.len(),
            Err(e) => {
                problems.push(e.to_string());
                0
            }
        },
        None => 0,
    };
    let mut backend_id = None;
    match config.mode {
        Mode::Replay => {
            if config.cache_path.is_none() {
                problems.push("replay mode without a cache path".into());
            }
        }
        Mode::Live | Mode::Record => {
            if config.mode == Mode::Record && config.cache_path.is_none() {
                problems.push("record mode without a cache path".into());
            }
            match &config.endpoint {
                Some(endpoint) => backend_id = Some(format!("{}@{}", config.model, endpoint)),
                None => problems.push("no endpoint configured".into()),
            }
            if std::env::var(&config.api_key_env).map(|v| v.is_empty()).unwrap_or(true) {
                problems.push(GatewayError::AuthMissing { var: config.api_key_env.clone() }.to_string());
            }
        }
    }
    BackendDescriptor {
        mode: config.mode,
        backend_id,
        cache_path: config.cache_path.clone(),
        cache_entries,
        problems,
    }
}

struct Limiter {
    available: Mutex<usize>,
    cond: Condvar,
}

impl Limiter {
    fn new(permits: usize) -> Self {
        Limiter { available: Mutex::new(permits.max(1)), cond: Condvar::new() }
    }

    fn acquire(&self) -> Permit<'_> {
        let mut available = self.available.lock().unwrap();
        while *available == 0 {
            available = self.cond.wait(available).unwrap();
        }
        *available -= 1;
        Permit(self)
    }
}

struct Permit<'a>(&'a Limiter);

impl Drop for Permit<'_> {
    fn drop(&mut self) {
        *self.0.available.lock().unwrap() += 1;
        self.0.cond.notify_one();
    }
}

/// The production [`Generator`]: cache in front of an optional live backend.
pub struct Gateway {
    config: GatewayConfig,
    cache: ReplayCache,
    backend: Option<Box<dyn Backend>>,
    limiter: Limiter,
    not_before: Mutex<Option<Instant>>,
    backend_calls: AtomicUsize,
}

impl Gateway {
    /// Builds the gateway described by `config`, resolving the credential
    /// from the environment for live and record modes.
    pub fn from_config(config: GatewayConfig) -> Result<Self, GatewayError> {
        let backend: Option<Box<dyn Backend>> = match config.mode {
            Mode::Replay => None,
            Mode::Live | Mode::Record => {
                let api_key = std::env::var(&config.api_key_env)
                    .ok()
                    .filter(|v| !v.is_empty())
                    .ok_or_else(|| GatewayError::AuthMissing { var: config.api_key_env.clone() })?;
                let endpoint = config
                    .endpoint
                    .clone()
                    .ok_or_else(|| GatewayError::Backend("no endpoint configured".into()))?;
                Some(Box::new(HttpBackend::new(
                    endpoint,
                    config.model.clone(),
                    api_key,
                    Duration::from_secs(config.request_timeout_s),
                )))
            }
        };
        Self::assemble(config, backend)
    }

    /// Builds a gateway around a caller-supplied backend. Replay mode ignores it.
    pub fn with_backend(config: GatewayConfig, backend: Box<dyn Backend>) -> Result<Self, GatewayError> {
        let backend = match config.mode {
            Mode::Replay => None,
            _ => Some(backend),
        };
        Self::assemble(config, backend)
    }

    fn assemble(config: GatewayConfig, backend: Option<Box<dyn Backend>>) -> Result<Self, GatewayError> {
        let cache = match &config.cache_path {
            Some(path) => ReplayCache::open(path)?,
            None if config.mode == Mode::Replay => {
                return Err(GatewayError::Cache("replay mode requires a cache path".into()))
            }
            None if config.mode == Mode::Record => {
                return Err(GatewayError::Cache("record mode requires a cache path".into()))
            }
            None => ReplayCache::in_memory(),
        };
        Ok(Gateway {
            limiter: Limiter::new(config.max_concurrency),
            config,
            cache,
            backend,
            not_before: Mutex::new(None),
            backend_calls: AtomicUsize::new(0),
        })
    }

    pub fn mode(&self) -> Mode {
        self.config.mode
    }

    pub fn cache(&self) -> &ReplayCache {
        &self.cache
    }

    /// Number of requests that reached the live backend.
    pub fn backend_calls(&self) -> usize {
        self.backend_calls.load(Ordering::SeqCst)
    }

    pub fn probe(&self) -> BackendDescriptor {
        BackendDescriptor {
            mode: self.config.mode,
            backend_id: self.backend.as_ref().map(|b| b.id()),
            cache_path: self.config.cache_path.clone(),
            cache_entries: self.cache.len(),
            problems: Vec::new(),
        }
    }

    fn wait_for_backoff(&self) {
        let deadline = *self.not_before.lock().unwrap();
        if let Some(deadline) = deadline {
            let now = Instant::now();
            if deadline > now {
                std::thread::sleep(deadline - now);
            }
        }
    }

    fn push_backoff(&self, attempt: u32) {
        let delay = Duration::from_millis(self.config.backoff_base_ms.saturating_mul(1 << attempt.min(16)));
        let mut not_before = self.not_before.lock().unwrap();
        let candidate = Instant::now() + delay;
        if not_before.map_or(true, |current| candidate > current) {
            *not_before = Some(candidate);
        }
    }

    fn call_backend(&self, backend: &dyn Backend, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
        let _permit = self.limiter.acquire();
        let mut attempt = 0;
        loop {
            self.wait_for_backoff();
            self.backend_calls.fetch_add(1, Ordering::SeqCst);
            match backend.complete(request) {
                Ok(response) => return Ok(response),
                Err(BackendError::RateLimited) => {
                    if attempt >= self.config.max_retries {
                        return Err(GatewayError::RateLimited { attempts: attempt + 1 });
                    }
                    self.push_backoff(attempt);
                    attempt += 1;
                }
                Err(BackendError::Timeout) => return Err(GatewayError::Timeout),
                Err(BackendError::Other(message)) => return Err(GatewayError::Backend(message)),
            }
        }
    }
}

impl Generator for Gateway {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
        request.validate()?;
        let key = request.cache_key();
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit);
        }
        let backend = match (&self.config.mode, &self.backend) {
            (Mode::Replay, _) | (_, None) => return Err(GatewayError::CacheMiss { key }),
            (_, Some(backend)) => backend,
        };
        let response = self.call_backend(backend.as_ref(), request)?;
        let entry = CacheEntry { key, request: request.clone(), response: response.clone() };
        match self.config.mode {
            Mode::Record => {
                self.cache.append(entry)?;
            }
            _ => {
                self.cache.insert(entry);
            }
        }
        Ok(response)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FinishReason;
    use std::sync::atomic::AtomicU32;
    use std::sync::Arc;

    struct Echo {
        calls: Arc<AtomicUsize>,
    }

    impl Backend for Echo {
        fn id(&self) -> String {
            "echo".into()
        }
        fn complete(&self, request: &GenerationRequest) -> Result<GenerationResponse, BackendError> {
            self.calls.fetch_add(1, Ordering::SeqCst);
            Ok(GenerationResponse::new(format!("echo: {}", request.user_text), FinishReason::Stop, "echo"))
        }
    }

    struct Throttled {
        failures_left: AtomicU32,
    }

    impl Backend for Throttled {
        fn id(&self) -> String {
            "throttled".into()
        }
        fn complete(&self, _request: &GenerationRequest) -> Result<GenerationResponse, BackendError> {
            if self.failures_left.load(Ordering::SeqCst) > 0 {
                self.failures_left.fetch_sub(1, Ordering::SeqCst);
                return Err(BackendError::RateLimited);
            }
            Ok(GenerationResponse::new("ok", FinishReason::Stop, "throttled"))
        }
    }

    fn live_config() -> GatewayConfig {
        GatewayConfig { mode: Mode::Live, backoff_base_ms: 1, ..Default::default() }
    }

    #[test]
    fn replay_hit_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let request = GenerationRequest::new("s", "cached question");
        let cache = ReplayCache::open(&path).unwrap();
        cache
            .append(CacheEntry {
                key: request.cache_key(),
                request: request.clone(),
                response: GenerationResponse::new("cached answer", FinishReason::Stop, "rec"),
            })
            .unwrap();

        let gateway = Gateway::from_config(GatewayConfig::replay(&path)).unwrap();
        assert_eq!(gateway.generate(&request).unwrap().text, "cached answer");

        let missing = GenerationRequest::new("s", "never recorded");
        match gateway.generate(&missing) {
            Err(GatewayError::CacheMiss { key }) => assert_eq!(key, missing.cache_key()),
            other => panic!("expected cache miss, got {other:?}"),
        }
        assert_eq!(gateway.backend_calls(), 0);
    }

    #[test]
    fn replay_mode_never_touches_backend() {
        let dir = tempfile::tempdir().unwrap();
        let calls = Arc::new(AtomicUsize::new(0));
        let gateway = Gateway::with_backend(
            GatewayConfig::replay(dir.path().join("c.jsonl")),
            Box::new(Echo { calls: calls.clone() }),
        )
        .unwrap();
        assert!(gateway.generate(&GenerationRequest::new("", "x")).is_err());
        assert_eq!(calls.load(Ordering::SeqCst), 0);
    }

    #[test]
    fn live_identical_requests_hit_cache() {
        let calls = Arc::new(AtomicUsize::new(0));
        let gateway = Gateway::with_backend(live_config(), Box::new(Echo { calls: calls.clone() })).unwrap();
        let a = GenerationRequest::new("", "same").with_tag("first");
        let b = GenerationRequest::new("", "same").with_tag("second");
        assert_eq!(gateway.generate(&a).unwrap(), gateway.generate(&b).unwrap());
        assert_eq!(calls.load(Ordering::SeqCst), 1);
    }

    #[test]
    fn record_mode_persists() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let calls = Arc::new(AtomicUsize::new(0));
        let config = GatewayConfig { backoff_base_ms: 1, ..GatewayConfig::record(&path) };
        let gateway = Gateway::with_backend(config, Box::new(Echo { calls })).unwrap();
        gateway.generate(&GenerationRequest::new("", "persist me")).unwrap();
        drop(gateway);

        let replay = Gateway::from_config(GatewayConfig::replay(&path)).unwrap();
        assert_eq!(replay.generate(&GenerationRequest::new("", "persist me")).unwrap().text, "echo: persist me");
        assert_eq!(probe(&GatewayConfig::record(&path)).cache_entries, 1);
    }

    #[test]
    fn rate_limit_retries_then_succeeds() {
        let gateway =
            Gateway::with_backend(live_config(), Box::new(Throttled { failures_left: AtomicU32::new(3) })).unwrap();
        assert_eq!(gateway.generate(&GenerationRequest::new("", "q")).unwrap().text, "ok");
        assert_eq!(gateway.backend_calls(), 4);
    }

    #[test]
    fn rate_limit_gives_up_after_max_retries() {
        let gateway =
            Gateway::with_backend(live_config(), Box::new(Throttled { failures_left: AtomicU32::new(100) })).unwrap();
        assert_eq!(
            gateway.generate(&GenerationRequest::new("", "q")),
            Err(GatewayError::RateLimited { attempts: 6 })
        );
    }

    #[test]
    fn probe_reports_modes_and_missing_credentials() {
        let dir = tempfile::tempdir().unwrap();
        let replay = probe(&GatewayConfig::replay(dir.path().join("c.jsonl")));
        assert_eq!(replay.mode, Mode::Replay);
        assert!(replay.is_ready());

        let live = GatewayConfig {
            mode: Mode::Live,
            endpoint: Some("http://127.0.0.1:9/v1/chat/completions".into()),
            api_key_env: "UNICODER_TEST_SURELY_UNSET_KEY".into(),
            ..Default::default()
        };
        let descriptor = probe(&live);
        assert!(descriptor.problems.iter().any(|p| p.contains("UNICODER_TEST_SURELY_UNSET_KEY")));
        assert!(matches!(Gateway::from_config(live), Err(GatewayError::AuthMissing { .. })));
    }
}
