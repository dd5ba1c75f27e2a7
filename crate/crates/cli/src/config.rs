//! The optional `--config` file.
//!
//! ```toml
//! [gateway]
//! mode = "replay"            # live | record | replay
//! cache_path = "replay/cache.jsonl"
//! endpoint = "https://example.invalid/v1/chat/completions"
//! model = "some-model"
//!
//! [sandbox]
//! timeout_ms = 10000
//! output_cap = 65536
//! memory_mb = 512
//! toolchains = "toolchains.toml"
//!
//! jobs = 4
//! ```
//!
//! Relative paths are resolved against the directory of the config file.
//! The credential is never read from here, only from the environment
//! variable named by `gateway.api_key_env`.

use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Deserialize;
use unicoder_eval::{Limits, Sandbox};
use unicoder_gateway::GatewayConfig;
use unicoder_lang::transpile::Toolchains;

use crate::Failure;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SandboxSection {
    pub timeout_ms: Option<u64>,
    pub output_cap: Option<usize>,
    pub memory_mb: Option<u64>,
    pub isolate_network: Option<bool>,
    pub toolchains: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub gateway: GatewayConfig,
    pub sandbox: SandboxSection,
    pub jobs: Option<usize>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config, Failure> {
        let Some(path) = path else { return Ok(Config::default()) };
        let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let mut config: Config = toml::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        if let Some(cache) = &config.gateway.cache_path {
            config.gateway.cache_path = Some(base.join(cache));
        }
        if let Some(file) = &config.sandbox.toolchains {
            config.sandbox.toolchains = Some(base.join(file));
        }
        Ok(config)
    }

    pub fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(ms) = self.sandbox.timeout_ms {
            limits.timeout = Duration::from_millis(ms);
        }
        if let Some(cap) = self.sandbox.output_cap {
            limits.output_cap = cap;
        }
        if let Some(mb) = self.sandbox.memory_mb {
            limits.memory_bytes = Some(mb * 1024 * 1024);
        }
        if let Some(isolate) = self.sandbox.isolate_network {
            limits.isolate_network = isolate;
        }
        limits
    }

    pub fn sandbox(&self) -> Result<Sandbox, Failure> {
        match &self.sandbox.toolchains {
            Some(path) => Toolchains::load(path).map(Sandbox::new).map_err(Failure::environment),
            None => Ok(Sandbox::builtin()),
        }
    }

    pub fn toolchains(&self) -> Result<Toolchains, Failure> {
        match &self.sandbox.toolchains {
            Some(path) => Toolchains::load(path).map_err(Failure::environment),
            None => Ok(Toolchains::builtin().clone()),
        }
    }

    pub fn jobs(&self, flag: Option<usize>) -> usize {
        flag.or(self.jobs).unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)).max(1)
    }
}
