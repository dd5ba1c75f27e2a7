use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::GatewayError;

/// Default completion budget in tokens.
pub const DEFAULT_MAX_OUTPUT: u32 = 2048;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationRequest {
    pub system_text: String,
    pub user_text: String,
    pub temperature: f64,
    pub max_output: u32,
    /// Caller label for auditing. Never part of the cache key.
    #[serde(default)]
    pub tag: String,
}

#[derive(Serialize)]
struct KeyMaterial<'a> {
    system_text: &'a str,
    user_text: &'a str,
    temperature: f64,
    max_output: u32,
}

impl GenerationRequest {
    pub fn new(system_text: impl Into<String>, user_text: impl Into<String>) -> Self {
        GenerationRequest {
            system_text: system_text.into(),
            user_text: user_text.into(),
            temperature: 0.0,
            max_output: DEFAULT_MAX_OUTPUT,
            tag: String::new(),
        }
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    pub fn with_temperature(mut self, temperature: f64) -> Self {
        self.temperature = temperature;
        self
    }

    pub fn validate(&self) -> Result<(), GatewayError> {
        if self.user_text.is_empty() {
            return Err(GatewayError::InvalidRequest("user_text is empty".into()));
        }
        if !(0.0..=2.0).contains(&self.temperature) {
            return Err(GatewayError::InvalidRequest(format!(
                "temperature {} outside [0, 2]",
                self.temperature
            )));
        }
        Ok(())
    }

    /// Hex SHA-256 over the request content, excluding `tag`.
    pub fn cache_key(&self) -> String {
        let material = KeyMaterial {
            system_text: &self.system_text,
            user_text: &self.user_text,
            temperature: self.temperature,
            max_output: self.max_output,
        };
        let bytes = serde_json::to_vec(&material).expect("key material serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FinishReason {
    Stop,
    Length,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationResponse {
    pub text: String,
    pub finish_reason: FinishReason,
    pub latency_ms: u64,
    pub backend_id: String,
}

impl GenerationResponse {
    /// Builds a response, forcing `finish_reason = error` for empty text.
    pub fn new(text: impl Into<String>, finish_reason: FinishReason, backend_id: impl Into<String>) -> Self {
        let text = text.into();
        let finish_reason = if text.is_empty() { FinishReason::Error } else { finish_reason };
        GenerationResponse { text, finish_reason, latency_ms: 0, backend_id: backend_id.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_ignores_tag() {
        let a = GenerationRequest::new("sys", "hello").with_tag("stage-1");
        let b = GenerationRequest::new("sys", "hello").with_tag("audit-other");
        assert_eq!(a.cache_key(), b.cache_key());
    }

    #[test]
    fn key_depends_on_content() {
        let a = GenerationRequest::new("sys", "hello");
        assert_ne!(a.cache_key(), GenerationRequest::new("sys", "hello!").cache_key());
        assert_ne!(a.cache_key(), GenerationRequest::new("sys2", "hello").cache_key());
        assert_ne!(a.cache_key(), a.clone().with_temperature(0.7).cache_key());
    }

    #[test]
    fn validation() {
        assert!(GenerationRequest::new("s", "").validate().is_err());
        assert!(GenerationRequest::new("s", "u").with_temperature(2.5).validate().is_err());
        assert!(GenerationRequest::new("", "u").validate().is_ok());
    }

    #[test]
    fn empty_text_is_error_finish() {
        let r = GenerationResponse::new("", FinishReason::Stop, "b");
        assert_eq!(r.finish_reason, FinishReason::Error);
    }
}
