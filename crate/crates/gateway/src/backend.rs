use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::{FinishReason, GenerationRequest, GenerationResponse};

#[derive(Debug, Clone, PartialEq)]
pub enum BackendError {
    RateLimited,
    Timeout,
    Other(String),
}

/// A live completion service.
pub trait Backend: Send + Sync {
    fn id(&self) -> String;
    fn complete(&self, request: &GenerationRequest) -> Result<GenerationResponse, BackendError>;
}

/// Minimal chat-completion client: one POST with a system and a user message.
pub struct HttpBackend {
    endpoint: String,
    model: String,
    api_key: String,
    agent: ureq::Agent,
}

impl HttpBackend {
    pub fn new(endpoint: impl Into<String>, model: impl Into<String>, api_key: impl Into<String>, timeout: Duration) -> Self {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .http_status_as_error(false)
            .build()
            .into();
        HttpBackend { endpoint: endpoint.into(), model: model.into(), api_key: api_key.into(), agent }
    }

    fn body(&self, request: &GenerationRequest) -> Value {
        let mut messages = Vec::new();
        if !request.system_text.is_empty() {
            messages.push(json!({"role": "system", "content": request.system_text}));
        }
        messages.push(json!({"role": "user", "content": request.user_text}));
        json!({
            "model": self.model,
            "messages": messages,
            "temperature": request.temperature,
            "max_tokens": request.max_output,
        })
    }
}

impl Backend for HttpBackend {
    fn id(&self) -> String {
        format!("{}@{}", self.model, self.endpoint)
    }

    fn complete(&self, request: &GenerationRequest) -> Result<GenerationResponse, BackendError> {
        let started = Instant::now();
        let result = self
            .agent
            .post(&self.endpoint)
            .header("Authorization", &format!("Bearer {}", self.api_key))
            .send_json(self.body(request));
        let mut response = match result {
            Ok(r) => r,
            Err(ureq::Error::Timeout(_)) => return Err(BackendError::Timeout),
            Err(e) => return Err(BackendError::Other(e.to_string())),
        };
        let status = response.status().as_u16();
        if status == 429 {
            return Err(BackendError::RateLimited);
        }
        if !(200..300).contains(&status) {
            let detail = response.body_mut().read_to_string().unwrap_or_default();
            return Err(BackendError::Other(format!("HTTP {status}: {detail}")));
        }
        let payload: Value = response
            .body_mut()
            .read_json()
            .map_err(|e| BackendError::Other(format!("malformed response body: {e}")))?;
        let choice = &payload["choices"][0];
        let text = choice["message"]["content"].as_str().unwrap_or_default();
        let finish = match choice["finish_reason"].as_str() {
            Some("length") => FinishReason::Length,
            Some("stop") | None => FinishReason::Stop,
            Some(_) => FinishReason::Stop,
        };
        let mut out = GenerationResponse::new(text, finish, self.id());
        out.latency_ms = started.elapsed().as_millis() as u64;
        Ok(out)
    }
}
