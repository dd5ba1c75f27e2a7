//! Single boundary to chat-completion backends.
//!
//! Every pipeline stage that needs a model goes through [`Generator`]. The
//! production implementation, [`Gateway`], fronts an HTTP backend with a
//! content-addressed [`ReplayCache`] so that whole pipelines can run offline
//! and reproduce byte-identical outputs from recorded responses.
//!
//! Modes:
//!
//! - `replay`: answers come only from the cache; a miss is an error and no
//!   network call is ever attempted.
//! - `record`: cache first, then the live backend; new responses are appended
//!   to the cache file.
//! - `live`: cache first, then the live backend; new responses are kept in
//!   memory for the lifetime of the gateway only.

mod backend;
mod cache;
mod gateway;
mod request;

pub use backend::{Backend, BackendError, HttpBackend};
pub use cache::{CacheEntry, ReplayCache};
pub use gateway::{probe, BackendDescriptor, Gateway, GatewayConfig, Mode};
pub use request::{FinishReason, GenerationRequest, GenerationResponse};

use thiserror::Error;

/// Default environment variable holding the backend credential.
pub const DEFAULT_API_KEY_ENV: &str = "UNICODER_API_KEY";

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GatewayError {
    #[error("rate limited by backend after {attempts} attempts")]
    RateLimited { attempts: u32 },
    #[error("backend request timed out")]
    Timeout,
    #[error("replay cache miss for request {key}")]
    CacheMiss { key: String },
    #[error("credential missing: environment variable {var} is not set")]
    AuthMissing { var: String },
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("backend error: {0}")]
    Backend(String),
    #[error("cache error: {0}")]
    Cache(String),
}

/// Anything that can turn a request into a completion.
///
/// Implementations must be safe to call from several threads at once.
pub trait Generator: Send + Sync {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError>;
}

impl<G: Generator + ?Sized> Generator for &G {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
        (**self).generate(request)
    }
}

impl<G: Generator + ?Sized> Generator for Box<G> {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
        (**self).generate(request)
    }
}

impl<G: Generator + ?Sized> Generator for std::sync::Arc<G> {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GatewayError> {
        (**self).generate(request)
    }
}
