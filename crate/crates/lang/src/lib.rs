//! UniCode: a small, type-free pseudocode language used as an intermediate
//! representation between natural-language questions and executable code.
//!
//! - [`lang`] parses, prints and validates UniCode.
//! - [`transpile`] turns the executable subset into Python, JavaScript, C++,
//!   Rust, Go or Java.
//! - [`lift`] goes the other way: deterministically for code this crate
//!   emitted, through an LLM for anything else.

#[cfg(feature = "arbitrary")]
pub mod arbitrary;
pub mod lang;
pub mod lift;
pub mod numfmt;
pub mod prompts;
pub mod transpile;

pub use lang::*;
