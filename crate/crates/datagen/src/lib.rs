//! Training corpora with UniCode: triplets from instruction pairs and raw
//! snippets, a model-graded filter, decontamination against benchmarks,
//! packing into SFT records and merging.

pub mod decontam;
pub mod generate;
pub mod merge;
pub mod pipeline;
pub mod score;
pub mod sft;
pub mod types;

pub use decontam::{decontaminate, normalize, ReferenceIndex, ReferenceItem, Removed};
pub use generate::{gen_triplet_from_snippet, gen_unicode_for_pair, GenConfig, GenError};
pub use merge::{content_hash, merge_corpora};
pub use pipeline::{gen_data, read_jsonl, to_jsonl, write_jsonl, GenDataOptions, GenDataOutput, GenInput, JsonlError};
pub use score::{score_and_filter, DEFAULT_THRESHOLD};
pub use sft::{pack_sft, TemplateSet};
pub use types::*;
