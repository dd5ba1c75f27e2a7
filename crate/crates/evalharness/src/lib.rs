//! Sandboxed execution, pass@k, benchmark loading, the round-trip benchmark
//! and two-stage UniCode inference.

pub mod cache;
pub mod corpus;
pub mod evaluate;
pub mod passk;
pub mod problem;
pub mod roundtrip;
pub mod sandbox;
pub mod uot;

pub use cache::{outcome_key, OutcomeCache};
pub use corpus::{run_differential, Corpus, CorpusError, DifferentialResult, Verdict};
pub use evaluate::{assemble_report, evaluate, EvalError, EvalReport, Evaluator, SampleResult};
pub use passk::{pass_at_k, DomainError};
pub use problem::{custom_record, load_benchmark, parse_benchmark, Candidate, LoadError, Problem, SourceSuite};
pub use roundtrip::{reconstruct, roundtrip_bench, LlmRoundtrip, RoundtripMode};
pub use sandbox::{ExecOutcome, ExecStatus, Limits, Sandbox, SandboxError};
pub use uot::{uot_infer, StageFailed, UotOutput};
