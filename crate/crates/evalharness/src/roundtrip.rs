//! Reconstruction benchmark: lift each reference solution to UniCode, turn
//! the UniCode back into code in the same language and run that against the
//! problem's tests.

use serde::{Deserialize, Serialize};
use unicoder_gateway::Generator;
use unicoder_lang::lift::{lift, lift_llm};
use unicoder_lang::transpile::{check_executable_subset, transpile, TranspileOptions};
use unicoder_lang::{parse, pretty_print};

use crate::evaluate::{assemble_report, EvalError, EvalReport, Evaluator, SampleResult, SuiteMeta};
use crate::problem::{Candidate, Problem};
use crate::sandbox::{ExecStatus, Limits};
use crate::uot::{implement, UotPrompts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoundtripMode {
    Deterministic,
    Llm,
}

impl RoundtripMode {
    pub fn parse(text: &str) -> Option<RoundtripMode> {
        match text {
            "deterministic" => Some(RoundtripMode::Deterministic),
            "llm" => Some(RoundtripMode::Llm),
            _ => None,
        }
    }
}

/// What llm mode needs besides the problems.
pub struct LlmRoundtrip<'a> {
    pub generator: &'a dyn Generator,
    pub definition: &'a str,
}

fn failed(note: impl Into<String>) -> SampleResult {
    SampleResult::NotRun { status: ExecStatus::Fail, note: note.into() }
}

/// Why a problem without a usable reference cannot take part.
fn missing_reference(problem: &Problem) -> String {
    let Some(unicode) = &problem.unicode else {
        return "no reference solution".into();
    };
    match parse(unicode) {
        Err(d) => format!("reference UniCode does not parse: {}", d[0]),
        Ok(ast) => match check_executable_subset(&ast) {
            Err(violations) => format!("SubsetViolation: {}", violations[0].reason),
            Ok(()) => "no reference solution".into(),
        },
    }
}

/// Produces c′ from c through UniCode, or the reason it could not.
pub fn reconstruct(problem: &Problem, llm: Option<&LlmRoundtrip<'_>>) -> Result<String, String> {
    let reference = problem.reference.as_deref().ok_or_else(|| missing_reference(problem))?;
    match llm {
        None => {
            let lifted = lift(reference, problem.language).map_err(|e| format!("lift: {e}"))?;
            let emitted = transpile(&lifted.unicode, problem.language, &TranspileOptions::default())
                .map_err(|e| format!("transpile: {e}"))?;
            Ok(emitted.code)
        }
        Some(llm) => {
            let lifted = lift_llm(reference, problem.language, llm.generator, llm.definition)
                .map_err(|e| format!("lift: {e}"))?;
            let unicode_text = pretty_print(&lifted.unicode);
            let question = if problem.prompt.trim().is_empty() {
                format!("Implement `{}`.", problem.entry_point)
            } else {
                problem.prompt.clone()
            };
            let (code, _) = implement(&question, &unicode_text, problem.language, llm.generator, &UotPrompts::default())
                .map_err(|e| format!("generate: {e}"))?;
            Ok(code)
        }
    }
}

/// One sample per problem; failures before execution are recorded as
/// `fail` with a note and never stop the suite.
pub fn roundtrip_bench(
    evaluator: &Evaluator<'_>,
    problems: &[Problem],
    llm: Option<&LlmRoundtrip<'_>>,
    limits: &Limits,
) -> Result<EvalReport, EvalError> {
    let results = evaluator.run_all(problems, |problem| match reconstruct(problem, llm) {
        Ok(code) => evaluator.run(problem, &code, limits),
        Err(note) => Ok(failed(note)),
    })?;
    let samples: Vec<(Candidate, SampleResult)> = problems
        .iter()
        .zip(results)
        .map(|(p, r)| (Candidate { problem_id: p.id.clone(), code: String::new(), sample_index: 0 }, r))
        .collect();
    let name = match llm {
        None => "roundtrip-deterministic",
        Some(_) => "roundtrip-llm",
    };
    let source_suite = problems.first().map(|p| p.source_suite);
    let meta = SuiteMeta { name: name.into(), source_suite, problems: 0, samples: 0 };
    assemble_report(meta, evaluator.toolchain_versions(problems), problems, &samples, &[1])
}
