//! Runs candidates and assembles pass@k reports.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicoder_lang::transpile::TargetLanguage;

use crate::cache::{outcome_key, OutcomeCache};
use crate::passk::pass_at_k;
use crate::problem::{Candidate, Problem, SourceSuite};
use crate::sandbox::{ExecOutcome, ExecStatus, Limits, Sandbox, SandboxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("candidate {sample_index} references unknown problem {problem_id:?}")]
    UnknownProblem { problem_id: String, sample_index: usize },
    #[error("problem {problem_id:?} has sample index {sample_index} twice")]
    DuplicateSample { problem_id: String, sample_index: usize },
    #[error("problem {problem_id:?}: sample indices must be 0..n, found {sample_index} with n = {n}")]
    SampleIndexOutOfRange { problem_id: String, sample_index: usize, n: usize },
    #[error("k must be at least 1")]
    InvalidK,
    #[error("sandbox: {0}")]
    Sandbox(String),
}

/// What happened to one sample.
#[derive(Debug, Clone, PartialEq)]
pub enum SampleResult {
    Executed(ExecOutcome),
    /// Failed before anything could be run; `note` says why.
    NotRun { status: ExecStatus, note: String },
    /// The problem's toolchain is not installed.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteMeta {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_suite: Option<SourceSuite>,
    pub problems: usize,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KScore {
    pub k: usize,
    /// Mean over problems with at least `k` samples; `None` when there are none.
    pub pass_at_k: Option<f64>,
    pub problems: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub sample_index: usize,
    pub status: ExecStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemReport {
    pub id: String,
    pub language: TargetLanguage,
    pub n: usize,
    pub c: usize,
    pub skipped: bool,
    pub pass_at_k: BTreeMap<usize, f64>,
    pub outcomes: Vec<SampleReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedLanguage {
    pub language: TargetLanguage,
    pub problems: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub suite: SuiteMeta,
    pub toolchains: BTreeMap<TargetLanguage, String>,
    pub zero_samples: bool,
    pub scores: Vec<KScore>,
    pub skipped: Vec<SkippedLanguage>,
    pub problems: Vec<ProblemReport>,
}

impl EvalReport {
    pub fn score(&self, k: usize) -> Option<f64> {
        self.scores.iter().find(|s| s.k == k).and_then(|s| s.pass_at_k)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} ({} problems, {} samples)", self.suite.name, self.suite.problems, self.suite.samples);
        for (lang, version) in &self.toolchains {
            let _ = writeln!(out, "  {lang}: {version}");
        }
        if self.zero_samples {
            let _ = writeln!(out, "no samples");
        }
        for s in &self.scores {
            let value = s.pass_at_k.map(|v| format!("{v:.4}")).unwrap_or_else(|| "n/a".into());
            let _ = writeln!(out, "pass@{:<3} {value:>8}  over {} problems", s.k, s.problems);
        }
        for s in &self.skipped {
            let _ = writeln!(out, "skipped {}: {} problems ({})", s.language, s.problems, s.reason);
        }
        let width = self.problems.iter().map(|p| p.id.len()).max().unwrap_or(2).max(2);
        let _ = writeln!(out, "\n{:<width$}  {:<10}  {:>3}  {:>3}  outcomes", "id", "language", "n", "c");
        for p in &self.problems {
            let outcomes: Vec<&str> = p.outcomes.iter().map(|o| o.status.name()).collect();
            let outcomes = if p.skipped { "skipped".to_string() } else { outcomes.join(",") };
            let _ = writeln!(out, "{:<width$}  {:<10}  {:>3}  {:>3}  {outcomes}", p.id, p.language.name(), p.n, p.c);
        }
        out
    }
}

/// Last non-empty stderr line, which for most runtimes names the error.
fn detail(outcome: &ExecOutcome) -> Option<String> {
    if outcome.status == ExecStatus::Pass {
        return None;
    }
    let line = outcome.stderr.lines().rev().map(str::trim).find(|l| !l.is_empty())?;
    Some(line.chars().take(200).collect())
}

/// Builds a report from finished samples. Pure: the same inputs always give
/// the same report.
pub fn assemble_report(
    suite: SuiteMeta,
    toolchains: BTreeMap<TargetLanguage, String>,
    problems: &[Problem],
    samples: &[(Candidate, SampleResult)],
    ks: &[usize],
) -> Result<EvalReport, EvalError> {
    if ks.contains(&0) {
        return Err(EvalError::InvalidK);
    }
    let ks: Vec<usize> = ks.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut by_problem: HashMap<&str, Vec<(&Candidate, &SampleResult)>> = HashMap::new();
    let known: HashMap<&str, &Problem> = problems.iter().map(|p| (p.id.as_str(), p)).collect();
    for (candidate, result) in samples {
        if !known.contains_key(candidate.problem_id.as_str()) {
            return Err(EvalError::UnknownProblem {
                problem_id: candidate.problem_id.clone(),
                sample_index: candidate.sample_index,
            });
        }
        by_problem.entry(candidate.problem_id.as_str()).or_default().push((candidate, result));
    }

    let mut ordered: Vec<&Problem> = problems.iter().collect();
    ordered.sort_by(|a, b| a.id.cmp(&b.id));
    let mut reports = Vec::new();
    let mut skipped: BTreeMap<TargetLanguage, usize> = BTreeMap::new();
    for problem in ordered {
        let mut entries = by_problem.remove(problem.id.as_str()).unwrap_or_default();
        entries.sort_by_key(|(c, _)| c.sample_index);
        let n = entries.len();
        for (i, (c, _)) in entries.iter().enumerate() {
            if i > 0 && entries[i - 1].0.sample_index == c.sample_index {
                return Err(EvalError::DuplicateSample { problem_id: problem.id.clone(), sample_index: c.sample_index });
            }
            if c.sample_index >= n {
                return Err(EvalError::SampleIndexOutOfRange {
                    problem_id: problem.id.clone(),
                    sample_index: c.sample_index,
                    n,
                });
            }
        }
        let is_skipped = entries.iter().any(|(_, r)| matches!(r, SampleResult::Skipped));
        if is_skipped {
            *skipped.entry(problem.language).or_default() += 1;
        }
        let outcomes: Vec<SampleReport> = entries
            .iter()
            .filter_map(|(c, r)| match r {
                SampleResult::Executed(o) => {
                    Some(SampleReport { sample_index: c.sample_index, status: o.status, detail: detail(o) })
                }
                SampleResult::NotRun { status, note } => {
                    Some(SampleReport { sample_index: c.sample_index, status: *status, detail: Some(note.clone()) })
                }
                SampleResult::Skipped => None,
            })
            .collect();
        let c = outcomes.iter().filter(|o| o.status == ExecStatus::Pass).count();
        let scores = if is_skipped {
            BTreeMap::new()
        } else {
            ks.iter().filter(|&&k| k <= n).map(|&k| (k, pass_at_k(n as u64, c as u64, k as u64).expect("0 <= c <= n, 1 <= k <= n"))).collect()
        };
        reports.push(ProblemReport {
            id: problem.id.clone(),
            language: problem.language,
            n: if is_skipped { 0 } else { n },
            c,
            skipped: is_skipped,
            pass_at_k: scores,
            outcomes,
        });
    }

    let scores = ks
        .iter()
        .map(|&k| {
            let values: Vec<f64> = reports.iter().filter_map(|p| p.pass_at_k.get(&k).copied()).collect();
            let mean = (!values.is_empty()).then(|| values.iter().sum::<f64>() / values.len() as f64);
            KScore { k, pass_at_k: mean, problems: values.len() }
        })
        .collect();
    let total: usize = reports.iter().map(|p| p.n).sum();
    Ok(EvalReport {
        suite: SuiteMeta { samples: samples.len(), problems: problems.len(), ..suite },
        toolchains,
        zero_samples: total == 0,
        scores,
        skipped: skipped
            .into_iter()
            .map(|(language, problems)| SkippedLanguage { language, problems, reason: "toolchain not installed".into() })
            .collect(),
        problems: reports,
    })
}

/// Executes candidates in a bounded worker pool, consulting the outcome cache.
pub struct Evaluator<'a> {
    pub sandbox: &'a Sandbox,
    pub cache: &'a OutcomeCache,
    pub workers: usize,
}

impl<'a> Evaluator<'a> {
    pub fn new(sandbox: &'a Sandbox, cache: &'a OutcomeCache) -> Self {
        let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
        Evaluator { sandbox, cache, workers }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    /// Runs one candidate, or returns the cached outcome for identical inputs.
    pub fn run(&self, problem: &Problem, code: &str, limits: &Limits) -> Result<SampleResult, EvalError> {
        let Some(version) = self.sandbox.toolchain_version(problem.language) else {
            return Ok(SampleResult::Skipped);
        };
        let key = outcome_key(problem, code, limits, &version);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(SampleResult::Executed(hit));
        }
        match self.sandbox.run_candidate(problem, code, limits) {
            Ok(outcome) => {
                self.cache.insert(key, outcome.clone()).map_err(|e| EvalError::Sandbox(e.to_string()))?;
                Ok(SampleResult::Executed(outcome))
            }
            Err(SandboxError::ToolchainMissing(_)) => Ok(SampleResult::Skipped),
            Err(e) => Err(EvalError::Sandbox(e.to_string())),
        }
    }

    /// Runs `jobs` in parallel; results come back in input order.
    pub fn run_all<T, F>(&self, jobs: &[T], f: F) -> Result<Vec<SampleResult>, EvalError>
    where
        T: Sync,
        F: Fn(&T) -> Result<SampleResult, EvalError> + Sync + Send,
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| EvalError::Sandbox(e.to_string()))?;
        pool.install(|| jobs.par_iter().map(&f).collect())
    }

    pub fn toolchain_versions(&self, problems: &[Problem]) -> BTreeMap<TargetLanguage, String> {
        let languages: BTreeSet<TargetLanguage> = problems.iter().map(|p| p.language).collect();
        languages.into_iter().filter_map(|l| self.sandbox.toolchain_version(l).map(|v| (l, v))).collect()
    }

    pub fn evaluate(
        &self,
        suite: &str,
        problems: &[Problem],
        candidates: &[Candidate],
        ks: &[usize],
        limits: &Limits,
    ) -> Result<EvalReport, EvalError> {
        let index: HashMap<&str, &Problem> = problems.iter().map(|p| (p.id.as_str(), p)).collect();
        for c in candidates {
            if !index.contains_key(c.problem_id.as_str()) {
                return Err(EvalError::UnknownProblem { problem_id: c.problem_id.clone(), sample_index: c.sample_index });
            }
        }
        let results = self.run_all(candidates, |c| self.run(index[c.problem_id.as_str()], &c.code, limits))?;
        let samples: Vec<(Candidate, SampleResult)> = candidates.iter().cloned().zip(results).collect();
        let source_suite = problems.first().map(|p| p.source_suite).filter(|s| problems.iter().all(|p| p.source_suite == *s));
        let meta = SuiteMeta { name: suite.to_string(), source_suite, problems: 0, samples: 0 };
        assemble_report(meta, self.toolchain_versions(problems), problems, &samples, ks)
    }
}

/// Evaluates with the bundled toolchains and an in-memory cache.
pub fn evaluate(
    problems: &[Problem],
    candidates: &[Candidate],
    ks: &[usize],
    limits: &Limits,
) -> Result<EvalReport, EvalError> {
    let sandbox = Sandbox::builtin();
    let cache = OutcomeCache::in_memory();
    Evaluator::new(&sandbox, &cache).evaluate("suite", problems, candidates, ks, limits)
}
