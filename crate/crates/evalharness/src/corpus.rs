//! The bundled UniCode corpus: programs plus expected output per case.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;
use unicoder_lang::parse;
use unicoder_lang::transpile::{
    literal_expr, mangle, python_quote, transpile, transpile_driver, TargetLanguage, TranspileError, TranspileOptions,
};
use unicoder_lang::UniCodeAst;

use crate::problem::{Problem, SourceSuite};
use crate::sandbox::{ExecStatus, Limits, Sandbox, SandboxError};

pub const MANIFEST: &str = "manifest.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusCase {
    pub args: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stdin: Option<String>,
    /// Everything the call prints, then the display form of its result.
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusProgram {
    pub id: String,
    pub file: String,
    pub entry: String,
    pub cases: Vec<CorpusCase>,
    #[serde(skip)]
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Manifest {
    programs: Vec<CorpusProgram>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorpusError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{id}: {message}")]
    Program { id: String, message: String },
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub root: PathBuf,
    pub programs: Vec<CorpusProgram>,
}

impl Corpus {
    /// Reads `manifest.json` under `root` and every program it lists.
    pub fn load(root: &Path) -> Result<Corpus, CorpusError> {
        let path = root.join(MANIFEST);
        let io = |p: &Path, e: String| CorpusError::Io { path: p.display().to_string(), message: e };
        let text = std::fs::read_to_string(&path).map_err(|e| io(&path, e.to_string()))?;
        let manifest: Manifest = serde_json::from_str(&text).map_err(|e| io(&path, e.to_string()))?;
        let mut programs = manifest.programs;
        for program in &mut programs {
            let file = root.join(&program.file);
            program.source = std::fs::read_to_string(&file).map_err(|e| io(&file, e.to_string()))?;
        }
        Ok(Corpus { root: root.to_path_buf(), programs })
    }

    pub fn get(&self, id: &str) -> Option<&CorpusProgram> {
        self.programs.iter().find(|p| p.id == id)
    }

    /// One custom-suite Python problem per program. The reference solution
    /// is the transpiled program; programs outside the executable subset get
    /// none.
    pub fn python_problems(&self) -> Result<Vec<Problem>, CorpusError> {
        self.programs.iter().map(CorpusProgram::python_problem).collect()
    }
}

impl CorpusProgram {
    pub fn ast(&self) -> Result<UniCodeAst, CorpusError> {
        parse(&self.source).map_err(|d| self.error(format!("does not parse: {}", d[0])))
    }

    fn error(&self, message: String) -> CorpusError {
        CorpusError::Program { id: self.id.clone(), message }
    }

    pub fn python_problem(&self) -> Result<Problem, CorpusError> {
        let ast = self.ast()?;
        let reference = match transpile(&ast, TargetLanguage::Python, &TranspileOptions::default()) {
            Ok(emitted) => Some(emitted.code),
            Err(TranspileError::SubsetViolation(_)) => None,
            Err(e) => return Err(self.error(e.to_string())),
        };
        let prompt = ast.functions[0].doc_comment.clone().unwrap_or_default();
        Ok(Problem {
            id: format!("corpus/{}", self.id),
            prompt,
            tests: python_harness(&mangle(TargetLanguage::Python, &self.entry), &self.cases),
            entry_point: self.entry.clone(),
            language: TargetLanguage::Python,
            source_suite: SourceSuite::Custom,
            reference,
            unicode: Some(self.source.clone()),
        })
    }
}

const HARNESS_PRELUDE: &str = r#"import contextlib as uc_contextlib
import io as uc_io
import json as uc_json
import sys as uc_sys


def uc_show(value, nested=False):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, str):
        if not nested:
            return value
        body = value.replace("\\", "\\\\").replace('"', '\\"')
        body = body.replace("\n", "\\n").replace("\t", "\\t").replace("\r", "\\r")
        return '"' + body + '"'
    if isinstance(value, list):
        return "[" + ", ".join(uc_show(v, True) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(uc_show(k, True) + ": " + uc_show(v, True) for k, v in value.items()) + "}"
    raise TypeError(type(value).__name__)


def uc_case(entry, args, stdin, expected):
    uc_sys.stdin = uc_io.StringIO(stdin)
    buffer = uc_io.StringIO()
    with uc_contextlib.redirect_stdout(buffer):
        result = entry(*uc_json.loads(args))
    actual = buffer.getvalue() + uc_show(result) + "\n"
    assert actual == expected, "expected %r, got %r" % (expected, actual)

"#;

/// Python assertions that call `entry` on each case with its stdin and
/// compare everything printed plus the displayed result.
pub fn python_harness(entry: &str, cases: &[CorpusCase]) -> String {
    let mut out = HARNESS_PRELUDE.to_string();
    for case in cases {
        let args = serde_json::to_string(&case.args).expect("json values serialize");
        out.push_str(&format!(
            "uc_case({entry}, {}, {}, {})\n",
            python_quote(&args),
            python_quote(case.stdin.as_deref().unwrap_or("")),
            python_quote(&case.expected)
        ));
    }
    out
}

/// Result of running one program's cases on one target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DifferentialResult {
    pub program: String,
    pub target: TargetLanguage,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Identical,
    Different { expected: String, actual: String, status: ExecStatus },
    Skipped,
    Error { message: String },
}

/// Transpiles each program with a driver for its cases, runs it on `target`
/// and compares stdout with the expected output. Cases that read stdin get a
/// program of their own.
pub fn run_differential(
    program: &CorpusProgram,
    target: TargetLanguage,
    sandbox: &Sandbox,
    limits: &Limits,
) -> DifferentialResult {
    let verdict = differential_verdict(program, target, sandbox, limits);
    DifferentialResult { program: program.id.clone(), target, verdict }
}

fn differential_verdict(program: &CorpusProgram, target: TargetLanguage, sandbox: &Sandbox, limits: &Limits) -> Verdict {
    if !sandbox.is_installed(target) {
        return Verdict::Skipped;
    }
    let ast = match program.ast() {
        Ok(ast) => ast,
        Err(e) => return Verdict::Error { message: e.to_string() },
    };
    let (plain, with_stdin): (Vec<&CorpusCase>, Vec<&CorpusCase>) = program.cases.iter().partition(|c| c.stdin.is_none());
    let mut runs: Vec<(Vec<&CorpusCase>, &str)> = Vec::new();
    if !plain.is_empty() {
        runs.push((plain, ""));
    }
    for case in with_stdin {
        runs.push((vec![case], case.stdin.as_deref().unwrap_or("")));
    }
    let mut expected = String::new();
    let mut actual = String::new();
    let mut worst = ExecStatus::Pass;
    for (cases, stdin) in runs {
        let mut driver = Vec::new();
        for case in &cases {
            match case.args.iter().map(literal_expr).collect::<Option<Vec<_>>>() {
                Some(args) => driver.push(args),
                None => return Verdict::Error { message: format!("case {:?} has no literal form", case.args) },
            }
            expected.push_str(&case.expected);
        }
        let emitted = match transpile_driver(&ast, target, &TranspileOptions::default(), &driver) {
            Ok(e) => e,
            Err(e) => return Verdict::Error { message: e.to_string() },
        };
        match sandbox.run_program(target, &emitted.code, stdin, limits) {
            Ok(outcome) => {
                actual.push_str(&outcome.stdout);
                if outcome.status != ExecStatus::Pass {
                    worst = outcome.status;
                    actual.push_str(&outcome.stderr);
                }
            }
            Err(SandboxError::ToolchainMissing(_)) => return Verdict::Skipped,
            Err(e) => return Verdict::Error { message: e.to_string() },
        }
    }
    if worst == ExecStatus::Pass && actual == expected {
        Verdict::Identical
    } else {
        Verdict::Different { expected, actual, status: worst }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harness_quotes_awkward_values() {
        let cases = vec![CorpusCase {
            args: vec![Value::String("a\"b\\c\n".into())],
            stdin: Some("1\n".into()),
            expected: "x\n".into(),
        }];
        let harness = python_harness("f", &cases);
        assert!(harness.contains(r#"uc_case(f, "[\"a\\\"b\\\\c\\n\"]", "1\n", "x\n")"#), "{harness}");
    }
}
