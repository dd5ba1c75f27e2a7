use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;
use unicoder_lang::transpile::{attach_tests, TargetLanguage};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceSuite {
    HumanevalStyle,
    MbppStyle,
    MultiplEStyle,
    Custom,
}

impl SourceSuite {
    pub const ALL: [SourceSuite; 4] =
        [SourceSuite::HumanevalStyle, SourceSuite::MbppStyle, SourceSuite::MultiplEStyle, SourceSuite::Custom];

    pub fn name(self) -> &'static str {
        match self {
            SourceSuite::HumanevalStyle => "humaneval",
            SourceSuite::MbppStyle => "mbpp",
            SourceSuite::MultiplEStyle => "multipl-e",
            SourceSuite::Custom => "custom",
        }
    }

    pub fn parse(text: &str) -> Option<SourceSuite> {
        let text = text.trim().to_ascii_lowercase();
        let text = text.strip_suffix("-style").unwrap_or(&text);
        SourceSuite::ALL.into_iter().find(|s| s.name() == text || (text == "multiple" && *s == SourceSuite::MultiplEStyle))
    }
}

impl fmt::Display for SourceSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Problem {
    pub id: String,
    pub prompt: String,
    /// Test harness in the problem's language.
    pub tests: String,
    pub entry_point: String,
    pub language: TargetLanguage,
    pub source_suite: SourceSuite,
    /// Reference solution, when the benchmark ships one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    /// UniCode the reference was produced from, for round-trip corpora.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unicode: Option<String>,
}

impl Problem {
    /// The program that is actually executed: the candidate joined with the
    /// tests the way the source suite expects.
    pub fn program(&self, code: &str) -> String {
        match self.source_suite {
            SourceSuite::HumanevalStyle => {
                format!("{}\n\n{}\n\ncheck({})\n", code.trim_end(), self.tests.trim_end(), self.entry_point)
            }
            SourceSuite::MbppStyle | SourceSuite::MultiplEStyle | SourceSuite::Custom => {
                attach_tests(self.language, code, &self.tests)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub problem_id: String,
    pub code: String,
    pub sample_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Schema { line: usize, message: String },
    #[error("line {line}: duplicate problem id {id:?}")]
    DuplicateId { line: usize, id: String },
}

pub fn load_benchmark(path: &Path, format: SourceSuite) -> Result<Vec<Problem>, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_benchmark(&text, format)
}

/// Parses JSON lines; blank lines are skipped and line numbers are 1-based.
pub fn parse_benchmark(text: &str, format: SourceSuite) -> Result<Vec<Problem>, LoadError> {
    let mut problems = Vec::new();
    let mut ids = HashSet::new();
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let schema = |message: String| LoadError::Schema { line: line_no, message };
        let value: Value = serde_json::from_str(line).map_err(|e| schema(format!("invalid JSON: {e}")))?;
        let Value::Object(record) = value else {
            return Err(schema("expected a JSON object".into()));
        };
        let problem = match format {
            SourceSuite::HumanevalStyle => humaneval(&record),
            SourceSuite::MbppStyle => mbpp(&record),
            SourceSuite::MultiplEStyle => multipl_e(&record),
            SourceSuite::Custom => custom(&record),
        }
        .map_err(schema)?;
        if problem.tests.trim().is_empty() {
            return Err(schema("`tests` is empty".into()));
        }
        if !ids.insert(problem.id.clone()) {
            return Err(LoadError::DuplicateId { line: line_no, id: problem.id });
        }
        problems.push(problem);
    }
    Ok(problems)
}

type Record = Map<String, Value>;

fn text(record: &Record, field: &str) -> Result<String, String> {
    match record.get(field) {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(format!("field `{field}` must be a string")),
        None => Err(format!("missing field `{field}`")),
    }
}

fn optional_text(record: &Record, field: &str) -> Result<Option<String>, String> {
    match record.get(field) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => text(record, field).map(Some),
    }
}

fn id(record: &Record, field: &str) -> Result<String, String> {
    match record.get(field) {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(Value::Number(n)) => Ok(n.to_string()),
        Some(_) => Err(format!("field `{field}` must be a string or number")),
        None => Err(format!("missing field `{field}`")),
    }
}

fn completion(record: &Record) -> Result<Option<String>, String> {
    let body = optional_text(record, "canonical_solution")?;
    Ok(body.map(|b| format!("{}{b}", text(record, "prompt").unwrap_or_default())))
}

fn language(record: &Record) -> Result<TargetLanguage, String> {
    let name = text(record, "language")?;
    TargetLanguage::parse(&name).ok_or_else(|| format!("unknown language {name:?}"))
}

/// Fields: `task_id`, `prompt`, `test` (defines `check`), `entry_point`,
/// optional `canonical_solution`, which continues the prompt.
fn humaneval(record: &Record) -> Result<Problem, String> {
    Ok(Problem {
        id: id(record, "task_id")?,
        prompt: text(record, "prompt")?,
        tests: text(record, "test")?,
        entry_point: text(record, "entry_point")?,
        language: TargetLanguage::Python,
        source_suite: SourceSuite::HumanevalStyle,
        reference: completion(record)?,
        unicode: None,
    })
}

/// Fields: `task_id`, `text`, `test_list` (assert lines), optional
/// `test_setup_code`, `code` and `entry_point`. Without `entry_point` the
/// name called by the first assertion is used.
fn mbpp(record: &Record) -> Result<Problem, String> {
    let asserts: Vec<String> = match record.get("test_list") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| v.as_str().map(str::to_string).ok_or_else(|| "`test_list` items must be strings".to_string()))
            .collect::<Result<_, _>>()?,
        Some(_) => return Err("field `test_list` must be an array".into()),
        None => return Err("missing field `test_list`".into()),
    };
    if asserts.is_empty() {
        return Err("`test_list` is empty".into());
    }
    let entry_point = match optional_text(record, "entry_point")? {
        Some(e) => e,
        None => {
            let called = Regex::new(r"^\s*assert\s+\(?\s*(?:not\s+)?\(?\s*([A-Za-z_][A-Za-z0-9_]*)\s*\(").unwrap();
            called
                .captures(&asserts[0])
                .map(|c| c[1].to_string())
                .ok_or_else(|| "cannot find the tested function in the first assertion".to_string())?
        }
    };
    let mut tests = optional_text(record, "test_setup_code")?.unwrap_or_default();
    if !tests.is_empty() && !tests.ends_with('\n') {
        tests.push('\n');
    }
    for line in &asserts {
        tests.push_str(line);
        tests.push('\n');
    }
    Ok(Problem {
        id: id(record, "task_id")?,
        prompt: text(record, "text")?,
        tests,
        entry_point,
        language: TargetLanguage::Python,
        source_suite: SourceSuite::MbppStyle,
        reference: optional_text(record, "code")?,
        unicode: None,
    })
}

/// Fields: `name`, `language`, `prompt`, `tests` (a complete harness that
/// follows the candidate), optional `entry_point` and `canonical_solution`,
/// which continues the prompt.
/// Names of the form `HumanEval_12_longest` yield the entry point `longest`.
fn multipl_e(record: &Record) -> Result<Problem, String> {
    let name = text(record, "name")?;
    let entry_point = match optional_text(record, "entry_point")? {
        Some(e) => e,
        None => {
            let prefixed = Regex::new(r"^[A-Za-z]+_\d+_(.+)$").unwrap();
            prefixed.captures(&name).map(|c| c[1].to_string()).unwrap_or_else(|| name.clone())
        }
    };
    Ok(Problem {
        id: name,
        prompt: text(record, "prompt")?,
        tests: text(record, "tests")?,
        entry_point,
        language: language(record)?,
        source_suite: SourceSuite::MultiplEStyle,
        reference: completion(record)?,
        unicode: None,
    })
}

/// Fields: `id`, `prompt`, `tests`, `entry_point`, `language`, optional
/// `canonical_solution` and `unicode`.
fn custom(record: &Record) -> Result<Problem, String> {
    Ok(Problem {
        id: id(record, "id")?,
        prompt: text(record, "prompt")?,
        tests: text(record, "tests")?,
        entry_point: text(record, "entry_point")?,
        language: language(record)?,
        source_suite: SourceSuite::Custom,
        reference: optional_text(record, "canonical_solution")?,
        unicode: optional_text(record, "unicode")?,
    })
}

/// JSON line for a problem in the custom format, the inverse of the custom
/// loader.
pub fn custom_record(problem: &Problem) -> Value {
    let mut record = Map::new();
    record.insert("id".into(), Value::String(problem.id.clone()));
    record.insert("prompt".into(), Value::String(problem.prompt.clone()));
    record.insert("tests".into(), Value::String(problem.tests.clone()));
    record.insert("entry_point".into(), Value::String(problem.entry_point.clone()));
    record.insert("language".into(), Value::String(problem.language.name().into()));
    if let Some(reference) = &problem.reference {
        record.insert("canonical_solution".into(), Value::String(reference.clone()));
    }
    if let Some(unicode) = &problem.unicode {
        record.insert("unicode".into(), Value::String(unicode.clone()));
    }
    Value::Object(record)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(SourceSuite::parse("HumanEval-style"), Some(SourceSuite::HumanevalStyle));
        assert_eq!(SourceSuite::parse("multiple"), Some(SourceSuite::MultiplEStyle));
        assert_eq!(SourceSuite::parse("mbpp"), Some(SourceSuite::MbppStyle));
        assert_eq!(SourceSuite::parse("other"), None);
    }

    #[test]
    fn mbpp_entry_point_from_assertion() {
        let line = r#"{"task_id": 7, "text": "t", "test_list": ["assert not is_odd(2) == True", "assert is_odd(3)"]}"#;
        let problems = parse_benchmark(line, SourceSuite::MbppStyle).unwrap();
        assert_eq!(problems[0].entry_point, "is_odd");
        assert_eq!(problems[0].id, "7");
        assert_eq!(problems[0].tests, "assert not is_odd(2) == True\nassert is_odd(3)\n");
    }

    #[test]
    fn multipl_e_entry_point_from_name() {
        let line = r#"{"name": "HumanEval_3_below_zero", "language": "cpp", "prompt": "p", "tests": "int main() {}"}"#;
        let problem = &parse_benchmark(line, SourceSuite::MultiplEStyle).unwrap()[0];
        assert_eq!(problem.entry_point, "below_zero");
        assert_eq!(problem.language, TargetLanguage::Cpp);
    }

    #[test]
    fn schema_errors_name_the_line() {
        let text = "\n{\"task_id\": \"a\", \"prompt\": \"p\", \"entry_point\": \"f\"}\n";
        match parse_benchmark(text, SourceSuite::HumanevalStyle) {
            Err(LoadError::Schema { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("`test`"));
            }
            other => panic!("{other:?}"),
        }
        let dup = "{\"id\":\"x\",\"prompt\":\"\",\"tests\":\"t\",\"entry_point\":\"f\",\"language\":\"python\"}\n".repeat(2);
        assert_eq!(
            parse_benchmark(&dup, SourceSuite::Custom),
            Err(LoadError::DuplicateId { line: 2, id: "x".into() })
        );
    }

    #[test]
    fn humaneval_program_calls_check() {
        let problem = Problem {
            id: "a".into(),
            prompt: String::new(),
            tests: "def check(candidate):\n    assert candidate() == 1\n".into(),
            entry_point: "one".into(),
            language: TargetLanguage::Python,
            source_suite: SourceSuite::HumanevalStyle,
            reference: None,
            unicode: None,
        };
        assert!(problem.program("def one():\n    return 1\n").ends_with("\n\ncheck(one)\n"));
    }

    #[test]
    fn custom_records_round_trip() {
        let problem = Problem {
            id: "x".into(),
            prompt: "p".into(),
            tests: "t".into(),
            entry_point: "f".into(),
            language: TargetLanguage::Go,
            source_suite: SourceSuite::Custom,
            reference: Some("r".into()),
            unicode: None,
        };
        let line = custom_record(&problem).to_string();
        assert_eq!(parse_benchmark(&line, SourceSuite::Custom).unwrap(), vec![problem]);
    }
}
