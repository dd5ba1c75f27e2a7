use std::path::PathBuf;

use unicoder_eval::corpus::Verdict;
use unicoder_eval::{roundtrip_bench, run_differential, Corpus, Evaluator, ExecStatus, Limits, OutcomeCache, Sandbox};
use unicoder_lang::transpile::TargetLanguage;

fn corpus() -> Corpus {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus");
    Corpus::load(&root).unwrap()
}

#[test]
fn corpus_has_thirty_programs_with_cases() {
    let corpus = corpus();
    assert_eq!(corpus.programs.len(), 30);
    for program in &corpus.programs {
        assert!(!program.cases.is_empty(), "{}", program.id);
        program.ast().unwrap();
    }
}

#[test]
fn reference_solutions_pass_their_own_tests() {
    let sandbox = Sandbox::builtin();
    if !sandbox.is_installed(TargetLanguage::Python) {
        return;
    }
    let cache = OutcomeCache::in_memory();
    let evaluator = Evaluator::new(&sandbox, &cache);
    let problems = corpus().python_problems().unwrap();
    for problem in &problems {
        let code = problem.reference.as_deref().unwrap();
        let outcome = sandbox.run_candidate(problem, code, &Limits::default()).unwrap();
        assert_eq!(outcome.status, ExecStatus::Pass, "{}: {}", problem.id, outcome.stderr);
    }
    let broken = &problems[0];
    let wrong = broken.reference.as_deref().unwrap().replace("a + b", "a - b");
    let outcome = evaluator.run(broken, &wrong, &Limits::default()).unwrap();
    assert!(matches!(outcome, unicoder_eval::SampleResult::Executed(o) if o.status == ExecStatus::Fail));
}

#[test]
fn deterministic_roundtrip_passes_everything() {
    let sandbox = Sandbox::builtin();
    if !sandbox.is_installed(TargetLanguage::Python) {
        return;
    }
    let cache = OutcomeCache::in_memory();
    let evaluator = Evaluator::new(&sandbox, &cache);
    let problems = corpus().python_problems().unwrap();
    let report = roundtrip_bench(&evaluator, &problems, None, &Limits::default()).unwrap();
    assert_eq!(report.score(1), Some(1.0), "{}", report.to_table());
    let again = roundtrip_bench(&evaluator, &problems, None, &Limits::default()).unwrap();
    assert_eq!(report.to_json(), again.to_json());
}

#[test]
fn natural_step_reference_is_a_recorded_failure() {
    let sandbox = Sandbox::builtin();
    let cache = OutcomeCache::in_memory();
    let evaluator = Evaluator::new(&sandbox, &cache);
    let mut problem = corpus().get("add").unwrap().python_problem().unwrap();
    problem.unicode = Some("FUNCTION add(a, b)\n    DO: add the two numbers\nEND FUNCTION\n".into());
    problem.reference = None;
    let report = roundtrip_bench(&evaluator, &[problem], None, &Limits::default()).unwrap();
    let outcome = &report.problems[0].outcomes[0];
    assert_eq!(outcome.status, ExecStatus::Fail);
    assert!(outcome.detail.as_deref().unwrap().starts_with("SubsetViolation"), "{outcome:?}");
    assert_eq!(report.score(1), Some(0.0));
}

#[test]
fn differential_execution_on_installed_targets() {
    let corpus = corpus();
    let sandbox = Sandbox::builtin();
    let limits = Limits { timeout: std::time::Duration::from_secs(60), ..Limits::default() };
    let ids = ["add", "fib", "max_of_list", "string_reverse", "gcd", "bubble_sort", "word_frequencies", "flatten", "pascal_row", "running_total_io"];
    let mut failures = Vec::new();
    for target in TargetLanguage::ALL {
        for id in ids {
            let result = run_differential(corpus.get(id).unwrap(), target, &sandbox, &limits);
            match &result.verdict {
                Verdict::Identical | Verdict::Skipped => {}
                other => failures.push(format!("{id} on {target}: {other:?}")),
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}
