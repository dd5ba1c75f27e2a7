//! Acceptance suite. Prints one PASS/FAIL line per criterion, with its
//! timing against the budget, and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use proptest::test_runner::{Config as ProptestConfig, TestCaseError, TestRunner};
use serde_json::Value;
use unicoder_eval::{pass_at_k, run_differential, Corpus, ExecStatus, Limits, Sandbox, Verdict};
use unicoder_lang::lift::lift;
use unicoder_lang::transpile::{transpile, TargetLanguage, TranspileOptions};
use unicoder_lang::{arbitrary, parse, pretty_print, validate, Principle, Profile};

type Check = Result<String, String>;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixtures() -> PathBuf {
    root().join("fixtures")
}

/// Runs the CLI without the credential in its environment.
fn unicoder(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_unicoder"))
        .args(args)
        .env_remove("UNICODER_API_KEY")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn unicoder_ok(args: &[&str]) -> Result<String, String> {
    let (code, stdout, stderr) = unicoder(args);
    if code == 0 {
        Ok(stdout)
    } else {
        Err(format!("`unicoder {}` exited {code}: {}", args.join(" "), stderr.trim()))
    }
}

fn json(text: &str) -> Result<Value, String> {
    serde_json::from_str(text).map_err(|e| format!("bad JSON output: {e}"))
}

fn lines(path: &Path) -> Result<Vec<Value>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.lines().map(json).collect()
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn s(path: &Path) -> &str {
    path.to_str().expect("utf-8 path")
}

/// Fraction of the k-subsets of n samples, the first c of them correct,
/// that contain a correct sample. Lists every subset.
fn enumerate_subsets(n: u32, c: u32, k: u32) -> f64 {
    let correct = (1u32 << c) - 1;
    let (mut hit, mut total) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == k {
            total += 1;
            hit += u64::from(mask & correct != 0);
        }
    }
    hit as f64 / total as f64
}

fn c1_pass_at_k() -> Check {
    let mut cases = 0;
    let mut worst = 0.0f64;
    for n in 1..=12u32 {
        for c in 0..=n {
            for k in 1..=n {
                let got = pass_at_k(n.into(), c.into(), k.into()).map_err(|e| e.to_string())?;
                let want = enumerate_subsets(n, c, k);
                let err = (got - want).abs();
                worst = worst.max(err);
                ensure(err <= 1e-12, || format!("n={n} c={c} k={k}: {got} vs {want}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (n, c, k) cases, max error {worst:.1e}"))
}

fn c2_parser_round_trip() -> Check {
    let count = AtomicUsize::new(0);
    let mut runner = TestRunner::new(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() });
    runner
        .run(&arbitrary::program(), |ast| {
            count.fetch_add(1, Ordering::Relaxed);
            let text = pretty_print(&ast);
            let reparsed = parse(&text).map_err(|d| TestCaseError::fail(format!("{}\n{text}", d[0])))?;
            if reparsed.canonical() != ast.canonical() {
                return Err(TestCaseError::fail(format!("tree changed:\n{text}")));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let n = count.load(Ordering::Relaxed);
    ensure(n >= 1000, || format!("only {n} cases ran"))?;
    Ok(format!("{n} generated programs, 0 failures"))
}

fn corpus() -> Result<Corpus, String> {
    Corpus::load(&fixtures().join("corpus")).map_err(|e| e.to_string())
}

fn c3_inverse_law() -> Check {
    let corpus = corpus()?;
    let mut ok = 0;
    let mut failures = Vec::new();
    for program in &corpus.programs {
        let ast = program.ast().map_err(|e| e.to_string())?;
        let code = transpile(&ast, TargetLanguage::Python, &TranspileOptions::default()).map_err(|e| format!("{}: {e}", program.id))?;
        match lift(&code.code, TargetLanguage::Python) {
            Ok(lifted) if lifted.unicode.canonical() == ast.strip_comments().canonical() => ok += 1,
            Ok(_) => failures.push(format!("{}: tree differs", program.id)),
            Err(e) => failures.push(format!("{}: {e}", program.id)),
        }
    }
    ensure(corpus.programs.len() == 30, || format!("corpus has {} programs", corpus.programs.len()))?;
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{ok}/{} programs", corpus.programs.len()))
}

fn c4_roundtrip() -> Check {
    ensure(Sandbox::builtin().is_installed(TargetLanguage::Python), || "python toolchain not installed".into())?;
    let corpus = fixtures().join("corpus");
    let report = json(&unicoder_ok(&["--json", "roundtrip", "--corpus", s(&corpus), "--mode", "deterministic"])?)?;
    let score = report["scores"][0]["pass_at_k"].as_f64();
    let problems = report["suite"]["problems"].as_u64().unwrap_or(0);
    ensure(score == Some(1.0) && problems == 30, || format!("pass@1 = {score:?} over {problems} problems"))?;
    Ok(format!("pass@1 = 1.0 over {problems} problems"))
}

const DIFFERENTIAL: [&str; 10] = [
    "add",
    "fib",
    "max_of_list",
    "string_reverse",
    "gcd",
    "bubble_sort",
    "word_frequencies",
    "flatten",
    "pascal_row",
    "running_total_io",
];

fn c5_differential() -> Check {
    let corpus = corpus()?;
    let sandbox = Sandbox::builtin();
    let limits = Limits { timeout: Duration::from_secs(20), ..Limits::default() };
    let mut ran = Vec::new();
    let mut skipped = Vec::new();
    for target in TargetLanguage::ALL {
        if !sandbox.is_installed(target) {
            skipped.push(target.name());
            continue;
        }
        for id in DIFFERENTIAL {
            let program = corpus.get(id).ok_or_else(|| format!("{id} missing from corpus"))?;
            let result = run_differential(program, target, &sandbox, &limits);
            match result.verdict {
                Verdict::Identical => {}
                Verdict::Skipped => return Err(format!("{id} on {target} skipped although installed")),
                other => return Err(format!("{id} on {target}: {other:?}")),
            }
        }
        ran.push(target.name());
    }
    ensure(!ran.is_empty(), || "no target installed".into())?;
    let mut detail = format!("{} programs identical on {}", DIFFERENTIAL.len(), ran.join(", "));
    if !skipped.is_empty() {
        detail.push_str(&format!("; skipped (no toolchain): {}", skipped.join(", ")));
    }
    Ok(detail)
}

fn c6_validator() -> Check {
    let dir = fixtures().join("validator");
    let mut checked = 0;
    for principle in Principle::ALL {
        let prefix = principle.rule_prefix();
        let file = std::fs::read_dir(&dir)
            .map_err(|e| e.to_string())?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .find(|p| p.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with(&prefix.to_lowercase())))
            .ok_or_else(|| format!("no fixture for {prefix}"))?;
        let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
        let ast = parse(&text).map_err(|d| format!("{}: {}", file.display(), d[0]))?;
        let report = validate(&ast, &Profile::all());
        ensure(report.failing() == vec![principle], || format!("{prefix} fixture fails {:?}", report.failing()))?;
        let families: BTreeSet<&str> = report.diagnostics.iter().map(|d| d.rule_id.split('.').next().unwrap_or("")).collect();
        ensure(families == BTreeSet::from([prefix]), || format!("{prefix} fixture reports {families:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} fixtures, each failing only its own family"))
}

fn origin_ids(path: &Path, pointer: &str) -> Result<BTreeSet<String>, String> {
    Ok(lines(path)?.iter().filter_map(|v| v.pointer(pointer).and_then(Value::as_str)).map(str::to_string).collect())
}

fn c7_decontamination(tmp: &Path) -> Check {
    let input = fixtures().join("decontam/triplets.jsonl");
    let refs = fixtures().join("decontam/references.jsonl");
    let (kept, removed) = (tmp.join("kept.jsonl"), tmp.join("removed.jsonl"));
    unicoder_ok(&["decontaminate", s(&input), "--references", s(&refs), "--out", s(&kept), "--removed", s(&removed)])?;
    let seeded: BTreeSet<String> = origin_ids(&input, "/origin_id")?.into_iter().filter(|id| id.starts_with("dup-")).collect();
    let exact = seeded.iter().filter(|id| id.starts_with("dup-exact")).count();
    ensure(seeded.len() == 20 && exact == 10, || format!("fixture seeds {} duplicates ({exact} exact)", seeded.len()))?;
    let gone = origin_ids(&removed, "/triplet/origin_id")?;
    ensure(gone == seeded, || format!("removed {gone:?}"))?;
    let total = lines(&input)?.len();
    let left = lines(&kept)?.len();
    ensure(left == total - 20, || format!("{left} of {total} kept"))?;

    let (again, removed_again) = (tmp.join("kept2.jsonl"), tmp.join("removed2.jsonl"));
    unicoder_ok(&["decontaminate", s(&kept), "--references", s(&refs), "--out", s(&again), "--removed", s(&removed_again)])?;
    ensure(lines(&removed_again)?.is_empty(), || "second pass removed something".into())?;
    ensure(std::fs::read(&kept).ok() == std::fs::read(&again).ok(), || "second pass changed the corpus".into())?;
    Ok(format!("removed exactly the 20 seeded of {total}; rerun removes 0"))
}

fn c8_sft(tmp: &Path) -> Check {
    let input = fixtures().join("sft/triplets.jsonl");
    let (first, second) = (tmp.join("sft1.jsonl"), tmp.join("sft2.jsonl"));
    unicoder_ok(&["pack-sft", s(&input), "--out", s(&first)])?;
    unicoder_ok(&["pack-sft", s(&input), "--out", s(&second)])?;
    let triplets = lines(&input)?;
    let records = lines(&first)?;
    ensure(triplets.len() == 50, || format!("{} triplets", triplets.len()))?;
    ensure(records.len() == 200, || format!("{} records", records.len()))?;
    let separator = "\n\n### Code:\n";
    for (t, group) in triplets.iter().zip(records.chunks(4)) {
        let field = |v: &Value, p: &str| v.pointer(p).and_then(Value::as_str).unwrap_or("").to_string();
        let (q, a, p) = (field(t, "/question"), field(t, "/answer/code"), field(t, "/unicode"));
        let id = field(t, "/origin_id");
        let objectives: Vec<String> = group.iter().map(|r| field(r, "/objective")).collect();
        ensure(objectives == ["qa", "qp", "pa", "uot"], || format!("{id}: objectives {objectives:?}"))?;
        let prompt = |i: usize| field(&group[i], "/prompt");
        let completion = |i: usize| field(&group[i], "/completion");
        ensure(prompt(0).contains(&q) && !prompt(0).contains(p.trim_end()) && completion(0) == a, || format!("{id}: qa"))?;
        ensure(prompt(1).contains(&q) && completion(1) == p, || format!("{id}: qp"))?;
        ensure(prompt(2).contains(p.trim_end()) && !prompt(2).contains(&q) && completion(2) == a, || format!("{id}: pa"))?;
        let uot = completion(3);
        ensure(prompt(3).contains(&q) && uot == format!("{}{separator}{a}", p.trim_end()), || format!("{id}: uot"))?;
    }
    ensure(std::fs::read(&first).ok() == std::fs::read(&second).ok(), || "runs differ".into())?;
    Ok("50 triplets x 4 objectives = 200 records; identical across runs".into())
}

fn c9_offline_golden(tmp: &Path) -> Check {
    let data = fixtures().join("datagen");
    let cache = fixtures().join("replay/datagen.jsonl");
    let golden = fixtures().join("golden/datagen");
    let out = |name: &str| tmp.join(name);
    let mut calls = 0;
    for (mode, input) in [("pairs", "pairs.jsonl"), ("snippets", "snippets.jsonl")] {
        let report = json(&unicoder_ok(&[
            "--json",
            "gen-data",
            s(&data.join(input)),
            "--mode",
            mode,
            "--replay",
            s(&cache),
            "--out",
            s(&out(&format!("{mode}_corpus.jsonl"))),
            "--audit",
            s(&out(&format!("{mode}_audit.jsonl"))),
        ])?)?;
        ensure(report["mode"] == "replay", || format!("gen-data ran in mode {}", report["mode"]))?;
        calls += report["backend_calls"].as_u64().ok_or("no backend_calls in output")?;
    }
    ensure(calls == 0, || format!("{calls} backend calls"))?;
    unicoder_ok(&["merge", s(&out("pairs_corpus.jsonl")), s(&out("snippets_corpus.jsonl")), "--out", s(&out("merged.jsonl"))])?;
    let refs = format!("toy={}", s(&data.join("references.jsonl")));
    unicoder_ok(&[
        "decontaminate",
        s(&out("merged.jsonl")),
        "--references",
        &refs,
        "--out",
        s(&out("decontaminated.jsonl")),
        "--removed",
        s(&out("removed.jsonl")),
    ])?;
    unicoder_ok(&["pack-sft", s(&out("decontaminated.jsonl")), "--out", s(&out("sft.jsonl")), "--audit", s(&out("sft_audit.jsonl"))])?;
    let names = [
        "pairs_corpus.jsonl",
        "pairs_audit.jsonl",
        "snippets_corpus.jsonl",
        "snippets_audit.jsonl",
        "merged.jsonl",
        "decontaminated.jsonl",
        "removed.jsonl",
        "sft.jsonl",
        "sft_audit.jsonl",
    ];
    for name in names {
        let got = std::fs::read(out(name)).map_err(|e| format!("{name}: {e}"))?;
        let want = std::fs::read(golden.join(name)).map_err(|e| format!("golden {name}: {e}"))?;
        ensure(got == want, || format!("{name} differs from its golden"))?;
    }
    Ok(format!("{} files byte-identical; 0 backend calls", names.len()))
}

fn c10_sandbox() -> Check {
    let sandbox = Sandbox::builtin();
    ensure(sandbox.is_installed(TargetLanguage::Python), || "python toolchain not installed".into())?;
    let limit = Duration::from_secs(2);
    let limits = Limits { timeout: limit, ..Limits::default() };
    let start = Instant::now();
    let looping = sandbox.run_program(TargetLanguage::Python, "while True:\n    pass\n", "", &limits).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(looping.status == ExecStatus::Timeout, || format!("infinite loop gave {:?}", looping.status))?;
    ensure(elapsed <= limit + Duration::from_secs(1), || format!("timeout took {elapsed:?}"))?;

    let cap = 64 * 1024;
    let limits = Limits { output_cap: cap, ..Limits::default() };
    let flood = "import sys\nsys.stdout.write('x' * (1 << 20))\n";
    let passing = sandbox.run_program(TargetLanguage::Python, flood, "", &limits).map_err(|e| e.to_string())?;
    let failing = sandbox
        .run_program(TargetLanguage::Python, &format!("{flood}raise AssertionError('wrong')\n"), "", &limits)
        .map_err(|e| e.to_string())?;
    for (outcome, status) in [(&passing, ExecStatus::Pass), (&failing, ExecStatus::Fail)] {
        ensure(outcome.stdout.len() == cap && outcome.stdout_truncated, || format!("kept {} bytes", outcome.stdout.len()))?;
        ensure(outcome.status == status, || format!("1 MiB output gave {:?}, expected {status:?}", outcome.status))?;
    }
    Ok(format!("timeout after {:.2}s (limit 2s); 1 MiB stdout cut to {cap} bytes, pass and fail kept", elapsed.as_secs_f64()))
}

fn main() {
    let tmp = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Check>)> = vec![
        ("pass@k equals subset enumeration for n <= 12 (tol 1e-12)", Duration::from_secs(5), Box::new(c1_pass_at_k)),
        ("parse(pretty_print(a)) == a over >= 1000 generated ASTs", Duration::from_secs(30), Box::new(c2_parser_round_trip)),
        ("lift(transpile(p, python)) == strip_comments(p) on 30/30", Duration::from_secs(10), Box::new(c3_inverse_law)),
        ("deterministic roundtrip pass@1 = 1.0 on the corpus", Duration::from_secs(120), Box::new(c4_roundtrip)),
        ("differential execution on every installed target", Duration::MAX, Box::new(c5_differential)),
        ("one violation fixture per rule family R1-R7", Duration::MAX, Box::new(c6_validator)),
        ("decontamination removes the 20 seeded duplicates", Duration::MAX, Box::new(|| c7_decontamination(tmp.path()))),
        ("SFT packing gives 200 well-formed records", Duration::MAX, Box::new(|| c8_sft(tmp.path()))),
        ("offline gen-data, decontaminate, pack-sft match goldens", Duration::MAX, Box::new(|| c9_offline_golden(tmp.path()))),
        ("sandbox timeout and output cap", Duration::MAX, Box::new(c10_sandbox)),
    ];
    let mut failed = 0;
    for (index, (title, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = elapsed > *budget;
        let budget_text = if *budget == Duration::MAX { String::new() } else { format!(" / {}s", budget.as_secs()) };
        let (verdict, detail) = match (&result, over) {
            (Ok(detail), false) => ("PASS", detail.clone()),
            (Ok(detail), true) => ("FAIL", format!("over budget; {detail}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {verdict} [{:.2}s{budget_text}] {title}: {detail}", index + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
