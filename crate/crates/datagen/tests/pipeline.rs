//! The generation pipeline driven from a committed replay cache.
//!
//! `regenerate_datagen_fixtures` records a deterministic stand-in backend
//! through the gateway and rewrites the goldens. It is ignored so that
//! normal runs never touch fixtures.

use std::path::{Path, PathBuf};

use unicoder_datagen::{
    decontaminate, gen_data, merge_corpora, pack_sft, read_jsonl, to_jsonl, CodeSnippet, GenDataOptions, GenDataOutput,
    GenInput, InstructionPair, Objective, ReferenceIndex, ReferenceItem, TemplateSet, Triplet,
};
use unicoder_gateway::{
    Backend, BackendError, FinishReason, Gateway, GatewayConfig, GenerationRequest, GenerationResponse,
};
use unicoder_lang::parse;
use unicoder_lang::prompts::DEFINITION;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn golden(name: &str) -> PathBuf {
    fixtures().join("golden/datagen").join(name)
}

fn pairs() -> Vec<InstructionPair> {
    read_jsonl(&fixtures().join("datagen/pairs.jsonl")).unwrap()
}

fn snippets() -> Vec<CodeSnippet> {
    read_jsonl(&fixtures().join("datagen/snippets.jsonl")).unwrap()
}

fn references() -> Vec<ReferenceItem> {
    read_jsonl(&fixtures().join("datagen/references.jsonl")).unwrap()
}

struct Outputs {
    pairs: GenDataOutput,
    snippets: GenDataOutput,
    merged: Vec<Triplet>,
    kept: Vec<Triplet>,
    removed: String,
    sft: String,
    sft_audit: String,
}

fn run(gateway: &Gateway, jobs: usize) -> Outputs {
    let options = GenDataOptions { jobs, ..GenDataOptions::default() };
    let pairs = gen_data(&GenInput::Pairs(pairs()), gateway, DEFINITION, &options).unwrap();
    let snippets = gen_data(&GenInput::Snippets(snippets()), gateway, DEFINITION, &options).unwrap();
    let (merged, _) = merge_corpora(vec![pairs.corpus.clone(), snippets.corpus.clone()]);
    let mut index = ReferenceIndex::new();
    index.add_set("toy", &references());
    let (kept, removed) = decontaminate(merged.clone(), &index);
    let (records, audit) = pack_sft(&kept, &Objective::ALL, &TemplateSet::bundled());
    Outputs {
        pairs,
        snippets,
        merged,
        kept,
        removed: to_jsonl(&removed),
        sft: to_jsonl(&records),
        sft_audit: to_jsonl(&audit),
    }
}

fn files(out: &Outputs) -> Vec<(&'static str, String)> {
    vec![
        ("pairs_corpus.jsonl", to_jsonl(&out.pairs.corpus)),
        ("pairs_audit.jsonl", to_jsonl(&out.pairs.audit)),
        ("snippets_corpus.jsonl", to_jsonl(&out.snippets.corpus)),
        ("snippets_audit.jsonl", to_jsonl(&out.snippets.audit)),
        ("merged.jsonl", to_jsonl(&out.merged)),
        ("decontaminated.jsonl", to_jsonl(&out.kept)),
        ("removed.jsonl", out.removed.clone()),
        ("sft.jsonl", out.sft.clone()),
        ("sft_audit.jsonl", out.sft_audit.clone()),
    ]
}

fn replay() -> Gateway {
    Gateway::from_config(GatewayConfig::replay(fixtures().join("replay/datagen.jsonl"))).unwrap()
}

#[test]
fn replay_reproduces_every_golden() {
    let gateway = replay();
    let out = run(&gateway, 4);
    for (name, text) in files(&out) {
        let expected = std::fs::read_to_string(golden(name)).unwrap();
        assert_eq!(text, expected, "{name} differs from its golden");
    }
    assert_eq!(gateway.backend_calls(), 0);
}

#[test]
fn worker_count_does_not_change_output() {
    let one = files(&run(&replay(), 1));
    let many = files(&run(&replay(), 8));
    assert_eq!(one, many);
}

#[test]
fn pairs_cover_each_outcome() {
    let out = run(&replay(), 2).pairs;
    let ids: Vec<&str> = out.corpus.iter().map(|t| t.origin_id.as_str()).collect();
    assert_eq!(ids.len(), 8);
    assert!(!ids.contains(&"pair-empty"));
    let broken = out.corpus.iter().find(|t| t.origin_id == "pair-flatten").unwrap();
    assert!(!broken.unicode_parses && !broken.unicode_diagnostics.is_empty());
    for t in out.corpus.iter().filter(|t| t.unicode_parses) {
        parse(&t.unicode).unwrap();
    }
    let stages: Vec<(&str, &str)> = out.audit.iter().map(|a| (a.origin_id.as_str(), a.stage.as_str())).collect();
    assert_eq!(stages, [("pair-flatten", "parse"), ("pair-empty", "generate")]);
    let languages: Vec<_> = out.corpus.iter().map(|t| t.language).collect();
    let mut sorted = languages.clone();
    sorted.sort();
    assert_eq!(languages, sorted);
}

#[test]
fn snippets_are_filtered_by_score() {
    let out = run(&replay(), 2).snippets;
    let mut kept: Vec<&str> = out.corpus.iter().map(|t| t.origin_id.as_str()).collect();
    kept.sort();
    assert_eq!(kept, ["snip-celsius", "snip-digits"]);
    let audit: Vec<(&str, &str, Option<f64>)> =
        out.audit.iter().map(|a| (a.origin_id.as_str(), a.stage.as_str(), a.score)).collect();
    assert_eq!(
        audit,
        [("snip-noanswer", "generate", None), ("snip-words", "score", Some(3.0)), ("snip-twosum", "score", Some(-1.0))]
    );
    assert!(out.audit[0].reason.contains("Answer"));
}

#[test]
fn decontamination_catches_answers_and_questions() {
    let out = run(&replay(), 2);
    let removed: Vec<serde_json::Value> = out.removed.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let mut found: Vec<(String, String)> = removed
        .iter()
        .map(|r| (r["triplet"]["origin_id"].as_str().unwrap().to_string(), r["matched"].as_str().unwrap().to_string()))
        .collect();
    found.sort();
    assert_eq!(
        found,
        [
            ("pair-add".to_string(), "answer".to_string()),
            ("pair-dedup".to_string(), "question".to_string()),
            ("pair-palindrome".to_string(), "answer".to_string()),
        ]
    );
    assert_eq!(out.kept.len() + removed.len(), out.merged.len());
}

#[test]
fn merging_is_order_independent() {
    let out = run(&replay(), 2);
    let (a, dropped) = merge_corpora(vec![out.pairs.corpus.clone(), out.snippets.corpus.clone()]);
    let (b, _) = merge_corpora(vec![out.snippets.corpus.clone(), out.pairs.corpus.clone()]);
    assert_eq!(dropped, 0);
    assert_eq!(a, b);
    let (c, dropped) = merge_corpora(vec![a.clone(), b]);
    assert_eq!((c, dropped), (a.clone(), a.len()));
}

/// Corpus program whose UniCode answers each question.
const LIFTS: &[(&str, &str)] = &[
    ("Write a function add(a, b)", "add"),
    ("Write fib(n)", "fib"),
    ("Implement gcd(first, second)", "gcd"),
    ("Count the vowels in a string", "count_vowels"),
    ("Check whether a string reads the same", "is_palindrome"),
    ("Return the FizzBuzz words", "fizzbuzz"),
    ("Remove duplicate values", "remove_duplicates"),
    ("Sum the decimal digits", "sum_of_digits"),
    ("Convert a list of Celsius", "celsius_to_fahrenheit"),
    ("Count the words in a sentence", "count_words"),
    ("Find the indices of two numbers", "two_sum"),
];

const BROKEN_LIFT: &str = "```\nFUNCTION flatten(lists)\n    SET out TO []\n    FOR EACH inner IN lists\n        APPEND(out, inner)\n    END FOR\n    RETURN out\n```";

/// Snippet marker, question, answer.
const EXERCISES: &[(&str, &str, &str)] = &[
    (
        "total += n % 10",
        "Sum the decimal digits of a non-negative integer n.",
        "def sum_of_digits(n):\n    total = 0\n    while n > 0:\n        total += n % 10\n        n //= 10\n    return total\n",
    ),
    (
        "c*9/5 + 32",
        "Convert a list of Celsius temperatures to Fahrenheit and return the new list.",
        "func celsiusToFahrenheit(temps []float64) []float64 {\n\tout := make([]float64, len(temps))\n\tfor i, c := range temps {\n\t\tout[i] = c*9/5 + 32\n\t}\n\treturn out\n}\n",
    ),
    (
        "text.split(' ')",
        "Count the words in a sentence, where words are separated by spaces.",
        "function countWords(text) {\n  return text.split(' ').filter(w => w.length > 0).length;\n}\n",
    ),
    (
        "target - nums[i]",
        "Find the indices of two numbers in a list that add up to a target.",
        "#include <unordered_map>\n#include <vector>\n\nstd::vector<int> twoSum(const std::vector<int>& nums, int target) {\n    std::unordered_map<int, int> seen;\n    for (int i = 0; i < (int)nums.size(); ++i) {\n        auto it = seen.find(target - nums[i]);\n        if (it != seen.end()) return {it->second, i};\n        seen.emplace(nums[i], i);\n    }\n    return {};\n}\n",
    ),
];

const SCORES: &[(&str, &str)] = &[
    ("Sum the decimal digits", "Score: 8\nThe answer is correct and the UniCode follows it step by step."),
    ("Convert a list of Celsius", "Score: 9\nClear question, correct answer, faithful UniCode."),
    ("Count the words in a sentence", "Score: 3\nThe question leaves the handling of repeated spaces unclear."),
    ("Find the indices of two numbers", "This example looks reasonable overall, though the UniCode is loose."),
];

fn lookup<'a, T: Copy>(table: &'a [(&'a str, T)], text: &str) -> Result<T, BackendError> {
    table
        .iter()
        .find(|(key, _)| text.contains(key))
        .map(|(_, v)| *v)
        .ok_or_else(|| BackendError::Other("unexpected prompt".into()))
}

/// Answers the prompts this crate sends from fixed tables.
struct StandIn;

impl Backend for StandIn {
    fn id(&self) -> String {
        "stand-in".into()
    }

    fn complete(&self, request: &GenerationRequest) -> Result<GenerationResponse, BackendError> {
        let text = &request.user_text;
        let reply = if text.contains("Rate the training example") {
            lookup(SCORES, text)?.to_string()
        } else if text.starts_with("Below is a") {
            if text.contains("sorted(set(items))") {
                "### Question\nPrint the distinct items in sorted order.\n".to_string()
            } else {
                let (_, question, answer) = EXERCISES
                    .iter()
                    .find(|(marker, _, _)| text.contains(marker))
                    .ok_or_else(|| BackendError::Other("unexpected snippet".into()))?;
                format!("### Question\n{question}\n\n### Answer\n```\n{answer}```\n")
            }
        } else if text.contains("Flatten a list of lists") {
            BROKEN_LIFT.to_string()
        } else {
            let id = lookup(LIFTS, text)?;
            let source = std::fs::read_to_string(fixtures().join(format!("corpus/programs/{id}.uc")))
                .map_err(|e| BackendError::Other(e.to_string()))?;
            format!("```\n{source}```")
        };
        Ok(GenerationResponse::new(reply, FinishReason::Stop, self.id()))
    }
}

fn write(path: &Path, text: &str) {
    std::fs::create_dir_all(path.parent().unwrap()).unwrap();
    std::fs::write(path, text).unwrap();
}

#[test]
#[ignore = "rewrites committed fixtures"]
fn regenerate_datagen_fixtures() {
    let cache = fixtures().join("replay/datagen.jsonl");
    let _ = std::fs::remove_file(&cache);
    let gateway = Gateway::with_backend(GatewayConfig::record(&cache), Box::new(StandIn)).unwrap();
    let out = run(&gateway, 1);
    for (name, text) in files(&out) {
        write(&golden(name), &text);
    }
}
