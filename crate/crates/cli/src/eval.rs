//! Evaluation commands: benchmarks, the round-trip benchmark, two-stage
//! inference and the environment probe.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::json;
use unicoder_datagen::read_jsonl;
use unicoder_eval::{
    load_benchmark, roundtrip_bench, uot_infer, Candidate, Corpus, EvalReport, Evaluator, LlmRoundtrip, OutcomeCache,
    SourceSuite,
};
use unicoder_gateway::probe as probe_gateway;
use unicoder_lang::prompts::DEFINITION;
use unicoder_lang::transpile::TargetLanguage;

use crate::source::parse_target;
use crate::{read_input, write_output, CmdResult, Ctx, Failure, GatewayArgs};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Humaneval,
    Mbpp,
    MultiplE,
    Custom,
}

impl Format {
    fn suite(self) -> SourceSuite {
        match self {
            Format::Humaneval => SourceSuite::HumanevalStyle,
            Format::Mbpp => SourceSuite::MbppStyle,
            Format::MultiplE => SourceSuite::MultiplEStyle,
            Format::Custom => SourceSuite::Custom,
        }
    }
}

/// Options shared by commands that execute code.
#[derive(Debug, Args)]
pub struct RunArgs {
    /// Worker threads for execution.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Wall-clock limit per execution.
    #[arg(long, value_name = "MS")]
    pub timeout_ms: Option<u64>,
    /// Bytes of stdout and stderr kept per execution.
    #[arg(long, value_name = "BYTES")]
    pub output_cap: Option<usize>,
    /// Persistent outcome cache, JSON lines.
    #[arg(long, value_name = "FILE")]
    pub cache: Option<PathBuf>,
    /// JSON report path; the table still goes to stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Benchmark problems, JSON lines.
    #[arg(long, value_name = "FILE")]
    pub benchmark: PathBuf,
    #[arg(long, value_enum)]
    pub format: Format,
    /// Samples {problem_id, sample_index, code}, JSON lines.
    #[arg(long, value_name = "FILE")]
    pub samples: PathBuf,
    /// Comma-separated k values.
    #[arg(long, default_value = "1", value_delimiter = ',')]
    pub k: Vec<usize>,
    /// Suite name in the report; the benchmark file stem by default.
    #[arg(long)]
    pub name: Option<String>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundtripKind {
    Deterministic,
    Llm,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    /// Directory with manifest.json and the UniCode programs.
    #[arg(long, value_name = "DIR")]
    pub corpus: PathBuf,
    #[arg(long, value_enum, default_value_t = RoundtripKind::Deterministic)]
    pub mode: RoundtripKind,
    /// Only these program ids (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub gateway: GatewayArgs,
}

#[derive(Debug, Args)]
pub struct UotArgs {
    /// Natural-language question.
    #[arg(long, value_name = "FILE")]
    pub question_file: PathBuf,
    #[arg(long, value_parser = parse_target, default_value = "python")]
    pub target: TargetLanguage,
    /// Write the UniCode plan here.
    #[arg(long, value_name = "FILE")]
    pub unicode_out: Option<PathBuf>,
    /// Write the code here.
    #[arg(long, value_name = "FILE")]
    pub code_out: Option<PathBuf>,
    #[command(flatten)]
    pub gateway: GatewayArgs,
}

fn open_cache(run: &RunArgs) -> Result<OutcomeCache, Failure> {
    match &run.cache {
        Some(path) => OutcomeCache::open(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => Ok(OutcomeCache::in_memory()),
    }
}

fn limits(ctx: &Ctx, run: &RunArgs) -> unicoder_eval::Limits {
    let mut limits = ctx.config.limits();
    if let Some(ms) = run.timeout_ms {
        limits.timeout = std::time::Duration::from_millis(ms);
    }
    if let Some(cap) = run.output_cap {
        limits.output_cap = cap;
    }
    limits
}

fn emit_report(ctx: &Ctx, run: &RunArgs, report: &EvalReport) -> CmdResult {
    if let Some(out) = &run.out {
        write_output(out, &report.to_json())?;
    }
    if ctx.json {
        ctx.emit_text(&report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    Ok(())
}

/// Exit 0 whenever the suite ran to completion, however many samples passed.
pub fn eval(ctx: &Ctx, args: &EvalArgs) -> CmdResult {
    if args.k.is_empty() || args.k.contains(&0) {
        return Err(Failure::usage("k values must be positive"));
    }
    let problems = load_benchmark(&args.benchmark, args.format.suite()).map_err(|e| Failure::usage(e.to_string()))?;
    let candidates: Vec<Candidate> = read_jsonl(&args.samples).map_err(|e| Failure::usage(e.to_string()))?;
    let sandbox = ctx.config.sandbox()?;
    let cache = open_cache(&args.run)?;
    let evaluator = Evaluator::new(&sandbox, &cache).with_workers(ctx.config.jobs(args.run.jobs));
    let name = args.name.clone().unwrap_or_else(|| {
        args.benchmark.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "suite".into())
    });
    let report = evaluator
        .evaluate(&name, &problems, &candidates, &args.k, &limits(ctx, &args.run))
        .map_err(|e| Failure::usage(e.to_string()))?;
    emit_report(ctx, &args.run, &report)
}

pub fn roundtrip(ctx: &Ctx, args: &RoundtripArgs) -> CmdResult {
    let corpus = Corpus::load(&args.corpus).map_err(|e| Failure::usage(e.to_string()))?;
    let mut problems = corpus.python_problems().map_err(|e| Failure::usage(e.to_string()))?;
    if !args.only.is_empty() {
        problems.retain(|p| args.only.iter().any(|id| p.id == format!("corpus/{id}")));
    }
    if problems.is_empty() {
        return Err(Failure::usage(format!("{}: corpus is empty", args.corpus.display())));
    }
    let sandbox = ctx.config.sandbox()?;
    let cache = open_cache(&args.run)?;
    let evaluator = Evaluator::new(&sandbox, &cache).with_workers(ctx.config.jobs(args.run.jobs));
    let limits = limits(ctx, &args.run);
    let report = match args.mode {
        RoundtripKind::Deterministic => roundtrip_bench(&evaluator, &problems, None, &limits),
        RoundtripKind::Llm => {
            let gateway = args.gateway.gateway(&ctx.config.gateway)?;
            let llm = LlmRoundtrip { generator: &gateway, definition: DEFINITION };
            roundtrip_bench(&evaluator, &problems, Some(&llm), &limits)
        }
    }
    .map_err(|e| Failure::environment(e.to_string()))?;
    emit_report(ctx, &args.run, &report)
}

pub fn uot(ctx: &Ctx, args: &UotArgs) -> CmdResult {
    let question = read_input(&args.question_file)?;
    let gateway = args.gateway.gateway(&ctx.config.gateway)?;
    let output =
        uot_infer(question.trim(), &gateway, DEFINITION, args.target).map_err(|e| Failure::expected(e.to_string()))?;
    if let Some(path) = &args.unicode_out {
        write_output(path, &output.unicode_text)?;
    }
    if let Some(path) = &args.code_out {
        write_output(path, &output.code)?;
    }
    if ctx.json {
        ctx.emit_json(&output);
    } else {
        println!("### UniCode\n{}", output.unicode_text.trim_end());
        println!("\n### {}\n{}", args.target.display_name(), output.code.trim_end());
    }
    Ok(())
}

pub fn probe(ctx: &Ctx) -> CmdResult {
    let descriptor = probe_gateway(&ctx.config.gateway);
    let sandbox = ctx.config.sandbox()?;
    let toolchains: Vec<_> = TargetLanguage::ALL
        .iter()
        .map(|&language| (language, sandbox.toolchain_version(language)))
        .collect();
    if ctx.json {
        let toolchains: serde_json::Map<String, serde_json::Value> =
            toolchains.iter().map(|(l, v)| (l.name().to_string(), json!(v))).collect();
        ctx.emit_json(&json!({ "gateway": descriptor, "toolchains": toolchains }));
    } else {
        println!("gateway mode: {}", descriptor.mode);
        if let Some(id) = &descriptor.backend_id {
            println!("backend: {id}");
        }
        if let Some(path) = &descriptor.cache_path {
            println!("cache: {} ({} entries)", path.display(), descriptor.cache_entries);
        }
        for problem in &descriptor.problems {
            println!("problem: {problem}");
        }
        for (language, version) in &toolchains {
            println!("{:<10} {}", language.name(), version.as_deref().unwrap_or("not installed"));
        }
    }
    Ok(())
}
