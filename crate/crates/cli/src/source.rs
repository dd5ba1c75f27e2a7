//! Commands over a single UniCode or source file.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde_json::json;
use unicoder_lang::lift::{lift as lift_deterministic, lift_llm_with, LiftError, LiftPrompt};
use unicoder_lang::prompts::DEFINITION;
use unicoder_lang::transpile::{transpile_with, DynamicValueMode, TargetLanguage, TranspileError, TranspileOptions};
use unicoder_lang::{parse as parse_unicode, pretty_print, validate as run_validator, Diagnostic, Profile, UniCodeAst};

use crate::{read_input, write_output, CmdResult, Ctx, Failure, GatewayArgs};

#[derive(Debug, Args)]
pub struct FileArgs {
    /// UniCode source file.
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    pub file: PathBuf,
    /// `all`, `structure`, `style`, `none`, or a list such as `R1,R5`.
    #[arg(long, default_value = "all")]
    pub profile: String,
}

#[derive(Debug, Args)]
pub struct TranspileArgs {
    pub file: PathBuf,
    /// python, javascript, cpp, go, rust_t or java.
    #[arg(long, value_parser = parse_target)]
    pub target: TargetLanguage,
    /// Write the code here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Leave UniCode comments out of the emitted code.
    #[arg(long)]
    pub no_comments: bool,
    /// How values of unknown type are represented.
    #[arg(long, value_enum, default_value_t = Dynamic::TaggedVariant)]
    pub dynamic: Dynamic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Dynamic {
    TaggedVariant,
    NativeDynamic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LiftMode {
    /// Invert the transpiler's own Python output; no model involved.
    Deterministic,
    /// Ask a model through the gateway.
    Llm,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    /// Source file to lift.
    pub file: PathBuf,
    /// Language of the file; guessed from the extension when absent.
    #[arg(long, value_parser = parse_target)]
    pub language: Option<TargetLanguage>,
    #[arg(long, value_enum, default_value_t = LiftMode::Deterministic)]
    pub mode: LiftMode,
    /// Question the code answers, included in the model prompt.
    #[arg(long, value_name = "FILE")]
    pub question_file: Option<PathBuf>,
    #[command(flatten)]
    pub gateway: GatewayArgs,
}

pub fn parse_target(text: &str) -> Result<TargetLanguage, String> {
    TargetLanguage::parse(text).ok_or_else(|| format!("unknown target `{text}`"))
}

fn load(path: &Path) -> Result<(String, Result<UniCodeAst, Vec<Diagnostic>>), Failure> {
    let text = read_input(path)?;
    let parsed = parse_unicode(&text);
    Ok((text, parsed))
}

fn report_diagnostics(ctx: &Ctx, path: &Path, diagnostics: &[Diagnostic]) {
    if ctx.json {
        ctx.emit_json(&json!({ "file": path, "ok": false, "diagnostics": diagnostics }));
    }
    for d in diagnostics {
        eprintln!("{}:{d}", path.display());
    }
}

fn parsed_or_fail(ctx: &Ctx, path: &Path) -> Result<UniCodeAst, Failure> {
    match load(path)?.1 {
        Ok(ast) => Ok(ast),
        Err(diagnostics) => {
            report_diagnostics(ctx, path, &diagnostics);
            Err(Failure::expected(format!("{}: {} syntax error(s)", path.display(), diagnostics.len())))
        }
    }
}

pub fn parse(ctx: &Ctx, args: &FileArgs) -> CmdResult {
    let ast = parsed_or_fail(ctx, &args.file)?;
    if ctx.json {
        ctx.emit_json(&json!({ "file": args.file, "ok": true, "ast": ast }));
    } else {
        print!("{}", pretty_print(&ast));
    }
    Ok(())
}

pub fn print(ctx: &Ctx, args: &FileArgs) -> CmdResult {
    let ast = parsed_or_fail(ctx, &args.file)?;
    let text = pretty_print(&ast);
    if ctx.json {
        ctx.emit_json(&json!({ "file": args.file, "ok": true, "text": text }));
    } else {
        print!("{text}");
    }
    Ok(())
}

pub fn validate(ctx: &Ctx, args: &ValidateArgs) -> CmdResult {
    let profile = Profile::named(&args.profile).ok_or_else(|| Failure::usage(format!("unknown profile `{}`", args.profile)))?;
    let ast = parsed_or_fail(ctx, &args.file)?;
    let report = run_validator(&ast, &profile);
    if ctx.json {
        ctx.emit_json(&report);
    } else {
        for d in &report.diagnostics {
            println!("{}:{d}", args.file.display());
        }
        for (principle, ok) in &report.principle_scores {
            println!("{} {:<13} {}", principle.rule_prefix(), principle.name(), if *ok { "pass" } else { "FAIL" });
        }
    }
    let failing = report.failing();
    if failing.is_empty() {
        Ok(())
    } else {
        let names: Vec<&str> = failing.iter().map(|p| p.rule_prefix()).collect();
        Err(Failure::expected(format!("{}: violations of {}", args.file.display(), names.join(", "))))
    }
}

pub fn transpile(ctx: &Ctx, args: &TranspileArgs) -> CmdResult {
    let ast = parsed_or_fail(ctx, &args.file)?;
    let options = TranspileOptions {
        emit_comments: !args.no_comments,
        dynamic_value_mode: match args.dynamic {
            Dynamic::TaggedVariant => DynamicValueMode::TaggedVariant,
            Dynamic::NativeDynamic => DynamicValueMode::NativeDynamic,
        },
    };
    let toolchains = ctx.config.toolchains()?;
    let emitted = transpile_with(&ast, args.target, &options, &toolchains).map_err(|e| match e {
        TranspileError::SubsetViolation(_) => Failure::expected(format!("SubsetViolation: {e}")),
        TranspileError::UnsupportedMode { .. } => Failure::usage(e.to_string()),
        TranspileError::UnsupportedTarget(_) => Failure::environment(e.to_string()),
    })?;
    if let Some(out) = &args.out {
        write_output(out, &emitted.code)?;
    }
    if ctx.json {
        ctx.emit_json(&emitted);
    } else if args.out.is_none() {
        print!("{}", emitted.code);
    }
    Ok(())
}

fn guess_language(path: &Path) -> Option<TargetLanguage> {
    match path.extension()?.to_str()? {
        "py" => Some(TargetLanguage::Python),
        "js" | "mjs" => Some(TargetLanguage::Javascript),
        "cpp" | "cc" | "cxx" | "hpp" => Some(TargetLanguage::Cpp),
        "go" => Some(TargetLanguage::Go),
        "rs" => Some(TargetLanguage::RustT),
        "java" => Some(TargetLanguage::Java),
        _ => None,
    }
}

pub fn lift(ctx: &Ctx, args: &LiftArgs) -> CmdResult {
    let code = read_input(&args.file)?;
    let language = args
        .language
        .or_else(|| guess_language(&args.file))
        .ok_or_else(|| Failure::usage("cannot tell the language; pass --language"))?;
    let question = args.question_file.as_deref().map(read_input).transpose()?;
    let result = match args.mode {
        LiftMode::Deterministic => lift_deterministic(&code, language),
        LiftMode::Llm => {
            let gateway = args.gateway.gateway(&ctx.config.gateway)?;
            let prompt = LiftPrompt { question: question.as_deref().map(str::trim), ..LiftPrompt::new(DEFINITION) };
            lift_llm_with(&code, language, &gateway, &prompt)
        }
    };
    let lifted = result.map_err(|e| match e {
        LiftError::UnsupportedLanguage(_) => Failure::usage(e.to_string()),
        other => Failure::expected(other.to_string()),
    })?;
    if ctx.json {
        ctx.emit_json(&json!({ "provenance": lifted.provenance, "text": lifted.text, "ast": lifted.unicode }));
    } else {
        print!("{}", lifted.text);
        if !lifted.text.ends_with('\n') {
            println!();
        }
    }
    Ok(())
}
