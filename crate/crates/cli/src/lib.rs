//! The `unicoder` command line.
//!
//! Exit codes: 0 success, 1 expected failure (diagnostics found, a stage
//! failed), 2 usage error (bad flags, unreadable input), 3 environment error
//! (missing credential, unusable backend or toolchain configuration).

mod config;
mod data;
mod eval;
mod source;

use std::cell::Cell;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use unicoder_gateway::{Gateway, GatewayConfig, GatewayError};

pub use config::Config;

/// A command's failure, carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn expected(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn environment(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

pub type CmdResult = Result<(), Failure>;

#[derive(Debug, Parser)]
#[command(name = "unicoder", version, about = "UniCode pseudocode tools, training-data pipeline and evaluation harness")]
pub struct Cli {
    /// TOML file with [gateway] and [sandbox] sections.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Machine-readable output on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a UniCode file and report syntax diagnostics.
    Parse(source::FileArgs),
    /// Check a UniCode file against the style and structure rules.
    Validate(source::ValidateArgs),
    /// Print a UniCode file in canonical layout.
    Print(source::FileArgs),
    /// Translate a UniCode file into a target language.
    Transpile(source::TranspileArgs),
    /// Recover UniCode from source code.
    Lift(source::LiftArgs),
    /// Build (question, answer, UniCode) triplets from pairs or snippets.
    GenData(data::GenDataArgs),
    /// Remove triplets that match benchmark solutions or prompts.
    Decontaminate(data::DecontaminateArgs),
    /// Turn triplets into supervised fine-tuning records.
    PackSft(data::PackSftArgs),
    /// Union several triplet corpora, dropping duplicates.
    Merge(data::MergeArgs),
    /// Execute benchmark samples and report pass@k.
    Eval(eval::EvalArgs),
    /// Reconstruct each corpus program from its UniCode and run its tests.
    Roundtrip(eval::RoundtripArgs),
    /// Answer a question by planning in UniCode, then writing code.
    Uot(eval::UotArgs),
    /// Report the model backend and the installed toolchains.
    Probe,
}

/// Where model responses come from, overriding the config file.
#[derive(Debug, Clone, Args)]
pub struct GatewayArgs {
    /// Answer only from this cache; a miss is an error and nothing is sent.
    #[arg(long, value_name = "CACHE", conflicts_with = "record")]
    pub replay: Option<PathBuf>,
    /// Answer from this cache, asking the configured backend on a miss and
    /// appending its response. Needs the credential in the environment.
    #[arg(long, value_name = "CACHE")]
    pub record: Option<PathBuf>,
}

impl GatewayArgs {
    pub fn config(&self, base: &GatewayConfig) -> GatewayConfig {
        let mut config = base.clone();
        if let Some(path) = &self.replay {
            config.mode = unicoder_gateway::Mode::Replay;
            config.cache_path = Some(path.clone());
        }
        if let Some(path) = &self.record {
            config.mode = unicoder_gateway::Mode::Record;
            config.cache_path = Some(path.clone());
        }
        config
    }

    /// A replay cache that does not exist is a usage error: every request
    /// would miss.
    pub fn gateway(&self, base: &GatewayConfig) -> Result<Gateway, Failure> {
        let config = self.config(base);
        if let (unicoder_gateway::Mode::Replay, Some(path)) = (config.mode, &config.cache_path) {
            if !path.is_file() {
                return Err(Failure::usage(format!("{}: replay cache not found", path.display())));
            }
        }
        Gateway::from_config(config).map_err(|e: GatewayError| Failure::environment(e.to_string()))
    }
}

pub struct Ctx {
    pub config: Config,
    pub json: bool,
    emitted: Cell<bool>,
}

impl Ctx {
    /// Prints one JSON document. A command emits at most one.
    pub fn emit_json<T: Serialize>(&self, value: &T) {
        let mut text = serde_json::to_string_pretty(value).expect("output serializes");
        text.push('\n');
        self.emit_text(&text);
    }

    pub fn emit_text(&self, text: &str) {
        self.emitted.set(true);
        print!("{text}");
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    let mut ctx = Ctx { config: Config::default(), json, emitted: Cell::new(false) };
    let result = Config::load(cli.config.as_deref()).and_then(|config| {
        ctx.config = config;
        dispatch(&ctx, &cli.command)
    });
    match result {
        Ok(()) => 0,
        Err(failure) => {
            if json && !ctx.emitted.get() {
                let value = serde_json::json!({ "error": failure.message, "exit_code": failure.code });
                println!("{}", serde_json::to_string_pretty(&value).expect("output serializes"));
            }
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(ctx: &Ctx, command: &Command) -> CmdResult {
    match command {
        Command::Parse(args) => source::parse(ctx, args),
        Command::Validate(args) => source::validate(ctx, args),
        Command::Print(args) => source::print(ctx, args),
        Command::Transpile(args) => source::transpile(ctx, args),
        Command::Lift(args) => source::lift(ctx, args),
        Command::GenData(args) => data::gen_data(ctx, args),
        Command::Decontaminate(args) => data::decontaminate(ctx, args),
        Command::PackSft(args) => data::pack_sft(ctx, args),
        Command::Merge(args) => data::merge(ctx, args),
        Command::Eval(args) => eval::eval(ctx, args),
        Command::Roundtrip(args) => eval::roundtrip(ctx, args),
        Command::Uot(args) => eval::uot(ctx, args),
        Command::Probe => eval::probe(ctx),
    }
}

/// Reads an input file; unreadable input is a usage error.
pub(crate) fn read_input(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub(crate) fn write_output(path: &std::path::Path, text: &str) -> CmdResult {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Failure::usage(format!("{}: {e}", parent.display())))?;
    }
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}
