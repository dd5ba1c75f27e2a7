//! Training-data commands.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;
use unicoder_datagen::{
    decontaminate as remove_contaminated, gen_data as generate, merge_corpora, pack_sft as pack, read_jsonl, to_jsonl,
    CodeSnippet, GenConfig, GenDataOptions, GenInput, InstructionPair, Objective, ReferenceIndex, ReferenceItem,
    TemplateSet, Triplet, DEFAULT_THRESHOLD, DEFAULT_TOKEN_CAP,
};
use unicoder_lang::prompts::DEFINITION;

use crate::{read_input, write_output, CmdResult, Ctx, Failure, GatewayArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// Instruction pairs: {origin_id, question, answer: {language, code}}.
    Pairs,
    /// Raw code: {origin_id, language, code}.
    Snippets,
}

#[derive(Debug, Args)]
pub struct GenDataArgs {
    /// JSON-lines input.
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub mode: InputKind,
    /// Corpus of triplets, JSON lines.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    /// Dropped or flagged items; defaults to the corpus path with `.audit.jsonl`.
    #[arg(long, value_name = "FILE")]
    pub audit: Option<PathBuf>,
    /// Minimum score a snippet triplet needs to be kept.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    pub threshold: f64,
    /// Snippets estimated above this many tokens are skipped.
    #[arg(long, default_value_t = DEFAULT_TOKEN_CAP)]
    pub token_cap: usize,
    /// UniCode definition included in prompts; the bundled one by default.
    #[arg(long, value_name = "FILE")]
    pub definition: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub gateway: GatewayArgs,
}

#[derive(Debug, Args)]
pub struct DecontaminateArgs {
    /// Triplet corpus, JSON lines.
    pub input: PathBuf,
    /// Reference set as `NAME=FILE` or `FILE` (named after the file stem).
    /// Items are {id?, prompt, solution, language?}. Repeatable.
    #[arg(long = "references", value_name = "SET", required = true)]
    pub references: Vec<String>,
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    /// Removed triplets with the reference they matched.
    #[arg(long, value_name = "FILE")]
    pub removed: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PackSftArgs {
    /// Triplet corpus, JSON lines.
    pub input: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    /// Comma-separated subset of qa, qp, pa, uot.
    #[arg(long, default_value = "qa,qp,pa,uot")]
    pub objectives: String,
    /// TOML file with qa, qp, pa, uot templates and the separator.
    #[arg(long, value_name = "FILE")]
    pub templates: Option<PathBuf>,
    /// Triplets or objectives that were skipped.
    #[arg(long, value_name = "FILE")]
    pub audit: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MergeArgs {
    /// Triplet corpora, JSON lines.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

fn parse_objectives(text: &str) -> Result<Vec<Objective>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Objective::parse(s).ok_or_else(|| format!("unknown objective `{s}`")))
        .collect()
}

fn records<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, Failure> {
    read_jsonl(path).map_err(|e| Failure::usage(e.to_string()))
}

fn default_audit(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    out.with_file_name(format!("{stem}.audit.jsonl"))
}

pub fn gen_data(ctx: &Ctx, args: &GenDataArgs) -> CmdResult {
    let input = match args.mode {
        InputKind::Pairs => GenInput::Pairs(records::<InstructionPair>(&args.input)?),
        InputKind::Snippets => GenInput::Snippets(records::<CodeSnippet>(&args.input)?),
    };
    let definition = match &args.definition {
        Some(path) => read_input(path)?,
        None => DEFINITION.to_string(),
    };
    let options = GenDataOptions {
        config: GenConfig { token_cap: args.token_cap, ..GenConfig::default() },
        threshold: args.threshold,
        jobs: ctx.config.jobs(args.jobs),
    };
    let gateway = args.gateway.gateway(&ctx.config.gateway)?;
    let output = generate(&input, &gateway, &definition, &options).map_err(Failure::usage)?;
    let audit_path = args.audit.clone().unwrap_or_else(|| default_audit(&args.out));
    write_output(&args.out, &to_jsonl(&output.corpus))?;
    write_output(&audit_path, &to_jsonl(&output.audit))?;
    if ctx.json {
        ctx.emit_json(&json!({
            "corpus": args.out,
            "audit": audit_path,
            "triplets": output.corpus.len(),
            "audit_entries": output.audit.len(),
            "mode": gateway.mode(),
            "backend_calls": gateway.backend_calls(),
        }));
    } else {
        println!(
            "{} triplets -> {}; {} audit entries -> {}",
            output.corpus.len(),
            args.out.display(),
            output.audit.len(),
            audit_path.display()
        );
    }
    Ok(())
}

pub fn decontaminate(ctx: &Ctx, args: &DecontaminateArgs) -> CmdResult {
    let triplets: Vec<Triplet> = records(&args.input)?;
    let mut index = ReferenceIndex::new();
    for spec in &args.references {
        let (name, path) = match spec.split_once('=') {
            Some((name, path)) if !name.is_empty() => (name.to_string(), PathBuf::from(path)),
            _ => {
                let path = PathBuf::from(spec);
                let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                (name, path)
            }
        };
        index.add_set(&name, &records::<ReferenceItem>(&path)?);
    }
    let total = triplets.len();
    let (kept, removed) = remove_contaminated(triplets, &index);
    write_output(&args.out, &to_jsonl(&kept))?;
    if let Some(path) = &args.removed {
        write_output(path, &to_jsonl(&removed))?;
    }
    if ctx.json {
        ctx.emit_json(&json!({ "input": total, "kept": kept.len(), "removed": removed.len() }));
    } else {
        println!("kept {} of {total}; removed {}", kept.len(), removed.len());
    }
    Ok(())
}

pub fn pack_sft(ctx: &Ctx, args: &PackSftArgs) -> CmdResult {
    let triplets: Vec<Triplet> = records(&args.input)?;
    let templates = match &args.templates {
        Some(path) => TemplateSet::load(path).map_err(Failure::usage)?,
        None => TemplateSet::bundled(),
    };
    let objectives = parse_objectives(&args.objectives).map_err(Failure::usage)?;
    if objectives.is_empty() {
        return Err(Failure::usage("no objectives selected"));
    }
    let (records, audit) = pack(&triplets, &objectives, &templates);
    write_output(&args.out, &to_jsonl(&records))?;
    if let Some(path) = &args.audit {
        write_output(path, &to_jsonl(&audit))?;
    }
    if ctx.json {
        ctx.emit_json(&json!({ "triplets": triplets.len(), "records": records.len(), "skipped": audit.len() }));
    } else {
        println!("{} records from {} triplets; {} skipped", records.len(), triplets.len(), audit.len());
    }
    Ok(())
}

pub fn merge(ctx: &Ctx, args: &MergeArgs) -> CmdResult {
    let corpora = args.inputs.iter().map(|p| records::<Triplet>(p)).collect::<Result<Vec<_>, _>>()?;
    let (merged, dropped) = merge_corpora(corpora);
    write_output(&args.out, &to_jsonl(&merged))?;
    if ctx.json {
        ctx.emit_json(&json!({ "triplets": merged.len(), "duplicates_dropped": dropped }));
    } else {
        println!("{} triplets; {dropped} duplicates dropped", merged.len());
    }
    Ok(())
}
