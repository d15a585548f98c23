//! Command-line surface: spec ingestion, the analysis pipeline and the
//! fixture suite.

mod fixtures;
mod text;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::blocks::{block_decomposition, block_report, BlockReport, GenDecEntry, LocalBlocks};
use crate::chartab::{export_table, CharacterTable};
use crate::error::{Error, Result};
use crate::fqlinalg::Gf2e;
use crate::green::{principal_decomposition_column, tt_group, Analysis, Options, RecordSummary, TorsionGroupStructure};
use crate::group::{build_group, GroupSpec, PermGroup, DEFAULT_ORDER_CAP};
use crate::modrep::DEFAULT_DIM_CAP;

pub use fixtures::{cmd_fixtures, fixture_names, fixture_spec, FixtureResult, FixtureSummary};

pub const ANALYSIS_FORMAT: &str = "endotriv-analysis";
pub const BLOCKS_FORMAT: &str = "endotriv-blocks";
pub const GREEN_FORMAT: &str = "endotriv-green";
pub const REPORT_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "endotriv", version, about = "Endo-trivial modules for groups with Klein four Sylow 2-subgroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: ConfigArgs,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Green correspondents, the three tests and the torsion group.
    Analyze,
    /// Ordinary character table.
    Chartab,
    /// Blocks of kG with defects, simple modules and shapes.
    Blocks,
    /// Green correspondents and their verdicts only.
    Green,
    /// Run the shipped fixture suite.
    Fixtures,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Group spec: a JSON file, or a recipe name such as A5 or L2(11).
    #[arg(long, global = true)]
    pub spec: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap_order: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_CAP)]
    pub cap_dim: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Prime used by Dixon's method instead of the default choice.
    #[arg(long, global = true)]
    pub aux_prime: Option<u64>,
    /// Skip the tensor-product test.
    #[arg(long, global = true)]
    pub no_direct: bool,
}

/// Everything a command needs, with the spec already parsed.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub spec: Option<GroupSpec>,
    pub seed: u64,
    pub cap_order: u64,
    pub cap_dim: usize,
    pub format: Format,
    pub aux_prime: Option<u64>,
    pub direct: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            spec: None,
            seed: 0,
            cap_order: DEFAULT_ORDER_CAP,
            cap_dim: DEFAULT_DIM_CAP,
            format: Format::Json,
            aux_prime: None,
            direct: true,
        }
    }
}

impl AnalysisConfig {
    pub fn for_spec(spec: GroupSpec) -> Self {
        AnalysisConfig { spec: Some(spec), ..Default::default() }
    }

    pub fn from_args(args: &ConfigArgs) -> Result<Self> {
        let spec = args.spec.as_deref().map(load_spec).transpose()?;
        Ok(AnalysisConfig {
            spec,
            seed: args.seed,
            cap_order: args.cap_order,
            cap_dim: args.cap_dim,
            format: args.format,
            aux_prime: args.aux_prime,
            direct: !args.no_direct,
        })
    }

    fn group(&self) -> Result<Arc<PermGroup>> {
        let spec = self.spec.as_ref().ok_or_else(|| Error::SchemaError("--spec is required".into()))?;
        let g = build_group(spec, self.cap_order)?;
        Ok(g)
    }

    fn options(&self) -> Options {
        Options { aux_prime: self.aux_prime, seed: self.seed, dim_cap: self.cap_dim, direct: self.direct }
    }
}

/// A spec file path, or a bare recipe name when no such file exists.
pub fn load_spec(arg: &str) -> Result<GroupSpec> {
    let path = PathBuf::from(arg);
    if path.exists() {
        let text = std::fs::read_to_string(&path)?;
        return GroupSpec::from_json(&text);
    }
    if arg.ends_with(".json") || arg.contains('/') {
        return Err(Error::SchemaError(format!("spec file {arg} not found")));
    }
    Ok(GroupSpec::recipe(arg))
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotKleinFour(_) => 2,
        Error::SizeCapExceeded(_) => 3,
        _ => 1,
    }
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string(), "exit_code": exit_code(e) })
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub format: &'static str,
    pub version: u32,
    pub spec: String,
    #[serde(flatten)]
    pub torsion: TorsionGroupStructure,
    /// `d^u` for the first involution, rows of the principal block.
    pub principal_d_u: Vec<GenDecEntry>,
    pub blocks: BlockReport,
}

pub fn analysis_report(cfg: &AnalysisConfig) -> Result<AnalysisReport> {
    let g = cfg.group()?;
    let a = Analysis::with_options(&g, cfg.options())?;
    let torsion = tt_group(&a)?;
    let principal_d_u = principal_decomposition_column(&a, 0)?;
    let blocks = block_report(&a.blocks, Some(&a.local))?;
    Ok(AnalysisReport {
        format: ANALYSIS_FORMAT,
        version: REPORT_VERSION,
        spec: cfg.spec.as_ref().map(|s| s.display_name()).unwrap_or_default(),
        torsion,
        principal_d_u,
        blocks,
    })
}

pub fn cmd_analyze(cfg: &AnalysisConfig) -> Result<Value> {
    Ok(serde_json::to_value(analysis_report(cfg)?)?)
}

pub fn cmd_chartab(cfg: &AnalysisConfig) -> Result<Value> {
    let g = cfg.group()?;
    let t = CharacterTable::compute(&g, cfg.aux_prime)?;
    Ok(export_table(&t))
}

pub fn cmd_blocks(cfg: &AnalysisConfig) -> Result<Value> {
    let g = cfg.group()?;
    if g.order() as usize > cfg.cap_dim {
        return Err(Error::SizeCapExceeded(format!(
            "regular module of dimension {} above cap {}",
            g.order(),
            cfg.cap_dim
        )));
    }
    let e = g.exponent();
    let field = Gf2e::splitting_for_odd(e >> e.trailing_zeros())?;
    let blocks = block_decomposition(&g, &field, cfg.aux_prime)?;
    let local = match g.sylow_context() {
        Ok(ctx) => Some(LocalBlocks::new(&g, &field, &ctx)?),
        Err(Error::NotKleinFour(_)) => None,
        Err(e) => return Err(e),
    };
    let report = block_report(&blocks, local.as_ref())?;
    let mut v = serde_json::to_value(report)?;
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("format".into(), json!(BLOCKS_FORMAT));
    obj.insert("version".into(), json!(REPORT_VERSION));
    Ok(v)
}

#[derive(Serialize)]
struct GreenReport {
    format: &'static str,
    version: u32,
    group: String,
    sylow_tag: u64,
    x_n: Vec<String>,
    records: Vec<RecordSummary>,
}

pub fn cmd_green(cfg: &AnalysisConfig) -> Result<Value> {
    let g = cfg.group()?;
    let a = Analysis::with_options(&g, cfg.options())?;
    let t = tt_group(&a)?;
    Ok(serde_json::to_value(GreenReport {
        format: GREEN_FORMAT,
        version: REPORT_VERSION,
        group: t.group,
        sylow_tag: t.sylow_tag,
        x_n: t.x_n,
        records: t.records,
    })?)
}

/// Renders a document in the configured format, with a trailing newline.
pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(v).expect("json renders")),
        Format::Text => text::render(v),
    }
}

/// Runs one command; returns the exit code, stdout and stderr contents.
pub fn run(command: Command, cfg: &AnalysisConfig) -> (i32, String, String) {
    let out = match command {
        Command::Analyze => cmd_analyze(cfg).map(|v| (0, v)),
        Command::Chartab => cmd_chartab(cfg).map(|v| (0, v)),
        Command::Blocks => cmd_blocks(cfg).map(|v| (0, v)),
        Command::Green => cmd_green(cfg).map(|v| (0, v)),
        Command::Fixtures => {
            cmd_fixtures(cfg).and_then(|s| Ok((if s.passed { 0 } else { 1 }, serde_json::to_value(s)?)))
        }
    };
    match out {
        Ok((code, v)) => (code, render(&v, cfg.format), String::new()),
        Err(e) => (exit_code(&e), String::new(), format!("{}\n", error_json(&e))),
    }
}
