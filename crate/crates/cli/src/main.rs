use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ltvcl_core::context::{
    extend_context, load_context, serialize_context, ExtensionConfig, FuzzyContext,
};
use ltvcl_core::galois::{
    enumerate_concepts, export_dot, export_json, ConceptLattice, Domain, Engine, FuzzySet,
    ScanOptions, DEFAULT_BUDGET,
};
use ltvcl_core::lia::{check_axioms, hasse_covers, Algebra, Lia, TableAlgebra};
use ltvcl_core::tacit::{is_congener, mine_detailed};

/// Linguistic truth-valued concept lattices and tacit attribute mining.
#[derive(Parser)]
#[command(name = "ltvcl", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or validate a lattice implication algebra.
    Algebra(AlgebraArgs),
    /// Enumerate the concepts of a context.
    Concepts(ConceptsArgs),
    /// Write the attribute-extended context.
    Extend(ExtendArgs),
    /// Extend a context and verify that its concepts are unchanged.
    Mine(MineArgs),
    /// Decide whether EXTENDED has the same concept extents as BASE.
    CheckCongener(CongenerArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["product", "table"])))]
struct AlgebraArgs {
    /// Chain sizes of a product of Łukasiewicz chains.
    #[arg(long, num_args = 1..)]
    product: Option<Vec<u16>>,
    /// Table algebra file.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long)]
    check_axioms: bool,
    /// Print the implication and negation tables.
    #[arg(long)]
    show_tables: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Extent,
    Intent,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    /// The sub-algebra generated by the context's values.
    Generated,
    /// Every element of the algebra.
    Full,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum, default_value = "generated")]
    domain: DomainArg,
}

#[derive(Args)]
struct ConceptsArgs {
    context: PathBuf,
    #[arg(long, value_enum, default_value = "extent")]
    engine: EngineArg,
    #[command(flatten)]
    scan: ScanArgs,
    /// Write the Hasse diagram as Graphviz DOT.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Write the lattice as JSON.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// The first novel pair meet and the top column.
    Paper,
}

#[derive(Args)]
struct ExtensionArgs {
    #[arg(long, value_enum, conflicts_with_all = ["max_k", "no_top", "keep_duplicates"])]
    preset: Option<Preset>,
    /// Largest number of attributes combined in one meet column.
    #[arg(long, default_value_t = 2)]
    max_k: usize,
    /// Do not add the constant-top column.
    #[arg(long)]
    no_top: bool,
    /// Keep columns equal to an existing one.
    #[arg(long)]
    keep_duplicates: bool,
}

impl ExtensionArgs {
    fn config(&self) -> ExtensionConfig {
        match self.preset {
            Some(Preset::Paper) => ExtensionConfig::paper(),
            None => ExtensionConfig {
                max_meet_arity: self.max_k,
                include_top_column: !self.no_top,
                novelty_filter: !self.keep_duplicates,
                meet_limit: None,
            },
        }
    }
}

#[derive(Args)]
struct ExtendArgs {
    context: PathBuf,
    #[command(flatten)]
    extension: ExtensionArgs,
    /// Write here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MineArgs {
    context: PathBuf,
    #[command(flatten)]
    extension: ExtensionArgs,
    #[command(flatten)]
    scan: ScanArgs,
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CongenerArgs {
    base: PathBuf,
    extended: PathBuf,
    #[command(flatten)]
    scan: ScanArgs,
}

/// A command either answers yes (0) or no (1); errors exit with 2.
enum Verdict {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::Algebra(a) => cmd_algebra(&a, &mut out),
        Command::Concepts(a) => cmd_concepts(&a, &mut out),
        Command::Extend(a) => cmd_extend(&a, &mut out),
        Command::Mine(a) => cmd_mine(&a, &mut out),
        Command::CheckCongener(a) => cmd_check_congener(&a, &mut out),
    };
    print!("{out}");
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn budget() -> Result<u128> {
    match std::env::var("LTVCL_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("LTVCL_BUDGET must be a non-negative integer, got `{s}`")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn scan_options(engine: Engine, scan: &ScanArgs) -> Result<ScanOptions> {
    let domain = match scan.domain {
        DomainArg::Generated => Domain::Generated,
        DomainArg::Full => Domain::Full,
    };
    Ok(ScanOptions::new(engine, domain).with_budget(budget()?))
}

fn read_context(path: &Path) -> Result<FuzzyContext> {
    load_context(path).with_context(|| format!("cannot load {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn cmd_algebra(args: &AlgebraArgs, out: &mut String) -> Result<Verdict> {
    let alg: Algebra = match (&args.product, &args.table) {
        (Some(sizes), _) => Algebra::product(sizes)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            TableAlgebra::parse(&text)
                .with_context(|| format!("cannot load {}", path.display()))?
                .into()
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let elements = alg.elements();
    writeln!(out, "algebra: {}", alg.describe())?;
    writeln!(out, "elements ({}):", elements.len())?;
    for e in &elements {
        writeln!(out, "  {} {}", alg.label(e), e)?;
    }
    writeln!(out, "covers:")?;
    match hasse_covers(&alg) {
        Ok(covers) => {
            for (lo, hi) in covers {
                writeln!(
                    out,
                    "  {} < {}",
                    alg.label(&elements[lo]),
                    alg.label(&elements[hi])
                )?;
            }
        }
        Err(e) => writeln!(out, "  unavailable: {e}")?,
    }
    if args.show_tables {
        let labels: Vec<String> = elements.iter().map(|e| alg.label(e)).collect();
        let width = labels.iter().map(String::len).max().unwrap_or(1);
        write!(out, "imp {:>width$}", "")?;
        for l in &labels {
            write!(out, " {l:>width$}")?;
        }
        writeln!(out)?;
        for (x, lx) in elements.iter().zip(&labels) {
            write!(out, "    {lx:>width$}")?;
            for y in &elements {
                write!(out, " {:>width$}", alg.label(&alg.imp(x, y)?))?;
            }
            writeln!(out)?;
        }
        writeln!(out, "neg")?;
        for (x, lx) in elements.iter().zip(&labels) {
            writeln!(out, "    {lx:>width$} {:>width$}", alg.label(&alg.neg(x)?))?;
        }
    }
    if !args.check_axioms {
        return Ok(Verdict::Yes);
    }
    let report = check_axioms(&alg)?;
    if report.passed {
        writeln!(out, "axioms: PASS ({} triples)", report.triples)?;
        Ok(Verdict::Yes)
    } else {
        writeln!(
            out,
            "axioms: FAIL ({} violations in {} triples)",
            report.violations.len(),
            report.triples
        )?;
        for line in report.describe(&alg) {
            writeln!(out, "  {line}")?;
        }
        Ok(Verdict::No)
    }
}

fn spell(ctx: &FuzzyContext, set: &FuzzySet) -> String {
    set.values()
        .iter()
        .map(|v| ctx.spell(v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn list_concepts(l: &ConceptLattice, ctx: &FuzzyContext, out: &mut String) -> Result<()> {
    for (k, c) in l.concepts().iter().enumerate() {
        writeln!(
            out,
            "{k}# ({} | {})",
            spell(ctx, &c.extent),
            spell(ctx, &c.intent)
        )?;
    }
    Ok(())
}

fn cmd_concepts(args: &ConceptsArgs, out: &mut String) -> Result<Verdict> {
    let ctx = read_context(&args.context)?;
    let first = match args.engine {
        EngineArg::Intent => Engine::IntentScan,
        _ => Engine::ExtentScan,
    };
    let l = enumerate_concepts(&ctx, &scan_options(first, &args.scan)?)?;
    let mut verdict = Verdict::Yes;
    writeln!(out, "{} concepts", l.len())?;
    if let EngineArg::Both = args.engine {
        let other = enumerate_concepts(&ctx, &scan_options(Engine::IntentScan, &args.scan)?)?;
        if other.same_concepts(&l) {
            writeln!(
                out,
                "engines agree ({} extent candidates, {} intent candidates)",
                l.candidates(),
                other.candidates()
            )?;
        } else {
            writeln!(
                out,
                "engines DISAGREE: intent scan found {} concepts",
                other.len()
            )?;
            verdict = Verdict::No;
        }
    }
    list_concepts(&l, &ctx, out)?;
    if let Some(path) = &args.dot {
        write_file(path, &export_dot(&l))?;
    }
    if let Some(path) = &args.json {
        write_file(path, &export_json(&l))?;
    }
    Ok(verdict)
}

fn cmd_extend(args: &ExtendArgs, out: &mut String) -> Result<Verdict> {
    let ctx = read_context(&args.context)?;
    let ext = extend_context(&ctx, &args.extension.config())?;
    let text = serialize_context(&ext);
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => out.push_str(&text),
    }
    Ok(Verdict::Yes)
}

fn cmd_mine(args: &MineArgs, out: &mut String) -> Result<Verdict> {
    let ctx = read_context(&args.context)?;
    let run = mine_detailed(
        &ctx,
        &args.extension.config(),
        &scan_options(Engine::ExtentScan, &args.scan)?,
    )?;
    let report = &run.report;
    let json = report.to_json();
    match &args.out {
        Some(path) => {
            write_file(path, &json)?;
            for t in &report.tacit {
                let formula = if t.kind == "top" {
                    "top".to_string()
                } else {
                    format!("meet({})", t.sources.join(","))
                };
                writeln!(out, "tacit {} = {formula}", t.name)?;
            }
            writeln!(
                out,
                "concepts: {} base, {} extended",
                report.concepts_base, report.concepts_ext
            )?;
            writeln!(out, "congener: {}", report.congener)?;
            writeln!(out, "fast extension verified: {}", report.fast_verified)?;
            if let Some(fast) = &run.fast_lattice {
                list_concepts(fast, &run.extended, out)?;
            }
        }
        None => {
            out.push_str(&json);
            out.push('\n');
        }
    }
    Ok(if report.succeeded() {
        Verdict::Yes
    } else {
        Verdict::No
    })
}

fn cmd_check_congener(args: &CongenerArgs, out: &mut String) -> Result<Verdict> {
    let base = read_context(&args.base)?;
    let ext = read_context(&args.extended)?;
    let r = is_congener(&base, &ext, &scan_options(Engine::ExtentScan, &args.scan)?)?;
    writeln!(
        out,
        "congener: {}",
        if r.is_congener { "yes" } else { "no" }
    )?;
    writeln!(
        out,
        "extents: {} base, {} extended",
        r.base_extent_count, r.extended_extent_count
    )?;
    if !r.is_congener {
        writeln!(out, "witnesses:")?;
        for w in &r.witnesses {
            writeln!(out, "  ({})", spell(&ext, w))?;
        }
        return Ok(Verdict::No);
    }
    if !r.covers_preserved {
        bail!("extent families agree but Hasse diagrams differ");
    }
    Ok(Verdict::Yes)
}
