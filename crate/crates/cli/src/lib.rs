//! The `gridlabel` command line: generate instances, emit and verify the
//! closed-form labeling, run exact searches, audit gadgets and render.
//!
//! Exit codes: 0 success or pass, 1 fail or refuted, 2 usage or input error,
//! 3 timeout.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gridlabel::audit::{audit_suite, SUITES};
use gridlabel::gadget::{build_named, SHAPES};
use gridlabel::grid::axis_window;
use gridlabel::io::{Bundle, CertificateFile, InstanceFile, LabelingFile};
use gridlabel::solver::VariableOrder;
use gridlabel::{
    build_conflicts, certify_lb, emit_labeling, feasible, generate_patch, min_span, render, verify, CertifyOutcome,
    ConflictModel, GridKind, Labeling, MinSpan, Mode, PatchKind, SearchConfig, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gridlabel", version, about = "Exact L(h,k) labeling of grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write an instance: a lattice ball or a named gadget.
    Gen(GenArgs),
    /// Label an L(hex3) patch with the span-7 scheme.
    Formula(FormulaArgs),
    /// Check a labeling against its instance.
    Verify(VerifyArgs),
    /// Decide one palette, or find the minimum span.
    Solve(SolveArgs),
    /// Certify a lower bound by exhausting the palette below it.
    Certify(CertifyArgs),
    /// Run a structural audit suite.
    Audit(AuditArgs),
    /// Draw a labeled instance.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    grid: GridKind,
    /// Ball radius around the lattice origin.
    #[arg(long, required_unless_present = "shape", conflicts_with = "shape")]
    radius: Option<usize>,
    #[arg(long, value_parser = SHAPES)]
    shape: Option<String>,
    /// Defaults to edge, or vertex for line-graph patches.
    #[arg(long)]
    mode: Option<Mode>,
    #[arg(long, default_value_t = 1)]
    h: u32,
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Window {
    /// Ball of this radius around the origin.
    #[arg(long)]
    radius: Option<usize>,
    /// Square window of side × side translation cells.
    #[arg(long)]
    side: Option<i64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
struct FormulaArgs {
    #[command(flatten)]
    window: Window,
    /// Where to write the instance and labeling bundle (default stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    instance_out: Option<PathBuf>,
    #[arg(long)]
    labeling_out: Option<PathBuf>,
    /// Also draw the labeled patch to this file.
    #[arg(long)]
    render_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "svg")]
    render_format: Format,
}

#[derive(Debug, Args)]
struct LabeledInput {
    /// Bundle from `formula`; `-` or absent reads stdin.
    #[arg(conflicts_with_all = ["instance", "labeling"])]
    bundle: Option<PathBuf>,
    #[arg(long, requires = "labeling")]
    instance: Option<PathBuf>,
    #[arg(long, requires = "instance")]
    labeling: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: LabeledInput,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    input: LabeledInput,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long, value_parser = SHAPES)]
    shape: Option<String>,
    #[arg(long)]
    instance: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchFlags {
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 3600.0)]
    budget: f64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Disable the complement restriction on the first branched element.
    #[arg(long)]
    no_symmetry: bool,
    /// Also restrict the first branched element to the least label in its orbit.
    #[arg(long)]
    automorphisms: bool,
    /// Branch in a fixed degree order instead of smallest domain first.
    #[arg(long)]
    static_order: bool,
}

impl SearchFlags {
    fn config(&self, max_label: u32) -> SearchConfig {
        SearchConfig {
            max_label,
            time_budget_seconds: self.budget,
            variable_order: if self.static_order { VariableOrder::Static } else { VariableOrder::MostConstrained },
            symmetry_breaking: !self.no_symmetry,
            automorphism_breaking: self.automorphisms,
            workers: self.workers,
        }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    search: SearchFlags,
    /// Decide this palette only; otherwise search for the minimum span.
    #[arg(long, conflicts_with_all = ["lb", "ub"])]
    max_label: Option<u32>,
    #[arg(long, default_value_t = 0)]
    lb: u32,
    #[arg(long, default_value_t = 63)]
    ub: u32,
    /// Write a found labeling here as a labeling file.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Claim {
    /// Claimed lower bound: labels 0..claimed-lb-1 are exhausted.
    #[arg(long)]
    claimed_lb: Option<u32>,
    /// Same as --claimed-lb max-label+1.
    #[arg(long)]
    max_label: Option<u32>,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    claim: Claim,
    #[command(flatten)]
    search: SearchFlags,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[arg(long, value_parser = SUITES)]
    suite: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// An input or usage problem; always exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<gridlabel::Error> for Usage {
    fn from(e: gridlabel::Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<i32, Usage>;

/// Parses `argv` (program name first), runs the subcommand and returns its exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            e.print().ok();
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Formula(a) => formula(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Solve(a) => solve(a),
        Command::Certify(a) => certify(a),
        Command::Audit(a) => audit(a),
        Command::Render(a) => render_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Usage> {
    let mut s = String::new();
    match path {
        None => io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| Usage(format!("cannot read stdin: {e}"))),
        Some(p) if p == Path::new("-") => read_text(None),
        Some(p) => fs::read_to_string(p).map_err(|e| Usage(format!("cannot read {}: {e}", p.display()))),
    }
}

fn write_text(path: Option<&Path>, text: &str) -> Result<(), Usage> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Usage(format!("cannot write stdout: {e}"))),
        Some(p) => fs::write(p, text).map_err(|e| Usage(format!("cannot write {}: {e}", p.display()))),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Usage> {
    serde_json::to_string_pretty(value).map_err(|e| Usage(e.to_string()))
}

fn gen(a: GenArgs) -> Outcome {
    let instance = match (&a.shape, a.radius) {
        (Some(shape), _) => {
            let g = build_named(shape).ok_or_else(|| Usage(format!("unknown shape {shape}")))?;
            if g.patch.kind().grid() != a.grid {
                return Err(Usage(format!("shape {shape} lives on {}, not {}", g.patch.kind().grid(), a.grid)));
            }
            if a.mode.is_some_and(|m| m != g.mode) {
                return Err(Usage(format!("shape {shape} is labeled in {:?} mode", g.mode).to_lowercase()));
            }
            InstanceFile::from_gadget(&g, a.h, a.k)
        }
        (None, Some(radius)) => {
            let patch = generate_patch(a.grid, radius, a.grid.origin())?;
            let mode = a.mode.unwrap_or(match patch.kind() {
                PatchKind::Line(_) => Mode::Vertex,
                PatchKind::Grid(_) => Mode::Edge,
            });
            InstanceFile::from_patch(&patch, mode, a.h, a.k)
        }
        (None, None) => unreachable!("clap requires --radius or --shape"),
    };
    write_text(a.output.as_deref(), &instance.to_json()?)?;
    eprintln!("{} {} elements, digest {}", instance.kind, instance.element_count(), instance.digest()?);
    Ok(EXIT_OK)
}

fn formula(a: FormulaArgs) -> Outcome {
    let patch = match (a.window.radius, a.window.side) {
        (Some(r), _) => generate_patch(GridKind::Hex3, r, GridKind::Hex3.origin())?,
        (None, Some(side)) if side > 0 => axis_window(0, side)?,
        _ => return Err(Usage("--side must be positive".into())),
    };
    let labeling = emit_labeling(&patch)?;
    let instance = InstanceFile::from_patch(&patch, Mode::Vertex, 1, 2);
    let bundle = Bundle::new(instance, &labeling)?;
    if let Some(p) = &a.instance_out {
        write_text(Some(p), &bundle.instance.to_json()?)?;
    }
    if let Some(p) = &a.labeling_out {
        write_text(Some(p), &bundle.labeling.to_json()?)?;
    }
    if let Some(p) = &a.render_out {
        write_text(Some(p), &draw(&patch, Mode::Vertex, &labeling, a.render_format)?)?;
    }
    if a.output.is_some() || (a.instance_out.is_none() && a.labeling_out.is_none()) {
        write_text(a.output.as_deref(), &bundle.to_json()?)?;
    }
    eprintln!("{} vertices, max label {}", patch.vertex_count(), labeling.span().unwrap_or(0));
    Ok(EXIT_OK)
}

fn load_labeled(input: &LabeledInput) -> Result<(InstanceFile, Labeling), Usage> {
    let (instance, file) = match (&input.instance, &input.labeling) {
        (Some(i), Some(l)) => (InstanceFile::from_json(&read_text(Some(i))?)?, LabelingFile::from_json(&read_text(Some(l))?)?),
        _ => {
            let b = Bundle::from_json(&read_text(input.bundle.as_deref())?)?;
            (b.instance, b.labeling)
        }
    };
    let labeling = file.labeling_for(&instance)?;
    Ok((instance, labeling))
}

fn model_of(instance: &InstanceFile) -> Result<ConflictModel, Usage> {
    let patch = instance.to_patch()?;
    Ok(build_conflicts(&patch, instance.h, instance.k, instance.mode))
}

fn verify_cmd(a: VerifyArgs) -> Outcome {
    let (instance, labeling) = load_labeled(&a.input)?;
    let report = verify(&labeling, &model_of(&instance)?)?;
    let lines = report.lines();
    for line in &lines {
        println!("{line}");
    }
    if report.passed() {
        println!("PASS {} elements, max label {}", labeling.len(), labeling.span().unwrap_or(0));
        Ok(EXIT_OK)
    } else {
        println!("FAIL {} violations", lines.len());
        Ok(EXIT_FAIL)
    }
}

fn draw(patch: &gridlabel::GraphPatch, mode: Mode, labeling: &Labeling, format: Format) -> Result<String, Usage> {
    Ok(match format {
        Format::Ascii => render::ascii(patch, mode, labeling)?,
        Format::Svg => render::svg(patch, mode, labeling)?,
    })
}

fn render_cmd(a: RenderArgs) -> Outcome {
    let (instance, labeling) = load_labeled(&a.input)?;
    let patch = instance.to_patch()?;
    write_text(a.output.as_deref(), &draw(&patch, instance.mode, &labeling, a.format)?)?;
    Ok(EXIT_OK)
}

fn load_source(source: &Source) -> Result<InstanceFile, Usage> {
    match (&source.shape, &source.instance) {
        (Some(shape), _) => {
            let g = build_named(shape).ok_or_else(|| Usage(format!("unknown shape {shape}")))?;
            Ok(InstanceFile::from_gadget(&g, 1, 2))
        }
        (None, Some(path)) => {
            let instance = InstanceFile::from_json(&read_text(Some(path))?)?;
            instance.to_patch()?;
            Ok(instance)
        }
        (None, None) => unreachable!("clap requires --shape or --instance"),
    }
}

fn solve(a: SolveArgs) -> Outcome {
    let instance = load_source(&a.source)?;
    let model = model_of(&instance)?;
    let (json, witness, code) = match a.max_label {
        Some(max_label) => {
            let out = feasible(&model, &a.search.config(max_label))?;
            eprintln!("{:?} at max label {max_label}, {} nodes, {:.2}s", out.verdict, out.stats.nodes, out.stats.wall_seconds);
            let code = if out.verdict == Verdict::Timeout { EXIT_TIMEOUT } else { EXIT_OK };
            (to_json(&out)?, out.witness, code)
        }
        None => {
            let out = min_span(&model, a.lb, a.ub, &a.search.config(a.ub))?;
            let (witness, code) = match &out {
                MinSpan::Found { span, witness, .. } => {
                    eprintln!("minimum span {span}");
                    (Some(witness.clone()), EXIT_OK)
                }
                MinSpan::Unsat { ub, .. } => {
                    eprintln!("no labeling with labels up to {ub}");
                    (None, EXIT_OK)
                }
                MinSpan::Timeout { lower, .. } => {
                    eprintln!("timed out; span is at least {lower}");
                    (None, EXIT_TIMEOUT)
                }
            };
            (to_json(&out)?, witness, code)
        }
    };
    write_text(a.output.as_deref(), &json)?;
    if let (Some(path), Some(w)) = (&a.witness, &witness) {
        write_text(Some(path), &LabelingFile::new(&instance, w)?.to_json()?)?;
    }
    Ok(code)
}

fn certify(a: CertifyArgs) -> Outcome {
    let instance = load_source(&a.source)?;
    let model = model_of(&instance)?;
    let claimed = match (a.claim.claimed_lb, a.claim.max_label) {
        (Some(lb), _) => lb,
        (None, Some(m)) => m.checked_add(1).ok_or_else(|| Usage("--max-label is too large".into()))?,
        (None, None) => unreachable!("clap requires a claim"),
    };
    let cfg = a.search.config(claimed.saturating_sub(1));
    match certify_lb(&model, claimed, &cfg)? {
        CertifyOutcome::Certified(cert) => {
            let file = CertificateFile::unsat(&instance, &cert)?;
            write_text(a.output.as_deref(), &file.to_json()?)?;
            eprintln!("UNSAT with {claimed} labels {{0..{}}}: {} nodes, {:.2}s", claimed - 1, cert.nodes, cert.wall_seconds);
            Ok(EXIT_OK)
        }
        CertifyOutcome::Refuted { witness, stats } => {
            let file = CertificateFile::refuted(&instance, claimed, stats.nodes, stats.wall_seconds, cfg, &witness)?;
            write_text(a.output.as_deref(), &file.to_json()?)?;
            eprintln!("REFUTED: a labeling with max label {} exists", witness.span().unwrap_or(0));
            Ok(EXIT_FAIL)
        }
        CertifyOutcome::Inconclusive { stats } => {
            eprintln!("timed out after {} nodes, {:.2}s; nothing certified", stats.nodes, stats.wall_seconds);
            Ok(EXIT_TIMEOUT)
        }
    }
}

fn audit(a: AuditArgs) -> Outcome {
    let report = audit_suite(&a.suite)?;
    for line in report.lines() {
        eprintln!("{line}");
    }
    write_text(a.output.as_deref(), &to_json(&report)?)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}
