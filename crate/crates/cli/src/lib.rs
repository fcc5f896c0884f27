//! `hcube`: generate graphs, label and draw them, verify the results, and
//! compare constructions against exact optima.
//!
//! Stages talk through bundles on stdin/stdout, so they compose:
//!
//! ```text
//! hcube gen complete 5 | hcube label greedy | hcube draw via-antimagic | hcube verify
//! ```
//!
//! Exit codes: 0 success, 1 invalid artifact or failed hypothesis,
//! 2 usage or parse error, 3 exhaustive search hit its cap.

use std::fmt::Write as _;
use std::io::{Read, Write};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hcube_core::hypercube::MAX_ENUMERATION_DIMENSION;
use hcube_core::io::{self, Bundle};
use hcube_core::oracle::{self, Outcome};
use hcube_core::*;
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_UNRESOLVED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hcube",
    version,
    about = "Hypercube drawings and antimagic labellings of graphs"
)]
pub struct Cli {
    /// Emit one JSON document instead of the plain-text formats.
    #[arg(long, global = true)]
    json: bool,

    /// Read input from this file instead of stdin.
    #[arg(long, short, global = true)]
    input: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Label the input graph.
    Label {
        #[command(subcommand)]
        strategy: LabelStrategy,
    },
    /// Draw the input graph in a hypercube.
    Draw {
        #[command(subcommand)]
        strategy: DrawStrategy,
    },
    /// Check the labelling and/or drawing carried with the input graph.
    Verify,
    /// Exact optimum by exhaustive search.
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
    /// Lower bounds, constructions and (optionally) optima side by side.
    Bounds(BoundsArgs),
    /// Standalone computations that need no input graph.
    Probe {
        #[command(subcommand)]
        what: Probe,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
#[command(rename_all = "snake_case")]
enum Family {
    Complete {
        n: usize,
    },
    /// Complete graph with a loop at every vertex.
    #[command(alias = "complete-pseudo")]
    CompletePseudo {
        n: usize,
    },
    /// `k`-th power of the path on `n` vertices.
    #[command(alias = "path-power")]
    PathPower {
        n: usize,
        k: usize,
    },
    /// Complete graph with every edge subdivided.
    #[command(alias = "subdivided-complete")]
    SubdividedComplete {
        n: usize,
    },
    /// `m` random edges with maximum degree `max_degree`.
    Random {
        n: usize,
        m: usize,
        max_degree: usize,
        #[arg(long)]
        seed: u64,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        n: usize,
    },
}

impl Family {
    fn kind(self) -> GraphKind {
        match self {
            Family::Complete { n } => GraphKind::Complete { n },
            Family::CompletePseudo { n } => GraphKind::CompletePseudo { n },
            Family::PathPower { n, k } => GraphKind::PathPower { n, k },
            Family::SubdividedComplete { n } => GraphKind::SubdividedComplete { n },
            Family::Random { n, m, max_degree, seed } => GraphKind::RandomBoundedDegree { n, m, max_degree, seed },
            Family::Path { n } => GraphKind::Path { n },
            Family::Cycle { n } => GraphKind::Cycle { n },
            Family::Star { n } => GraphKind::Star { n },
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SidonKind {
    Singer,
    ErdosTuran,
}

#[derive(Debug, Subcommand)]
enum LabelStrategy {
    /// First-fit along the degeneracy order.
    Greedy,
    /// Path-power labelling by vertex id; the graph must fit in `P_n^p`.
    Pathpower {
        #[arg(long)]
        p: u64,
    },
    /// Path-power labelling along an ordering, with the prime chosen from
    /// its bandwidth.
    Bandwidth {
        /// Comma-separated vertex ids, first to last. Defaults to `0..n`.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Positions in a 1-queue ordering. Searched for when not given.
    Queue {
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Combine a track injection with a Sidon set.
    Combine {
        /// File with the track injection (`t <tracks> <capacity>` then `id track slot`).
        #[arg(long)]
        tracks: std::path::PathBuf,
        #[arg(long, value_enum, default_value = "singer")]
        sidon: SidonKind,
    },
}

#[derive(Debug, Subcommand)]
enum DrawStrategy {
    /// Binary encoding of the carried labelling, or of a greedy one.
    ViaAntimagic,
    /// Random corners repaired by resampling.
    Lll {
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum OracleTarget {
    /// Smallest label range.
    Mag {
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
    /// Smallest drawing volume; `cap` limits the dimension.
    Vol {
        #[arg(long, default_value_t = 6)]
        cap: u32,
    },
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Also run the exhaustive searches.
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    mag_cap: u64,
    #[arg(long, default_value_t = 6)]
    vol_cap: u32,
    /// Sweep a one-parameter family instead of reading a graph.
    #[arg(long, value_enum)]
    family: Option<SweepFamily>,
    #[arg(long, default_value_t = 1, requires = "family")]
    from: usize,
    #[arg(long, default_value_t = 6, requires = "family")]
    to: usize,
    /// Power for `--family path-power`.
    #[arg(long, default_value_t = 2)]
    k: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepFamily {
    Complete,
    CompletePseudo,
    PathPower,
    SubdividedComplete,
    Path,
    Cycle,
    Star,
}

impl SweepFamily {
    fn kind(self, n: usize, k: usize) -> GraphKind {
        match self {
            SweepFamily::Complete => GraphKind::Complete { n },
            SweepFamily::CompletePseudo => GraphKind::CompletePseudo { n },
            SweepFamily::PathPower => GraphKind::PathPower { n, k },
            SweepFamily::SubdividedComplete => GraphKind::SubdividedComplete { n },
            SweepFamily::Path => GraphKind::Path { n },
            SweepFamily::Cycle => GraphKind::Cycle { n },
            SweepFamily::Star => GraphKind::Star { n },
        }
    }
}

#[derive(Debug, Subcommand)]
enum Probe {
    /// Exact probability that two random segments cross in `{0,1}^d`.
    Crossing { d: u32 },
    /// Largest edge count of a drawing in each dimension up to `d`.
    MaxEdges {
        #[arg(default_value_t = 6)]
        d: u32,
    },
    /// Explicit Sidon sets.
    Sidon {
        #[arg(value_enum)]
        kind: SidonKind,
        prime: u64,
    },
    /// Dimension used by the resampling drawer.
    LllDimension { n: usize, m: usize, max_degree: usize },
}

/// An error carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            error: anyhow::anyhow!(message.into()),
        }
    }
}

/// Malformed input and bad parameters are usage errors; everything else
/// means an artifact or a construction's hypothesis failed.
fn exit_code_of(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::VertexOutOfRange { .. }
        | Error::DuplicateEdge(_)
        | Error::LoopNotAllowed(_)
        | Error::LoopsUnsupported { .. }
        | Error::InvalidParameters(_)
        | Error::GenerationStalled { .. }
        | Error::InvalidOrdering(_)
        | Error::SearchCapExceeded { .. }
        | Error::NotPrime { .. }
        | Error::DimensionOutOfRange { .. }
        | Error::DimensionMismatch(..) => EXIT_USAGE,
        _ => EXIT_INVALID,
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = error
            .chain()
            .find_map(|c| c.downcast_ref::<Error>())
            .map_or(EXIT_USAGE, exit_code_of);
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code_of(&e),
            error: e.into(),
        }
    }
}

type Outcome2 = std::result::Result<Output, Failure>;

/// What a command produced: text and JSON renderings plus an exit code.
struct Output {
    text: String,
    json: serde_json::Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: impl Serialize) -> Self {
        Output {
            text,
            json: serde_json::to_value(json).expect("output types serialise"),
            code: EXIT_OK,
        }
    }

    fn bundle(b: &Bundle) -> Self {
        Output::ok(io::write_bundle(b), b)
    }
}

struct Context2<'a> {
    json: bool,
    input: Option<&'a std::path::Path>,
    stdin: &'a mut dyn Read,
}

impl Context2<'_> {
    fn read_bundle(&mut self) -> std::result::Result<Bundle, Failure> {
        let mut text = String::new();
        match self.input {
            Some(path) => {
                text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            }
            None => {
                self.stdin.read_to_string(&mut text).context("reading stdin")?;
            }
        }
        let source = self.input.map_or("<stdin>".to_string(), |p| p.display().to_string());
        Ok(io::parse_bundle_any(&text).with_context(|| format!("in {source}"))?)
    }
}

/// Parses `args` (program name first) and runs the command, reading stdin
/// when the command takes a graph. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut ctx = Context2 {
        json: cli.json,
        input: cli.input.as_deref(),
        stdin,
    };
    match execute(cli.command, &mut ctx) {
        Ok(out) => {
            let body = if ctx.json {
                let mut s = serde_json::to_string_pretty(&out.json).expect("values serialise");
                s.push('\n');
                s
            } else {
                out.text
            };
            if stdout.write_all(body.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {:#}", f.error);
            f.code
        }
    }
}

fn execute(command: Command, ctx: &mut Context2) -> Outcome2 {
    match command {
        Command::Gen { family } => Ok(Output::bundle(&Bundle::new(generate(family.kind())?))),
        Command::Label { strategy } => {
            let mut bundle = ctx.read_bundle()?;
            bundle.labelling = Some(label(&bundle.graph, strategy)?);
            Ok(Output::bundle(&bundle))
        }
        Command::Draw { strategy } => draw(ctx.read_bundle()?, strategy),
        Command::Verify => verify(&ctx.read_bundle()?),
        Command::Oracle { target } => run_oracle(&ctx.read_bundle()?.graph, target),
        Command::Bounds(args) => bounds(args, ctx),
        Command::Probe { what } => probe(what),
    }
}

fn ordering(order: Option<Vec<usize>>, n: usize) -> std::result::Result<VertexOrdering, Failure> {
    Ok(match order {
        Some(ids) => VertexOrdering::new(ids)?,
        None => VertexOrdering::identity(n),
    })
}

fn label(g: &Graph, strategy: LabelStrategy) -> std::result::Result<Labelling, Failure> {
    let n = g.vertex_count();
    let f = match strategy {
        LabelStrategy::Greedy => greedy_degen_label(g)?,
        LabelStrategy::Pathpower { p } => {
            let f = path_power_label(n, p)?;
            let width = VertexOrdering::identity(n).bandwidth(g)?;
            if width as u64 > p {
                return Err(Failure::invalid(format!(
                    "graph has bandwidth {width} > {p} under the identity ordering, so it is not a subgraph of P_{n}^{p}"
                )));
            }
            f
        }
        LabelStrategy::Bandwidth { order } => bandwidth_label(g, &ordering(order, n)?)?,
        LabelStrategy::Queue { order } => {
            let order = match order {
                Some(ids) => VertexOrdering::new(ids)?,
                None => find_one_queue_layout(g, graph::DEFAULT_QUEUE_SEARCH_CAP)?
                    .ok_or_else(|| Failure::invalid("graph has no 1-queue layout"))?,
            };
            queue_label(g, &order)?
        }
        LabelStrategy::Combine { tracks, sidon } => {
            let text = std::fs::read_to_string(&tracks).with_context(|| format!("reading {}", tracks.display()))?;
            let f = io::parse_track_injection(&text).with_context(|| format!("in {}", tracks.display()))?;
            let t = f.tracks() as u64;
            let set = match sidon {
                // q + 1 elements from the field of order q^3
                SidonKind::Singer => singer_sidon(smallest_prime_at_least(t.saturating_sub(1).max(2)))?,
                SidonKind::ErdosTuran => erdos_turan_sidon(smallest_prime_at_least(t.max(2)))?,
            };
            technical_combine(g, &f, &set)?
        }
    };
    if let Some(hit) = find_sum_collision(g, &f)? {
        return Err(Failure::invalid(format!(
            "construction produced a non-antimagic labelling: edges {} and {} both sum to {}",
            hit.first, hit.second, hit.sum
        )));
    }
    Ok(f)
}

#[derive(Serialize)]
struct DrawReport<'a> {
    #[serde(flatten)]
    bundle: &'a Bundle,
    #[serde(skip_serializing_if = "Option::is_none")]
    resampling: Option<&'a LllDrawing>,
}

fn draw(mut bundle: Bundle, strategy: DrawStrategy) -> Outcome2 {
    let g = &bundle.graph;
    match strategy {
        DrawStrategy::ViaAntimagic => {
            let f = match &bundle.labelling {
                Some(f) => f.clone(),
                None => greedy_degen_label(g)?,
            };
            bundle.drawing = Some(from_antimagic(g, &f)?);
            bundle.labelling = Some(f);
            Ok(Output::bundle(&bundle))
        }
        DrawStrategy::Lll { seed } => {
            let out = lll_draw(g, seed)?;
            bundle.drawing = Some(out.drawing.clone());
            let p = &out.parameters;
            let text = format!(
                "# resampling: predicted dimension {} (n {}, m {}, max degree {}), escalations {}, resamplings {}\n{}",
                p.dimension,
                p.n,
                p.m,
                p.max_degree,
                out.escalations,
                out.resamplings,
                io::write_bundle(&bundle)
            );
            Ok(Output::ok(
                text,
                DrawReport {
                    bundle: &bundle,
                    resampling: Some(&out),
                },
            ))
        }
    }
}

#[derive(Serialize)]
struct Verdict {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    labelling: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    drawing: Option<Verdict>,
}

fn verify(bundle: &Bundle) -> Outcome2 {
    let g = &bundle.graph;
    if bundle.labelling.is_none() && bundle.drawing.is_none() {
        return Err(Failure {
            code: EXIT_USAGE,
            error: anyhow::anyhow!("input carries neither a labelling nor a drawing"),
        });
    }
    let mut report = VerifyReport {
        labelling: None,
        drawing: None,
    };
    let mut text = String::new();
    if let Some(f) = &bundle.labelling {
        let verdict = match find_sum_collision(g, f)? {
            None => Verdict {
                valid: true,
                detail: Some(format!("max label {} within k {}", f.max_label(), f.k())),
            },
            Some(hit) => Verdict {
                valid: false,
                detail: Some(format!(
                    "edges {} and {} both sum to {}",
                    hit.first, hit.second, hit.sum
                )),
            },
        };
        let _ = writeln!(
            text,
            "labelling: {}: {}",
            if verdict.valid { "valid" } else { "invalid" },
            verdict.detail.as_deref().unwrap_or_default()
        );
        report.labelling = Some(verdict);
    }
    if let Some(d) = &bundle.drawing {
        let verdict = match find_drawing_violation(g, d)? {
            None => Verdict {
                valid: true,
                detail: Some(format!("dimension {}, volume {}", d.dimension(), d.volume())),
            },
            Some(v @ DrawingViolation::Crossing { first, second, .. }) => Verdict {
                valid: false,
                detail: Some(format!(
                    "edges {first} and {second} cross: both endpoint sums are {}",
                    v.sum_string(d.dimension()).unwrap_or_default()
                )),
            },
            Some(DrawingViolation::Collision { first, second }) => Verdict {
                valid: false,
                detail: Some(format!("vertices {first} and {second} share corner {}", d.point(first))),
            },
        };
        let _ = writeln!(
            text,
            "drawing: {}: {}",
            if verdict.valid { "valid" } else { "invalid" },
            verdict.detail.as_deref().unwrap_or_default()
        );
        report.drawing = Some(verdict);
    }
    let valid = report.labelling.as_ref().is_none_or(|v| v.valid) && report.drawing.as_ref().is_none_or(|v| v.valid);
    let mut out = Output::ok(text, &report);
    out.code = if valid { EXIT_OK } else { EXIT_INVALID };
    Ok(out)
}

#[derive(Serialize)]
struct OracleReport<'a, W: Serialize> {
    target: &'static str,
    #[serde(flatten)]
    result: &'a oracle::ExactResult<W>,
}

fn oracle_output<W: Serialize>(
    target: &'static str,
    result: &oracle::ExactResult<W>,
    witness_text: impl Fn(&W) -> String,
) -> Output {
    let (text, code) = match &result.outcome {
        Outcome::Exact { value, witness } => (
            format!(
                "{target} {value}\nnodes_explored {}\n{}",
                result.nodes_explored,
                witness_text(witness)
            ),
            EXIT_OK,
        ),
        Outcome::Unresolved { lower, upper } => (
            format!(
                "{target} unresolved: at least {lower}, best known {}\nnodes_explored {}\n",
                upper.map_or("none".into(), |u| u.to_string()),
                result.nodes_explored
            ),
            EXIT_UNRESOLVED,
        ),
    };
    let mut out = Output::ok(text, OracleReport { target, result });
    out.code = code;
    out
}

fn run_oracle(g: &Graph, target: OracleTarget) -> Outcome2 {
    Ok(match target {
        OracleTarget::Mag { cap } => oracle_output("mag", &exact_mag(g, cap), io::write_labelling),
        OracleTarget::Vol { cap } => oracle_output("vol", &exact_vol(g, cap)?, io::write_drawing),
    })
}

#[derive(Serialize)]
struct NamedReport {
    graph: String,
    #[serde(flatten)]
    report: BoundsReport,
}

fn describe_bounds(list: &[Bound]) -> String {
    if list.is_empty() {
        return "-".into();
    }
    list.iter()
        .map(|b| {
            let name = serde_json::to_value(b.source)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default();
            match b.guarantee {
                Some(g) => format!("{name} {} (<= {g})", b.value),
                None => format!("{name} {}", b.value),
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn describe_exact(e: Option<ExactBound>) -> String {
    match e {
        None => "-".into(),
        Some(ExactBound { value: Some(v), .. }) => v.to_string(),
        Some(ExactBound { lower, .. }) => format!(">= {lower}"),
    }
}

fn bounds(args: BoundsArgs, ctx: &mut Context2) -> Outcome2 {
    let options = BoundsOptions {
        seed: args.seed,
        exact: args.exact,
        mag_cap: args.mag_cap,
        vol_cap: args.vol_cap,
        ..Default::default()
    };
    let graphs: Vec<(String, Graph)> = match args.family {
        Some(family) => (args.from..=args.to)
            .map(|n| {
                let kind = family.kind(n, args.k);
                let name = serde_json::to_string(&kind).expect("kinds serialise");
                generate(kind).map(|g| (name, g))
            })
            .collect::<Result<_>>()?,
        None => vec![("input".into(), ctx.read_bundle()?.graph)],
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    let mut problems = Vec::new();
    let mut unresolved = false;
    for (name, g) in graphs {
        let report = bounds_report(&g, &options)?;
        let _ = writeln!(
            text,
            "{name}\n  n {}  m {}  max degree {}  degeneracy {}",
            report.n, report.m, report.max_degree, report.degeneracy
        );
        let _ = writeln!(
            text,
            "  mag  lower {}  exact {}  upper {}",
            report.mag_lower.value,
            describe_exact(report.mag_exact),
            describe_bounds(&report.mag_upper)
        );
        if let Some(lower) = report.vol_lower {
            let _ = writeln!(
                text,
                "  vol  lower {}  exact {}  upper {}",
                lower.value,
                describe_exact(report.vol_exact),
                describe_bounds(&report.vol_upper)
            );
        }
        unresolved |= [report.mag_exact, report.vol_exact]
            .iter()
            .flatten()
            .any(|e| e.value.is_none());
        problems.extend(report.inconsistencies().into_iter().map(|p| format!("{name}: {p}")));
        reports.push(NamedReport { graph: name, report });
    }
    for p in &problems {
        let _ = writeln!(text, "inconsistent: {p}");
    }
    let mut out = Output::ok(text, &reports);
    out.code = if !problems.is_empty() {
        EXIT_INVALID
    } else if unresolved {
        EXIT_UNRESOLVED
    } else {
        EXIT_OK
    };
    Ok(out)
}

#[derive(Serialize)]
struct MaxEdgesRow {
    dimension: u32,
    max_edges: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exhaustive: Option<usize>,
}

#[derive(Serialize)]
struct LllDimensionReport {
    #[serde(flatten)]
    parameters: LllParameters,
}

fn probe(what: Probe) -> Outcome2 {
    match what {
        Probe::Crossing { d } => {
            if d > MAX_ENUMERATION_DIMENSION {
                return Err(Error::DimensionOutOfRange {
                    dim: d,
                    max: MAX_ENUMERATION_DIMENSION,
                }
                .into());
            }
            let p = crossing_probability_exact(d)?;
            let mut text = format!(
                "d {}: probability {} ({} of {} quadruples)\n",
                p.dimension, p.probability, p.quadruples, p.total
            );
            for s in &p.strata {
                let _ = writeln!(
                    text,
                    "  {} ones: {} midpoints, {} quadruples, probability {}",
                    s.ones, s.midpoints, s.quadruples, s.probability
                );
            }
            Ok(Output::ok(text, &p))
        }
        Probe::MaxEdges { d } => {
            let rows: Vec<MaxEdgesRow> = (0..=d.min(80))
                .map(|dim| MaxEdgesRow {
                    dimension: dim,
                    max_edges: max_edges(dim).to_string(),
                    exhaustive: (dim <= 3).then(|| max_drawing_edges_exhaustive(dim).expect("d <= 3")),
                })
                .collect();
            let mut text = String::new();
            for r in &rows {
                let _ = write!(text, "d {}: {}", r.dimension, r.max_edges);
                if let Some(e) = r.exhaustive {
                    let _ = write!(text, " (exhaustive {e})");
                }
                text.push('\n');
            }
            Ok(Output::ok(text, &rows))
        }
        Probe::Sidon { kind, prime } => {
            let set = match kind {
                SidonKind::Singer => singer_sidon(prime)?,
                SidonKind::ErdosTuran => erdos_turan_sidon(prime)?,
            };
            let elements: Vec<String> = set.elements().iter().map(u64::to_string).collect();
            let text = format!(
                "size {} within 1..={}\n{}\n",
                set.len(),
                set.universe_bound(),
                elements.join(" ")
            );
            Ok(Output::ok(text, &set))
        }
        Probe::LllDimension { n, m, max_degree } => {
            let parameters = LllParameters::new(n, m, max_degree);
            let text = format!(
                "{}\n# max(log2(e(4n+1)), log_8/3(e^2(4Δm+1))) with 4n+1 = {}, 4Δm+1 = {}\n",
                parameters.dimension, parameters.collision_weight_inv, parameters.crossing_weight_inv
            );
            Ok(Output::ok(text, LllDimensionReport { parameters }))
        }
    }
}
