use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use greenseq::families::{
    all_cycles_oriented_decompose, auto_decompose, cartan_data, classify_mu_d, hl_component, hl_decompose,
    hl_decompose_by_labels, hl_quiver, hl_window, is_mu_a, linear_a, mu_a_decompose, mu_d_decompose, DynkinType,
    HlVertex,
};
use greenseq::io::{self, Order};
use greenseq::oracle::{self, OracleConfig, OracleError, OracleReport};
use greenseq::qn::{random_qn, RandomQnParams};
use greenseq::{apply_sequence, frame, fixtures, verdict, MutationSequence, Policy, QnDecomposition, Quiver, VertexId};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Maximal green sequences for quivers built from vertical chains.
#[derive(Parser)]
#[command(name = "greenseq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a quiver from one of the built-in families.
    Generate(GenerateArgs),
    /// Decompose a quiver into chains.
    Decompose(DecomposeArgs),
    /// Check a chain decomposition.
    Validate(ValidateArgs),
    /// Report which recognized families a quiver belongs to.
    Classify(QuiverArgs),
    /// Construct a maximal green sequence and check it.
    Mgs(MgsArgs),
    /// Check whether a sequence is a maximal green sequence.
    Verify(VerifyArgs),
    /// Exhaustive search on a small quiver.
    Search(SearchArgs),
    /// Write the framed quiver, optionally after some mutations, as DOT or JSON.
    Export(ExportArgs),
}

#[derive(Args)]
struct QuiverArgs {
    /// Quiver JSON file (`-` for standard input).
    #[arg(required_unless_present = "fixture")]
    quiver: Option<PathBuf>,
    /// Use a built-in quiver instead of a file: fig4, fig6, fig7, fig8, fig10a..fig10d.
    #[arg(long, conflicts_with = "quiver")]
    fixture: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    LinearA,
    Hl,
    RandomQn,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Number of vertices for linear-a.
    #[arg(long)]
    n: Option<usize>,
    /// Dynkin type for hl (A..G).
    #[arg(long = "type")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Named window for hl; `fig4` is the component of (1,10) in r ∈ [-1, 10].
    #[arg(long, conflicts_with_all = ["lo", "hi"])]
    window: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<i64>,
    /// For hl: keep only the connected component of this vertex, written `(i,r)`.
    #[arg(long)]
    component: Option<String>,
    /// Seed for random-qn.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of chains for random-qn.
    #[arg(long, default_value_t = 4)]
    chains: usize,
    #[arg(long, default_value_t = 12)]
    max_vertices: usize,
    /// Also write the decomposition here.
    #[arg(long)]
    decomposition_out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeFamily {
    Auto,
    Hl,
    MuA,
    MuD,
    Oriented,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: QuiverArgs,
    #[arg(long, value_enum, default_value = "auto")]
    family: DecomposeFamily,
    /// For mu-a: vertices that must be alone in their chain.
    #[arg(long)]
    pin: Vec<String>,
    /// For hl: Dynkin type and rank; without them the chains are read off the labels.
    #[arg(long = "type", requires = "rank")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Decomposition JSON file.
    decomposition: PathBuf,
    /// Also check that the decomposition describes this quiver.
    #[arg(long)]
    quiver: Option<PathBuf>,
}

#[derive(Args)]
struct MgsArgs {
    #[command(flatten)]
    input: QuiverArgs,
    /// Decomposition JSON; found automatically when omitted.
    #[arg(long)]
    decomposition: Option<PathBuf>,
    /// Order of the printed steps.
    #[arg(long, value_enum, default_value = "execution")]
    order: OrderArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Execution,
    Composition,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Execution => Order::Execution,
            OrderArg::Composition => Order::Composition,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: QuiverArgs,
    /// Sequence JSON file.
    #[arg(long)]
    sequence: PathBuf,
    /// Read the steps in this order, overriding the file.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchMode {
    Count,
    Min,
    Enumerate,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    input: QuiverArgs,
    #[arg(long, value_enum, default_value = "count")]
    mode: SearchMode,
    /// Longest sequence considered.
    #[arg(long, default_value_t = 64)]
    max_len: usize,
    /// Largest number of vertices accepted.
    #[arg(long, default_value_t = OracleConfig::default().max_mutable)]
    max_mutable: usize,
    /// Include the maximal green sequences in the report.
    #[arg(long)]
    sequences: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    input: QuiverArgs,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    /// Mutate the framed quiver along this sequence first.
    #[arg(long)]
    sequence: Option<PathBuf>,
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Only apply the first N steps.
    #[arg(long)]
    prefix: Option<usize>,
    /// Export the quiver itself, without frozen vertices.
    #[arg(long, conflicts_with_all = ["sequence", "prefix"])]
    unframed: bool,
}

/// What a command produced: the report, a one-line summary and the exit code.
struct Outcome {
    stdout: String,
    summary: String,
    code: u8,
}

impl Outcome {
    fn json(value: &Value, summary: impl Into<String>, code: u8) -> Outcome {
        Outcome { stdout: pretty(value), summary: summary.into(), code }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_quiver(args: &QuiverArgs) -> Result<Quiver> {
    if let Some(name) = &args.fixture {
        return fixtures::by_name(name)
            .ok_or_else(|| anyhow!("unknown fixture {name}; known: {}", fixtures::NAMES.join(", ")));
    }
    let path = args.quiver.as_ref().expect("clap requires a quiver or a fixture");
    let file = io::parse_quiver(&read_text(path)?).with_context(|| format!("in {}", path.display()))?;
    if !file.frozen.is_empty() {
        bail!("{}: expected a quiver without frozen vertices", path.display());
    }
    Ok(file.quiver)
}

fn load_decomposition(path: &Path, q: &Quiver) -> Result<QnDecomposition> {
    let cand = io::parse_decomposition(&read_text(path)?).with_context(|| format!("in {}", path.display()))?;
    let qn = cand.build().with_context(|| format!("{} is not a valid decomposition", path.display()))?;
    if qn.quiver() != q {
        bail!("{} does not describe the given quiver", path.display());
    }
    Ok(qn)
}

fn write_file(path: &Path, value: &Value) -> Result<()> {
    fs::write(path, pretty(value)).with_context(|| format!("cannot write {}", path.display()))
}

fn dynkin(kind: &Option<String>, rank: Option<usize>) -> Result<greenseq::families::CartanData> {
    let kind: DynkinType = kind.as_deref().ok_or_else(|| anyhow!("--type is required"))?.parse()?;
    let rank = rank.ok_or_else(|| anyhow!("--rank is required"))?;
    Ok(cartan_data(kind, rank)?)
}

fn generate(args: &GenerateArgs) -> Result<Outcome> {
    let (q, qn) = match args.family {
        FamilyName::LinearA => {
            let n = args.n.ok_or_else(|| anyhow!("--n is required for linear-a"))?;
            if n == 0 {
                bail!("--n must be positive");
            }
            let (q, qn) = linear_a(n);
            (q, Some(qn))
        }
        FamilyName::Hl => {
            let cartan = dynkin(&args.kind, args.rank)?;
            let (lo, hi, seed) = match args.window.as_deref() {
                Some("fig4") => (-1, 10, Some(HlVertex::new(1, 10))),
                Some(other) => bail!("unknown window {other}; known: fig4"),
                None => {
                    let lo = args.lo.ok_or_else(|| anyhow!("--lo and --hi, or --window, are required for hl"))?;
                    let hi = args.hi.ok_or_else(|| anyhow!("--hi is required with --lo"))?;
                    (lo, hi, None)
                }
            };
            let seed = match &args.component {
                Some(s) => Some(HlVertex::parse(s).ok_or_else(|| anyhow!("{s} is not of the form (i,r)"))?),
                None => seed,
            };
            let q = match seed {
                Some(v) => hl_component(&cartan, lo, hi, v)?,
                None => hl_quiver(&cartan, &hl_window(&cartan, lo, hi))?,
            };
            let qn = if q.is_connected() { Some(hl_decompose(&q, &cartan)?) } else { None };
            (q, qn)
        }
        FamilyName::RandomQn => {
            if args.chains == 0 || args.max_vertices == 0 {
                bail!("--chains and --max-vertices must be positive");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let qn = random_qn(&mut rng, RandomQnParams { max_chains: args.chains, max_vertices: args.max_vertices });
            (qn.quiver().clone(), Some(qn))
        }
    };
    if let Some(path) = &args.decomposition_out {
        let qn = qn.as_ref().ok_or_else(|| anyhow!("the generated quiver is not connected; no decomposition"))?;
        write_file(path, &io::decomposition_to_json(qn))?;
    }
    let summary = format!("{} vertices, {} arrows", q.len(), q.arrows().len());
    Ok(Outcome::json(&io::quiver_to_json(&q), summary, 0))
}

fn decompose_with(args: &DecomposeArgs, q: &Quiver) -> Result<Option<(String, QnDecomposition)>> {
    Ok(match args.family {
        DecomposeFamily::Auto => auto_decompose(q).map(|(f, qn)| (f.to_string(), qn)),
        DecomposeFamily::Hl => {
            let qn = if args.kind.is_some() {
                Some(hl_decompose(q, &dynkin(&args.kind, args.rank)?)?)
            } else {
                hl_decompose_by_labels(q)
            };
            qn.map(|qn| ("hernandez-leclerc".to_owned(), qn))
        }
        DecomposeFamily::MuA => {
            let pins: Vec<VertexId> = args.pin.iter().map(|p| VertexId::new(p.as_str())).collect();
            Some(("mu-a".to_owned(), mu_a_decompose(q, &pins)?))
        }
        DecomposeFamily::MuD => {
            let (class, qn) = mu_d_decompose(q)?;
            Some((format!("mu-d-{:?}", class.kind()), qn))
        }
        DecomposeFamily::Oriented => all_cycles_oriented_decompose(q)?.map(|qn| ("all-cycles-oriented".to_owned(), qn)),
    })
}

fn decompose(args: &DecomposeArgs) -> Result<Outcome> {
    let q = load_quiver(&args.input)?;
    match decompose_with(args, &q)? {
        Some((family, qn)) => {
            let mut report = io::decomposition_to_json(&qn);
            report["family"] = json!(family);
            let summary = format!("{family}: {} chains of lengths {:?}", qn.chains().len(), qn.chain_lengths());
            Ok(Outcome::json(&report, summary, 0))
        }
        None => Ok(Outcome::json(&json!({ "family": null }), "no decomposition found", 1)),
    }
}

fn validate(args: &ValidateArgs) -> Result<Outcome> {
    let cand = io::parse_decomposition(&read_text(&args.decomposition)?)?;
    let violations = cand.validate();
    let mut report: Vec<Value> = Vec::new();
    for v in &violations {
        let mut entry = serde_json::to_value(v)?;
        entry["clause"] = json!(v.clause());
        entry["message"] = json!(v.to_string());
        report.push(entry);
    }
    let mut matches = None;
    if violations.is_empty() {
        if let Some(path) = &args.quiver {
            let q = load_quiver(&QuiverArgs { quiver: Some(path.clone()), fixture: None })?;
            let built = cand.clone().build();
            matches = Some(matches!(&built, Ok(qn) if qn.quiver() == &q));
            if let Err(e) = built {
                report.push(json!({ "kind": "Order", "clause": "order", "message": e.to_string() }));
            }
        } else if let Err(e) = cand.clone().build() {
            report.push(json!({ "kind": "Order", "clause": "order", "message": e.to_string() }));
        }
    }
    let valid = report.is_empty() && matches != Some(false);
    let summary = if valid {
        "valid decomposition".to_owned()
    } else if report.is_empty() {
        "valid decomposition of a different quiver".to_owned()
    } else {
        format!("{} violations, first: {}", report.len(), report[0]["message"].as_str().unwrap_or(""))
    };
    let mut out = json!({ "valid": valid, "violations": report });
    if let Some(m) = matches {
        out["matches_quiver"] = json!(m);
    }
    Ok(Outcome::json(&out, summary, if valid { 0 } else { 1 }))
}

fn classify(args: &QuiverArgs) -> Result<Outcome> {
    let q = load_quiver(args)?;
    let mu_d = classify_mu_d(&q);
    let oriented = all_cycles_oriented_decompose(&q)?.is_some();
    let hl = hl_decompose_by_labels(&q).is_some();
    let auto = auto_decompose(&q);
    let report = json!({
        "family": auto.as_ref().map(|(f, _)| f.to_string()),
        "hernandez_leclerc": hl,
        "mu_a": is_mu_a(&q),
        "mu_d": mu_d,
        "all_cycles_oriented": oriented,
        "chains": auto.as_ref().map(|(_, qn)| qn.chains().to_vec()),
    });
    let summary = match &auto {
        Some((f, qn)) => format!("{f}, {} chains", qn.chains().len()),
        None => "no recognized family".to_owned(),
    };
    Ok(Outcome::json(&report, summary, if auto.is_some() { 0 } else { 1 }))
}

fn mgs(args: &MgsArgs) -> Result<Outcome> {
    let q = load_quiver(&args.input)?;
    let (family, qn) = match &args.decomposition {
        Some(path) => ("given".to_owned(), load_decomposition(path, &q)?),
        None => match auto_decompose(&q) {
            Some((f, qn)) => (f.to_string(), qn),
            None => {
                return Ok(Outcome::json(&json!({ "error": "no decomposition found" }), "no decomposition found; pass --decomposition", 2));
            }
        },
    };
    let seq = qn.theorem_mgs();
    let check = verdict(&q, seq.steps());
    let mut report = io::sequence_to_json(&seq, args.order.into());
    report["predicted_length"] = json!(qn.expected_length());
    report["family"] = json!(family);
    report["chains"] = json!(qn.chains());
    report["verified"] = json!(check.is_maximal);
    if check.is_maximal {
        Ok(Outcome::json(&report, format!("{} steps, verified", seq.len()), 0))
    } else {
        let why = check.violation.map(|v| v.to_string()).unwrap_or_default();
        Ok(Outcome::json(&report, format!("CONSTRUCTED SEQUENCE FAILED VERIFICATION: {why}"), 1))
    }
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let q = load_quiver(&args.input)?;
    let text = read_text(&args.sequence)?;
    let steps = io::parse_sequence_steps_as(&text, args.order.map(Order::from))
        .with_context(|| format!("in {}", args.sequence.display()))?;
    let v = verdict(&q, &steps);
    let mut report = serde_json::to_value(&v)?;
    report["length"] = json!(steps.len());
    let summary = match &v.violation {
        None => format!("maximal green sequence of length {}", steps.len()),
        Some(e) => format!("not a maximal green sequence: {e}"),
    };
    Ok(Outcome::json(&report, summary, if v.is_maximal { 0 } else { 1 }))
}

fn search(args: &SearchArgs) -> Result<Outcome> {
    let q = load_quiver(&args.input)?;
    let cfg = OracleConfig { max_mutable: args.max_mutable, ..OracleConfig::from_env() };
    let mut report = OracleReport::default();
    let result: Result<(), OracleError> = (|| {
        match args.mode {
            SearchMode::Min => report.min_length = oracle::min_mgs_length(&q, args.max_len, cfg)?,
            SearchMode::Count if !args.sequences => report.count = Some(oracle::count_mgs(&q, args.max_len, cfg)?),
            SearchMode::Count | SearchMode::Enumerate => {
                let all = oracle::maximal_green_sequences(&q, args.max_len, cfg)?;
                report.count = Some(all.len() as u64);
                report.min_length = all.iter().map(MutationSequence::len).min();
                report.sequences = Some(all.into_iter().map(MutationSequence::into_steps).collect());
            }
        }
        Ok(())
    })();
    match result {
        Ok(()) => {
            let summary = match (report.min_length, report.count) {
                (m, Some(c)) => format!("{c} maximal green sequences of length <= {}, shortest {m:?}", args.max_len),
                (Some(m), None) => format!("shortest maximal green sequence has length {m}"),
                (None, None) => format!("no maximal green sequence of length <= {}", args.max_len),
            };
            Ok(Outcome::json(&serde_json::to_value(&report)?, summary, 0))
        }
        Err(e) => {
            report.budget_exhausted = true;
            Ok(Outcome::json(&serde_json::to_value(&report)?, format!("{e} (raise --max-mutable or {})", oracle::NODE_CAP_ENV), 3))
        }
    }
}

fn export(args: &ExportArgs) -> Result<Outcome> {
    let q = load_quiver(&args.input)?;
    if args.unframed {
        let text = match args.format {
            Format::Dot => io::quiver_to_dot(&q),
            Format::Json => pretty(&io::quiver_to_json(&q)),
        };
        return Ok(Outcome { stdout: text, summary: format!("{} vertices", q.len()), code: 0 });
    }
    let mut state = frame(&q);
    let mut applied = 0;
    if let Some(path) = &args.sequence {
        let steps = io::parse_sequence_steps_as(&read_text(path)?, args.order.map(Order::from))?;
        let seq = MutationSequence::new(steps)?;
        let seq = match args.prefix {
            Some(n) => seq.prefix(n),
            None => seq,
        };
        applied = seq.len();
        state = apply_sequence(&state, &seq, Policy::Unchecked)?.final_state().clone();
    } else if args.prefix.is_some() {
        bail!("--prefix needs --sequence");
    }
    let text = match args.format {
        Format::Dot => io::ice_quiver_to_dot(&state),
        Format::Json => pretty(&io::ice_quiver_to_json(&state)),
    };
    Ok(Outcome { stdout: text, summary: format!("framed quiver after {applied} mutations"), code: 0 })
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Decompose(a) => decompose(a),
        Command::Validate(a) => validate(a),
        Command::Classify(a) => classify(a),
        Command::Mgs(a) => mgs(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Export(a) => export(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprintln!("{}", out.summary);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
