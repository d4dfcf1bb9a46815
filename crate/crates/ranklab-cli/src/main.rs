//! Command-line front end: catalog runs, extremal certifications, instance
//! generation, and report validation.
//!
//! Every command is deterministic for a fixed flag set — identical invocations
//! produce byte-identical documents. Exit codes: 0 clean, 1 when a check
//! failed or a document is invalid (the full JSON payload is still emitted),
//! 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ranklab::catalog::{run_audit, run_suite, SuiteConfig, MAX_DIM};
use ranklab::extremal::{certify, generate, CertMode, Family};
use ranklab::gen::{
    random_idempotent, random_projector, sample_fixed_point_pair, sample_intertwining_pair,
    sample_range_chain_pair, SeedPath,
};
use ranklab::matrix::Matrix;
use ranklab::report::{
    validate_against_schema, BoundsReport, CertRecord, CertificationReport, Meta,
};
use ranklab::scalar::{rat, ExactScalar, FieldSpec};

const REPORT_SCHEMA: &str = include_str!("../../../schema/report.schema.json");
const CERTIFICATION_SCHEMA: &str = include_str!("../../../schema/certification.schema.json");

#[derive(Parser)]
#[command(name = "ranklab", version, about = "Exact rank-identity laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run catalog entries and emit a JSON report.
    Check(CheckArgs),
    /// Certify closed-form extremal rank bounds against sampled draws.
    Extremal(ExtremalArgs),
    /// Generate input instances as one JSON document per line.
    Gen(GenArgs),
    /// Validate a JSON document against the shipped report schemas.
    Report(ReportArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Comma-separated entry ids (default: every non-audit entry).
    #[arg(long, value_delimiter = ',')]
    entries: Vec<String>,
    /// Inclusive dimension sweep, written `LO..HI`.
    #[arg(long, default_value = "2..5")]
    dims: String,
    /// Trials per entry and dimension.
    #[arg(long, default_value_t = 25)]
    trials: usize,
    /// Base seed; falls back to RANKLAB_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Force one radicand on every entry instead of each entry's own field.
    #[arg(long)]
    field: Option<u64>,
    /// Powers swept by k-parametrized entries.
    #[arg(long = "k-sweep", value_delimiter = ',', default_value = "1,2,3")]
    k_sweep: Vec<u32>,
    /// Evaluate annotated entries in their as-printed readings and report
    /// both verdicts instead of running the suite.
    #[arg(long, conflicts_with_all = ["entries", "field", "k_sweep", "trials", "dims"])]
    audit: bool,
    /// Write the document here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Comma-separated family names (default: all eleven).
    #[arg(long, value_delimiter = ',')]
    family: Vec<String>,
    /// Inclusive dimension sweep, written `LO..HI`.
    #[arg(long, default_value = "2..4")]
    dims: String,
    /// Sampled draws per certification.
    #[arg(long, default_value_t = 16)]
    trials: usize,
    /// Random instances per family, lambda regime, and dimension.
    #[arg(long, default_value_t = 8)]
    instances: usize,
    /// Whether repeated inverses inside one draw share one parameter draw.
    #[arg(long, value_enum, default_value_t = DrawMode::Shared)]
    mode: DrawMode,
    /// Base seed; falls back to RANKLAB_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Radicand of the working field (default 0, the Gaussian rationals).
    #[arg(long)]
    field: Option<u64>,
    /// Write the document here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawMode {
    Shared,
    Independent,
}

#[derive(Args)]
struct GenArgs {
    /// Instance class to generate.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Ambient dimension.
    #[arg(long)]
    m: usize,
    /// Requested ranks, one per sampled matrix (default: random).
    #[arg(long, value_delimiter = ',')]
    ranks: Vec<usize>,
    /// Number of instances to emit.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Which matrix-equation system an equation-system instance satisfies.
    #[arg(long, value_enum)]
    system: Option<System>,
    /// Base seed; falls back to RANKLAB_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Radicand of the working field (default 0, the Gaussian rationals).
    #[arg(long)]
    field: Option<u64>,
    /// Write the stream here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    IdempotentPair,
    IdempotentTriple,
    ProjectorPair,
    IdempotentFamily,
    EquationSystem,
    StarPair,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::IdempotentPair => "idempotent-pair",
            Kind::IdempotentTriple => "idempotent-triple",
            Kind::ProjectorPair => "projector-pair",
            Kind::IdempotentFamily => "idempotent-family",
            Kind::EquationSystem => "equation-system",
            Kind::StarPair => "star-pair",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum System {
    Z1,
    Z8,
    Z11,
}

impl System {
    fn name(self) -> &'static str {
        match self {
            System::Z1 => "z1",
            System::Z8 => "z8",
            System::Z11 => "z11",
        }
    }
}

#[derive(Args)]
struct ReportArgs {
    /// Document to validate.
    path: PathBuf,
    /// Schema to validate against (default: detect from the document shape).
    #[arg(long, value_enum, default_value_t = SchemaKind::Auto)]
    schema: SchemaKind,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemaKind {
    Auto,
    Report,
    Certification,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Check(args) => run_check(args),
        Command::Extremal(args) => run_extremal(args),
        Command::Gen(args) => run_gen(args),
        Command::Report(args) => run_report(args),
    };
    match run {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, UsageError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("RANKLAB_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("RANKLAB_SEED must be a 64-bit integer, got `{text}`"))),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(UsageError(format!("RANKLAB_SEED unreadable: {e}"))),
    }
}

fn parse_dims(text: &str) -> Result<(usize, usize), UsageError> {
    let parsed = text
        .split_once("..")
        .and_then(|(lo, hi)| Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?)));
    match parsed {
        Some((lo, hi)) if 1 <= lo && lo <= hi && hi <= MAX_DIM => Ok((lo, hi)),
        _ => Err(UsageError(format!(
            "dims must be `LO..HI` with 1 <= LO <= HI <= {MAX_DIM}, got `{text}`"
        ))),
    }
}

fn parse_field(flag: Option<u64>) -> Result<FieldSpec, UsageError> {
    match flag {
        None => Ok(FieldSpec::RATIONAL),
        Some(d) => Ok(FieldSpec::new(d)?),
    }
}

/// Whole-document write: stdout in one piece, or a temp file renamed into
/// place so a failed run never leaves a partial JSON behind.
fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), UsageError> {
    match out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => {
            let mut tmp = path.clone();
            tmp.as_mut_os_string().push(".tmp");
            fs::write(&tmp, body).map_err(|e| UsageError(format!("writing {}: {e}", tmp.display())))?;
            fs::rename(&tmp, path).map_err(|e| UsageError(format!("renaming into {}: {e}", path.display())))
        }
    }
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("reports serialize");
    text.push('\n');
    text
}

fn run_check(args: CheckArgs) -> Result<ExitCode, UsageError> {
    let seed = resolve_seed(args.seed)?;
    if args.audit {
        let audit = run_audit(seed);
        emit(&args.out, &to_line(&audit))?;
        return Ok(ExitCode::SUCCESS);
    }
    let cfg = SuiteConfig {
        entry_ids: (!args.entries.is_empty()).then_some(args.entries),
        dims: parse_dims(&args.dims)?,
        trials: args.trials,
        seed,
        field: args.field,
        k_values: args.k_sweep,
    };
    let report = run_suite(&cfg)?;
    let failed = report.total_failures() > 0;
    emit(&args.out, &to_line(&report))?;
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run_extremal(args: ExtremalArgs) -> Result<ExitCode, UsageError> {
    let seed = resolve_seed(args.seed)?;
    let (lo, hi) = parse_dims(&args.dims)?;
    if args.trials == 0 || args.instances == 0 {
        return Err(UsageError("trials and instances must be at least 1".into()));
    }
    let families: Vec<Family> = if args.family.is_empty() {
        Family::all().to_vec()
    } else {
        args.family
            .iter()
            .map(|name| {
                Family::parse(&name.to_lowercase())
                    .ok_or_else(|| UsageError(format!("unknown family `{name}`")))
            })
            .collect::<Result<_, _>>()?
    };
    let field = parse_field(args.field)?;
    let mode = match args.mode {
        DrawMode::Shared => CertMode::Shared,
        DrawMode::Independent => CertMode::Independent,
    };

    let root = SeedPath::root(seed).child("extremal");
    let mut records = Vec::new();
    let mut violations = 0usize;
    let mut max_anomalies = 0usize;
    for family in families {
        let family_path = root.child(family.name());
        for (regime, &(ln, ld)) in family.lambda_regimes().iter().enumerate() {
            let lambda = ExactScalar::from_rat(rat(ln, ld), field);
            for dim in lo..=hi {
                for instance in 0..args.instances {
                    let path = family_path
                        .child_index(regime as u64)
                        .child_index(dim as u64)
                        .child_index(instance as u64);
                    let mut rng = path.child("instance").rng();
                    let pencil = generate(family, dim, field, &mut rng);
                    let cert = certify(&pencil, &lambda, args.trials, mode, &path.child("draws"));
                    if cert.violation.is_some() {
                        violations += 1;
                    }
                    if !cert.max_attained {
                        max_anomalies += 1;
                    }
                    records.push(CertRecord {
                        family: family.name().to_string(),
                        lambda: lambda.to_string(),
                        dim,
                        instance,
                        bounds: BoundsReport { max: cert.bounds.max, min: cert.bounds.min },
                        observed: BoundsReport { max: cert.observed.max, min: cert.observed.min },
                        max_attained: cert.max_attained,
                        min_attained: cert.min_attained,
                        draws: cert.draws,
                        seed_path: path.key(),
                        violation: cert.violation,
                    });
                }
            }
        }
    }
    let doc = CertificationReport {
        meta: Meta {
            seed,
            dims: [lo, hi],
            trials: args.trials,
            field: field.radicand().to_string(),
            k_values: vec![],
        },
        records,
        violations,
        max_anomalies,
    };
    emit(&args.out, &to_line(&doc))?;
    Ok(if violations > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

/// One generated instance, with its in-band verification verdict.
#[derive(Serialize)]
struct InstanceLine {
    index: usize,
    kind: &'static str,
    m: usize,
    ranks: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    system: Option<&'static str>,
    matrices: Vec<serde_json::Value>,
    verified: bool,
}

fn run_gen(args: GenArgs) -> Result<ExitCode, UsageError> {
    let seed = resolve_seed(args.seed)?;
    let field = parse_field(args.field)?;
    if args.m == 0 {
        return Err(UsageError("m must be at least 1".into()));
    }
    if args.count == 0 {
        return Err(UsageError("count must be at least 1".into()));
    }
    if let Some(bad) = args.ranks.iter().find(|&&r| r > args.m) {
        return Err(UsageError(format!("rank {bad} exceeds m = {}", args.m)));
    }
    let matrices_per_instance = match args.kind {
        Kind::IdempotentPair | Kind::ProjectorPair => 2,
        Kind::IdempotentTriple => 3,
        Kind::StarPair => 1,
        Kind::IdempotentFamily => {
            if args.ranks.len() < 2 {
                return Err(UsageError(
                    "idempotent-family needs --ranks with at least two entries".into(),
                ));
            }
            args.ranks.len()
        }
        Kind::EquationSystem => match args.system {
            None => {
                return Err(UsageError("equation-system needs --system z1|z8|z11".into()));
            }
            Some(System::Z1) => 1,
            Some(System::Z8) | Some(System::Z11) => 2,
        },
    };
    if args.system.is_some() && args.kind != Kind::EquationSystem {
        return Err(UsageError("--system only applies to --kind equation-system".into()));
    }
    if !args.ranks.is_empty() && args.ranks.len() != matrices_per_instance {
        return Err(UsageError(format!(
            "{} needs {} requested ranks, got {}",
            args.kind.name(),
            matrices_per_instance,
            args.ranks.len()
        )));
    }

    let root = SeedPath::root(seed).child("gen");
    let mut body = String::new();
    for index in 0..args.count {
        let mut rng = root.child_index(index as u64).rng();
        let ranks: Vec<usize> = if args.ranks.is_empty() {
            use rand::Rng;
            (0..matrices_per_instance).map(|_| rng.gen_range(0..=args.m)).collect()
        } else {
            args.ranks.clone()
        };
        let (matrices, checked) = build_instance(&args, field, &ranks, &mut rng)?;
        if !checked {
            eprintln!("error: instance {index} failed its in-band verification");
            return Ok(ExitCode::from(1));
        }
        let line = InstanceLine {
            index,
            kind: args.kind.name(),
            m: args.m,
            ranks,
            system: args.system.map(System::name),
            matrices: matrices.iter().map(Matrix::to_json).collect(),
            verified: true,
        };
        body.push_str(&to_line(&line));
    }
    emit(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn build_instance(
    args: &GenArgs,
    field: FieldSpec,
    ranks: &[usize],
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Result<(Vec<Matrix>, bool), UsageError> {
    let m = args.m;
    Ok(match args.kind {
        Kind::IdempotentPair | Kind::IdempotentTriple | Kind::IdempotentFamily => {
            let mats: Vec<Matrix> =
                ranks.iter().map(|&r| random_idempotent(m, r, field, rng)).collect();
            let ok = mats
                .iter()
                .zip(ranks)
                .all(|(a, &r)| a.is_idempotent() && a.rank() == r);
            (mats, ok)
        }
        Kind::ProjectorPair => {
            let mats: Vec<Matrix> =
                ranks.iter().map(|&r| random_projector(m, r, field, rng)).collect();
            let ok = mats
                .iter()
                .zip(ranks)
                .all(|(p, &r)| p.is_idempotent() && p.is_hermitian() && p.rank() == r);
            (mats, ok)
        }
        Kind::StarPair => {
            let a = random_idempotent(m, ranks[0], field, rng);
            let star = a.conj_transpose();
            let ok = a.is_idempotent() && star.is_idempotent() && a.rank() == ranks[0];
            (vec![a, star], ok)
        }
        Kind::EquationSystem => {
            let system = args.system.expect("checked above");
            match system {
                System::Z1 => {
                    let m_mat = random_idempotent(m, ranks[0], field, rng);
                    let (x, y) = sample_fixed_point_pair(&m_mat, rng)?;
                    let ok = m_mat.mul(&x).unwrap() == x
                        && y.mul(&m_mat).unwrap() == y
                        && m_mat.mul(&y).unwrap() == x.mul(&m_mat).unwrap();
                    (vec![m_mat, x, y], ok)
                }
                System::Z8 => {
                    let a = random_idempotent(m, ranks[0], field, rng);
                    let b = random_idempotent(m, ranks[1], field, rng);
                    let (x, y) = sample_intertwining_pair(&a, &b, rng)?;
                    let ok = a.mul(&x).unwrap() == x
                        && y.mul(&b).unwrap() == y
                        && a.mul(&y).unwrap() == x.mul(&b).unwrap();
                    (vec![a, b, x, y], ok)
                }
                System::Z11 => {
                    let a = random_idempotent(m, ranks[0], field, rng);
                    let b = random_idempotent(m, ranks[1], field, rng);
                    let (x, y) = sample_range_chain_pair(&a, &b, rng);
                    let ok = a.mul(&x).unwrap() == x
                        && b.mul(&y).unwrap() == y
                        && a.mul(&y).unwrap().range_contained_in(&x).unwrap()
                        && b.mul(&x).unwrap().range_contained_in(&y).unwrap();
                    (vec![a, b, x, y], ok)
                }
            }
        }
    })
}

fn run_report(args: ReportArgs) -> Result<ExitCode, UsageError> {
    let text = fs::read_to_string(&args.path)
        .map_err(|e| UsageError(format!("reading {}: {e}", args.path.display())))?;

    #[derive(Serialize)]
    struct Verdict {
        valid: bool,
        schema: Option<&'static str>,
        error: Option<String>,
    }
    let verdict = |valid, schema, error| {
        print!("{}", to_line(&Verdict { valid, schema, error }));
        Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
    };

    let document: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return verdict(false, None, Some(format!("not JSON: {e}"))),
    };
    let detected = match args.schema {
        SchemaKind::Report => Some("report"),
        SchemaKind::Certification => Some("certification"),
        SchemaKind::Auto => match document.as_object() {
            Some(map) if map.contains_key("entries") => Some("report"),
            Some(map) if map.contains_key("records") => Some("certification"),
            _ => None,
        },
    };
    let Some(kind) = detected else {
        return verdict(false, None, Some("document matches neither published shape".into()));
    };
    let schema_text = if kind == "report" { REPORT_SCHEMA } else { CERTIFICATION_SCHEMA };
    let schema: serde_json::Value = serde_json::from_str(schema_text).expect("shipped schema parses");
    match validate_against_schema(&document, &schema) {
        Ok(()) => verdict(true, Some(if kind == "report" { "report" } else { "certification" }), None),
        Err(e) => verdict(false, Some(if kind == "report" { "report" } else { "certification" }), Some(e)),
    }
}
