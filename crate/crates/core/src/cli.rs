//! Command-line front end.
//!
//! Exit codes: 0 success or `possibly_representable`; 1 verification failure,
//! `not_representable` or an unqualified reconstruction; 2 `bound_violated`,
//! bad flags, unreadable input or an exceeded budget.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;
use serde_json::json;

use crate::constructions::{
    construct_d2_squares, construct_ext_field, construct_prime_field, construct_unverified, prime_field_plan,
    smallest_d2_prime, smallest_ext_params, BiUniformParams, Preference, Representation,
};
use crate::fields::next_prime;
use crate::matroid::{
    check_feasibility, dual_representation, verify_representation, DualError, Feasibility, FeasibilityVerdict, Verdict,
    VerifyError, VerifyOptions, Witness,
};
use crate::sharing::{self, ShareBundle, SharingError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Prime-field plans above this many bits are reported without searching for `p`.
const PRIME_PLAN_MAX_BITS: u64 = 2048;

#[derive(Debug, Parser)]
#[command(name = "biuniform", version, about = "Representations of bi-uniform matroids over finite fields")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a representation matrix.
    Construct(ConstructArgs),
    /// Check a representation exhaustively.
    Verify(VerifyArgs),
    /// Compute the dual representation.
    Dual(DualArgs),
    /// Field-size obstructions and the smallest fields each construction allows.
    Advise(AdviseArgs),
    /// Split a secret using one column as the dealer.
    Share(ShareArgs),
    /// Recover a secret from a share bundle.
    Reconstruct(ReconstructArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub n1: usize,
    #[arg(long)]
    pub n2: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Maximum number of constrained subsets to check.
    #[arg(long, default_value_t = VerifyOptions::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Check every subset regardless of the budget.
    #[arg(long)]
    pub force: bool,
}

impl BudgetArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions { budget: self.budget, force: self.force }
    }
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Representation JSON file.
    #[arg(value_name = "FILE")]
    pub file: Option<PathBuf>,
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

impl InputArgs {
    fn path(&self) -> &Path {
        self.file.as_deref().or(self.input.as_deref()).expect("clap enforces one input")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    D2,
    Ext,
    Prime,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PreferenceArg {
    #[value(name = "smallest_field")]
    SmallestField,
    #[value(name = "prime_field")]
    PrimeField,
    #[value(name = "ext_field")]
    ExtField,
}

impl From<PreferenceArg> for Preference {
    fn from(p: PreferenceArg) -> Self {
        match p {
            PreferenceArg::SmallestField => Preference::SmallestField,
            PreferenceArg::PrimeField => Preference::PrimeField,
            PreferenceArg::ExtField => Preference::ExtField,
        }
    }
}

fn parse_biguint(text: &str) -> Result<BigUint, String> {
    text.parse::<BigUint>().map_err(|e| format!("expected a non-negative decimal integer: {e}"))
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    /// Field size for `d2` (defaults to the smallest admissible prime).
    #[arg(long, value_parser = parse_biguint)]
    pub q: Option<BigUint>,
    /// Base prime for `ext`.
    #[arg(long, value_parser = parse_biguint)]
    pub q0: Option<BigUint>,
    /// Extension degree for `ext`.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, value_enum, default_value = "smallest_field")]
    pub preference: PreferenceArg,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DualArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct AdviseArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Field size to test against the obstructions.
    #[arg(long, value_parser = parse_biguint)]
    pub q: Option<BigUint>,
}

#[derive(Debug, Clone, Args)]
pub struct ShareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Column holding the secret.
    #[arg(long)]
    pub dealer: usize,
    /// Secret, a residue or comma-separated coefficients.
    #[arg(long)]
    pub secret: String,
    /// RNG seed; fresh entropy when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Accept a representation not marked verified.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ReconstructArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Share bundle JSON.
    #[arg(long)]
    pub shares: PathBuf,
    /// Use only these share holders.
    #[arg(long, value_delimiter = ',')]
    pub holders: Option<Vec<usize>>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure { code: EXIT_FAILURE, message: message.into() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let hint = matches!(e, VerifyError::BudgetExceeded { .. }).then_some(" (raise --budget or pass --force)");
        Failure::usage(format!("{e}{}", hint.unwrap_or("")))
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            code
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Construct(a) => construct(a, cli.json, out, err),
        Command::Verify(a) => verify(a, cli.json, out),
        Command::Dual(a) => dual(a, cli.json, out, err),
        Command::Advise(a) => advise(a, cli.json, out),
        Command::Share(a) => share(a, cli.json, out),
        Command::Reconstruct(a) => reconstruct(a, cli.json, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    emit(out, &serde_json::to_string_pretty(value).expect("serializable"))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, format!("{text}\n")).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_representation(path: &Path) -> Result<Representation, Failure> {
    Representation::from_json(&read_file(path)?)
        .map_err(|e| Failure::usage(format!("{} is not a valid representation: {e}", path.display())))
}

fn params_from(args: &ParamArgs) -> Result<BiUniformParams, Failure> {
    BiUniformParams::new(args.k, args.m, args.l, args.n1, args.n2).map_err(|e| Failure::usage(e.to_string()))
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::DependentSubset { columns, e1_count, e2_count } => {
            format!("columns {columns:?} ({e1_count} from E1, {e2_count} from E2) are dependent")
        }
        Witness::SubRank { class, columns, expected, actual } => {
            format!("class E{class} (columns {columns:?}) has rank {actual}, expected {expected}")
        }
        Witness::OracleMismatch { columns, independent, expected_independent } => format!(
            "columns {columns:?} are {} but should be {}",
            if *independent { "independent" } else { "dependent" },
            if *expected_independent { "independent" } else { "dependent" },
        ),
    }
}

fn describe_verdict(v: &Verdict) -> String {
    match &v.witness {
        None => format!("ok: {} constrained subsets checked", v.checked),
        Some(w) => format!("FAIL at check {}: {}", v.checked, describe_witness(w)),
    }
}

fn describe_rep(rep: &Representation) -> String {
    let p = rep.params();
    format!(
        "{} over {}, {}x{} matrix for k={} m={} l={} n1={} n2={}",
        rep.provenance().method.as_str(),
        rep.field(),
        rep.matrix().rows(),
        rep.matrix().cols(),
        p.k(),
        p.m(),
        p.l(),
        p.n1(),
        p.n2()
    )
}

fn build(args: &ConstructArgs, params: &BiUniformParams) -> Result<Representation, Failure> {
    let built = match args.method {
        MethodArg::D2 => {
            let q = args.q.clone().unwrap_or_else(|| smallest_d2_prime(params.max_class()));
            construct_d2_squares(params, &q)
        }
        MethodArg::Ext => {
            let (q0, s) = smallest_ext_params(params);
            construct_ext_field(params, args.q0.as_ref().unwrap_or(&q0), args.s.unwrap_or(s))
        }
        MethodArg::Prime => construct_prime_field(params).map(|(_, rep)| rep),
        MethodArg::Auto => construct_unverified(params, args.preference.into()),
    };
    built.map_err(|e| Failure::usage(e.to_string()))
}

fn construct(args: &ConstructArgs, json_mode: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let params = params_from(&args.params)?;
    let mut rep = build(args, &params)?;
    let count = params.constrained_subset_count();
    let options = args.budget.options();
    let verdict = if count <= options.budget || options.force {
        let verdict = verify_representation(&rep, &options)?;
        rep.set_verified(verdict.ok);
        Some(verdict)
    } else {
        rep.provenance_mut()
            .notes
            .push(format!("not exhaustively verified: {count} subsets exceed budget {}", options.budget));
        let _ = writeln!(err, "warning: {count} subsets exceed budget {}; output not verified", options.budget);
        None
    };
    let code = match &verdict {
        Some(v) if !v.ok => EXIT_FAILURE,
        _ => EXIT_OK,
    };
    if let Some(v) = verdict.as_ref().filter(|v| !v.ok) {
        let _ = writeln!(err, "error: constructed matrix failed verification: {}", describe_verdict(v));
    }
    match &args.out {
        None => emit(out, &rep.to_json())?,
        Some(path) => {
            write_file(path, &rep.to_json())?;
            if json_mode {
                emit_json(out, &json!({ "out": path.display().to_string(), "verified": rep.is_verified(), "verdict": verdict }))?;
            } else {
                let status = match &verdict {
                    Some(v) => describe_verdict(v),
                    None => "not verified".to_string(),
                };
                emit(out, &format!("wrote {}: {}\n{status}", path.display(), describe_rep(&rep)))?;
            }
        }
    }
    Ok(code)
}

fn verify(args: &VerifyArgs, json_mode: bool, out: &mut dyn Write) -> Outcome {
    let rep = load_representation(args.input.path())?;
    let verdict = verify_representation(&rep, &args.budget.options())?;
    if json_mode {
        emit_json(out, &verdict)?;
    } else {
        emit(out, &describe_verdict(&verdict))?;
    }
    Ok(if verdict.ok { EXIT_OK } else { EXIT_FAILURE })
}

fn dual(args: &DualArgs, json_mode: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let rep = load_representation(args.input.path())?;
    let options = crate::matroid::DualOptions { skip_verification: false, verify: args.budget.options() };
    let mut dual = match dual_representation(&rep, &options) {
        Ok(d) => d,
        Err(DualError::InvalidInput(v)) => {
            return Err(Failure::failed(format!("input is not a valid representation: {}", describe_verdict(&v))))
        }
        Err(DualError::Verify(e)) => return Err(e.into()),
        Err(e) => return Err(Failure::usage(e.to_string())),
    };
    let verdict = verify_representation(&dual, &options.verify)?;
    dual.set_verified(verdict.ok);
    if !verdict.ok {
        let _ = writeln!(err, "error: dual failed verification: {}", describe_verdict(&verdict));
    }
    match &args.out {
        None => emit(out, &dual.to_json())?,
        Some(path) => {
            write_file(path, &dual.to_json())?;
            if json_mode {
                emit_json(out, &json!({ "out": path.display().to_string(), "verdict": verdict }))?;
            } else {
                emit(out, &format!("wrote {}: {}\n{}", path.display(), describe_rep(&dual), describe_verdict(&verdict)))?;
            }
        }
    }
    Ok(if verdict.ok { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct Advice {
    params: BiUniformParams,
    d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    feasibility: Option<Feasibility>,
    suggestions: serde_json::Map<String, serde_json::Value>,
}

fn suggestions(params: &BiUniformParams) -> Result<serde_json::Map<String, serde_json::Value>, Failure> {
    let mut map = serde_json::Map::new();
    if params.is_uniform() {
        let q = crate::fields::prime_at_least(&BigUint::from(params.n().max(2)));
        map.insert("uniform".into(), json!({ "q": q.to_string() }));
        return Ok(map);
    }
    let d = params.d();
    if d <= 1 {
        let p = next_prime(&BigUint::from(params.max_class() + 1));
        map.insert("evalcode".into(), json!({ "p": p.to_string(), "beta": "1" }));
        return Ok(map);
    }
    if d == 2 {
        map.insert("d2".into(), json!({ "q": smallest_d2_prime(params.max_class()).to_string() }));
    }
    let (q0, s) = smallest_ext_params(params);
    let order = num_traits::pow(q0.clone(), s);
    map.insert("ext".into(), json!({ "q0": q0.to_string(), "s": s, "order": order.to_string() }));
    let base = params.max_class().div_ceil(2) + 1;
    let h = params.m().max(params.l()) * d * (1 + d * (d - 1) / 2);
    let bits = (BigUint::from(base).bits()) * h as u64;
    if bits <= PRIME_PLAN_MAX_BITS {
        let plan = prime_field_plan(params).map_err(|e| Failure::usage(e.to_string()))?;
        map.insert("prime".into(), serde_json::to_value(plan).expect("serializable"));
    } else {
        map.insert("prime".into(), json!({ "K": base.to_string(), "h": h, "p": null, "note": format!("K^h has about {bits} bits; p not searched") }));
    }
    Ok(map)
}

fn advise(args: &AdviseArgs, json_mode: bool, out: &mut dyn Write) -> Outcome {
    let params = params_from(&args.params)?;
    let feasibility = args.q.as_ref().map(|q| check_feasibility(&params, q));
    let advice = Advice {
        params,
        d: params.d(),
        q: args.q.as_ref().map(|q| q.to_string()),
        feasibility,
        suggestions: suggestions(&params)?,
    };
    if json_mode {
        emit_json(out, &advice)?;
    } else {
        let mut text = format!(
            "params: k={} m={} l={} n1={} n2={} (d={})",
            params.k(),
            params.m(),
            params.l(),
            params.n1(),
            params.n2(),
            params.d()
        );
        if let (Some(q), Some(f)) = (&advice.q, &advice.feasibility) {
            let verdict = serde_json::to_value(f.verdict).expect("serializable");
            text.push_str(&format!("\nfeasibility over F_{q}: {}", verdict.as_str().unwrap_or_default()));
            for r in &f.reasons {
                text.push_str(&format!("\n  - {r}"));
            }
        }
        text.push_str("\nsmallest fields:");
        for (name, value) in &advice.suggestions {
            let fields: Vec<String> = value
                .as_object()
                .into_iter()
                .flatten()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| match v {
                    serde_json::Value::String(s) => format!("{k}={s}"),
                    serde_json::Value::Array(_) => format!("{k}=[..]"),
                    other => format!("{k}={other}"),
                })
                .collect();
            text.push_str(&format!("\n  {name}: {}", fields.join(" ")));
        }
        emit(out, &text)?;
    }
    Ok(match advice.feasibility.map(|f| f.verdict) {
        Some(FeasibilityVerdict::NotRepresentable) => EXIT_FAILURE,
        Some(FeasibilityVerdict::BoundViolated) => EXIT_USAGE,
        _ => EXIT_OK,
    })
}

fn sharing_failure(e: SharingError) -> Failure {
    match e {
        SharingError::NotQualified | SharingError::ZeroDealerColumn(_) | SharingError::UnverifiedRepresentation => {
            Failure::failed(e.to_string())
        }
        _ => Failure::usage(e.to_string()),
    }
}

fn share(args: &ShareArgs, json_mode: bool, out: &mut dyn Write) -> Outcome {
    let rep = load_representation(args.input.path())?;
    let secret = rep.field().parse_element(&args.secret).map_err(|e| Failure::usage(format!("--secret: {e}")))?;
    let mut rng = match args.seed {
        Some(seed) => ChaCha20Rng::seed_from_u64(seed),
        None => ChaCha20Rng::from_entropy(),
    };
    let bundle = if args.force {
        sharing::split_unverified(&rep, args.dealer, &secret, &mut rng)
    } else {
        sharing::split(&rep, args.dealer, &secret, &mut rng)
    }
    .map_err(sharing_failure)?;
    let text = serde_json::to_string_pretty(&bundle).expect("serializable");
    match &args.out {
        None => emit(out, &text)?,
        Some(path) => {
            write_file(path, &text)?;
            if json_mode {
                emit_json(out, &json!({ "out": path.display().to_string(), "shares": bundle.shares.len() }))?;
            } else {
                emit(
                    out,
                    &format!("wrote {} shares for dealer column {} to {}", bundle.shares.len(), bundle.dealer_col, path.display()),
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn reconstruct(args: &ReconstructArgs, json_mode: bool, out: &mut dyn Write) -> Outcome {
    let rep = load_representation(args.input.path())?;
    let bundle: ShareBundle = serde_json::from_str(&read_file(&args.shares)?)
        .map_err(|e| Failure::usage(format!("{} is not a valid share bundle: {e}", args.shares.display())))?;
    let bundle = match &args.holders {
        Some(h) => bundle.restrict(h),
        None => bundle,
    };
    let secret = sharing::reconstruct(&rep, bundle.dealer_col, &bundle).map_err(sharing_failure)?;
    if json_mode {
        emit_json(out, &json!({ "secret": secret }))?;
    } else {
        emit(out, &format!("secret: {secret}"))?;
    }
    Ok(EXIT_OK)
}
