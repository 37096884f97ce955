//! Command-line front end. Every command assembles its whole output before
//! writing it, and the exit code encodes the outcome:
//! 0 success, 1 failed verification, 2 bad input, 3 guard exceeded,
//! 4 E8 requested without `--allow-conjectural`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alcove::{minuscule_path, parse_labels, reduced_path, AlcovePath};
use crate::chevalley::verify::{
    additivity_sweep, invariance_sweep, minuscule_sweep, sample_elements, weights_in_box,
    SweepReport,
};
use crate::chevalley::{conjectural_gate, inverse_chevalley, minuscule_weights, ExpansionRequest};
use crate::error::{Error, Result};
use crate::golden;
use crate::kexpr::ExpansionDocument;
use crate::lattice::{CartanType, Family, RootSystem, Weight};
use crate::qbg::{verify_qbg_lemmas, QuantumBruhatGraph};
use crate::walks::DEFAULT_MAX_WALKS;
use crate::weyl::{WeylElement, DEFAULT_GROUP_GUARD};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_CONJECTURAL: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "kchevalley",
    version,
    about = "Inverse K-Chevalley expansions over alcove paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand e^lambda [O_w] into twisted Schubert classes.
    Expand(ExpandArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Recompute the A2 example for lambda = varpi_1 + varpi_2, w = w0.
    ExampleA2(ExampleArgs),
    /// Print the quantum Bruhat graph in Graphviz format.
    QbgDot(QbgArgs),
    /// Describe an alcove path.
    Paths(PathsArgs),
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Family letter: A, D or E.
    #[arg(long = "type")]
    family: Family,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn system(&self) -> Result<RootSystem> {
        Ok(RootSystem::new(CartanType::new(self.family, self.rank)?))
    }
}

#[derive(Debug, Args)]
struct GuardArgs {
    /// Largest number of walks enumerated for one expansion.
    #[arg(long, env = "KCHEV_MAX_WALKS", default_value_t = DEFAULT_MAX_WALKS)]
    max_walks: usize,
    /// Largest Weyl group that may be enumerated.
    #[arg(long, env = "KCHEV_MAX_GROUP", default_value_t = DEFAULT_GROUP_GUARD)]
    max_group: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Args)]
struct ExpandArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Weight in fundamental-weight coordinates, e.g. `1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Reduced word of w, e.g. `1,2,1`, or `e`.
    #[arg(long, default_value = "e")]
    w: String,
    /// `auto`, `minuscule`, or `custom:<tokens>` such as `custom:t,a2,t,a1`.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    path: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Permit E8, where the expansion is not proved.
    #[arg(long)]
    allow_conjectural: bool,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Invariance,
    Additivity,
    Minuscule,
    QbgLemmas,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    #[command(flatten)]
    ty: TypeArgs,
    /// Restrict to one weight (the first factor for `additivity`).
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Second factor for `additivity`.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Restrict to one Weyl group element.
    #[arg(long)]
    w: Option<String>,
    /// Check only this many elements of W, chosen with `--seed`.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Debug, Args)]
struct ExampleArgs {
    #[arg(long, value_enum, default_value_t = Format::Latex)]
    format: Format,
}

#[derive(Debug, Args)]
struct QbgArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long, env = "KCHEV_MAX_GROUP", default_value_t = DEFAULT_GROUP_GUARD)]
    max_group: u128,
}

#[derive(Debug, Args)]
struct PathsArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    path: String,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GroupTooLarge { .. } | Error::WalkGuard { .. } | Error::DecompositionBudget(_) => {
            EXIT_GUARD
        }
        Error::Conjectural(_) => EXIT_CONJECTURAL,
        Error::Internal(_) | Error::Genericity { .. } => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

pub fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight> {
    let coords = text
        .split(',')
        .map(|c| {
            c.trim()
                .replace('\u{2212}', "-")
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight coordinate {c:?} in {text:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    rs.check_dim(&coords)?;
    Ok(Weight(coords))
}

/// Resolves `auto`, `minuscule` or `custom:<tokens>` into a path to `lambda`.
pub fn parse_path_spec(rs: &RootSystem, lambda: &Weight, spec: &str) -> Result<AlcovePath> {
    match spec {
        "auto" => reduced_path(rs, lambda),
        "minuscule" => minuscule_path(rs, lambda),
        _ => match spec.strip_prefix("custom:") {
            Some(tokens) => AlcovePath::new(rs, lambda.clone(), parse_labels(rs, tokens)?),
            None => Err(Error::Parse(format!(
                "path must be auto, minuscule or custom:<tokens>, got {spec:?}"
            ))),
        },
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let (code, stdout) = match dispatch(&cli.command) {
        Ok(result) => result,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let _ = out.write_all(stdout.as_bytes());
    let _ = out.flush();
    code
}

fn dispatch(cmd: &Command) -> Result<(u8, String)> {
    match cmd {
        Command::Expand(a) => expand(a),
        Command::Verify(a) => verify(a),
        Command::ExampleA2(a) => example(a),
        Command::QbgDot(a) => {
            let rs = a.ty.system()?;
            Ok((
                EXIT_OK,
                QuantumBruhatGraph::build(&rs, a.max_group)?.to_dot(&rs),
            ))
        }
        Command::Paths(a) => paths(a),
    }
}

fn expand(a: &ExpandArgs) -> Result<(u8, String)> {
    let rs = a.ty.system()?;
    conjectural_gate(&rs, a.allow_conjectural)?;
    let lambda = parse_weight(&rs, &a.weight)?;
    let w = rs.parse_element(&a.w)?;
    let path = parse_path_spec(&rs, &lambda, &a.path)?;
    let req = ExpansionRequest::new(&rs, &w, &path)
        .allow_conjectural(a.allow_conjectural)
        .max_walks(a.guards.max_walks);
    let e = inverse_chevalley(&req)?;
    let text = match a.format {
        Format::Json => ExpansionDocument {
            cartan_type: rs.cartan_type(),
            conjectural: e.conjectural,
            walks: Some(e.walk_count),
            decorated_walks: Some(e.decorated_count),
            expression: e.expression,
        }
        .to_json(),
        Format::Latex => e.expression.to_latex(),
        Format::Text => {
            let mut s = format!(
                "# e^{} [O_{}] along [{}]: {} terms from {} walks ({} decorated){}\n",
                lambda,
                rs.word_string(&w),
                path.to_tokens(&rs),
                e.expression.len(),
                e.walk_count,
                e.decorated_count,
                if e.conjectural { ", conjectural" } else { "" }
            );
            s.push_str(&e.expression.to_text());
            s
        }
    };
    Ok((EXIT_OK, text))
}

fn group_selection(rs: &RootSystem, a: &VerifyArgs) -> Result<Vec<WeylElement>> {
    match &a.w {
        Some(text) => Ok(vec![rs.parse_element(text)?]),
        None => Ok(sample_elements(
            &rs.enumerate_group(a.guards.max_group)?,
            a.sample,
            a.seed,
        )),
    }
}

fn render_sweep(report: &SweepReport) -> (u8, String) {
    let mut s = format!(
        "{}: {} cases, {} failures\n",
        report.name,
        report.cases,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(s, "  {f}");
    }
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    (code, s)
}

fn verify(a: &VerifyArgs) -> Result<(u8, String)> {
    let rs = a.ty.system()?;
    let weight = a
        .weight
        .as_deref()
        .map(|t| parse_weight(&rs, t))
        .transpose()?;
    let max_walks = a.guards.max_walks;
    match a.suite {
        Suite::QbgLemmas => {
            let reports = verify_qbg_lemmas(&rs, a.guards.max_group)?;
            let mut s = String::new();
            let mut ok = true;
            for r in &reports {
                ok &= r.passed();
                let _ = writeln!(
                    s,
                    "{}: {} triples, {} occurrences, {} violations",
                    r.name,
                    r.checked,
                    r.occurrences,
                    r.violations.len()
                );
                for v in &r.violations {
                    let _ = writeln!(s, "  {v}");
                }
            }
            Ok((if ok { EXIT_OK } else { EXIT_VERIFY }, s))
        }
        Suite::Invariance => {
            let weights = match weight {
                Some(l) => vec![l],
                None => weights_in_box(rs.rank(), 1),
            };
            let ws = group_selection(&rs, a)?;
            Ok(render_sweep(&invariance_sweep(
                &rs, &weights, &ws, max_walks,
            )?))
        }
        Suite::Minuscule => {
            if rs.cartan_type().is_conjectural() {
                return Err(Error::Unsupported(rs.cartan_type().to_string()));
            }
            let lambdas = match weight {
                Some(l) => vec![l],
                None => minuscule_weights(&rs),
            };
            let ws = group_selection(&rs, a)?;
            Ok(render_sweep(&minuscule_sweep(
                &rs, &lambdas, &ws, max_walks,
            )?))
        }
        Suite::Additivity => {
            let fundamentals: Vec<Weight> =
                (1..=rs.rank()).map(|i| rs.fundamental_weight(i)).collect();
            let mu = a.mu.as_deref().map(|t| parse_weight(&rs, t)).transpose()?;
            let firsts = match &weight {
                Some(l) => vec![l.clone()],
                None => fundamentals.clone(),
            };
            let seconds = match mu {
                Some(m) => vec![m],
                None => fundamentals,
            };
            let pairs: Vec<(Weight, Weight)> = firsts
                .iter()
                .flat_map(|l| seconds.iter().map(move |m| (l.clone(), m.clone())))
                .collect();
            let ws = group_selection(&rs, a)?;
            Ok(render_sweep(&additivity_sweep(
                &rs, &pairs, &ws, max_walks,
            )?))
        }
    }
}

fn example(a: &ExampleArgs) -> Result<(u8, String)> {
    let rs = golden::system();
    let report = golden::check(&rs)?;
    let mut s = String::new();
    for line in &report.lines {
        let _ = writeln!(s, "{line}");
    }
    s.push('\n');
    s.push_str(&match a.format {
        Format::Latex => report.expression.to_latex(),
        Format::Text => report.expression.to_text(),
        Format::Json => report.expression.to_json() + "\n",
    });
    if report.passed() {
        s.push_str("\nall values match the reference data\n");
        Ok((EXIT_OK, s))
    } else {
        for m in &report.mismatches {
            let _ = writeln!(s, "MISMATCH {m}");
        }
        Ok((EXIT_VERIFY, s))
    }
}

fn paths(a: &PathsArgs) -> Result<(u8, String)> {
    let rs = a.ty.system()?;
    let lambda = parse_weight(&rs, &a.weight)?;
    let path = parse_path_spec(&rs, &lambda, &a.path)?;
    let mut s = String::new();
    let _ = writeln!(s, "{}", path.display(&rs));
    let _ = writeln!(s, "tokens: {}", path.to_tokens(&rs));
    let _ = writeln!(s, "levels: {:?}", path.levels());
    let _ = writeln!(s, "co-levels: {:?}", path.co_levels());
    let _ = writeln!(
        s,
        "length: {} (reduced: {})",
        path.len(),
        path.is_reduced(&rs)
    );
    let _ = writeln!(s, "Yang-Baxter sites: {:?}", path.yb_sites(&rs));
    Ok((EXIT_OK, s))
}
