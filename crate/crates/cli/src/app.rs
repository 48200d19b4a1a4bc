//! Argument handling and report rendering for the `tangleuniv` binary.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tangle_invariant::{bead_invariant, knot_tangle, InvariantError};
use tangle_model::{to_rotational, CrossingListDiagram, Tangle, TangleError};
use tangle_rep::{rt_corpus, RepError, Representation, RtContext, RtReport};
use tangle_xc::{check_xc_axioms, ribbon_report, AxiomReport, XCStructure, XcError};
use thiserror::Error;

use crate::fuzz::{run_fuzz, FuzzError, FuzzReport};
use crate::parse::{parse_braid_word, parse_tangle, ParseError};
use crate::source::{load_algebra, read_text, SourceError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_AXIOM: i32 = 3;

/// Overrides every `--seed` flag when set.
pub const SEED_ENV: &str = "TANGLEUNIV_SEED";

#[derive(Parser, Debug)]
#[command(name = "tangleuniv", version, about = "Universal invariants of rotational tangle diagrams")]
struct Cli {
    /// Machine-readable output (every document carries "format": 1).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the XC axioms (and ribbon identities when Hopf data is present).
    CheckAxioms {
        /// Builtin such as `sweedler:tr1=2`, or a JSON XC-spec path.
        algebra: String,
    },
    /// Evaluate the universal invariant of a tangle or knot.
    Invariant {
        #[arg(long)]
        algebra: String,
        /// Tangle text, `@file`, a file path or `-` for stdin.
        #[arg(long, conflicts_with_all = ["knot", "fuzz"])]
        tangle: Option<String>,
        /// Braid word whose closure (one strand left open) is evaluated, e.g. `s1 s1 s1`.
        #[arg(long, conflicts_with = "fuzz")]
        knot: Option<String>,
        /// Run a move-invariance campaign of this many tangles instead.
        #[arg(long)]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare RT_W(T) with the invariant over End(W).
    RtCheck {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        rep: RepKind,
        #[arg(long, conflicts_with = "corpus")]
        tangle: Option<String>,
        /// Number of random tangles to check.
        #[arg(long)]
        corpus: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Move-invariance campaign.
    Fuzz {
        #[arg(long)]
        algebra: String,
        /// Number of random tangles.
        #[arg(short = 'n', long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Crossing-list JSON to a rotational diagram.
    Convert {
        /// JSON text, `@file`, a file path or `-`.
        input: String,
    },
    /// Syntax-check a tangle and print its normal form.
    Parse {
        /// Tangle text, `@file`, a file path or `-`.
        tangle: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RepKind {
    /// Left multiplication on the algebra itself.
    Regular,
    /// Identity action of a matrix algebra on its column space.
    Identity,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Xc(#[from] XcError),
    #[error(transparent)]
    Fuzz(#[from] FuzzError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Fuzz(FuzzError::Axiom(_)) => EXIT_AXIOM,
            _ => EXIT_INPUT,
        }
    }
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(EXIT_PASS, text)
            };
        }
    };
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    let json = cli.json;
    match cli.command {
        Command::CheckAxioms { algebra } => check_axioms(&algebra, json),
        Command::Invariant { algebra, tangle, knot, fuzz, seed: s } => {
            let x = load_algebra(&algebra)?;
            if let Some(n) = fuzz {
                return fuzz_out(run_fuzz(&x, &algebra, seed(s)?, n)?, json);
            }
            let t = match (tangle, knot) {
                (Some(t), None) => parse_tangle(&read_text(&t)?)?,
                (None, Some(k)) => {
                    let word = parse_braid_word(&k)?;
                    let strands = word.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1);
                    knot_tangle(strands, &word)?
                }
                _ => return Err(CliError::Usage("give one of --tangle, --knot or --fuzz".into())),
            };
            invariant(&x, &t, json)
        }
        Command::RtCheck { algebra, rep, tangle, corpus, seed: s } => {
            let x = load_algebra(&algebra)?;
            let alg = x.algebra_arc().clone();
            let rho = match rep {
                RepKind::Regular => Representation::regular(alg),
                RepKind::Identity => Representation::matrix_units(alg)?,
            };
            let reports = match (tangle, corpus) {
                (Some(t), None) => {
                    let t = parse_tangle(&read_text(&t)?)?;
                    vec![RtContext::new(&x, &rho)?.check(&t)?]
                }
                (None, Some(n)) => rt_corpus(&x, &rho, seed(s)?, n)?,
                _ => return Err(CliError::Usage("give one of --tangle or --corpus".into())),
            };
            Ok(rt_out(&reports, json))
        }
        Command::Fuzz { algebra, count, seed: s } => {
            let x = load_algebra(&algebra)?;
            fuzz_out(run_fuzz(&x, &algebra, seed(s)?, count)?, json)
        }
        Command::Convert { input } => {
            let d = CrossingListDiagram::from_json(&read_text(&input)?)?;
            let t = to_rotational(&d)?;
            Ok(Outcome::ok(EXIT_PASS, tangle_out(&t, json)))
        }
        Command::Parse { tangle } => {
            let t = parse_tangle(&read_text(&tangle)?)?;
            Ok(Outcome::ok(EXIT_PASS, tangle_out(&t, json)))
        }
    }
}

fn table_json(r: &AxiomReport) -> Vec<serde_json::Value> {
    r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect()
}

fn check_axioms(arg: &str, json: bool) -> Result<Outcome, CliError> {
    let x = load_algebra(arg)?;
    let xc = check_xc_axioms(&x);
    let ribbon = match x.hopf() {
        Some(h) => Some(ribbon_report(h, x.r(), x.kappa())?.report),
        None => None,
    };
    let passed = xc.passed() && ribbon.as_ref().is_none_or(AxiomReport::passed);
    let code = if passed { EXIT_PASS } else { EXIT_AXIOM };
    let stdout = if json {
        let doc = json!({
            "format": 1,
            "algebra": arg,
            "dim": x.dim(),
            "xc": table_json(&xc),
            "ribbon": ribbon.as_ref().map(table_json),
            "passed": passed,
        });
        format!("{doc:#}\n")
    } else {
        let mut s = format!("algebra {arg} (dim {})\n{xc}", x.dim());
        if let Some(r) = &ribbon {
            s += &r.to_string();
        }
        s + if passed { "PASS\n" } else { "FAIL\n" }
    };
    Ok(Outcome::ok(code, stdout))
}

fn invariant(x: &XCStructure, t: &Tangle, json: bool) -> Result<Outcome, CliError> {
    let mut stderr = String::new();
    if let Some(c) = check_xc_axioms(x).first_failure() {
        stderr = format!("warning: structure fails ({}); the result need not be an invariant\n", c.name);
    }
    let z = bead_invariant(t, x)?;
    let stdout = if json {
        z.to_json() + "\n"
    } else {
        format!("{t}\n{}\n", z.display_with(x.algebra().labels()))
    };
    Ok(Outcome { code: EXIT_PASS, stdout, stderr })
}

fn rt_out(reports: &[RtReport], json: bool) -> Outcome {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let all = passed == reports.len();
    let stdout = if json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| json!({ "tangle": r.tangle, "rt": r.digest1, "end": r.digest2, "prism": r.prism, "passed": r.passed() }))
            .collect();
        format!("{:#}\n", json!({ "format": 1, "checks": rows, "passed": all }))
    } else {
        let mut s = String::new();
        for r in reports {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            s += &format!("{}\n  rt   {}\n  end  {}\n  {verdict}\n", r.tangle, r.digest1, r.digest2);
        }
        s + &format!("{passed}/{} passed\n{}\n", reports.len(), if all { "PASS" } else { "FAIL" })
    };
    Outcome::ok(if all { EXIT_PASS } else { EXIT_PROPERTY }, stdout)
}

fn fuzz_out(report: FuzzReport, json: bool) -> Result<Outcome, CliError> {
    let code = if report.passed() { EXIT_PASS } else { EXIT_PROPERTY };
    let stdout = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_text()
    };
    Ok(Outcome::ok(code, stdout))
}

fn tangle_out(t: &Tangle, json: bool) -> String {
    if json {
        let doc = json!({
            "format": 1,
            "tangle": t.to_string(),
            "width": t.width(),
            "closed": t.closed(),
            "components": t.component_count(),
            "admissible": t.is_admissible(),
        });
        format!("{doc:#}\n")
    } else {
        format!("{t}\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn help_exits_zero() {
        let out = run(["tangleuniv", "--help"]);
        assert_eq!(out.code, EXIT_PASS);
        assert!(out.stdout.contains("check-axioms"));
    }

    #[test]
    fn unknown_flags_are_input_errors() {
        let out = run(["tangleuniv", "parse", "--frobnicate", "x"]);
        assert_eq!(out.code, EXIT_INPUT);
    }
}
