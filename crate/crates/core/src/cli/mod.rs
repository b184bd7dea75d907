//! Command-line front end.

pub mod document;
pub mod expr;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{RatFun, Var};
use crate::error::Error;
use crate::families::{
    gen_family1, gen_family2, gen_family3_log, gen_family3_poly, gen_family4, singular_potential, PotentialResult,
};
use crate::gauge::CaseTag;
use crate::spectrum::{compute_spectrum, verify_eigenpair, Interval, CONTINUOUS_NOTE};

use document::{parse_nodes1, parse_nodes2, PotentialDocument};
use expr::{parse_expr, parse_rational};
use render::{latex_document, plot_data, Bindings};

#[derive(Parser, Debug)]
#[command(name = "specpot", about = "Integrable Schrödinger potentials from rational gauge functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3log")]
    ThreeLog,
    #[value(name = "3poly")]
    ThreePoly,
    #[value(name = "4")]
    Four,
    #[value(name = "singular")]
    Singular,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IntervalArg {
    #[value(name = "R")]
    R,
    #[value(name = "R+")]
    RPlus,
    #[value(name = "R-")]
    RMinus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plotdata,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a potential and write its document.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        nodes: Option<String>,
        #[arg(long = "P1")]
        p1: Option<String>,
        #[arg(long = "P2")]
        p2: Option<String>,
        #[arg(long = "F")]
        f: Option<String>,
        #[arg(long)]
        case: Option<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive a stored potential and check every stored identity.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Candidate energies and closed-form eigenfunctions.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        kmax: u32,
        #[arg(long, value_enum, default_value = "R")]
        interval: IntervalArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit JSON, LaTeX or a numeric table.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, allow_hyphen_values = true, default_value = "-4:4")]
        range: String,
        #[arg(long, default_value_t = 81)]
        samples: usize,
        /// Parameter values, e.g. `a=1,b=-2`.
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage<T>(r: crate::Result<T>) -> CliResult<T> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn read_doc(path: &PathBuf) -> CliResult<PotentialDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
    Ok(PotentialDocument::from_json(&text)?)
}

fn write_out(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Math(Error::Invalid(format!("{}: {}", p.display(), e)))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Math(Error::Invalid(e.to_string()))),
    }
}

fn parse_nu(nu: &Option<String>) -> CliResult<Option<crate::algebra::Rational>> {
    nu.as_deref().map(|s| usage(parse_rational(s))).transpose()
}

/// Builds at symbolic `ν`, then substitutes; used when nodes collide at the
/// numeric value before cancellation.
fn at_nu<F>(build: F, nu: Option<crate::algebra::Rational>) -> crate::Result<PotentialResult>
where
    F: Fn(&RatFun) -> crate::Result<PotentialResult>,
{
    match nu {
        None => build(&RatFun::nu()),
        Some(x) => match build(&RatFun::constant(x.clone())) {
            Err(Error::DuplicateNode(_) | Error::SingularParameter(_) | Error::UnsolvableSystem(_)) => {
                build(&RatFun::nu())?.eval_nu(&x)
            }
            other => other,
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: FamilyArg,
    nu: &Option<String>,
    nodes: &Option<String>,
    p1: &Option<String>,
    p2: &Option<String>,
    f: &Option<String>,
    case: Option<u8>,
) -> CliResult<PotentialResult> {
    let nu = parse_nu(nu)?;
    let need = |x: &Option<String>, name: &str| -> CliResult<String> {
        x.clone().ok_or_else(|| Failure::Usage(format!("--{} is required for this family", name)))
    };
    let poly = |s: String| -> CliResult<crate::algebra::MPoly> { usage(parse_expr(&s).and_then(|e| e.to_poly())) };
    Ok(match family {
        FamilyArg::One => {
            let n = usage(parse_nodes1(&need(nodes, "nodes")?))?;
            at_nu(|nu| gen_family1(&n, nu), nu)?
        }
        FamilyArg::Two => {
            let n = usage(parse_nodes2(&need(nodes, "nodes")?))?;
            at_nu(|nu| gen_family2(&n, nu), nu)?
        }
        FamilyArg::ThreeLog => gen_family3_log(&poly(need(p1, "P1")?)?, &poly(need(p2, "P2")?)?)?,
        FamilyArg::ThreePoly => gen_family3_poly(&poly(need(f, "F")?)?)?,
        FamilyArg::Four => gen_family4()?,
        FamilyArg::Singular => {
            let tag = case
                .and_then(CaseTag::from_number)
                .ok_or_else(|| Failure::Usage("--case must be 1, 2, 3 or 4".into()))?;
            at_nu(|nu| singular_potential(tag, nu), nu)?
        }
    })
}

fn parse_bindings(s: &Option<String>) -> CliResult<Bindings> {
    let Some(s) = s else { return Ok(vec![]) };
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| Failure::Usage(format!("expected name=value, got {}", kv)))?;
            let var = Var::from_name(k.trim())
                .filter(|v| *v != Var::Z && *v != Var::E)
                .ok_or_else(|| Failure::Usage(format!("unknown parameter {}", k)))?;
            Ok((var, usage(parse_rational(v.trim()))?))
        })
        .collect()
}

fn parse_range(s: &str) -> CliResult<(f64, f64)> {
    let bad = || Failure::Usage(format!("range must be LO:HI, got {}", s));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Gen { family, nu, nodes, p1, p2, f, case, out: path } => {
            let r = generate(family, &nu, &nodes, &p1, &p2, &f, case)?;
            let doc = PotentialDocument::from_result(&r, &[]);
            write_out(&path, &doc.to_json(), out)
        }
        Command::Verify { input } => {
            let doc = read_doc(&input)?;
            let r = doc.to_result()?;
            for p in doc.eigenpairs()? {
                if !verify_eigenpair(&r.v, &p) {
                    return Err(Failure::Math(Error::Invalid(format!("eigenpair at E0={} fails", p.e0))));
                }
            }
            let _ = writeln!(out, "ok: family {}, V = {}", doc.family, r.v);
            Ok(())
        }
        Command::Spectrum { input, kmax, interval, out: path } => {
            let doc = read_doc(&input)?;
            let r = doc.to_result()?;
            let interval = match interval {
                IntervalArg::R => Interval::R,
                IntervalArg::RPlus => Interval::RPlus,
                IntervalArg::RMinus => Interval::RMinus,
            };
            let rep = compute_spectrum(&r, kmax, interval)?;
            let mut text = String::new();
            if rep.continuous {
                text.push_str(&format!("continuous type: {}\n", CONTINUOUS_NOTE));
            } else {
                text.push_str(&format!("# eigenfunctions square integrable on {}\n", interval));
                text.push_str("E0\tpsi\tR\tR+\tR-\n");
                for p in &rep.eigenpairs {
                    text.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\n",
                        p.e0, p.psi_string(), p.l2.real_line, p.l2.positive, p.l2.negative
                    ));
                }
                for c in rep.candidates.iter().filter(|c| c.degenerate) {
                    text.push_str(&format!("# degenerate candidate E0={}\n", c.e0));
                }
            }
            let _ = out.write_all(text.as_bytes());
            if path.is_some() {
                let doc = PotentialDocument::from_result(&r, &rep.eigenpairs);
                write_out(&path, &doc.to_json(), out)?;
            }
            Ok(())
        }
        Command::Render { input, format, range, samples, set } => {
            let doc = read_doc(&input)?;
            let text = match format {
                Format::Json => {
                    doc.to_result()?;
                    doc.to_json()
                }
                Format::Latex => {
                    let m = doc.m.as_ref().map(|m| m.value()).transpose()?;
                    let h = doc.h.as_ref().map(|h| h.value()).transpose()?;
                    latex_document(m.as_ref(), h.as_ref(), &doc.v.value()?)
                }
                Format::Plotdata => {
                    let (lo, hi) = parse_range(&range)?;
                    plot_data(&doc.v.value()?, &doc.eigenpairs()?, lo, hi, samples, &parse_bindings(&set)?)?
                }
            };
            write_out(&None, &text, out)
        }
    }
}

/// Runs the command line; returns the exit status (0 ok, 1 mathematical
/// failure, 2 usage error).
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "usage error: {}", m);
            2
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "error: {}", e);
            1
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}
