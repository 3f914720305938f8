//! Subcommands and their exit-code contract.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | usage, parse or domain error |
//! | 3 | fractional twist exponent |
//! | 4 | coprimality violated |
//! | 5 | a verification identity failed |
//! | 6 | coefficient denominator vanishes under `v = s^-N` |

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skeinkit_core::cabling::{cable_decorate, CableSpec};
use skeinkit_core::partitions::partitions_of;
use skeinkit_core::ring::{specialize_sl_n, RatFunc};
use skeinkit_core::skein::{delta_pn, delta_pn_star};
use skeinkit_core::symfunc::{from_basis, to_basis, Basis, BasisExpansion, Combination, SymElement};
use skeinkit_core::verify::{default_max, run_suite};
use skeinkit_core::Error;

use crate::expr::{parse_element, ParseError};
use crate::json::{expansion_to_json, ratfunc_to_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FRACTIONAL: i32 = 3;
pub const EXIT_COPRIME: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;
pub const EXIT_SPECIALIZE: i32 = 6;

/// Degree cap for `table` when `SKEINKIT_MAX_DEGREE` is unset.
pub const DEFAULT_TABLE_CAP: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "skeinkit", version, about = "Exact algebra in the Homfly skein of the annulus")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rewrite an element in another basis.
    Expand {
        /// Element expression, or `-` to read it from stdin.
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Target basis: p, h, e, schur or A.
        #[arg(long, default_value = "schur")]
        to: String,
    },
    /// Run a named suite of identities.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest degree checked; defaults depend on the suite.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Decorate the (m, n) torus pattern: tau^(n/m)(Q[P_m]).
    Cable {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "schur")]
        to: String,
    },
    /// Apply the meridian operator Delta_{P_N}.
    Delta {
        #[arg(long = "N")]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Use the reversed-orientation operator Delta_{P_N*}.
        #[arg(long)]
        star: bool,
        #[arg(long, default_value = "schur")]
        to: String,
    },
    /// Transition matrix between two bases in one degree.
    Table {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Specialize coefficients to sl(N), v = s^-N, in the Schur basis.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "N")]
        n: u32,
    },
}

/// Environment a command runs in, separated out so tests can fix it.
pub struct Env<'a> {
    pub stdin: &'a mut dyn Read,
    pub table_cap: usize,
}

/// What a command produced: an exit code and the text for stdout (on
/// success) or stderr (otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

enum Failure {
    Usage(String),
    Parse(ParseError),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, output) = match self {
            Failure::Usage(msg) => (EXIT_USAGE, msg),
            Failure::Parse(e) => (EXIT_USAGE, format!("parse error {e}")),
            Failure::Core(e) => {
                let code = match e {
                    Error::FractionalExponent { .. } => EXIT_FRACTIONAL,
                    Error::NotCoprime { .. } => EXIT_COPRIME,
                    Error::Specialization { .. } => EXIT_SPECIALIZE,
                    _ => EXIT_USAGE,
                };
                (code, e.to_string())
            }
        };
        Outcome { code, output: format!("error: {output}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, env: &mut Env<'_>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome { code, output: e.to_string() };
        }
    };
    match dispatch(&cli, env) {
        Ok((code, output)) => Outcome { code, output },
        Err(f) => f.into_outcome(),
    }
}

fn read_expr(src: &str, env: &mut Env<'_>) -> Result<SymElement, Failure> {
    if src == "-" {
        let mut buf = String::new();
        env.stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(parse_element(buf.trim_end())?)
    } else {
        Ok(parse_element(src)?)
    }
}

fn basis(tag: &str) -> Result<Basis, Failure> {
    Ok(tag.parse::<Basis>()?)
}

fn render(e: &BasisExpansion, format: Format) -> String {
    match format {
        Format::Text => format!("{e}\n"),
        Format::Json => format!("{}\n", expansion_to_json(e)),
    }
}

fn dispatch(cli: &Cli, env: &mut Env<'_>) -> Result<(i32, String), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Expand { expr, to } => {
            let target = basis(to)?;
            let f = read_expr(expr, env)?;
            Ok((EXIT_OK, render(&to_basis(&f, target), format)))
        }
        Command::Verify { suite, max } => verify(suite, *max, format),
        Command::Cable { m, n, expr, to } => {
            let target = basis(to)?;
            let spec = CableSpec::new(*m, *n)?;
            let f = read_expr(expr, env)?;
            let out = cable_decorate(spec, &f)?;
            Ok((EXIT_OK, render(&to_basis(&out, target), format)))
        }
        Command::Delta { n, expr, star, to } => {
            let target = basis(to)?;
            let f = read_expr(expr, env)?;
            let out = if *star { delta_pn_star(&f, *n)? } else { delta_pn(&f, *n)? };
            Ok((EXIT_OK, render(&to_basis(&out, target), format)))
        }
        Command::Table { degree, from, to } => {
            if *degree < 1 || *degree > env.table_cap {
                return Err(Failure::Usage(format!(
                    "--degree must lie in 1..={} (set SKEINKIT_MAX_DEGREE to raise the cap)",
                    env.table_cap
                )));
            }
            table(*degree, basis(from)?, basis(to)?, format)
        }
        Command::Eval { expr, n } => {
            let f = read_expr(expr, env)?;
            let schur = to_basis(&f, Basis::Schur);
            let terms = schur.terms.try_map_terms(|_, c| specialize_sl_n(c, *n))?;
            Ok((EXIT_OK, render(&BasisExpansion::new(Basis::Schur, terms), format)))
        }
    }
}

fn verify(suite: &str, max: Option<usize>, format: Format) -> Result<(i32, String), Failure> {
    let max = match max {
        Some(m) => m,
        None => default_max(suite)?,
    };
    let checks = run_suite(suite, max)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let code = if failed == 0 { EXIT_OK } else { EXIT_VERIFY };
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                s.push_str(if c.passed { "PASS " } else { "FAIL " });
                s.push_str(&c.name);
                s.push('\n');
            }
            s.push_str(&format!("{suite}: {} passed, {failed} failed\n", checks.len() - failed));
            s
        }
        Format::Json => {
            let list: Vec<Value> = checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect();
            format!(
                "{}\n",
                json!({ "suite": suite, "max": max, "checks": list, "passed": checks.len() - failed, "failed": failed })
            )
        }
    };
    Ok((code, out))
}

fn table(degree: usize, from: Basis, to: Basis, format: Format) -> Result<(i32, String), Failure> {
    let parts = partitions_of(degree);
    let rows: Vec<Vec<RatFunc>> = parts
        .iter()
        .map(|lambda| {
            let elem = from_basis(&BasisExpansion::new(from, Combination::monomial(lambda.clone(), RatFunc::one())));
            let exp = to_basis(&elem, to);
            parts.iter().map(|mu| exp.coefficient(mu)).collect()
        })
        .collect();
    let out = match format {
        Format::Text => {
            let mut s = format!("{} -> {} in degree {degree}\n", from, to);
            for (lambda, row) in parts.iter().zip(&rows) {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                s.push_str(&format!("{}{}: {}\n", from.atom(), lambda, cells.join(", ")));
            }
            s
        }
        Format::Json => {
            let labels: Vec<&[usize]> = parts.iter().map(|p| p.parts()).collect();
            let matrix: Vec<Vec<Value>> =
                rows.iter().map(|r| r.iter().map(ratfunc_to_json).collect()).collect();
            format!(
                "{}\n",
                json!({ "from": from.tag(), "to": to.tag(), "degree": degree, "partitions": labels, "matrix": matrix })
            )
        }
    };
    Ok((EXIT_OK, out))
}
