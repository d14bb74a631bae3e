//! Command-line front end.
//!
//! ```text
//! k3-secant secant    --t T
//! k3-secant tangent   --t T
//! k3-secant class     --t T --which sigma|x|tan
//! k3-secant ampleness --t T [--k K]
//! k3-secant table     --t-min A --t-max B --format json|csv|md
//! ```
//!
//! Exit status is 0 on success, 1 on a usage error and 2 when `t` is outside
//! the range where the requested quantity is defined.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::ampleness::{is_k_very_ample, knutsen_obstruction, max_k, AmpleQuery};
use crate::enumerative::{
    k3_secant_class, k3_secant_degree, k3_summary, k3_tangent_classes, k3_tangent_degree, K3Summary,
};
use crate::error::Error;
use crate::schubert::{sigma_label, CohClass, GrassContext, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "k3-secant",
    about = "Degrees of secant and tangent varieties of generic K3 surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree of the secant variety (t >= 4)
    Secant {
        #[arg(long)]
        t: u64,
    },
    /// Degree of the tangent variety (t >= 6)
    Tangent {
        #[arg(long)]
        t: u64,
    },
    /// Schubert decomposition of a Grassmannian locus
    Class {
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// k-very ampleness of the polarization
    Ampleness {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        k: Option<u64>,
    },
    /// All pipeline quantities over a range of t
    Table {
        #[arg(long = "t-min")]
        t_min: u64,
        #[arg(long = "t-max")]
        t_max: u64,
        #[arg(long, value_enum)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// secant lines, in G(1, t+1)
    Sigma,
    /// tangent lines, in G(1, t+1)
    X,
    /// tangent planes, in G(2, t+1)
    Tan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// One row of `table` output. Tangent-side fields are `None` for `t < 6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub t: u64,
    pub deg_sec: BigInt,
    pub deg_tan: Option<BigInt>,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub alpha_prime: Option<BigInt>,
    pub beta_prime: Option<BigInt>,
    pub beta_dprime: Option<BigInt>,
    pub plucker_sigma: BigInt,
    pub plucker_x: Option<BigInt>,
    pub plucker_t: Option<BigInt>,
    pub max_k: u64,
}

/// Column order for CSV and markdown.
pub const COLUMNS: [&str; 13] = [
    "t",
    "deg_sec",
    "deg_tan",
    "alpha",
    "beta",
    "gamma",
    "alpha_prime",
    "beta_prime",
    "beta_dprime",
    "plucker_sigma",
    "plucker_x",
    "plucker_t",
    "max_k",
];

impl From<K3Summary> for OutputRecord {
    fn from(s: K3Summary) -> Self {
        let tan = s.tangent;
        OutputRecord {
            t: s.t,
            deg_sec: s.alpha.clone(),
            deg_tan: tan.as_ref().map(|x| x.alpha_prime.clone()),
            alpha: s.alpha,
            beta: s.beta,
            gamma: s.gamma,
            alpha_prime: tan.as_ref().map(|x| x.alpha_prime.clone()),
            beta_prime: tan.as_ref().map(|x| x.beta_prime.clone()),
            beta_dprime: tan.as_ref().map(|x| x.beta_dprime.clone()),
            plucker_sigma: s.plucker_sigma,
            plucker_x: tan.as_ref().map(|x| x.plucker_x.clone()),
            plucker_t: tan.map(|x| x.plucker_t),
            max_k: s.max_k,
        }
    }
}

impl OutputRecord {
    pub fn for_t(t: u64) -> Result<Self, Error> {
        k3_summary(t).map(Into::into)
    }

    /// Values in [`COLUMNS`] order, `None` where absent.
    pub fn cells(&self) -> [Option<String>; 13] {
        let s = |x: &BigInt| Some(x.to_string());
        let o = |x: &Option<BigInt>| x.as_ref().map(|v| v.to_string());
        [
            Some(self.t.to_string()),
            s(&self.deg_sec),
            o(&self.deg_tan),
            s(&self.alpha),
            s(&self.beta),
            s(&self.gamma),
            o(&self.alpha_prime),
            o(&self.beta_prime),
            o(&self.beta_dprime),
            s(&self.plucker_sigma),
            o(&self.plucker_x),
            o(&self.plucker_t),
            Some(self.max_k.to_string()),
        ]
    }

    /// JSON object with sorted keys; absent fields are omitted.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (key, cell) in COLUMNS.iter().zip(self.cells()) {
            if let Some(v) = cell {
                let n: Number = v.parse().expect("integers are valid JSON numbers");
                map.insert(key.to_string(), Value::Number(n));
            }
        }
        Value::Object(map)
    }
}

pub fn render_json(records: &[OutputRecord]) -> String {
    let arr = Value::Array(records.iter().map(OutputRecord::to_json).collect());
    let mut s = serde_json::to_string_pretty(&arr).expect("serializable");
    s.push('\n');
    s
}

pub fn render_csv(records: &[OutputRecord]) -> String {
    let mut s = COLUMNS.join(",");
    s.push('\n');
    for r in records {
        let row: Vec<String> = r
            .cells()
            .into_iter()
            .map(Option::unwrap_or_default)
            .collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

pub fn render_md(records: &[OutputRecord]) -> String {
    let mut s = format!("| {} |\n", COLUMNS.join(" | "));
    let _ = writeln!(s, "|{}", "---:|".repeat(COLUMNS.len()));
    for r in records {
        let row: Vec<String> = r
            .cells()
            .into_iter()
            .map(|c| c.unwrap_or_else(|| "-".into()))
            .collect();
        let _ = writeln!(s, "| {} |", row.join(" | "));
    }
    s
}

/// Class listing: the Grassmannian on the first line, then one
/// `sigma[...] coefficient` line per term, highest partition first.
pub fn render_class(c: &CohClass) -> String {
    let mut s = format!("{}\n", c.ctx());
    let terms: Vec<_> = c.terms().collect();
    for (p, coeff) in terms.into_iter().rev() {
        let _ = writeln!(s, "{} {}", sigma_label(p, c.ctx().rows()), coeff);
    }
    s
}

/// Inverse of [`render_class`].
pub fn parse_class(text: &str) -> Result<CohClass, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty listing")?;
    let inner = header
        .trim()
        .strip_prefix("G(")
        .and_then(|h| h.strip_suffix(')'))
        .ok_or_else(|| format!("bad header {header:?}"))?;
    let (ell, n) = inner.split_once(',').ok_or("bad header")?;
    let ctx = GrassContext::new(
        ell.trim().parse().map_err(|e| format!("{e}"))?,
        n.trim().parse().map_err(|e| format!("{e}"))?,
    )
    .map_err(|e| e.to_string())?;

    let mut terms = Vec::new();
    for line in lines {
        let (label, coeff) = line
            .trim()
            .split_once(' ')
            .ok_or_else(|| format!("bad line {line:?}"))?;
        let parts = label
            .strip_prefix("sigma[")
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(|| format!("bad label {label:?}"))?;
        let parts: Vec<usize> = parts
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        let p = Partition::new(parts).map_err(|e| e.to_string())?;
        let c: BigInt = coeff.trim().parse().map_err(|e| format!("{e}"))?;
        terms.push((p, c));
    }
    CohClass::make(ctx, terms).map_err(|e| e.to_string())
}

fn precondition(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::PreconditionError { .. } | Error::DomainError { .. } => EXIT_PRECONDITION,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };

    let result: Result<String, Error> = match cli.command {
        Command::Secant { t } => k3_secant_degree(t).map(|d| format!("{d}\n")),
        Command::Tangent { t } => k3_tangent_degree(t).map(|d| format!("{d}\n")),
        Command::Class { t, which } => match which {
            Which::Sigma => k3_secant_class(t).map(|c| render_class(&c)),
            Which::X => k3_tangent_classes(t).map(|c| render_class(&c.x)),
            Which::Tan => k3_tangent_classes(t).map(|c| render_class(&c.t)),
        },
        Command::Ampleness { t, k: None } => max_k(t).map(|k| format!("{k}\n")),
        Command::Ampleness { t, k: Some(k) } => AmpleQuery::new(t, k).map(|q| {
            let mut s = format!("{}\n", is_k_very_ample(q));
            if let Some(a) = knutsen_obstruction(q) {
                let _ = writeln!(s, "obstruction: D = {a}h");
            }
            s
        }),
        Command::Table {
            t_min,
            t_max,
            format,
        } => {
            if t_min > t_max {
                let _ = writeln!(err, "error: --t-min {t_min} exceeds --t-max {t_max}");
                return EXIT_USAGE;
            }
            (t_min..=t_max)
                .map(OutputRecord::for_t)
                .collect::<Result<Vec<_>, _>>()
                .map(|records| match format {
                    Format::Json => render_json(&records),
                    Format::Csv => render_csv(&records),
                    Format::Md => render_md(&records),
                })
        }
    };

    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(e) => precondition(err, &e),
    }
}
