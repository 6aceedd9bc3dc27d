//! Command-line frontend: argument parsing, sweeps and output formatting.
//! [`run`] is the whole program; `main` only wires up the process streams.

mod commands;
mod output;
pub mod records;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::execute;

/// Exit code for malformed input or unmet preconditions.
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    /// Aligned columns.
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "hsscohom", version, about = "Exact twisted cohomology, vanishing and stability computations")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Repeat the query for each integer in a range, e.g. `l=-4..4`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sweep: Option<String>,
    /// Also write the records as a comma-separated table to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// dim H^q(P^n, Omega^p(l)).
    Bott(FormArgs),
    /// Nonvanishing of H^q(Q^n, Omega^p(l)).
    Quadric(FormArgs),
    /// Admissible-sequence test for H^q(LG(n), Omega^p(l)).
    SnowCn(SnowCnArgs),
    /// Nonvanishing of H^q(M, Omega^{N-1}(l)).
    ClassifyTop(ClassifyArgs),
    /// Milnor algebra of a smooth hypersurface.
    Milnor(MilnorArgs),
    /// Strong Lefschetz witness for a monomial complete intersection.
    Slp(SlpArgs),
    /// Vanishing certificate for H^q(Y, Omega^p(l)) on a complete intersection.
    Vanishing(VanishingArgs),
    /// Stability verdicts and effective restriction bounds.
    Stability(StabilityArgs),
    /// The twist that decides stability of a restricted tangent bundle.
    RestrictBound(RestrictArgs),
    /// Spaces of twisted vector fields.
    Vectorfields(VectorFieldArgs),
    /// Extension of vector fields from X to Y.
    Extend(ExtendArgs),
    /// Cubic surface lattice computations.
    Delpezzo(DelpezzoArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct FormArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub l: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SnowCnArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: u64,
    /// Omit to test every cohomological degree at once.
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub l: i64,
}

/// Ambient space: `P<N>`, `Q<N>`, `LG<n>` or `other:<dim>:<index>[:hss]`.
#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub ambient: String,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub l: i64,
}

#[derive(Debug, Args, Clone)]
pub struct HypersurfaceArgs {
    /// Defining form in x0, x1, ...
    #[arg(long)]
    pub h: Option<String>,
    /// Number of variables of `--h`.
    #[arg(long)]
    pub vars: Option<usize>,
    /// Fermat hypersurface `k,d`: x0^d + ... + x_{k-1}^d.
    #[arg(long)]
    pub fermat: Option<String>,
}

#[derive(Debug, Args, Clone)]
pub struct SectionArgs {
    /// Equation of X inside Y.
    #[arg(long)]
    pub f: Option<String>,
    /// Draw a general section of this degree instead of `--f`.
    #[arg(long)]
    pub general_section: Option<u32>,
    /// Seed for general choices.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct MilnorArgs {
    #[command(flatten)]
    pub hyper: HypersurfaceArgs,
    /// Also search for a form of this degree with maximal-rank multiplication.
    #[arg(long)]
    pub faithful_degree: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SlpArgs {
    /// Exponents of the monomial complete intersection, e.g. `2,2,2`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
    /// Highest power checked; defaults to the socle degree.
    #[arg(long)]
    pub power_bound: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VanishingArgs {
    #[arg(long)]
    pub ambient: String,
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub l: i64,
    /// Accept degree-one equations when l = 0.
    #[arg(long)]
    pub relax: bool,
    /// Enumerate and discharge the Koszul witnesses as well.
    #[arg(long)]
    pub witnesses: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StabilityCheck {
    /// Stability of T_Y.
    Tangent,
    /// T_Y|_X for X in |O_Y(d)|, ambient any known space.
    Restriction,
    /// T_Y|_X for a hypersurface Y in P^{n+1}.
    Hypersurface,
    /// T_Y|_X for a hyperplane section of the Fermat cubic threefold, computed.
    CubicSection,
    /// Smallest degree in the effective restriction bound.
    Langer,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct StabilityArgs {
    #[arg(long, value_enum)]
    pub check: StabilityCheck,
    #[arg(long)]
    pub ambient: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub degrees: Vec<u32>,
    /// Degree of X in Y.
    #[arg(long)]
    pub d: Option<u32>,
    /// Dimension of Y (hypersurface check).
    #[arg(long)]
    pub n: Option<u32>,
    /// Degree of Y (hypersurface check).
    #[arg(long)]
    pub dh: Option<u32>,
    #[arg(long)]
    pub x_general: bool,
    #[arg(long)]
    pub y_general: bool,
    #[arg(long)]
    pub picard_surjective: bool,
    /// Rank (langer check).
    #[arg(long)]
    pub rank: Option<u32>,
    /// Discriminant times H^{n-2}, a rational (langer check).
    #[arg(long)]
    pub discriminant: Option<String>,
    /// H^n, a positive rational (langer check).
    #[arg(long)]
    pub hn: Option<String>,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    #[arg(long)]
    pub ambient: String,
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
    #[arg(long)]
    pub d: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SectionTarget {
    /// H^0(P^m, T(t)).
    Projective,
    /// H^0(Y, T_Y(t)).
    Hypersurface,
    /// H^0(X, T_Y(t)|_X).
    Restricted,
    /// Rank of H^0(Y, T_Y(t)) -> H^0(X, T_Y(t)|_X).
    Surjectivity,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VectorFieldArgs {
    #[arg(long, value_enum)]
    pub target: SectionTarget,
    /// Dimension of the projective space (projective target).
    #[arg(long)]
    pub m: Option<usize>,
    #[command(flatten)]
    pub hyper: HypersurfaceArgs,
    #[command(flatten)]
    pub section: SectionArgs,
    #[arg(long)]
    pub t: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub hyper: HypersurfaceArgs,
    #[command(flatten)]
    pub section: SectionArgs,
    #[arg(long)]
    pub t: i64,
    /// Components separated by `;`. Without it every basis section on X is extended.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Debug, Args)]
pub struct DelpezzoArgs {
    #[command(subcommand)]
    pub action: DelpezzoAction,
}

#[derive(Debug, Subcommand)]
pub enum DelpezzoAction {
    /// Classes with D^2 = D.K = -1.
    Lines {
        #[arg(long, default_value_t = 6)]
        r: usize,
    },
    /// The canonical class and its self-intersection.
    Canonical {
        #[arg(long, default_value_t = 6)]
        r: usize,
    },
    /// Candidate classes for a degree -2 invertible subsheaf of the cotangent bundle.
    Search,
    /// Basis of H^0(P^2, Omega^1(a)).
    Forms {
        #[arg(long)]
        a: u32,
    },
    /// Rational zeros of a projective one form.
    Zeros {
        /// Components `g0;g1;g2` in x0, x1, x2.
        #[arg(long)]
        form: Option<String>,
        /// Use the form vanishing at the four standard points.
        #[arg(long)]
        four_point: bool,
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
}

/// A parsed `key=a..b` sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub key: String,
    pub from: i64,
    pub to: i64,
}

impl std::str::FromStr for Sweep {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Invalid(format!("sweep must look like key=a..b, got {s:?}"));
        let (key, range) = s.split_once('=').ok_or_else(bad)?;
        let (a, b) = range.split_once("..").ok_or_else(bad)?;
        let from: i64 = a.trim().parse().map_err(|_| bad())?;
        let to: i64 = b.trim().parse().map_err(|_| bad())?;
        let key = key.trim().trim_start_matches("--").to_string();
        if key.is_empty() || from > to {
            return Err(bad());
        }
        Ok(Sweep { key, from, to })
    }
}

/// Drops `--sweep` and any existing `--key` from `args`, then appends `--key=value`.
fn sweep_args(args: &[String], key: &str, value: i64) -> Vec<String> {
    let flag = format!("--{key}");
    let mut out = Vec::with_capacity(args.len() + 1);
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
            continue;
        }
        if a == "--sweep" || a == &flag {
            skip = true;
            continue;
        }
        if a.starts_with("--sweep=") || a.starts_with(&format!("{flag}=")) {
            continue;
        }
        out.push(a.clone());
    }
    out.push(format!("{flag}={value}"));
    out
}

/// Runs the program on `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<String> = args.into_iter().map(|a| a.into().to_string_lossy().into_owned()).collect();
    match run_inner(&args, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn parse(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> Result<Result<Cli, i32>, CliError> {
    match Cli::try_parse_from(args) {
        Ok(cli) => Ok(Ok(cli)),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                out.write_all(text.as_bytes())?;
                Ok(Err(0))
            } else {
                err.write_all(text.as_bytes())?;
                Ok(Err(EXIT_INVALID))
            }
        }
    }
}

fn run_inner(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cli = match parse(args, out, err)? {
        Ok(cli) => cli,
        Err(code) => return Ok(code),
    };
    let (format, out_path) = (cli.format, cli.out.clone());
    let records = match &cli.sweep {
        None => execute(&cli.command)?,
        Some(spec) => {
            let sweep: Sweep = spec.parse()?;
            let mut all = Vec::new();
            for v in sweep.from..=sweep.to {
                let cli = match parse(&sweep_args(args, &sweep.key, v), out, err)? {
                    Ok(cli) => cli,
                    Err(code) => return Ok(code),
                };
                all.extend(execute(&cli.command)?);
            }
            all
        }
    };
    output::write(out, format, &records)?;
    if let Some(path) = out_path {
        output::write_csv(&path, &records)?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        let s: Sweep = "l=-4..4".parse().unwrap();
        assert_eq!(s, Sweep { key: "l".into(), from: -4, to: 4 });
        assert!("l=4..-4".parse::<Sweep>().is_err());
        assert!("l-4..4".parse::<Sweep>().is_err());
    }

    #[test]
    fn sweep_rewrites_arguments() {
        let args: Vec<String> =
            ["hsscohom", "bott", "--n", "2", "--l", "0", "--sweep", "l=-1..1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(sweep_args(&args, "l", -1), ["hsscohom", "bott", "--n", "2", "--l=-1"]);
    }
}
