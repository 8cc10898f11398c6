//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes results to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, unknown labels,
//! malformed root specs), 2 when a library precondition or invariant fails.

pub mod labels;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use quadpair::drop_kit::{classify_symplectic_minuscule, drop_spectrum};
use quadpair::matrix_oracle::{oracle_drop, root_index_of, verify_tensor_lemma, FieldKind, SignConvention, TensorLemmaSpec};
use quadpair::minuscule::{enumerate_minuscule, MinusculeRep, RepSummary};
use quadpair::mt_decision::{enumerate_exceptional, mt_check, EndoType, MtQuery};
use quadpair::root_kit::{CartanType, RootDatum, Weight};
use serde::Serialize;

use labels::{canonical_weight, parse_roots, LabelError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "quadpair", version, about = "Minuscule representations, root-element drops and Mumford-Tate case analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minuscule table of the classical types (plus flagged E6/E7 rows).
    Table {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Minuscule representations of one type.
    Minuscule(TypeArgs),
    /// Root-element drops on one minuscule representation.
    Drops {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        weight: String,
    },
    /// Symplectic minuscule representations of dimension 2g.
    Classify {
        #[arg(long = "two-g")]
        two_g: u64,
    },
    /// Verdict for an abelian variety of dimension g with toric dimension s.
    MtCheck {
        #[arg(long)]
        g: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        endo: String,
    },
    /// Exceptional (g, s) pairs up to a bound.
    MtExceptional {
        #[arg(long = "max-g")]
        max_g: String,
        #[arg(long)]
        endo: String,
    },
    /// Brute-force matrix checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Seeded random check that k1- and k2-unipotent matrices tensor to a
    /// (k1 + k2 - 1)-unipotent one.
    TensorLemma {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Work over F_p instead of Q.
        #[arg(long)]
        prime: Option<u64>,
        /// Matrix sizes as `d1,d2`.
        #[arg(long)]
        dims: Option<String>,
    },
    /// Drop of a root element (or product of orthogonal root elements)
    /// measured on its matrix.
    Drop {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        roots: String,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value_t = Convention::IndexParity)]
        convention: Convention,
    },
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Family letter (A, B, C, D) or a full label such as D6 or E7.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    Uniform,
    IndexParity,
}

enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<LabelError> for Failure {
    fn from(e: LabelError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<quadpair::Error> for Failure {
    fn from(e: quadpair::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Precondition(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PRECONDITION
        }
    }
}

fn json<T: Serialize>(value: &T) -> CmdResult {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    Ok(s)
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Table { max_rank, format } => {
            let rows = table::table_rows(max_rank);
            match format {
                Format::Json => json(&rows),
                Format::Csv => Ok(table::to_csv(&rows)),
                Format::Markdown => Ok(table::to_markdown(&rows)),
            }
        }
        Command::Minuscule(ty) => {
            let t = cartan_type(&ty)?;
            let reps: Vec<RepSummary> = enumerate_minuscule(t).iter().map(RepSummary::from).collect();
            json(&reps)
        }
        Command::Drops { ty, weight } => {
            let rep = representation(&ty, &weight)?;
            json(&drop_spectrum(&rep))
        }
        Command::Classify { two_g } => json(&classify_symplectic_minuscule(two_g)?),
        Command::MtCheck { g, s, endo } => {
            let q = MtQuery::new(big(&g, "--g")?, big(&s, "--s")?, endo_type(&endo)?)?;
            json(&mt_check(&q)?)
        }
        Command::MtExceptional { max_g, endo } => {
            json(&enumerate_exceptional(&big(&max_g, "--max-g")?, endo_type(&endo)?))
        }
        Command::Oracle(OracleCommand::TensorLemma {
            k1,
            k2,
            trials,
            seed,
            prime,
            dims,
        }) => {
            let mut spec = TensorLemmaSpec::new(k1, k2, trials, seed);
            if let Some(d) = dims {
                spec.dims = parse_dims(&d)?;
            }
            spec.field = field(prime)?;
            json(&verify_tensor_lemma(&spec)?)
        }
        Command::Oracle(OracleCommand::Drop {
            ty,
            weight,
            roots,
            prime,
            convention,
        }) => {
            let rep = representation(&ty, &weight)?;
            let indices = parse_roots(rep.cartan_type(), &roots)?
                .iter()
                .map(|coords| root_index_of(&rep, coords))
                .collect::<quadpair::Result<Vec<_>>>()?;
            let convention = match convention {
                Convention::Uniform => SignConvention::Uniform,
                Convention::IndexParity => SignConvention::IndexParity,
            };
            json(&oracle_drop(&rep, &indices, field(prime)?, convention)?)
        }
    }
}

fn cartan_type(args: &TypeArgs) -> Result<CartanType, Failure> {
    let label = match args.rank {
        Some(n) if args.family.chars().all(char::is_alphabetic) => format!("{}{n}", args.family),
        _ => args.family.clone(),
    };
    CartanType::from_str(&label).map_err(|e| Failure::Usage(e.to_string()))
}

fn representation(ty: &TypeArgs, weight: &str) -> Result<MinusculeRep, Failure> {
    let t = cartan_type(ty)?;
    let j = canonical_weight(t, weight)?;
    let datum = Arc::new(RootDatum::new(t));
    Ok(MinusculeRep::new(datum, Weight::fundamental(t.rank(), j))?)
}

fn big(text: &str, flag: &str) -> Result<BigUint, Failure> {
    BigUint::from_str(text.trim())
        .map_err(|_| Failure::Usage(format!("{flag} expects a non-negative integer, got {text:?}")))
}

fn endo_type(text: &str) -> Result<EndoType, Failure> {
    EndoType::from_str(text).map_err(|e| Failure::Usage(e.to_string()))
}

fn field(prime: Option<u64>) -> Result<FieldKind, Failure> {
    match prime {
        None => Ok(FieldKind::Rationals),
        Some(p) => Ok(FieldKind::prime(p)?),
    }
}

fn parse_dims(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("--dims expects d1,d2, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}
