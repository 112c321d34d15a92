use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use cliffexp::parse::default_signature;
use cliffexp::series::{default_eps, DEFAULT_MAX_N};
use cliffexp::{
    clidata, climinpoly, clifford_expm, parse_matrix, parse_multivector, verify, BigFloat, Error,
    FieldKind, KMatrix, MatrixDocument, Rational, ReprTable, Signature, Stop,
};
use serde::Deserialize;

/// Exact matrix exponentials computed in Clifford algebras.
#[derive(Parser, Debug)]
#[command(name = "cliffexp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the structure data of Cl(p,q).
    Clidata {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
    },
    /// Print the Clifford image of a matrix.
    Phi(MatrixArgs),
    /// Print the real minimal polynomial of a matrix image or a multivector.
    #[command(group(ArgGroup::new("input").required(true).args(["matrix", "expr"])))]
    Minpoly {
        #[arg(long, value_parser = parse_signature)]
        sig: Option<Signature>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Multivector such as "Id - 1/2 e1 + e23"; needs --sig.
        #[arg(long, requires = "sig")]
        expr: Option<String>,
    },
    /// Print exp(A) computed through the Clifford algebra.
    Exp {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
        #[arg(long, env = "CLIFFEXP_DIGITS", default_value_t = 20)]
        digits: u32,
    },
    /// Compare the Clifford exponential against a direct matrix exponential.
    Verify {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, env = "CLIFFEXP_DIGITS", default_value_t = 20)]
        digits: u32,
    },
}

#[derive(Args, Debug)]
struct MatrixArgs {
    /// Signature as P,Q; defaults to the document's or the usual one for its size.
    #[arg(long, value_parser = parse_signature)]
    sig: Option<Signature>,
    /// JSON document {"kind": ..., "rows": [[...], ...]}.
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Sum the series up to this power.
    #[arg(long, conflicts_with = "eps")]
    order: Option<usize>,
    /// Stop once an increment is below this, e.g. 1e-19 or 1/1000.
    #[arg(long, value_parser = parse_eps)]
    eps: Option<Rational>,
    /// Term limit for --eps.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

impl SeriesArgs {
    fn stop(&self) -> Stop {
        match (self.order, &self.eps) {
            (Some(n), _) => Stop::Order(n),
            (None, eps) => Stop::Tolerance {
                eps: eps.clone().unwrap_or_else(default_eps),
                max_n: self.max_n,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Exact,
    Float,
}

fn parse_signature(text: &str) -> Result<Signature, String> {
    let (p, q) = text
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got '{text}'"))?;
    let p = p.trim().parse().map_err(|_| format!("bad p in '{text}'"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q in '{text}'"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn parse_eps(text: &str) -> Result<Rational, String> {
    BigFloat::parse_decimal(text, 0)
        .map(|x| x.to_rational())
        .or_else(|| Rational::from_str(text.trim()).ok())
        .ok_or_else(|| format!("'{text}' is not a decimal or fraction"))
}

#[derive(Debug)]
enum Failure {
    /// Malformed input; exit status 2.
    Parse(String),
    /// Everything else; exit status 1.
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    kind: String,
    rows: Vec<Vec<String>>,
    #[serde(default)]
    signature: Option<[usize; 2]>,
}

fn read_document(path: &Path) -> Result<MatrixDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let kind = FieldKind::from_str(&file.kind)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let signature = file
        .signature
        .map(|[p, q]| Signature::new(p, q))
        .transpose()?;
    Ok(MatrixDocument {
        kind,
        rows: file.rows,
        signature,
    })
}

/// Parses the matrix and builds the table it is represented in.
fn load(args: &MatrixArgs) -> Result<(ReprTable, KMatrix), Failure> {
    let doc = read_document(&args.matrix)?;
    let a = parse_matrix(&doc).map_err(|e| match e {
        Error::Parse { .. } => Failure::Parse(format!("{}: {e}", args.matrix.display())),
        e => e.into(),
    })?;
    if !a.is_square() {
        return Err(Failure::Domain(format!(
            "{}: matrix is {}x{}, not square",
            args.matrix.display(),
            a.rows(),
            a.cols()
        )));
    }
    let sig = match args.sig.or(doc.signature) {
        Some(s) => s,
        None => default_signature(doc.kind, a.rows())?,
    };
    let table = ReprTable::new(sig)?;
    let kind = table.basis().ring().kind();
    if kind != doc.kind || table.dim() != a.rows() {
        return Err(Failure::Domain(format!(
            "{sig} represents {n}x{n} {kind} matrices, {} holds a {m}x{m} {} matrix",
            args.matrix.display(),
            doc.kind,
            n = table.dim(),
            m = a.rows(),
        )));
    }
    Ok((table, a))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let out = match cli.command {
        Command::Clidata { p, q } => clidata(Signature::new(p, q)?)?.to_string(),
        Command::Phi(args) => {
            let (table, a) = load(&args)?;
            table.phi(&a)?.to_string()
        }
        Command::Minpoly { sig, matrix, expr } => {
            let x = match (matrix, expr) {
                (Some(path), _) => {
                    let (table, a) = load(&MatrixArgs { sig, matrix: path })?;
                    table.phi(&a)?
                }
                (None, Some(text)) => parse_multivector(&text, sig.expect("clap requires --sig"))?,
                (None, None) => unreachable!("clap requires an input"),
            };
            climinpoly(&x).0.to_string()
        }
        Command::Exp {
            matrix,
            series,
            format,
            digits,
        } => {
            let (table, a) = load(&matrix)?;
            let e = clifford_expm(&table, &a, &series.stop())?;
            match format {
                Format::Exact => e.matrix.to_string(),
                Format::Float => e.matrix.to_float(digits).to_string(),
            }
        }
        Command::Verify {
            matrix,
            series,
            digits,
        } => {
            let (table, a) = load(&matrix)?;
            let v = verify(&table, &a, &series.stop(), digits)?;
            let mut out = String::new();
            writeln!(out, "order: {}", v.exp.order).unwrap();
            writeln!(out, "clifford:\n{}", v.float).unwrap();
            writeln!(out, "reference:\n{}", v.reference).unwrap();
            write!(out, "1-norm: {}", v.norm).unwrap();
            out
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            // A closed pipe is not worth a panic.
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
