//! The `qlie` command line.
//!
//! Exit codes: 0 success, 1 validation or classification failure, 2 parse
//! error (including unreadable input and bad arguments), 3 unsupported input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::QuadraticLieAlgebra;
use crate::catalog::{self, CatalogName};
use crate::classify::{classify, decompose, ClassLabel};
use crate::constructions::double_extension;
use crate::derivations::{inner_derivation_space, skew_derivation_space, SkewDerivation};
use crate::error::Error;
use crate::format::{parse_file, parse_matrix_file, write_file};
use crate::fuzz::random_isometry;
use crate::scalar::{parse_scalar, Scalar};

#[derive(Parser, Debug)]
#[command(name = "qlie", version, about = "Exact quadratic Lie algebras over Q(i)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the five axioms and name the first failing index tuple.
    Check { file: PathBuf },
    /// Dimension, center, derived series, solvability, reducedness.
    Info { file: PathBuf },
    /// Classify a solvable algebra of dimension at most 6 (JSON on stdout).
    Classify { file: PathBuf },
    /// Write the central lines and the reduced part as separate files.
    Decompose {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Double extension by a skew derivation read from a matrix file.
    Extend {
        file: PathBuf,
        #[arg(long)]
        derivation: PathBuf,
        /// Defaults to stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dimensions of the skew-symmetric and inner derivation spaces.
    Derivations { file: PathBuf },
    /// Write a catalog algebra: abelianN, diamond, g5, g6_1, g6_2, g6_3.
    Catalog {
        name: String,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Apply a seeded random Cayley isometry.
    Conjugate {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Index(_) | Error::BadParameter(_) => 2,
            Error::UnsupportedDimension(_) | Error::NoSquareRoot(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: 2, message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> std::result::Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| io_failure(path, e))
}

fn load(path: &Path) -> std::result::Result<QuadraticLieAlgebra, Failure> {
    parse_file(&read(path)?).map_err(|e| {
        let f = Failure::from(e);
        Failure { message: format!("{}: {}", path.display(), f.message), ..f }
    })
}

fn save(path: &Path, g: &QuadraticLieAlgebra) -> std::result::Result<(), Failure> {
    fs::write(path, write_file(g)).map_err(|e| io_failure(path, e))
}

fn emit(out: &mut dyn Write, text: &str) {
    // a closed stdout is not worth a distinct exit code
    let _ = writeln!(out, "{text}");
}

#[derive(Serialize)]
struct ComponentJson {
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
}

#[derive(Serialize)]
struct ClassifyJson {
    components: Vec<ComponentJson>,
}

/// `{"components":[{"family":..,"kappa":..,"lambda":..}]}` on one line.
pub fn classification_json(labels: &[ClassLabel]) -> String {
    let doc = ClassifyJson {
        components: labels
            .iter()
            .map(|l| ComponentJson {
                family: l.family.as_str(),
                kappa: l.kappa.as_ref().map(Scalar::to_string),
                lambda: l.lambda.as_ref().map(Scalar::to_string),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn name_tuple(g: &QuadraticLieAlgebra, idx: &[usize]) -> String {
    let nums: Vec<String> = idx.iter().map(usize::to_string).collect();
    let mut s = format!("({})", nums.join(", "));
    if let Some(labels) = g.labels() {
        let names: Vec<&str> = idx.iter().map(|&i| labels[i].as_str()).collect();
        s.push_str(&format!(" = ({})", names.join(", ")));
    }
    s
}

fn check(out: &mut dyn Write, file: &Path) -> CmdResult {
    let g = load(file)?;
    let report = g.validate();
    for (name, c) in report.checks() {
        let line = match (&c.holds, &c.witness) {
            (true, _) => format!("{name}: ok"),
            (false, Some(w)) => format!("{name}: FAIL at {}", name_tuple(&g, w)),
            (false, None) => format!("{name}: FAIL"),
        };
        emit(out, &line);
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn info(out: &mut dyn Write, file: &Path) -> CmdResult {
    let g = load(file)?;
    g.ensure_valid()?;
    let dims: Vec<String> = g.derived_series().dims().iter().map(usize::to_string).collect();
    emit(out, &format!("dim: {}", g.dim()));
    emit(out, &format!("center dim: {}", g.center().dim()));
    emit(out, &format!("derived series dims: {}", dims.join(" ")));
    emit(out, &format!("solvable: {}", g.is_solvable()));
    emit(out, &format!("reduced: {}", g.is_reduced()?));
    Ok(0)
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Check { file } => check(out, &file),
        Command::Info { file } => info(out, &file),
        Command::Classify { file } => {
            let labels = classify(&load(&file)?)?;
            emit(out, &classification_json(&labels));
            Ok(0)
        }
        Command::Decompose { file, output } => {
            let parts = decompose(&load(&file)?)?;
            fs::create_dir_all(&output).map_err(|e| io_failure(&output, e))?;
            for (k, part) in parts.iter().enumerate() {
                let path = output.join(format!("component_{k}.qla"));
                save(&path, part)?;
                emit(out, &format!("{} (dim {})", path.display(), part.dim()));
            }
            Ok(0)
        }
        Command::Extend { file, derivation, output } => {
            let g = load(&file)?;
            g.ensure_valid()?;
            let m = parse_matrix_file(&read(&derivation)?)?;
            let d = SkewDerivation::new(&g, m)?;
            let ext = double_extension(&g, d.map())?;
            match output {
                Some(path) => save(&path, &ext)?,
                None => {
                    let _ = out.write_all(&write_file(&ext));
                }
            }
            Ok(0)
        }
        Command::Derivations { file } => {
            let g = load(&file)?;
            let skew = skew_derivation_space(&g)?.dim();
            let inner = inner_derivation_space(&g)?.dim();
            emit(out, &format!("skew-symmetric derivations: {skew}"));
            emit(out, &format!("inner derivations: {inner}"));
            emit(out, &format!("outer (quotient) dim: {}", skew - inner));
            Ok(0)
        }
        Command::Catalog { name, lambda, output } => {
            let lambda = lambda.as_deref().map(parse_scalar).transpose()?;
            let name = CatalogName::parse(&name, lambda)?;
            save(&output, &catalog::make(&name)?)?;
            Ok(0)
        }
        Command::Conjugate { file, seed, output } => {
            let g = load(&file)?;
            let a = random_isometry(&g, seed)?;
            save(&output, &g.transport(&a)?)?;
            Ok(0)
        }
    }
}

/// Runs one invocation (`args[0]` is the program name) and returns the exit code.
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
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
