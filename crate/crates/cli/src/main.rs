//! `trilink`: classify linkings of triangles, evaluate their invariants,
//! apply elementary moves, and fuzz-check invariance, all over exact
//! rational arithmetic.
//!
//! Exit codes: 0 success, 1 validation failure or fuzz violation or
//! invalid move, 2 usage/parse errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use trilink::canonical::CanonicalClass;
use trilink::classify::{classify2, classify3, ClassLabel3};
use trilink::fuzz::{run_bordef_equivalence, run_isotopy_fuzz};
use trilink::invariants::{
    is_borromean, is_borromean_reduced, linking_parity, pairwise_parity_profile, Linking,
};
use trilink::kernel::point::Point3;
use trilink::moves::{apply_move, validate_move, MoveSpec, MoveVerdict};
use trilink_cli::format::{parse_linking, parse_scalar, serialize_linking, DocumentError};
use trilink_cli::obj::export_obj;

#[derive(Parser)]
#[command(name = "trilink", version, about = "Exact invariants and classification of triangle linkings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a linking file and print the invariant signature.
    Classify {
        /// Linking file, or `-` for standard input.
        file: String,
    },
    /// Print the raw invariants: pairwise parities and the Borromean
    /// predicates.
    Invariants {
        file: String,
    },
    /// Write one of the canonical linkings:
    /// unlink3 | borromean | hopf-split | chain3 | necklace.
    Generate {
        name: String,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate and apply one elementary move; prints the verdict.
    Move {
        file: String,
        /// Index of the triangle to move.
        #[arg(long)]
        target: usize,
        /// Index (0..3) of the vertex to replace.
        #[arg(long)]
        pivot: usize,
        /// New apex as three rational literals, e.g. --apex 1/2 0 -3.
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"])]
        apex: Vec<String>,
        /// Where to write the moved linking (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply seeded random valid moves and check that the invariants
    /// never change; exits nonzero on any violation.
    Fuzz {
        file: String,
        #[arg(long, default_value_t = trilink::fuzz::DEFAULT_MOVES)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Apex offset scale, a rational literal.
        #[arg(long, default_value = "1/4")]
        scale: String,
        /// Write the report to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that the Borromean predicate agrees with its reduced
    /// four-condition form on generated triples.
    BordefCheck {
        #[arg(long, default_value_t = trilink::fuzz::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export the outlines as OBJ polyline loops (lossy, for viewers).
    ExportObj {
        file: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// 0 ok; 1 validation failure / violation; 2 usage or parse error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => ExitCode::from(2),
                CliError::Validation(_) => ExitCode::from(1),
            }
        }
    }
}

enum CliError {
    Io(String),
    Parse(String),
    Validation(String),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) | CliError::Parse(m) | CliError::Validation(m) | CliError::Usage(m) => {
                f.write_str(m)
            }
        }
    }
}

fn read_input(file: &str) -> Result<String, CliError> {
    if file == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(file).map_err(|e| CliError::Io(format!("reading {file}: {e}")))
    }
}

/// Write to stdout, exiting quietly if the reader closed the pipe.
fn print_stdout(content: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(content.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing stdout: {e}");
        std::process::exit(2);
    }
}

fn load_linking(file: &str) -> Result<Linking, CliError> {
    let text = read_input(file)?;
    parse_linking(&text).map_err(|e| match e {
        DocumentError::Parse(p) => CliError::Parse(format!("{file}: {p}")),
        DocumentError::Validation(v) => CliError::Validation(format!("{file}: {v}")),
    })
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Io(format!("writing {}: {e}", p.display()))),
        None => {
            print_stdout(content);
            Ok(())
        }
    }
}

fn label3_text(label: ClassLabel3) -> String {
    match label {
        ClassLabel3::ZeroProfileNonBorromean => {
            "ZeroProfileNonBorromean (Unlink3 under Conjecture)".to_string()
        }
        other => other.to_string(),
    }
}

fn signature_text(l: &Linking) -> String {
    let mut out = String::new();
    match pairwise_parity_profile_text(l) {
        Some(p) => out.push_str(&format!("parities: {p}\n")),
        None => out.push_str("parities: non-generic\n"),
    }
    if l.len() == 3 {
        out.push_str(&format!("borromean: {}\n", is_borromean(l)));
    }
    out
}

fn pairwise_parity_profile_text(l: &Linking) -> Option<String> {
    if l.len() == 3 {
        pairwise_parity_profile(l).ok().map(|p| p.to_string())
    } else {
        linking_parity(l.triangle(0), l.triangle(1))
            .ok()
            .map(|p| format!("{{{p}}}"))
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Classify { file } => {
            let l = load_linking(&file)?;
            let label = if l.len() == 3 {
                label3_text(classify3(&l))
            } else {
                classify2(l.triangle(0), l.triangle(1)).to_string()
            };
            print_stdout(&format!("{label}\n{}", signature_text(&l)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { file } => {
            let l = load_linking(&file)?;
            let mut out = signature_text(&l);
            if l.len() == 3 {
                out.push_str(&format!("borromean-reduced: {}\n", is_borromean_reduced(&l)));
            }
            print_stdout(&out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { name, output } => {
            let class = CanonicalClass::from_name(&name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown canonical linking `{name}`; expected one of {}",
                    CanonicalClass::ALL.map(|c| c.name()).join(", ")
                ))
            })?;
            write_output(output.as_deref(), &serialize_linking(&class.build()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Move { file, target, pivot, apex, output } => {
            let l = load_linking(&file)?;
            if target >= l.len() {
                return Err(CliError::Usage(format!(
                    "--target {target} out of range for a linking of {} triangles",
                    l.len()
                )));
            }
            if pivot >= 3 {
                return Err(CliError::Usage("--pivot must be 0, 1 or 2".into()));
            }
            let coords: Vec<_> = apex
                .iter()
                .map(|tok| parse_scalar(tok, 0).map_err(|e| CliError::Usage(e.to_string())))
                .collect::<Result<_, _>>()?;
            let [x, y, z]: [trilink::Scalar; 3] =
                coords.try_into().expect("clap enforces three apex values");
            let spec = MoveSpec { target, pivot, new_apex: Point3::new(x, y, z) };
            match validate_move(&l, &spec) {
                MoveVerdict::Valid => {
                    print_stdout("verdict: valid\n");
                    let moved = apply_move(&l, &spec).expect("validated move applies");
                    write_output(output.as_deref(), &serialize_linking(&moved))?;
                    Ok(ExitCode::SUCCESS)
                }
                MoveVerdict::Invalid(reason) => {
                    print_stdout(&format!("verdict: invalid: {reason}\n"));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Fuzz { file, moves, seed, scale, output } => {
            let l = load_linking(&file)?;
            let scale = parse_scalar(&scale, 0)
                .map_err(|_| CliError::Usage(format!("--scale `{scale}` is not a rational literal")))?;
            let report = run_isotopy_fuzz(&l, moves, seed, &scale);
            write_output(output.as_deref(), &report.to_text())?;
            eprintln!("elapsed: {:?}", report.elapsed);
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::BordefCheck { trials, seed, output } => {
            let report = run_bordef_equivalence(trials, seed);
            write_output(output.as_deref(), &report.to_text())?;
            eprintln!("elapsed: {:?}", report.elapsed);
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::ExportObj { file, output } => {
            let l = load_linking(&file)?;
            write_output(Some(&output), &export_obj(&l))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
