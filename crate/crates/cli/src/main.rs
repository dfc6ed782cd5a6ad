//! `cohopf` command-line front end.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cohopf::catalog;
use cohopf::error::{Error, Result};
use cohopf::format::{AlgebraFile, MapFile};
use cohopf::hopf::drinfeld_double;
use cohopf::pipeline::{error_exit_code, run_theorems, with_threads, HopfReport, MapChoice, RunOptions};

#[derive(Parser)]
#[command(name = "cohopf", version, about = "Exact checks for Frobenius monoidal right adjoints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    DoubleInclusion,
    Identity,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Hopf axioms, plus quasitriangular and ribbon data when present.
    VerifyHopf {
        /// Algebra file, or `catalog:NAME` for a built-in entry.
        file: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the Drinfeld double of an algebra.
    Double {
        file: String,
        /// Output path; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Build the restriction/coinduction adjunction and run every theorem suite.
    RunTheorems {
        file: String,
        #[arg(long, value_enum, default_value = "double-inclusion")]
        map: MapKind,
        /// Map file, required with `--map file`.
        #[arg(long)]
        map_file: Option<String>,
        /// Comma-separated seed names; defaults to the file's designated seeds.
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<String>>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "on")]
        normalize_form: Toggle,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn read_source(spec: &str) -> Result<String> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        if name == "c2_diagonal_map" {
            return Ok(catalog::diagonal_map_text().to_string());
        }
        return catalog::text(name).map(str::to_string);
    }
    std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::VerifyHopf { file, report } => {
            let h = AlgebraFile::parse(&read_source(&file)?)?.to_hopf()?;
            let r = HopfReport::new(&h);
            emit(report.as_deref(), &r.to_json())?;
            for c in r.checks.failures() {
                eprintln!("fail: {} ({})", c.id, c.anchor);
            }
            Ok(r.exit_code())
        }
        Command::Double { file, out } => {
            let h = AlgebraFile::parse(&read_source(&file)?)?.to_hopf()?;
            if let Some(c) = HopfReport::new(&h).checks.failures().next() {
                return Err(Error::Precondition(format!("input fails {}", c.id)));
            }
            let d = match drinfeld_double(&h) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(1);
                }
            };
            let text = AlgebraFile::from_hopf(&d, &[]).to_json();
            AlgebraFile::parse(&text)?.to_hopf()?;
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::RunTheorems { file, map, map_file, seeds, depth, report, normalize_form, threads } => {
            let algebra = AlgebraFile::parse(&read_source(&file)?)?;
            let map = match (map, map_file) {
                (MapKind::DoubleInclusion, _) => MapChoice::DoubleInclusion,
                (MapKind::Identity, _) => MapChoice::Identity,
                (MapKind::File, Some(path)) => MapChoice::File(MapFile::parse(&read_source(&path)?)?),
                (MapKind::File, None) => return Err(Error::Parse("--map file needs --map-file PATH".into())),
            };
            let opts = RunOptions { map, seeds, depth, normalize_form: matches!(normalize_form, Toggle::On) };
            let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let r = with_threads(threads, || run_theorems(&algebra, &opts))??;
            emit(report.as_deref(), &r.to_json())?;
            for s in &r.suites {
                for c in s.checks.iter().filter(|c| c.status == cohopf::report::Status::Fail) {
                    eprintln!("fail: {}/{} ({})", s.name, c.id, c.anchor);
                }
            }
            Ok(r.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        error_exit_code(&e)
    });
    ExitCode::from(code as u8)
}
