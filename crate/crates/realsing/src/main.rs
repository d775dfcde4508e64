use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use realsing::census::census;
use realsing::dot::{plumbing_dot, splice_dot};
use realsing::report::text_report;
use realsing::scan::scan;
use realsing::verify::verify;
use realsing::{AnalysisRecord, Grid, Span};
use realsing_core::{analyze, splice_weights, BigInt, ChiConvention, FamilyParams};

/// Topological invariants of the real singularities conj(xy)(x^p + y^q) + z^r.
#[derive(Parser)]
#[command(name = "realsing", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one triple.
    Analyze {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
        #[arg(value_parser = parse_int)]
        r: BigInt,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Convention::Paper)]
        chi_convention: Convention,
        /// Write the plumbing graph as Graphviz DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Write the splice diagram as Graphviz DOT.
        #[arg(long, value_name = "PATH")]
        splice_dot: Option<PathBuf>,
    },
    /// CSV summary of every valid triple in a grid.
    Scan {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Hard checks and closed-form diagnostics over a grid.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        /// Print only the diagnostics that do not match.
        #[arg(long)]
        only_mismatches: bool,
    },
    /// Residue census of the mod-12 congruence for a = 2, b = 1.
    Congruence {
        #[arg(long)]
        max_p: u64,
        #[arg(long)]
        max_q: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        /// Exit 1 unless the always-zero classes are exactly the expected eight.
        #[arg(long)]
        check_proposition: bool,
    },
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("expected an integer, got {s:?}"))
}

#[derive(clap::Args)]
struct GridArgs {
    #[arg(long, value_name = "A..B")]
    p: Span,
    #[arg(long, value_name = "A..B")]
    q: Span,
    #[arg(long, value_name = "A..B")]
    r: Span,
}

impl From<GridArgs> for Grid {
    fn from(g: GridArgs) -> Self {
        Grid { p: g.p, q: g.q, r: g.r }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Paper,
    Genus,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<realsing_core::Error> for Failure {
    fn from(e: realsing_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze {
            p,
            q,
            r,
            format,
            chi_convention,
            dot,
            splice_dot: splice_path,
        } => {
            let convention = match chi_convention {
                Convention::Paper => ChiConvention::Paper,
                Convention::Genus => ChiConvention::Genus,
            };
            let run = analyze(FamilyParams::new(p, q, r)?, convention)?;
            if let Some(path) = dot {
                write_file(&path, &plumbing_dot(&run.graph))?;
            }
            if let Some(path) = splice_path {
                write_file(&path, &splice_dot(&splice_weights(&run.graph)))?;
            }
            let text = match format {
                Format::Text => text_report(&run),
                Format::Json => AnalysisRecord::from(&run)
                    .to_json()
                    .map_err(|e| Failure::Usage(e.to_string()))?,
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Scan { grid, out: path } => {
            let result = scan(&grid.into())?;
            match path {
                Some(path) => {
                    let file =
                        fs::File::create(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    result.write_csv(io::BufWriter::new(file))?;
                }
                None => result.write_csv(&mut out)?,
            }
        }
        Command::Verify { grid, only_mismatches } => {
            let report = verify(&grid.into());
            out.write_all(report.render(only_mismatches).as_bytes())?;
            if !report.passed() {
                return Err(Failure::Check("hard checks failed".into()));
            }
        }
        Command::Congruence {
            max_p,
            max_q,
            format,
            check_proposition,
        } => {
            let table = census(max_p, max_q)?;
            let text = match format {
                TableFormat::Text => table.render_text(),
                TableFormat::Csv => table.render_csv(),
            };
            out.write_all(text.as_bytes())?;
            if check_proposition {
                if !table.matches_proposition() {
                    return Err(Failure::Check(
                        "always-zero classes differ from the expected eight".into(),
                    ));
                }
                writeln!(out, "proposition: PASS")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
