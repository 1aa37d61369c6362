use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

mod commands;
mod report;

use commands::{Example, RingKind, SalvettiInput};
use report::Report;

#[derive(Parser)]
#[command(name = "eqos", version, about = "Orlik-Solomon, equivariant and Varchenko-Gel'fand rings over GF(2)")]
struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on intermediate Fourier-Motzkin rows.
    #[arg(long, global = true, env = "EQOS_MAX_FM_ROWS")]
    max_fm_rows: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, reduced Groebner basis and Hilbert function of a ring.
    Presentation {
        /// Arrangement file.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "eq")]
        ring: RingKind,
        /// Degree horizon; defaults to rank + 2.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Try to tell two equivariant rings apart.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Inputs are ideal files rather than arrangement files.
        #[arg(long)]
        ideals: bool,
        /// Degree horizon; defaults to 4 for ideals, else the larger rank + 2.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Salvetti complex homology and Borel cohomology, checked against the rings.
    Salvetti {
        /// Arrangement file; affine input is coned first.
        #[arg(required_unless_present = "covectors", conflicts_with_all = ["topes", "covectors"])]
        file: Option<PathBuf>,
        /// Tope file of an abstract oriented matroid.
        #[arg(long, requires = "covectors")]
        topes: Option<PathBuf>,
        /// Covector file matching `--topes`.
        #[arg(long, requires = "topes")]
        covectors: Option<PathBuf>,
        /// Degree horizon; defaults to rank + 2.
        #[arg(long)]
        degree: Option<usize>,
        /// Also compute Borel cohomology of the conjugation action.
        #[arg(long)]
        equivariant: bool,
    },
    /// Run a scripted reproduction of a bundled example.
    Reproduce {
        #[arg(long, value_enum)]
        example: Example,
    },
}

fn run(cli: &Cli, report: &mut Report) -> anyhow::Result<()> {
    match &cli.command {
        Command::Presentation { file, ring, degree } => commands::presentation(report, file, *ring, *degree),
        Command::Compare { a, b, ideals, degree } => commands::compare(report, a, b, *ideals, *degree),
        Command::Salvetti {
            file,
            topes,
            covectors,
            degree,
            equivariant,
        } => {
            let input = match (file, topes, covectors) {
                (Some(f), _, _) => SalvettiInput::Arrangement(f),
                (None, Some(t), Some(c)) => SalvettiInput::Covectors { topes: t, covectors: c },
                _ => anyhow::bail!("give an arrangement file or both --topes and --covectors"),
            };
            commands::salvetti(report, input, *degree, *equivariant)
        }
        Command::Reproduce { example } => commands::reproduce(report, *example),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(limit) = cli.max_fm_rows {
        eqos_core::exact::set_max_fm_rows(limit);
    }
    let echo = std::iter::once("eqos".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = Report::new(echo);
    let start = Instant::now();
    if let Err(e) = run(&cli, &mut report) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let elapsed = start.elapsed();
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json"));
        eprintln!("timing: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    } else {
        print!("{}", report.to_text());
        println!("timing: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
