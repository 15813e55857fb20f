use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use socle_cli::report::analysis_markdown;
use socle_cli::*;
use socle_core::verifier::Suite;

/// Socles, radicals and Reynolds ideals of modular group algebras.
#[derive(Parser)]
#[command(name = "socle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orders, dimensions and ideal verdicts for one group.
    Analyze {
        /// Group spec, e.g. `dihedral:16`, `holomorph-c8`, `file:g.json`.
        spec: String,
        #[arg(long, short)]
        prime: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Runs verifier suites and prints one JSON document per line.
    Verify {
        #[arg(long, value_enum, ignore_case = true, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, short)]
        prime: u32,
        /// Catalog directory, or `builtin` / `builtin-2groups`.
        #[arg(long, env = "SOCLE_CATALOG", default_value = BUILTIN)]
        catalog: String,
        /// Verify these groups instead of a catalog.
        #[arg(long = "group")]
        groups: Vec<String>,
    },
    /// Catalog-wide counts.
    Census {
        /// Catalog directory, or `builtin` / `builtin-2groups`.
        #[arg(long, env = "SOCLE_CATALOG", default_value = BUILTIN_SMALL_TWO_GROUPS)]
        catalog: String,
        #[arg(long, short)]
        prime: u32,
        /// Worker threads; defaults to the number of cores.
        #[arg(long, env = "SOCLE_PARALLEL")]
        parallel: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    A,
    B,
    C,
    D,
    Isoclinism,
}

impl From<SuiteArg> for SuiteChoice {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => SuiteChoice::Core(Suite::All),
            SuiteArg::A => SuiteChoice::Core(Suite::A),
            SuiteArg::B => SuiteChoice::Core(Suite::B),
            SuiteArg::C => SuiteChoice::Core(Suite::C),
            SuiteArg::D => SuiteChoice::Core(Suite::D),
            SuiteArg::Isoclinism => SuiteChoice::Isoclinism,
        }
    }
}

fn run(cli: Cli) -> socle_core::Result<i32> {
    let docs = match cli.command {
        Command::Analyze { spec, prime, format } => {
            let doc = cmd_analyze(&spec, prime)?;
            match format {
                Format::Json => println!("{}", doc.to_json()),
                Format::Md => print!("{}", analysis_markdown(&doc).expect("analysis body")),
            }
            vec![doc]
        }
        Command::Verify {
            suite,
            prime,
            catalog,
            groups,
        } => {
            let groups = if groups.is_empty() {
                open_catalog(&catalog)?.groups
            } else {
                groups.iter().map(|s| parse_spec(s)).collect::<socle_core::Result<_>>()?
            };
            let docs = cmd_verify(&groups, prime, suite.into())?;
            for d in &docs {
                println!("{}", d.to_json());
            }
            docs
        }
        Command::Census {
            catalog,
            prime,
            parallel,
        } => {
            let doc = cmd_census(&open_catalog(&catalog)?, prime, parallel)?;
            println!("{}", doc.to_json());
            vec![doc]
        }
    };
    for d in &docs {
        for line in d.disagreements() {
            eprintln!("disagreement: {line}");
        }
    }
    Ok(exit_status(&docs))
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    ExitCode::from(code as u8)
}
