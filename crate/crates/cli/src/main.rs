use std::process::ExitCode;

use clap::{Parser, Subcommand};
use homleib::complexes::DEFAULT_CAP;
use homleib_cli::{
    cmd_check_identities, cmd_cohomology, cmd_cup, cmd_homology, cmd_paper_fixtures, cmd_shuffle_table, cmd_verify,
    CliError, Options, RunReport,
};

/// Exact homology, cohomology and cup products of Hom-Leibniz algebras.
///
/// Algebras are JSON files or `builtin:NAME`.
#[derive(Debug, Parser)]
#[command(name = "homleib", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest dim L^n * dim A a computation may use.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Seed for random cochains.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Highest degree for homology and cohomology tables.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the axiom checker matching the declared kind.
    Verify { algebra: String },
    /// Homology dimensions.
    Homology { algebra: String },
    /// Dimensions of the equivariant cochains, cocycles, coboundaries and cohomology.
    Cohomology { lie: String, coefficients: String },
    /// Cup products of cohomology representatives and the square-zero signature.
    Cup {
        lie: String,
        coefficients: String,
        #[arg(long, num_args = 2, value_names = ["N", "M"], default_values_t = [1, 1])]
        deg: Vec<usize>,
    },
    /// Run the identity suite on seeded cochains.
    CheckIdentities {
        lie: String,
        coefficients: String,
        #[arg(long, default_value_t = 4)]
        max_total_degree: usize,
    },
    /// Audit the worked example against its printed values.
    PaperFixtures,
    /// List the (n,m)-shuffles and the expansion of rho(n,m).
    ShuffleTable { n: usize, m: usize },
}

fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let opts = Options {
        cap: cli.cap,
        seed: cli.seed,
        max_degree: cli.max_degree,
    };
    match &cli.command {
        Command::Verify { algebra } => cmd_verify(algebra),
        Command::Homology { algebra } => cmd_homology(algebra, opts),
        Command::Cohomology { lie, coefficients } => cmd_cohomology(lie, coefficients, opts),
        Command::Cup { lie, coefficients, deg } => cmd_cup(lie, coefficients, deg[0], deg[1], opts),
        Command::CheckIdentities {
            lie,
            coefficients,
            max_total_degree,
        } => cmd_check_identities(lie, coefficients, *max_total_degree, opts),
        Command::PaperFixtures => cmd_paper_fixtures(),
        Command::ShuffleTable { n, m } => cmd_shuffle_table(*n, *m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_status as u8)
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({ "error": e.to_string(), "exit_status": e.exit_code() });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
