use clap::{Parser, Subcommand};
use dominion::cli;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dominion",
    version,
    about = "Exact domination numbers and bound verification for 2-designs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a design and write it in the design file format.
    Construct {
        /// One of: pg, ag, cyclic, complement, residual, dual.
        kind: String,
        /// Order q (pg/ag), modulus v (cyclic), or input design file
        /// (complement/residual/dual).
        arg: String,
        /// Output file; the design text goes to stdout when omitted.
        out: Option<PathBuf>,
        /// Base block for the cyclic construction, e.g. --base 0,1,3
        /// (repeatable).
        #[arg(long)]
        base: Vec<String>,
        /// Block index removed by the residual construction.
        #[arg(long, default_value_t = 0)]
        block: usize,
    },
    /// Compute the exact domination number of a design file.
    Gamma {
        design: PathBuf,
        /// Also enumerate all minimum dominating sets.
        #[arg(long)]
        enumerate: bool,
        /// Also classify neatness (implies enumeration).
        #[arg(long)]
        neat: bool,
        /// Solver worker threads.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Run the full verification suite over the standard design roster.
    VerifyPaper {
        /// Largest plane order to construct.
        #[arg(long, default_value_t = 3)]
        max_q: u64,
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Solver worker threads.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout();
    let result = match &cli.command {
        Command::Construct {
            kind,
            arg,
            out,
            base,
            block,
        } => cli::cmd_construct(&mut stdout, kind, arg, base, *block, out.as_deref()),
        Command::Gamma {
            design,
            enumerate,
            neat,
            threads,
        } => cli::cmd_gamma(&mut stdout, design, *enumerate, *neat, *threads),
        Command::VerifyPaper {
            max_q,
            json,
            threads,
        } => cli::cmd_verify_paper(&mut stdout, *max_q, json.as_deref(), *threads),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
