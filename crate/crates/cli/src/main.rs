use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partav::{parse_partition, Partition};

mod commands;

/// Pattern avoidance for integer partitions.
#[derive(Parser, Debug)]
#[command(name = "partav", version)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether ALPHA contains MU.
    Contains {
        #[arg(value_parser = literal)]
        alpha: Partition,
        #[arg(value_parser = literal)]
        mu: Partition,
        /// Print the deleted rows and columns.
        #[arg(long)]
        witness: bool,
        /// Use the brute-force deletion search.
        #[arg(long)]
        oracle: bool,
    },
    /// Avoidance counts for n = 1..N.
    Count {
        #[arg(value_parser = literal)]
        mu: Partition,
        #[command(flatten)]
        sweep: Sweep,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Coefficients of the generating function, or enumeration when there is none.
    Series {
        #[arg(value_parser = literal)]
        mu: Partition,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// The rational generating function of a super-strict pattern.
    Gf {
        #[arg(value_parser = literal)]
        mu: Partition,
        /// Count the empty partition (adds 1).
        #[arg(long)]
        with_empty: bool,
    },
    /// Rook and Wilf equivalence of two patterns.
    Equiv {
        #[arg(value_parser = literal)]
        p: Partition,
        #[arg(value_parser = literal)]
        q: Partition,
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Observed counts against the predicted leading term.
    Asymptotics {
        #[arg(value_parser = literal)]
        mu: Partition,
        /// Comma-separated list of n.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
    },
    /// Check the exact formulas of the small-pattern table against enumeration.
    Table {
        #[command(flatten)]
        sweep: Sweep,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Sweep {
    #[arg(long, default_value_t = 20)]
    n_max: u64,
    /// Worker threads for brute-force enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Brute,
    Decomp,
}

fn literal(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Contains { alpha, mu, witness, oracle } => commands::containment(&alpha, &mu, witness, oracle),
        Command::Count { mu, sweep, method } => match method {
            Method::Brute => commands::count_brute(&mu, sweep.n_max, sweep.jobs),
            Method::Decomp => commands::count_decomp(&mu, sweep.n_max),
        },
        Command::Series { mu, sweep } => commands::series(&mu, sweep.n_max, sweep.jobs),
        Command::Gf { mu, with_empty } => commands::gf(&mu, with_empty),
        Command::Equiv { p, q, n_max, jobs } => commands::equiv(&p, &q, n_max, jobs),
        Command::Asymptotics { mu, n } => commands::asymptotics(&mu, &n),
        Command::Table { sweep } => commands::table(sweep.n_max, sweep.jobs),
    };
    match result {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let body = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("json values serialize")
            } else {
                report.text
            };
            // a closed pipe is not worth a panic
            let _ = writeln!(out, "{body}");
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap_exceeded() { 3 } else { 1 })
        }
    }
}
