//! `trbcast`: command-line front end for `broadcast-core`.
//!
//! Exit status is 0 on success or a true verdict, 1 on a false verdict and 2
//! on errors. Data goes to stdout (or `--output`); progress goes to stderr.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::Format;

#[derive(Parser)]
#[command(name = "trbcast", version, about = "Exact tools for (t,r) broadcast domination")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for parallel searches; 0 picks one per core.
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,

    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Number of points of Z^n at l1 distance exactly d.
    Shell { n: usize, d: usize },
    /// Number of points of Z^n at l1 distance at most d.
    Ball { n: usize, d: usize },
    /// Generating-function coefficients for shells and balls.
    Genfunc {
        /// One of B_bivariate, S_bivariate, B_fixed_d, B_fixed_n, S_fixed_d, S_fixed_n.
        kind: String,
        /// The fixed radius or dimension for univariate kinds.
        #[arg(long)]
        fixed: Option<usize>,
        /// Largest coefficient index.
        #[arg(long = "max")]
        max_index: usize,
    },
    /// Image of a point of B_n(d) under the bijection onto B_d(n).
    Bijection {
        /// Comma-separated coordinates, e.g. 0,2,0,-3.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Delannoy number D(m,k).
    Delannoy { m: usize, k: usize },
    /// Unwasted coverage of one broadcast on Z^n.
    Coverage { n: usize, t: u32, r: u32 },
    /// Coverage lower bound on the domination number of a finite grid.
    LowerBound {
        /// Comma-separated side lengths, e.g. 5,5.
        #[arg(long)]
        dims: String,
        t: u32,
        r: u32,
    },
    /// Largest period a dominating pattern on Z^n can have.
    MaxD { n: usize, t: u32, r: u32 },
    /// Whether the tower T(d,e) dominates Z^2.
    TowerCheck { t: u32, r: u32, d: u64, e: u64 },
    /// Row-by-row receptions of T(d,e) over one period.
    TowerTable { t: u32, r: u32, d: u64, e: u64 },
    /// Sparsest dominating tower.
    TowerSearch { t: u32, r: u32 },
    /// Reciprocal minimum tower densities for all 1 <= r <= t <= tmax.
    Table3 {
        #[arg(long, default_value_t = 9)]
        tmax: u32,
    },
    /// Whether a sublattice pattern dominates Z^n.
    LatticeCheck {
        t: u32,
        r: u32,
        /// Matrix rows separated by ';', entries by ','; the columns generate the lattice.
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
        /// Largest index allowed.
        #[arg(long, default_value_t = broadcast_core::pattern::DEFAULT_INDEX_CAP)]
        cap: u64,
    },
    /// Sparsest dominating 3D tower lattice.
    #[command(name = "lattice-search3d")]
    LatticeSearch3d {
        t: u32,
        r: u32,
        /// Largest index tried.
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
    /// Exact domination number of a graph expression such as "C4*C4".
    Gamma {
        expr: String,
        t: u32,
        r: u32,
        /// Largest set size tried.
        #[arg(long)]
        size_cap: Option<usize>,
        /// Search nodes allowed before giving up.
        #[arg(long, default_value_t = broadcast_core::graph::DEFAULT_WORK_BUDGET)]
        budget: u64,
    },
    /// Receptions of a given broadcast set on a graph expression.
    CheckSet {
        expr: String,
        t: u32,
        r: u32,
        /// Vertex labels separated by ';', coordinates by ',' (0-based), e.g. "0,2;2,0".
        #[arg(long)]
        set: String,
    },
    /// Domination number 2 of the cycle C_{2(t-r+1)}.
    #[command(name = "verify-lemma2")]
    VerifyLemma2 { t: u32, r: u32 },
    /// Vizing-analog counterexample on C_n x C_n.
    VerifyTorus { t: u32, r: u32 },
    /// Checks both generalized Vizing inequalities on pairs of graphs.
    VizingScan {
        /// File with one pair per line, "G,H" or "G H"; '#' starts a comment.
        #[arg(long)]
        pairs: PathBuf,
        t: u32,
        r: u32,
    },
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| format!("cannot start {} threads: {e}", cli.threads))?;
    }
    let report = commands::execute(cli.command, !cli.quiet).map_err(|e| e.to_string())?;
    let result = match &cli.output {
        Some(path) => File::create(path)
            .and_then(|f| report.emit(cli.format, &mut BufWriter::new(f)))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => report.emit(cli.format, &mut io::stdout().lock()).or_else(|e| {
            if e.kind() == io::ErrorKind::BrokenPipe {
                Ok(())
            } else {
                Err(format!("cannot write output: {e}"))
            }
        }),
    };
    result?;
    Ok(ExitCode::from(report.exit))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io::stderr(), "error: {msg}");
            ExitCode::from(2)
        }
    }
}
