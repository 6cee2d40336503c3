use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod output;

use output::Failure;

/// Exact computations with matrix realizations of homogeneous cones.
#[derive(Debug, Parser)]
#[command(name = "conelab", version)]
struct Cli {
    /// Seed for the rational sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Add display-only decimal renderings next to rational results.
    #[arg(long, global = true)]
    approx: bool,
    /// Numerator bound for sampled rationals.
    #[arg(long, global = true, default_value_t = 100)]
    num_bound: i64,
    /// Denominator bound for sampled rationals.
    #[arg(long, global = true, default_value_t = 10)]
    den_bound: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// σ matrix and invariant degrees from a dimension table.
    Sigma(SigmaArgs),
    /// Build the rank-r doubling family and check the degree 2^(r-1) claim.
    Theorem {
        #[arg(long)]
        rank: usize,
    },
    /// Emit the rank-r doubling family as realization JSON.
    Iterate {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one doubling step to a realization.
    Double {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide membership of a point by block LDL.
    Member {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    /// Check the closure conditions of a realization.
    Verify {
        #[arg(long)]
        cone: PathBuf,
    },
    /// Rank-3 cones from composition families.
    #[command(subcommand)]
    Rank3(Rank3Command),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SigmaArgs {
    /// Dimension table JSON: {"r": .., "dims": {"d21": .., ..}}.
    #[arg(long)]
    dims: Option<PathBuf>,
    /// Rank-3 table with (d32, d21, d31) = (r, s, n).
    #[arg(long, num_args = 3, value_names = ["R", "S", "N"])]
    family_dims: Option<Vec<usize>>,
    /// Table d_kj = 2^(k-j) of the given rank.
    #[arg(long)]
    powers_of_two: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Rank3Command {
    /// Generate a square family (r, n, n), or the bundled (3, 5, 7) family.
    Family {
        #[arg(long, required_unless_present = "fixture")]
        r: Option<usize>,
        #[arg(long, required_unless_present = "fixture")]
        n: Option<usize>,
        /// Emit the bundled (3, 5, 7) family.
        #[arg(long, conflicts_with_all = ["r", "n"])]
        fixture: bool,
    },
    /// Check the composition relations of a family.
    Verify {
        #[arg(long)]
        family: PathBuf,
    },
    /// Realization of the cone (or of its dual) attached to a family.
    Build {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        dual: bool,
    },
    /// Degree patterns for a triple (r, s, n).
    Classify {
        #[arg(long, num_args = 3, value_names = ["R", "S", "N"])]
        triple: Vec<usize>,
    },
    /// Closed-form determinant of a point, checked against elimination.
    Det {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        point: PathBuf,
        /// The point belongs to the dual realization.
        #[arg(long)]
        dual: bool,
    },
    /// Check the coupling decomposition on random interior pairs.
    Duality {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    // usage errors are input errors (exit 1); help and version exit 0
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = commands::Context {
        seed: cli.seed,
        approx: cli.approx,
        num_bound: cli.num_bound,
        den_bound: cli.den_bound,
    };
    let result = match cli.command {
        Command::Sigma(a) => commands::sigma(a.dims.as_deref(), a.family_dims.as_deref(), a.powers_of_two),
        Command::Theorem { rank } => commands::theorem(rank),
        Command::Iterate { rank, out } => commands::iterate(rank, out.as_deref()),
        Command::Double { input, out } => commands::double(&input, out.as_deref()),
        Command::Member { cone, point } => commands::member(&ctx, &cone, &point),
        Command::Verify { cone } => commands::verify(&cone),
        Command::Rank3(cmd) => match cmd {
            Rank3Command::Family { r, n, fixture } => commands::rank3_family(r, n, fixture),
            Rank3Command::Verify { family } => commands::rank3_verify(&family),
            Rank3Command::Build { family, dual } => commands::rank3_build(&family, dual),
            Rank3Command::Classify { triple } => commands::rank3_classify(&triple),
            Rank3Command::Det { family, point, dual } => commands::rank3_det(&ctx, &family, &point, dual),
            Rank3Command::Duality { family, samples } => commands::rank3_duality(&ctx, &family, samples),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

impl Failure {
    fn report(self) -> ExitCode {
        if let Some(v) = &self.output {
            print!("{}", conelab::json::to_canonical_string(v));
        }
        eprintln!("error: {}", self.message);
        ExitCode::from(self.kind.code())
    }
}
