use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Format;

#[derive(Parser)]
#[command(name = "meanconvex", version)]
#[command(
    about = "Check convexity and Popoviciu-type inequalities for generalized means on samples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one class or three-point inequality for a function
    Verify {
        #[command(flatten)]
        claim: ClaimArgs,
        #[command(flatten)]
        sampling: SampleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Measure every catalogued example and equality statement
    Audit {
        #[arg(long, value_enum)]
        only: Option<OnlyFilter>,
        #[command(flatten)]
        sampling: SampleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Look for a counterexample and shrink it
    Search {
        /// `hlawka` or `hlawka-reversed` instead of a theorem or class
        #[arg(long, conflicts_with_all = ["theorem", "class"])]
        target: Option<String>,
        #[command(flatten)]
        claim: ClaimArgs,
        /// Maximum number of evaluations
        #[arg(long, default_value_t = meanconvex::search::DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        sampling: SampleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Additivity of h and f, and the nine-class matrix for f
    Classify {
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value = "identity")]
        h: String,
        #[arg(long)]
        domain: Option<String>,
        #[command(flatten)]
        sampling: SampleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generalized arithmetic, geometric and harmonic means of two numbers
    Means {
        #[arg(long, default_value = "identity")]
        h: String,
        #[arg(long, default_value_t = 0.5)]
        t: f64,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = meanconvex::DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Clone, Debug)]
pub struct ClaimArgs {
    /// Three-point inequality: AA, AG, AH, GA, GG, GH, HA, HG, HH
    #[arg(long, conflicts_with = "class")]
    pub theorem: Option<String>,
    /// Defining two-point inequality, e.g. AG or A_tG_h
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long, default_value = "convex")]
    pub sense: String,
    /// identity, power:<r>, reciprocal, one
    #[arg(long, default_value = "identity")]
    pub h: String,
    /// Function name, e.g. square, cosh, power:3, affine:2,3
    #[arg(long)]
    pub f: Option<String>,
    /// Sampling box `lo,hi`, intersected with the function's domain
    #[arg(long, allow_hyphen_values = true)]
    pub domain: Option<String>,
}

#[derive(Args, Clone, Debug)]
pub struct SampleArgs {
    /// Grid points per axis
    #[arg(long, default_value_t = 33)]
    pub grid: usize,
    /// Grid points for t
    #[arg(long, default_value_t = 17)]
    pub t_grid: usize,
    /// Seeded random samples after the grid
    #[arg(long, default_value_t = 10_000)]
    pub random: usize,
    /// Overridden by MEANCONVEX_SEED
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Relative tolerance
    #[arg(long, default_value_t = meanconvex::DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Clone, Debug)]
pub struct OutputArgs {
    /// Write the JSON report here
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write witnesses as CSV here
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Format of standard output
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum OnlyFilter {
    EqualityFamilies,
    Suspect,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, output) = match cli.command {
        Command::Verify {
            claim,
            sampling,
            output,
        } => (commands::verify(&claim, &sampling), output),
        Command::Audit {
            only,
            sampling,
            output,
        } => (commands::audit(only, &sampling), output),
        Command::Search {
            target,
            claim,
            budget,
            sampling,
            output,
        } => (
            commands::search(target.as_deref(), &claim, budget, &sampling),
            output,
        ),
        Command::Classify {
            f,
            h,
            domain,
            sampling,
            output,
        } => (
            commands::classify(f.as_deref(), &h, domain.as_deref(), &sampling),
            output,
        ),
        Command::Means {
            h,
            t,
            a,
            b,
            tol,
            output,
        } => (commands::means(&h, t, a, b, tol), output),
    };
    match output::emit(&outcome, &output) {
        Ok(()) => ExitCode::from(outcome.exit),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
