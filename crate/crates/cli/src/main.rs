//! Single entry point for the exact L-value laboratory: point counting and
//! zeta reconstruction, Euler factors and leading terms, weak Hodge
//! cohomology and archimedean factors, and the conjecture checks.
//!
//! Exit codes: 0 on success (all verdicts pass), 1 when a check fails,
//! 2 on usage or input errors.

mod approx;
mod commands;
mod output;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "mlv", version, about = "Exact L-functions, zeta functions and special-value checks")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format (csv only for `conj suite`)
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Append non-normative decimal approximations to exact values
    #[arg(long, global = true)]
    approx: bool,
}

#[derive(Debug, Subcommand)]
enum Group {
    /// Point counting and zeta reconstruction over finite fields
    Zeta {
        #[command(subcommand)]
        cmd: ZetaCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Euler factors, leading Laurent terms, epsilon constants
    Lfun {
        #[command(subcommand)]
        cmd: LfunCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Weak Hodge cohomology and archimedean factors
    Hodge {
        #[command(subcommand)]
        cmd: HodgeCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Conjecture checks on motivic datum files and the shipped catalog
    Conj {
        #[command(subcommand)]
        cmd: ConjCmd,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
enum ZetaCmd {
    /// Count points of a variety over F_{p^k} by enumeration
    Count {
        /// Variety spec file: {kind, ambientDim, equations}
        #[arg(long)]
        spec: std::path::PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        /// Enumeration budget in candidate points (or MLV_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Count over F_p, F_{p^2}, ... and reconstruct Z(t) = N(t)/D(t)
    Reconstruct {
        #[arg(long)]
        spec: std::path::PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, value_name = "D1")]
        deg_num: usize,
        #[arg(long, value_name = "D2")]
        deg_den: usize,
        /// How many counts N_1..N_m to enumerate
        #[arg(long, value_name = "M")]
        counts: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum LfunCmd {
    /// Euler factor det(Id - phi t) of a Frobenius module file {p, f, matrix}
    Factor {
        #[arg(long)]
        module: std::path::PathBuf,
    },
    /// Leading Laurent term of a zeta word file at an integer point
    Leading {
        /// Word file: {shifts: [[a, e], ...], factors: [...]}
        #[arg(long)]
        word: std::path::PathBuf,
        #[arg(long, default_value = "0")]
        at: i64,
    },
    /// Epsilon constants (a, b) with L(V, s) = a b^s L(V^dual, -s)
    Epsilon {
        #[arg(long)]
        module: std::path::PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum HodgeCmd {
    /// Weak Hodge cohomology dimensions and generators of a Hodge datum
    Weak {
        #[arg(long, conflicts_with = "tate")]
        datum: Option<std::path::PathBuf>,
        /// Use the built-in Tate object 1(n)
        #[arg(long, value_name = "N")]
        tate: Option<i64>,
    },
    /// Archimedean Gamma factor and its leading data at an integer point
    Arch {
        #[arg(long, conflicts_with = "tate")]
        datum: Option<std::path::PathBuf>,
        #[arg(long, value_name = "N")]
        tate: Option<i64>,
        #[arg(long, default_value = "0")]
        at: i64,
    },
}

#[derive(Debug, Subcommand)]
enum ConjCmd {
    /// Pole order and special value checks on a datum file
    Check {
        file: std::path::PathBuf,
        #[arg(long, default_value = "0")]
        at: i64,
    },
    /// Run every check on the shipped catalog
    Suite {
        /// Run on the shipped catalog (the default)
        #[arg(long)]
        catalog: bool,
    },
    /// Finite-field special value check (Theorem-style L* = (log p)^{-chi})
    Fp { file: std::path::PathBuf },
    /// Soule pole-order check at a twist
    Soule {
        file: std::path::PathBuf,
        #[arg(long, default_value = "0")]
        at: i64,
    },
    /// Triangle multiplicativity check on three datum files
    Triangle {
        f1: std::path::PathBuf,
        f2: std::path::PathBuf,
        f3: std::path::PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.group {
        Group::Zeta { cmd, common } => commands::run_zeta(cmd, &common),
        Group::Lfun { cmd, common } => commands::run_lfun(cmd, &common),
        Group::Hodge { cmd, common } => commands::run_hodge(cmd, &common),
        Group::Conj { cmd, common } => commands::run_conj(cmd, &common),
    };
    let code = match code {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}
