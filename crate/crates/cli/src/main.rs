use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dialg::{
    cmd_census, cmd_check, cmd_classify2, cmd_info, cmd_iso, cmd_leibniz, cmd_op, cmd_quotient,
    search_bound, CommandResult, EXIT_INPUT,
};

/// Exact computations with associative dialgebras.
#[derive(Parser)]
#[command(name = "dialg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify associativity of both products and the three dialgebra axioms.
    Check { file: PathBuf },
    /// Product-space and annihilator dimensions, bar-unit existence.
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a two-dimensional dialgebra.
    Classify2 {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for an isomorphism between two dialgebras.
    Iso { a: PathBuf, b: PathBuf },
    /// Enumerate all dialgebras over GF(p) as JSON lines, one per class.
    Census {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// The Leibniz algebra `[x, y] = x⊣y − y⊢x`.
    Leibniz { file: PathBuf },
    /// The opposite dialgebra.
    Op { file: PathBuf },
    /// The quotient by the ideal spanned by `--ideal "1,0;0,1"`.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
}

fn run(cmd: Command) -> CommandResult {
    match cmd {
        Command::Check { file } => cmd_check(&file),
        Command::Info { file, json } => cmd_info(&file, json),
        Command::Classify2 { file, json } => cmd_classify2(&file, json),
        Command::Iso { a, b } => match search_bound() {
            Ok(bound) => cmd_iso(&a, &b, bound),
            Err(msg) => CommandResult {
                exit_code: EXIT_INPUT,
                report: format!("error: {msg}\n"),
            },
        },
        Command::Census { prime, dim } => cmd_census(prime, dim),
        Command::Leibniz { file } => cmd_leibniz(&file),
        Command::Op { file } => cmd_op(&file),
        Command::Quotient { file, ideal } => cmd_quotient(&file, &ideal),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    if result.exit_code == EXIT_INPUT {
        eprint!("{}", result.report);
    } else {
        print!("{}", result.report);
    }
    ExitCode::from(result.exit_code as u8)
}
