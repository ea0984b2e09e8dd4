mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "swdual",
    version,
    about = "Exact computations with IS_n, I*_k, PI*_k and their tensor-power dualities"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Lift every size guard.
    #[arg(long, global = true)]
    pub unsafe_no_guards: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemigroupArg {
    Is,
    Istar,
    Pistar,
    Hat,
    Tilde,
    #[value(alias = "ck")]
    Composition,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    #[value(name = "V", alias = "v")]
    V,
    #[value(name = "U", alias = "u")]
    U,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    Hat,
    Tilde,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    LeftIs,
    RightIstar,
    RightPistar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every element of a semigroup.
    Enumerate(EnumerateArgs),
    /// Multiply two elements.
    Multiply(MultiplyArgs),
    /// Print the matrix of an element on a tensor power.
    Act(ActArgs),
    /// Compute the commutant of one side of a duality.
    Commutant(CommutantArgs),
    /// Check the duality theorems and the basis-change identities.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub semigroup: SemigroupArg,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MultiplyArgs {
    #[arg(long, value_enum)]
    pub semigroup: SemigroupArg,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Args, Debug)]
pub struct ActArgs {
    #[arg(long, value_enum)]
    pub space: SpaceArg,
    /// Rule for `PI*_k` elements on `U`.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Read the element as a member of this semigroup; inferred when absent.
    #[arg(long, value_enum)]
    pub semigroup: Option<SemigroupArg>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    pub element: String,
}

#[derive(Args, Debug)]
pub struct CommutantArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub space: SpaceArg,
    #[arg(long, value_enum)]
    pub side: SideArg,
    /// Also print a basis of the commutant.
    #[arg(long)]
    pub basis: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `IS_n` against `I*_k` on `V^{⊗k}`.
    #[arg(long)]
    pub thm1: bool,
    /// `IS_n` against `PI*_k` on `U^{⊗k}`.
    #[arg(long)]
    pub thm2: bool,
    /// The basis-change identities and isomorphisms on `U^{⊗k}`.
    #[arg(long)]
    pub props: bool,
    /// Everything above.
    #[arg(long)]
    pub all: bool,
    /// Check the single cell `(n, k)`.
    #[arg(long, requires = "k")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub k: Option<usize>,
    #[arg(long, conflicts_with = "n")]
    pub max_n: Option<usize>,
    #[arg(long, conflicts_with = "k")]
    pub max_k: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            if let Err(e) = render::emit(&cli, &outcome.output) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, commands::CliError::Core(swdual::Error::Guard { .. })) {
                eprintln!("hint: pass --unsafe-no-guards to lift the size limits");
            }
            ExitCode::from(2)
        }
    }
}
