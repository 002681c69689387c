mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{Failure, Format};

#[derive(Parser)]
#[command(
    name = "lorenz",
    version,
    about = "Lorenz words, symbolic Farey trees, star products and braids"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SideArg {
    Minus,
    Plus,
}

#[derive(Subcommand)]
enum Command {
    /// Print one level of a symbolic Farey tree.
    Tree {
        #[arg(long, value_enum, default_value_t = SideArg::Minus)]
        side: SideArg,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Print every level up to the depth.
        #[arg(long)]
        all: bool,
    },
    /// Inspect and compare words.
    #[command(subcommand)]
    Word(WordCommand),
    /// Farey neighbours, Farey pairs and admissibility.
    #[command(subcommand)]
    Pair(PairCommand),
    /// Star products, factorization and classification.
    #[command(subcommand)]
    Star(StarCommand),
    /// Lorenz braid of one or more periodic orbits.
    Braid {
        #[arg(required = true)]
        words: Vec<String>,
        /// Upper bound on q when searching torus knots with the same invariants.
        #[arg(long, default_value_t = 100)]
        q_bound: u64,
    },
    /// Build or certify a single family instance.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Certify a sweep of family instances.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
pub enum WordCommand {
    /// Everything below in one report.
    Show { word: String },
    /// L-maximal and R-minimal representatives of the cyclic class.
    Canonicalize { word: String },
    /// Compare two words in the order L < 0 < R.
    Compare { a: String, b: String },
    /// Cyclic syllables and trip number.
    Trip { word: String },
    /// Even distribution and the standard word it permutes, if any.
    Balance { word: String },
    /// Shift a word k times.
    Shift { word: String, k: usize },
}

#[derive(Subcommand)]
pub enum PairCommand {
    /// Are two L-maximal words Farey neighbours?
    Neighbors { a: String, b: String },
    /// Build the Farey pair (X, m(S)).
    Make { x: String, s: String },
    /// Kneading admissibility of (X, Y).
    Admissible { x: String, y: String },
}

#[derive(Subcommand)]
pub enum StarCommand {
    /// (X, Y) * S
    Product { x: String, y: String, s: String },
    /// All ways of writing a word as a star product.
    Factorize { word: String },
    /// Torus syllable-permutation report for (X, Y) * S over a Farey pair.
    Classify { x: String, y: String, s: String },
    /// Random products over Farey pairs, checking counts and the range of r.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

#[derive(Subcommand)]
pub enum FamilyCommand {
    /// Words and arithmetic of one instance.
    Generate(InstanceArgs),
    /// Certificate of one instance.
    Verify(InstanceArgs),
    /// The L/R mirror of one instance.
    Mirror(InstanceArgs),
}

#[derive(Args)]
pub struct InstanceArgs {
    #[arg(long)]
    pub id: u8,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub n: u64,
    /// Use the L/R mirror of the instance.
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of family ids.
    #[arg(long, default_value = "all")]
    pub families: String,
    #[arg(long, default_value = "1..3")]
    pub k: String,
    #[arg(long, default_value = "2..9")]
    pub n: String,
    /// Certify the mirrored instances as well.
    #[arg(long)]
    pub mirrors: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let result = match cli.command {
        Command::Tree { side, depth, all } => commands::cmd_tree(side, depth, all),
        Command::Word(c) => commands::cmd_word(c),
        Command::Pair(c) => commands::cmd_pair(c),
        Command::Star(c) => commands::cmd_star(c),
        Command::Braid { words, q_bound } => commands::cmd_braid(&words, q_bound),
        Command::Family(c) => commands::cmd_family(c),
        Command::Verify(args) => commands::cmd_verify(&args),
    };
    match result {
        Ok(out) => out.emit(cli.format, echo),
        Err(Failure(msg)) => output::emit_error(cli.format, echo, &msg),
    }
}
