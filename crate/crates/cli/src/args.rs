use clap::{Parser, Subcommand, ValueEnum};

pub const GRAMMAR: &str = "\
Input grammars:
  semigroup  comma-separated positive generators with gcd 1, e.g. 7,15
             (the text form <gens=7,15; ...> is accepted too)
  pattern    a linear form in x1..xn, e.g. x1+x2+x3-x4 or 10x1-7x2;
             every index from 1 to n must appear exactly once with a
             nonzero coefficient. A coefficient vector such as 1,1,-1
             and the zero pattern 0 are also accepted.";

#[derive(Debug, Parser)]
#[command(name = "sgpat", version, about = "Patterns on numerical semigroups", after_help = GRAMMAR)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Genus bound for `census` and `equiv`
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_genus: Option<u32>,

    /// Frobenius bound for `enumerate`
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_frobenius: Option<u32>,

    /// Search bound for `admits` on patterns that are not strongly admissible
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: Option<u32>,

    /// Print only the final result
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Admissibility classes, admissibility degree and boolean invariants
    Classify { pattern: String },
    /// Decide whether a semigroup admits a pattern
    Admits { semigroup: String, pattern: String },
    /// The p-closure, with every intermediate image
    Closure { semigroup: String, pattern: String },
    /// Minimal p-system of generators
    Psystem { semigroup: String, pattern: String },
    /// Apéry set with respect to λ (default: the multiplicity)
    Apery {
        semigroup: String,
        lambda: Option<i64>,
    },
    /// Apéry depth
    Depth { semigroup: String },
    /// Subtraction degree with its lower and upper bounds
    Subdeg { semigroup: String },
    /// The DAG of semigroups admitting a pattern, up to a Frobenius bound
    Enumerate {
        pattern: String,
        /// Emit Graphviz DOT (same as --format dot)
        #[arg(long)]
        dot: bool,
    },
    /// All semigroups up to a genus bound
    Census,
    /// Look for a semigroup admitting exactly one of two patterns
    Equiv { first: String, second: String },
    /// The semigroup <q,q+1> with an extra block below the conductor kq
    WitnessFamily { q: u32, k: u32 },
}
