use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Decide vanishing of VV modules for pairs of monomial ideals, find witnesses,
/// and cross-check graph, clutter, Jacobian and Rees-algebra criteria.
#[derive(Debug, Parser)]
#[command(name = "vava", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Recompute ideal arithmetic through the naive oracle and diff the results.
    #[arg(long, global = true)]
    pub brute_force: bool,

    /// Degree bound: VV search window, or the T-degree bound for Rees checks.
    #[arg(long, global = true, value_name = "D")]
    pub max_degree: Option<u32>,

    /// Work-unit budget for minor enumeration, fiber checks and the oracle.
    #[arg(long, global = true, value_name = "UNITS")]
    pub budget: Option<usize>,

    /// Print only the JSON report; suppress the summary on stderr.
    #[arg(long, global = true)]
    pub json_only: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide vanishing of the VV module of a pair `J ⊆ I` and list witnesses.
    Vv {
        #[arg(long, value_name = "FILE")]
        pair: PathBuf,
    },
    /// VV module of `J` inside its Jacobian ideal.
    VvSingle {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    #[command(subcommand)]
    Graph(GraphCommand),
    #[command(subcommand)]
    Clutter(ClutterCommand),
    /// Minors of the Jacobian matrix of a monomial ideal.
    Jacobian {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Minor size; defaults to the height of the ideal.
        #[arg(long, value_name = "R")]
        minor_size: Option<usize>,
        /// Compare the minors ideal with this monomial ideal.
        #[arg(long, value_name = "FILE")]
        target: Option<PathBuf>,
    },
    #[command(subcommand)]
    Rees(ReesCommand),
    /// Cross-check interreduced arithmetic against the naive oracle.
    OracleDiff {
        /// Diff the operations on this pair instead of random instances.
        #[arg(long, value_name = "FILE")]
        pair: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// Almost C3/P3-embedded predicates with an algebraic cross-check.
    Classify {
        #[arg(long, value_name = "FILE")]
        sub: PathBuf,
        #[arg(long = "super", value_name = "FILE")]
        host: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClutterCommand {
    /// Search for a torsion witness in the VV module of a facet ideal.
    Ttorsion {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(short = 't', default_value_t = 2)]
        t: usize,
        /// Minor size; defaults to the height of the facet ideal.
        #[arg(short = 'r')]
        r: Option<usize>,
        #[arg(long, value_name = "M")]
        m_max: Option<usize>,
    },
    /// Check vanishing for a subclutter of a complete d-partite clutter.
    Dpartite {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        sub: PathBuf,
    },
    /// Squarefree pair condition for `J` against the squarefree power of the maximal ideal.
    SqfreePairs {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReesCommand {
    /// Verify a proposed presentation of the Rees algebra of `I/J`.
    Present {
        #[arg(long, value_name = "FILE")]
        pair: PathBuf,
        #[arg(long)]
        family: String,
    },
    /// Degrees in which the Rees kernel of `I/J` needs new generators.
    Rt {
        #[arg(long, value_name = "FILE")]
        pair: PathBuf,
    },
}
