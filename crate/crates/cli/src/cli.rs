use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "ordsize", version, about = "Order-size pairs, homogeneous sets and the related constructions")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct GlobalArgs {
    /// Seed for every randomized step (defaults to 0, which is logged)
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (defaults to all cores; results do not depend on it)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format on stdout and for the report file
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Directory for report files and manifest.json
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Evaluation budget for searches (unlimited when absent)
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Largest vertex count searched exactly for homogeneous sets
    #[arg(long, global = true)]
    pub exact_limit: Option<usize>,
    /// JSON config with any of: seed, threads, format, out, budget, exact_limit
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a hypergraph
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Edge counts realized by m-vertex subsets
    Spectrum {
        /// hypergraph file (.hg, or .json for the JSON mirror)
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        /// sample this many m-subsets instead of scanning all of them
        #[arg(long)]
        samples: Option<u64>,
        /// look for a single (m, f)-subset instead of the whole spectrum
        #[arg(long)]
        f: Option<u64>,
        /// largest C(n, m) scanned exhaustively
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Largest clique or independent set
    Homog {
        #[arg(long)]
        input: PathBuf,
    },
    /// Stepping-down: one stage, or down to pairs with split k
    Stepdown {
        #[arg(long)]
        input: PathBuf,
        /// length of the sequence X
        #[arg(long)]
        l: usize,
        /// split position; c(x_1..x_r) = χ(x_k, x_{k+1}). Omit for a single stage.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Explicit ordered graph of weight f with its substitution certificate
    Buildh {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, required_unless_present = "sweep")]
        f: Option<u128>,
        /// run f = 0, step, 2·step, ... up to C(m,r)/2
        #[arg(long, conflicts_with = "f")]
        sweep: bool,
        /// step of the sweep (default: about 200 values)
        #[arg(long, requires = "sweep")]
        step: Option<u128>,
        /// recheck weight, degrees, certificate and claims; exit 1 on failure
        #[arg(long)]
        check: bool,
    },
    /// Distinct-value counters and g_r
    Values {
        #[command(subcommand)]
        which: ValuesKind,
    },
    /// Density structures of a 3-graph
    Structure {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        /// star size and refined set size (default max(m, 3))
        #[arg(long)]
        s: Option<usize>,
        /// pair-chain block size (default s)
        #[arg(long)]
        t: Option<usize>,
        /// chain length (default m)
        #[arg(long)]
        chain_len: Option<usize>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
    },
    /// Oracle suites
    Verify {
        #[command(subcommand)]
        suite: VerifyKind,
    },
    /// Re-run the command recorded in a manifest and compare output digests
    Replay {
        #[arg(long)]
        manifest: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Cyclic triangles of a random tournament
    Cyclic {
        #[arg(long)]
        n: usize,
    },
    /// Copies of the colored pattern in a random pair coloring
    Gr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Every r-subset an edge with probability p
    Random {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum ValuesKind {
    /// Distinct values of the first cubic form
    Lemma32 {
        /// a,b,c,d,e (integers or fractions like 1/2)
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// m or a range lo..hi (inclusive)
        #[arg(long)]
        m: String,
    },
    /// Distinct values of the second form
    Lemma33 {
        #[arg(long)]
        m: String,
    },
    /// Compare the first form with the transformed general form
    Identity {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        m: String,
    },
    /// g_r(m) with an optimal partition
    GrTable {
        /// r or a range lo..hi (inclusive)
        #[arg(long)]
        r: String,
        /// print every m up to this value instead of only m = 2r
        #[arg(long)]
        mmax: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyKind {
    /// Cyclic-triangle bound, the six-vertex example and the G_5 scan
    Appendix {
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// number of G_5 colorings, seeded from --seed upward
        #[arg(long, default_value_t = 5)]
        colorings: u64,
    },
    /// Lift identity between edge counts and weighted totals
    Eq1 {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Blow-up closed forms against direct counts
    Blowup {
        #[arg(long, default_value_t = 500)]
        instances: u64,
    },
    /// Weight frames, the r = 10 pattern scan, weighted-subset search
    Weights {
        #[arg(long, default_value_t = 200)]
        graphs: u64,
    },
    /// Acceptance criteria; writes report.json
    Acceptance {
        /// comma-separated criterion ids (default: all)
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}
