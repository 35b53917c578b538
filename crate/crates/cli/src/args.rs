use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "prunix", version, about = "Convex geometries, pruning processes and partial-assignment posets")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Axiom checks on a family, feasible family or word list.
    Check(CheckArgs),
    /// Build families and rooted sets.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Closure and extreme points of a set.
    Closure(ClosureArgs),
    /// Evaluate the weight identity over the closed sets of a family.
    Identity(IdentityArgs),
    /// Draw from the product measure or the closure pushforward.
    #[command(subcommand)]
    Sample(SampleCommand),
    /// Lattice of closed sets.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Run removal rules on graphs, hypergraphs and rooted sets.
    Prune(PruneArgs),
    /// Partial assignments of a CNF formula.
    Sat(SatArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CheckMode {
    /// Convex-geometry axioms.
    Axioms,
    /// Intervals [ex(A), A] partition the Boolean lattice.
    Partition,
    /// Axioms, partition and identity side by side.
    Classify,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Set-family JSON (closed sets).
    #[arg(long, value_name = "FILE", required_unless_present_any = ["feasible", "words"])]
    pub family: Option<PathBuf>,

    /// Set-family JSON read as feasible sets; checks the antimatroid axioms.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "words"])]
    pub feasible: Option<PathBuf>,

    /// Word-list JSON; checks the antimatroid word axioms.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "feasible"])]
    pub words: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = CheckMode::Axioms)]
    pub mode: CheckMode,

    /// Random weight vectors tried by `--mode classify`.
    #[arg(long, default_value_t = 8)]
    pub trials: usize,
}

#[derive(Subcommand, Debug)]
pub enum GenerateCommand {
    /// Closed sets of the geometry generated by rooted circuits.
    Circuits {
        #[arg(long, value_name = "FILE")]
        rooted: PathBuf,
    },
    /// Closed sets of the geometry generated by paths.
    Paths {
        #[arg(long, value_name = "FILE")]
        rooted: PathBuf,
    },
    /// Sets that are full with respect to the rooted sets in the file.
    Full {
        #[arg(long, value_name = "FILE")]
        rooted: PathBuf,
    },
    /// Rooted circuits of a geometry.
    RootedCircuits {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
    },
    /// Complements of every member.
    Dual {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
    },
    /// Every subset of a ground set.
    Boolean {
        /// Comma-separated labels.
        #[arg(long, value_delimiter = ',', required = true)]
        ground: Vec<String>,
    },
    /// Feasible words of a feasible family.
    Language {
        #[arg(long, value_name = "FILE")]
        feasible: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// A random circuit-generated geometry.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        circuits: usize,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

#[derive(Args, Debug)]
pub struct ClosureArgs {
    #[arg(long, value_name = "FILE")]
    pub family: PathBuf,

    /// Labels, comma-separated; empty for the empty set.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,

    /// Also report the interval [ex(A), A] containing the set.
    #[arg(long)]
    pub interval: bool,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    /// `label=value,...` or one value for every element.
    #[arg(long = "p", value_name = "WEIGHTS", conflicts_with_all = ["weights", "indicator"])]
    pub p: Option<String>,

    /// Weight JSON `{"p": {"a": 0.3, ...}}`.
    #[arg(long, value_name = "FILE", conflicts_with = "indicator")]
    pub weights: Option<PathBuf>,

    /// Indicator weights: `p = 0` on this set and 1 elsewhere.
    #[arg(long, value_name = "SET")]
    pub indicator: Option<String>,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long, value_name = "FILE")]
    pub family: PathBuf,

    #[command(flatten)]
    pub weights: WeightArgs,

    /// Exact rational arithmetic.
    #[arg(long)]
    pub exact: bool,

    /// List each interval and its term before the sum.
    #[arg(long)]
    pub terms: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Statistic {
    One,
    ClosureSize,
    Top,
}

#[derive(Subcommand, Debug)]
pub enum SampleCommand {
    /// Independent deletions: each element is removed with probability p.
    Pi1 {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, default_value_t = 1)]
        samples: usize,
    },
    /// Exact law of the closure of a π₁ sample, optionally against an empirical one.
    Pi2 {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        /// Empirical samples to compare with (0 for none).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Compare both sides of the expectation of a closure-invariant statistic.
        #[arg(long, value_enum)]
        expect: Option<Statistic>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    /// Size and distributivity properties.
    Props {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        /// Largest k for the k-distributive law.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Graphviz DOT of the Hasse diagram.
    Dot {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        /// Label each cover with the removed elements.
        #[arg(long)]
        labels: bool,
    },
}

#[derive(Args, Debug)]
pub struct PruneArgs {
    /// `leaf`, `kcore:K`, `identifiable`, `circuits` or `paths`.
    #[arg(long)]
    pub rule: Option<String>,

    /// Edge list for `leaf` and `kcore`.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,

    /// Hyperedge list for `identifiable`.
    #[arg(long, value_name = "FILE")]
    pub hypergraph: Option<PathBuf>,

    /// Rooted-set JSON for `circuits` and `paths`.
    #[arg(long, value_name = "FILE")]
    pub rooted: Option<PathBuf>,

    #[command(subcommand)]
    pub action: PruneAction,
}

#[derive(Subcommand, Debug)]
pub enum PruneAction {
    /// Remove elements until none is removable.
    Run {
        /// Never remove these.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        keep: String,
        /// Removal priority, comma-separated; unlisted elements follow in ground order.
        #[arg(long, default_value = "")]
        order: String,
    },
    /// Smallest reachable set containing the given set.
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Every valid removal sequence up to a length.
    Words {
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Minimal sets whose removal must precede an element's.
    Precedences {
        #[arg(long)]
        element: String,
    },
    /// Whether the rule is a pruning process.
    Check,
    /// Reachable sets as a family.
    Geometry,
    /// Rooted sets encoding a graph rule.
    Encode {
        #[arg(long, value_enum, default_value_t = Encoding::Paths)]
        r#as: Encoding,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Encoding {
    Circuits,
    Paths,
}

#[derive(Args, Debug)]
pub struct SatArgs {
    /// DIMACS CNF file.
    #[arg(long, value_name = "FILE", global = true)]
    pub cnf: Option<PathBuf>,

    /// Partial assignment such as `11*0` or `1,1,*,0`.
    #[arg(long, global = true)]
    pub assign: Option<String>,

    #[command(subcommand)]
    pub action: SatAction,
}

#[derive(Subcommand, Debug)]
pub enum SatAction {
    /// Whether the assignment is valid.
    Validity,
    /// Starred, unconstrained and constrained variables.
    Classify,
    /// Valid partial assignments below the assignment.
    Poset,
    /// Closed sets over the numeric variables.
    Geometry {
        /// Print the generating rooted circuits instead.
        #[arg(long)]
        circuits: bool,
    },
    /// Weight of one valid partial assignment.
    Weight {
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Sum of weights below the assignment.
    Identity {
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Sum of weights over every valid partial assignment.
    Total {
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Star unconstrained variables until none is left.
    Core,
    /// Compare the posets below two assignments with the one below their agreement.
    Intersect {
        #[arg(long = "with")]
        other: String,
    },
    /// The formula in canonical DIMACS.
    Dimacs,
}
