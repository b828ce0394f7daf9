use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semihom::gadgets::PairMode;
use semihom::oracle::DEFAULT_LIMIT;
use semihom::Objective;

#[derive(Debug, Parser)]
#[command(
    name = "semihom",
    version,
    about = "Minimum and maximum cost homomorphisms to semicomplete multipartite digraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the complexity of a target digraph.
    Classify {
        target: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve an instance: polynomial algorithm when one applies, exact search otherwise.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        exact: ExactArgs,
        /// Use exact search even when a polynomial algorithm applies.
        #[arg(long)]
        force_exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve an instance with an exact solver only.
    Oracle {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        exact: ExactArgs,
        #[arg(long, value_enum, default_value_t = Method::Backtracking)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the weighted homomorphic product for external independent-set tools.
    Product {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a hardness reduction instance from an undirected graph.
    Reduce {
        #[arg(value_enum)]
        kind: Kind,
        graph: PathBuf,
        /// Prefix for the written files: `<out>.d.dg`, `<out>.h.dg`, `<out>.costs.tsv`, `<out>.json`.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = PairModeArg::NonAdjacent)]
        pair_mode: PairModeArg,
        /// Also charge colours 3 and 4 on source vertices (c3tail only).
        #[arg(long)]
        strict_gadget_costs: bool,
        /// Solve the instance exactly and compare against brute-force graph invariants.
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Write a random instance against a named target.
    Generate {
        /// `ac4`, `c3tail`, `bt5`, `tt:k`, `ttminus:k` or `cycle:k`.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, value_enum, default_value_t = Shape::Dag)]
        shape: Shape,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        max_cost: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Prefix for `<out>.d.dg`, `<out>.h.dg` and `<out>.costs.tsv`.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Target digraph H.
    pub target: PathBuf,
    /// Input digraph D.
    pub input: PathBuf,
    /// Cost table, rows for D, columns for H.
    pub costs: PathBuf,
    #[arg(long, conflicts_with = "max")]
    pub min: bool,
    #[arg(long)]
    pub max: bool,
    /// Colour domains, `allow <vertex> <colour>...` per line.
    #[arg(long)]
    pub allow: Option<PathBuf>,
}

impl InstanceArgs {
    pub fn objective(&self) -> Objective {
        if self.max {
            Objective::Max
        } else {
            Objective::Min
        }
    }
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    /// Largest `|V(D)| * |V(H)|` the exact solvers accept.
    #[arg(long, default_value_t = DEFAULT_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Backtracking,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ac,
    C3tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairModeArg {
    NonAdjacent,
    Adjacent,
}

impl From<PairModeArg> for PairMode {
    fn from(p: PairModeArg) -> Self {
        match p {
            PairModeArg::NonAdjacent => PairMode::NonAdjacent,
            PairModeArg::Adjacent => PairMode::Adjacent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Dag,
    Digraph,
    Bipartite,
}
