//! Command-line arguments.

use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "singcat", version, about = "Koszul modules, reductions and matrix factorizations over exact rings")]
pub struct Cli {
    /// Report format; `json` is the stable machine interface
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Inputs are file paths; a value starting with `{` is read as inline JSON.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Koszul complex K(B, f1, ..., fn)
    Koszul {
        #[arg(long)]
        ring: String,
        #[arg(long, value_delimiter = ',', required = true)]
        potentials: Vec<String>,
    },
    /// Check the identities of a complex, module, morphism or factorization
    #[command(group(ArgGroup::new("input").required(true).args(["complex", "module", "morphism", "mf"])))]
    Validate {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long)]
        mf: Option<String>,
    },
    /// Mapping cone of a module morphism or chain map
    Cone {
        #[arg(long)]
        morphism: String,
    },
    /// Tensor a strictly perfect complex with K(B, f1, ..., fn)
    Tensor {
        #[arg(long)]
        complex: String,
        #[arg(long, value_delimiter = ',', required = true)]
        potentials: Vec<String>,
    },
    /// External product of modules over disjoint variable sets
    Boxtensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Shorten a module to amplitude n+1
    Reduce {
        #[arg(long)]
        module: String,
        #[arg(long)]
        certify: bool,
        /// Directory receiving one subdirectory of JSON files per step
        #[arg(long)]
        emit_steps: Option<PathBuf>,
    },
    /// Fold an n=1 module into a matrix factorization
    Fold {
        #[arg(long)]
        module: String,
    },
    /// Unfold a matrix factorization into a module in degrees [-1, 0]
    Unfold {
        #[arg(long)]
        mf: String,
    },
    /// Cone of a closed even morphism of matrix factorizations
    MfCone {
        #[arg(long)]
        morphism: String,
    },
    /// Tensor product of matrix factorizations
    MfTensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Move a two-term module one degree down, swapping its maps
    Swap {
        #[arg(long)]
        module: String,
        /// Top degree of the window (defaults to the module's top degree)
        #[arg(long, allow_hyphen_values = true)]
        top: Option<i32>,
        #[arg(long)]
        certify: bool,
    },
    /// Homology of a complex, or of a module's underlying complex
    #[command(group(ArgGroup::new("input").required(true).args(["complex", "module"])))]
    Homology {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        module: Option<String>,
    },
    /// Run a bundled scenario
    Demo { name: String },
}
