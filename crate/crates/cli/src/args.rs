use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "holotriple", version, about = "Symplectic triple systems, invariant connections and holonomy")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the triple-system identities, simplicity and the Jacobi identity of g(T).
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        /// Also write the structure constants to this file.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Holonomy algebra of an invariant connection.
    Holonomy {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        connection: ConnectionArgs,
    },
    /// One curvature operator R(e_i, e_j) on the basis of m.
    Curvature {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        connection: ConnectionArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Ricci block constants and scalar curvature.
    Ricci {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        connection: ConnectionArgs,
    },
    /// Holonomy dimension table for the Levi-Civita, distinguished and canonical connections.
    Table {
        /// Every case with dim m ≤ 35 (the default selection).
        #[arg(long)]
        all_light: bool,
        /// A single case, e.g. `symplectic(n=2)`, `special(w=1)`, `g2`, `e7`. Repeatable.
        #[arg(long = "case")]
        cases: Vec<String>,
        /// Include e6, e7 and e8 in the default selection, and allow heavy `--case` values.
        #[arg(long)]
        allow_heavy: bool,
        /// Print a JSON record instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Symplectic,
    Orthogonal,
    Special,
    Exceptional,
    File,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum CrossArg {
    #[default]
    Normalized,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConnectionArg {
    LeviCivita,
    Distinguished,
    Canonical,
    Family,
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Symplectic type: dim T = 2n.
    #[arg(long)]
    pub n: Option<usize>,
    /// Orthogonal and special type: dim W.
    #[arg(long)]
    pub w: Option<usize>,
    /// Exceptional type: scalar, unarion, binarion, quaternion-split, zorn
    /// (or g2, f4, e6, e7, e8; `octonion` for zorn).
    #[arg(long = "J", id = "jordan")]
    pub jordan: Option<String>,
    /// Structure-constant file for `--family file`.
    #[arg(long)]
    pub path: Option<PathBuf>,
    /// Normalization of the Jordan cross product in the exceptional construction.
    #[arg(long, value_enum, default_value_t)]
    pub cross: CrossArg,
    /// Run cases with dim m >= 67 (e7, e8 and large classical ones).
    #[arg(long)]
    pub allow_heavy: bool,
    /// Check every basis tuple and list every witness.
    #[arg(long)]
    pub audit: bool,
    /// Print a JSON record instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ConnectionArgs {
    #[arg(long, value_enum)]
    pub connection: ConnectionArg,
    /// Coefficient of α_o for `--connection family`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Coefficients b_rs for `--connection family`, rows separated by `;`,
    /// entries by `,` (e.g. `1,0,0;0,1,0;0,0,1`).
    #[arg(long, allow_hyphen_values = true)]
    pub b_matrix: Option<String>,
}
