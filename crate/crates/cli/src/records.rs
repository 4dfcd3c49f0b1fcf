//! Report records. Every scalar is an exact string such as `-3/2` or `1/2+i`.

use holotriple::holonomy::{IdentityReport, TableRow};
use holotriple::sts::AxiomReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiRecord {
    pub checked: bool,
    pub passed: bool,
    pub witnesses: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub system: String,
    pub dim: usize,
    pub axioms: AxiomReport,
    pub simple: bool,
    pub jacobi: JacobiRecord,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolonomyRecord {
    pub system: String,
    pub connection: String,
    pub m_dim: usize,
    pub dim: usize,
    pub center: usize,
    pub contains_so: bool,
    pub expected_dim: Option<usize>,
    pub expected_center: Option<usize>,
    pub identity: Option<IdentityReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureRecord {
    pub system: String,
    pub connection: String,
    pub i: usize,
    pub j: usize,
    /// Row-major entries of `R(e_i, e_j)` on the basis of `m`.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRicci {
    pub vertical: String,
    pub horizontal: String,
    pub scalar_curvature: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RicciRecord {
    pub system: String,
    pub connection: String,
    pub n: usize,
    /// `None` when `Ric` is not proportional to `g` on the block.
    pub vertical_constant: Option<String>,
    pub horizontal_constant: Option<String>,
    pub mixed_vanishes: bool,
    pub scalar_curvature: String,
    pub expected: Option<ExpectedRicci>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub rows: Vec<TableRow>,
    pub passed: bool,
}
