//! Symplectic triple systems: storage, the standard families, the axiom
//! checker, inner derivations and simplicity.

mod families;
mod io;
mod verify;

pub use families::{
    build_exceptional_type, build_exceptional_type_with, build_orthogonal_type, build_special_type,
    build_symplectic_type, CrossConvention, Family, HEAVY_M_DIM,
};
pub(crate) use families::{gamma_v as gamma_v_int, v_form as v_form_int};
pub use io::{load_sts, read_sts, save_sts, write_sts};
pub use verify::{verify_axioms, Axiom, AxiomFailure, AxiomReport, VerifyMode};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SparseVec, Subspace};

/// A finite-dimensional triple system with a bilinear form `(·,·)` and a
/// trilinear product `[·,·,·]` given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticTripleSystem {
    dim: usize,
    omega: Matrix,
    /// `triple[(i * dim + j) * dim + k]` = coordinates of `[e_i, e_j, e_k]`.
    triple: Vec<SparseVec>,
    label: String,
}

impl SymplecticTripleSystem {
    /// Assembles a system from raw data. Only shapes are checked; use
    /// [`verify_axioms`] for the identities.
    pub fn from_parts(omega: Matrix, triple: Vec<SparseVec>, label: impl Into<String>) -> Result<Self> {
        let dim = omega.rows();
        if !omega.is_square() {
            return Err(Error::DimensionMismatch { expected: dim, found: omega.cols() });
        }
        if triple.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: triple.len() });
        }
        if let Some(m) = triple.iter().filter_map(SparseVec::max_index).max() {
            if m >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m + 1 });
            }
        }
        Ok(SymplecticTripleSystem { dim, omega, triple, label: label.into() })
    }

    /// Builds from sparse entries `(i, j, k, l, c)` meaning `[e_i,e_j,e_k]` has `c` on `e_l`.
    pub fn from_entries(
        omega: Matrix,
        entries: impl IntoIterator<Item = (usize, usize, usize, usize, Scalar)>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let dim = omega.rows();
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim * dim];
        for (i, j, k, l, c) in entries {
            let bad = [i, j, k, l].into_iter().find(|&x| x >= dim);
            if let Some(x) = bad {
                return Err(Error::DimensionMismatch { expected: dim, found: x + 1 });
            }
            buckets[(i * dim + j) * dim + k].push((l, c));
        }
        let triple = buckets.into_iter().map(SparseVec::from_pairs).collect();
        Self::from_parts(omega, triple, label)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<Family> {
        Family::from_label(&self.label)
    }

    /// `[e_i, e_j, e_k]`.
    pub fn basis_triple(&self, i: usize, j: usize, k: usize) -> &SparseVec {
        &self.triple[(i * self.dim + j) * self.dim + k]
    }

    /// All nonzero structure constants as `(i, j, k, l, c)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &Scalar)> + '_ {
        let d = self.dim;
        self.triple.iter().enumerate().flat_map(move |(idx, v)| {
            let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
            v.iter().map(move |(l, c)| (i, j, k, l, c))
        })
    }

    #[cfg(test)]
    pub(crate) fn triple_mut(&mut self) -> &mut [SparseVec] {
        &mut self.triple
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    /// Trilinear evaluation of `[x, y, z]`.
    pub fn triple_product(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y, z] {
            self.check_len(v)?;
        }
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    self.basis_triple(i, j, k).axpy_into(&(&xy * zk), &mut out);
                }
            }
        }
        Ok(out)
    }

    /// `(x, y)`.
    pub fn form(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.omega.bilinear(x, y))
    }

    /// The operator `d_{e_i,e_j} = [e_i, e_j, ·]` as a matrix (column k is `[e_i,e_j,e_k]`).
    pub fn d_basis(&self, i: usize, j: usize) -> Matrix {
        let d = self.dim;
        Matrix::from_sparse_columns(d, &self.triple[(i * d + j) * d..(i * d + j + 1) * d])
    }

    /// `d_{x,y} = [x, y, ·]` for arbitrary elements.
    pub fn d(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        self.check_len(y)?;
        let d = self.dim;
        let mut m = Matrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                m.add_scaled_assign(&(xi * yj), &self.d_basis(i, j));
            }
        }
        Ok(m)
    }

    /// The echelon span of all `d_{e_i,e_j}`, together with the basis pairs
    /// (first in lexicographic order) whose operators are a basis of it.
    pub(crate) fn inder_generators(&self) -> (Subspace, Vec<(usize, usize)>) {
        let d = self.dim;
        let mut span = Subspace::zero(d * d);
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let m = self.d_basis(i, j);
                if span.insert(m.as_flat()).expect("flattened size matches") {
                    pairs.push((i, j));
                }
            }
        }
        (span, pairs)
    }

    /// `true` iff `(·,·)` is nondegenerate and `[T,T,T] ≠ 0`. One-dimensional
    /// systems are outside the criterion and rejected.
    pub fn is_simple(&self) -> Result<bool> {
        if self.dim == 1 {
            return Err(Error::InvalidParameter(
                "simplicity criterion does not apply to one-dimensional systems".into(),
            ));
        }
        let nondegenerate = self.omega.rank() == self.dim;
        let nonzero = self.triple.iter().any(|v| !v.is_zero());
        Ok(nondegenerate && nonzero)
    }
}

/// The span of all `d_{x,y}` with its Lie structure constants.
#[derive(Clone, Debug)]
pub struct InnerDerivationSpace {
    size: usize,
    span: Subspace,
    basis: Vec<Matrix>,
    /// Basis pairs whose operators `d_{e_i,e_j}` are a basis of the span.
    generator_pairs: Vec<(usize, usize)>,
    /// `structure[p][q]` = coordinates of `[b_p, b_q]` in `basis`.
    structure: Vec<Vec<Vec<Scalar>>>,
}

impl InnerDerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of the matrices (= dim T).
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// Echelon basis as matrices.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn generator_pairs(&self) -> &[(usize, usize)] {
        &self.generator_pairs
    }

    /// Coordinates of `[b_p, b_q]` in the echelon basis.
    pub fn structure_constants(&self, p: usize, q: usize) -> &[Scalar] {
        &self.structure[p][q]
    }

    /// Coordinates of a matrix in the echelon basis, `None` outside the span.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.span.coordinates(m.as_flat()).ok().flatten()
    }
}

/// Echelonized span of `{d_{e_i,e_j}}`.
///
/// Fails with an invariant error if the span is not closed under commutators,
/// which cannot happen once the derivation identity holds.
pub fn inder_basis(t: &SymplecticTripleSystem) -> Result<InnerDerivationSpace> {
    let d = t.dim();
    let (span, generator_pairs) = t.inder_generators();
    let basis: Vec<Matrix> = span.basis().map(|v| Matrix::from_flat(d, d, v)).collect();
    let k = basis.len();
    let mut structure = vec![vec![Vec::new(); k]; k];
    for p in 0..k {
        structure[p][p] = vec![Scalar::zero(); k];
        for q in p + 1..k {
            let c = basis[p].commutator(&basis[q]);
            let coords = span.coordinates(c.as_flat())?.ok_or_else(|| {
                Error::Invariant(format!("inner derivations not closed: [b{p}, b{q}] outside the span"))
            })?;
            structure[q][p] = coords.iter().map(|x| -x).collect();
            structure[p][q] = coords;
        }
    }
    Ok(InnerDerivationSpace { size: d, span, basis, generator_pairs, structure })
}
