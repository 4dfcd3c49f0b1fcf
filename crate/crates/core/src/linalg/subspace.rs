//! Linear subspaces held in canonical reduced row echelon form.
//!
//! Every basis row has a leading (pivot) coefficient equal to one, and every
//! pivot column is zero in all other rows. Two subspaces of the same ambient
//! space are equal exactly when their row lists are equal.

use super::matrix::SparseVec;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Sorted by pivot column.
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(SparseVec::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn spanned_by<'a, I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [Scalar]>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis(&self) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        self.rows.iter().map(|r| r.to_dense(self.ambient))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: len });
        }
        Ok(())
    }

    /// Residual of `v` after eliminating every pivot column; zero iff `v` is in the span.
    fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = -&v[p];
            row.axpy_into(&c, v);
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v.len())?;
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        Ok(w.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` against the echelon basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Inserts `v`, returning whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v.len())?;
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        let Some(q) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = w[q].recip();
        let new_row = SparseVec::from_pairs(
            w.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x * &inv))
                .collect(),
        );
        for row in self.rows.iter_mut() {
            let c = row.get(q);
            if !c.is_zero() {
                *row = row.add_scaled(&-c, &new_row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, new_row);
        Ok(true)
    }

    /// Inserts a sparse vector (densified internally).
    pub fn insert_sparse(&mut self, v: &SparseVec) -> Result<bool> {
        if let Some(m) = v.max_index() {
            if m >= self.ambient {
                return Err(Error::DimensionMismatch { expected: self.ambient, found: m + 1 });
            }
        }
        self.insert(&v.to_dense(self.ambient))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient)?;
        for v in other.basis() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v)?;
        }
        Ok(s)
    }

    /// `{w : r·w = 0 for every basis row r}` (bilinear pairing, no conjugation).
    pub fn annihilator(&self) -> Subspace {
        let mut out = Subspace::zero(self.ambient);
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.ambient).filter(|&f| !is_pivot[f]) {
            let mut v = vec![Scalar::zero(); self.ambient];
            v[f] = Scalar::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row.get(f);
            }
            out.insert(&v).expect("length matches");
        }
        out
    }
}
