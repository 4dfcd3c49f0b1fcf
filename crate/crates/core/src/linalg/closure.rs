//! Lie closure of sets of square matrices and centers of matrix Lie algebras.

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A matrix Lie algebra spanned by flattened `d × d` matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub size: usize,
    pub span: Subspace,
    /// A spanning list used for brackets (same span as `span`).
    pub elements: Vec<Matrix>,
}

impl MatrixAlgebra {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Center, computed from the spanning elements.
    pub fn center(&self) -> Result<Subspace> {
        center_of_basis(&self.elements, self.size)
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.span.basis().map(|v| Matrix::from_flat(self.size, self.size, v)).collect()
    }

    /// Checks `[x, y] ∈ span` for all spanning pairs and `[μ, x] ∈ span` for all multipliers.
    pub fn is_closed_under(&self, multipliers: &[Matrix]) -> bool {
        let basis = self.basis_matrices();
        for (p, x) in basis.iter().enumerate() {
            for y in &basis[..p] {
                if !self.span.contains(x.commutator(y).as_flat()).unwrap_or(false) {
                    return false;
                }
            }
            for mu in multipliers {
                if !self.span.contains(mu.commutator(x).as_flat()).unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }
}

fn check_sizes<'a>(mats: impl Iterator<Item = &'a Matrix>, size: &mut Option<usize>) -> Result<()> {
    for m in mats {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        match size {
            None => *size = Some(m.rows()),
            Some(d) if *d != m.rows() => {
                return Err(Error::DimensionMismatch { expected: *d, found: m.rows() })
            }
            _ => {}
        }
    }
    Ok(())
}

/// Smallest subspace containing `gens`, closed under commutators and under
/// `ad μ` for every multiplier μ.
///
/// `envelope`, when given, must be a Lie algebra containing every generator
/// and normalized by every multiplier (containment is checked). The worklist
/// stops as soon as the span fills the envelope.
pub fn bracket_closure(
    gens: &[Matrix],
    multipliers: &[Matrix],
    envelope: Option<&Subspace>,
) -> Result<MatrixAlgebra> {
    let mut size = None;
    check_sizes(gens.iter().chain(multipliers), &mut size)?;
    let d = size.unwrap_or(0);
    if let Some(env) = envelope {
        if env.ambient_dim() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: env.ambient_dim() });
        }
        for m in gens.iter().chain(multipliers) {
            if !env.contains(m.as_flat())? {
                return Err(Error::Invariant("closure envelope does not contain an input".into()));
            }
        }
    }
    let full = |s: &Subspace| envelope.is_some_and(|e| e.dim() == s.dim());

    // Reduce the multipliers to a basis of their span.
    let mut mult_span = Subspace::zero(d * d);
    let mut mults = Vec::new();
    for m in multipliers {
        if mult_span.insert(m.as_flat())? {
            mults.push(m.clone());
        }
    }

    let mut span = Subspace::zero(d * d);
    let mut elements: Vec<Matrix> = Vec::new();
    for g in gens {
        if span.insert(g.as_flat())? {
            elements.push(g.clone());
        }
    }

    let mut processed = 0;
    while processed < elements.len() && !full(&span) {
        let x = elements[processed].clone();
        let mut fresh = Vec::new();
        for mu in &mults {
            let b = mu.commutator(&x);
            if span.insert(b.as_flat())? {
                fresh.push(b);
            }
        }
        for y in &elements[..processed] {
            let b = x.commutator(y);
            if span.insert(b.as_flat())? {
                fresh.push(b);
            }
        }
        elements.extend(fresh);
        processed += 1;
    }
    Ok(MatrixAlgebra { size: d, span, elements })
}

/// Center `{x ∈ s : [x, y] = 0 for all y ∈ s}` of a commutator-closed span of
/// `d × d` matrices, computed as the kernel of one linear map.
pub fn center_of(span: &Subspace, size: usize) -> Result<Subspace> {
    if span.ambient_dim() != size * size {
        return Err(Error::DimensionMismatch { expected: size * size, found: span.ambient_dim() });
    }
    let basis: Vec<Matrix> =
        span.basis().map(|v| Matrix::from_flat(size, size, v)).collect();
    center_of_basis(&basis, size)
}

/// As [`center_of`], for a span given by a basis (which may be much sparser
/// than the echelon one).
pub fn center_of_basis(basis: &[Matrix], size: usize) -> Result<Subspace> {
    check_sizes(basis.iter(), &mut Some(size))?;
    let k = basis.len();
    // Row space of the coefficient system Σ_c x_c [b_c, b_j] = 0, one row per (j, entry).
    // A dense combination goes first: its centralizer is usually small, so
    // the row space tends to fill after a handful of elements.
    let mut probe = Matrix::zeros(size, size);
    for (c, b) in basis.iter().enumerate() {
        probe.add_scaled_assign(&Scalar::int(c as i64 + 1), b);
    }
    let mut rows = Subspace::zero(k);
    'outer: for bj in std::iter::once(&probe).chain(basis) {
        let brackets: Vec<Matrix> = basis.iter().map(|bc| bc.commutator(bj)).collect();
        for e in 0..size * size {
            let row: Vec<Scalar> = brackets.iter().map(|m| m.as_flat()[e].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.insert(&row)?;
                if rows.dim() == k {
                    break 'outer;
                }
            }
        }
    }
    let coeffs = rows.annihilator();
    let mut center = Subspace::zero(size * size);
    for c in coeffs.basis() {
        let mut m = vec![Scalar::zero(); size * size];
        for (coef, b) in c.iter().zip(basis) {
            if coef.is_zero() {
                continue;
            }
            for (acc, x) in m.iter_mut().zip(b.as_flat()) {
                acc.add_mul(coef, x);
            }
        }
        center.insert(&m)?;
    }
    Ok(center)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(d, d);
        m[(i, j)] = Scalar::one();
        m
    }

    #[test]
    fn single_nilpotent_generator() {
        let a = bracket_closure(&[unit(2, 0, 1)], &[], None).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn e12_e21_close_to_sl2() {
        // [E12, E21] = E11 − E22 by hand; then [H, E12] = 2E12, [H, E21] = −2E21.
        let a = bracket_closure(&[unit(2, 0, 1), unit(2, 1, 0)], &[], None).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.is_closed_under(&[]));
        let h = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert!(a.span.contains(h.as_flat()).unwrap());
    }

    #[test]
    fn multipliers_enlarge_the_closure() {
        // span{E12} is abelian, but ad(E21) drags in H and then E21.
        let a = bracket_closure(&[unit(2, 0, 1)], &[unit(2, 1, 0)], None).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.is_closed_under(&[unit(2, 1, 0)]));
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(bracket_closure(&[unit(2, 0, 1), unit(3, 0, 1)], &[], None).is_err());
    }

    #[test]
    fn centers() {
        let id = Matrix::identity(2);
        let s = Subspace::spanned_by(4, [id.as_flat()]).unwrap();
        assert_eq!(center_of(&s, 2).unwrap(), s);

        let sl2 = bracket_closure(&[unit(2, 0, 1), unit(2, 1, 0)], &[], None).unwrap();
        assert_eq!(center_of(&sl2.span, 2).unwrap().dim(), 0);

        // gl(2) has the scalars as center.
        let mut gl2 = sl2.span.clone();
        gl2.insert(id.as_flat()).unwrap();
        let c = center_of(&gl2, 2).unwrap();
        assert_eq!(c, s);
    }

    #[test]
    fn envelope_must_contain_inputs() {
        let sl2 = bracket_closure(&[unit(2, 0, 1), unit(2, 1, 0)], &[], None).unwrap();
        let id = Matrix::identity(2);
        assert!(bracket_closure(&[id], &[], Some(&sl2.span)).is_err());
        let a = bracket_closure(&[unit(2, 0, 1), unit(2, 1, 0)], &[], Some(&sl2.span)).unwrap();
        assert_eq!(a.dim(), 3);
    }
}
