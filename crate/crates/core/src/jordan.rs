//! Cubic Jordan algebras `ℂ` and `H₃(C)` with trace form and cross product.
//!
//! Hermitian basis order: the three diagonal units `E11, E22, E33`, then for
//! each off-diagonal position `(0,1), (0,2), (1,2)` and each basis element `c`
//! of `C`, the matrix with `c` at `(i,j)` and `c̄` at `(j,i)`.

use crate::composition::{CompositionAlgebra, CompositionKind};
use crate::error::{Error, Result};
use crate::linalg::{Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JordanKind {
    /// `J = ℂ` with `t(a,b) = 3ab` and `a×b = 0`.
    Scalar,
    /// `J = H₃(C)` for a split composition algebra `C`.
    Hermitian(CompositionKind),
}

impl JordanKind {
    pub fn name(self) -> String {
        match self {
            JordanKind::Scalar => "scalar".into(),
            JordanKind::Hermitian(c) => format!("H3({})", c.name()),
        }
    }
}

const OFF_DIAG: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

#[derive(Clone, Debug)]
pub struct CubicJordan {
    kind: JordanKind,
    dim: usize,
    /// `product[i * dim + j]` = `e_i · e_j` (symmetrized product).
    product: Vec<SparseVec>,
    trace_form: Vec<Vec<Scalar>>,
    /// Linear trace `tr(e_i)`.
    trace: Vec<Scalar>,
    cross: Vec<SparseVec>,
    identity: Vec<Scalar>,
}

/// A 3×3 matrix with entries in `C`, each entry a coordinate vector.
type CMatrix = [[Vec<Scalar>; 3]; 3];

struct Hermitian<'a> {
    c: &'a CompositionAlgebra,
}

impl Hermitian<'_> {
    fn dim(&self) -> usize {
        3 + 3 * self.c.dim()
    }

    fn to_matrix(&self, x: &[Scalar]) -> CMatrix {
        let cd = self.c.dim();
        let mut m: CMatrix = Default::default();
        for i in 0..3 {
            m[i][i] = self.c.unit().iter().map(|u| u * &x[i]).collect();
        }
        for (p, &(i, j)) in OFF_DIAG.iter().enumerate() {
            let entry = x[3 + p * cd..3 + (p + 1) * cd].to_vec();
            m[j][i] = self.c.conjugate(&entry);
            m[i][j] = entry;
        }
        m
    }

    /// Coordinates of a hermitian matrix (diagonal read through the scalar part).
    fn from_matrix(&self, m: &CMatrix) -> Vec<Scalar> {
        let mut x: Vec<Scalar> = (0..3).map(|i| self.c.scalar_part(&m[i][i])).collect();
        for &(i, j) in &OFF_DIAG {
            x.extend(m[i][j].iter().cloned());
        }
        x
    }

    fn mat_mul(&self, a: &CMatrix, b: &CMatrix) -> CMatrix {
        let mut out: CMatrix = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = vec![Scalar::zero(); self.c.dim()];
                for k in 0..3 {
                    let p = self.c.mul_unchecked(&a[i][k], &b[k][j]);
                    for (s, v) in acc.iter_mut().zip(p) {
                        *s += v;
                    }
                }
                out[i][j] = acc;
            }
        }
        out
    }

    /// `ab + ba` in coordinates.
    fn anticommutator(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let (a, b) = (self.to_matrix(x), self.to_matrix(y));
        let ab = self.mat_mul(&a, &b);
        let ba = self.mat_mul(&b, &a);
        let mut s: CMatrix = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                s[i][j] = ab[i][j].iter().zip(&ba[i][j]).map(|(p, q)| p + q).collect();
            }
        }
        self.from_matrix(&s)
    }
}

fn trace_of(x: &[Scalar]) -> Scalar {
    &(&x[0] + &x[1]) + &x[2]
}

impl CubicJordan {
    pub fn scalar() -> Self {
        CubicJordan {
            kind: JordanKind::Scalar,
            dim: 1,
            product: vec![SparseVec::unit(0)],
            trace_form: vec![vec![Scalar::int(3)]],
            trace: vec![Scalar::int(3)],
            cross: vec![SparseVec::new()],
            identity: vec![Scalar::one()],
        }
    }

    pub fn hermitian(kind: CompositionKind) -> Self {
        let c = CompositionAlgebra::build(kind);
        Self::hermitian_over(&c)
    }

    fn hermitian_over(c: &CompositionAlgebra) -> Self {
        let h = Hermitian { c };
        let dim = h.dim();
        let half = Scalar::frac(1, 2);
        let basis: Vec<Vec<Scalar>> = (0..dim)
            .map(|k| {
                let mut v = vec![Scalar::zero(); dim];
                v[k] = Scalar::one();
                v
            })
            .collect();
        let mut identity = vec![Scalar::zero(); dim];
        for v in identity.iter_mut().take(3) {
            *v = Scalar::one();
        }
        let trace: Vec<Scalar> = basis.iter().map(|x| trace_of(x)).collect();

        let mut product = Vec::with_capacity(dim * dim);
        let mut anti = Vec::with_capacity(dim * dim);
        for x in &basis {
            for y in &basis {
                let s = h.anticommutator(x, y);
                product.push(SparseVec::from_dense(
                    &s.iter().map(|v| v * &half).collect::<Vec<_>>(),
                ));
                anti.push(s);
            }
        }
        // t(a,b) = ½ tr(ab + ba)
        let trace_form: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| (0..dim).map(|j| &trace_of(&anti[i * dim + j]) * &half).collect())
            .collect();
        // a×b = ½(ab + ba − tr(a)b − tr(b)a + (tr(a)tr(b) − t(a,b))I)
        let mut cross = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut v = anti[i * dim + j].clone();
                v[j] -= &trace[i];
                v[i] -= &trace[j];
                let s = &(&trace[i] * &trace[j]) - &trace_form[i][j];
                for (k, id) in identity.iter().enumerate() {
                    v[k].add_mul(&s, id);
                }
                cross.push(SparseVec::from_dense(
                    &v.iter().map(|x| x * &half).collect::<Vec<_>>(),
                ));
            }
        }
        CubicJordan {
            kind: JordanKind::Hermitian(c.kind()),
            dim,
            product,
            trace_form,
            trace,
            cross,
            identity,
        }
    }

    pub fn kind(&self) -> JordanKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> &[Scalar] {
        &self.identity
    }

    fn bilinear_tensor(&self, tensor: &[SparseVec], a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                tensor[i * self.dim + j].axpy_into(&(ai * bj), &mut out);
            }
        }
        out
    }

    /// Symmetrized product `a·b = ½(ab + ba)`.
    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.bilinear_tensor(&self.product, a, b)
    }

    pub fn cross(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.bilinear_tensor(&self.cross, a, b)
    }

    /// Trace form `t(a, b)`.
    pub fn t(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let c = &self.trace_form[i][j];
                if !c.is_zero() && !bj.is_zero() {
                    acc += &(&(ai * bj) * c);
                }
            }
        }
        acc
    }

    pub fn trace(&self, a: &[Scalar]) -> Scalar {
        a.iter().zip(&self.trace).map(|(x, y)| x * y).sum()
    }

    /// The trace form on basis elements.
    pub fn trace_form(&self) -> &[Vec<Scalar>] {
        &self.trace_form
    }

    /// `e_i × e_j` as a sparse vector.
    pub fn cross_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.cross[i * self.dim + j]
    }

    /// `n(a)` read off from `(a×a)·a = n(a) I₃`; `None` if the left side is not scalar.
    pub fn cubic_norm(&self, a: &[Scalar]) -> Option<Scalar> {
        let v = self.product(&self.cross(a, a), a);
        let n = v[0].clone();
        let scaled: Vec<Scalar> = self.identity.iter().map(|u| u * &n).collect();
        (v == scaled).then_some(n)
    }
}

/// Builds `J`; a composition algebra must be supplied exactly for the hermitian kind.
pub fn build_jordan(kind: JordanKind, c: Option<&CompositionAlgebra>) -> Result<CubicJordan> {
    match (kind, c) {
        (JordanKind::Scalar, None) => Ok(CubicJordan::scalar()),
        (JordanKind::Hermitian(k), Some(c)) if c.kind() == k => Ok(CubicJordan::hermitian_over(c)),
        (JordanKind::Hermitian(k), Some(c)) => Err(Error::InvalidParameter(format!(
            "hermitian kind over {} given a {} algebra",
            k.name(),
            c.kind().name()
        ))),
        (JordanKind::Hermitian(_), None) => {
            Err(Error::InvalidParameter("hermitian Jordan algebra needs a composition algebra".into()))
        }
        (JordanKind::Scalar, Some(_)) => {
            Err(Error::InvalidParameter("scalar Jordan algebra takes no composition algebra".into()))
        }
    }
}
