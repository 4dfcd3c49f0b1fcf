//! The ℤ₂-graded Lie algebra `g(T) = sp(V) ⊕ inder(T) ⊕ V⊗T`, its Killing
//! form, the reductive split `g = h ⊕ m`, the invariant metric and the
//! operators `ξᵢ`, `φᵢ`.
//!
//! Basis of `g(T)`: `ξ₁, ξ₂, ξ₃`, then the echelon basis of `inder(T)`, then
//! `e_a ⊗ t_k` at offset `a·dim T + k` for `a ∈ {0, 1}`. The basis of `m`
//! is `ξ₁, ξ₂, ξ₃` followed by the odd block in the same order.

use std::collections::HashMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SparseVec};
use crate::sts::{inder_basis, InnerDerivationSpace, SymplecticTripleSystem};

/// A finite-dimensional algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    /// `table[i * dim + j]` = `[e_i, e_j]`.
    table: Vec<SparseVec>,
}

impl StructureConstants {
    pub fn new(dim: usize, table: Vec<SparseVec>) -> Result<Self> {
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: table.len() });
        }
        if let Some(m) = table.iter().filter_map(SparseVec::max_index).max() {
            if m >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m + 1 });
            }
        }
        Ok(StructureConstants { dim, table })
    }

    pub fn abelian(dim: usize) -> Self {
        StructureConstants { dim, table: vec![SparseVec::new(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn set_basis_bracket(&mut self, i: usize, j: usize, v: SparseVec) {
        self.table[i * self.dim + j] = v;
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                self.basis_bracket(i, j).axpy_into(&(xi * yj), &mut out);
            }
        }
        Ok(out)
    }

    fn bracket_sparse(&self, x: &SparseVec, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            let b = self.basis_bracket(i, j);
            if !b.is_zero() {
                out = out.add_scaled(c, b);
            }
        }
        out
    }

    /// `ad x` as a matrix (column `j` is `[x, e_j]`).
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..self.dim {
                for (l, c) in self.basis_bracket(i, j).iter() {
                    m[(l, j)] += xi * c;
                }
            }
        }
        m
    }

    /// First basis triple `i < j < k` violating the Jacobi identity, or all of them.
    pub fn jacobi_failures(&self, first_only: bool) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let mut bad = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let ij = self.basis_bracket(i, j);
                for k in j + 1..d {
                    let mut s = self.bracket_sparse(ij, k);
                    let jk = self.basis_bracket(j, k);
                    s = s.add_scaled(&Scalar::one(), &self.bracket_sparse(jk, i));
                    let ki = self.basis_bracket(k, i);
                    s = s.add_scaled(&Scalar::one(), &self.bracket_sparse(ki, j));
                    if !s.is_zero() {
                        bad.push((i, j, k));
                        if first_only {
                            return bad;
                        }
                    }
                }
            }
        }
        bad
    }

    /// Antisymmetry on basis pairs.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            self.basis_bracket(i, i).is_zero()
                && (0..i).all(|j| self.basis_bracket(i, j) == &self.basis_bracket(j, i).scaled(&Scalar::int(-1)))
        })
    }

    /// `κ(x, y) = tr(ad x ∘ ad y)` on basis pairs.
    pub fn killing_form(&self) -> Matrix {
        let d = self.dim;
        // (row l, column k) of ad e_i is c_{ik}^l; group by matrix position.
        let mut by_pos: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
        for i in 0..d {
            for k in 0..d {
                for (l, c) in self.basis_bracket(i, k).iter() {
                    by_pos.entry((l, k)).or_default().push((i, c.clone()));
                }
            }
        }
        let mut kappa = Matrix::zeros(d, d);
        for (&(l, k), left) in &by_pos {
            let Some(right) = by_pos.get(&(k, l)) else { continue };
            for (i, a) in left {
                for (j, b) in right {
                    kappa[(*i, *j)].add_mul(a, b);
                }
            }
        }
        kappa
    }
}

/// Jacobi check result: offending basis triples `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub failures: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_jacobi(l: &StructureConstants, audit: bool) -> JacobiReport {
    JacobiReport { failures: l.jacobi_failures(!audit) }
}

/// `ξ₁ = diag(i, −i)`, `ξ₂ = [[0, −1], [1, 0]]`, `ξ₃ = [[0, −i], [−i, 0]]` acting on `V`.
pub fn xi_basis() -> [Matrix; 3] {
    let i = Scalar::i();
    let z = Scalar::zero;
    [
        Matrix::from_rows(vec![vec![i.clone(), z()], vec![z(), -&i]]),
        Matrix::from_ints(&[&[0, -1], &[1, 0]]),
        Matrix::from_rows(vec![vec![z(), -&i], vec![-&i, z()]]),
    ]
}

/// Coordinates of a traceless 2×2 matrix in the basis `ξ₁, ξ₂, ξ₃`.
pub fn xi_coordinates(m: &Matrix) -> Result<[Scalar; 3]> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: m.rows() });
    }
    if !(&m[(0, 0)] + &m[(1, 1)]).is_zero() {
        return Err(Error::InvalidParameter("matrix is not traceless".into()));
    }
    let i = Scalar::i();
    let half = Scalar::frac(1, 2);
    Ok([
        &(-&i) * &m[(0, 0)],
        &(&m[(1, 0)] - &m[(0, 1)]) * &half,
        &(&i * &(&m[(0, 1)] + &m[(1, 0)])) * &half,
    ])
}

/// `⟨e_a, e_b⟩` on `V`.
pub fn v_form(a: usize, b: usize) -> Scalar {
    Scalar::int(crate::sts::v_form_int(a, b))
}

/// `γ_{e_a, e_b}` as a 2×2 matrix: `c ↦ ⟨a,c⟩b + ⟨b,c⟩a`.
pub fn gamma_matrix(a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    for c in 0..2 {
        let g = crate::sts::gamma_v_int(a, b, c);
        for (r, &x) in g.iter().enumerate() {
            m[(r, c)] = Scalar::int(x);
        }
    }
    m
}

/// `g(T)` with its grading and the data of the reductive split.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    n: usize,
    dim_t: usize,
    sts: SymplecticTripleSystem,
    inder: InnerDerivationSpace,
    algebra: StructureConstants,
}

impl GradedLieAlgebra {
    /// `n = dim T / 2`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn sts(&self) -> &SymplecticTripleSystem {
        &self.sts
    }

    pub fn inder(&self) -> &InnerDerivationSpace {
        &self.inder
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.algebra
    }

    pub fn sp_range(&self) -> Range<usize> {
        0..3
    }

    pub fn inder_range(&self) -> Range<usize> {
        3..3 + self.inder.dim()
    }

    pub fn odd_range(&self) -> Range<usize> {
        let s = 3 + self.inder.dim();
        s..s + 2 * self.dim_t
    }

    /// Index of `e_a ⊗ t_k` in `g(T)`.
    pub fn odd_index(&self, a: usize, k: usize) -> usize {
        self.odd_range().start + a * self.dim_t + k
    }

    /// `(a, k)` for an odd index of `g(T)`.
    pub fn odd_parts(&self, idx: usize) -> Option<(usize, usize)> {
        let r = self.odd_range();
        r.contains(&idx).then(|| ((idx - r.start) / self.dim_t, (idx - r.start) % self.dim_t))
    }

    /// `dim m = 4n + 3`.
    pub fn m_dim(&self) -> usize {
        3 + 2 * self.dim_t
    }

    /// Index in `g(T)` of the `p`-th basis vector of `m`.
    pub fn m_to_g(&self, p: usize) -> usize {
        if p < 3 {
            p
        } else {
            p + self.inder.dim()
        }
    }

    /// Index in `m` of a basis vector of `g(T)`, `None` for `h`.
    pub fn g_to_m(&self, i: usize) -> Option<usize> {
        if i < 3 {
            Some(i)
        } else if self.odd_range().contains(&i) {
            Some(i - self.inder.dim())
        } else {
            None
        }
    }

    /// Index in `m` of `e_a ⊗ t_k`.
    pub fn m_odd(&self, a: usize, k: usize) -> usize {
        3 + a * self.dim_t + k
    }

    pub fn g_dim_t(&self) -> usize {
        self.dim_t
    }

    /// `[e_i, e_j]` split into its `m` and `h` parts (`h` indexed by the inder basis).
    pub fn bracket_split(&self, i: usize, j: usize) -> (SparseVec, SparseVec) {
        let k = self.inder.dim();
        let mut m = Vec::new();
        let mut h = Vec::new();
        for (l, c) in self.algebra.basis_bracket(i, j).iter() {
            if (3..3 + k).contains(&l) {
                h.push((l - 3, c.clone()));
            } else {
                m.push((self.g_to_m(l).expect("non-h index"), c.clone()));
            }
        }
        (SparseVec::from_pairs(m), SparseVec::from_pairs(h))
    }

    /// `[X, Y]ₘ` and `[X, Y]ₕ` for basis vectors of `m`.
    pub fn m_bracket(&self, p: usize, q: usize) -> (SparseVec, SparseVec) {
        self.bracket_split(self.m_to_g(p), self.m_to_g(q))
    }

    /// `ad(e_i)|ₘ` for an index `i` of `g(T)` in `sp(V) ⊕ h`, as an `m`-endomorphism.
    pub fn ad_on_m(&self, i: usize) -> Result<Matrix> {
        if self.odd_range().contains(&i) {
            return Err(Error::InvalidParameter("odd elements do not preserve m".into()));
        }
        let md = self.m_dim();
        let mut out = Matrix::zeros(md, md);
        for q in 0..md {
            for (l, c) in self.algebra.basis_bracket(i, self.m_to_g(q)).iter() {
                let r = self.g_to_m(l).ok_or_else(|| Error::Invariant("[g0, m] leaves m".into()))?;
                out[(r, q)] = c.clone();
            }
        }
        Ok(out)
    }

    /// `ad(h)|ₘ` for the `p`-th inder basis element.
    pub fn ad_h_on_m(&self, p: usize) -> Matrix {
        self.ad_on_m(3 + p).expect("h preserves m")
    }

    pub fn killing_form(&self) -> Matrix {
        self.algebra.killing_form()
    }

    pub fn verify_jacobi(&self, audit: bool) -> JacobiReport {
        verify_jacobi(&self.algebra, audit)
    }

    /// `g` on `m`: `−κ/(4(n+2))` on `sp(1)`, `−κ/(8(n+2))` on `g₁`, zero across.
    pub fn metric_g(&self) -> Result<InvariantMetric> {
        self.metric_from_killing(&self.killing_form())
    }

    pub fn metric_from_killing(&self, kappa: &Matrix) -> Result<InvariantMetric> {
        let md = self.m_dim();
        let s = Scalar::int(4 * (self.n as i64 + 2));
        let vert = (-&s).recip();
        let horiz = (&Scalar::int(-2) * &s).recip();
        let mut gram = Matrix::zeros(md, md);
        for p in 0..md {
            for q in 0..md {
                let (vp, vq) = (p < 3, q < 3);
                if vp != vq {
                    continue;
                }
                let k = &kappa[(self.m_to_g(p), self.m_to_g(q))];
                gram[(p, q)] = if vp { k * &vert } else { k * &horiz };
            }
        }
        let inverse =
            gram.inverse().ok_or_else(|| Error::Invariant("invariant metric is degenerate".into()))?;
        Ok(InvariantMetric { gram, inverse })
    }

    /// `φᵢ`: `½ ad ξᵢ` on `sp(1)` and `ad ξᵢ` on `g₁` (`i` is 0-based).
    pub fn phi(&self, i: usize) -> Matrix {
        let mut m = self.ad_on_m(i).expect("xi preserves m");
        let half = Scalar::frac(1, 2);
        for r in 0..3 {
            for c in 0..3 {
                m[(r, c)] = &m[(r, c)] * &half;
            }
        }
        m
    }

    /// `γ_{e_a,e_b}` as a vector of `m` (coordinates on `ξ₁, ξ₂, ξ₃`).
    pub fn gamma_in_m(&self, a: usize, b: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.m_dim()];
        let c = xi_coordinates(&gamma_matrix(a, b)).expect("gamma is traceless");
        for (slot, x) in v.iter_mut().zip(c) {
            *slot = x;
        }
        v
    }
}

/// Gram matrix of the invariant metric on the `m` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMetric {
    pub gram: Matrix,
    pub inverse: Matrix,
}

impl InvariantMetric {
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.gram.bilinear(x, y)
    }

    /// `ηᵢ = g(ξᵢ, ·)` as a row vector.
    pub fn eta(&self, i: usize) -> Vec<Scalar> {
        self.gram.row(i).to_vec()
    }
}

/// The reductive split `g = h ⊕ m` with everything curvature computations
/// need: the metric, `φᵢ`, and the `m`/`h` parts of brackets on `m`.
#[derive(Clone, Debug)]
pub struct ReductiveSplit {
    algebra: GradedLieAlgebra,
    metric: InvariantMetric,
    phi: [Matrix; 3],
    /// Column `q` of entry `p` is `[e_p, e_q]ₘ`.
    bracket_m: Vec<Matrix>,
    /// Entry `p·dim m + q` is `[e_p, e_q]ₕ` in the inder basis.
    bracket_h: Vec<SparseVec>,
    /// `ad(h_k)|ₘ`.
    ad_h: Vec<Matrix>,
}

impl ReductiveSplit {
    pub fn new(algebra: GradedLieAlgebra) -> Result<Self> {
        let metric = algebra.metric_g()?;
        let phi = [algebra.phi(0), algebra.phi(1), algebra.phi(2)];
        let md = algebra.m_dim();
        let mut bracket_m = Vec::with_capacity(md);
        let mut bracket_h = Vec::with_capacity(md * md);
        for p in 0..md {
            let mut m = Matrix::zeros(md, md);
            for q in 0..md {
                let (bm, bh) = algebra.m_bracket(p, q);
                for (r, c) in bm.iter() {
                    m[(r, q)] = c.clone();
                }
                bracket_h.push(bh);
            }
            bracket_m.push(m);
        }
        let ad_h = (0..algebra.inder().dim()).map(|k| algebra.ad_h_on_m(k)).collect();
        Ok(ReductiveSplit { algebra, metric, phi, bracket_m, bracket_h, ad_h })
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &InvariantMetric {
        &self.metric
    }

    pub fn m_dim(&self) -> usize {
        self.algebra.m_dim()
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    /// `φᵢ` (0-based).
    pub fn phi(&self, i: usize) -> &Matrix {
        &self.phi[i]
    }

    /// `[e_p, ·]ₘ` as an `m`-endomorphism.
    pub fn bracket_m(&self, p: usize) -> &Matrix {
        &self.bracket_m[p]
    }

    pub fn bracket_h(&self, p: usize, q: usize) -> &SparseVec {
        &self.bracket_h[p * self.m_dim() + q]
    }

    pub fn ad_h(&self) -> &[Matrix] {
        &self.ad_h
    }

    /// `ad(ξᵢ)|ₘ` (0-based).
    pub fn ad_xi(&self, i: usize) -> Matrix {
        self.algebra.ad_on_m(i).expect("xi preserves m")
    }

    /// `φ_{u,v} = g(u,·)v − g(v,·)u`.
    pub fn phi_uv(&self, u: &[Scalar], v: &[Scalar]) -> Matrix {
        let gu = self.metric.gram.apply(u);
        let gv = self.metric.gram.apply(v);
        let md = self.m_dim();
        let mut m = Matrix::zeros(md, md);
        for r in 0..md {
            for c in 0..md {
                m[(r, c)] = &(&gu[c] * &v[r]) - &(&gv[c] * &u[r]);
            }
        }
        m
    }
}

/// Builds `g(T)` without checking the Jacobi identity; see [`build_enveloping_checked`].
pub fn build_enveloping(t: &SymplecticTripleSystem) -> Result<GradedLieAlgebra> {
    let dt = t.dim();
    if dt % 2 == 1 {
        return Err(Error::InvalidParameter(format!("dim T = {dt} is odd")));
    }
    if !t.is_simple()? {
        return Err(Error::InvalidParameter("triple system is not simple".into()));
    }
    let inder = inder_basis(t)?;
    let k = inder.dim();
    let dim = 3 + k + 2 * dt;
    let odd0 = 3 + k;
    let odd = |a: usize, x: usize| odd0 + a * dt + x;
    let xi = xi_basis();
    let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
    let mut put = |i: usize, j: usize, entries: Vec<(usize, Scalar)>| {
        for (l, c) in entries {
            if !c.is_zero() {
                table[j * dim + i].push((l, -&c));
                table[i * dim + j].push((l, c));
            }
        }
    };

    // sp(V) internal brackets.
    for i in 0..3 {
        for j in i + 1..3 {
            let c = xi_coordinates(&xi[i].commutator(&xi[j]))?;
            put(i, j, c.into_iter().enumerate().collect());
        }
    }
    // inder(T) internal brackets.
    for p in 0..k {
        for q in p + 1..k {
            let c = inder.structure_constants(p, q);
            put(3 + p, 3 + q, c.iter().enumerate().map(|(r, x)| (3 + r, x.clone())).collect());
        }
    }
    // [ξ, a⊗x] = ξ(a)⊗x
    for (i, m) in xi.iter().enumerate() {
        for a in 0..2 {
            for x in 0..dt {
                put(i, odd(a, x), (0..2).map(|b| (odd(b, x), m[(b, a)].clone())).collect());
            }
        }
    }
    // [d, a⊗x] = a⊗d(x)
    for (p, d) in inder.basis().iter().enumerate() {
        for a in 0..2 {
            for x in 0..dt {
                put(3 + p, odd(a, x), (0..dt).map(|y| (odd(a, y), d[(y, x)].clone())).collect());
            }
        }
    }
    // [a⊗x, b⊗y] = (x,y) γ_{a,b} + ⟨a,b⟩ d_{x,y}
    let gammas: Vec<[Scalar; 3]> =
        (0..4).map(|ab| xi_coordinates(&gamma_matrix(ab / 2, ab % 2))).collect::<Result<_>>()?;
    let om = t.omega();
    for i in 0..2 * dt {
        for j in i + 1..2 * dt {
            let (a, x, b, y) = (i / dt, i % dt, j / dt, j % dt);
            let mut entries = Vec::new();
            let xy = &om[(x, y)];
            if !xy.is_zero() {
                for (r, g) in gammas[a * 2 + b].iter().enumerate() {
                    entries.push((r, xy * g));
                }
            }
            let ab = v_form(a, b);
            if !ab.is_zero() {
                let dxy = t.d_basis(x, y);
                let coords = inder
                    .coordinates(&dxy)
                    .ok_or_else(|| Error::Invariant("d_{x,y} outside inder".into()))?;
                for (r, c) in coords.into_iter().enumerate() {
                    entries.push((3 + r, &ab * &c));
                }
            }
            put(odd0 + i, odd0 + j, entries);
        }
    }
    // Odd elements bracket with themselves: (x,x) = 0 and ⟨a,a⟩ = 0 give zero.
    let table = table.into_iter().map(SparseVec::from_pairs).collect();
    let algebra = StructureConstants::new(dim, table)?;
    Ok(GradedLieAlgebra { n: dt / 2, dim_t: dt, sts: t.clone(), inder, algebra })
}

/// [`build_enveloping`] followed by an exhaustive Jacobi check.
pub fn build_enveloping_checked(t: &SymplecticTripleSystem) -> Result<GradedLieAlgebra> {
    let g = build_enveloping(t)?;
    if let Some(&(i, j, k)) = g.verify_jacobi(false).failures.first() {
        return Err(Error::Jacobi(i, j, k));
    }
    Ok(g)
}
