//! Nomizu maps of invariant connections on `m`, with torsion, curvature and
//! the metric and skew-torsion predicates.
//!
//! A Nomizu map `α: m × m → m` is stored through its left multiplications
//! `α_X = α(X, ·)`, one matrix per basis vector of `m`. Indices `0..3` of `m`
//! are `ξ₁, ξ₂, ξ₃`; the rest is the odd block `V ⊗ T`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::enveloping::ReductiveSplit;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ConnectionKind {
    LeviCivita,
    Distinguished,
    Canonical,
    /// `α^g + a·α_o + Σ b_rs·α_rs`; entries kept as exact strings.
    Family { a: String, b: Vec<Vec<String>> },
    /// Anything else (e.g. the zero map, or a component such as `α_o`).
    Other { name: String },
}

impl fmt::Display for ConnectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectionKind::LeviCivita => f.write_str("levi-civita"),
            ConnectionKind::Distinguished => f.write_str("distinguished"),
            ConnectionKind::Canonical => f.write_str("canonical"),
            ConnectionKind::Family { a, b } => {
                let rows: Vec<String> = b.iter().map(|r| r.join(",")).collect();
                write!(f, "family(a={a}, B=[{}])", rows.join(";"))
            }
            ConnectionKind::Other { name } => f.write_str(name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NomizuMap {
    /// `ops[p]` = `α(e_p, ·)`; column `q` is `α(e_p, e_q)`.
    ops: Vec<Matrix>,
    pub label: ConnectionKind,
}

impl NomizuMap {
    pub fn zero(md: usize, label: ConnectionKind) -> Self {
        NomizuMap { ops: vec![Matrix::zeros(md, md); md], label }
    }

    pub fn from_operators(ops: Vec<Matrix>, label: ConnectionKind) -> Result<Self> {
        let md = ops.len();
        if let Some(m) = ops.iter().find(|m| m.rows() != md || m.cols() != md) {
            return Err(Error::DimensionMismatch { expected: md, found: m.rows() });
        }
        Ok(NomizuMap { ops, label })
    }

    pub fn m_dim(&self) -> usize {
        self.ops.len()
    }

    /// `α_X = α(e_p, ·)`.
    pub fn op(&self, p: usize) -> &Matrix {
        &self.ops[p]
    }

    pub fn operators(&self) -> &[Matrix] {
        &self.ops
    }

    /// `α(e_p, e_q)`.
    pub fn basis_value(&self, p: usize, q: usize) -> Vec<Scalar> {
        self.ops[p].column(q)
    }

    /// `α(X, Y)` for arbitrary elements.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.op_of(x).apply(y)
    }

    /// `α_X` for an arbitrary element.
    pub fn op_of(&self, x: &[Scalar]) -> Matrix {
        let md = self.m_dim();
        let mut m = Matrix::zeros(md, md);
        for (p, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled_assign(c, &self.ops[p]);
            }
        }
        m
    }

    fn set(&mut self, p: usize, q: usize, v: &[Scalar]) {
        for (r, x) in v.iter().enumerate() {
            self.ops[p][(r, q)] = x.clone();
        }
    }

    /// `self + c·other`, keeping `self`'s label.
    pub fn add_scaled(&self, c: &Scalar, other: &NomizuMap) -> NomizuMap {
        let mut out = self.clone();
        if !c.is_zero() {
            for (a, b) in out.ops.iter_mut().zip(&other.ops) {
                a.add_scaled_assign(c, b);
            }
        }
        out
    }

    pub fn relabel(mut self, label: ConnectionKind) -> Self {
        self.label = label;
        self
    }
}

fn unit(md: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); md];
    v[k] = Scalar::one();
    v
}

/// Levi-Civita map: zero on `(ξ, X)`, `½[·,·]ₘ` within `sp(1)` and within `g₁`,
/// `[X, ξ]ₘ` on `(X, ξ)`.
pub fn alpha_levi_civita(s: &ReductiveSplit) -> NomizuMap {
    let md = s.m_dim();
    let half = Scalar::frac(1, 2);
    let mut a = NomizuMap::zero(md, ConnectionKind::LeviCivita);
    for p in 0..md {
        for q in 0..md {
            let br = s.bracket_m(p).column(q);
            let v: Vec<Scalar> = match (p < 3, q < 3) {
                (true, false) => continue,
                (false, true) => br,
                _ => br.iter().map(|x| x * &half).collect(),
            };
            a.set(p, q, &v);
        }
    }
    a
}

/// `α_o(ξᵢ, ξᵢ₊₁) = ξᵢ₊₂`, alternating, zero elsewhere.
pub fn alpha_o(s: &ReductiveSplit) -> NomizuMap {
    let md = s.m_dim();
    let mut a = NomizuMap::zero(md, ConnectionKind::Other { name: "alpha_o".into() });
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        a.set(i, j, &unit(md, k));
        let neg: Vec<Scalar> = unit(md, k).iter().map(|x| -x).collect();
        a.set(j, i, &neg);
    }
    a
}

/// `α_rs` (0-based `r`, `s`): `Φ_s(X,Y) ξ_r` on `g₁ × g₁`, `±δ_rj φ_s X` on the
/// mixed pairs, `−δ_rs ξᵢ₊₂` on `(ξᵢ, ξᵢ₊₁)`, alternating.
pub fn alpha_rs(sp: &ReductiveSplit, r: usize, s: usize) -> NomizuMap {
    let md = sp.m_dim();
    let mut a = NomizuMap::zero(md, ConnectionKind::Other { name: format!("alpha_{}{}", r + 1, s + 1) });
    let g = &sp.metric().gram;
    let phi_s = sp.phi(s);
    // Φ_s(X, Y) = g(X, φ_s Y)
    let big_phi = g.mul(phi_s);
    for p in 3..md {
        for q in 3..md {
            let c = &big_phi[(p, q)];
            if !c.is_zero() {
                let v: Vec<Scalar> = unit(md, r).iter().map(|x| x * c).collect();
                a.set(p, q, &v);
            }
        }
        // α_rs(X, ξ_r) = φ_s X and α_rs(ξ_r, X) = −φ_s X
        let phx = phi_s.column(p);
        a.set(p, r, &phx);
        let neg: Vec<Scalar> = phx.iter().map(|x| -x).collect();
        a.set(r, p, &neg);
    }
    if r == s {
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let neg: Vec<Scalar> = unit(md, k).iter().map(|x| -x).collect();
            a.set(i, j, &neg);
            a.set(j, i, &unit(md, k));
        }
    }
    a
}

/// `α^g + a·α_o + Σ b_rs·α_rs`.
pub fn alpha_family(s: &ReductiveSplit, a: &Scalar, b: &Matrix) -> Result<NomizuMap> {
    if b.rows() != 3 || b.cols() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: b.rows() });
    }
    let label = ConnectionKind::Family {
        a: a.to_string(),
        b: (0..3).map(|r| (0..3).map(|c| b[(r, c)].to_string()).collect()).collect(),
    };
    let mut out = alpha_levi_civita(s).add_scaled(a, &alpha_o(s));
    for r in 0..3 {
        for c in 0..3 {
            if !b[(r, c)].is_zero() {
                out = out.add_scaled(&b[(r, c)], &alpha_rs(s, r, c));
            }
        }
    }
    Ok(out.relabel(label))
}

/// Closed-form table shared by `α^S` and `α^c`: zero on `(X, ξ)` and on
/// `g₁ × g₁`, `−φᵢ X` on `(ξᵢ, X)`; the vertical block is supplied.
fn closed_form(s: &ReductiveSplit, vertical: impl Fn(usize, usize) -> Vec<Scalar>, label: ConnectionKind) -> NomizuMap {
    let md = s.m_dim();
    let mut a = NomizuMap::zero(md, label);
    for i in 0..3 {
        for j in 0..3 {
            a.set(i, j, &vertical(i, j));
        }
        for p in 3..md {
            let v: Vec<Scalar> = s.phi(i).column(p).iter().map(|x| -x).collect();
            a.set(i, p, &v);
        }
    }
    a
}

fn gate(built: NomizuMap, expected: NomizuMap, name: &str) -> Result<NomizuMap> {
    for p in 0..built.m_dim() {
        if built.op(p) != expected.op(p) {
            return Err(Error::Invariant(format!(
                "{name}: affine construction disagrees with the closed form at row operator {p}"
            )));
        }
    }
    Ok(built)
}

/// `α^S = α^g + 2α_o + Σ α_rr`, checked against its closed form.
pub fn alpha_distinguished(s: &ReductiveSplit) -> Result<NomizuMap> {
    let built = alpha_family(s, &Scalar::int(2), &Matrix::identity(3))?.relabel(ConnectionKind::Distinguished);
    let md = s.m_dim();
    let expected = closed_form(s, |_, _| vec![Scalar::zero(); md], ConnectionKind::Distinguished);
    gate(built, expected, "distinguished")
}

/// `α^c = α^g + Σ α_rr`, checked against its closed form (`α^c(ξ, ξ') = −[ξ, ξ']`).
pub fn alpha_canonical(s: &ReductiveSplit) -> Result<NomizuMap> {
    let built = alpha_family(s, &Scalar::zero(), &Matrix::identity(3))?.relabel(ConnectionKind::Canonical);
    let expected = closed_form(
        s,
        |i, j| s.bracket_m(i).column(j).iter().map(|x| -x).collect(),
        ConnectionKind::Canonical,
    );
    gate(built, expected, "canonical")
}

/// A Nomizu map together with the split it lives on; caches curvature.
#[derive(Debug)]
pub struct Connection<'a> {
    split: &'a ReductiveSplit,
    alpha: NomizuMap,
    curvature: OnceLock<Vec<Matrix>>,
}

impl<'a> Connection<'a> {
    pub fn new(split: &'a ReductiveSplit, alpha: NomizuMap) -> Result<Self> {
        if alpha.m_dim() != split.m_dim() {
            return Err(Error::DimensionMismatch { expected: split.m_dim(), found: alpha.m_dim() });
        }
        Ok(Connection { split, alpha, curvature: OnceLock::new() })
    }

    pub fn split(&self) -> &'a ReductiveSplit {
        self.split
    }

    pub fn alpha(&self) -> &NomizuMap {
        &self.alpha
    }

    pub fn label(&self) -> &ConnectionKind {
        &self.alpha.label
    }

    /// `T(X,Y) = α(X,Y) − α(Y,X) − [X,Y]ₘ` on basis vectors.
    pub fn torsion(&self, p: usize, q: usize) -> Vec<Scalar> {
        let a = self.alpha.basis_value(p, q);
        let b = self.alpha.basis_value(q, p);
        let c = self.split.bracket_m(p).column(q);
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| &(x - y) - z).collect()
    }

    /// `g(α(X,Y), Z) + g(Y, α(X,Z)) = 0` on basis triples.
    pub fn is_metric(&self) -> bool {
        let g = &self.split.metric().gram;
        self.alpha.operators().iter().all(|op| {
            let m = op.transpose().mul(g);
            m.add(&m.transpose()).is_zero()
        })
    }

    /// Metric, and `g((α − α^g)(X,Y), Z)` totally alternating on basis triples.
    pub fn is_skew_torsion(&self) -> bool {
        if !self.is_metric() {
            return false;
        }
        let md = self.split.m_dim();
        let g = &self.split.metric().gram;
        let diff = self.alpha.add_scaled(&Scalar::int(-1), &alpha_levi_civita(self.split));
        // w[p][(q, r)] = g(diff(e_p, e_q), e_r) = (diffᵀ_p g)[q][r]
        let w: Vec<Matrix> = diff.operators().iter().map(|op| op.transpose().mul(g)).collect();
        for p in 0..md {
            for q in 0..md {
                for r in 0..md {
                    let x = &w[p][(q, r)];
                    if x != &-&w[q][(p, r)] || x != &-&w[p][(r, q)] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `h ⊆ der(m, α)`: `[ad h, α_X] = α_{(ad h) X}` for every `h`-basis element and `X`.
    pub fn is_admissible(&self) -> bool {
        let md = self.split.m_dim();
        self.split.ad_h().iter().all(|d| {
            (0..md).all(|p| {
                let lhs = d.commutator(self.alpha.op(p));
                let rhs = self.alpha.op_of(&d.column(p));
                lhs == rhs
            })
        })
    }

    /// `R(X,Y) = [α_X, α_Y] − α_{[X,Y]ₘ} − ad([X,Y]ₕ)|ₘ` on basis vectors.
    pub fn compute_curvature(&self, p: usize, q: usize) -> Matrix {
        let (ap, aq) = (self.alpha.op(p), self.alpha.op(q));
        let mut r = ap.commutator(aq);
        let bm = self.split.bracket_m(p).column(q);
        for (k, c) in bm.iter().enumerate() {
            if !c.is_zero() {
                r.add_scaled_assign(&-c, self.alpha.op(k));
            }
        }
        for (k, c) in self.split.bracket_h(p, q).iter() {
            r.add_scaled_assign(&-c, &self.split.ad_h()[k]);
        }
        r
    }

    /// All `R(e_p, e_q)` for `p < q`, computed once.
    pub fn curvature_operators(&self) -> &[Matrix] {
        self.curvature.get_or_init(|| {
            let md = self.split.m_dim();
            let mut out = Vec::with_capacity(md * (md - 1) / 2);
            for p in 0..md {
                for q in p + 1..md {
                    out.push(self.compute_curvature(p, q));
                }
            }
            out
        })
    }

    /// `R(e_p, e_q)` (from the cache).
    pub fn curvature(&self, p: usize, q: usize) -> Matrix {
        let md = self.split.m_dim();
        match p.cmp(&q) {
            std::cmp::Ordering::Equal => Matrix::zeros(md, md),
            std::cmp::Ordering::Less => self.curvature_operators()[pair_index(md, p, q)].clone(),
            std::cmp::Ordering::Greater => {
                self.curvature_operators()[pair_index(md, q, p)].scale(&Scalar::int(-1))
            }
        }
    }

    /// `R(X, Y)` for arbitrary elements.
    pub fn curvature_of(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let md = self.split.m_dim();
        let mut out = Matrix::zeros(md, md);
        for (p, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (q, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if p != q {
                    out.add_scaled_assign(&(a * b), &self.curvature(p, q));
                }
            }
        }
        out
    }

    /// `R(X,Y)Z + R(Y,Z)X + R(Z,X)Y` on basis vectors.
    pub fn bianchi_sum(&self, p: usize, q: usize, r: usize) -> Vec<Scalar> {
        let a = self.curvature(p, q).column(r);
        let b = self.curvature(q, r).column(p);
        let c = self.curvature(r, p).column(q);
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| &(x + y) + z).collect()
    }
}

/// Position of `(p, q)`, `p < q`, in row-major upper-triangular order.
pub fn pair_index(md: usize, p: usize, q: usize) -> usize {
    p * (2 * md - p - 1) / 2 + (q - p - 1)
}
