//! The four standard constructions: symplectic, orthogonal, special and
//! exceptional type.

use std::fmt;

use super::SymplecticTripleSystem;
use crate::composition::CompositionKind;
use crate::error::{Error, Result};
use crate::jordan::{CubicJordan, JordanKind};
use crate::linalg::{Matrix, Scalar, SparseVec};

/// Smallest `dim m` that is only computed on explicit request.
pub const HEAVY_M_DIM: usize = 67;

/// Which construction produced a system, with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Symplectic { n: usize },
    Orthogonal { w: usize },
    Special { w: usize },
    Exceptional(JordanKind),
}

impl Family {
    pub fn build(self) -> Result<SymplecticTripleSystem> {
        match self {
            Family::Symplectic { n } => build_symplectic_type(n),
            Family::Orthogonal { w } => build_orthogonal_type(w),
            Family::Special { w } => build_special_type(w),
            Family::Exceptional(JordanKind::Scalar) => build_exceptional_type(&CubicJordan::scalar()),
            Family::Exceptional(JordanKind::Hermitian(c)) => {
                build_exceptional_type(&CubicJordan::hermitian(c))
            }
        }
    }

    /// `dim T`.
    pub fn sts_dim(self) -> usize {
        match self {
            Family::Symplectic { n } => 2 * n,
            Family::Orthogonal { w } | Family::Special { w } => 2 * w,
            Family::Exceptional(JordanKind::Scalar) => 4,
            Family::Exceptional(JordanKind::Hermitian(c)) => 2 + 2 * (3 + 3 * c.dim()),
        }
    }

    /// `n = ½ dim T`.
    pub fn n(self) -> usize {
        self.sts_dim() / 2
    }

    /// `dim m = 4n + 3`.
    pub fn m_dim(self) -> usize {
        4 * self.n() + 3
    }

    /// Cases with `dim m ≥ HEAVY_M_DIM` (among the exceptional ones, `e₇` and `e₈`).
    pub fn is_heavy(self) -> bool {
        self.m_dim() >= HEAVY_M_DIM
    }

    /// Short name of the exceptional Lie algebra `g(T)` for exceptional systems.
    pub fn exceptional_name(self) -> Option<&'static str> {
        match self {
            Family::Exceptional(JordanKind::Scalar) => Some("g2"),
            Family::Exceptional(JordanKind::Hermitian(c)) => Some(match c {
                CompositionKind::Unarion => "f4",
                CompositionKind::Binarion => "e6",
                CompositionKind::QuaternionSplit => "e7",
                CompositionKind::Zorn => "e8",
            }),
            _ => None,
        }
    }

    /// Parses the labels written by [`fmt::Display`].
    pub fn from_label(s: &str) -> Option<Family> {
        let (head, rest) = s.split_once('(')?;
        let arg = rest.strip_suffix(')')?;
        let num = |key: &str| arg.strip_prefix(key)?.parse::<usize>().ok();
        match head {
            "symplectic" => num("n=").map(|n| Family::Symplectic { n }),
            "orthogonal" => num("w=").map(|w| Family::Orthogonal { w }),
            "special" => num("w=").map(|w| Family::Special { w }),
            "exceptional" => {
                let j = match arg {
                    "J=scalar" => JordanKind::Scalar,
                    "J=H3(unarion)" => JordanKind::Hermitian(CompositionKind::Unarion),
                    "J=H3(binarion)" => JordanKind::Hermitian(CompositionKind::Binarion),
                    "J=H3(quaternion-split)" => JordanKind::Hermitian(CompositionKind::QuaternionSplit),
                    "J=H3(zorn)" => JordanKind::Hermitian(CompositionKind::Zorn),
                    _ => return None,
                };
                Some(Family::Exceptional(j))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Symplectic { n } => write!(f, "symplectic(n={n})"),
            Family::Orthogonal { w } => write!(f, "orthogonal(w={w})"),
            Family::Special { w } => write!(f, "special(w={w})"),
            Family::Exceptional(j) => write!(f, "exceptional(J={})", j.name()),
        }
    }
}

fn unit(d: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[k] = Scalar::one();
    v
}

/// Fills the structure constants by evaluating `f` on every basis triple.
fn tabulate(
    omega: Matrix,
    label: String,
    mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>,
) -> Result<SymplecticTripleSystem> {
    let d = omega.rows();
    let mut triple = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                triple.push(SparseVec::from_dense(&f(i, j, k)));
            }
        }
    }
    SymplecticTripleSystem::from_parts(omega, triple, label)
}

/// The form `⟨·,·⟩` on `V` with `⟨e₁,e₂⟩ = 1`.
pub(crate) fn v_form(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// `γ_{a,b}(c) = ⟨a,c⟩b + ⟨b,c⟩a` on basis vectors of `V`, as coordinates.
pub(crate) fn gamma_v(a: usize, b: usize, c: usize) -> [i64; 2] {
    let mut out = [0; 2];
    out[b] += v_form(a, c);
    out[a] += v_form(b, c);
    out
}

/// `W` of dimension `2n` with `(w_i, w_{n+i}) = 1` and `[x,y,z] = (x,z)y + (y,z)x`.
pub fn build_symplectic_type(n: usize) -> Result<SymplecticTripleSystem> {
    if n == 0 {
        return Err(Error::InvalidParameter("symplectic type needs n >= 1".into()));
    }
    let d = 2 * n;
    let mut omega = Matrix::zeros(d, d);
    for i in 0..n {
        omega[(i, n + i)] = Scalar::one();
        omega[(n + i, i)] = Scalar::int(-1);
    }
    let om = omega.clone();
    tabulate(omega, Family::Symplectic { n }.to_string(), |x, y, z| {
        let mut v = vec![Scalar::zero(); d];
        v[y] += &om[(x, z)];
        v[x] += &om[(y, z)];
        v
    })
}

/// `V ⊗ W` with `b` the identity form on `W`; basis `e_a ⊗ x_p` at index `a·w + p`.
pub fn build_orthogonal_type(w: usize) -> Result<SymplecticTripleSystem> {
    if w < 3 {
        return Err(Error::InvalidParameter("orthogonal type needs w >= 3".into()));
    }
    let d = 2 * w;
    let half = Scalar::frac(1, 2);
    let idx = |a: usize, p: usize| a * w + p;
    let split = |k: usize| (k / w, k % w);
    let b = |p: usize, q: usize| i64::from(p == q);

    let mut omega = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let ((u, x), (v, y)) = (split(i), split(j));
            omega[(i, j)] = &half * &Scalar::int(v_form(u, v) * b(x, y));
        }
    }
    tabulate(omega, Family::Orthogonal { w }.to_string(), |i, j, k| {
        let ((u, x), (v, y), (s, z)) = (split(i), split(j), split(k));
        let mut out = vec![Scalar::zero(); d];
        // ½ γ_{u,v}(s) ⊗ b(x,y) z
        let g = gamma_v(u, v, s);
        for (a, &c) in g.iter().enumerate() {
            let coeff = c * b(x, y);
            if coeff != 0 {
                out[idx(a, z)] += &half * &Scalar::int(coeff);
            }
        }
        // ⟨u,v⟩ s ⊗ (b(x,z) y − b(y,z) x)
        let uv = v_form(u, v);
        if uv != 0 {
            out[idx(s, y)] += Scalar::int(uv * b(x, z));
            out[idx(s, x)] -= Scalar::int(uv * b(y, z));
        }
        out
    })
}

/// `W ⊕ W*` with the `W` basis first, then the dual basis; `(f, x) = f(x)`.
pub fn build_special_type(w: usize) -> Result<SymplecticTripleSystem> {
    if w == 0 {
        return Err(Error::InvalidParameter("special type needs w >= 1".into()));
    }
    let d = 2 * w;
    let mut omega = Matrix::zeros(d, d);
    for p in 0..w {
        omega[(w + p, p)] = Scalar::one();
        omega[(p, w + p)] = Scalar::int(-1);
    }
    // f(x) for x ∈ W (index < w) and f ∈ W* (index ≥ w).
    let pair = |f: usize, x: usize| i64::from(f - w == x);
    tabulate(omega, Family::Special { w }.to_string(), |i, j, k| {
        let mut out = vec![Scalar::zero(); d];
        let (i_w, j_w) = (i < w, j < w);
        if i_w == j_w {
            return out;
        }
        // [f, x, ·] = [x, f, ·]
        let (x, f) = if i_w { (i, j) } else { (j, i) };
        if k < w {
            // [x,f,y] = f(x) y + 2 f(y) x
            out[k] += Scalar::int(pair(f, x));
            out[x] += Scalar::int(2 * pair(f, k));
        } else {
            // [x,f,g] = −f(x) g − 2 g(x) f
            out[k] -= Scalar::int(pair(f, x));
            out[f] -= Scalar::int(2 * pair(k, x));
        }
        out
    })
}

/// Coordinate view of an element `[[α, a], [b, β]]` of `T_J`, stored as `[α, β, a, b]`.
struct Slots<'a> {
    alpha: &'a Scalar,
    beta: &'a Scalar,
    a: &'a [Scalar],
    b: &'a [Scalar],
}

fn slots(x: &[Scalar], dj: usize) -> Slots<'_> {
    Slots { alpha: &x[0], beta: &x[1], a: &x[2..2 + dj], b: &x[2 + dj..2 + 2 * dj] }
}

/// `x ↦ xᵗ`: swaps `α ↔ β` and `a ↔ b`.
fn transpose_slots(x: Slots<'_>) -> Slots<'_> {
    Slots { alpha: x.beta, beta: x.alpha, a: x.b, b: x.a }
}

fn axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        o.add_mul(c, x);
    }
}

/// Normalization of the cross product inside the exceptional triple product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CrossConvention {
    /// `a×b = ab + ba − tr(a)b − tr(b)a + (tr(a)tr(b) − t(a,b))I₃` on `H₃(C)`,
    /// and `a×b = 2ab` on `ℂ` (the same formula on scalar matrices).
    #[default]
    Normalized,
    /// The Jordan-algebra cross product as stored: half the above on `H₃(C)`,
    /// zero on `ℂ`. Kept for comparison; it does not give the expected systems.
    Literal,
}

impl CrossConvention {
    pub fn name(self) -> &'static str {
        match self {
            CrossConvention::Normalized => "normalized",
            CrossConvention::Literal => "literal",
        }
    }
}

struct Exceptional<'a> {
    j: &'a CubicJordan,
    convention: CrossConvention,
}

impl Exceptional<'_> {
    fn t(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        self.j.t(a, b)
    }

    fn cross(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        match (self.convention, self.j.kind()) {
            (CrossConvention::Literal, _) => self.j.cross(a, b),
            (CrossConvention::Normalized, JordanKind::Scalar) => vec![&Scalar::int(2) * &(&a[0] * &b[0])],
            (CrossConvention::Normalized, JordanKind::Hermitian(_)) => {
                self.j.cross(a, b).iter().map(|x| x * &Scalar::int(2)).collect()
            }
        }
    }

    fn gamma(&self, x1: &Slots, x2: &Slots, x3: &Slots) -> Scalar {
        let two = Scalar::int(2);
        let s = &(&(x1.alpha * x2.beta) + &(x1.beta * x2.alpha));
        let coeff = &(&(&Scalar::int(-3) * s) + &self.t(x1.a, x2.b)) + &self.t(x1.b, x2.a);
        let mut inner = &(x1.alpha * &self.t(x2.b, x3.a)) + &(x2.alpha * &self.t(x1.b, x3.a));
        inner -= self.t(&self.cross(x1.a, x2.a), x3.a);
        &(&coeff * x3.alpha) + &(&two * &inner)
    }

    fn c(&self, x1: &Slots, x2: &Slots, x3: &Slots) -> Vec<Scalar> {
        let two = Scalar::int(2);
        let mut out = vec![Scalar::zero(); self.j.dim()];
        let s = &(&(x1.alpha * x2.beta) + &(x1.beta * x2.alpha));
        let coeff = &(&(-s) + &self.t(x1.a, x2.b)) + &self.t(x1.b, x2.a);
        axpy(&mut out, &coeff, x3.a);
        let c1 = &two * &(&self.t(x2.b, x3.a) - &(x2.beta * x3.alpha));
        axpy(&mut out, &c1, x1.a);
        let c2 = &two * &(&self.t(x1.b, x3.a) - &(x1.beta * x3.alpha));
        axpy(&mut out, &c2, x2.a);
        axpy(&mut out, &(&two * x1.alpha), &self.cross(x2.b, x3.b));
        axpy(&mut out, &(&two * x2.alpha), &self.cross(x1.b, x3.b));
        axpy(&mut out, &(&two * x3.alpha), &self.cross(x1.b, x2.b));
        let m2 = Scalar::int(-2);
        axpy(&mut out, &m2, &self.cross(&self.cross(x1.a, x2.a), x3.b));
        axpy(&mut out, &m2, &self.cross(&self.cross(x1.a, x3.a), x2.b));
        axpy(&mut out, &m2, &self.cross(&self.cross(x2.a, x3.a), x1.b));
        out
    }
}

/// `T_J` with basis `[α, β, a_1..a_m, b_1..b_m]` for `m = dim J`, using the
/// normalized cross product.
pub fn build_exceptional_type(j: &CubicJordan) -> Result<SymplecticTripleSystem> {
    build_exceptional_type_with(j, CrossConvention::Normalized)
}

pub fn build_exceptional_type_with(
    j: &CubicJordan,
    convention: CrossConvention,
) -> Result<SymplecticTripleSystem> {
    let dj = j.dim();
    let d = 2 + 2 * dj;
    let basis: Vec<Vec<Scalar>> = (0..d).map(|k| unit(d, k)).collect();

    // (x1,x2) = α1β2 − α2β1 − t(a1,b2) + t(b1,a2)
    let mut omega = Matrix::zeros(d, d);
    omega[(0, 1)] = Scalar::one();
    omega[(1, 0)] = Scalar::int(-1);
    for (p, row) in j.trace_form().iter().enumerate() {
        for (q, t) in row.iter().enumerate() {
            omega[(2 + p, 2 + dj + q)] = -t;
            omega[(2 + dj + p, 2 + q)] = t.clone();
        }
    }
    let mut label = Family::Exceptional(j.kind()).to_string();
    if convention == CrossConvention::Literal {
        label = format!("{}+literal-cross", label);
    }
    let ex = Exceptional { j, convention };
    tabulate(omega, label, |i1, i2, i3| {
        let (x1, x2, x3) = (slots(&basis[i1], dj), slots(&basis[i2], dj), slots(&basis[i3], dj));
        let mut out = vec![Scalar::zero(); d];
        out[0] = ex.gamma(&x1, &x2, &x3);
        let c = ex.c(&x1, &x2, &x3);
        let (y1, y2, y3) = (transpose_slots(x1), transpose_slots(x2), transpose_slots(x3));
        out[1] = -ex.gamma(&y1, &y2, &y3);
        let ct = ex.c(&y1, &y2, &y3);
        for p in 0..dj {
            out[2 + p] = c[p].clone();
            out[2 + dj + p] = -&ct[p];
        }
        out
    })
}
