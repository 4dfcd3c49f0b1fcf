//! The split complex composition algebras of dimension 1, 2, 4 and 8.
//!
//! Basis orderings (fixed, used by every downstream coordinate):
//!
//! * unarion `ℂ`: `[1]`
//! * binarion `ℂ×ℂ`: `[(1,0), (0,1)]`
//! * split quaternions `Mat₂(ℂ)`: `[E11, E12, E21, E22]`
//! * Zorn vector matrices `[[a, v], [w, b]]`: `[a, v1, v2, v3, w1, w2, w3, b]`

use crate::linalg::{Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompositionKind {
    Unarion,
    Binarion,
    QuaternionSplit,
    Zorn,
}

impl CompositionKind {
    pub fn dim(self) -> usize {
        match self {
            CompositionKind::Unarion => 1,
            CompositionKind::Binarion => 2,
            CompositionKind::QuaternionSplit => 4,
            CompositionKind::Zorn => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Unarion => "unarion",
            CompositionKind::Binarion => "binarion",
            CompositionKind::QuaternionSplit => "quaternion-split",
            CompositionKind::Zorn => "zorn",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompositionAlgebra {
    kind: CompositionKind,
    /// `mult[i * dim + j]` = coordinates of `e_i · e_j`.
    mult: Vec<SparseVec>,
    /// `conj[i]` = coordinates of the conjugate of `e_i`.
    conj: Vec<SparseVec>,
    /// Polar form of the norm: `n(x, y)` with `n(x) = n(x, x)`.
    norm_form: Vec<Vec<Scalar>>,
    /// Linear trace `t(x)` with `x + x̄ = t(x)·1`.
    trace: Vec<Scalar>,
    unit: Vec<Scalar>,
}

fn zero(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

fn cross3(u: &[Scalar], v: &[Scalar]) -> [Scalar; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot3(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Model product on coordinates.
fn model_mul(kind: CompositionKind, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    match kind {
        CompositionKind::Unarion => vec![&x[0] * &y[0]],
        CompositionKind::Binarion => vec![&x[0] * &y[0], &x[1] * &y[1]],
        CompositionKind::QuaternionSplit => {
            // [[x0, x1], [x2, x3]] · [[y0, y1], [y2, y3]]
            vec![
                &(&x[0] * &y[0]) + &(&x[1] * &y[2]),
                &(&x[0] * &y[1]) + &(&x[1] * &y[3]),
                &(&x[2] * &y[0]) + &(&x[3] * &y[2]),
                &(&x[2] * &y[1]) + &(&x[3] * &y[3]),
            ]
        }
        CompositionKind::Zorn => {
            // [[a, v], [w, b]] · [[a', v'], [w', b']] =
            //   [[aa' + v·w',  a v' + b' v + w × w'],
            //    [a' w + b w' − v × v',  bb' + w·v']]
            let (a, v, w, b) = (&x[0], &x[1..4], &x[4..7], &x[7]);
            let (a2, v2, w2, b2) = (&y[0], &y[1..4], &y[4..7], &y[7]);
            let ww = cross3(w, w2);
            let vv = cross3(v, v2);
            let mut out = Vec::with_capacity(8);
            out.push(&(a * a2) + &dot3(v, w2));
            for k in 0..3 {
                out.push(&(&(a * &v2[k]) + &(b2 * &v[k])) + &ww[k]);
            }
            for k in 0..3 {
                out.push(&(&(a2 * &w[k]) + &(b * &w2[k])) - &vv[k]);
            }
            out.push(&(b * b2) + &dot3(w, v2));
            out
        }
    }
}

fn model_conj(kind: CompositionKind, x: &[Scalar]) -> Vec<Scalar> {
    match kind {
        CompositionKind::Unarion => x.to_vec(),
        CompositionKind::Binarion => vec![x[1].clone(), x[0].clone()],
        CompositionKind::QuaternionSplit => {
            vec![x[3].clone(), -&x[1], -&x[2], x[0].clone()]
        }
        CompositionKind::Zorn => {
            let mut out = vec![x[7].clone()];
            out.extend(x[1..7].iter().map(|c| -c));
            out.push(x[0].clone());
            out
        }
    }
}

/// Quadratic norm `n(x)` with `x x̄ = n(x)·1`.
fn model_norm(kind: CompositionKind, x: &[Scalar]) -> Scalar {
    match kind {
        CompositionKind::Unarion => &x[0] * &x[0],
        CompositionKind::Binarion => &x[0] * &x[1],
        CompositionKind::QuaternionSplit => &(&x[0] * &x[3]) - &(&x[1] * &x[2]),
        CompositionKind::Zorn => &(&x[0] * &x[7]) - &dot3(&x[1..4], &x[4..7]),
    }
}

fn model_unit(kind: CompositionKind) -> Vec<Scalar> {
    let mut u = zero(kind.dim());
    match kind {
        CompositionKind::Unarion => u[0] = Scalar::one(),
        CompositionKind::Binarion => {
            u[0] = Scalar::one();
            u[1] = Scalar::one();
        }
        CompositionKind::QuaternionSplit => {
            u[0] = Scalar::one();
            u[3] = Scalar::one();
        }
        CompositionKind::Zorn => {
            u[0] = Scalar::one();
            u[7] = Scalar::one();
        }
    }
    u
}

fn basis_vec(n: usize, k: usize) -> Vec<Scalar> {
    let mut v = zero(n);
    v[k] = Scalar::one();
    v
}

impl CompositionAlgebra {
    pub fn build(kind: CompositionKind) -> Self {
        let n = kind.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|k| basis_vec(n, k)).collect();
        let mut mult = Vec::with_capacity(n * n);
        for x in &basis {
            for y in &basis {
                mult.push(SparseVec::from_dense(&model_mul(kind, x, y)));
            }
        }
        let conj = basis.iter().map(|x| SparseVec::from_dense(&model_conj(kind, x))).collect();
        let half = Scalar::frac(1, 2);
        let norm_form = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| {
                        let s: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                        let p = &(&model_norm(kind, &s) - &model_norm(kind, x)) - &model_norm(kind, y);
                        &p * &half
                    })
                    .collect()
            })
            .collect();
        let unit = model_unit(kind);
        // x + x̄ = t(x)·1; read t off a coordinate where the unit is 1.
        let u0 = unit.iter().position(|c| !c.is_zero()).expect("nonzero unit");
        let trace = basis
            .iter()
            .map(|x| {
                let c = model_conj(kind, x);
                &x[u0] + &c[u0]
            })
            .collect();
        CompositionAlgebra { kind, mult, conj, norm_form, trace, unit }
    }

    pub fn kind(&self) -> CompositionKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Bilinear product through the structure tensor.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> crate::Result<Vec<Scalar>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(crate::Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = zero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                self.mult[i * n + j].axpy_into(&c, &mut out);
            }
        }
        out
    }

    pub fn conjugate(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero(self.dim());
        for (i, xi) in x.iter().enumerate() {
            self.conj[i].axpy_into(xi, &mut out);
        }
        out
    }

    pub fn norm_bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let c = &self.norm_form[i][j];
                if !c.is_zero() && !yj.is_zero() {
                    acc += &(&(xi * yj) * c);
                }
            }
        }
        acc
    }

    pub fn norm(&self, x: &[Scalar]) -> Scalar {
        self.norm_bilinear(x, x)
    }

    pub fn trace(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.trace).map(|(a, b)| a * b).sum()
    }

    /// `λ` when `x = λ·1`; in general half the trace.
    pub fn scalar_part(&self, x: &[Scalar]) -> Scalar {
        &self.trace(x) * &Scalar::frac(1, 2)
    }

    /// Associator `(x y) z − x (y z)`.
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let l = self.mul_unchecked(&self.mul_unchecked(x, y), z);
        let r = self.mul_unchecked(x, &self.mul_unchecked(y, z));
        l.iter().zip(&r).map(|(a, b)| a - b).collect()
    }

    pub fn basis_element(&self, k: usize) -> Vec<Scalar> {
        basis_vec(self.dim(), k)
    }
}
