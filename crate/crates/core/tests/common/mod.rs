//! Closed-form oracles written directly from the displayed formulas, in the
//! basis conventions of the crate: `V = span{e₀, e₁}` with `⟨e₀, e₁⟩ = 1`,
//! `ξ₁ = diag(i, −i)`, `ξ₂ = [[0, −1], [1, 0]]`, `ξ₃ = [[0, −i], [−i, 0]]`.
#![allow(dead_code)]

use holotriple::composition::CompositionKind;
use holotriple::enveloping::{build_enveloping, ReductiveSplit};
use holotriple::jordan::JordanKind;
use holotriple::sts::{Family, SymplecticTripleSystem};
use holotriple::{Matrix, Scalar, Subspace};

pub fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::frac(p, q)
}

pub const G2: Family = Family::Exceptional(JordanKind::Scalar);
pub const F4: Family = Family::Exceptional(JordanKind::Hermitian(CompositionKind::Unarion));
pub const E6: Family = Family::Exceptional(JordanKind::Hermitian(CompositionKind::Binarion));
pub const E7: Family = Family::Exceptional(JordanKind::Hermitian(CompositionKind::QuaternionSplit));
pub const E8: Family = Family::Exceptional(JordanKind::Hermitian(CompositionKind::Zorn));

/// The families every light criterion runs on.
pub fn light_families() -> Vec<Family> {
    let mut v = Vec::new();
    v.extend((1..=3).map(|n| Family::Symplectic { n }));
    v.extend((3..=5).map(|w| Family::Orthogonal { w }));
    v.extend((1..=3).map(|w| Family::Special { w }));
    v.push(G2);
    v.push(F4);
    v
}

pub fn split(f: Family) -> ReductiveSplit {
    ReductiveSplit::new(build_enveloping(&f.build().unwrap()).unwrap()).unwrap()
}

pub type M2 = [[Scalar; 2]; 2];

pub fn xi(i: usize) -> M2 {
    let z = Scalar::zero;
    let im = Scalar::i();
    match i {
        0 => [[im.clone(), z()], [z(), -&im]],
        1 => [[z(), s(-1)], [s(1), z()]],
        _ => [[z(), -&im], [-&im, z()]],
    }
}

pub fn m2_mul(a: &M2, b: &M2) -> M2 {
    let e = |r: usize, c: usize| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn m2_bracket(a: &M2, b: &M2) -> M2 {
    let (p, q) = (m2_mul(a, b), m2_mul(b, a));
    [[&p[0][0] - &q[0][0], &p[0][1] - &q[0][1]], [&p[1][0] - &q[1][0], &p[1][1] - &q[1][1]]]
}

/// Solves `m = c₁ξ₁ + c₂ξ₂ + c₃ξ₃` for a traceless `m`.
pub fn xi_coords(m: &M2) -> [Scalar; 3] {
    assert!((&m[0][0] + &m[1][1]).is_zero());
    let im = Scalar::i();
    let half = frac(1, 2);
    [
        &(-&im) * &m[0][0],
        &(&m[1][0] - &m[0][1]) * &half,
        &(&im * &(&m[0][1] + &m[1][0])) * &half,
    ]
}

pub fn vform(a: usize, b: usize) -> Scalar {
    match (a, b) {
        (0, 1) => s(1),
        (1, 0) => s(-1),
        _ => Scalar::zero(),
    }
}

fn unit2(a: usize) -> [Scalar; 2] {
    let mut v = [Scalar::zero(), Scalar::zero()];
    v[a] = s(1);
    v
}

/// `γ_{a,b}(c) = ⟨a,c⟩b + ⟨b,c⟩a`.
pub fn gamma_apply(a: usize, b: usize, c: usize) -> [Scalar; 2] {
    let (ua, ub) = (unit2(a), unit2(b));
    let (x, y) = (vform(a, c), vform(b, c));
    [&(&x * &ub[0]) + &(&y * &ua[0]), &(&x * &ub[1]) + &(&y * &ua[1])]
}

pub fn gamma(a: usize, b: usize) -> M2 {
    let c0 = gamma_apply(a, b, 0);
    let c1 = gamma_apply(a, b, 1);
    [[c0[0].clone(), c1[0].clone()], [c0[1].clone(), c1[1].clone()]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B {
    Xi(usize),
    Odd(usize, usize),
}

pub struct Oracle<'a> {
    pub sp: &'a ReductiveSplit,
    pub t: &'a SymplecticTripleSystem,
    pub md: usize,
    pub dt: usize,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conn {
    LeviCivita,
    Distinguished,
    Canonical,
}

impl<'a> Oracle<'a> {
    pub fn new(sp: &'a ReductiveSplit) -> Self {
        let t = sp.algebra().sts();
        Oracle { sp, t, md: sp.m_dim(), dt: t.dim(), n: t.dim() / 2 }
    }

    pub fn basis(&self, p: usize) -> B {
        if p < 3 {
            B::Xi(p)
        } else {
            B::Odd((p - 3) / self.dt, (p - 3) % self.dt)
        }
    }

    pub fn odd_index(&self, a: usize, k: usize) -> usize {
        3 + a * self.dt + k
    }

    pub fn omega(&self, x: usize, y: usize) -> Scalar {
        self.t.omega()[(x, y)].clone()
    }

    pub fn triple(&self, x: usize, y: usize, z: usize) -> Vec<Scalar> {
        self.t.basis_triple(x, y, z).to_dense(self.dt)
    }

    /// `d_{x,y} = [x, y, ·]` on `T`.
    pub fn d(&self, x: usize, y: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dt, self.dt);
        for z in 0..self.dt {
            for (r, c) in self.triple(x, y, z).into_iter().enumerate() {
                m[(r, z)] = c;
            }
        }
        m
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.md]
    }

    pub fn xi_vec(&self, c: &[Scalar; 3]) -> Vec<Scalar> {
        let mut v = self.zero();
        v[..3].clone_from_slice(c);
        v
    }

    /// `v ⊗ w` for `v ∈ V`, `w ∈ T`.
    pub fn tensor(&self, v: &[Scalar; 2], w: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (a, va) in v.iter().enumerate() {
            for (k, wk) in w.iter().enumerate() {
                out[self.odd_index(a, k)] = &out[self.odd_index(a, k)] + &(va * wk);
            }
        }
        out
    }

    pub fn t_unit(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dt];
        v[k] = s(1);
        v
    }

    /// `ad ζ|ₘ` for `ζ ∈ sp(V)`.
    pub fn ad_sp(&self, z: &M2) -> Matrix {
        let mut m = Matrix::zeros(self.md, self.md);
        for col in 0..self.md {
            let v = match self.basis(col) {
                B::Xi(k) => self.xi_vec(&xi_coords(&m2_bracket(z, &xi(k)))),
                B::Odd(c, k) => self.tensor(&[z[0][c].clone(), z[1][c].clone()], &self.t_unit(k)),
            };
            set_col(&mut m, col, &v);
        }
        m
    }

    /// `ad d|ₘ` for `d ∈ inder(T)`: zero on `sp(1)`, `c ⊗ z ↦ c ⊗ d(z)`.
    pub fn ad_d(&self, d: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.md, self.md);
        for col in 3..self.md {
            if let B::Odd(c, k) = self.basis(col) {
                let v = self.tensor(&unit2(c), &d.column(k));
                set_col(&mut m, col, &v);
            }
        }
        m
    }

    /// `g(ξᵢ, ξⱼ) = δᵢⱼ`, `g(a⊗x, b⊗y) = ½⟨a,b⟩(x,y)`, zero across.
    pub fn metric(&self) -> Matrix {
        let mut g = Matrix::zeros(self.md, self.md);
        for p in 0..self.md {
            for q in 0..self.md {
                g[(p, q)] = match (self.basis(p), self.basis(q)) {
                    (B::Xi(i), B::Xi(j)) => s(i64::from(i == j)),
                    (B::Odd(a, x), B::Odd(b, y)) => &(&vform(a, b) * &self.omega(x, y)) * &frac(1, 2),
                    _ => Scalar::zero(),
                };
            }
        }
        g
    }

    /// `φ_{u,v} = g(u,·)v − g(v,·)u`.
    pub fn phi_uv(&self, u: &[Scalar], v: &[Scalar]) -> Matrix {
        let g = self.metric();
        let (gu, gv) = (g.apply(u), g.apply(v));
        let mut m = Matrix::zeros(self.md, self.md);
        for r in 0..self.md {
            for c in 0..self.md {
                m[(r, c)] = &(&gu[c] * &v[r]) - &(&gv[c] * &u[r]);
            }
        }
        m
    }

    pub fn unit(&self, p: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[p] = s(1);
        v
    }

    /// `R(e_p, e_q)` from the closed forms.
    pub fn curvature(&self, conn: Conn, p: usize, q: usize) -> Matrix {
        let md = self.md;
        let mut m = Matrix::zeros(md, md);
        match (self.basis(p), self.basis(q)) {
            (B::Xi(_), B::Odd(..)) => return self.curvature(conn, q, p).scale(&s(-1)),
            (B::Xi(i), B::Xi(j)) => {
                let br = m2_bracket(&xi(i), &xi(j));
                match conn {
                    Conn::LeviCivita => {
                        // −¼[[ξ,ξ'],ξ''] on sp(1), zero on g₁.
                        for k in 0..3 {
                            let c = xi_coords(&m2_bracket(&br, &xi(k)));
                            let v: Vec<Scalar> = self.xi_vec(&c).iter().map(|x| x * &frac(-1, 4)).collect();
                            set_col(&mut m, k, &v);
                        }
                    }
                    Conn::Distinguished => {
                        // 2[ξ,ξ'](c) ⊗ z on g₁, zero on sp(1).
                        for col in 3..md {
                            if let B::Odd(c, k) = self.basis(col) {
                                let v = [&br[0][c] * &s(2), &br[1][c] * &s(2)];
                                set_col(&mut m, col, &self.tensor(&v, &self.t_unit(k)));
                            }
                        }
                    }
                    Conn::Canonical => return self.ad_sp(&br).scale(&s(2)),
                }
            }
            (B::Odd(a, x), B::Xi(i)) => {
                if conn == Conn::LeviCivita {
                    // −½(x,y)⟨a,b⟩ξ + g(ξ,ξ')a⊗x
                    for col in 0..md {
                        let v = match self.basis(col) {
                            B::Xi(k) if k == i => self.unit(p),
                            B::Xi(_) => self.zero(),
                            B::Odd(b, y) => {
                                let c = &(&self.omega(x, y) * &vform(a, b)) * &frac(-1, 2);
                                let mut v = self.zero();
                                v[i] = c;
                                v
                            }
                        };
                        set_col(&mut m, col, &v);
                    }
                }
            }
            (B::Odd(a, x), B::Odd(b, y)) => match conn {
                Conn::LeviCivita => {
                    // ½(γ_{a,c}(b)⊗(x,z)y − γ_{b,c}(a)⊗(y,z)x) − ⟨a,b⟩c⊗[x,y,z]
                    for col in 3..md {
                        let B::Odd(c, z) = self.basis(col) else { unreachable!() };
                        let t1 = self.tensor(&gamma_apply(a, c, b), &self.t_unit(y));
                        let t2 = self.tensor(&gamma_apply(b, c, a), &self.t_unit(x));
                        let t3 = self.tensor(&unit2(c), &self.triple(x, y, z));
                        let (wx, wy, ab) = (self.omega(x, z), self.omega(y, z), vform(a, b));
                        let v: Vec<Scalar> = (0..md)
                            .map(|r| {
                                let half = &(&(&wx * &t1[r]) - &(&wy * &t2[r])) * &frac(1, 2);
                                &half - &(&ab * &t3[r])
                            })
                            .collect();
                        set_col(&mut m, col, &v);
                    }
                }
                Conn::Distinguished => {
                    // γ_{a,b}(c)⊗(x,y)z − ⟨a,b⟩c⊗[x,y,z]
                    for col in 3..md {
                        let B::Odd(c, z) = self.basis(col) else { unreachable!() };
                        let t1 = self.tensor(&gamma_apply(a, b, c), &self.t_unit(z));
                        let t3 = self.tensor(&unit2(c), &self.triple(x, y, z));
                        let (w, ab) = (self.omega(x, y), vform(a, b));
                        let v: Vec<Scalar> = (0..md).map(|r| &(&w * &t1[r]) - &(&ab * &t3[r])).collect();
                        set_col(&mut m, col, &v);
                    }
                }
                Conn::Canonical => {
                    // ad((x,y)γ_{a,b} − ⟨a,b⟩d_{x,y})|ₘ
                    let g = self.ad_sp(&gamma(a, b)).scale(&self.omega(x, y));
                    let d = self.ad_d(&self.d(x, y)).scale(&vform(a, b));
                    return g.sub(&d);
                }
            },
        }
        m
    }

    /// `[a⊗x, b⊗y, c⊗z] = γ_{a,b}(c)⊗(x,y)z + ⟨a,b⟩c⊗[x,y,z]`.
    pub fn lts(&self, (a, x): (usize, usize), (b, y): (usize, usize), (c, z): (usize, usize)) -> Vec<Scalar> {
        let t1 = self.tensor(&gamma_apply(a, b, c), &self.t_unit(z));
        let t3 = self.tensor(&unit2(c), &self.triple(x, y, z));
        let (w, ab) = (self.omega(x, y), vform(a, b));
        (0..self.md).map(|r| &(&w * &t1[r]) + &(&ab * &t3[r])).collect()
    }

    /// `2(γ_{a,b}(c)⊗(x,y)z + γ_{b,c}(a)⊗(y,z)x + γ_{c,a}(b)⊗(z,x)y)`.
    pub fn bianchi_defect(&self, (a, x): (usize, usize), (b, y): (usize, usize), (c, z): (usize, usize)) -> Vec<Scalar> {
        let term = |a, b, c, x, y, z| {
            let v = self.tensor(&gamma_apply(a, b, c), &self.t_unit(z));
            let w = self.omega(x, y);
            v.into_iter().map(move |e| &e * &w)
        };
        let mut out = self.zero();
        for t in [term(a, b, c, x, y, z), term(b, c, a, y, z, x), term(c, a, b, z, x, y)] {
            for (o, e) in out.iter_mut().zip(t) {
                *o = &*o + &(&e * &s(2));
            }
        }
        out
    }

    /// `span{ad ζ|ₘ : ζ ∈ sp(V) ⊕ inder(T)}`.
    pub fn hol_canonical(&self) -> Subspace {
        let mut mats: Vec<Matrix> = (0..3).map(|i| self.ad_sp(&xi(i))).collect();
        mats.extend(self.ad_inder());
        Subspace::spanned_by(self.md * self.md, mats.iter().map(Matrix::as_flat)).unwrap()
    }

    /// `span{α^S_ξ} ⊕ span{ad d|ₘ}` with `α^S_ξ = −ad ξ` on `g₁` and zero on `sp(1)`.
    pub fn hol_distinguished(&self) -> Subspace {
        let mut mats: Vec<Matrix> = (0..3)
            .map(|i| {
                let mut m = self.ad_sp(&xi(i)).scale(&s(-1));
                for r in 0..self.md {
                    for c in 0..3 {
                        m[(r, c)] = Scalar::zero();
                    }
                }
                m
            })
            .collect();
        mats.extend(self.ad_inder());
        Subspace::spanned_by(self.md * self.md, mats.iter().map(Matrix::as_flat)).unwrap()
    }

    fn ad_inder(&self) -> Vec<Matrix> {
        let mut v = Vec::new();
        for x in 0..self.dt {
            for y in x..self.dt {
                v.push(self.ad_d(&self.d(x, y)));
            }
        }
        v
    }
}

pub fn set_col(m: &mut Matrix, col: usize, v: &[Scalar]) {
    for (r, x) in v.iter().enumerate() {
        m[(r, col)] = x.clone();
    }
}

/// `dim hol(∇^S) = dim hol(∇^c)` from the table.
pub fn table_torsion_dim(f: Family) -> usize {
    match f {
        Family::Symplectic { n } => 2 * n * n + n + 3,
        Family::Special { w } => w * w + 3,
        Family::Orthogonal { w } => w * (w - 1) / 2 + 6,
        _ if f == G2 => 6,
        _ if f == F4 => 24,
        _ if f == E6 => 38,
        _ if f == E7 => 69,
        _ => 136,
    }
}
