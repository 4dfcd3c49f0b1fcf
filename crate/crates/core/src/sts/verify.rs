//! Exhaustive check of the defining identities on basis tuples.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::SymplecticTripleSystem;
use crate::linalg::{Matrix, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `(·,·)` is alternating.
    AlternatingForm,
    /// `[x,y,z] = [y,x,z]`.
    Symmetry,
    /// `[x,y,z] − [x,z,y] = (x,z)y − (x,y)z + 2(y,z)x`.
    Skew,
    /// `[d_{x,y}, d_{u,v}] = d_{d_{x,y}u,v} + d_{u,d_{x,y}v}`.
    Derivation,
    /// `(d_{x,y}u, v) + (u, d_{x,y}v) = 0`.
    Symplectic,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AlternatingForm => "alternating form",
            Axiom::Symmetry => "[x,y,z] = [y,x,z]",
            Axiom::Skew => "[x,y,z] - [x,z,y] = (x,z)y - (x,y)z + 2(y,z)x",
            Axiom::Derivation => "[d_xy, d_uv] = d_(d_xy u),v + d_u,(d_xy v)",
            Axiom::Symplectic => "(d_xy u, v) + (u, d_xy v) = 0",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    /// Stops each identity at its first failure. The derivation and
    /// symplectic identities are linear in `d_{x,y}`, so they are checked on
    /// the basis pairs whose operators span `inder(T)`.
    #[default]
    Fast,
    /// Every basis tuple, every witness.
    Audit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    /// Basis indices: `(i, j)` for the form, `(x, y, z)` for the product
    /// identities, `(x, y, u, v)` for the operator identities.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub mode: VerifyMode,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, axiom: Axiom) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

struct Checker<'a> {
    t: &'a SymplecticTripleSystem,
    mode: VerifyMode,
    failures: Vec<AxiomFailure>,
}

impl Checker<'_> {
    /// Records a failure; returns `true` when the current identity should stop.
    fn fail(&mut self, axiom: Axiom, witness: Vec<usize>) -> bool {
        self.failures.push(AxiomFailure { axiom, witness });
        self.mode == VerifyMode::Fast
    }

    fn alternating(&mut self) {
        let d = self.t.dim();
        let om = self.t.omega();
        for i in 0..d {
            for j in 0..=i {
                if om[(i, j)] != -&om[(j, i)] && self.fail(Axiom::AlternatingForm, vec![i, j]) {
                    return;
                }
            }
        }
    }

    fn symmetry(&mut self) {
        let d = self.t.dim();
        for i in 0..d {
            for j in 0..i {
                for k in 0..d {
                    if self.t.basis_triple(i, j, k) != self.t.basis_triple(j, i, k)
                        && self.fail(Axiom::Symmetry, vec![i, j, k])
                    {
                        return;
                    }
                }
            }
        }
    }

    fn skew(&mut self) {
        let d = self.t.dim();
        let om = self.t.omega();
        let two = Scalar::int(2);
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let mut r = vec![Scalar::zero(); d];
                    self.t.basis_triple(x, y, z).axpy_into(&Scalar::one(), &mut r);
                    self.t.basis_triple(x, z, y).axpy_into(&Scalar::int(-1), &mut r);
                    r[y] -= &om[(x, z)];
                    r[z] += &om[(x, y)];
                    r[x] -= &(&two * &om[(y, z)]);
                    if !r.iter().all(Scalar::is_zero) && self.fail(Axiom::Skew, vec![x, y, z]) {
                        return;
                    }
                }
            }
        }
    }

    fn operator_pairs(&self) -> Vec<(usize, usize)> {
        let d = self.t.dim();
        match self.mode {
            VerifyMode::Audit => (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect(),
            VerifyMode::Fast => self.t.inder_generators().1,
        }
    }

    /// `D[u,v,w] − [Du,v,w] − [u,Dv,w] − [u,v,Dw] = 0` for all `w`, with `D = d_{x,y}`.
    fn derivation(&mut self, pairs: &[(usize, usize)]) {
        let d = self.t.dim();
        for &(x, y) in pairs {
            let cols: Vec<&SparseVec> = (0..d).map(|u| self.t.basis_triple(x, y, u)).collect();
            for u in 0..d {
                for v in 0..d {
                    let mut bad = false;
                    for w in 0..d {
                        let mut r = vec![Scalar::zero(); d];
                        for (l, c) in self.t.basis_triple(u, v, w).iter() {
                            cols[l].axpy_into(c, &mut r);
                        }
                        for (p, c) in cols[u].iter() {
                            self.t.basis_triple(p, v, w).axpy_into(&-c, &mut r);
                        }
                        for (p, c) in cols[v].iter() {
                            self.t.basis_triple(u, p, w).axpy_into(&-c, &mut r);
                        }
                        for (p, c) in cols[w].iter() {
                            self.t.basis_triple(u, v, p).axpy_into(&-c, &mut r);
                        }
                        if !r.iter().all(Scalar::is_zero) {
                            bad = true;
                            break;
                        }
                    }
                    if bad && self.fail(Axiom::Derivation, vec![x, y, u, v]) {
                        return;
                    }
                }
            }
        }
    }

    fn symplectic(&mut self, pairs: &[(usize, usize)]) {
        let d = self.t.dim();
        let om = self.t.omega();
        for &(x, y) in pairs {
            let dm: Matrix = self.t.d_basis(x, y);
            // Dᵀ Ω + Ω D = 0
            let lhs = dm.transpose().mul(om).add(&om.mul(&dm));
            for u in 0..d {
                for v in 0..d {
                    if !lhs[(u, v)].is_zero() && self.fail(Axiom::Symplectic, vec![x, y, u, v]) {
                        return;
                    }
                }
            }
        }
    }
}

/// Checks the alternating form and the four defining identities on basis tuples.
/// Failures are report content, never errors.
pub fn verify_axioms(t: &SymplecticTripleSystem, mode: VerifyMode) -> AxiomReport {
    let mut c = Checker { t, mode, failures: Vec::new() };
    c.alternating();
    c.symmetry();
    c.skew();
    let pairs = c.operator_pairs();
    c.derivation(&pairs);
    c.symplectic(&pairs);
    AxiomReport { mode, failures: c.failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::CompositionKind;
    use crate::jordan::CubicJordan;
    use crate::sts::*;

    #[test]
    fn built_families_pass() {
        let systems = [
            build_symplectic_type(1).unwrap(),
            build_symplectic_type(2).unwrap(),
            build_orthogonal_type(3).unwrap(),
            build_special_type(1).unwrap(),
            build_special_type(2).unwrap(),
            build_exceptional_type(&CubicJordan::scalar()).unwrap(),
        ];
        for t in &systems {
            let r = verify_axioms(t, VerifyMode::Audit);
            assert!(r.passed(), "{}: {:?}", t.label(), &r.failures[..r.failures.len().min(5)]);
        }
    }

    #[test]
    fn f4_system_passes() {
        let t = build_exceptional_type(&CubicJordan::hermitian(CompositionKind::Unarion)).unwrap();
        let r = verify_axioms(&t, VerifyMode::Fast);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn perturbed_tensor_fails_with_witness() {
        let mut t = build_symplectic_type(1).unwrap();
        let slot = &mut t.triple_mut()[0];
        *slot = slot.add_scaled(&Scalar::one(), &SparseVec::unit(0));
        let r = verify_axioms(&t, VerifyMode::Fast);
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| !f.witness.is_empty()));
    }

    #[test]
    fn zero_product_fails_skew_identity() {
        let t0 = build_symplectic_type(1).unwrap();
        let t = SymplecticTripleSystem::from_parts(t0.omega().clone(), vec![SparseVec::new(); 8], "zero").unwrap();
        let r = verify_axioms(&t, VerifyMode::Audit);
        assert!(r.failed(Axiom::Skew));
        assert!(!r.failed(Axiom::Symmetry));
    }

    #[test]
    fn non_alternating_form_is_reported() {
        let t0 = build_symplectic_type(1).unwrap();
        let mut om = t0.omega().clone();
        om[(0, 0)] = Scalar::one();
        let t = SymplecticTripleSystem::from_parts(om, (0..8).map(|k| t0.basis_triple(k / 4, (k / 2) % 2, k % 2).clone()).collect(), "x").unwrap();
        let r = verify_axioms(&t, VerifyMode::Fast);
        assert!(r.failed(Axiom::AlternatingForm));
    }
}
