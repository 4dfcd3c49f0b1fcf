//! Holonomy algebras (Ambrose–Singer form), Ricci tensors, scalar curvature
//! and the dimension table.

use serde::{Deserialize, Serialize};

use crate::connections::{
    alpha_canonical, alpha_distinguished, alpha_levi_civita, Connection, ConnectionKind,
};
use crate::enveloping::{build_enveloping, ReductiveSplit};
use crate::error::{Error, Result};
use crate::linalg::{bracket_closure, Matrix, MatrixAlgebra, Scalar, Subspace};
use crate::sts::Family;

#[derive(Clone, Debug)]
pub struct HolonomyResult {
    pub label: ConnectionKind,
    pub m_dim: usize,
    pub dim: usize,
    pub center_dim: usize,
    /// Whether the algebra is all of `so(m, g)`.
    pub contains_so: bool,
    pub algebra: MatrixAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolonomySummary {
    pub connection: String,
    pub m_dim: usize,
    pub dim: usize,
    pub center: usize,
    pub contains_so: bool,
}

impl HolonomyResult {
    pub fn summary(&self) -> HolonomySummary {
        HolonomySummary {
            connection: self.label.to_string(),
            m_dim: self.m_dim,
            dim: self.dim,
            center: self.center_dim,
            contains_so: self.contains_so,
        }
    }
}

/// `so(m, g) = {A : Aᵀg + gA = 0}`, spanned by `g⁻¹(E_ij − E_ji)`.
pub fn so_metric(split: &ReductiveSplit) -> Result<Subspace> {
    let md = split.m_dim();
    let ginv = &split.metric().inverse;
    let mut s = Subspace::zero(md * md);
    for i in 0..md {
        for j in i + 1..md {
            // g⁻¹(E_ij − E_ji): column j is g⁻¹ e_i, column i is −g⁻¹ e_j.
            let mut a = Matrix::zeros(md, md);
            for r in 0..md {
                a[(r, j)] = ginv[(r, i)].clone();
                a[(r, i)] = -&ginv[(r, j)];
            }
            s.insert(a.as_flat())?;
        }
    }
    Ok(s)
}

/// Smallest subalgebra of `gl(m)` containing every `R(eᵢ, eⱼ)` and closed
/// under commutators with every `α(eᵢ, ·)`.
pub fn holonomy_algebra(conn: &Connection<'_>) -> Result<HolonomyResult> {
    let split = conn.split();
    let md = split.m_dim();
    let metric = conn.is_metric();
    let so = if metric { Some(so_metric(split)?) } else { None };
    let algebra = bracket_closure(conn.curvature_operators(), conn.alpha().operators(), so.as_ref())?;
    let contains_so = so.as_ref().is_some_and(|s| s.dim() == algebra.dim());
    let center_dim = if contains_so && md >= 3 {
        // so(m) is semisimple for m ≥ 3; skip the quadratic center computation.
        0
    } else {
        algebra.center()?.dim()
    };
    Ok(HolonomyResult {
        label: conn.label().clone(),
        m_dim: md,
        dim: algebra.dim(),
        center_dim,
        contains_so,
        algebra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub connection: String,
    pub expected_dim: usize,
    pub holonomy_dim: usize,
    pub equal: bool,
}

/// The subspace the holonomy of `α^S` or `α^c` should be:
/// `ad(sp(V) ⊕ inder T)|ₘ` for `α^c`, `span{α^S_ξ} ⊕ ad(inder T)|ₘ` for `α^S`.
pub fn expected_torsion_holonomy(conn: &Connection<'_>) -> Result<Subspace> {
    let split = conn.split();
    let md = split.m_dim();
    let vertical: Vec<Matrix> = match conn.label() {
        ConnectionKind::Canonical => (0..3).map(|i| split.ad_xi(i)).collect(),
        ConnectionKind::Distinguished => (0..3).map(|i| conn.alpha().op(i).clone()).collect(),
        other => {
            return Err(Error::InvalidParameter(format!(
                "no closed-form holonomy for the {other} connection"
            )))
        }
    };
    Subspace::spanned_by(md * md, vertical.iter().chain(split.ad_h()).map(Matrix::as_flat))
}

pub fn holonomy_identity_check(conn: &Connection<'_>, hol: &HolonomyResult) -> Result<IdentityReport> {
    let expected = expected_torsion_holonomy(conn)?;
    Ok(IdentityReport {
        connection: conn.label().to_string(),
        expected_dim: expected.dim(),
        holonomy_dim: hol.dim,
        equal: expected == hol.algebra.span,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciData {
    /// `Ric(eₚ, e_q)`.
    pub ricci: Matrix,
    /// `c` with `Ric = c·g` on `sp(1) × sp(1)`, if proportional.
    pub vertical_constant: Option<Scalar>,
    /// `c` with `Ric = c·g` on `g₁ × g₁`, if proportional.
    pub horizontal_constant: Option<Scalar>,
    /// `Ric` vanishes on `sp(1) × g₁` and `g₁ × sp(1)`.
    pub mixed_vanishes: bool,
    pub scalar_curvature: Scalar,
}

/// `Ric(X, Y) = tr(Z ↦ R(Z, X)Y)`.
pub fn ricci_tensor(conn: &Connection<'_>) -> Matrix {
    let md = conn.split().m_dim();
    let mut ric = Matrix::zeros(md, md);
    for i in 0..md {
        for p in 0..md {
            if i == p {
                continue;
            }
            let r = conn.curvature(i, p);
            for q in 0..md {
                let x = &r[(i, q)];
                if !x.is_zero() {
                    ric[(p, q)] = &ric[(p, q)] + x;
                }
            }
        }
    }
    ric
}

fn block_constant(ric: &Matrix, g: &Matrix, range: std::ops::Range<usize>) -> Option<Scalar> {
    let mut c: Option<Scalar> = None;
    for p in range.clone() {
        for q in range.clone() {
            if g[(p, q)].is_zero() {
                if !ric[(p, q)].is_zero() {
                    return None;
                }
                continue;
            }
            let ratio = &ric[(p, q)] / &g[(p, q)];
            match &c {
                None => c = Some(ratio),
                Some(c0) if *c0 != ratio => return None,
                _ => {}
            }
        }
    }
    c
}

/// `Σᵢⱼ (g⁻¹)ᵢⱼ Ric(eᵢ, eⱼ)`.
pub fn scalar_curvature_of(ric: &Matrix, split: &ReductiveSplit) -> Scalar {
    let ginv = &split.metric().inverse;
    let md = split.m_dim();
    let mut s = Scalar::zero();
    for i in 0..md {
        for j in 0..md {
            if !ginv[(i, j)].is_zero() {
                s.add_mul(&ginv[(i, j)], &ric[(i, j)]);
            }
        }
    }
    s
}

pub fn ricci(conn: &Connection<'_>) -> RicciData {
    let split = conn.split();
    let md = split.m_dim();
    let g = &split.metric().gram;
    let ricci = ricci_tensor(conn);
    let mixed_vanishes = (0..3).all(|p| (3..md).all(|q| ricci[(p, q)].is_zero() && ricci[(q, p)].is_zero()));
    RicciData {
        vertical_constant: block_constant(&ricci, g, 0..3),
        horizontal_constant: block_constant(&ricci, g, 3..md),
        mixed_vanishes,
        scalar_curvature: scalar_curvature_of(&ricci, split),
        ricci,
    }
}

pub fn scalar_curvature(conn: &Connection<'_>) -> Scalar {
    scalar_curvature_of(&ricci_tensor(conn), conn.split())
}

/// `(4n+2)(4n+3) − 3/2 (a − tr B)² − 3n‖B‖²`.
///
/// Quoted from a parametrization that is not the one used for `α_o`, `α_rs`
/// here: it does not reproduce the computed scalar curvature of `α^S` or
/// `α^c`, and is kept only to exhibit that mismatch.
pub fn quadratic_scalar_probe(n: usize, a: &Scalar, b: &Matrix) -> Scalar {
    let n = n as i64;
    let mut tr = Scalar::zero();
    let mut norm2 = Scalar::zero();
    for r in 0..3 {
        tr = &tr + &b[(r, r)];
        for c in 0..3 {
            norm2.add_mul(&b[(r, c)], &b[(r, c)]);
        }
    }
    let d = a - &tr;
    let base = Scalar::int((4 * n + 2) * (4 * n + 3));
    &(&base - &(&(&d * &d) * &Scalar::frac(3, 2))) - &(&norm2 * &Scalar::int(3 * n))
}

/// Closed forms the computations are compared against.
pub mod expected {
    use super::*;
    use crate::jordan::JordanKind;

    /// `dim so(4n+3) = 8n² + 10n + 3`.
    pub fn hol_levi_civita(n: usize) -> usize {
        8 * n * n + 10 * n + 3
    }

    /// `dim hol(∇^S) = dim hol(∇^c)` from the table.
    pub fn hol_torsion(f: Family) -> usize {
        match f {
            Family::Symplectic { n } => 2 * n * n + n + 3,
            Family::Special { w } => w * w + 3,
            Family::Orthogonal { w } => w * (w - 1) / 2 + 6,
            Family::Exceptional(JordanKind::Scalar) => 6,
            Family::Exceptional(_) => match f.exceptional_name() {
                Some("f4") => 24,
                Some("e6") => 38,
                Some("e7") => 69,
                _ => 136,
            },
        }
    }

    pub fn center_torsion(f: Family) -> usize {
        usize::from(matches!(f, Family::Special { .. }))
    }

    /// `(vertical, horizontal)` Ricci constants.
    pub fn ricci_constants(kind: &ConnectionKind, n: usize) -> Option<(Scalar, Scalar)> {
        let n = n as i64;
        match kind {
            ConnectionKind::LeviCivita => Some((Scalar::int(4 * n + 2), Scalar::int(4 * n + 2))),
            ConnectionKind::Distinguished => Some((Scalar::zero(), Scalar::int(4 * n - 4))),
            ConnectionKind::Canonical => Some((Scalar::int(-16), Scalar::int(4 * n - 4))),
            _ => None,
        }
    }

    pub fn scalar_curvature(kind: &ConnectionKind, n: usize) -> Option<Scalar> {
        let n = n as i64;
        match kind {
            ConnectionKind::LeviCivita => Some(Scalar::int((4 * n + 2) * (4 * n + 3))),
            ConnectionKind::Distinguished => Some(Scalar::int(16 * n * (n - 1))),
            ConnectionKind::Canonical => Some(Scalar::int(16 * (n * n - n - 3))),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub computed: usize,
    pub expected: usize,
}

impl Check {
    pub fn ok(self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub case: String,
    pub n: usize,
    pub m_dim: usize,
    pub hol_levi_civita: Check,
    pub hol_distinguished: Check,
    pub hol_canonical: Check,
    pub center_distinguished: Check,
    pub center_canonical: Check,
    pub passed: bool,
}

/// Builds the split of a family's standard enveloping algebra.
pub fn split_for(f: Family) -> Result<ReductiveSplit> {
    ReductiveSplit::new(build_enveloping(&f.build()?)?)
}

pub fn table_row(f: Family) -> Result<TableRow> {
    let split = split_for(f)?;
    let n = split.n();
    let hol = |a| -> Result<HolonomyResult> { holonomy_algebra(&Connection::new(&split, a)?) };
    let g = hol(alpha_levi_civita(&split))?;
    let s = hol(alpha_distinguished(&split)?)?;
    let c = hol(alpha_canonical(&split)?)?;
    let t = expected::hol_torsion(f);
    let z = expected::center_torsion(f);
    let row = |passed| TableRow {
        case: f.to_string(),
        n,
        m_dim: split.m_dim(),
        hol_levi_civita: Check { computed: g.dim, expected: expected::hol_levi_civita(n) },
        hol_distinguished: Check { computed: s.dim, expected: t },
        hol_canonical: Check { computed: c.dim, expected: t },
        center_distinguished: Check { computed: s.center_dim, expected: z },
        center_canonical: Check { computed: c.center_dim, expected: z },
        passed,
    };
    let mut r = row(false);
    r.passed = [r.hol_levi_civita, r.hol_distinguished, r.hol_canonical, r.center_distinguished, r.center_canonical]
        .iter()
        .all(|c| c.ok());
    Ok(r)
}

pub fn table_report(families: &[Family]) -> Result<Vec<TableRow>> {
    families.iter().map(|&f| table_row(f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connections::{alpha_family, NomizuMap};
    use crate::jordan::JordanKind;

    fn conn_dims(f: Family) -> (usize, usize, usize) {
        let r = table_row(f).unwrap();
        (r.hol_levi_civita.computed, r.hol_distinguished.computed, r.hol_canonical.computed)
    }

    #[test]
    fn so_metric_dimension_and_membership() {
        let split = split_for(Family::Symplectic { n: 1 }).unwrap();
        let so = so_metric(&split).unwrap();
        assert_eq!(so.dim(), 21);
        let c = Connection::new(&split, alpha_canonical(&split).unwrap()).unwrap();
        for op in c.alpha().operators() {
            assert!(so.contains(op.as_flat()).unwrap());
        }
    }

    #[test]
    fn symplectic_one() {
        assert_eq!(conn_dims(Family::Symplectic { n: 1 }), (21, 6, 6));
    }

    #[test]
    fn g2() {
        assert_eq!(conn_dims(Family::Exceptional(JordanKind::Scalar)), (55, 6, 6));
    }

    #[test]
    fn special_center() {
        let r = table_row(Family::Special { w: 1 }).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.center_canonical.computed, 1);
    }

    #[test]
    fn identity_checks() {
        let split = split_for(Family::Symplectic { n: 1 }).unwrap();
        for a in [alpha_distinguished(&split).unwrap(), alpha_canonical(&split).unwrap()] {
            let c = Connection::new(&split, a).unwrap();
            let h = holonomy_algebra(&c).unwrap();
            let rep = holonomy_identity_check(&c, &h).unwrap();
            assert!(rep.equal, "{rep:?}");
        }
        let lc = Connection::new(&split, alpha_levi_civita(&split)).unwrap();
        let h = holonomy_algebra(&lc).unwrap();
        assert!(holonomy_identity_check(&lc, &h).is_err());
        assert!(h.contains_so);
    }

    #[test]
    fn ricci_at_n_one() {
        let split = split_for(Family::Symplectic { n: 1 }).unwrap();
        let cases = [
            (alpha_levi_civita(&split), 6, 6, 42),
            (alpha_distinguished(&split).unwrap(), 0, 0, 0),
            (alpha_canonical(&split).unwrap(), -16, 0, -48),
        ];
        for (a, v, h, s) in cases {
            let c = Connection::new(&split, a).unwrap();
            let r = ricci(&c);
            assert!(r.mixed_vanishes);
            assert_eq!(r.vertical_constant, Some(Scalar::int(v)), "{}", c.label());
            assert_eq!(r.horizontal_constant, Some(Scalar::int(h)), "{}", c.label());
            assert_eq!(r.scalar_curvature, Scalar::int(s), "{}", c.label());
            assert!(r.ricci.is_symmetric());
        }
    }

    #[test]
    fn quadratic_probe_misses_the_torsion_connections() {
        let split = split_for(Family::Symplectic { n: 2 }).unwrap();
        let id = Matrix::identity(3);
        let zero = Matrix::zeros(3, 3);
        let lc = Connection::new(&split, alpha_family(&split, &Scalar::zero(), &zero).unwrap()).unwrap();
        assert_eq!(scalar_curvature(&lc), quadratic_scalar_probe(2, &Scalar::zero(), &zero));
        let s = Connection::new(&split, alpha_family(&split, &Scalar::int(2), &id).unwrap()).unwrap();
        assert_ne!(scalar_curvature(&s), quadratic_scalar_probe(2, &Scalar::int(2), &id));
        let c = Connection::new(&split, alpha_family(&split, &Scalar::zero(), &id).unwrap()).unwrap();
        assert_ne!(scalar_curvature(&c), quadratic_scalar_probe(2, &Scalar::zero(), &id));
    }

    #[test]
    fn zero_map_holonomy_is_ad_h() {
        let split = split_for(Family::Symplectic { n: 1 }).unwrap();
        let zero = NomizuMap::zero(split.m_dim(), ConnectionKind::Other { name: "zero".into() });
        let c = Connection::new(&split, zero).unwrap();
        let h = holonomy_algebra(&c).unwrap();
        let ad_h = Subspace::spanned_by(split.m_dim().pow(2), split.ad_h().iter().map(Matrix::as_flat)).unwrap();
        assert!(h.algebra.span.contains_subspace(&ad_h).unwrap());
    }
}
