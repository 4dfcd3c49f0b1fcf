mod common;

use common::*;
use holotriple::connections::{alpha_canonical, alpha_distinguished, alpha_family, alpha_levi_civita, Connection};
use holotriple::enveloping::ReductiveSplit;
use holotriple::holonomy::ricci;
use holotriple::sts::Family;
use holotriple::Matrix;

fn columns(m: &Matrix, cols: std::ops::Range<usize>) -> Vec<Vec<holotriple::Scalar>> {
    cols.map(|c| m.column(c)).collect()
}

fn three(sp: &ReductiveSplit) -> [Connection<'_>; 3] {
    [
        Connection::new(sp, alpha_levi_civita(sp)).unwrap(),
        Connection::new(sp, alpha_distinguished(sp).unwrap()).unwrap(),
        Connection::new(sp, alpha_canonical(sp).unwrap()).unwrap(),
    ]
}

#[test]
fn levi_civita_is_minus_phi_on_the_vertical_part() {
    for f in light_families().into_iter().take(7) {
        let sp = split(f);
        let md = sp.m_dim();
        let lc = Connection::new(&sp, alpha_levi_civita(&sp)).unwrap();
        let o = Oracle::new(&sp);
        for p in 0..md {
            for q in 0..md {
                let phi = sp.phi_uv(&o.unit(p), &o.unit(q)).scale(&s(-1));
                assert_eq!(columns(&lc.curvature(p, q), 0..3), columns(&phi, 0..3), "{f} ({p},{q})");
            }
        }
    }
}

#[test]
fn levi_civita_is_minus_phi_for_equal_v_factors() {
    for f in light_families().into_iter().take(7) {
        let sp = split(f);
        let o = Oracle::new(&sp);
        let lc = Connection::new(&sp, alpha_levi_civita(&sp)).unwrap();
        for a in 0..2 {
            for x in 0..o.dt {
                for y in 0..o.dt {
                    let (p, q) = (o.odd_index(a, x), o.odd_index(a, y));
                    let phi = sp.phi_uv(&o.unit(p), &o.unit(q)).scale(&s(-1));
                    assert_eq!(columns(&lc.curvature(p, q), 3..o.md), columns(&phi, 3..o.md), "{f}");
                }
            }
        }
    }
}

/// `R^g(e₀⊗x, e₁⊗y)(e₀⊗z) = −φ(e₀⊗x, e₁⊗y)(e₀⊗z)` for all x, y, z, and
/// `[x,y,z] = (x,z)y + (y,z)x` on T.
fn constant_curvature_witness(f: Family) -> (bool, bool) {
    let sp = split(f);
    let o = Oracle::new(&sp);
    let lc = Connection::new(&sp, alpha_levi_civita(&sp)).unwrap();
    let mut curvature = true;
    let mut identity = true;
    for x in 0..o.dt {
        for y in 0..o.dt {
            let (p, q) = (o.odd_index(0, x), o.odd_index(1, y));
            let r = lc.curvature(p, q);
            let phi = sp.phi_uv(&o.unit(p), &o.unit(q));
            for z in 0..o.dt {
                let c = o.odd_index(0, z);
                let minus_phi: Vec<_> = phi.column(c).iter().map(|v| -v).collect();
                curvature &= r.column(c) == minus_phi;
                let rhs: Vec<_> = o
                    .t_unit(y)
                    .iter()
                    .zip(o.t_unit(x))
                    .map(|(ty, tx)| &(&o.omega(x, z) * ty) + &(&o.omega(y, z) * &tx))
                    .collect();
                identity &= o.triple(x, y, z) == rhs;
            }
        }
    }
    (curvature, identity)
}

#[test]
fn constant_curvature_only_for_symplectic_type() {
    for n in 1..=2 {
        assert_eq!(constant_curvature_witness(Family::Symplectic { n }), (true, true));
    }
    for f in [Family::Special { w: 1 }, Family::Orthogonal { w: 3 }, G2] {
        assert_eq!(constant_curvature_witness(f), (false, false), "{f}");
    }
}

#[test]
fn distinguished_and_canonical_agree_on_the_odd_part() {
    for f in light_families().into_iter().take(7) {
        let sp = split(f);
        let md = sp.m_dim();
        let [_, sd, cn] = three(&sp);
        for p in 0..md {
            for q in 0..md {
                let (rs, rc) = (sd.curvature(p, q), cn.curvature(p, q));
                assert!(columns(&rs, 0..3).iter().flatten().all(|v| v.is_zero()), "{f}");
                assert_eq!(columns(&rs, 3..md), columns(&rc, 3..md), "{f} ({p},{q})");
            }
        }
    }
}

#[test]
fn standard_connections_are_metric_and_admissible() {
    for f in light_families() {
        let sp = split(f);
        let g = &sp.metric().gram;
        for c in three(&sp) {
            assert!(c.is_metric() && c.is_admissible(), "{f} {}", c.label());
            for r in c.curvature_operators() {
                let gr = g.mul(r);
                assert!(gr.add(&gr.transpose()).is_zero(), "{f} {}", c.label());
            }
        }
        assert!(three(&sp).iter().all(Connection::is_skew_torsion), "{f}");
    }
}

#[test]
fn distinguished_is_ricci_flat_but_not_flat_in_dimension_seven() {
    let sp = split(Family::Symplectic { n: 1 });
    let sd = Connection::new(&sp, alpha_distinguished(&sp).unwrap()).unwrap();
    let r = ricci(&sd);
    assert!(r.ricci.is_zero());
    assert!(sd.curvature_operators().iter().any(|m| !m.is_zero()));
}

#[test]
fn family_parameters_reproduce_the_named_connections() {
    let sp = split(Family::Special { w: 2 });
    let id = Matrix::identity(3);
    let zero = Matrix::zeros(3, 3);
    assert_eq!(alpha_family(&sp, &s(2), &id).unwrap().operators(), alpha_distinguished(&sp).unwrap().operators());
    assert_eq!(alpha_family(&sp, &s(0), &id).unwrap().operators(), alpha_canonical(&sp).unwrap().operators());
    assert_eq!(alpha_family(&sp, &s(0), &zero).unwrap().operators(), alpha_levi_civita(&sp).operators());
}
