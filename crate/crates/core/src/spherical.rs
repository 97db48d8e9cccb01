//! Spherical objects in `K^b(proj A)` and the twist functors they define.

use serde::Serialize;

use crate::complex::{cone, hom_space, hom_table, minimize, row_map, ChainMap, ProjComplex, Triangle};
use crate::error::Result;
use crate::silting::HomEntry;

/// One row of the Calabi–Yau pairing test: `dim Hom(E, P_j[m])` against `dim Hom(P_j, E[d − m])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairingEntry {
    pub vertex: usize,
    pub shift: i32,
    pub to_projective: usize,
    pub from_projective: usize,
}

impl PairingEntry {
    pub fn holds(&self) -> bool {
        self.to_projective == self.from_projective
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SphericalReport {
    #[serde(skip)]
    pub complex: ProjComplex,
    pub d: i32,
    pub end_table: Vec<HomEntry>,
    pub pairing: Vec<PairingEntry>,
    pub end_ok: bool,
    pub serre_ok: bool,
    pub spherical: bool,
}

impl SphericalReport {
    pub fn first_pairing_failure(&self) -> Option<&PairingEntry> {
        self.pairing.iter().find(|p| !p.holds())
    }
}

fn expected_end(m: i32, d: i32) -> usize {
    usize::from(m == 0) + usize::from(m == d)
}

/// Checks that `End(E)` is one-dimensional in degrees `0` and `d` and zero elsewhere, and that
/// `Hom(E, P_j[m])` and `Hom(P_j, E[d − m])` have equal dimension for every indecomposable projective.
pub fn spherical_check(e: &ProjComplex, d: i32) -> SphericalReport {
    let alg = e.algebra().clone();
    let table = hom_table(e, e);
    let mut end_ok = !e.is_zero();
    for &(m, dim) in &table {
        end_ok &= dim == expected_end(m, d);
    }
    let covered = |m: i32| table.iter().any(|&(k, _)| k == m);
    for m in [0, d] {
        if !covered(m) {
            end_ok = false;
        }
    }

    let mut pairing = Vec::new();
    if !e.is_zero() {
        // Hom(E, P[m]) lives in [-hi, -lo]; Hom(P, E[d - m]) in [d - hi, d - lo].
        let lo = (-e.hi()).min(d - e.hi());
        let hi = (-e.lo()).max(d - e.lo());
        for v in 0..alg.num_vertices() {
            let p = ProjComplex::projective(alg.clone(), v);
            let (to, from) = (hom_table(e, &p), hom_table(&p, e));
            for m in lo..=hi {
                pairing.push(PairingEntry {
                    vertex: v,
                    shift: m,
                    to_projective: lookup(&to, m),
                    from_projective: lookup(&from, d - m),
                });
            }
        }
    }
    let serre_ok = !e.is_zero() && pairing.iter().all(PairingEntry::holds);
    SphericalReport {
        complex: e.clone(),
        d,
        end_table: table.into_iter().map(|(shift, dim)| HomEntry { shift, dim }).collect(),
        pairing,
        end_ok,
        serre_ok,
        spherical: end_ok && serre_ok,
    }
}

fn lookup(table: &[(i32, usize)], m: i32) -> usize {
    table.iter().find(|&&(k, _)| k == m).map_or(0, |&(_, d)| d)
}

/// `Hom(X, Y[m]) = 0 = Hom(Y, X[m])` for every `m`.
pub fn hom_orthogonal(x: &ProjComplex, y: &ProjComplex) -> bool {
    hom_table(x, y).iter().chain(hom_table(y, x).iter()).all(|&(_, d)| d == 0)
}

/// The twist of `X` along `E`, with the triangle `⊕ E[−m]^{h_m} → X → T → ⊕ E[1−m]^{h_m}`.
#[derive(Clone, Debug)]
pub struct SphericalTwist {
    /// `(m, h_m)` with `h_m = dim Hom(E, X[m]) > 0`.
    pub evaluation_shape: Vec<HomEntry>,
    pub evaluation: ChainMap,
    pub triangle: Triangle,
    /// Minimal model of the cone.
    pub twisted: ProjComplex,
}

/// Cone of the evaluation map assembled from a basis of every `Hom(E, X[m])`.
pub fn spherical_twist(e: &ProjComplex, x: &ProjComplex) -> Result<SphericalTwist> {
    let mut shape = Vec::new();
    let mut maps = Vec::new();
    for (m, dim) in hom_table(e, x) {
        if dim == 0 {
            continue;
        }
        shape.push(HomEntry { shift: m, dim });
        maps.extend(hom_space(e, x, m).basis().iter().map(ChainMap::to_degree_zero));
    }
    let evaluation = row_map(&maps, x);
    let triangle = cone(&evaluation)?;
    let twisted = minimize(&triangle.cone);
    Ok(SphericalTwist { evaluation_shape: shape, evaluation, triangle, twisted })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Algebra;
    use crate::complex::hom_dim;
    use crate::fixtures::{paper_algebra, paper_sigma};
    use crate::krull_schmidt::iso_in_homotopy;
    use crate::linalg::PrimeField;
    use crate::module::{cyclic_quotient, projective_resolution};

    fn setup(n: usize) -> (Arc<Algebra>, ProjComplex, ProjComplex) {
        let a = Arc::new(paper_algebra(n, PrimeField::new(101).unwrap()).unwrap());
        let sigma = paper_sigma(&a).unwrap();
        let e = cyclic_quotient(a.clone(), 0, &[a.generator("y1").unwrap().to_vec()]).unwrap();
        let res = projective_resolution(&e, 2 * n).unwrap();
        let twisted = res.twist(&sigma);
        (a, res, twisted)
    }

    #[test]
    fn resolved_e_is_spherical() {
        let (_, e, se) = setup(4);
        let r = spherical_check(&e, 3);
        assert!(r.end_ok && r.serre_ok, "{:?}", r.end_table);
        let nonzero: Vec<_> = r.end_table.iter().filter(|h| h.dim > 0).map(|h| (h.shift, h.dim)).collect();
        assert_eq!(nonzero, vec![(0, 1), (3, 1)]);
        assert!(spherical_check(&se, 3).spherical);
        assert!(!spherical_check(&e, 2).spherical);
    }

    #[test]
    fn projective_is_not_spherical() {
        let (a, _, _) = setup(4);
        let p = ProjComplex::projective(a, 0);
        for d in [0, 1, 3] {
            assert!(!spherical_check(&p, d).spherical);
        }
    }

    #[test]
    fn orthogonality() {
        let (a, e, se) = setup(4);
        assert!(hom_orthogonal(&e, &se));
        assert!(!hom_orthogonal(&e, &e));
        let (p1, p4) = (ProjComplex::projective(a.clone(), 0), ProjComplex::projective(a, 3));
        assert_eq!(hom_dim(&p4, &p1, 0), 2);
        assert!(!hom_orthogonal(&p1, &p4));
    }

    #[test]
    fn twist_of_the_regular_complex() {
        let (a, e, se) = setup(4);
        let reg = ProjComplex::regular(a.clone());
        let tw = spherical_twist(&e, &reg).unwrap();
        assert_eq!(tw.evaluation_shape, vec![HomEntry { shift: 3, dim: 4 }]);
        let t = &tw.twisted;
        assert_eq!(hom_dim(t, t, 0), 16);
        for (m, d) in hom_table(t, t) {
            assert_eq!(d, if m == 0 { 16 } else { 0 }, "shift {m}");
        }
        let sigma = paper_sigma(&a).unwrap();
        let st = spherical_twist(&se, &reg).unwrap().twisted;
        assert!(iso_in_homotopy(&st, &t.twist(&sigma)).unwrap());
    }

    #[test]
    fn twisting_an_orthogonal_object_does_nothing() {
        let (_, e, se) = setup(4);
        let tw = spherical_twist(&e, &se).unwrap();
        assert!(tw.evaluation_shape.is_empty());
        assert!(iso_in_homotopy(&tw.twisted, &se).unwrap());
    }

    #[test]
    fn twist_sends_e_to_a_shift() {
        // T_E(E) ≅ E[1 − d]
        let (_, e, _) = setup(4);
        let t = spherical_twist(&e, &e).unwrap().twisted;
        assert!(iso_in_homotopy(&t, &e.shift(-2)).unwrap());
    }
}
