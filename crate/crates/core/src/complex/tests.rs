use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::algebra::Algebra;
use crate::fixtures::paper_algebra;
use crate::linalg::PrimeField;
use crate::rng::rng_for;

fn alg4() -> Arc<Algebra> {
    Arc::new(paper_algebra(4, PrimeField::new(101).unwrap()).unwrap())
}

fn single(alg: &Algebra, name: &str) -> ElemMatrix {
    let mut m = ElemMatrix::zeros(1, 1, alg.dim());
    m.set(0, 0, alg.generator(name).unwrap());
    m
}

/// `P3 → P2 → P1` (1-based) with differentials given by arrow names.
fn chain(alg: &Arc<Algebra>, first: &str, second: &str) -> Result<ProjComplex> {
    ProjComplex::new(alg.clone(), 0, vec![vec![2], vec![1], vec![0]], vec![single(alg, second), single(alg, first)])
}

#[test]
fn validation_checks_square_zero_and_corners() {
    let a = alg4();
    assert!(chain(&a, "x1", "x2").is_ok());
    assert!(chain(&a, "x1", "y2").is_err());
    // x1 lives in e1Ae2, not e2Ae1
    let bad = ProjComplex::new(a.clone(), 0, vec![vec![0], vec![1]], vec![single(&a, "x1")]);
    assert!(bad.is_err());
}

#[test]
fn shift_negates_and_moves_degrees() {
    let a = alg4();
    let x = chain(&a, "y1", "y2").unwrap();
    let s = x.shift(1);
    assert_eq!((s.lo(), s.hi()), (-1, 1));
    assert_eq!(s.diff(-1).unwrap(), &x.diff(0).unwrap().neg(&a));
    assert_eq!(s.shift(-1), x);
    assert_eq!(x.g_vector(), vec![1, -1, 1, 0]);
    assert_eq!(s.g_vector(), vec![-1, 1, -1, 0]);
}

#[test]
fn hom_between_stalk_projectives() {
    let a = alg4();
    let p = |v| ProjComplex::projective(a.clone(), v);
    assert_eq!(hom_dim(&p(1), &p(0), 0), 2);
    assert_eq!(hom_dim(&p(0), &p(1), 0), 0);
    assert_eq!(hom_dim(&p(0), &p(0), 0), 1);
    assert_eq!(hom_dim(&p(3), &p(0), 0), 2);
    assert_eq!(hom_dim(&p(1), &p(0).shift(-1), 1), 2);
    assert_eq!(hom_table(&p(1), &p(0)), vec![(0, 2)]);
}

#[test]
fn cone_of_identity_is_contractible() {
    let a = alg4();
    let x = chain(&a, "x1", "x2").unwrap();
    let t = cone(&ChainMap::identity(&x)).unwrap();
    assert!(is_contractible(&t.cone));
    assert!(minimize(&t.cone).is_zero());
    assert!(!is_contractible(&x));
}

#[test]
fn cone_of_zero_is_a_direct_sum() {
    let a = alg4();
    let x = chain(&a, "x1", "x2").unwrap();
    let y = ProjComplex::stalk(a.clone(), 1, vec![3, 0]);
    let t = cone(&ChainMap::zero(&x, &y, 0)).unwrap();
    assert_eq!(t.cone, ProjComplex::direct_sum(&[&x.shift(1), &y]).unwrap());
    assert!(t.inclusion.is_chain_map());
    assert!(t.projection.is_chain_map());
    assert!(compose(&t.inclusion, &t.projection).is_zero());
}

#[test]
fn minimize_removes_contractible_summands() {
    let a = alg4();
    let x = chain(&a, "x1", "x2").unwrap();
    let id = ProjComplex::new(a.clone(), 1, vec![vec![2], vec![2]], vec![ElemMatrix::identity(&a, &[2])]).unwrap();
    let big = ProjComplex::direct_sum(&[&x, &id]).unwrap();
    let m = minimize(&big);
    assert_eq!(m.term_profile(), x.term_profile());
    assert_eq!(nonzero(hom_table(&m, &x)), nonzero(hom_table(&big, &x)));
}

#[test]
fn null_homotopic_maps_have_no_coordinates() {
    let a = alg4();
    let x = chain(&a, "x1", "x2").unwrap();
    let h = hom_space(&x, &x, 0);
    assert_eq!(h.dim(), hom_dim(&x, &x, 0));
    let id = ChainMap::identity(&x);
    assert!(!h.is_null_homotopic(&id));
    assert!(h.is_null_homotopic(&ChainMap::zero(&x, &x, 0)));
}

#[test]
fn twisting_by_an_involution_twice_is_trivial() {
    let a = alg4();
    let s = crate::fixtures::paper_sigma(&a).unwrap();
    let x = chain(&a, "x1", "x2").unwrap();
    let t = x.twist(&s);
    assert_eq!(t, chain(&a, "y1", "y2").unwrap());
    assert_eq!(t.twist(&s), x);
}

/// Random two-term complex `⊕ P → ⊕ P` in degrees `lo, lo+1` with a random differential.
fn random_two_term(alg: &Arc<Algebra>, src: Vec<usize>, tgt: Vec<usize>, lo: i32, seed: u64) -> ProjComplex {
    let s = ProjComplex::stalk(alg.clone(), 0, src);
    let t = ProjComplex::stalk(alg.clone(), 0, tgt);
    let h = hom_space(&s, &t, 0);
    let (_, f) = h.random_element(&mut rng_for(seed, "two-term"));
    cone(&f).unwrap().cone.shift(-1 - lo)
}

fn nonzero(t: Vec<(i32, usize)>) -> Vec<(i32, usize)> {
    t.into_iter().filter(|&(_, d)| d > 0).collect()
}

fn euler_from_terms(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> i64 {
    let (gx, gy) = (x.g_vector(), y.g_vector());
    let mut sum = 0;
    for v in 0..alg.num_vertices() {
        for w in 0..alg.num_vertices() {
            sum += gx[v] * gy[w] * alg.corner_dim(w, v) as i64;
        }
    }
    sum
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn euler_form_depends_only_on_classes(
        xs in proptest::collection::vec(0usize..4, 0..3),
        xt in proptest::collection::vec(0usize..4, 0..3),
        ys in proptest::collection::vec(0usize..4, 0..3),
        yt in proptest::collection::vec(0usize..4, 0..3),
        lo in -1i32..2,
        seed in any::<u64>(),
    ) {
        let a = alg4();
        let x = random_two_term(&a, xs, xt, 0, seed);
        let y = random_two_term(&a, ys, yt, lo, seed ^ 1);
        prop_assert_eq!(euler_form(&x, &y), euler_from_terms(&a, &x, &y));
    }

    #[test]
    fn minimizing_preserves_homs(
        xs in proptest::collection::vec(0usize..4, 1..3),
        xt in proptest::collection::vec(0usize..4, 1..3),
        seed in any::<u64>(),
    ) {
        let a = alg4();
        let x = random_two_term(&a, xs, xt, 0, seed);
        let m = minimize(&x);
        let p = ProjComplex::regular(a.clone());
        prop_assert!(m.diffs().iter().all(|d| d.is_radical(&a)));
        prop_assert_eq!(nonzero(hom_table(&p, &m)), nonzero(hom_table(&p, &x)));
        prop_assert_eq!(nonzero(hom_table(&m, &m)), nonzero(hom_table(&x, &x)));
        prop_assert_eq!(m.g_vector(), x.g_vector());
    }
}
