use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::algebra::{path_algebra, Arrow, Quiver, Relation};
use crate::complex::{cone, hom_space, ProjComplex};
use crate::fixtures::paper_algebra;
use crate::linalg::PrimeField;

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn alg4() -> Arc<Algebra> {
    Arc::new(paper_algebra(4, gf(101)).unwrap())
}

fn dual_numbers(p: u32) -> Algebra {
    let q = Quiver::new(1, vec![Arrow::new("x", 0, 0)]).unwrap();
    path_algebra(gf(p), &q, &[Relation::monomial(&q, &["x", "x"]).unwrap()], 4).unwrap()
}

/// `M_2(F)` with matrix units `e11, e22, e12, e21`.
fn matrix_algebra(p: u32) -> StructureTable {
    // index: 0 = e11, 1 = e22, 2 = e12, 3 = e21; e_ij e_kl = δ_jk e_il
    let unit_of = |i: usize, j: usize| match (i, j) {
        (0, 0) => 0,
        (1, 1) => 1,
        (0, 1) => 2,
        _ => 3,
    };
    let pairs = [(0, 0), (1, 1), (0, 1), (1, 0)];
    let mut table = Vec::new();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let mut v = vec![0; 4];
            if j == k {
                v[unit_of(i, l)] = 1;
            }
            table.push(v);
        }
    }
    StructureTable::new(gf(p), 4, table, vec![1, 1, 0, 0])
}

#[test]
fn radical_of_dual_numbers_in_characteristic_two() {
    for p in [2, 3, 101] {
        let a = dual_numbers(p);
        let rad = algebra_radical(&a);
        assert_eq!(rad.len(), 1, "p = {p}");
        assert_eq!(rad[0][0], 0);
    }
}

#[test]
fn matrix_algebra_is_semisimple_in_characteristic_two() {
    for p in [2, 101] {
        assert!(matrix_algebra(p).radical().is_empty(), "p = {p}");
    }
}

#[test]
fn radical_of_a4_is_spanned_by_paths() {
    let a = paper_algebra(4, gf(2)).unwrap();
    assert_eq!(algebra_radical(&a).len(), a.dim() - 4);
}

#[test]
fn non_split_field_extension_is_reported() {
    // F_4 = F_2[x]/(x^2 + x + 1)
    let table = vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 1]];
    let t = StructureTable::new(gf(2), 2, table, vec![1, 0]);
    assert!(t.radical().is_empty());
    let mut rng = rng_for(0, "test");
    match t.split_idempotent(2, &mut rng) {
        Err(Error::SplitFailure { end_top_dim, factor_degree }) => assert_eq!((end_top_dim, factor_degree), (2, 2)),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn idempotents_split_matrix_algebra() {
    let t = matrix_algebra(101);
    let mut rng = rng_for(1, "test");
    let e = t.split_idempotent(4, &mut rng).unwrap();
    assert_eq!(t.mul(&e, &e), e);
    assert_ne!(e, vec![0; 4]);
    assert_ne!(e, t.unit().to_vec());
}

#[test]
fn decompose_sum_of_projectives() {
    let a = alg4();
    let x = ProjComplex::stalk(a.clone(), 0, vec![0, 0, 1]);
    let d = decompose(&x).unwrap();
    let m = d.multiplicities();
    assert_eq!(m.len(), 2);
    assert_eq!((m[0].0.clone(), m[0].1), (ProjComplex::projective(a.clone(), 0), 2));
    assert_eq!((m[1].0.clone(), m[1].1), (ProjComplex::projective(a.clone(), 1), 1));
    assert_eq!(basic_form(&x).unwrap(), ProjComplex::stalk(a.clone(), 0, vec![0, 1]));
    let reg = decompose(&ProjComplex::regular(a.clone())).unwrap();
    assert_eq!(reg.len(), 4);
    assert!(reg.is_basic());
}

#[test]
fn end_algebras_of_stalks() {
    let a = alg4();
    for v in 0..4 {
        assert_eq!(end_algebra(&ProjComplex::projective(a.clone(), v)).unwrap().dim(), 1);
    }
    let e = end_algebra(&ProjComplex::regular(a.clone())).unwrap();
    assert_eq!(e.dim(), 16);
    assert_eq!(e.algebra.cartan_matrix(), a.cartan_matrix());
}

fn arrow_complex(a: &Arc<Algebra>, name: &str, src: usize, tgt: usize) -> ProjComplex {
    let s = ProjComplex::projective(a.clone(), src);
    let t = ProjComplex::projective(a.clone(), tgt);
    let h = hom_space(&s, &t, 0);
    let mut m = ElemMatrix::zeros(1, 1, a.dim());
    m.set(0, 0, a.generator(name).unwrap());
    let f = ChainMap::new(&s, &t, 0, vec![m]).unwrap();
    assert!(h.coordinates(&f).is_some());
    cone(&f).unwrap().cone
}

#[test]
fn cone_of_an_arrow_is_indecomposable() {
    let a = alg4();
    let c = arrow_complex(&a, "y2", 2, 1);
    let d = decompose(&c).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(end_radical_dims(&c).0, 1);
}

#[test]
fn mixed_sum_splits_and_maps_are_split() {
    let a = alg4();
    let c = arrow_complex(&a, "y2", 2, 1);
    let c2 = arrow_complex(&a, "x3", 3, 2);
    let id = ProjComplex::new(a.clone(), -1, vec![vec![0], vec![0]], vec![ElemMatrix::identity(&a, &[0])]).unwrap();
    let x = ProjComplex::direct_sum(&[&c, &c2, &c, &id, &c2.shift(1)]).unwrap();
    let d = decompose(&x).unwrap();
    assert_eq!(d.len(), 4);
    assert_eq!(d.num_classes(), 3);
    let g: Vec<i64> =
        d.summands.iter().fold(vec![0; 4], |acc, s| acc.iter().zip(s.complex.g_vector()).map(|(a, b)| a + b).collect());
    assert_eq!(g, x.g_vector());
    for s in &d.summands {
        let back = compose(&s.inclusion, &s.projection);
        assert_eq!(back.components(), ChainMap::identity(&s.complex).components());
    }
    assert!(iso_in_homotopy(&x, &ProjComplex::direct_sum(&[&c, &c, &c2, &c2.shift(1)]).unwrap()).unwrap());
    assert!(!iso_in_homotopy(&x, &ProjComplex::direct_sum(&[&c, &c2, &c2, &c2.shift(1)]).unwrap()).unwrap());
}

#[test]
fn iso_basics() {
    let a = alg4();
    let p = |v| ProjComplex::projective(a.clone(), v);
    assert!(!iso_in_homotopy(&p(0), &p(1)).unwrap());
    let c = arrow_complex(&a, "y2", 2, 1);
    let t = cone(&ChainMap::identity(&c)).unwrap().cone;
    assert!(iso_in_homotopy(&c, &ProjComplex::direct_sum(&[&c, &t]).unwrap()).unwrap());
    assert!(!iso_in_homotopy(&c, &arrow_complex(&a, "x2", 2, 1)).unwrap());
    let sigma = crate::fixtures::paper_sigma(&a).unwrap();
    assert!(iso_in_homotopy(&c.twist(&sigma), &arrow_complex(&a, "x2", 2, 1)).unwrap());
}

#[test]
fn kronecker_summand_with_irreducible_parameter_does_not_split() {
    // x·I + y·M over the double arrow 2 → 1, with M the companion matrix of t^2 - 2
    let a = alg4();
    let x2 = a.generator("x2").unwrap().to_vec();
    let y2 = a.generator("y2").unwrap().to_vec();
    let f = a.field();
    let mut m = ElemMatrix::zeros(2, 2, a.dim());
    m.set(0, 0, &x2);
    m.set(1, 1, &x2);
    m.set(0, 1, &y2.iter().map(|&c| f.mul(c, 2)).collect::<Vec<_>>());
    m.set(1, 0, &y2);
    let c = ProjComplex::new(a.clone(), -1, vec![vec![2, 2], vec![1, 1]], vec![m]).unwrap();
    assert_eq!(end_radical_dims(&c).0, 2);
    match decompose(&c) {
        Err(Error::SplitFailure { end_top_dim, factor_degree }) => assert_eq!((end_top_dim, factor_degree), (2, 2)),
        other => panic!("unexpected {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn decomposition_respects_g_vectors(
        src in proptest::collection::vec(0usize..4, 1..4),
        tgt in proptest::collection::vec(0usize..4, 1..4),
        seed in any::<u64>(),
    ) {
        let a = alg4();
        let s = ProjComplex::stalk(a.clone(), 0, src);
        let t = ProjComplex::stalk(a.clone(), 0, tgt);
        let h = hom_space(&s, &t, 0);
        let (_, f) = h.random_element(&mut rng_for(seed, "prop"));
        let x = cone(&f).unwrap().cone;
        let d = match decompose(&x) {
            Ok(d) => d,
            // Kronecker-type summands can have a non-split residue field
            Err(Error::SplitFailure { factor_degree, .. }) => {
                prop_assert!(factor_degree >= 2);
                return Ok(());
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let mut g = vec![0i64; 4];
        for s in &d.summands {
            prop_assert_eq!(end_radical_dims(&s.complex).0, 1);
            for (a, b) in g.iter_mut().zip(s.complex.g_vector()) {
                *a += b;
            }
        }
        prop_assert_eq!(g, x.g_vector());
        if d.is_empty() {
            return Ok(());
        }
        let again = decompose(&ProjComplex::direct_sum(&d.summands.iter().map(|s| &s.complex).collect::<Vec<_>>()).unwrap()).unwrap();
        prop_assert_eq!(again.len(), d.len());
        prop_assert_eq!(again.num_classes(), d.num_classes());
    }
}
