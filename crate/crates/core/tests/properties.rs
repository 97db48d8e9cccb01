mod common;

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use silting_core::algebra::Algebra;
use silting_core::complex::{cone, hom_dim, hom_table, is_contractible, minimize, ChainMap, ProjComplex};
use silting_core::fixtures::{paper_algebra, paper_sigma};
use silting_core::io::{parse_complex, print_complex};
use silting_core::krull_schmidt::{decompose, iso_in_homotopy};

use common::{f101, fixture_algebras, random_complex, rng};

fn fixtures() -> &'static [(&'static str, Arc<Algebra>)] {
    static CELL: OnceLock<Vec<(&'static str, Arc<Algebra>)>> = OnceLock::new();
    CELL.get_or_init(fixture_algebras)
}

fn pick(k: usize) -> &'static Arc<Algebra> {
    let all = fixtures();
    &all[k % all.len()].1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn shifting_both_sides_preserves_homs(k in 0usize..4, seed in any::<u64>(), m in -2i32..3) {
        let alg = pick(k);
        let mut r = rng(seed);
        let x = random_complex(alg, &mut r);
        let y = random_complex(alg, &mut r);
        prop_assert_eq!(hom_dim(&x, &y, m), hom_dim(&x.shift(1), &y.shift(1), m));
        prop_assert_eq!(hom_dim(&x, &y.shift(1), m), hom_dim(&x, &y, m + 1));
    }

    #[test]
    fn printing_and_parsing_round_trip(k in 0usize..4, seed in any::<u64>()) {
        let alg = pick(k);
        let x = random_complex(alg, &mut rng(seed));
        let text = print_complex(&x);
        let back = parse_complex(&text, alg.clone()).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(print_complex(&back), text);
    }

    #[test]
    fn minimal_complexes_are_isomorphic_to_the_original(k in 0usize..4, seed in any::<u64>()) {
        let alg = pick(k);
        let x = random_complex(alg, &mut rng(seed));
        let m = minimize(&x);
        prop_assert!(m.diffs().iter().all(|d| d.is_radical(alg)));
        prop_assert!(iso_in_homotopy(&m, &x).unwrap());
        prop_assert_eq!(minimize(&m), m);
    }

    #[test]
    fn cone_of_the_identity_is_contractible(k in 0usize..4, seed in any::<u64>()) {
        let alg = pick(k);
        let x = random_complex(alg, &mut rng(seed));
        prop_assert!(is_contractible(&cone(&ChainMap::identity(&x)).unwrap().cone));
    }

    #[test]
    fn summands_add_up(k in 0usize..4, seed in any::<u64>()) {
        let alg = pick(k);
        let x = random_complex(alg, &mut rng(seed));
        let dec = decompose(&x).unwrap();
        let mut g = vec![0i64; alg.num_vertices()];
        for s in &dec.summands {
            for (a, b) in g.iter_mut().zip(s.complex.g_vector()) {
                *a += b;
            }
            prop_assert_eq!(decompose(&s.complex).unwrap().len(), 1);
        }
        prop_assert_eq!(g, x.g_vector());
    }

    #[test]
    fn twisting_by_an_automorphism_preserves_homs(seed in any::<u64>()) {
        let a = Arc::new(paper_algebra(4, f101()).unwrap());
        let sigma = paper_sigma(&a).unwrap();
        let mut r = rng(seed);
        let x = random_complex(&a, &mut r);
        let y = random_complex(&a, &mut r);
        prop_assert_eq!(hom_table(&x, &y), hom_table(&x.twist(&sigma), &y.twist(&sigma)));
    }
}

#[test]
fn zero_complex_behaves() {
    let alg = pick(0);
    let z = ProjComplex::zero(alg.clone());
    let p = ProjComplex::regular(alg.clone());
    assert!(hom_table(&z, &p).is_empty());
    assert!(decompose(&z).unwrap().is_empty());
    assert_eq!(print_complex(&z), "");
    assert_eq!(parse_complex("", alg.clone()).unwrap(), z);
}
