use std::sync::Arc;

use super::*;
use crate::algebra::{path_algebra, Algebra, Arrow, Quiver};
use crate::fixtures::{paper_algebra, preprojective, DynkinType};
use crate::linalg::PrimeField;
use crate::silting::{nakayama_automorphism, silting_check, SiltingCertificate};

fn gf() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn field_algebra() -> Arc<Algebra> {
    let q = Quiver::new(1, vec![]).unwrap();
    Arc::new(path_algebra(gf(), &q, &[], 1).unwrap())
}

/// `1 → 2` with arrow `a`.
fn a2_path() -> Arc<Algebra> {
    let q = Quiver::new(2, vec![Arrow::new("a", 0, 1)]).unwrap();
    Arc::new(path_algebra(gf(), &q, &[], 2).unwrap())
}

#[test]
fn mutating_a_field_shifts_it() {
    let k = field_algebra();
    let a = ProjComplex::regular(k.clone());
    let step = mutate(&a, 0, Side::Left).unwrap();
    assert_eq!(step.approximation.target().total_rank(), 0);
    assert!(iso_in_homotopy(&step.result_complex(), &a.shift(1)).unwrap());
    let g = interval_enumerate(&a, 100, 10).unwrap();
    assert!(g.complete);
    assert_eq!(g.len(), 2);
    assert!(mutate(&a, 1, Side::Left).is_err());
}

#[test]
fn approximations_of_a2_projectives() {
    let a = a2_path();
    let p1 = ProjComplex::projective(a.clone(), 0);
    let p2 = ProjComplex::projective(a.clone(), 1);
    let f = left_approximation(&p2, &p1, true).unwrap();
    assert_eq!(f.target().term(0), &[0]);
    assert_eq!(f.component(0).entry(0, 0), a.generator("a").unwrap());
    let id = left_approximation(&p1, &p1, true).unwrap();
    assert!(id.is_invertible_componentwise());
    let none = left_approximation(&p1, &p2, true).unwrap();
    assert!(none.target().is_zero());
    let plain = left_approximation(&p2, &p1.power(2), false).unwrap();
    assert_eq!(plain.target().term(0).len(), 4);
    let g = right_approximation(&p1, &p2, true).unwrap();
    assert_eq!(g.source().term(0), &[1]);
}

#[test]
fn left_mutation_of_a2_at_simple_projective() {
    let a = a2_path();
    let t = ProjComplex::regular(a.clone());
    let pieces = summands_of(&t).unwrap();
    let k = pieces.iter().position(|p| p.term(0) == [1]).unwrap();
    let step = mutate_pieces(&pieces, &[k], Side::Left).unwrap();
    let p1 = ProjComplex::projective(a.clone(), 0);
    let p2 = ProjComplex::projective(a.clone(), 1);
    let arrow = left_approximation(&p2, &p1, true).unwrap();
    assert!(iso_in_homotopy(&step.exchanged, &cone(&arrow).unwrap().cone).unwrap());
    assert_eq!(step.exchanged.g_vector(), vec![1, -1]);
    let r = silting_check(&step.result_complex(), SiltingCertificate::MutationChain).unwrap();
    assert!(r.silting);
    assert_eq!(r.determinant.map(i64::abs), Some(1));
    // the triangle X → Y′ → X′ composes to zero in the homotopy category
    let c = cone(&step.approximation).unwrap();
    let comp = compose(&step.approximation, &c.inclusion);
    assert!(hom_space(comp.source(), comp.target(), 0).is_null_homotopic(&comp));
    let g = interval_enumerate(&t, 100, 10).unwrap();
    assert!(g.complete);
    assert_eq!(g.len(), 5);
}

#[test]
fn right_mutation_undoes_left_mutation() {
    let a = Arc::new(paper_algebra(4, gf()).unwrap());
    let t = ProjComplex::regular(a.clone());
    let pieces = summands_of(&t).unwrap();
    for k in 0..pieces.len() {
        let left = mutate_pieces(&pieces, &[k], Side::Left).unwrap();
        let back = mutate_pieces(&left.result, &[k], Side::Right).unwrap();
        assert!(iso_in_homotopy(&back.result_complex(), &t).unwrap(), "summand {k}");
    }
}

#[test]
fn non_minimal_approximation_gives_the_same_mutation() {
    let a = Arc::new(paper_algebra(4, gf()).unwrap());
    let pieces = summands_of(&ProjComplex::regular(a.clone())).unwrap();
    for k in 0..pieces.len() {
        let others: Vec<ProjComplex> = (0..pieces.len()).filter(|&j| j != k).map(|j| pieces[j].clone()).collect();
        let y = sum_of(&others);
        let f = left_approximation(&pieces[k], &y, false).unwrap();
        let c = minimize(&cone(&f).unwrap().cone);
        let step = mutate_pieces(&pieces, &[k], Side::Left).unwrap();
        let mut expected = others.clone();
        expected.push(step.exchanged.clone());
        let mut found = others;
        found.push(c);
        assert!(iso_in_homotopy(&basic(&sum_of(&found)), &sum_of(&expected)).unwrap());
    }
}

fn basic(t: &ProjComplex) -> ProjComplex {
    crate::krull_schmidt::basic_form(t).unwrap()
}

#[test]
fn preprojective_a2_two_term_interval() {
    let alg = Arc::new(preprojective(DynkinType::A(2), gf()).unwrap());
    let nu = nakayama_automorphism(&alg).unwrap();
    assert!(nu.is_some());
    let opts = EnumerateOptions { tilting: Some(nu), ..EnumerateOptions::default() };
    let g = enumerate(&ProjComplex::regular(alg.clone()), &opts).unwrap();
    assert!(g.complete);
    assert_eq!(g.len(), 6);
    // not weakly symmetric: only the two ν-stable nodes A and A[1] are tilting
    assert_eq!(g.tilting_count(), 2);
    let mut keys: Vec<_> = g.nodes.iter().map(|n| n.g_vectors.clone()).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), 6);
    assert!(g.nodes.iter().all(|n| n.determinant().map(i64::abs) == Some(1)));
}

#[test]
fn subset_mutations_include_irreducible_ones() {
    let a = a2_path();
    let pieces = summands_of(&ProjComplex::regular(a)).unwrap();
    let all = all_mutations(&pieces, Side::Left).unwrap();
    assert_eq!(all.len(), 2);
    assert!(all.iter().all(MutationStep::is_irreducible));
}
