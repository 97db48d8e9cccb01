//! Frozen values for the n = 4 family over GF(101) and the preprojective fixtures.

mod common;

use common::family4;
use silting_core::algebra::self_injectivity_report;
use silting_core::complex::{hom_table, ProjComplex};
use silting_core::fixtures::{build_paper_family, paper_algebra, preprojective, DynkinType};
use silting_core::krull_schmidt::{decompose, end_algebra};
use silting_core::linalg::PrimeField;
use silting_core::mutation::interval_enumerate;
use silting_core::silting::HomEntry;
use silting_core::silting::{silting_check_with, tilting_check, SiltingCertificate};

fn nonzero(t: Vec<(i32, usize)>) -> Vec<(i32, usize)> {
    t.into_iter().filter(|&(_, d)| d > 0).collect()
}

#[test]
fn a_n_dimensions() {
    let f = PrimeField::new(101).unwrap();
    for n in [2, 3, 4, 5, 6] {
        assert_eq!(paper_algebra(n, f).unwrap().dim(), n * n);
    }
    let a4 = paper_algebra(4, f).unwrap();
    assert!(!self_injectivity_report(&a4).self_injective);
}

#[test]
fn resolution_of_e_and_its_twist() {
    let fam = family4();
    assert_eq!(fam.e.dim(), 4);
    assert_eq!(
        fam.e_res.term_profile(),
        vec![(-3, vec![0, 0, 0, 1]), (-2, vec![0, 0, 1, 0]), (-1, vec![0, 1, 0, 0]), (0, vec![1, 0, 0, 0])]
    );
    assert_eq!(nonzero(hom_table(&fam.e_res, &fam.e_res)), vec![(0, 1), (3, 1)]);
    assert_eq!(nonzero(hom_table(&fam.e_res, &fam.sigma_e_res)), vec![]);
    assert_eq!(nonzero(hom_table(&fam.sigma_e_res, &fam.e_res)), vec![]);
}

#[test]
fn twist_of_the_regular_complex() {
    let fam = family4();
    assert_eq!(fam.twist.evaluation_shape, vec![HomEntry { shift: 3, dim: 4 }]);
    assert_eq!(nonzero(hom_table(&fam.t, &fam.t)), vec![(0, 16)]);
    assert!(tilting_check(&fam.t).unwrap().tilting);
    let end = end_algebra(&fam.t).unwrap();
    assert_eq!(end.dim(), 16);
    assert!(nonzero(hom_table(&fam.t, &fam.sigma_t)).iter().all(|&(m, _)| m >= 0));
    assert_eq!(decompose(&fam.t).unwrap().num_classes(), 4);
}

#[test]
fn lambda_and_the_base_change() {
    let fam = family4();
    assert_eq!(fam.lambda.dim(), 32);
    let r = self_injectivity_report(&fam.lambda);
    assert!(r.weakly_symmetric && !r.symmetric);
    assert!(!fam.nu.is_identity());
    assert_eq!(fam.nu.order(8), Some(2));

    let report = silting_check_with(&fam.t_lambda, SiltingCertificate::BaseChange, Some(&fam.nu)).unwrap();
    assert_eq!(report.verdict(), "silting, not tilting");
    let positive: Vec<_> = report.vanishing.iter().filter(|h| h.shift > 0 && h.dim > 0).collect();
    assert!(positive.is_empty());
    let self_ext = report.vanishing.iter().find(|h| h.shift == -2).unwrap();
    assert_eq!(self_ext.dim, 16);
    assert_eq!(report.determinant, Some(1));
}

#[test]
fn self_extension_grows_with_n() {
    let f = PrimeField::new(101).unwrap();
    let fam = build_paper_family(6, f).unwrap();
    assert_eq!(fam.lambda.dim(), 72);
    let table = hom_table(&fam.t_lambda, &fam.t_lambda);
    assert!(table.iter().all(|&(m, d)| m <= 0 || d == 0));
    assert_eq!(table.iter().find(|e| e.0 == -4).map(|e| e.1), Some(36));
}

#[test]
fn odd_or_small_n_is_rejected() {
    let f = PrimeField::new(101).unwrap();
    assert!(build_paper_family(3, f).is_err());
    assert!(build_paper_family(2, f).is_err());
}

#[test]
fn preprojective_fixtures() {
    let f = PrimeField::new(101).unwrap();
    let a2 = preprojective(DynkinType::A(2), f).unwrap();
    assert_eq!(a2.dim(), 4);
    assert_eq!(self_injectivity_report(&a2).nakayama_permutation, Some(vec![1, 0]));
    let a3 = preprojective(DynkinType::A(3), f).unwrap();
    assert_eq!(a3.dim(), 10);
    let d4 = preprojective(DynkinType::D(4), f).unwrap();
    assert_eq!(d4.dim(), 28);
    assert_eq!(self_injectivity_report(&d4).nakayama_permutation, Some(vec![0, 1, 2, 3]));
}

#[test]
fn a3_two_term_interval_has_24_nodes() {
    let f = PrimeField::new(101).unwrap();
    let a3 = std::sync::Arc::new(preprojective(DynkinType::A(3), f).unwrap());
    let g = interval_enumerate(&ProjComplex::regular(a3), 1000, 64).unwrap();
    assert!(g.complete);
    assert_eq!(g.len(), 24);
}
