#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use silting_core::algebra::Algebra;
use silting_core::complex::{cone, hom_space, ProjComplex};
use silting_core::fixtures::{build_paper_family, preprojective, DynkinType, PaperFamily};
use silting_core::linalg::PrimeField;

pub fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

pub fn family4() -> PaperFamily {
    build_paper_family(4, f101()).unwrap()
}

/// The four fixture algebras: A(4), its twisted trivial extension, and preprojective A2, D4.
pub fn fixture_algebras() -> Vec<(&'static str, Arc<Algebra>)> {
    let fam = family4();
    vec![
        ("A(4)", fam.a.clone()),
        ("Lambda(4)", fam.lambda.clone()),
        ("Pi(A2)", Arc::new(preprojective(DynkinType::A(2), f101()).unwrap())),
        ("Pi(D4)", Arc::new(preprojective(DynkinType::D(4), f101()).unwrap())),
    ]
}

fn random_vertices(alg: &Algebra, rng: &mut ChaCha8Rng, max: usize) -> Vec<usize> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| rng.gen_range(0..alg.num_vertices())).collect()
}

/// A complex of length at most three: the cone of a random map from a stalk into the cone of a
/// random map between stalks, shifted randomly.
pub fn random_complex(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> ProjComplex {
    let s = ProjComplex::stalk(alg.clone(), 0, random_vertices(alg, rng, 2));
    let t = ProjComplex::stalk(alg.clone(), 0, random_vertices(alg, rng, 2));
    let (_, f) = hom_space(&s, &t, 0).random_element(rng);
    let two = cone(&f).unwrap().cone;
    let x = if rng.gen_bool(0.5) {
        let u = ProjComplex::stalk(alg.clone(), -1, random_vertices(alg, rng, 1));
        let (_, g) = hom_space(&u, &two, 0).random_element(rng);
        cone(&g).unwrap().cone
    } else {
        two
    };
    x.shift(rng.gen_range(-1..=1))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ_{v,w} g_X(v) g_Y(w) dim e_w A e_v`.
pub fn euler_from_g_vectors(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> i64 {
    let (gx, gy) = (x.g_vector(), y.g_vector());
    let n = alg.num_vertices();
    (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).map(|(v, w)| gx[v] * gy[w] * alg.corner_dim(w, v) as i64).sum()
}
