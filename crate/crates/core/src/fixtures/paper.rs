//! The family `A(n)`, `E`, `T`, `Λ = T_σ A` and `T ⊗_A Λ` for even `n ≥ 4`.

use std::sync::Arc;

use serde::Serialize;

use super::{paper_algebra, paper_sigma};
use crate::algebra::{
    twisted_trivial_extension, Algebra, AlgebraAutomorphism, AlgebraEmbedding, Arrow, Presentation, Quiver, Relation,
};
use crate::complex::{ElemMatrix, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::module::{cyclic_quotient, projective_resolution, RightModule};
use crate::spherical::{spherical_check, spherical_twist, SphericalReport, SphericalTwist};

#[derive(Clone, Debug)]
pub struct PaperFamily {
    pub n: usize,
    pub field: PrimeField,
    pub a: Arc<Algebra>,
    pub sigma: AlgebraAutomorphism,
    /// `e_1 A / e_1 y A`.
    pub e: RightModule,
    pub e_res: ProjComplex,
    pub sigma_e_res: ProjComplex,
    pub e_report: SphericalReport,
    pub sigma_e_report: SphericalReport,
    pub twist: SphericalTwist,
    pub sigma_twist: SphericalTwist,
    pub t: ProjComplex,
    pub sigma_t: ProjComplex,
    pub lambda: Arc<Algebra>,
    pub embedding: AlgebraEmbedding,
    /// `(a, f) ↦ (σ(a), f σ^{-1})`.
    pub nu: AlgebraAutomorphism,
    pub t_lambda: ProjComplex,
    /// Hand-transcribed indecomposable summands of `T ⊗_A Λ`; only for `n = 4`.
    pub printed: Vec<ProjComplex>,
}

/// Product of the named generators, left to right.
pub fn word(alg: &Algebra, names: &[String]) -> Result<Vec<u32>> {
    let mut acc: Option<Vec<u32>> = None;
    for name in names {
        let g = alg.generator(name).ok_or_else(|| Error::InvalidInput(format!("no generator {name}")))?;
        acc = Some(match acc {
            None => g.to_vec(),
            Some(a) => alg.mul(&a, g),
        });
    }
    acc.ok_or_else(|| Error::InvalidInput("empty word".into()))
}

/// Arrow names of the alternating path of length `len` starting at 1-based vertex `start`,
/// beginning with arrow family `first`.
fn alternating(first: char, start: usize, len: usize) -> Vec<String> {
    let other = if first == 'x' { 'y' } else { 'x' };
    (0..len).map(|k| format!("{}{}", if k % 2 == 0 { first } else { other }, start + k)).collect()
}

/// Index of the basis element equal to `v`, which must be a basis vector.
fn basis_index(v: &[u32]) -> Option<usize> {
    let mut nz = v.iter().enumerate().filter(|(_, &c)| c != 0);
    match (nz.next(), nz.next()) {
        (Some((b, 1)), None) => Some(b),
        _ => None,
    }
}

pub fn build_paper_family(n: usize, field: PrimeField) -> Result<PaperFamily> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Usage(format!("n must be even and at least 4, got {n}")));
    }
    let a = Arc::new(paper_algebra(n, field)?);
    let sigma = paper_sigma(&a)?;
    let y1 = a.generator("y1").expect("arrow y1").to_vec();
    let e = cyclic_quotient(a.clone(), 0, &[y1])?;
    let e_res = projective_resolution(&e, 2 * n)?;
    let sigma_e_res = e_res.twist(&sigma);
    let d = n as i32 - 1;
    let e_report = spherical_check(&e_res, d);
    let sigma_e_report = spherical_check(&sigma_e_res, d);
    if !e_report.spherical || !sigma_e_report.spherical {
        return Err(Error::InvalidComplex(format!("resolution of E is not {d}-spherical")));
    }
    let regular = ProjComplex::regular(a.clone());
    let twist = spherical_twist(&e_res, &regular)?;
    let sigma_twist = spherical_twist(&sigma_e_res, &regular)?;
    let (t, sigma_t) = (twist.twisted.clone(), sigma_twist.twisted.clone());

    let ext = twisted_trivial_extension(&a, &sigma)?;
    let nu = ext.nakayama_from_twist(&a, &sigma)?;
    let mut lambda = ext.algebra.clone();
    // u and v are dual to the two maximal paths 1 → n
    for (name, first) in [("u", 'y'), ("v", 'x')] {
        let path = word(&a, &alternating(first, 1, n - 1))?;
        let b =
            basis_index(&path).ok_or_else(|| Error::InvalidAlgebra("maximal path is not a basis element".into()))?;
        lambda.add_generator(name, ext.dual(b));
    }
    let lambda = Arc::new(lambda);
    let t_lambda = t.base_change(lambda.clone(), &ext.embedding)?;
    let printed = if n == 4 { printed_summands(&lambda)? } else { Vec::new() };
    Ok(PaperFamily {
        n,
        field,
        a,
        sigma,
        e,
        e_res,
        sigma_e_res,
        e_report,
        sigma_e_report,
        twist,
        sigma_twist,
        t,
        sigma_t,
        lambda,
        embedding: ext.embedding,
        nu,
        t_lambda,
        printed,
    })
}

fn entries(alg: &Algebra, rows: usize, cols: usize, words: &[&[&str]]) -> Result<ElemMatrix> {
    let mut m = ElemMatrix::zeros(rows, cols, alg.dim());
    for (k, w) in words.iter().enumerate() {
        if !w.is_empty() {
            let names: Vec<String> = w.iter().map(|s| s.to_string()).collect();
            m.set(k / cols, k % cols, &word(alg, &names)?);
        }
    }
    Ok(m)
}

/// The four indecomposable summands of `T ⊗_A Λ` for `n = 4`, degree-0 term as displayed,
/// degrees increasing to the right. Vertices are 0-based.
pub fn printed_summands(lambda: &Arc<Algebra>) -> Result<Vec<ProjComplex>> {
    let l = lambda.as_ref();
    let tail = |head: Vec<usize>, top: &[&[&str]]| -> Result<ProjComplex> {
        let first = entries(l, 2, 1, top)?;
        let second = entries(l, 1, 2, &[&[], &["y2"]])?;
        let third = entries(l, 1, 1, &[&["y1"]])?;
        ProjComplex::new(lambda.clone(), -1, vec![vec![3], head, vec![1], vec![0]], vec![first, second, third])
    };
    let s1 = ProjComplex::new(
        lambda.clone(),
        0,
        vec![vec![2], vec![1], vec![0]],
        vec![entries(l, 1, 1, &[&["y2"]])?, entries(l, 1, 1, &[&["y1"]])?],
    )?;
    let s2 = tail(vec![2, 2], &[&["x3"], &["y3"]])?;
    let s3 = tail(vec![1, 2], &[&["y2", "x3"], &["y3"]])?;
    let s4 = tail(vec![0, 2], &[&["x1", "y2", "x3"], &["y3"]])?;
    Ok(vec![s1, s2, s3, s4])
}

/// Quiver of `Λ`: the arrows of `A(n)` together with `u, v: n → 1`, and the relations
/// `x² = y² = 0`, `xv = ux = yu = vy = 0` and the length-`n` commutativity relations.
pub fn lambda_presentation(n: usize) -> Result<Presentation> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Usage(format!("n must be even and at least 4, got {n}")));
    }
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push(Arrow::new(&format!("x{i}"), i - 1, i));
        arrows.push(Arrow::new(&format!("y{i}"), i - 1, i));
    }
    arrows.push(Arrow::new("u", n - 1, 0));
    arrows.push(Arrow::new("v", n - 1, 0));
    let q = Quiver::new(n, arrows)?;
    let mut rels = Vec::new();
    let mono = |names: Vec<String>| {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Relation::monomial(&q, &refs)
    };
    for i in 1..n - 1 {
        for c in ['x', 'y'] {
            rels.push(mono(vec![format!("{c}{i}"), format!("{c}{}", i + 1)])?);
        }
    }
    let last = n - 1;
    rels.push(mono(vec![format!("x{last}"), "v".into()])?);
    rels.push(mono(vec!["u".into(), "x1".into()])?);
    rels.push(mono(vec![format!("y{last}"), "u".into()])?);
    rels.push(mono(vec!["v".into(), "y1".into()])?);
    for (lhs, rhs) in commutativity_words(n) {
        let l: Vec<&str> = lhs.iter().map(String::as_str).collect();
        let r: Vec<&str> = rhs.iter().map(String::as_str).collect();
        rels.push(Relation::from_named(&q, &[(1, &l), (-1, &r)])?);
    }
    Ok(Presentation { quiver: q, relations: rels, max_len: 2 * n + 2 })
}

/// Pairs of equal paths of length `n`, for `0 ≤ r < n/2`.
fn commutativity_words(n: usize) -> Vec<(Vec<String>, Vec<String>)> {
    let q = n / 2;
    let mut out = Vec::new();
    for r in 0..q {
        // cycles at 1-based vertex n − 2r through u or v
        let s = n - 2 * r;
        let join = |pre: Vec<String>, mid: &str, post: Vec<String>| {
            let mut w = pre;
            w.push(mid.to_string());
            w.extend(post);
            w
        };
        out.push((
            join(alternating('x', s, 2 * r), "v", alternating('x', 1, n - 2 * r - 1)),
            join(alternating('y', s, 2 * r), "u", alternating('y', 1, n - 2 * r - 1)),
        ));
        // cycles at vertex n − 2r − 1
        let s = n - 2 * r - 1;
        out.push((
            join(alternating('x', s, 2 * r + 1), "u", alternating('y', 1, n - 2 * r - 2)),
            join(alternating('y', s, 2 * r + 1), "v", alternating('x', 1, n - 2 * r - 2)),
        ));
    }
    out
}

/// Outcome of comparing the quiver-with-relations description of `Λ` with the generic construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationCheck {
    pub relations_vanish: bool,
    pub presented_dim: usize,
    pub expected_dim: usize,
    /// Images of the presented basis paths span `Λ`.
    pub spans: bool,
}

impl PresentationCheck {
    pub fn passed(&self) -> bool {
        self.relations_vanish && self.spans && self.presented_dim == self.expected_dim
    }
}

pub fn check_presentation(family: &PaperFamily) -> Result<PresentationCheck> {
    let n = family.n;
    let lambda = family.lambda.as_ref();
    let presented = lambda_presentation(n)?.algebra(family.field)?;
    let relations_vanish = commutativity_words(n).iter().all(|(l, r)| match (word(lambda, l), word(lambda, r)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }) && {
        let last = n - 1;
        [
            vec![format!("x{last}"), "v".to_string()],
            vec!["u".to_string(), "x1".to_string()],
            vec![format!("y{last}"), "u".to_string()],
            vec!["v".to_string(), "y1".to_string()],
        ]
        .iter()
        .all(|w| word(lambda, w).map(|v| v.iter().all(|&c| c == 0)).unwrap_or(false))
    };
    let q = presented.quiver().ok_or_else(|| Error::InvalidAlgebra("presented algebra lost its quiver".into()))?;
    let paths =
        presented.basis_paths().ok_or_else(|| Error::InvalidAlgebra("presented algebra has no path basis".into()))?;
    let mut cols = Vec::with_capacity(paths.len());
    for (b, path) in paths.iter().enumerate() {
        if path.is_empty() {
            cols.push(lambda.basis_vec(lambda.idempotent(presented.corner(b).0)));
        } else {
            let names: Vec<String> = path.iter().map(|&k| q.arrows()[k].name.clone()).collect();
            cols.push(word(lambda, &names)?);
        }
    }
    let rank = Matrix::from_columns(family.field, lambda.dim(), &cols).rank();
    Ok(PresentationCheck {
        relations_vanish,
        presented_dim: presented.dim(),
        expected_dim: 2 * n * n,
        spans: rank == lambda.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::self_injectivity_report;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn family_dimensions() {
        let fam = build_paper_family(4, f101()).unwrap();
        assert_eq!((fam.a.dim(), fam.lambda.dim(), fam.e.dim()), (16, 32, 4));
        assert_eq!(fam.printed.len(), 4);
        assert!(build_paper_family(5, f101()).is_err());
        assert!(build_paper_family(2, f101()).is_err());
    }

    #[test]
    fn printed_g_vectors() {
        let fam = build_paper_family(4, f101()).unwrap();
        let g: Vec<Vec<i64>> = fam.printed.iter().map(ProjComplex::g_vector).collect();
        assert_eq!(g, vec![vec![1, -1, 1, 0], vec![1, -1, 2, -1], vec![1, 0, 1, -1], vec![2, -1, 1, -1]]);
        assert_eq!(crate::silting::integer_determinant(&g), Some(1));
    }

    #[test]
    fn presentation_matches_generic_extension() {
        let fam = build_paper_family(4, f101()).unwrap();
        let check = check_presentation(&fam).unwrap();
        assert!(check.passed(), "{check:?}");
        let rep = self_injectivity_report(&fam.lambda);
        assert!(rep.weakly_symmetric && !rep.symmetric);
    }

    #[test]
    fn nakayama_swaps_u_and_v() {
        let fam = build_paper_family(4, f101()).unwrap();
        let l = &fam.lambda;
        let (u, v) = (l.generator("u").unwrap().to_vec(), l.generator("v").unwrap().to_vec());
        assert_eq!(fam.nu.apply(l, &u), v);
        assert_eq!(fam.nu.apply(l, &v), u);
        assert_eq!(fam.nu.apply(l, l.generator("x2").unwrap()), l.generator("y2").unwrap());
    }
}
