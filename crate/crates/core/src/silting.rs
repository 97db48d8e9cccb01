//! Presilting, silting and tilting verdicts, Nakayama stability and the silting order.
//!
//! Hom-vanishing is decided exactly. Generation of the perfect derived category is not
//! decided; it is carried by a [`SiltingCertificate`] describing how a complex was built.

use serde::Serialize;

use crate::algebra::{frobenius_form, self_injectivity_report, AlgebraAutomorphism};
use crate::complex::{hom_dim, hom_table, minimize, ProjComplex};
use crate::error::{Error, Result};
use crate::krull_schmidt::{decompose, end_algebra, iso_in_homotopy, Decomposition};

/// How a complex is known to generate the perfect derived category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SiltingCertificate {
    /// The stalk complex of the regular module.
    Regular,
    /// Iterated mutation of a certified silting complex.
    MutationChain,
    /// Image of a certified tilting complex under a spherical twist.
    SphericalTwist,
    /// Base change of a certified generator along an algebra inclusion.
    BaseChange,
    Unverified,
}

impl SiltingCertificate {
    pub fn certifies_generation(self) -> bool {
        self != SiltingCertificate::Unverified
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomEntry {
    pub shift: i32,
    pub dim: usize,
}

/// Result of [`presilting_check`].
#[derive(Clone, Debug, Serialize)]
pub struct PresiltingReport {
    /// `dim Hom(T, T[m])` for every `m` in the window of the minimized complex.
    pub vanishing: Vec<HomEntry>,
    pub presilting: bool,
}

impl PresiltingReport {
    pub fn dim_at(&self, shift: i32) -> usize {
        self.vanishing.iter().find(|e| e.shift == shift).map_or(0, |e| e.dim)
    }

    /// First nonzero entry at a positive shift.
    pub fn positive_witness(&self) -> Option<HomEntry> {
        self.vanishing.iter().copied().find(|e| e.shift > 0 && e.dim > 0)
    }

    pub fn negative_witness(&self) -> Option<HomEntry> {
        self.vanishing.iter().copied().find(|e| e.shift < 0 && e.dim > 0)
    }
}

/// Permutation behaviour of a twist on the indecomposable summands of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuStability {
    /// `orbit[i] = Some(j)` when the twist of summand `i` is isomorphic to summand `j`.
    pub orbit: Vec<Option<usize>>,
    pub stable: bool,
    pub strongly_stable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingVerdict {
    pub tilting: bool,
    pub negative_witness: Option<HomEntry>,
    /// `ν*T ≅ T`, when the algebra is self-injective and `T` has a full set of summands.
    pub nu_stable: Option<bool>,
}

impl TiltingVerdict {
    pub fn reason(&self) -> String {
        match self.negative_witness {
            Some(w) => format!("nonzero Hom at shift {}, dim {}", w.shift, w.dim),
            None => "Hom(T, T[m]) = 0 for all m != 0".to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SiltingReport {
    pub vanishing: Vec<HomEntry>,
    pub summands: usize,
    pub num_vertices: usize,
    /// Rows are g-vectors of the pairwise non-isomorphic indecomposable summands.
    pub g_matrix: Vec<Vec<i64>>,
    /// `None` when the g-vector matrix is not square.
    pub determinant: Option<i64>,
    pub presilting: bool,
    /// Presilting with a full set of summands and a unimodular g-vector matrix.
    pub k0_complete: bool,
    pub certificate: SiltingCertificate,
    pub silting: bool,
    /// Computed for certified silting complexes only.
    pub tilting: Option<TiltingVerdict>,
    pub nu: Option<NuStability>,
}

impl SiltingReport {
    pub fn verdict(&self) -> &'static str {
        match (self.presilting, self.k0_complete, self.silting, self.tilting.as_ref().map(|t| t.tilting)) {
            (false, ..) => "not presilting",
            (true, false, ..) => "presilting, K0-incomplete",
            (true, true, false, _) => "presilting, K0-complete - generation not certified",
            (true, true, true, Some(true)) => "tilting",
            (true, true, true, _) => "silting, not tilting",
        }
    }
}

fn entries(table: Vec<(i32, usize)>) -> Vec<HomEntry> {
    table.into_iter().map(|(shift, dim)| HomEntry { shift, dim }).collect()
}

/// Vanishing table of `Hom(T, T[m])` and the presilting verdict.
pub fn presilting_check(t: &ProjComplex) -> PresiltingReport {
    let t = minimize(t);
    let vanishing = entries(hom_table(&t, &t));
    let presilting = vanishing.iter().all(|e| e.shift <= 0 || e.dim == 0);
    PresiltingReport { vanishing, presilting }
}

/// A Nakayama automorphism of a self-injective algebra, or `None` if there is no Frobenius form.
pub fn nakayama_automorphism(alg: &crate::algebra::Algebra) -> Result<Option<AlgebraAutomorphism>> {
    Ok(frobenius_form(alg, false)?.map(|f| f.nakayama))
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn integer_determinant(m: &[Vec<i64>]) -> Option<i64> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).ok()
}

fn g_matrix(dec: &Decomposition) -> Vec<Vec<i64>> {
    dec.class_representatives.iter().map(|&k| dec.summands[k].complex.g_vector()).collect()
}

/// g-vectors of the pairwise non-isomorphic indecomposable summands.
pub fn g_vector_matrix(t: &ProjComplex) -> Result<Vec<Vec<i64>>> {
    Ok(g_matrix(&decompose(t)?))
}

/// Full report. Silting is certified when `T` is presilting, has exactly as many
/// non-isomorphic summands as the algebra has vertices, has a unimodular g-vector matrix and
/// comes with a certificate of generation.
pub fn silting_check(t: &ProjComplex, cert: SiltingCertificate) -> Result<SiltingReport> {
    let nu = nakayama_automorphism(t.algebra())?;
    silting_check_with(t, cert, nu.as_ref())
}

/// [`silting_check`] with a precomputed Nakayama automorphism (`None` if not self-injective).
pub fn silting_check_with(
    t: &ProjComplex,
    cert: SiltingCertificate,
    nu: Option<&AlgebraAutomorphism>,
) -> Result<SiltingReport> {
    let dec = decompose(t)?;
    let basic = if dec.is_empty() { dec.source.clone() } else { dec.basic_complex() };
    let pre = presilting_check(&basic);
    let g = g_matrix(&dec);
    let determinant = integer_determinant(&g);
    let num_vertices = t.algebra().num_vertices();
    let summands = dec.num_classes();
    let k0_complete = pre.presilting && summands == num_vertices && matches!(determinant, Some(1) | Some(-1));
    let silting = k0_complete && cert.certifies_generation();
    let (tilting, nu_report) = if silting {
        let stability = nu.map(|nu| stability_of(&dec, nu)).transpose()?;
        let nu_stable = stability.as_ref().map(|s| s.stable);
        (Some(tilting_verdict(&pre, nu_stable)?), stability)
    } else {
        (None, None)
    };
    Ok(SiltingReport {
        vanishing: pre.vanishing,
        summands,
        num_vertices,
        g_matrix: g,
        determinant,
        presilting: pre.presilting,
        k0_complete,
        certificate: cert,
        silting,
        tilting,
        nu: nu_report,
    })
}

fn tilting_verdict(pre: &PresiltingReport, nu_stable: Option<bool>) -> Result<TiltingVerdict> {
    let negative_witness = pre.negative_witness();
    let tilting = pre.presilting && negative_witness.is_none();
    if let Some(stable) = nu_stable {
        if stable != tilting {
            return Err(Error::TiltingCriteriaDisagree(format!(
                "Hom-vanishing says tilting = {tilting}, Nakayama stability says {stable}"
            )));
        }
    }
    Ok(TiltingVerdict { tilting, negative_witness, nu_stable })
}

/// Tilting verdict for a silting complex: vanishing at negative shifts, cross-checked against
/// `ν*T ≅ T` over self-injective algebras.
pub fn tilting_check(t: &ProjComplex) -> Result<TiltingVerdict> {
    let nu = nakayama_automorphism(t.algebra())?;
    tilting_check_with(t, nu.as_ref())
}

pub fn tilting_check_with(t: &ProjComplex, nu: Option<&AlgebraAutomorphism>) -> Result<TiltingVerdict> {
    let t = minimize(t);
    let pre = presilting_check(&t);
    // the Nakayama criterion needs a full set of summands
    let nu_stable = match nu {
        Some(nu) if decompose(&t)?.num_classes() == t.algebra().num_vertices() => {
            Some(iso_in_homotopy(&t.twist(nu), &t)?)
        }
        _ => None,
    };
    tilting_verdict(&pre, nu_stable)
}

fn stability_of(dec: &Decomposition, nu: &AlgebraAutomorphism) -> Result<NuStability> {
    let reps: Vec<&ProjComplex> = dec.class_representatives.iter().map(|&k| &dec.summands[k].complex).collect();
    let mut orbit = Vec::with_capacity(reps.len());
    for s in &reps {
        let twisted = s.twist(nu);
        let mut hit = None;
        for (j, r) in reps.iter().enumerate() {
            if iso_in_homotopy(&twisted, r)? {
                hit = Some(j);
                break;
            }
        }
        orbit.push(hit);
    }
    let mut seen = vec![false; reps.len()];
    let mut stable = true;
    for j in &orbit {
        match j {
            Some(j) if !seen[*j] => seen[*j] = true,
            _ => stable = false,
        }
    }
    // multiplicities are preserved by a permutation of classes only if they agree along it
    let mult: Vec<usize> = dec.multiplicities().into_iter().map(|(_, k)| k).collect();
    if stable && orbit.iter().enumerate().any(|(i, j)| mult[i] != mult[j.unwrap()]) {
        stable = false;
    }
    let strongly_stable = orbit.iter().enumerate().all(|(i, &j)| j == Some(i));
    Ok(NuStability { orbit, stable, strongly_stable })
}

/// How the twist by `nu` permutes the indecomposable summands of `T`.
pub fn nu_stability(t: &ProjComplex, nu: &AlgebraAutomorphism) -> Result<NuStability> {
    stability_of(&decompose(t)?, nu)
}

/// `Hom(X, Y[m]) = 0` for every `m > 0`.
fn positive_vanishing(x: &ProjComplex, y: &ProjComplex) -> bool {
    if x.is_zero() || y.is_zero() {
        return true;
    }
    (1..=y.hi() - x.lo()).all(|m| hom_dim(x, y, m) == 0)
}

/// The silting order: `T ≥ S` iff `Hom(T, S[m]) = 0` for all `m > 0`.
pub fn silting_geq(t: &ProjComplex, s: &ProjComplex) -> bool {
    positive_vanishing(&minimize(t), &minimize(s))
}

/// Whether the minimized complex is concentrated in degrees `-1` and `0`.
pub fn two_term_check(t: &ProjComplex) -> bool {
    let t = minimize(t);
    t.is_zero() || (t.lo() >= -1 && t.hi() <= 0)
}

/// Whether the endomorphism algebra of a basic complex is weakly symmetric, by comparing
/// tops and socles of its indecomposable projectives.
pub fn end_weakly_symmetric(t: &ProjComplex) -> Result<bool> {
    let end = end_algebra(t)?;
    Ok(self_injectivity_report(&end.algebra).weakly_symmetric)
}
