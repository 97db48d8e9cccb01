//! End-to-end run over the family `A(n)`: sphericity of `E`, the tilting complex `T`, the weakly
//! symmetric algebra `Λ` and the silting complex `T ⊗_A Λ` that is not tilting.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::self_injectivity_report;
use crate::complex::{hom_dim, hom_table, ProjComplex};
use crate::error::Result;
use crate::fixtures::{
    build_paper_family, check_presentation, preprojective, DynkinType, PaperFamily, PresentationCheck,
};
use crate::krull_schmidt::{decompose, iso_in_homotopy};
use crate::linalg::PrimeField;
use crate::mutation::{enumerate, EnumerateOptions};
use crate::silting::{
    nakayama_automorphism, nu_stability, silting_check_with, tilting_check, HomEntry, NuStability, SiltingCertificate,
    SiltingReport, TiltingVerdict,
};
use crate::spherical::hom_orthogonal;

#[derive(Clone, Debug)]
pub struct DemoOptions {
    /// Depth of the mutation neighbourhood of `T ⊗_A Λ`; 0 skips it.
    pub neighborhood_depth: usize,
    pub node_bound: usize,
}

impl Default for DemoOptions {
    fn default() -> Self {
        DemoOptions { neighborhood_depth: 2, node_bound: 500 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodNode {
    pub depth: usize,
    pub g_vectors: Vec<Vec<i64>>,
    pub tilting: Option<bool>,
    pub nu_orbit: Vec<Option<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Neighborhood {
    pub depth_bound: usize,
    pub complete: bool,
    pub nodes: Vec<NeighborhoodNode>,
    pub edges: usize,
    pub tilting_nodes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PaperDemoReport {
    /// `pass` or `failed`.
    pub verdict: String,
    pub n: usize,
    pub p: u32,
    pub dim_a: usize,
    pub dim_lambda: usize,
    pub dim_e: usize,
    pub e_spherical: bool,
    pub sigma_e_spherical: bool,
    pub orthogonal: bool,
    pub evaluation_shape: Vec<HomEntry>,
    pub t_tilting: TiltingVerdict,
    pub t_end_dim: usize,
    pub hom_t_a: Vec<HomEntry>,
    pub hom_t_sigma_t: Vec<HomEntry>,
    pub lambda_self_injective: bool,
    pub lambda_weakly_symmetric: bool,
    pub lambda_symmetric: bool,
    pub presentation: PresentationCheck,
    pub t_lambda: SiltingReport,
    pub self_extension: HomEntry,
    pub nu_stability: NuStability,
    /// `matching[i]` is the computed summand class isomorphic to printed summand `i`.
    pub matching: Option<Vec<Option<usize>>>,
    pub neighborhood: Option<Neighborhood>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl PaperDemoReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => "PASS".to_string(),
            Some(c) => format!("FAILED: {} ({})", c.name, c.detail),
        }
    }
}

fn verdict(passed: bool) -> String {
    if passed { "pass" } else { "failed" }.to_string()
}

fn entries(table: Vec<(i32, usize)>) -> Vec<HomEntry> {
    table.into_iter().map(|(shift, dim)| HomEntry { shift, dim }).collect()
}

/// For each printed summand, the class representatives of `t_lambda` isomorphic to it.
fn match_printed(family: &PaperFamily) -> Result<Vec<Vec<usize>>> {
    let dec = decompose(&family.t_lambda)?;
    let reps: Vec<&ProjComplex> = dec.class_representatives.iter().map(|&k| &dec.summands[k].complex).collect();
    family
        .printed
        .iter()
        .map(|s| {
            let mut hits = Vec::new();
            for (j, r) in reps.iter().enumerate() {
                if iso_in_homotopy(s, r)? {
                    hits.push(j);
                }
            }
            Ok(hits)
        })
        .collect()
}

fn is_perfect_matching(hits: &[Vec<usize>], classes: usize) -> bool {
    let mut seen = vec![false; classes];
    hits.len() == classes
        && hits.iter().all(|h| match h.as_slice() {
            [j] if !seen[*j] => {
                seen[*j] = true;
                true
            }
            _ => false,
        })
}

fn neighborhood(family: &PaperFamily, opts: &DemoOptions) -> Result<Neighborhood> {
    let graph = enumerate(
        &family.t_lambda,
        &EnumerateOptions {
            node_bound: opts.node_bound,
            depth_bound: opts.neighborhood_depth,
            interval: false,
            non_irreducible: false,
            both_sides: true,
            tilting: Some(Some(family.nu.clone())),
        },
    )?;
    let orbits: Vec<Result<NuStability>> =
        graph.nodes.par_iter().map(|n| nu_stability(&n.complex(), &family.nu)).collect();
    let mut nodes = Vec::with_capacity(graph.len());
    for (n, orbit) in graph.nodes.iter().zip(orbits) {
        nodes.push(NeighborhoodNode {
            depth: n.depth,
            g_vectors: n.g_vectors.clone(),
            tilting: n.tilting,
            nu_orbit: orbit?.orbit,
        });
    }
    Ok(Neighborhood {
        depth_bound: opts.neighborhood_depth,
        complete: graph.complete,
        tilting_nodes: graph.tilting_count(),
        edges: graph.edges.len(),
        nodes,
    })
}

pub fn run_paper_demo(n: usize, p: u32, opts: &DemoOptions) -> Result<PaperDemoReport> {
    let family = build_paper_family(n, PrimeField::new(p)?)?;
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check { name: name.to_string(), passed, detail });
    };

    let orthogonal = hom_orthogonal(&family.e_res, &family.sigma_e_res);
    check("E spherical", family.e_report.spherical, format!("d = {}", family.e_report.d));
    check("sigma*E spherical", family.sigma_e_report.spherical, format!("d = {}", family.sigma_e_report.d));
    check("E, sigma*E Hom-orthogonal", orthogonal, String::new());

    let shape = family.twist.evaluation_shape.clone();
    let expected_shape = vec![HomEntry { shift: n as i32 - 1, dim: n }];
    check("evaluation source is E[1-n]^n", shape == expected_shape, format!("{shape:?}"));

    let (t, st) = (&family.t, &family.sigma_t);
    let t_tilting = tilting_check(t)?;
    let t_end_dim = hom_dim(t, t, 0);
    check("T tilting", t_tilting.tilting, t_tilting.reason());
    check("dim End(T) = dim A", t_end_dim == family.a.dim(), format!("{t_end_dim}"));
    let equivariant = iso_in_homotopy(st, &t.twist(&family.sigma))?;
    check("sigma*T from the twisted triangle", equivariant, String::new());

    let hom_t_a = entries(hom_table(t, &ProjComplex::regular(family.a.clone())));
    let ladder = hom_t_a.iter().all(|h| h.dim == 0 || h.shift == 0 || h.shift == 1);
    check("Hom(T, A[j]) = 0 for j not in {0, 1}", ladder, String::new());
    let hom_t_sigma_t = entries(hom_table(t, st));
    let negative = hom_t_sigma_t.iter().all(|h| h.dim == 0 || h.shift >= 0);
    check("Hom(T, sigma*T[j]) = 0 for j < 0", negative, String::new());

    let lambda_rep = self_injectivity_report(&family.lambda);
    check("Lambda weakly symmetric", lambda_rep.weakly_symmetric, String::new());
    check("Lambda dimension 2n^2", family.lambda.dim() == 2 * n * n, format!("{}", family.lambda.dim()));
    let presentation = check_presentation(&family)?;
    check("Lambda presentation", presentation.passed(), format!("{presentation:?}"));

    let report = silting_check_with(&family.t_lambda, SiltingCertificate::BaseChange, Some(&family.nu))?;
    check("T (x) Lambda silting", report.silting, report.verdict().to_string());
    let not_tilting = report.tilting.as_ref().is_some_and(|v| !v.tilting);
    check("T (x) Lambda not tilting", not_tilting, report.verdict().to_string());
    let shift = 2 - n as i32;
    let self_extension =
        HomEntry { shift, dim: report.vanishing.iter().find(|h| h.shift == shift).map_or(0, |h| h.dim) };
    check("self-extension of dim n^2 at 2 - n", self_extension.dim == n * n, format!("{}", self_extension.dim));
    let stability = nu_stability(&family.t_lambda, &family.nu)?;
    check("T (x) Lambda not nu-stable", !stability.stable, format!("{:?}", stability.orbit));

    let matching = if family.printed.is_empty() {
        None
    } else {
        let hits = match_printed(&family)?;
        let perfect = is_perfect_matching(&hits, report.summands);
        check("printed summands match", perfect, format!("{hits:?}"));
        Some(hits.into_iter().map(|h| if h.len() == 1 { Some(h[0]) } else { None }).collect())
    };

    let neighborhood = if opts.neighborhood_depth > 0 {
        let nb = neighborhood(&family, opts)?;
        check("no tilting complex in the neighbourhood", nb.tilting_nodes == 0, format!("{} nodes", nb.nodes.len()));
        Some(nb)
    } else {
        None
    };

    let passed = checks.iter().all(|c| c.passed);
    Ok(PaperDemoReport {
        verdict: verdict(passed),
        n,
        p,
        dim_a: family.a.dim(),
        dim_lambda: family.lambda.dim(),
        dim_e: family.e.dim(),
        e_spherical: family.e_report.spherical,
        sigma_e_spherical: family.sigma_e_report.spherical,
        orthogonal,
        evaluation_shape: shape,
        t_tilting,
        t_end_dim,
        hom_t_a,
        hom_t_sigma_t,
        lambda_self_injective: lambda_rep.self_injective,
        lambda_weakly_symmetric: lambda_rep.weakly_symmetric,
        lambda_symmetric: lambda_rep.symmetric,
        presentation,
        t_lambda: report,
        self_extension,
        nu_stability: stability,
        matching,
        neighborhood,
        checks,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PreprojectiveDemoReport {
    pub verdict: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub p: u32,
    pub dim: usize,
    pub self_injective: bool,
    pub weakly_symmetric: bool,
    pub symmetric: bool,
    pub nakayama_permutation: Option<Vec<usize>>,
    pub nodes: usize,
    pub edges: usize,
    pub complete: bool,
    pub tilting_nodes: usize,
    pub distinct_g_vectors: bool,
    pub unimodular: bool,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Self-injectivity of the preprojective algebra and its two-term silting interval, with tilting
/// verdicts cross-checked against Nakayama stability on every node.
pub fn run_preprojective_demo(ty: DynkinType, p: u32, node_bound: usize) -> Result<PreprojectiveDemoReport> {
    let alg = Arc::new(preprojective(ty, PrimeField::new(p)?)?);
    let rep = self_injectivity_report(&alg);
    let nu = nakayama_automorphism(&alg)?;
    let graph = enumerate(
        &ProjComplex::regular(alg.clone()),
        &EnumerateOptions { node_bound, depth_bound: usize::MAX, tilting: Some(nu), ..EnumerateOptions::default() },
    )?;
    let mut gs: Vec<&Vec<Vec<i64>>> = graph.nodes.iter().map(|n| &n.g_vectors).collect();
    gs.sort();
    gs.dedup();
    let distinct = gs.len() == graph.len();
    let unimodular = graph.nodes.iter().all(|n| matches!(n.determinant(), Some(1) | Some(-1)));
    let tilting_nodes = graph.tilting_count();
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check { name: name.to_string(), passed, detail });
    };
    check("self-injective", rep.self_injective, String::new());
    check("enumeration closed", graph.complete, format!("{} nodes", graph.len()));
    check("g-vectors pairwise distinct", distinct, String::new());
    check("unimodular g-matrices", unimodular, String::new());
    if rep.weakly_symmetric {
        check("every node tilting", tilting_nodes == graph.len(), format!("{tilting_nodes} of {}", graph.len()));
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(PreprojectiveDemoReport {
        verdict: verdict(passed),
        ty: ty.to_string(),
        p,
        dim: alg.dim(),
        self_injective: rep.self_injective,
        weakly_symmetric: rep.weakly_symmetric,
        symmetric: rep.symmetric,
        nakayama_permutation: rep.nakayama_permutation,
        nodes: graph.len(),
        edges: graph.edges.len(),
        complete: graph.complete,
        tilting_nodes,
        distinct_g_vectors: distinct,
        unimodular,
        checks,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_without_neighbourhood() {
        let r = run_paper_demo(4, 101, &DemoOptions { neighborhood_depth: 0, ..DemoOptions::default() }).unwrap();
        assert!(r.passed, "{}", r.summary());
        assert_eq!(r.self_extension, HomEntry { shift: -2, dim: 16 });
        assert_eq!(r.t_lambda.verdict(), "silting, not tilting");
        assert_eq!(r.matching.as_ref().map(Vec::len), Some(4));
    }

    #[test]
    fn demo_with_neighbourhood() {
        let r = run_paper_demo(4, 101, &DemoOptions::default()).unwrap();
        assert!(r.passed, "{}", r.summary());
        let nb = r.neighborhood.unwrap();
        assert_eq!(nb.tilting_nodes, 0);
        assert!(nb.nodes.len() > 1);
    }

    #[test]
    fn preprojective_a2() {
        let r = run_preprojective_demo(DynkinType::A(2), 101, 100).unwrap();
        assert!(r.passed, "{:?}", r.checks);
        assert_eq!((r.nodes, r.tilting_nodes), (6, 2));
        assert_eq!(r.nakayama_permutation, Some(vec![1, 0]));
    }
}
