//! Silting mutation through approximation triangles and bounded enumeration of intervals
//! in the silting order.

use std::collections::HashMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraAutomorphism;
use crate::complex::{cocone, column_map, compose, cone, hom_space, minimize, row_map, ChainMap, ProjComplex};
use crate::error::{Error, Result};
use crate::krull_schmidt::{decompose, iso_in_homotopy, EndRing};
use crate::linalg::complement_indices;
use crate::silting::{integer_determinant, silting_geq, tilting_check_with, TiltingVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Usage(format!("side must be left or right, got {s}"))),
        }
    }
}

/// Basis of radical maps `pieces[k] → pieces[j]` for pairwise non-isomorphic indecomposables.
fn radical_maps(pieces: &[ProjComplex], k: usize, j: usize) -> Vec<ChainMap> {
    if k == j {
        EndRing::new(&pieces[j]).radical_maps()
    } else {
        hom_space(&pieces[k], &pieces[j], 0).basis()
    }
}

/// Minimal left `add(pieces)`-approximation of `x`.
fn left_approx_pieces(x: &ProjComplex, pieces: &[ProjComplex]) -> ChainMap {
    let f = x.algebra().field();
    let spaces: Vec<_> = pieces.iter().map(|y| hom_space(x, y, 0)).collect();
    let mut chosen = Vec::new();
    for (j, hj) in spaces.iter().enumerate() {
        if hj.dim() == 0 {
            continue;
        }
        let mut through_radical = Vec::new();
        for (k, hk) in spaces.iter().enumerate() {
            if hk.dim() == 0 {
                continue;
            }
            for g in radical_maps(pieces, k, j) {
                for h in hk.basis() {
                    through_radical.push(hj.coordinates(&compose(&h, &g)).expect("composite is a chain map"));
                }
            }
        }
        let units: Vec<Vec<u32>> = (0..hj.dim()).map(|k| unit(hj.dim(), k)).collect();
        for k in complement_indices(f, hj.dim(), &through_radical, &units) {
            chosen.push(hj.basis_map(k));
        }
    }
    column_map(x, &chosen)
}

/// Minimal right `add(pieces)`-approximation of `x`.
fn right_approx_pieces(x: &ProjComplex, pieces: &[ProjComplex]) -> ChainMap {
    let f = x.algebra().field();
    let spaces: Vec<_> = pieces.iter().map(|y| hom_space(y, x, 0)).collect();
    let mut chosen = Vec::new();
    for (j, hj) in spaces.iter().enumerate() {
        if hj.dim() == 0 {
            continue;
        }
        let mut through_radical = Vec::new();
        for (k, hk) in spaces.iter().enumerate() {
            if hk.dim() == 0 {
                continue;
            }
            for g in radical_maps(pieces, j, k) {
                for h in hk.basis() {
                    through_radical.push(hj.coordinates(&compose(&g, &h)).expect("composite is a chain map"));
                }
            }
        }
        let units: Vec<Vec<u32>> = (0..hj.dim()).map(|k| unit(hj.dim(), k)).collect();
        for k in complement_indices(f, hj.dim(), &through_radical, &units) {
            chosen.push(hj.basis_map(k));
        }
    }
    row_map(&chosen, x)
}

fn unit(len: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[k] = 1;
    v
}

/// Left `add(Y)`-approximation `f: X → Y′`. The minimal version uses one copy of an
/// indecomposable summand of `Y` per basis vector of `Hom(X, Y)` modulo maps factoring through
/// the radical of `add(Y)`; the plain version uses a full basis of `Hom(X, Y)`.
pub fn left_approximation(x: &ProjComplex, y: &ProjComplex, minimal: bool) -> Result<ChainMap> {
    if minimal {
        let dec = decompose(y)?;
        let pieces: Vec<ProjComplex> =
            dec.class_representatives.iter().map(|&k| dec.summands[k].complex.clone()).collect();
        Ok(left_approx_pieces(x, &pieces))
    } else {
        Ok(column_map(x, &hom_space(x, y, 0).basis()))
    }
}

/// Right `add(Y)`-approximation `g: Y′ → X`, dual to [`left_approximation`].
pub fn right_approximation(x: &ProjComplex, y: &ProjComplex, minimal: bool) -> Result<ChainMap> {
    if minimal {
        let dec = decompose(y)?;
        let pieces: Vec<ProjComplex> =
            dec.class_representatives.iter().map(|&k| dec.summands[k].complex.clone()).collect();
        Ok(right_approx_pieces(x, &pieces))
    } else {
        Ok(row_map(&hom_space(y, x, 0).basis(), x))
    }
}

/// One mutation of a basic complex given by its indecomposable summands.
#[derive(Clone, Debug)]
pub struct MutationStep {
    pub source: Vec<ProjComplex>,
    /// Indices of the exchanged summands of `source`.
    pub at: Vec<usize>,
    pub side: Side,
    /// `X → Y′` for left mutations, `Y′ → X` for right ones.
    pub approximation: ChainMap,
    /// The minimized cone (left) or co-cone (right) of the approximation.
    pub exchanged: ProjComplex,
    /// Summands of the result; for irreducible steps the new summand sits at the old index.
    pub result: Vec<ProjComplex>,
}

impl MutationStep {
    pub fn source_complex(&self) -> ProjComplex {
        sum_of(&self.source)
    }

    pub fn result_complex(&self) -> ProjComplex {
        sum_of(&self.result)
    }

    pub fn is_irreducible(&self) -> bool {
        self.at.len() == 1
    }
}

pub(crate) fn sum_of(pieces: &[ProjComplex]) -> ProjComplex {
    let refs: Vec<&ProjComplex> = pieces.iter().collect();
    ProjComplex::direct_sum(&refs).expect("pieces share an algebra")
}

/// Pairwise non-isomorphic indecomposable summands of `t`.
pub fn summands_of(t: &ProjComplex) -> Result<Vec<ProjComplex>> {
    let dec = decompose(t)?;
    Ok(dec.class_representatives.iter().map(|&k| dec.summands[k].complex.clone()).collect())
}

/// Mutation of `⊕ pieces` at the summands listed in `at`.
pub fn mutate_pieces(pieces: &[ProjComplex], at: &[usize], side: Side) -> Result<MutationStep> {
    let mut at = at.to_vec();
    at.sort_unstable();
    at.dedup();
    if at.is_empty() || at.iter().any(|&k| k >= pieces.len()) {
        return Err(Error::Usage(format!("summand index out of range: complex has {} summands", pieces.len())));
    }
    let x = sum_of(&at.iter().map(|&k| pieces[k].clone()).collect::<Vec<_>>());
    let others: Vec<ProjComplex> = (0..pieces.len()).filter(|k| !at.contains(k)).map(|k| pieces[k].clone()).collect();
    let (approximation, exchanged) = match side {
        Side::Left => {
            let f = left_approx_pieces(&x, &others);
            let c = cone(&f)?.cone;
            (f, minimize(&c))
        }
        Side::Right => {
            let g = right_approx_pieces(&x, &others);
            let c = cocone(&g)?;
            (g, minimize(&c))
        }
    };
    let new_pieces = summands_of(&exchanged)?;
    let mut result = pieces.to_vec();
    if at.len() == 1 && new_pieces.len() == 1 {
        result[at[0]] = new_pieces[0].clone();
    } else {
        result = others;
        for p in new_pieces {
            let mut duplicate = false;
            for q in &result {
                if iso_in_homotopy(&p, q)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                result.push(p);
            }
        }
    }
    Ok(MutationStep { source: pieces.to_vec(), at, side, approximation, exchanged, result })
}

/// Irreducible mutation of `t` at its `index`-th indecomposable summand.
pub fn mutate(t: &ProjComplex, index: usize, side: Side) -> Result<MutationStep> {
    mutate_pieces(&summands_of(t)?, &[index], side)
}

/// One irreducible mutation per indecomposable summand.
pub fn irreducible_mutations(pieces: &[ProjComplex], side: Side) -> Result<Vec<MutationStep>> {
    (0..pieces.len()).into_par_iter().map(|k| mutate_pieces(pieces, &[k], side)).collect()
}

/// Mutations at every nonempty proper set of summands.
pub fn all_mutations(pieces: &[ProjComplex], side: Side) -> Result<Vec<MutationStep>> {
    let n = pieces.len();
    let sets: Vec<Vec<usize>> =
        (1..(1u64 << n) - 1).map(|mask| (0..n).filter(|&k| mask >> k & 1 == 1).collect()).collect();
    sets.par_iter().map(|at| mutate_pieces(pieces, at, side)).collect()
}

/// Twists every summand of a mutation source by `nu` and mutates at the same positions.
pub fn twisted_step(step: &MutationStep, nu: &AlgebraAutomorphism) -> Result<MutationStep> {
    let twisted: Vec<ProjComplex> = step.source.iter().map(|p| p.twist(nu)).collect();
    mutate_pieces(&twisted, &step.at, step.side)
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationNode {
    #[serde(skip)]
    pub summands: Vec<ProjComplex>,
    /// Sorted g-vectors of the summands.
    pub g_vectors: Vec<Vec<i64>>,
    pub depth: usize,
    pub tilting: Option<bool>,
}

impl MutationNode {
    pub fn complex(&self) -> ProjComplex {
        sum_of(&self.summands)
    }

    pub fn determinant(&self) -> Option<i64> {
        integer_determinant(&self.g_vectors)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationEdge {
    pub from: usize,
    pub to: usize,
    /// Indices of the exchanged summands in the source node.
    pub at: Vec<usize>,
    pub side: Side,
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationGraph {
    pub nodes: Vec<MutationNode>,
    pub edges: Vec<MutationEdge>,
    /// True when the frontier closed before any bound was reached.
    pub complete: bool,
    pub node_bound: usize,
    pub depth_bound: usize,
}

impl MutationGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn tilting_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.tilting == Some(true)).count()
    }

    /// Turns an incomplete enumeration into an error.
    pub fn require_complete(self) -> Result<Self> {
        if self.complete {
            Ok(self)
        } else {
            Err(Error::BoundExceeded { nodes: self.nodes.len() })
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub node_bound: usize,
    pub depth_bound: usize,
    /// Keep only nodes `T` with `P ≥ T ≥ P[1]`.
    pub interval: bool,
    /// Also mutate at sets of several summands. No completeness claim is attached.
    pub non_irreducible: bool,
    /// Follow right mutations as well as left ones.
    pub both_sides: bool,
    /// Run [`tilting_check_with`] on each node with this Nakayama automorphism when set;
    /// `Some(None)` checks vanishing only.
    pub tilting: Option<Option<AlgebraAutomorphism>>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            node_bound: 10_000,
            depth_bound: 64,
            interval: true,
            non_irreducible: false,
            both_sides: false,
            tilting: None,
        }
    }
}

fn sorted_g_vectors(pieces: &[ProjComplex]) -> Vec<Vec<i64>> {
    let mut g: Vec<Vec<i64>> = pieces.iter().map(ProjComplex::g_vector).collect();
    g.sort();
    g
}

/// Whether `p` is a shift of the regular stalk complex, in which case g-vectors alone identify
/// silting complexes of the interval.
fn is_shifted_regular(p: &ProjComplex) -> bool {
    let p = minimize(p);
    if p.terms().len() != 1 {
        return false;
    }
    let mut t = p.terms()[0].clone();
    t.sort_unstable();
    t == (0..p.algebra().num_vertices()).collect::<Vec<_>>()
}

fn fingerprint(t: &ProjComplex) -> Vec<(i32, usize)> {
    crate::complex::hom_table(t, t).into_iter().filter(|&(_, d)| d > 0).collect()
}

/// Breadth-first search by mutation starting from the silting complex `p`.
pub fn enumerate(p: &ProjComplex, opts: &EnumerateOptions) -> Result<MutationGraph> {
    let start = summands_of(p)?;
    let lower = minimize(p).shift(1);
    let top = minimize(p);
    let by_g = opts.interval && is_shifted_regular(p);
    let mut nodes: Vec<MutationNode> = Vec::new();
    let mut edges = Vec::new();
    let mut index: HashMap<(Vec<Vec<i64>>, Vec<(i32, usize)>), Vec<usize>> = HashMap::new();

    let key_of = |pieces: &[ProjComplex]| -> (Vec<Vec<i64>>, Vec<(i32, usize)>) {
        let g = sorted_g_vectors(pieces);
        if by_g {
            (g, Vec::new())
        } else {
            (g, fingerprint(&sum_of(pieces)))
        }
    };

    let verdict = |pieces: &[ProjComplex]| -> Result<Option<bool>> {
        match &opts.tilting {
            Some(nu) => tilting_check_with(&sum_of(pieces), nu.as_ref()).map(|v: TiltingVerdict| Some(v.tilting)),
            None => Ok(None),
        }
    };

    index.entry(key_of(&start)).or_default().push(0);
    nodes.push(MutationNode { g_vectors: sorted_g_vectors(&start), summands: start, depth: 0, tilting: None });
    let mut frontier = vec![0usize];
    let mut complete = true;
    let mut depth = 0;
    while !frontier.is_empty() {
        if depth >= opts.depth_bound {
            complete = false;
            break;
        }
        let expanded: Vec<Result<Vec<MutationStep>>> = frontier
            .par_iter()
            .map(|&id| {
                let pieces = &nodes[id].summands;
                let sides: &[Side] = if opts.both_sides { &[Side::Left, Side::Right] } else { &[Side::Left] };
                let mut steps = Vec::new();
                for &side in sides {
                    steps.extend(if opts.non_irreducible {
                        all_mutations(pieces, side)?
                    } else {
                        irreducible_mutations(pieces, side)?
                    });
                }
                Ok(steps)
            })
            .collect();
        let mut next = Vec::new();
        for (&from, steps) in frontier.iter().zip(expanded) {
            for step in steps? {
                let result = step.result;
                if opts.interval {
                    let t = sum_of(&result);
                    if !(silting_geq(&top, &t) && silting_geq(&t, &lower)) {
                        continue;
                    }
                }
                let key = key_of(&result);
                let mut found = None;
                if let Some(ids) = index.get(&key) {
                    if by_g {
                        found = ids.first().copied();
                    } else {
                        let t = sum_of(&result);
                        for &id in ids {
                            if iso_in_homotopy(&nodes[id].complex(), &t)? {
                                found = Some(id);
                                break;
                            }
                        }
                    }
                }
                let to = match found {
                    Some(id) => id,
                    None => {
                        if nodes.len() >= opts.node_bound {
                            complete = false;
                            continue;
                        }
                        let id = nodes.len();
                        index.entry(key).or_default().push(id);
                        nodes.push(MutationNode {
                            g_vectors: sorted_g_vectors(&result),
                            summands: result,
                            depth: depth + 1,
                            tilting: None,
                        });
                        next.push(id);
                        id
                    }
                };
                edges.push(MutationEdge { from, to, at: step.at, side: step.side });
            }
        }
        frontier = next;
        depth += 1;
    }
    let verdicts: Vec<Result<Option<bool>>> = nodes.par_iter().map(|n| verdict(&n.summands)).collect();
    for (n, v) in nodes.iter_mut().zip(verdicts) {
        n.tilting = v?;
    }
    Ok(MutationGraph { nodes, edges, complete, node_bound: opts.node_bound, depth_bound: opts.depth_bound })
}

/// Silting complexes `T` with `P ≥ T ≥ P[1]` reachable from `p` by irreducible left mutation.
pub fn interval_enumerate(p: &ProjComplex, node_bound: usize, depth_bound: usize) -> Result<MutationGraph> {
    enumerate(p, &EnumerateOptions { node_bound, depth_bound, ..EnumerateOptions::default() })
}

#[cfg(test)]
mod tests;
