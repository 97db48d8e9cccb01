use std::collections::HashMap;

use super::{Algebra, AlgebraParts, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    /// Vertices are 0-based.
    pub fn new(name: &str, source: usize, target: usize) -> Self {
        Arrow { name: name.to_string(), source, target }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    num_vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(num_vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= num_vertices || a.target >= num_vertices {
                return Err(Error::Semantic(format!("arrow {} has an endpoint outside 1..{}", a.name, num_vertices)));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Semantic(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(Quiver { num_vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrow indices for a path written as names, checked for composability.
    pub fn path(&self, names: &[&str]) -> Result<Vec<usize>> {
        let idx: Vec<usize> = names
            .iter()
            .map(|n| self.arrow_index(n).ok_or_else(|| Error::Semantic(format!("unknown arrow {n}"))))
            .collect::<Result<_>>()?;
        self.check_composable(&idx)?;
        Ok(idx)
    }

    fn check_composable(&self, path: &[usize]) -> Result<()> {
        for w in path.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::Semantic(format!(
                    "arrows {} and {} are not composable",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        Ok(())
    }

    pub fn path_name(&self, path: &[usize]) -> String {
        path.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// A linear combination of parallel paths of one common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    pub fn new(quiver: &Quiver, terms: Vec<(i64, Vec<usize>)>) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().filter(|(c, _)| *c != 0).collect();
        let Some((_, first)) = terms.first() else {
            return Err(Error::Semantic("empty relation".into()));
        };
        let len = first.len();
        if len == 0 {
            return Err(Error::Semantic("relations must consist of paths of positive length".into()));
        }
        let ends = |p: &[usize]| (quiver.arrows[p[0]].source, quiver.arrows[p[p.len() - 1]].target);
        for (_, p) in &terms {
            quiver.check_composable(p)?;
            if p.len() != len {
                return Err(Error::InhomogeneousRelation(format!(
                    "paths {} and {} have different lengths",
                    quiver.path_name(first),
                    quiver.path_name(p)
                )));
            }
            if p.is_empty() || ends(p) != ends(first) {
                return Err(Error::Semantic(format!(
                    "paths {} and {} are not parallel",
                    quiver.path_name(first),
                    quiver.path_name(p)
                )));
            }
        }
        Ok(Relation { terms })
    }

    pub fn monomial(quiver: &Quiver, names: &[&str]) -> Result<Self> {
        Relation::new(quiver, vec![(1, quiver.path(names)?)])
    }

    pub fn from_named(quiver: &Quiver, terms: &[(i64, &[&str])]) -> Result<Self> {
        let t = terms.iter().map(|(c, p)| Ok((*c, quiver.path(p)?))).collect::<Result<Vec<_>>>()?;
        Relation::new(quiver, t)
    }

    pub fn terms(&self) -> &[(i64, Vec<usize>)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms[0].1.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn source(&self, q: &Quiver) -> usize {
        q.arrows[self.terms[0].1[0]].source
    }
}

/// A quiver with relations and the path-length bound used to build its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub max_len: usize,
}

impl Presentation {
    pub fn algebra(&self, field: PrimeField) -> Result<Algebra> {
        path_algebra(field, &self.quiver, &self.relations, self.max_len)
    }
}

struct Level {
    words: Vec<Vec<usize>>,
    end: Vec<usize>,
    /// (local basis index of the previous level, arrow) -> coordinates in this level
    ext: HashMap<(usize, usize), Vec<(usize, u32)>>,
}

fn extend(field: PrimeField, next: &Level, v: &[(usize, u32)], arrow: usize) -> Vec<(usize, u32)> {
    let mut acc: HashMap<usize, u32> = HashMap::new();
    for &(b, c) in v {
        if let Some(img) = next.ext.get(&(b, arrow)) {
            for &(t, x) in img {
                let e = acc.entry(t).or_insert(0);
                *e = field.mul_add(*e, c, x);
            }
        }
    }
    let mut out: Vec<(usize, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
    out.sort_unstable();
    out
}

/// Path algebra of `quiver` modulo the ideal generated by length-homogeneous `relations`.
///
/// Each graded piece is computed as `A_{d-1} * arrows` modulo the relations ending in
/// degree `d`; construction stops at the first zero piece.
pub fn path_algebra(field: PrimeField, quiver: &Quiver, relations: &[Relation], max_len: usize) -> Result<Algebra> {
    if max_len == 0 {
        return Err(Error::InvalidInput("max_len must be at least 1".into()));
    }
    let n = quiver.num_vertices;
    let arrows = &quiver.arrows;
    let mut levels = vec![Level { words: vec![Vec::new(); n], end: (0..n).collect(), ext: HashMap::new() }];
    let mut starts: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut d = 0;
    loop {
        d += 1;
        let prev = &levels[d - 1];
        let mut pairs = Vec::new();
        for b in 0..prev.words.len() {
            for (a, arr) in arrows.iter().enumerate() {
                if arr.source == prev.end[b] {
                    pairs.push((b, a));
                }
            }
        }
        if pairs.is_empty() {
            break;
        }
        if d > max_len {
            return Err(Error::NotFiniteDimensional(max_len));
        }
        let pair_index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for r in relations {
            let len = r.len();
            if len > d {
                continue;
            }
            let base = &levels[d - len];
            for p in 0..base.words.len() {
                if base.end[p] != r.source(quiver) {
                    continue;
                }
                let mut row = vec![0u32; pairs.len()];
                for (c, word) in &r.terms {
                    let c = field.from_i64(*c);
                    let mut v = vec![(p, 1u32)];
                    for (k, &arrow) in word[..len - 1].iter().enumerate() {
                        v = extend(field, &levels[d - len + k + 1], &v, arrow);
                    }
                    let last = word[len - 1];
                    for (b, x) in v {
                        let j = pair_index[&(b, last)];
                        row[j] = field.mul_add(row[j], c, x);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        let (reduced, pivots) = if rows.is_empty() {
            (Matrix::zeros(field, 0, pairs.len()), Vec::new())
        } else {
            let m = Matrix::from_raw(field, rows.len(), pairs.len(), rows.concat());
            m.rref()
        };
        let basis_pairs: Vec<usize> = (0..pairs.len()).filter(|j| !pivots.contains(j)).collect();
        if basis_pairs.is_empty() {
            break;
        }
        let pos: HashMap<usize, usize> = basis_pairs.iter().enumerate().map(|(i, &j)| (j, i)).collect();
        let mut ext = HashMap::new();
        for (j, &(b, a)) in pairs.iter().enumerate() {
            let coords = if let Some(&k) = pos.get(&j) {
                vec![(k, 1)]
            } else {
                let row = pivots.iter().position(|&pc| pc == j).unwrap();
                basis_pairs
                    .iter()
                    .enumerate()
                    .filter_map(|(k, &c)| {
                        let v = reduced.get(row, c);
                        (v != 0).then(|| (k, field.neg(v)))
                    })
                    .collect()
            };
            ext.insert((b, a), coords);
        }
        let words: Vec<Vec<usize>> = basis_pairs
            .iter()
            .map(|&j| {
                let (b, a) = pairs[j];
                let mut w = levels[d - 1].words[b].clone();
                w.push(a);
                w
            })
            .collect();
        let starts_d: Vec<usize> = basis_pairs.iter().map(|&j| starts[d - 1][pairs[j].0]).collect();
        let end = basis_pairs.iter().map(|&j| arrows[pairs[j].1].target).collect();
        levels.push(Level { words, end, ext });
        starts.push(starts_d);
    }

    // global indexing: degree 0 first, then each level
    let mut offsets = vec![0];
    for l in &levels {
        offsets.push(offsets.last().unwrap() + l.words.len());
    }
    let dim = *offsets.last().unwrap();
    let mut labels = Vec::with_capacity(dim);
    let mut corners = Vec::with_capacity(dim);
    let mut grading = Vec::with_capacity(dim);
    let mut paths = Vec::with_capacity(dim);
    let mut local = Vec::with_capacity(dim);
    for (deg, l) in levels.iter().enumerate() {
        for (b, w) in l.words.iter().enumerate() {
            labels.push(if deg == 0 { format!("e{}", b + 1) } else { quiver.path_name(w) });
            corners.push((starts[deg][b], l.end[b]));
            grading.push(deg);
            paths.push(w.clone());
            local.push(b);
        }
    }
    let mut mult: Vec<SparseVec> = vec![Vec::new(); dim * dim];
    for u in 0..dim {
        for v in 0..dim {
            let (ui, uj) = corners[u];
            let (vi, vj) = corners[v];
            if uj != vi {
                continue;
            }
            let prod: SparseVec = if grading[u] == 0 {
                vec![(v as u32, 1)]
            } else if grading[v] == 0 {
                vec![(u as u32, 1)]
            } else {
                let mut deg = grading[u];
                let mut vec = vec![(local[u], 1u32)];
                for &a in &paths[v] {
                    if deg + 1 >= levels.len() || vec.is_empty() {
                        vec.clear();
                        break;
                    }
                    vec = extend(field, &levels[deg + 1], &vec, a);
                    deg += 1;
                }
                vec.into_iter().map(|(b, c)| ((offsets[deg] + b) as u32, c)).collect()
            };
            let _ = (ui, vj);
            mult[u * dim + v] = prod;
        }
    }
    let mut generators = Vec::new();
    for (a, arr) in arrows.iter().enumerate() {
        let mut v = vec![0u32; dim];
        if levels.len() > 1 {
            if let Some(img) = levels[1].ext.get(&(arr.source, a)) {
                for &(b, c) in img {
                    v[offsets[1] + b] = c;
                }
            }
        }
        generators.push((arr.name.clone(), v));
    }
    Algebra::from_parts(AlgebraParts {
        field,
        num_vertices: n,
        labels,
        corners,
        idempotents: (0..n).collect(),
        mult,
        grading: Some(grading),
        generators,
        quiver: Some(quiver.clone()),
        paths: Some(paths),
    })
}
