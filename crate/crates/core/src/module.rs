//! Finite-dimensional right modules given by action matrices, and their projective
//! resolutions as complexes.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraAutomorphism};
use crate::complex::{ElemMatrix, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{complement_indices, independent_subset, Matrix, Solver};

/// A right module over a structure-constant algebra. `action[b]` is the matrix of `m ↦ m·b`
/// on column vectors, so `action[ab] = action[b] · action[a]`.
#[derive(Clone, Debug)]
pub struct RightModule {
    alg: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

/// A module homomorphism, stored as a `dim target × dim source` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleStructure {
    pub dimension_vector: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
    /// Dimension vectors of `M rad^k / M rad^{k+1}`, for the nonzero layers.
    pub radical_layers: Vec<Vec<usize>>,
}

impl ModuleStructure {
    pub fn radical_length(&self) -> usize {
        self.radical_layers.len()
    }
}

impl RightModule {
    pub fn new(alg: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = RightModule { alg, dim, action };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let alg = &self.alg;
        let f = alg.field();
        if self.action.len() != alg.dim() {
            return Err(Error::InvalidModule("one action matrix per basis element required".into()));
        }
        if self.action.iter().any(|m| m.rows() != self.dim || m.cols() != self.dim) {
            return Err(Error::InvalidModule("action matrix has the wrong size".into()));
        }
        let mut unit = Matrix::zeros(f, self.dim, self.dim);
        for &e in alg.idempotents() {
            unit = unit.add(&self.action[e]);
        }
        if unit != Matrix::identity(f, self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let mut prod = Matrix::zeros(f, self.dim, self.dim);
                for &(c, x) in alg.mul_basis(a, b) {
                    prod = prod.add(&self.action[c as usize].scale(x));
                }
                if prod != self.action[b].mul(&self.action[a]) {
                    return Err(Error::InvalidModule(format!(
                        "action is not associative on ({}, {})",
                        alg.label(a),
                        alg.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: Arc<Algebra>) -> Self {
        let f = alg.field();
        let action = vec![Matrix::zeros(f, 0, 0); alg.dim()];
        RightModule { alg, dim: 0, action }
    }

    pub fn projective(alg: Arc<Algebra>, v: usize) -> Result<Self> {
        cyclic_quotient(alg, v, &[])
    }

    pub fn simple(alg: Arc<Algebra>, v: usize) -> Result<Self> {
        let rad: Vec<Vec<u32>> =
            alg.projective_basis(v).into_iter().filter(|&b| b != alg.idempotent(v)).map(|b| alg.basis_vec(b)).collect();
        cyclic_quotient(alg, v, &rad)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.action[b]
    }

    /// `m · a` for an arbitrary algebra element `a`.
    pub fn act(&self, m: &[u32], a: &[u32]) -> Vec<u32> {
        let f = self.alg.field();
        let mut out = vec![0; self.dim];
        for (b, &c) in a.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(self.action[b].mul_vec(m)) {
                    *o = f.mul_add(*o, c, x);
                }
            }
        }
        out
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        (0..self.alg.num_vertices()).map(|v| self.action[self.alg.idempotent(v)].rank()).collect()
    }

    /// Dimension vector of the span of `vectors`, assumed to be a submodule.
    fn dimension_vector_of(&self, vectors: &[Vec<u32>]) -> Vec<usize> {
        let f = self.alg.field();
        (0..self.alg.num_vertices())
            .map(|v| {
                let e = &self.action[self.alg.idempotent(v)];
                let images: Vec<Vec<u32>> = vectors.iter().map(|x| e.mul_vec(x)).collect();
                independent_subset(f, self.dim, &images).len()
            })
            .collect()
    }

    /// `S · rad A` for a subspace `S` given by spanning vectors.
    fn radical_of(&self, span: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let f = self.alg.field();
        let images: Vec<Vec<u32>> =
            span.iter().flat_map(|x| self.alg.radical_basis().map(move |r| self.action[r].mul_vec(x))).collect();
        independent_subset(f, self.dim, &images).into_iter().map(|k| images[k].clone()).collect()
    }

    pub fn structure_report(&self) -> ModuleStructure {
        let f = self.alg.field();
        let whole: Vec<Vec<u32>> = (0..self.dim).map(|k| unit_vec(self.dim, k)).collect();
        let mut layers = Vec::new();
        let mut cur = whole.clone();
        let mut cur_dims = self.dimension_vector_of(&cur);
        let mut top = None;
        while !cur.is_empty() {
            let next = self.radical_of(&cur);
            let next_dims = self.dimension_vector_of(&next);
            let layer: Vec<usize> = cur_dims.iter().zip(&next_dims).map(|(a, b)| a - b).collect();
            top.get_or_insert_with(|| layer.clone());
            layers.push(layer);
            cur = next;
            cur_dims = next_dims;
        }
        let mut stacked = Matrix::zeros(f, 0, self.dim);
        for r in self.alg.radical_basis() {
            stacked = stack_rows(&stacked, &self.action[r]);
        }
        let socle = stacked.kernel().columns();
        ModuleStructure {
            dimension_vector: self.dimension_vector(),
            top: top.unwrap_or_else(|| vec![0; self.alg.num_vertices()]),
            socle: self.dimension_vector_of(&socle),
            radical_layers: layers,
        }
    }

    /// `M_σ`: the same space with `m ∗ a = m · σ(a)`.
    pub fn twist(&self, sigma: &AlgebraAutomorphism) -> RightModule {
        let alg = &self.alg;
        let action = (0..alg.dim()).map(|b| self.action_of(&sigma.apply(alg, &alg.basis_vec(b)))).collect();
        RightModule { alg: alg.clone(), dim: self.dim, action }
    }

    fn action_of(&self, a: &[u32]) -> Matrix {
        let f = self.alg.field();
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (b, &c) in a.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[b].scale(c));
            }
        }
        m
    }
}

fn unit_vec(len: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[k] = 1;
    v
}

fn stack_rows(a: &Matrix, b: &Matrix) -> Matrix {
    let mut data = Vec::with_capacity((a.rows() + b.rows()) * a.cols());
    for i in 0..a.rows() {
        data.extend_from_slice(a.row(i));
    }
    for i in 0..b.rows() {
        data.extend_from_slice(b.row(i));
    }
    Matrix::from_raw(a.field(), a.rows() + b.rows(), a.cols(), data)
}

/// `e_i A / (Σ_k killers_k · A)`. Its basis is a set of paths of `e_i A` complementing the
/// submodule.
pub fn cyclic_quotient(alg: Arc<Algebra>, i: usize, killers: &[Vec<u32>]) -> Result<RightModule> {
    let f = alg.field();
    let d = alg.dim();
    if i >= alg.num_vertices() {
        return Err(Error::InvalidInput(format!("vertex {} out of range", i + 1)));
    }
    let pb = alg.projective_basis(i);
    let len = pb.len();
    let mut pos = vec![usize::MAX; d];
    for (k, &b) in pb.iter().enumerate() {
        pos[b] = k;
    }
    let restrict = |a: &[u32]| -> Result<Vec<u32>> {
        let mut v = vec![0; len];
        for (b, &c) in a.iter().enumerate() {
            if c != 0 {
                if pos[b] == usize::MAX {
                    return Err(Error::InvalidInput(format!("element does not lie in e_{}A", i + 1)));
                }
                v[pos[b]] = c;
            }
        }
        Ok(v)
    };
    let mut gens = Vec::new();
    for k in killers {
        if k.len() != d {
            return Err(Error::InvalidInput("element has the wrong length".into()));
        }
        restrict(k)?;
        for b in 0..d {
            let mut prod = vec![0; d];
            for (a, &c) in k.iter().enumerate() {
                if c != 0 {
                    for &(t, x) in alg.mul_basis(a, b) {
                        prod[t as usize] = f.mul_add(prod[t as usize], c, x);
                    }
                }
            }
            gens.push(restrict(&prod)?);
        }
    }
    let sub: Vec<Vec<u32>> = independent_subset(f, len, &gens).into_iter().map(|k| gens[k].clone()).collect();
    let units: Vec<Vec<u32>> = (0..len).map(|k| unit_vec(len, k)).collect();
    let keep = complement_indices(f, len, &sub, &units);
    let mut cols = sub.clone();
    cols.extend(keep.iter().map(|&k| units[k].clone()));
    let solver = Solver::new(&Matrix::from_columns(f, len, &cols));
    let q = keep.len();
    let mut action = Vec::with_capacity(d);
    for b in 0..d {
        let mut m = Matrix::zeros(f, q, q);
        for (col, &k) in keep.iter().enumerate() {
            let mut prod = vec![0; len];
            for &(t, x) in alg.mul_basis(pb[k], b) {
                prod[pos[t as usize]] = x;
            }
            let coords = solver.solve(&prod).expect("complement spans the projective");
            for row in 0..q {
                m.set(row, col, coords[sub.len() + row]);
            }
        }
        action.push(m);
    }
    Ok(RightModule { alg, dim: q, action })
}

/// Homomorphisms `M → N`.
pub fn module_homs(m: &RightModule, n: &RightModule) -> Vec<ModuleMap> {
    let f = m.alg.field();
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dn * dm;
    let idx = |i: usize, j: usize| i * dm + j;
    let gens: Vec<usize> = m.alg.radical_basis().chain(m.alg.idempotents().iter().copied()).collect();
    let mut rows: Vec<u32> = Vec::new();
    let mut count = 0;
    for &b in &gens {
        let (ma, na) = (&m.action[b], &n.action[b]);
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![0u32; unknowns];
                for k in 0..dm {
                    row[idx(i, k)] = f.add(row[idx(i, k)], ma.get(k, j));
                }
                for k in 0..dn {
                    row[idx(k, j)] = f.sub(row[idx(k, j)], na.get(i, k));
                }
                rows.extend(row);
                count += 1;
            }
        }
    }
    let sys = Matrix::from_raw(f, count, unknowns, rows);
    sys.kernel().columns().into_iter().map(|v| ModuleMap { matrix: Matrix::from_raw(f, dn, dm, v) }).collect()
}

impl ModuleMap {
    pub fn new(m: &RightModule, n: &RightModule, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != n.dim || matrix.cols() != m.dim {
            return Err(Error::InvalidModule("map has the wrong shape".into()));
        }
        for b in 0..m.alg.dim() {
            if matrix.mul(&m.action[b]) != n.action[b].mul(&matrix) {
                return Err(Error::InvalidModule("map is not A-linear".into()));
            }
        }
        Ok(ModuleMap { matrix })
    }
}

/// Coordinates on a free module `⊕_k e_{v_k} A`: blocks of projective bases.
struct FreeCoords<'a> {
    alg: &'a Algebra,
    vertices: Vec<usize>,
    offsets: Vec<usize>,
    bases: Vec<Vec<usize>>,
    pos: Vec<Vec<usize>>,
    len: usize,
}

impl<'a> FreeCoords<'a> {
    fn new(alg: &'a Algebra, vertices: Vec<usize>) -> Self {
        let mut offsets = Vec::new();
        let mut bases = Vec::new();
        let mut pos = Vec::new();
        let mut len = 0;
        for &v in &vertices {
            let pb = alg.projective_basis(v);
            let mut p = vec![usize::MAX; alg.dim()];
            for (k, &b) in pb.iter().enumerate() {
                p[b] = k;
            }
            offsets.push(len);
            len += pb.len();
            bases.push(pb);
            pos.push(p);
        }
        FreeCoords { alg, vertices, offsets, bases, pos, len }
    }

    /// Component in summand `k` as an algebra element.
    fn block(&self, x: &[u32], k: usize) -> Vec<u32> {
        let mut a = vec![0; self.alg.dim()];
        for (t, &b) in self.bases[k].iter().enumerate() {
            a[b] = x[self.offsets[k] + t];
        }
        a
    }

    fn act(&self, x: &[u32], b: usize) -> Vec<u32> {
        let f = self.alg.field();
        let mut out = vec![0; self.len];
        for k in 0..self.vertices.len() {
            for (t, &p) in self.bases[k].iter().enumerate() {
                let c = x[self.offsets[k] + t];
                if c == 0 {
                    continue;
                }
                for &(r, y) in self.alg.mul_basis(p, b) {
                    let o = self.offsets[k] + self.pos[k][r as usize];
                    out[o] = f.mul_add(out[o], c, y);
                }
            }
        }
        out
    }
}

/// Generators of a submodule `S` (spanned by `span`) whose classes form a basis of the top
/// `S / S·rad`, each lying in `S e_v` for its vertex `v`.
fn top_generators(
    alg: &Algebra,
    len: usize,
    act: &dyn Fn(&[u32], usize) -> Vec<u32>,
    span: &[Vec<u32>],
) -> Vec<(usize, Vec<u32>)> {
    let f = alg.field();
    let rad_images: Vec<Vec<u32>> = span.iter().flat_map(|x| alg.radical_basis().map(move |r| act(x, r))).collect();
    let rad: Vec<Vec<u32>> =
        independent_subset(f, len, &rad_images).into_iter().map(|k| rad_images[k].clone()).collect();
    let mut gens = Vec::new();
    for v in 0..alg.num_vertices() {
        let part: Vec<Vec<u32>> = span.iter().map(|x| act(x, alg.idempotent(v))).collect();
        for k in complement_indices(f, len, &rad, &part) {
            gens.push((v, part[k].clone()));
        }
    }
    gens
}

/// Matrix of `⊕_j e_{w_j} A → ambient`, `a ↦ g_j · a`, in the coordinates of the free source.
fn cover_matrix<'a>(
    alg: &'a Algebra,
    len: usize,
    act: &dyn Fn(&[u32], usize) -> Vec<u32>,
    gens: &[(usize, Vec<u32>)],
) -> (FreeCoords<'a>, Matrix) {
    let free = FreeCoords::new(alg, gens.iter().map(|(v, _)| *v).collect());
    let cols: Vec<Vec<u32>> =
        gens.iter().enumerate().flat_map(|(j, (_, g))| free.bases[j].iter().map(move |&p| act(g, p))).collect();
    let m = Matrix::from_columns(alg.field(), len, &cols);
    (free, m)
}

/// Minimal projective resolution `P^{-k} → … → P^0` of `m`, built from iterated projective
/// covers of kernels. Fails if it has not terminated after `bound` syzygies.
pub fn projective_resolution(m: &RightModule, bound: usize) -> Result<ProjComplex> {
    let alg = m.alg.clone();
    if m.dim == 0 {
        return Ok(ProjComplex::zero(alg));
    }
    let whole: Vec<Vec<u32>> = (0..m.dim).map(|k| unit_vec(m.dim, k)).collect();
    let act_m = |x: &[u32], b: usize| m.action[b].mul_vec(x);
    let gens = top_generators(&alg, m.dim, &act_m, &whole);
    let (mut free, cover) = cover_matrix(&alg, m.dim, &act_m, &gens);
    let mut kernel = cover.kernel().columns();
    let mut terms = vec![free.vertices.clone()];
    let mut diffs = Vec::new();
    let mut steps = 0;
    while !kernel.is_empty() {
        if steps == bound {
            return Err(Error::ResolutionBoundExceeded(bound));
        }
        steps += 1;
        let act_f = |x: &[u32], b: usize| free.act(x, b);
        let gens = top_generators(&alg, free.len, &act_f, &kernel);
        let mut d = ElemMatrix::zeros(free.vertices.len(), gens.len(), alg.dim());
        for (j, (_, g)) in gens.iter().enumerate() {
            for k in 0..free.vertices.len() {
                d.set(k, j, &free.block(g, k));
            }
        }
        let (next, cover) = cover_matrix(&alg, free.len, &act_f, &gens);
        kernel = cover.kernel().columns();
        terms.push(next.vertices.clone());
        diffs.push(d);
        free = next;
    }
    terms.reverse();
    diffs.reverse();
    let lo = -(terms.len() as i32 - 1);
    ProjComplex::new(alg, lo, terms, diffs)
}

/// Dimension vectors of the cohomology `H^i(X)` of a complex of projectives, viewed as a
/// complex of modules.
pub fn homology_dimension_vectors(x: &ProjComplex) -> Vec<(i32, Vec<usize>)> {
    let alg = x.algebra();
    let f = alg.field();
    let n = alg.num_vertices();
    // matrix of d^i restricted to the e_w parts
    let restricted = |i: i32, w: usize| -> Matrix {
        let (src, tgt) = (x.term(i), x.term(i + 1));
        let src_bases: Vec<&[usize]> = src.iter().map(|&v| alg.corner_basis(v, w)).collect();
        let tgt_bases: Vec<&[usize]> = tgt.iter().map(|&v| alg.corner_basis(v, w)).collect();
        let rows: usize = tgt_bases.iter().map(|b| b.len()).sum();
        let cols: usize = src_bases.iter().map(|b| b.len()).sum();
        let mut m = Matrix::zeros(f, rows, cols);
        let d = x.diff_or_zero(i);
        let mut col = 0;
        for (c, basis) in src_bases.iter().enumerate() {
            for &p in basis.iter() {
                let mut row_off = 0;
                for (r, tb) in tgt_bases.iter().enumerate() {
                    let prod = alg.mul(d.entry(r, c), &alg.basis_vec(p));
                    for (t, &q) in tb.iter().enumerate() {
                        m.set(row_off + t, col, prod[q]);
                    }
                    row_off += tb.len();
                }
                col += 1;
            }
        }
        m
    };
    x.degrees()
        .map(|i| {
            let dims = (0..n)
                .map(|w| {
                    let out = restricted(i, w);
                    let inc = restricted(i - 1, w);
                    out.cols() - out.rank() - inc.rank()
                })
                .collect();
            (i, dims)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{paper_algebra, paper_sigma};
    use crate::linalg::PrimeField;

    fn alg(n: usize) -> Arc<Algebra> {
        Arc::new(paper_algebra(n, PrimeField::new(101).unwrap()).unwrap())
    }

    fn dual_numbers() -> Arc<Algebra> {
        use crate::algebra::{path_algebra, Arrow, Quiver, Relation};
        let q = Quiver::new(1, vec![Arrow::new("x", 0, 0)]).unwrap();
        let r = Relation::monomial(&q, &["x", "x"]).unwrap();
        Arc::new(path_algebra(PrimeField::new(101).unwrap(), &q, &[r], 4).unwrap())
    }

    fn e_module(a: &Arc<Algebra>) -> RightModule {
        cyclic_quotient(a.clone(), 0, &[a.generator("y1").unwrap().to_vec()]).unwrap()
    }

    #[test]
    fn cyclic_quotients_of_the_first_projective() {
        let a = alg(4);
        let e = e_module(&a);
        assert_eq!(e.dim(), 4);
        let s = e.structure_report();
        assert_eq!(s.top, vec![1, 0, 0, 0]);
        assert_eq!(s.socle, vec![0, 0, 0, 1]);
        assert_eq!(s.radical_length(), 4);
        let p = cyclic_quotient(a.clone(), 0, &[]).unwrap();
        assert_eq!(p.dim(), a.projective_basis(0).len());
        let both = [a.generator("x1").unwrap().to_vec(), a.generator("y1").unwrap().to_vec()];
        let simple = cyclic_quotient(a.clone(), 0, &both).unwrap();
        assert_eq!(simple.dim(), 1);
        assert_eq!(simple.structure_report().radical_length(), 1);
    }

    #[test]
    fn killers_outside_the_projective_are_rejected() {
        let a = alg(4);
        assert!(cyclic_quotient(a.clone(), 1, &[a.generator("x1").unwrap().to_vec()]).is_err());
    }

    #[test]
    fn dual_numbers_projective_has_simple_top_and_socle() {
        let a = dual_numbers();
        let p = RightModule::projective(a.clone(), 0).unwrap();
        let s = p.structure_report();
        assert_eq!((s.top.clone(), s.socle.clone()), (vec![1], vec![1]));
        let simple = RightModule::simple(a, 0).unwrap();
        assert!(matches!(projective_resolution(&simple, 10), Err(Error::ResolutionBoundExceeded(10))));
    }

    #[test]
    fn resolution_of_e_has_length_n_minus_one() {
        for n in [4, 6] {
            let a = alg(n);
            let e = e_module(&a);
            let res = projective_resolution(&e, 2 * n).unwrap();
            assert_eq!((res.lo(), res.hi()), (1 - n as i32, 0));
            assert!(res.diffs().iter().all(|d| d.is_radical(&a)));
            let h = homology_dimension_vectors(&res);
            for (deg, dims) in h {
                let expected = if deg == 0 { e.dimension_vector() } else { vec![0; n] };
                assert_eq!(dims, expected, "degree {deg}");
            }
            assert!(projective_resolution(&e, n - 2).is_err());
        }
    }

    #[test]
    fn projective_resolves_to_a_stalk() {
        let a = alg(4);
        let p = RightModule::projective(a.clone(), 2).unwrap();
        let res = projective_resolution(&p, 0).unwrap();
        assert_eq!(res, ProjComplex::projective(a, 2));
    }

    #[test]
    fn twisting_e_gives_a_non_isomorphic_module() {
        let a = alg(4);
        let sigma = paper_sigma(&a).unwrap();
        let e = e_module(&a);
        let se = e.twist(&sigma);
        se.validate().unwrap();
        let other = cyclic_quotient(a.clone(), 0, &[a.generator("x1").unwrap().to_vec()]).unwrap();
        assert_eq!(module_homs(&e, &e).len(), 1);
        assert_eq!(module_homs(&e, &se).len(), 0);
        assert_eq!(module_homs(&se, &other).len(), 1);
        assert_eq!(module_homs(&other, &se).len(), 1);
        let back = se.twist(&sigma);
        assert_eq!(module_homs(&e, &back).len(), 1);
        assert_eq!(back.dimension_vector(), e.dimension_vector());
        for h in module_homs(&se, &other) {
            ModuleMap::new(&se, &other, h.matrix).unwrap();
        }
    }
}
