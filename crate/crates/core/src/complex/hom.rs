use std::collections::HashMap;

use rand::Rng;

use super::{ElemMatrix, ProjComplex};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{complement_indices, Matrix, Solver};

/// A graded map `X → Y` of degree `shift`: components `X^i → Y^{i+shift}`. It is a chain
/// map (a morphism `X → Y[shift]`) when `(-1)^shift d_Y f = f d_X`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ProjComplex,
    target: ProjComplex,
    shift: i32,
    comps: Vec<ElemMatrix>,
}

impl ChainMap {
    pub fn zero(source: &ProjComplex, target: &ProjComplex, shift: i32) -> Self {
        let dim = source.algebra().dim();
        let comps = source
            .degrees()
            .map(|i| ElemMatrix::zeros(target.term(i + shift).len(), source.term(i).len(), dim))
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), shift, comps }
    }

    pub fn identity(x: &ProjComplex) -> Self {
        let comps = x.degrees().map(|i| ElemMatrix::identity(x.algebra(), x.term(i))).collect();
        ChainMap { source: x.clone(), target: x.clone(), shift: 0, comps }
    }

    /// Components listed by source degree starting at `source.lo()`; validated.
    pub fn new(source: &ProjComplex, target: &ProjComplex, shift: i32, comps: Vec<ElemMatrix>) -> Result<Self> {
        let f = ChainMap { source: source.clone(), target: target.clone(), shift, comps };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let alg = self.source.algebra();
        if self.comps.len() != self.source.terms().len() {
            return Err(Error::InvalidComplex("chain map has the wrong number of components".into()));
        }
        for i in self.source.degrees() {
            let c = self.component(i);
            let (src, tgt) = (self.source.term(i), self.target.term(i + self.shift));
            if c.rows() != tgt.len() || c.cols() != src.len() {
                return Err(Error::InvalidComplex(format!("component in degree {i} has the wrong shape")));
            }
            for r in 0..c.rows() {
                for k in 0..c.cols() {
                    if c.entry(r, k).iter().enumerate().any(|(b, &x)| x != 0 && alg.corner(b) != (tgt[r], src[k])) {
                        return Err(Error::InvalidComplex(format!("component entry in degree {i} leaves its corner")));
                    }
                }
            }
        }
        if !self.is_chain_map() {
            return Err(Error::InvalidComplex("map does not commute with the differentials".into()));
        }
        Ok(())
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }
    pub fn target(&self) -> &ProjComplex {
        &self.target
    }
    pub fn shift(&self) -> i32 {
        self.shift
    }
    pub fn components(&self) -> &[ElemMatrix] {
        &self.comps
    }

    /// Component `X^deg → Y^{deg+shift}` (zero-sized outside the support).
    pub fn component(&self, deg: i32) -> ElemMatrix {
        let k = deg - self.source.lo();
        if k < 0 || k as usize >= self.comps.len() {
            return ElemMatrix::zeros(
                self.target.term(deg + self.shift).len(),
                self.source.term(deg).len(),
                self.source.algebra().dim(),
            );
        }
        self.comps[k as usize].clone()
    }

    pub(crate) fn component_ref(&self, deg: i32) -> Option<&ElemMatrix> {
        let k = deg - self.source.lo();
        (k >= 0 && (k as usize) < self.comps.len()).then(|| &self.comps[k as usize])
    }

    pub fn is_chain_map(&self) -> bool {
        let alg = self.source.algebra();
        let sign = if self.shift.rem_euclid(2) == 0 { 1 } else { alg.field().neg(1) };
        for i in self.source.lo() - 1..=self.source.hi() {
            let dy = self.target.diff_or_zero(i + self.shift);
            let mut lhs = dy.mul(alg, &self.component(i)).scaled(alg, sign);
            let rhs = self.component(i + 1).mul(alg, &self.source.diff_or_zero(i));
            lhs.add_scaled(alg, &rhs, alg.field().neg(1));
            if !lhs.is_zero() {
                return false;
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(ElemMatrix::is_zero)
    }

    pub fn add_scaled(&mut self, other: &ChainMap, c: u32) {
        assert_eq!(self.shift, other.shift);
        let alg = self.source.algebra().clone();
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            a.add_scaled(&alg, b, c);
        }
    }

    pub fn scaled(&self, c: u32) -> ChainMap {
        let alg = self.source.algebra();
        ChainMap { comps: self.comps.iter().map(|m| m.scaled(alg, c)).collect(), ..self.clone() }
    }

    /// The same components viewed as a degree-0 map `X[-shift] → Y`.
    pub fn to_degree_zero(&self) -> ChainMap {
        ChainMap {
            source: self.source.shift(-self.shift),
            target: self.target.clone(),
            shift: 0,
            comps: self.comps.clone(),
        }
    }

    /// For maps between minimal complexes: whether every component is invertible, which for
    /// a chain map between minimal complexes is equivalent to being an isomorphism in the
    /// homotopy category.
    pub fn is_invertible_componentwise(&self) -> bool {
        if self.shift != 0 {
            return false;
        }
        let alg = self.source.algebra();
        self.source.degrees().chain(self.target.degrees()).all(|i| {
            let (s, t) = (self.source.term(i), self.target.term(i));
            if s.len() != t.len() {
                return false;
            }
            if s.is_empty() {
                return true;
            }
            self.component(i).top(alg, t, s).inverse().is_some()
        })
    }
}

/// Map `X → ⊕ targets` with the given components.
pub fn column_map(x: &ProjComplex, maps: &[ChainMap]) -> ChainMap {
    let alg = x.algebra().clone();
    let targets: Vec<&ProjComplex> = maps.iter().map(ChainMap::target).collect();
    let target = if targets.is_empty() {
        ProjComplex::zero(alg.clone())
    } else {
        ProjComplex::direct_sum(&targets).expect("same algebra")
    };
    let comps = x
        .degrees()
        .map(|i| {
            maps.iter().fold(ElemMatrix::zeros(0, x.term(i).len(), alg.dim()), |acc, f| {
                ElemMatrix::vstack(&acc, &f.component(i))
            })
        })
        .collect();
    ChainMap::new(x, &target, 0, comps).expect("stacked chain maps form a chain map")
}

/// Map `⊕ sources → X` with the given components.
pub fn row_map(maps: &[ChainMap], x: &ProjComplex) -> ChainMap {
    let alg = x.algebra().clone();
    let sources: Vec<&ProjComplex> = maps.iter().map(ChainMap::source).collect();
    let source = if sources.is_empty() {
        ProjComplex::zero(alg.clone())
    } else {
        ProjComplex::direct_sum(&sources).expect("same algebra")
    };
    let comps = source
        .degrees()
        .map(|i| {
            maps.iter().fold(ElemMatrix::zeros(x.term(i).len(), 0, alg.dim()), |acc, f| {
                ElemMatrix::hstack(&acc, &f.component(i))
            })
        })
        .collect();
    ChainMap::new(&source, x, 0, comps).expect("juxtaposed chain maps form a chain map")
}

/// `g ∘ f` for `f: X → Y[m]`, `g: Y → Z[m']`: `(g∘f)^i = g^{i+m} f^i`.
pub fn compose(f: &ChainMap, g: &ChainMap) -> ChainMap {
    let alg = f.source.algebra();
    let comps = f
        .source
        .degrees()
        .map(|i| {
            let fi = f.component_ref(i).unwrap();
            match g.component_ref(i + f.shift) {
                Some(gi) if fi.rows() > 0 => gi.mul(alg, fi),
                _ => ElemMatrix::zeros(g.target.term(i + f.shift + g.shift).len(), fi.cols(), alg.dim()),
            }
        })
        .collect();
    ChainMap { source: f.source.clone(), target: g.target.clone(), shift: f.shift + g.shift, comps }
}

#[derive(Clone, Copy, Debug)]
struct Block {
    deg: i32,
    row: usize,
    col: usize,
    offset: usize,
    tv: usize,
    sv: usize,
}

/// Coordinates on `⊕_i Hom(X^i, Y^{i+m})`: one block per pair of summands, each block
/// carrying the corner basis of `e_{tv} A e_{sv}`.
#[derive(Clone, Debug)]
pub(crate) struct HomLayout {
    blocks: Vec<Block>,
    index: HashMap<(i32, usize, usize), usize>,
    dim: usize,
}

impl HomLayout {
    pub(crate) fn new(x: &ProjComplex, y: &ProjComplex, m: i32) -> Self {
        let alg = x.algebra();
        let mut blocks = Vec::new();
        let mut index = HashMap::new();
        let mut offset = 0;
        for i in x.degrees() {
            let (src, tgt) = (x.term(i), y.term(i + m));
            for (row, &tv) in tgt.iter().enumerate() {
                for (col, &sv) in src.iter().enumerate() {
                    let len = alg.corner_dim(tv, sv);
                    if len == 0 {
                        continue;
                    }
                    index.insert((i, row, col), blocks.len());
                    blocks.push(Block { deg: i, row, col, offset, tv, sv });
                    offset += len;
                }
            }
        }
        HomLayout { blocks, index, dim: offset }
    }

    fn to_vector(&self, alg: &Algebra, f: &ChainMap) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        for b in &self.blocks {
            if let Some(c) = f.component_ref(b.deg) {
                let e = c.entry(b.row, b.col);
                for (k, &basis) in alg.corner_basis(b.tv, b.sv).iter().enumerate() {
                    v[b.offset + k] = e[basis];
                }
            }
        }
        v
    }

    fn to_map(&self, x: &ProjComplex, y: &ProjComplex, m: i32, v: &[u32]) -> ChainMap {
        let alg = x.algebra();
        let mut f = ChainMap::zero(x, y, m);
        for b in &self.blocks {
            let k = (b.deg - x.lo()) as usize;
            let e = f.comps[k].entry_mut(b.row, b.col);
            for (j, &basis) in alg.corner_basis(b.tv, b.sv).iter().enumerate() {
                e[basis] = v[b.offset + j];
            }
        }
        f
    }
}

/// `acc += coeff * a * e_b` restricted to the corner coordinates of `layout` block.
fn accumulate(alg: &Algebra, out: &mut [u32], prod: &[u32], block_offset: usize, tv: usize, sv: usize) {
    for (k, &basis) in alg.corner_basis(tv, sv).iter().enumerate() {
        out[block_offset + k] = alg.field().add(out[block_offset + k], prod[basis]);
    }
}

/// Matrix of `D_m: H^m → H^{m+1}`, `D_m(f)^i = (-1)^m d_Y f^i - f^{i+1} d_X`.
fn hom_differential(x: &ProjComplex, y: &ProjComplex, m: i32, src: &HomLayout, tgt: &HomLayout) -> Matrix {
    let alg = x.algebra();
    let f = alg.field();
    let sign = if m.rem_euclid(2) == 0 { 1 } else { f.neg(1) };
    let minus = f.neg(1);
    let (rows, cols) = (tgt.dim, src.dim);
    let mut data = vec![0u32; rows * cols];
    let mut col = vec![0u32; rows];
    let mut prod = vec![0u32; alg.dim()];
    let mut j = 0;
    for b in &src.blocks {
        for &basis in alg.corner_basis(b.tv, b.sv) {
            col.iter_mut().for_each(|x| *x = 0);
            let e = alg.basis_vec(basis);
            // (-1)^m d_Y^{i+m} · f^i lands in degree i
            if let Some(dy) = y.diff(b.deg + m) {
                for s in 0..dy.rows() {
                    let a = dy.entry(s, b.row);
                    if a.iter().all(|&z| z == 0) {
                        continue;
                    }
                    prod.iter_mut().for_each(|x| *x = 0);
                    alg.mul_acc(&mut prod, a, &e, sign);
                    if let Some(&t) = tgt.index.get(&(b.deg, s, b.col)) {
                        let tb = tgt.blocks[t];
                        accumulate(alg, &mut col, &prod, tb.offset, tb.tv, tb.sv);
                    }
                }
            }
            // -f^i · d_X^{i-1} lands in degree i-1
            if let Some(dx) = x.diff(b.deg - 1) {
                for t in 0..dx.cols() {
                    let a = dx.entry(b.col, t);
                    if a.iter().all(|&z| z == 0) {
                        continue;
                    }
                    prod.iter_mut().for_each(|x| *x = 0);
                    alg.mul_acc(&mut prod, &e, a, minus);
                    if let Some(&k) = tgt.index.get(&(b.deg - 1, b.row, t)) {
                        let tb = tgt.blocks[k];
                        accumulate(alg, &mut col, &prod, tb.offset, tb.tv, tb.sv);
                    }
                }
            }
            for (r, &v) in col.iter().enumerate() {
                data[r * cols + j] = v;
            }
            j += 1;
        }
    }
    Matrix::from_raw(f, rows, cols, data)
}

/// `Hom_K(X, Y[m])` with a basis of representative chain maps.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: ProjComplex,
    target: ProjComplex,
    shift: i32,
    layout: HomLayout,
    reps: Vec<Vec<u32>>,
    solver: Option<Solver>,
}

pub fn hom_space(x: &ProjComplex, y: &ProjComplex, m: i32) -> HomSpace {
    let layout = HomLayout::new(x, y, m);
    let f = x.algebra().field();
    if layout.dim == 0 {
        return HomSpace { source: x.clone(), target: y.clone(), shift: m, layout, reps: Vec::new(), solver: None };
    }
    let next = HomLayout::new(x, y, m + 1);
    let prev = HomLayout::new(x, y, m - 1);
    let cycles = if next.dim == 0 {
        Matrix::identity(f, layout.dim).columns()
    } else {
        hom_differential(x, y, m, &layout, &next).kernel().columns()
    };
    let boundaries = if prev.dim == 0 {
        Vec::new()
    } else {
        hom_differential(x, y, m - 1, &prev, &layout).rank_profile().image.columns()
    };
    let keep = complement_indices(f, layout.dim, &boundaries, &cycles);
    let reps: Vec<Vec<u32>> = keep.into_iter().map(|k| cycles[k].clone()).collect();
    let mut cols = reps.clone();
    cols.extend(boundaries);
    let solver = Some(Solver::new(&Matrix::from_columns(f, layout.dim, &cols)));
    HomSpace { source: x.clone(), target: y.clone(), shift: m, layout, reps, solver }
}

/// `dim Hom_K(X, Y[m])`.
pub fn hom_dim(x: &ProjComplex, y: &ProjComplex, m: i32) -> usize {
    let layout = HomLayout::new(x, y, m);
    if layout.dim == 0 {
        return 0;
    }
    let next = HomLayout::new(x, y, m + 1);
    let prev = HomLayout::new(x, y, m - 1);
    let r_out = if next.dim == 0 { 0 } else { hom_differential(x, y, m, &layout, &next).rank() };
    let r_in = if prev.dim == 0 { 0 } else { hom_differential(x, y, m - 1, &prev, &layout).rank() };
    layout.dim - r_out - r_in
}

/// `(m, dim Hom(X, Y[m]))` for every `m` in the window where the Hom complex is nonzero.
pub fn hom_table(x: &ProjComplex, y: &ProjComplex) -> Vec<(i32, usize)> {
    if x.is_zero() || y.is_zero() {
        return Vec::new();
    }
    let (lo, hi) = (y.lo() - x.hi(), y.hi() - x.lo());
    let layouts: Vec<HomLayout> = (lo..=hi + 1).map(|m| HomLayout::new(x, y, m)).collect();
    // ranks[k] = rank of D_{lo+k}
    let ranks: Vec<usize> = (0..=(hi - lo) as usize)
        .map(|k| {
            if layouts[k].dim == 0 || layouts[k + 1].dim == 0 {
                0
            } else {
                hom_differential(x, y, lo + k as i32, &layouts[k], &layouts[k + 1]).rank()
            }
        })
        .collect();
    (0..=(hi - lo) as usize)
        .map(|k| {
            let r_in = if k == 0 { 0 } else { ranks[k - 1] };
            (lo + k as i32, layouts[k].dim - ranks[k] - r_in)
        })
        .collect()
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
    pub fn shift(&self) -> i32 {
        self.shift
    }
    pub fn source(&self) -> &ProjComplex {
        &self.source
    }
    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    /// Representative chain map of the `k`-th basis class.
    pub fn basis_map(&self, k: usize) -> ChainMap {
        self.layout.to_map(&self.source, &self.target, self.shift, &self.reps[k])
    }

    pub fn basis(&self) -> Vec<ChainMap> {
        (0..self.dim()).map(|k| self.basis_map(k)).collect()
    }

    /// Map with the given class coordinates.
    pub fn element(&self, coeffs: &[u32]) -> ChainMap {
        let f = self.source.algebra().field();
        let mut v = vec![0u32; self.layout.dim];
        for (c, r) in coeffs.iter().zip(&self.reps) {
            if *c != 0 {
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = f.mul_add(*x, *c, y);
                }
            }
        }
        self.layout.to_map(&self.source, &self.target, self.shift, &v)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> (Vec<u32>, ChainMap) {
        let p = self.source.algebra().field().modulus();
        let c: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        let m = self.element(&c);
        (c, m)
    }

    /// Class coordinates of a chain map; `None` if it is not a cycle of this Hom complex.
    pub fn coordinates(&self, f: &ChainMap) -> Option<Vec<u32>> {
        assert_eq!(f.shift, self.shift, "degree mismatch");
        let Some(solver) = &self.solver else {
            return Some(Vec::new());
        };
        let v = self.layout.to_vector(self.source.algebra(), f);
        solver.solve(&v).map(|mut x| {
            x.truncate(self.reps.len());
            x
        })
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> bool {
        self.coordinates(f).is_some_and(|c| c.iter().all(|&x| x == 0))
    }
}
