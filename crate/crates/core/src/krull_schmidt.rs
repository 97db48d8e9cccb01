//! Endomorphism algebras in the homotopy category, radicals, and decomposition of
//! complexes into indecomposable summands.

use rand::Rng;

use crate::algebra::{Algebra, AlgebraParts};
use crate::complex::{compose, hom_space, minimize, ChainMap, ElemMatrix, HomSpace, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{independent_subset, Matrix, Poly, PrimeField, Solver};
use crate::rng::rng_for;

/// Dense multiplication table of a unital finite-dimensional algebra over GF(p).
#[derive(Clone, Debug)]
pub struct StructureTable {
    field: PrimeField,
    dim: usize,
    /// `table[a * dim + b]` holds the coordinates of `b_a b_b`.
    table: Vec<Vec<u32>>,
    unit: Vec<u32>,
    /// A faithful block-diagonal matrix representation used for trace computations; the
    /// regular representation when absent.
    rep: Option<BlockRep>,
}

/// Block-diagonal matrices, one list of row-major square blocks per basis element.
#[derive(Clone, Debug)]
pub struct BlockRep {
    sizes: Vec<usize>,
    mats: Vec<Vec<u32>>,
}

impl BlockRep {
    pub fn new(sizes: Vec<usize>, mats: Vec<Vec<u32>>) -> Self {
        let len: usize = sizes.iter().map(|m| m * m).sum();
        assert!(mats.iter().all(|m| m.len() == len), "block matrix has the wrong size");
        BlockRep { sizes, mats }
    }

    fn degree(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Product of two block-diagonal matrices in flattened form.
fn block_mul(f: PrimeField, sizes: &[usize], a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len()];
    let mut o = 0;
    for &m in sizes {
        for i in 0..m {
            for k in 0..m {
                let x = a[o + i * m + k];
                if x == 0 {
                    continue;
                }
                for j in 0..m {
                    out[o + i * m + j] = f.mul_add(out[o + i * m + j], x, b[o + k * m + j]);
                }
            }
        }
        o += m * m;
    }
    out
}

impl StructureTable {
    pub fn new(field: PrimeField, dim: usize, table: Vec<Vec<u32>>, unit: Vec<u32>) -> Self {
        assert_eq!(table.len(), dim * dim);
        StructureTable { field, dim, table, unit, rep: None }
    }

    pub fn with_representation(mut self, rep: BlockRep) -> Self {
        assert_eq!(rep.mats.len(), self.dim);
        self.rep = Some(rep);
        self
    }

    pub fn from_algebra(alg: &Algebra) -> Self {
        let d = alg.dim();
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let mut v = vec![0; d];
                for &(c, x) in alg.mul_basis(a, b) {
                    v[c as usize] = x;
                }
                table.push(v);
            }
        }
        StructureTable { field: alg.field(), dim: d, table, unit: alg.unit(), rep: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let c = f.mul(xa, yb);
                for (o, &t) in out.iter_mut().zip(&self.table[a * self.dim + b]) {
                    if t != 0 {
                        *o = f.mul_add(*o, c, t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.mul(x, &unit_vec(self.dim, j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    fn eval_poly(&self, poly: &Poly, x: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut acc = vec![0; self.dim];
        for &c in poly.coeffs().iter().rev() {
            acc = self.mul(x, &acc);
            for (a, &u) in acc.iter_mut().zip(&self.unit) {
                *a = f.mul_add(*a, c, u);
            }
        }
        acc
    }

    /// `Tr(ρ̃(z)^{p^i}) / p^i mod p`, with `ρ̃` an integer lift of the representation.
    fn trace_functional(&self, z: &[u32], i: u32) -> u32 {
        let p = self.field.modulus() as u64;
        let pi = p.pow(i);
        let q = pi * p;
        let lifted: Vec<(usize, Vec<u64>)> = match &self.rep {
            Some(rep) => {
                let mut out = Vec::new();
                let mut o = 0;
                for &m in &rep.sizes {
                    let mut l = vec![0u64; m * m];
                    for (k, &zk) in z.iter().enumerate() {
                        if zk == 0 {
                            continue;
                        }
                        for (e, &t) in l.iter_mut().zip(&rep.mats[k][o..o + m * m]) {
                            *e = (*e + zk as u64 * t as u64) % q;
                        }
                    }
                    out.push((m, l));
                    o += m * m;
                }
                out
            }
            None => {
                let d = self.dim;
                let mut l = vec![0u64; d * d];
                for (k, &zk) in z.iter().enumerate() {
                    if zk == 0 {
                        continue;
                    }
                    for j in 0..d {
                        for (r, &t) in self.table[k * d + j].iter().enumerate() {
                            if t != 0 {
                                let e = &mut l[r * d + j];
                                *e = (*e + zk as u64 * t as u64) % q;
                            }
                        }
                    }
                }
                vec![(d, l)]
            }
        };
        let mut tr = 0u64;
        for (m, l) in lifted {
            let power = mat_pow_mod(&l, m, pi, q);
            tr = (tr + (0..m).map(|k| power[k * m + k]).sum::<u64>()) % q;
        }
        debug_assert_eq!(tr % pi, 0, "trace functional is not divisible");
        ((tr / pi) % p) as u32
    }

    /// Basis of the Jacobson radical, computed by the iterated trace-form method, which is
    /// correct in every characteristic.
    pub fn radical(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let d = self.dim;
        if d == 0 {
            return Vec::new();
        }
        let p = f.modulus() as usize;
        let n = self.rep.as_ref().map_or(d, BlockRep::degree);
        let mut levels = 0u32;
        while p.pow(levels + 1) <= n {
            levels += 1;
        }
        let mut ideal: Vec<Vec<u32>> = (0..d).map(|k| unit_vec(d, k)).collect();
        for i in 0..=levels {
            if ideal.is_empty() {
                break;
            }
            let g: Vec<u32> = ideal.iter().map(|u| self.trace_functional(u, i)).collect();
            let solver = Solver::new(&Matrix::from_columns(f, d, &ideal));
            let mut cond = Matrix::zeros(f, d, ideal.len());
            for (s, u) in ideal.iter().enumerate() {
                for t in 0..d {
                    let prod = self.mul(u, &unit_vec(d, t));
                    let coords = solver.solve(&prod).expect("ideal is closed under right multiplication");
                    let val = coords.iter().zip(&g).fold(0, |acc, (&c, &gv)| f.mul_add(acc, c, gv));
                    cond.set(t, s, val);
                }
            }
            ideal = cond
                .kernel()
                .columns()
                .into_iter()
                .map(|a| {
                    let mut v = vec![0; d];
                    for (s, &c) in a.iter().enumerate() {
                        if c != 0 {
                            for (x, &y) in v.iter_mut().zip(&ideal[s]) {
                                *x = f.mul_add(*x, c, y);
                            }
                        }
                    }
                    v
                })
                .collect();
        }
        ideal
    }

    /// A nontrivial idempotent, found from the factorization of characteristic polynomials of
    /// random elements and then of basis elements.
    pub fn split_idempotent<R: Rng>(&self, top_dim: usize, rng: &mut R) -> Result<Vec<u32>> {
        let p = self.field.modulus();
        let trials = self.dim + 8;
        let mut factor_degree = 1;
        for t in 0..trials + self.dim {
            let x: Vec<u32> = if t < trials {
                (0..self.dim).map(|_| rng.gen_range(0..p)).collect()
            } else {
                unit_vec(self.dim, t - trials)
            };
            let chi = self.left_matrix(&x).charpoly();
            let fact = chi.factor(rng);
            if fact.factors.len() < 2 {
                if let Some((g, _)) = fact.factors.first() {
                    factor_degree = factor_degree.max(g.degree().unwrap_or(0));
                }
                continue;
            }
            let (g, k) = &fact.factors[0];
            let mut gk = Poly::one(self.field);
            for _ in 0..*k {
                gk = gk.mul(g);
            }
            let h = chi.div_exact(&gk);
            let (_, _, v) = gk.ext_gcd(&h);
            let e = v.mul(&h).rem(&chi);
            return Ok(self.eval_poly(&e, &x));
        }
        Err(Error::SplitFailure { end_top_dim: top_dim, factor_degree })
    }
}

fn mat_pow_mod(m: &[u64], d: usize, mut e: u64, q: u64) -> Vec<u64> {
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; d * d];
        for i in 0..d {
            for k in 0..d {
                let x = a[i * d + k];
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] = (out[i * d + j] + x * b[k * d + j]) % q;
                }
            }
        }
        out
    };
    let mut result = vec![0u64; d * d];
    for k in 0..d {
        result[k * d + k] = 1 % q;
    }
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    result
}

fn unit_vec(len: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[k] = 1;
    v
}

/// `End_K(X)` of a minimal complex together with its image `B` under reduction of every
/// component modulo the radical. The kernel of `End_K(X) → B` consists of classes of maps
/// with radical components, a nilpotent ideal, so `rad End_K(X)` is the preimage of `rad B`
/// and idempotents of `B` lift.
pub(crate) struct EndRing {
    pub(crate) space: HomSpace,
    basis: Vec<ChainMap>,
    /// `(degree, positions)` of the summands at one vertex in one degree.
    blocks: Vec<(i32, Vec<usize>)>,
    /// Reduction of each basis map, flattened block by block.
    tops: Vec<Vec<u32>>,
    /// `B` with its natural block representation, in the basis `tops[image_basis]`.
    image: StructureTable,
    image_solver: Solver,
    image_radical: Vec<Vec<u32>>,
}

impl EndRing {
    pub(crate) fn new(x: &ProjComplex) -> Self {
        let alg = x.algebra().clone();
        let f = alg.field();
        let space = hom_space(x, x, 0);
        let basis = space.basis();
        let mut blocks = Vec::new();
        for deg in x.degrees() {
            let t = x.term(deg);
            for v in 0..alg.num_vertices() {
                let pos: Vec<usize> = (0..t.len()).filter(|&k| t[k] == v).collect();
                if !pos.is_empty() {
                    blocks.push((deg, pos));
                }
            }
        }
        let sizes: Vec<usize> = blocks.iter().map(|(_, pos)| pos.len()).collect();
        let top_len: usize = sizes.iter().map(|m| m * m).sum();
        let reduce = |g: &ChainMap| -> Vec<u32> {
            let mut out = Vec::with_capacity(top_len);
            for (deg, pos) in &blocks {
                let c = g.component(*deg);
                let v = x.term(*deg)[pos[0]];
                for &r in pos {
                    for &k in pos {
                        out.push(alg.top_coefficient(c.entry(r, k), v));
                    }
                }
            }
            out
        };
        let tops: Vec<Vec<u32>> = basis.iter().map(reduce).collect();
        let image_basis = independent_subset(f, top_len, &tops);
        let image_vecs: Vec<Vec<u32>> = image_basis.iter().map(|&k| tops[k].clone()).collect();
        let image_solver = Solver::new(&Matrix::from_columns(f, top_len, &image_vecs));
        let db = image_vecs.len();
        let mut table = Vec::with_capacity(db * db);
        for a in &image_vecs {
            for b in &image_vecs {
                table.push(image_solver.solve(&block_mul(f, &sizes, a, b)).expect("image is a subalgebra"));
            }
        }
        let unit = image_solver.solve(&reduce(&ChainMap::identity(x))).expect("identity lies in the image");
        let image = StructureTable::new(f, db, table, unit).with_representation(BlockRep::new(sizes, image_vecs));
        let image_radical = image.radical();
        EndRing { space, basis, blocks, tops, image, image_solver, image_radical }
    }

    pub(crate) fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `dim End/rad`
    pub(crate) fn top_dim(&self) -> usize {
        self.image.dim() - self.image_radical.len()
    }

    /// Coordinates of the identity.
    pub(crate) fn unit(&self) -> Vec<u32> {
        self.space.coordinates(&ChainMap::identity(self.space.source())).expect("identity is a chain map")
    }

    /// Basis of `rad End_K(X)` in Hom-space coordinates.
    pub(crate) fn radical(&self) -> Vec<Vec<u32>> {
        let f = self.image.field;
        let (d, db, r) = (self.dim(), self.image.dim(), self.image_radical.len());
        // solve Φ a = R c for (a, c)
        let mut cols: Vec<Vec<u32>> =
            self.tops.iter().map(|t| self.image_solver.solve(t).expect("top lies in the image")).collect();
        cols.extend(self.image_radical.iter().map(|v| v.iter().map(|&x| f.neg(x)).collect()));
        let kernel = Matrix::from_columns(f, db, &cols).kernel().columns();
        let pre: Vec<Vec<u32>> = kernel.into_iter().map(|v| v[..d].to_vec()).collect();
        let keep = independent_subset(f, d, &pre);
        debug_assert_eq!(keep.len(), d - (db - r));
        keep.into_iter().map(|k| pre[k].clone()).collect()
    }

    pub(crate) fn radical_maps(&self) -> Vec<ChainMap> {
        self.radical().iter().map(|v| self.space.element(v)).collect()
    }

    /// A chain map whose reduction is a nontrivial idempotent, from the factorization of the
    /// characteristic polynomial of the reduction of a random endomorphism, then of each
    /// basis map.
    fn split_idempotent<R: Rng>(&self, rng: &mut R) -> Result<ChainMap> {
        let f = self.image.field;
        let p = f.modulus();
        let d = self.dim();
        let trials = d + 8;
        let mut factor_degree = 1;
        for t in 0..trials + d {
            let coords: Vec<u32> =
                if t < trials { (0..d).map(|_| rng.gen_range(0..p)).collect() } else { unit_vec(d, t - trials) };
            let mut top = vec![0u32; self.tops.first().map_or(0, Vec::len)];
            for (c, v) in coords.iter().zip(&self.tops) {
                if *c != 0 {
                    for (x, &y) in top.iter_mut().zip(v) {
                        *x = f.mul_add(*x, *c, y);
                    }
                }
            }
            let mut chi = Poly::one(f);
            let mut o = 0;
            for (_, pos) in &self.blocks {
                let m = pos.len();
                chi = chi.mul(&Matrix::from_raw(f, m, m, top[o..o + m * m].to_vec()).charpoly());
                o += m * m;
            }
            let fact = chi.factor(rng);
            if fact.factors.len() < 2 {
                if let Some((g, _)) = fact.factors.first() {
                    factor_degree = factor_degree.max(g.degree().unwrap_or(0));
                }
                continue;
            }
            let (g, k) = &fact.factors[0];
            let mut gk = Poly::one(f);
            for _ in 0..*k {
                gk = gk.mul(g);
            }
            let h = chi.div_exact(&gk);
            let (_, _, v) = gk.ext_gcd(&h);
            let e = v.mul(&h).rem(&chi);
            let x = self.space.element(&coords);
            // Horner evaluation of e at x
            let mut acc = ChainMap::zero(x.source(), x.target(), 0);
            let id = ChainMap::identity(x.source());
            for &c in e.coeffs().iter().rev() {
                acc = compose(&x, &acc);
                acc.add_scaled(&id, c);
            }
            return Ok(acc);
        }
        Err(Error::SplitFailure { end_top_dim: self.top_dim(), factor_degree })
    }
}

/// An indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub complex: ProjComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
    /// Index of the isomorphism class within the decomposition.
    pub class: usize,
}

/// Decomposition of the minimal form of a complex into indecomposables.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// The minimized input; inclusions and projections refer to it.
    pub source: ProjComplex,
    pub summands: Vec<Summand>,
    /// Index of the first summand of each isomorphism class.
    pub class_representatives: Vec<usize>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.class_representatives.len()
    }

    pub fn is_basic(&self) -> bool {
        self.num_classes() == self.len()
    }

    /// One representative of each class with its multiplicity.
    pub fn multiplicities(&self) -> Vec<(ProjComplex, usize)> {
        self.class_representatives
            .iter()
            .enumerate()
            .map(|(c, &k)| (self.summands[k].complex.clone(), self.summands.iter().filter(|s| s.class == c).count()))
            .collect()
    }

    /// Direct sum of one copy of each indecomposable summand.
    pub fn basic_complex(&self) -> ProjComplex {
        let reps: Vec<&ProjComplex> = self.class_representatives.iter().map(|&k| &self.summands[k].complex).collect();
        if reps.is_empty() {
            return ProjComplex::zero(self.source.algebra().clone());
        }
        ProjComplex::direct_sum(&reps).expect("summands share the algebra")
    }
}

/// The summand cut out by an idempotent chain map `e` of `x`, with inclusion and projection.
fn split_off(x: &ProjComplex, e: &ChainMap) -> (ProjComplex, Vec<ElemMatrix>, Vec<ElemMatrix>) {
    let alg = x.algebra().clone();
    let mut terms = Vec::new();
    let mut incs = Vec::new();
    let mut projs = Vec::new();
    for deg in x.degrees() {
        let t = x.term(deg);
        let ei = e.component(deg);
        let top = ei.top(&alg, t, t);
        let s_idx = top.rank_profile().pivots;
        let all: Vec<usize> = (0..t.len()).collect();
        let cols = ei.select(&all, &s_idx);
        let r_idx = top.transpose().rank_profile().pivots;
        let verts_s: Vec<usize> = s_idx.iter().map(|&k| t[k]).collect();
        let proj = if s_idx.is_empty() {
            ElemMatrix::zeros(0, t.len(), alg.dim())
        } else {
            let verts_r: Vec<usize> = r_idx.iter().map(|&k| t[k]).collect();
            let g = ei.select(&r_idx, &s_idx);
            let g_inv = g.inverse(&alg, &verts_r, &verts_s).expect("idempotent restricts to an isomorphism");
            g_inv.mul(&alg, &ei.select(&r_idx, &all))
        };
        terms.push(verts_s);
        incs.push(cols);
        projs.push(proj);
    }
    let mut diffs = Vec::new();
    for (k, deg) in (x.lo()..x.hi()).enumerate() {
        let d = x.diff_or_zero(deg);
        diffs.push(projs[k + 1].mul(&alg, &d).mul(&alg, &incs[k]));
    }
    let piece = ProjComplex::new(alg, x.lo(), terms, diffs).expect("summand of a complex is a complex");
    (piece, incs, projs)
}

fn maps_for(
    x: &ProjComplex,
    piece: &ProjComplex,
    incs: Vec<ElemMatrix>,
    projs: Vec<ElemMatrix>,
) -> (ChainMap, ChainMap) {
    let inc: Vec<ElemMatrix> = piece.degrees().map(|deg| incs[(deg - x.lo()) as usize].clone()).collect();
    let inclusion = ChainMap::new(piece, x, 0, inc).expect("inclusion of a summand");
    let projection = ChainMap::new(x, piece, 0, projs).expect("projection onto a summand");
    (inclusion, projection)
}

/// Refines `e` with `e ← 3e² − 2e³` until it is idempotent on the chain level.
fn lift_idempotent(e: ChainMap) -> Result<ChainMap> {
    let f = e.source().algebra().field();
    let mut e = e;
    for _ in 0..64 {
        let e2 = compose(&e, &e);
        if e2.components() == e.components() {
            return Ok(e);
        }
        let e3 = compose(&e2, &e);
        let mut next = e2.scaled(f.from_i64(3));
        next.add_scaled(&e3, f.from_i64(-2));
        e = next;
    }
    Err(Error::Inconclusive("idempotent lifting did not converge".into()))
}

fn split_minimal<R: Rng>(x: &ProjComplex, rng: &mut R) -> Result<Vec<(ProjComplex, ChainMap, ChainMap)>> {
    let alg = x.algebra().clone();
    if x.is_zero() {
        return Ok(Vec::new());
    }
    if x.terms().len() == 1 || x.total_rank() == 1 {
        let deg = x.lo();
        let t = x.term(deg);
        if t.len() == 1 {
            return Ok(vec![(x.clone(), ChainMap::identity(x), ChainMap::identity(x))]);
        }
        if x.terms().len() == 1 {
            return Ok(t
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    let piece = ProjComplex::stalk(alg.clone(), deg, vec![v]);
                    let mut inc = ElemMatrix::zeros(t.len(), 1, alg.dim());
                    inc.entry_mut(k, 0)[alg.idempotent(v)] = 1;
                    let mut proj = ElemMatrix::zeros(1, t.len(), alg.dim());
                    proj.entry_mut(0, k)[alg.idempotent(v)] = 1;
                    (
                        piece.clone(),
                        ChainMap::new(&piece, x, 0, vec![inc]).expect("stalk inclusion"),
                        ChainMap::new(x, &piece, 0, vec![proj]).expect("stalk projection"),
                    )
                })
                .collect());
        }
    }
    let ring = EndRing::new(x);
    if ring.top_dim() == 1 {
        return Ok(vec![(x.clone(), ChainMap::identity(x), ChainMap::identity(x))]);
    }
    let e = lift_idempotent(ring.split_idempotent(rng)?)?;
    let mut comp = ChainMap::identity(x);
    comp.add_scaled(&e, alg.field().neg(1));
    let mut out = Vec::new();
    for idem in [e, comp] {
        let (piece, incs, projs) = split_off(x, &idem);
        let (inc, proj) = maps_for(x, &piece, incs, projs);
        for (sub, si, sp) in split_minimal(&piece, rng)? {
            out.push((sub, compose(&si, &inc), compose(&proj, &sp)));
        }
    }
    Ok(out)
}

/// Whether two indecomposable minimal complexes are isomorphic: some composite
/// `X → Y → X` of basis maps must be invertible.
fn indecomposables_isomorphic(x: &ProjComplex, y: &ProjComplex) -> bool {
    if x.term_profile() != y.term_profile() {
        return false;
    }
    if x == y {
        return true;
    }
    let hxy = hom_space(x, y, 0);
    if hxy.dim() == 0 {
        return false;
    }
    let hyx = hom_space(y, x, 0);
    let (bxy, byx) = (hxy.basis(), hyx.basis());
    bxy.iter()
        .any(|f| f.is_invertible_componentwise() || byx.iter().any(|g| compose(f, g).is_invertible_componentwise()))
}

/// Splits `minimize(x)` into indecomposable summands and groups them into isomorphism classes.
pub fn decompose(x: &ProjComplex) -> Result<Decomposition> {
    let source = minimize(x);
    let mut rng = rng_for(source.algebra().seed(), "decompose");
    let parts = split_minimal(&source, &mut rng)?;
    let mut summands: Vec<Summand> = Vec::new();
    let mut class_representatives: Vec<usize> = Vec::new();
    for (complex, inclusion, projection) in parts {
        let class = class_representatives
            .iter()
            .position(|&k| indecomposables_isomorphic(&summands[k].complex, &complex))
            .unwrap_or_else(|| {
                class_representatives.push(summands.len());
                class_representatives.len() - 1
            });
        summands.push(Summand { complex, inclusion, projection, class });
    }
    Ok(Decomposition { source, summands, class_representatives })
}

/// One copy of each indecomposable summand of `x`.
pub fn basic_form(x: &ProjComplex) -> Result<ProjComplex> {
    Ok(decompose(x)?.basic_complex())
}

/// Whether `x ≅ y` in the homotopy category.
pub fn iso_in_homotopy(x: &ProjComplex, y: &ProjComplex) -> Result<bool> {
    let (x, y) = (minimize(x), minimize(y));
    if x.term_profile() != y.term_profile() {
        return Ok(false);
    }
    if x.is_zero() || x == y {
        return Ok(true);
    }
    let h = hom_space(&x, &y, 0);
    if h.dim() == 0 {
        return Ok(false);
    }
    let mut rng = rng_for(x.algebra().seed(), "iso");
    for _ in 0..8 {
        if h.random_element(&mut rng).1.is_invertible_componentwise() {
            return Ok(true);
        }
    }
    let (dx, dy) = (decompose(&x)?, decompose(&y)?);
    let (mx, mut my) = (dx.multiplicities(), dy.multiplicities());
    if mx.len() != my.len() {
        return Ok(false);
    }
    for (a, k) in mx {
        match my.iter().position(|(b, l)| *l == k && indecomposables_isomorphic(&a, b)) {
            Some(pos) => {
                my.swap_remove(pos);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// `End_K(T)` for a basic complex `T = ⊕ T_i`, presented with one vertex per indecomposable
/// summand: the corner `(i, j)` is `Hom(T_j, T_i)` and each diagonal corner has the basis
/// `id, rad End(T_i)`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Algebra,
    pub summands: Vec<ProjComplex>,
    reps: Vec<ChainMap>,
}

impl EndAlgebra {
    /// Representative of basis element `b`, a map between two summands.
    pub fn rep(&self, b: usize) -> &ChainMap {
        &self.reps[b]
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

pub fn end_algebra(t: &ProjComplex) -> Result<EndAlgebra> {
    let dec = decompose(t)?;
    if dec.is_empty() {
        return Err(Error::InvalidInput("endomorphism algebra of the zero complex".into()));
    }
    if !dec.is_basic() {
        return Err(Error::InvalidInput("endomorphism algebras are built for basic complexes".into()));
    }
    let pieces: Vec<ProjComplex> = dec.summands.iter().map(|s| s.complex.clone()).collect();
    end_algebra_of_summands(&pieces)
}

/// `End(⊕ pieces)` for pairwise non-isomorphic indecomposable minimal complexes.
pub fn end_algebra_of_summands(pieces: &[ProjComplex]) -> Result<EndAlgebra> {
    let n = pieces.len();
    let Some(first) = pieces.first() else {
        return Err(Error::InvalidInput("no summands".into()));
    };
    let field = first.algebra().field();
    let mut reps: Vec<ChainMap> = pieces.iter().map(ChainMap::identity).collect();
    let mut labels: Vec<String> = (0..n).map(|i| format!("id{}", i + 1)).collect();
    let mut corners_of: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    let mut spaces: Vec<(HomSpace, Solver)> = Vec::with_capacity(n * n);
    let mut index: Vec<Vec<usize>> = Vec::with_capacity(n * n);
    let mut corner_reps: Vec<Vec<ChainMap>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (space, basis_coords) = if i == j {
                let ring = EndRing::new(&pieces[i]);
                if ring.top_dim() != 1 {
                    return Err(Error::InvalidInput(format!("summand {} is not indecomposable", i + 1)));
                }
                let mut coords = vec![ring.unit()];
                coords.extend(ring.radical());
                (ring.space, coords)
            } else {
                let space = hom_space(&pieces[j], &pieces[i], 0);
                let coords = (0..space.dim()).map(|k| unit_vec(space.dim(), k)).collect();
                (space, coords)
            };
            let mut idx = Vec::new();
            let mut maps = Vec::new();
            for (k, co) in basis_coords.iter().enumerate() {
                if i == j && k == 0 {
                    idx.push(i);
                    maps.push(ChainMap::identity(&pieces[i]));
                    continue;
                }
                let m = space.element(co);
                idx.push(reps.len());
                labels.push(format!("f{}{}_{}", i + 1, j + 1, k));
                corners_of.push((i, j));
                reps.push(m.clone());
                maps.push(m);
            }
            let solver = Solver::new(&Matrix::from_columns(field, space.dim(), &basis_coords));
            spaces.push((space, solver));
            index.push(idx);
            corner_reps.push(maps);
        }
    }
    let dim = reps.len();
    let mut mult = vec![Vec::new(); dim * dim];
    for i in 0..n {
        for j in 0..n {
            for (a_pos, a) in corner_reps[i * n + j].iter().enumerate() {
                let ga = index[i * n + j][a_pos];
                for k in 0..n {
                    let (space, solver) = &spaces[i * n + k];
                    for (b_pos, b) in corner_reps[j * n + k].iter().enumerate() {
                        let gb = index[j * n + k][b_pos];
                        let cls = space.coordinates(&compose(b, a)).expect("composite is a chain map");
                        let local = solver.solve(&cls).expect("corner basis spans the Hom-space");
                        mult[ga * dim + gb] = local
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(pos, &c)| (index[i * n + k][pos] as u32, c))
                            .collect();
                    }
                }
            }
        }
    }
    let algebra = Algebra::from_parts(AlgebraParts {
        field,
        num_vertices: n,
        labels,
        corners: corners_of,
        idempotents: (0..n).collect(),
        mult,
        grading: None,
        generators: Vec::new(),
        quiver: None,
        paths: None,
    })?
    .with_seed(first.algebra().seed());
    Ok(EndAlgebra { algebra, summands: pieces.to_vec(), reps })
}

/// Dimensions of `End/rad` and `rad` for the endomorphism ring of a complex.
pub fn end_radical_dims(x: &ProjComplex) -> (usize, usize) {
    let ring = EndRing::new(&minimize(x));
    (ring.top_dim(), ring.dim() - ring.top_dim())
}

/// Basis of the Jacobson radical of an algebra.
pub fn algebra_radical(alg: &Algebra) -> Vec<Vec<u32>> {
    StructureTable::from_algebra(alg).radical()
}

#[cfg(test)]
mod tests;
