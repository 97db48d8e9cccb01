//! Basic split finite-dimensional algebras given by structure constants.
//!
//! Every basis element lies in a single corner `e_i A e_j`; the first basis elements
//! include the primitive idempotents and all remaining basis elements span the radical.
//! Products follow the left-to-right path convention: for paths `p`, `q` the product
//! `pq` means "p then q", so `e_i A` is spanned by paths starting at `i`.

mod automorphism;
mod frobenius;
mod quiver;
mod trivial_extension;

use std::fmt;

pub use automorphism::AlgebraAutomorphism;
pub use frobenius::{frobenius_form, self_injectivity_report};
pub use frobenius::{FrobeniusForm, SelfInjectivityReport};
pub use quiver::{path_algebra, Arrow, Presentation, Quiver, Relation};
pub use trivial_extension::twisted_trivial_extension;
pub use trivial_extension::{AlgebraEmbedding, TrivialExtension};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField, Solver};

/// Sparse product of two basis elements: `(basis index, coefficient)` pairs.
pub type SparseVec = Vec<(u32, u32)>;

/// An element of an algebra as a coefficient vector over its basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement(pub Vec<u32>);

impl AlgebraElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Raw ingredients for [`Algebra::from_parts`].
#[derive(Clone, Debug)]
pub struct AlgebraParts {
    pub field: PrimeField,
    pub num_vertices: usize,
    pub labels: Vec<String>,
    pub corners: Vec<(usize, usize)>,
    pub idempotents: Vec<usize>,
    pub mult: Vec<SparseVec>,
    pub grading: Option<Vec<usize>>,
    pub generators: Vec<(String, Vec<u32>)>,
    pub quiver: Option<Quiver>,
    pub paths: Option<Vec<Vec<usize>>>,
}

#[derive(Clone)]
pub struct Algebra {
    field: PrimeField,
    num_vertices: usize,
    labels: Vec<String>,
    corners: Vec<(usize, usize)>,
    idempotents: Vec<usize>,
    is_idempotent: Vec<bool>,
    mult: Vec<SparseVec>,
    grading: Option<Vec<usize>>,
    generators: Vec<(String, Vec<u32>)>,
    quiver: Option<Quiver>,
    paths: Option<Vec<Vec<usize>>>,
    corner_basis: Vec<Vec<usize>>,
    corner_pos: Vec<usize>,
    seed: u64,
}

/// Exhaustive associativity validation is used up to this dimension; above it a
/// deterministic sample of triples is checked.
const EXHAUSTIVE_ASSOCIATIVITY_DIM: usize = 300;

impl Algebra {
    pub fn from_parts(parts: AlgebraParts) -> Result<Self> {
        let d = parts.labels.len();
        let n = parts.num_vertices;
        if parts.corners.len() != d || parts.mult.len() != d * d || parts.idempotents.len() != n {
            return Err(Error::InvalidAlgebra("inconsistent table sizes".into()));
        }
        let mut is_idempotent = vec![false; d];
        for &e in &parts.idempotents {
            if e >= d || is_idempotent[e] {
                return Err(Error::InvalidAlgebra("bad idempotent index".into()));
            }
            is_idempotent[e] = true;
        }
        let mut corner_basis = vec![Vec::new(); n * n];
        let mut corner_pos = vec![0; d];
        for (b, &(i, j)) in parts.corners.iter().enumerate() {
            if i >= n || j >= n {
                return Err(Error::InvalidAlgebra(format!("basis element {b} has corner out of range")));
            }
            corner_pos[b] = corner_basis[i * n + j].len();
            corner_basis[i * n + j].push(b);
        }
        let alg = Algebra {
            field: parts.field,
            num_vertices: n,
            labels: parts.labels,
            corners: parts.corners,
            idempotents: parts.idempotents,
            is_idempotent,
            mult: parts.mult,
            grading: parts.grading,
            generators: parts.generators,
            quiver: parts.quiver,
            paths: parts.paths,
            corner_basis,
            corner_pos,
            seed: 0,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field;
        for (v, &e) in self.idempotents.iter().enumerate() {
            if self.corners[e] != (v, v) {
                return Err(Error::InvalidAlgebra(format!("idempotent e_{} not in its diagonal corner", v + 1)));
            }
        }
        // corner homogeneity encodes e_i e_j = delta e_i and sum e_i = 1
        for a in 0..d {
            for b in 0..d {
                let prod = &self.mult[a * d + b];
                let (ai, aj) = self.corners[a];
                let (bi, bj) = self.corners[b];
                for &(c, coeff) in prod {
                    if coeff != 0 && (aj != bi || self.corners[c as usize] != (ai, bj)) {
                        return Err(Error::InvalidAlgebra(format!(
                            "product {}*{} leaves its corner",
                            self.labels[a], self.labels[b]
                        )));
                    }
                }
            }
        }
        for (v, &e) in self.idempotents.iter().enumerate() {
            for b in 0..d {
                let (bi, bj) = self.corners[b];
                let left = self.mul_basis_dense(e, b);
                let right = self.mul_basis_dense(b, e);
                let expect_l = if bi == v { self.basis_vec(b) } else { vec![0; d] };
                let expect_r = if bj == v { self.basis_vec(b) } else { vec![0; d] };
                if left != expect_l || right != expect_r {
                    return Err(Error::InvalidAlgebra(format!(
                        "idempotent e_{} does not act as a corner projection on {}",
                        v + 1,
                        self.labels[b]
                    )));
                }
            }
        }
        self.check_associativity()?;
        // radical: non-idempotent basis elements form a nilpotent ideal
        let rad: Vec<usize> = self.radical_basis().collect();
        for &r in &rad {
            for b in 0..d {
                for prod in [&self.mult[r * d + b], &self.mult[b * d + r]] {
                    if prod.iter().any(|&(c, v)| v != 0 && self.is_idempotent[c as usize]) {
                        return Err(Error::InvalidAlgebra("radical basis does not span an ideal".into()));
                    }
                }
            }
        }
        let mut layer: Vec<Vec<u32>> = rad.iter().map(|&r| self.basis_vec(r)).collect();
        let mut steps = 0;
        while !layer.is_empty() {
            steps += 1;
            if steps > d + 1 {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            let mut next = Vec::new();
            for v in &layer {
                for &r in &rad {
                    let p = self.mul_by_basis_right(v, r);
                    if p.iter().any(|&c| c != 0) {
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            let m = Matrix::from_columns(f, d, &next);
            let piv = m.rref().1;
            layer = piv.into_iter().map(|i| next[i].clone()).collect();
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        let d = self.dim();
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let ab = self.mul_basis_dense(a, b);
            let left = self.mul_by_basis_right(&ab, c);
            let bc = self.mul_basis_dense(b, c);
            let right = self.mul_by_basis_left(a, &bc);
            if left != right {
                return Err(Error::InvalidAlgebra(format!(
                    "associativity fails on ({}, {}, {})",
                    self.labels[a], self.labels[b], self.labels[c]
                )));
            }
            Ok(())
        };
        if d <= EXHAUSTIVE_ASSOCIATIVITY_DIM {
            for a in 0..d {
                for b in 0..d {
                    if self.corners[a].1 != self.corners[b].0 {
                        continue;
                    }
                    for c in 0..d {
                        if self.corners[b].1 == self.corners[c].0 {
                            check(a, b, c)?;
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9E37_79B9_7F4A_7C15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % d as u64) as usize
            };
            for _ in 0..200_000 {
                let (a, b, c) = (next(), next(), next());
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }
    #[inline]
    pub fn corner(&self, b: usize) -> (usize, usize) {
        self.corners[b]
    }
    pub fn corners(&self) -> &[(usize, usize)] {
        &self.corners
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn is_idempotent_basis(&self, b: usize) -> bool {
        self.is_idempotent[b]
    }
    pub fn grading(&self) -> Option<&[usize]> {
        self.grading.as_deref()
    }
    pub fn quiver(&self) -> Option<&Quiver> {
        self.quiver.as_ref()
    }
    pub fn basis_paths(&self) -> Option<&[Vec<usize>]> {
        self.paths.as_deref()
    }
    pub fn generators(&self) -> &[(String, Vec<u32>)] {
        &self.generators
    }
    pub fn generator(&self, name: &str) -> Option<&[u32]> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }
    pub(crate) fn add_generator(&mut self, name: &str, value: Vec<u32>) {
        self.generators.retain(|(n, _)| n != name);
        self.generators.push((name.to_string(), value));
    }
    pub fn radical_basis(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&b| !self.is_idempotent[b])
    }

    /// Basis indices spanning `e_i A e_j`.
    #[inline]
    pub fn corner_basis(&self, i: usize, j: usize) -> &[usize] {
        &self.corner_basis[i * self.num_vertices + j]
    }

    /// Position of basis element `b` inside its corner basis.
    #[inline]
    pub fn corner_position(&self, b: usize) -> usize {
        self.corner_pos[b]
    }

    /// Basis of the right projective `e_i A`.
    pub fn projective_basis(&self, i: usize) -> Vec<usize> {
        (0..self.num_vertices).flat_map(|j| self.corner_basis(i, j).iter().copied()).collect()
    }

    #[inline]
    pub fn mul_basis(&self, a: usize, b: usize) -> &[(u32, u32)] {
        &self.mult[a * self.dim() + b]
    }

    pub fn basis_vec(&self, b: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[b] = 1;
        v
    }

    pub fn element(&self, b: usize) -> AlgebraElement {
        AlgebraElement(self.basis_vec(b))
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }

    pub fn unit(&self) -> Vec<u32> {
        let mut v = self.zero();
        for &e in &self.idempotents {
            v[e] = 1;
        }
        v
    }

    fn mul_basis_dense(&self, a: usize, b: usize) -> Vec<u32> {
        let mut v = self.zero();
        for &(c, x) in self.mul_basis(a, b) {
            v[c as usize] = x;
        }
        v
    }

    fn mul_by_basis_right(&self, v: &[u32], b: usize) -> Vec<u32> {
        let mut out = self.zero();
        let f = self.field;
        for (a, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(c, y) in self.mul_basis(a, b) {
                out[c as usize] = f.mul_add(out[c as usize], x, y);
            }
        }
        out
    }

    fn mul_by_basis_left(&self, a: usize, v: &[u32]) -> Vec<u32> {
        let mut out = self.zero();
        let f = self.field;
        for (b, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(c, y) in self.mul_basis(a, b) {
                out[c as usize] = f.mul_add(out[c as usize], x, y);
            }
        }
        out
    }

    /// `acc += coeff * a * b`
    pub fn mul_acc(&self, acc: &mut [u32], a: &[u32], b: &[u32], coeff: u32) {
        let f = self.field;
        let d = self.dim();
        let nb: Vec<(usize, u32)> = b.iter().enumerate().filter(|(_, &y)| y != 0).map(|(i, &y)| (i, y)).collect();
        if nb.is_empty() {
            return;
        }
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let xc = f.mul(x, coeff);
            let row = &self.mult[i * d..(i + 1) * d];
            for &(j, y) in &nb {
                let s = f.mul(xc, y);
                for &(c, z) in &row[j] {
                    acc[c as usize] = f.mul_add(acc[c as usize], s, z);
                }
            }
        }
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = self.zero();
        self.mul_acc(&mut out, a, b, 1);
        out
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(self.mul(&a.0, &b.0))
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn scale(&self, a: &[u32], c: u32) -> Vec<u32> {
        let f = self.field;
        a.iter().map(|&x| f.mul(x, c)).collect()
    }

    /// Matrix of left multiplication `x -> a x` on the basis (columns are images).
    pub fn left_mult_matrix(&self, a: &[u32]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<u32>> = (0..d).map(|b| self.mul(a, &self.basis_vec(b))).collect();
        Matrix::from_columns(self.field, d, &cols)
    }

    /// Matrix of right multiplication `x -> x a`.
    pub fn right_mult_matrix(&self, a: &[u32]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<u32>> = (0..d).map(|b| self.mul(&self.basis_vec(b), a)).collect();
        Matrix::from_columns(self.field, d, &cols)
    }

    /// Scalar coefficient of `e_v` in an element of `e_v A e_v`.
    #[inline]
    pub fn top_coefficient(&self, a: &[u32], v: usize) -> u32 {
        a[self.idempotents[v]]
    }

    /// Whether `a` lies in the radical (no idempotent components).
    pub fn in_radical(&self, a: &[u32]) -> bool {
        self.idempotents.iter().all(|&e| a[e] == 0)
    }

    /// Inverse of `a = c e_v + r` in the local ring `e_v A e_v`, `c != 0`.
    pub fn corner_inverse(&self, a: &[u32], v: usize) -> Option<Vec<u32>> {
        let f = self.field;
        let c = a[self.idempotents[v]];
        if c == 0 {
            return None;
        }
        let ci = f.inv(c);
        // a = c (e - n) with n = -(a/c - e); a^-1 = c^-1 (e + n + n^2 + ...)
        let mut n = self.scale(a, f.neg(ci));
        n[self.idempotents[v]] = 0;
        let mut e = self.zero();
        e[self.idempotents[v]] = 1;
        let mut sum = e.clone();
        let mut power = e;
        for _ in 0..=self.dim() {
            power = self.mul(&power, &n);
            if power.iter().all(|&x| x == 0) {
                break;
            }
            sum = self.add(&sum, &power);
        }
        Some(self.scale(&sum, ci))
    }

    /// Loewy length: least `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        let d = self.dim();
        let rad: Vec<usize> = self.radical_basis().collect();
        let mut layer: Vec<Vec<u32>> = rad.iter().map(|&r| self.basis_vec(r)).collect();
        let mut len = 1;
        while !layer.is_empty() {
            len += 1;
            let mut next = Vec::new();
            for v in &layer {
                for &r in &rad {
                    let p = self.mul_by_basis_right(v, r);
                    if p.iter().any(|&c| c != 0) {
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            let piv = Matrix::from_columns(self.field, d, &next).rref().1;
            layer = piv.into_iter().map(|i| next[i].clone()).collect();
        }
        len
    }

    /// Basis of `e_i A e_j` as basis indices.
    pub fn corner_dim(&self, i: usize, j: usize) -> usize {
        self.corner_basis(i, j).len()
    }

    /// Matrix with entry `(i, j) = dim Hom(P_i, P_j) = dim e_j A e_i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices;
        (0..n).map(|i| (0..n).map(|j| self.corner_dim(j, i) as i64).collect()).collect()
    }

    /// Express a vector as a combination of given basis-vector columns.
    pub fn coordinates_in(&self, span: &[Vec<u32>], v: &[u32]) -> Option<Vec<u32>> {
        let m = Matrix::from_columns(self.field, self.dim(), span);
        Solver::new(&m).solve(v)
    }

    pub fn format_element(&self, a: &[u32]) -> String {
        let f = self.field;
        let mut parts = Vec::new();
        for (b, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let s = f.to_signed(c);
            let label = &self.labels[b];
            parts.push(match s {
                1 => format!("+ {label}"),
                -1 => format!("- {label}"),
                s if s < 0 => format!("- {}*{label}", -s),
                s => format!("+ {s}*{label}"),
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        let joined = parts.join(" ");
        joined.strip_prefix("+ ").map(str::to_string).unwrap_or(joined)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {} vertices, GF({}))", self.dim(), self.num_vertices, self.field.modulus())
    }
}
