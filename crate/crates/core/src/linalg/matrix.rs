use std::fmt;

use super::field::PrimeField;
use super::poly::Poly;

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rank_profile`]. Bases are stored as matrix columns.
#[derive(Clone, Debug)]
pub struct RankProfile {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Matrix,
    pub image: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Solved { particular: Vec<u32>, kernel: Matrix },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.modulus();
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = field.from_i64(v);
            }
        }
        m
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn from_raw(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u32;
                for (j, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = f.mul_add(acc, self.data[i * self.cols + j], x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    /// Columns at index `>= limit` are carried along but never chosen as pivots.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit.min(cols) {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            let pivot_row: Vec<u32> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                let row = &mut self.data[i * cols + c..(i + 1) * cols];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    if pv != 0 {
                        *x = f.mul_add(*x, neg, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(m.cols);
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_profile(&self) -> RankProfile {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = self.field;
        let mut kernel = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            kernel.set(fc, k, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                kernel.set(pc, k, f.neg(r.get(row, fc)));
            }
        }
        let mut image = Matrix::zeros(f, self.rows, rank);
        for (k, &pc) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                image.set(i, k, self.get(i, pc));
            }
        }
        RankProfile { rank, pivots, kernel, image }
    }

    pub fn kernel(&self) -> Matrix {
        self.rank_profile().kernel
    }

    pub fn solve(&self, b: &[u32]) -> Solution {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.data[i * (self.cols + 1)..i * (self.cols + 1) + self.cols].copy_from_slice(self.row(i));
            aug.data[i * (self.cols + 1) + self.cols] = b[i];
        }
        let pivots = aug.rref_in_place(self.cols);
        let rank = pivots.len();
        if (rank..self.rows).any(|i| aug.get(i, self.cols) != 0) {
            return Solution::Inconsistent;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols);
        }
        Solution::Solved { particular: x, kernel: self.kernel() }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            aug.data[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug.data[i * 2 * n + n + i] = 1 % self.field.modulus();
        }
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            inv.data[i * n..(i + 1) * n].copy_from_slice(&aug.data[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Some(inv)
    }

    /// Characteristic polynomial det(xI - M) via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for j in 0..n {
                    h.data.swap(j * n + i, j * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1));
            for j in m + 1..n {
                let u = f.mul(h.get(j, m - 1), inv);
                if u == 0 {
                    continue;
                }
                for k in 0..n {
                    let v = f.sub(h.get(j, k), f.mul(u, h.get(m, k)));
                    h.set(j, k, v);
                }
                for k in 0..n {
                    let v = f.add(h.get(k, m), f.mul(u, h.get(k, j)));
                    h.set(k, m, v);
                }
            }
        }
        // p_k = characteristic polynomial of the leading k x k block
        let mut ps: Vec<Poly> = vec![Poly::one(f)];
        for m in 0..n {
            let x_minus = Poly::new(f, vec![f.neg(h.get(m, m)), 1]);
            let mut pm = x_minus.mul(&ps[m]);
            let mut t = 1u32;
            for i in (0..m).rev() {
                t = f.mul(t, h.get(i + 1, i));
                let c = f.mul(h.get(i, m), t);
                if c != 0 {
                    pm = pm.sub(&ps[i].scale(c));
                }
            }
            ps.push(pm);
        }
        ps.pop().unwrap()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.modulus())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Repeated solves against a fixed coefficient matrix.
#[derive(Clone, Debug)]
pub struct Solver {
    field: PrimeField,
    cols: usize,
    rank: usize,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl Solver {
    pub fn new(m: &Matrix) -> Self {
        let f = m.field;
        let n = m.rows;
        let mut aug = Matrix::zeros(f, n, m.cols + n);
        let w = m.cols + n;
        for i in 0..n {
            aug.data[i * w..i * w + m.cols].copy_from_slice(m.row(i));
            aug.data[i * w + m.cols + i] = 1 % f.modulus();
        }
        let pivots = aug.rref_in_place(m.cols);
        let mut transform = Matrix::zeros(f, n, n);
        for i in 0..n {
            transform.data[i * n..(i + 1) * n].copy_from_slice(&aug.data[i * w + m.cols..(i + 1) * w]);
        }
        Solver { field: f, cols: m.cols, rank: pivots.len(), pivots, transform }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// A solution of `M x = b` with all free variables zero.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let c = self.transform.mul_vec(b);
        if c[self.rank..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in self.pivots.iter().enumerate() {
            x[pc] = c[row];
        }
        let _ = self.field;
        Some(x)
    }

    pub fn contains(&self, b: &[u32]) -> bool {
        let c = self.transform.mul_vec(b);
        c[self.rank..].iter().all(|&v| v == 0)
    }
}

/// Indices of a maximal linearly independent subset of `vectors`, chosen greedily in order.
pub fn independent_subset(field: PrimeField, len: usize, vectors: &[Vec<u32>]) -> Vec<usize> {
    let m = Matrix::from_columns(field, len, vectors);
    m.rref().1
}

/// Greedy extension: indices of `candidates` that extend `base` to a basis of the joint span.
pub fn complement_indices(field: PrimeField, len: usize, base: &[Vec<u32>], candidates: &[Vec<u32>]) -> Vec<usize> {
    let mut all: Vec<Vec<u32>> = base.to_vec();
    all.extend(candidates.iter().cloned());
    let piv = Matrix::from_columns(field, len, &all).rref().1;
    piv.into_iter().filter(|&c| c >= base.len()).map(|c| c - base.len()).collect()
}
