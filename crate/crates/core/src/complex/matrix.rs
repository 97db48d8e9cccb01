use crate::algebra::Algebra;
use crate::linalg::Matrix;

/// A matrix whose entries are algebra elements, stored densely.
///
/// As a map between sums of indecomposable projectives, rows index target summands and
/// columns index source summands; entry `(r, c)` acts by left multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemMatrix {
    rows: usize,
    cols: usize,
    dim: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for ElemMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ElemMatrix({}x{})", self.rows, self.cols)
    }
}

impl ElemMatrix {
    pub fn zeros(rows: usize, cols: usize, dim: usize) -> Self {
        ElemMatrix { rows, cols, dim, data: vec![0; rows * cols * dim] }
    }

    /// Diagonal matrix of the idempotents `e_v`.
    pub fn identity(alg: &Algebra, vertices: &[usize]) -> Self {
        let mut m = ElemMatrix::zeros(vertices.len(), vertices.len(), alg.dim());
        for (i, &v) in vertices.iter().enumerate() {
            m.entry_mut(i, i)[alg.idempotent(v)] = 1;
        }
        m
    }

    /// Scalar matrix `s` placed on idempotents, for summands with equal vertices.
    pub fn from_scalars(alg: &Algebra, s: &Matrix, row_vertices: &[usize], col_vertices: &[usize]) -> Self {
        let mut m = ElemMatrix::zeros(s.rows(), s.cols(), alg.dim());
        for r in 0..s.rows() {
            for c in 0..s.cols() {
                let x = s.get(r, c);
                if x != 0 {
                    assert_eq!(row_vertices[r], col_vertices[c], "scalar entry between different vertices");
                    m.entry_mut(r, c)[alg.idempotent(row_vertices[r])] = x;
                }
            }
        }
        m
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
    pub fn entry(&self, r: usize, c: usize) -> &[u32] {
        let o = (r * self.cols + c) * self.dim;
        &self.data[o..o + self.dim]
    }

    #[inline]
    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut [u32] {
        let o = (r * self.cols + c) * self.dim;
        &mut self.data[o..o + self.dim]
    }

    pub fn set(&mut self, r: usize, c: usize, v: &[u32]) {
        self.entry_mut(r, c).copy_from_slice(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_entry_zero(&self, r: usize, c: usize) -> bool {
        self.entry(r, c).iter().all(|&x| x == 0)
    }

    /// `self · other`, multiplying entries in that order.
    pub fn mul(&self, alg: &Algebra, other: &ElemMatrix) -> ElemMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = ElemMatrix::zeros(self.rows, other.cols, self.dim);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.iter().all(|&x| x == 0) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.entry(k, c);
                    if b.iter().all(|&x| x == 0) {
                        continue;
                    }
                    alg.mul_acc(out.entry_mut(r, c), a, b, 1);
                }
            }
        }
        out
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, alg: &Algebra, other: &ElemMatrix, c: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = alg.field();
        for (x, &y) in self.data.iter_mut().zip(&other.data) {
            if y != 0 {
                *x = f.mul_add(*x, c, y);
            }
        }
    }

    pub fn scaled(&self, alg: &Algebra, c: u32) -> ElemMatrix {
        let f = alg.field();
        ElemMatrix { data: self.data.iter().map(|&x| f.mul(x, c)).collect(), ..self.clone() }
    }

    pub fn neg(&self, alg: &Algebra) -> ElemMatrix {
        let f = alg.field();
        ElemMatrix { data: self.data.iter().map(|&x| f.neg(x)).collect(), ..self.clone() }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ElemMatrix {
        let mut out = ElemMatrix::zeros(rows.len(), cols.len(), self.dim);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.entry(r, c));
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn blocks(a: &ElemMatrix, b: &ElemMatrix, c: &ElemMatrix, d: &ElemMatrix) -> ElemMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let dim = a.dim.max(b.dim).max(c.dim).max(d.dim);
        let mut out = ElemMatrix::zeros(a.rows + c.rows, a.cols + b.cols, dim);
        for (m, ro, co) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for r in 0..m.rows {
                for k in 0..m.cols {
                    out.set(ro + r, co + k, m.entry(r, k));
                }
            }
        }
        out
    }

    pub fn vstack(a: &ElemMatrix, b: &ElemMatrix) -> ElemMatrix {
        ElemMatrix::blocks(a, &ElemMatrix::zeros(a.rows, 0, a.dim), b, &ElemMatrix::zeros(b.rows, 0, b.dim))
    }

    pub fn hstack(a: &ElemMatrix, b: &ElemMatrix) -> ElemMatrix {
        ElemMatrix::blocks(a, b, &ElemMatrix::zeros(0, a.cols, a.dim), &ElemMatrix::zeros(0, b.cols, b.dim))
    }

    pub fn block_diag(parts: &[&ElemMatrix], dim: usize) -> ElemMatrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = ElemMatrix::zeros(rows, cols, dim);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(ro + r, co + c, m.entry(r, c));
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Apply a linear map to every entry.
    pub fn map_entries(&self, new_dim: usize, f: impl Fn(&[u32]) -> Vec<u32>) -> ElemMatrix {
        let mut out = ElemMatrix::zeros(self.rows, self.cols, new_dim);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.is_entry_zero(r, c) {
                    out.set(r, c, &f(self.entry(r, c)));
                }
            }
        }
        out
    }

    /// Reduction modulo the radical: the scalar matrix of idempotent coefficients.
    pub fn top(&self, alg: &Algebra, row_vertices: &[usize], col_vertices: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(alg.field(), self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if row_vertices[r] == col_vertices[c] {
                    m.set(r, c, alg.top_coefficient(self.entry(r, c), row_vertices[r]));
                }
            }
        }
        m
    }

    pub fn is_radical(&self, alg: &Algebra) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| alg.in_radical(self.entry(r, c))))
    }

    /// Inverse of a square matrix between summands whose reduction modulo the radical is
    /// invertible; `vertices` lists the summand vertices of the source (columns).
    pub fn inverse(&self, alg: &Algebra, row_vertices: &[usize], col_vertices: &[usize]) -> Option<ElemMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let t = self.top(alg, row_vertices, col_vertices).inverse()?;
        let t_inv = ElemMatrix::from_scalars(alg, &t, col_vertices, row_vertices);
        // self · t_inv = I - n with n radical; inverse = t_inv (I + n + n^2 + ...)
        let id = ElemMatrix::identity(alg, row_vertices);
        let mut n = self.mul(alg, &t_inv);
        n = n.neg(alg);
        n.add_scaled(alg, &id, 1);
        let mut sum = id.clone();
        let mut power = id;
        for _ in 0..=alg.dim() {
            power = power.mul(alg, &n);
            if power.is_zero() {
                break;
            }
            sum.add_scaled(alg, &power, 1);
        }
        Some(t_inv.mul(alg, &sum))
    }
}
