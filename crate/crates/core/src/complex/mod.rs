//! Bounded complexes of finitely generated projective right modules and their homotopy
//! category.
//!
//! Differentials raise degree by one. `X[1]^i = X^{i+1}` with negated differential. A
//! term is a list of vertices `v`, standing for the sum of the projectives `e_v A`.

mod cone;
mod hom;
mod matrix;
mod minimize;

use std::sync::Arc;

pub use cone::{cocone, cone, Triangle};
pub use hom::{column_map, compose, hom_dim, hom_space, hom_table, row_map, ChainMap, HomSpace};
pub use matrix::ElemMatrix;
pub use minimize::{is_contractible, minimize};

use crate::algebra::{Algebra, AlgebraAutomorphism, AlgebraEmbedding};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct ProjComplex {
    alg: Arc<Algebra>,
    lo: i32,
    terms: Vec<Vec<usize>>,
    diffs: Vec<ElemMatrix>,
}

impl std::fmt::Debug for ProjComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProjComplex[")?;
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " -> ")?;
            }
            let deg = self.lo + k as i32;
            let names: Vec<String> = t.iter().map(|v| format!("P{}", v + 1)).collect();
            write!(f, "{deg}:({})", names.join("+"))?;
        }
        write!(f, "]")
    }
}

impl ProjComplex {
    /// Builds and validates a complex with terms in degrees `lo, lo+1, ...`;
    /// `diffs[k]` maps the term of degree `lo+k` to that of degree `lo+k+1`.
    pub fn new(alg: Arc<Algebra>, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<ElemMatrix>) -> Result<Self> {
        let x = ProjComplex { alg, lo, terms, diffs };
        x.validate()?;
        Ok(x.trimmed())
    }

    /// Construction without validation, for results of operations that preserve the invariants.
    pub(crate) fn from_parts(alg: Arc<Algebra>, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<ElemMatrix>) -> Self {
        debug_assert!(ProjComplex { alg: alg.clone(), lo, terms: terms.clone(), diffs: diffs.clone() }
            .validate()
            .is_ok());
        ProjComplex { alg, lo, terms, diffs }.trimmed()
    }

    pub fn zero(alg: Arc<Algebra>) -> Self {
        ProjComplex { alg, lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// Stalk complex `⊕ e_v A` concentrated in `degree`.
    pub fn stalk(alg: Arc<Algebra>, degree: i32, vertices: Vec<usize>) -> Self {
        ProjComplex { alg, lo: degree, terms: vec![vertices], diffs: Vec::new() }.trimmed()
    }

    /// The algebra itself as a stalk complex in degree 0.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let n = alg.num_vertices();
        ProjComplex::stalk(alg, 0, (0..n).collect())
    }

    pub fn projective(alg: Arc<Algebra>, v: usize) -> Self {
        ProjComplex::stalk(alg, 0, vec![v])
    }

    pub fn validate(&self) -> Result<()> {
        let alg = &self.alg;
        if self.diffs.len() != self.terms.len().saturating_sub(1) {
            return Err(Error::InvalidComplex("number of differentials does not match the terms".into()));
        }
        for &v in self.terms.iter().flatten() {
            if v >= alg.num_vertices() {
                return Err(Error::InvalidComplex(format!("vertex {} out of range", v + 1)));
            }
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let deg = self.lo + k as i32;
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if d.rows() != tgt.len() || d.cols() != src.len() {
                return Err(Error::InvalidComplex(format!("differential in degree {deg} has the wrong shape")));
            }
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let e = d.entry(r, c);
                    if e.len() != alg.dim() {
                        return Err(Error::InvalidComplex("entry length differs from the algebra dimension".into()));
                    }
                    for (b, &x) in e.iter().enumerate() {
                        if x != 0 && alg.corner(b) != (tgt[r], src[c]) {
                            return Err(Error::InvalidComplex(format!(
                                "entry ({}, {}) of d^{deg} is not in e_{}Ae_{}",
                                r + 1,
                                c + 1,
                                tgt[r] + 1,
                                src[c] + 1
                            )));
                        }
                    }
                }
            }
        }
        for k in 1..self.diffs.len() {
            if !self.diffs[k].mul(alg, &self.diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d^{} d^{} is nonzero",
                    self.lo + k as i32,
                    self.lo + k as i32 - 1
                )));
            }
        }
        Ok(())
    }

    fn trimmed(mut self) -> Self {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        let lead = self.terms.iter().take_while(|t| t.is_empty()).count();
        if lead > 0 {
            self.terms.drain(..lead);
            self.diffs.drain(..lead.min(self.diffs.len()));
            self.lo += lead as i32;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest degree with a nonzero term (0 for the zero complex).
    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest degree with a nonzero term (`lo - 1` for the zero complex).
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn term(&self, deg: i32) -> &[usize] {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            return &[];
        }
        &self.terms[k as usize]
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// Differential out of degree `deg`, if both ends are nonzero.
    pub fn diff(&self, deg: i32) -> Option<&ElemMatrix> {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.diffs.len() {
            return None;
        }
        Some(&self.diffs[k as usize])
    }

    pub fn diffs(&self) -> &[ElemMatrix] {
        &self.diffs
    }

    /// Differential out of degree `deg`, zero-padded outside the support.
    pub fn diff_or_zero(&self, deg: i32) -> ElemMatrix {
        self.diff(deg)
            .cloned()
            .unwrap_or_else(|| ElemMatrix::zeros(self.term(deg + 1).len(), self.term(deg).len(), self.alg.dim()))
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// `X[m]`
    pub fn shift(&self, m: i32) -> ProjComplex {
        if self.is_zero() {
            return self.clone();
        }
        let diffs = if m.rem_euclid(2) == 1 {
            self.diffs.iter().map(|d| d.neg(&self.alg)).collect()
        } else {
            self.diffs.clone()
        };
        ProjComplex { alg: self.alg.clone(), lo: self.lo - m, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(parts: &[&ProjComplex]) -> Result<ProjComplex> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidInput("direct sum of an empty list".into()));
        };
        let alg = first.alg.clone();
        if parts.iter().any(|p| !Arc::ptr_eq(&p.alg, &alg) && p.alg.dim() != alg.dim()) {
            return Err(Error::InvalidInput("summands live over different algebras".into()));
        }
        let nonzero: Vec<&&ProjComplex> = parts.iter().filter(|p| !p.is_zero()).collect();
        if nonzero.is_empty() {
            return Ok(ProjComplex::zero(alg));
        }
        let lo = nonzero.iter().map(|p| p.lo).min().unwrap();
        let hi = nonzero.iter().map(|p| p.hi()).max().unwrap();
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for deg in lo..=hi {
            terms.push(nonzero.iter().flat_map(|p| p.term(deg).iter().copied()).collect());
            if deg < hi {
                let blocks: Vec<ElemMatrix> = nonzero.iter().map(|p| p.diff_or_zero(deg)).collect();
                let refs: Vec<&ElemMatrix> = blocks.iter().collect();
                diffs.push(ElemMatrix::block_diag(&refs, alg.dim()));
            }
        }
        Ok(ProjComplex { alg, lo, terms, diffs }.trimmed())
    }

    /// `X^{⊕k}`
    pub fn power(&self, k: usize) -> ProjComplex {
        let parts: Vec<&ProjComplex> = std::iter::repeat_n(self, k).collect();
        if parts.is_empty() {
            return ProjComplex::zero(self.alg.clone());
        }
        ProjComplex::direct_sum(&parts).expect("same algebra")
    }

    /// Class in the Grothendieck group in the basis of indecomposable projectives:
    /// `Σ_i (-1)^i [X^i]`.
    pub fn g_vector(&self) -> Vec<i64> {
        let mut g = vec![0i64; self.alg.num_vertices()];
        for deg in self.degrees() {
            let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
            for &v in self.term(deg) {
                g[v] += sign;
            }
        }
        g
    }

    /// Number of summands `e_v A` in each degree, as `(degree, counts by vertex)`.
    pub fn term_profile(&self) -> Vec<(i32, Vec<usize>)> {
        self.degrees()
            .map(|deg| {
                let mut c = vec![0; self.alg.num_vertices()];
                for &v in self.term(deg) {
                    c[v] += 1;
                }
                (deg, c)
            })
            .collect()
    }

    /// `X ⊗_A A_α`. Since `e_i A_α ≅ α^{-1}(e_i) A`, vertices move to their preimages and
    /// entries are transported by `α^{-1}`.
    pub fn twist(&self, alpha: &AlgebraAutomorphism) -> ProjComplex {
        let alg = &self.alg;
        let terms = self.terms.iter().map(|t| t.iter().map(|&v| alpha.vertex_preimage(v)).collect()).collect();
        let diffs = self.diffs.iter().map(|d| d.map_entries(alg.dim(), |e| alpha.apply_inverse(alg, e))).collect();
        ProjComplex { alg: self.alg.clone(), lo: self.lo, terms, diffs }
    }

    /// `X ⊗_A B` along an algebra inclusion that keeps vertex idempotents.
    pub fn base_change(&self, target: Arc<Algebra>, emb: &AlgebraEmbedding) -> Result<ProjComplex> {
        if emb.source_dim() != self.alg.dim() {
            return Err(Error::InvalidInput("embedding does not start at this algebra".into()));
        }
        let diffs = self.diffs.iter().map(|d| d.map_entries(target.dim(), |e| emb.apply(e))).collect();
        ProjComplex::new(target, self.lo, self.terms.clone(), diffs)
    }

    /// Same complex over a structurally identical algebra handle.
    pub fn with_algebra(&self, alg: Arc<Algebra>) -> ProjComplex {
        ProjComplex { alg, ..self.clone() }
    }
}

impl PartialEq for ProjComplex {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo && self.terms == other.terms && self.diffs == other.diffs
    }
}

impl Eq for ProjComplex {}

/// Euler form `Σ_m (-1)^m dim Hom(X, Y[m])`.
pub fn euler_form(x: &ProjComplex, y: &ProjComplex) -> i64 {
    let t = hom_table(x, y);
    t.iter().map(|&(m, d)| if m.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
}

#[cfg(test)]
mod tests;
