use super::{Algebra, AlgebraAutomorphism, AlgebraParts, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Inclusion of an algebra into a larger one, as a map on basis indices.
#[derive(Clone, Debug)]
pub struct AlgebraEmbedding {
    source_dim: usize,
    target_dim: usize,
    basis_image: Vec<usize>,
}

impl AlgebraEmbedding {
    pub fn apply(&self, a: &[u32]) -> Vec<u32> {
        assert_eq!(a.len(), self.source_dim);
        let mut v = vec![0; self.target_dim];
        for (b, &c) in a.iter().enumerate() {
            v[self.basis_image[b]] = c;
        }
        v
    }

    pub fn basis_image(&self, b: usize) -> usize {
        self.basis_image[b]
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }
}

/// `A ⋉ D(A)_σ` together with the inclusion of `A`.
#[derive(Clone, Debug)]
pub struct TrivialExtension {
    pub algebra: Algebra,
    pub embedding: AlgebraEmbedding,
    /// Index of the first dual basis element; `dual_offset + b` is the dual of `b`.
    pub dual_offset: usize,
}

/// Twisted trivial extension of `alg` by the automorphism `sigma`.
///
/// The basis is the basis of `alg` followed by its dual basis. The bimodule structure on
/// `D(A)` is `(a·g)(c) = g(c·σ(a))` and `(f·b)(c) = f(b·c)`, and `D(A)^2 = 0`.
pub fn twisted_trivial_extension(alg: &Algebra, sigma: &AlgebraAutomorphism) -> Result<TrivialExtension> {
    let d = alg.dim();
    let f = alg.field();
    let n = alg.num_vertices();
    if sigma.matrix().rows() != d {
        return Err(Error::InvalidInput("automorphism belongs to a different algebra".into()));
    }
    let mut labels: Vec<String> = alg.labels().to_vec();
    labels.extend(alg.labels().iter().map(|l| format!("{l}^*")));
    let mut corners: Vec<(usize, usize)> = alg.corners().to_vec();
    for b in 0..d {
        let (i, j) = alg.corner(b);
        corners.push((sigma.vertex_preimage(j), i));
    }
    let dd = 2 * d;
    let mut mult: Vec<SparseVec> = vec![Vec::new(); dd * dd];
    for a in 0..d {
        for b in 0..d {
            mult[a * dd + b] = alg.mul_basis(a, b).to_vec();
        }
    }
    let basis: Vec<Vec<u32>> = (0..d).map(|b| alg.basis_vec(b)).collect();
    for a in 0..d {
        // a · q* = Σ_r q*(r σ(a)) r*
        let sa = sigma.apply(alg, &basis[a]);
        let right: Vec<Vec<u32>> = (0..d).map(|r| alg.mul(&basis[r], &sa)).collect();
        // q* · a = Σ_r q*(a r) r*
        let left: Vec<&[(u32, u32)]> = (0..d).map(|r| alg.mul_basis(a, r)).collect();
        for q in 0..d {
            let prod: SparseVec = (0..d).filter(|&r| right[r][q] != 0).map(|r| ((d + r) as u32, right[r][q])).collect();
            mult[a * dd + d + q] = prod;
            let prod: SparseVec = (0..d)
                .filter_map(|r| left[r].iter().find(|&&(c, _)| c as usize == q).map(|&(_, x)| ((d + r) as u32, x)))
                .filter(|&(_, x)| x != 0)
                .collect();
            mult[(d + q) * dd + a] = prod;
        }
    }
    let _ = f;
    let generators = alg
        .generators()
        .iter()
        .map(|(name, v)| {
            let mut w = v.clone();
            w.resize(dd, 0);
            (name.clone(), w)
        })
        .collect();
    let algebra = Algebra::from_parts(AlgebraParts {
        field: alg.field(),
        num_vertices: n,
        labels,
        corners,
        idempotents: alg.idempotents().to_vec(),
        mult,
        grading: None,
        generators,
        quiver: None,
        paths: None,
    })?
    .with_seed(alg.seed());
    Ok(TrivialExtension {
        algebra,
        embedding: AlgebraEmbedding { source_dim: d, target_dim: dd, basis_image: (0..d).collect() },
        dual_offset: d,
    })
}

impl TrivialExtension {
    /// Element `(0, b*)`.
    pub fn dual(&self, b: usize) -> Vec<u32> {
        self.algebra.basis_vec(self.dual_offset + b)
    }

    /// The automorphism `(a, f) ↦ (σ(a), f ∘ σ^{-1})`.
    pub fn nakayama_from_twist(&self, base: &Algebra, sigma: &AlgebraAutomorphism) -> Result<AlgebraAutomorphism> {
        let d = base.dim();
        let sinv: Matrix = sigma.inverse().matrix().clone();
        let images: Vec<Vec<u32>> = (0..2 * d)
            .map(|b| {
                let mut v = vec![0u32; 2 * d];
                if b < d {
                    let s = sigma.apply(base, &base.basis_vec(b));
                    v[..d].copy_from_slice(&s);
                } else {
                    // (q* ∘ σ^{-1})(r) = coefficient of q in σ^{-1}(r)
                    let q = b - d;
                    for r in 0..d {
                        v[d + r] = sinv.get(q, r);
                    }
                }
                v
            })
            .collect();
        AlgebraAutomorphism::validate(&self.algebra, &images)
    }
}
