use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A validated algebra automorphism, stored as the matrix whose columns are the images
/// of the basis elements. Idempotents are permuted exactly: `α(e_i) = e_{vertex_image(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraAutomorphism {
    matrix: Matrix,
    inverse: Matrix,
    vertex_image: Vec<usize>,
}

impl AlgebraAutomorphism {
    pub fn identity(alg: &Algebra) -> Self {
        let m = Matrix::identity(alg.field(), alg.dim());
        AlgebraAutomorphism { matrix: m.clone(), inverse: m, vertex_image: (0..alg.num_vertices()).collect() }
    }

    /// Checks invertibility, multiplicativity on all basis pairs, unitality and that
    /// every idempotent is sent to an idempotent.
    pub fn validate(alg: &Algebra, images: &[Vec<u32>]) -> Result<Self> {
        let d = alg.dim();
        if images.len() != d || images.iter().any(|v| v.len() != d) {
            return Err(Error::NotAutomorphism("image table has the wrong shape".into()));
        }
        let matrix = Matrix::from_columns(alg.field(), d, images);
        let inverse = matrix.inverse().ok_or_else(|| Error::NotAutomorphism("map is not invertible".into()))?;
        let mut vertex_image = Vec::with_capacity(alg.num_vertices());
        for v in 0..alg.num_vertices() {
            let img = &images[alg.idempotent(v)];
            let target = (0..alg.num_vertices()).find(|&w| *img == alg.basis_vec(alg.idempotent(w)));
            match target {
                Some(w) => vertex_image.push(w),
                None => return Err(Error::NotAutomorphism(format!("e_{} is not sent to a vertex idempotent", v + 1))),
            }
        }
        let mut seen = vec![false; vertex_image.len()];
        for &w in &vertex_image {
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::NotAutomorphism("idempotents are not permuted".into()));
            }
        }
        let aut = AlgebraAutomorphism { matrix, inverse, vertex_image };
        if aut.apply(alg, &alg.unit()) != alg.unit() {
            return Err(Error::NotAutomorphism("map is not unital".into()));
        }
        for a in 0..d {
            for b in 0..d {
                let lhs = aut.apply(alg, &alg.mul(&alg.basis_vec(a), &alg.basis_vec(b)));
                let rhs = alg.mul(&images[a], &images[b]);
                if lhs != rhs {
                    return Err(Error::NotAutomorphism(format!(
                        "not multiplicative on ({}, {})",
                        alg.label(a),
                        alg.label(b)
                    )));
                }
            }
        }
        Ok(aut)
    }

    /// Automorphism of a path algebra induced by images of the arrows.
    pub fn from_arrow_images(alg: &Algebra, arrow_images: &[(&str, Vec<u32>)]) -> Result<Self> {
        let quiver = alg.quiver().ok_or_else(|| Error::InvalidInput("algebra has no quiver presentation".into()))?;
        let paths = alg.basis_paths().unwrap();
        let mut arrow_img = vec![None; quiver.arrows().len()];
        for (name, img) in arrow_images {
            let i = quiver.arrow_index(name).ok_or_else(|| Error::Semantic(format!("unknown arrow {name}")))?;
            arrow_img[i] = Some(img.clone());
        }
        let arrow_img: Vec<Vec<u32>> = arrow_img
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::InvalidInput(format!("no image for arrow {}", quiver.arrows()[i].name)))
            })
            .collect::<Result<_>>()?;
        // vertex permutation read off from arrow endpoints when possible, else identity
        let n = alg.num_vertices();
        let mut vperm: Vec<Option<usize>> = vec![None; n];
        for (i, arr) in quiver.arrows().iter().enumerate() {
            if let Some(b) = arrow_img[i].iter().position(|&c| c != 0) {
                let (s, t) = alg.corner(b);
                vperm[arr.source] = Some(s);
                vperm[arr.target] = Some(t);
            }
        }
        let images: Vec<Vec<u32>> = (0..alg.dim())
            .map(|b| {
                if alg.is_idempotent_basis(b) {
                    let v = alg.corner(b).0;
                    alg.basis_vec(alg.idempotent(vperm[v].unwrap_or(v)))
                } else {
                    let mut acc = arrow_img[paths[b][0]].clone();
                    for &a in &paths[b][1..] {
                        acc = alg.mul(&acc, &arrow_img[a]);
                    }
                    acc
                }
            })
            .collect();
        Self::validate(alg, &images)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_image[v]
    }

    pub fn vertex_permutation(&self) -> &[usize] {
        &self.vertex_image
    }

    pub fn vertex_preimage(&self, v: usize) -> usize {
        self.vertex_image.iter().position(|&w| w == v).unwrap()
    }

    pub fn apply(&self, _alg: &Algebra, a: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(a)
    }

    pub fn apply_inverse(&self, _alg: &Algebra, a: &[u32]) -> Vec<u32> {
        self.inverse.mul_vec(a)
    }

    pub fn inverse(&self) -> AlgebraAutomorphism {
        let mut vertex_image = vec![0; self.vertex_image.len()];
        for (v, &w) in self.vertex_image.iter().enumerate() {
            vertex_image[w] = v;
        }
        AlgebraAutomorphism { matrix: self.inverse.clone(), inverse: self.matrix.clone(), vertex_image }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &AlgebraAutomorphism) -> AlgebraAutomorphism {
        AlgebraAutomorphism {
            matrix: self.matrix.mul(&other.matrix),
            inverse: other.inverse.mul(&self.inverse),
            vertex_image: other.vertex_image.iter().map(|&v| self.vertex_image[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.field(), self.matrix.rows())
    }

    /// Multiplicative order, if at most `bound`.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{paper_algebra, paper_sigma};
    use crate::linalg::PrimeField;

    #[test]
    fn identity_is_valid() {
        let a = paper_algebra(4, PrimeField::new(101).unwrap()).unwrap();
        let id: Vec<Vec<u32>> = (0..a.dim()).map(|b| a.basis_vec(b)).collect();
        assert!(AlgebraAutomorphism::validate(&a, &id).unwrap().is_identity());
    }

    #[test]
    fn swap_of_parallel_arrows_has_order_two() {
        let a = paper_algebra(4, PrimeField::new(101).unwrap()).unwrap();
        let s = paper_sigma(&a).unwrap();
        assert_eq!(s.order(4), Some(2));
        assert_eq!(s.vertex_permutation(), &[0, 1, 2, 3]);
    }

    #[test]
    fn killing_an_arrow_is_rejected() {
        let a = paper_algebra(4, PrimeField::new(101).unwrap()).unwrap();
        let imgs: Vec<(&str, Vec<u32>)> = ["x1", "x2", "x3", "y1", "y2", "y3"]
            .iter()
            .map(|&n| (n, if n.starts_with('y') { a.zero() } else { a.generator(n).unwrap().to_vec() }))
            .collect();
        assert!(matches!(AlgebraAutomorphism::from_arrow_images(&a, &imgs), Err(Error::NotAutomorphism(_))));
    }
}
