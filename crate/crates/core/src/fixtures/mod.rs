//! Named algebras and complexes used by the demo, the tests and the command line.

mod paper;

pub use paper::{
    build_paper_family, check_presentation, lambda_presentation, printed_summands, word, PaperFamily, PresentationCheck,
};

use crate::algebra::{Algebra, AlgebraAutomorphism, Arrow, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Quiver `1 ⇉ 2 ⇉ … ⇉ n` with arrows `x_i, y_i: i → i+1` modulo `x x = y y = 0`.
pub fn paper_algebra(n: usize, field: PrimeField) -> Result<Algebra> {
    paper_presentation(n)?.algebra(field)
}

pub fn paper_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidInput("need at least two vertices".into()));
    }
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push(Arrow::new(&format!("x{i}"), i - 1, i));
        arrows.push(Arrow::new(&format!("y{i}"), i - 1, i));
    }
    let q = Quiver::new(n, arrows)?;
    let mut rels = Vec::new();
    for i in 1..n - 1 {
        for c in ["x", "y"] {
            let (a, b) = (format!("{c}{i}"), format!("{c}{}", i + 1));
            rels.push(Relation::monomial(&q, &[&a, &b])?);
        }
    }
    Ok(Presentation { quiver: q, relations: rels, max_len: n + 1 })
}

/// The automorphism fixing vertices and swapping `x_i ↔ y_i`.
pub fn paper_sigma(alg: &Algebra) -> Result<AlgebraAutomorphism> {
    let q = alg.quiver().ok_or_else(|| Error::InvalidInput("algebra has no quiver".into()))?;
    let mut images = Vec::new();
    for a in q.arrows() {
        let partner = match a.name.chars().next() {
            Some('x') => format!("y{}", &a.name[1..]),
            Some('y') => format!("x{}", &a.name[1..]),
            _ => return Err(Error::InvalidInput(format!("unexpected arrow {}", a.name))),
        };
        let img = alg.generator(&partner).ok_or_else(|| Error::InvalidInput(format!("missing arrow {partner}")))?;
        images.push((a.name.as_str(), img.to_vec()));
    }
    AlgebraAutomorphism::from_arrow_images(alg, &images)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("unknown Dynkin type {s}"));
        let (head, rank) = s.split_at(1);
        let rank: usize = rank.parse().map_err(|_| bad())?;
        let t = match head {
            "A" | "a" => DynkinType::A(rank),
            "D" | "d" => DynkinType::D(rank),
            "E" | "e" => DynkinType::E(rank),
            _ => return Err(bad()),
        };
        t.edges().map(|_| t)
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Edges `(i, j)` with `i < j`, 0-based, Bourbaki labelling.
    pub fn edges(self) -> Result<Vec<(usize, usize)>> {
        match self {
            DynkinType::A(n) if n >= 1 => Ok((1..n).map(|i| (i - 1, i)).collect()),
            DynkinType::D(n) if n >= 4 => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                Ok(e)
            }
            DynkinType::E(n) if (6..=8).contains(&n) => {
                let mut e = vec![(0, 2), (1, 3), (2, 3)];
                e.extend((4..n).map(|i| (i - 1, i)));
                Ok(e)
            }
            _ => Err(Error::Usage(format!("unsupported Dynkin type {self:?}"))),
        }
    }

    pub fn coxeter_number(self) -> usize {
        match self {
            DynkinType::A(n) => n + 1,
            DynkinType::D(n) => 2 * n - 2,
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            _ => 30,
        }
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Preprojective algebra of a Dynkin diagram: the doubled quiver modulo
/// `Σ_{s(a)=i} a a* − Σ_{t(a)=i} a* a` at each vertex `i`.
pub fn preprojective(ty: DynkinType, field: PrimeField) -> Result<Algebra> {
    preprojective_presentation(ty)?.algebra(field)
}

pub fn preprojective_presentation(ty: DynkinType) -> Result<Presentation> {
    let n = ty.rank();
    let edges = ty.edges()?;
    let name = |i: usize, j: usize| format!("a{}_{}", i + 1, j + 1);
    let mut arrows = Vec::new();
    for &(i, j) in &edges {
        arrows.push(Arrow::new(&name(i, j), i, j));
        arrows.push(Arrow::new(&name(j, i), j, i));
    }
    let q = Quiver::new(n, arrows)?;
    let mut rels = Vec::new();
    for v in 0..n {
        let mut terms: Vec<(i64, Vec<usize>)> = Vec::new();
        for &(i, j) in &edges {
            if i == v {
                terms.push((1, q.path(&[&name(i, j), &name(j, i)])?));
            }
            if j == v {
                terms.push((-1, q.path(&[&name(j, i), &name(i, j)])?));
            }
        }
        if !terms.is_empty() {
            rels.push(Relation::new(&q, terms)?);
        }
    }
    Ok(Presentation { quiver: q, relations: rels, max_len: 2 * ty.coxeter_number() + 4 })
}
