use super::{ChainMap, ElemMatrix, ProjComplex};
use crate::error::{Error, Result};

/// A distinguished triangle `X →f Y →g C →h X[1]`; `h` is stored as a degree-1 map `C → X`.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub map: ChainMap,
    pub cone: ProjComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// Mapping cone of a degree-0 chain map `f: S → X`: `C^i = S^{i+1} ⊕ X^i` with
/// differential `[[-d_S, 0], [f, d_X]]`.
pub fn cone(f: &ChainMap) -> Result<Triangle> {
    if f.shift() != 0 {
        return Err(Error::InvalidInput("cone needs a degree-0 map".into()));
    }
    let (s, x) = (f.source(), f.target());
    let alg = s.algebra().clone();
    let dim = alg.dim();
    if s.is_zero() && x.is_zero() {
        let z = ProjComplex::zero(alg);
        return Ok(Triangle {
            map: f.clone(),
            cone: z.clone(),
            inclusion: ChainMap::zero(x, &z, 0),
            projection: ChainMap::zero(&z, s, 1),
        });
    }
    let lo = if s.is_zero() {
        x.lo()
    } else if x.is_zero() {
        s.lo() - 1
    } else {
        (s.lo() - 1).min(x.lo())
    };
    let hi = if s.is_zero() {
        x.hi()
    } else if x.is_zero() {
        s.hi() - 1
    } else {
        (s.hi() - 1).max(x.hi())
    };
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for i in lo..=hi {
        let mut t = s.term(i + 1).to_vec();
        t.extend_from_slice(x.term(i));
        terms.push(t);
        if i < hi {
            let ds = s.diff_or_zero(i + 1).neg(&alg);
            let dx = x.diff_or_zero(i);
            let zero = ElemMatrix::zeros(s.term(i + 2).len(), x.term(i).len(), dim);
            diffs.push(ElemMatrix::blocks(&ds, &zero, &f.component(i + 1), &dx));
        }
    }
    let c = ProjComplex::new(alg.clone(), lo, terms, diffs)?;
    let inc = x
        .degrees()
        .map(|i| {
            let top = ElemMatrix::zeros(s.term(i + 1).len(), x.term(i).len(), dim);
            ElemMatrix::vstack(&top, &ElemMatrix::identity(&alg, x.term(i)))
        })
        .collect();
    let inclusion = ChainMap::new(x, &c, 0, inc)?;
    let proj = c
        .degrees()
        .map(|i| {
            let zero = ElemMatrix::zeros(s.term(i + 1).len(), x.term(i).len(), dim);
            ElemMatrix::hstack(&ElemMatrix::identity(&alg, s.term(i + 1)), &zero)
        })
        .collect();
    let projection = ChainMap::new(&c, s, 1, proj)?;
    Ok(Triangle { map: f.clone(), cone: c, inclusion, projection })
}

/// Co-cone of `g: Y → X`, the complex `Z = cone(g)[-1]` completing `Z → Y → X → Z[1]`.
pub fn cocone(g: &ChainMap) -> Result<ProjComplex> {
    Ok(cone(g)?.cone.shift(-1))
}
