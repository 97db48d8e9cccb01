use super::{hom_dim, ElemMatrix, ProjComplex};

/// Position `(degree, row, col)` of a differential entry that is invertible in its local corner.
fn find_unit(x: &ProjComplex) -> Option<(i32, usize, usize)> {
    let alg = x.algebra();
    for deg in x.lo()..x.hi() {
        let d = x.diff(deg)?;
        let (src, tgt) = (x.term(deg), x.term(deg + 1));
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if tgt[r] == src[c] && alg.top_coefficient(d.entry(r, c), src[c]) != 0 {
                    return Some((deg, r, c));
                }
            }
        }
    }
    None
}

/// Homotopy-equivalent complex with radical differentials, obtained by repeatedly
/// cancelling a unit entry `e_v A →(a) e_v A` (Gaussian elimination).
pub fn minimize(x: &ProjComplex) -> ProjComplex {
    let alg = x.algebra().clone();
    let f = alg.field();
    let mut lo = x.lo();
    let mut terms: Vec<Vec<usize>> = x.terms().to_vec();
    let mut diffs: Vec<ElemMatrix> = x.diffs().to_vec();
    let mut cur = x.clone();
    while let Some((deg, r, c)) = find_unit(&cur) {
        let k = (deg - lo) as usize;
        let d = &diffs[k];
        let v = terms[k][c];
        let a_inv = alg.corner_inverse(d.entry(r, c), v).expect("unit entry");
        let keep_src: Vec<usize> = (0..terms[k].len()).filter(|&j| j != c).collect();
        let keep_tgt: Vec<usize> = (0..terms[k + 1].len()).filter(|&j| j != r).collect();
        let mut new_d = d.select(&keep_tgt, &keep_src);
        // D - c' a^{-1} b
        for (si, &s) in keep_tgt.iter().enumerate() {
            let left = d.entry(s, c);
            if left.iter().all(|&z| z == 0) {
                continue;
            }
            let la = alg.mul(left, &a_inv);
            for (ti, &t) in keep_src.iter().enumerate() {
                let right = d.entry(r, t);
                if right.iter().all(|&z| z == 0) {
                    continue;
                }
                alg.mul_acc(new_d.entry_mut(si, ti), &la, right, f.neg(1));
            }
        }
        diffs[k] = new_d;
        if k > 0 {
            let prev = &diffs[k - 1];
            let all: Vec<usize> = (0..prev.cols()).collect();
            diffs[k - 1] = prev.select(&keep_src, &all);
        }
        if k + 1 < diffs.len() {
            let next = &diffs[k + 1];
            let all: Vec<usize> = (0..next.rows()).collect();
            diffs[k + 1] = next.select(&all, &keep_tgt);
        }
        terms[k] = keep_src.iter().map(|&j| terms[k][j]).collect();
        terms[k + 1] = keep_tgt.iter().map(|&j| terms[k + 1][j]).collect();
        cur = ProjComplex::from_parts(alg.clone(), lo, terms.clone(), diffs.clone());
        lo = cur.lo();
        terms = cur.terms().to_vec();
        diffs = cur.diffs().to_vec();
    }
    cur
}

/// Whether the identity of `X` is null-homotopic.
pub fn is_contractible(x: &ProjComplex) -> bool {
    hom_dim(x, x, 0) == 0
}
