//! Text format for complexes of projectives over a given algebra.
//!
//! ```text
//! degree 0: [3]
//! degree 1: [2]
//! degree 2: [1]
//! d[0]: (1,1) = y2
//! d[1]: (1,1) = y1
//! ```
//!
//! Vertices, rows and columns are 1-based; `d[k]` maps degree `k` to degree `k + 1`, with rows
//! indexing the target term. Entries are linear combinations of basis labels, idempotents `e_i`
//! and `*`-products of named generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use std::sync::Arc;

use super::algebra_file::format_sum;
use super::expr::{content, parse_error, parse_sum};
use crate::algebra::Algebra;
use crate::complex::{ElemMatrix, ProjComplex};
use crate::error::{Error, Result};

fn semantic(line: usize, col: usize, msg: impl std::fmt::Display) -> Error {
    Error::Semantic(format!("{line}:{col}: {msg}"))
}

/// Resolves element expressions against an algebra.
struct Elements<'a> {
    alg: &'a Algebra,
    labels: HashMap<&'a str, usize>,
}

impl<'a> Elements<'a> {
    fn new(alg: &'a Algebra) -> Self {
        let labels = alg.labels().iter().enumerate().map(|(b, l)| (l.as_str(), b)).collect();
        Elements { alg, labels }
    }

    fn atom(&self, word: &[String], line: usize, col: usize) -> Result<Vec<u32>> {
        let joined = word.join("*");
        if let Some(&b) = self.labels.get(joined.as_str()) {
            return Ok(self.alg.basis_vec(b));
        }
        let mut acc: Option<Vec<u32>> = None;
        for w in word {
            let g = if let Some(g) = self.alg.generator(w) {
                g.to_vec()
            } else if let Some(v) = w.strip_prefix('e').and_then(|i| i.parse::<usize>().ok()) {
                if v == 0 || v > self.alg.num_vertices() {
                    return Err(semantic(line, col, format!("no vertex {v}")));
                }
                self.alg.basis_vec(self.alg.idempotent(v - 1))
            } else {
                return Err(semantic(line, col, format!("unknown generator or basis element '{w}'")));
            };
            acc = Some(match acc {
                None => g,
                Some(a) => self.alg.mul(&a, &g),
            });
        }
        Ok(acc.expect("words are nonempty"))
    }

    fn parse(&self, s: &str, line: usize, col: usize) -> Result<Vec<u32>> {
        let f = self.alg.field();
        let mut v = self.alg.zero();
        for t in parse_sum(s, line, col)? {
            if t.word.is_empty() {
                if t.coeff != 0 {
                    return Err(semantic(line, t.col, "scalars must multiply an idempotent, e.g. 2*e1"));
                }
                continue;
            }
            let a = self.atom(&t.word, line, t.col)?;
            v = self.alg.add(&v, &self.alg.scale(&a, f.from_i64(t.coeff)));
        }
        Ok(v)
    }
}

fn parse_int<T: std::str::FromStr>(s: &str, line: usize, col: usize, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| parse_error(line, col, format!("expected {what}, found '{}'", s.trim())))
}

/// `[i, j, …]`.
fn parse_vertex_list(s: &str, n: usize, line: usize, col: usize) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_error(line, col, "expected a bracketed vertex list"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|v| {
            let v: usize = parse_int(v, line, col, "a vertex")?;
            if v == 0 || v > n {
                return Err(semantic(line, col, format!("vertex {v} outside 1..{n}")));
            }
            Ok(v - 1)
        })
        .collect()
}

pub fn parse_complex(text: &str, alg: Arc<Algebra>) -> Result<ProjComplex> {
    let n = alg.num_vertices();
    let elements = Elements::new(&alg);
    let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    let mut entries: Vec<(i32, usize, usize, Vec<u32>, usize)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = content(raw);
        let trimmed = body.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let lead = body.len() - trimmed.len();
        let (head, rest) = trimmed
            .split_once(':')
            .ok_or_else(|| parse_error(line, lead + 1, "expected 'degree k: [...]' or 'd[k]: (r,c) = ...'"))?;
        let rest_col = lead + head.len() + 2;
        if let Some(deg) = head.strip_prefix("degree") {
            let deg: i32 = parse_int(deg, line, lead + 7, "a degree")?;
            let list = parse_vertex_list(rest, n, line, rest_col)?;
            if terms.insert(deg, list).is_some() {
                return Err(semantic(line, lead + 1, format!("degree {deg} given twice")));
            }
        } else if let Some(d) = head.strip_prefix("d[").and_then(|h| h.trim_end().strip_suffix(']')) {
            let deg: i32 = parse_int(d, line, lead + 3, "a degree")?;
            let (pos, expr) =
                rest.split_once('=').ok_or_else(|| parse_error(line, rest_col, "expected '(r,c) = element'"))?;
            let pos = pos.trim();
            let (r, c) = pos
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .and_then(|p| p.split_once(','))
                .ok_or_else(|| parse_error(line, rest_col, "expected '(row,column)'"))?;
            let r: usize = parse_int(r, line, rest_col, "a row")?;
            let c: usize = parse_int(c, line, rest_col, "a column")?;
            let expr_col = rest_col + rest.find('=').unwrap() + 1;
            let value = elements.parse(expr, line, expr_col)?;
            entries.push((deg, r, c, value, line));
        } else {
            return Err(parse_error(line, lead + 1, format!("unexpected '{}'", head.trim())));
        }
    }
    if terms.is_empty() {
        return Ok(ProjComplex::zero(alg.clone()));
    }
    let lo = *terms.keys().next().unwrap();
    let hi = *terms.keys().next_back().unwrap();
    let term = |d: i32| terms.get(&d).cloned().unwrap_or_default();
    let mut diffs: Vec<ElemMatrix> =
        (lo..hi).map(|d| ElemMatrix::zeros(term(d + 1).len(), term(d).len(), alg.dim())).collect();
    for (deg, r, c, value, line) in entries {
        if deg < lo || deg >= hi {
            return Err(semantic(line, 1, format!("d[{deg}] lies outside the complex")));
        }
        let m = &mut diffs[(deg - lo) as usize];
        if r == 0 || c == 0 || r > m.rows() || c > m.cols() {
            return Err(semantic(line, 1, format!("entry ({r},{c}) outside a {}x{} matrix", m.rows(), m.cols())));
        }
        m.set(r - 1, c - 1, &value);
    }
    let all_terms = (lo..=hi).map(term).collect();
    ProjComplex::new(alg.clone(), lo, all_terms, diffs)
}

pub fn print_complex(x: &ProjComplex) -> String {
    let alg = x.algebra();
    let f = alg.field();
    let mut out = String::new();
    if x.is_zero() {
        return out;
    }
    for d in x.degrees() {
        let vs: Vec<String> = x.term(d).iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "degree {d}: [{}]", vs.join(", ")).unwrap();
    }
    for d in x.lo()..x.hi() {
        let m = x.diff(d).expect("inner degree");
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m.is_entry_zero(r, c) {
                    continue;
                }
                let e = m.entry(r, c);
                let terms = e.iter().enumerate().filter(|(_, &v)| v != 0).map(|(b, &v)| (f.to_signed(v), alg.label(b)));
                writeln!(out, "d[{d}]: ({},{}) = {}", r + 1, c + 1, format_sum(terms)).unwrap();
            }
        }
    }
    out
}
