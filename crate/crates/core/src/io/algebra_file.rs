//! Text format for quivers with relations.
//!
//! ```text
//! field 101
//! vertices 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! max-length 8        # optional
//! relations
//! a*b = 0
//! ```

use std::fmt::Write;

use super::expr::{content, parse_error, parse_sum, Term};
use crate::algebra::{Algebra, Arrow, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

const DEFAULT_MAX_LEN: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: PrimeField,
    pub presentation: Presentation,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Algebra> {
        self.presentation.algebra(self.field)
    }
}

fn semantic(line: usize, col: usize, msg: impl std::fmt::Display) -> Error {
    Error::Semantic(format!("{line}:{col}: {msg}"))
}

/// Splits `keyword rest`, returning the column of `rest`.
fn keyword(text: &str) -> (&str, &str, usize) {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim_start();
    let end = t.find(char::is_whitespace).unwrap_or(t.len());
    let rest = &t[end..];
    let rest_lead = rest.len() - rest.trim_start().len();
    (&t[..end], rest.trim(), lead + end + rest_lead + 1)
}

fn number(s: &str, line: usize, col: usize, what: &str) -> Result<usize> {
    s.parse().map_err(|_| parse_error(line, col, format!("expected {what}, found '{s}'")))
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let mut field = None;
    let mut vertices: Option<usize> = None;
    let mut arrows: Vec<(Arrow, usize)> = Vec::new();
    let mut max_len = DEFAULT_MAX_LEN;
    let mut relation_lines: Vec<(usize, &str)> = Vec::new();
    let mut in_relations = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = content(raw);
        if body.trim().is_empty() {
            continue;
        }
        if in_relations {
            relation_lines.push((line, body));
            continue;
        }
        let (kw, rest, col) = keyword(body);
        match kw {
            "field" => {
                let p = number(rest, line, col, "a prime")?;
                let f = u32::try_from(p).ok().and_then(|p| PrimeField::new(p).ok());
                field = Some(f.ok_or_else(|| semantic(line, col, format!("{rest} is not a supported prime")))?);
            }
            "vertices" => vertices = Some(number(rest, line, col, "a vertex count")?),
            "max-length" => max_len = number(rest, line, col, "a path length")?,
            "arrow" => arrows.push((parse_arrow(rest, line, col)?, line)),
            "relations" if rest.is_empty() => in_relations = true,
            _ => {
                return Err(parse_error(
                    line,
                    1 + body.len() - body.trim_start().len(),
                    format!("unknown keyword '{kw}'"),
                ))
            }
        }
    }
    let field = field.ok_or_else(|| parse_error(1, 1, "missing 'field' line"))?;
    let n = vertices.ok_or_else(|| parse_error(1, 1, "missing 'vertices' line"))?;
    for (a, line) in &arrows {
        if a.source >= n || a.target >= n {
            return Err(semantic(*line, 1, format!("arrow {} has an endpoint outside 1..{n}", a.name)));
        }
    }
    let quiver = Quiver::new(n, arrows.into_iter().map(|(a, _)| a).collect())?;
    let mut relations = Vec::new();
    for (line, body) in relation_lines {
        relations.push(parse_relation(&quiver, body, line)?);
    }
    Ok(AlgebraFile { field, presentation: Presentation { quiver, relations, max_len } })
}

/// `name: i -> j` with 1-based vertices.
fn parse_arrow(rest: &str, line: usize, col: usize) -> Result<Arrow> {
    let (name, ends) = rest.split_once(':').ok_or_else(|| parse_error(line, col, "expected 'name: i -> j'"))?;
    let name = name.trim();
    if name.is_empty()
        || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
        || name.starts_with(|c: char| c.is_ascii_digit())
    {
        return Err(parse_error(line, col, format!("invalid arrow name '{name}'")));
    }
    let ends_col = col + rest.find(':').unwrap() + 1;
    let (s, t) = ends.split_once("->").ok_or_else(|| parse_error(line, ends_col, "expected 'i -> j'"))?;
    let s = number(s.trim(), line, ends_col, "a vertex")?;
    let t = number(t.trim(), line, ends_col, "a vertex")?;
    if s == 0 || t == 0 {
        return Err(semantic(line, ends_col, "vertices are numbered from 1"));
    }
    Ok(Arrow::new(name, s - 1, t - 1))
}

fn path_of(quiver: &Quiver, term: &Term, line: usize) -> Result<Vec<usize>> {
    let names: Vec<&str> = term.word.iter().map(String::as_str).collect();
    quiver.path(&names).map_err(|e| semantic(line, term.col, e))
}

fn parse_relation(quiver: &Quiver, body: &str, line: usize) -> Result<Relation> {
    let (lhs, rhs, rhs_col) = match body.find('=') {
        Some(i) => (&body[..i], &body[i + 1..], body[..=i].chars().count() + 1),
        None => (body, "0", 1),
    };
    let mut terms: Vec<Term> = parse_sum(lhs, line, 1)?;
    terms.extend(parse_sum(rhs, line, rhs_col)?.into_iter().map(|t| Term { coeff: -t.coeff, ..t }));
    let mut out = Vec::new();
    for t in &terms {
        if t.word.is_empty() {
            if t.coeff != 0 {
                return Err(semantic(line, t.col, "relations cannot contain constants"));
            }
            continue;
        }
        out.push((t.coeff, path_of(quiver, t, line)?));
    }
    if out.is_empty() {
        return Err(semantic(line, 1, "empty relation"));
    }
    Relation::new(quiver, out).map_err(|e| match e {
        Error::InhomogeneousRelation(m) => Error::InhomogeneousRelation(format!("line {line}: {m}")),
        e => semantic(line, 1, e),
    })
}

pub(crate) fn format_sum<'a>(terms: impl IntoIterator<Item = (i64, &'a str)>) -> String {
    let mut out = String::new();
    for (c, w) in terms {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let body = if w.is_empty() {
            mag.to_string()
        } else if mag == 1 {
            w.to_string()
        } else {
            format!("{mag}*{w}")
        };
        match (out.is_empty(), c < 0) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body)
            }
            (false, false) => write!(out, " + {body}").unwrap(),
            (false, true) => write!(out, " - {body}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_algebra(file: &AlgebraFile) -> String {
    let q = &file.presentation.quiver;
    let mut out = String::new();
    writeln!(out, "field {}", file.field.modulus()).unwrap();
    writeln!(out, "vertices {}", q.num_vertices()).unwrap();
    for a in q.arrows() {
        writeln!(out, "arrow {}: {} -> {}", a.name, a.source + 1, a.target + 1).unwrap();
    }
    if file.presentation.max_len != DEFAULT_MAX_LEN {
        writeln!(out, "max-length {}", file.presentation.max_len).unwrap();
    }
    if !file.presentation.relations.is_empty() {
        out.push_str("relations\n");
        for r in &file.presentation.relations {
            let names: Vec<(i64, String)> = r.terms().iter().map(|(c, p)| (*c, q.path_name(p))).collect();
            writeln!(out, "{} = 0", format_sum(names.iter().map(|(c, s)| (*c, s.as_str())))).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{lambda_presentation, paper_presentation, preprojective_presentation, DynkinType};

    const A4: &str = "\
field 101
vertices 4
arrow x1: 1 -> 2
arrow y1: 1 -> 2
arrow x2: 2 -> 3
arrow y2: 2 -> 3
arrow x3: 3 -> 4
arrow y3: 3 -> 4
relations
x1*x2 = 0   # x squared
y1*y2 = 0
x2*x3 = 0
y2*y3 = 0
";

    #[test]
    fn parses_the_four_vertex_algebra() {
        let file = parse_algebra(A4).unwrap();
        assert_eq!(file.build().unwrap().dim(), 16);
        let fixture = paper_presentation(4).unwrap();
        assert_eq!(file.presentation.quiver, fixture.quiver);
        assert_eq!(file.presentation.relations, fixture.relations);
    }

    #[test]
    fn round_trips() {
        let f = PrimeField::new(101).unwrap();
        let presentations = [
            paper_presentation(4).unwrap(),
            lambda_presentation(4).unwrap(),
            preprojective_presentation(DynkinType::D(4)).unwrap(),
        ];
        for p in presentations {
            let file = AlgebraFile { field: f, presentation: p };
            let text = print_algebra(&file);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(print_algebra(&back), text);
        }
    }

    #[test]
    fn equations_between_paths() {
        let text = "field 7\nvertices 2\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 2 -> 1\nrelations\na*c = b*c\nc*a = 0\nc*b = 0\n";
        let file = parse_algebra(text).unwrap();
        assert_eq!(file.presentation.relations[0].terms(), &[(1, vec![0, 2]), (-1, vec![1, 2])]);
        assert!(file.build().is_ok());
    }

    #[test]
    fn reports_errors_distinctly() {
        let endpoint = "field 101\nvertices 4\narrow x: 1 -> 9\n";
        assert!(matches!(parse_algebra(endpoint), Err(Error::Semantic(m)) if m.starts_with("3:")));
        let inhomogeneous = "field 101\nvertices 2\narrow x: 1 -> 2\narrow y: 2 -> 2\nrelations\nx + x*y = 0\n";
        assert!(matches!(parse_algebra(inhomogeneous), Err(Error::InhomogeneousRelation(_))));
        let unknown = "field 101\nvertices 2\narrow x: 1 -> 2\nrelations\nx*z = 0\n";
        assert!(matches!(parse_algebra(unknown), Err(Error::Semantic(m)) if m.starts_with("5:1")));
        let syntax = "field 101\nvertices 2\narrow x: 1 -> 2\nrelations\nx * = 0\n";
        assert!(matches!(parse_algebra(syntax), Err(Error::Parse { line: 5, col: 5, .. })));
        assert!(matches!(parse_algebra("field 100\nvertices 1\n"), Err(Error::Semantic(_))));
        assert!(matches!(parse_algebra("colour blue\n"), Err(Error::Parse { line: 1, col: 1, .. })));
    }
}
