//! Linear combinations of `*`-separated words, shared by the algebra and complex formats.

use crate::error::{Error, Result};

/// A term `c · w1*w2*…`; an empty word stands for the bare coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub coeff: i64,
    pub word: Vec<String>,
    /// 1-based column of the first character of the term.
    pub col: usize,
}

pub(crate) fn parse_error(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '^' || c == '\''
}

/// Parses `[±] [c [*]] word {* word} {± …}`. `col0` is the column of `s[0]`.
pub(crate) fn parse_sum(s: &str, line: usize, col0: usize) -> Result<Vec<Term>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let col_at = |k: usize| col0 + s[..chars.get(k).map_or(s.len(), |&(b, _)| b)].chars().count();
    let mut k = 0;
    let skip_ws = |k: &mut usize| {
        while *k < chars.len() && chars[*k].1.is_whitespace() {
            *k += 1;
        }
    };
    let mut terms = Vec::new();
    loop {
        skip_ws(&mut k);
        if k >= chars.len() {
            if terms.is_empty() {
                return Err(parse_error(line, col_at(k), "expected an expression"));
            }
            return Ok(terms);
        }
        let start = k;
        let mut sign = 1;
        if !terms.is_empty() || matches!(chars[k].1, '+' | '-') {
            match chars[k].1 {
                '+' => k += 1,
                '-' => {
                    sign = -1;
                    k += 1
                }
                c => return Err(parse_error(line, col_at(k), format!("expected + or -, found '{c}'"))),
            }
            skip_ws(&mut k);
        }
        let mut coeff: Option<i64> = None;
        if k < chars.len() && chars[k].1.is_ascii_digit() {
            let d0 = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[d0..k].iter().map(|&(_, c)| c).collect();
            // digits glued to letters belong to a name such as `2x`, which is not allowed
            if k < chars.len() && is_word_char(chars[k].1) {
                return Err(parse_error(line, col_at(d0), "names must not start with a digit"));
            }
            coeff = Some(digits.parse().map_err(|_| parse_error(line, col_at(d0), "coefficient out of range"))?);
            skip_ws(&mut k);
            if k < chars.len() && chars[k].1 == '*' {
                k += 1;
                skip_ws(&mut k);
            } else {
                terms.push(Term { coeff: sign * coeff.unwrap(), word: Vec::new(), col: col_at(start) });
                continue;
            }
        }
        let mut word = Vec::new();
        loop {
            skip_ws(&mut k);
            let w0 = k;
            while k < chars.len() && is_word_char(chars[k].1) {
                // `^*` marks a dual basis element and is part of the name
                k += if chars[k].1 == '^' && chars.get(k + 1).is_some_and(|&(_, c)| c == '*') { 2 } else { 1 };
            }
            if k == w0 {
                let msg = match chars.get(k) {
                    Some(&(_, c)) => format!("expected a name, found '{c}'"),
                    None => "expected a name".to_string(),
                };
                return Err(parse_error(line, col_at(k), msg));
            }
            word.push(chars[w0..k].iter().map(|&(_, c)| c).collect());
            skip_ws(&mut k);
            if k < chars.len() && chars[k].1 == '*' {
                k += 1;
            } else {
                break;
            }
        }
        terms.push(Term { coeff: sign * coeff.unwrap_or(1), word, col: col_at(start) });
    }
}

/// Text before a `#` comment.
pub(crate) fn content(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}
