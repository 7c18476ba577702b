//! Plain-text ideal, graph and complex files.
//!
//! All three share one layout: the first meaningful line is the number of
//! variables (vertices), and every further non-empty line is one item.
//! Lines whose first non-blank character is `#` are comments. Indices are
//! 1-based.
//!
//! * ideal: one generator per line as `var:exp` tokens, e.g. `1:1 2:1`.
//! * graph: one edge per line, `u v`.
//! * complex: one facet per line, its vertices separated by spaces.

use std::collections::HashSet;
use std::fmt::Write as _;

use gotzmann_core::{Graph, Monomial, MonomialIdeal, SimplicialComplex, VertexSet};
use thiserror::Error;

/// A parse failure, tied to a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

/// `(line number, trimmed content)` for every non-blank, non-comment line.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Splits off and parses the header, which must be a positive integer.
fn header<'a>(
    text: &'a str,
    what: &str,
) -> Result<(usize, impl Iterator<Item = (usize, &'a str)>), FormatError> {
    let mut lines = content_lines(text);
    let Some((line, first)) = lines.next() else {
        return fail(1, format!("missing header line with the number of {what}"));
    };
    match first.parse::<usize>() {
        Ok(n) if n > 0 => Ok((n, lines)),
        _ => fail(
            line,
            format!("header must be a positive number of {what}, got `{first}`"),
        ),
    }
}

fn index(token: &str, n: usize, line: usize, what: &str) -> Result<usize, FormatError> {
    match token.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
        Ok(i) => fail(line, format!("{what} {i} outside 1..={n}")),
        Err(_) => fail(line, format!("expected a {what} index, got `{token}`")),
    }
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, FormatError> {
    let (n, lines) = header(text, "variables")?;
    let mut gens = Vec::new();
    for (line, content) in lines {
        let mut exps = vec![0u32; n];
        for token in content.split_whitespace() {
            let Some((var, exp)) = token.split_once(':') else {
                return fail(line, format!("expected `var:exp`, got `{token}`"));
            };
            let v = index(var, n, line, "variable")?;
            let e = match exp.parse::<u32>() {
                Ok(e) if e > 0 => e,
                _ => {
                    return fail(
                        line,
                        format!("exponent must be a positive integer in `{token}`"),
                    )
                }
            };
            if exps[v] != 0 {
                return fail(line, format!("variable {} repeated", v + 1));
            }
            exps[v] = e;
        }
        gens.push((line, Monomial::new(exps)));
    }
    let lines: Vec<usize> = gens.iter().map(|(l, _)| *l).collect();
    MonomialIdeal::new(n, gens.into_iter().map(|(_, m)| m)).map_err(|e| {
        // Generator errors point back at their source line.
        let line = match &e {
            gotzmann_core::IdealError::UnitGenerator { generator }
            | gotzmann_core::IdealError::WrongVariableCount { generator, .. }
            | gotzmann_core::IdealError::WrongDegree { generator, .. } => lines[*generator],
            _ => 1,
        };
        FormatError {
            line,
            message: e.to_string(),
        }
    })
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("{}\n", ideal.num_vars());
    for g in ideal.generators() {
        out.push_str(&monomial_tokens(g));
        out.push('\n');
    }
    out
}

/// `var:exp` tokens of a monomial, space separated.
pub fn monomial_tokens(m: &Monomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate().filter(|(_, e)| **e > 0) {
        if !s.is_empty() {
            s.push(' ');
        }
        let _ = write!(s, "{}:{e}", i + 1);
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let (n, lines) = header(text, "vertices")?;
    if n > gotzmann_core::graphs::MAX_VERTICES {
        return fail(
            1,
            format!(
                "graphs support at most {} vertices",
                gotzmann_core::graphs::MAX_VERTICES
            ),
        );
    }
    let mut seen = HashSet::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return fail(line, format!("expected an edge `u v`, got `{content}`"));
        };
        let (u, v) = (index(u, n, line, "vertex")?, index(v, n, line, "vertex")?);
        if u == v {
            return fail(line, format!("loop at vertex {}", u + 1));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return fail(line, format!("edge {} {} listed twice", u + 1, v + 1));
        }
    }
    Graph::new(n, seen).or_else(|e| fail(1, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    g.to_string()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let (n, lines) = header(text, "vertices")?;
    let mut facets = Vec::new();
    for (line, content) in lines {
        let mut face = VertexSet::EMPTY;
        for token in content.split_whitespace() {
            let v = index(token, n, line, "vertex")?;
            if v >= 64 {
                return fail(line, "complexes support at most 64 vertices");
            }
            face = face.with(v);
        }
        facets.push(face);
    }
    SimplicialComplex::from_faces(n, facets).or_else(|e| fail(1, e.to_string()))
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", c.ground_size());
    for f in c.facets() {
        let vs: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&vs.join(" "));
        out.push('\n');
    }
    out
}
