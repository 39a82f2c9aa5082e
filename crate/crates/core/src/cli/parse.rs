//! The space file format.
//!
//! ```text
//! # Λ
//! poset 3
//! 0 < 1
//! 0 < 2
//! ```
//!
//! The header is `poset <n>` followed by cover pairs `i < j` over `0..n`, or
//! the single word `cofinite`. `#` starts a comment; blank lines and spacing
//! are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::order::{FinPoset, MAX_CARRIER};
use crate::space::Space;

fn err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn index(line: usize, tok: &str, n: usize) -> Result<usize> {
    let i: usize = match tok.parse() {
        Ok(i) => i,
        Err(_) => return err(line, format!("expected an element index, found {tok:?}")),
    };
    if i >= n {
        return err(line, format!("index {i} out of range for poset {n}"));
    }
    Ok(i)
}

/// `true` if `to` is reachable from `from` along `edges`.
fn reaches(n: usize, edges: &[(usize, usize)], from: usize, to: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        if std::mem::replace(&mut seen[x], true) {
            continue;
        }
        stack.extend(edges.iter().filter(|e| e.0 == x).map(|e| e.1));
    }
    false
}

pub fn parse_space(text: &str) -> Result<Space> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hl, header)) = lines.next() else {
        return err(1, "empty file: expected `poset <n>` or `cofinite`");
    };
    let words: Vec<&str> = header.split_whitespace().collect();
    let n = match words.as_slice() {
        ["cofinite"] => {
            if let Some((l, _)) = lines.next() {
                return err(l, "unexpected content after `cofinite`");
            }
            return Ok(Space::Cofinite);
        }
        ["poset", n] => match n.parse::<usize>() {
            Ok(n) if n <= MAX_CARRIER => n,
            Ok(n) => return err(hl, format!("poset of {n} points exceeds {MAX_CARRIER}")),
            Err(_) => return err(hl, format!("bad size {n:?}")),
        },
        _ => return err(hl, format!("unknown header {header:?}")),
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (l, body) in lines {
        let Some((a, b)) = body.split_once('<') else {
            return err(l, format!("expected `i < j`, found {body:?}"));
        };
        let (i, j) = (index(l, a.trim(), n)?, index(l, b.trim(), n)?);
        if edges.contains(&(i, j)) {
            return err(l, format!("duplicate pair {i} < {j}"));
        }
        if i == j || reaches(n, &edges, j, i) {
            return err(l, format!("cycle through {i} and {j}"));
        }
        edges.push((i, j));
    }
    Ok(Space::Finite(FinPoset::from_covers(n, &edges)?))
}

pub fn read_space(path: &Path) -> Result<Space> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_space(&text)
}

/// Writes a space in the file format, listing the cover pairs.
pub fn to_space_file(x: &Space) -> String {
    match x {
        Space::Cofinite => "cofinite\n".into(),
        Space::Finite(p) => {
            let mut s = format!("poset {}\n", p.len());
            for (i, j) in p.covers() {
                writeln!(s, "{i} < {j}").expect("string write");
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn finite(text: &str) -> FinPoset {
        match parse_space(text).unwrap() {
            Space::Finite(p) => p,
            Space::Cofinite => panic!("expected a poset"),
        }
    }

    fn line_of(text: &str) -> usize {
        match parse_space(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn lambda_and_singleton() {
        assert!(is_isomorphic(&finite("poset 3\n0 < 1\n0 < 2\n"), &FinPoset::lambda()));
        assert_eq!(finite("poset 1").len(), 1);
        assert_eq!(finite("  # c\n\nposet   2 # two\n0<1").len(), 2);
    }

    #[test]
    fn cofinite_header() {
        assert_eq!(parse_space("# x\ncofinite\n").unwrap(), Space::Cofinite);
        assert_eq!(line_of("cofinite\n0 < 1"), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("poset 2\n0 < 1\n1 < 0\n"), 3);
        assert_eq!(line_of("poset 2\n\n0 < 2\n"), 3);
        assert_eq!(line_of("# c\nlattice 2\n"), 2);
        assert_eq!(line_of("poset 3\n0 < 1\n0 < 1\n"), 3);
        assert_eq!(line_of("poset 2\n1 < 1\n"), 2);
        assert_eq!(line_of("poset 2\n0 1\n"), 2);
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("poset 200"), 1);
    }

    #[test]
    fn transitive_closure_at_load() {
        let p = finite("poset 3\n0 < 1\n1 < 2\n");
        assert!(p.leq(0, 2));
    }

    #[test]
    fn round_trip() {
        for p in crate::generate::posets_up_to(4) {
            let text = to_space_file(&Space::Finite(p.clone()));
            assert!(is_isomorphic(&finite(&text), &p), "{text}");
        }
    }
}
