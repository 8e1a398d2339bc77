//! Text formats for algebras, bimodules and subspace arguments.
//!
//! Algebra files:
//!
//! ```text
//! algebra <name> dim <n> field <q|p>
//! <i> <j> <k> <num[/den]>      one line per nonzero constant, 0-based
//! ```
//!
//! Bimodule files:
//!
//! ```text
//! bimodule <name> over <algebra-name> dim <m>
//! left <i>                     followed by m rows of m entries
//! right <i>                    likewise; omitted blocks are zero
//! ```
//!
//! Row `r` of a `left i` block is the image `e_i · b_r`, and of a `right i`
//! block the image `b_r · e_i`. Blank lines and lines starting with `#` are
//! ignored. Parsers do not check the Leibniz identity or the bimodule
//! axioms; that is `validate`'s job.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::LeibnizAlgebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(line: usize, token: &str, bound: usize, what: &str) -> Result<usize> {
    let i: usize = token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {token:?}")))?;
    if i >= bound {
        return Err(Error::parse(line, format!("{what} {i} out of range 0..{bound}")));
    }
    Ok(i)
}

fn parse_entry(line: usize, field: FieldSpec, token: &str) -> Result<Scalar> {
    field.parse_scalar(token).map_err(|m| Error::parse(line, m))
}

pub fn parse_algebra(text: &str) -> Result<LeibnizAlgebra> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing algebra header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let [kw, name, dim_kw, dim, field_kw, field] = h[..] else {
        return Err(Error::parse(hline, "expected `algebra <name> dim <n> field <q|p>`"));
    };
    if kw != "algebra" || dim_kw != "dim" || field_kw != "field" {
        return Err(Error::parse(hline, "expected `algebra <name> dim <n> field <q|p>`"));
    }
    let n: usize = dim
        .parse()
        .map_err(|_| Error::parse(hline, format!("invalid dimension {dim:?}")))?;
    let field = FieldSpec::parse_token(field).map_err(|e| Error::parse(hline, e.to_string()))?;
    let mut constants: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for (line, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        let [i, j, k, value] = t[..] else {
            return Err(Error::parse(line, "expected `i j k value`"));
        };
        let key = (
            parse_index(line, i, n, "index")?,
            parse_index(line, j, n, "index")?,
            parse_index(line, k, n, "index")?,
        );
        let value = parse_entry(line, field, value)?;
        if constants.insert(key, value).is_some() {
            return Err(Error::parse(
                line,
                format!("duplicate constant ({}, {}, {})", key.0, key.1, key.2),
            ));
        }
    }
    let mut tensor = vec![field.zero(); n * n * n];
    for ((i, j, k), v) in constants {
        tensor[(i * n + j) * n + k] = v;
    }
    LeibnizAlgebra::from_tensor_unchecked(name, field, n, tensor)
        .map_err(|e| Error::parse(hline, e.to_string()))
}

/// Nonzero constants in lexicographic `(i, j, k)` order.
pub fn write_algebra(alg: &LeibnizAlgebra) -> String {
    let n = alg.dim();
    let mut out = format!(
        "algebra {} dim {n} field {}\n",
        alg.name(),
        alg.field().token()
    );
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = alg.constant(i, j, k);
                if !c.is_zero() {
                    writeln!(out, "{i} {j} {k} {c}").expect("writing to a string");
                }
            }
        }
    }
    out
}

/// Reads a bimodule over `algebra`, whose name must match the header.
pub fn parse_bimodule(text: &str, algebra: &Arc<LeibnizAlgebra>) -> Result<Bimodule> {
    let mut lines = content_lines(text).peekable();
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing bimodule header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let [kw, name, over_kw, over, dim_kw, dim] = h[..] else {
        return Err(Error::parse(hline, "expected `bimodule <name> over <algebra> dim <m>`"));
    };
    if kw != "bimodule" || over_kw != "over" || dim_kw != "dim" {
        return Err(Error::parse(hline, "expected `bimodule <name> over <algebra> dim <m>`"));
    }
    if over != algebra.name() {
        return Err(Error::parse(
            hline,
            format!("bimodule is over {over:?}, not {:?}", algebra.name()),
        ));
    }
    let m: usize = dim
        .parse()
        .map_err(|_| Error::parse(hline, format!("invalid dimension {dim:?}")))?;
    let field = algebra.field();
    let n = algebra.dim();
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    while let Some((line, l)) = lines.next() {
        let t: Vec<&str> = l.split_whitespace().collect();
        let [side, index] = t[..] else {
            return Err(Error::parse(line, "expected `left <i>` or `right <i>`"));
        };
        let slot = match side {
            "left" => &mut left,
            "right" => &mut right,
            _ => return Err(Error::parse(line, format!("unknown block {side:?}"))),
        };
        let i = parse_index(line, index, n, "algebra basis index")?;
        if slot[i].is_some() {
            return Err(Error::parse(line, format!("duplicate block `{side} {i}`")));
        }
        let mut rows = Vec::with_capacity(m);
        for r in 0..m {
            let (rline, row) = lines
                .next()
                .ok_or_else(|| Error::parse(line, format!("block `{side} {i}` has {r} of {m} rows")))?;
            let entries: Vec<&str> = row.split_whitespace().collect();
            if entries.len() != m {
                return Err(Error::parse(
                    rline,
                    format!("expected {m} entries, found {}", entries.len()),
                ));
            }
            rows.push(
                entries
                    .iter()
                    .map(|e| parse_entry(rline, field, e))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        slot[i] = Some(Matrix::from_rows(field, m, rows).expect("rows checked"));
    }
    let fill = |v: Vec<Option<Matrix>>| -> Vec<Matrix> {
        v.into_iter()
            .map(|x| x.unwrap_or_else(|| Matrix::zeros(field, m, m)))
            .collect()
    };
    Bimodule::new_unchecked(name, algebra.clone(), m, fill(left), fill(right))
}

/// Nonzero blocks, all `left` blocks before all `right` blocks.
pub fn write_bimodule(v: &Bimodule) -> String {
    let mut out = format!(
        "bimodule {} over {} dim {}\n",
        v.name(),
        v.algebra().name(),
        v.dim()
    );
    for (side, mats) in [("left", v.left_actions()), ("right", v.right_actions())] {
        for (i, m) in mats.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            writeln!(out, "{side} {i}").expect("writing to a string");
            for row in m.row_iter() {
                let entries: Vec<String> = row.iter().map(Scalar::to_string).collect();
                writeln!(out, "{}", entries.join(" ")).expect("writing to a string");
            }
        }
    }
    out
}

/// Span of rows written `"1,0,0; 0,1,0"`. An empty string is the zero
/// subspace. Errors carry the 1-based row number as their line.
pub fn parse_rows(field: FieldSpec, n: usize, text: &str) -> Result<Subspace> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Subspace::zero(field, n));
    }
    let mut rows = Vec::new();
    for (r, row) in text.split(';').enumerate() {
        let entries: Vec<&str> = row.split(',').map(str::trim).collect();
        if entries.len() != n {
            return Err(Error::parse(
                r + 1,
                format!("row has {} entries, expected {n}", entries.len()),
            ));
        }
        rows.push(
            entries
                .iter()
                .map(|e| parse_entry(r + 1, field, e))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Subspace::span(field, n, rows)
}

/// Inverse of [`parse_rows`] on the canonical basis.
pub fn format_rows(s: &Subspace) -> String {
    s.basis()
        .row_iter()
        .map(|row| {
            row.iter()
                .map(Scalar::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn algebra_round_trip() {
        for f in [FieldSpec::prime(5).unwrap(), FieldSpec::rationals()] {
            for e in catalogue::catalogue(f) {
                let text = write_algebra(&e.algebra);
                let back = parse_algebra(&text).unwrap();
                assert_eq!(back, e.algebra);
                assert_eq!(back.name(), e.algebra.name());
                assert_eq!(write_algebra(&back), text);
            }
        }
    }

    #[test]
    fn algebra_parsing() {
        let alg = parse_algebra("# C2\nalgebra c2 dim 2 field 3\n\n0 0 1 1\n").unwrap();
        assert_eq!(alg.constant(0, 0, 1), &alg.field().one());
        let q = parse_algebra("algebra x dim 1 field q\n0 0 0 -3/6\n").unwrap();
        assert_eq!(q.constant(0, 0, 0).to_string(), "-1/2");
        assert_eq!(write_algebra(&q), "algebra x dim 1 field q\n0 0 0 -1/2\n");
    }

    #[test]
    fn algebra_parse_errors_carry_lines() {
        let line = |text: &str| match parse_algebra(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("algebra c2 dim 2 field 4\n"), 1);
        assert_eq!(line("algebra c2 dim two field 3\n"), 1);
        assert_eq!(line("algebra c2 dim 2 field 3\n0 0 1 1\n0 0 1 2\n"), 3);
        assert_eq!(line("algebra c2 dim 2 field 3\n\n0 0 2 1\n"), 3);
        assert_eq!(line("algebra c2 dim 2 field 3\n0 0 1\n"), 2);
        assert_eq!(line("algebra c2 dim 2 field 3\n0 0 1 1/0\n"), 2);
        assert_eq!(line("algebra c2 dim 99 field 3\n"), 1);
    }

    #[test]
    fn bimodule_round_trip() {
        let f = FieldSpec::prime(3).unwrap();
        let sl2 = Arc::new(catalogue::sl2(f).unwrap());
        let ad = Bimodule::adjoint(sl2.clone());
        let text = write_bimodule(&ad);
        let back = parse_bimodule(&text, &sl2).unwrap();
        assert_eq!(back.left_actions(), ad.left_actions());
        assert_eq!(back.right_actions(), ad.right_actions());
        assert_eq!(write_bimodule(&back), text);
    }

    #[test]
    fn bimodule_parsing() {
        let f = FieldSpec::prime(3).unwrap();
        let c2 = Arc::new(catalogue::cyclic_leibniz(f, 2).unwrap());
        let v = parse_bimodule("bimodule t over cyclic_leibniz_2 dim 2\n", &c2).unwrap();
        assert!(v.validate().is_empty());
        assert!(v.left_actions().iter().all(Matrix::is_zero));
        let v = parse_bimodule(
            "bimodule a over cyclic_leibniz_2 dim 2\nleft 0\n0 1\n0 0\n",
            &c2,
        )
        .unwrap();
        assert_eq!(v.left(0), &Matrix::from_ints(f, &[&[0, 1], &[0, 0]]));
        let line = |text: &str| match parse_bimodule(text, &c2) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("bimodule a over other dim 1\n"), 1);
        assert_eq!(line("bimodule a over cyclic_leibniz_2 dim 1\nleft 2\n0\n"), 2);
        assert_eq!(line("bimodule a over cyclic_leibniz_2 dim 2\nleft 0\n0 1\n0\n"), 4);
        assert_eq!(line("bimodule a over cyclic_leibniz_2 dim 1\nleft 0\n1\nleft 0\n1\n"), 4);
        assert_eq!(line("bimodule a over cyclic_leibniz_2 dim 1\nup 0\n"), 2);
    }

    #[test]
    fn rows() {
        let f = FieldSpec::prime(5).unwrap();
        let s = parse_rows(f, 3, "1,0,0; 0, 2, 0").unwrap();
        assert_eq!(s, Subspace::coordinate(f, 3, &[0, 1]));
        assert_eq!(format_rows(&s), "1,0,0; 0,1,0");
        assert_eq!(parse_rows(f, 3, &format_rows(&s)).unwrap(), s);
        assert!(parse_rows(f, 3, " ").unwrap().is_zero());
        assert!(matches!(parse_rows(f, 3, "1,0; 0,1,0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_rows(f, 2, "1,0; 0,x"), Err(Error::Parse { line: 2, .. })));
    }
}
