//! The line-oriented `dialg 1` text format.
//!
//! ```text
//! dialg 1
//! field prime 7          # or: field rational
//! dim 2
//! basis r s              # optional
//! left 2 2 2 1           # γ⊣[2][2][2] = 1, indices 1-based
//! right 2 1 1 1
//! ```
//!
//! Omitted structure constants are zero. Single-product algebras use the
//! same format with `left` lines only.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Algebra, BilinearProduct, Dialgebra, ProductTag};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar};

const MAX_DIM: usize = 16;

struct Parsed {
    left: BilinearProduct,
    right: BilinearProduct,
    names: Option<Vec<String>>,
}

pub fn parse_dialgebra(text: &str) -> Result<Dialgebra> {
    let p = parse(text, true)?;
    let mut d = Dialgebra::new(p.left, p.right)?;
    d.basis_names = p.names;
    Ok(d)
}

/// Reads a single-product algebra; `right` lines are rejected.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let p = parse(text, false)?;
    Ok(Algebra {
        product: p.left,
        basis_names: p.names,
    })
}

fn parse(text: &str, allow_right: bool) -> Result<Parsed> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty input, expected `dialg 1`"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["dialg", "1"] {
        return Err(Error::parse(ln, format!("expected `dialg 1`, found `{header}`")));
    }

    let (ln, field_line) = lines
        .next()
        .ok_or_else(|| Error::parse(ln + 1, "missing `field` line"))?;
    let field = parse_field(ln, field_line)?;

    let (ln, dim_line) = lines
        .next()
        .ok_or_else(|| Error::parse(ln + 1, "missing `dim` line"))?;
    let dim = parse_dim(ln, dim_line)?;

    let mut left = BilinearProduct::zero(field, dim);
    let mut right = BilinearProduct::zero(field, dim);
    let mut names = None;
    let mut seen = HashSet::new();
    let mut products_started = false;

    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "basis" => {
                if names.is_some() {
                    return Err(Error::parse(ln, "duplicate `basis` line"));
                }
                if products_started {
                    return Err(Error::parse(ln, "`basis` must precede product lines"));
                }
                names = Some(parse_basis(ln, &toks[1..], dim)?);
            }
            kw @ ("left" | "right") => {
                let tag = if kw == "left" {
                    ProductTag::Left
                } else {
                    ProductTag::Right
                };
                if tag == ProductTag::Right && !allow_right {
                    return Err(Error::parse(ln, "`right` line in a single-product algebra"));
                }
                products_started = true;
                if toks.len() != 5 {
                    return Err(Error::parse(ln, format!("expected `{kw} <i> <j> <k> <c>`")));
                }
                let mut idx = [0usize; 3];
                for (slot, tok) in idx.iter_mut().zip(&toks[1..4]) {
                    *slot = parse_index(ln, tok, dim)?;
                }
                let c = parse_coefficient(ln, toks[4], field)?;
                if !seen.insert((tag, idx)) {
                    return Err(Error::parse(
                        ln,
                        format!(
                            "duplicate entry {kw} {} {} {}",
                            idx[0] + 1,
                            idx[1] + 1,
                            idx[2] + 1
                        ),
                    ));
                }
                let target = match tag {
                    ProductTag::Left => &mut left,
                    ProductTag::Right => &mut right,
                };
                target.set(idx[0], idx[1], idx[2], c);
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        }
    }
    Ok(Parsed { left, right, names })
}

fn parse_field(ln: usize, line: &str) -> Result<FieldSpec> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    match toks.as_slice() {
        ["field", "rational"] => Ok(FieldSpec::rationals()),
        ["field", "prime", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::parse(ln, format!("invalid prime `{p}`")))?;
            FieldSpec::prime(p).map_err(|e| Error::parse(ln, e.to_string()))
        }
        _ => Err(Error::parse(
            ln,
            format!("expected `field rational` or `field prime <p>`, found `{line}`"),
        )),
    }
}

fn parse_dim(ln: usize, line: &str) -> Result<usize> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let ["dim", n] = toks.as_slice() else {
        return Err(Error::parse(ln, format!("expected `dim <n>`, found `{line}`")));
    };
    let n: usize = n
        .parse()
        .map_err(|_| Error::parse(ln, format!("invalid dimension `{n}`")))?;
    if !(1..=MAX_DIM).contains(&n) {
        return Err(Error::parse(ln, format!("dimension {n} outside 1..={MAX_DIM}")));
    }
    Ok(n)
}

fn parse_basis(ln: usize, toks: &[&str], dim: usize) -> Result<Vec<String>> {
    if toks.len() != dim {
        return Err(Error::parse(
            ln,
            format!("expected {dim} basis names, found {}", toks.len()),
        ));
    }
    let mut seen = HashSet::new();
    for t in toks {
        let ok = t.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && t.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
        if !ok {
            return Err(Error::parse(ln, format!("invalid basis name `{t}`")));
        }
        if !seen.insert(*t) {
            return Err(Error::parse(ln, format!("repeated basis name `{t}`")));
        }
    }
    Ok(toks.iter().map(|s| s.to_string()).collect())
}

fn parse_index(ln: usize, tok: &str, dim: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| Error::parse(ln, format!("invalid index `{tok}`")))?;
    if !(1..=dim).contains(&i) {
        return Err(Error::parse(ln, format!("index {i} out of range [1, {dim}]")));
    }
    Ok(i - 1)
}

fn parse_coefficient(ln: usize, tok: &str, field: FieldSpec) -> Result<Scalar> {
    Scalar::parse(field, tok).map_err(|e| match e {
        Error::InvalidScalar(_) => Error::parse(ln, format!("invalid coefficient `{tok}`")),
        other => Error::parse(ln, other.to_string()),
    })
}

fn write_header(out: &mut String, field: FieldSpec, dim: usize, names: Option<&[String]>) {
    out.push_str("dialg 1\n");
    match field.modulus() {
        None => out.push_str("field rational\n"),
        Some(p) => {
            let _ = writeln!(out, "field prime {p}");
        }
    }
    let _ = writeln!(out, "dim {dim}");
    if let Some(names) = names {
        let _ = writeln!(out, "basis {}", names.join(" "));
    }
}

fn write_product(out: &mut String, kw: &str, p: &BilinearProduct) {
    let n = p.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = p.get(i, j, k);
                if !c.is_zero() {
                    let _ = writeln!(out, "{kw} {} {} {} {c}", i + 1, j + 1, k + 1);
                }
            }
        }
    }
}

pub fn serialize_dialgebra(d: &Dialgebra) -> String {
    let mut out = String::new();
    write_header(&mut out, d.field(), d.dim(), d.basis_names.as_deref());
    write_product(&mut out, "left", d.left());
    write_product(&mut out, "right", d.right());
    out
}

pub fn serialize_algebra(a: &Algebra) -> String {
    let mut out = String::new();
    write_header(&mut out, a.field(), a.dim(), a.basis_names.as_deref());
    write_product(&mut out, "left", &a.product);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALGEBRA_I: &str = "\
dialg 1
field rational
dim 2
basis r s
left 2 2 2 1
right 2 1 1 1   # s ⊢ r = r
right 2 2 2 1
";

    fn err_line(text: &str) -> usize {
        match parse_dialgebra(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_algebra_i() {
        let d = parse_dialgebra(ALGEBRA_I).unwrap();
        let f = FieldSpec::rationals();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.basis_names.as_deref().unwrap(), ["r", "s"]);
        let mut nonzero = Vec::new();
        for tag in ProductTag::BOTH {
            for (idx, c) in d.product(tag).entries().iter().enumerate() {
                if !c.is_zero() {
                    assert_eq!(*c, f.one());
                    nonzero.push((tag, idx / 4, (idx / 2) % 2, idx % 2));
                }
            }
        }
        assert_eq!(
            nonzero,
            [
                (ProductTag::Left, 1, 1, 1),
                (ProductTag::Right, 1, 0, 0),
                (ProductTag::Right, 1, 1, 1)
            ]
        );
    }

    #[test]
    fn empty_products_give_trivial() {
        let d = parse_dialgebra("dialg 1\nfield prime 3\ndim 2\n").unwrap();
        assert_eq!(d, Dialgebra::trivial(FieldSpec::prime(3).unwrap(), 2));
    }

    #[test]
    fn index_out_of_range() {
        let text = "dialg 1\nfield rational\ndim 2\nleft 1 3 1 1\n";
        assert_eq!(err_line(text), 4);
    }

    #[test]
    fn coefficient_not_in_field() {
        assert_eq!(err_line("dialg 1\nfield prime 2\ndim 1\nleft 1 1 1 1/2\n"), 4);
        // Invertible denominators are fine in odd characteristic.
        let d = parse_dialgebra("dialg 1\nfield prime 3\ndim 1\nleft 1 1 1 1/2\n").unwrap();
        assert_eq!(d.left().get(0, 0, 0).residue(), Some(2));
    }

    #[test]
    fn duplicate_entry_and_bad_prime() {
        assert_eq!(
            err_line("dialg 1\nfield rational\ndim 2\nleft 1 1 1 1\n\nleft 1 1 1 2\n"),
            6
        );
        assert_eq!(err_line("dialg 1\nfield prime 4\ndim 2\n"), 2);
    }

    #[test]
    fn malformed_header_lines() {
        assert_eq!(err_line("dialg 2\n"), 1);
        assert_eq!(err_line("# c\ndialg 1\nfield rational\ndim two\n"), 4);
        assert_eq!(err_line("dialg 1\nfield rational\ndim 17\n"), 3);
        assert_eq!(err_line("dialg 1\nfield rational\ndim 0\n"), 3);
        assert_eq!(err_line("dialg 1\nfield rational\n"), 3);
        assert_eq!(err_line("dialg 1\nfield rational\ndim 2\nbasis r\n"), 4);
        assert_eq!(err_line("dialg 1\nfield rational\ndim 2\nleft 1 1 1\n"), 4);
        assert_eq!(err_line("dialg 1\nfield rational\ndim 2\nmiddle 1 1 1 1\n"), 4);
    }

    #[test]
    fn algebra_variant_rejects_right() {
        let err = parse_algebra(ALGEBRA_I).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 6, .. }));
        let a = parse_algebra("dialg 1\nfield rational\ndim 1\nleft 1 1 1 -3/6\n").unwrap();
        assert_eq!(serialize_algebra(&a), "dialg 1\nfield rational\ndim 1\nleft 1 1 1 -1/2\n");
    }

    #[test]
    fn serialize_is_canonical() {
        let d = parse_dialgebra(ALGEBRA_I).unwrap();
        let text = serialize_dialgebra(&d);
        assert_eq!(
            text,
            "dialg 1\nfield rational\ndim 2\nbasis r s\nleft 2 2 2 1\nright 2 1 1 1\nright 2 2 2 1\n"
        );
        assert_eq!(parse_dialgebra(&text).unwrap(), d);
    }
}
