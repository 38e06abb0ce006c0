//! Command implementations behind the `dialg` binary. Each returns its
//! report and exit code instead of printing, so tests can call them directly.

use std::fmt::Write as _;
use std::path::Path;

use dialg_core::algebra::{parse_dialgebra, serialize_algebra, serialize_dialgebra, Dialgebra};
use dialg_core::classify::{are_isomorphic, census, classify_dim2, fingerprint};
use dialg_core::constructions::{leibniz_bracket, opposite, quotient};
use dialg_core::exactlin::{Mat, Scalar, Subspace, Vector};
use dialg_core::identities::check_dialgebra;
use dialg_core::structure::{annihilators, Search, DEFAULT_SEARCH_BOUND};
use dialg_core::Error;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const SEARCH_BOUND_VAR: &str = "DIALG_SEARCH_BOUND";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub report: String,
}

impl CommandResult {
    fn ok(report: String) -> Self {
        CommandResult { exit_code: EXIT_OK, report }
    }

    fn fail(report: String) -> Self {
        CommandResult { exit_code: EXIT_FAIL, report }
    }

    fn input(report: String) -> Self {
        CommandResult { exit_code: EXIT_INPUT, report }
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDialgebra
            | Error::NotAssociative
            | Error::NotIdeal
            | Error::NotDerivation
            | Error::DerivationNotSquareZero
            | Error::NotZeroCubed => CommandResult::fail(format!("error: {e}\n")),
            _ => CommandResult::input(format!("error: {e}\n")),
        }
    }
}

/// The exhaustive-search budget: `DIALG_SEARCH_BOUND` if set, else the default.
pub fn search_bound() -> Result<u64, String> {
    match std::env::var(SEARCH_BOUND_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{SEARCH_BOUND_VAR} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_SEARCH_BOUND),
    }
}

fn load(path: &Path) -> Result<Dialgebra, CommandResult> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CommandResult::input(format!("error: {}: {e}\n", path.display())))?;
    parse_dialgebra(&text)
        .map_err(|e| CommandResult::input(format!("error: {}: {e}\n", path.display())))
}

macro_rules! load_or_return {
    ($path:expr) => {
        match load($path) {
            Ok(d) => d,
            Err(r) => return r,
        }
    };
}

fn matrix_rows(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::to_string).collect())
        .collect()
}

pub fn cmd_check(path: &Path) -> CommandResult {
    let d = load_or_return!(path);
    let violations = check_dialgebra(&d);
    if violations.is_empty() {
        return CommandResult::ok("PASS\n".into());
    }
    let mut out = format!("FAIL: {} violation(s)\n", violations.len());
    for v in &violations {
        let (i, j, k) = v.witness;
        let _ = writeln!(
            out,
            "{} ({}, {}, {}) residual {}",
            v.law.name(),
            d.basis_label(i),
            d.basis_label(j),
            d.basis_label(k),
            v.residual
        );
    }
    CommandResult::fail(out)
}

pub fn cmd_info(path: &Path, as_json: bool) -> CommandResult {
    let d = load_or_return!(path);
    let fp = fingerprint(&d);
    let ann = annihilators(&d).dims();
    if as_json {
        let v = json!({
            "field": d.field().to_string(),
            "dim": d.dim(),
            "dim_left_square": fp.dim_left_square,
            "dim_right_square": fp.dim_right_square,
            "rann_left": ann[0],
            "lann_left": ann[1],
            "rann_right": ann[2],
            "lann_right": ann[3],
            "ann": ann[4],
            "products_equal": fp.products_equal,
            "has_bar_unit": fp.has_bar_unit,
        });
        return CommandResult::ok(format!("{v}\n"));
    }
    let mut out = String::new();
    let _ = writeln!(out, "field            {}", d.field());
    let _ = writeln!(out, "dim              {}", d.dim());
    let _ = writeln!(out, "dim A⊣A          {}", fp.dim_left_square);
    let _ = writeln!(out, "dim A⊢A          {}", fp.dim_right_square);
    for (name, v) in ["Rann⊣", "Lann⊣", "Rann⊢", "Lann⊢", "Ann"].iter().zip(ann) {
        let _ = writeln!(out, "dim {name:<13}{v}");
    }
    let _ = writeln!(out, "products equal   {}", fp.products_equal);
    let _ = writeln!(out, "bar-unit         {}", fp.has_bar_unit);
    CommandResult::ok(out)
}

pub fn cmd_classify2(path: &Path, as_json: bool) -> CommandResult {
    let d = load_or_return!(path);
    let label = match classify_dim2(&d) {
        Ok(l) => l,
        Err(e) => return e.into(),
    };
    if as_json {
        let v = json!({
            "label": label.kind.to_string(),
            "witness": matrix_rows(&label.witness),
        });
        return CommandResult::ok(format!("{v}\n"));
    }
    CommandResult::ok(format!("{}\nwitness\n{}\n", label.kind, label.witness))
}

pub fn cmd_iso(a: &Path, b: &Path, bound: u64) -> CommandResult {
    let da = load_or_return!(a);
    let db = load_or_return!(b);
    match are_isomorphic(&da, &db, bound) {
        Ok(Search::Found(t)) => CommandResult::ok(format!("ISOMORPHIC\n{t}\n")),
        Ok(Search::NotFound) => CommandResult::fail("NOT ISOMORPHIC\n".into()),
        Ok(Search::Unsupported(why)) => CommandResult::input(format!("UNSUPPORTED: {why}\n")),
        Err(e) => e.into(),
    }
}

fn residues(d: &Dialgebra, left: bool) -> Vec<serde_json::Value> {
    let p = if left { d.left() } else { d.right() };
    p.entries()
        .iter()
        .map(|s| json!(s.residue().expect("census runs over GF(p)")))
        .collect()
}

/// One JSON object per isomorphism class, in representative order.
pub fn cmd_census(prime: u64, dim: usize) -> CommandResult {
    let c = match census(prime, dim) {
        Ok(c) => c,
        Err(e) => return e.into(),
    };
    let mut out = String::new();
    for class in &c.classes {
        let rep = &class.representative;
        let v = json!({
            "field": c.field.to_string(),
            "dim": dim,
            "label": class.label.kind.to_string(),
            "orbit_size": class.orbit_size(),
            "left": residues(rep, true),
            "right": residues(rep, false),
        });
        let _ = writeln!(out, "{v}");
    }
    CommandResult::ok(out)
}

pub fn cmd_leibniz(path: &Path) -> CommandResult {
    let d = load_or_return!(path);
    match leibniz_bracket(&d) {
        Ok(a) => CommandResult::ok(serialize_algebra(&a)),
        Err(e) => e.into(),
    }
}

pub fn cmd_op(path: &Path) -> CommandResult {
    let d = load_or_return!(path);
    CommandResult::ok(serialize_dialgebra(&opposite(&d)))
}

/// Parses `v1;v2;...` with comma-separated coordinates.
pub fn parse_ideal(d: &Dialgebra, spec: &str) -> Result<Subspace, Error> {
    let mut vectors = Vec::new();
    for part in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let coords = part
            .split(',')
            .map(|t| Scalar::parse(d.field(), t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != d.dim() {
            return Err(Error::DimensionMismatch { expected: d.dim(), found: coords.len() });
        }
        vectors.push(Vector::new(d.field(), coords)?);
    }
    Subspace::span(d.field(), d.dim(), &vectors)
}

pub fn cmd_quotient(path: &Path, ideal: &str) -> CommandResult {
    let d = load_or_return!(path);
    let result = parse_ideal(&d, ideal).and_then(|u| quotient(&d, &u));
    match result {
        Ok((q, _)) => CommandResult::ok(serialize_dialgebra(&q)),
        Err(e) => e.into(),
    }
}
