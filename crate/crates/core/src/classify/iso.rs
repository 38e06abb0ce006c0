//! Basis-free invariants, isomorphism search and automorphism groups.

use crate::algebra::{Dialgebra, ProductTag};
use crate::classify::dim2::{classify_dim2, ClassKind};
use crate::error::{Error, Result};
use crate::exactlin::{general_linear_group, Mat};
use crate::identities::bar_units;
use crate::structure::{annihilators, identity_first, Search};

/// Dimensions of canonically defined subspaces plus two basis-free
/// predicates; equal fingerprints are necessary for isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim_left_square: usize,
    pub dim_right_square: usize,
    /// `Rann⊣, Lann⊣, Rann⊢, Lann⊢, Ann`
    pub annihilator_dims: [usize; 5],
    pub products_equal: bool,
    pub has_bar_unit: bool,
}

pub fn fingerprint(d: &Dialgebra) -> Fingerprint {
    Fingerprint {
        dim_left_square: d.product(ProductTag::Left).square().dim(),
        dim_right_square: d.product(ProductTag::Right).square().dim(),
        annihilator_dims: annihilators(d).dims(),
        products_equal: d.products_equal(),
        has_bar_unit: !bar_units(d).is_empty(),
    }
}

fn check_field(a: &Dialgebra, b: &Dialgebra) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    Ok(())
}

fn search_budget(a: &Dialgebra, bound: u64) -> Result<Option<String>> {
    let Some(p) = a.field().modulus() else {
        return Ok(Some("exhaustive search over Q".into()));
    };
    let n = a.dim();
    let cost = (p as u128).saturating_pow((n * n) as u32);
    Ok((cost > bound as u128).then(|| {
        format!("GF({p})^({n}x{n}) candidates exceed search bound {bound}")
    }))
}

/// Exhaustive scan of `GL_n(GF(p))` for a map preserving both products,
/// with no invariant pre-filter; the identity is tried first.
pub fn search_isomorphism(a: &Dialgebra, b: &Dialgebra, bound: u64) -> Result<Search<Mat>> {
    check_field(a, b)?;
    if a.dim() != b.dim() {
        return Ok(Search::NotFound);
    }
    if let Some(why) = search_budget(a, bound)? {
        return Ok(Search::Unsupported(why));
    }
    let mut group = general_linear_group(a.field(), a.dim())?;
    identity_first(&mut group, a.field(), a.dim());
    Ok(search_in(a, b, &group))
}

/// Scans a precomputed list of invertible matrices.
pub fn search_in(a: &Dialgebra, b: &Dialgebra, group: &[Mat]) -> Search<Mat> {
    group
        .iter()
        .find(|t| a.is_homomorphism(t, b))
        .map_or(Search::NotFound, |t| Search::Found(t.clone()))
}

/// An invertible `T` with `T(x∗y) = T(x)∗T(y)` for both products.
///
/// Over GF(p) this is an exhaustive search after a fingerprint check. Over
/// ℚ only dimensions 1 and 2 are decided; dimension 2 goes through
/// [`classify_dim2`] and stays undecided for two non-identical algebras
/// that both come from associative algebras.
pub fn are_isomorphic(a: &Dialgebra, b: &Dialgebra, bound: u64) -> Result<Search<Mat>> {
    check_field(a, b)?;
    if a.dim() != b.dim() {
        return Ok(Search::NotFound);
    }
    let n = a.dim();
    if a.same_tables(b) {
        return Ok(Search::Found(Mat::identity(a.field(), n)));
    }
    if fingerprint(a) != fingerprint(b) {
        return Ok(Search::NotFound);
    }
    if !a.field().is_rational() {
        return search_isomorphism(a, b, bound);
    }
    match n {
        0 => Ok(Search::Found(Mat::identity(a.field(), 0))),
        1 => Ok(rational_dim1(a, b)),
        2 => rational_dim2(a, b),
        _ => Ok(Search::Unsupported(format!(
            "isomorphism over Q in dimension {n}"
        ))),
    }
}

/// In dimension one `e ∗ e = c e`; rescaling `e` by `t` divides every `c` by `t`.
fn rational_dim1(a: &Dialgebra, b: &Dialgebra) -> Search<Mat> {
    let f = a.field();
    let ca = [a.left().get(0, 0, 0), a.right().get(0, 0, 0)];
    let cb = [b.left().get(0, 0, 0), b.right().get(0, 0, 0)];
    let t = ca
        .iter()
        .zip(&cb)
        .find_map(|(x, y)| (!x.is_zero()).then(|| x.checked_div(y)).flatten())
        .unwrap_or_else(|| f.one());
    let mut m = Mat::zeros(f, 1, 1);
    m.set(0, 0, t);
    if m.is_invertible() && a.is_homomorphism(&m, b) {
        Search::Found(m)
    } else {
        Search::NotFound
    }
}

fn rational_dim2(a: &Dialgebra, b: &Dialgebra) -> Result<Search<Mat>> {
    let (Ok(la), Ok(lb)) = (classify_dim2(a), classify_dim2(b)) else {
        return Ok(Search::Unsupported(
            "classification over Q needs valid dialgebras".into(),
        ));
    };
    if la.kind != lb.kind {
        return Ok(Search::NotFound);
    }
    if la.kind == ClassKind::FromAssociative {
        return Ok(Search::Unsupported(
            "isomorphism of associative algebras over Q".into(),
        ));
    }
    // a → canonical → b
    let t = lb.witness.inverse()?.mul(&la.witness)?;
    if !a.is_homomorphism(&t, b) {
        return Err(Error::Internal("composed witness is not an isomorphism".into()));
    }
    Ok(Search::Found(t))
}

/// Every automorphism preserving both products, by exhaustive search over
/// `GL_n(GF(p))`.
pub fn automorphism_group(d: &Dialgebra, bound: u64) -> Result<Vec<Mat>> {
    if let Some(why) = search_budget(d, bound)? {
        return Err(Error::Unsupported(why));
    }
    let group = general_linear_group(d.field(), d.dim())?;
    Ok(group
        .into_iter()
        .filter(|t| d.is_homomorphism(t, d))
        .collect())
}
