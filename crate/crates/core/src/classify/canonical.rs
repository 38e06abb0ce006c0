//! The named two-dimensional dialgebras on the basis `{r, s}` (`r = e1`,
//! `s = e2`). Unlisted products are zero.

use crate::algebra::{BilinearProduct, Dialgebra};
use crate::exactlin::{FieldSpec, Scalar};

const R: usize = 0;
const S: usize = 1;

fn build(field: FieldSpec, left: &[(usize, usize, usize, i64)], right: &[(usize, usize, usize, i64)]) -> Dialgebra {
    Dialgebra::new(
        BilinearProduct::from_entries(field, 2, left),
        BilinearProduct::from_entries(field, 2, right),
    )
    .expect("same shape")
    .with_names(&["r", "s"])
}

/// `s⊣s = s`; `s⊢r = r`, `s⊢s = s`.
pub fn algebra_i(field: FieldSpec) -> Dialgebra {
    build(field, &[(S, S, S, 1)], &[(S, R, R, 1), (S, S, S, 1)])
}

/// `s⊣s = r`; `s⊢s = k r`.
pub fn algebra_ii(k: Scalar) -> Dialgebra {
    let field = k.field();
    let mut d = build(field, &[(S, S, R, 1)], &[]);
    d.product_mut(crate::algebra::ProductTag::Right).set(S, S, R, k);
    d
}

/// `r⊣s = r`, `s⊣s = s`; `s⊢s = s`.
pub fn algebra_iii(field: FieldSpec) -> Dialgebra {
    build(field, &[(R, S, R, 1), (S, S, S, 1)], &[(S, S, S, 1)])
}

/// `r⊣s = r`, `s⊣s = s`; `s⊢r = r`, `s⊢s = s`.
pub fn algebra_iv(field: FieldSpec) -> Dialgebra {
    build(
        field,
        &[(R, S, R, 1), (S, S, S, 1)],
        &[(S, R, R, 1), (S, S, S, 1)],
    )
}

/// The zero-cubed product `s·s = r`.
pub fn square_type(field: FieldSpec) -> BilinearProduct {
    BilinearProduct::from_entries(field, 2, &[(S, S, R, 1)])
}

/// `⊣ = 0`, `⊢` = [`square_type`].
pub fn zero_cubed_left_zero(field: FieldSpec) -> Dialgebra {
    build(field, &[], &[(S, S, R, 1)])
}

/// `⊣` = [`square_type`], `⊢ = 0`.
pub fn zero_cubed_right_zero(field: FieldSpec) -> Dialgebra {
    build(field, &[(S, S, R, 1)], &[])
}
