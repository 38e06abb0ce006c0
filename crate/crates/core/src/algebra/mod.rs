//! Algebras and dialgebras given by structure constants.
//!
//! A product on `field^n` is stored as the dense tensor `γ[i][j][k]`, the
//! coefficient of `e_k` in `e_i ∗ e_j`. A [`Dialgebra`] carries two such
//! products, `⊣` ([`ProductTag::Left`]) and `⊢` ([`ProductTag::Right`]); it
//! is not required to satisfy the dialgebra axioms, see
//! [`crate::identities::check_dialgebra`].

mod format;

pub use format::{parse_algebra, parse_dialgebra, serialize_algebra, serialize_dialgebra};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar, Subspace, Vector};

/// Which of the two dialgebra products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductTag {
    /// `⊣`
    Left,
    /// `⊢`
    Right,
}

impl ProductTag {
    pub const BOTH: [ProductTag; 2] = [ProductTag::Left, ProductTag::Right];

    pub fn keyword(self) -> &'static str {
        match self {
            ProductTag::Left => "left",
            ProductTag::Right => "right",
        }
    }
}

impl fmt::Display for ProductTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductTag::Left => "⊣",
            ProductTag::Right => "⊢",
        })
    }
}

/// A bilinear map `field^n × field^n → field^n` in structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BilinearProduct {
    field: FieldSpec,
    dim: usize,
    gamma: Vec<Scalar>,
}

impl BilinearProduct {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        BilinearProduct {
            field,
            dim,
            gamma: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Builds a product from a flat `γ` listing in `(i, j, k)` order.
    pub fn from_flat(field: FieldSpec, dim: usize, gamma: Vec<Scalar>) -> Result<Self> {
        if gamma.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: gamma.len(),
            });
        }
        if let Some(bad) = gamma.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(BilinearProduct { field, dim, gamma })
    }

    /// Builds a product from `(i, j, k, c)` entries (0-based), rest zero.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut p = Self::zero(field, dim);
        for &(i, j, k, c) in entries {
            p.set(i, j, k, field.int(c));
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "structure constant from a different field");
        let idx = self.idx(i, j, k);
        self.gamma[idx] = v;
    }

    /// The flat tensor in `(i, j, k)` order.
    pub fn entries(&self) -> &[Scalar] {
        &self.gamma
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Scalar::is_zero)
    }

    /// `e_i ∗ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = self.idx(i, j, 0);
        Vector::from_scalars_unchecked(self.field, self.gamma[start..start + self.dim].to_vec())
    }

    /// Bilinear extension: `Σ x_i y_j γ[i][j][·]`.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        x.check_compatible(self.field, self.dim)?;
        y.check_compatible(self.field, self.dim)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let start = self.idx(i, j, 0);
                out.axpy(&c, &self.gamma[start..start + self.dim]);
            }
        }
        out
    }

    /// `(x, y) ↦ y ∗ x`.
    pub fn swapped(&self) -> BilinearProduct {
        let mut out = Self::zero(self.field, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &BilinearProduct) -> Result<BilinearProduct> {
        self.check_same_shape(other)?;
        Ok(BilinearProduct {
            field: self.field,
            dim: self.dim,
            gamma: self.gamma.iter().zip(&other.gamma).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_same_shape(&self, other: &BilinearProduct) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// The product carried along the linear isomorphism `t`:
    /// `x ∗' y = t((t⁻¹x) ∗ (t⁻¹y))`, so that `t` becomes a homomorphism.
    pub fn transport(&self, t: &Mat, t_inv: &Mat) -> BilinearProduct {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|a| t_inv.column(a)).collect();
        let mut out = Self::zero(self.field, n);
        for a in 0..n {
            for b in 0..n {
                let prod = t
                    .apply(&self.mul_unchecked(&cols[a], &cols[b]))
                    .expect("square transport matrix");
                for (k, c) in prod.into_coords().into_iter().enumerate() {
                    out.gamma[(a * n + b) * n + k] = c;
                }
            }
        }
        out
    }

    /// Whether `t(x ∗ y) = t(x) ∗' t(y)` on all basis pairs, with `∗'` = `target`.
    pub fn is_homomorphism(&self, t: &Mat, target: &BilinearProduct) -> bool {
        if t.cols() != self.dim || t.rows() != target.dim {
            return false;
        }
        let images: Vec<Vector> = (0..self.dim).map(|i| t.column(i)).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let lhs = t.apply(&self.basis_product(i, j)).expect("shape checked");
                lhs == target.mul_unchecked(&images[i], &images[j])
            })
        })
    }

    /// Span of all `u_a ∗ v_b` for basis vectors of `u` and `v`.
    pub fn product_subspace(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        for s in [u, v] {
            if s.field() != self.field {
                return Err(Error::FieldMismatch(self.field, s.field()));
            }
            if s.ambient_dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: s.ambient_dim(),
                });
            }
        }
        let ub = u.basis_vectors();
        let vb = v.basis_vectors();
        let products: Vec<Vector> = ub
            .iter()
            .flat_map(|x| vb.iter().map(move |y| self.mul_unchecked(x, y)))
            .collect();
        Ok(Subspace::span_unchecked(self.field, self.dim, &products))
    }

    /// `A ∗ A`.
    pub fn square(&self) -> Subspace {
        let full = Subspace::full(self.field, self.dim);
        self.product_subspace(&full, &full).expect("own shape")
    }
}

/// A single-product algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub product: BilinearProduct,
    pub basis_names: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(product: BilinearProduct) -> Self {
        Algebra {
            product,
            basis_names: None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.product.field()
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.product.mul(x, y)
    }

    pub fn with_names(mut self, names: &[&str]) -> Self {
        self.basis_names = Some(names.iter().map(|s| s.to_string()).collect());
        self
    }
}

/// Two products `⊣`, `⊢` on a common basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dialgebra {
    left: BilinearProduct,
    right: BilinearProduct,
    pub basis_names: Option<Vec<String>>,
}

impl Dialgebra {
    pub fn new(left: BilinearProduct, right: BilinearProduct) -> Result<Self> {
        left.check_same_shape(&right)?;
        Ok(Dialgebra {
            left,
            right,
            basis_names: None,
        })
    }

    pub fn trivial(field: FieldSpec, dim: usize) -> Self {
        Dialgebra {
            left: BilinearProduct::zero(field, dim),
            right: BilinearProduct::zero(field, dim),
            basis_names: None,
        }
    }

    pub fn with_names(mut self, names: &[&str]) -> Self {
        self.basis_names = Some(names.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn left(&self) -> &BilinearProduct {
        &self.left
    }

    pub fn right(&self) -> &BilinearProduct {
        &self.right
    }

    pub fn product(&self, tag: ProductTag) -> &BilinearProduct {
        match tag {
            ProductTag::Left => &self.left,
            ProductTag::Right => &self.right,
        }
    }

    pub fn product_mut(&mut self, tag: ProductTag) -> &mut BilinearProduct {
        match tag {
            ProductTag::Left => &mut self.left,
            ProductTag::Right => &mut self.right,
        }
    }

    /// `x ⊣ y` or `x ⊢ y`.
    pub fn multiply(&self, tag: ProductTag, x: &Vector, y: &Vector) -> Result<Vector> {
        self.product(tag).mul(x, y)
    }

    pub fn product_subspace(&self, tag: ProductTag, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.product(tag).product_subspace(u, v)
    }

    /// The algebra `(A, ⊣)` or `(A, ⊢)`.
    pub fn as_single(&self, tag: ProductTag) -> Algebra {
        Algebra {
            product: self.product(tag).clone(),
            basis_names: self.basis_names.clone(),
        }
    }

    pub fn products_equal(&self) -> bool {
        self.left == self.right
    }

    /// Structural equality of the two tensors, ignoring basis names.
    pub fn same_tables(&self, other: &Dialgebra) -> bool {
        self.left == other.left && self.right == other.right
    }

    /// Both tensors concatenated; a total-order key for deduplication.
    pub fn tensor_key(&self) -> Vec<Scalar> {
        self.left
            .entries()
            .iter()
            .chain(self.right.entries())
            .cloned()
            .collect()
    }

    /// The dialgebra for which the invertible map `t` is an isomorphism
    /// from `self`. Basis names are dropped.
    pub fn transport(&self, t: &Mat) -> Result<Dialgebra> {
        if t.field() != self.field() {
            return Err(Error::FieldMismatch(self.field(), t.field()));
        }
        if t.rows() != self.dim() || t.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: t.rows().max(t.cols()),
            });
        }
        let t_inv = t.inverse()?;
        Ok(self.transport_with_inverse(t, &t_inv))
    }

    pub(crate) fn transport_with_inverse(&self, t: &Mat, t_inv: &Mat) -> Dialgebra {
        Dialgebra {
            left: self.left.transport(t, t_inv),
            right: self.right.transport(t, t_inv),
            basis_names: None,
        }
    }

    /// Whether `t` preserves both products from `self` to `target`.
    pub fn is_homomorphism(&self, t: &Mat, target: &Dialgebra) -> bool {
        t.field() == self.field()
            && target.field() == self.field()
            && self.left.is_homomorphism(t, &target.left)
            && self.right.is_homomorphism(t, &target.right)
    }

    /// Label of basis vector `i` (0-based): its declared name or `e{i+1}`.
    pub fn basis_label(&self, i: usize) -> String {
        basis_label(self.basis_names.as_deref(), i)
    }
}

pub(crate) fn basis_label(names: Option<&[String]>, i: usize) -> String {
    match names {
        Some(n) => n[i].clone(),
        None => format!("e{}", i + 1),
    }
}
