//! Ways of producing dialgebras and derived algebras: from an associative
//! algebra, opposites, zero-cubed triples, square-zero derivations,
//! Leibniz brackets and quotients by ideals.

use crate::algebra::{Algebra, BilinearProduct, Dialgebra, ProductTag};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar, Subspace, Vector};
use crate::identities::{is_associative, is_dialgebra};
use crate::structure::is_ideal;

/// `x ⊣ y := xy =: x ⊢ y`.
pub fn from_associative(a: &Algebra) -> Result<Dialgebra> {
    if !is_associative(&a.product) {
        return Err(Error::NotAssociative);
    }
    let mut d = Dialgebra::new(a.product.clone(), a.product.clone())?;
    d.basis_names = a.basis_names.clone();
    Ok(d)
}

/// `x ⊣' y := y ⊢ x`, `x ⊢' y := y ⊣ x`.
pub fn opposite(d: &Dialgebra) -> Dialgebra {
    let mut op = Dialgebra::new(d.right().swapped(), d.left().swapped()).expect("same shape");
    op.basis_names = d.basis_names.clone();
    op
}

/// A bilinear map `f: X × X → Z`, stored as `f[a][b][c]` = coefficient of
/// `z_c` in `f(x_a, x_b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroCubedTriple {
    field: FieldSpec,
    z_dim: usize,
    x_dim: usize,
    f: Vec<Scalar>,
}

impl ZeroCubedTriple {
    pub fn zero(field: FieldSpec, z_dim: usize, x_dim: usize) -> Self {
        ZeroCubedTriple {
            field,
            z_dim,
            x_dim,
            f: vec![field.zero(); x_dim * x_dim * z_dim],
        }
    }

    /// `f` from a flat `(a, b, c)`-ordered listing.
    pub fn from_flat(field: FieldSpec, z_dim: usize, x_dim: usize, f: Vec<Scalar>) -> Result<Self> {
        if f.len() != x_dim * x_dim * z_dim {
            return Err(Error::DimensionMismatch {
                expected: x_dim * x_dim * z_dim,
                found: f.len(),
            });
        }
        if let Some(bad) = f.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(ZeroCubedTriple {
            field,
            z_dim,
            x_dim,
            f,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn z_dim(&self) -> usize {
        self.z_dim
    }

    pub fn x_dim(&self) -> usize {
        self.x_dim
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.f[(a * self.x_dim + b) * self.z_dim + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        let idx = (a * self.x_dim + b) * self.z_dim + c;
        self.f[idx] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.f
    }

    /// `f(x_a, x_b)` as a vector of `Z`.
    pub fn value(&self, a: usize, b: usize) -> Vector {
        let start = (a * self.x_dim + b) * self.z_dim;
        Vector::new(self.field, self.f[start..start + self.z_dim].to_vec()).expect("own field")
    }

    /// `f(x, y)` for arbitrary `x, y ∈ X`.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.z_dim);
        for (a, xa) in x.coords().iter().enumerate() {
            for (b, yb) in y.coords().iter().enumerate() {
                let c = xa * yb;
                if !c.is_zero() {
                    let start = (a * self.x_dim + b) * self.z_dim;
                    out.axpy(&c, &self.f[start..start + self.z_dim]);
                }
            }
        }
        out
    }

    /// Dimension of the span of all values `f(x_a, x_b)`.
    pub fn image_rank(&self) -> usize {
        let values: Vec<Vector> = (0..self.x_dim)
            .flat_map(|a| (0..self.x_dim).map(move |b| (a, b)))
            .map(|(a, b)| self.value(a, b))
            .collect();
        Subspace::span(self.field, self.z_dim, &values)
            .expect("own shape")
            .dim()
    }
}

/// The algebra `Z ⊕ X` with `(z + x)(z' + x') = f(x, x')`; the first
/// `z_dim` coordinates span `Z`.
pub fn zero_cubed_build(t: &ZeroCubedTriple) -> Algebra {
    let n = t.z_dim + t.x_dim;
    let mut p = BilinearProduct::zero(t.field, n);
    for a in 0..t.x_dim {
        for b in 0..t.x_dim {
            for c in 0..t.z_dim {
                p.set(t.z_dim + a, t.z_dim + b, c, t.get(a, b, c).clone());
            }
        }
    }
    Algebra::new(p)
}

/// A linear map `d` with `d(xy) = d(x)y + x d(y)` and `d∘d = 0`, stored as
/// the matrix whose column `j` is `d(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    matrix: Mat,
}

impl Derivation {
    pub fn new(a: &Algebra, matrix: Mat) -> Result<Self> {
        let n = a.dim();
        if matrix.field() != a.field() {
            return Err(Error::FieldMismatch(a.field(), matrix.field()));
        }
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        let p = &a.product;
        let images: Vec<Vector> = (0..n).map(|j| matrix.column(j)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = matrix.apply(&p.basis_product(i, j))?;
                let e_i = Vector::unit(a.field(), n, i);
                let e_j = Vector::unit(a.field(), n, j);
                let rhs = p.mul(&images[i], &e_j)?.add(&p.mul(&e_i, &images[j])?)?;
                if lhs != rhs {
                    return Err(Error::NotDerivation);
                }
            }
        }
        if !matrix.mul(&matrix)?.is_zero() {
            return Err(Error::DerivationNotSquareZero);
        }
        Ok(Derivation { matrix })
    }

    /// The inner derivation `x ↦ cx − xc`, checked like any other.
    pub fn inner(a: &Algebra, c: &Vector) -> Result<Self> {
        let n = a.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|j| {
                let e_j = Vector::unit(a.field(), n, j);
                a.mul(c, &e_j)?.sub(&a.mul(&e_j, c)?)
            })
            .collect::<Result<_>>()?;
        Self::new(a, Mat::from_columns(a.field(), n, &columns)?)
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }
}

/// `x ⊣ y := x d(y)`, `x ⊢ y := d(x) y`.
pub fn from_differential(a: &Algebra, d: &Derivation) -> Result<Dialgebra> {
    if !is_associative(&a.product) {
        return Err(Error::NotAssociative);
    }
    // Re-validate: a Derivation may have been built against another algebra.
    let d = Derivation::new(a, d.matrix.clone())?;
    let n = a.dim();
    let p = &a.product;
    let mut left = BilinearProduct::zero(a.field(), n);
    let mut right = BilinearProduct::zero(a.field(), n);
    for i in 0..n {
        let e_i = Vector::unit(a.field(), n, i);
        let d_i = d.matrix.column(i);
        for j in 0..n {
            let e_j = Vector::unit(a.field(), n, j);
            let d_j = d.matrix.column(j);
            let l = p.mul(&e_i, &d_j)?;
            let r = p.mul(&d_i, &e_j)?;
            for k in 0..n {
                left.set(i, j, k, l.coords()[k].clone());
                right.set(i, j, k, r.coords()[k].clone());
            }
        }
    }
    let mut out = Dialgebra::new(left, right)?;
    out.basis_names = a.basis_names.clone();
    Ok(out)
}

/// `[x, y] := x ⊣ y − y ⊢ x`; refuses inputs that are not dialgebras.
pub fn leibniz_bracket(d: &Dialgebra) -> Result<Algebra> {
    if !is_dialgebra(d) {
        return Err(Error::NotDialgebra);
    }
    let mut a = Algebra::new(d.left().sub(&d.right().swapped())?);
    a.basis_names = d.basis_names.clone();
    Ok(a)
}

/// `[x, y] := xy − yx`.
pub fn commutator_algebra(a: &Algebra) -> Algebra {
    Algebra {
        product: a.product.sub(&a.product.swapped()).expect("same shape"),
        basis_names: a.basis_names.clone(),
    }
}

/// The quotient `d / ideal` on the unit vectors at the non-pivot positions
/// of the ideal's canonical basis, and the projection onto those
/// coordinates (a `(n − dim ideal) × n` matrix).
pub fn quotient(d: &Dialgebra, ideal: &Subspace) -> Result<(Dialgebra, Mat)> {
    if !is_ideal(d, ideal)? {
        return Err(Error::NotIdeal);
    }
    let n = d.dim();
    let field = d.field();
    let keep = ideal.non_pivots();
    let m = keep.len();
    let project = |v: &Vector| -> Vector {
        let reduced = ideal.reduce(v).expect("checked shape");
        Vector::new(field, keep.iter().map(|&c| reduced.coords()[c].clone()).collect())
            .expect("own field")
    };
    let columns: Vec<Vector> = (0..n).map(|j| project(&Vector::unit(field, n, j))).collect();
    let projection = Mat::from_columns(field, m, &columns)?;

    let mut products = [BilinearProduct::zero(field, m), BilinearProduct::zero(field, m)];
    for (slot, tag) in products.iter_mut().zip(ProductTag::BOTH) {
        let src = d.product(tag);
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate() {
                let v = project(&src.basis_product(ca, cb));
                for (k, c) in v.into_coords().into_iter().enumerate() {
                    slot.set(a, b, k, c);
                }
            }
        }
    }
    let [left, right] = products;
    let mut q = Dialgebra::new(left, right)?;
    if let Some(names) = &d.basis_names {
        q.basis_names = Some(keep.iter().map(|&c| names[c].clone()).collect());
    }
    Ok((q, projection))
}
