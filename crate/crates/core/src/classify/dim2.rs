//! Two-dimensional dialgebras: the parametric tables with a one-dimensional
//! annihilator and the reduction to the canonical forms.

use std::fmt;

use crate::algebra::{BilinearProduct, Dialgebra};
use crate::classify::canonical;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar, Vector};
use crate::identities::is_dialgebra;
use crate::structure::{annihilators, is_cube_zero, two_sided_annihilator};

/// `r⊣s = x1 r`, `s⊣s = x2 r + x3 s`, `s⊢r = x4 r`, `s⊢s = x5 r + x6 s`,
/// every other product of `{r, s}` zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTable {
    pub x: [Scalar; 6],
}

impl ParamTable {
    pub fn new(x: [Scalar; 6]) -> Self {
        let f = x[0].field();
        assert!(x.iter().all(|v| v.field() == f), "mixed fields");
        ParamTable { x }
    }

    pub fn from_ints(field: FieldSpec, x: [i64; 6]) -> Self {
        ParamTable::new(x.map(|v| field.int(v)))
    }

    pub fn field(&self) -> FieldSpec {
        self.x[0].field()
    }

    pub fn to_dialgebra(&self) -> Dialgebra {
        let f = self.field();
        let [x1, x2, x3, x4, x5, x6] = self.x.clone();
        let (r, s) = (0, 1);
        let mut left = BilinearProduct::zero(f, 2);
        left.set(r, s, r, x1);
        left.set(s, s, r, x2);
        left.set(s, s, s, x3);
        let mut right = BilinearProduct::zero(f, 2);
        right.set(s, r, r, x4);
        right.set(s, s, r, x5);
        right.set(s, s, s, x6);
        Dialgebra::new(left, right).expect("same shape").with_names(&["r", "s"])
    }

    /// Reads a table back; `None` if some product outside the pattern is nonzero.
    pub fn from_dialgebra(d: &Dialgebra) -> Option<ParamTable> {
        if d.dim() != 2 {
            return None;
        }
        let (r, s) = (0, 1);
        let (l, rt) = (d.left(), d.right());
        let x = [
            l.get(r, s, r).clone(),
            l.get(s, s, r).clone(),
            l.get(s, s, s).clone(),
            rt.get(s, r, r).clone(),
            rt.get(s, s, r).clone(),
            rt.get(s, s, s).clone(),
        ];
        let t = ParamTable { x };
        t.to_dialgebra().same_tables(d).then_some(t)
    }
}

/// The polynomial system obtained by imposing associativity and the three
/// axioms on a [`ParamTable`]; the table is a dialgebra iff all vanish.
pub fn dim2_constraints(t: &ParamTable) -> Vec<Scalar> {
    let [x1, x2, x3, x4, x5, x6] = &t.x;
    vec![
        x1 * x2,
        x4 * x5,
        x1 * &(x1 - x3),
        x4 * &(x3 - x4),
        x1 * &(x1 - x6),
        x2 * &(&(x1 + x3) - x6),
        &(&(&(x1 * x5) + &(x2 * x6)) - &(x2 * x4)) - &(x3 * x5),
        x3 * &(x3 - x6),
        x4 * &(x4 - x6),
        x6 * &(x3 - x6),
        x5 * &(&(x3 - x4) - x6),
    ]
}

/// In dimension two a zero-cubed product is either zero or `s·s = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroCubedType {
    Trivial,
    SquareType,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// Both products zero.
    TrivialBoth,
    /// Equal products; the table is that of an associative algebra.
    FromAssociative,
    /// `⊣ = 0`, `⊢` zero-cubed.
    ZeroCubedLeftZero(ZeroCubedType),
    /// `⊢ = 0`, `⊣` zero-cubed.
    ZeroCubedRightZero(ZeroCubedType),
    I,
    II(Scalar),
    III,
    IV,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::TrivialBoth => write!(f, "TrivialBoth"),
            ClassKind::FromAssociative => write!(f, "FromAssociative"),
            ClassKind::ZeroCubedLeftZero(t) => write!(f, "ZeroCubedLeftZero({t:?})"),
            ClassKind::ZeroCubedRightZero(t) => write!(f, "ZeroCubedRightZero({t:?})"),
            ClassKind::I => write!(f, "I"),
            ClassKind::II(k) => write!(f, "II({k})"),
            ClassKind::III => write!(f, "III"),
            ClassKind::IV => write!(f, "IV"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    pub kind: ClassKind,
    /// Invertible; `input.transport(&witness)` equals `canonical`.
    pub witness: Mat,
    /// The normal form. For [`ClassKind::FromAssociative`] this is the input
    /// table itself.
    pub canonical: Dialgebra,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// Change of basis sending `columns` (in input coordinates) to `e1, e2`.
fn witness_for(field: FieldSpec, columns: &[Vector]) -> Result<Mat> {
    Mat::from_columns(field, 2, columns)?.inverse()
}

/// For a nonzero cube-zero product in dimension two: `s` outside the
/// annihilator, `r = s·s`. Returns the witness onto `s·s = r`.
fn square_type_witness(p: &BilinearProduct) -> Result<Mat> {
    let field = p.field();
    let z = two_sided_annihilator(p);
    let [c] = z.non_pivots()[..] else {
        return Err(Error::Internal(format!(
            "cube-zero product with annihilator of dimension {}",
            z.dim()
        )));
    };
    let s = Vector::unit(field, 2, c);
    let r = p.mul_unchecked(&s, &s);
    witness_for(field, &[r, s])
}

fn finish(d: &Dialgebra, kind: ClassKind, witness: Mat, canonical: Dialgebra) -> Result<ClassLabel> {
    if !d.transport(&witness)?.same_tables(&canonical) {
        return Err(Error::Internal(format!(
            "witness for {kind} does not reproduce the canonical table"
        )));
    }
    Ok(ClassLabel { kind, witness, canonical })
}

/// Classifies a two-dimensional dialgebra.
///
/// Order of the checks: both products zero, then equal products (a nonzero
/// zero-cubed common product is reported as `II(1)`), then one product
/// zero, then the case tree on the parametric table.
pub fn classify_dim2(d: &Dialgebra) -> Result<ClassLabel> {
    if d.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: d.dim() });
    }
    if !is_dialgebra(d) {
        return Err(Error::NotDialgebra);
    }
    let field = d.field();
    let id = Mat::identity(field, 2);
    let (l, r) = (d.left(), d.right());

    if l.is_zero() && r.is_zero() {
        return finish(d, ClassKind::TrivialBoth, id, Dialgebra::trivial(field, 2));
    }
    if d.products_equal() {
        if is_cube_zero(l) {
            let w = square_type_witness(l)?;
            return finish(d, ClassKind::II(field.one()), w, canonical::algebra_ii(field.one()));
        }
        let mut same = d.clone();
        same.basis_names = None;
        return finish(d, ClassKind::FromAssociative, id, same);
    }
    if l.is_zero() {
        let w = square_type_witness(r)?;
        let kind = ClassKind::ZeroCubedLeftZero(ZeroCubedType::SquareType);
        return finish(d, kind, w, canonical::zero_cubed_left_zero(field));
    }
    if r.is_zero() {
        let w = square_type_witness(l)?;
        let kind = ClassKind::ZeroCubedRightZero(ZeroCubedType::SquareType);
        return finish(d, kind, w, canonical::zero_cubed_right_zero(field));
    }
    classify_generic(d)
}

fn classify_generic(d: &Dialgebra) -> Result<ClassLabel> {
    let field = d.field();
    let ann = annihilators(d).ann;
    if ann.dim() != 1 {
        return Err(Error::Internal(format!(
            "annihilator of dimension {} with distinct nonzero products",
            ann.dim()
        )));
    }
    let r0 = ann.basis_vectors().remove(0);
    let s0 = Vector::unit(field, 2, ann.non_pivots()[0]);
    let to_rs = witness_for(field, &[r0.clone(), s0.clone()])?;
    let Some(t) = ParamTable::from_dialgebra(&d.transport(&to_rs)?) else {
        return Err(Error::Internal("table does not have the parametric shape".into()));
    };
    if dim2_constraints(&t).iter().any(|c| !c.is_zero()) {
        return Err(Error::Internal("parametric table violates the constraints".into()));
    }

    let [x1, x2, x3, x4, x5, x6] = &t.x;
    let zero = field.zero();
    let one = field.one();
    let inv = |v: &Scalar| v.inv().expect("nonzero by case");
    // new r', s' as coordinates in {r, s}
    let (kind, r1, s1) = if x1.is_zero() && !x4.is_zero() {
        let b = inv(x3);
        let a = x2 * &(&b * &b);
        (ClassKind::I, [one.clone(), zero.clone()], [a, b])
    } else if x1.is_zero() && x3.is_zero() && x4.is_zero() && !x2.is_zero() {
        let k = x5.checked_div(x2).expect("x2 nonzero");
        (ClassKind::II(k), [x2.clone(), zero.clone()], [zero.clone(), one.clone()])
    } else if !x1.is_zero() && x2.is_zero() && x4.is_zero() {
        let b = inv(x6);
        let a = x5 * &(&b * &b);
        (ClassKind::III, [one.clone(), zero.clone()], [a, b])
    } else if !x1.is_zero() && !x4.is_zero() && x5.is_zero() {
        (ClassKind::IV, [one.clone(), zero.clone()], [zero.clone(), inv(x1)])
    } else {
        return Err(Error::Internal(format!(
            "parametric table {:?} outside every case",
            t.x.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        )));
    };
    let combine = |c: &[Scalar; 2]| r0.scale(&c[0]).add(&s0.scale(&c[1])).expect("shape");
    let witness = witness_for(field, &[combine(&r1), combine(&s1)])?;
    let canon = match &kind {
        ClassKind::I => canonical::algebra_i(field),
        ClassKind::II(k) => canonical::algebra_ii(k.clone()),
        ClassKind::III => canonical::algebra_iii(field),
        _ => canonical::algebra_iv(field),
    };
    finish(d, kind, witness, canon)
}
