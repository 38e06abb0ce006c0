use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar, Subspace};

/// A coordinate vector over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: FieldSpec, coords: Vec<Scalar>) -> Result<Self> {
        for c in &coords {
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
        }
        Ok(Vector { field, coords })
    }

    pub(crate) fn from_scalars_unchecked(field: FieldSpec, coords: Vec<Scalar>) -> Self {
        Vector { field, coords }
    }

    pub fn from_ints(field: FieldSpec, coords: &[i64]) -> Self {
        Vector {
            field,
            coords: coords.iter().map(|&c| field.int(c)).collect(),
        }
    }

    pub fn zeros(field: FieldSpec, n: usize) -> Self {
        Vector {
            field,
            coords: vec![field.zero(); n],
        }
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.coords[i] = field.one();
        v
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub(crate) fn check_compatible(&self, field: FieldSpec, n: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch(field, self.field));
        }
        if self.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        other.check_compatible(self.field, self.len())?;
        Ok(Vector {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        other.check_compatible(self.field, self.len())?;
        Ok(Vector {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    /// `self += s * other` without allocation for the coordinate list.
    pub(crate) fn axpy(&mut self, s: &Scalar, other: &[Scalar]) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(other) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix. As a linear map it acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for c in row {
                if c.field() != field {
                    return Err(Error::FieldMismatch(field, c.field()));
                }
                data.push(c);
            }
        }
        Ok(Mat {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_vectors(field: FieldSpec, cols: usize, rows: &[Vector]) -> Result<Self> {
        for v in rows {
            v.check_compatible(field, cols)?;
        }
        Ok(Mat {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|v| v.coords.iter().cloned()).collect(),
        })
    }

    /// Convenience constructor from integer literals; panics on ragged input.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Mat {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().map(|&v| field.int(v))).collect(),
        }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_vectors(field, rows, columns)?.transpose())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry from a different field");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::from_scalars_unchecked(self.field, self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::from_scalars_unchecked(
            self.field,
            (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        )
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Mat {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        v.check_compatible(self.field, self.cols)?;
        let mut out = Vector::zeros(self.field, self.rows);
        for (i, o) in out.coords.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v.coords()) {
                if !a.is_zero() && !b.is_zero() {
                    *o = &*o + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Mat) -> Result<Mat> {
        if self.field != below.field {
            return Err(Error::FieldMismatch(self.field, below.field));
        }
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Mat {
            field: self.field,
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form (same shape, zero rows last) and rank.
    pub fn rref(&self) -> (Mat, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    pub(crate) fn rref_with_pivots(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let idx = row * m.cols + c;
                m.data[idx] = &m.data[idx] * &inv;
            }
            let pivot_row: Vec<Scalar> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    if pv.is_zero() {
                        continue;
                    }
                    let idx = r * m.cols + c;
                    m.data[idx] = &m.data[idx] - &(&factor * pv);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vector> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = Vector::unit(self.field, self.cols, free);
                for (i, &p) in pivots.iter().enumerate() {
                    v.coords[p] = -r.get(i, free);
                }
                v
            })
            .collect();
        Subspace::span_unchecked(self.field, self.cols, &basis)
    }

    /// Solves `self · x = rhs`: one particular solution and the direction
    /// space, or `None` when the system is inconsistent.
    pub fn solve_affine(&self, rhs: &Vector) -> Result<Option<(Vector, Subspace)>> {
        rhs.check_compatible(self.field, self.rows)?;
        let aug = Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols + 1,
            data: (0..self.rows)
                .flat_map(|r| {
                    self.row(r)
                        .iter()
                        .cloned()
                        .chain(std::iter::once(rhs.coords[r].clone()))
                })
                .collect(),
        };
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x.coords[p] = r.get(i, self.cols).clone();
        }
        Ok(Some((x, self.kernel())))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.data[r * 2 * n + n + r] = self.field.one();
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots.last().is_some_and(|&c| c >= n) {
            return Err(Error::Singular);
        }
        let mut inv = Mat::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = red.get(r, n + c).clone();
            }
        }
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for Mat {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// Every invertible `n × n` matrix over GF(p), in lexicographic order of
/// their row-major residues.
pub fn general_linear_group(field: FieldSpec, n: usize) -> Result<Vec<Mat>> {
    let p = field
        .modulus()
        .ok_or_else(|| Error::Unsupported("GL_n enumeration over Q".into()))?;
    let total = (p as u128).checked_pow((n * n) as u32);
    if total.is_none_or(|t| t > u32::MAX as u128) {
        return Err(Error::Unsupported(format!("GL_{n}(GF({p})) too large")));
    }
    let elements: Vec<Scalar> = field.elements().expect("prime field").collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; n * n];
    loop {
        let m = Mat {
            field,
            rows: n,
            cols: n,
            data: digits.iter().map(|&d| elements[d].clone()).collect(),
        };
        if m.is_invertible() {
            out.push(m);
        }
        if !increment(&mut digits, p as usize) {
            break;
        }
    }
    Ok(out)
}

/// Odometer increment with the last digit fastest; false on wraparound.
pub(crate) fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// `|GL_n(GF(p))|`, saturating.
pub fn general_linear_order(p: u64, n: usize) -> u64 {
    let pn = (p as u128).saturating_pow(n as u32);
    let mut acc: u128 = 1;
    let mut pk: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(pn.saturating_sub(pk));
        pk = pk.saturating_mul(p as u128);
    }
    acc.min(u64::MAX as u128) as u64
}
