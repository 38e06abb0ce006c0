use crate::error::{Error, Result};
use crate::exactlin::matrix::increment;
use crate::exactlin::{FieldSpec, Mat, Scalar, Vector};

/// A linear subspace of `field^n`, stored as the nonzero rows of its
/// reduced row echelon basis. Equal subspaces have identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: Mat::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: Mat::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    /// The span of `vectors` inside `field^n`.
    pub fn span(field: FieldSpec, n: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            v.check_compatible(field, n)?;
        }
        Ok(Self::span_unchecked(field, n, vectors))
    }

    pub(crate) fn span_unchecked(field: FieldSpec, n: usize, vectors: &[Vector]) -> Self {
        let m = Mat::from_vectors(field, n, vectors).expect("compatible vectors");
        Self::row_space(&m)
    }

    /// The row space of `m`.
    pub fn row_space(m: &Mat) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let rows: Vec<Vec<Scalar>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Mat::from_rows(m.field(), m.cols(), rows).expect("rref rows"),
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row_vector(i)).collect()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinate positions that are not pivots; the corresponding unit
    /// vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Reduces `w` against the basis: the result vanishes on every pivot
    /// coordinate and differs from `w` by an element of the subspace.
    pub fn reduce(&self, w: &Vector) -> Result<Vector> {
        w.check_compatible(self.field(), self.ambient)?;
        let mut v = w.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = v.coords()[p].clone();
            if !c.is_zero() {
                v.axpy(&-&c, self.basis.row(i));
            }
        }
        Ok(v)
    }

    pub fn contains(&self, w: &Vector) -> Result<bool> {
        Ok(self.reduce(w)?.is_zero())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.stack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        // U ∩ V = (U° + V°)° with ° the solution space of the basis rows.
        let u_perp = self.basis.kernel();
        let v_perp = other.basis.kernel();
        Ok(u_perp.basis.stack(&v_perp.basis)?.kernel())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Every subspace of GF(p)^n, grouped by increasing dimension.
pub fn all_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let p = field
        .modulus()
        .ok_or_else(|| Error::Unsupported("subspace enumeration over Q".into()))?;
    let elements: Vec<Scalar> = field.elements().expect("prime field").collect();
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // Free entries: row i, columns right of its pivot that are not pivots.
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (i, c))
                })
                .collect();
            let mut digits = vec![0usize; free.len()];
            loop {
                let mut m = Mat::zeros(field, k, n);
                for (i, &pc) in pivots.iter().enumerate() {
                    m.set(i, pc, field.one());
                }
                for (&(i, c), &d) in free.iter().zip(&digits) {
                    m.set(i, c, elements[d].clone());
                }
                out.push(Subspace {
                    ambient: n,
                    basis: m,
                    pivots: pivots.clone(),
                });
                if !increment(&mut digits, p as usize) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Number of subspaces of GF(p)^n (sum of Gaussian binomials), saturating.
pub fn subspace_count(p: u64, n: usize) -> u64 {
    // Row k of the q-Pascal triangle: [n, k] = [n-1, k-1] + p^k [n-1, k].
    let mut row: Vec<u128> = vec![1];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for k in 1..m {
            let pk = (p as u128).saturating_pow(k as u32);
            next[k] = row[k - 1].saturating_add(pk.saturating_mul(row[k]));
        }
        row = next;
    }
    row.iter()
        .fold(0u128, |a, &b| a.saturating_add(b))
        .min(u64::MAX as u128) as u64
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
