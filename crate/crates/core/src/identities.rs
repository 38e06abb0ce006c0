//! Verification of associativity, the dialgebra axioms and the Leibniz
//! identity on basis triples, and computation of bar-units.
//!
//! Every law checked here is trilinear in `(x, y, z)`, so it holds for all
//! elements iff it holds on all `n³` basis triples. Failures are reported
//! as [`ViolationReport`]s carrying the triple and the nonzero residual
//! `LHS − RHS`.

use std::fmt;

use crate::algebra::{Algebra, BilinearProduct, Dialgebra, ProductTag};
use crate::exactlin::{Mat, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// `(x⊣y)⊣z = x⊣(y⊣z)`; also used for single-product associativity.
    AssocLeft,
    /// `(x⊢y)⊢z = x⊢(y⊢z)`
    AssocRight,
    /// `(x⊣y)⊣z = x⊣(y⊢z)`
    Ax1,
    /// `(x⊢y)⊣z = x⊢(y⊣z)`
    Ax2,
    /// `(x⊣y)⊢z = x⊢(y⊢z)`
    Ax3,
    /// `[[x,y],z] = [[x,z],y] + [x,[y,z]]`
    Leibniz,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::AssocLeft => "assoc-left",
            Law::AssocRight => "assoc-right",
            Law::Ax1 => "ax1",
            Law::Ax2 => "ax2",
            Law::Ax3 => "ax3",
            Law::Leibniz => "leibniz",
        }
    }

    /// Tags `[∘₁, ∘₂, ∘₃, ∘₄]` of `(x ∘₁ y) ∘₂ z = x ∘₃ (y ∘₄ z)`.
    fn shape(self) -> Option<[ProductTag; 4]> {
        use ProductTag::{Left as L, Right as R};
        Some(match self {
            Law::AssocLeft => [L, L, L, L],
            Law::AssocRight => [R, R, R, R],
            Law::Ax1 => [L, L, L, R],
            Law::Ax2 => [R, L, R, L],
            Law::Ax3 => [L, R, R, R],
            Law::Leibniz => return None,
        })
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One basis triple on which a law fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationReport {
    pub law: Law,
    /// 0-based basis indices `(i, j, k)` for `(x, y, z) = (e_i, e_j, e_k)`.
    pub witness: (usize, usize, usize),
    pub residual: Vector,
}

/// `(x ∘₁ y) ∘₂ z − x ∘₃ (y ∘₄ z)` on all basis triples.
fn check_triple_law(
    law: Law,
    first: &BilinearProduct,
    second: &BilinearProduct,
    third: &BilinearProduct,
    fourth: &BilinearProduct,
    out: &mut Vec<ViolationReport>,
    stop_early: bool,
) {
    let n = first.dim();
    let field = first.field();
    let basis: Vec<Vector> = (0..n).map(|i| Vector::unit(field, n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            let xy = first.basis_product(i, j);
            for k in 0..n {
                let lhs = second.mul_unchecked(&xy, &basis[k]);
                let yz = fourth.basis_product(j, k);
                let rhs = third.mul_unchecked(&basis[i], &yz);
                if lhs != rhs {
                    out.push(ViolationReport {
                        law,
                        witness: (i, j, k),
                        residual: lhs.sub(&rhs).expect("same shape"),
                    });
                    if stop_early {
                        return;
                    }
                }
            }
        }
    }
}

/// All basis triples where `(e_i e_j) e_k ≠ e_i (e_j e_k)`, reported as
/// [`Law::AssocLeft`].
pub fn check_associative(a: &Algebra) -> Vec<ViolationReport> {
    let p = &a.product;
    let mut out = Vec::new();
    check_triple_law(Law::AssocLeft, p, p, p, p, &mut out, false);
    out
}

pub fn is_associative(p: &BilinearProduct) -> bool {
    let mut out = Vec::new();
    check_triple_law(Law::AssocLeft, p, p, p, p, &mut out, true);
    out.is_empty()
}

const DIALGEBRA_LAWS: [Law; 5] = [Law::AssocLeft, Law::AssocRight, Law::Ax1, Law::Ax2, Law::Ax3];

fn run_dialgebra_laws(d: &Dialgebra, stop_early: bool) -> Vec<ViolationReport> {
    let mut out = Vec::new();
    for law in DIALGEBRA_LAWS {
        let [a, b, c, e] = law.shape().expect("triple law").map(|t| d.product(t));
        check_triple_law(law, a, b, c, e, &mut out, stop_early);
        if stop_early && !out.is_empty() {
            break;
        }
    }
    out
}

/// Violations of both associativities and axioms (1)–(3), all triples.
pub fn check_dialgebra(d: &Dialgebra) -> Vec<ViolationReport> {
    run_dialgebra_laws(d, false)
}

/// Short-circuiting form of [`check_dialgebra`].
pub fn is_dialgebra(d: &Dialgebra) -> bool {
    run_dialgebra_laws(d, true).is_empty()
}

/// Violations of `[[x,y],z] = [[x,z],y] + [x,[y,z]]` for the product of `a`
/// read as a bracket.
pub fn check_leibniz(a: &Algebra) -> Vec<ViolationReport> {
    let b = &a.product;
    let n = b.dim();
    let basis: Vec<Vector> = (0..n).map(|i| Vector::unit(a.field(), n, i)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = b.mul_unchecked(&b.basis_product(i, j), &basis[k]);
                let r1 = b.mul_unchecked(&b.basis_product(i, k), &basis[j]);
                let r2 = b.mul_unchecked(&basis[i], &b.basis_product(j, k));
                let residual = lhs
                    .sub(&r1)
                    .and_then(|v| v.sub(&r2))
                    .expect("same shape");
                if !residual.is_zero() {
                    out.push(ViolationReport {
                        law: Law::Leibniz,
                        witness: (i, j, k),
                        residual,
                    });
                }
            }
        }
    }
    out
}

/// The set of bar-units `{e : x⊣e = x = e⊢x for all x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BarUnitSet {
    Empty,
    /// `point + direction`.
    Affine { point: Vector, direction: Subspace },
}

impl BarUnitSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, BarUnitSet::Empty)
    }

    pub fn contains(&self, e: &Vector) -> bool {
        match self {
            BarUnitSet::Empty => false,
            BarUnitSet::Affine { point, direction } => e
                .sub(point)
                .and_then(|v| direction.contains(&v))
                .unwrap_or(false),
        }
    }
}

/// Solves the `2n²` linear conditions `e_i ⊣ e = e_i`, `e ⊢ e_i = e_i`.
pub fn bar_units(d: &Dialgebra) -> BarUnitSet {
    let n = d.dim();
    let field = d.field();
    let mut coeffs = Mat::zeros(field, 2 * n * n, n);
    let mut rhs_coords = vec![field.zero(); 2 * n * n];
    for i in 0..n {
        for k in 0..n {
            // (e_i ⊣ e)_k = Σ_j e_j γ⊣[i][j][k]
            let row = i * n + k;
            // (e ⊢ e_i)_k = Σ_j e_j γ⊢[j][i][k]
            let row2 = n * n + i * n + k;
            for j in 0..n {
                coeffs.set(row, j, d.left().get(i, j, k).clone());
                coeffs.set(row2, j, d.right().get(j, i, k).clone());
            }
            if i == k {
                rhs_coords[row] = field.one();
                rhs_coords[row2] = field.one();
            }
        }
    }
    let rhs = Vector::new(field, rhs_coords).expect("field elements");
    match coeffs.solve_affine(&rhs).expect("consistent shapes") {
        None => BarUnitSet::Empty,
        Some((point, direction)) => BarUnitSet::Affine { point, direction },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical;
    use crate::exactlin::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn canonical_tables_are_associative_dialgebras() {
        let f = q();
        for d in [
            canonical::algebra_i(f),
            canonical::algebra_iii(f),
            canonical::algebra_iv(f),
            canonical::algebra_ii(f.int(1)),
            canonical::algebra_ii(f.int(2)),
            canonical::algebra_ii(f.int(3)),
        ] {
            assert!(check_dialgebra(&d).is_empty());
            assert!(check_associative(&d.as_single(ProductTag::Left)).is_empty());
        }
    }

    #[test]
    fn associativity_examples() {
        let f = q();
        assert!(check_associative(&Algebra::new(BilinearProduct::zero(f, 3))).is_empty());
        let one_dim = Algebra::new(BilinearProduct::from_entries(f, 1, &[(0, 0, 0, 2)]));
        assert!(check_associative(&one_dim).is_empty());
        // r·r = s, r·s = r, else 0
        let bad = Algebra::new(BilinearProduct::from_entries(f, 2, &[(0, 0, 1, 1), (0, 1, 0, 1)]));
        let v = check_associative(&bad);
        let triples: Vec<_> = v.iter().map(|r| r.witness).collect();
        assert!(triples.contains(&(0, 0, 1)));
        assert!(triples.contains(&(0, 0, 0)));
        assert!(!is_associative(&bad.product));
    }

    #[test]
    fn mutated_algebra_i_fails() {
        let f = q();
        let mut d = canonical::algebra_i(f);
        // s ⊢ r := s
        d.product_mut(ProductTag::Right).set(1, 0, 0, f.zero());
        d.product_mut(ProductTag::Right).set(1, 0, 1, f.one());
        let v = check_dialgebra(&d);
        assert!(!v.is_empty());
        assert!(v.iter().any(|r| matches!(r.law, Law::Ax1 | Law::Ax2 | Law::Ax3)));
        for r in &v {
            assert!(!r.residual.is_zero());
        }
        assert!(!is_dialgebra(&d));
    }

    #[test]
    fn leibniz_examples() {
        let f = q();
        // [r,s] = -r
        let br = Algebra::new(BilinearProduct::from_entries(f, 2, &[(0, 1, 0, -1)]));
        assert!(check_leibniz(&br).is_empty());
        assert!(check_leibniz(&Algebra::new(BilinearProduct::zero(f, 2))).is_empty());
        // [r,s] = r, [s,r] = r, [s,s] = s
        let bad = Algebra::new(BilinearProduct::from_entries(
            f,
            2,
            &[(0, 1, 0, 1), (1, 0, 0, 1), (1, 1, 1, 1)],
        ));
        let v = check_leibniz(&bad);
        let sss = v.iter().find(|r| r.witness == (1, 1, 1)).expect("(s,s,s) fails");
        assert_eq!(sss.residual, Vector::from_ints(f, &[0, -1]));
    }

    #[test]
    fn bar_units_of_iv_and_iii() {
        let f = q();
        match bar_units(&canonical::algebra_iv(f)) {
            BarUnitSet::Affine { point, direction } => {
                assert_eq!(point, Vector::from_ints(f, &[0, 1]));
                assert_eq!(direction, Subspace::span(f, 2, &[Vector::unit(f, 2, 0)]).unwrap());
            }
            BarUnitSet::Empty => panic!("IV has bar-units"),
        }
        assert!(bar_units(&canonical::algebra_iii(f)).is_empty());
    }

    #[test]
    fn unit_of_associative_algebra_is_bar_unit() {
        let f = q();
        // 1-dim field algebra e·e = e
        let p = BilinearProduct::from_entries(f, 1, &[(0, 0, 0, 1)]);
        let d = Dialgebra::new(p.clone(), p).unwrap();
        assert!(bar_units(&d).contains(&Vector::from_ints(f, &[1])));
    }
}
