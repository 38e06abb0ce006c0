//! Annihilators, ideals, ring-theoretic predicates of the single-product
//! views, and the decomposition of zero-cubed algebras into triples.

use std::fmt;

use crate::algebra::{Algebra, BilinearProduct, Dialgebra, ProductTag};
use crate::constructions::{zero_cubed_build, ZeroCubedTriple};
use crate::error::{Error, Result};
use crate::exactlin::{
    all_subspaces, general_linear_group, subspace_count, FieldSpec, Mat, Subspace, Vector,
};
use crate::identities::is_associative;

/// Default budget for exhaustive searches over GF(p).
pub const DEFAULT_SEARCH_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorProfile {
    /// `Rann⊣ = {x : A ⊣ x = 0}`
    pub rann_left: Subspace,
    /// `Lann⊣ = {x : x ⊣ A = 0}`
    pub lann_left: Subspace,
    /// `Rann⊢ = {x : A ⊢ x = 0}`
    pub rann_right: Subspace,
    /// `Lann⊢ = {x : x ⊢ A = 0}`
    pub lann_right: Subspace,
    /// `Rann⊣ ∩ Lann⊢`
    pub ann: Subspace,
}

impl AnnihilatorProfile {
    pub fn dims(&self) -> [usize; 5] {
        [
            self.rann_left.dim(),
            self.lann_left.dim(),
            self.rann_right.dim(),
            self.lann_right.dim(),
            self.ann.dim(),
        ]
    }
}

/// `{x : e_i ∗ x = 0 ∀i}` (`on_right = true`) or `{x : x ∗ e_i = 0 ∀i}`.
fn one_sided_annihilator(p: &BilinearProduct, on_right: bool) -> Subspace {
    let n = p.dim();
    let mut m = Mat::zeros(p.field(), n * n, n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                let c = if on_right { p.get(i, j, k) } else { p.get(j, i, k) };
                m.set(i * n + k, j, c.clone());
            }
        }
    }
    m.kernel()
}

/// Two-sided annihilator `{x : xA = Ax = 0}` of a single product.
pub fn two_sided_annihilator(p: &BilinearProduct) -> Subspace {
    one_sided_annihilator(p, true)
        .intersect(&one_sided_annihilator(p, false))
        .expect("same shape")
}

pub fn annihilators(d: &Dialgebra) -> AnnihilatorProfile {
    let rann_left = one_sided_annihilator(d.left(), true);
    let lann_left = one_sided_annihilator(d.left(), false);
    let rann_right = one_sided_annihilator(d.right(), true);
    let lann_right = one_sided_annihilator(d.right(), false);
    let ann = rann_left.intersect(&lann_right).expect("same shape");
    AnnihilatorProfile {
        rann_left,
        lann_left,
        rann_right,
        lann_right,
        ann,
    }
}

fn check_ambient(d_field: FieldSpec, n: usize, u: &Subspace) -> Result<()> {
    if u.field() != d_field {
        return Err(Error::FieldMismatch(d_field, u.field()));
    }
    if u.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.ambient_dim(),
        });
    }
    Ok(())
}

/// Two-sided ideal of one product: `u ∗ A ⊆ u` and `A ∗ u ⊆ u`.
pub fn is_product_ideal(p: &BilinearProduct, u: &Subspace) -> Result<bool> {
    check_ambient(p.field(), p.dim(), u)?;
    let n = p.dim();
    for x in u.basis_vectors() {
        for i in 0..n {
            let e = Vector::unit(p.field(), n, i);
            if !u.contains(&p.mul_unchecked(&x, &e))? || !u.contains(&p.mul_unchecked(&e, &x))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ideal for both products and both sides.
pub fn is_ideal(d: &Dialgebra, u: &Subspace) -> Result<bool> {
    for tag in ProductTag::BOTH {
        if !is_product_ideal(d.product(tag), u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest subspace containing `seed` and closed under multiplication by
/// `A` on either side under both products.
pub fn generated_ideal(d: &Dialgebra, seed: &Subspace) -> Result<Subspace> {
    check_ambient(d.field(), d.dim(), seed)?;
    let n = d.dim();
    let basis: Vec<Vector> = (0..n).map(|i| Vector::unit(d.field(), n, i)).collect();
    let mut current = seed.clone();
    loop {
        let mut gens = current.basis_vectors();
        for x in current.basis_vectors() {
            for tag in ProductTag::BOTH {
                let p = d.product(tag);
                for e in &basis {
                    gens.push(p.mul_unchecked(&x, e));
                    gens.push(p.mul_unchecked(e, &x));
                }
            }
        }
        let next = Subspace::span(d.field(), n, &gens)?;
        if next.dim() == current.dim() {
            return Ok(next);
        }
        current = next;
    }
}

/// Three-valued answer for predicates that are only decided over GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unsupported,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl Tri {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unsupported => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unsupported => "unsupported",
        })
    }
}

/// Simple / semiprime / prime for one associative product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingFlags {
    pub simple: Tri,
    pub semiprime: Tri,
    pub prime: Tri,
}

impl RingFlags {
    const UNSUPPORTED: RingFlags = RingFlags {
        simple: Tri::Unsupported,
        semiprime: Tri::Unsupported,
        prime: Tri::Unsupported,
    };
}

/// All two-sided ideals of a product over GF(p), or `None` when the
/// subspace lattice exceeds `bound` or the field is ℚ.
pub fn product_ideals(p: &BilinearProduct, bound: u64) -> Option<Vec<Subspace>> {
    let modulus = p.field().modulus()?;
    if subspace_count(modulus, p.dim()) > bound {
        return None;
    }
    let all = all_subspaces(p.field(), p.dim()).ok()?;
    Some(
        all.into_iter()
            .filter(|u| is_product_ideal(p, u).expect("own shape"))
            .collect(),
    )
}

/// Simple: `A∗A ≠ 0` and no ideals besides `0` and `A`. Semiprime: no
/// nonzero ideal with `I∗I = 0`. Prime: no nonzero ideals with `I∗J = 0`.
pub fn ring_flags(p: &BilinearProduct, bound: u64) -> RingFlags {
    let Some(ideals) = product_ideals(p, bound) else {
        return RingFlags::UNSUPPORTED;
    };
    let nonzero: Vec<&Subspace> = ideals.iter().filter(|i| !i.is_zero()).collect();
    let simple = !p.square().is_zero() && nonzero.iter().all(|i| i.is_full());
    let product_zero = |a: &Subspace, b: &Subspace| {
        p.product_subspace(a, b).expect("own shape").is_zero()
    };
    let semiprime = nonzero.iter().all(|i| !product_zero(i, i));
    let prime = nonzero
        .iter()
        .all(|i| nonzero.iter().all(|j| !product_zero(i, j)));
    RingFlags {
        simple: simple.into(),
        semiprime: semiprime.into(),
        prime: prime.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub products_equal: bool,
    pub simple_left: Tri,
    pub simple_right: Tri,
    pub semiprime_left: Tri,
    pub semiprime_right: Tri,
    pub prime_left: Tri,
    pub prime_right: Tri,
}

impl StructureFlags {
    /// `simple` for the dialgebra: both views simple.
    pub fn simple(&self) -> Tri {
        both(self.simple_left, self.simple_right)
    }

    pub fn semiprime(&self) -> Tri {
        both(self.semiprime_left, self.semiprime_right)
    }

    pub fn prime(&self) -> Tri {
        both(self.prime_left, self.prime_right)
    }
}

fn both(a: Tri, b: Tri) -> Tri {
    match (a.as_bool(), b.as_bool()) {
        (Some(x), Some(y)) => (x && y).into(),
        _ => Tri::Unsupported,
    }
}

/// Ring-theoretic flags of `(A, ⊣)` and `(A, ⊢)`, decided by enumerating
/// every subspace over GF(p) when their number is at most `bound`.
pub fn structure_flags(d: &Dialgebra, bound: u64) -> StructureFlags {
    let l = ring_flags(d.left(), bound);
    let r = ring_flags(d.right(), bound);
    StructureFlags {
        products_equal: d.products_equal(),
        simple_left: l.simple,
        simple_right: r.simple,
        semiprime_left: l.semiprime,
        semiprime_right: r.semiprime,
        prime_left: l.prime,
        prime_right: r.prime,
    }
}

/// `A ∗ (A ∗ A) = (A ∗ A) ∗ A = 0`.
pub fn is_cube_zero(p: &BilinearProduct) -> bool {
    let full = Subspace::full(p.field(), p.dim());
    let sq = p.square();
    p.product_subspace(&full, &sq).expect("own shape").is_zero()
        && p.product_subspace(&sq, &full).expect("own shape").is_zero()
}

/// Associative with `A³ = 0`.
pub fn is_zero_cubed(p: &BilinearProduct) -> bool {
    is_associative(p) && is_cube_zero(p)
}

/// A zero-cubed algebra split as `Z ⊕ X` with `Z` its annihilator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroCubedDecomposition {
    pub triple: ZeroCubedTriple,
    /// Isomorphism onto `zero_cubed_build(&triple)`: transporting the input
    /// along it reproduces the built tensor exactly.
    pub witness: Mat,
}

/// `Z` = annihilator (canonical basis), `X` = unit vectors at the non-pivot
/// positions of `Z`, `f` = the restricted product.
pub fn zero_cubed_decompose(a: &Algebra) -> Result<ZeroCubedDecomposition> {
    let p = &a.product;
    if !is_zero_cubed(p) {
        return Err(Error::NotZeroCubed);
    }
    let field = a.field();
    let n = a.dim();
    let z = two_sided_annihilator(p);
    let keep = z.non_pivots();
    let mut new_basis = z.basis_vectors();
    new_basis.extend(keep.iter().map(|&c| Vector::unit(field, n, c)));
    let change = Mat::from_columns(field, n, &new_basis)?;
    let witness = change.inverse()?;

    let mut triple = ZeroCubedTriple::zero(field, z.dim(), keep.len());
    for (ia, &ca) in keep.iter().enumerate() {
        for (ib, &cb) in keep.iter().enumerate() {
            let v = p.basis_product(ca, cb);
            // v ∈ A² ⊆ Z; RREF coordinates are the pivot entries.
            for (c, &pc) in z.pivots().iter().enumerate() {
                triple.set(ia, ib, c, v.coords()[pc].clone());
            }
        }
    }
    let rebuilt = zero_cubed_build(&triple);
    let t_inv = change;
    if p.transport(&witness, &t_inv) != rebuilt.product {
        return Err(Error::Internal("zero-cubed decomposition does not rebuild".into()));
    }
    Ok(ZeroCubedDecomposition { triple, witness })
}

/// Outcome of an exhaustive search that may be out of reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    NotFound,
    Unsupported(String),
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

/// Isomorphisms `α: Z₁ → Z₂`, `β: X₁ → X₂` with
/// `f₂(β x, β x') = α f₁(x, x')`, found by exhaustive search over GF(p).
pub fn triples_equivalent(
    t1: &ZeroCubedTriple,
    t2: &ZeroCubedTriple,
    bound: u64,
) -> Result<Search<(Mat, Mat)>> {
    if t1.field() != t2.field() {
        return Err(Error::FieldMismatch(t1.field(), t2.field()));
    }
    let field = t1.field();
    let Some(p) = field.modulus() else {
        return Ok(Search::Unsupported("triple equivalence over Q".into()));
    };
    if t1.z_dim() != t2.z_dim() || t1.x_dim() != t2.x_dim() {
        return Ok(Search::NotFound);
    }
    if t1.image_rank() != t2.image_rank() {
        return Ok(Search::NotFound);
    }
    let (zd, xd) = (t1.z_dim(), t1.x_dim());
    let cost = (p as u128)
        .saturating_pow((zd * zd) as u32)
        .saturating_add((p as u128).saturating_pow((xd * xd) as u32));
    if cost > bound as u128 {
        return Ok(Search::Unsupported(format!(
            "GL_{zd} × GL_{xd} over GF({p}) exceeds search bound {bound}"
        )));
    }
    let mut alphas = general_linear_group(field, zd)?;
    let mut betas = general_linear_group(field, xd)?;
    identity_first(&mut alphas, field, zd);
    identity_first(&mut betas, field, xd);
    for beta in &betas {
        let images: Vec<Vector> = (0..xd).map(|a| beta.column(a)).collect();
        for alpha in &alphas {
            let ok = (0..xd).all(|a| {
                (0..xd).all(|b| {
                    t2.eval(&images[a], &images[b])
                        == alpha.apply(&t1.value(a, b)).expect("shape")
                })
            });
            if ok {
                return Ok(Search::Found((alpha.clone(), beta.clone())));
            }
        }
    }
    Ok(Search::NotFound)
}

/// Moves the identity to the front so that trivial witnesses are found first.
pub(crate) fn identity_first(group: &mut [Mat], field: FieldSpec, n: usize) {
    let id = Mat::identity(field, n);
    if let Some(pos) = group.iter().position(|g| *g == id) {
        group[..=pos].rotate_right(1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical;
    use crate::constructions::from_associative;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn line(f: FieldSpec, v: &[i64]) -> Subspace {
        Subspace::span(f, v.len(), &[Vector::from_ints(f, v)]).unwrap()
    }

    fn square_type(f: FieldSpec) -> ZeroCubedTriple {
        let mut t = ZeroCubedTriple::zero(f, 1, 1);
        t.set(0, 0, 0, f.one());
        t
    }

    #[test]
    fn annihilators_of_i() {
        let f = FieldSpec::rationals();
        let prof = annihilators(&canonical::algebra_i(f));
        let r = line(f, &[1, 0]);
        assert_eq!(prof.rann_left, r);
        assert_eq!(prof.lann_right, r);
        assert_eq!(prof.ann, r);
    }

    #[test]
    fn annihilators_of_trivial_and_unital() {
        let f = FieldSpec::rationals();
        let prof = annihilators(&Dialgebra::trivial(f, 3));
        assert_eq!(prof.dims(), [3; 5]);
        let e = Algebra::new(BilinearProduct::from_entries(f, 1, &[(0, 0, 0, 1)]));
        let prof = annihilators(&from_associative(&e).unwrap());
        assert_eq!(prof.dims(), [0; 5]);
    }

    #[test]
    fn ideals_of_i() {
        let f = FieldSpec::rationals();
        let i = canonical::algebra_i(f);
        assert!(is_ideal(&i, &line(f, &[1, 0])).unwrap());
        assert!(!is_ideal(&i, &line(f, &[0, 1])).unwrap());
        assert!(is_ideal(&i, &Subspace::zero(f, 2)).unwrap());
        assert!(is_ideal(&i, &Subspace::full(f, 2)).unwrap());
    }

    #[test]
    fn generated_ideals_of_i() {
        let f = FieldSpec::rationals();
        let i = canonical::algebra_i(f);
        assert!(generated_ideal(&i, &line(f, &[0, 1])).unwrap().is_full());
        assert_eq!(generated_ideal(&i, &line(f, &[1, 0])).unwrap(), line(f, &[1, 0]));
        assert!(generated_ideal(&i, &Subspace::zero(f, 2)).unwrap().is_zero());
    }

    #[test]
    fn flags_of_field_algebra() {
        let f = gf(2);
        let e = Algebra::new(BilinearProduct::from_entries(f, 1, &[(0, 0, 0, 1)]));
        let flags = structure_flags(&from_associative(&e).unwrap(), DEFAULT_SEARCH_BOUND);
        assert_eq!(flags.simple_left, Tri::True);
        assert_eq!(flags.simple_right, Tri::True);
        assert!(flags.products_equal);
    }

    #[test]
    fn flags_of_ii1_over_gf2() {
        let f = gf(2);
        let flags = structure_flags(&canonical::algebra_ii(f.one()), DEFAULT_SEARCH_BOUND);
        assert_eq!(flags.semiprime_left, Tri::False);
        assert!(is_product_ideal(canonical::algebra_ii(f.one()).left(), &line(f, &[1, 0])).unwrap());
    }

    #[test]
    fn zero_cubed_is_not_semiprime() {
        let f = gf(3);
        let a = zero_cubed_build(&square_type(f));
        let flags = ring_flags(&a.product, DEFAULT_SEARCH_BOUND);
        assert_eq!(flags.semiprime, Tri::False);
        assert_eq!(flags.prime, Tri::False);
        assert_eq!(flags.simple, Tri::False);
    }

    #[test]
    fn flags_unsupported_over_q_and_beyond_bound() {
        let f = FieldSpec::rationals();
        let flags = structure_flags(&canonical::algebra_i(f), DEFAULT_SEARCH_BOUND);
        assert_eq!(flags.simple_left, Tri::Unsupported);
        assert_eq!(flags.prime_right, Tri::Unsupported);
        assert!(!flags.products_equal);
        let g = gf(2);
        let flags = structure_flags(&canonical::algebra_i(g), 3);
        assert_eq!(flags.semiprime_left, Tri::Unsupported);
    }

    #[test]
    fn decompose_square_type() {
        let f = FieldSpec::rationals();
        let a = zero_cubed_build(&square_type(f));
        let dec = zero_cubed_decompose(&a).unwrap();
        assert_eq!(dec.triple, square_type(f));
        assert_eq!(dec.witness, Mat::identity(f, 2));
    }

    #[test]
    fn decompose_trivial() {
        let f = FieldSpec::rationals();
        let dec = zero_cubed_decompose(&Algebra::new(BilinearProduct::zero(f, 3))).unwrap();
        assert_eq!((dec.triple.z_dim(), dec.triple.x_dim()), (3, 0));
    }

    #[test]
    fn decompose_rejects_non_zero_cubed() {
        let f = FieldSpec::rationals();
        let e = Algebra::new(BilinearProduct::from_entries(f, 1, &[(0, 0, 0, 1)]));
        assert_eq!(zero_cubed_decompose(&e), Err(Error::NotZeroCubed));
    }

    #[test]
    fn equivalent_scalings_over_gf3() {
        let f = gf(3);
        let t1 = square_type(f);
        let mut t2 = ZeroCubedTriple::zero(f, 1, 1);
        t2.set(0, 0, 0, f.int(2));
        let (alpha, beta) = triples_equivalent(&t1, &t2, DEFAULT_SEARCH_BOUND)
            .unwrap()
            .found()
            .unwrap();
        // f₂(βx, βx') = 2β² xx' must equal α xx'.
        let b = beta.get(0, 0);
        assert_eq!(&f.int(2) * &(b * b), alpha.get(0, 0).clone());

        let (a, b) = triples_equivalent(&t1, &t1, DEFAULT_SEARCH_BOUND)
            .unwrap()
            .found()
            .unwrap();
        assert_eq!((a, b), (Mat::identity(f, 1), Mat::identity(f, 1)));

        let z = ZeroCubedTriple::zero(f, 1, 1);
        assert_eq!(triples_equivalent(&z, &t1, DEFAULT_SEARCH_BOUND).unwrap(), Search::NotFound);
        let q = FieldSpec::rationals();
        assert!(matches!(
            triples_equivalent(&square_type(q), &square_type(q), DEFAULT_SEARCH_BOUND).unwrap(),
            Search::Unsupported(_)
        ));
    }
}
