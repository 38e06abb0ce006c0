#![allow(dead_code)]

use dialg_core::algebra::{Algebra, BilinearProduct, Dialgebra};
use dialg_core::classify::{census, Census};
use dialg_core::constructions::{
    from_associative, from_differential, opposite, zero_cubed_build, Derivation, ZeroCubedTriple,
};
use dialg_core::exactlin::{FieldSpec, Mat, Scalar, Vector};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::OnceLock;

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn census_gf2() -> &'static Census {
    static C: OnceLock<Census> = OnceLock::new();
    C.get_or_init(|| census(2, 2).unwrap())
}

pub fn census_gf3() -> &'static Census {
    static C: OnceLock<Census> = OnceLock::new();
    C.get_or_init(|| census(3, 2).unwrap())
}

/// Invertible `n × n` matrix with entries in `[-r, r]`.
pub fn random_invertible(rng: &mut StdRng, field: FieldSpec, n: usize, r: i64) -> Mat {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-r..=r)).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Mat::from_ints(field, &refs);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_vector(rng: &mut StdRng, field: FieldSpec, n: usize, r: i64) -> Vector {
    let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-r..=r)).collect();
    Vector::from_ints(field, &c)
}

/// Block-diagonal sum of two products.
pub fn product_sum(a: &BilinearProduct, b: &BilinearProduct) -> BilinearProduct {
    let (m, n) = (a.dim(), b.dim());
    let mut out = BilinearProduct::zero(a.field(), m + n);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                out.set(i, j, k, a.get(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(m + i, m + j, m + k, b.get(i, j, k).clone());
            }
        }
    }
    out
}

pub fn direct_sum(a: &Dialgebra, b: &Dialgebra) -> Dialgebra {
    Dialgebra::new(product_sum(a.left(), b.left()), product_sum(a.right(), b.right())).unwrap()
}

/// Upper triangular 2×2 matrices on the basis `E11, E12, E22`.
pub fn upper_triangular(field: FieldSpec) -> Algebra {
    let p = BilinearProduct::from_entries(
        field,
        3,
        &[
            (0, 0, 0, 1), // E11 E11 = E11
            (0, 1, 1, 1), // E11 E12 = E12
            (1, 2, 1, 1), // E12 E22 = E12
            (2, 2, 2, 1), // E22 E22 = E22
        ],
    );
    Algebra::new(p).with_names(&["E11", "E12", "E22"])
}

/// `x ⊣ y = x d(y)`, `x ⊢ y = d(x) y` for the inner derivation by `E12`.
pub fn triangular_differential(field: FieldSpec) -> Dialgebra {
    let a = upper_triangular(field);
    let c = Vector::from_ints(field, &[0, 1, 0]);
    let d = Derivation::inner(&a, &c).unwrap();
    from_differential(&a, &d).unwrap()
}

pub fn random_triple(rng: &mut StdRng, field: FieldSpec, z: usize, x: usize) -> ZeroCubedTriple {
    let p = field.modulus().map_or(5, |p| p as i64);
    let f: Vec<Scalar> = (0..x * x * z).map(|_| field.int(rng.gen_range(0..p))).collect();
    ZeroCubedTriple::from_flat(field, z, x, f).unwrap()
}

/// A pool of valid dialgebras of assorted origins over `field`, each
/// conjugated by a random invertible matrix.
pub fn random_valid(rng: &mut StdRng, field: FieldSpec) -> Dialgebra {
    let base = match rng.gen_range(0..6) {
        0 => from_associative(&upper_triangular(field)).unwrap(),
        1 => triangular_differential(field),
        2 => opposite(&triangular_differential(field)),
        3 => {
            let (z, x) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let t = random_triple(rng, field, z, x);
            let a = zero_cubed_build(&t);
            match rng.gen_range(0..3) {
                0 => from_associative(&a).unwrap(),
                1 => Dialgebra::new(BilinearProduct::zero(field, z + x), a.product).unwrap(),
                _ => Dialgebra::new(a.product, BilinearProduct::zero(field, z + x)).unwrap(),
            }
        }
        4 => {
            let pick = |rng: &mut StdRng| canonical_pick(rng, field);
            let a = pick(rng);
            let b = pick(rng);
            direct_sum(&a, &b)
        }
        _ => canonical_pick(rng, field),
    };
    let t = random_invertible(rng, field, base.dim(), 2);
    base.transport(&t).unwrap()
}

fn canonical_pick(rng: &mut StdRng, field: FieldSpec) -> Dialgebra {
    use dialg_core::classify::canonical;
    match rng.gen_range(0..5) {
        0 => canonical::algebra_i(field),
        1 => {
            let k = loop {
                let k = field.int(rng.gen_range(1..=4));
                if !k.is_zero() {
                    break k;
                }
            };
            canonical::algebra_ii(k)
        }
        2 => canonical::algebra_iii(field),
        3 => canonical::algebra_iv(field),
        _ => canonical::zero_cubed_left_zero(field),
    }
}
