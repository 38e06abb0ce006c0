mod common;

use common::*;
use dialg_core::algebra::{BilinearProduct, Dialgebra};
use dialg_core::classify::are_isomorphic;
use dialg_core::constructions::{from_associative, quotient, zero_cubed_build, ZeroCubedTriple};
use dialg_core::exactlin::{FieldSpec, Scalar};
use dialg_core::structure::{
    annihilators, is_cube_zero, is_ideal, ring_flags, structure_flags, triples_equivalent,
    two_sided_annihilator, zero_cubed_decompose, Search, Tri, DEFAULT_SEARCH_BOUND,
};

/// Every triple over GF(p) with `z_dim + x_dim ≤ max_total`.
fn all_triples(field: FieldSpec, max_total: usize) -> Vec<ZeroCubedTriple> {
    let p = field.modulus().unwrap();
    let mut out = Vec::new();
    for z in 0..=max_total {
        for x in 0..=max_total - z {
            let len = x * x * z;
            for code in 0..p.pow(len as u32) {
                let mut c = code;
                let f: Vec<Scalar> = (0..len)
                    .map(|_| {
                        let v = field.int((c % p) as i64);
                        c /= p;
                        v
                    })
                    .collect();
                out.push(ZeroCubedTriple::from_flat(field, z, x, f).unwrap());
            }
        }
    }
    out
}

/// `Z` is the whole annihilator of the built algebra.
fn adapted(t: &ZeroCubedTriple) -> bool {
    two_sided_annihilator(&zero_cubed_build(t).product).dim() == t.z_dim()
}

fn sample(seed: u64, count: usize) -> Vec<Dialgebra> {
    let mut r = rng(seed);
    let fields = [gf(2), gf(3), FieldSpec::rationals()];
    (0..count).map(|i| random_valid(&mut r, fields[i % 3])).collect()
}

fn annihilator_laws(d: &Dialgebra) {
    let prof = annihilators(d);
    let n = d.dim();
    assert!(is_ideal(d, &prof.rann_left).unwrap());
    assert!(is_ideal(d, &prof.lann_right).unwrap());
    for i in 0..n {
        for j in 0..n {
            let diff = d.left().basis_product(i, j).sub(&d.right().basis_product(i, j)).unwrap();
            assert!(prof.ann.contains(&diff).unwrap());
        }
    }
    if d.left().square().is_full() {
        let (q, _) = quotient(d, &prof.rann_left).unwrap();
        assert!(annihilators(&q).rann_left.is_zero());
    }
    if prof.rann_left.is_full() {
        assert!(d.left().is_zero());
        assert!(is_cube_zero(d.right()));
    }
    if prof.rann_left.is_zero() {
        assert!(d.products_equal());
    }
}

#[test]
fn annihilator_laws_on_census() {
    for d in census_gf2().dialgebras().chain(census_gf3().dialgebras()) {
        annihilator_laws(d);
    }
}

#[test]
fn annihilator_laws_on_constructions() {
    for d in sample(23, 100) {
        annihilator_laws(&d);
    }
}

#[test]
fn perfection_forces_equal_products() {
    for c in [census_gf2(), census_gf3()] {
        for d in c.dialgebras() {
            let s = structure_flags(d, DEFAULT_SEARCH_BOUND);
            let single = ring_flags(d.left(), DEFAULT_SEARCH_BOUND);
            let chain = |l: Tri, r: Tri, both: Tri, one: Tri| {
                let expected = d.products_equal() && one.as_bool().unwrap();
                assert_eq!(l.as_bool(), Some(expected), "{d:?}");
                assert_eq!(r.as_bool(), Some(expected));
                assert_eq!(both.as_bool(), Some(expected));
            };
            chain(s.simple_left, s.simple_right, s.simple(), single.simple);
            chain(s.semiprime_left, s.semiprime_right, s.semiprime(), single.semiprime);
            chain(s.prime_left, s.prime_right, s.prime(), single.prime);
        }
    }
}

#[test]
fn zero_cubed_algebras_are_never_semiprime() {
    for (field, max) in [(gf(2), 3), (gf(3), 2)] {
        for t in all_triples(field, max) {
            let a = zero_cubed_build(&t);
            if a.dim() == 0 {
                continue;
            }
            let flags = ring_flags(&a.product, DEFAULT_SEARCH_BOUND);
            assert_eq!(flags.semiprime, Tri::False);
            assert_eq!(flags.prime, Tri::False);
            assert_eq!(flags.simple, Tri::False);
        }
    }
}

#[test]
fn decomposition_rebuilds() {
    for t in all_triples(gf(2), 3) {
        let a = zero_cubed_build(&t);
        let dec = zero_cubed_decompose(&a).unwrap();
        let rebuilt = zero_cubed_build(&dec.triple);
        let t_inv = dec.witness.inverse().unwrap();
        assert_eq!(a.product.transport(&dec.witness, &t_inv), rebuilt.product);
        assert!(adapted(&dec.triple));
    }
}

#[test]
fn triple_equivalence_matches_isomorphism_for_adapted_triples() {
    let triples: Vec<_> = all_triples(gf(2), 3).into_iter().filter(adapted).collect();
    let built: Vec<Dialgebra> = triples
        .iter()
        .map(|t| from_associative(&zero_cubed_build(t)).unwrap())
        .collect();
    for (i, t1) in triples.iter().enumerate() {
        for (j, t2) in triples.iter().enumerate() {
            let eq = triples_equivalent(t1, t2, DEFAULT_SEARCH_BOUND).unwrap();
            let iso = are_isomorphic(&built[i], &built[j], DEFAULT_SEARCH_BOUND).unwrap();
            assert!(!matches!(eq, Search::Unsupported(_)) && !matches!(iso, Search::Unsupported(_)));
            assert_eq!(eq.is_found(), iso.is_found(), "{t1:?} vs {t2:?}");
        }
    }
}

/// Without `Z = Ann(A)` the correspondence fails: both triples below build
/// the zero algebra on a plane.
#[test]
fn degenerate_triples_break_the_correspondence() {
    let f = gf(2);
    let t1 = ZeroCubedTriple::zero(f, 1, 1);
    let t2 = ZeroCubedTriple::zero(f, 2, 0);
    let a = from_associative(&zero_cubed_build(&t1)).unwrap();
    let b = from_associative(&zero_cubed_build(&t2)).unwrap();
    assert!(are_isomorphic(&a, &b, DEFAULT_SEARCH_BOUND).unwrap().is_found());
    assert_eq!(triples_equivalent(&t1, &t2, DEFAULT_SEARCH_BOUND).unwrap(), Search::NotFound);
    assert!(!adapted(&t1) && adapted(&t2));
}

#[test]
fn one_sided_zero_cubed_dialgebras() {
    for t in all_triples(gf(3), 2) {
        let a = zero_cubed_build(&t);
        let zero = BilinearProduct::zero(a.field(), a.dim());
        let d = Dialgebra::new(zero, a.product.clone()).unwrap();
        assert!(dialg_core::identities::is_dialgebra(&d));
        assert!(annihilators(&d).rann_left.is_full());
    }
}
