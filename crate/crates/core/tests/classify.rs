mod common;

use std::collections::HashSet;

use common::*;
use dialg_core::algebra::Dialgebra;
use dialg_core::classify::{
    are_isomorphic, automorphism_group, canonical, classify_dim2, dim2_constraints, fingerprint,
    search_isomorphism, ClassKind, ParamTable,
};
use dialg_core::exactlin::{general_linear_group, FieldSpec, Mat};
use dialg_core::identities::is_dialgebra;
use dialg_core::structure::{Search, DEFAULT_SEARCH_BOUND};
use proptest::prelude::*;

fn canonicals(f: FieldSpec) -> Vec<(Dialgebra, ClassKind)> {
    let mut out = vec![
        (canonical::algebra_i(f), ClassKind::I),
        (canonical::algebra_iii(f), ClassKind::III),
        (canonical::algebra_iv(f), ClassKind::IV),
    ];
    let ks: Vec<i64> = match f.modulus() {
        None => vec![1, 2, 3, -1, -7],
        Some(p) => (1..p as i64).collect(),
    };
    for k in ks {
        out.push((canonical::algebra_ii(f.int(k)), ClassKind::II(f.int(k))));
    }
    out
}

fn assert_sound(input: &Dialgebra) -> ClassKind {
    let label = classify_dim2(input).unwrap();
    assert!(label.witness.is_invertible());
    assert!(input.transport(&label.witness).unwrap().same_tables(&label.canonical));
    label.kind
}

#[test]
fn classification_is_basis_independent_over_q() {
    let f = FieldSpec::rationals();
    let mut r = rng(31);
    for (d, kind) in canonicals(f) {
        for _ in 0..20 {
            let t = random_invertible(&mut r, f, 2, 3);
            assert_eq!(assert_sound(&d.transport(&t).unwrap()), kind);
        }
    }
}

#[test]
fn classification_is_basis_independent_over_small_fields() {
    for p in [2, 3, 5] {
        let f = gf(p);
        let group = general_linear_group(f, 2).unwrap();
        for (d, kind) in canonicals(f) {
            for t in &group {
                assert_eq!(assert_sound(&d.transport(t).unwrap()), kind);
            }
        }
    }
}

#[test]
fn census_labels_are_sound_and_constant_on_orbits() {
    for c in [census_gf2(), census_gf3()] {
        for class in &c.classes {
            for m in &class.members {
                assert_eq!(assert_sound(m), class.label.kind);
            }
        }
    }
}

#[test]
fn census_classes_pairwise_non_isomorphic() {
    for c in [census_gf2(), census_gf3()] {
        let reps: Vec<&Dialgebra> = c.classes.iter().map(|cl| &cl.representative).collect();
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                let found = search_isomorphism(a, b, DEFAULT_SEARCH_BOUND).unwrap().is_found();
                assert_eq!(found, i == j);
                assert_eq!(are_isomorphic(a, b, DEFAULT_SEARCH_BOUND).unwrap().is_found(), i == j);
            }
        }
        let mut seen = HashSet::new();
        for d in c.dialgebras() {
            assert!(seen.insert(d.tensor_key()));
        }
    }
}

#[test]
fn gf3_family_ii_has_two_classes() {
    let f = gf(3);
    let ii: Vec<_> = census_gf3()
        .classes
        .iter()
        .filter_map(|c| match &c.label.kind {
            ClassKind::II(k) => Some(k.clone()),
            _ => None,
        })
        .collect();
    assert_eq!(ii, vec![f.int(1), f.int(2)]);
}

/// Direct evaluation of the axioms against the polynomial system.
#[test]
fn constraint_system_matches_axioms() {
    for p in [2u64, 3, 5] {
        let f = gf(p);
        let mut digits = [0i64; 6];
        let mut agree = 0;
        loop {
            let t = ParamTable::from_ints(f, digits);
            let poly = dim2_constraints(&t).iter().all(|c| c.is_zero());
            assert_eq!(poly, is_dialgebra(&t.to_dialgebra()), "{digits:?} over GF({p})");
            agree += 1;
            let mut i = 0;
            while i < 6 {
                digits[i] += 1;
                if digits[i] < p as i64 {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == 6 {
                break;
            }
        }
        assert_eq!(agree, p.pow(6));
    }
}

#[test]
fn constraint_examples() {
    let f = FieldSpec::rationals();
    let zero = |x| dim2_constraints(&ParamTable::from_ints(f, x)).iter().all(|c| c.is_zero());
    assert!(zero([0, 0, 1, 1, 0, 1]));
    assert!(zero([0; 6]));
    assert!(!zero([1, 1, 0, 0, 0, 0]));
}

#[test]
fn automorphism_sets_are_groups() {
    for p in [2, 3, 5] {
        let f = gf(p);
        let st = canonical::square_type(f);
        let d = Dialgebra::new(st.clone(), st).unwrap();
        for d in [d, canonical::algebra_i(f), canonical::algebra_iv(f)] {
            let g = automorphism_group(&d, DEFAULT_SEARCH_BOUND).unwrap();
            let set: HashSet<_> = g.iter().cloned().collect();
            assert!(set.contains(&Mat::identity(f, 2)));
            for a in &g {
                assert!(set.contains(&a.inverse().unwrap()));
                for b in &g {
                    assert!(set.contains(&a.mul(b).unwrap()));
                }
            }
        }
    }
}

#[test]
fn opposite_exchanges_i_and_iii() {
    use dialg_core::constructions::opposite;
    for f in [FieldSpec::rationals(), gf(2), gf(7)] {
        assert_eq!(classify_dim2(&opposite(&canonical::algebra_i(f))).unwrap().kind, ClassKind::III);
        assert_eq!(classify_dim2(&opposite(&canonical::algebra_iii(f))).unwrap().kind, ClassKind::I);
        assert_eq!(classify_dim2(&opposite(&canonical::algebra_iv(f))).unwrap().kind, ClassKind::IV);
    }
}

#[test]
fn rational_ii_k_example() {
    let f = FieldSpec::rationals();
    let text = "dialg 1\nfield rational\ndim 2\nleft 2 2 1 1\nright 2 2 1 3\n";
    let d = dialg_core::algebra::parse_dialgebra(text).unwrap();
    assert_eq!(classify_dim2(&d).unwrap().kind, ClassKind::II(f.int(3)));
}

#[test]
fn gf7_ii_conjugates_found() {
    let f = gf(7);
    let mut r = rng(37);
    for k in 1..7 {
        let d = canonical::algebra_ii(f.int(k));
        let c = d.transport(&random_invertible(&mut r, f, 2, 3)).unwrap();
        let w = search_isomorphism(&d, &c, DEFAULT_SEARCH_BOUND).unwrap().found().unwrap();
        assert!(d.is_homomorphism(&w, &c));
    }
}

#[test]
fn search_bound_is_respected() {
    let f = gf(7);
    let d = canonical::algebra_i(f);
    assert!(matches!(search_isomorphism(&d, &d, 100).unwrap(), Search::Unsupported(_)));
    assert!(automorphism_group(&d, 100).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fingerprint_is_invariant(seed in any::<u64>(), which in 0usize..3) {
        let f = [gf(2), gf(3), gf(5)][which];
        let mut r = rng(seed);
        let d = random_valid(&mut r, f);
        let t = random_invertible(&mut r, f, d.dim(), 2);
        prop_assert_eq!(fingerprint(&d), fingerprint(&d.transport(&t).unwrap()));
    }
}
