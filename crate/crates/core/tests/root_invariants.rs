use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use quadpair::minuscule::{enumerate_minuscule, Sign};
use quadpair::root_kit::{CartanType, Family, RootDatum, Weight};

fn small_types() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        (1usize..=5).prop_map(|n| CartanType::new(Family::A, n).unwrap()),
        (2usize..=4).prop_map(|n| CartanType::new(Family::B, n).unwrap()),
        (2usize..=4).prop_map(|n| CartanType::new(Family::C, n).unwrap()),
        (3usize..=5).prop_map(|n| CartanType::new(Family::D, n).unwrap()),
        Just(CartanType::exceptional(Family::G2).unwrap()),
        Just(CartanType::exceptional(Family::F4).unwrap()),
    ]
}

/// A type together with a nonzero dominant weight with entries in 0..=2.
fn type_and_weight() -> impl Strategy<Value = (CartanType, Weight)> {
    small_types()
        .prop_flat_map(|t| (Just(t), proptest::collection::vec(0i64..=2, t.rank())))
        .prop_filter("nonzero", |(_, w)| w.iter().any(|&x| x != 0))
        .prop_map(|(t, w)| (t, Weight::new(w)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_size_divides_weyl_order((t, w) in type_and_weight()) {
        let d = RootDatum::new(t);
        let orbit = d.weyl_orbit(&w).unwrap();
        let size = BigUint::from(orbit.len());
        prop_assert!((d.weyl_group_order() % &size).is_zero());
        prop_assert_eq!(d.weyl_orbit_size(&w).unwrap(), size);
    }

    #[test]
    fn orbit_is_closed_under_all_reflections((t, w) in type_and_weight()) {
        let d = RootDatum::new(t);
        let orbit = d.weyl_orbit(&w).unwrap();
        let members: HashSet<&Weight> = orbit.iter().collect();
        for mu in &orbit {
            for i in 0..d.num_positive_roots() {
                let image = d.reflect(mu, i);
                prop_assert!(members.contains(&image), "{} -> {} by root {}", mu, image, i);
            }
        }
        prop_assert_eq!(orbit.iter().filter(|mu| mu.is_dominant()).count(), 1);
    }

    #[test]
    fn dual_weight_is_an_involution((t, w) in type_and_weight()) {
        let d = RootDatum::new(t);
        let dual = d.dual_weight(&w).unwrap();
        prop_assert!(dual.is_dominant());
        prop_assert_eq!(d.dual_weight(&dual).unwrap(), w);
    }
}

#[test]
fn exceptional_enumeration() {
    let summary = |f: Family| -> Vec<(usize, usize, Sign)> {
        enumerate_minuscule(CartanType::exceptional(f).unwrap())
            .iter()
            .map(|r| (r.fundamental_index(), r.dim(), r.sign()))
            .collect()
    };
    assert_eq!(summary(Family::E6), vec![(1, 27, Sign::NotSelfDual), (6, 27, Sign::NotSelfDual)]);
    assert_eq!(summary(Family::E7), vec![(7, 56, Sign::Symplectic)]);
    assert!(summary(Family::F4).is_empty());
    assert!(summary(Family::G2).is_empty());
}

#[test]
fn simple_root_pairs_to_two() {
    for f in Family::ALL {
        let t = match f.fixed_rank() {
            Some(_) => CartanType::exceptional(f).unwrap(),
            None => CartanType::new(f, 5).unwrap(),
        };
        let d = RootDatum::new(t);
        for i in 0..t.rank() {
            let mut coords = vec![0; t.rank()];
            coords[i] = 1;
            let idx = d.root_index(&coords).unwrap();
            assert_eq!(d.pairing(&d.simple_root_weight(i), idx).unwrap(), 2, "{t} alpha_{}", i + 1);
        }
    }
}
