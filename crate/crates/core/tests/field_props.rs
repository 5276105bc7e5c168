mod common;

use common::*;
use folium_core::field::is_prime;
use folium_core::{cube_root_unique, solve_epsilon};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        let zero = q().zero();
        let one = q().one();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn element_display_parses_back(a in rational()) {
        prop_assert_eq!(q().parse_element(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn cube_root_uniqueness_matches_congruence() {
    // every prime below 6000, then a stride through the rest of the scan range
    let primes = (2u64..6000)
        .chain((6000u64..(1 << 16)).step_by(97))
        .filter(|&p| p != 3 && is_prime(p));
    let mut checked = 0;
    for p in primes {
        let unique = cube_root_unique(fp(p)).unwrap();
        assert_eq!(unique, p % 3 == 2, "p = {p}");
        checked += 1;
    }
    assert!(checked > 780);
}

#[test]
fn epsilon_roots_satisfy_quadratic() {
    for p in [7u64, 13, 19, 31, 37, 43, 61, 65_521] {
        let f = fp(p);
        let (e1, e2) = solve_epsilon(f).unwrap().unwrap();
        for e in [&e1, &e2] {
            assert!((e.square() - e + f.one()).is_zero());
            assert_eq!(e.pow(3), -f.one());
        }
        assert!((&e1 * &e2).is_one());
        assert_ne!(e1, e2);
    }
}
