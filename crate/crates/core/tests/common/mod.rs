#![allow(dead_code)]

use folium_core::{Field, FieldElement, Folium, ProjectivePoint};
use proptest::prelude::*;

pub fn q() -> Field {
    Field::rationals()
}

pub fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub fn rational() -> impl Strategy<Value = FieldElement> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000)
        .prop_map(|(n, d)| Field::rationals().from_ratio(n, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = FieldElement> {
    rational().prop_filter("nonzero", |t| !t.is_zero())
}

pub fn small_primes() -> Vec<u64> {
    vec![2, 5, 7, 11, 13, 17, 19, 23, 29, 31]
}

/// All curve points, from the brute-force scan.
pub fn points(c: &Folium) -> Vec<ProjectivePoint> {
    c.enumerate_points().unwrap()
}

pub fn non_origin_points(c: &Folium) -> Vec<ProjectivePoint> {
    let o = c.origin();
    points(c).into_iter().filter(|p| *p != o).collect()
}

pub fn nonzero_elements(f: Field) -> Vec<FieldElement> {
    f.elements().unwrap().filter(|e| !e.is_zero()).collect()
}
