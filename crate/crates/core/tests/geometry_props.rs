mod common;

use common::*;
use folium_core::{BranchLabel, Field, Folium, LawKind, ProjectiveLine, ProjectivePoint};
use proptest::prelude::*;

fn slope_product(c: &Folium, pts: &[ProjectivePoint]) -> folium_core::FieldElement {
    pts.iter()
        .map(|p| c.pbar_inv(p).unwrap())
        .fold(c.field().one(), |acc, t| acc * t)
}

#[test]
fn geometric_law_matches_algebraic_law_exhaustively() {
    for p in [2, 5, 7, 11, 13] {
        for a in [1, 2] {
            let Ok(c) = Folium::with_int(fp(p), a) else {
                continue;
            };
            let pts = non_origin_points(&c);
            for x in &pts {
                for y in &pts {
                    let expected = c.proj_mul(x, y).unwrap();
                    assert_eq!(c.geometric_mul(x, y).unwrap(), expected);
                    assert_eq!(c.geometric_mul_via_vertex(x, y).unwrap(), expected);
                    let third = c.third_intersection(x, y).unwrap();
                    assert!(c.chord(x, y).unwrap().contains(&third));
                }
            }
        }
    }
}

/// The line oracle is built without the parametrization, so agreement in both
/// directions checks the slope identity independently.
#[test]
fn line_sections_agree_with_slope_identity() {
    for p in [2, 5, 7, 11] {
        let c = Folium::with_int(fp(p), 1).unwrap();
        let minus_one = -fp(p).one();
        let mut complete_triples = 0;
        for section in c.all_line_sections().unwrap() {
            if section.line.passes_through_origin() || !section.is_complete() {
                continue;
            }
            let pts = &section.points;
            complete_triples += 1;
            assert!(c.collinear3(&pts[0], &pts[1], &pts[2]).unwrap());
            assert_eq!(slope_product(&c, pts), minus_one);
            assert_eq!(c.compose_all(LawKind::ProjMul, pts).unwrap(), c.infinity());
            assert_eq!(c.compose_all(LawKind::StarMul, pts).unwrap(), c.infinity());
            assert_eq!(c.third_intersection(&pts[0], &pts[1]).unwrap(), pts[2]);
            assert!(c.slope_cubic_check(&section.line, pts).unwrap());
        }
        assert!(complete_triples > 0);

        // converse: every slope triple with product -1 is a line section
        let sections = c.all_line_sections().unwrap();
        let pts = non_origin_points(&c);
        for x in &pts {
            for y in &pts {
                for z in &pts {
                    let triple = [x.clone(), y.clone(), z.clone()];
                    if slope_product(&c, &triple) != minus_one {
                        assert!(!c.collinear3(x, y, z).unwrap());
                        continue;
                    }
                    let mut sorted = triple.to_vec();
                    sorted.sort_by_key(|p| p.to_string());
                    let found = sections.iter().any(|s| {
                        let mut got = s.points.clone();
                        got.sort_by_key(|p| p.to_string());
                        got == sorted
                    });
                    assert!(found, "p = {p}: {x}, {y}, {z} not a section");
                }
            }
        }
    }
}

#[test]
fn slope_cubic_on_every_line_avoiding_origin() {
    let c = Folium::with_int(fp(13), 2).unwrap();
    let pts = points(&c);
    for line in ProjectiveLine::enumerate(fp(13)).unwrap() {
        if !line.passes_through_origin() {
            assert!(c.slope_cubic_check(&line, &pts).unwrap());
        }
    }
}

fn rational_curve() -> impl Strategy<Value = Folium> {
    prop::sample::select(vec![1i64, 2, -3])
        .prop_map(|a| Folium::with_int(Field::rationals(), a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_geometric_law(c in rational_curve(), t in nonzero_rational(), u in nonzero_rational()) {
        let (x, y) = (c.pbar(&t).unwrap(), c.pbar(&u).unwrap());
        let expected = c.proj_mul(&x, &y).unwrap();
        prop_assert_eq!(c.geometric_mul(&x, &y).unwrap(), expected.clone());
        prop_assert_eq!(c.geometric_mul_via_vertex(&x, &y).unwrap(), expected);
        let third = c.third_intersection(&x, &y).unwrap();
        let line = c.chord(&x, &y).unwrap();
        prop_assert!(line.contains(&third));
        prop_assert!(c.collinear3(&x, &y, &third).unwrap());
        prop_assert!(c.slope_cubic_check(&line, &[x, y, third]).unwrap());
    }

    #[test]
    fn perpendicular_chords(c in rational_curve(), t in nonzero_rational()) {
        let one = c.field().one();
        prop_assume!(t != one && t != -one.clone());
        let p = c.pbar(&t).unwrap();
        let v = c.vertex().unwrap();
        let q = c.third_intersection(&v, &p).unwrap();
        prop_assert!(c.perpendicular_chord_check(&p, &q).unwrap());
        prop_assert_eq!(q.clone(), c.perp(&p).unwrap());

        // converse: the perpendicular partner is collinear with V
        let partner = c.pbar(&-t.inv().unwrap()).unwrap();
        prop_assert!(c.perpendicular_chord_check(&p, &partner).unwrap());
        prop_assert!(c.collinear3(&v, &p, &partner).unwrap());
    }

    #[test]
    fn swap_mirrors_branches(c in rational_curve(), t in rational()) {
        prop_assume!(t != -c.field().one());
        let p = c.pbar(&t).unwrap();
        let label = c.classify_branch(&p).unwrap();
        prop_assert_eq!(c.classify_branch(&p.swapped()).unwrap(), label.mirrored());
        if matches!(label, BranchLabel::Node | BranchLabel::Vertex) {
            prop_assert_eq!(p.swapped(), p);
        }
    }
}

#[test]
fn perpendicular_pairs_are_exactly_vertex_chords() {
    // over a grid of slopes: perpendicular iff collinear with V
    let c = Folium::with_int(q(), 1).unwrap();
    let v = c.vertex().unwrap();
    let slopes: Vec<_> = (-6i64..=6)
        .flat_map(|n| (1i64..=4).map(move |d| (n, d)))
        .filter(|&(n, d)| n != 0 && n != d && n != -d)
        .map(|(n, d)| q().from_ratio(n, d).unwrap())
        .collect();
    for t in &slopes {
        for u in &slopes {
            let (p, r) = (c.pbar(t).unwrap(), c.pbar(u).unwrap());
            assert_eq!(
                c.perpendicular_chord_check(&p, &r).unwrap(),
                c.collinear3(&v, &p, &r).unwrap()
            );
        }
    }
}

#[test]
fn branch_labels_partition_the_affine_curve() {
    let c = Folium::with_int(q(), 1).unwrap();
    let mut seen = std::collections::HashMap::new();
    for n in -40i64..=40 {
        let t = q().from_ratio(n, 8).unwrap();
        if n == -8 {
            continue;
        }
        let label = c.classify_branch(&c.pbar(&t).unwrap()).unwrap();
        *seen.entry(label).or_insert(0) += 1;
        let expected = match n {
            0 => BranchLabel::Node,
            8 => BranchLabel::Vertex,
            -7..=7 => BranchLabel::SouthInterior,
            _ => BranchLabel::WestInterior,
        };
        assert_eq!(label, expected, "t = {t}");
    }
    assert_eq!(seen[&BranchLabel::Node], 1);
    assert_eq!(seen[&BranchLabel::Vertex], 1);
}
