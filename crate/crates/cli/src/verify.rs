//! Property suites behind `folium verify`.
//!
//! Over a prime field with `p <= 31` every property runs on all instances
//! whenever the tuple count stays below [`EXHAUSTIVE_LIMIT`]; otherwise it
//! draws seeded random instances. Each property gets its own ChaCha stream
//! keyed by its name, so a report does not depend on which suites ran first.

use std::collections::HashSet;

use clap::ValueEnum;
use folium_core::{
    alpha, sigma, Field, FieldElement, Folium, FoliumError, LawKind, ProjectivePoint,
};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const DEFAULT_SAMPLES: usize = 1000;
pub const EXHAUSTIVE_MAX_PRIME: u64 = 31;
pub const EXHAUSTIVE_LIMIT: u64 = 32_768;
/// Bound on numerators and denominators of random rationals.
pub const RATIONAL_BOUND: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    Field,
    Count,
    Bijection,
    Projmul,
    Projmul2,
    Star,
    Addsouth,
    Addwest,
    Southmul,
    Westmul,
    Fieldmul,
    Coincide,
    Identities,
    Geometry,
    Collinear,
    Perpendicular,
    Branches,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const EACH: [Suite; 17] = [
        Suite::Field,
        Suite::Count,
        Suite::Bijection,
        Suite::Projmul,
        Suite::Projmul2,
        Suite::Star,
        Suite::Addsouth,
        Suite::Addwest,
        Suite::Southmul,
        Suite::Westmul,
        Suite::Fieldmul,
        Suite::Coincide,
        Suite::Identities,
        Suite::Geometry,
        Suite::Collinear,
        Suite::Perpendicular,
        Suite::Branches,
    ];

    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    fn law(self) -> Option<LawKind> {
        Some(match self {
            Suite::Projmul => LawKind::ProjMul,
            Suite::Projmul2 => LawKind::ProjMul2,
            Suite::Star => LawKind::StarMul,
            Suite::Addsouth => LawKind::AddSouth,
            Suite::Addwest => LawKind::AddWest,
            Suite::Southmul => LawKind::SouthMul,
            Suite::Westmul => LawKind::WestMul,
            Suite::Fieldmul => LawKind::FieldMul,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub instances: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub suite: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub field: String,
    pub a: String,
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.passed)
    }
}

/// Runs a suite (or all of them) on one curve.
pub fn run(curve: &Folium, suite: Suite, seed: u64, samples: usize) -> Report {
    let verifier = Verifier {
        curve,
        seed,
        samples,
    };
    let mut report = Report {
        suite: suite.name(),
        field: curve.field().to_string(),
        a: curve.a().to_string(),
        seed,
        properties: Vec::new(),
        skipped: Vec::new(),
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    for s in suites {
        match verifier.suite(s) {
            Ok(props) => report.properties.extend(props.into_iter().map(|mut p| {
                if suite == Suite::All {
                    p.name = format!("{}/{}", s.name(), p.name);
                }
                p
            })),
            Err(reason) => report.skipped.push(Skipped {
                suite: s.name(),
                reason,
            }),
        }
    }
    report
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn show_points(pts: &[ProjectivePoint]) -> String {
    pts.iter().map(ToString::to_string).join(", ")
}

fn show_elements(ts: &[FieldElement]) -> String {
    format!("t = [{}]", ts.iter().map(ToString::to_string).join(", "))
}

fn property<T>(
    name: &str,
    cases: &[T],
    show: impl Fn(&T) -> String,
    check: impl Fn(&T) -> Result<bool, FoliumError>,
) -> PropertyResult {
    let counterexample = cases.iter().find_map(|case| match check(case) {
        Ok(true) => None,
        Ok(false) => Some(show(case)),
        Err(e) => Some(format!("{} ({e})", show(case))),
    });
    PropertyResult {
        name: name.to_string(),
        instances: cases.len(),
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn points_property(
    name: &str,
    cases: &[Vec<ProjectivePoint>],
    check: impl Fn(&[ProjectivePoint]) -> Result<bool, FoliumError>,
) -> PropertyResult {
    property(name, cases, |c| show_points(c), |c| check(c))
}

fn elements_property(
    name: &str,
    cases: &[Vec<FieldElement>],
    check: impl Fn(&[FieldElement]) -> Result<bool, FoliumError>,
) -> PropertyResult {
    property(name, cases, |c| show_elements(c), |c| check(c))
}

/// `det [P; Q; R]`, zero exactly when the three points are collinear.
pub fn det3(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> FieldElement {
    let [a, b, c] = p.coords();
    let [d, e, f] = q.coords();
    let [g, h, i] = r.coords();
    a * &(e * i - f * h) - b * &(d * i - f * g) + c * &(d * h - e * g)
}

type Props = Result<Vec<PropertyResult>, String>;

struct Verifier<'a> {
    curve: &'a Folium,
    seed: u64,
    samples: usize,
}

impl Verifier<'_> {
    fn field(&self) -> Field {
        self.curve.field()
    }

    fn el(&self, n: i64) -> FieldElement {
        self.field().from_i64(n)
    }

    fn rng(&self, label: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(fnv1a(label));
        rng
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> FieldElement {
        let field = self.field();
        match field.modulus() {
            Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
            None => {
                let n = rng.gen_range(-RATIONAL_BOUND..=RATIONAL_BOUND);
                let d = rng.gen_range(1..=RATIONAL_BOUND);
                field.from_ratio(n, d).expect("positive denominator")
            }
        }
    }

    fn exhaustive(&self, universe: usize, k: usize) -> bool {
        self.field()
            .modulus()
            .is_some_and(|p| p <= EXHAUSTIVE_MAX_PRIME)
            && (universe as u64)
                .checked_pow(k as u32)
                .is_some_and(|n| n <= EXHAUSTIVE_LIMIT)
    }

    /// All `k`-tuples of `universe`, or `samples` random ones drawn with `draw`.
    fn tuples<T: Clone>(
        &self,
        label: &str,
        k: usize,
        universe: impl FnOnce() -> Vec<T>,
        draw: impl Fn(&mut ChaCha8Rng) -> T,
        keep: impl Fn(&T) -> bool,
    ) -> Vec<Vec<T>> {
        if self
            .field()
            .modulus()
            .is_some_and(|p| p <= EXHAUSTIVE_MAX_PRIME)
        {
            let items: Vec<T> = universe().into_iter().filter(|x| keep(x)).collect();
            if self.exhaustive(items.len(), k) {
                return std::iter::repeat_n(items, k)
                    .multi_cartesian_product()
                    .collect();
            }
        }
        let mut rng = self.rng(label);
        let mut out = Vec::with_capacity(self.samples);
        // a filter that rejects everything must not loop forever
        let mut budget = self.samples.saturating_mul(100).max(1000);
        while out.len() < self.samples && budget > 0 {
            let tuple: Vec<T> = (0..k)
                .map(|_| loop {
                    budget = budget.saturating_sub(1);
                    let x = draw(&mut rng);
                    if keep(&x) || budget == 0 {
                        break x;
                    }
                })
                .collect();
            if tuple.iter().all(&keep) {
                out.push(tuple);
            }
        }
        out
    }

    fn elements(
        &self,
        label: &str,
        k: usize,
        keep: impl Fn(&FieldElement) -> bool,
    ) -> Vec<Vec<FieldElement>> {
        let field = self.field();
        self.tuples(
            label,
            k,
            || field.elements().map(|e| e.collect()).unwrap_or_default(),
            |rng| self.random_element(rng),
            keep,
        )
    }

    /// Curve points from the brute-force scan when exhaustive, else `pbar` of random parameters.
    fn points(
        &self,
        label: &str,
        k: usize,
        keep: impl Fn(&ProjectivePoint) -> bool,
    ) -> Vec<Vec<ProjectivePoint>> {
        self.tuples(
            label,
            k,
            || self.curve.enumerate_points().unwrap_or_default(),
            |rng| {
                self.curve
                    .pbar(&self.random_element(rng))
                    .expect("pbar is total")
            },
            keep,
        )
    }

    fn non_origin(&self, label: &str, k: usize) -> Vec<Vec<ProjectivePoint>> {
        let o = self.curve.origin();
        self.points(label, k, |p| *p != o)
    }

    fn suite(&self, suite: Suite) -> Props {
        match suite {
            Suite::Field => Ok(self.field_axioms()),
            Suite::Count => self.count(),
            Suite::Bijection => Ok(self.bijection()),
            Suite::Coincide => Ok(self.coincide()),
            Suite::Identities => Ok(self.identities()),
            Suite::Geometry => Ok(self.geometry()),
            Suite::Collinear => Ok(self.collinear()),
            Suite::Perpendicular => self.perpendicular(),
            Suite::Branches => self.branches(),
            Suite::All => unreachable!("expanded by run"),
            law_suite => self.law(law_suite.law().expect("law suite")),
        }
    }

    fn field_axioms(&self) -> Vec<PropertyResult> {
        let triples = self.elements("field/triples", 3, |_| true);
        let (zero, one) = (self.el(0), self.el(1));
        vec![
            elements_property("add_associative", &triples, |t| {
                Ok(&(&t[0] + &t[1]) + &t[2] == &t[0] + &(&t[1] + &t[2]))
            }),
            elements_property("add_commutative", &triples, |t| {
                Ok(&t[0] + &t[1] == &t[1] + &t[0])
            }),
            elements_property("mul_associative", &triples, |t| {
                Ok(&(&t[0] * &t[1]) * &t[2] == &t[0] * &(&t[1] * &t[2]))
            }),
            elements_property("mul_commutative", &triples, |t| {
                Ok(&t[0] * &t[1] == &t[1] * &t[0])
            }),
            elements_property("distributive", &triples, |t| {
                Ok(&t[0] * &(&t[1] + &t[2]) == &t[0] * &t[1] + &t[0] * &t[2])
            }),
            elements_property("identities", &triples, |t| {
                Ok(&t[0] + &zero == t[0] && &t[0] * &one == t[0])
            }),
            elements_property("additive_inverse", &triples, |t| {
                Ok((&t[0] + &-t[0].clone()).is_zero())
            }),
            elements_property("multiplicative_inverse", &triples, |t| {
                Ok(t[0].is_zero() || &t[0] * &t[0].inv()? == one)
            }),
        ]
    }

    fn count(&self) -> Props {
        let field = self.field();
        let p = field
            .modulus()
            .ok_or_else(|| "point count needs a finite field".to_string())?;
        let pts = self.curve.enumerate_points().map_err(|e| e.to_string())?;
        Ok(vec![PropertyResult {
            name: "point_count".into(),
            instances: 1,
            passed: pts.len() as u64 == p,
            counterexample: (pts.len() as u64 != p)
                .then(|| format!("enumerated {} points, expected {p}", pts.len())),
        }])
    }

    fn bijection(&self) -> Vec<PropertyResult> {
        let c = self.curve;
        let ts = self.elements("bijection/elements", 1, |_| true);
        let pts = self.points("bijection/points", 1, |_| true);
        let minus_one = self.el(-1);
        let mut props = vec![
            elements_property("pbar_round_trip", &ts, |t| {
                Ok(c.pbar_inv(&c.pbar(&t[0])?)? == t[0])
            }),
            elements_property("pbarbar_round_trip", &ts, |t| {
                Ok(c.pbarbar_inv(&c.pbarbar(&t[0])?)? == t[0])
            }),
            points_property("pbar_inverse_round_trip", &pts, |p| {
                Ok(c.pbar(&c.pbar_inv(&p[0])?)? == p[0])
            }),
            points_property("pbarbar_inverse_round_trip", &pts, |p| {
                Ok(c.pbarbar(&c.pbarbar_inv(&p[0])?)? == p[0])
            }),
            elements_property("paffine_agrees_with_pbar", &ts, |t| {
                Ok(if t[0].pow(3) == minus_one {
                    c.p_affine(&t[0]).is_err()
                } else {
                    c.p_affine(&t[0])? == c.pbar(&t[0])?
                        && c.p_affine_prime(&t[0])? == c.pbarbar(&t[0])?
                })
            }),
            elements_property("sigma_inverts_slope", &ts, |t| {
                Ok(t[0].is_zero() || sigma(&c.pbar(&t[0])?) == c.pbar(&t[0].inv()?)?)
            }),
            points_property("sigma_involution", &pts, |p| {
                Ok(sigma(&sigma(&p[0])) == p[0])
            }),
        ];
        if let (Some(elems), Ok(all)) = (self.field().elements(), c.enumerate_points()) {
            let image: Result<HashSet<_>, _> = elems.map(|t| c.pbar(&t)).collect();
            let expected: HashSet<_> = all.into_iter().collect();
            let ok = image.is_ok_and(|img| img == expected);
            props.push(PropertyResult {
                name: "pbar_onto_enumerated_points".into(),
                instances: 1,
                passed: ok,
                counterexample: (!ok)
                    .then(|| "image of pbar differs from the scanned points".into()),
            });
        }
        props
    }

    fn law(&self, law: LawKind) -> Props {
        let c = self.curve;
        let e = c.neutral(law).map_err(|e| e.to_string())?;
        let label = law.name();
        let in_domain = |p: &ProjectivePoint| c.in_domain(law, p);
        let op = |p: &ProjectivePoint, q: &ProjectivePoint| c.compose(law, p, q);
        let singles = self.points(&format!("{label}/singles"), 1, in_domain);
        let pairs = self.points(&format!("{label}/pairs"), 2, in_domain);
        let triples = self.points(&format!("{label}/triples"), 3, in_domain);

        let mut props = vec![
            points_property("closure", &pairs, |p| {
                Ok(c.in_domain(law, &op(&p[0], &p[1])?))
            }),
            points_property("associativity", &triples, |p| {
                Ok(op(&op(&p[0], &p[1])?, &p[2])? == op(&p[0], &op(&p[1], &p[2])?)?)
            }),
            points_property("commutativity", &pairs, |p| {
                Ok(op(&p[0], &p[1])? == op(&p[1], &p[0])?)
            }),
            points_property("neutral", &singles, |p| {
                Ok(op(&p[0], &e)? == p[0] && op(&e, &p[0])? == p[0])
            }),
            points_property("inverse", &singles, |p| {
                if law == LawKind::FieldMul && p[0] == c.origin() {
                    return Ok(c.inverse(law, &p[0]) == Err(FoliumError::DivisionByZeroPoint));
                }
                Ok(op(&p[0], &c.inverse(law, &p[0])?)? == e)
            }),
        ];

        let nonzero = |t: &FieldElement| !t.is_zero();
        let homomorphism = match law {
            LawKind::AddSouth | LawKind::AddWest | LawKind::FieldMul => {
                self.elements(&format!("{label}/homomorphism"), 2, |_| true)
            }
            _ => self.elements(&format!("{label}/homomorphism"), 2, nonzero),
        };
        props.push(elements_property("homomorphism", &homomorphism, |t| {
            let (s, u) = (&t[0], &t[1]);
            let pa = |tau: &FieldElement| c.p_affine(&alpha(tau));
            let pa2 = |tau: &FieldElement| c.p_affine_prime(&alpha(tau));
            Ok(match law {
                LawKind::ProjMul => c.pbar(&(s * u))? == op(&c.pbar(s)?, &c.pbar(u)?)?,
                LawKind::ProjMul2 => c.pbarbar(&(s * u))? == op(&c.pbarbar(s)?, &c.pbarbar(u)?)?,
                LawKind::StarMul => c.pbar(&-(s * u))? == op(&c.pbar(s)?, &c.pbar(u)?)?,
                LawKind::AddSouth => c.pbar(&(s + u))? == op(&c.pbar(s)?, &c.pbar(u)?)?,
                LawKind::AddWest => c.pbarbar(&(s + u))? == op(&c.pbarbar(s)?, &c.pbarbar(u)?)?,
                LawKind::SouthMul => pa(&(s * u))? == op(&pa(s)?, &pa(u)?)?,
                LawKind::WestMul => pa2(&(s * u))? == op(&pa2(s)?, &pa2(u)?)?,
                LawKind::FieldMul => c.pbar(&(s * u))? == op(&c.pbar(s)?, &c.pbar(u)?)?,
            })
        }));

        if law == LawKind::FieldMul {
            let o = c.origin();
            props.push(points_property(
                "distributive_over_addsouth",
                &triples,
                |p| {
                    let lhs = c.field_mul(&p[0], &c.add_south(&p[1], &p[2])?)?;
                    let rhs =
                        c.add_south(&c.field_mul(&p[0], &p[1])?, &c.field_mul(&p[0], &p[2])?)?;
                    Ok(lhs == rhs)
                },
            ));
            props.push(points_property("origin_absorbs", &singles, |p| {
                Ok(c.field_mul(&o, &p[0])? == o && c.field_mul(&p[0], &o)? == o)
            }));
            props.push(points_property("division", &pairs, |p| {
                if p[1] == o {
                    return Ok(c.field_div(&p[0], &p[1]) == Err(FoliumError::DivisionByZeroPoint));
                }
                Ok(c.field_mul(&c.field_div(&p[0], &p[1])?, &p[1])? == p[0])
            }));
            props.push(points_property("sigma_is_field_isomorphism", &pairs, |p| {
                let (x, y) = (&p[0], &p[1]);
                Ok(
                    sigma(&c.add_south(x, y)?) == c.add_west(&sigma(x), &sigma(y))?
                        && sigma(&c.field_mul(x, y)?) == c.field_mul(&sigma(x), &sigma(y))?,
                )
            }));
        }
        if law == LawKind::SouthMul {
            props.push(points_property("sigma_carries_to_westmul", &pairs, |p| {
                Ok(sigma(&c.south_mul(&p[0], &p[1])?)
                    == c.west_mul(&sigma(&p[0]), &sigma(&p[1]))?)
            }));
        }
        Ok(props)
    }

    fn coincide(&self) -> Vec<PropertyResult> {
        let c = self.curve;
        let pairs = self.non_origin("coincide/pairs", 2);
        let singles = self.non_origin("coincide/singles", 1);
        let all = self.points("coincide/all", 1, |_| true);
        vec![
            points_property("projmul_equals_projmul2", &pairs, |p| {
                Ok(c.proj_mul(&p[0], &p[1])? == c.proj_mul2(&p[0], &p[1])?)
            }),
            points_property("multiplicative_inverses_coincide", &singles, |p| {
                let p = &p[0];
                let dot = c.pbar(&c.pbar_inv(p)?.inv()?)?;
                let circ = c.pbarbar(&c.pbarbar_inv(p)?.inv()?)?;
                Ok(dot == circ
                    && dot == sigma(p)
                    && c.star_mul(p, &dot)? == c.infinity()
                    && c.proj_mul(p, &dot)? == c.unit())
            }),
            points_property("additive_inverses_coincide", &all, |p| {
                let p = &p[0];
                let plus = c.pbar(&-c.pbar_inv(p)?)?;
                let oplus = c.pbarbar(&-c.pbarbar_inv(p)?)?;
                Ok(plus == oplus
                    && c.add_south(p, &plus)? == c.origin()
                    && c.add_west(p, &oplus)? == c.origin())
            }),
        ]
    }

    fn identities(&self) -> Vec<PropertyResult> {
        let c = self.curve;
        let (i, v) = (c.infinity(), c.unit());
        let fixed = [vec![i.clone(), v.clone()]];
        let pairs = self.non_origin("identities/pairs", 2);
        let triples = self.non_origin("identities/triples", 3);
        let chains = self.non_origin("identities/chains", 7);
        let singles = self.non_origin("identities/singles", 1);
        let dot = |pts: &[ProjectivePoint]| c.compose_all(LawKind::ProjMul, pts);
        let star = |pts: &[ProjectivePoint]| c.compose_all(LawKind::StarMul, pts);
        let minus_one = self.el(-1);
        vec![
            points_property("i_squared_is_v", &fixed, |_| Ok(c.proj_mul(&i, &i)? == v)),
            points_property("i_cubed_is_i", &fixed, |_| {
                Ok(dot(&[i.clone(), i.clone(), i.clone()])? == i)
            }),
            points_property("perp_of_i_is_v", &fixed, |_| Ok(c.perp(&i)? == v)),
            points_property("perp_of_v_is_i", &fixed, |_| Ok(c.perp(&v)? == i)),
            points_property("star_is_dot_times_i", &pairs, |p| {
                Ok(c.star_mul(&p[0], &p[1])? == dot(&[p[0].clone(), p[1].clone(), i.clone()])?)
            }),
            points_property("dot_is_star_times_v", &pairs, |p| {
                Ok(c.proj_mul(&p[0], &p[1])? == star(&[p[0].clone(), p[1].clone(), v.clone()])?)
            }),
            points_property("triple_star_equals_triple_dot", &triples, |p| {
                Ok(star(p)? == dot(p)?)
            }),
            points_property("parity_chains", &chains, |p| {
                for k in 2..=p.len() {
                    let d = dot(&p[..k])?;
                    let expected = if k % 2 == 0 { c.proj_mul(&d, &i)? } else { d };
                    if star(&p[..k])? != expected {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
            points_property("perp_via_inverse", &singles, |p| {
                let inv = c.proj_inv(&p[0])?;
                let perp = c.perp(&p[0])?;
                Ok(perp == c.proj_mul(&inv, &i)? && perp == c.star_mul(&inv, &v)?)
            }),
            points_property("perp_involution", &singles, |p| {
                Ok(c.perp(&c.perp(&p[0])?)? == p[0])
            }),
            points_property(
                "star_cube_is_i_iff_slope_cube_is_minus_one",
                &singles,
                |p| {
                    let cube = star(&[p[0].clone(), p[0].clone(), p[0].clone()])?;
                    Ok((cube == i) == (c.pbar_inv(&p[0])?.pow(3) == minus_one))
                },
            ),
        ]
    }

    fn geometry(&self) -> Vec<PropertyResult> {
        let c = self.curve;
        let pairs = self.non_origin("geometry/pairs", 2);
        vec![
            points_property("geometric_mul_matches_projmul", &pairs, |p| {
                Ok(c.geometric_mul(&p[0], &p[1])? == c.proj_mul(&p[0], &p[1])?)
            }),
            points_property("via_vertex_matches_projmul", &pairs, |p| {
                Ok(c.geometric_mul_via_vertex(&p[0], &p[1])? == c.proj_mul(&p[0], &p[1])?)
            }),
            points_property("third_point_on_chord", &pairs, |p| {
                let third = c.third_intersection(&p[0], &p[1])?;
                let line = c.chord(&p[0], &p[1])?;
                Ok(line.contains(&third) && c.collinear3(&p[0], &p[1], &third)?)
            }),
            points_property("slope_cubic", &pairs, |p| {
                let third = c.third_intersection(&p[0], &p[1])?;
                let line = c.chord(&p[0], &p[1])?;
                c.slope_cubic_check(&line, &[p[0].clone(), p[1].clone(), third])
            }),
        ]
    }

    fn collinear(&self) -> Vec<PropertyResult> {
        let c = self.curve;
        let minus_one = self.el(-1);
        let slope_product = |pts: &[ProjectivePoint]| -> Result<FieldElement, FoliumError> {
            pts.iter()
                .try_fold(self.el(1), |acc, p| Ok(acc * c.pbar_inv(p)?))
        };
        let identities = |pts: &[ProjectivePoint]| -> Result<bool, FoliumError> {
            Ok(c.collinear3(&pts[0], &pts[1], &pts[2])?
                && slope_product(pts)? == minus_one
                && c.compose_all(LawKind::ProjMul, pts)? == c.infinity()
                && c.compose_all(LawKind::StarMul, pts)? == c.infinity())
        };

        let small = self
            .field()
            .modulus()
            .is_some_and(|p| p <= EXHAUSTIVE_MAX_PRIME);
        if small {
            let sections = c.all_line_sections().expect("finite field");
            let complete: Vec<Vec<ProjectivePoint>> = sections
                .iter()
                .filter(|s| !s.line.passes_through_origin() && s.is_complete())
                .map(|s| s.points.clone())
                .collect();
            let key =
                |pts: &[ProjectivePoint]| pts.iter().map(ToString::to_string).sorted().join(";");
            let known: HashSet<String> = sections.iter().map(|s| key(&s.points)).collect();
            let triples: Vec<Vec<ProjectivePoint>> = self
                .non_origin("collinear/triples", 3)
                .into_iter()
                .filter(|t| slope_product(t).is_ok_and(|s| s == minus_one))
                .collect();
            vec![
                points_property("line_sections_satisfy_identities", &complete, identities),
                points_property("slope_triples_are_line_sections", &triples, |t| {
                    Ok(known.contains(&key(t)))
                }),
            ]
        } else {
            let pairs = self.non_origin("collinear/pairs", 2);
            let triples = self.non_origin("collinear/triples", 3);
            vec![
                points_property("chord_triples_satisfy_identities", &pairs, |p| {
                    let third = c.third_intersection(&p[0], &p[1])?;
                    let pts = [p[0].clone(), p[1].clone(), third];
                    let on_line = p[0] == p[1] || det3(&pts[0], &pts[1], &pts[2]).is_zero();
                    Ok(on_line && identities(&pts)?)
                }),
                points_property("identity_iff_determinant_vanishes", &triples, |p| {
                    let distinct = p[0] != p[1] && p[1] != p[2] && p[0] != p[2];
                    let identity = c.collinear3(&p[0], &p[1], &p[2])?;
                    Ok(!distinct || identity == det3(&p[0], &p[1], &p[2]).is_zero())
                }),
            ]
        }
    }

    fn perpendicular(&self) -> Props {
        let c = self.curve;
        let v = c.vertex().map_err(|e| e.to_string())?;
        let o = c.origin();
        let admissible = |p: &ProjectivePoint| *p != o && *p != v && p.is_affine();
        let singles = self.points("perpendicular/singles", 1, |p| {
            admissible(p) && c.third_intersection(&v, p).is_ok_and(|q| q.is_affine())
        });
        let pairs = self.points("perpendicular/pairs", 2, admissible);
        Ok(vec![
            points_property("third_through_vertex_is_perpendicular", &singles, |p| {
                let q = c.third_intersection(&v, &p[0])?;
                c.perpendicular_chord_check(&p[0], &q)
            }),
            points_property(
                "perpendicular_partner_is_collinear_with_vertex",
                &singles,
                |p| {
                    let partner = c.pbar(&-c.pbar_inv(&p[0])?.inv()?)?;
                    Ok(c.perpendicular_chord_check(&p[0], &partner)?
                        && c.collinear3(&v, &p[0], &partner)?)
                },
            ),
            points_property("perpendicular_iff_collinear_with_vertex", &pairs, |p| {
                Ok(c.perpendicular_chord_check(&p[0], &p[1])? == c.collinear3(&v, &p[0], &p[1])?)
            }),
        ])
    }

    fn branches(&self) -> Props {
        let c = self.curve;
        if self.field().is_finite() {
            return Err(FoliumError::UnorderedField(self.field()).to_string());
        }
        let singles = self.points("branches/singles", 1, ProjectivePoint::is_affine);
        let (o, v) = (c.origin(), c.vertex().map_err(|e| e.to_string())?);
        let special = [vec![o.clone()], vec![v.clone()]];
        Ok(vec![
            points_property("sigma_mirrors_labels", &singles, |p| {
                Ok(c.classify_branch(&sigma(&p[0]))? == c.classify_branch(&p[0])?.mirrored())
            }),
            points_property("node_and_vertex_are_fixed", &special, |p| {
                Ok(sigma(&p[0]) == p[0]
                    && c.classify_branch(&p[0])? == c.classify_branch(&sigma(&p[0]))?)
            }),
            points_property("node_is_origin_and_vertex_is_pbar_one", &singles, |p| {
                use folium_core::BranchLabel::{Node, Vertex};
                let label = c.classify_branch(&p[0])?;
                Ok((label == Node) == (p[0] == o) && (label == Vertex) == (p[0] == v))
            }),
        ])
    }
}
