//! The projective Folium `x^3 + y^3 - 3a xyz = 0` and its distinguished points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{FoliumError, Result};
use crate::field::{self, Field, FieldElement, EPSILON_SCAN_LIMIT};
use crate::point::{self, ProjectivePoint};

/// Largest `p` accepted by [`Folium::enumerate_points`].
pub const ENUMERATION_LIMIT: u64 = 10_000;

/// Points at infinity beyond `I`, when `e^2 - e + 1` splits.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Epsilon {
    None,
    Roots(FieldElement, FieldElement),
    Unknown,
}

/// An integer triple proportional to a rational point.
fn integer_triple(pt: &ProjectivePoint) -> [BigInt; 3] {
    let q = pt
        .coords()
        .clone()
        .map(|c| c.as_rational().expect("rational point").clone());
    let lcm = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    q.map(|c| c.numer() * (&lcm / c.denom()))
}

/// A Folium of Descartes over a field of characteristic other than 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folium {
    field: Field,
    a: FieldElement,
    epsilon: Epsilon,
}

/// Where the vertex `V = pbar(1)` sits.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)] // built once per report, never stored in bulk
pub enum VertexSlot {
    Point(ProjectivePoint),
    /// Characteristic 2: `(3a : 3a : 2) = (1 : 1 : 0) = I`.
    CoincidesWithInfinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPoints {
    pub origin: ProjectivePoint,
    pub infinity: ProjectivePoint,
    pub vertex: VertexSlot,
    pub at_infinity: Vec<ProjectivePoint>,
}

impl Folium {
    pub fn new(a: FieldElement) -> Result<Self> {
        if a.is_zero() {
            return Err(FoliumError::ZeroParameter);
        }
        let field = a.field();
        let epsilon = match field::solve_epsilon(field) {
            Ok(None) => Epsilon::None,
            Ok(Some((e1, e2))) => Epsilon::Roots(e1, e2),
            Err(_) => Epsilon::Unknown,
        };
        Ok(Folium { field, a, epsilon })
    }

    /// Convenience constructor from an integer `a`.
    pub fn with_int(field: Field, a: i64) -> Result<Self> {
        Self::new(field.from_i64(a))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub(crate) fn int(&self, n: i64) -> FieldElement {
        self.field.from_i64(n)
    }

    /// Cached [`field::solve_epsilon`] for this curve's field.
    pub fn epsilon_roots(&self) -> Result<Option<(FieldElement, FieldElement)>> {
        match &self.epsilon {
            Epsilon::None => Ok(None),
            Epsilon::Roots(e1, e2) => Ok(Some((e1.clone(), e2.clone()))),
            Epsilon::Unknown => Err(FoliumError::FieldTooLargeForScan {
                field: self.field,
                limit: EPSILON_SCAN_LIMIT,
            }),
        }
    }

    /// Cached [`field::cube_root_unique`].
    pub fn cube_root_unique(&self) -> Result<bool> {
        Ok(self.epsilon_roots()?.is_none())
    }

    /// Value of the homogeneous cubic at a triple.
    pub fn evaluate(&self, x: &FieldElement, y: &FieldElement, z: &FieldElement) -> FieldElement {
        x.pow(3) + y.pow(3) - self.int(3) * &self.a * x * y * z
    }

    pub fn contains(&self, pt: &ProjectivePoint) -> bool {
        if pt.field() != self.field {
            return false;
        }
        match self.a.as_rational() {
            Some(a) => {
                // Clearing denominators keeps the test in plain integer arithmetic;
                // reduced rationals pay a gcd on every operation.
                let [x, y, z] = integer_triple(pt);
                let cubic = &x * &x * &x + &y * &y * &y;
                a.denom() * cubic == BigInt::from(3) * a.numer() * x * y * z
            }
            None => self.evaluate(pt.x(), pt.y(), pt.z()).is_zero(),
        }
    }

    /// `Ok` iff the point belongs to this curve's field and lies on the curve.
    pub fn check(&self, pt: &ProjectivePoint) -> Result<()> {
        if pt.field() != self.field {
            return Err(FoliumError::ForeignPoint(
                Box::new(pt.clone()),
                pt.field(),
                self.field,
            ));
        }
        if !self.contains(pt) {
            return Err(FoliumError::NotOnCurve(Box::new(pt.clone())));
        }
        Ok(())
    }

    pub fn origin(&self) -> ProjectivePoint {
        ProjectivePoint::new(self.int(0), self.int(0), self.int(1)).unwrap()
    }

    /// The point at infinity `I = (1 : -1 : 0)`.
    pub fn infinity(&self) -> ProjectivePoint {
        ProjectivePoint::new(self.int(1), self.int(-1), self.int(0)).unwrap()
    }

    /// `pbar(1) = (3a : 3a : 2)`, neutral for the multiplicative law in every
    /// characteristic (it equals `I` in characteristic 2).
    pub fn unit(&self) -> ProjectivePoint {
        let three_a = self.int(3) * &self.a;
        ProjectivePoint::new(three_a.clone(), three_a, self.int(2)).unwrap()
    }

    /// The vertex `V = (3a/2, 3a/2)`; undefined in characteristic 2.
    pub fn vertex(&self) -> Result<ProjectivePoint> {
        if self.field.characteristic() == 2 {
            return Err(FoliumError::CharacteristicTwo);
        }
        Ok(self.unit())
    }

    pub fn special_points(&self) -> Result<SpecialPoints> {
        let infinity = self.infinity();
        let mut at_infinity = vec![infinity.clone()];
        if let Some((e1, e2)) = self.epsilon_roots()? {
            for e in [e1, e2] {
                at_infinity.push(ProjectivePoint::new(self.int(1), e, self.int(0))?);
            }
        }
        let vertex = match self.vertex() {
            Ok(v) => VertexSlot::Point(v),
            Err(_) => VertexSlot::CoincidesWithInfinity,
        };
        Ok(SpecialPoints {
            origin: self.origin(),
            infinity,
            vertex,
            at_infinity,
        })
    }

    /// Brute-force list of all curve points over `F_p`, scanning every
    /// canonical representative of `P^2(F_p)`. Independent of any
    /// parametrization.
    pub fn enumerate_points(&self) -> Result<Vec<ProjectivePoint>> {
        let p = self
            .field
            .modulus()
            .ok_or(FoliumError::RequiresFiniteField(self.field))?;
        if p > ENUMERATION_LIMIT {
            return Err(FoliumError::FieldTooLargeForScan {
                field: self.field,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(point::enumerate_points(self.field)
            .expect("finite field")
            .into_iter()
            .filter(|pt| self.contains(pt))
            .collect())
    }

    /// `(3x^2 - 3ayz, 3y^2 - 3axz, -3axy)`.
    pub fn gradient(&self, pt: &ProjectivePoint) -> [FieldElement; 3] {
        let three = self.int(3);
        let three_a = &three * &self.a;
        let [x, y, z] = pt.coords();
        [
            &three * x.square() - &three_a * y * z,
            &three * y.square() - &three_a * x * z,
            -(&three_a * x * y),
        ]
    }

    pub fn is_singular_point(&self, pt: &ProjectivePoint) -> Result<bool> {
        self.check(pt)?;
        Ok(self.gradient(pt).iter().all(FieldElement::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        Field::rationals().from_ratio(n, d).unwrap()
    }

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn pt(field: Field, x: i64, y: i64, z: i64) -> ProjectivePoint {
        ProjectivePoint::new(field.from_i64(x), field.from_i64(y), field.from_i64(z)).unwrap()
    }

    #[test]
    fn zero_parameter_rejected() {
        assert_eq!(
            Folium::with_int(Field::rationals(), 0),
            Err(FoliumError::ZeroParameter)
        );
        assert_eq!(Folium::with_int(f(5), 5), Err(FoliumError::ZeroParameter));
    }

    #[test]
    fn membership_examples() {
        let c = Folium::with_int(Field::rationals(), 1).unwrap();
        let p = ProjectivePoint::affine(q(2, 3), q(4, 3)).unwrap();
        assert!(c.contains(&p));
        assert!(c.contains(&c.origin()));
        assert!(!c.contains(&ProjectivePoint::affine(q(1, 1), q(1, 1)).unwrap()));
        let c5 = Folium::with_int(f(5), 1).unwrap();
        assert!(c5.contains(&pt(f(5), 4, 3, 1)));
        assert!(!c5.contains(&p), "foreign points are never contained");
        for a in [2, -3, 7] {
            assert!(Folium::with_int(Field::rationals(), a)
                .unwrap()
                .contains(&c.origin()));
        }
    }

    #[test]
    fn special_point_examples() {
        let sp = Folium::with_int(Field::rationals(), 1)
            .unwrap()
            .special_points()
            .unwrap();
        assert_eq!(
            sp.vertex,
            VertexSlot::Point(ProjectivePoint::affine(q(3, 2), q(3, 2)).unwrap())
        );
        assert_eq!(sp.at_infinity, vec![sp.infinity.clone()]);
        assert_eq!(sp.infinity.to_string(), "(1 : -1 : 0)");
        assert_eq!(sp.origin.to_string(), "(0 : 0 : 1)");

        let sp5 = Folium::with_int(f(5), 1).unwrap().special_points().unwrap();
        assert_eq!(sp5.vertex, VertexSlot::Point(pt(f(5), 4, 4, 1)));

        let sp7 = Folium::with_int(f(7), 1).unwrap().special_points().unwrap();
        assert_eq!(
            sp7.at_infinity,
            vec![pt(f(7), 1, -1, 0), pt(f(7), 1, 3, 0), pt(f(7), 1, 5, 0)]
        );

        let c2 = Folium::with_int(f(2), 1).unwrap();
        let sp2 = c2.special_points().unwrap();
        assert_eq!(sp2.vertex, VertexSlot::CoincidesWithInfinity);
        assert_eq!(c2.unit(), c2.infinity());
        assert_eq!(c2.vertex(), Err(FoliumError::CharacteristicTwo));
    }

    #[test]
    fn special_points_on_curve() {
        for c in [
            Folium::with_int(f(7), 1).unwrap(),
            Folium::with_int(f(13), 5).unwrap(),
            Folium::with_int(Field::rationals(), -3).unwrap(),
        ] {
            let sp = c.special_points().unwrap();
            for p in sp.at_infinity.iter().chain([&sp.origin]) {
                assert!(c.contains(p), "{p}");
            }
            if let VertexSlot::Point(v) = sp.vertex {
                assert!(c.contains(&v));
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let c5 = Folium::with_int(f(5), 1).unwrap();
        let mut pts = c5.enumerate_points().unwrap();
        let mut expected = vec![
            pt(f(5), 0, 0, 1),
            pt(f(5), 1, -1, 0),
            pt(f(5), 4, 4, 1),
            pt(f(5), 4, 3, 1),
            pt(f(5), 3, 4, 1),
        ];
        let key = |p: &ProjectivePoint| p.to_string();
        pts.sort_by_key(key);
        expected.sort_by_key(key);
        assert_eq!(pts, expected);
        assert_eq!(
            Folium::with_int(f(2), 1)
                .unwrap()
                .enumerate_points()
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            Folium::with_int(f(7), 2)
                .unwrap()
                .enumerate_points()
                .unwrap()
                .len(),
            7
        );
    }

    #[test]
    fn enumeration_guards() {
        let cq = Folium::with_int(Field::rationals(), 1).unwrap();
        assert!(matches!(
            cq.enumerate_points(),
            Err(FoliumError::RequiresFiniteField(_))
        ));
        let big = Folium::with_int(f(10_007), 1).unwrap();
        assert!(matches!(
            big.enumerate_points(),
            Err(FoliumError::FieldTooLargeForScan { .. })
        ));
    }

    #[test]
    fn singular_point_examples() {
        let c = Folium::with_int(Field::rationals(), 1).unwrap();
        assert!(c.is_singular_point(&c.origin()).unwrap());
        let v = c.vertex().unwrap();
        assert!(!c.is_singular_point(&v).unwrap());
        assert_eq!(c.gradient(&v), [q(9, 4), q(9, 4), q(-27, 4)]);
        assert!(!c.is_singular_point(&c.infinity()).unwrap());
        assert_eq!(c.gradient(&c.infinity()), [q(3, 1), q(3, 1), q(3, 1)]);
        let off = ProjectivePoint::affine(q(1, 1), q(1, 1)).unwrap();
        assert!(matches!(
            c.is_singular_point(&off),
            Err(FoliumError::NotOnCurve(_))
        ));
    }
}
