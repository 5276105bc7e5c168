//! Homogeneous triples in the projective plane: points and lines.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{FoliumError, Result};
use crate::field::{Field, FieldElement};

/// Scan order for the pivot coordinate: last slot first, then the first two.
const PIVOT_ORDER: [usize; 3] = [2, 0, 1];

fn canonical_triple(mut c: [FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let field = c[0].field();
    debug_assert!(c.iter().all(|e| e.field() == field));
    let pivot = PIVOT_ORDER.into_iter().find(|&i| !c[i].is_zero())?;
    let scale = c[pivot].inv().expect("pivot is nonzero");
    for e in c.iter_mut() {
        *e = &*e * &scale;
    }
    Some(c)
}

fn check_fields(c: &[FieldElement; 3]) -> Result<Field> {
    let field = c[0].field();
    for e in &c[1..] {
        if e.field() != field {
            return Err(crate::field::FieldError::MixedFields(field, e.field()).into());
        }
    }
    Ok(field)
}

/// A point `(x : y : z)` of the projective plane, stored canonically: the
/// first nonzero coordinate in the order `z, x, y` is scaled to 1. Affine
/// points therefore have `z = 1` and `(1 : -1 : 0)` is already canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [FieldElement; 3],
}

impl ProjectivePoint {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        let coords = [x, y, z];
        check_fields(&coords)?;
        canonical_triple(coords)
            .map(|coords| ProjectivePoint { coords })
            .ok_or(FoliumError::ZeroVector)
    }

    /// Rational point from an integer triple: a single division per coordinate.
    pub(crate) fn from_integers(c: [BigInt; 3]) -> Result<Self> {
        let pivot = PIVOT_ORDER
            .into_iter()
            .find(|&i| !c[i].is_zero())
            .ok_or(FoliumError::ZeroVector)?;
        let coords = std::array::from_fn(|i| {
            if i == pivot {
                Field::rationals().one()
            } else {
                FieldElement::rational(BigRational::new(c[i].clone(), c[pivot].clone()))
            }
        });
        Ok(ProjectivePoint { coords })
    }

    pub fn affine(x: FieldElement, y: FieldElement) -> Result<Self> {
        let one = x.field().one();
        Self::new(x, y, one)
    }

    pub fn x(&self) -> &FieldElement {
        &self.coords[0]
    }

    pub fn y(&self) -> &FieldElement {
        &self.coords[1]
    }

    pub fn z(&self) -> &FieldElement {
        &self.coords[2]
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn is_affine(&self) -> bool {
        !self.z().is_zero()
    }

    /// `(x, y)` when `z = 1`.
    pub fn to_affine(&self) -> Option<(&FieldElement, &FieldElement)> {
        self.is_affine().then(|| (self.x(), self.y()))
    }

    /// Swap of the first two coordinates, `(x : y : z) -> (y : x : z)`.
    pub fn swapped(&self) -> Self {
        let [x, y, z] = self.coords.clone();
        Self::new(y, x, z).expect("swap of a nonzero triple")
    }

    /// Parses `(x : y : z)` or the affine shorthand `(x, y)`; parentheses
    /// are optional.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        let invalid = || FoliumError::InvalidPointLiteral(s.to_string());
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let parts: Vec<&str> = if body.contains(':') {
            body.split(':').collect()
        } else {
            body.split(',').collect()
        };
        let elems = parts
            .iter()
            .map(|p| field.parse_element(p))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        match (
            body.contains(':'),
            <[FieldElement; 3]>::try_from(elems.clone()),
        ) {
            (true, Ok([x, y, z])) => Self::new(x, y, z),
            (false, _) if elems.len() == 2 => {
                let [x, y]: [FieldElement; 2] = elems.try_into().unwrap();
                Self::affine(x, y)
            }
            _ => Err(invalid()),
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "({x} : {y} : {z})")
    }
}

/// A line `m x + n y + p z = 0`, canonicalized like points (pivot order
/// `p, m, n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveLine {
    coeffs: [FieldElement; 3],
}

impl ProjectiveLine {
    pub fn new(m: FieldElement, n: FieldElement, p: FieldElement) -> Result<Self> {
        let coeffs = [m, n, p];
        check_fields(&coeffs)?;
        canonical_triple(coeffs)
            .map(|coeffs| ProjectiveLine { coeffs })
            .ok_or(FoliumError::ZeroLine)
    }

    /// The unique line through two distinct points (cross product).
    pub fn through(a: &ProjectivePoint, b: &ProjectivePoint) -> Result<Self> {
        if a.field() != b.field() {
            return Err(crate::field::FieldError::MixedFields(a.field(), b.field()).into());
        }
        if a == b {
            return Err(FoliumError::CoincidentPoints);
        }
        let [x1, y1, z1] = a.coords();
        let [x2, y2, z2] = b.coords();
        Self::new(y1 * z2 - z1 * y2, z1 * x2 - x1 * z2, x1 * y2 - y1 * x2)
    }

    pub fn m(&self) -> &FieldElement {
        &self.coeffs[0]
    }

    pub fn n(&self) -> &FieldElement {
        &self.coeffs[1]
    }

    pub fn p(&self) -> &FieldElement {
        &self.coeffs[2]
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.coeffs
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    pub fn contains(&self, pt: &ProjectivePoint) -> bool {
        if pt.field() != self.field() {
            return false;
        }
        let [m, n, p] = &self.coeffs;
        let [x, y, z] = pt.coords();
        (m * x + n * y + p * z).is_zero()
    }

    pub fn passes_through_origin(&self) -> bool {
        self.p().is_zero()
    }

    /// Every line of `P^2(F_p)`, one canonical representative each.
    pub fn enumerate(field: Field) -> Option<Vec<ProjectiveLine>> {
        enumerate_triples(field).map(|v| {
            v.into_iter()
                .map(|coeffs| ProjectiveLine { coeffs })
                .collect()
        })
    }
}

impl fmt::Display for ProjectiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [m, n, p] = &self.coeffs;
        write!(f, "[{m} : {n} : {p}]")
    }
}

/// The `p^2 + p + 1` canonical triples of `P^2(F_p)`: `(u, v, 1)`,
/// `(1, v, 0)` and `(0, 1, 0)`.
pub(crate) fn enumerate_triples(field: Field) -> Option<Vec<[FieldElement; 3]>> {
    let elems: Vec<FieldElement> = field.elements()?.collect();
    let (zero, one) = (field.zero(), field.one());
    let mut out = Vec::with_capacity(elems.len() * elems.len() + elems.len() + 1);
    for u in &elems {
        for v in &elems {
            out.push([u.clone(), v.clone(), one.clone()]);
        }
    }
    for v in &elems {
        out.push([one.clone(), v.clone(), zero.clone()]);
    }
    out.push([zero, one, field.zero()]);
    Some(out)
}

pub(crate) fn enumerate_points(field: Field) -> Option<Vec<ProjectivePoint>> {
    enumerate_triples(field).map(|v| {
        v.into_iter()
            .map(|coords| ProjectivePoint { coords })
            .collect()
    })
}
