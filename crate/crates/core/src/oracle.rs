//! Brute-force line sections over `F_p`.
//!
//! Every line of `P^2(F_p)` is intersected with the curve by restricting the
//! cubic to the line, which gives a binary cubic form whose roots (with
//! multiplicity) are the intersection points. Nothing here uses the
//! parametrizations, so it can check them.

use crate::curve::Folium;
use crate::error::{FoliumError, Result};
use crate::field::FieldElement;
use crate::point::{self, ProjectiveLine, ProjectivePoint};

/// The intersection of one line with the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSection {
    pub line: ProjectiveLine,
    /// Intersection points repeated by multiplicity.
    pub points: Vec<ProjectivePoint>,
}

impl LineSection {
    /// All three intersections are `F_p`-rational.
    pub fn is_complete(&self) -> bool {
        self.points.len() == 3
    }
}

/// Linear form `c0 mu + c1 lambda`, as coefficients by power of `lambda`.
type Poly = Vec<FieldElement>;

fn poly_mul(a: &Poly, b: &Poly, zero: &FieldElement) -> Poly {
    let mut out = vec![zero.clone(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Divides `poly` (ascending coefficients) by `(lambda - root)`; returns the
/// quotient when the remainder vanishes.
fn deflate(poly: &[FieldElement], root: &FieldElement) -> Option<Poly> {
    let n = poly.len();
    if n < 2 {
        return None;
    }
    let mut quotient = vec![root.field().zero(); n - 1];
    let mut carry = poly[n - 1].clone();
    for k in (0..n - 1).rev() {
        quotient[k] = carry.clone();
        carry = &poly[k] + &(&carry * root);
    }
    carry.is_zero().then_some(quotient)
}

fn trim(mut poly: Poly) -> Poly {
    while poly.len() > 1 && poly.last().is_some_and(FieldElement::is_zero) {
        poly.pop();
    }
    poly
}

fn combine(lambda: &FieldElement, a: &ProjectivePoint, b: &ProjectivePoint) -> ProjectivePoint {
    let c: Vec<FieldElement> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(u, v)| lambda * u + v)
        .collect();
    let [x, y, z]: [FieldElement; 3] = c.try_into().unwrap();
    ProjectivePoint::new(x, y, z).expect("distinct basis points")
}

impl Folium {
    /// Intersection of a line with the curve over a finite field.
    pub fn line_section(&self, line: &ProjectiveLine) -> Result<LineSection> {
        let field = self.field();
        let plane =
            point::enumerate_points(field).ok_or(FoliumError::RequiresFiniteField(field))?;
        let mut on_line = plane.into_iter().filter(|p| line.contains(p));
        let a = on_line.next().expect("a line has p + 1 points");
        let b = on_line.next().expect("a line has p + 1 points");

        let zero = field.zero();
        // coordinate k of lambda*a + mu*b as [coefficient of mu, coefficient of lambda]
        let lin = |k: usize| -> Poly { vec![b.coords()[k].clone(), a.coords()[k].clone()] };
        let (x, y, z) = (lin(0), lin(1), lin(2));
        let cube = |f: &Poly| poly_mul(&poly_mul(f, f, &zero), f, &zero);
        let three_a = self.int(3) * self.a();
        let xyz = poly_mul(&poly_mul(&x, &y, &zero), &z, &zero);
        // g(lambda, mu), coefficients of lambda^k mu^(3-k)
        let g: Poly = cube(&x)
            .iter()
            .zip(cube(&y))
            .zip(&xyz)
            .map(|((u, v), w)| u + &v - &three_a * w)
            .collect();
        assert!(
            g.iter().any(|c| !c.is_zero()),
            "line {line} lies on the curve"
        );

        let mut points = Vec::new();
        // multiplicity of (lambda : mu) = (1 : 0), i.e. the point a
        let at_a = g.iter().rev().take_while(|c| c.is_zero()).count();
        points.extend(std::iter::repeat_n(a.clone(), at_a));
        let mut h = trim(g);
        for lambda in field.elements().expect("finite field") {
            while let Some(q) = deflate(&h, &lambda) {
                points.push(combine(&lambda, &a, &b));
                h = q;
            }
        }
        Ok(LineSection {
            line: line.clone(),
            points,
        })
    }

    /// Sections of every line of `P^2(F_p)`.
    pub fn all_line_sections(&self) -> Result<Vec<LineSection>> {
        let lines = ProjectiveLine::enumerate(self.field())
            .ok_or(FoliumError::RequiresFiniteField(self.field()))?;
        lines.iter().map(|l| self.line_section(l)).collect()
    }
}
