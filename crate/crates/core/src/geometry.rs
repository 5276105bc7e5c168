//! Chords, tangents and the chord-tangent realization of the multiplicative law.
//!
//! Three non-`O` points of the curve are cut out by one line (counted with
//! multiplicity) exactly when the product of their slopes `t = y/x` is `-1`.
//! The third intersection is computed from that identity; the slope cubic
//! and the brute-force line oracle check it independently.

use crate::curve::Folium;
use crate::error::{FoliumError, Result};
use crate::field::FieldElement;
use crate::point::{ProjectiveLine, ProjectivePoint};

impl Folium {
    fn non_origin_slope(&self, p: &ProjectivePoint) -> Result<FieldElement> {
        let t = self.pbar_inv(p)?;
        if t.is_zero() {
            return Err(FoliumError::OriginNotAllowed);
        }
        Ok(t)
    }

    /// Tangent line at a smooth point (the gradient of the cubic).
    pub fn tangent_at(&self, p: &ProjectivePoint) -> Result<ProjectiveLine> {
        self.check(p)?;
        let [m, n, q] = self.gradient(p);
        ProjectiveLine::new(m, n, q).map_err(|_| FoliumError::SingularPoint(Box::new(p.clone())))
    }

    /// Chord through two distinct points, or the tangent when they coincide.
    pub fn chord(&self, p1: &ProjectivePoint, p2: &ProjectivePoint) -> Result<ProjectiveLine> {
        if p1 == p2 {
            self.tangent_at(p1)
        } else {
            self.check(p1)?;
            self.check(p2)?;
            ProjectiveLine::through(p1, p2)
        }
    }

    /// Third intersection of the chord (or tangent) through `p1, p2`:
    /// `pbar(-1 / (t1 t2))`. Never `O`.
    pub fn third_intersection(
        &self,
        p1: &ProjectivePoint,
        p2: &ProjectivePoint,
    ) -> Result<ProjectivePoint> {
        let t1 = self.non_origin_slope(p1)?;
        let t2 = self.non_origin_slope(p2)?;
        let t3 = -(t1 * t2).inv()?;
        debug_assert!(!t3.is_zero());
        let p3 = self.pbar(&t3)?;
        debug_assert!(
            self.chord(p1, p2).is_ok_and(|l| l.contains(&p3)),
            "third intersection {p3} off the chord through {p1}, {p2}"
        );
        Ok(p3)
    }

    /// The coordinate identity `x1 x2 x3 + y1 y2 y3 = 0`. For non-`O` points
    /// this is equivalent to collinearity with multiplicity; a triple
    /// containing `O` always satisfies it.
    pub fn collinear3(
        &self,
        p1: &ProjectivePoint,
        p2: &ProjectivePoint,
        p3: &ProjectivePoint,
    ) -> Result<bool> {
        for p in [p1, p2, p3] {
            self.check(p)?;
        }
        Ok((p1.x() * p2.x() * p3.x() + p1.y() * p2.y() * p3.y()).is_zero())
    }

    /// `P1 . P2 = P3^perp` with `P3` the third intersection.
    pub fn geometric_mul(
        &self,
        p1: &ProjectivePoint,
        p2: &ProjectivePoint,
    ) -> Result<ProjectivePoint> {
        let p3 = self.third_intersection(p1, p2)?;
        self.perp(&p3)
    }

    /// `P1 . P2` as the third intersection of the line through `V` and `P3`.
    pub fn geometric_mul_via_vertex(
        &self,
        p1: &ProjectivePoint,
        p2: &ProjectivePoint,
    ) -> Result<ProjectivePoint> {
        let p3 = self.third_intersection(p1, p2)?;
        self.third_intersection(&self.unit(), &p3)
    }

    /// Checks that every curve point `P != O` on `line` has its slope among
    /// the roots of `t^3 - 3an t^2 - 3am t + 1`, where the line is written
    /// `m x + n y = z`.
    pub fn slope_cubic_check(
        &self,
        line: &ProjectiveLine,
        points: &[ProjectivePoint],
    ) -> Result<bool> {
        if line.passes_through_origin() {
            return Err(FoliumError::LineThroughOrigin);
        }
        let (m, n) = self.slope_cubic_coefficients(line)?;
        let three_a = self.int(3) * self.a();
        for p in points.iter().filter(|p| line.contains(p)) {
            self.check(p)?;
            if *p == self.origin() {
                continue;
            }
            let t = self.pbar_inv(p)?;
            let value = t.pow(3) - &three_a * &n * t.square() - &three_a * &m * &t + self.int(1);
            if !value.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(m, n)` with the line rewritten as `m x + n y = z`.
    pub fn slope_cubic_coefficients(
        &self,
        line: &ProjectiveLine,
    ) -> Result<(FieldElement, FieldElement)> {
        if line.passes_through_origin() {
            return Err(FoliumError::LineThroughOrigin);
        }
        let scale = -line.p().inv()?;
        Ok((line.m() * &scale, line.n() * &scale))
    }

    /// Euclidean perpendicularity of the chords `OP` and `OQ`:
    /// `x_P x_Q + y_P y_Q = 0`. Requires affine `P, Q` other than `O`, `V`.
    pub fn perpendicular_chord_check(
        &self,
        p: &ProjectivePoint,
        q: &ProjectivePoint,
    ) -> Result<bool> {
        let vertex = self.vertex()?;
        for pt in [p, q] {
            self.check(pt)?;
            if *pt == self.origin() {
                return Err(FoliumError::OriginNotAllowed);
            }
            if *pt == vertex {
                return Err(FoliumError::VertexNotAllowed);
            }
            if !pt.is_affine() {
                return Err(FoliumError::PointAtInfinity(Box::new(pt.clone())));
            }
        }
        Ok((p.x() * q.x() + p.y() * q.y()).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q(n: i64, d: i64) -> FieldElement {
        Field::rationals().from_ratio(n, d).unwrap()
    }

    fn curve() -> Folium {
        Folium::with_int(Field::rationals(), 1).unwrap()
    }

    fn pb(c: &Folium, n: i64, d: i64) -> ProjectivePoint {
        c.pbar(&c.field().from_ratio(n, d).unwrap()).unwrap()
    }

    fn line(m: i64, n: i64, p: i64) -> ProjectiveLine {
        ProjectiveLine::new(q(m, 1), q(n, 1), q(p, 1)).unwrap()
    }

    #[test]
    fn tangent_examples() {
        let c = curve();
        let v = c.vertex().unwrap();
        assert_eq!(c.tangent_at(&v).unwrap(), line(1, 1, -3));
        assert_eq!(c.tangent_at(&c.infinity()).unwrap(), line(1, 1, 1));
        assert!(c.tangent_at(&v).unwrap().contains(&c.infinity()));
        assert!(matches!(
            c.tangent_at(&c.origin()),
            Err(FoliumError::SingularPoint(_))
        ));
    }

    #[test]
    fn symmetric_chord() {
        let c = curve();
        let p = ProjectivePoint::affine(q(2, 3), q(4, 3)).unwrap();
        let l = c.chord(&p, &p.swapped()).unwrap();
        assert!(l.contains(&p) && l.contains(&p.swapped()));
        assert_eq!(l.m(), l.n());
    }

    #[test]
    fn third_intersection_examples() {
        let c = curve();
        let v = c.vertex().unwrap();
        let i = c.infinity();
        assert_eq!(
            c.third_intersection(&pb(&c, 2, 1), &pb(&c, 3, 1)).unwrap(),
            pb(&c, -1, 6)
        );
        assert_eq!(c.third_intersection(&v, &v).unwrap(), i);
        assert_eq!(c.third_intersection(&i, &i).unwrap(), i);
        assert_eq!(
            c.third_intersection(&c.origin(), &v),
            Err(FoliumError::OriginNotAllowed)
        );
    }

    #[test]
    fn collinear_examples() {
        let c = curve();
        assert!(c
            .collinear3(&pb(&c, 2, 1), &pb(&c, 3, 1), &pb(&c, -1, 6))
            .unwrap());
        let p = pb(&c, 5, 3);
        assert!(c.collinear3(&c.origin(), &p, &pb(&c, -7, 2)).unwrap());
        let v = c.vertex().unwrap();
        assert!(!c.collinear3(&v, &v, &v).unwrap());
    }

    #[test]
    fn geometric_mul_examples() {
        let c = curve();
        let v = c.vertex().unwrap();
        let (p2, p3) = (pb(&c, 2, 1), pb(&c, 3, 1));
        assert_eq!(c.geometric_mul(&p2, &p3).unwrap(), pb(&c, 6, 1));
        assert_eq!(c.geometric_mul(&p2, &v).unwrap(), p2);
        assert_eq!(c.geometric_mul_via_vertex(&p2, &p3).unwrap(), pb(&c, 6, 1));
        assert_eq!(c.geometric_mul_via_vertex(&v, &v).unwrap(), v);
    }

    #[test]
    fn slope_cubic_examples() {
        let c = curve();
        let (a, b, r) = (pb(&c, 2, 1), pb(&c, 3, 1), pb(&c, -1, 6));
        let l = c.chord(&a, &b).unwrap();
        assert!(c
            .slope_cubic_check(&l, &[a.clone(), b.clone(), r.clone()])
            .unwrap());

        let tangent = line(1, 1, -3);
        let (m, n) = c.slope_cubic_coefficients(&tangent).unwrap();
        assert_eq!((m, n), (q(1, 3), q(1, 3)));
        assert!(c
            .slope_cubic_check(&tangent, &[c.vertex().unwrap(), c.infinity()])
            .unwrap());

        // (2/3, 4/3) is on the curve but not on the tangent; ignored
        assert!(c.slope_cubic_check(&tangent, &[a]).unwrap());
        assert_eq!(
            c.slope_cubic_check(&line(1, 1, 0), &[]),
            Err(FoliumError::LineThroughOrigin)
        );
    }

    #[test]
    fn perpendicular_examples() {
        let c = curve();
        let (p, pp) = (pb(&c, 2, 1), pb(&c, -1, 2));
        assert!(c.perpendicular_chord_check(&p, &pp).unwrap());
        assert!(c.collinear3(&c.vertex().unwrap(), &p, &pp).unwrap());
        assert!(!c.perpendicular_chord_check(&p, &pb(&c, 3, 1)).unwrap());
        assert_eq!(
            c.perpendicular_chord_check(&p, &c.vertex().unwrap()),
            Err(FoliumError::VertexNotAllowed)
        );
        assert_eq!(
            c.perpendicular_chord_check(&c.origin(), &p),
            Err(FoliumError::OriginNotAllowed)
        );
    }
}
