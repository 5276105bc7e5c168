//! Rational parametrizations of the Folium and their inverses.
//!
//! `pbar(t) = (3at : 3at^2 : 1 + t^3)` is a bijection from the base field
//! onto the projective curve (`pbar(0) = O`, `pbar(-1) = I`), inverted by
//! the slope `t = y/x`. The swapped map `pbarbar = sigma . pbar` is inverted
//! by `x/y`. Both inverses send `O` to 0. The affine variants only exist
//! where `1 + t^3 != 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::curve::Folium;
use crate::error::{FoliumError, Result};
use crate::field::FieldElement;
use crate::point::ProjectivePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    PBar,
    PBarBar,
    PAffine,
    PAffinePrime,
}

impl ParamKind {
    pub const ALL: [ParamKind; 4] = [
        ParamKind::PBar,
        ParamKind::PBarBar,
        ParamKind::PAffine,
        ParamKind::PAffinePrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::PBar => "pbar",
            ParamKind::PBarBar => "pbarbar",
            ParamKind::PAffine => "paffine",
            ParamKind::PAffinePrime => "paffineprime",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ParamKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown parametrization `{s}`"))
    }
}

/// `alpha(tau) = tau - 1`, from the multiplicative parameter to the slope.
pub fn alpha(tau: &FieldElement) -> FieldElement {
    tau - tau.field().one()
}

/// `alpha_inv(t) = t + 1`.
pub fn alpha_inv(t: &FieldElement) -> FieldElement {
    t + t.field().one()
}

/// The reflection in the first bisector, `(x : y : z) -> (y : x : z)`.
pub fn sigma(pt: &ProjectivePoint) -> ProjectivePoint {
    pt.swapped()
}

impl Folium {
    fn ensure_field(&self, t: &FieldElement) -> Result<()> {
        if t.field() != self.field() {
            return Err(crate::field::FieldError::MixedFields(t.field(), self.field()).into());
        }
        Ok(())
    }

    /// Total on the base field.
    pub fn pbar(&self, t: &FieldElement) -> Result<ProjectivePoint> {
        self.ensure_field(t)?;
        if let (Some(t), Some(a)) = (t.as_rational(), self.a().as_rational()) {
            // t = n/d, a = an/ad; scale by d^3 ad to stay in the integers
            let (n, d) = (t.numer(), t.denom());
            let three_an = BigInt::from(3) * a.numer();
            return ProjectivePoint::from_integers([
                &three_an * n * d * d,
                &three_an * n * n * d,
                a.denom() * (d * d * d + n * n * n),
            ]);
        }
        let three_a = self.int(3) * self.a();
        ProjectivePoint::new(&three_a * t, &three_a * t.square(), self.int(1) + t.pow(3))
    }

    /// Slope `y/x`, with `O -> 0`.
    pub fn pbar_inv(&self, pt: &ProjectivePoint) -> Result<FieldElement> {
        self.check(pt)?;
        if pt.x().is_zero() {
            // only O has x = 0 on the curve
            return Ok(self.int(0));
        }
        Ok(pt.y().try_div(pt.x())?)
    }

    pub fn pbarbar(&self, t: &FieldElement) -> Result<ProjectivePoint> {
        Ok(sigma(&self.pbar(t)?))
    }

    /// `x/y`, with `O -> 0`.
    pub fn pbarbar_inv(&self, pt: &ProjectivePoint) -> Result<FieldElement> {
        self.check(pt)?;
        if pt.y().is_zero() {
            return Ok(self.int(0));
        }
        Ok(pt.x().try_div(pt.y())?)
    }

    /// Affine parametrization; fails when `t^3 = -1`.
    pub fn p_affine(&self, t: &FieldElement) -> Result<ProjectivePoint> {
        self.ensure_field(t)?;
        if (self.int(1) + t.pow(3)).is_zero() {
            return Err(FoliumError::ParameterAtInfinity(t.to_string()));
        }
        // with z = 1 + t^3 nonzero, the canonical form of pbar(t) is the affine point
        self.pbar(t)
    }

    pub fn p_affine_prime(&self, t: &FieldElement) -> Result<ProjectivePoint> {
        Ok(sigma(&self.p_affine(t)?))
    }

    pub fn parametrize(&self, kind: ParamKind, t: &FieldElement) -> Result<ProjectivePoint> {
        match kind {
            ParamKind::PBar => self.pbar(t),
            ParamKind::PBarBar => self.pbarbar(t),
            ParamKind::PAffine => self.p_affine(t),
            ParamKind::PAffinePrime => self.p_affine_prime(t),
        }
    }

    /// Inverse of [`Folium::parametrize`]; the affine kinds reject points at infinity.
    pub fn parameter_of(&self, kind: ParamKind, pt: &ProjectivePoint) -> Result<FieldElement> {
        match kind {
            ParamKind::PBar => self.pbar_inv(pt),
            ParamKind::PBarBar => self.pbarbar_inv(pt),
            ParamKind::PAffine | ParamKind::PAffinePrime if !pt.is_affine() => {
                self.check(pt)?;
                Err(FoliumError::PointAtInfinity(Box::new(pt.clone())))
            }
            ParamKind::PAffine => self.pbar_inv(pt),
            ParamKind::PAffinePrime => self.pbarbar_inv(pt),
        }
    }
}
