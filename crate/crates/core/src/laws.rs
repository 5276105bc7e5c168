//! Composition laws transported onto the Folium through its parametrizations.
//!
//! | law        | transported from         | through      | domain           | neutral |
//! |------------|--------------------------|--------------|------------------|---------|
//! | `ProjMul`  | `(K*, t t')`             | `pbar`       | curve minus `O`  | `V`     |
//! | `ProjMul2` | `(K*, t t')`             | `pbarbar`    | curve minus `O`  | `V`     |
//! | `StarMul`  | `(K*, -t t')`            | `pbar`       | curve minus `O`  | `I`     |
//! | `AddSouth` | `(K, t + t')`            | `pbar`       | whole curve      | `O`     |
//! | `AddWest`  | `(K, t + t')`            | `pbarbar`    | whole curve      | `O`     |
//! | `SouthMul` | `(K*, tau tau')`         | `p . alpha`  | affine curve     | `O`     |
//! | `WestMul`  | `(K*, tau tau')`         | `p' . alpha` | affine curve     | `O`     |
//! | `FieldMul` | `(K, t t')`              | `pbar`       | whole curve      | `V`     |
//!
//! `V` here is `pbar(1)`, which is `I` in characteristic 2.

use std::fmt;
use std::str::FromStr;

use crate::curve::Folium;
use crate::error::{FoliumError, Result};
use crate::field::FieldElement;
use crate::param::{alpha, alpha_inv, sigma};
use crate::point::ProjectivePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawKind {
    ProjMul,
    ProjMul2,
    StarMul,
    AddSouth,
    AddWest,
    SouthMul,
    WestMul,
    FieldMul,
}

/// The set of points a law operates on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    WholeCurve,
    CurveMinusOrigin,
    /// `z = 1`; only a group when `-1` is the unique cube root of `-1`.
    AffineCurve,
}

impl LawKind {
    pub const ALL: [LawKind; 8] = [
        LawKind::ProjMul,
        LawKind::ProjMul2,
        LawKind::StarMul,
        LawKind::AddSouth,
        LawKind::AddWest,
        LawKind::SouthMul,
        LawKind::WestMul,
        LawKind::FieldMul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawKind::ProjMul => "projmul",
            LawKind::ProjMul2 => "projmul2",
            LawKind::StarMul => "star",
            LawKind::AddSouth => "addsouth",
            LawKind::AddWest => "addwest",
            LawKind::SouthMul => "southmul",
            LawKind::WestMul => "westmul",
            LawKind::FieldMul => "fieldmul",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            LawKind::ProjMul | LawKind::ProjMul2 | LawKind::StarMul => Domain::CurveMinusOrigin,
            LawKind::AddSouth | LawKind::AddWest | LawKind::FieldMul => Domain::WholeCurve,
            LawKind::SouthMul | LawKind::WestMul => Domain::AffineCurve,
        }
    }

    pub fn needs_unique_cube_root(self) -> bool {
        self.domain() == Domain::AffineCurve
    }
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        LawKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

impl Folium {
    /// `pbar_inv` restricted to `P != O`.
    fn unit_slope(&self, pt: &ProjectivePoint) -> Result<FieldElement> {
        let t = self.pbar_inv(pt)?;
        if t.is_zero() {
            return Err(FoliumError::OriginNotInGroup);
        }
        Ok(t)
    }

    fn unit_coslope(&self, pt: &ProjectivePoint) -> Result<FieldElement> {
        let s = self.pbarbar_inv(pt)?;
        if s.is_zero() {
            return Err(FoliumError::OriginNotInGroup);
        }
        Ok(s)
    }

    /// `pbar(t) . pbar(t') = pbar(t t')`.
    pub fn proj_mul(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (t, u) = (self.unit_slope(p)?, self.unit_slope(q)?);
        self.pbar(&(t * u))
    }

    /// `pbarbar(t) o pbarbar(t') = pbarbar(t t')`.
    pub fn proj_mul2(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (s, u) = (self.unit_coslope(p)?, self.unit_coslope(q)?);
        self.pbarbar(&(s * u))
    }

    /// Inverse for `ProjMul`, `ProjMul2` and `StarMul` alike: the swap `(y : x : z)`.
    pub fn proj_inv(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        self.unit_slope(p)?;
        Ok(sigma(p))
    }

    /// `pbar(t) * pbar(t') = pbar(-t t')`, neutral `I`.
    pub fn star_mul(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (t, u) = (self.unit_slope(p)?, self.unit_slope(q)?);
        self.pbar(&-(t * u))
    }

    /// `P^perp = pbar(-1/t)`, an involution of the curve minus `O`.
    pub fn perp(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let t = self.unit_slope(p)?;
        self.pbar(&-t.inv()?)
    }

    /// `pbar(t) + pbar(t') = pbar(t + t')`, neutral `O`.
    pub fn add_south(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (t, u) = (self.pbar_inv(p)?, self.pbar_inv(q)?);
        self.pbar(&(t + u))
    }

    /// `pbarbar(t) (+) pbarbar(t') = pbarbar(t + t')`, neutral `O`.
    pub fn add_west(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (s, u) = (self.pbarbar_inv(p)?, self.pbarbar_inv(q)?);
        self.pbarbar(&(s + u))
    }

    /// `-pbar(t) = pbar(-t)`; the opposite under both additive laws.
    pub fn neg(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let t = self.pbar_inv(p)?;
        self.pbar(&-t)
    }

    fn require_unique_cube_root(&self) -> Result<()> {
        if self.cube_root_unique()? {
            Ok(())
        } else {
            Err(FoliumError::FieldLacksUniqueCubeRoot(self.field()))
        }
    }

    fn affine_check(&self, p: &ProjectivePoint) -> Result<()> {
        self.require_unique_cube_root()?;
        self.check(p)?;
        if !p.is_affine() {
            return Err(FoliumError::PointAtInfinity(Box::new(p.clone())));
        }
        Ok(())
    }

    /// `tau = y/x + 1`; nonzero on affine points once the cube-root gate passed.
    fn south_param(&self, p: &ProjectivePoint) -> Result<FieldElement> {
        self.affine_check(p)?;
        Ok(alpha_inv(&self.pbar_inv(p)?))
    }

    /// `tau = x/y + 1`.
    fn west_param(&self, p: &ProjectivePoint) -> Result<FieldElement> {
        self.affine_check(p)?;
        Ok(alpha_inv(&self.pbarbar_inv(p)?))
    }

    /// `(p alpha)(tau) o (p alpha)(tau') = (p alpha)(tau tau')` on the affine curve.
    pub fn south_mul(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (tau, rho) = (self.south_param(p)?, self.south_param(q)?);
        self.p_affine(&alpha(&(tau * rho)))
    }

    pub fn south_inv(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let tau = self.south_param(p)?;
        self.p_affine(&alpha(&tau.inv()?))
    }

    /// `(p' alpha)(tau) _|_ (p' alpha)(tau') = (p' alpha)(tau tau')` on the affine curve.
    pub fn west_mul(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (tau, rho) = (self.west_param(p)?, self.west_param(q)?);
        self.p_affine_prime(&alpha(&(tau * rho)))
    }

    pub fn west_inv(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let tau = self.west_param(p)?;
        self.p_affine_prime(&alpha(&tau.inv()?))
    }

    /// `ProjMul` extended to the whole curve with `O` absorbing.
    pub fn field_mul(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let (t, u) = (self.pbar_inv(p)?, self.pbar_inv(q)?);
        self.pbar(&(t * u))
    }

    pub fn field_inv(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        match self.proj_inv(p) {
            Err(FoliumError::OriginNotInGroup) => Err(FoliumError::DivisionByZeroPoint),
            r => r,
        }
    }

    pub fn field_div(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let q_inv = self.field_inv(q)?;
        self.field_mul(p, &q_inv)
    }

    pub fn compose(
        &self,
        law: LawKind,
        p: &ProjectivePoint,
        q: &ProjectivePoint,
    ) -> Result<ProjectivePoint> {
        match law {
            LawKind::ProjMul => self.proj_mul(p, q),
            LawKind::ProjMul2 => self.proj_mul2(p, q),
            LawKind::StarMul => self.star_mul(p, q),
            LawKind::AddSouth => self.add_south(p, q),
            LawKind::AddWest => self.add_west(p, q),
            LawKind::SouthMul => self.south_mul(p, q),
            LawKind::WestMul => self.west_mul(p, q),
            LawKind::FieldMul => self.field_mul(p, q),
        }
    }

    /// Left fold of `compose` over a nonempty slice.
    pub fn compose_all(&self, law: LawKind, pts: &[ProjectivePoint]) -> Result<ProjectivePoint> {
        let (first, rest) = pts.split_first().expect("at least one factor");
        self.check(first)?;
        rest.iter()
            .try_fold(first.clone(), |acc, p| self.compose(law, &acc, p))
    }

    pub fn inverse(&self, law: LawKind, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        match law {
            LawKind::ProjMul | LawKind::ProjMul2 | LawKind::StarMul => self.proj_inv(p),
            LawKind::AddSouth | LawKind::AddWest => self.neg(p),
            LawKind::SouthMul => self.south_inv(p),
            LawKind::WestMul => self.west_inv(p),
            LawKind::FieldMul => self.field_inv(p),
        }
    }

    pub fn neutral(&self, law: LawKind) -> Result<ProjectivePoint> {
        match law {
            LawKind::ProjMul | LawKind::ProjMul2 | LawKind::FieldMul => Ok(self.unit()),
            LawKind::StarMul => Ok(self.infinity()),
            LawKind::AddSouth | LawKind::AddWest => Ok(self.origin()),
            LawKind::SouthMul | LawKind::WestMul => {
                self.require_unique_cube_root()?;
                Ok(self.origin())
            }
        }
    }

    /// Whether `p` lies in the law's carrier set (ignores the cube-root gate).
    pub fn in_domain(&self, law: LawKind, p: &ProjectivePoint) -> bool {
        self.contains(p)
            && match law.domain() {
                Domain::WholeCurve => true,
                Domain::CurveMinusOrigin => *p != self.origin(),
                Domain::AffineCurve => p.is_affine(),
            }
    }
}
