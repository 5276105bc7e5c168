//! Branches of the real affine Folium through the node `O`.
//!
//! The South branch is `p((-1, 1))`, the West branch is
//! `p((1, inf)) u {O} u p((-inf, -1))`; they meet only at `O` and together
//! cover everything but the vertex `p(1)`.

use std::cmp::Ordering;
use std::fmt;

use crate::curve::Folium;
use crate::error::{FoliumError, Result};
use crate::point::ProjectivePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchLabel {
    SouthInterior,
    WestInterior,
    Vertex,
    Node,
}

impl BranchLabel {
    pub fn name(self) -> &'static str {
        match self {
            BranchLabel::SouthInterior => "south",
            BranchLabel::WestInterior => "west",
            BranchLabel::Vertex => "vertex",
            BranchLabel::Node => "node",
        }
    }

    /// Label of the mirror image under `(x, y) -> (y, x)`.
    pub fn mirrored(self) -> Self {
        match self {
            BranchLabel::SouthInterior => BranchLabel::WestInterior,
            BranchLabel::WestInterior => BranchLabel::SouthInterior,
            other => other,
        }
    }
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Folium {
    /// Classifies an affine rational point by its slope parameter.
    pub fn classify_branch(&self, p: &ProjectivePoint) -> Result<BranchLabel> {
        if self.field().is_finite() {
            return Err(FoliumError::UnorderedField(self.field()));
        }
        self.check(p)?;
        if !p.is_affine() {
            return Err(FoliumError::PointAtInfinity(Box::new(p.clone())));
        }
        let t = self.pbar_inv(p)?;
        let (one, minus_one) = (self.int(1), self.int(-1));
        Ok(if t.is_zero() {
            BranchLabel::Node
        } else if t == one {
            BranchLabel::Vertex
        } else if t.cmp_rational(&minus_one) == Some(Ordering::Greater)
            && t.cmp_rational(&one) == Some(Ordering::Less)
        {
            BranchLabel::SouthInterior
        } else {
            BranchLabel::WestInterior
        })
    }
}
