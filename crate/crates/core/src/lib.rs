//! Exact group, field and chord-tangent structures on the Folium of Descartes
//! `x^3 + y^3 - 3a xyz = 0` over `Q` and prime fields.
//!
//! The curve is rational: `pbar(t) = (3at : 3at^2 : 1 + t^3)` is a bijection
//! from the base field onto its points, so every group structure of the base
//! field can be carried over. The laws in [`laws`] are those carried-over
//! structures; [`geometry`] realizes the multiplicative one with chords and
//! tangents, and [`oracle`] checks both against brute-force line sections.
//!
//! ```
//! use folium_core::{Field, Folium};
//!
//! let c = Folium::with_int(Field::rationals(), 1).unwrap();
//! let t = |n| c.field().from_i64(n);
//! let (p, q) = (c.pbar(&t(2)).unwrap(), c.pbar(&t(3)).unwrap());
//! assert_eq!(c.proj_mul(&p, &q).unwrap(), c.pbar(&t(6)).unwrap());
//! assert_eq!(c.geometric_mul(&p, &q).unwrap(), c.pbar(&t(6)).unwrap());
//! ```

pub mod branch;
pub mod curve;
pub mod error;
pub mod field;
pub mod geometry;
pub mod laws;
pub mod oracle;
pub mod param;
pub mod point;

pub use branch::BranchLabel;
pub use curve::{Folium, SpecialPoints, VertexSlot};
pub use error::{FoliumError, Result};
pub use field::{cube_root_unique, solve_epsilon, Field, FieldElement, FieldError};
pub use laws::{Domain, LawKind};
pub use oracle::LineSection;
pub use param::{alpha, alpha_inv, sigma, ParamKind};
pub use point::{ProjectiveLine, ProjectivePoint};
