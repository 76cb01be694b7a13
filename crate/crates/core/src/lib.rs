//! Geometric density and compression-radius profiles of simple-cubic
//! lattice knots.
//!
//! The pipeline: parse a seed polygon, explore its move graph under a
//! length cap (plaquette detours, detour removals, corner flips), evaluate
//! chord-spread densities and compression radii on every candidate, and
//! optionally round the corners into a line-and-arc curve whose thickness
//! is lower-bounded by an interval-arithmetic certificate.
//!
//! Modules follow the stages of that pipeline:
//!
//! - [`lattice`]: polygon validation and canonicalization modulo
//!   orientation-preserving lattice isometries
//! - [`moves`]: local move enumeration (length +2, -2, 0)
//! - [`functionals`]: exact and quadrature-based functionals on raw
//!   lattice polygons
//! - [`explorer`]: level-set generation, reachability graphs, components,
//!   merge scales, path extraction
//! - [`smoothing`]: circular corner rounding into line-and-arc curves
//! - [`certify`]: interval arithmetic and certified distance / thickness
//!   lower bounds
//! - [`smoothfunc`]: functionals and thickness-normalized rows for
//!   line-and-arc curves

pub mod certify;
pub mod explorer;
pub mod functionals;
pub mod geom;
pub mod lattice;
pub mod moves;
pub mod smoothfunc;
pub mod smoothing;

pub use lattice::{CanonicalKey, LatticePolygon};
pub use moves::{MoveDescriptor, MoveKind};
