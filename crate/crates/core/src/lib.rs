//! Exact rational planar convex geometry for Helly-type questions.
//!
//! Regions are polyhedral (finite intersections of closed half-planes) with
//! arbitrary-precision rational coefficients, so every predicate here is
//! decided exactly. On top of the kernel sit exhaustive (p,q)-property
//! checks, an exact piercing-number solver, the wedge family with the
//! (4,3)-property and no finite transversal, and the reduction that clips a
//! (4,3)-family to the hull of two disjoint compact members.

pub mod counterexample;
pub mod error;
pub mod family;
pub mod io;
pub mod kernel;
pub mod pq;
pub mod reduction;
pub mod region;
pub mod render;
pub mod solver;

pub use error::{Error, Hypothesis, Result};
pub use family::Family;
pub use kernel::{feasible, rat, HalfPlane, Point, Rational};
pub use region::{convex_hull, ConvexRegion};
