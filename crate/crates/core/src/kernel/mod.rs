//! Exact rational kernel: points, half-planes, lines, feasibility, segments
//! and Radon partitions. Everything here is a pure function of immutable
//! values.

mod feasible;
mod halfplane;
mod point;
mod radon;
mod segment;

pub use feasible::feasible;
pub use halfplane::{HalfPlane, Line};
pub use point::{orient, rat, Point, Rational};
pub use radon::{in_triangle, radon_partition, RadonPartition};
pub use segment::{on_segment, segment_intersection};
