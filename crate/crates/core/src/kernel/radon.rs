use num::{Signed, Zero};

use super::point::{orient, Point};
use super::segment::{on_segment, segment_intersection};

/// A split of four points into two groups whose convex hulls meet.
///
/// Indices are 1-based positions in the input quadruple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadonPartition {
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
    pub common_point: Point,
}

/// Whether `p` lies in the convex hull of `a`, `b`, `c` (any of which may coincide).
pub fn in_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    let area = orient(a, b, c);
    if area.is_zero() {
        return on_segment(a, b, p) || on_segment(b, c, p) || on_segment(c, a, p);
    }
    let sides = [orient(a, b, p), orient(b, c, p), orient(c, a, p)];
    if area.is_positive() {
        sides.iter().all(|s| !s.is_negative())
    } else {
        sides.iter().all(|s| !s.is_positive())
    }
}

/// Nonempty proper subsets of {1,2,3,4}, ordered by size then lexicographically.
fn canonical_subsets() -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (1u32..15)
        .map(|mask| (0..4).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

fn hulls_meet(points: &[Point; 4], part_a: &[usize], part_b: &[usize]) -> Option<Point> {
    let at = |i: usize| &points[i - 1];
    match (part_a.len(), part_b.len()) {
        (1, 3) => {
            let p = at(part_a[0]);
            in_triangle(at(part_b[0]), at(part_b[1]), at(part_b[2]), p).then(|| p.clone())
        }
        (3, 1) => {
            let p = at(part_b[0]);
            in_triangle(at(part_a[0]), at(part_a[1]), at(part_a[2]), p).then(|| p.clone())
        }
        (2, 2) => segment_intersection(
            (at(part_a[0]), at(part_a[1])),
            (at(part_b[0]), at(part_b[1])),
        ),
        _ => unreachable!("partition of four points"),
    }
}

/// Radon partition of four planar points.
///
/// Scans every bipartition with `part_a` in canonical order (size, then
/// sorted indices) and returns the first whose hulls meet.
pub fn radon_partition(points: &[Point; 4]) -> RadonPartition {
    for part_a in canonical_subsets() {
        let part_b: Vec<usize> = (1..=4).filter(|i| !part_a.contains(i)).collect();
        if let Some(common_point) = hulls_meet(points, &part_a, &part_b) {
            return RadonPartition {
                part_a,
                part_b,
                common_point,
            };
        }
    }
    unreachable!("four points in the plane always admit a Radon partition")
}
