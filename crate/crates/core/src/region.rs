//! Convex regions in H-representation.

use std::collections::BTreeSet;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{feasible, orient, HalfPlane, Line, Point, Rational};

/// A closed convex region: the intersection of its half-planes. An empty
/// constraint list is the whole plane. Segments and points are encoded by
/// pairs of opposing half-planes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexRegion {
    pub label: String,
    pub constraints: Vec<HalfPlane>,
}

impl ConvexRegion {
    pub fn new(label: impl Into<String>, constraints: Vec<HalfPlane>) -> Self {
        ConvexRegion {
            label: label.into(),
            constraints,
        }
    }

    pub fn plane(label: impl Into<String>) -> Self {
        ConvexRegion::new(label, Vec::new())
    }

    /// The box `[x0, x1] × [y0, y1]`.
    pub fn rect(label: impl Into<String>, x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Self {
        ConvexRegion::new(
            label,
            vec![
                HalfPlane::x_at_most(x1),
                HalfPlane::x_at_least(x0),
                HalfPlane::y_at_most(y1),
                HalfPlane::y_at_least(y0),
            ],
        )
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same region with sorted, deduplicated constraints.
    pub fn canonical(&self) -> ConvexRegion {
        let set: BTreeSet<HalfPlane> = self.constraints.iter().cloned().collect();
        ConvexRegion::new(self.label.clone(), set.into_iter().collect())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.constraints.iter().all(|h| h.contains(p))
    }

    /// Intersection with `other`, keeping this region's label.
    pub fn intersect(&self, other: &ConvexRegion) -> ConvexRegion {
        let mut constraints = self.constraints.clone();
        constraints.extend(other.constraints.iter().cloned());
        ConvexRegion::new(self.label.clone(), constraints).canonical()
    }

    pub fn witness(&self) -> Option<Point> {
        feasible(&self.constraints)
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    /// Nonempty with a trivial recession cone `{d : a·d <= 0 for all constraints}`.
    pub fn is_bounded(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let cone: Vec<HalfPlane> = self
            .constraints
            .iter()
            .map(|h| HalfPlane::new(h.a().clone(), h.b().clone(), Rational::zero()).unwrap())
            .collect();
        // The cone is a cone, so it is nontrivial iff it meets one of the four
        // half-planes u >= 1, u <= -1, v >= 1, v <= -1.
        let one = Rational::one();
        let probes = [
            HalfPlane::x_at_least(one.clone()),
            HalfPlane::x_at_most(-one.clone()),
            HalfPlane::y_at_least(one.clone()),
            HalfPlane::y_at_most(-one),
        ];
        probes.into_iter().all(|probe| {
            let mut sys = cone.clone();
            sys.push(probe);
            feasible(&sys).is_none()
        })
    }

    /// Distinct boundary lines of the constraints.
    pub fn boundary_lines(&self) -> BTreeSet<Line> {
        self.constraints.iter().map(HalfPlane::boundary).collect()
    }

    /// Extreme points, counterclockwise from the lexicographically smallest.
    pub fn vertices(&self) -> Result<Vec<Point>> {
        if self.is_empty() {
            return Err(Error::EmptyRegion(self.label.clone()));
        }
        if !self.is_bounded() {
            return Err(Error::UnboundedRegion(self.label.clone()));
        }
        let lines: Vec<Line> = self.boundary_lines().into_iter().collect();
        let mut pts = BTreeSet::new();
        for (i, l1) in lines.iter().enumerate() {
            for l2 in &lines[i + 1..] {
                if let Some(p) = l1.intersection(l2) {
                    if self.contains(&p) {
                        pts.insert(p);
                    }
                }
            }
        }
        Ok(hull_vertices(pts.into_iter().collect()))
    }
}

/// Strict convex hull (no collinear points), counterclockwise from the
/// lexicographically smallest point. Input must be sorted and deduplicated.
fn hull_vertices(sorted: Vec<Point>) -> Vec<Point> {
    if sorted.len() <= 2 {
        return sorted;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &sorted {
        while lower.len() >= 2 && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rational::zero() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2 && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rational::zero() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// H-representation of the convex hull of `points`, labeled `"hull"`.
///
/// A single point or a collinear set yields a lower-dimensional region
/// encoded by opposing half-plane pairs.
pub fn convex_hull(points: &[Point]) -> Result<ConvexRegion> {
    if points.is_empty() {
        return Err(Error::InvalidInput("convex hull of no points".into()));
    }
    let sorted: BTreeSet<Point> = points.iter().cloned().collect();
    let hull = hull_vertices(sorted.into_iter().collect());
    let constraints = match hull.as_slice() {
        [p] => vec![
            HalfPlane::x_at_most(p.x.clone()),
            HalfPlane::x_at_least(p.x.clone()),
            HalfPlane::y_at_most(p.y.clone()),
            HalfPlane::y_at_least(p.y.clone()),
        ],
        [p, q] => {
            let d = q - p;
            let normal = Point::new(-d.y.clone(), d.x.clone());
            let on_line = HalfPlane::new(normal.x.clone(), normal.y.clone(), normal.dot(p)).unwrap();
            vec![
                on_line.clone(),
                on_line.flipped(),
                HalfPlane::new(d.x.clone(), d.y.clone(), d.dot(q)).unwrap(),
                HalfPlane::new(-d.x.clone(), -d.y.clone(), -d.dot(p)).unwrap(),
            ]
        }
        ring => (0..ring.len())
            .map(|i| {
                let v = &ring[i];
                let e = &ring[(i + 1) % ring.len()] - v;
                // Interior is to the left: ey·x − ex·y <= ey·vx − ex·vy.
                HalfPlane::new(e.y.clone(), -e.x.clone(), &e.y * &v.x - &e.x * &v.y).unwrap()
            })
            .collect(),
    };
    Ok(ConvexRegion::new("hull", constraints).canonical())
}
