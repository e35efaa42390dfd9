use num::{Signed, Zero};

use super::point::{orient, Point};

/// Whether `p` lies on the closed segment `[a, b]` (which may be a point).
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if !orient(a, b, p).is_zero() {
        return false;
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= p && p <= hi
}

/// A point common to the closed segments `s1` and `s2`, if any.
///
/// When the segments overlap in a segment, its lexicographically smallest
/// endpoint is returned.
pub fn segment_intersection(s1: (&Point, &Point), s2: (&Point, &Point)) -> Option<Point> {
    let (p1, p2) = s1;
    let (q1, q2) = s2;
    if p1 == p2 {
        return on_segment(q1, q2, p1).then(|| p1.clone());
    }
    if q1 == q2 {
        return on_segment(p1, p2, q1).then(|| q1.clone());
    }
    let d1 = p2 - p1;
    let d2 = q2 - q1;
    let denom = d1.cross(&d2);
    let offset = q1 - p1;
    if denom.is_zero() {
        if !offset.cross(&d1).is_zero() {
            return None;
        }
        // Collinear: lexicographic order is a linear order along the line.
        let (a_lo, a_hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let (b_lo, b_hi) = if q1 <= q2 { (q1, q2) } else { (q2, q1) };
        let lo = std::cmp::max(a_lo, b_lo);
        let hi = std::cmp::min(a_hi, b_hi);
        return (lo <= hi).then(|| lo.clone());
    }
    let t = offset.cross(&d2) / &denom;
    let u = offset.cross(&d1) / &denom;
    let unit = |v: &num::BigRational| !v.is_negative() && *v <= num::One::one();
    if unit(&t) && unit(&u) {
        Some(p1 + &(&d1 * &t))
    } else {
        None
    }
}
