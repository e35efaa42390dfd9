use num::{One, Signed, Zero};

use super::halfplane::HalfPlane;
use super::point::{Point, Rational};

/// Deterministic pick from a closed, nonempty interval with optional ends.
fn pick(lo: Option<Rational>, hi: Option<Rational>) -> Rational {
    match (lo, hi) {
        (Some(lo), Some(hi)) => (lo + hi) / Rational::from_integer(2.into()),
        (Some(lo), None) => lo + Rational::one(),
        (None, Some(hi)) => hi - Rational::one(),
        (None, None) => Rational::zero(),
    }
}

fn tighten_lo(lo: &mut Option<Rational>, v: Rational) {
    if lo.as_ref().map_or(true, |cur| v > *cur) {
        *lo = Some(v);
    }
}

fn tighten_hi(hi: &mut Option<Rational>, v: Rational) {
    if hi.as_ref().map_or(true, |cur| v < *cur) {
        *hi = Some(v);
    }
}

/// Returns a point in the intersection of `constraints`, or `None` if it is
/// empty.
///
/// Fourier–Motzkin: `y` is eliminated first, then `x` is fixed from its
/// interval and `y` is back-substituted. A variable confined to `[lo, hi]`
/// takes the midpoint, to `[lo, ∞)` takes `lo + 1`, to `(−∞, hi]` takes
/// `hi − 1`, and a free variable takes `0`.
pub fn feasible(constraints: &[HalfPlane]) -> Option<Point> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut x_only = Vec::new();
    for h in constraints {
        if h.b().is_positive() {
            upper.push(h);
        } else if h.b().is_negative() {
            lower.push(h);
        } else {
            x_only.push((h.a().clone(), h.c().clone()));
        }
    }
    // (b2·a1 − b1·a2)·x <= b2·c1 − b1·c2 for each lower/upper pair.
    for l in &lower {
        for u in &upper {
            let alpha = u.b() * l.a() - l.b() * u.a();
            let beta = u.b() * l.c() - l.b() * u.c();
            x_only.push((alpha, beta));
        }
    }

    let (mut x_lo, mut x_hi) = (None, None);
    for (alpha, beta) in x_only {
        if alpha.is_zero() {
            if beta.is_negative() {
                return None;
            }
        } else if alpha.is_positive() {
            tighten_hi(&mut x_hi, beta / alpha);
        } else {
            tighten_lo(&mut x_lo, beta / alpha);
        }
    }
    if let (Some(lo), Some(hi)) = (&x_lo, &x_hi) {
        if lo > hi {
            return None;
        }
    }
    let x = pick(x_lo, x_hi);

    let (mut y_lo, mut y_hi) = (None, None);
    for l in &lower {
        tighten_lo(&mut y_lo, (l.c() - l.a() * &x) / l.b());
    }
    for u in &upper {
        tighten_hi(&mut y_hi, (u.c() - u.a() * &x) / u.b());
    }
    let y = pick(y_lo, y_hi);
    let p = Point::new(x, y);
    debug_assert!(constraints.iter().all(|h| h.contains(&p)));
    Some(p)
}
