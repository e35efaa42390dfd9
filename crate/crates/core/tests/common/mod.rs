//! Independent oracles and fixture generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num::{BigInt, Zero};
use piercing::kernel::{feasible, HalfPlane, Point, Rational};
use piercing::region::{convex_hull, ConvexRegion};
use piercing::solver::candidate_points;
use piercing::{rat, Family};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Rational in `[-bound, bound]` with denominator at most `max_den`.
pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    rat(rng.gen_range(-bound * den..=bound * den), den)
}

pub fn random_point(rng: &mut ChaCha8Rng, bound: i64, max_den: i64) -> Point {
    Point::new(random_rational(rng, bound, max_den), random_rational(rng, bound, max_den))
}

/// Crossing of `a1 x + b1 y = c1` and `a2 x + b2 y = c2` by Cramer's rule.
fn cramer(l1: &[Rational; 3], l2: &[Rational; 3]) -> Option<Point> {
    let det = &l1[0] * &l2[1] - &l1[1] * &l2[0];
    if det.is_zero() {
        return None;
    }
    Some(Point::new(
        (&l1[2] * &l2[1] - &l1[1] * &l2[2]) / &det,
        (&l1[0] * &l2[2] - &l1[2] * &l2[0]) / &det,
    ))
}

/// Nonemptiness by vertex enumeration: the constraint lines plus a box far
/// outside every crossing; the region is nonempty iff some crossing of these
/// lines satisfies all constraints. `box_radius` must exceed every crossing
/// and axis intercept of the constraint lines.
pub fn nonempty_by_vertices(cs: &[HalfPlane], box_radius: i64) -> bool {
    let mut lines: Vec<[Rational; 3]> = cs.iter().map(|h| [h.a().clone(), h.b().clone(), h.c().clone()]).collect();
    let m = rat(box_radius, 1);
    let (one, zero) = (rat(1, 1), rat(0, 1));
    lines.push([one.clone(), zero.clone(), m.clone()]);
    lines.push([one.clone(), zero.clone(), -m.clone()]);
    lines.push([zero.clone(), one.clone(), m.clone()]);
    lines.push([zero, one, -m]);
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = cramer(&lines[i], &lines[j]) {
                if cs.iter().all(|h| h.a() * &p.x + h.b() * &p.y <= *h.c()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether the hulls of two point groups meet, via H-representations.
pub fn hulls_meet(a: &[Point], b: &[Point]) -> bool {
    let mut cs = convex_hull(a).unwrap().constraints;
    cs.extend(convex_hull(b).unwrap().constraints);
    feasible(&cs).is_some()
}

/// All seven unordered bipartitions of {1,2,3,4} whose hulls meet, each with
/// the side listed first chosen canonically (smaller, then lexicographic).
pub fn valid_bipartitions(points: &[Point; 4]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for mask in 1u32..15 {
        let a: Vec<usize> = (1..=4).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let b: Vec<usize> = (1..=4).filter(|i| mask & (1 << (i - 1)) == 0).collect();
        let pick = |ix: &[usize]| ix.iter().map(|&i| points[i - 1].clone()).collect::<Vec<_>>();
        if hulls_meet(&pick(&a), &pick(&b)) {
            out.push((a, b));
        }
    }
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
    out
}

/// Membership bitmask of `p` over the regions of `f` (at most 64 regions).
pub fn mask_of(f: &Family, p: &Point) -> u64 {
    f.regions()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.contains(p))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Minimum number of candidate points covering every region, by trying all
/// subsets of distinct candidate patterns in increasing size.
pub fn brute_force_tau(f: &Family) -> usize {
    if f.is_empty() {
        return 0;
    }
    let full = (1u64 << f.len()) - 1;
    let cands = candidate_points(f).unwrap();
    let masks: Vec<u64> = cands
        .points
        .iter()
        .map(|p| mask_of(f, p))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for k in 1..=f.len() {
        if covers_with(&masks, k, 0, 0, full) {
            return k;
        }
    }
    unreachable!("each region contains a candidate")
}

fn covers_with(masks: &[u64], k: usize, start: usize, acc: u64, full: u64) -> bool {
    if acc == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    (start..masks.len()).any(|i| covers_with(masks, k - 1, i + 1, acc | masks[i], full))
}

/// Random box or triangle with small integer coordinates in `[0, span]`.
pub fn random_compact_region(rng: &mut ChaCha8Rng, label: String, span: i64) -> ConvexRegion {
    if rng.gen_bool(0.5) {
        let x = rng.gen_range(0..span);
        let y = rng.gen_range(0..span);
        let w = rng.gen_range(1..=4);
        let h = rng.gen_range(0..=4);
        ConvexRegion::rect(label, rat(x, 1), rat(y, 1), rat(x + w, 1), rat(y + h, 1))
    } else {
        let pts: Vec<Point> = (0..3)
            .map(|_| Point::from_ints(rng.gen_range(0..=span), rng.gen_range(0..=span)))
            .collect();
        convex_hull(&pts).unwrap().with_label(label)
    }
}

pub fn random_family(rng: &mut ChaCha8Rng, size: usize, span: i64) -> Family {
    let regions = (0..size).map(|i| random_compact_region(rng, format!("R{i}"), span)).collect();
    Family::new("random", regions).unwrap()
}

/// A family of compact polygons all containing a common unit box.
pub fn shared_box_family(rng: &mut ChaCha8Rng, size: usize) -> Family {
    let (wx, wy) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
    let core = ConvexRegion::rect("w", rat(wx, 1), rat(wy, 1), rat(wx + 1, 1), rat(wy + 1, 1))
        .vertices()
        .unwrap();
    let regions = (0..size)
        .map(|i| {
            let mut pts = core.clone();
            for _ in 0..rng.gen_range(1..=3) {
                pts.push(random_point(rng, 10, 3));
            }
            convex_hull(&pts).unwrap().with_label(format!("H{i}"))
        })
        .collect();
    Family::new("shared-box", regions).unwrap()
}

/// Random half-plane with small integer coefficients.
pub fn random_half_plane(rng: &mut ChaCha8Rng) -> HalfPlane {
    loop {
        let a = rng.gen_range(-5..=5);
        let b = rng.gen_range(-5..=5);
        if a != 0 || b != 0 {
            return HalfPlane::new(rat(a, 1), rat(b, 1), rat(rng.gen_range(-5..=5), 1)).unwrap();
        }
    }
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
