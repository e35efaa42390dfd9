//! Clipping a (4,3)-family by the hull of two disjoint compact members.
//!
//! With `F0 = conv(A ∪ B)` every member meets `F0`, every intersecting
//! triple still meets inside `F0`, and the clipped family `{F ∩ F0}` is a
//! (4,3)-family of compacta whose transversals also pierce the original.

use crate::error::{Error, Hypothesis, Result};
use crate::family::Family;
use crate::kernel::{feasible, in_triangle, radon_partition, segment_intersection, HalfPlane, Point};
use crate::pq::{has_pq_property, intersecting_triples};
use crate::region::{convex_hull, ConvexRegion};
use crate::solver::{piercing_number, verify_transversal, PiercingResult};

/// Piercing bound for compact planar (4,3)-families.
pub const DEFAULT_PIERCING_BOUND: usize = 13;

fn common(regions: &[&ConvexRegion]) -> Option<Point> {
    let cs: Vec<HalfPlane> = regions.iter().flat_map(|r| r.constraints.iter().cloned()).collect();
    feasible(&cs)
}

/// `conv(A ∪ B)` for disjoint compact `A`, `B`, labeled `F0`.
pub fn build_f0(a: &ConvexRegion, b: &ConvexRegion) -> Result<ConvexRegion> {
    for r in [a, b] {
        if r.is_empty() {
            return Err(Error::EmptyRegion(r.label.clone()));
        }
        if !r.is_bounded() {
            return Err(Error::NotCompact(r.label.clone()));
        }
    }
    if !a.intersect(b).is_empty() {
        return Err(Error::NotDisjoint(a.label.clone(), b.label.clone()));
    }
    let mut pts = a.vertices()?;
    pts.extend(b.vertices()?);
    Ok(convex_hull(&pts)?.with_label("F0"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullMeetCheck {
    pub ok: bool,
    /// First region disjoint from `F0`.
    pub offending: Option<String>,
    /// `(A, B, F, F')`: no three of these share a point.
    pub violating_quadruple: Option<[String; 4]>,
}

/// Whether every region meets `f0`. `compacta` names the `A`, `B` roles used
/// to build the violating quadruple when some region misses `f0`.
pub fn check_hull_meets_all(f: &Family, f0: &ConvexRegion, compacta: Option<(&str, &str)>) -> HullMeetCheck {
    let Some(bad) = f.regions().iter().find(|r| common(&[r, f0]).is_none()) else {
        return HullMeetCheck {
            ok: true,
            offending: None,
            violating_quadruple: None,
        };
    };
    let violating_quadruple = compacta.and_then(|(a, b)| {
        f.regions()
            .iter()
            .find(|r| r.label != a && r.label != b && r.label != bad.label)
            .map(|other| [a.to_string(), b.to_string(), bad.label.clone(), other.label.clone()])
    });
    HullMeetCheck {
        ok: false,
        offending: Some(bad.label.clone()),
        violating_quadruple,
    }
}

/// A point of `A ∩ Fi ∩ Fj`, or failing that of `B ∩ Fi ∩ Fj`.
pub fn find_pair_witness(
    a: &ConvexRegion,
    b: &ConvexRegion,
    fi: &ConvexRegion,
    fj: &ConvexRegion,
) -> Result<Point> {
    common(&[a, fi, fj])
        .or_else(|| common(&[b, fi, fj]))
        .ok_or_else(|| Error::NoWitness(fi.label.clone(), fj.label.clone()))
}

/// A point of `F0 ∩ F1 ∩ F2 ∩ F3`, built from `q ∈ (F1 ∩ F2 ∩ F3) \ F0`.
///
/// Pair witnesses `p12, p13, p23` lie in `F0`; a Radon partition of
/// `{q, p12, p13, p23}` either puts some `p_jk` inside the triangle of the
/// other three (that triangle lies in `F_i`) or crosses `[q, p_jk]` with
/// `[p_ij, p_ik]`. The result is checked against all four sets.
pub fn triple_witness_in_hull(
    a: &ConvexRegion,
    b: &ConvexRegion,
    f0: &ConvexRegion,
    f1: &ConvexRegion,
    f2: &ConvexRegion,
    f3: &ConvexRegion,
    q: &Point,
) -> Result<Point> {
    let triple = [f1, f2, f3];
    if !triple.iter().all(|r| r.contains(q)) {
        return Err(Error::InvalidInput(format!("{q} is not in all three regions")));
    }
    if f0.contains(q) {
        return Err(Error::InvalidInput(format!("{q} already lies in {}", f0.label)));
    }
    if !(a.is_bounded() && b.is_bounded()) || !a.intersect(b).is_empty() {
        return Err(Error::InvalidInput("A and B must be disjoint compacta".into()));
    }
    let p12 = find_pair_witness(a, b, f1, f2)?;
    let p13 = find_pair_witness(a, b, f1, f3)?;
    let p23 = find_pair_witness(a, b, f2, f3)?;

    let in_all = |p: &Point| f0.contains(p) && triple.iter().all(|r| r.contains(p));
    let radon = radon_partition(&[q.clone(), p12.clone(), p13.clone(), p23.clone()]);
    if in_all(&radon.common_point) {
        return Ok(radon.common_point);
    }
    // Each role assignment (p_jk, p_ij, p_ik), in canonical order.
    let roles = [(&p23, &p12, &p13), (&p13, &p12, &p23), (&p12, &p13, &p23)];
    for (pjk, pij, pik) in roles {
        if in_triangle(q, pij, pik, pjk) && in_all(pjk) {
            return Ok(pjk.clone());
        }
        if let Some(x) = segment_intersection((q, pjk), (pij, pik)) {
            if in_all(&x) {
                return Ok(x);
            }
        }
    }
    Err(Error::InvalidInput(
        "no Radon case produced a point in all four sets".into(),
    ))
}

/// One intersecting triple and where it meets inside `F0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCheck {
    pub labels: [String; 3],
    /// Common point found for the unclipped triple.
    pub q: Point,
    /// Common point inside `F0`; equals `q` when `q` already lies there.
    pub witness: Option<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub a_label: String,
    pub b_label: String,
    pub f0: ConvexRegion,
    pub hull_meets: HullMeetCheck,
    pub triples_ok: bool,
    pub triples_offending: Option<[String; 3]>,
    pub triples: Vec<TripleCheck>,
    /// Present only when both hull checks pass.
    pub clipped_family: Option<Family>,
    pub clipped_all_bounded: bool,
    pub clipped_pq_holds: bool,
    pub piercing: Option<PiercingResult>,
    pub bound: usize,
    pub bound_satisfied: bool,
    pub pierces_original: bool,
}

/// Runs the whole reduction on a finite family and solves the clipped family.
///
/// The (4,3)-property is checked rather than assumed (it holds vacuously
/// below four regions).
pub fn run_reduction(f: &Family, a_label: &str, b_label: &str, bound: usize) -> Result<ReductionReport> {
    let a = f.get(a_label).ok_or_else(|| Error::UnknownLabel(a_label.into()))?;
    let b = f.get(b_label).ok_or_else(|| Error::UnknownLabel(b_label.into()))?;
    if a_label == b_label {
        return Err(Error::HypothesisViolated(Hypothesis::NotDisjoint(
            a_label.into(),
            b_label.into(),
        )));
    }
    let f0 = match build_f0(a, b) {
        Ok(f0) => f0,
        Err(Error::NotCompact(l) | Error::EmptyRegion(l)) => {
            return Err(Error::HypothesisViolated(Hypothesis::NotCompact(l)))
        }
        Err(Error::NotDisjoint(x, y)) => return Err(Error::HypothesisViolated(Hypothesis::NotDisjoint(x, y))),
        Err(e) => return Err(e),
    };
    if f.len() >= 4 {
        let rep = has_pq_property(f, 4, 3)?;
        if let Some(v) = rep.violation {
            return Err(Error::HypothesisViolated(Hypothesis::Pq(v)));
        }
    }

    let mut report = ReductionReport {
        a_label: a_label.into(),
        b_label: b_label.into(),
        hull_meets: check_hull_meets_all(f, &f0, Some((a_label, b_label))),
        f0,
        triples_ok: false,
        triples_offending: None,
        triples: Vec::new(),
        clipped_family: None,
        clipped_all_bounded: false,
        clipped_pq_holds: false,
        piercing: None,
        bound,
        bound_satisfied: false,
        pierces_original: false,
    };
    if !report.hull_meets.ok {
        return Ok(report);
    }

    report.triples_ok = true;
    for t in intersecting_triples(f) {
        let [r1, r2, r3] = t.indices.map(|i| &f.regions()[i]);
        let witness = if report.f0.contains(&t.witness) {
            Some(t.witness.clone())
        } else {
            triple_witness_in_hull(a, b, &report.f0, r1, r2, r3, &t.witness).ok()
        };
        if witness.is_none() && report.triples_ok {
            report.triples_ok = false;
            report.triples_offending = Some(t.labels.clone());
        }
        report.triples.push(TripleCheck {
            labels: t.labels,
            q: t.witness,
            witness,
        });
    }
    if !report.triples_ok {
        return Ok(report);
    }

    let clipped = f.clipped(format!("{}-clipped", f.name), &report.f0);
    report.clipped_all_bounded = clipped.regions().iter().all(ConvexRegion::is_bounded);
    report.clipped_pq_holds = clipped.len() < 4 || has_pq_property(&clipped, 4, 3)?.holds;
    let piercing = piercing_number(&clipped, None)?;
    report.bound_satisfied = piercing.tau <= bound;
    report.pierces_original = verify_transversal(f, &piercing.transversal).ok;
    report.piercing = Some(piercing);
    report.clipped_family = Some(clipped);
    Ok(report)
}
