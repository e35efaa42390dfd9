//! Exact piercing numbers for finite families of polyhedral regions.
//!
//! Candidate points are the vertices of the line arrangement formed by all
//! constraint boundaries plus an enclosing box; every nonempty intersection
//! of regions contains one of them. The minimum transversal is then an
//! exact set cover over the candidates' membership patterns.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::kernel::{feasible, Line, Point, Rational};
use crate::pq::{common_point, for_each_subset};

#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub points: Vec<Point>,
    /// `patterns[i]` holds the indices of the regions containing `points[i]`.
    pub patterns: Vec<FixedBitSet>,
    pub box_half_width: Rational,
}

/// Arrangement vertices (including the box `[−M, M]²`) lying in at least
/// one region, sorted lexicographically.
pub fn candidate_points(f: &Family) -> Result<CandidateSet> {
    if let Some(r) = f.regions().iter().find(|r| r.is_empty()) {
        return Err(Error::EmptyRegion(r.label.clone()));
    }
    let mut lines: BTreeSet<Line> = f.regions().iter().flat_map(|r| r.boundary_lines()).collect();
    let list: Vec<Line> = lines.iter().cloned().collect();
    let mut extent = Rational::zero();
    for (i, l1) in list.iter().enumerate() {
        for v in l1.axis_intercepts() {
            extent = extent.max(v.abs());
        }
        for l2 in &list[i + 1..] {
            if let Some(p) = l1.intersection(l2) {
                extent = extent.max(p.max_abs_coord());
            }
        }
    }
    let m = Rational::one() + Rational::from_integer(2.into()) * extent;
    lines.insert(Line::vertical(m.clone()));
    lines.insert(Line::vertical(-m.clone()));
    lines.insert(Line::horizontal(m.clone()));
    lines.insert(Line::horizontal(-m.clone()));

    let list: Vec<Line> = lines.into_iter().collect();
    let mut pts = BTreeSet::new();
    for (i, l1) in list.iter().enumerate() {
        for l2 in &list[i + 1..] {
            if let Some(p) = l1.intersection(l2) {
                pts.insert(p);
            }
        }
    }
    let mut points = Vec::new();
    let mut patterns = Vec::new();
    for p in pts {
        let pat = membership(f, &p);
        if pat.count_ones(..) > 0 {
            points.push(p);
            patterns.push(pat);
        }
    }
    Ok(CandidateSet {
        points,
        patterns,
        box_half_width: m,
    })
}

fn membership(f: &Family, p: &Point) -> FixedBitSet {
    let mut pat = FixedBitSet::with_capacity(f.len());
    for (i, r) in f.regions().iter().enumerate() {
        if r.contains(p) {
            pat.insert(i);
        }
    }
    pat
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiercingResult {
    pub tau: usize,
    pub transversal: Vec<Point>,
    /// Exhaustive search proved that no smaller transversal exists.
    pub optimal: bool,
    pub explored_nodes: u64,
    /// Answered by the all-triples-intersect shortcut.
    pub helly: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalCheck {
    pub ok: bool,
    pub missed: Vec<String>,
}

/// Labels of regions containing none of `points`.
pub fn verify_transversal(f: &Family, points: &[Point]) -> TransversalCheck {
    let missed: Vec<String> = f
        .regions()
        .iter()
        .filter(|r| !points.iter().any(|p| r.contains(p)))
        .map(|r| r.label.clone())
        .collect();
    TransversalCheck {
        ok: missed.is_empty(),
        missed,
    }
}

/// A common point of the whole family, found only if every triple meets.
fn helly_witness(f: &Family) -> Option<Point> {
    let mut all_meet = true;
    for_each_subset(f.len(), 3.min(f.len()), |t| {
        all_meet = common_point(f, t).is_some();
        all_meet
    });
    if !all_meet {
        return None;
    }
    let constraints: Vec<_> = f.regions().iter().flat_map(|r| r.constraints.iter().cloned()).collect();
    feasible(&constraints)
}

/// Minimum number of points meeting every region, with a transversal.
///
/// The transversal is the lexicographically smallest optimal cover by
/// candidate index, taken over candidates with maximal patterns. With
/// `max_size`, fails with `BudgetExceeded` when more points are needed.
pub fn piercing_number(f: &Family, max_size: Option<usize>) -> Result<PiercingResult> {
    if let Some(r) = f.regions().iter().find(|r| r.is_empty()) {
        return Err(Error::EmptyRegion(r.label.clone()));
    }
    if f.is_empty() {
        return Ok(PiercingResult {
            tau: 0,
            transversal: Vec::new(),
            optimal: true,
            explored_nodes: 0,
            helly: false,
        });
    }
    if let Some(w) = helly_witness(f) {
        return Ok(PiercingResult {
            tau: 1,
            transversal: vec![w],
            optimal: true,
            explored_nodes: 0,
            helly: true,
        });
    }

    let cands = candidate_points(f)?;
    let keep = maximal_patterns(&cands.patterns);
    let patterns: Vec<FixedBitSet> = keep.iter().map(|&i| cands.patterns[i].clone()).collect();
    let mut search = CoverSearch::new(f.len(), patterns);

    let greedy = search.greedy();
    let limit = max_size.map_or(greedy.len(), |k| k.min(greedy.len()));
    let tau = match search.min_cover_below(limit + 1, 0) {
        Some(c) => c.len(),
        None => {
            let k = max_size.expect("the greedy cover is always within its own size");
            return Err(Error::BudgetExceeded {
                max_size: k,
                lower_bound: k + 1,
            });
        }
    };
    let chosen = search.lex_smallest(tau);
    let transversal = chosen.iter().map(|&i| cands.points[keep[i]].clone()).collect();
    Ok(PiercingResult {
        tau,
        transversal,
        optimal: true,
        explored_nodes: search.nodes,
        helly: false,
    })
}

/// Indices whose pattern is not a strict subset of another; among equal
/// patterns the first index is kept.
fn maximal_patterns(patterns: &[FixedBitSet]) -> Vec<usize> {
    (0..patterns.len())
        .filter(|&i| {
            !patterns.iter().enumerate().any(|(j, other)| {
                j != i
                    && patterns[i].is_subset(other)
                    && (other.count_ones(..) > patterns[i].count_ones(..) || j < i)
            })
        })
        .collect()
}

struct CoverSearch {
    universe: usize,
    patterns: Vec<FixedBitSet>,
    /// `covering[e]`: candidates whose pattern contains `e`, ascending.
    covering: Vec<Vec<usize>>,
    nodes: u64,
}

impl CoverSearch {
    fn new(universe: usize, patterns: Vec<FixedBitSet>) -> Self {
        let mut covering = vec![Vec::new(); universe];
        for (c, pat) in patterns.iter().enumerate() {
            for e in pat.ones() {
                covering[e].push(c);
            }
        }
        CoverSearch {
            universe,
            patterns,
            covering,
            nodes: 0,
        }
    }

    fn greedy(&self) -> Vec<usize> {
        let mut covered = FixedBitSet::with_capacity(self.universe);
        let mut chosen = Vec::new();
        while covered.count_ones(..) < self.universe {
            let best = (0..self.patterns.len())
                .max_by_key(|&c| (self.patterns[c].difference(&covered).count(), std::cmp::Reverse(c)))
                .unwrap();
            covered.union_with(&self.patterns[best]);
            chosen.push(best);
        }
        chosen
    }

    /// Smallest cover with fewer than `bound` candidates, all of index `>= from`.
    fn min_cover_below(&mut self, bound: usize, from: usize) -> Option<Vec<usize>> {
        let covered = FixedBitSet::with_capacity(self.universe);
        let mut best = None;
        let mut bound = bound;
        self.branch(&covered, &mut Vec::new(), from, &mut bound, &mut best);
        best
    }

    fn branch(
        &mut self,
        covered: &FixedBitSet,
        chosen: &mut Vec<usize>,
        from: usize,
        bound: &mut usize,
        best: &mut Option<Vec<usize>>,
    ) {
        self.nodes += 1;
        let remaining = self.universe - covered.count_ones(..);
        if remaining == 0 {
            *bound = chosen.len();
            *best = Some(chosen.clone());
            return;
        }
        let max_gain = self.patterns[from..]
            .iter()
            .map(|p| p.difference(covered).count())
            .max()
            .unwrap_or(0);
        if max_gain == 0 || chosen.len() + remaining.div_ceil(max_gain) >= *bound {
            return;
        }
        // Branch on the uncovered region with the fewest usable candidates.
        let Some(e) = (0..self.universe)
            .filter(|&e| !covered.contains(e))
            .min_by_key(|&e| self.covering[e].iter().filter(|&&c| c >= from).count())
        else {
            return;
        };
        let options: Vec<usize> = self.covering[e].iter().copied().filter(|&c| c >= from).collect();
        for c in options {
            let mut next = covered.clone();
            next.union_with(&self.patterns[c]);
            chosen.push(c);
            self.branch(&next, chosen, from, bound, best);
            chosen.pop();
        }
    }

    /// Lexicographically smallest sorted index set of size `tau` that covers.
    fn lex_smallest(&mut self, tau: usize) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut covered = FixedBitSet::with_capacity(self.universe);
        for slot in 0..tau {
            let start = chosen.last().map_or(0, |&c| c + 1);
            let pick = (start..self.patterns.len())
                .find(|&c| {
                    let mut next = covered.clone();
                    next.union_with(&self.patterns[c]);
                    self.completes(&next, tau - slot - 1, c + 1)
                })
                .expect("a cover of size tau exists");
            covered.union_with(&self.patterns[pick]);
            chosen.push(pick);
        }
        chosen
    }

    /// Whether `covered` can be completed with at most `k` candidates of index `>= from`.
    fn completes(&mut self, covered: &FixedBitSet, k: usize, from: usize) -> bool {
        let mut bound = k + 1;
        let mut best = None;
        self.branch(covered, &mut Vec::new(), from, &mut bound, &mut best);
        best.is_some()
    }
}
