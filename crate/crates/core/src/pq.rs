//! Exhaustive (p,q)-property checks with re-verifiable certificates.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::kernel::{feasible, HalfPlane, Point};

/// A p-subset of labels no q of which share a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqViolation {
    pub labels: Vec<String>,
}

impl fmt::Display for PqViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqReport {
    pub holds: bool,
    pub p: usize,
    pub q: usize,
    pub violation: Option<PqViolation>,
    /// Every q-subset examined (as region indices), with its witness if the
    /// subset has a common point.
    pub witness_table: BTreeMap<Vec<usize>, Option<Point>>,
}

/// Calls `visit` on every k-subset of `0..n` in lexicographic order until it
/// returns `false`.
pub fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Witness for the common intersection of the regions at `indices`.
pub fn common_point(f: &Family, indices: &[usize]) -> Option<Point> {
    let constraints: Vec<HalfPlane> = indices
        .iter()
        .flat_map(|&i| f.regions()[i].constraints.iter().cloned())
        .collect();
    feasible(&constraints)
}

/// Decides whether every `p` regions of `f` include `q` with a common point.
///
/// Stops at the first violating p-subset (lexicographic order). q-subset
/// verdicts are memoized across p-subsets.
pub fn has_pq_property(f: &Family, p: usize, q: usize) -> Result<PqReport> {
    if !(2 <= q && q <= p && p <= f.len()) {
        return Err(Error::BadParams(format!(
            "need 2 <= q <= p <= |family|, got p={p}, q={q}, |family|={}",
            f.len()
        )));
    }
    let mut table: BTreeMap<Vec<usize>, Option<Point>> = BTreeMap::new();
    let mut violation = None;
    for_each_subset(f.len(), p, |big| {
        let mut found = false;
        for_each_subset(p, q, |pos| {
            let sub: Vec<usize> = pos.iter().map(|&i| big[i]).collect();
            let witness = table
                .entry(sub)
                .or_insert_with_key(|sub| common_point(f, sub));
            found = witness.is_some();
            !found
        });
        if !found {
            violation = Some(PqViolation {
                labels: big.iter().map(|&i| f.regions()[i].label.clone()).collect(),
            });
        }
        found
    });
    Ok(PqReport {
        holds: violation.is_none(),
        p,
        q,
        violation,
        witness_table: table,
    })
}

/// A 3-subset of regions with a common point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectingTriple {
    pub indices: [usize; 3],
    pub labels: [String; 3],
    pub witness: Point,
}

/// Every intersecting triple of `f`, in lexicographic index order.
pub fn intersecting_triples(f: &Family) -> Vec<IntersectingTriple> {
    let mut out = Vec::new();
    for_each_subset(f.len(), 3, |t| {
        if let Some(witness) = common_point(f, t) {
            let label = |i: usize| f.regions()[t[i]].label.clone();
            out.push(IntersectingTriple {
                indices: [t[0], t[1], t[2]],
                labels: [label(0), label(1), label(2)],
                witness,
            });
        }
        true
    });
    out
}
