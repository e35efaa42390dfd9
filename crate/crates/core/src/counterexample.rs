//! The infinite (4,3)-family with two compact members and no finite
//! transversal: `F1 = [-1,1]×{0}`, `F2 = [0,2]×{0}`, and for `n >= 3` the
//! wedge `F_n` of points on or left of `x = t_n` and on or above the line
//! through `(t_n, 0)` with slope `s_n`.

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::kernel::{rat, HalfPlane, Point, Rational};
use crate::region::ConvexRegion;

/// Finite `t_n`, `s_n` lists for `n = 3, 4, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    t: Vec<Rational>,
    s: Vec<Rational>,
}

impl SequenceTable {
    /// Validates `0 < t_3 < t_4 < ... < 1` and `0 > s_3 > s_4 > ...`.
    pub fn new(t: Vec<Rational>, s: Vec<Rational>) -> Result<Self> {
        if t.len() != s.len() {
            return Err(Error::BadSequence(format!(
                "t has {} entries but s has {}",
                t.len(),
                s.len()
            )));
        }
        if t.is_empty() {
            return Err(Error::BadSequence("empty table".into()));
        }
        for (i, v) in t.iter().enumerate() {
            if !(v.is_positive() && *v < Rational::one()) {
                return Err(Error::BadSequence(format!("t_{} = {v} not in (0, 1)", i + 3)));
            }
        }
        for (i, v) in s.iter().enumerate() {
            if !v.is_negative() {
                return Err(Error::BadSequence(format!("s_{} = {v} not negative", i + 3)));
            }
        }
        if let Some(i) = t.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::BadSequence(format!("t not strictly increasing at n = {}", i + 4)));
        }
        if let Some(i) = s.windows(2).position(|w| w[0] <= w[1]) {
            return Err(Error::BadSequence(format!("s not strictly decreasing at n = {}", i + 4)));
        }
        Ok(SequenceTable { t, s })
    }

    /// Largest covered index.
    pub fn last_index(&self) -> usize {
        self.t.len() + 2
    }
}

/// Source of the sequences `t_n` (increasing in (0,1)) and `s_n` (negative,
/// decreasing to −∞).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceConfig {
    /// `t_n = 1 − 1/n`, `s_n = −n`.
    Standard,
    Table(SequenceTable),
}

impl SequenceConfig {
    fn check_index(&self, n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::BadParams(format!("wedge index must be >= 3, got {n}")));
        }
        if let SequenceConfig::Table(tab) = self {
            if n > tab.last_index() {
                return Err(Error::BadSequence(format!(
                    "table covers n = 3..={}, asked for {n}",
                    tab.last_index()
                )));
            }
        }
        Ok(())
    }

    pub fn t(&self, n: usize) -> Result<Rational> {
        self.check_index(n)?;
        Ok(match self {
            SequenceConfig::Standard => Rational::one() - rat(1, n as i64),
            SequenceConfig::Table(tab) => tab.t[n - 3].clone(),
        })
    }

    pub fn s(&self, n: usize) -> Result<Rational> {
        self.check_index(n)?;
        Ok(match self {
            SequenceConfig::Standard => rat(-(n as i64), 1),
            SequenceConfig::Table(tab) => tab.s[n - 3].clone(),
        })
    }

    fn last_index(&self) -> Option<usize> {
        match self {
            SequenceConfig::Standard => None,
            SequenceConfig::Table(tab) => Some(tab.last_index()),
        }
    }

    /// `F_n` for `n >= 3`: `x <= t_n` and `s_n·x − y <= s_n·t_n`.
    pub fn wedge(&self, n: usize) -> Result<ConvexRegion> {
        let (t, s) = (self.t(n)?, self.s(n)?);
        let below = HalfPlane::new(s.clone(), -Rational::one(), &s * &t)?;
        Ok(ConvexRegion::new(format!("F{n}"), vec![HalfPlane::x_at_most(t), below]))
    }

    /// `p ∈ F_n`, evaluated directly from the two defining inequalities.
    pub fn wedge_contains(&self, n: usize, p: &Point) -> Result<bool> {
        let (t, s) = (self.t(n)?, self.s(n)?);
        Ok(p.x <= t && p.y >= &s * (&p.x - &t))
    }
}

fn segment_on_x_axis(label: &str, x0: i64, x1: i64) -> ConvexRegion {
    ConvexRegion::rect(label, rat(x0, 1), rat(0, 1), rat(x1, 1), rat(0, 1))
}

/// The first `n` members `[F1, F2, F3, ..., Fn]`.
pub fn generate(n: usize, cfg: &SequenceConfig) -> Result<Family> {
    if n < 3 {
        return Err(Error::BadParams(format!("need at least 3 regions, got {n}")));
    }
    let mut regions = vec![segment_on_x_axis("F1", -1, 1), segment_on_x_axis("F2", 0, 2)];
    for i in 3..=n {
        regions.push(cfg.wedge(i)?);
    }
    Family::new(format!("wedges-{n}"), regions)
}

/// Least `y_n` with `{(0, y) : y >= y_n} ⊆ F_n`, namely `−s_n·t_n`.
pub fn y_threshold(n: usize, cfg: &SequenceConfig) -> Result<Rational> {
    Ok(-(cfg.s(n)? * cfg.t(n)?))
}

/// How a point leaves the family for good.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeTrace {
    pub point: Point,
    /// First index with `x < t_n0`, when the general argument applies.
    pub n0: Option<usize>,
    /// Slope of the line through the point and `(t_n0, 0)`.
    pub slope_s: Option<Rational>,
    /// First index with `s_n < slope_s`.
    pub m0: Option<usize>,
    /// Index from which the argument proves non-membership (`max(n0, m0)`
    /// in the general case).
    pub proof_bound: usize,
    /// Least `M >= 3` with the point outside `F_n` for every `n >= M`.
    pub escape_index: usize,
    /// Non-membership was checked directly for `escape_index..=certified_through`.
    pub certified_through: usize,
}

fn floor_to_usize(v: &Rational) -> usize {
    v.floor().to_integer().to_usize().expect("index fits in usize")
}

/// Least `n >= 3` satisfying a predicate that is monotone in `n`.
fn first_index(cfg: &SequenceConfig, pred: impl Fn(usize) -> bool) -> Option<usize> {
    match cfg.last_index() {
        Some(last) => (3..=last).find(|&n| pred(n)),
        None => unreachable!("closed forms are used for the standard sequence"),
    }
}

/// Smallest index from which `p` is outside every `F_n`, with the trace of
/// the divergence argument that proves it.
///
/// The argument's bound is refined downward by direct membership tests, and
/// non-membership is checked for `window` further indices.
pub fn escape_index(p: &Point, cfg: &SequenceConfig, window: usize) -> Result<EscapeTrace> {
    if window < 1 {
        return Err(Error::BadParams("window must be >= 1".into()));
    }
    let mut n0 = None;
    let mut slope_s = None;
    let mut m0 = None;
    let no_proof = || -> Result<EscapeTrace> {
        Err(Error::NoEscapeProof {
            table_relative_index: refine(p, cfg, cfg.last_index().unwrap() + 1)?,
        })
    };

    let proof_bound = if !p.y.is_positive() {
        // On or below the axis only p_n = (t_n, 0) can be in F_n.
        match cfg {
            SequenceConfig::Standard => {
                let gap = Rational::one() - &p.x;
                let hit = gap.is_positive()
                    && gap.recip().is_integer()
                    && gap.recip() >= rat(3, 1)
                    && p.y.is_zero();
                if hit {
                    floor_to_usize(&gap.recip()) + 1
                } else {
                    3
                }
            }
            SequenceConfig::Table(tab) => {
                if p.x > *tab.t.last().unwrap() {
                    return no_proof();
                }
                match tab.t.iter().position(|t| *t == p.x) {
                    Some(i) if p.y.is_zero() => i + 4,
                    _ => 3,
                }
            }
        }
    } else {
        let first_n0 = match cfg {
            SequenceConfig::Standard if p.x >= Rational::one() => None,
            SequenceConfig::Standard => {
                let bound = (Rational::one() - &p.x).recip();
                Some(std::cmp::max(3, floor_to_usize(&bound) + 1))
            }
            SequenceConfig::Table(_) => first_index(cfg, |n| p.x < cfg.t(n).unwrap()),
        };
        match first_n0 {
            // Right of every t_n: outside all wedges.
            None if matches!(cfg, SequenceConfig::Standard) => 3,
            None => return no_proof(),
            Some(first) => {
                let s = -(&p.y) / (cfg.t(first)? - &p.x);
                let first_m0 = match cfg {
                    SequenceConfig::Standard => Some(std::cmp::max(3, floor_to_usize(&-&s) + 1)),
                    SequenceConfig::Table(_) => first_index(cfg, |n| cfg.s(n).unwrap() < s),
                };
                n0 = Some(first);
                slope_s = Some(s);
                match first_m0 {
                    Some(m) => {
                        m0 = Some(m);
                        std::cmp::max(first, m)
                    }
                    None => return no_proof(),
                }
            }
        }
    };

    let escape = refine(p, cfg, proof_bound)?;
    let mut certified_through = escape + window;
    if let Some(last) = cfg.last_index() {
        certified_through = certified_through.min(last);
    }
    for n in escape..=certified_through {
        if cfg.wedge_contains(n, p)? {
            return Err(Error::InvalidInput(format!(
                "escape certificate failed: {p} lies in F{n}"
            )));
        }
    }
    Ok(EscapeTrace {
        point: p.clone(),
        n0,
        slope_s,
        m0,
        proof_bound,
        escape_index: escape,
        certified_through,
    })
}

/// Lowers `bound` while `p` stays outside `F_{bound-1}`.
fn refine(p: &Point, cfg: &SequenceConfig, bound: usize) -> Result<usize> {
    let mut m = bound.max(3);
    while m > 3 && !cfg.wedge_contains(m - 1, p)? {
        m -= 1;
    }
    Ok(m)
}

/// Proof that a finite point set misses some member of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnpierceabilityCertificate {
    /// A wedge index avoided by every point.
    pub index: usize,
    pub traces: Vec<EscapeTrace>,
}

/// Finds `n*` with `F_{n*}` disjoint from `points`.
pub fn unpierceability_certificate(
    points: &[Point],
    cfg: &SequenceConfig,
) -> Result<UnpierceabilityCertificate> {
    if points.is_empty() {
        return Err(Error::InvalidInput("point set must be nonempty".into()));
    }
    let traces = points
        .iter()
        .map(|p| escape_index(p, cfg, 1))
        .collect::<Result<Vec<_>>>()?;
    let index = traces.iter().map(|t| t.escape_index).max().unwrap();
    if cfg.last_index().map_or(true, |last| index <= last) {
        if let Some(p) = points.iter().find(|p| cfg.wedge_contains(index, p).unwrap_or(true)) {
            return Err(Error::InvalidInput(format!("{p} lies in F{index}")));
        }
    }
    Ok(UnpierceabilityCertificate { index, traces })
}

/// Appends `k` boxes `[0,1] × [−1/i, 1/i]`, labeled `K1..Kk`; each contains
/// `[0,1] × {0}` and so every `(t_n, 0)`.
pub fn extend_with_compacta(f: &Family, k: usize) -> Result<Family> {
    if k < 1 {
        return Err(Error::BadParams("k must be >= 1".into()));
    }
    let mut out = f.clone();
    out.name = format!("{}+{k}", f.name);
    for i in 1..=k as i64 {
        let h = Rational::new(BigInt::one(), BigInt::from(i));
        out.push(ConvexRegion::rect(format!("K{i}"), Rational::zero(), -h.clone(), Rational::one(), h))?;
    }
    Ok(out)
}
