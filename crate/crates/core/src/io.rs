//! Line-oriented text formats.
//!
//! Family files:
//!
//! ```text
//! family NAME
//! region LABEL
//! halfplane A B C        # A·x + B·y <= C, exact rationals like 2/3
//! end
//! ```
//!
//! Point files hold one `X Y` pair per line; sequence tables hold one
//! `T S` pair per line for indices 3, 4, .... Blank lines and `#` comments
//! are ignored everywhere.

use std::fmt::Write as _;
use std::str::FromStr;

use num::{BigInt, Signed, Zero};

use crate::counterexample::SequenceTable;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::kernel::{HalfPlane, Point, Rational};
use crate::region::ConvexRegion;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `INT` or `INT/POSINT`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("invalid rational {s:?}");
    let int = |t: &str| -> std::result::Result<BigInt, String> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let den = int(d)?;
            if d.starts_with('-') || den.is_zero() {
                return Err(format!("denominator of {s:?} must be positive"));
            }
            Ok(Rational::new(int(n)?, den))
        }
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

pub fn parse_family(text: &str) -> Result<Family> {
    let mut lines = content_lines(text);
    let name = match lines.next() {
        Some((_, t)) if t.len() == 2 && t[0] == "family" => t[1].to_string(),
        Some((n, _)) => return Err(parse_err(n, "expected `family NAME`")),
        None => return Err(parse_err(1, "empty input")),
    };
    let mut regions: Vec<ConvexRegion> = Vec::new();
    let mut open: Option<ConvexRegion> = None;
    let mut last_line = 1;
    for (n, toks) in lines {
        last_line = n;
        match (toks[0], open.as_mut()) {
            ("region", None) if toks.len() == 2 => {
                if regions.iter().any(|r| r.label == toks[1]) {
                    return Err(Error::DuplicateLabel(toks[1].to_string()));
                }
                open = Some(ConvexRegion::new(toks[1], Vec::new()));
            }
            ("halfplane", Some(region)) if toks.len() == 4 => {
                let mut coef = toks[1..].iter().map(|t| parse_rational(t).map_err(|m| parse_err(n, m)));
                let (a, b, c) = (coef.next().unwrap()?, coef.next().unwrap()?, coef.next().unwrap()?);
                let h = HalfPlane::new(a, b, c).map_err(|e| parse_err(n, e.to_string()))?;
                region.constraints.push(h);
            }
            ("end", Some(_)) if toks.len() == 1 => regions.push(open.take().unwrap()),
            _ => return Err(parse_err(n, format!("unexpected `{}`", toks.join(" ")))),
        }
    }
    if open.is_some() {
        return Err(parse_err(last_line, "missing `end`"));
    }
    if regions.is_empty() {
        return Err(parse_err(last_line, "family has no regions"));
    }
    Family::new(name, regions)
}

pub fn serialize_family(f: &Family) -> String {
    let mut out = format!("family {}\n", f.name);
    for r in f.regions() {
        writeln!(out, "region {}", r.label).unwrap();
        for h in &r.constraints {
            writeln!(out, "halfplane {} {} {}", h.a(), h.b(), h.c()).unwrap();
        }
        out.push_str("end\n");
    }
    out
}

fn parse_pairs(text: &str) -> Result<Vec<(Rational, Rational)>> {
    content_lines(text)
        .map(|(n, toks)| {
            if toks.len() != 2 {
                return Err(parse_err(n, "expected two rationals"));
            }
            let a = parse_rational(toks[0]).map_err(|m| parse_err(n, m))?;
            let b = parse_rational(toks[1]).map_err(|m| parse_err(n, m))?;
            Ok((a, b))
        })
        .collect()
}

pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    Ok(parse_pairs(text)?.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

pub fn serialize_points(points: &[Point]) -> String {
    points.iter().map(|p| format!("{} {}\n", p.x, p.y)).collect()
}

/// Reads `t_n s_n` rows for `n = 3, 4, ...` and validates them.
pub fn parse_table(text: &str) -> Result<SequenceTable> {
    let (t, s) = parse_pairs(text)?.into_iter().unzip();
    SequenceTable::new(t, s)
}

/// Formats a rational as a decimal approximation (for display only).
pub fn approx(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| if r.is_negative() { f64::MIN } else { f64::MAX })
}
