use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use super::point::{Point, Rational};
use crate::error::{Error, Result};

/// Scales `(a, b, c)` by a positive factor to coprime integers.
fn primitive(a: &Rational, b: &Rational, c: &Rational) -> (BigInt, BigInt, BigInt) {
    let lcm = a.denom().lcm(b.denom()).lcm(c.denom());
    let scale = |r: &Rational| r.numer() * (&lcm / r.denom());
    let (ia, ib, ic) = (scale(a), scale(b), scale(c));
    let g = ia.gcd(&ib).gcd(&ic);
    (ia / &g, ib / &g, ic / &g)
}

/// The closed half-plane `a·x + b·y <= c`.
///
/// Coefficients are kept as coprime integers (a positive rescaling of the
/// input), so two half-planes describing the same set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfPlane {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl HalfPlane {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroNormal);
        }
        let (a, b, c) = primitive(&a, &b, &c);
        Ok(HalfPlane {
            a: Rational::from_integer(a),
            b: Rational::from_integer(b),
            c: Rational::from_integer(c),
        })
    }

    /// `x <= v`
    pub fn x_at_most(v: Rational) -> Self {
        HalfPlane::new(Rational::one(), Rational::zero(), v).unwrap()
    }

    /// `x >= v`
    pub fn x_at_least(v: Rational) -> Self {
        HalfPlane::new(-Rational::one(), Rational::zero(), -v).unwrap()
    }

    /// `y <= v`
    pub fn y_at_most(v: Rational) -> Self {
        HalfPlane::new(Rational::zero(), Rational::one(), v).unwrap()
    }

    /// `y >= v`
    pub fn y_at_least(v: Rational) -> Self {
        HalfPlane::new(Rational::zero(), -Rational::one(), -v).unwrap()
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// `a·x + b·y` at `p`.
    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p) <= self.c
    }

    pub fn boundary(&self) -> Line {
        Line::new(self.a.clone(), self.b.clone(), self.c.clone())
            .expect("half-plane normal is nonzero")
    }

    /// The complementary closed half-plane `-a·x - b·y <= -c`.
    pub fn flipped(&self) -> HalfPlane {
        HalfPlane::new(-&self.a, -&self.b, -&self.c).unwrap()
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::new();
        for (coef, var) in [(&self.a, "x"), (&self.b, "y")] {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() { "-" } else if lhs.is_empty() { "" } else { "+" };
            let mag = coef.abs();
            let sep = if lhs.is_empty() { "" } else { " " };
            let gap = if lhs.is_empty() || sign.is_empty() { "" } else { " " };
            if mag.is_one() {
                lhs += &format!("{sep}{sign}{gap}{var}");
            } else {
                lhs += &format!("{sep}{sign}{gap}{mag}{var}");
            }
        }
        write!(f, "{lhs} <= {}", self.c)
    }
}

/// The line `a·x + b·y = c`, canonicalized to coprime integers with the first
/// nonzero of `(a, b)` positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Line {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroNormal);
        }
        let (mut a, mut b, mut c) = primitive(&a, &b, &c);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line {
            a: Rational::from_integer(a),
            b: Rational::from_integer(b),
            c: Rational::from_integer(c),
        })
    }

    /// `x = v`
    pub fn vertical(v: Rational) -> Self {
        Line::new(Rational::one(), Rational::zero(), v).unwrap()
    }

    /// `y = v`
    pub fn horizontal(v: Rational) -> Self {
        Line::new(Rational::zero(), Rational::one(), v).unwrap()
    }

    /// Unique crossing point, or `None` for parallel (or equal) lines.
    pub fn intersection(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &other.b - &self.b * &other.c) / &det;
        let y = (&self.a * &other.c - &self.c * &other.a) / &det;
        Some(Point::new(x, y))
    }

    /// Points where the line meets the coordinate axes.
    pub fn axis_intercepts(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        if !self.a.is_zero() {
            out.push(&self.c / &self.a);
        }
        if !self.b.is_zero() {
            out.push(&self.c / &self.b);
        }
        out
    }
}
