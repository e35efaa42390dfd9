use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{BigInt, BigRational, Signed, Zero};

/// Exact fraction. `BigRational` is always reduced with a positive denominator.
pub type Rational = BigRational;

/// Builds `num / den` from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A point of the plane. Ordering is lexicographic by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x, 1), rat(y, 1))
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn max_abs_coord(&self) -> Rational {
        std::cmp::max(self.x.abs(), self.y.abs())
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = rat(2, 1);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'a> Add<&'a Point> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'a Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'a Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Mul<&'a Rational> for &'a Point {
    type Output = Point;
    fn mul(self, rhs: &'a Rational) -> Point {
        Point::new(&self.x * rhs, &self.y * rhs)
    }
}

/// Twice the signed area of `(a, b, c)`: positive for a counterclockwise turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    (b - a).cross(&(c - a))
}
