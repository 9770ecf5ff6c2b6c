//! Exact rational points and the predicates built on them.
//!
//! Every predicate here is evaluated in arbitrary-precision rational
//! arithmetic, so collinearity is decided exactly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Canonical arbitrary-precision rational (positive denominator, reduced).
pub type Rational = BigRational;

/// Builds `num / den` in canonical form.
pub fn rational(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
        }
    }

    /// `(x_num / x_den, y_num / y_den)`.
    pub fn from_ratios(x_num: i64, x_den: i64, y_num: i64, y_den: i64) -> Result<Self> {
        Ok(Point {
            x: rational(x_num, x_den)?,
            y: rational(y_num, y_den)?,
        })
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point {
            x: &self.x + t * (&other.x - &self.x),
            y: &self.y + t * (&other.y - &self.y),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Cross product `(b - a) x (c - a)`.
pub fn cross(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let det = cross(a, b, c);
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    cross(a, b, c).is_zero()
}

fn strictly_between(v: &Rational, lo: &Rational, hi: &Rational) -> bool {
    match lo.cmp(hi) {
        Ordering::Less => lo < v && v < hi,
        Ordering::Greater => hi < v && v < lo,
        Ordering::Equal => v == lo,
    }
}

/// True iff `q` lies strictly inside the segment `ab`.
pub fn point_on_open_segment(q: &Point, a: &Point, b: &Point) -> Result<bool> {
    if a == b {
        return Err(Error::DegenerateSegment(a.to_string()));
    }
    if q == a || q == b {
        return Ok(false);
    }
    // The coordinate-range test rejects most candidates before the cross product.
    if !strictly_between(&q.x, &a.x, &b.x) || !strictly_between(&q.y, &a.y, &b.y) {
        return Ok(false);
    }
    Ok(collinear(a, b, q))
}

/// Parameter `t` with `line(c, d) ∩ line(a, b) = a + t (b - a)`, or `None`
/// when the lines are parallel or identical.
pub fn segment_line_params(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<Option<Rational>> {
    if a == b {
        return Err(Error::DegenerateSegment(a.to_string()));
    }
    if c == d {
        return Err(Error::DegenerateSegment(c.to_string()));
    }
    let (d1x, d1y) = (&b.x - &a.x, &b.y - &a.y);
    let (d2x, d2y) = (&d.x - &c.x, &d.y - &c.y);
    let denom = &d1x * &d2y - &d1y * &d2x;
    if denom.is_zero() {
        return Ok(None);
    }
    let (ex, ey) = (&c.x - &a.x, &c.y - &a.y);
    let numer = ex * d2y - ey * d2x;
    Ok(Some(numer / denom))
}

/// Returns the first pair of equal points, if any.
pub fn find_duplicate(points: &[Point]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].cmp(&points[j]).then(i.cmp(&j)));
    order
        .windows(2)
        .filter(|w| points[w[0]] == points[w[1]])
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .min()
}

pub(crate) fn ensure_distinct(points: &[Point]) -> Result<()> {
    match find_duplicate(points) {
        Some((first, second)) => Err(Error::DuplicatePoints { first, second }),
        None => Ok(()),
    }
}

/// Hull of `subset` (indices into `points`), collinear boundary points included.
fn hull_of(points: &[Point], subset: &[usize]) -> Vec<usize> {
    let mut order = subset.to_vec();
    order.sort_by(|&i, &j| points[i].cmp(&points[j]));
    if order.len() <= 2 {
        return order;
    }
    let all_collinear = order[2..]
        .iter()
        .all(|&k| collinear(&points[order[0]], &points[order[1]], &points[k]));
    if all_collinear {
        return order;
    }

    let turns_clockwise = |chain: &[usize], next: usize| {
        let n = chain.len();
        orientation(&points[chain[n - 2]], &points[chain[n - 1]], &points[next]) == Orientation::Clockwise
    };
    let mut lower: Vec<usize> = Vec::with_capacity(order.len());
    for &i in &order {
        while lower.len() >= 2 && turns_clockwise(&lower, i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::with_capacity(order.len());
    for &i in order.iter().rev() {
        while upper.len() >= 2 && turns_clockwise(&upper, i) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Indices of the hull vertices in counterclockwise order, starting from the
/// lexicographically smallest point. Points on hull edges are included. A
/// collinear input is returned in lexicographic order.
pub fn convex_hull(points: &[Point]) -> Result<Vec<usize>> {
    ensure_distinct(points)?;
    let all: Vec<usize> = (0..points.len()).collect();
    Ok(hull_of(points, &all))
}

/// Onion peeling: successive hulls, outermost first. Every index appears in
/// exactly one layer.
pub fn convex_layers(points: &[Point]) -> Result<Vec<Vec<usize>>> {
    ensure_distinct(points)?;
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let layer = hull_of(points, &remaining);
        let mut on_layer = vec![false; points.len()];
        for &i in &layer {
            on_layer[i] = true;
        }
        remaining.retain(|&i| !on_layer[i]);
        layers.push(layer);
    }
    Ok(layers)
}
