//! Exact geometric primitives over rational coordinates.
//!
//! Every predicate in this module is decided by exact arithmetic on
//! `BigRational` values; there is no floating-point fallback and no epsilon.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

/// Exact rational scalar used for all coordinates.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Build a rational from numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("point coincides with the radial center")]
    CoincidentPoint,
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    /// Midpoint of two points.
    pub fn midpoint(&self, other: &Point) -> Point {
        let two = rat(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Result of the exact orientation test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Sign of the 2x2 determinant of (q - p, r - p).
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    match cross.cmp(&Rational::zero()) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Exact cross product of vectors u and v.
pub fn cross(u: &Point, v: &Point) -> Rational {
    &u.x * &v.y - &u.y * &v.x
}

/// Exact dot product of vectors u and v.
pub fn dot(u: &Point, v: &Point) -> Rational {
    &u.x * &v.x + &u.y * &v.y
}

/// Difference vector b - a, reused as a direction.
pub fn direction(a: &Point, b: &Point) -> Point {
    Point::new(&b.x - &a.x, &b.y - &a.y)
}

/// How two closed segments relate to each other.
///
/// Exactly one variant applies to any pair of nondegenerate segments and the
/// classification is symmetric in the two segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    SharedEndpoint,
    ProperCrossing,
    EndpointInInterior,
    CollinearOverlap,
    Identical,
}

/// True if c lies strictly inside segment ab, assuming a, b, c collinear.
pub(crate) fn strictly_between(a: &Point, b: &Point, c: &Point) -> bool {
    if c == a || c == b {
        return false;
    }
    if a.x != b.x {
        (a.x < c.x && c.x < b.x) || (b.x < c.x && c.x < a.x)
    } else {
        (a.y < c.y && c.y < b.y) || (b.y < c.y && c.y < a.y)
    }
}

/// True if c lies in the relative interior of segment ab (exact test).
pub fn point_in_segment_interior(a: &Point, b: &Point, c: &Point) -> bool {
    orientation(a, b, c) == Orientation::Collinear && strictly_between(a, b, c)
}

/// Exact classification of the relation between segments ab and cd.
pub fn classify_segments(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
) -> Result<SegmentRelation, GeometryError> {
    if a == b || c == d {
        return Err(GeometryError::DegenerateSegment);
    }
    if (a == c && b == d) || (a == d && b == c) {
        return Ok(SegmentRelation::Identical);
    }

    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // All four points on one line: decide by 1-dimensional overlap along
        // the dominant axis of the shared line.
        let key = |p: &Point| if a.x != b.x { p.x.clone() } else { p.y.clone() };
        let (mut lo1, mut hi1) = (key(a), key(b));
        if lo1 > hi1 {
            std::mem::swap(&mut lo1, &mut hi1);
        }
        let (mut lo2, mut hi2) = (key(c), key(d));
        if lo2 > hi2 {
            std::mem::swap(&mut lo2, &mut hi2);
        }
        let lo = lo1.max(lo2);
        let hi = hi1.min(hi2);
        return Ok(match lo.cmp(&hi) {
            Ordering::Greater => SegmentRelation::Disjoint,
            // A single common point on a shared line is an endpoint of both.
            Ordering::Equal => SegmentRelation::SharedEndpoint,
            Ordering::Less => SegmentRelation::CollinearOverlap,
        });
    }

    if a == c || a == d || b == c || b == d {
        return Ok(SegmentRelation::SharedEndpoint);
    }

    if o1 == Orientation::Collinear && strictly_between(a, b, c) {
        return Ok(SegmentRelation::EndpointInInterior);
    }
    if o2 == Orientation::Collinear && strictly_between(a, b, d) {
        return Ok(SegmentRelation::EndpointInInterior);
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o3 == Orientation::Collinear && strictly_between(c, d, a) {
        return Ok(SegmentRelation::EndpointInInterior);
    }
    if o4 == Orientation::Collinear && strictly_between(c, d, b) {
        return Ok(SegmentRelation::EndpointInInterior);
    }

    if o1 != o2
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != o4
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        return Ok(SegmentRelation::ProperCrossing);
    }

    Ok(SegmentRelation::Disjoint)
}

/// True iff no two points coincide and no three points are collinear.
///
/// Runs in O(n^2 log n): for each pivot, directions to all other points are
/// canonicalized into the upper half-plane and sorted; a collinear triple
/// shows up as two equal canonical directions.
pub fn is_general_position(points: &[Point]) -> bool {
    let n = points.len();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by(|&i, &j| points[i].cmp(&points[j]));
    for w in sorted.windows(2) {
        if points[w[0]] == points[w[1]] {
            return false;
        }
    }
    for i in 0..n {
        let mut dirs: Vec<Point> = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut d = direction(&points[i], &points[j]);
            if half_plane(&d) == 1 {
                d = Point::new(-d.x, -d.y);
            }
            dirs.push(d);
        }
        dirs.sort_by(cmp_directions);
        for w in dirs.windows(2) {
            if cross(&w[0], &w[1]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Brute-force O(n^3) variant, kept as an independent oracle for tests.
pub fn is_general_position_naive(points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i] == points[j] {
                return false;
            }
            for k in (j + 1)..n {
                if orientation(&points[i], &points[j], &points[k]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }
    true
}

/// Half-plane index of a direction: 0 for angles in [0, pi), 1 for [pi, 2pi).
/// The positive x-axis starts half 0; the negative x-axis starts half 1.
fn half_plane(u: &Point) -> u8 {
    if u.y.is_positive() || (u.y.is_zero() && u.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Exact comparison of two nonzero directions by counterclockwise angle
/// from the positive x-axis.
pub fn cmp_directions(u: &Point, v: &Point) -> Ordering {
    let hu = half_plane(u);
    let hv = half_plane(v);
    if hu != hv {
        return hu.cmp(&hv);
    }
    // Same half-plane: counterclockwise order is decided by the cross sign.
    cross(v, u).cmp(&Rational::zero())
}

/// Indices of `neighbors` sorted counterclockwise around `center`,
/// starting from the positive x-axis.
pub fn sort_radially(center: &Point, neighbors: &[Point]) -> Result<Vec<usize>, GeometryError> {
    let mut dirs = Vec::with_capacity(neighbors.len());
    for p in neighbors {
        if p == center {
            return Err(GeometryError::CoincidentPoint);
        }
        dirs.push(direction(center, p));
    }
    let mut order: Vec<usize> = (0..neighbors.len()).collect();
    order.sort_by(|&i, &j| cmp_directions(&dirs[i], &dirs[j]));
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_basics() {
        assert_eq!(
            orientation(&p(0, 0), &p(1, 0), &p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(&p(0, 0), &p(1, 1), &p(2, 2)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(&p(0, 0), &p(0, 1), &p(1, 0)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn classify_proper_crossing() {
        assert_eq!(
            classify_segments(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)).unwrap(),
            SegmentRelation::ProperCrossing
        );
    }

    #[test]
    fn classify_shared_endpoint() {
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)).unwrap(),
            SegmentRelation::SharedEndpoint
        );
        // Collinear but touching in a single shared endpoint.
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 0)).unwrap(),
            SegmentRelation::SharedEndpoint
        );
    }

    #[test]
    fn classify_collinear_overlap() {
        assert_eq!(
            classify_segments(&p(0, 0), &p(3, 0), &p(1, 0), &p(2, 0)).unwrap(),
            SegmentRelation::CollinearOverlap
        );
        // Shared endpoint plus a positive-length overlap counts as overlap.
        assert_eq!(
            classify_segments(&p(0, 0), &p(3, 0), &p(0, 0), &p(2, 0)).unwrap(),
            SegmentRelation::CollinearOverlap
        );
    }

    #[test]
    fn classify_endpoint_in_interior() {
        assert_eq!(
            classify_segments(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)).unwrap(),
            SegmentRelation::EndpointInInterior
        );
    }

    #[test]
    fn classify_disjoint_and_identical() {
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)).unwrap(),
            SegmentRelation::Disjoint
        );
        assert_eq!(
            classify_segments(&p(0, 0), &p(1, 0), &p(1, 0), &p(0, 0)).unwrap(),
            SegmentRelation::Identical
        );
        assert!(classify_segments(&p(0, 0), &p(0, 0), &p(0, 1), &p(1, 1)).is_err());
    }

    #[test]
    fn general_position_checks() {
        assert!(is_general_position(&[p(0, 0), p(1, 0), p(0, 1), p(1, 1)]));
        assert!(!is_general_position(&[p(0, 0), p(1, 0), p(2, 0)]));
        assert!(!is_general_position(&[p(0, 0), p(0, 0), p(1, 1)]));
    }

    #[test]
    fn radial_sort_starts_at_positive_x() {
        let order = sort_radially(&p(0, 0), &[p(1, 0), p(0, 1), p(-1, 0)]).unwrap();
        assert_eq!(order, vec![0, 1, 2]);
        let order = sort_radially(&p(0, 0), &[p(-1, 0), p(1, 0)]).unwrap();
        assert_eq!(order, vec![1, 0]);
        // Same cyclic order around a different center.
        let order = sort_radially(&p(1, 1), &[p(2, 1), p(1, 2), p(0, 1), p(1, 0)]).unwrap();
        assert_eq!(order, vec![0, 1, 2, 3]);
        assert!(sort_radially(&p(0, 0), &[p(0, 0)]).is_err());
    }

    #[test]
    fn orientation_antisymmetry() {
        let (a, b, c) = (p(3, 7), p(-2, 5), p(11, -4));
        let o1 = orientation(&a, &b, &c);
        let o2 = orientation(&a, &c, &b);
        match (o1, o2) {
            (Orientation::CounterClockwise, Orientation::Clockwise) => {}
            (Orientation::Clockwise, Orientation::CounterClockwise) => {}
            (Orientation::Collinear, Orientation::Collinear) => {}
            other => panic!("antisymmetry violated: {:?}", other),
        }
    }
}
