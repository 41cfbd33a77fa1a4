//! Objective-space points, dominance and approximate coverage.
//!
//! Every objective is minimized and every coordinate is a positive rational.
//! `u` covers `v` at ratio `rho` when `u_j <= rho * v_j` for every `j`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, int, rat_bits, Rat};

/// A d-vector of positive rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub coords: Vec<Rat>,
}

impl Point {
    /// Builds a point, rejecting `d < 2` and nonpositive coordinates.
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidParameter(
                "points need at least two coordinates".into(),
            ));
        }
        if coords.iter().any(|c| *c <= Rat::zero()) {
            return Err(Error::InvalidParameter(
                "coordinates must be positive".into(),
            ));
        }
        Ok(Point { coords })
    }

    pub fn xy(x: Rat, y: Rat) -> Self {
        Point { coords: vec![x, y] }
    }

    /// Integer coordinates; handy in tests and examples.
    pub fn ints(v: &[i64]) -> Self {
        Point {
            coords: v.iter().map(|&c| int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn x(&self) -> &Rat {
        &self.coords[0]
    }

    pub fn y(&self) -> &Rat {
        &self.coords[1]
    }

    /// `self <= other` coordinatewise. Dimensions must agree.
    pub fn dominates(&self, other: &Point) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// `self_j <= rho * other_j` for all `j`.
    pub fn covers(&self, other: &Point, rho: &Rat) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| *a <= rho * b)
    }

    /// Coordinatewise scaling.
    pub fn scale(&self, f: &Rat) -> Point {
        Point {
            coords: self.coords.iter().map(|c| c * f).collect(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An indexed list of points sharing one dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointSet {
    pub dim: usize,
    pub points: Vec<Point>,
}

impl PointSet {
    /// Checks that all points share a dimension.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dim = points.first().map_or(0, Point::dim);
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, p.dim()));
        }
        Ok(PointSet { dim, points })
    }

    pub fn empty(dim: usize) -> Self {
        PointSet {
            dim,
            points: Vec::new(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        PointSet::new(rows.iter().map(|r| Point::ints(r)).collect()).expect("ragged rows")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// The sub-set at the given indices, in that order.
    pub fn select(&self, idx: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Value-level membership.
    pub fn contains(&self, p: &Point) -> bool {
        self.points.iter().any(|q| q == p)
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

/// For each covered index, the index of a point that covers it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub assignments: BTreeMap<usize, usize>,
    pub ratio: Rat,
}

impl CoverCertificate {
    /// Re-checks every assignment of `covering` over `covered`.
    pub fn verify(&self, covering: &PointSet, covered: &PointSet) -> bool {
        self.assignments.iter().all(|(&v, &u)| {
            u < covering.len() && v < covered.len() && covering[u].covers(&covered[v], &self.ratio)
        })
    }
}

fn check_dims(u: &Point, v: &Point) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    Ok(())
}

/// True iff `u_j <= v_j` for every coordinate.
pub fn dominates(u: &Point, v: &Point) -> Result<bool> {
    check_dims(u, v)?;
    Ok(u.dominates(v))
}

/// True iff `u_j <= rho * v_j` for every coordinate.
pub fn covers(u: &Point, v: &Point, rho: &Rat) -> Result<bool> {
    check_dims(u, v)?;
    if *rho < Rat::one() {
        return Err(Error::RatioBelowOne);
    }
    Ok(u.covers(v, rho))
}

/// Indices of the undominated points. Among equal points the lowest index
/// survives.
pub fn pareto_indices(p: &PointSet) -> Vec<usize> {
    (0..p.len())
        .filter(|&i| {
            !(0..p.len()).any(|j| j != i && p[j].dominates(&p[i]) && (j < i || p[j] != p[i]))
        })
        .collect()
}

/// The undominated points of `p`, in input order.
pub fn pareto_filter(p: &PointSet) -> PointSet {
    p.select(&pareto_indices(p))
}

/// Smallest `rho >= 1` with `p` covering `q` at `rho`.
pub fn ratio_distance(p: &Point, q: &Point) -> Rat {
    debug_assert_eq!(p.dim(), q.dim());
    p.coords
        .iter()
        .zip(&q.coords)
        .map(|(a, b)| a / b)
        .fold(Rat::one(), |m, r| if r > m { r } else { m })
}

/// Smallest `c >= 0` with `p_i <= q_i + c` for all `i`.
pub fn additive_distance(p: &Point, q: &Point) -> Rat {
    debug_assert_eq!(p.dim(), q.dim());
    p.coords
        .iter()
        .zip(&q.coords)
        .map(|(a, b)| a - b)
        .fold(Rat::zero(), |m, r| if r > m { r } else { m })
}

/// Certificate that `q` covers every Pareto point of `p` at `1 + eps`, or
/// `None`. Keys index `p`, values index `q`; the first covering point wins.
pub fn is_eps_pareto(q: &PointSet, p: &PointSet, eps: &Rat) -> Option<CoverCertificate> {
    cover_certificate(q, p, &(Rat::one() + eps))
}

/// Same as [`is_eps_pareto`] with the cover ratio given directly.
pub fn cover_certificate(q: &PointSet, p: &PointSet, rho: &Rat) -> Option<CoverCertificate> {
    let mut assignments = BTreeMap::new();
    for i in pareto_indices(p) {
        let j = q
            .iter()
            .position(|u| u.dim() == p[i].dim() && u.covers(&p[i], rho))?;
        assignments.insert(i, j);
    }
    Some(CoverCertificate {
        assignments,
        ratio: rho.clone(),
    })
}

/// Max bits over all numerators and denominators (at least 1).
pub fn bit_width(p: &PointSet) -> u64 {
    p.iter()
        .flat_map(|q| q.coords.iter())
        .map(rat_bits)
        .max()
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn dominance_examples() {
        let p = |a, b| Point::ints(&[a, b]);
        assert!(dominates(&p(1, 1), &p(1, 1)).unwrap());
        assert!(!dominates(&p(1, 2), &p(2, 1)).unwrap());
        assert!(dominates(&p(1, 1), &p(2, 3)).unwrap());
        assert!(dominates(&p(1, 1), &Point::ints(&[1, 1, 1])).is_err());
    }

    #[test]
    fn cover_examples() {
        let p = |a, b| Point::ints(&[a, b]);
        assert!(covers(&p(1, 1), &p(1, 1), &int(1)).unwrap());
        assert!(!covers(&p(2, 1), &p(1, 1), &rat(3, 2)).unwrap());
        assert_eq!(
            covers(&p(1, 1), &p(1, 1), &rat(1, 2)),
            Err(Error::RatioBelowOne)
        );
    }

    #[test]
    fn filter_examples() {
        let s = PointSet::from_ints(&[&[1, 2], &[2, 1], &[2, 2]]);
        assert_eq!(pareto_filter(&s), PointSet::from_ints(&[&[1, 2], &[2, 1]]));
        let s = PointSet::from_ints(&[&[1, 1]]);
        assert_eq!(pareto_filter(&s), s);
        let s = PointSet::from_ints(&[&[3, 3], &[1, 2], &[1, 2]]);
        assert_eq!(pareto_indices(&s), vec![1]);
    }

    #[test]
    fn distance_examples() {
        let p = |a, b| Point::ints(&[a, b]);
        assert_eq!(ratio_distance(&p(3, 4), &p(3, 4)), int(1));
        assert_eq!(ratio_distance(&p(2, 1), &p(1, 1)), int(2));
        assert_eq!(ratio_distance(&p(1, 3), &p(2, 1)), int(3));
        assert_eq!(additive_distance(&p(3, 4), &p(3, 4)), int(0));
        assert_eq!(additive_distance(&p(3, 1), &p(1, 1)), int(2));
        assert_eq!(additive_distance(&p(1, 1), &p(5, 5)), int(0));
    }

    #[test]
    fn eps_pareto_examples() {
        let p = PointSet::new(vec![
            Point::ints(&[1, 1]),
            Point::xy(rat(21, 20), rat(21, 20)),
        ])
        .unwrap();
        let q = PointSet::from_ints(&[&[1, 1]]);
        assert!(is_eps_pareto(&q, &p, &rat(1, 10)).is_some());
        assert!(is_eps_pareto(&PointSet::empty(2), &p, &rat(1, 10)).is_none());
    }

    #[test]
    fn bit_width_examples() {
        assert_eq!(bit_width(&PointSet::from_ints(&[&[1, 1]])), 1);
        let s = PointSet::new(vec![Point::xy(rat(3, 2), int(1))]).unwrap();
        assert_eq!(bit_width(&s), 2);
        assert_eq!(bit_width(&PointSet::from_ints(&[&[1024, 1]])), 11);
    }
}
