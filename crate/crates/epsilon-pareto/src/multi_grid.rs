//! d-objective machinery: geometric-grid construction from a GAP oracle,
//! the two-phase eps'-Pareto algorithm, greedy set cover, and exhaustive
//! VC-dimension search over the coverage set systems.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::{Answer, CallCounter, Counted, GapOracle};
use crate::point::{cover_certificate, pareto_filter, CoverCertificate, Point, PointSet};
use crate::rational::{pow2, rat_bits, root_floor, Rat};

/// A geometric grid `lo (1 + delta')^i`, `i = 1..=steps + 1`, where `steps`
/// is the least integer with `lo (1 + delta')^steps >= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub delta_prime: Rat,
    pub lo: Rat,
    pub hi: Rat,
    pub d: usize,
}

impl GridSpec {
    /// Grid for tolerance `delta` over `[2^-m, 2^m]^d`.
    pub fn new(delta: &Rat, m: u64, d: usize) -> Result<Self> {
        Ok(GridSpec {
            delta_prime: grid_delta_prime(delta)?,
            lo: pow2(-(m as i64)),
            hi: pow2(m as i64),
            d,
        })
    }

    /// Values along one axis.
    pub fn values(&self) -> Vec<Rat> {
        let step = Rat::one() + &self.delta_prime;
        let mut v = self.lo.clone();
        let mut out = Vec::new();
        let mut reached = false;
        loop {
            v *= &step;
            out.push(v.clone());
            if reached {
                return out;
            }
            reached = v >= self.hi;
        }
    }
}

/// Rational `delta' > 0` with `(1 + delta')^2 <= 1 + delta`.
pub fn grid_delta_prime(delta: &Rat) -> Result<Rat> {
    if *delta <= Rat::zero() {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    let mut prec = rat_bits(delta) + 4;
    loop {
        let d = root_floor(&(Rat::one() + delta), 2, prec) - Rat::one();
        if d > Rat::zero() {
            return Ok(d);
        }
        prec *= 2;
    }
}

/// Output of [`gap_grid_pareto`].
#[derive(Clone, Debug)]
pub struct GridResult {
    pub result: PointSet,
    pub gap_calls: u64,
    pub spec: GridSpec,
}

/// A `delta`-Pareto set from GAP calls at every point of the full
/// d-dimensional grid. Each call uses tolerance `delta'`; answers are
/// Pareto-filtered.
pub fn gap_grid_pareto(g: &(impl GapOracle + ?Sized), delta: &Rat) -> Result<GridResult> {
    let spec = GridSpec::new(delta, g.value_bits(), g.dim())?;
    let counter = CallCounter::new();
    let g = Counted::new(g, &counter);
    let values = spec.values();
    let d = spec.d;
    let mut found: Vec<Point> = Vec::new();
    let mut seen: HashSet<Point> = HashSet::new();
    let mut idx = vec![0usize; d];
    'grid: loop {
        let b = Point {
            coords: idx.iter().map(|&i| values[i].clone()).collect(),
        };
        if let Answer::Found(s) = g.gap(&b, &spec.delta_prime) {
            if seen.insert(s.point.clone()) {
                found.push(s.point);
            }
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < values.len() {
                continue 'grid;
            }
            *slot = 0;
        }
        break;
    }
    let result = pareto_filter(&PointSet {
        dim: d,
        points: found,
    });
    Ok(GridResult {
        result,
        gap_calls: counter.snapshot().gap,
        spec,
    })
}

/// Rational `delta > 0` with `(1 + eps)(1 + delta)^2 <= 1 + eps'`.
pub fn choose_delta_for(eps: &Rat, eps_prime: &Rat) -> Result<Rat> {
    if *eps < Rat::zero() || eps_prime <= eps {
        return Err(Error::InvalidParameter("need eps' > eps >= 0".into()));
    }
    let ratio = (Rat::one() + eps_prime) / (Rat::one() + eps);
    let mut prec = 2 * (rat_bits(&ratio) + 2);
    loop {
        let d = root_floor(&ratio, 2, prec) - Rat::one();
        if d > Rat::zero() {
            return Ok(d);
        }
        prec *= 2;
    }
}

/// Greedy max-coverage: picks candidate indices until every target is
/// `rho`-covered. Ties go to the lowest index.
pub fn greedy_cover_points(
    targets: &[Point],
    candidates: &[Point],
    rho: &Rat,
) -> Result<Vec<usize>> {
    let covers: Vec<Vec<usize>> = candidates
        .iter()
        .map(|c| {
            (0..targets.len())
                .filter(|&t| c.covers(&targets[t], rho))
                .collect()
        })
        .collect();
    let mut left = vec![true; targets.len()];
    if let Some(t) = (0..targets.len()).find(|&t| covers.iter().all(|s| !s.contains(&t))) {
        return Err(Error::Uncoverable(t));
    }
    let mut remaining = targets.len();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (best, gain) = covers
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.iter().filter(|&&t| left[t]).count()))
            .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        debug_assert!(gain > 0);
        for &t in &covers[best] {
            if left[t] {
                left[t] = false;
                remaining -= 1;
            }
        }
        chosen.push(best);
    }
    Ok(chosen)
}

/// Greedy cover of the points of `p` at indices `a`, using points of `p`.
pub fn greedy_cover(a: &[usize], p: &PointSet, rho: &Rat) -> Result<PointSet> {
    let targets: Vec<Point> = a.iter().map(|&i| p[i].clone()).collect();
    let idx = greedy_cover_points(&targets, &p.points, rho)?;
    Ok(p.select(&idx))
}

/// Output of [`eps_prime_pareto`].
#[derive(Clone, Debug)]
pub struct MultiReport {
    pub result: PointSet,
    /// The phase-1 `delta`-Pareto set.
    pub grid: PointSet,
    pub delta: Rat,
    pub gap_calls: u64,
    /// Filled by [`MultiReport::certify`].
    pub certificate: Option<CoverCertificate>,
}

impl MultiReport {
    /// Certifies the result against `reference` at ratio `1 + eps'`.
    pub fn certify(&mut self, reference: &PointSet, eps_prime: &Rat) -> bool {
        self.certificate = cover_certificate(&self.result, reference, &(Rat::one() + eps_prime));
        self.certificate.is_some()
    }
}

/// Two phases: a grid `delta`-Pareto set `R`, then a greedy cover of `R` by
/// `R` at ratio `(1 + eps)(1 + delta)`.
pub fn eps_prime_pareto(
    g: &(impl GapOracle + ?Sized),
    eps: &Rat,
    eps_prime: &Rat,
) -> Result<MultiReport> {
    let delta = choose_delta_for(eps, eps_prime)?;
    let grid = gap_grid_pareto(g, &delta)?;
    let rho = (Rat::one() + eps) * (Rat::one() + &delta);
    let idx = greedy_cover_points(&grid.result.points, &grid.result.points, &rho)?;
    Ok(MultiReport {
        result: grid.result.select(&idx),
        grid: grid.result,
        delta,
        gap_calls: grid.gap_calls,
        certificate: None,
    })
}

/// For each point, the indices it relates to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageSystem {
    pub ground: PointSet,
    pub sets: Vec<Vec<usize>>,
}

/// `sets[q]` = points `(1 + eps)`-covered by `q`.
pub fn coverage_system(p: &PointSet, eps: &Rat) -> CoverageSystem {
    let rho = Rat::one() + eps;
    let sets = p
        .iter()
        .map(|q| (0..p.len()).filter(|&i| q.covers(&p[i], &rho)).collect())
        .collect();
    CoverageSystem {
        ground: p.clone(),
        sets,
    }
}

/// `sets[q]` = points that `(1 + eps)`-cover `q`.
pub fn dual_coverage_system(p: &PointSet, eps: &Rat) -> CoverageSystem {
    let rho = Rat::one() + eps;
    let sets = p
        .iter()
        .map(|q| (0..p.len()).filter(|&i| p[i].covers(q, &rho)).collect())
        .collect();
    CoverageSystem {
        ground: p.clone(),
        sets,
    }
}

/// Largest shattered subset size, at most `limit`. The empty trace is
/// always counted as realized.
pub fn vc_dim(system: &CoverageSystem, limit: usize) -> Result<usize> {
    let n = system.ground.len();
    if n > 128 {
        return Err(Error::GuardExceeded {
            what: "points in shatter search".into(),
            cap: 128,
        });
    }
    let masks: Vec<u128> = system
        .sets
        .iter()
        .map(|s| s.iter().fold(0u128, |m, &i| m | 1 << i))
        .collect();
    Ok(largest_shattered(&masks, n, limit).len())
}

/// A largest shattered subset (indices), at most `limit` elements.
pub fn largest_shattered(masks: &[u128], n: usize, limit: usize) -> Vec<usize> {
    fn shattered(masks: &[u128], t: u128, size: usize) -> bool {
        if masks.len() + 1 < (1usize << size) {
            return false;
        }
        let mut traces: HashSet<u128> = masks.iter().map(|m| m & t).collect();
        traces.insert(0);
        traces.len() == 1 << size
    }
    fn grow(
        masks: &[u128],
        n: usize,
        limit: usize,
        cur: &mut Vec<usize>,
        t: u128,
        best: &mut Vec<usize>,
    ) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if cur.len() == limit {
            return;
        }
        let start = cur.last().map_or(0, |&i| i + 1);
        for i in start..n {
            let t2 = t | 1 << i;
            if shattered(masks, t2, cur.len() + 1) {
                cur.push(i);
                grow(masks, n, limit, cur, t2, best);
                cur.pop();
            }
        }
    }
    let mut best = Vec::new();
    grow(masks, n, limit, &mut Vec::new(), 0, &mut best);
    best
}

/// VC dimension of the primal coverage system, searched up to `limit`.
pub fn vc_dim_primal(p: &PointSet, eps: &Rat, limit: usize) -> Result<usize> {
    vc_dim(&coverage_system(p, eps), limit)
}

/// VC dimension of the dual coverage system, searched up to `limit`.
pub fn vc_dim_dual(p: &PointSet, eps: &Rat, limit: usize) -> Result<usize> {
    vc_dim(&dual_coverage_system(p, eps), limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::shatter_construction;
    use crate::oracle::exact_oracle_from_points;
    use crate::rational::{int, rat};

    #[test]
    fn delta_choice() {
        assert_eq!(
            choose_delta_for(&int(0), &rat(21, 100)).unwrap(),
            rat(1, 10)
        );
        assert!(choose_delta_for(&rat(1, 10), &rat(1, 10)).is_err());
        let d = choose_delta_for(&rat(1, 10), &rat(1, 2)).unwrap();
        assert!(rat(11, 10) * (int(1) + &d) * (int(1) + &d) <= rat(3, 2));
    }

    #[test]
    fn greedy_cover_trivial() {
        let p = PointSet::from_ints(&[&[1, 1]]);
        assert_eq!(greedy_cover(&[0], &p, &int(1)).unwrap(), p);
    }

    #[test]
    fn grid_singleton() {
        let p = PointSet::from_ints(&[&[2, 3, 1]]);
        let o = exact_oracle_from_points(p.clone());
        let r = gap_grid_pareto(&o, &int(1)).unwrap();
        assert_eq!(r.result, p);
    }

    #[test]
    fn vc_small() {
        let one = PointSet::from_ints(&[&[1, 2]]);
        assert_eq!(vc_dim_primal(&one, &rat(1, 2), 3).unwrap(), 1);
        assert_eq!(vc_dim_dual(&one, &rat(1, 2), 3).unwrap(), 1);
        let s = shatter_construction(3, &rat(1, 2)).unwrap();
        assert_eq!(vc_dim_primal(&s, &rat(1, 2), 4).unwrap(), 3);
    }
}
