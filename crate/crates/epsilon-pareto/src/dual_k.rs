//! The dual problem: choose at most `k` points minimizing the worst cover
//! ratio. Candidate ratios are scanned in ascending order; each run
//! extracts center-capturing points, covers the rest greedily, shrinks the
//! cover with repeated greedy rounds and finishes with one greedy cover.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multi_grid::{gap_grid_pareto, greedy_cover_points};
use crate::oracle::GapOracle;
use crate::point::{
    cover_certificate, pareto_indices, ratio_distance, CoverCertificate, Point, PointSet,
};
use crate::rational::{int, powi, Rat};

/// Interpolated harmonic number.
pub fn harmonic(alpha: &Rat) -> Rat {
    let fl = alpha.floor().to_integer();
    let ce = alpha.ceil().to_integer();
    let mut h = Rat::zero();
    let mut i = BigInt::one();
    while i <= fl {
        h += Rat::new(BigInt::one(), i.clone());
        i += 1;
    }
    let frac = alpha - Rat::from_integer(fl);
    if !frac.is_zero() {
        h += frac / Rat::from_integer(ce);
    }
    h
}

/// Fewest harmonic iterations bringing `alpha` to at most `b` (`b > 1`).
pub fn h_star(b: &Rat, alpha: &Rat) -> Result<u32> {
    if *b <= Rat::one() {
        return Err(Error::InvalidParameter("h_star needs b > 1".into()));
    }
    let mut a = alpha.clone();
    let mut i = 0;
    while a > *b {
        a = harmonic(&a);
        i += 1;
    }
    Ok(i)
}

/// `h_star(4/3, beta) + alpha + 4`.
pub fn exponent_for(alpha: u32, beta: &Rat) -> u32 {
    h_star(&Rat::new(4.into(), 3.into()), beta).expect("4/3 > 1") + alpha + 4
}

/// A center-capturing point and the ratio it was found at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCVRecord {
    pub point: Point,
    pub ratio: Rat,
}

// Points of `within` that `q` covers at `rho`.
fn gamma_plus(p: &PointSet, q: usize, rho: &Rat, within: &[usize]) -> Vec<usize> {
    within
        .iter()
        .copied()
        .filter(|&i| p[q].covers(&p[i], rho))
        .collect()
}

// Points of `within` that cover `q` at `rho`.
fn gamma_minus(p: &PointSet, q: usize, rho: &Rat, within: &[usize]) -> Vec<usize> {
    within
        .iter()
        .copied()
        .filter(|&i| p[i].covers(&p[q], rho))
        .collect()
}

fn ccv_index(p: &PointSet, a: &[usize], rho: &Rat) -> Option<usize> {
    a.iter().copied().find(|&q| {
        let plus = gamma_plus(p, q, rho, a);
        gamma_minus(p, q, rho, a).iter().all(|i| plus.contains(i))
    })
}

/// First point of `a` whose in-cone is inside its out-cone at `rho`.
pub fn find_ccv(a: &PointSet, rho: &Rat) -> Option<Point> {
    let all: Vec<usize> = (0..a.len()).collect();
    ccv_index(a, &all, rho).map(|i| a[i].clone())
}

/// Phase one at ratio `rho`: repeatedly take the first center-capturing
/// point of the active set and drop everything it covers at `rho^2`, at
/// most `k` times. Returns the centers and the remaining active indices.
pub fn ccv_phase(p: &PointSet, k: usize, rho: &Rat) -> (Vec<usize>, Vec<usize>) {
    let rho2 = rho * rho;
    let mut a: Vec<usize> = (0..p.len()).collect();
    let mut centers = Vec::new();
    while centers.len() < k {
        let Some(q) = ccv_index(p, &a, rho) else {
            break;
        };
        let gone = gamma_plus(p, q, &rho2, &a);
        a.retain(|i| !gone.contains(i));
        centers.push(q);
    }
    (centers, a)
}

fn greedy_idx(p: &PointSet, targets: &[usize], rho: &Rat) -> Result<Vec<usize>> {
    let pts: Vec<Point> = targets.iter().map(|&i| p[i].clone()).collect();
    greedy_cover_points(&pts, &p.points, rho)
}

/// Repeated greedy covers by `p` at `rho`, intersected with `a`, until at
/// most `4l/3` points remain. Indices refer to `p`. Gives up with
/// `InvalidParameter` when a round fails to shrink the set.
pub fn rec_cover_idx(
    s: &[usize],
    a: &[usize],
    p: &PointSet,
    rho: &Rat,
    l: usize,
) -> Result<Vec<usize>> {
    let mut cur: Vec<usize> = s.to_vec();
    while 3 * cur.len() > 4 * l {
        let cover = greedy_idx(p, &cur, rho)?;
        let mut next: Vec<usize> = cover.into_iter().filter(|i| a.contains(i)).collect();
        next.sort_unstable();
        next.dedup();
        if next.len() >= cur.len() {
            return Err(Error::InvalidParameter("recursive cover stalled".into()));
        }
        cur = next;
    }
    Ok(cur)
}

fn index_of(p: &PointSet, q: &Point) -> Result<usize> {
    p.iter()
        .position(|x| x == q)
        .ok_or_else(|| Error::InvalidParameter("point not in P".into()))
}

/// Point-set form of [`rec_cover_idx`]; `s` and `a` are matched into `p`
/// by value.
pub fn rec_cover(
    s: &PointSet,
    a: &PointSet,
    p: &PointSet,
    rho: &Rat,
    l: usize,
) -> Result<PointSet> {
    let si = s
        .iter()
        .map(|q| index_of(p, q))
        .collect::<Result<Vec<_>>>()?;
    let ai = a
        .iter()
        .map(|q| index_of(p, q))
        .collect::<Result<Vec<_>>>()?;
    Ok(p.select(&rec_cover_idx(&si, &ai, p, rho, l)?))
}

/// Which branch of the final argument covers a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverCase {
    /// Within `rho^2` of a center-capturing point.
    Center,
    /// Its phase-2 cover point is only covered by the centers.
    CenterViaS0,
    /// Its chain stops at `S1`; the centers take over.
    CenterViaS1,
    /// Covered through the full chain ending in `S2`.
    Chain,
}

/// Output of the dual algorithms.
#[derive(Clone, Debug)]
pub struct DualResult {
    pub chosen: PointSet,
    /// Indices of `chosen` in the input.
    pub chosen_idx: Vec<usize>,
    /// Smallest ratio at which `chosen` covers the input.
    pub achieved_ratio: Rat,
    /// The candidate ratio whose run succeeded.
    pub optimal_ratio_guess: Rat,
    pub certificate: CoverCertificate,
    /// Nominal exponent for the requested `(alpha, beta)`.
    pub nominal_exponent: u32,
    /// Exponent guaranteed by the greedy phase 2 actually used.
    pub honest_exponent: u32,
    /// `beta` effectively used, `H(|A|)`.
    pub beta_used: Rat,
    /// Per input point, the branch that covers it.
    pub cases: Vec<CoverCase>,
    pub centers: Vec<usize>,
}

fn achieved(p: &PointSet, chosen: &[usize]) -> Rat {
    p.iter()
        .map(|x| {
            chosen
                .iter()
                .map(|&c| ratio_distance(&p[c], x))
                .min()
                .unwrap_or_else(Rat::zero)
        })
        .max()
        .unwrap_or_else(Rat::one)
}

fn covered_by(p: &PointSet, set: &[usize], x: usize, rho: &Rat) -> Option<usize> {
    set.iter().copied().find(|&c| p[c].covers(&p[x], rho))
}

struct Run {
    centers: Vec<usize>,
    s0: Vec<usize>,
    s1: Vec<usize>,
    s2: Vec<usize>,
    beta: Rat,
}

fn run_candidate(p: &PointSet, k: usize, rho: &Rat) -> Result<Option<Run>> {
    let rho2 = rho * rho;
    let rho3 = &rho2 * rho;
    let rho4 = &rho2 * &rho2;
    let all: Vec<usize> = (0..p.len()).collect();
    let (centers, a) = ccv_phase(p, k, rho);
    let kp = k - centers.len();
    let beta = Rat::from_integer(a.len().into());
    if a.is_empty() {
        return Ok(Some(Run {
            centers,
            s0: vec![],
            s1: vec![],
            s2: vec![],
            beta: harmonic(&beta),
        }));
    }
    if kp == 0 {
        return Ok(None);
    }
    let in_c = |x: usize, r: &Rat| centers.iter().any(|&c| p[c].covers(&p[x], r));
    let cand: Vec<usize> = all.iter().copied().filter(|&x| !in_c(x, rho)).collect();
    let targets: Vec<Point> = a.iter().map(|&i| p[i].clone()).collect();
    let cand_pts: Vec<Point> = cand.iter().map(|&i| p[i].clone()).collect();
    let s0: Vec<usize> = match greedy_cover_points(&targets, &cand_pts, rho) {
        Ok(v) => v.into_iter().map(|j| cand[j]).collect(),
        Err(Error::Uncoverable(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let s0_hat: Vec<usize> = s0.iter().copied().filter(|&x| !in_c(x, &rho2)).collect();
    let s1 = match rec_cover_idx(&s0_hat, &a, p, rho, kp) {
        Ok(v) => v,
        Err(Error::InvalidParameter(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let s1_hat: Vec<usize> = s1.iter().copied().filter(|&x| !in_c(x, &rho4)).collect();
    let s2 = greedy_idx(p, &s1_hat, &rho3)?;
    if centers.len() + s2.len() > k {
        return Ok(None);
    }
    Ok(Some(Run {
        centers,
        s0,
        s1,
        s2,
        beta: harmonic(&beta),
    }))
}

/// Sorted distinct pairwise ratio distances, starting at 1.
pub fn candidate_ratios(p: &PointSet) -> Vec<Rat> {
    let mut v = vec![Rat::one()];
    for a in p.iter() {
        for b in p.iter() {
            v.push(ratio_distance(a, b));
        }
    }
    v.sort();
    v.dedup();
    v
}

/// The dual k-point algorithm over an explicit set. `(alpha, beta)` only
/// set the reported nominal exponent; phase 2 is greedy set cover.
pub fn dual_k_explicit(p: &PointSet, k: usize, alpha: u32, beta: u32) -> Result<DualResult> {
    if k < 1 || k > p.len() {
        return Err(Error::InvalidParameter("need 1 <= k <= |P|".into()));
    }
    for rho in candidate_ratios(p) {
        let Some(run) = run_candidate(p, k, &rho)? else {
            continue;
        };
        let mut chosen_idx: Vec<usize> = run.centers.iter().chain(&run.s2).copied().collect();
        chosen_idx.sort_unstable();
        chosen_idx.dedup();
        let ratio = achieved(p, &chosen_idx);
        let chosen = p.select(&chosen_idx);
        let certificate = cover_certificate(&chosen, p, &ratio).expect("ratio is achieved");
        let honest = exponent_for(1, &run.beta);
        let cases = classify(p, &run, &rho, honest - 4);
        return Ok(DualResult {
            chosen,
            chosen_idx,
            achieved_ratio: ratio,
            optimal_ratio_guess: rho,
            certificate,
            nominal_exponent: exponent_for(alpha, &int(beta as i64)),
            honest_exponent: honest,
            beta_used: run.beta,
            cases,
            centers: run.centers,
        });
    }
    unreachable!("the largest candidate ratio always succeeds")
}

fn classify(p: &PointSet, run: &Run, rho: &Rat, hs_plus_alpha: u32) -> Vec<CoverCase> {
    let rho2 = rho * rho;
    let h = powi(rho, hs_plus_alpha.saturating_sub(1));
    let rho3 = &rho2 * rho;
    (0..p.len())
        .map(|x| {
            if covered_by(p, &run.centers, x, &rho2).is_some() {
                return CoverCase::Center;
            }
            let Some(p0) = covered_by(p, &run.s0, x, rho) else {
                return CoverCase::Center;
            };
            let Some(p1) = covered_by(p, &run.s1, p0, &h) else {
                return CoverCase::CenterViaS0;
            };
            match covered_by(p, &run.s2, p1, &rho3) {
                Some(_) => CoverCase::Chain,
                None => CoverCase::CenterViaS1,
            }
        })
        .collect()
}

/// Exact optimum by enumerating all `k`-subsets; `cap` bounds the count.
pub fn brute_force_dual_capped(p: &PointSet, k: usize, cap: u64) -> Result<DualResult> {
    let n = p.len();
    if k < 1 || k > n {
        return Err(Error::InvalidParameter("need 1 <= k <= |P|".into()));
    }
    let mut count: u128 = 1;
    for i in 0..k as u128 {
        count = count * (n as u128 - i) / (i + 1);
    }
    if count > cap as u128 {
        return Err(Error::GuardExceeded {
            what: "k-subsets".into(),
            cap,
        });
    }
    let rd: Vec<Vec<Rat>> = p
        .iter()
        .map(|a| p.iter().map(|b| ratio_distance(a, b)).collect())
        .collect();
    let mut best: Option<(Rat, Vec<usize>)> = None;
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        let r = (0..n)
            .map(|x| cur.iter().map(|&c| &rd[c][x]).min().unwrap().clone())
            .max()
            .unwrap();
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, cur.clone()));
        }
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    let (ratio, idx) = best.expect("at least one subset");
    let chosen = p.select(&idx);
    let certificate = cover_certificate(&chosen, p, &ratio).expect("ratio is achieved");
    Ok(DualResult {
        chosen,
        chosen_idx: idx,
        achieved_ratio: ratio.clone(),
        optimal_ratio_guess: ratio,
        certificate,
        nominal_exponent: 1,
        honest_exponent: 1,
        beta_used: Rat::one(),
        cases: vec![CoverCase::Chain; n],
        centers: vec![],
    })
}

/// [`brute_force_dual_capped`] with a cap of `10^6` subsets.
pub fn brute_force_dual(p: &PointSet, k: usize) -> Result<DualResult> {
    brute_force_dual_capped(p, k, 1_000_000)
}

/// Grid `delta`-Pareto set from GAP, then [`dual_k_explicit`] on it. The
/// reported ratio is the ratio over the grid set times `1 + delta`, which
/// bounds the ratio over the whole instance.
pub fn dual_k_gap(g: &(impl GapOracle + ?Sized), k: usize, eps_grid: &Rat) -> Result<DualResult> {
    if k < 1 {
        return Err(Error::InvalidParameter("need k >= 1".into()));
    }
    let grid = gap_grid_pareto(g, eps_grid)?;
    let r = grid.result;
    if r.is_empty() {
        return Err(Error::InvalidParameter("instance has no solutions".into()));
    }
    let keep = pareto_indices(&r);
    let r = r.select(&keep);
    let mut res = dual_k_explicit(&r, k.min(r.len()), 2, 4)?;
    res.achieved_ratio = &res.achieved_ratio * (Rat::one() + eps_grid);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(&int(1)), int(1));
        assert_eq!(harmonic(&int(4)), rat(25, 12));
        assert_eq!(harmonic(&rat(5, 2)), rat(5, 3));
        assert_eq!(harmonic(&int(0)), int(0));
    }

    #[test]
    fn h_star_values() {
        assert_eq!(h_star(&rat(4, 3), &int(1)).unwrap(), 0);
        assert_eq!(h_star(&rat(4, 3), &int(4)).unwrap(), 3);
        // 2 <= 2 already holds before any iteration
        assert_eq!(h_star(&int(2), &int(2)).unwrap(), 0);
        assert_eq!(h_star(&int(2), &int(3)).unwrap(), 1);
        assert_eq!(exponent_for(2, &int(4)), 9);
    }

    #[test]
    fn ccv_examples() {
        let one = PointSet::from_ints(&[&[1, 1]]);
        assert_eq!(find_ccv(&one, &int(1)), Some(Point::ints(&[1, 1])));
        let anti = PointSet::from_ints(&[&[1, 3], &[3, 1]]);
        assert_eq!(find_ccv(&anti, &int(1)), Some(Point::ints(&[1, 3])));
    }

    #[test]
    fn dual_trivial() {
        let p = PointSet::from_ints(&[&[1, 1], &[2, 2]]);
        let r = dual_k_explicit(&p, 1, 2, 4).unwrap();
        assert_eq!(r.chosen, PointSet::from_ints(&[&[1, 1]]));
        assert_eq!(r.achieved_ratio, int(1));
        let b = brute_force_dual(&PointSet::from_ints(&[&[1, 2], &[2, 1]]), 1).unwrap();
        assert_eq!(b.achieved_ratio, int(2));
        assert!(dual_k_explicit(&p, 3, 2, 4).is_err());
    }

    #[test]
    fn rec_cover_skip() {
        let p = PointSet::from_ints(&[&[1, 3], &[3, 1]]);
        let s = rec_cover(&p, &p, &p, &int(1), 2).unwrap();
        assert_eq!(s, p);
    }
}
