//! Exhaustive baselines for small instances.

use crate::error::{Error, Result};
use crate::point::{is_eps_pareto, pareto_filter, PointSet};
use crate::rational::Rat;

/// Default subset-enumeration cap, raised by `PARETO_GUARD_MAX`.
pub fn guard_max() -> u64 {
    std::env::var("PARETO_GUARD_MAX")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1 << 20)
}

/// Indices of a smallest subset of `p` that `(1 + eps)`-covers `p`.
/// Only undominated points are candidates; `cap` bounds the subsets tried.
pub fn min_eps_pareto(p: &PointSet, eps: &Rat, cap: u64) -> Result<PointSet> {
    let front = pareto_filter(p);
    let n = front.len();
    let mut tried: u64 = 0;
    for k in 0..=n {
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            tried += 1;
            if tried > cap {
                return Err(Error::GuardExceeded {
                    what: "eps-Pareto subsets".into(),
                    cap,
                });
            }
            let q = front.select(&cur);
            if is_eps_pareto(&q, &front, eps).is_some() {
                return Ok(q);
            }
            let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
                break;
            };
            cur[i] += 1;
            for j in i + 1..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }
    unreachable!("the front covers itself")
}

/// Size of a smallest `eps`-Pareto set.
pub fn opt_eps(p: &PointSet, eps: &Rat, cap: u64) -> Result<usize> {
    min_eps_pareto(p, eps, cap).map(|q| q.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn small_cases() {
        let p = PointSet::from_ints(&[&[1, 4], &[2, 2], &[4, 1], &[5, 5]]);
        assert_eq!(opt_eps(&p, &int(0), 100).unwrap(), 3);
        assert_eq!(opt_eps(&p, &rat(1, 2), 100).unwrap(), 3);
        assert_eq!(opt_eps(&p, &int(1), 100).unwrap(), 1);
        assert_eq!(
            opt_eps(&PointSet::from_ints(&[&[1, 4], &[4, 1]]), &int(3), 100).unwrap(),
            1
        );
        assert_eq!(opt_eps(&PointSet::empty(2), &rat(1, 2), 10).unwrap(), 0);
        assert!(opt_eps(&p, &int(0), 2).is_err());
    }
}
