//! Bi-objective engines: the 2-approximation, the exact greedy, the
//! delta-tolerant greedy, and the safe redundancy prune.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::{
    Answer, Axis, CallCounter, CallCounts, Counted, DualRestrictOracle, RestrictOracle, Solution,
    Witness,
};
use crate::point::{is_eps_pareto, CoverCertificate, Point, PointSet};
use crate::rational::{pow2, powi, rat_bits, root_floor, Rat};

/// Running variables of the 2-approximation, kept for auditing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineState {
    /// Selected points `q_1, q_2, ...`.
    pub q_list: Vec<Point>,
    /// Probe points `q'_1, q'_2, ...`.
    pub q_prime_list: Vec<Point>,
    /// `y_bar_i` for every selected point.
    pub y_bars: Vec<Rat>,
    pub x_bar: Rat,
    pub y_bar: Rat,
    pub x_min: Rat,
    pub delta: Rat,
    pub eps: Rat,
}

/// Result of an engine run.
#[derive(Clone, Debug)]
pub struct EngineReport {
    pub result: PointSet,
    pub witnesses: Vec<Witness>,
    /// Filled by [`EngineReport::certify`] against a reference set.
    pub certificate: Option<CoverCertificate>,
    pub oracle_calls: CallCounts,
    pub iterations: usize,
    /// True when the instance had no feasible solution.
    pub empty_instance: bool,
    pub state: EngineState,
}

impl EngineReport {
    fn new(state: EngineState) -> Self {
        EngineReport {
            result: PointSet::empty(2),
            witnesses: Vec::new(),
            certificate: None,
            oracle_calls: CallCounts::default(),
            iterations: 0,
            empty_instance: false,
            state,
        }
    }

    fn push(&mut self, s: Solution) {
        self.result.points.push(s.point);
        self.witnesses.push(s.witness);
    }

    /// Certifies the result as an eps-Pareto set of `reference`.
    pub fn certify(&mut self, reference: &PointSet) -> bool {
        self.certificate = is_eps_pareto(&self.result, reference, &self.state.eps);
        self.certificate.is_some()
    }

    pub fn len(&self) -> usize {
        self.result.len()
    }

    pub fn is_empty(&self) -> bool {
        self.result.is_empty()
    }
}

fn sol(a: Answer) -> Option<Solution> {
    match a {
        Answer::Found(s) => Some(s),
        Answer::No => None,
    }
}

fn max(a: Rat, b: Rat) -> Rat {
    if a >= b {
        a
    } else {
        b
    }
}

fn positive(eps: &Rat) -> Result<()> {
    if *eps <= Rat::zero() {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    Ok(())
}

fn root_delta(eps: &Rat, k: u32) -> Result<Rat> {
    positive(eps)?;
    let base = Rat::one() + eps;
    let mut prec = 2 * (rat_bits(eps) + 2);
    loop {
        let d = root_floor(&base, k, prec) - Rat::one();
        if d > Rat::zero() {
            return Ok(d);
        }
        prec *= 2;
    }
}

/// Rational `delta > 0` with `(1 + delta)^3 <= 1 + eps`; exact when the cube
/// root is rational.
pub fn delta_from_eps(eps: &Rat) -> Result<Rat> {
    root_delta(eps, 3)
}

/// Rational `delta > 0` with `(1 + delta)^2 <= 1 + eps`.
pub fn sqrt_delta_from_eps(eps: &Rat) -> Result<Rat> {
    root_delta(eps, 2)
}

/// The 2-approximation. Returns an eps-Pareto set of size at most twice the
/// optimum, using `2 |Q| + 2` oracle calls.
pub fn two_approx(
    r: &(impl RestrictOracle + ?Sized),
    dr: &(impl DualRestrictOracle + ?Sized),
    eps: &Rat,
) -> Result<EngineReport> {
    let delta = delta_from_eps(eps)?;
    let counter = CallCounter::new();
    let (r, dr) = (Counted::new(r, &counter), Counted::new(dr, &counter));
    let one = Rat::one();
    let top = pow2(r.value_bits() as i64);
    let (e1, d1) = (&one + eps, &one + &delta);
    let mut st = EngineState {
        delta: delta.clone(),
        eps: eps.clone(),
        ..Default::default()
    };
    let mut rep = EngineReport::new(EngineState::default());

    let run = |st: &mut EngineState, rep: &mut EngineReport| -> Option<()> {
        if r.restrict(Axis::Y, &one, &top, false).is_no() {
            rep.empty_instance = true;
            return None;
        }
        let q1p = sol(r.restrict(Axis::Y, &delta, &top, false))?;
        st.x_min = sol(dr.dual_restrict(Axis::X, &one, &top))?
            .point
            .x()
            .clone();
        st.y_bar = q1p.point.y() * &d1;
        let q1 = sol(dr.dual_restrict(Axis::X, &delta, &st.y_bar))?;
        st.x_bar = q1.point.x() / &e1;
        st.q_prime_list.push(q1p.point);
        st.q_list.push(q1.point.clone());
        st.y_bars.push(st.y_bar.clone());
        rep.push(q1);
        while st.x_bar > st.x_min {
            let qp = sol(r.restrict(Axis::Y, &delta, &st.x_bar, true))?;
            st.y_bar = &e1 / &d1 * max(st.y_bar.clone(), qp.point.y() / &d1);
            let q = sol(dr.dual_restrict(Axis::X, &delta, &st.y_bar))?;
            st.x_bar = q.point.x() / &e1;
            st.q_prime_list.push(qp.point);
            st.q_list.push(q.point.clone());
            st.y_bars.push(st.y_bar.clone());
            rep.push(q);
            rep.iterations += 1;
        }
        Some(())
    };
    run(&mut st, &mut rep);
    rep.state = st;
    rep.oracle_calls = counter.snapshot();
    Ok(rep)
}

/// Variant using a restricted oracle for each objective and the smaller
/// tolerance `sqrt(1 + eps) - 1`. Stops when no solution lies left of the
/// current threshold.
pub fn two_approx_two_sided(r: &(impl RestrictOracle + ?Sized), eps: &Rat) -> Result<EngineReport> {
    let delta = sqrt_delta_from_eps(eps)?;
    let counter = CallCounter::new();
    let r = Counted::new(r, &counter);
    let one = Rat::one();
    let top = pow2(r.value_bits() as i64);
    let (e1, d1) = (&one + eps, &one + &delta);
    let mut st = EngineState {
        delta: delta.clone(),
        eps: eps.clone(),
        ..Default::default()
    };
    let mut rep = EngineReport::new(EngineState::default());

    let run = |st: &mut EngineState, rep: &mut EngineReport| -> Option<()> {
        if r.restrict(Axis::Y, &one, &top, false).is_no() {
            rep.empty_instance = true;
            return None;
        }
        let q1p = sol(r.restrict(Axis::Y, &delta, &top, false))?;
        st.y_bar = q1p.point.y() * &e1 / &d1;
        let q1 = sol(r.restrict(Axis::X, &delta, &st.y_bar, false))?;
        st.x_bar = q1.point.x() / &e1;
        st.q_prime_list.push(q1p.point);
        st.q_list.push(q1.point.clone());
        st.y_bars.push(st.y_bar.clone());
        rep.push(q1);
        while let Some(qp) = sol(r.restrict(Axis::Y, &delta, &st.x_bar, true)) {
            st.y_bar = &e1 * max(st.y_bar.clone(), qp.point.y() / &d1);
            let q = sol(r.restrict(Axis::X, &delta, &st.y_bar, false))?;
            st.x_bar = q.point.x() / &e1;
            st.q_prime_list.push(qp.point);
            st.q_list.push(q.point.clone());
            st.y_bars.push(st.y_bar.clone());
            rep.push(q);
            rep.iterations += 1;
        }
        Some(())
    };
    run(&mut st, &mut rep);
    st.x_min = rep
        .result
        .points
        .last()
        .map_or_else(Rat::zero, |q| q.x().clone());
    rep.state = st;
    rep.oracle_calls = counter.snapshot();
    Ok(rep)
}

/// Minimum-cardinality eps-Pareto set from exact oracles.
pub fn greedy_exact(
    r: &(impl RestrictOracle + ?Sized),
    dr: &(impl DualRestrictOracle + ?Sized),
    eps: &Rat,
) -> Result<EngineReport> {
    positive(eps)?;
    if !r.exact_capable() || !dr.exact_capable() {
        return Err(Error::InexactBackend);
    }
    let counter = CallCounter::new();
    let (r, dr) = (Counted::new(r, &counter), Counted::new(dr, &counter));
    let zero = Rat::zero();
    let top = pow2(r.value_bits() as i64);
    let e1 = Rat::one() + eps;
    let mut st = EngineState {
        delta: zero.clone(),
        eps: eps.clone(),
        ..Default::default()
    };
    let mut rep = EngineReport::new(EngineState::default());

    let mut probe = r.restrict(Axis::Y, &zero, &top, false);
    if probe.is_no() {
        rep.empty_instance = true;
    }
    while let Some(qp) = sol(probe) {
        st.y_bar = qp.point.y() * &e1;
        let Some(q) = sol(dr.dual_restrict(Axis::X, &zero, &st.y_bar)) else {
            break;
        };
        st.x_bar = q.point.x() / &e1;
        st.q_prime_list.push(qp.point);
        st.q_list.push(q.point.clone());
        st.y_bars.push(st.y_bar.clone());
        rep.push(q);
        rep.iterations += 1;
        probe = r.restrict(Axis::Y, &zero, &st.x_bar, true);
    }
    st.x_min = rep
        .result
        .points
        .last()
        .map_or_else(Rat::zero, |q| q.x().clone());
    rep.state = st;
    rep.oracle_calls = counter.snapshot();
    Ok(rep)
}

/// The delta-tolerant greedy (`0 < delta < eps`). Its size can reach
/// `3k - 1` against an adversarial oracle. The extreme values are obtained
/// with zero-tolerance requests.
pub fn greedy_approx(
    r: &(impl RestrictOracle + ?Sized),
    eps: &Rat,
    delta: &Rat,
) -> Result<EngineReport> {
    positive(delta)?;
    if delta >= eps {
        return Err(Error::InvalidParameter("greedy needs delta < eps".into()));
    }
    let counter = CallCounter::new();
    let r = Counted::new(r, &counter);
    let zero = Rat::zero();
    let top = pow2(r.value_bits() as i64);
    let (e1, d1) = (Rat::one() + eps, Rat::one() + delta);
    let mut st = EngineState {
        delta: delta.clone(),
        eps: eps.clone(),
        ..Default::default()
    };
    let mut rep = EngineReport::new(EngineState::default());

    let run = |st: &mut EngineState, rep: &mut EngineReport| -> Option<()> {
        let Some(lowest) = sol(r.restrict(Axis::Y, &zero, &top, false)) else {
            rep.empty_instance = true;
            return None;
        };
        st.x_min = sol(r.restrict(Axis::X, &zero, &top, false))?
            .point
            .x()
            .clone();
        st.y_bar = lowest.point.y() * &e1;
        let mut q = sol(r.restrict(Axis::X, delta, &st.y_bar, false))?;
        st.q_prime_list.push(lowest.point);
        loop {
            st.x_bar = q.point.x() / &e1;
            st.q_list.push(q.point.clone());
            st.y_bars.push(st.y_bar.clone());
            rep.push(q);
            if st.x_min >= st.x_bar {
                return Some(());
            }
            let qp = sol(r.restrict(Axis::Y, delta, &st.x_bar, true))?;
            st.y_bar = &e1 * max(st.y_bar.clone(), qp.point.y() / &d1);
            q = sol(r.restrict(Axis::X, delta, &st.y_bar, false))?;
            st.q_prime_list.push(qp.point);
            rep.iterations += 1;
        }
    };
    run(&mut st, &mut rep);
    rep.state = st;
    rep.oracle_calls = counter.snapshot();
    Ok(rep)
}

/// Drops `q_{2i-1}` whenever `y(q_{2i}) <= (1 + delta) y_bar_{2i-1}`
/// (1-based). Re-certifies against `reference` when given.
pub fn prune_redundant(report: &EngineReport, reference: Option<&PointSet>) -> EngineReport {
    let st = &report.state;
    let d1 = Rat::one() + &st.delta;
    let n = report.result.len().min(st.y_bars.len());
    let mut keep = vec![true; report.result.len()];
    for j in (1..n).step_by(2) {
        if *report.result[j].y() <= &d1 * &st.y_bars[j - 1] {
            keep[j - 1] = false;
        }
    }
    let mut out = report.clone();
    out.result.points.clear();
    out.witnesses.clear();
    for (i, k) in keep.iter().enumerate() {
        if *k {
            out.result.points.push(report.result[i].clone());
            out.witnesses.push(report.witnesses[i].clone());
        }
    }
    out.certificate = None;
    if let Some(p) = reference {
        out.certify(p);
    }
    out
}

/// `(1 + delta)^k`, used by callers checking tolerance chains.
pub fn tolerance_power(delta: &Rat, k: u32) -> Rat {
    powi(&(Rat::one() + delta), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_oracle_from_points;
    use crate::rational::{int, rat};

    #[test]
    fn delta_examples() {
        assert_eq!(delta_from_eps(&rat(331, 1000)).unwrap(), rat(1, 10));
        assert_eq!(delta_from_eps(&int(7)).unwrap(), int(1));
        let d = delta_from_eps(&rat(1, 2)).unwrap();
        assert!(d > int(0) && tolerance_power(&d, 3) <= rat(3, 2));
        assert!(delta_from_eps(&int(0)).is_err());
    }

    #[test]
    fn two_points_both_needed() {
        let p = PointSet::from_ints(&[&[1, 2], &[2, 1]]);
        let o = exact_oracle_from_points(p.clone());
        let mut rep = two_approx(&o, &o, &rat(1, 10)).unwrap();
        assert_eq!(rep.len(), 2);
        assert!(rep.certify(&p));
    }

    #[test]
    fn singleton_and_empty() {
        let p = PointSet::from_ints(&[&[3, 5]]);
        let o = exact_oracle_from_points(p);
        assert_eq!(two_approx(&o, &o, &rat(1, 2)).unwrap().len(), 1);
        assert_eq!(greedy_exact(&o, &o, &rat(1, 2)).unwrap().len(), 1);
        assert_eq!(greedy_approx(&o, &rat(1, 2), &rat(1, 4)).unwrap().len(), 1);
        let e = exact_oracle_from_points(PointSet::empty(2));
        let rep = two_approx(&e, &e, &rat(1, 2)).unwrap();
        assert!(rep.empty_instance && rep.is_empty());
    }

    #[test]
    fn greedy_exact_merges() {
        let p = PointSet::from_ints(&[&[1, 2], &[2, 1]]);
        let o = exact_oracle_from_points(p.clone());
        let mut rep = greedy_exact(&o, &o, &int(1)).unwrap();
        assert_eq!(rep.len(), 1);
        assert!(rep.certify(&p));
    }

    #[test]
    fn prune_noop_and_empty() {
        let p = PointSet::from_ints(&[&[1, 2], &[2, 1]]);
        let o = exact_oracle_from_points(p.clone());
        let rep = two_approx(&o, &o, &rat(1, 10)).unwrap();
        let pr = prune_redundant(&rep, Some(&p));
        assert_eq!(pr.result, rep.result);
        let e = exact_oracle_from_points(PointSet::empty(2));
        let rep = two_approx(&e, &e, &rat(1, 2)).unwrap();
        assert!(prune_redundant(&rep, None).is_empty());
    }
}
