//! Oracle interfaces over a hidden solution space, an explicit backend,
//! an adversarial backend, and the binary-search reductions between the
//! two restricted problems.
//!
//! Bi-objective oracles take the objective to minimize as an [`Axis`]; the
//! other objective carries the bound. `restrict(Axis::Y, delta, c, false)`
//! therefore answers "minimize y subject to x <= c, within 1 + delta".

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use num_traits::{One, Zero};

use crate::point::{bit_width, Point, PointSet};
use crate::rational::{pow2, Rat};

/// One of the two objectives of a bi-objective instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }

    pub fn of(self, p: &Point) -> &Rat {
        &p.coords[self.index()]
    }
}

/// Opaque handle to the solution behind a returned point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Index into an explicit point list.
    Index(usize),
    /// Edge indices of a path.
    Path(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub point: Point,
    pub witness: Witness,
}

/// A solution, or a proof-free claim that none meets the request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Found(Solution),
    No,
}

impl Answer {
    pub fn point(&self) -> Option<&Point> {
        match self {
            Answer::Found(s) => Some(&s.point),
            Answer::No => None,
        }
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Answer::No)
    }
}

/// `restrict(t, delta, c, strict)` returns `s` with `other(s) <= c` (`< c`
/// when strict) and `t(s) <= (1 + delta) * min { t(s') : other(s') <= c }`.
pub trait RestrictOracle {
    fn restrict(&self, target: Axis, delta: &Rat, bound: &Rat, strict: bool) -> Answer;
    /// `m` such that every objective value lies in `[2^-m, 2^m]` and has
    /// numerator and denominator below `2^m`.
    fn value_bits(&self) -> u64;
    /// Whether `delta = 0` requests are answered exactly.
    fn exact_capable(&self) -> bool {
        false
    }
}

/// `dual_restrict(t, delta, d)` returns `s` with `other(s) <= (1 + delta) * d`
/// and `t(s) <= min { t(s') : other(s') <= d }`.
pub trait DualRestrictOracle {
    fn dual_restrict(&self, target: Axis, delta: &Rat, bound: &Rat) -> Answer;
    fn value_bits(&self) -> u64;
    fn exact_capable(&self) -> bool {
        false
    }
}

/// `gap(b, delta)` returns a solution dominating `b`, or `No` only when no
/// solution is at most `b / (1 + delta)` in every coordinate.
pub trait GapOracle {
    fn gap(&self, b: &Point, delta: &Rat) -> Answer;
    fn value_bits(&self) -> u64;
    fn dim(&self) -> usize;
}

/// Per-kind call tallies; safe to bump from several threads.
#[derive(Debug, Default)]
pub struct CallCounter {
    restrict: AtomicU64,
    dual: AtomicU64,
    gap: AtomicU64,
}

/// A snapshot of a [`CallCounter`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CallCounts {
    pub restrict: u64,
    pub dual_restrict: u64,
    pub gap: u64,
}

impl CallCounts {
    pub fn total(&self) -> u64 {
        self.restrict + self.dual_restrict + self.gap
    }
}

impl CallCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn snapshot(&self) -> CallCounts {
        CallCounts {
            restrict: self.restrict.load(Ordering::Relaxed),
            dual_restrict: self.dual.load(Ordering::Relaxed),
            gap: self.gap.load(Ordering::Relaxed),
        }
    }
}

/// Forwards to `inner` and counts every call.
pub struct Counted<'a, O: ?Sized> {
    pub inner: &'a O,
    pub counter: &'a CallCounter,
}

impl<'a, O: ?Sized> Counted<'a, O> {
    pub fn new(inner: &'a O, counter: &'a CallCounter) -> Self {
        Counted { inner, counter }
    }
}

impl<O: RestrictOracle + ?Sized> RestrictOracle for Counted<'_, O> {
    fn restrict(&self, target: Axis, delta: &Rat, bound: &Rat, strict: bool) -> Answer {
        self.counter.restrict.fetch_add(1, Ordering::Relaxed);
        self.inner.restrict(target, delta, bound, strict)
    }
    fn value_bits(&self) -> u64 {
        self.inner.value_bits()
    }
    fn exact_capable(&self) -> bool {
        self.inner.exact_capable()
    }
}

impl<O: DualRestrictOracle + ?Sized> DualRestrictOracle for Counted<'_, O> {
    fn dual_restrict(&self, target: Axis, delta: &Rat, bound: &Rat) -> Answer {
        self.counter.dual.fetch_add(1, Ordering::Relaxed);
        self.inner.dual_restrict(target, delta, bound)
    }
    fn value_bits(&self) -> u64 {
        self.inner.value_bits()
    }
    fn exact_capable(&self) -> bool {
        self.inner.exact_capable()
    }
}

impl<O: GapOracle + ?Sized> GapOracle for Counted<'_, O> {
    fn gap(&self, b: &Point, delta: &Rat) -> Answer {
        self.counter.gap.fetch_add(1, Ordering::Relaxed);
        self.inner.gap(b, delta)
    }
    fn value_bits(&self) -> u64 {
        self.inner.value_bits()
    }
    fn dim(&self) -> usize {
        self.inner.dim()
    }
}

fn within(v: &Rat, bound: &Rat, strict: bool) -> bool {
    if strict {
        v < bound
    } else {
        v <= bound
    }
}

/// Exact oracle over an explicit point list.
///
/// Restricted queries return the exact minimizer, ties broken by the lower
/// bounded coordinate and then by index. Because the exact answer is legal
/// for both restricted contracts, `dual_restrict` shares the same scan.
#[derive(Clone, Debug)]
pub struct ExplicitOracle {
    points: PointSet,
    bits: u64,
}

impl ExplicitOracle {
    pub fn new(points: PointSet) -> Self {
        let bits = bit_width(&points);
        ExplicitOracle { points, bits }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    fn found(&self, i: usize) -> Answer {
        Answer::Found(Solution {
            point: self.points[i].clone(),
            witness: Witness::Index(i),
        })
    }

    fn argmin(&self, target: Axis, bound: &Rat, strict: bool) -> Option<usize> {
        let o = target.other();
        let mut best: Option<usize> = None;
        for (i, p) in self.points.iter().enumerate() {
            if !within(o.of(p), bound, strict) {
                continue;
            }
            best = match best {
                Some(b) => {
                    let q = &self.points[b];
                    if (target.of(p), o.of(p)) < (target.of(q), o.of(q)) {
                        Some(i)
                    } else {
                        Some(b)
                    }
                }
                None => Some(i),
            };
        }
        best
    }
}

/// The exact backend; one value implements all three oracle traits.
pub fn exact_oracle_from_points(p: PointSet) -> ExplicitOracle {
    ExplicitOracle::new(p)
}

impl RestrictOracle for ExplicitOracle {
    fn restrict(&self, target: Axis, _delta: &Rat, bound: &Rat, strict: bool) -> Answer {
        self.argmin(target, bound, strict)
            .map_or(Answer::No, |i| self.found(i))
    }
    fn value_bits(&self) -> u64 {
        self.bits
    }
    fn exact_capable(&self) -> bool {
        true
    }
}

impl DualRestrictOracle for ExplicitOracle {
    fn dual_restrict(&self, target: Axis, _delta: &Rat, bound: &Rat) -> Answer {
        self.argmin(target, bound, false)
            .map_or(Answer::No, |i| self.found(i))
    }
    fn value_bits(&self) -> u64 {
        self.bits
    }
    fn exact_capable(&self) -> bool {
        true
    }
}

impl GapOracle for ExplicitOracle {
    fn gap(&self, b: &Point, _delta: &Rat) -> Answer {
        self.points
            .iter()
            .position(|p| p.dominates(b))
            .map_or(Answer::No, |i| self.found(i))
    }
    fn value_bits(&self) -> u64 {
        self.bits
    }
    fn dim(&self) -> usize {
        self.points.dim
    }
}

/// How an [`AdversarialOracle`] picks among legal answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdversaryPolicy {
    /// Largest target value, then largest bounded value.
    WorstTarget,
    /// Largest bounded value, then largest target value.
    WorstBound,
    /// The n-th call with positive slack answers `script[n]` when legal;
    /// illegal or missing entries fall back to `WorstTarget`.
    Scripted(Vec<usize>),
}

/// Answers every request with a legal but deliberately poor solution.
///
/// The slack used is `min(requested delta, cap)`; with zero slack the
/// oracle behaves exactly like [`ExplicitOracle`].
#[derive(Debug)]
pub struct AdversarialOracle {
    exact: ExplicitOracle,
    cap: Rat,
    policy: AdversaryPolicy,
    cursor: AtomicUsize,
    violations: AtomicUsize,
}

/// Wraps `p` behind an adversary that exploits at most `delta` slack.
pub fn adversarial_wrapper(p: PointSet, delta: Rat, policy: AdversaryPolicy) -> AdversarialOracle {
    AdversarialOracle {
        exact: ExplicitOracle::new(p),
        cap: delta,
        policy,
        cursor: AtomicUsize::new(0),
        violations: AtomicUsize::new(0),
    }
}

impl AdversarialOracle {
    /// Number of scripted entries that were illegal when requested.
    pub fn script_violations(&self) -> usize {
        self.violations.load(Ordering::Relaxed)
    }

    fn slack(&self, delta: &Rat) -> Rat {
        if delta < &self.cap {
            delta.clone()
        } else {
            self.cap.clone()
        }
    }

    fn pick(&self, target: Axis, legal: &[usize]) -> Answer {
        if legal.is_empty() {
            return Answer::No;
        }
        let pts = &self.exact.points;
        let o = target.other();
        let worst_by = |primary: Axis| {
            let sec = primary.other();
            *legal
                .iter()
                .max_by(|&&a, &&b| {
                    (primary.of(&pts[a]), sec.of(&pts[a]), std::cmp::Reverse(a)).cmp(&(
                        primary.of(&pts[b]),
                        sec.of(&pts[b]),
                        std::cmp::Reverse(b),
                    ))
                })
                .unwrap()
        };
        let i = match &self.policy {
            AdversaryPolicy::WorstTarget => worst_by(target),
            AdversaryPolicy::WorstBound => worst_by(o),
            AdversaryPolicy::Scripted(script) => {
                let n = self.cursor.fetch_add(1, Ordering::Relaxed);
                match script.get(n) {
                    Some(&s) if legal.contains(&s) => s,
                    Some(_) => {
                        self.violations.fetch_add(1, Ordering::Relaxed);
                        worst_by(target)
                    }
                    None => worst_by(target),
                }
            }
        };
        self.exact.found(i)
    }
}

impl RestrictOracle for AdversarialOracle {
    fn restrict(&self, target: Axis, delta: &Rat, bound: &Rat, strict: bool) -> Answer {
        let slack = self.slack(delta);
        if slack.is_zero() {
            return self.exact.restrict(target, delta, bound, strict);
        }
        let Some(best) = self.exact.argmin(target, bound, strict) else {
            return Answer::No;
        };
        let pts = &self.exact.points;
        let limit = (Rat::one() + &slack) * target.of(&pts[best]);
        let o = target.other();
        let legal: Vec<usize> = (0..pts.len())
            .filter(|&i| within(o.of(&pts[i]), bound, strict) && *target.of(&pts[i]) <= limit)
            .collect();
        self.pick(target, &legal)
    }
    fn value_bits(&self) -> u64 {
        self.exact.bits
    }
    fn exact_capable(&self) -> bool {
        true
    }
}

impl DualRestrictOracle for AdversarialOracle {
    fn dual_restrict(&self, target: Axis, delta: &Rat, bound: &Rat) -> Answer {
        let slack = self.slack(delta);
        if slack.is_zero() {
            return self.exact.dual_restrict(target, delta, bound);
        }
        let Some(best) = self.exact.argmin(target, bound, false) else {
            return Answer::No;
        };
        let pts = &self.exact.points;
        let tmin = target.of(&pts[best]).clone();
        let relaxed = (Rat::one() + &slack) * bound;
        let o = target.other();
        let legal: Vec<usize> = (0..pts.len())
            .filter(|&i| *o.of(&pts[i]) <= relaxed && *target.of(&pts[i]) <= tmin)
            .collect();
        self.pick(target, &legal)
    }
    fn value_bits(&self) -> u64 {
        self.exact.bits
    }
    fn exact_capable(&self) -> bool {
        true
    }
}

// Smallest k in (lo, hi] with good(k), given good(hi) and not good(lo).
fn bisect(
    mut lo: num_bigint::BigInt,
    mut hi: num_bigint::BigInt,
    mut best: Solution,
    mut good: impl FnMut(&num_bigint::BigInt) -> Option<Solution>,
) -> Solution {
    while &hi - &lo > num_bigint::BigInt::one() {
        let mid: num_bigint::BigInt = (&lo + &hi) >> 1;
        match good(&mid) {
            Some(s) => {
                hi = mid;
                best = s;
            }
            None => lo = mid,
        }
    }
    best
}

fn grid_value(k: &num_bigint::BigInt, e: u64) -> Rat {
    Rat::new(k.clone(), num_bigint::BigInt::one() << e)
}

/// Dual restricted answer built from restricted calls by binary search on
/// the bound of `target`, over multiples of `2^-2m` in `[2^-m, 2^m]`.
pub fn dual_restrict_via_restrict(
    oracle: &(impl RestrictOracle + ?Sized),
    target: Axis,
    bound: &Rat,
    delta: &Rat,
) -> Answer {
    let m = oracle.value_bits();
    let o = target.other();
    let relaxed = (Rat::one() + delta) * bound;
    let probe = |c: &Rat| match oracle.restrict(o, delta, c, false) {
        Answer::Found(s) if *o.of(&s.point) <= relaxed => Some(s),
        _ => None,
    };
    let Some(top) = probe(&pow2(m as i64)) else {
        return Answer::No;
    };
    let e = 2 * m;
    let lo = (num_bigint::BigInt::one() << m) - 1u32;
    let hi = num_bigint::BigInt::one() << (3 * m);
    Answer::Found(bisect(lo, hi, top, |k| probe(&grid_value(k, e))))
}

/// Restricted answer built from dual restricted calls by binary search on
/// the bound of `target`. Positive `delta` is split: half goes to the dual
/// calls, half absorbs the grid step.
pub fn restrict_via_dual_restrict(
    oracle: &(impl DualRestrictOracle + ?Sized),
    target: Axis,
    bound: &Rat,
    delta: &Rat,
    strict: bool,
) -> Answer {
    let m = oracle.value_bits();
    let o = target.other();
    let (inner_delta, e) = if delta.is_zero() {
        (Rat::zero(), 2 * m)
    } else {
        let two = Rat::from_integer(2.into());
        let need = (&two + delta) / delta;
        let mut t = 0u64;
        while pow2(t as i64) < need {
            t += 1;
        }
        (delta / two, m + t.max(m))
    };
    let probe = |d: &Rat| match oracle.dual_restrict(o, &inner_delta, d) {
        Answer::Found(s) if within(o.of(&s.point), bound, strict) => Some(s),
        _ => None,
    };
    let Some(top) = probe(&pow2(m as i64)) else {
        return Answer::No;
    };
    let lo = (num_bigint::BigInt::one() << (e - m)) - 1u32;
    let hi = num_bigint::BigInt::one() << (e + m);
    Answer::Found(bisect(lo, hi, top, |k| probe(&grid_value(k, e))))
}

/// A dual restricted oracle realized on top of a restricted one.
pub struct DualViaRestrict<'a, O: ?Sized>(pub &'a O);

impl<O: RestrictOracle + ?Sized> DualRestrictOracle for DualViaRestrict<'_, O> {
    fn dual_restrict(&self, target: Axis, delta: &Rat, bound: &Rat) -> Answer {
        dual_restrict_via_restrict(self.0, target, bound, delta)
    }
    fn value_bits(&self) -> u64 {
        self.0.value_bits()
    }
    fn exact_capable(&self) -> bool {
        self.0.exact_capable()
    }
}

/// A restricted oracle realized on top of a dual restricted one.
pub struct RestrictViaDual<'a, O: ?Sized>(pub &'a O);

impl<O: DualRestrictOracle + ?Sized> RestrictOracle for RestrictViaDual<'_, O> {
    fn restrict(&self, target: Axis, delta: &Rat, bound: &Rat, strict: bool) -> Answer {
        restrict_via_dual_restrict(self.0, target, bound, delta, strict)
    }
    fn value_bits(&self) -> u64 {
        self.0.value_bits()
    }
    fn exact_capable(&self) -> bool {
        self.0.exact_capable()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn three() -> ExplicitOracle {
        exact_oracle_from_points(PointSet::from_ints(&[&[1, 4], &[2, 3], &[3, 1]]))
    }

    #[test]
    fn explicit_restrict() {
        let o = exact_oracle_from_points(PointSet::from_ints(&[&[1, 2], &[2, 1]]));
        let a = o.restrict(Axis::Y, &int(0), &int(1), false);
        assert_eq!(a.point(), Some(&Point::ints(&[1, 2])));
        assert!(o.restrict(Axis::Y, &int(0), &int(1), true).is_no());
    }

    #[test]
    fn explicit_gap() {
        let o = exact_oracle_from_points(PointSet::from_ints(&[&[1, 2], &[2, 1]]));
        assert!(o.gap(&Point::ints(&[1, 1]), &int(1)).is_no());
        assert!(o.gap(&Point::ints(&[2, 2]), &int(1)).point().is_some());
    }

    #[test]
    fn dual_via_restrict_examples() {
        let o = three();
        let a = dual_restrict_via_restrict(&o, Axis::X, &int(3), &int(0));
        assert_eq!(a.point(), Some(&Point::ints(&[2, 3])));
        assert!(dual_restrict_via_restrict(&o, Axis::X, &rat(1, 2), &int(0)).is_no());
        let one = exact_oracle_from_points(PointSet::from_ints(&[&[1, 1]]));
        let a = dual_restrict_via_restrict(&one, Axis::X, &int(1), &int(0));
        assert_eq!(a.point(), Some(&Point::ints(&[1, 1])));
    }

    #[test]
    fn restrict_via_dual_examples() {
        let o = three();
        let a = restrict_via_dual_restrict(&o, Axis::Y, &int(2), &int(0), false);
        assert_eq!(a.point(), Some(&Point::ints(&[2, 3])));
        assert!(restrict_via_dual_restrict(&o, Axis::Y, &rat(1, 2), &int(0), false).is_no());
        let a = restrict_via_dual_restrict(&o, Axis::Y, &int(2), &int(0), true);
        assert_eq!(a.point(), Some(&Point::ints(&[1, 4])));
    }

    #[test]
    fn adversary_zero_slack_is_exact() {
        let p = PointSet::from_ints(&[&[1, 4], &[2, 3], &[3, 1], &[3, 2]]);
        let adv = adversarial_wrapper(p.clone(), int(0), AdversaryPolicy::WorstTarget);
        let ex = exact_oracle_from_points(p);
        for c in 1..5 {
            for t in [Axis::X, Axis::Y] {
                assert_eq!(
                    adv.restrict(t, &int(1), &int(c), false),
                    ex.restrict(t, &int(1), &int(c), false)
                );
            }
        }
    }

    #[test]
    fn adversary_uses_slack() {
        let p = PointSet::from_ints(&[&[10, 5], &[11, 4], &[20, 1]]);
        let adv = adversarial_wrapper(p, rat(1, 5), AdversaryPolicy::WorstTarget);
        let a = adv.restrict(Axis::X, &rat(1, 5), &int(5), false);
        assert_eq!(a.point(), Some(&Point::ints(&[11, 4])));
    }

    #[test]
    fn counting() {
        let o = three();
        let c = CallCounter::new();
        let w = Counted::new(&o, &c);
        let _ = dual_restrict_via_restrict(&w, Axis::X, &int(3), &int(0));
        let n = c.snapshot();
        assert!(n.restrict >= 1 && n.dual_restrict == 0);
    }
}
