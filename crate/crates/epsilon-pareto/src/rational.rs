//! Exact rational helpers on top of `BigRational`.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rat = BigRational;

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rat {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

/// Integer power with a nonnegative exponent.
pub fn powi(x: &Rat, e: u32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

/// Number of bits of `|n|`; zero needs one bit.
pub fn int_bits(n: &BigInt) -> u64 {
    n.bits().max(1)
}

/// Max of the numerator and denominator bit counts.
pub fn rat_bits(x: &Rat) -> u64 {
    int_bits(x.numer()).max(int_bits(x.denom()))
}

/// Parses `a` or `a/b` (decimal digits, optional leading `-`).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(n) || !ok(d) || d.starts_with('-') {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Renders `a/b`, or `a` when the denominator is one.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion for human-readable summaries only.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn perfect_root(n: &BigUint, k: u32) -> Option<BigUint> {
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Largest `a / 2^prec` whose `k`-th power is at most `x`, or the exact
/// root when `x` is a perfect `k`-th power of a rational. `x` must be
/// nonnegative.
pub fn root_floor(x: &Rat, k: u32, prec: u64) -> Rat {
    assert!(!x.is_negative() && k >= 1);
    let (num, den) = (x.numer().magnitude(), x.denom().magnitude());
    if let (Some(a), Some(b)) = (perfect_root(num, k), perfect_root(den, k)) {
        return Rat::new(
            BigInt::from_biguint(Sign::Plus, a),
            BigInt::from_biguint(Sign::Plus, b),
        );
    }
    let scaled = (num << (prec * k as u64)) / den;
    let a = scaled.nth_root(k);
    Rat::new(BigInt::from_biguint(Sign::Plus, a), BigInt::one() << prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rat("7"), Some(int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1.5"), None);
        assert_eq!(parse_rat(""), None);
        assert_eq!(fmt_rat(&rat(6, 4)), "3/2");
        assert_eq!(fmt_rat(&int(5)), "5");
    }

    #[test]
    fn roots() {
        assert_eq!(root_floor(&rat(1331, 1000), 3, 10), rat(11, 10));
        assert_eq!(root_floor(&int(8), 3, 10), int(2));
        let r = root_floor(&int(2), 2, 8);
        assert!(&r * &r <= int(2));
        let up = &r + pow2(-8);
        assert!(&up * &up > int(2));
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), rat(1, 4));
        assert_eq!(rat_bits(&rat(3, 2)), 2);
        assert_eq!(rat_bits(&int(1024)), 11);
    }
}
