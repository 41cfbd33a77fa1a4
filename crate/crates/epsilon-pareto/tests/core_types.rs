mod common;

use epsilon_pareto::bsp::{enumerate_paths, path_points};
use epsilon_pareto::error::Error;
use epsilon_pareto::generators::{chain_instance, prop31_points, PartitionSpec};
use epsilon_pareto::io::{parse_points, write_points};
use epsilon_pareto::point::{
    additive_distance, bit_width, covers, dominates, is_eps_pareto, pareto_filter, ratio_distance,
    Point, PointSet,
};
use epsilon_pareto::rational::{int, pow2, rat, Rat};
use num_bigint::BigInt;
use proptest::prelude::*;

fn pt(v: &[i64]) -> Point {
    Point::ints(v)
}

#[test]
fn dominance_examples() {
    assert!(dominates(&pt(&[1, 1]), &pt(&[1, 1])).unwrap());
    assert!(!dominates(&pt(&[1, 2]), &pt(&[2, 1])).unwrap());
    assert!(dominates(&pt(&[1, 1]), &pt(&[2, 3])).unwrap());
    assert!(matches!(
        dominates(&pt(&[1, 1]), &pt(&[1, 1, 1])),
        Err(Error::DimensionMismatch(2, 3))
    ));
}

#[test]
fn cover_examples() {
    assert!(covers(&pt(&[1, 1]), &pt(&[1, 1]), &int(1)).unwrap());
    assert!(!covers(&pt(&[2, 1]), &pt(&[1, 1]), &rat(3, 2)).unwrap());
    assert!(matches!(
        covers(&pt(&[1, 1]), &pt(&[1, 1]), &rat(1, 2)),
        Err(Error::RatioBelowOne)
    ));
    let (eps, m) = (rat(1, 4), int(20));
    let e = Rat::from_integer(1.into()) + &eps;
    let p = Point::xy(m.clone(), m.clone());
    let q = Point::xy(
        &m * (Rat::from_integer(1.into()) + &eps * int(2)) / &e,
        &m / &e,
    );
    assert!(covers(&p, &q, &e).unwrap());
}

#[test]
fn pareto_filter_examples() {
    let p = PointSet::from_ints(&[&[1, 2], &[2, 1], &[2, 2]]);
    assert_eq!(pareto_filter(&p), PointSet::from_ints(&[&[1, 2], &[2, 1]]));
    let one = PointSet::from_ints(&[&[1, 1]]);
    assert_eq!(pareto_filter(&one), one);
    let dup = PointSet::from_ints(&[&[3, 1], &[1, 3], &[3, 1]]);
    assert_eq!(
        pareto_filter(&dup),
        PointSet::from_ints(&[&[3, 1], &[1, 3]])
    );
    let g = chain_instance(&PartitionSpec::new(vec![1, 2, 3], rat(1, 2), 1).unwrap());
    let pts = path_points(&enumerate_paths(&g, 100).unwrap());
    assert_eq!(pareto_filter(&pts).len(), 7);
    assert_eq!(pts.len(), 8);
}

#[test]
fn distance_examples() {
    assert_eq!(ratio_distance(&pt(&[3, 5]), &pt(&[3, 5])), int(1));
    assert_eq!(ratio_distance(&pt(&[2, 1]), &pt(&[1, 1])), int(2));
    assert_eq!(ratio_distance(&pt(&[1, 3]), &pt(&[2, 1])), int(3));
    assert_eq!(additive_distance(&pt(&[3, 5]), &pt(&[3, 5])), int(0));
    assert_eq!(additive_distance(&pt(&[3, 1]), &pt(&[1, 1])), int(2));
    assert_eq!(additive_distance(&pt(&[1, 1]), &pt(&[5, 5])), int(0));
}

#[test]
fn eps_pareto_examples() {
    let p = PointSet::new(vec![pt(&[1, 1]), Point::xy(rat(21, 20), rat(21, 20))]).unwrap();
    assert!(is_eps_pareto(&PointSet::from_ints(&[&[1, 1]]), &p, &rat(1, 10)).is_some());
    assert!(is_eps_pareto(&PointSet::empty(2), &p, &rat(1, 10)).is_none());
    let (pp, _) = prop31_points(&int(10), &rat(1, 2)).unwrap();
    // q and r alone cover the whole family
    let qr = pp.select(&[1, 2]);
    assert!(is_eps_pareto(&qr, &pp, &rat(1, 2)).is_some());
}

#[test]
fn bit_width_examples() {
    assert_eq!(bit_width(&PointSet::from_ints(&[&[1, 1]])), 1);
    assert_eq!(
        bit_width(&PointSet::new(vec![Point::xy(rat(3, 2), int(1))]).unwrap()),
        2
    );
    assert_eq!(
        bit_width(&PointSet::new(vec![Point::xy(pow2(10), int(1))]).unwrap()),
        11
    );
}

#[test]
fn point_validation() {
    assert!(Point::new(vec![int(1)]).is_err());
    assert!(Point::new(vec![int(1), int(0)]).is_err());
    assert!(PointSet::new(vec![pt(&[1, 1]), pt(&[1, 1, 1])]).is_err());
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    (1i64..200, 1i64..50).prop_map(|(n, d)| rat(n, d))
}

fn arb_point(d: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(arb_rat(), d).prop_map(|c| Point::new(c).unwrap())
}

fn arb_set(d: usize, max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(arb_point(d), 0..max).prop_map(|v| PointSet::new(v).unwrap())
}

proptest! {
    #[test]
    fn ratio_distance_is_tight(u in arb_point(3), v in arb_point(3)) {
        let r = ratio_distance(&u, &v);
        prop_assert!(u.covers(&v, &r));
        prop_assert_eq!(r.clone(), common::rd(&u.coords, &v.coords));
        let below = &r * rat(999_999, 1_000_000);
        if below >= int(1) {
            prop_assert!(!u.covers(&v, &below));
        }
    }

    #[test]
    fn dominance_is_cover_at_one(u in arb_point(2), v in arb_point(2)) {
        prop_assert_eq!(u.dominates(&v), u.covers(&v, &int(1)));
    }

    #[test]
    fn pareto_filter_idempotent(p in arb_set(3, 14)) {
        let f = pareto_filter(&p);
        prop_assert_eq!(pareto_filter(&f), f.clone());
        for (i, a) in f.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                prop_assert!(i == j || !a.dominates(b));
            }
        }
        let mut want = common::front(&common::raw(&p));
        let mut got = common::raw(&f);
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn log_transform(a in prop::collection::vec(-20i64..20, 3), b in prop::collection::vec(-20i64..20, 3)) {
        let p = Point::new(a.iter().map(|&e| pow2(e)).collect()).unwrap();
        let q = Point::new(b.iter().map(|&e| pow2(e)).collect()).unwrap();
        let pa = Point::new(a.iter().map(|&e| int(e + 100)).collect()).unwrap();
        let qa = Point::new(b.iter().map(|&e| int(e + 100)).collect()).unwrap();
        let ad = additive_distance(&pa, &qa);
        let e: i64 = ad.to_integer().try_into().unwrap();
        prop_assert_eq!(ratio_distance(&p, &q), pow2(e));
    }

    #[test]
    fn eps_pareto_matches_pairwise(p in arb_set(2, 10), q in arb_set(2, 5), e in 0i64..8) {
        let eps = rat(e, 4);
        let rho = int(1) + &eps;
        let brute = common::covers_all(&common::raw(&q), &common::front(&common::raw(&p)), &rho);
        let cert = is_eps_pareto(&q, &p, &eps);
        prop_assert_eq!(cert.is_some(), brute);
        if let Some(c) = cert {
            prop_assert!(c.verify(&q, &p));
        }
    }

    #[test]
    fn point_text_roundtrip(p in arb_set(3, 10)) {
        let back = parse_points(&write_points(&p)).unwrap();
        prop_assert_eq!(back.points, p.points);
    }
}

#[test]
fn big_values_roundtrip() {
    let big = Rat::new(BigInt::from(1u8) << 200, BigInt::from(3));
    let p = PointSet::new(vec![Point::xy(big, rat(7, 9))]).unwrap();
    assert_eq!(parse_points(&write_points(&p)).unwrap(), p);
}
