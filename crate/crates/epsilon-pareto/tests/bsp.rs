mod common;

use epsilon_pareto::bi_engine::{greedy_exact, two_approx};
use epsilon_pareto::bsp::{
    bsp_oracles, bsp_two_approx, bsp_two_approx_reduced, dual_restricted_fptas, enumerate_paths,
    pareto_paths, path_points, restricted_exact, restricted_fptas, rsp_exact, rsp_fptas, BiGraph,
    BspMode, Edge,
};
use epsilon_pareto::error::Error;
use epsilon_pareto::generators::{chain_instance, random_bigraph, PartitionSpec};
use epsilon_pareto::io::{parse_graph, write_graph};
use epsilon_pareto::oracle::{Axis, DualRestrictOracle, DualViaRestrict, RestrictOracle};
use epsilon_pareto::rational::{int, rat, Rat};
use num_traits::One;
use proptest::prelude::*;

fn edge(from: usize, to: usize, c: Rat, d: Rat) -> Edge {
    Edge {
        from,
        to,
        cost: c,
        delay: d,
    }
}

fn parallel() -> BiGraph {
    BiGraph::new(
        2,
        0,
        1,
        vec![edge(0, 1, int(1), int(5)), edge(0, 1, int(3), int(1))],
    )
    .unwrap()
}

fn chain(a: &[u64]) -> BiGraph {
    chain_instance(&PartitionSpec::new(a.to_vec(), rat(1, 2), 1).unwrap())
}

#[test]
fn rsp_exact_examples() {
    let g = parallel();
    assert_eq!(
        rsp_exact(&g, &int(2)).unwrap().point().coords,
        vec![int(1), int(5)]
    );
    assert_eq!(
        rsp_exact(&g, &int(3)).unwrap().point().coords,
        vec![int(3), int(1)]
    );
    assert!(rsp_exact(&g, &rat(1, 2)).is_none());
    let c = chain(&[1, 2, 3]);
    let w = rsp_exact(&c, &int(27)).unwrap();
    assert_eq!(
        (w.total_cost.clone(), w.total_delay.clone()),
        (int(27), int(27))
    );
    assert!(c.is_st_path(&w.edges));
}

#[test]
fn rsp_fptas_examples() {
    let g = parallel();
    assert_eq!(
        rsp_fptas(&g, &int(3), &rat(1, 100)).unwrap().point().coords,
        vec![int(3), int(1)]
    );
    assert!(rsp_fptas(&g, &rat(1, 2), &rat(1, 2)).is_none());
    let c = chain(&[1, 2, 3]);
    let w = rsp_fptas(&c, &int(27), &rat(1, 100)).unwrap();
    assert_eq!(w.total_delay, int(27));
}

#[test]
fn oracle_examples() {
    let c = chain(&[1, 2, 3]);
    let o = bsp_oracles(c.clone(), BspMode::Exact);
    let a = o.restrict(Axis::Y, &int(0), &int(36), false);
    assert_eq!(a.point().unwrap().y(), &int(18));
    assert!(o.restrict(Axis::Y, &int(0), &int(1), false).is_no());
    let f = bsp_oracles(c, BspMode::Fptas);
    assert!(f.restrict(Axis::Y, &rat(1, 10), &int(1), false).is_no());
}

#[test]
fn two_approx_on_chains() {
    let eps = rat(1, 2);
    let g = chain(&[1, 2, 3]);
    let mut r = bsp_two_approx(&g, &eps).unwrap();
    assert!(r.len() <= 2);
    assert!(r.certify(&path_points(&enumerate_paths(&g, 100).unwrap())));
    assert_eq!(common::opt_eps(&common::path_vecs(&g), &eps), 1);

    let g = chain(&[1, 1, 3]);
    let mut r = bsp_two_approx(&g, &eps).unwrap();
    assert_eq!(common::opt_eps(&common::path_vecs(&g), &eps), 2);
    assert!(r.len() <= 4);
    assert!(r.certify(&path_points(&enumerate_paths(&g, 100).unwrap())));

    let cut = BiGraph::new(3, 0, 2, vec![edge(0, 1, int(1), int(1))]).unwrap();
    let r = bsp_two_approx(&cut, &eps).unwrap();
    assert!(r.empty_instance && r.is_empty());
}

#[test]
fn enumeration_examples() {
    let c = chain(&[1, 2, 3]);
    let paths = enumerate_paths(&c, 1000).unwrap();
    assert_eq!(paths.len(), 8);
    assert!(paths
        .iter()
        .all(|w| &w.total_cost + &w.total_delay == int(54)));
    assert_eq!(enumerate_paths(&parallel(), 10).unwrap().len(), 2);
    let cut = BiGraph::new(3, 0, 2, vec![edge(0, 1, int(1), int(1))]).unwrap();
    assert!(enumerate_paths(&cut, 10).unwrap().is_empty());
    assert!(matches!(
        enumerate_paths(&c, 5),
        Err(Error::GuardExceeded { .. })
    ));
}

#[test]
fn graph_validation() {
    assert!(BiGraph::new(2, 0, 2, vec![]).is_err());
    assert!(BiGraph::new(2, 0, 1, vec![edge(0, 1, int(0), int(1))]).is_err());
    assert!(BiGraph::new(2, 0, 1, vec![edge(0, 3, int(1), int(1))]).is_err());
}

#[test]
fn lossless_fptas_matches_exact() {
    // integer delays with delta * total delay < 1: any (1 + delta) answer is optimal
    for seed in 0..60 {
        let mut g = random_bigraph(7, 0.6, seed, 4);
        for e in &mut g.edges {
            e.delay = Rat::from_integer(e.delay.ceil().to_integer());
        }
        let total: Rat = g.edges.iter().map(|e| e.delay.clone()).sum();
        let delta = Rat::one() / (total + int(1));
        for w in pareto_paths(&g) {
            let ex = rsp_exact(&g, &w.total_cost).unwrap();
            let ap = rsp_fptas(&g, &w.total_cost, &delta).unwrap();
            assert_eq!(ap.total_delay, ex.total_delay);
        }
    }
}

fn arb_graph() -> impl Strategy<Value = BiGraph> {
    (
        2usize..7,
        prop::collection::vec((0usize..7, 0usize..7, 1i64..12, 1i64..12, 1i64..4), 0..16),
    )
        .prop_map(|(n, es)| {
            let edges = es
                .into_iter()
                .filter(|(u, v, ..)| u % n != v % n)
                .map(|(u, v, c, d, q)| edge(u % n, v % n, rat(c, q), rat(d, q + 1)))
                .collect();
            BiGraph::new(n, 0, n - 1, edges).unwrap()
        })
}

fn arb_dag() -> impl Strategy<Value = BiGraph> {
    (2usize..=8, any::<u64>(), 2u32..7)
        .prop_map(|(n, seed, bits)| random_bigraph(n, 0.55, seed, bits))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_dp_matches_enumeration(g in arb_graph()) {
        let vecs = common::path_vecs(&g);
        let mut front = common::front(&vecs);
        let mut got: Vec<Vec<Rat>> = pareto_paths(&g).iter().map(|w| w.point().coords).collect();
        front.sort();
        got.sort();
        prop_assert_eq!(got, front);
        for v in &vecs {
            for strict in [false, true] {
                let want = common::min_y_under(&vecs, &v[0], strict);
                let have = restricted_exact(&g, Axis::Y, &v[0], strict).map(|w| w.total_delay);
                prop_assert_eq!(have, want);
            }
            let want = common::min_x_under(&vecs, &v[1]);
            prop_assert_eq!(restricted_exact(&g, Axis::X, &v[1], false).map(|w| w.total_cost), want);
        }
    }

    #[test]
    fn fptas_contracts(g in arb_dag(), dn in 1i64..6) {
        let delta = rat(1, dn * 2);
        let vecs = common::path_vecs(&g);
        let one = Rat::one();
        for v in &vecs {
            let c = &v[0];
            match (rsp_exact(&g, c), rsp_fptas(&g, c, &delta)) {
                (Some(ex), Some(ap)) => {
                    prop_assert!(ap.total_cost <= *c);
                    prop_assert!(ap.total_delay <= (&one + &delta) * &ex.total_delay);
                    prop_assert!(g.is_st_path(&ap.edges));
                }
                (None, None) => {}
                _ => prop_assert!(false, "feasibility disagrees"),
            }
            let s = restricted_fptas(&g, Axis::Y, c, true, &delta);
            match common::min_y_under(&vecs, c, true) {
                Some(b) => {
                    let s = s.unwrap();
                    prop_assert!(s.total_cost < *c && s.total_delay <= (&one + &delta) * b);
                }
                None => prop_assert!(s.is_none()),
            }
            let d = &v[1];
            let dr = dual_restricted_fptas(&g, Axis::X, d, &delta).unwrap();
            prop_assert!(dr.total_delay <= (&one + &delta) * d);
            prop_assert!(dr.total_cost <= common::min_x_under(&vecs, d).unwrap());
        }
    }

    #[test]
    fn two_approx_on_graphs(g in arb_dag(), e in 1i64..5) {
        let eps = rat(e, 4);
        let vecs = common::path_vecs(&g);
        let opt = common::opt_eps(&vecs, &eps);
        for mode in [BspMode::Exact, BspMode::Fptas] {
            for r in [bsp_two_approx_reduced(&g, &eps, mode).unwrap(), {
                let o = bsp_oracles(g.clone(), mode);
                two_approx(&o, &o, &eps).unwrap()
            }] {
                prop_assert!(common::covers_all(&common::raw(&r.result), &vecs, &(Rat::one() + &eps)));
                prop_assert!(r.len() <= 2 * opt);
                prop_assert!(r.result.iter().all(|q| vecs.contains(&q.coords)));
            }
        }
        let o = bsp_oracles(g.clone(), BspMode::Exact);
        prop_assert_eq!(greedy_exact(&o, &o, &eps).unwrap().len(), opt);
    }

    #[test]
    fn reduced_dual_matches_direct(g in arb_dag()) {
        let o = bsp_oracles(g.clone(), BspMode::Exact);
        for v in common::path_vecs(&g) {
            for bound in [v[1].clone(), &v[1] * rat(3, 4)] {
                let direct = o.dual_restrict(Axis::X, &int(0), &bound);
                let reduced = DualViaRestrict(&o).dual_restrict(Axis::X, &int(0), &bound);
                prop_assert_eq!(direct.point().map(|p| p.x().clone()), reduced.point().map(|p| p.x().clone()));
                prop_assert_eq!(direct.is_no(), reduced.is_no());
            }
        }
    }

    #[test]
    fn graph_text_roundtrip(g in arb_graph()) {
        let back = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back, g);
    }
}
