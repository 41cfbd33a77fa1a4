//! Bi-objective shortest paths on the partition gadgets: a chain whose
//! optimum depends on whether the numbers can be split evenly, and the
//! cluster graph that repeats it at k scales.
//!
//! ```text
//! cargo run --example bsp_chain -- 1,2,3
//! ```

use epsilon_pareto::brute::opt_eps;
use epsilon_pareto::bsp::{bsp_two_approx, enumerate_paths, pareto_paths, path_points};
use epsilon_pareto::generators::{chain_instance, cluster_instance, PartitionSpec};
use epsilon_pareto::point::pareto_filter;
use epsilon_pareto::rational::{fmt_rat, rat};

fn main() {
    let a: Vec<u64> = std::env::args()
        .nth(1)
        .map(|s| {
            s.split(',')
                .map(|x| x.trim().parse().expect("integer"))
                .collect()
        })
        .unwrap_or_else(|| vec![1, 2, 3]);
    let eps = rat(1, 2);
    let spec = PartitionSpec::new(a.clone(), eps.clone(), 1).unwrap();
    let g = chain_instance(&spec);
    println!(
        "chain for A = {a:?}: {} nodes, {} edges",
        g.node_count,
        g.edges.len()
    );

    let paths = enumerate_paths(&g, 1 << 16).unwrap();
    let on_line = paths
        .iter()
        .all(|w| &w.total_cost + &w.total_delay == spec.line_total());
    println!(
        "{} paths, all on cost + delay = {}: {on_line}",
        paths.len(),
        fmt_rat(&spec.line_total())
    );
    for w in pareto_paths(&g) {
        println!("  {}  edges {:?}", w.point(), w.edges);
    }
    let all = path_points(&paths);
    println!(
        "exhaustive optimum: {}",
        opt_eps(&all, &eps, 1 << 20).unwrap()
    );
    let mut rep = bsp_two_approx(&g, &eps).unwrap();
    println!(
        "2-approximation: {} paths, certified {}",
        rep.len(),
        rep.certify(&pareto_filter(&all))
    );

    let spec = PartitionSpec::new(a, eps.clone(), 2).unwrap();
    let c = cluster_instance(&spec);
    let all = path_points(&enumerate_paths(&c, 1 << 16).unwrap());
    println!(
        "cluster with k = 2: optimum {}",
        opt_eps(&all, &eps, 1 << 20).unwrap()
    );
}
