//! Restricted shortest path: exact label-setting against the scaling
//! FPTAS on a random acyclic graph.
//!
//! ```text
//! cargo run --example rsp_fptas -- [seed]
//! ```

use epsilon_pareto::bsp::{pareto_paths, rsp_exact, rsp_fptas};
use epsilon_pareto::generators::random_bigraph;
use epsilon_pareto::rational::{fmt_rat, rat, to_f64};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let g = random_bigraph(10, 0.6, seed, 6);
    let front = pareto_paths(&g);
    println!(
        "{} edges, {} Pareto paths, m = {}",
        g.edges.len(),
        front.len(),
        g.value_bits()
    );
    let delta = rat(1, 10);
    for w in &front {
        let c = w.total_cost.clone();
        let ex = rsp_exact(&g, &c).unwrap();
        let ap = rsp_fptas(&g, &c, &delta).unwrap();
        println!(
            "C = {:>8}  exact delay {:>8}  fptas delay {:>8}  ratio ~{:.4}",
            fmt_rat(&c),
            fmt_rat(&ex.total_delay),
            fmt_rat(&ap.total_delay),
            to_f64(&(&ap.total_delay / &ex.total_delay))
        );
    }
}
