//! The 2-approximation and the exact greedy on an explicit point set,
//! compared with exhaustive search.
//!
//! ```text
//! cargo run --example two_approx_points -- [seed]
//! ```

use epsilon_pareto::bi_engine::{greedy_exact, prune_redundant, two_approx, two_approx_two_sided};
use epsilon_pareto::brute::opt_eps;
use epsilon_pareto::generators::random_tradeoff_points;
use epsilon_pareto::oracle::exact_oracle_from_points;
use epsilon_pareto::point::pareto_filter;
use epsilon_pareto::rational::{fmt_rat, rat};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let p = random_tradeoff_points(14, seed, 8);
    let eps = rat(1, 4);
    println!(
        "{} points, {} on the front, eps = {}",
        p.len(),
        pareto_filter(&p).len(),
        fmt_rat(&eps)
    );

    let o = exact_oracle_from_points(p.clone());
    let mut t = two_approx(&o, &o, &eps).unwrap();
    println!(
        "two_approx: {} points in {} calls, certified {}",
        t.len(),
        t.oracle_calls.total(),
        t.certify(&p)
    );
    for (q, ybar) in t.state.q_list.iter().zip(&t.state.y_bars) {
        println!("  {q}  y_bar = {}", fmt_rat(ybar));
    }
    let pruned = prune_redundant(&t, Some(&p));
    println!("after pruning: {} points", pruned.len());

    let two = two_approx_two_sided(&o, &eps).unwrap();
    println!(
        "restrict-only variant: {} points in {} calls",
        two.len(),
        two.oracle_calls.total()
    );

    let mut g = greedy_exact(&o, &o, &eps).unwrap();
    println!(
        "greedy_exact: {} points, certified {}",
        g.len(),
        g.certify(&p)
    );
    println!(
        "exhaustive optimum: {}",
        opt_eps(&p, &eps, 1 << 20).unwrap()
    );
}
