//! An adversarial restricted oracle that stays within its `delta` slack but
//! steers the greedy algorithm into `3k - 1` points, while the optimum has
//! `k` and the 2-approximation stays within `2k`.
//!
//! ```text
//! cargo run --example greedy_adversary -- [k]
//! ```

use epsilon_pareto::bi_engine::{greedy_approx, two_approx};
use epsilon_pareto::brute::opt_eps;
use epsilon_pareto::generators::{claim34_optimal_indices, claim34_stage};
use epsilon_pareto::oracle::{adversarial_wrapper, AdversaryPolicy};
use epsilon_pareto::point::is_eps_pareto;
use epsilon_pareto::rational::{fmt_rat, rat};

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let (eps, delta) = (rat(1, 2), rat(1, 8));
    let (p, script) = claim34_stage(k, &eps, &delta).expect("valid parameters");
    println!(
        "{} points, eps = {}, delta = {}",
        p.len(),
        fmt_rat(&eps),
        fmt_rat(&delta)
    );
    for (i, q) in p.iter().enumerate() {
        println!("  {i:2}  {q}");
    }

    let adv = adversarial_wrapper(p.clone(), delta.clone(), script);
    let g = greedy_approx(&adv, &eps, &delta).expect("greedy runs");
    println!(
        "greedy with scripted answers: {} points (3k - 1 = {})",
        g.len(),
        3 * k - 1
    );
    println!("  script violations: {}", adv.script_violations());
    println!(
        "  certified: {}",
        is_eps_pareto(&g.result, &p, &eps).is_some()
    );

    let opt = opt_eps(&p, &eps, 1 << 22).expect("small instance");
    println!(
        "optimum: {opt} points, planted at {:?}",
        claim34_optimal_indices(k)
    );

    let adv = adversarial_wrapper(p.clone(), delta, AdversaryPolicy::WorstTarget);
    let t = two_approx(&adv, &adv, &eps).expect("two_approx runs");
    println!(
        "2-approximation on an adversarial oracle: {} points, {} calls",
        t.len(),
        t.oracle_calls.total()
    );
}
