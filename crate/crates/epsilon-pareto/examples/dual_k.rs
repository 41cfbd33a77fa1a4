//! The dual problem: at most k points with the smallest worst-case cover
//! ratio, against exhaustive search.
//!
//! ```text
//! cargo run --example dual_k -- [k] [seed]
//! ```

use epsilon_pareto::dual_k::{brute_force_dual, dual_k_explicit, exponent_for};
use epsilon_pareto::generators::random_points;
use epsilon_pareto::rational::{fmt_rat, int, powi, to_f64};

fn main() {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let p = random_points(14, 3, seed, 5);
    let r = dual_k_explicit(&p, k, 2, 4).unwrap();
    let b = brute_force_dual(&p, k).unwrap();
    println!("{} points, k = {k}", p.len());
    println!(
        "chosen {:?}, ratio {} (~{:.4})",
        r.chosen_idx,
        fmt_rat(&r.achieved_ratio),
        to_f64(&r.achieved_ratio)
    );
    println!(
        "optimum {:?}, ratio {} (~{:.4})",
        b.chosen_idx,
        fmt_rat(&b.achieved_ratio),
        to_f64(&b.achieved_ratio)
    );
    println!(
        "exponent: nominal {} (alpha 2, beta 4 gives {}), honest {}",
        r.nominal_exponent,
        exponent_for(2, &int(4)),
        r.honest_exponent
    );
    println!(
        "within rho*^9: {}",
        r.achieved_ratio <= powi(&b.achieved_ratio, 9)
    );
    println!("centers {:?}, cases {:?}", r.centers, r.cases);
}
