//! Several objectives through a GAP oracle: the grid delta-Pareto set, the
//! greedy second phase, and the VC dimension of the cover families.
//!
//! ```text
//! cargo run --release --example multi_grid
//! ```

use epsilon_pareto::brute::opt_eps;
use epsilon_pareto::dual_k::harmonic;
use epsilon_pareto::generators::{random_points, shatter_construction};
use epsilon_pareto::multi_grid::{eps_prime_pareto, gap_grid_pareto, vc_dim_dual, vc_dim_primal};
use epsilon_pareto::oracle::exact_oracle_from_points;
use epsilon_pareto::point::is_eps_pareto;
use epsilon_pareto::rational::{fmt_rat, int, rat, to_f64};

fn main() {
    let p = random_points(12, 3, 11, 3);
    let o = exact_oracle_from_points(p.clone());
    let delta = rat(1, 2);
    let grid = gap_grid_pareto(&o, &delta).unwrap();
    println!(
        "grid: {} points from {} GAP calls ({} values per axis), delta-Pareto {}",
        grid.result.len(),
        grid.gap_calls,
        grid.spec.values().len(),
        is_eps_pareto(&grid.result, &p, &delta).is_some()
    );

    let (eps, eps_prime) = (rat(1, 4), int(1));
    let mut rep = eps_prime_pareto(&o, &eps, &eps_prime).unwrap();
    let opt = opt_eps(&p, &eps, 1 << 20).unwrap();
    let bound = harmonic(&int(rep.grid.len() as i64)) * int(opt as i64);
    println!(
        "two-phase: {} points, certified at 1 + {} {}, OPT_eps = {opt}, H(|R|) OPT ~{:.3}",
        rep.result.len(),
        fmt_rat(&eps_prime),
        rep.certify(&p, &eps_prime),
        to_f64(&bound)
    );

    println!(
        "VC dimension on this set: primal {}, dual {}",
        vc_dim_primal(&p, &eps, 6).unwrap(),
        vc_dim_dual(&p, &eps, 6).unwrap()
    );
    for d in 2..=4 {
        let s = shatter_construction(d, &rat(1, 2)).unwrap();
        println!(
            "shatter construction d = {d}: {} points, primal VC {}",
            s.len(),
            vc_dim_primal(&s, &rat(1, 2), d + 1).unwrap()
        );
    }
}
