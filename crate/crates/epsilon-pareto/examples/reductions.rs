//! Restricted and dual restricted oracles built from each other by binary
//! search; the call count grows linearly with the bit size m.
//!
//! ```text
//! cargo run --example reductions
//! ```

use epsilon_pareto::generators::random_tradeoff_points;
use epsilon_pareto::oracle::{
    dual_restrict_via_restrict, exact_oracle_from_points, restrict_via_dual_restrict, Axis,
    CallCounter, Counted, DualRestrictOracle, RestrictOracle,
};
use epsilon_pareto::rational::{int, rat};

fn main() {
    for bits in [2u32, 4, 8, 16, 24] {
        let p = random_tradeoff_points(12, 1, bits);
        let o = exact_oracle_from_points(p.clone());
        let m = RestrictOracle::value_bits(&o);
        let bound = p[p.len() / 2].y().clone();

        let counter = CallCounter::new();
        let r = dual_restrict_via_restrict(&Counted::new(&o, &counter), Axis::X, &bound, &int(0));
        let direct = o.dual_restrict(Axis::X, &int(0), &bound);
        let calls = counter.snapshot().restrict;

        let counter = CallCounter::new();
        let back = restrict_via_dual_restrict(
            &Counted::new(&o, &counter),
            Axis::X,
            &bound,
            &rat(1, 4),
            false,
        );
        println!(
            "m = {m:3}: dual via restrict {calls:3} calls (agrees {}), restrict via dual {:3} calls, found {}",
            r == direct,
            counter.snapshot().dual_restrict,
            back.point().is_some()
        );
    }
}
