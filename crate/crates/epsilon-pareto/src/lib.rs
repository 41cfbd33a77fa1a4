//! Small approximate Pareto sets with exact rational arithmetic.
//!
//! Every objective is minimized and every value is a [`rational::Rat`].
//! Algorithms only see a problem through oracles (see [`oracle`]), so the
//! same code runs on explicit point lists, on path problems in graphs
//! ([`bsp`]) and on adversarial backends used for lower-bound tests.
//!
//! - [`bi_engine`]: two objectives. The 2-approximation of the smallest
//!   eps-Pareto set, the greedy algorithms and pruning.
//! - [`multi_grid`]: any number of objectives through a GAP oracle. The
//!   grid construction, the two-phase greedy algorithm and VC checks.
//! - [`dual_k`]: at most `k` points with the best cover ratio.
//! - [`generators`]: the partition gadgets, lower-bound scenarios and
//!   seeded random instances.
//! - [`brute`]: exhaustive baselines; [`io`]: text formats.
//!
//! # Examples
//!
//! One runnable example per capability lives in `examples/`:
//!
//! ```text
//! cargo run --example two_approx_points    # 2-approximation vs exact greedy vs brute force
//! cargo run --example bsp_chain -- 1,2,3   # partition chain and cluster graphs
//! cargo run --example rsp_fptas            # restricted shortest path, exact vs FPTAS
//! cargo run --example greedy_adversary     # greedy forced to 3k - 1 points
//! cargo run --example reductions           # restrict <-> dual restrict by binary search
//! cargo run --release --example multi_grid # GAP grid, two-phase greedy, VC dimension
//! cargo run --example dual_k -- 3          # best k-point cover
//! ```
//!
//! ```
//! use epsilon_pareto::bi_engine::two_approx;
//! use epsilon_pareto::oracle::exact_oracle_from_points;
//! use epsilon_pareto::point::PointSet;
//! use epsilon_pareto::rational::rat;
//!
//! let p = PointSet::from_ints(&[&[1, 8], &[2, 4], &[4, 2], &[8, 1]]);
//! let o = exact_oracle_from_points(p.clone());
//! let mut rep = two_approx(&o, &o, &rat(1, 1)).unwrap();
//! assert!(rep.certify(&p));
//! assert!(rep.len() <= 4);
//! ```

pub mod bi_engine;
pub mod brute;
pub mod bsp;
pub mod dual_k;
pub mod error;
pub mod generators;
pub mod io;
pub mod multi_grid;
pub mod oracle;
pub mod point;
pub mod rational;
