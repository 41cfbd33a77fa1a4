//! Instance families: partition chain and cluster graphs, the five-point
//! restricted-routine trap, VC shattering sets, the staged greedy adversary,
//! and seeded random instances.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bsp::{BiGraph, Edge};
use crate::error::{Error, Result};
use crate::oracle::AdversaryPolicy;
use crate::point::{Point, PointSet};
use crate::rational::{int, pow2, powi, Rat};

/// Partition data for the chain and cluster graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    pub a: Vec<u64>,
    pub eps: Rat,
    pub k: usize,
}

impl PartitionSpec {
    pub fn new(a: Vec<u64>, eps: Rat, k: usize) -> Result<Self> {
        if a.is_empty() || a.contains(&0) {
            return Err(Error::InvalidParameter(
                "A must be nonempty positive integers".into(),
            ));
        }
        if eps <= Rat::zero() || k == 0 {
            return Err(Error::InvalidParameter("need eps > 0 and k >= 1".into()));
        }
        Ok(PartitionSpec { a, eps, k })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn sum(&self) -> Rat {
        int(self.a.iter().sum::<u64>() as i64)
    }

    /// `2 (1 + eps) n S`, the common value of `cost + delay` on every path.
    pub fn line_total(&self) -> Rat {
        int(2) * (Rat::one() + &self.eps) * int(self.n() as i64) * self.sum()
    }

    fn heavy(&self, i: usize) -> Rat {
        self.sum() + int(2) * &self.eps * int(self.a[i] as i64) * int(self.n() as i64)
    }
}

/// Adds edge `u -> v` with weight `(c, d)` split over a fresh midpoint node.
fn split_edge(g: &mut BiGraph, u: usize, v: usize, c: Rat, d: Rat) {
    let mid = g.node_count;
    g.node_count += 1;
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    g.add_edge(u, mid, &c * &half, &d * &half);
    g.add_edge(mid, v, c * &half, d * half);
}

/// Appends one scaled copy of the chain between `first` and `first + n`.
fn push_chain(g: &mut BiGraph, spec: &PartitionSpec, first: usize, f: &Rat) {
    let s = spec.sum();
    for i in 0..spec.n() {
        let (u, v) = (first + i, first + i + 1);
        g.add_edge(u, v, spec.heavy(i) / f, &s * f);
        split_edge(g, u, v, &s / f, spec.heavy(i) * f);
    }
}

/// Chain graph on `n + 1` main nodes: edge pair `i` has `c(e_i) = d(e'_i) =
/// S + 2 eps a_i n` and `d(e_i) = c(e'_i) = S`; each `e'_i` runs through a
/// midpoint node carrying half of each weight.
pub fn chain_instance(spec: &PartitionSpec) -> BiGraph {
    let n = spec.n();
    let mut g = BiGraph {
        node_count: n + 1,
        edges: Vec::new(),
        source: 0,
        sink: n,
    };
    push_chain(&mut g, spec, 0, &Rat::one());
    g
}

/// `(1 + 2 eps)^(2 (j - 1))`, the weight scale of cluster `j` (1-based).
pub fn cluster_scale(spec: &PartitionSpec, j: usize) -> Rat {
    powi(&(Rat::one() + int(2) * &spec.eps), 2 * (j as u32 - 1))
}

/// Stub weight `2^-(2m+4)` where `m` bounds the bits of the copy weights.
pub fn cluster_eta(spec: &PartitionSpec) -> Rat {
    let mut g = BiGraph {
        node_count: 2,
        edges: Vec::new(),
        source: 0,
        sink: 1,
    };
    for j in 1..=spec.k {
        let f = cluster_scale(spec, j);
        let start = g.node_count;
        g.node_count += spec.n() + 1;
        push_chain(&mut g, spec, start, &f);
    }
    pow2(-(2 * g.value_bits() as i64 + 4))
}

/// `k` scaled chain copies in parallel between a shared source and sink.
/// Stub edges into and out of each copy weigh `eta` in both objectives.
pub fn cluster_instance(spec: &PartitionSpec) -> BiGraph {
    let eta = cluster_eta(spec);
    let mut g = BiGraph {
        node_count: 2,
        edges: Vec::new(),
        source: 0,
        sink: 1,
    };
    for j in 1..=spec.k {
        let f = cluster_scale(spec, j);
        let start = g.node_count;
        g.node_count += spec.n() + 1;
        g.add_edge(0, start, eta.clone(), eta.clone());
        g.add_edge(start + spec.n(), 1, eta.clone(), eta.clone());
        push_chain(&mut g, spec, start, &f);
    }
    g
}

/// Closed-form extreme points `(l_j, r_j)` of cluster `j`, without stubs.
pub fn cluster_endpoints(spec: &PartitionSpec, j: usize) -> (Point, Point) {
    let f = cluster_scale(spec, j);
    let sn = spec.sum() * int(spec.n() as i64);
    let w = Rat::one() + int(2) * &spec.eps;
    let l = Point::xy(&sn / &f, &sn * &f * &w);
    let r = Point::xy(&sn * &w / &f, &sn * &f);
    (l, r)
}

/// The five points `p, q, r, p_q, p_r` and the same set without `p`.
pub fn prop31_points(m: &Rat, eps: &Rat) -> Result<(PointSet, PointSet)> {
    if *eps <= Rat::zero() || *m <= Rat::one() + Rat::one() / eps {
        return Err(Error::InvalidParameter("need M > 1 + 1/eps".into()));
    }
    let one = Rat::one();
    let e1 = &one + eps;
    let e2 = &one + int(2) * eps;
    let p = Point::xy(m.clone(), m.clone());
    let q = Point::xy(m * &e2 / &e1, m / &e1);
    let r = Point::xy(m / &e1, m * &e2 / &e1);
    let pq = Point::xy(m + &one, m - &one);
    let pr = Point::xy(m - &one, m + &one);
    let full = PointSet {
        dim: 2,
        points: vec![p, q.clone(), r.clone(), pq.clone(), pr.clone()],
    };
    let without = PointSet {
        dim: 2,
        points: vec![q, r, pq, pr],
    };
    Ok((full, without))
}

/// `d` points `a_i` (coordinate `i` is 1, the rest `1 + 2 eps`) followed by
/// one `c_X` per subset `X` of `[d]` (coordinates in `X` are `1 + eps`, the
/// rest `1 + 2 eps`), subsets in bitmask order.
pub fn shatter_construction(d: usize, eps: &Rat) -> Result<PointSet> {
    if !(2..=6).contains(&d) {
        return Err(Error::InvalidParameter("d must be in 2..=6".into()));
    }
    if *eps <= Rat::zero() {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    let hi = Rat::one() + int(2) * eps;
    let mid = Rat::one() + eps;
    let mut pts = Vec::new();
    for i in 0..d {
        pts.push(Point {
            coords: (0..d)
                .map(|j| if i == j { Rat::one() } else { hi.clone() })
                .collect(),
        });
    }
    for mask in 0u32..(1 << d) {
        pts.push(Point {
            coords: (0..d)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        mid.clone()
                    } else {
                        hi.clone()
                    }
                })
                .collect(),
        });
    }
    Ok(PointSet {
        dim: d,
        points: pts,
    })
}

/// Staged instance and script driving the tolerant greedy to `3k - 1`
/// points while `k` points suffice.
///
/// With `E = 1 + eps`, `D = 1 + delta` and `X = E^(6k-5)`, the first block is
/// `q1 = (D X, 1)`, `p1 = (X, E)`, `q2 = (X/E, E^2)`. Block `j >= 2` is the
/// pattern `r = (X/E^3, E^3)`, `q3 = (X/E^4, E^4/D)`,
/// `q4 = (D X/E^6, E^4 (1+D)/(2D))`, `p = (X/E^6, E^4)`, `q5 = (X/E^7, E^5)`
/// scaled by `E^(-6(j-2))` in x and `E^(3(j-2))` in y. The `p` points form an
/// optimal eps-Pareto set.
pub fn claim34_stage(k: usize, eps: &Rat, delta: &Rat) -> Result<(PointSet, AdversaryPolicy)> {
    if k == 0 || *delta <= Rat::zero() || delta >= eps {
        return Err(Error::InvalidParameter(
            "need k >= 1 and 0 < delta < eps".into(),
        ));
    }
    let e = Rat::one() + eps;
    let d = Rat::one() + delta;
    let ep = |i: i64| {
        if i >= 0 {
            powi(&e, i as u32)
        } else {
            Rat::one() / powi(&e, (-i) as u32)
        }
    };
    let x0 = ep(6 * k as i64 - 5);
    let mut pts = vec![
        Point::xy(&d * &x0, Rat::one()),
        Point::xy(x0.clone(), e.clone()),
        Point::xy(&x0 / &e, ep(2)),
    ];
    let mut script = vec![0, 2, 2];
    let two = int(2);
    for j in 2..=k {
        let t = (j - 2) as i64;
        let (sx, sy) = (ep(-6 * t), ep(3 * t));
        let base = pts.len();
        let block = [
            (&x0 / ep(3), ep(3)),
            (&x0 / ep(4), ep(4) / &d),
            (&d * &x0 / ep(6), ep(4) * (Rat::one() + &d) / (&two * &d)),
            (&x0 / ep(6), ep(4)),
            (&x0 / ep(7), ep(5)),
        ];
        for (x, y) in block {
            pts.push(Point::xy(x * &sx, y * &sy));
        }
        // (r, q3), (p, q4), (q5, q5): probe then selection per iteration.
        script.extend([base, base + 1, base + 3, base + 2, base + 4, base + 4]);
    }
    Ok((
        PointSet {
            dim: 2,
            points: pts,
        },
        AdversaryPolicy::Scripted(script),
    ))
}

/// Indices of the planted optimal points inside [`claim34_stage`] output.
pub fn claim34_optimal_indices(k: usize) -> Vec<usize> {
    let mut v = vec![1];
    v.extend((2..=k).map(|j| 3 + 5 * (j - 2) + 3));
    v
}

fn random_value(rng: &mut ChaCha8Rng, m: u32) -> Rat {
    let top = (1u64 << m.min(62)) - 1;
    let a = rng.gen_range(1..=top.max(1));
    let b = rng.gen_range(1..=top.max(1));
    Rat::new(BigInt::from(a), BigInt::from(b))
}

/// `n` seeded random points in dimension `d`; every coordinate is `a/b`
/// with `1 <= a, b < 2^m`.
pub fn random_points(n: usize, d: usize, seed: u64, value_bits: u32) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = (0..n)
        .map(|_| Point {
            coords: (0..d).map(|_| random_value(&mut rng, value_bits)).collect(),
        })
        .collect();
    PointSet {
        dim: d,
        points: pts,
    }
}

/// Seeded 2-d points with a rich trade-off: `x` is random and `y` is close
/// to `K / x`, so most points are undominated. Integer coordinates below
/// `2^m`.
pub fn random_tradeoff_points(n: usize, seed: u64, value_bits: u32) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = ((1u64 << value_bits.min(62)) - 1).max(1);
    let pts = (0..n)
        .map(|_| {
            let x = rng.gen_range(1..=top);
            let base = (top / x).max(1);
            let jitter = rng.gen_range(0..=base / 4 + 1);
            let y = (base + jitter).min(top);
            Point::xy(int(x as i64), int(y as i64))
        })
        .collect();
    PointSet {
        dim: 2,
        points: pts,
    }
}

/// Seeded random DAG on `n` nodes: each `i -> j` with `i < j` appears with
/// probability `density`; source 0, sink `n - 1`; weights `a/b` with
/// `1 <= a, b < 2^m`.
pub fn random_bigraph(n: usize, density: f64, seed: u64, value_bits: u32) -> BiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                let cost = random_value(&mut rng, value_bits);
                let delay = random_value(&mut rng, value_bits);
                edges.push(Edge {
                    from: i,
                    to: j,
                    cost,
                    delay,
                });
            }
        }
    }
    BiGraph {
        node_count: n.max(1),
        edges,
        source: 0,
        sink: n.saturating_sub(1),
    }
}
