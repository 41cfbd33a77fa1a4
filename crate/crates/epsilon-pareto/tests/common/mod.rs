//! Brute-force reference oracles shared by the integration tests. They work
//! on raw coordinate vectors and do not call back into the library's
//! predicates, so agreement is meaningful.
#![allow(dead_code)]

use epsilon_pareto::bsp::BiGraph;
use epsilon_pareto::point::{Point, PointSet};
use epsilon_pareto::rational::Rat;
use num_traits::{One, Zero};

pub type Vec2 = Vec<Rat>;

pub fn raw(p: &PointSet) -> Vec<Vec2> {
    p.iter().map(|q| q.coords.clone()).collect()
}

pub fn raw_pt(p: &Point) -> Vec2 {
    p.coords.clone()
}

/// `u_j <= rho * v_j` for all `j`.
pub fn cov(u: &[Rat], v: &[Rat], rho: &Rat) -> bool {
    u.iter().zip(v).all(|(a, b)| *a <= rho * b)
}

pub fn dom(u: &[Rat], v: &[Rat]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b)
}

pub fn rd(u: &[Rat], v: &[Rat]) -> Rat {
    let mut m = Rat::one();
    for (a, b) in u.iter().zip(v) {
        let r = a / b;
        if r > m {
            m = r;
        }
    }
    m
}

/// Points not strictly dominated by another one.
pub fn front(p: &[Vec2]) -> Vec<Vec2> {
    let mut out: Vec<Vec2> = Vec::new();
    for (i, u) in p.iter().enumerate() {
        let beaten = p
            .iter()
            .enumerate()
            .any(|(j, v)| j != i && dom(v, u) && v != u);
        if !beaten && !out.contains(u) {
            out.push(u.clone());
        }
    }
    out
}

/// Every point of `p` is covered at `rho` by some point of `q`.
pub fn covers_all(q: &[Vec2], p: &[Vec2], rho: &Rat) -> bool {
    p.iter().all(|v| q.iter().any(|u| cov(u, v, rho)))
}

/// Smallest number of points of `cands` covering all of `targets` at `rho`.
/// Bitmask search by increasing size; `None` when impossible.
pub fn min_cover(cands: &[Vec2], targets: &[Vec2], rho: &Rat) -> Option<usize> {
    assert!(targets.len() <= 64);
    let full: u64 = if targets.len() == 64 {
        u64::MAX
    } else {
        (1u64 << targets.len()) - 1
    };
    let masks: Vec<u64> = cands
        .iter()
        .map(|u| {
            targets
                .iter()
                .enumerate()
                .filter(|(_, v)| cov(u, v, rho))
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    if full == 0 {
        return Some(0);
    }
    if masks.iter().fold(0, |m, x| m | x) != full {
        return None;
    }
    (1..=masks.len()).find(|&k| search(&masks, full, k, 0, 0))
}

fn search(masks: &[u64], full: u64, left: usize, from: usize, acc: u64) -> bool {
    if acc == full {
        return true;
    }
    if left == 0 {
        return false;
    }
    (from..masks.len())
        .any(|i| masks[i] & !acc != 0 && search(masks, full, left - 1, i + 1, acc | masks[i]))
}

/// Size of a smallest eps-Pareto subset of `p`.
pub fn opt_eps(p: &[Vec2], eps: &Rat) -> usize {
    let f = front(p);
    min_cover(&f, &f, &(Rat::one() + eps)).expect("a set covers itself")
}

/// Best worst-case ratio with `k` points of `p`, by enumerating subsets.
pub fn dual_opt(p: &[Vec2], k: usize) -> Rat {
    let n = p.len();
    let d: Vec<Vec<Rat>> = p
        .iter()
        .map(|u| p.iter().map(|v| rd(u, v)).collect())
        .collect();
    let mut best: Option<Rat> = None;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let worst = (0..n)
            .map(|x| idx.iter().map(|&c| d[c][x].clone()).min().unwrap())
            .max()
            .unwrap();
        if best.as_ref().is_none_or(|b| worst < *b) {
            best = Some(worst);
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    best.unwrap()
}

/// All simple s-t paths as `(edges, cost, delay)`.
pub fn all_paths(g: &BiGraph) -> Vec<(Vec<usize>, Rat, Rat)> {
    fn go(
        g: &BiGraph,
        at: usize,
        seen: &mut Vec<bool>,
        path: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Rat, Rat)>,
    ) {
        if at == g.sink {
            let c = path.iter().fold(Rat::zero(), |s, &e| s + &g.edges[e].cost);
            let d = path.iter().fold(Rat::zero(), |s, &e| s + &g.edges[e].delay);
            out.push((path.clone(), c, d));
            return;
        }
        for (i, e) in g.edges.iter().enumerate() {
            if e.from == at && !seen[e.to] {
                seen[e.to] = true;
                path.push(i);
                go(g, e.to, seen, path, out);
                path.pop();
                seen[e.to] = false;
            }
        }
    }
    let mut seen = vec![false; g.node_count];
    seen[g.source] = true;
    let mut out = Vec::new();
    go(g, g.source, &mut seen, &mut Vec::new(), &mut out);
    out
}

pub fn path_vecs(g: &BiGraph) -> Vec<Vec2> {
    all_paths(g)
        .into_iter()
        .map(|(_, c, d)| vec![c, d])
        .collect()
}

/// Minimum `y` among points with `x <= bound` (`< bound` when strict).
pub fn min_y_under(p: &[Vec2], bound: &Rat, strict: bool) -> Option<Rat> {
    p.iter()
        .filter(|v| {
            if strict {
                v[0] < *bound
            } else {
                v[0] <= *bound
            }
        })
        .map(|v| v[1].clone())
        .min()
}

/// Minimum `x` among points with `y <= bound`.
pub fn min_x_under(p: &[Vec2], bound: &Rat) -> Option<Rat> {
    p.iter()
        .filter(|v| v[1] <= *bound)
        .map(|v| v[0].clone())
        .min()
}

/// Whether some `size`-subset of `p` is shattered by the family of sets
/// `{ j : rel(i, j) }` over all `i`.
pub fn shatters_some(n: usize, size: usize, rel: &dyn Fn(usize, usize) -> bool) -> bool {
    let sets: Vec<u64> = (0..n)
        .map(|i| (0..n).filter(|&j| rel(i, j)).fold(0u64, |m, j| m | 1 << j))
        .collect();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > n {
        return false;
    }
    loop {
        let sub: u64 = idx.iter().fold(0, |m, &j| m | 1 << j);
        let mut traces: Vec<u64> = sets.iter().map(|s| s & sub).collect();
        traces.push(0);
        traces.sort_unstable();
        traces.dedup();
        if traces.len() == 1 << size {
            return true;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `1 + 1/2 + ... + 1/n`.
pub fn harmonic_int(n: usize) -> Rat {
    (1..=n).fold(Rat::zero(), |s, i| {
        s + Rat::new(1.into(), (i as i64).into())
    })
}
