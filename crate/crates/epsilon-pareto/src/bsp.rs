//! Bi-objective shortest paths: exact label-setting DP, delay-scaling
//! FPTAS, brute-force enumeration and the oracle adapters.
//!
//! A path's objective vector is `(cost, delay)`, so `Axis::X` is cost and
//! `Axis::Y` is delay.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::bi_engine::{two_approx, EngineReport};
use crate::error::{Error, Result};
use crate::oracle::{
    Answer, Axis, DualRestrictOracle, DualViaRestrict, RestrictOracle, Solution, Witness,
};
use crate::point::{Point, PointSet};
use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub cost: Rat,
    pub delay: Rat,
}

impl Edge {
    fn weight(&self, a: Axis) -> &Rat {
        match a {
            Axis::X => &self.cost,
            Axis::Y => &self.delay,
        }
    }
}

/// Directed graph with positive `(cost, delay)` edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiGraph {
    pub node_count: usize,
    pub edges: Vec<Edge>,
    pub source: usize,
    pub sink: usize,
}

impl BiGraph {
    pub fn new(node_count: usize, source: usize, sink: usize, edges: Vec<Edge>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.into()));
        if source >= node_count || sink >= node_count {
            return bad("source or sink out of range");
        }
        for e in &edges {
            if e.from >= node_count || e.to >= node_count {
                return bad("edge endpoint out of range");
            }
            if e.cost <= Rat::zero() || e.delay <= Rat::zero() {
                return bad("edge weights must be positive");
            }
        }
        Ok(BiGraph {
            node_count,
            edges,
            source,
            sink,
        })
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cost: Rat, delay: Rat) {
        self.edges.push(Edge {
            from,
            to,
            cost,
            delay,
        });
    }

    fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.node_count];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from].push(i);
        }
        out
    }

    fn in_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.node_count];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.to].push(i);
        }
        inc
    }

    /// Bits `m` bounding every path value: numerator and denominator
    /// below `2^m`, value inside `[2^-m, 2^m]`.
    pub fn value_bits(&self) -> u64 {
        let mut lcm = BigInt::one();
        let mut total = Rat::zero();
        for e in &self.edges {
            for w in [&e.cost, &e.delay] {
                lcm = lcm.lcm(w.denom());
                total += w;
            }
        }
        let top = (total * Rat::from_integer(lcm.clone())).ceil().to_integer();
        lcm.bits().max(top.bits()).max(1) + 1
    }

    /// Sum of `(cost, delay)` along an edge sequence.
    pub fn path_value(&self, edges: &[usize]) -> Point {
        let mut c = Rat::zero();
        let mut d = Rat::zero();
        for &i in edges {
            c += &self.edges[i].cost;
            d += &self.edges[i].delay;
        }
        Point::xy(c, d)
    }

    /// Whether the edge sequence is an s-t walk.
    pub fn is_st_path(&self, edges: &[usize]) -> bool {
        let mut at = self.source;
        for &i in edges {
            if i >= self.edges.len() || self.edges[i].from != at {
                return false;
            }
            at = self.edges[i].to;
        }
        at == self.sink && !(edges.is_empty() && self.source != self.sink)
    }
}

/// An s-t path with its totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub edges: Vec<usize>,
    pub total_cost: Rat,
    pub total_delay: Rat,
}

impl PathWitness {
    fn from_edges(g: &BiGraph, edges: Vec<usize>) -> Self {
        let v = g.path_value(&edges);
        let [c, d]: [Rat; 2] = v.coords.try_into().expect("two objectives");
        PathWitness {
            edges,
            total_cost: c,
            total_delay: d,
        }
    }

    pub fn point(&self) -> Point {
        Point::xy(self.total_cost.clone(), self.total_delay.clone())
    }

    fn value(&self, a: Axis) -> &Rat {
        match a {
            Axis::X => &self.total_cost,
            Axis::Y => &self.total_delay,
        }
    }

    fn into_solution(self) -> Solution {
        Solution {
            point: self.point(),
            witness: Witness::Path(self.edges),
        }
    }
}

struct Label {
    node: usize,
    cost: Rat,
    delay: Rat,
    parent: Option<(usize, usize)>,
}

/// Undominated s-t labels within `hop_limit` edges whose `bounded` objective
/// passes `keep`. Positive weights make every surviving label a simple path.
fn sink_labels(
    g: &BiGraph,
    hop_limit: usize,
    bounded: Axis,
    keep: impl Fn(&Rat) -> bool,
) -> Vec<PathWitness> {
    let out = g.out_edges();
    let mut arena: Vec<Label> = vec![Label {
        node: g.source,
        cost: Rat::zero(),
        delay: Rat::zero(),
        parent: None,
    }];
    let mut at_node: Vec<Vec<usize>> = vec![Vec::new(); g.node_count];
    at_node[g.source].push(0);
    let mut frontier = vec![0usize];
    for _ in 0..hop_limit {
        let mut next = Vec::new();
        for &li in &frontier {
            for &ei in &out[arena[li].node] {
                let e = &g.edges[ei];
                let cost = &arena[li].cost + &e.cost;
                let delay = &arena[li].delay + &e.delay;
                let b = if bounded == Axis::X { &cost } else { &delay };
                if !keep(b) {
                    continue;
                }
                let dominated = at_node[e.to]
                    .iter()
                    .any(|&o| arena[o].cost <= cost && arena[o].delay <= delay);
                if dominated {
                    continue;
                }
                at_node[e.to].retain(|&o| !(cost <= arena[o].cost && delay <= arena[o].delay));
                next.retain(|&o: &usize| {
                    !(arena[o].node == e.to && cost <= arena[o].cost && delay <= arena[o].delay)
                });
                arena.push(Label {
                    node: e.to,
                    cost,
                    delay,
                    parent: Some((li, ei)),
                });
                let id = arena.len() - 1;
                at_node[e.to].push(id);
                next.push(id);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut res = Vec::new();
    for &li in &at_node[g.sink] {
        if g.sink == g.source && li == 0 {
            continue;
        }
        let mut edges = Vec::new();
        let mut cur = li;
        while let Some((p, e)) = arena[cur].parent {
            edges.push(e);
            cur = p;
        }
        edges.reverse();
        res.push(PathWitness::from_edges(g, edges));
    }
    res
}

fn within(v: &Rat, bound: &Rat, strict: bool) -> bool {
    if strict {
        v < bound
    } else {
        v <= bound
    }
}

fn best_by(mut v: Vec<PathWitness>, target: Axis) -> Option<PathWitness> {
    let o = target.other();
    v.sort_by(|a, b| {
        (a.value(target), a.value(o), &a.edges).cmp(&(b.value(target), b.value(o), &b.edges))
    });
    v.into_iter().next()
}

/// Undominated s-t path values, one witness each.
pub fn pareto_paths(g: &BiGraph) -> Vec<PathWitness> {
    let mut v = sink_labels(g, g.node_count.saturating_sub(1), Axis::X, |_| true);
    v.sort_by(|a, b| (&a.total_cost, &a.total_delay).cmp(&(&b.total_cost, &b.total_delay)));
    v
}

/// Exact minimization of `target` subject to the other objective within
/// `bound`, by the label-setting DP.
pub fn restricted_exact(
    g: &BiGraph,
    target: Axis,
    bound: &Rat,
    strict: bool,
) -> Option<PathWitness> {
    let labels = sink_labels(g, g.node_count.saturating_sub(1), target.other(), |v| {
        within(v, bound, strict)
    });
    best_by(labels, target)
}

/// Minimum-delay s-t path among those with cost at most `c`.
pub fn rsp_exact(g: &BiGraph, c: &Rat) -> Option<PathWitness> {
    restricted_exact(g, Axis::Y, c, false)
}

/// Min `minimized` per exact scaled budget of the other objective.
/// Returns, per budget `b`, the best label `(value, edge into sink)` chain.
// Per node and budget: best value and the edge it arrived by.
type Labels = Vec<Vec<Option<(Rat, Option<usize>)>>>;

struct ScaledTable {
    best: Labels,
    scaled: Vec<usize>,
}

fn scaled_table(g: &BiGraph, scaled: Vec<usize>, minimized: Axis, budget: usize) -> ScaledTable {
    let inc = g.in_edges();
    let mut best: Labels = vec![vec![None; budget + 1]; g.node_count];
    best[g.source][0] = Some((Rat::zero(), None));
    for b in 1..=budget {
        for v in 0..g.node_count {
            let mut cur: Option<(Rat, Option<usize>)> = None;
            for &ei in &inc[v] {
                let w = scaled[ei];
                if w > b {
                    continue;
                }
                if let Some((val, _)) = &best[g.edges[ei].from][b - w] {
                    let cand = val + g.edges[ei].weight(minimized);
                    if cur.as_ref().is_none_or(|(c, _)| cand < *c) {
                        cur = Some((cand, Some(ei)));
                    }
                }
            }
            best[v][b] = cur;
        }
    }
    ScaledTable { best, scaled }
}

impl ScaledTable {
    fn walk(&self, g: &BiGraph, mut b: usize) -> Vec<usize> {
        let mut v = g.sink;
        let mut edges = Vec::new();
        while let Some((_, Some(ei))) = &self.best[v][b] {
            edges.push(*ei);
            b -= self.scaled[*ei];
            v = g.edges[*ei].from;
        }
        edges.reverse();
        edges
    }
}

fn ceil_div(a: &Rat, theta: &Rat) -> usize {
    (a / theta)
        .ceil()
        .to_integer()
        .to_usize()
        .expect("scaled weight fits in usize")
}

fn hop_bound(g: &BiGraph) -> usize {
    g.node_count
        .saturating_sub(1)
        .clamp(1, g.edges.len().max(1))
}

/// Approximate restricted query: the other objective stays within `bound`
/// exactly, `target` is within `1 + delta` of optimal. `delta = 0` routes to
/// the exact DP.
pub fn restricted_fptas(
    g: &BiGraph,
    target: Axis,
    bound: &Rat,
    strict: bool,
    delta: &Rat,
) -> Option<PathWitness> {
    if delta.is_zero() {
        return restricted_exact(g, target, bound, strict);
    }
    let o = target.other();
    // Feasibility: the cheapest path in the bounded objective.
    let lightest = sink_labels(g, g.node_count.saturating_sub(1), o, |_| true)
        .into_iter()
        .map(|p| p.value(o).clone())
        .min()?;
    if !within(&lightest, bound, strict) {
        return None;
    }
    let l = Rat::from_integer(BigInt::from(hop_bound(g)));
    let two = Rat::from_integer(BigInt::from(2));
    let mut guess = g.edges.iter().map(|e| e.weight(target).clone()).min()?;
    loop {
        let theta = delta * &guess / (&two * &l);
        let scaled: Vec<usize> = g
            .edges
            .iter()
            .map(|e| ceil_div(e.weight(target), &theta))
            .collect();
        let budget = (&guess / &theta)
            .floor()
            .to_integer()
            .to_usize()
            .expect("budget fits")
            + hop_bound(g);
        let table = scaled_table(g, scaled, o, budget);
        let hit = (1..=budget)
            .find(|&b| matches!(&table.best[g.sink][b], Some((v, _)) if within(v, bound, strict)));
        if let Some(b) = hit {
            return Some(PathWitness::from_edges(g, table.walk(g, b)));
        }
        guess *= &two;
    }
}

/// Restricted shortest path FPTAS: cost at most `c`, delay within `1 + delta`.
pub fn rsp_fptas(g: &BiGraph, c: &Rat, delta: &Rat) -> Option<PathWitness> {
    restricted_fptas(g, Axis::Y, c, false, delta)
}

/// Approximate dual restricted query: `target` no worse than the optimum
/// under `other <= bound`, other objective within `(1 + delta) bound`.
pub fn dual_restricted_fptas(
    g: &BiGraph,
    target: Axis,
    bound: &Rat,
    delta: &Rat,
) -> Option<PathWitness> {
    if delta.is_zero() {
        return restricted_exact(g, target, bound, false);
    }
    let o = target.other();
    let l = hop_bound(g);
    let theta = delta * bound / Rat::from_integer(BigInt::from(l));
    let scaled: Vec<usize> = g
        .edges
        .iter()
        .map(|e| {
            if e.weight(o) > &((Rat::one() + delta) * bound) {
                usize::MAX / 4
            } else {
                ceil_div(e.weight(o), &theta)
            }
        })
        .collect();
    let budget = (bound / &theta)
        .floor()
        .to_integer()
        .to_usize()
        .expect("budget fits")
        + l;
    let table = scaled_table(g, scaled, target, budget);
    let b = (1..=budget)
        .filter_map(|b| table.best[g.sink][b].as_ref().map(|(v, _)| (v.clone(), b)))
        .min()?
        .1;
    Some(PathWitness::from_edges(g, table.walk(g, b)))
}

/// How the path oracles answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BspMode {
    /// Label-setting DP for every request.
    Exact,
    /// Scaling FPTAS whenever `delta > 0`.
    Fptas,
}

/// Restricted and dual restricted oracles over a graph.
#[derive(Clone, Debug)]
pub struct BspOracle {
    pub graph: BiGraph,
    pub mode: BspMode,
    bits: u64,
}

/// Both path oracles in one value.
pub fn bsp_oracles(g: BiGraph, mode: BspMode) -> BspOracle {
    let bits = g.value_bits();
    BspOracle {
        graph: g,
        mode,
        bits,
    }
}

fn answer(p: Option<PathWitness>) -> Answer {
    p.map_or(Answer::No, |w| Answer::Found(w.into_solution()))
}

impl RestrictOracle for BspOracle {
    fn restrict(&self, target: Axis, delta: &Rat, bound: &Rat, strict: bool) -> Answer {
        answer(match self.mode {
            BspMode::Exact => restricted_exact(&self.graph, target, bound, strict),
            BspMode::Fptas => restricted_fptas(&self.graph, target, bound, strict, delta),
        })
    }
    fn value_bits(&self) -> u64 {
        self.bits
    }
    fn exact_capable(&self) -> bool {
        true
    }
}

impl DualRestrictOracle for BspOracle {
    fn dual_restrict(&self, target: Axis, delta: &Rat, bound: &Rat) -> Answer {
        answer(match self.mode {
            BspMode::Exact => restricted_exact(&self.graph, target, bound, false),
            BspMode::Fptas => dual_restricted_fptas(&self.graph, target, bound, delta),
        })
    }
    fn value_bits(&self) -> u64 {
        self.bits
    }
    fn exact_capable(&self) -> bool {
        true
    }
}

/// The 2-approximation over path oracles in FPTAS mode.
pub fn bsp_two_approx(g: &BiGraph, eps: &Rat) -> Result<EngineReport> {
    let o = bsp_oracles(g.clone(), BspMode::Fptas);
    two_approx(&o, &o, eps)
}

/// Same, with the dual oracle realized by binary search over restricted
/// calls.
pub fn bsp_two_approx_reduced(g: &BiGraph, eps: &Rat, mode: BspMode) -> Result<EngineReport> {
    let o = bsp_oracles(g.clone(), mode);
    two_approx(&o, &DualViaRestrict(&o), eps)
}

/// All simple s-t paths; errors once more than `cap` are found.
pub fn enumerate_paths(g: &BiGraph, cap: u64) -> Result<Vec<PathWitness>> {
    let out = g.out_edges();
    let mut res = Vec::new();
    let mut on_path = vec![false; g.node_count];
    let mut stack = Vec::new();
    fn dfs(
        g: &BiGraph,
        out: &[Vec<usize>],
        v: usize,
        on_path: &mut [bool],
        stack: &mut Vec<usize>,
        res: &mut Vec<PathWitness>,
        cap: u64,
    ) -> Result<()> {
        if v == g.sink && !stack.is_empty() {
            if res.len() as u64 >= cap {
                return Err(Error::GuardExceeded {
                    what: "simple paths".into(),
                    cap,
                });
            }
            res.push(PathWitness::from_edges(g, stack.clone()));
            return Ok(());
        }
        on_path[v] = true;
        for &ei in &out[v] {
            let w = g.edges[ei].to;
            if !on_path[w] || (w == g.sink && w == g.source) {
                stack.push(ei);
                dfs(g, out, w, on_path, stack, res, cap)?;
                stack.pop();
            }
        }
        on_path[v] = false;
        Ok(())
    }
    if g.source == g.sink {
        return Ok(res);
    }
    dfs(g, &out, g.source, &mut on_path, &mut stack, &mut res, cap)?;
    Ok(res)
}

/// The objective vectors of a list of paths.
pub fn path_points(paths: &[PathWitness]) -> PointSet {
    PointSet {
        dim: 2,
        points: paths.iter().map(PathWitness::point).collect(),
    }
}
