//! Text formats for point sets and graphs.
//!
//! Points: one per line, whitespace-separated rationals `a` or `a/b`.
//! Graphs: a header `n s t`, then one `u v cost delay` line per edge.
//! Blank lines and lines starting with `#` are skipped in both.

use std::fmt::Write as _;

use crate::bsp::{BiGraph, Edge};
use crate::error::{Error, Result};
use crate::point::{Point, PointSet};
use crate::rational::{fmt_rat, parse_rat, Rat};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn field(line: usize, tok: &str) -> Result<Rat> {
    parse_rat(tok).ok_or_else(|| perr(line, format!("bad rational {tok:?}")))
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut pts: Vec<Point> = Vec::new();
    for (ln, l) in content_lines(text) {
        let coords = l
            .split_whitespace()
            .map(|t| field(ln, t))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = pts.first() {
            if first.dim() != coords.len() {
                return Err(perr(
                    ln,
                    format!("expected {} coordinates, got {}", first.dim(), coords.len()),
                ));
            }
        }
        pts.push(Point::new(coords).map_err(|e| perr(ln, e.to_string()))?);
    }
    PointSet::new(pts)
}

pub fn write_points(p: &PointSet) -> String {
    let mut s = String::new();
    for q in p.iter() {
        let row: Vec<String> = q.coords.iter().map(fmt_rat).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| perr(line, format!("bad node id {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<BiGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 3 {
        return Err(perr(hl, "header must be `n s t`"));
    }
    let n = parse_usize(hl, h[0])?;
    let (s, t) = (parse_usize(hl, h[1])?, parse_usize(hl, h[2])?);
    if s >= n || t >= n {
        return Err(perr(hl, "source or sink out of range"));
    }
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 4 {
            return Err(perr(ln, "edge must be `u v cost delay`"));
        }
        let (u, v) = (parse_usize(ln, f[0])?, parse_usize(ln, f[1])?);
        if u >= n || v >= n {
            return Err(perr(ln, "edge endpoint out of range"));
        }
        let (cost, delay) = (field(ln, f[2])?, field(ln, f[3])?);
        if cost <= Rat::from_integer(0.into()) || delay <= Rat::from_integer(0.into()) {
            return Err(perr(ln, "edge weights must be positive"));
        }
        edges.push(Edge {
            from: u,
            to: v,
            cost,
            delay,
        });
    }
    BiGraph::new(n, s, t, edges)
}

pub fn write_graph(g: &BiGraph) -> String {
    let mut s = format!("{} {} {}\n", g.node_count, g.source, g.sink);
    for e in &g.edges {
        writeln!(
            s,
            "{} {} {} {}",
            e.from,
            e.to,
            fmt_rat(&e.cost),
            fmt_rat(&e.delay)
        )
        .unwrap();
    }
    s
}
