//! Standard graph families and seeded random generators, each paired with a
//! path decomposition where one is known.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decomposition::PathDecomposition;
use crate::graph::{Graph, VertexSet};

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// The cycle on `n >= 3` vertices; smaller `n` gives a path.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("clique edges are valid")
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
}

/// Ladder with `rungs` rungs: vertices `2i` and `2i+1` form rung `i`.
pub fn ladder(rungs: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rungs {
        edges.push((2 * i, 2 * i + 1));
        if i + 1 < rungs {
            edges.push((2 * i, 2 * i + 2));
            edges.push((2 * i + 1, 2 * i + 3));
        }
    }
    Graph::from_edges(2 * rungs, edges).expect("ladder edges are valid")
}

/// Proper interval graph in which vertex `i` is adjacent to every `j` with
/// `i < j <= reach[i]`. `reach` must be non-decreasing with `reach[i] >= i`.
pub fn interval_from_reach(reach: &[usize]) -> Graph {
    let n = reach.len();
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..=reach[i]).map(move |j| (i, j)))).expect("reach stays in range")
}

/// Random non-decreasing reach vector of a connected proper interval graph
/// whose cliques have at most `max_span + 1` vertices.
pub fn random_reach<R: Rng>(n: usize, max_span: usize, rng: &mut R) -> Vec<usize> {
    let mut reach = Vec::with_capacity(n);
    let mut prev = 0;
    for i in 0..n {
        let lo = prev.max(i + 1).min(n - 1);
        let hi = (i + max_span.max(1)).min(n - 1).max(lo);
        let r = rng.gen_range(lo..=hi);
        reach.push(r);
        prev = r;
    }
    reach
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("sampled edges are valid")
}

/// Random connected graph: a uniformly random labelled spanning tree shape
/// (random attachment) plus each remaining pair independently with
/// probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("sampled edges are valid")
}

/// Benchmark families, each generated with a decomposition of known width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Ladder,
    Interval,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Path, Family::Cycle, Family::Ladder, Family::Interval];

    /// A member of the family with about `n` vertices, and a decomposition
    /// of it. Only the interval family uses `rng`.
    pub fn generate<R: Rng>(self, n: usize, rng: &mut R) -> (Graph, PathDecomposition) {
        let (g, bags): (Graph, Vec<VertexSet>) = match self {
            Family::Path => {
                let n = n.max(2);
                (path(n), (0..n - 1).map(|i| VertexSet::from([i, i + 1])).collect())
            }
            Family::Cycle => {
                let n = n.max(3);
                (cycle(n), (1..n - 1).map(|i| VertexSet::from([0, i, i + 1])).collect())
            }
            Family::Ladder => {
                let rungs = (n / 2).max(2);
                let mut bags = Vec::new();
                for i in 0..rungs - 1 {
                    bags.push(VertexSet::from([2 * i, 2 * i + 1, 2 * i + 2]));
                    bags.push(VertexSet::from([2 * i + 1, 2 * i + 2, 2 * i + 3]));
                }
                (ladder(rungs), bags)
            }
            Family::Interval => {
                let n = n.max(2);
                let reach = random_reach(n, 3, rng);
                let bags = (0..n - 1).map(|i| (i..=reach[i]).collect()).collect();
                (interval_from_reach(&reach), bags)
            }
        };
        let pd = PathDecomposition::new(&g, bags).expect("family decompositions are valid");
        (g, pd)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Ladder => "ladder",
            Family::Interval => "interval",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.to_string() == s).ok_or_else(|| format!("unknown family {s:?}"))
    }
}
