//! Simple undirected graphs on dense vertex ids `0..n`, the edge-list file
//! format, and the structural primitives the solvers are built from.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.iter().all(|v| !large.contains(v))
    }

    /// Membership mask of length `n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    pub fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        VertexSet::from(arr.to_vec())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge endpoints must satisfy u < v, got {u} {v}")]
    UnorderedEdge { line: usize, u: usize, v: usize },
    #[error("header declares {expected} edges but {found} edge lines follow")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexNotInGraph { vertex: usize, n: usize },
    #[error("the cut set must be a proper subset of the vertex set")]
    CutIsWholeGraph,
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Endpoint order within an edge does
    /// not matter; self-loops, duplicates and out-of-range ids are rejected.
    /// Errors report the 1-based position of the offending edge as `line`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (idx, (u, v)) in edges.into_iter().enumerate() {
            let line = idx + 1;
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            list.push((u.min(v), u.max(v), line));
        }
        if let Some((u, v, line)) = first_duplicate(&list) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        Ok(Self::from_checked_edges(n, &list))
    }

    fn from_checked_edges(n: usize, edges: &[(usize, usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Graph { adj, m: edges.len() }
    }

    /// Builds a graph from adjacency lists that are already sorted,
    /// symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, m };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&v| v < n && v != u && self.adj[v].binary_search(&u).is_ok())
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self).len() == 1
    }

    pub fn check_vertex_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.max() {
            Some(v) if v >= self.n() => Err(GraphError::VertexNotInGraph { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    /// Hex SHA-256 of the canonical edge-list serialization.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(serialize_graph(self).as_bytes()))
    }
}

/// Parses the edge-list format: a header line `n m`, then exactly `m`
/// lines `u v` with `0 <= u < v < n`. Lines are LF-terminated.
pub fn parse_graph(text: &[u8]) -> Result<Graph, GraphError> {
    let text = String::from_utf8_lossy(text);
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (n, m) = match lines.next() {
        Some((line, header)) => parse_pair(header).ok_or(GraphError::MalformedHeader { line })?,
        None => return Err(GraphError::MalformedHeader { line: 1 }),
    };
    let mut edges = Vec::with_capacity(m.min(1 << 24));
    let mut tail_blank = false;
    for (line, body) in lines {
        if body.is_empty() {
            // only the terminating LF may produce an empty piece
            tail_blank = true;
            continue;
        }
        if tail_blank {
            return Err(GraphError::MalformedEdge { line: line - 1 });
        }
        let (u, v) = parse_pair(body).ok_or(GraphError::MalformedEdge { line })?;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if u > v {
            return Err(GraphError::UnorderedEdge { line, u, v });
        }
        edges.push((u, v, line));
    }
    if let Some((u, v, line)) = first_duplicate(&edges) {
        return Err(GraphError::DuplicateEdge { line, u, v });
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    Ok(Graph::from_checked_edges(n, &edges))
}

/// Earliest line that repeats an edge seen before it.
fn first_duplicate(edges: &[(usize, usize, usize)]) -> Option<(usize, usize, usize)> {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted
        .windows(2)
        .filter(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        .map(|w| w[1])
        .min_by_key(|&(_, _, line)| line)
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split(' ');
    let a = parse_decimal(it.next()?)?;
    let b = parse_decimal(it.next()?)?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub(crate) fn parse_decimal(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical edge-list text: header, then edges sorted lexicographically.
pub fn serialize_graph(g: &Graph) -> String {
    use std::fmt::Write;
    let mut out = String::with_capacity(16 + g.m() * 12);
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Local-to-global id map of an induced subgraph. Local ids follow the
/// ascending order of the global ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabelling {
    to_global: Vec<usize>,
}

impl Relabelling {
    pub fn to_global(&self, local: usize) -> usize {
        self.to_global[local]
    }

    pub fn to_local(&self, global: usize) -> Option<usize> {
        self.to_global.binary_search(&global).ok()
    }

    pub fn globals(&self) -> &[usize] {
        &self.to_global
    }

    pub fn len(&self) -> usize {
        self.to_global.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_global.is_empty()
    }
}

/// `G[s]`, relabelled to `0..|s|` in ascending order of the original ids.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Relabelling), GraphError> {
    g.check_vertex_set(s)?;
    let mut scratch = vec![usize::MAX; g.n()];
    Ok(induced_with_scratch(g, s.as_slice(), &mut scratch))
}

/// `scratch` must have length `g.n()` and hold `usize::MAX` everywhere; it
/// is restored before returning.
pub(crate) fn induced_with_scratch(g: &Graph, members: &[usize], scratch: &mut [usize]) -> (Graph, Relabelling) {
    for (i, &v) in members.iter().enumerate() {
        scratch[v] = i;
    }
    let adj = members
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| scratch[w]).filter(|&l| l != usize::MAX).collect())
        .collect();
    for &v in members {
        scratch[v] = usize::MAX;
    }
    (Graph::from_sorted_adjacency(adj), Relabelling { to_global: members.to_vec() })
}

/// Connected components, each sorted, listed by least member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_avoiding(g, &vec![false; g.n()])
}

fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<VertexSet> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push(VertexSet::from(comp));
    }
    out
}

/// Components of `g - c`.
pub fn components_without(g: &Graph, c: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
    g.check_vertex_set(c)?;
    Ok(components_avoiding(g, &c.to_mask(g.n())))
}

/// Whether `g - c` has at least two components.
pub fn is_vertex_cut(g: &Graph, c: &VertexSet) -> Result<bool, GraphError> {
    g.check_vertex_set(c)?;
    if c.len() == g.n() {
        return Err(GraphError::CutIsWholeGraph);
    }
    Ok(components_without(g, c)?.len() >= 2)
}

/// Index map of a strong product: `(u, u')` lives at `u * n_h + u'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndex {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductIndex {
    pub fn index(&self, u: usize, u2: usize) -> usize {
        u * self.n_h + u2
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        (idx / self.n_h, idx % self.n_h)
    }
}

/// `g ⊠ h`: `(u,u')` and `(v,v')` are adjacent when they differ and each
/// coordinate is equal or adjacent.
pub fn strong_product(g: &Graph, h: &Graph) -> (Graph, ProductIndex) {
    let idx = ProductIndex { n_g: g.n(), n_h: h.n() };
    let closed = |graph: &Graph, v: usize| -> Vec<usize> {
        let mut c = graph.neighbors(v).to_vec();
        let pos = c.binary_search(&v).unwrap_err();
        c.insert(pos, v);
        c
    };
    let closed_h: Vec<Vec<usize>> = h.vertices().map(|v| closed(h, v)).collect();
    let mut adj = Vec::with_capacity(g.n() * h.n());
    for u in g.vertices() {
        let ng = closed(g, u);
        for u2 in h.vertices() {
            let mut list = Vec::with_capacity(ng.len() * closed_h[u2].len());
            for &v in &ng {
                for &v2 in &closed_h[u2] {
                    if (v, v2) != (u, u2) {
                        list.push(idx.index(v, v2));
                    }
                }
            }
            adj.push(list);
        }
    }
    (Graph::from_sorted_adjacency(adj), idx)
}
