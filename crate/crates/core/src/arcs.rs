//! Arc sets over the edges of a graph, and the chain-twist test that
//! decides whether an arc set records a zero forcing process.
//!
//! An arc set is a *forcing arc set* when its arcs are exactly the forces
//! of some zero forcing process. Structurally that means two things: the
//! arcs form vertex-disjoint directed paths, and no cycle of the graph is
//! a *chain twist* — a cycle in which every edge not oriented forwards in
//! the arc set sits between two edges that are.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{components_without, induced_subgraph, is_vertex_cut, Graph, GraphError, VertexSet};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("arc ({u},{v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("arc ({u},{v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("arc ({u},{v}) appears twice")]
    DuplicateArc { u: usize, v: usize },
    #[error("arcs ({u},{v}) and ({v},{u}) are both present")]
    Bidirectional { u: usize, v: usize },
    #[error("arcs do not form vertex-disjoint directed paths")]
    NotDipaths,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cut set does not separate the graph")]
    NotACut,
    #[error("first part is not the vertex set of a component of the graph minus the cut")]
    NotAComponent,
    #[error("{part} arc set uses arc ({u},{v}) outside its side of the cut")]
    ArcOutsidePart { part: Part, u: usize, v: usize },
    #[error("{part} arc set is not a forcing arc set of its side")]
    PartNotForcing { part: Part },
    #[error("cut vertex {vertex} is not a source of the {part} arc set")]
    CutVertexNotSource { part: Part, vertex: usize },
}

/// Which side of a cut an arc set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    First,
    Second,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::First => "first",
            Part::Second => "second",
        })
    }
}

/// A unidirectional set of arcs `(tail, head)` over the edges of a graph
/// with `n` vertices. Arcs are kept sorted; degree counts are cached.
#[derive(Clone, PartialEq, Eq)]
pub struct ArcSet {
    n: usize,
    arcs: Vec<(usize, usize)>,
    in_deg: Vec<u32>,
    out_deg: Vec<u32>,
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.arcs.iter()).finish()
    }
}

impl ArcSet {
    pub fn empty(n: usize) -> Self {
        ArcSet { n, arcs: Vec::new(), in_deg: vec![0; n], out_deg: vec![0; n] }
    }

    /// Validates that every arc is an edge of `g`, that no arc repeats and
    /// that no edge is used in both directions.
    pub fn new<I>(g: &Graph, arcs: I) -> Result<Self, ArcError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = g.n();
        let mut list: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &list {
            if u >= n || v >= n {
                return Err(ArcError::VertexOutOfRange { u, v, n });
            }
            if !g.has_edge(u, v) {
                return Err(ArcError::NotAnEdge { u, v });
            }
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(ArcError::DuplicateArc { u: w[0].0, v: w[0].1 });
        }
        if let Some(&(u, v)) = list.iter().find(|&&(u, v)| u < v && list.binary_search(&(v, u)).is_ok()) {
            return Err(ArcError::Bidirectional { u, v });
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Arcs produced by a forcing run; trusted to be valid.
    pub(crate) fn from_forces(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        Self::from_sorted(n, arcs)
    }

    fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut in_deg = vec![0; n];
        let mut out_deg = vec![0; n];
        for &(u, v) in &arcs {
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        ArcSet { n, arcs, in_deg, out_deg }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_deg[v] as usize
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg[v] as usize
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> ArcSet {
        Self::from_forces(self.n, self.arcs.iter().map(|&(u, v)| (v, u)).collect())
    }

    /// The arcs for which `keep` holds. A subset of a forcing arc set is
    /// again a forcing arc set.
    pub fn subset_restrict(&self, mut keep: impl FnMut(usize, usize) -> bool) -> ArcSet {
        Self::from_sorted(self.n, self.arcs.iter().copied().filter(|&(u, v)| keep(u, v)).collect())
    }

    /// In- and out-degree at most one everywhere, and no directed cycle.
    pub fn satisfies_p1(&self) -> bool {
        if self.in_deg.iter().chain(&self.out_deg).any(|&d| d > 1) {
            return false;
        }
        // with degrees at most one, every arc not reachable from a source lies on a cycle
        let succ = self.successors();
        let mut walked = 0;
        for v in 0..self.n {
            if self.in_deg[v] == 0 {
                let mut u = v;
                while succ[u] != NONE {
                    walked += 1;
                    u = succ[u];
                }
            }
        }
        walked == self.arcs.len()
    }

    fn successors(&self) -> Vec<usize> {
        let mut succ = vec![NONE; self.n];
        for &(u, v) in &self.arcs {
            succ[u] = v;
        }
        succ
    }

    pub fn sources(&self) -> Result<VertexSet, ArcError> {
        self.require_p1()?;
        Ok((0..self.n).filter(|&v| self.in_deg[v] == 0).collect())
    }

    pub fn sinks(&self) -> Result<VertexSet, ArcError> {
        self.require_p1()?;
        Ok((0..self.n).filter(|&v| self.out_deg[v] == 0).collect())
    }

    fn require_p1(&self) -> Result<(), ArcError> {
        if self.satisfies_p1() {
            Ok(())
        } else {
            Err(ArcError::NotDipaths)
        }
    }

    /// The directed paths of the arc set, one per source, each listed from
    /// source to sink, ordered by source.
    pub fn dipaths(&self) -> Result<Vec<Vec<usize>>, ArcError> {
        let succ = self.successors();
        let sources = self.sources()?;
        Ok(sources
            .iter()
            .map(|s| {
                let mut path = vec![s];
                let mut u = s;
                while succ[u] != NONE {
                    u = succ[u];
                    path.push(u);
                }
                path
            })
            .collect())
    }
}

/// `|a| <= n - Z(g)`, given the zero forcing number `z_exact`.
pub fn fas_size_bound_check(g: &Graph, a: &ArcSet, z_exact: usize) -> bool {
    a.len() + z_exact <= g.n()
}

/// One arc per line, `"u v"`, sorted.
pub fn serialize_arcs(a: &ArcSet) -> String {
    a.arcs().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// A cycle `cycle[0] .. cycle[k-1]` of the graph together with, for each
/// position `i`, whether `(cycle[i], cycle[i+1])` is an arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTwist {
    pub cycle: Vec<usize>,
    pub arc_flags: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistDefect {
    #[error("cycle has fewer than three vertices")]
    TooShort,
    #[error("flag count differs from cycle length")]
    FlagCount,
    #[error("vertex {0} repeats")]
    RepeatedVertex(usize),
    #[error("{u} {v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("flag at position {0} disagrees with the arc set")]
    FlagMismatch(usize),
    #[error("non-arc edge at position {0} is not flanked by arcs")]
    Unflanked(usize),
}

impl ChainTwist {
    /// Re-checks the witness from scratch against `g` and `a`.
    pub fn validate(&self, g: &Graph, a: &ArcSet) -> Result<(), TwistDefect> {
        let k = self.cycle.len();
        if k < 3 {
            return Err(TwistDefect::TooShort);
        }
        if self.arc_flags.len() != k {
            return Err(TwistDefect::FlagCount);
        }
        let mut sorted = self.cycle.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(TwistDefect::RepeatedVertex(w[0]));
        }
        for i in 0..k {
            let (u, v) = (self.cycle[i], self.cycle[(i + 1) % k]);
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(TwistDefect::NotAnEdge { u, v });
            }
            if a.contains(u, v) != self.arc_flags[i] {
                return Err(TwistDefect::FlagMismatch(i));
            }
        }
        match unflanked_position(&self.arc_flags) {
            Some(i) => Err(TwistDefect::Unflanked(i)),
            None => Ok(()),
        }
    }
}

fn unflanked_position(flags: &[bool]) -> Option<usize> {
    let k = flags.len();
    (0..k).find(|&i| !flags[i] && !(flags[(i + k - 1) % k] && flags[(i + 1) % k]))
}

/// Reduces a closed walk whose flags satisfy the twist condition to a
/// simple cycle that still does. Splitting the walk at a repeated vertex
/// leaves two closed walks, at least one of which keeps the condition.
/// Walks of length two (`u v u`) are never a valid result.
fn reduce_closed_walk(mut walk: Vec<usize>, in_a: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let flags_of = |w: &[usize]| -> Vec<bool> { (0..w.len()).map(|i| in_a(w[i], w[(i + 1) % w.len()])).collect() };
    let acceptable = |w: &[usize]| w.len() >= 3 && unflanked_position(&flags_of(w)).is_none();
    if !acceptable(&walk) {
        return None;
    }
    loop {
        let mut seen = std::collections::HashMap::new();
        let repeat = walk.iter().enumerate().find_map(|(t, &v)| seen.insert(v, t).map(|s| (s, t)));
        let Some((s, t)) = repeat else {
            return Some(walk);
        };
        let inner: Vec<usize> = walk[s..t].to_vec();
        let outer: Vec<usize> = walk[t..].iter().chain(&walk[..s]).copied().collect();
        walk = if acceptable(&inner) {
            inner
        } else if acceptable(&outer) {
            outer
        } else {
            return None;
        };
    }
}

/// `None` when `a` is a forcing arc set of `g`, otherwise a chain twist.
///
/// The arcs are replayed as forces starting from the sources, firing an
/// arc `(u,v)` only while `v` is the single white neighbour of `u`. If
/// white vertices remain, every stuck path has a last blue vertex `b` whose
/// successor is white and which has a second white neighbour `w`. When `w`
/// lies on the same path, that path segment closed by `w b` is the twist;
/// otherwise the map "path of `b` → path of `w`" has a cycle, and chaining
/// the path segments along it closes up into a twist.
pub fn find_chain_twist(g: &Graph, a: &ArcSet) -> Result<Option<ChainTwist>, ArcError> {
    let paths = a.dipaths()?;
    let n = g.n();
    let mut path_of = vec![NONE; n];
    let mut pos = vec![0usize; n];
    for (p, path) in paths.iter().enumerate() {
        for (i, &v) in path.iter().enumerate() {
            path_of[v] = p;
            pos[v] = i;
        }
    }
    let succ = |v: usize| paths[path_of[v]].get(pos[v] + 1).copied();

    let mut blue = vec![false; n];
    let mut white_count: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let colour = |v: usize, blue: &mut Vec<bool>, white_count: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
        blue[v] = true;
        queue.push_back(v);
        for &w in g.neighbors(v) {
            white_count[w] -= 1;
            if blue[w] {
                queue.push_back(w);
            }
        }
    };
    for path in &paths {
        colour(path[0], &mut blue, &mut white_count, &mut queue);
    }
    while let Some(u) = queue.pop_front() {
        if let Some(v) = succ(u) {
            if !blue[v] && white_count[u] == 1 {
                colour(v, &mut blue, &mut white_count, &mut queue);
            }
        }
    }
    if blue.iter().all(|&b| b) {
        return Ok(None);
    }

    // frontier of every stuck path, ordered by the blue vertex
    let mut frontier: Vec<(usize, usize)> = paths
        .iter()
        .filter_map(|path| {
            let i = path.iter().position(|&v| !blue[v])?;
            let b = path[i - 1];
            let w = *g.neighbors(b).iter().find(|&&w| !blue[w] && w != path[i]).expect("stuck vertex has two white neighbours");
            Some((b, w))
        })
        .collect();
    frontier.sort_unstable();

    let twist_from_walk = |walk: Vec<usize>| -> ChainTwist {
        let cycle = reduce_closed_walk(walk, |u, v| a.contains(u, v)).expect("walk satisfies the twist condition");
        let k = cycle.len();
        let arc_flags = (0..k).map(|i| a.contains(cycle[i], cycle[(i + 1) % k])).collect();
        ChainTwist { cycle, arc_flags }
    };
    let segment = |b: usize, w: usize| -> &[usize] { &paths[path_of[b]][pos[b]..=pos[w]] };

    if let Some(&(b, w)) = frontier.iter().find(|&&(b, w)| path_of[b] == path_of[w]) {
        return Ok(Some(twist_from_walk(segment(b, w).to_vec())));
    }

    let index_of_path: std::collections::HashMap<usize, usize> =
        frontier.iter().enumerate().map(|(i, &(b, _))| (path_of[b], i)).collect();
    let next = |i: usize| index_of_path[&path_of[frontier[i].1]];
    let mut visited_at = vec![NONE; frontier.len()];
    let mut order = Vec::new();
    let mut i = 0;
    while visited_at[i] == NONE {
        visited_at[i] = order.len();
        order.push(i);
        i = next(i);
    }
    let cyc = &order[visited_at[i]..];
    // the path entered by the w of cyc[j-1] is walked from its own b up to that w
    let l = cyc.len();
    let mut walk = Vec::new();
    for j in (0..l).rev() {
        let here = cyc[j];
        let from = cyc[(j + l - 1) % l];
        walk.extend_from_slice(segment(frontier[here].0, frontier[from].1));
    }
    let twist = twist_from_walk(walk);
    debug_assert_eq!(twist.validate(g, a), Ok(()));
    Ok(Some(twist))
}

/// Dipath structure and no chain twist.
pub fn is_forcing_arc_set(g: &Graph, a: &ArcSet) -> bool {
    a.satisfies_p1() && matches!(find_chain_twist(g, a), Ok(None))
}

/// Glues forcing arc sets across a vertex cut `c`.
///
/// `v1` must be the vertex set of one component of `g - c`; `a1` must be a
/// forcing arc set of `g[v1 ∪ c]` and `a2` one of `g[V \ v1]`, both given in
/// the vertex ids of `g`, with every cut vertex a source of both. The
/// result `a1 ∪ reverse(a2)` is a forcing arc set of `g`.
pub fn merge_via_cut(g: &Graph, c: &VertexSet, v1: &VertexSet, a1: &ArcSet, a2: &ArcSet) -> Result<ArcSet, ArcError> {
    g.check_vertex_set(v1)?;
    if c.len() == g.n() || !is_vertex_cut(g, c)? {
        return Err(ArcError::NotACut);
    }
    if !components_without(g, c)?.contains(v1) {
        return Err(ArcError::NotAComponent);
    }
    let side1 = v1.union(c);
    let side2 = g.vertex_set().difference(v1);
    for (part, side, a) in [(Part::First, &side1, a1), (Part::Second, &side2, a2)] {
        if a.vertex_count() != g.n() {
            return Err(ArcError::PartNotForcing { part });
        }
        if let Some(&(u, v)) = a.arcs().iter().find(|&&(u, v)| !side.contains(u) || !side.contains(v)) {
            return Err(ArcError::ArcOutsidePart { part, u, v });
        }
        let (sub, map) = induced_subgraph(g, side)?;
        let local = ArcSet::new(&sub, a.arcs().iter().map(|&(u, v)| (map.to_local(u).unwrap(), map.to_local(v).unwrap())))
            .map_err(|_| ArcError::PartNotForcing { part })?;
        if !is_forcing_arc_set(&sub, &local) {
            return Err(ArcError::PartNotForcing { part });
        }
        if let Some(vertex) = c.iter().find(|&v| a.in_degree(v) > 0) {
            return Err(ArcError::CutVertexNotSource { part, vertex });
        }
    }
    let merged = ArcSet::new(g, a1.arcs().iter().copied().chain(a2.arcs().iter().map(|&(u, v)| (v, u))))?;
    debug_assert!(is_forcing_arc_set(g, &merged));
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{canonical_fas, is_zero_forcing_set};
    use crate::generators::{complete, cycle, path};

    fn arcs(g: &Graph, list: &[(usize, usize)]) -> ArcSet {
        ArcSet::new(g, list.iter().copied()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        let g = path(3);
        assert_eq!(ArcSet::new(&g, [(0, 2)]), Err(ArcError::NotAnEdge { u: 0, v: 2 }));
        assert_eq!(ArcSet::new(&g, [(0, 1), (1, 0)]), Err(ArcError::Bidirectional { u: 0, v: 1 }));
        assert_eq!(ArcSet::new(&g, [(0, 1), (0, 1)]), Err(ArcError::DuplicateArc { u: 0, v: 1 }));
        assert!(matches!(ArcSet::new(&g, [(0, 5)]), Err(ArcError::VertexOutOfRange { .. })));
    }

    #[test]
    fn p1_examples() {
        assert!(arcs(&path(3), &[(0, 1), (1, 2)]).satisfies_p1());
        assert!(!arcs(&complete(3), &[(0, 1), (1, 2), (2, 0)]).satisfies_p1());
        assert!(!arcs(&path(3), &[(1, 0), (1, 2)]).satisfies_p1());
        assert!(!arcs(&path(3), &[(0, 1), (2, 1)]).satisfies_p1());
        assert_eq!(arcs(&complete(3), &[(0, 1), (1, 2), (2, 0)]).sources(), Err(ArcError::NotDipaths));
    }

    #[test]
    fn sources_and_sinks() {
        let g = path(3);
        let a = arcs(&g, &[(0, 1), (1, 2)]);
        assert_eq!(a.sources().unwrap(), VertexSet::from([0]));
        assert_eq!(a.sinks().unwrap(), VertexSet::from([2]));
        let e = ArcSet::empty(3);
        assert_eq!(e.sources().unwrap(), g.vertex_set());
        assert_eq!(e.sinks().unwrap(), g.vertex_set());
        let a = arcs(&g, &[(0, 1)]);
        assert_eq!(a.sources().unwrap(), VertexSet::from([0, 2]));
        assert_eq!(a.sinks().unwrap(), VertexSet::from([1, 2]));
    }

    #[test]
    fn reversal() {
        let g = path(3);
        let a = arcs(&g, &[(0, 1), (1, 2)]);
        assert_eq!(a.reversed().arcs(), &[(1, 0), (2, 1)]);
        assert_eq!(a.reversed().reversed(), a);
        assert!(ArcSet::empty(4).reversed().is_empty());
        let g = Graph::from_edges(8, [(3, 7)]).unwrap();
        assert_eq!(arcs(&g, &[(3, 7)]).reversed().arcs(), &[(7, 3)]);
    }

    #[test]
    fn triangle_chain_is_twisted() {
        let g = complete(3);
        let a = arcs(&g, &[(0, 1), (1, 2)]);
        let t = find_chain_twist(&g, &a).unwrap().unwrap();
        assert_eq!(t.cycle, vec![0, 1, 2]);
        assert_eq!(t.arc_flags, vec![true, true, false]);
        assert_eq!(t.validate(&g, &a), Ok(()));
        assert!(!is_forcing_arc_set(&g, &a));
    }

    #[test]
    fn path_chain_is_forcing() {
        let g = path(3);
        assert_eq!(find_chain_twist(&g, &arcs(&g, &[(0, 1), (1, 2)])).unwrap(), None);
        assert!(is_forcing_arc_set(&g, &ArcSet::empty(3)));
        assert!(!is_forcing_arc_set(&complete(3), &arcs(&complete(3), &[(0, 1), (1, 2), (2, 0)])));
    }

    /// Three parallel dipaths, each blocked by a rung to a later vertex of
    /// the next path.
    #[test]
    fn three_blocked_dipaths_give_a_twist_through_all_of_them() {
        // paths 0->1->2, 3->4->5, 6->7->8; rungs 1-5, 4-8, 7-2
        let g = Graph::from_edges(9, [(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8), (1, 5), (4, 8), (2, 7)]).unwrap();
        let a = arcs(&g, &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)]);
        let t = find_chain_twist(&g, &a).unwrap().unwrap();
        assert_eq!(t.validate(&g, &a), Ok(()));
        for path in [[0, 1, 2], [3, 4, 5], [6, 7, 8]] {
            assert!(path.iter().any(|v| t.cycle.contains(v)));
        }
        assert_eq!(t.arc_flags.iter().filter(|&&f| !f).count(), 3);
    }

    #[test]
    fn closed_walk_reduction_picks_the_valid_half() {
        // figure eight through 0: triangle 0 1 2 and triangle 0 3 4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        // 2 -> 0 -> 1 and 3 -> 4; the walk enters 0 on an arc once and leaves on one once
        let a = arcs(&g, &[(0, 1), (2, 0), (3, 4)]);
        let walk = vec![0, 1, 2, 0, 3, 4];
        let cycle = reduce_closed_walk(walk, |u, v| a.contains(u, v)).unwrap();
        let k = cycle.len();
        let t = ChainTwist { arc_flags: (0..k).map(|i| a.contains(cycle[i], cycle[(i + 1) % k])).collect(), cycle };
        assert_eq!(t.validate(&g, &a), Ok(()));
        assert_eq!(t.cycle, vec![0, 1, 2]);
        // a walk violating the condition is refused
        assert_eq!(reduce_closed_walk(vec![0, 3, 4], |u, v| a.contains(u, v)), None);
        // the back-and-forth walk is not a cycle
        assert_eq!(reduce_closed_walk(vec![0, 1], |u, v| a.contains(u, v)), None);
    }

    #[test]
    fn twist_validation_catches_defects() {
        let g = complete(3);
        let a = arcs(&g, &[(0, 1), (1, 2)]);
        let bad = |cycle: Vec<usize>, arc_flags: Vec<bool>| ChainTwist { cycle, arc_flags }.validate(&g, &a);
        assert_eq!(bad(vec![0, 1], vec![true, false]), Err(TwistDefect::TooShort));
        assert_eq!(bad(vec![0, 1, 1], vec![true, false, false]), Err(TwistDefect::RepeatedVertex(1)));
        assert_eq!(bad(vec![0, 1, 2], vec![true, false, false]), Err(TwistDefect::FlagMismatch(1)));
        let b = arcs(&g, &[(0, 1)]);
        assert_eq!(
            ChainTwist { cycle: vec![0, 1, 2], arc_flags: vec![true, false, false] }.validate(&g, &b),
            Err(TwistDefect::Unflanked(1))
        );
    }

    #[test]
    fn merge_on_path_of_three() {
        let g = path(3);
        let c = VertexSet::from([1]);
        let a1 = arcs(&g, &[(1, 0)]);
        let a2 = arcs(&g, &[(1, 2)]);
        let m = merge_via_cut(&g, &c, &VertexSet::from([0]), &a1, &a2).unwrap();
        assert_eq!(m.arcs(), &[(1, 0), (2, 1)]);
        assert_eq!(m.sources().unwrap(), VertexSet::from([2]));
        assert!(is_forcing_arc_set(&g, &m));
    }

    #[test]
    fn merge_on_path_of_five() {
        let g = path(5);
        let a1 = arcs(&g, &[(2, 1), (1, 0)]);
        let a2 = arcs(&g, &[(2, 3), (3, 4)]);
        let m = merge_via_cut(&g, &VertexSet::from([2]), &VertexSet::from([0, 1]), &a1, &a2).unwrap();
        assert_eq!(m.arcs(), &[(1, 0), (2, 1), (3, 2), (4, 3)]);
        assert_eq!(m.dipaths().unwrap(), vec![vec![4, 3, 2, 1, 0]]);
        assert!(is_forcing_arc_set(&g, &m));
    }

    #[test]
    fn merge_preconditions_each_have_an_error() {
        let g = path(3);
        let c = VertexSet::from([1]);
        let v1 = VertexSet::from([0]);
        let a1 = arcs(&g, &[(1, 0)]);
        let a2 = arcs(&g, &[(1, 2)]);
        assert_eq!(
            merge_via_cut(&g, &c, &v1, &a1, &arcs(&g, &[(2, 1)])),
            Err(ArcError::CutVertexNotSource { part: Part::Second, vertex: 1 })
        );
        assert_eq!(merge_via_cut(&g, &VertexSet::from([0]), &v1, &a1, &a2), Err(ArcError::NotACut));
        assert_eq!(merge_via_cut(&g, &c, &VertexSet::from([0, 2]), &a1, &a2), Err(ArcError::NotAComponent));
        assert_eq!(
            merge_via_cut(&g, &c, &v1, &arcs(&g, &[(1, 2)]), &a2),
            Err(ArcError::ArcOutsidePart { part: Part::First, u: 1, v: 2 })
        );
        let k = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let twisted = arcs(&k, &[(2, 0), (0, 1)]);
        assert_eq!(
            merge_via_cut(&k, &VertexSet::from([2]), &VertexSet::from([0, 1]), &twisted, &ArcSet::empty(5)),
            Err(ArcError::PartNotForcing { part: Part::First })
        );
    }

    #[test]
    fn restriction_keeps_forcing() {
        let g = cycle(6);
        let s = VertexSet::from([0, 1]);
        let a = canonical_fas(&g, &s).unwrap();
        assert!(a.subset_restrict(|_, _| false).is_empty());
        assert_eq!(a.subset_restrict(|_, _| true), a);
        let bag = VertexSet::from([3, 4]);
        let r = a.subset_restrict(|_, v| !bag.contains(v));
        assert!(is_forcing_arc_set(&g, &r));
        assert!(bag.is_subset(&r.sources().unwrap()));
    }

    #[test]
    fn size_bound_examples() {
        let p = path(6);
        let a = canonical_fas(&p, &VertexSet::from([0])).unwrap();
        assert_eq!(a.len(), 5);
        assert!(fas_size_bound_check(&p, &a, 1));
        assert!(fas_size_bound_check(&p, &ArcSet::empty(6), 1));
        let k = complete(5);
        let a = canonical_fas(&k, &VertexSet::from([0, 1, 2, 3])).unwrap();
        assert_eq!(a.len(), 1);
        assert!(fas_size_bound_check(&k, &a, 4));
        assert!(!fas_size_bound_check(&k, &arcs(&k, &[(0, 1), (2, 3)]), 4));
        assert!(is_zero_forcing_set(&k, &a.sources().unwrap()));
    }

    #[test]
    fn arc_serialization() {
        let g = path(3);
        assert_eq!(serialize_arcs(&arcs(&g, &[(2, 1), (0, 1)])), "0 1\n2 1\n");
    }
}
