//! Path decompositions: validation, conversion to nice form, the unions of
//! consecutive bags, and an exact pathwidth solver for small graphs.
//!
//! Bags are numbered `1..=k`; the empty bags `0` and `k+1` are implicit.
//! A decomposition is valid when every edge lies inside some bag and every
//! vertex occupies a contiguous run of bags. It is *nice* when, counting the
//! empty end bags, consecutive bags differ by exactly one vertex.

use thiserror::Error;

use crate::graph::{is_vertex_cut, parse_decimal, Graph, VertexSet};

/// Largest graph [`exact_pathwidth`] accepts by default.
pub const EXACT_PATHWIDTH_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("line {line}: malformed bag, expected space-separated vertex ids")]
    MalformedLine { line: usize },
    #[error("line {line}: empty bag")]
    EmptyBag { line: usize },
    #[error("line {line}: bag is not strictly increasing")]
    UnsortedBag { line: usize },
    #[error("bag {bag}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { bag: usize, vertex: usize, n: usize },
    #[error("vertex {vertex} is missing from bag {bag} but occurs on both sides of it")]
    Gap { vertex: usize, bag: usize },
    #[error("edge {u} {v} is not contained in any bag")]
    UncoveredEdge { u: usize, v: usize },
    #[error("vertex {vertex} is not contained in any bag")]
    UncoveredVertex { vertex: usize },
    #[error("decomposition is for {found} vertices but the graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("bag {bag} does not differ from its predecessor by exactly one vertex")]
    NotNice { bag: usize },
    #[error("an edgeless graph on several vertices has no nice decomposition of width 0")]
    WidthWouldGrow,
    #[error("bag range {i}..={j} is outside 0..={max}")]
    IndexOutOfRange { i: usize, j: usize, max: usize },
    #[error("bag {t} is neither an end set nor a vertex cut")]
    ClassificationMismatch { t: usize },
    #[error("exact pathwidth is limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
}

/// A validated path decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    n: usize,
    bags: Vec<VertexSet>,
}

impl PathDecomposition {
    /// Validates `bags` (listed in path order) against `g`. Empty bags are
    /// allowed here and dropped by [`make_nice`].
    pub fn new(g: &Graph, bags: Vec<VertexSet>) -> Result<Self, DecompositionError> {
        validate(g, &bags)?;
        Ok(PathDecomposition { n: g.n(), bags })
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Largest bag size minus one; 0 when there are no bags.
    pub fn width(&self) -> usize {
        width_of(&self.bags)
    }
}

fn width_of(bags: &[VertexSet]) -> usize {
    bags.iter().map(VertexSet::len).max().unwrap_or(1).saturating_sub(1)
}

/// Range, contiguity, edge coverage and vertex coverage, in that order.
fn validate(g: &Graph, bags: &[VertexSet]) -> Result<(Vec<usize>, Vec<usize>), DecompositionError> {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut first = vec![UNSEEN; n];
    let mut last = vec![UNSEEN; n];
    for (i, bag) in bags.iter().enumerate() {
        if let Some(v) = bag.max().filter(|&v| v >= n) {
            return Err(DecompositionError::VertexOutOfRange { bag: i + 1, vertex: v, n });
        }
    }
    for (i, bag) in bags.iter().enumerate() {
        let idx = i + 1;
        for v in bag {
            if first[v] == UNSEEN {
                first[v] = idx;
            } else if last[v] + 1 != idx {
                return Err(DecompositionError::Gap { vertex: v, bag: last[v] + 1 });
            }
            last[v] = idx;
        }
    }
    for (u, v) in g.edges() {
        let covered = first[u] != UNSEEN && first[v] != UNSEEN && first[u] <= last[v] && first[v] <= last[u];
        if !covered {
            return Err(DecompositionError::UncoveredEdge { u, v });
        }
    }
    if let Some(vertex) = (0..n).find(|&v| first[v] == UNSEEN) {
        return Err(DecompositionError::UncoveredVertex { vertex });
    }
    Ok((first, last))
}

/// Parses one bag per line, each a strictly increasing list of vertex ids,
/// and validates the result against `g`.
pub fn parse_decomposition(text: &[u8], g: &Graph) -> Result<PathDecomposition, DecompositionError> {
    let text = String::from_utf8_lossy(text);
    let mut pieces: Vec<&str> = text.split('\n').collect();
    if pieces.last() == Some(&"") {
        pieces.pop();
    }
    let mut bags = Vec::with_capacity(pieces.len());
    for (i, body) in pieces.iter().enumerate() {
        let line = i + 1;
        if body.is_empty() {
            return Err(DecompositionError::EmptyBag { line });
        }
        let ids: Vec<usize> =
            body.split(' ').map(parse_decimal).collect::<Option<_>>().ok_or(DecompositionError::MalformedLine { line })?;
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DecompositionError::UnsortedBag { line });
        }
        if let Some(&vertex) = ids.iter().find(|&&v| v >= g.n()) {
            return Err(DecompositionError::VertexOutOfRange { bag: line, vertex, n: g.n() });
        }
        bags.push(VertexSet::from_sorted(ids));
    }
    PathDecomposition::new(g, bags)
}

/// One bag per line, ids ascending, empty bags omitted.
pub fn serialize_decomposition(bags: &[VertexSet]) -> String {
    let mut out = String::new();
    for bag in bags.iter().filter(|b| !b.is_empty()) {
        let ids: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// How bag `i` arises from bag `i-1` in a nice decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Insert(usize),
    Delete(usize),
}

/// A validated nice path decomposition with per-vertex bag ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NicePathDecomposition {
    n: usize,
    bags: Vec<VertexSet>,
    first: Vec<usize>,
    last: Vec<usize>,
    steps: Vec<Step>,
    empty: VertexSet,
}

impl NicePathDecomposition {
    /// Validates `bags` as a nice decomposition of `g`.
    pub fn new(g: &Graph, bags: Vec<VertexSet>) -> Result<Self, DecompositionError> {
        let (first, last) = validate(g, &bags)?;
        let mut steps = Vec::with_capacity(bags.len() + 1);
        let empty = VertexSet::new();
        for i in 0..=bags.len() {
            if bags.is_empty() {
                break;
            }
            let prev = if i == 0 { &empty } else { &bags[i - 1] };
            let next = bags.get(i).unwrap_or(&empty);
            let step = match (next.difference(prev).as_slice(), prev.difference(next).as_slice()) {
                (&[a], &[]) => Step::Insert(a),
                (&[], &[d]) => Step::Delete(d),
                _ => return Err(DecompositionError::NotNice { bag: i + 1 }),
            };
            steps.push(step);
        }
        Ok(NicePathDecomposition { n: g.n(), bags, first, last, steps, empty })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of non-sentinel bags.
    pub fn k(&self) -> usize {
        self.bags.len()
    }

    /// Bag `i` for `0 <= i <= k+1`; the end bags are empty.
    pub fn bag(&self, i: usize) -> &VertexSet {
        match i {
            0 => &self.empty,
            i if i <= self.bags.len() => &self.bags[i - 1],
            _ => &self.empty,
        }
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn width(&self) -> usize {
        width_of(&self.bags)
    }

    /// The change from bag `i-1` to bag `i`, for `1 <= i <= k+1`.
    pub fn step(&self, i: usize) -> Step {
        self.steps[i - 1]
    }

    /// First bag containing `v`.
    pub fn first(&self, v: usize) -> usize {
        self.first[v]
    }

    /// Last bag containing `v`.
    pub fn last(&self, v: usize) -> usize {
        self.last[v]
    }

    /// Whether `v` lies in some bag `t..=z`.
    pub fn spans(&self, v: usize, t: usize, z: usize) -> bool {
        self.first[v] <= z && self.last[v] >= t
    }

    pub fn to_path_decomposition(&self) -> PathDecomposition {
        PathDecomposition { n: self.n, bags: self.bags.clone() }
    }

    /// Members of bags `i..=j`, unsorted: bag `i` plus every vertex
    /// inserted on the way to bag `j`.
    pub(crate) fn union_members(&self, i: usize, j: usize) -> Vec<usize> {
        let mut out = self.bag(i).as_slice().to_vec();
        for tau in i + 1..=j {
            if let Step::Insert(v) = self.step(tau) {
                out.push(v);
            }
        }
        out
    }

    /// Union of bags `i..=j`.
    pub fn prefix_union(&self, i: usize, j: usize) -> Result<VertexSet, DecompositionError> {
        let max = self.k() + 1;
        if i > j || j > max {
            return Err(DecompositionError::IndexOutOfRange { i, j, max });
        }
        Ok(VertexSet::from(self.union_members(i, j)))
    }
}

/// Whether a bag separates the graph or contains everything on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BagKind {
    EndSet,
    Cut,
}

/// Classifies bag `t` (`1 <= t <= k`) of a nice decomposition of a
/// connected graph. A bag that contains neither the union of the bags
/// before it nor the union of those after it must be a vertex cut; that is
/// re-checked directly.
pub fn classify_bag(g: &Graph, npd: &NicePathDecomposition, t: usize) -> Result<BagKind, DecompositionError> {
    if t == 0 || t > npd.k() {
        return Err(DecompositionError::IndexOutOfRange { i: t, j: t, max: npd.k() });
    }
    let bag = npd.bag(t);
    let before = npd.prefix_union(0, t - 1)?;
    let after = npd.prefix_union(t + 1, npd.k() + 1)?;
    if before.is_subset(bag) || after.is_subset(bag) {
        return Ok(BagKind::EndSet);
    }
    match is_vertex_cut(g, bag) {
        Ok(true) => Ok(BagKind::Cut),
        _ => Err(DecompositionError::ClassificationMismatch { t }),
    }
}

/// Converts a decomposition to nice form of the same width.
///
/// Empty bags and repeated consecutive bags are dropped. Between
/// consecutive bags the vertices leaving are deleted one at a time in
/// ascending order, then the vertices arriving are inserted in ascending
/// order. The first bag is built up from nothing and the last torn down.
/// Every vertex is inserted once and deleted once, so there are `2n - 1`
/// bags. When consecutive bags are disjoint (only possible for
/// disconnected graphs), the first arrival is inserted before the last
/// departure so that no interior bag becomes empty.
pub fn make_nice(g: &Graph, pd: &PathDecomposition) -> Result<NicePathDecomposition, DecompositionError> {
    if pd.vertex_count() != g.n() {
        return Err(DecompositionError::VertexCountMismatch { expected: g.n(), found: pd.vertex_count() });
    }
    let mut targets: Vec<&VertexSet> = Vec::new();
    for bag in pd.bags().iter().filter(|b| !b.is_empty()) {
        if targets.last() != Some(&bag) {
            targets.push(bag);
        }
    }
    let width = pd.width();
    let empty = VertexSet::new();
    let mut out: Vec<VertexSet> = Vec::with_capacity(2 * g.n());
    let mut cur = VertexSet::new();
    for (idx, target) in targets.iter().copied().chain(std::iter::once(&empty)).enumerate() {
        let leaving = cur.difference(target);
        let arriving = target.difference(&cur);
        let bridge = idx > 0 && !arriving.is_empty() && leaving.len() == cur.len();
        if bridge && width == 0 {
            return Err(DecompositionError::WidthWouldGrow);
        }
        let (leave_first, leave_last) = match (bridge, leaving.as_slice().split_last()) {
            (true, Some((last, rest))) => (rest.to_vec(), Some(*last)),
            _ => (leaving.as_slice().to_vec(), None),
        };
        for v in leave_first {
            cur = cur.difference(&VertexSet::from([v]));
            out.push(cur.clone());
        }
        let mut arrivals = arriving.iter();
        if let Some(d) = leave_last {
            let a = arrivals.next().expect("bridge has an arrival");
            cur.insert(a);
            out.push(cur.clone());
            cur = cur.difference(&VertexSet::from([d]));
            out.push(cur.clone());
        }
        for a in arrivals {
            cur.insert(a);
            out.push(cur.clone());
        }
    }
    // tearing down the last bag ends with the empty sentinel itself
    if out.last().is_some_and(VertexSet::is_empty) {
        out.pop();
    }
    NicePathDecomposition::new(g, out)
}

/// Minimum width over all path decompositions, with a witness.
pub fn exact_pathwidth(g: &Graph) -> Result<(usize, PathDecomposition), DecompositionError> {
    exact_pathwidth_limited(g, EXACT_PATHWIDTH_MAX_N)
}

/// As [`exact_pathwidth`] with an explicit vertex limit (at most 25).
///
/// Pathwidth equals the minimum over vertex orderings of the largest
/// boundary of a proper prefix, the boundary being the prefix vertices with
/// a neighbour outside it. `best[S]` is that minimum over orderings of `S`
/// placed first, filled in by a dynamic program over subsets.
pub fn exact_pathwidth_limited(g: &Graph, max_n: usize) -> Result<(usize, PathDecomposition), DecompositionError> {
    let n = g.n();
    if n > max_n.min(25) {
        return Err(DecompositionError::TooLarge { n, max: max_n.min(25) });
    }
    let nbr: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let boundary = |s: u32| -> u32 { (0..n).filter(|&v| s >> v & 1 == 1 && nbr[v] & !s & full != 0).count() as u32 };
    let states = 1usize << n;
    let mut best = vec![u32::MAX; states];
    let mut choice = vec![0u8; states];
    best[0] = 0;
    for s in 1..states as u32 {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cost = best[prev as usize].max(boundary(prev));
            if cost < best[s as usize] {
                best[s as usize] = cost;
                choice[s as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize];
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();

    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let reach: Vec<usize> = order.iter().map(|&v| g.neighbors(v).iter().map(|&w| pos[w]).max().unwrap_or(0)).collect();
    let bags: Vec<VertexSet> =
        (0..n).map(|i| (0..=i).filter(|&j| j == i || reach[j] >= i).map(|j| order[j]).collect()).collect();
    let pd = PathDecomposition::new(g, bags)?;
    let width = if n == 0 { 0 } else { best[full as usize] as usize };
    debug_assert_eq!(pd.width(), width);
    Ok((width, pd))
}
