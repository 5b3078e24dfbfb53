//! The `(w+1)`-approximation for the zero forcing number.
//!
//! Given a nice path decomposition `X_0, ..., X_{k+1}` of width `w`, the
//! solver sweeps the bags left to right. Writing `G(t,z)` for the subgraph
//! induced by bags `t..=z`, it keeps a forcing arc set `A` of `G(0,t)` in
//! which every vertex of `X_t` is a source, and extends it as follows:
//!
//! 1. advance `z` from `t` while `X_t ∪ X_z` forces all of `G(t,z)`;
//! 2. reverse `A`;
//! 3. if some `z` fails, its white residue is a fort: record it, add the
//!    canonical arc set of `X_t ∪ X_{z-1}` in `G(t,z)` to `A`, drop arcs
//!    pointing into `X_z`, and continue from `t = z`;
//! 4. otherwise `z = k+1`: add the canonical arc set of `X_t` in `G(t,k+1)`
//!    and stop.
//!
//! The sources of `A` form the zero forcing set. Each fort adds at most
//! `w+1` sources and the forts are pairwise disjoint, which certifies
//! `|S| <= (w+1)|F|` and so `|S| <= (w+1) Z(G)`.
//!
//! Step 1 is the hot loop. Inserting a vertex into the bag cannot create a
//! failure, and deleting a vertex `d` fails exactly when the forcing
//! process from the smaller set never reaches `d`, so each check runs a
//! forcing process that stops as soon as `d` turns blue. The failing check
//! runs to exhaustion and yields the fort.

use thiserror::Error;

use crate::arcs::{find_chain_twist, is_forcing_arc_set, ArcSet, ChainTwist};
use crate::decomposition::{NicePathDecomposition, Step};
use crate::forcing::{canonical_fas, white_set};
use crate::graph::{induced_subgraph, induced_with_scratch, Graph, VertexSet};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("decomposition is for {found} vertices but the graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("edge {u} {v} is not contained in any bag")]
    UncoveredEdge { u: usize, v: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("iteration {iteration}: {detail}")]
    InvariantViolated { iteration: usize, detail: String },
}

/// Pairwise disjoint forts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FortPacking {
    pub forts: Vec<VertexSet>,
}

impl FortPacking {
    pub fn len(&self) -> usize {
        self.forts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forts.is_empty()
    }
}

/// Whether `f` is a fort of `g`: non-empty, and no vertex outside it has
/// exactly one neighbour inside. On failure, the offending vertex.
pub fn fort_violation(g: &Graph, f: &VertexSet) -> Option<FortDefect> {
    if f.is_empty() {
        return Some(FortDefect::Empty);
    }
    if let Some(v) = f.max().filter(|&v| v >= g.n()) {
        return Some(FortDefect::OutOfRange(v));
    }
    let inside = f.to_mask(g.n());
    g.vertices()
        .find(|&v| !inside[v] && g.neighbors(v).iter().filter(|&&w| inside[w]).count() == 1)
        .map(FortDefect::SingleNeighbour)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FortDefect {
    Empty,
    OutOfRange(usize),
    /// A vertex outside the set with exactly one neighbour in it.
    SingleNeighbour(usize),
}

/// Output of [`approximate_zero_forcing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub s: VertexSet,
    pub packing: FortPacking,
    pub fas: ArcSet,
    pub width_used: usize,
    /// `(t, z)` for each pass of the sweep.
    pub iterations: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxOptions {
    /// Re-derive every loop invariant after each pass and fail loudly if
    /// one breaks. Costs `O(n + m)` per pass.
    pub check_invariants: bool,
}

impl Default for ApproxOptions {
    fn default() -> Self {
        ApproxOptions { check_invariants: cfg!(debug_assertions) }
    }
}

pub fn approximate_zero_forcing(g: &Graph, npd: &NicePathDecomposition) -> Result<ApproxResult, ApproxError> {
    approximate_zero_forcing_with(g, npd, ApproxOptions::default())
}

pub fn approximate_zero_forcing_with(
    g: &Graph,
    npd: &NicePathDecomposition,
    opts: ApproxOptions,
) -> Result<ApproxResult, ApproxError> {
    if npd.vertex_count() != g.n() {
        return Err(ApproxError::VertexCountMismatch { expected: g.n(), found: npd.vertex_count() });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| npd.first(u) > npd.last(v) || npd.first(v) > npd.last(u)) {
        return Err(ApproxError::UncoveredEdge { u, v });
    }
    if !g.is_connected() {
        return Err(ApproxError::Disconnected);
    }
    Sweep::new(g, npd, opts).run()
}

/// Mutable state of one run. `A` lives in `succ`/`pred`; reversing it swaps
/// the two arrays. `S` is kept as the marked source set of `A` over the
/// vertices seen so far, with sinks tracked alongside so that reversal is a
/// swap as well.
struct Sweep<'a> {
    g: &'a Graph,
    npd: &'a NicePathDecomposition,
    opts: ApproxOptions,
    k: usize,
    succ: Vec<usize>,
    pred: Vec<usize>,
    in_s: Vec<bool>,
    is_sink: Vec<bool>,
    s_count: usize,
    seen: Vec<bool>,
    forts: Vec<VertexSet>,
    iterations: Vec<(usize, usize)>,
    probe: Probe,
    scratch: Vec<usize>,
}

/// Early-stopping forcing process on `G(t,z)`. Arrays are stamped with an
/// epoch so that each probe only pays for the vertices it touches.
struct Probe {
    epoch: u32,
    blue: Vec<u32>,
    counted: Vec<u32>,
    white_count: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> Sweep<'a> {
    fn new(g: &'a Graph, npd: &'a NicePathDecomposition, opts: ApproxOptions) -> Self {
        let n = g.n();
        Sweep {
            g,
            npd,
            opts,
            k: npd.k(),
            succ: vec![NONE; n],
            pred: vec![NONE; n],
            in_s: vec![false; n],
            is_sink: vec![false; n],
            s_count: 0,
            seen: vec![false; n],
            forts: Vec::new(),
            iterations: Vec::new(),
            probe: Probe { epoch: 0, blue: vec![0; n], counted: vec![0; n], white_count: vec![0; n], queue: Vec::new() },
            scratch: vec![NONE; n],
        }
    }

    fn run(mut self) -> Result<ApproxResult, ApproxError> {
        let width_used = self.npd.width();
        if self.g.n() == 0 {
            return Ok(ApproxResult {
                s: VertexSet::new(),
                packing: FortPacking::default(),
                fas: ArcSet::empty(0),
                width_used,
                iterations: Vec::new(),
            });
        }
        let mut t = 0;
        loop {
            let mut z = t;
            let mut white = None;
            while white.is_none() && z <= self.k {
                z += 1;
                white = self.white_after_step(t, z);
            }
            self.reverse();
            match white {
                Some(w) => {
                    let npd = self.npd;
                    self.forts.push(w);
                    let members = npd.union_members(t, z);
                    self.admit(&members);
                    for v in npd.bag(z - 1) {
                        self.mark_source(v);
                    }
                    self.merge_canonical(&members, &npd.bag(t).union(npd.bag(z - 1)));
                    for v in npd.bag(z) {
                        self.cut_arc_into(v);
                    }
                    self.iterations.push((t, z));
                    self.check(t, z, true)?;
                    t = z;
                }
                None => {
                    let npd = self.npd;
                    let members = npd.union_members(t, z);
                    self.admit(&members);
                    self.merge_canonical(&members, npd.bag(t));
                    self.iterations.push((t, z));
                    self.check(t, z, false)?;
                    break;
                }
            }
        }
        let s: VertexSet = self.g.vertices().filter(|&v| self.in_s[v]).collect();
        let arcs: Vec<(usize, usize)> =
            self.g.vertices().filter(|&u| self.succ[u] != NONE).map(|u| (u, self.succ[u])).collect();
        Ok(ApproxResult {
            s,
            packing: FortPacking { forts: self.forts },
            fas: ArcSet::from_forces(self.g.n(), arcs),
            width_used,
            iterations: self.iterations,
        })
    }

    /// `White(X_t ∪ X_z, G(t,z))` when non-empty, given that
    /// `X_t ∪ X_{z-1}` forces `G(t,z-1)`.
    fn white_after_step(&mut self, t: usize, z: usize) -> Option<VertexSet> {
        let d = match self.npd.step(z) {
            // the new vertex starts blue and every earlier force still applies
            Step::Insert(_) => return None,
            Step::Delete(d) => d,
        };
        if self.npd.bag(t).contains(d) {
            return None;
        }
        let (npd, g) = (self.npd, self.g);
        let start = npd.bag(t).iter().chain(npd.bag(z).iter());
        if self.probe.reaches(g, |v| npd.spans(v, t, z), start, Some(d)) {
            return None;
        }
        let whites: VertexSet = npd.union_members(t, z).into_iter().filter(|&v| !self.probe.is_blue(v)).collect();
        Some(whites)
    }

    /// Reverses `A`. A set of dipaths has as many sources as sinks, so the
    /// source count carries over.
    fn reverse(&mut self) {
        std::mem::swap(&mut self.succ, &mut self.pred);
        std::mem::swap(&mut self.in_s, &mut self.is_sink);
    }

    /// Brings the not-yet-seen vertices of `members` into the vertex set
    /// of `A` as isolated vertices.
    fn admit(&mut self, members: &[usize]) {
        for &v in members {
            if !self.seen[v] {
                self.seen[v] = true;
                self.in_s[v] = true;
                self.is_sink[v] = true;
                self.s_count += 1;
            }
        }
    }

    fn mark_source(&mut self, v: usize) {
        if !self.in_s[v] {
            self.in_s[v] = true;
            self.s_count += 1;
        }
    }

    fn add_arc(&mut self, u: usize, v: usize) {
        debug_assert!(self.succ[u] == NONE && self.pred[v] == NONE);
        self.succ[u] = v;
        self.pred[v] = u;
        if self.in_s[v] {
            self.in_s[v] = false;
            self.s_count -= 1;
        }
        self.is_sink[u] = false;
    }

    fn cut_arc_into(&mut self, v: usize) {
        let u = self.pred[v];
        if u != NONE {
            self.pred[v] = NONE;
            self.succ[u] = NONE;
            self.is_sink[u] = true;
            self.mark_source(v);
        }
    }

    /// Adds the canonical forcing arc set of `start` in `G[members]`.
    fn merge_canonical(&mut self, members: &[usize], start: &VertexSet) {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        let (sub, map) = induced_with_scratch(self.g, &sorted, &mut self.scratch);
        let local: VertexSet = start.iter().map(|v| map.to_local(v).expect("bag lies inside the union")).collect();
        let fas = canonical_fas(&sub, &local).expect("start set forces the window");
        for &(u, v) in fas.arcs() {
            self.add_arc(map.to_global(u), map.to_global(v));
        }
    }

    /// Re-derives the invariants of pass `j = iterations.len()` from
    /// scratch.
    fn check(&self, t: usize, z: usize, found_fort: bool) -> Result<(), ApproxError> {
        if !self.opts.check_invariants {
            return Ok(());
        }
        let j = self.iterations.len();
        let fail = |detail: String| Err(ApproxError::InvariantViolated { iteration: j, detail });
        let npd = self.npd;
        let domain = npd.prefix_union(0, z).expect("indices in range");
        let (sub, map) = induced_subgraph(self.g, &domain).expect("domain lies in the graph");
        let local_arcs: Vec<(usize, usize)> = domain
            .iter()
            .filter(|&u| self.succ[u] != NONE)
            .map(|u| (map.to_local(u).unwrap(), map.to_local(self.succ[u]).unwrap()))
            .collect();
        let a = match ArcSet::new(&sub, local_arcs) {
            Ok(a) => a,
            Err(e) => return fail(format!("arc set is malformed: {e}")),
        };
        if !is_forcing_arc_set(&sub, &a) {
            return fail("arc set is not a forcing arc set of the swept subgraph".into());
        }
        let sources: VertexSet = a.sources().expect("checked above").iter().map(|v| map.to_global(v)).collect();
        let tracked: VertexSet = domain.iter().filter(|&v| self.in_s[v]).collect();
        if sources != tracked || tracked.len() != self.s_count {
            return fail(format!("tracked zero forcing set {tracked:?} differs from the sources {sources:?}"));
        }
        if !npd.bag(z).is_subset(&tracked) {
            return fail("current bag is not inside the zero forcing set".into());
        }
        if tracked.len() > (npd.width() + 1) * j {
            return fail(format!("zero forcing set has {} vertices after {j} passes", tracked.len()));
        }
        if found_fort {
            let fort = self.forts.last().expect("fort recorded");
            let window = npd.prefix_union(t, z).expect("indices in range");
            let (wsub, wmap) = induced_subgraph(self.g, &window).expect("window lies in the graph");
            let start: VertexSet = npd.bag(t).union(npd.bag(z)).iter().map(|v| wmap.to_local(v).unwrap()).collect();
            let expected: VertexSet = white_set(&wsub, &start).iter().map(|v| wmap.to_global(v)).collect();
            if *fort != expected {
                return fail(format!("fort {fort:?} differs from the residue {expected:?}"));
            }
            let outside = npd.bag(t).union(npd.bag(z));
            if fort.is_empty() || !fort.is_subset(&window) || !fort.is_disjoint(&outside) {
                return fail("fort escapes the window interior".into());
            }
            if !npd.bag(z).is_subset(npd.bag(z - 1)) || npd.bag(z).len() + 1 != npd.bag(z - 1).len() {
                return fail("failing step is not a deletion".into());
            }
        }
        Ok(())
    }
}

impl Probe {
    fn is_blue(&self, v: usize) -> bool {
        self.blue[v] == self.epoch
    }

    /// Runs the forcing process inside the subgraph picked out by `member`
    /// from `start`. With a `target`, stops and returns true as soon as it
    /// turns blue; otherwise runs to exhaustion.
    fn reaches(
        &mut self,
        g: &Graph,
        member: impl Fn(usize) -> bool,
        start: impl Iterator<Item = usize>,
        target: Option<usize>,
    ) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        for v in start {
            if self.blue[v] != epoch {
                self.blue[v] = epoch;
                self.queue.push(v);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            if self.counted[u] != epoch {
                self.counted[u] = epoch;
                self.white_count[u] =
                    g.neighbors(u).iter().filter(|&&w| member(w) && self.blue[w] != epoch).count();
            }
            if self.white_count[u] != 1 {
                continue;
            }
            let v = *g
                .neighbors(u)
                .iter()
                .find(|&&w| member(w) && self.blue[w] != epoch)
                .expect("counted white neighbour exists");
            self.blue[v] = epoch;
            if Some(v) == target {
                return true;
            }
            self.queue.push(v);
            for &w in g.neighbors(v) {
                if self.counted[w] == epoch && member(w) {
                    self.white_count[w] -= 1;
                    if self.blue[w] == epoch && self.white_count[w] == 1 {
                        self.queue.push(w);
                    }
                }
            }
        }
        false
    }
}

/// Outcome of one independently re-checked claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub name: &'static str,
    pub passed: bool,
    /// Witness of the failure, or a short summary on success.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.claims {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

pub const CLAIM_ZERO_FORCING: &str = "zero-forcing-set";
pub const CLAIM_FORTS: &str = "forts-valid";
pub const CLAIM_DISJOINT: &str = "forts-disjoint";
pub const CLAIM_RATIO: &str = "size-bound";
pub const CLAIM_ARCS: &str = "forcing-arc-set";

/// Re-checks a result using only the forcing process and the arc-set
/// tests: (1) `s` forces `g`; (2) every fort is a fort; (3) the forts are
/// pairwise disjoint; (4) `|s| <= (w+1)|F|`; (5) the arc set is a forcing
/// arc set whose sources are exactly `s`.
pub fn verify_result(g: &Graph, r: &ApproxResult) -> VerificationReport {
    let mut claims = Vec::with_capacity(5);

    let zf = if let Err(e) = g.check_vertex_set(&r.s) {
        Claim { name: CLAIM_ZERO_FORCING, passed: false, detail: e.to_string() }
    } else {
        let white = white_set(g, &r.s);
        if white.is_empty() {
            Claim { name: CLAIM_ZERO_FORCING, passed: true, detail: format!("{} vertices force the graph", r.s.len()) }
        } else {
            Claim { name: CLAIM_ZERO_FORCING, passed: false, detail: format!("vertices left white: {white:?}") }
        }
    };
    claims.push(zf);

    let bad_fort = r.packing.forts.iter().enumerate().find_map(|(i, f)| fort_violation(g, f).map(|d| (i, d)));
    claims.push(match bad_fort {
        None => Claim { name: CLAIM_FORTS, passed: true, detail: format!("{} forts", r.packing.len()) },
        Some((i, d)) => {
            let detail = match d {
                FortDefect::Empty => format!("fort {i} is empty"),
                FortDefect::OutOfRange(v) => format!("fort {i} contains vertex {v} outside the graph"),
                FortDefect::SingleNeighbour(v) => format!("vertex {v} has exactly one neighbour in fort {i}"),
            };
            Claim { name: CLAIM_FORTS, passed: false, detail }
        }
    });

    let mut owner = std::collections::HashMap::new();
    let clash = r.packing.forts.iter().enumerate().find_map(|(i, f)| {
        f.iter().find_map(|v| owner.insert(v, i).filter(|&j| j != i).map(|j| (j, i, v)))
    });
    claims.push(match clash {
        None => Claim { name: CLAIM_DISJOINT, passed: true, detail: "pairwise disjoint".into() },
        Some((i, j, v)) => {
            Claim { name: CLAIM_DISJOINT, passed: false, detail: format!("vertex {v} lies in forts {i} and {j}") }
        }
    });

    let bound = (r.width_used + 1) * r.packing.len();
    claims.push(Claim {
        name: CLAIM_RATIO,
        passed: r.s.len() <= bound,
        detail: format!("|S| = {} and (w+1)|F| = {} * {} = {bound}", r.s.len(), r.width_used + 1, r.packing.len()),
    });

    claims.push(check_arcs(g, r));
    VerificationReport { claims }
}

fn check_arcs(g: &Graph, r: &ApproxResult) -> Claim {
    let fail = |detail: String| Claim { name: CLAIM_ARCS, passed: false, detail };
    let a = match ArcSet::new(g, r.fas.arcs().iter().copied()) {
        Ok(a) => a,
        Err(e) => return fail(e.to_string()),
    };
    match find_chain_twist(g, &a) {
        Err(e) => return fail(e.to_string()),
        Ok(Some(ChainTwist { cycle, arc_flags })) => {
            return fail(format!("chain twist on cycle {cycle:?} with arc flags {arc_flags:?}"));
        }
        Ok(None) => {}
    }
    let sources = a.sources().expect("dipaths checked by the twist search");
    if sources != r.s {
        return fail(format!("sources {sources:?} differ from the zero forcing set"));
    }
    Claim { name: CLAIM_ARCS, passed: true, detail: format!("{} arcs, sources equal the zero forcing set", a.len()) }
}

/// Bounds on `Z(g)` certified by a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioCertificate {
    /// Number of disjoint forts, or 1 when the packing is empty but the
    /// graph is not.
    pub lower: usize,
    pub upper: usize,
    /// False when the packing is empty on a non-empty graph, so no ratio
    /// can be certified.
    pub bounded: bool,
}

pub fn ratio_certificate(r: &ApproxResult) -> RatioCertificate {
    match (r.packing.len(), r.s.len()) {
        (0, 0) => RatioCertificate { lower: 0, upper: 0, bounded: true },
        (0, upper) => RatioCertificate { lower: 1, upper, bounded: false },
        (lower, upper) => RatioCertificate { lower, upper, bounded: true },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{exact_pathwidth, make_nice, PathDecomposition};
    use crate::generators::{complete, cycle, path};

    fn solve(g: &Graph) -> ApproxResult {
        let (_, pd) = exact_pathwidth(g).unwrap();
        let nice = make_nice(g, &pd).unwrap();
        approximate_zero_forcing_with(g, &nice, ApproxOptions { check_invariants: true }).unwrap()
    }

    #[test]
    fn path_gets_one_vertex() {
        for n in 1..=9 {
            let r = solve(&path(n));
            assert!(verify_result(&path(n), &r).all_passed());
            assert!(r.s.len() <= 2 * r.packing.len());
            assert!(r.s.len() <= 2);
            assert_eq!(r.fas.len(), n - r.s.len());
        }
    }

    #[test]
    fn long_path_with_natural_decomposition() {
        let n = 2000;
        let g = path(n);
        let pd = PathDecomposition::new(&g, (0..n - 1).map(|i| VertexSet::from([i, i + 1])).collect()).unwrap();
        let nice = make_nice(&g, &pd).unwrap();
        let r = approximate_zero_forcing_with(&g, &nice, ApproxOptions { check_invariants: true }).unwrap();
        assert!(verify_result(&g, &r).all_passed());
        assert!(r.s.len() <= 2);
    }

    #[test]
    fn clique_with_single_bag() {
        for n in 2..=6 {
            let g = complete(n);
            let pd = PathDecomposition::new(&g, vec![g.vertex_set()]).unwrap();
            let nice = make_nice(&g, &pd).unwrap();
            let r = approximate_zero_forcing(&g, &nice).unwrap();
            assert!(verify_result(&g, &r).all_passed());
            assert!(r.s.len() >= n - 1);
            assert!(r.s.len() <= n * r.packing.len());
        }
    }

    #[test]
    fn four_cycle() {
        let g = cycle(4);
        let r = solve(&g);
        assert!(verify_result(&g, &r).all_passed());
        assert!(r.s.len() >= 2);
        assert!(r.s.len() <= 3 * r.packing.len());
    }

    #[test]
    fn empty_and_single_vertex() {
        let g = Graph::empty(0);
        let nice = make_nice(&g, &exact_pathwidth(&g).unwrap().1).unwrap();
        let r = approximate_zero_forcing(&g, &nice).unwrap();
        assert!(r.s.is_empty() && r.packing.is_empty());
        assert_eq!(ratio_certificate(&r), RatioCertificate { lower: 0, upper: 0, bounded: true });
        let r = solve(&Graph::empty(1));
        assert_eq!(r.s, VertexSet::from([0]));
        assert!(verify_result(&Graph::empty(1), &r).all_passed());
    }

    #[test]
    fn rejects_foreign_decomposition() {
        let g = path(4);
        let other = Graph::from_edges(4, [(0, 1), (2, 3), (1, 2), (0, 3)]).unwrap();
        let nice = make_nice(&g, &exact_pathwidth(&g).unwrap().1).unwrap();
        assert!(matches!(approximate_zero_forcing(&other, &nice), Err(ApproxError::UncoveredEdge { .. })));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let nice = make_nice(&split, &exact_pathwidth(&split).unwrap().1).unwrap();
        assert_eq!(approximate_zero_forcing(&split, &nice), Err(ApproxError::Disconnected));
    }

    #[test]
    fn tampering_is_caught_claim_by_claim() {
        let g = cycle(6);
        let r = solve(&g);
        assert!(verify_result(&g, &r).all_passed());

        let mut t = r.clone();
        // a single vertex never forces a cycle
        t.s = VertexSet::from([t.s.as_slice()[0]]);
        let report = verify_result(&g, &t);
        assert!(!report.claim(CLAIM_ZERO_FORCING).unwrap().passed);
        assert!(!report.claim(CLAIM_ARCS).unwrap().passed);

        let mut t = r.clone();
        let fort = &mut t.packing.forts[0];
        let keep: Vec<usize> = fort.iter().skip(1).collect();
        *fort = VertexSet::from(keep);
        if !fort.is_empty() {
            assert!(!verify_result(&g, &t).claim(CLAIM_FORTS).unwrap().passed);
        }

        let mut t = r.clone();
        t.packing.forts.push(t.packing.forts[0].clone());
        assert!(!verify_result(&g, &t).claim(CLAIM_DISJOINT).unwrap().passed);

        let mut t = r.clone();
        t.packing.forts.clear();
        assert!(!verify_result(&g, &t).claim(CLAIM_RATIO).unwrap().passed);
        assert!(!ratio_certificate(&t).bounded);
    }

    /// Literal transcription of the sweep with every White recomputed from
    /// scratch and every arc-set operation done on `ArcSet` values.
    fn reference(g: &Graph, npd: &NicePathDecomposition) -> (VertexSet, Vec<VertexSet>, ArcSet, Vec<(usize, usize)>) {
        let k = npd.k();
        let n = g.n();
        let window = |t: usize, z: usize| npd.prefix_union(t, z).unwrap();
        let white_in = |start: &VertexSet, t: usize, z: usize| {
            let w = window(t, z);
            let (sub, map) = induced_subgraph(g, &w).unwrap();
            let local: VertexSet = start.iter().map(|v| map.to_local(v).unwrap()).collect();
            white_set(&sub, &local).iter().map(|v| map.to_global(v)).collect::<VertexSet>()
        };
        let fas_in = |start: &VertexSet, t: usize, z: usize| {
            let w = window(t, z);
            let (sub, map) = induced_subgraph(g, &w).unwrap();
            let local: VertexSet = start.iter().map(|v| map.to_local(v).unwrap()).collect();
            canonical_fas(&sub, &local).unwrap().arcs().iter().map(|&(u, v)| (map.to_global(u), map.to_global(v))).collect::<Vec<_>>()
        };
        let (mut t, mut a, mut forts, mut its) = (0, ArcSet::empty(n), Vec::new(), Vec::new());
        loop {
            let mut z = t;
            let mut w = VertexSet::new();
            while w.is_empty() && z <= k {
                z += 1;
                w = white_in(&npd.bag(t).union(npd.bag(z)), t, z);
            }
            a = a.reversed();
            let seen = window(0, t);
            let s: VertexSet = seen.iter().filter(|&v| a.in_degree(v) == 0).collect();
            its.push((t, z));
            if !w.is_empty() {
                forts.push(w);
                // adding the bag to S is subsumed by the next source scan
                let extra = fas_in(&npd.bag(t).union(npd.bag(z - 1)), t, z);
                let merged = ArcSet::new(g, a.arcs().iter().copied().chain(extra)).unwrap();
                a = merged.subset_restrict(|_, v| !npd.bag(z).contains(v));
                t = z;
            } else {
                let extra = fas_in(npd.bag(t), t, z);
                a = ArcSet::new(g, a.arcs().iter().copied().chain(extra)).unwrap();
                return (s, forts, a, its);
            }
        }
    }

    #[test]
    fn matches_reference_transcription_on_small_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8 {
            for _ in 0..40 {
                let g = crate::generators::random_connected(n, 0.3, &mut rng);
                let (_, pd) = exact_pathwidth(&g).unwrap();
                let nice = make_nice(&g, &pd).unwrap();
                let r = approximate_zero_forcing_with(&g, &nice, ApproxOptions { check_invariants: true }).unwrap();
                let (s, forts, a, its) = reference(&g, &nice);
                assert_eq!(r.s, s, "{g:?}");
                assert_eq!(r.packing.forts, forts);
                assert_eq!(r.fas, a);
                assert_eq!(r.iterations, its);
            }
        }
    }
}
