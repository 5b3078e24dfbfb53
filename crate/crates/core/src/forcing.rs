//! The zero forcing process.
//!
//! A blue vertex with exactly one white neighbour forces that neighbour
//! blue. Both entry points keep a per-vertex count of white neighbours so
//! each edge is touched a constant number of times.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use thiserror::Error;

use crate::arcs::ArcSet;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("initial set is not a zero forcing set; {} vertices stay white", white.len())]
    NotZeroForcing { white: VertexSet },
}

/// Final colouring of a run together with the forces that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub blue: VertexSet,
    pub white: VertexSet,
    /// `(forcer, forced)` in the order the forces happened.
    pub history: Vec<(usize, usize)>,
}

struct Process<'g> {
    g: &'g Graph,
    blue: Vec<bool>,
    white_count: Vec<usize>,
}

impl<'g> Process<'g> {
    fn new(g: &'g Graph, initial: &VertexSet) -> Self {
        assert!(initial.max().is_none_or(|v| v < g.n()), "initial set has a vertex outside the graph");
        let blue = initial.to_mask(g.n());
        let white_count = g.vertices().map(|v| g.neighbors(v).iter().filter(|&&w| !blue[w]).count()).collect();
        Process { g, blue, white_count }
    }

    /// The unique white neighbour of an eligible vertex.
    fn white_neighbour(&self, u: usize) -> usize {
        *self.g.neighbors(u).iter().find(|&&w| !self.blue[w]).expect("eligible vertex has a white neighbour")
    }

    /// Colours `v` and reports every blue vertex that just became eligible.
    fn colour(&mut self, v: usize, mut eligible: impl FnMut(usize)) {
        self.blue[v] = true;
        for &w in self.g.neighbors(v) {
            self.white_count[w] -= 1;
            if self.blue[w] && self.white_count[w] == 1 {
                eligible(w);
            }
        }
        if self.white_count[v] == 1 {
            eligible(v);
        }
    }

    fn initially_eligible(&self) -> impl Iterator<Item = usize> + '_ {
        self.g.vertices().filter(|&v| self.blue[v] && self.white_count[v] == 1)
    }
}

/// Runs the colour change rule from `s` until no force is possible.
///
/// # Panics
/// If `s` contains a vertex outside `g`.
pub fn closure(g: &Graph, s: &VertexSet) -> Colouring {
    let mut p = Process::new(g, s);
    let mut queue: VecDeque<usize> = p.initially_eligible().collect();
    let mut history = Vec::new();
    while let Some(u) = queue.pop_front() {
        if p.white_count[u] != 1 {
            continue;
        }
        let v = p.white_neighbour(u);
        history.push((u, v));
        p.colour(v, |w| queue.push_back(w));
    }
    let blue = VertexSet::from_mask(&p.blue);
    let white = g.vertices().filter(|&v| !p.blue[v]).collect();
    Colouring { blue, white, history }
}

/// Vertices left white by the derived colouring of `s`. When non-empty
/// this is a fort.
pub fn white_set(g: &Graph, s: &VertexSet) -> VertexSet {
    closure(g, s).white
}

pub fn is_zero_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    white_set(g, s).is_empty()
}

/// Forcing arc set of `s` obtained by always letting the eligible blue
/// vertex of lowest id force next, one force per step.
pub fn canonical_fas(g: &Graph, s: &VertexSet) -> Result<ArcSet, ForcingError> {
    let mut p = Process::new(g, s);
    let mut heap: BinaryHeap<Reverse<usize>> = p.initially_eligible().map(Reverse).collect();
    let mut arcs = Vec::with_capacity(g.n() - s.len());
    while let Some(Reverse(u)) = heap.pop() {
        if p.white_count[u] != 1 {
            continue;
        }
        let v = p.white_neighbour(u);
        arcs.push((u, v));
        p.colour(v, |w| heap.push(Reverse(w)));
    }
    if arcs.len() + s.len() != g.n() {
        let white = g.vertices().filter(|&v| !p.blue[v]).collect();
        return Err(ForcingError::NotZeroForcing { white });
    }
    Ok(ArcSet::from_forces(g.n(), arcs))
}
