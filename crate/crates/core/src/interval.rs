//! Proper interval graphs: umbrella orderings and minimum clique covers.
//!
//! An ordering `v_0, ..., v_{n-1}` is an *umbrella ordering* when every edge
//! `v_i v_j` with `i < j` spans a clique `{v_i, ..., v_j}`. A graph admits
//! one exactly when it is a proper interval graph. Orderings are found with
//! three lexicographic breadth-first sweeps, the second and third breaking
//! ties towards the vertex that came last in the previous sweep, and the
//! result is checked before it is returned.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("ordering is not an umbrella ordering: edge {u} {v} does not span a clique")]
    NotUmbrella { u: usize, v: usize },
}

const NONE: usize = usize::MAX;

struct Block {
    head: usize,
    tail: usize,
    prev: usize,
    next: usize,
    split: usize,
    stamp: usize,
}

/// Lexicographic BFS. Ties are broken towards the earliest vertex of
/// `initial`, using stable partition refinement.
pub fn lex_bfs(g: &Graph, initial: &[usize]) -> Vec<usize> {
    let n = g.n();
    assert_eq!(initial.len(), n);
    if n == 0 {
        return Vec::new();
    }
    // neighbours listed in `initial` order keep every block sorted by it
    let mut adj_by_rank: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &x in initial {
        for &y in g.neighbors(x) {
            adj_by_rank[y].push(x);
        }
    }

    let mut next_v = vec![NONE; n];
    let mut prev_v = vec![NONE; n];
    let mut block_of = vec![0usize; n];
    for w in initial.windows(2) {
        next_v[w[0]] = w[1];
        prev_v[w[1]] = w[0];
    }
    let mut blocks = vec![Block { head: initial[0], tail: initial[n - 1], prev: NONE, next: NONE, split: NONE, stamp: NONE }];
    let mut first = 0usize;
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);

    fn unlink(v: usize, b: usize, blocks: &mut [Block], next_v: &mut [usize], prev_v: &mut [usize]) {
        let (p, q) = (prev_v[v], next_v[v]);
        if p != NONE {
            next_v[p] = q;
        } else {
            blocks[b].head = q;
        }
        if q != NONE {
            prev_v[q] = p;
        } else {
            blocks[b].tail = p;
        }
        prev_v[v] = NONE;
        next_v[v] = NONE;
    }

    for step in 0..n {
        while blocks[first].head == NONE {
            first = blocks[first].next;
        }
        let pivot = blocks[first].head;
        unlink(pivot, first, &mut blocks, &mut next_v, &mut prev_v);
        visited[pivot] = true;
        order.push(pivot);

        for &w in &adj_by_rank[pivot] {
            if visited[w] {
                continue;
            }
            let b = block_of[w];
            if blocks[b].stamp != step {
                let nb = blocks.len();
                let before = blocks[b].prev;
                blocks.push(Block { head: NONE, tail: NONE, prev: before, next: b, split: NONE, stamp: step });
                if before != NONE {
                    blocks[before].next = nb;
                }
                // emptied blocks stay linked in front of `first`
                if b == first {
                    first = nb;
                }
                blocks[b].prev = nb;
                blocks[b].stamp = step;
                blocks[b].split = nb;
            }
            let nb = blocks[b].split;
            unlink(w, b, &mut blocks, &mut next_v, &mut prev_v);
            let t = blocks[nb].tail;
            if t == NONE {
                blocks[nb].head = w;
            } else {
                next_v[t] = w;
                prev_v[w] = t;
            }
            blocks[nb].tail = w;
            block_of[w] = nb;
        }
    }
    order
}

/// An umbrella ordering of `g`, or `None` when `g` is not a proper interval
/// graph.
pub fn proper_interval_order(g: &Graph) -> Option<Vec<usize>> {
    let natural: Vec<usize> = g.vertices().collect();
    let mut sweep = lex_bfs(g, &natural);
    for _ in 0..2 {
        let reversed: Vec<usize> = sweep.iter().rev().copied().collect();
        sweep = lex_bfs(g, &reversed);
    }
    is_umbrella_order(g, &sweep).then_some(sweep)
}

/// Checks the umbrella property in `O(n + m)`: every closed neighbourhood
/// must be a contiguous range `[l(i), r(i)]` of positions with `l` and `r`
/// non-decreasing.
pub fn is_umbrella_order(g: &Graph, order: &[usize]) -> bool {
    umbrella_violation(g, order).is_ok()
}

fn positions(g: &Graph, order: &[usize]) -> Result<Vec<usize>, IntervalError> {
    let n = g.n();
    if order.len() != n {
        return Err(IntervalError::NotAPermutation);
    }
    let mut pos = vec![NONE; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != NONE {
            return Err(IntervalError::NotAPermutation);
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Right reach `r(i)` of every position, after validating the ordering.
fn umbrella_violation(g: &Graph, order: &[usize]) -> Result<Vec<usize>, IntervalError> {
    let pos = positions(g, order)?;
    let n = g.n();
    let mut reach = vec![0usize; n];
    let mut prev = (0usize, 0usize);
    for (i, &v) in order.iter().enumerate() {
        let (mut lo, mut hi) = (i, i);
        for &w in g.neighbors(v) {
            lo = lo.min(pos[w]);
            hi = hi.max(pos[w]);
        }
        let contiguous = hi - lo == g.degree(v);
        if !contiguous || lo < prev.0 || hi < prev.1 {
            return Err(first_bad_edge(g, order, &pos));
        }
        prev = (lo, hi);
        reach[i] = hi;
    }
    Ok(reach)
}

fn first_bad_edge(g: &Graph, order: &[usize], pos: &[usize]) -> IntervalError {
    for (i, &v) in order.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = pos[w];
            if j <= i {
                continue;
            }
            for a in i..=j {
                for b in a + 1..=j {
                    if !g.has_edge(order[a], order[b]) {
                        return IntervalError::NotUmbrella { u: v, v: w };
                    }
                }
            }
        }
    }
    // A non-contiguous neighbourhood always produces a bad edge above.
    IntervalError::NotUmbrella { u: order[0], v: order[0] }
}

/// Minimum clique cover of the edges of a proper interval graph, given an
/// umbrella ordering. The cliques are the maximal intervals
/// `{v_i, ..., v_r(i)}` with `r(i) > r(i-1)` and at least two vertices, in
/// order of their first position. Each owns the private edge `v_i v_r(i)`,
/// so none can be dropped.
pub fn minimum_clique_cover_interval(g: &Graph, order: &[usize]) -> Result<Vec<VertexSet>, IntervalError> {
    let reach = umbrella_violation(g, order)?;
    let mut cover = Vec::new();
    for i in 0..order.len() {
        let grows = i == 0 || reach[i] > reach[i - 1];
        if grows && reach[i] > i {
            cover.push(order[i..=reach[i]].iter().copied().collect());
        }
    }
    Ok(cover)
}
