//! Independent oracles and instance generators shared by the integration
//! tests. Nothing here calls into the library's forcing or arc-set code.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use zf_core::graph::{Graph, VertexSet};
use zf_core::ArcSet;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap()
}

/// Every labelled connected graph on `n` vertices.
pub fn connected_labelled(n: usize) -> Vec<Graph> {
    let p = pairs(n);
    (0u64..1 << p.len()).map(|m| from_mask(n, &p, m)).filter(|g| g.is_connected()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices: the labelled graphs whose edge mask is least among all
/// relabellings.
pub fn connected_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let p = pairs(n);
    let index = |u: usize, v: usize| p.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms.iter().map(|perm| p.iter().map(|&(u, v)| index(perm[u], perm[v])).collect()).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << p.len() {
        let canonical = images.iter().all(|img| {
            let mapped = img.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |m, (_, &j)| m | 1 << j);
            mapped >= mask
        });
        if canonical {
            let g = from_mask(n, &p, mask);
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Quadratic forcing closure straight from the colour change rule.
pub fn naive_forces(g: &Graph, s: &[usize]) -> bool {
    let mut blue = vec![false; g.n()];
    for &v in s {
        blue[v] = true;
    }
    loop {
        let step = g.vertices().find_map(|u| {
            let white: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !blue[w]).collect();
            (blue[u] && white.len() == 1).then(|| white[0])
        });
        match step {
            Some(v) => blue[v] = true,
            None => return blue.iter().all(|&b| b),
        }
    }
}

/// Whether `arcs` are exactly the forces of some run of the process from
/// the arc tails' complement of heads: in- and out-degree at most one, and
/// the restricted process that only lets `u` force its successor
/// colours every vertex. Forces only become more available as vertices
/// turn blue, so greedy simulation decides this.
pub fn restricted_simulation(g: &Graph, arcs: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut succ = vec![None; n];
    let mut has_pred = vec![false; n];
    for &(u, v) in arcs {
        if succ[u].is_some() || has_pred[v] {
            return false;
        }
        succ[u] = Some(v);
        has_pred[v] = true;
    }
    let mut blue: Vec<bool> = has_pred.iter().map(|&p| !p).collect();
    loop {
        let step = g.vertices().find_map(|u| {
            let v = succ[u]?;
            let ready = blue[u] && !blue[v] && g.neighbors(u).iter().all(|&w| w == v || blue[w]);
            ready.then_some(v)
        });
        match step {
            Some(v) => blue[v] = true,
            None => return blue.iter().all(|&b| b),
        }
    }
}

/// Random arc set whose digraph is a disjoint union of directed paths.
pub fn random_p1<R: Rng>(g: &Graph, rng: &mut R) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    let keep = rng.gen_range(0.0..=1.0);
    let mut succ = vec![usize::MAX; n];
    let mut pred = vec![usize::MAX; n];
    let mut out = Vec::new();
    for (a, b) in edges {
        if !rng.gen_bool(keep) {
            continue;
        }
        let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        if succ[u] != usize::MAX || pred[v] != usize::MAX {
            continue;
        }
        // the path ending at u must not start at v
        let mut start = u;
        while pred[start] != usize::MAX {
            start = pred[start];
        }
        if start == v {
            continue;
        }
        succ[u] = v;
        pred[v] = u;
        out.push((u, v));
    }
    out
}

/// Every arc set over the edges of `g`: each edge unused or used in one
/// of its two directions.
pub fn all_orientations(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = 3usize.pow(edges.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut arcs = Vec::new();
            for &(u, v) in &edges {
                match code % 3 {
                    1 => arcs.push((u, v)),
                    2 => arcs.push((v, u)),
                    _ => {}
                }
                code /= 3;
            }
            arcs
        })
        .collect()
}

/// Sources of a dipath arc set over `n` vertices.
pub fn sources_of(n: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut has_pred = vec![false; n];
    for &(_, v) in arcs {
        has_pred[v] = true;
    }
    (0..n).filter(|&v| !has_pred[v]).collect()
}

pub fn sinks_of(n: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut has_succ = vec![false; n];
    for &(u, _) in arcs {
        has_succ[u] = true;
    }
    (0..n).filter(|&v| !has_succ[v]).collect()
}

/// Size identities every certified forcing arc set must meet: one arc per
/// non-source, and the sinks force the graph too. Returns a description of
/// the first failure.
pub fn size_identities(g: &Graph, a: &ArcSet) -> Result<(), String> {
    let sources = sources_of(g.n(), a.arcs());
    if a.len() + sources.len() != g.n() {
        return Err(format!("{} arcs and {} sources on {} vertices", a.len(), sources.len(), g.n()));
    }
    if !naive_forces(g, &sources) {
        return Err("sources do not force".into());
    }
    if !naive_forces(g, &sinks_of(g.n(), a.arcs())) {
        return Err(format!("sinks of {:?} do not force", a.arcs()));
    }
    Ok(())
}

/// A graph with a vertex cut `c`, a component `v1` of `g - c`, and the two
/// sides `v1 ∪ c` and `V ∖ v1` of at most `max_side` vertices each.
pub struct CutInstance {
    pub g: Graph,
    pub c: VertexSet,
    pub v1: VertexSet,
}

pub fn random_cut_instance<R: Rng>(rng: &mut R, max_side: usize, max_total: usize) -> CutInstance {
    loop {
        let nc = rng.gen_range(1..=3);
        let n1 = rng.gen_range(1..=max_side - nc);
        let n2 = rng.gen_range(1..=(max_side - nc).min(max_total - nc - n1));
        let n = nc + n1 + n2;
        let mut ids: Vec<usize> = (0..n).collect();
        ids.shuffle(rng);
        let (c, rest) = ids.split_at(nc);
        let (v1, v2) = rest.split_at(n1);
        let p = rng.gen_range(0.15..0.6);
        let mut edges = std::collections::BTreeSet::new();
        let mut add = |a: usize, b: usize| {
            edges.insert((a.min(b), a.max(b)));
        };
        // v1 connected through a random tree, v2 arbitrary
        for i in 1..v1.len() {
            add(v1[i], v1[rng.gen_range(0..i)]);
        }
        for side in [v1, v2] {
            let members: Vec<usize> = side.iter().chain(c).copied().collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if rng.gen_bool(p) {
                        add(a, b);
                    }
                }
            }
        }
        // every cut vertex touches both sides
        for &x in c {
            add(x, *v1.choose(rng).unwrap());
            add(x, *v2.choose(rng).unwrap());
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            return CutInstance { g, c: c.iter().copied().collect(), v1: v1.iter().copied().collect() };
        }
    }
}
