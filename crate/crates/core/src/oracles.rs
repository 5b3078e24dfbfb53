//! Exact solvers for small graphs, used as ground truth.
//!
//! Everything here works on bitmasks and shares no code with the library's
//! forcing engine beyond [`crate::arcs::is_forcing_arc_set`], which the
//! certifying oracles use to check the arc sets they build.

use thiserror::Error;

use crate::approx::FortPacking;
use crate::arcs::{is_forcing_arc_set, ArcSet};
use crate::forcing::canonical_fas;
use crate::graph::{
    components_without, induced_subgraph, is_vertex_cut, strong_product, Graph, GraphError, VertexSet,
};
use crate::interval::{minimum_clique_cover_interval, proper_interval_order};

/// Largest vertex count any mask-based oracle accepts.
const MASK_BITS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n_zexact: usize,
    pub max_n_ft: usize,
    pub max_n_pw: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_n_zexact: 16, max_n_ft: 10, max_n_pw: 12 }
    }
}

impl OracleBudget {
    /// The same cap for every oracle.
    pub fn uniform(max_n: usize) -> Self {
        OracleBudget { max_n_zexact: max_n, max_n_ft: max_n, max_n_pw: max_n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; this oracle is capped at {max}")]
    BudgetExceeded { n: usize, max: usize },
    #[error("graph is not a proper interval graph")]
    NotProperInterval,
    #[error("constructed arc set was rejected: {0}")]
    CertificateRejected(String),
    #[error("{0} is not a vertex cut")]
    NotACut(String),
    #[error("given side is not a component of the graph minus the cut")]
    NotAComponent,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_budget(g: &Graph, max: usize) -> Result<(), OracleError> {
    let max = max.min(MASK_BITS);
    if g.n() > max {
        return Err(OracleError::BudgetExceeded { n: g.n(), max });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect()
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

/// Blue set reached from `blue` by repeated sweeps of the colour change
/// rule.
fn mask_closure(nbr: &[u32], mut blue: u32) -> u32 {
    loop {
        let before = blue;
        for (v, &nv) in nbr.iter().enumerate() {
            if blue >> v & 1 == 1 {
                let white = nv & !blue;
                if white.count_ones() == 1 {
                    blue |= white;
                }
            }
        }
        if blue == before {
            return blue;
        }
    }
}

/// Next larger integer with the same number of set bits.
fn next_same_weight(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Minimum zero forcing set, by trying subsets in order of size.
pub fn exact_z(g: &Graph, budget: &OracleBudget) -> Result<(usize, VertexSet), OracleError> {
    check_budget(g, budget.max_n_zexact)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, VertexSet::new()));
    }
    let nbr = masks(g);
    let full = (1u32 << n) - 1;
    for size in 1..=n {
        let mut s = (1u32 << size) - 1;
        while s <= full {
            if mask_closure(&nbr, s) == full {
                return Ok((size, mask_to_set(s)));
            }
            if s == full {
                break;
            }
            s = next_same_weight(s);
        }
    }
    unreachable!("the whole vertex set forces")
}

fn is_fort_mask(nbr: &[u32], f: u32) -> bool {
    f != 0 && nbr.iter().enumerate().all(|(v, &nv)| f >> v & 1 == 1 || (nv & f).count_ones() != 1)
}

/// All forts of `g` as masks, ascending.
fn all_forts(nbr: &[u32]) -> Vec<u32> {
    (1..1u32 << nbr.len()).filter(|&f| is_fort_mask(nbr, f)).collect()
}

/// Inclusion-minimal members of `forts`.
fn minimal(forts: &[u32]) -> Vec<u32> {
    // ascending order visits every proper subset before its supersets
    let mut out: Vec<u32> = Vec::new();
    for &f in forts {
        if out.iter().all(|&m| m & !f != 0) {
            out.push(f);
        }
    }
    out
}

/// Largest pairwise-disjoint subfamily of `sets`, by branch and bound.
fn max_disjoint(sets: &[u32], n: usize) -> Vec<u32> {
    fn rec(sets: &[u32], i: usize, used: u32, free: u32, chosen: &mut Vec<u32>, best: &mut Vec<u32>, smallest: u32) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if i == sets.len() || chosen.len() + (free.count_ones() / smallest) as usize <= best.len() {
            return;
        }
        for j in i..sets.len() {
            if sets[j] & used == 0 {
                chosen.push(sets[j]);
                rec(sets, j + 1, used | sets[j], free & !sets[j], chosen, best, smallest);
                chosen.pop();
            }
        }
    }
    let smallest = sets.iter().map(|s| s.count_ones()).min().unwrap_or(1).max(1);
    let mut best = Vec::new();
    let free = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    rec(sets, 0, 0, free, &mut Vec::new(), &mut best, smallest);
    best
}

/// Maximum fort packing. Packing minimal forts suffices: replacing each
/// fort of a packing by a minimal fort inside it keeps the packing
/// disjoint.
pub fn exact_ft(g: &Graph, budget: &OracleBudget) -> Result<(usize, FortPacking), OracleError> {
    check_budget(g, budget.max_n_ft)?;
    let nbr = masks(g);
    let best = max_disjoint(&minimal(&all_forts(&nbr)), g.n());
    let mut forts: Vec<VertexSet> = best.into_iter().map(mask_to_set).collect();
    forts.sort_by_key(|f| f.min());
    Ok((forts.len(), FortPacking { forts }))
}

/// Zero forcing number of a proper interval graph as `n` minus the size of
/// a minimum clique cover, together with the optimal forcing arc set that
/// joins the first and last vertex of each cover clique in umbrella order.
pub fn z_proper_interval(g: &Graph) -> Result<(usize, ArcSet), OracleError> {
    let order = proper_interval_order(g).ok_or(OracleError::NotProperInterval)?;
    let cover = minimum_clique_cover_interval(g, &order).map_err(|_| OracleError::NotProperInterval)?;
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let arcs = cover.iter().map(|clique| {
        let first = clique.iter().min_by_key(|&v| position[v]).expect("cover cliques are non-empty");
        let last = clique.iter().max_by_key(|&v| position[v]).expect("cover cliques are non-empty");
        (first, last)
    });
    let fas = ArcSet::new(g, arcs).map_err(|e| OracleError::CertificateRejected(e.to_string()))?;
    if !is_forcing_arc_set(g, &fas) {
        return Err(OracleError::CertificateRejected("clique-cover arcs do not form a forcing arc set".into()));
    }
    Ok((g.n() - cover.len(), fas))
}

/// The two sides of a cut: `G[V1 ∪ C]` and `G[V ∖ V1]`.
pub fn cut_parts(g: &Graph, c: &VertexSet, v1: &VertexSet) -> Result<(VertexSet, VertexSet), OracleError> {
    if !is_vertex_cut(g, c)? {
        return Err(OracleError::NotACut(format!("{c:?}")));
    }
    if !components_without(g, c)?.contains(v1) {
        return Err(OracleError::NotAComponent);
    }
    Ok((v1.union(c), g.vertex_set().difference(v1)))
}

/// Bounds on `Z(g)` from exact values on the two sides of a cut `c`:
/// `Z(G1) + Z(G2) - |c| <= Z(g) <= Z(G1) + Z(G2) + |c|`.
pub fn cut_bounds(
    g: &Graph,
    c: &VertexSet,
    v1: &VertexSet,
    budget: &OracleBudget,
) -> Result<(usize, usize), OracleError> {
    let (side1, side2) = cut_parts(g, c, v1)?;
    let (g1, _) = induced_subgraph(g, &side1)?;
    let (g2, _) = induced_subgraph(g, &side2)?;
    let z = exact_z(&g1, budget)?.0 + exact_z(&g2, budget)?.0;
    Ok((z.saturating_sub(c.len()), z + c.len()))
}

/// Upper bound `n_G Z(H) + n_H Z(G) - Z(G) Z(H)` on the zero forcing number
/// of the strong product, with the arc set `{((u,u'),(v,v'))}` over arcs
/// `(u,v)`, `(u',v')` of optimal factor arc sets as witness. The witness is
/// checked to be a forcing arc set of the product.
pub fn strong_product_bound(g: &Graph, h: &Graph, budget: &OracleBudget) -> Result<(usize, ArcSet), OracleError> {
    let (zg, sg) = exact_z(g, budget)?;
    let (zh, sh) = exact_z(h, budget)?;
    let reject = |e: crate::forcing::ForcingError| OracleError::CertificateRejected(e.to_string());
    let ag = canonical_fas(g, &sg).map_err(reject)?;
    let ah = canonical_fas(h, &sh).map_err(reject)?;
    let (p, idx) = strong_product(g, h);
    let arcs = ag.arcs().iter().flat_map(|&(u, v)| ah.arcs().iter().map(move |&(a, b)| (idx.index(u, a), idx.index(v, b))));
    let star = ArcSet::new(&p, arcs).map_err(|e| OracleError::CertificateRejected(e.to_string()))?;
    if star.len() != ag.len() * ah.len() {
        return Err(OracleError::CertificateRejected("product arc count mismatch".into()));
    }
    if !is_forcing_arc_set(&p, &star) {
        return Err(OracleError::CertificateRejected("product arcs do not form a forcing arc set".into()));
    }
    let bound = g.n() * zh + h.n() * zg - zg * zh;
    Ok((bound, star))
}
