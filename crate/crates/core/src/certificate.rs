//! End-to-end solving of arbitrary graphs and the self-contained
//! certificate format.
//!
//! The approximation needs a connected graph, so [`solve`] runs it on each
//! connected component and takes unions. A certificate embeds the graph
//! digest, the width used, the zero forcing set, the fort packing, the
//! forcing arc set and the per-component iteration traces, so that it can
//! be audited with nothing but the graph file.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::{approximate_zero_forcing, verify_result, ApproxError, ApproxResult, FortPacking};
use crate::arcs::ArcSet;
use crate::decomposition::{exact_pathwidth_limited, make_nice, DecompositionError, PathDecomposition};
use crate::graph::{connected_components, induced_subgraph, Graph, VertexSet};

pub const CERTIFICATE_FORMAT: &str = "zf-certificate/1";

/// Where each component's decomposition comes from.
#[derive(Debug, Clone, Copy)]
pub enum DecompositionSource<'a> {
    /// A decomposition of the whole graph, restricted to each component.
    Given(&'a PathDecomposition),
    /// Exact pathwidth per component, for components of at most `max_n`
    /// vertices.
    Exact { max_n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("invalid decomposition: {0}")]
    Decomposition(#[from] DecompositionError),
    #[error("component with {size} vertices exceeds the exact pathwidth limit of {max}; supply a decomposition")]
    TooLarge { size: usize, max: usize },
    #[error("approximation failed: {0}")]
    Approx(#[from] ApproxError),
    #[error("result failed self-verification:\n{0}")]
    Verification(String),
}

/// Iteration trace of one component, in the component's local bag indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentTrace {
    pub iterations: Vec<(usize, usize)>,
    pub vertices: VertexSet,
    pub width: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Union over components, in global ids. `width_used` is the largest
    /// component width and `iterations` the concatenated traces.
    pub result: ApproxResult,
    pub components: Vec<ComponentTrace>,
}

/// Solves every component, merges the results and verifies the merged
/// result against `g`.
pub fn solve(g: &Graph, source: DecompositionSource<'_>) -> Result<Solution, SolveError> {
    let mut s = Vec::new();
    let mut forts = Vec::new();
    let mut arcs = Vec::new();
    let mut iterations = Vec::new();
    let mut width_used = 0;
    let mut components = Vec::new();
    for comp in connected_components(g) {
        let (sub, map) = induced_subgraph(g, &comp).expect("components lie in the graph");
        let pd = match source {
            DecompositionSource::Given(pd) => restrict(&sub, pd, |v| map.to_local(v))?,
            DecompositionSource::Exact { max_n } => match exact_pathwidth_limited(&sub, max_n) {
                Ok((_, pd)) => pd,
                Err(DecompositionError::TooLarge { n, max }) => return Err(SolveError::TooLarge { size: n, max }),
                Err(e) => return Err(e.into()),
            },
        };
        let nice = make_nice(&sub, &pd)?;
        let r = approximate_zero_forcing(&sub, &nice)?;
        s.extend(r.s.iter().map(|v| map.to_global(v)));
        forts.extend(r.packing.forts.iter().map(|f| f.iter().map(|v| map.to_global(v)).collect::<VertexSet>()));
        arcs.extend(r.fas.arcs().iter().map(|&(u, v)| (map.to_global(u), map.to_global(v))));
        iterations.extend_from_slice(&r.iterations);
        width_used = width_used.max(r.width_used);
        components.push(ComponentTrace { iterations: r.iterations, vertices: comp, width: r.width_used });
    }
    forts.sort();
    let result = ApproxResult {
        s: VertexSet::from(s),
        packing: FortPacking { forts },
        fas: ArcSet::from_forces(g.n(), arcs),
        width_used,
        iterations,
    };
    let report = verify_result(g, &result);
    if !report.all_passed() {
        return Err(SolveError::Verification(report.to_string()));
    }
    Ok(Solution { result, components })
}

/// Restriction of `pd` to the vertices that `to_local` maps, relabelled,
/// with bags that become empty dropped.
fn restrict(
    sub: &Graph,
    pd: &PathDecomposition,
    to_local: impl Fn(usize) -> Option<usize>,
) -> Result<PathDecomposition, DecompositionError> {
    let bags = pd
        .bags()
        .iter()
        .map(|bag| bag.iter().filter_map(&to_local).collect::<VertexSet>())
        .filter(|bag| !bag.is_empty())
        .collect();
    PathDecomposition::new(sub, bags)
}

/// On-disk certificate. Field order is alphabetical so the derived JSON has
/// sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub components: Vec<ComponentTrace>,
    pub fas: Vec<(usize, usize)>,
    pub format: String,
    pub forts: Vec<VertexSet>,
    pub graph_sha256: String,
    pub n: usize,
    pub s: VertexSet,
    pub width: usize,
}

/// Objects are spread over lines and indented; everything else is compact.
/// `serde_json` maps are ordered by key, so the output is canonical.
pub fn write_canonical(value: &serde_json::Value, indent: usize, out: &mut String) {
    match value {
        serde_json::Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, v)) in map.iter().enumerate() {
                out.push_str(&"  ".repeat(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("strings serialize"));
                out.push_str(": ");
                write_canonical(v, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        serde_json::Value::Array(items) if items.iter().any(serde_json::Value::is_object) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_canonical(v, indent, out);
            }
            out.push(']');
        }
        v => out.push_str(&serde_json::to_string(v).expect("values serialize")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("unsupported certificate format {0:?}")]
    Format(String),
    #[error("certificate is for {found} vertices but the graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("arc {u} {v} has an endpoint outside the graph")]
    ArcOutOfRange { u: usize, v: usize },
}

impl Certificate {
    pub fn new(g: &Graph, sol: &Solution) -> Self {
        let r = &sol.result;
        Certificate {
            components: sol.components.clone(),
            fas: r.fas.arcs().to_vec(),
            format: CERTIFICATE_FORMAT.to_string(),
            forts: r.packing.forts.clone(),
            graph_sha256: g.digest(),
            n: g.n(),
            s: r.s.clone(),
            width: r.width_used,
        }
    }

    /// JSON with sorted keys, one object member per line and arrays kept
    /// on a single line, followed by a newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate is plain data");
        let mut out = String::new();
        write_canonical(&value, 0, &mut out);
        out.push('\n');
        out
    }

    pub fn from_json(text: &[u8]) -> Result<Self, CertificateError> {
        let cert: Certificate = serde_json::from_slice(text).map_err(|e| CertificateError::Malformed(e.to_string()))?;
        if cert.format != CERTIFICATE_FORMAT {
            return Err(CertificateError::Format(cert.format));
        }
        Ok(cert)
    }

    /// The result the certificate claims, for [`verify_result`]. Only
    /// structural problems are reported here; everything else is left to
    /// the verifier.
    pub fn to_result(&self, g: &Graph) -> Result<ApproxResult, CertificateError> {
        if self.n != g.n() {
            return Err(CertificateError::VertexCount { expected: g.n(), found: self.n });
        }
        if let Some(&(u, v)) = self.fas.iter().find(|&&(u, v)| u >= g.n() || v >= g.n()) {
            return Err(CertificateError::ArcOutOfRange { u, v });
        }
        Ok(ApproxResult {
            s: self.s.clone(),
            packing: FortPacking { forts: self.forts.clone() },
            fas: ArcSet::from_forces(g.n(), self.fas.clone()),
            width_used: self.width,
            iterations: self.components.iter().flat_map(|c| c.iterations.iter().copied()).collect(),
        })
    }

    pub fn matches_graph(&self, g: &Graph) -> bool {
        self.graph_sha256 == g.digest()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    fn two_parts() -> Graph {
        // a triangle, a path on three vertices and an isolated vertex
        Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn solves_disconnected_graphs_per_component() {
        let g = two_parts();
        let sol = solve(&g, DecompositionSource::Exact { max_n: 12 }).unwrap();
        assert_eq!(sol.components.len(), 3);
        assert!(verify_result(&g, &sol.result).all_passed());
        assert_eq!(sol.result.fas.len(), g.n() - sol.result.s.len());
        assert!(sol.result.s.contains(6));
    }

    #[test]
    fn restricts_a_given_decomposition() {
        let g = two_parts();
        let bags = vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4, 6]), VertexSet::from([4, 5])];
        let pd = PathDecomposition::new(&g, bags).unwrap();
        let sol = solve(&g, DecompositionSource::Given(&pd)).unwrap();
        assert_eq!(sol.components[0].width, 2);
        assert_eq!(sol.components[1].width, 1);
        assert_eq!(sol.components[2].width, 0);
        assert!(verify_result(&g, &sol.result).all_passed());
    }

    #[test]
    fn oversized_component_needs_a_decomposition() {
        let g = cycle(14);
        assert_eq!(
            solve(&g, DecompositionSource::Exact { max_n: 12 }),
            Err(SolveError::TooLarge { size: 14, max: 12 })
        );
    }

    #[test]
    fn json_round_trip_with_sorted_keys() {
        let g = path(5);
        let sol = solve(&g, DecompositionSource::Exact { max_n: 12 }).unwrap();
        let cert = Certificate::new(&g, &sol);
        let text = cert.to_json();
        assert_eq!(Certificate::from_json(text.as_bytes()).unwrap(), cert);
        let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(cert.matches_graph(&g));
        assert!(!cert.matches_graph(&path(6)));
        assert_eq!(cert.to_result(&g).unwrap(), sol.result);
    }

    #[test]
    fn rejects_malformed_certificates() {
        assert!(matches!(Certificate::from_json(b"{"), Err(CertificateError::Malformed(_))));
        let g = path(3);
        let mut cert = Certificate::new(&g, &solve(&g, DecompositionSource::Exact { max_n: 12 }).unwrap());
        cert.fas.push((1, 9));
        assert_eq!(cert.to_result(&g), Err(CertificateError::ArcOutOfRange { u: 1, v: 9 }));
        cert.format = "other".into();
        assert!(matches!(Certificate::from_json(cert.to_json().as_bytes()), Err(CertificateError::Format(_))));
    }
}
