//! The plus-graph operator and its relative form.
//!
//! The plus graph of `G` has one vertex per edge of `G`; two vertices are
//! adjacent exactly when their edges form the two opposite (non-incident)
//! sides of a 4-cycle in `G`. The relative form restricts the vertex set to
//! an edge subset `S` while still taking 4-cycles in all of `G`, which makes
//! it a subgraph of the full plus graph under the edge-id back-mapping.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A plus graph together with the back-mapping from plus-vertices to source
/// edge ids.
#[derive(Clone, Debug)]
pub struct PlusGraph {
    pub graph: Graph,
    /// Plus-vertex index -> source edge id (strictly increasing).
    pub edge_of_vertex: Vec<usize>,
}

/// One connected component of a plus graph.
#[derive(Clone, Debug)]
pub struct PlusComponent {
    /// Source edge ids of the component's vertices, sorted.
    pub source_edges: Vec<usize>,
    /// The component as a graph with vertices renumbered `0..len`.
    pub graph: Graph,
}

/// The plus graph of `g`: vertex `i` corresponds to source edge id `i`.
///
/// Built by a single pass over the canonical 4-cycle list, joining the two
/// opposite-edge pairs of each cycle.
pub fn plus_graph(g: &Graph) -> PlusGraph {
    let all: Vec<usize> = (0..g.edge_count()).collect();
    relative_plus(&all, g).expect("full edge set is always valid")
}

/// The relative plus graph on edge subset `s` (ids into `g`), with 4-cycles
/// taken in all of `g`. Vertex `i` corresponds to the `i`-th smallest edge
/// id in `s`.
pub fn relative_plus(s: &[usize], g: &Graph) -> Result<PlusGraph> {
    let mut members: Vec<usize> = s.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() != s.len() {
        return Err(Error::Contract("duplicate edge id in subset".into()));
    }
    if let Some(&bad) = members.iter().find(|&&e| e >= g.edge_count()) {
        return Err(Error::EdgeOutOfRange {
            edge: bad,
            m: g.edge_count(),
        });
    }
    let mut position = vec![usize::MAX; g.edge_count()];
    for (i, &e) in members.iter().enumerate() {
        position[e] = i;
    }
    let mut plus_edges = std::collections::BTreeSet::new();
    for cycle in g.four_cycles() {
        for (a, b) in cycle.opposite_pairs() {
            let (pa, pb) = (position[a], position[b]);
            if pa != usize::MAX && pb != usize::MAX {
                plus_edges.insert((pa.min(pb), pa.max(pb)));
            }
        }
    }
    let edge_list: Vec<(usize, usize)> = plus_edges.into_iter().collect();
    Ok(PlusGraph {
        graph: Graph::build(members.len(), &edge_list)?,
        edge_of_vertex: members,
    })
}

/// Connected components of a plus graph, ordered by smallest contained
/// source edge id.
pub fn plus_components(p: &PlusGraph) -> Vec<PlusComponent> {
    let mut out = Vec::new();
    for comp in p.graph.components() {
        let (graph, _map) = p.graph.induced(&comp).expect("component vertices are valid");
        let source_edges: Vec<usize> = comp.iter().map(|&v| p.edge_of_vertex[v]).collect();
        out.push(PlusComponent {
            source_edges,
            graph,
        });
    }
    // components() yields ascending minimal vertices, and edge_of_vertex is
    // increasing, so this order is already by minimal source edge id
    out
}
