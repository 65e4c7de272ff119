//! Backtracking graph isomorphism for small graphs (at most 64 vertices),
//! plus cheap classifiers for the component shapes that show up in plus
//! graphs (cycles, complete bipartite graphs).
//!
//! The matcher is VF2-flavored: vertices of the first graph are matched in a
//! fixed order, candidates are filtered by degree and by consistency with
//! the partial map, and adjacency is tested through `u64` masks.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ISO_VERTEX_LIMIT: usize = 64;

/// Decide whether `g` and `h` are isomorphic. Deterministic; rejects graphs
/// above [`ISO_VERTEX_LIMIT`] vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for graph in [g, h] {
        if graph.vertex_count() > ISO_VERTEX_LIMIT {
            return Err(Error::TooLarge {
                got: graph.vertex_count(),
                limit: ISO_VERTEX_LIMIT,
            });
        }
    }
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    let g_degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let h_degrees: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    {
        let mut gs = g_degrees.clone();
        let mut hs = h_degrees.clone();
        gs.sort_unstable();
        hs.sort_unstable();
        if gs != hs {
            return Ok(false);
        }
    }
    let g_adj = masks(g);
    let h_adj = masks(h);

    // Match order: BFS from a maximum-degree vertex so each new vertex tends
    // to touch already-mapped ones.
    let order = bfs_order(g, &g_degrees);
    let mut mapping = vec![usize::MAX; n]; // g vertex -> h vertex
    let mut used: u64 = 0;
    let ok = extend(
        &g_adj,
        &h_adj,
        &g_degrees,
        &h_degrees,
        &order,
        0,
        &mut mapping,
        &mut used,
    );
    Ok(ok)
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|u| {
            g.neighbors(u)
                .ones()
                .fold(0u64, |mask, v| mask | (1 << v))
        })
        .collect()
}

fn bfs_order(g: &Graph, degrees: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    while let Some(start) = (0..n)
        .filter(|&v| !seen[v])
        .max_by_key(|&v| (degrees[v], std::cmp::Reverse(v)))
    {
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in g.neighbors(u).ones() {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g_adj: &[u64],
    h_adj: &[u64],
    g_degrees: &[usize],
    h_degrees: &[usize],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    // image must agree with every already-mapped neighbor / non-neighbor
    for cand in 0..h_adj.len() {
        if *used >> cand & 1 == 1 || h_degrees[cand] != g_degrees[u] {
            continue;
        }
        let consistent = mapping.iter().enumerate().all(|(w, &img)| {
            img == usize::MAX || (g_adj[u] >> w & 1) == (h_adj[cand] >> img & 1)
        });
        if !consistent {
            continue;
        }
        mapping[u] = cand;
        *used |= 1 << cand;
        if extend(
            g_adj, h_adj, g_degrees, h_degrees, order, depth + 1, mapping, used,
        ) {
            return true;
        }
        mapping[u] = usize::MAX;
        *used &= !(1 << cand);
    }
    false
}

/// True iff `g` is a single cycle: connected and 2-regular on at least 3
/// vertices. Used where cycle isomorphism is needed for graphs beyond the
/// general matcher's size limit.
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.vertex_count() >= 3
        && (0..g.vertex_count()).all(|v| g.degree(v) == 2)
        && g.is_connected()
}

/// If `g` is a complete bipartite graph, return its part sizes `(a, b)` with
/// `a <= b`.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return None;
    }
    // 2-color by BFS, then check completeness across the parts
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).ones() {
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    let a: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
    for &u in &a {
        for &v in &b {
            if !g.has_edge(u, v) {
                return None;
            }
        }
    }
    Some((a.len().min(b.len()), a.len().max(b.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn cube() -> Graph {
        let edges: Vec<(usize, usize)> = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect();
        Graph::build(8, &edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::build(a + b, &edges).unwrap()
    }

    #[test]
    fn k44_relabeled() {
        let g = complete_bipartite(4, 4);
        // odd/even relabeling of the same graph
        let mut edges = Vec::new();
        for u in 0..4usize {
            for v in 0..4usize {
                edges.push((2 * u, 2 * v + 1));
            }
        }
        let h = Graph::build(8, &edges).unwrap();
        assert!(are_isomorphic(&g, &h).unwrap());
        assert_eq!(complete_bipartite_parts(&h), Some((4, 4)));
    }

    #[test]
    fn c8_vs_two_c4() {
        let g = cycle(8);
        let h = Graph::build(8, &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
            .unwrap();
        assert!(!are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn cube_is_not_k44() {
        assert!(!are_isomorphic(&cube(), &complete_bipartite(4, 4)).unwrap());
        assert_eq!(complete_bipartite_parts(&cube()), None);
    }

    #[test]
    fn size_limit_enforced() {
        let big = Graph::build(65, &[]).unwrap();
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::TooLarge { got: 65, limit: 64 })
        ));
    }

    #[test]
    fn cycle_classifier() {
        assert!(is_cycle_graph(&cycle(3)));
        assert!(is_cycle_graph(&cycle(12)));
        assert!(!is_cycle_graph(&cube()));
        let two_c4 = Graph::build(8, &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
            .unwrap();
        assert!(!is_cycle_graph(&two_c4));
    }
}
