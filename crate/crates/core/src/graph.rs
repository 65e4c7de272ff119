//! Immutable simple undirected graphs with bitset adjacency and a canonical
//! edge index.
//!
//! Edge ids are assigned in lexicographic `(u, v)` order with `u < v`, so two
//! graphs built from the same edge list index their edges identically. All
//! queries here are pure; a constructed [`Graph`] never changes.

use crate::bitset::Bitset;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Bitset>,
    /// Edge id -> endpoints, sorted lexicographically with `u < v`.
    edges: Vec<(usize, usize)>,
}

/// Strongly-regular parameters `(n, k, lambda, mu)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// The standard feasibility identity `k(k - lambda - 1) = (n - k - 1) mu`.
    pub fn feasibility_identity(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// A 4-cycle `(v0, v1, v2, v3, v0)` in canonical form: `v0` is the minimal
/// vertex and `v1 < v3`, so every 4-cycle has exactly one representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FourCycle {
    pub vertices: [usize; 4],
    /// Edge ids in cyclic order: (v0,v1), (v1,v2), (v2,v3), (v3,v0).
    pub edges: [usize; 4],
}

impl FourCycle {
    /// The two opposite (non-incident) edge pairs of the cycle.
    pub fn opposite_pairs(&self) -> [(usize, usize); 2] {
        [
            (self.edges[0], self.edges[2]),
            (self.edges[1], self.edges[3]),
        ]
    }
}

/// A 6-cycle with a chord joining its two antipodal "junction" vertices.
///
/// With rim vertices `w0..w5` in cyclic order, the bar joins `w2` and `w5`;
/// rim edge ids are stored as `[a, b, c, d, e, f]` where `a = (w0,w1)`,
/// `b = (w1,w2)`, ..., `f = (w5,w0)`, so the bar is incident with `b, c, e, f`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CrossbarSixCycle {
    pub rim: [usize; 6],
    pub bar: usize,
    pub rim_vertices: [usize; 6],
}

impl Graph {
    /// Build a graph from an edge list. The edge order does not matter; ids
    /// are reassigned lexicographically.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Construction {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            if u >= n || v >= n {
                return Err(Error::Construction {
                    u,
                    v,
                    reason: format!("vertex out of range for n = {n}"),
                });
            }
            sorted.push((u.min(v), u.max(v)));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Construction {
                u: w[0].0,
                v: w[0].1,
                reason: "duplicate edge".into(),
            });
        }
        let mut adjacency = vec![Bitset::new(n); n];
        for &(u, v) in &sorted {
            adjacency[u].set(v);
            adjacency[v].set(u);
        }
        Ok(Graph {
            n,
            adjacency,
            edges: sorted,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges as `(u, v)` pairs with `u < v`, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> Result<(usize, usize)> {
        self.edges
            .get(edge)
            .copied()
            .ok_or(Error::EdgeOutOfRange {
                edge,
                m: self.edges.len(),
            })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adjacency[u].get(v)
    }

    /// Edge id of `(u, v)`, if adjacent.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let pair = (u.min(v), u.max(v));
        self.edges.binary_search(&pair).ok()
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones()
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.adjacency[u].intersection_count(&self.adjacency[v])
    }

    /// Strongly-regular parameters, or `None` when the graph is not strongly
    /// regular. Regularity is checked first; then every adjacent pair must
    /// share the same `lambda` and every non-adjacent pair the same `mu`.
    pub fn srg_parameters(&self) -> Option<SrgParams> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        if (1..self.n).any(|v| self.degree(v) != k) {
            return None;
        }
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let c = self.common_neighbor_count(u, v);
                let slot = if self.adjacency[u].get(v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                match slot {
                    Some(x) if *x != c => return None,
                    Some(_) => {}
                    None => *slot = Some(c),
                }
            }
        }
        Some(SrgParams {
            n: self.n,
            k,
            lambda: lambda.unwrap_or(0),
            mu: mu.unwrap_or(0),
        })
    }

    /// Every 4-cycle of the graph, each exactly once in canonical form,
    /// sorted by the vertex quadruple.
    ///
    /// Cycles are taken in the subgraph sense: a chord across the cycle does
    /// not disqualify it. (On triangle-free graphs all 4-cycles are chordless
    /// anyway.)
    pub fn four_cycles(&self) -> Vec<FourCycle> {
        let mut out = Vec::new();
        for v0 in 0..self.n {
            for v1 in self.adjacency[v0].ones() {
                if v1 < v0 {
                    continue;
                }
                for v2 in self.adjacency[v1].ones() {
                    if v2 <= v0 {
                        continue;
                    }
                    // v3 > v1 fixes the traversal direction and, with v1 > v0,
                    // keeps v0 minimal.
                    for v3 in self.adjacency[v2].ones() {
                        if v3 <= v1 {
                            continue;
                        }
                        if self.adjacency[v3].get(v0) {
                            out.push(FourCycle {
                                vertices: [v0, v1, v2, v3],
                                edges: [
                                    self.edge_id(v0, v1).unwrap(),
                                    self.edge_id(v1, v2).unwrap(),
                                    self.edge_id(v2, v3).unwrap(),
                                    self.edge_id(v3, v0).unwrap(),
                                ],
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Every crossbar 6-cycle, listed once per (rim, bar) pair.
    ///
    /// For each edge `(x, y)` acting as the bar, rims correspond to unordered
    /// pairs of internally disjoint 3-paths from `x` to `y`. The rim is
    /// canonicalized by putting the lexicographically smaller path on the
    /// `(w3, w4)` arc.
    pub fn crossbar_six_cycles(&self) -> Vec<CrossbarSixCycle> {
        let mut out = Vec::new();
        for (bar, &(x, y)) in self.edges.iter().enumerate() {
            // 3-paths x - u - v - y with internal vertices off the bar
            let mut paths: Vec<(usize, usize)> = Vec::new();
            for u in self.adjacency[x].ones() {
                if u == y {
                    continue;
                }
                for v in self.adjacency[u].ones() {
                    if v != x && v != y && self.adjacency[v].get(y) {
                        paths.push((u, v));
                    }
                }
            }
            paths.sort_unstable();
            for i in 0..paths.len() {
                for j in (i + 1)..paths.len() {
                    let (u1, v1) = paths[i];
                    let (u2, v2) = paths[j];
                    if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                        continue;
                    }
                    // rim (w0..w5) = (v2, u2, x, u1, v1, y); bar joins w2=x, w5=y
                    let rim_vertices = [v2, u2, x, u1, v1, y];
                    let rim = [
                        self.edge_id(v2, u2).unwrap(),
                        self.edge_id(u2, x).unwrap(),
                        self.edge_id(x, u1).unwrap(),
                        self.edge_id(u1, v1).unwrap(),
                        self.edge_id(v1, y).unwrap(),
                        self.edge_id(y, v2).unwrap(),
                    ];
                    out.push(CrossbarSixCycle {
                        rim,
                        bar,
                        rim_vertices,
                    });
                }
            }
        }
        out
    }

    /// All cycles of length `len` as canonical vertex sequences: minimal
    /// vertex first, second vertex smaller than the last.
    pub fn cycles_of_length(&self, len: usize) -> Vec<Vec<usize>> {
        assert!(len >= 3, "cycle length must be at least 3");
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(len);
        for start in 0..self.n {
            path.clear();
            path.push(start);
            let mut used = Bitset::new(self.n);
            used.set(start);
            self.cycle_dfs(start, len, &mut path, &mut used, &mut out);
        }
        out
    }

    fn cycle_dfs(
        &self,
        start: usize,
        len: usize,
        path: &mut Vec<usize>,
        used: &mut Bitset,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == len {
            if self.adjacency[*path.last().unwrap()].get(start) && path[1] < path[len - 1] {
                out.push(path.clone());
            }
            return;
        }
        let last = *path.last().unwrap();
        for next in self.adjacency[last].ones() {
            if next <= start || used.get(next) {
                continue;
            }
            path.push(next);
            used.set(next);
            self.cycle_dfs(start, len, path, used, out);
            path.pop();
            used.clear(next);
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// contained vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = Bitset::new(self.n);
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen.get(s) {
                continue;
            }
            let mut queue = std::collections::VecDeque::from([s]);
            seen.set(s);
            let mut comp = vec![s];
            while let Some(u) = queue.pop_front() {
                for v in self.adjacency[u].ones() {
                    if !seen.get(v) {
                        seen.set(v);
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True iff every diagonal entry of `A^5` is positive, computed in exact
    /// integer arithmetic. On a triangle-free graph this says every vertex
    /// lies on a 5-cycle.
    pub fn every_vertex_on_five_cycle(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let a: Vec<Vec<u64>> = (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| u64::from(self.adjacency[u].get(v)))
                    .collect()
            })
            .collect();
        let a2 = mat_mul(&a, &a);
        let a4 = mat_mul(&a2, &a2);
        let a5 = mat_mul(&a4, &a);
        (0..self.n).all(|i| a5[i][i] > 0)
    }

    /// Induced subgraph on `verts`, with vertices renumbered `0..verts.len()`.
    /// Returns the new graph and the map from new index to original vertex.
    pub fn induced(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        if map.len() != verts.len() {
            return Err(Error::Contract("duplicate vertex in induced set".into()));
        }
        for &v in &map {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let index_of = |v: usize| map.binary_search(&v).unwrap();
        let mut edges = Vec::new();
        for (i, &u) in map.iter().enumerate() {
            for v in self.adjacency[u].ones() {
                if v > u && map.binary_search(&v).is_ok() {
                    edges.push((i, index_of(v)));
                }
            }
        }
        Ok((Graph::build(map.len(), &edges)?, map))
    }
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut c = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}
