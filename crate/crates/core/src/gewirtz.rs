//! Structural decomposition of the Sims-Gewirtz graph.
//!
//! The 56 vertices split into two disjoint 16-cocliques `P` ("points") and
//! `L` ("lines") plus a 24-vertex remainder `T` inducing six disjoint
//! 4-cycles. Around every `T`-vertex sits a 4-trapezohedral subgraph whose
//! outer 8-cycle lives in `P u L`, the six 4-cycles pair up so that each
//! pairing's sixteen 8-cycle rims partition the 64 edges inside `P u L`,
//! and rims across different pairings meet in at most one edge.
//!
//! The decomposition is recovered by a deterministic branch-and-bound
//! coclique search (ascending vertices, inclusion branch first) and then
//! validated; nothing is transcribed from a fixed labeling.

use std::cell::Cell;
use std::collections::BTreeMap;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic;

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

const COCLIQUE_SIZE: usize = 16;

/// The `P / L / T` decomposition together with the six 4-cycles of `G[T]`
/// and the three cycle pairings.
#[derive(Clone, Debug)]
pub struct PltDecomposition {
    /// "Points": a 16-coclique, sorted.
    pub p: Vec<usize>,
    /// "Lines": a disjoint 16-coclique containing the smallest `P u L`
    /// vertex, sorted.
    pub l: Vec<usize>,
    /// The remaining 24 vertices, sorted.
    pub t: Vec<usize>,
    /// The six 4-cycles of `G[T]` in cyclic vertex order, sorted by their
    /// minimal vertex.
    pub tau_cycles: Vec<[usize; 4]>,
    /// Three unordered pairs of `tau_cycles` indices; each pairing's rim
    /// edges partition the edges inside `P u L`.
    pub pairings: Vec<(usize, usize)>,
}

impl PltDecomposition {
    pub fn tau_cycle_of(&self, t: usize) -> Option<usize> {
        self.tau_cycles.iter().position(|c| c.contains(&t))
    }

    /// The non-adjacent same-cycle partner of a `T`-vertex.
    pub fn partner(&self, t: usize) -> Option<usize> {
        let cycle = self.tau_cycles[self.tau_cycle_of(t)?];
        let pos = cycle.iter().position(|&v| v == t)?;
        Some(cycle[(pos + 2) % 4])
    }
}

/// A trapezohedral subgraph around the partner pair `{t, t'}`: hubs `t, t'`
/// and the outer 8-cycle through `N(t) n L` and `N(t') n P`.
#[derive(Clone, Debug)]
pub struct TrapSubgraph {
    pub t: usize,
    pub t_prime: usize,
    /// The rim in cyclic order, starting at its minimal vertex.
    pub rim: [usize; 8],
}

struct CocliqueSearch<'a> {
    adjacency: &'a [u64],
    n: usize,
    nodes: Cell<u64>,
    budget: u64,
}

impl CocliqueSearch<'_> {
    /// Enumerate 16-cocliques within `allowed` in deterministic DFS order
    /// (lowest candidate vertex, include branch first). The visitor returns
    /// `true` to stop; `Err` propagates budget exhaustion.
    fn enumerate(
        &self,
        chosen: u64,
        candidates: u64,
        size: usize,
        visit: &mut dyn FnMut(u64) -> Result<bool>,
    ) -> Result<bool> {
        let nodes = self.nodes.get() + 1;
        self.nodes.set(nodes);
        if nodes > self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        if size == COCLIQUE_SIZE {
            return visit(chosen);
        }
        if size + (candidates.count_ones() as usize) < COCLIQUE_SIZE {
            return Ok(false);
        }
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if self.enumerate(
            chosen | bit,
            candidates & !self.adjacency[v] & !bit,
            size + 1,
            visit,
        )? {
            return Ok(true);
        }
        self.enumerate(chosen, candidates & !bit, size, visit)
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|u| g.neighbors(u).ones().fold(0u64, |m, v| m | (1 << v)))
        .collect()
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Recover a full decomposition of `SRG(56,10,0,2)` by searching for two
/// disjoint 16-cocliques whose complement induces six disjoint 4-cycles,
/// then computing the pairings. The first candidate (in search order) that
/// passes every structure check is returned, so the result is
/// deterministic.
pub fn find_plt_decomposition(g: &Graph, budget: u64) -> Result<PltDecomposition> {
    match g.srg_parameters() {
        Some(p) if (p.n, p.k, p.lambda, p.mu) == (56, 10, 0, 2) => {}
        other => {
            return Err(Error::Applicability(format!(
                "decomposition requires SRG(56,10,0,2), got {:?}",
                other
            )))
        }
    }
    let masks = adjacency_masks(g);
    let search = CocliqueSearch {
        adjacency: &masks,
        n: g.vertex_count(),
        nodes: Cell::new(0),
        budget,
    };
    let full = search.full_mask();
    let mut found: Option<PltDecomposition> = None;
    search.enumerate(0, full, 0, &mut |first| {
        search.enumerate(0, full & !first, 0, &mut |second| {
            let t_mask = full & !first & !second;
            if let Some(dec) = try_decomposition(g, &masks, first, second, t_mask) {
                found = Some(dec);
                return Ok(true);
            }
            Ok(false)
        })
    })?;
    found.ok_or_else(|| {
        Error::Structure("no valid point/line/T decomposition exists".into())
    })
}

/// Validate one candidate coclique pair and assemble the decomposition.
fn try_decomposition(
    g: &Graph,
    masks: &[u64],
    first: u64,
    second: u64,
    t_mask: u64,
) -> Option<PltDecomposition> {
    // G[T] must be six disjoint 4-cycles
    let t_vertices = mask_to_vec(t_mask);
    for &v in &t_vertices {
        if (masks[v] & t_mask).count_ones() != 2 {
            return None;
        }
    }
    let mut seen = 0u64;
    let mut tau_cycles = Vec::with_capacity(6);
    for &start in &t_vertices {
        if seen >> start & 1 == 1 {
            continue;
        }
        // walk the component; it is 2-regular so it is a cycle
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut current = start;
        loop {
            let nbrs = mask_to_vec(masks[current] & t_mask);
            let next = *nbrs.iter().find(|&&w| w != prev)?;
            if next == start {
                break;
            }
            prev = current;
            current = next;
            cycle.push(current);
            if cycle.len() > 4 {
                return None;
            }
        }
        if cycle.len() != 4 {
            return None;
        }
        for &v in &cycle {
            seen |= 1 << v;
        }
        // canonical cyclic order: minimal vertex first, smaller neighbor next
        let min_pos = cycle.iter().position(|&v| v == *cycle.iter().min().unwrap()).unwrap();
        cycle.rotate_left(min_pos);
        if cycle[3] < cycle[1] {
            cycle.swap(1, 3);
        }
        tau_cycles.push([cycle[0], cycle[1], cycle[2], cycle[3]]);
    }
    if tau_cycles.len() != 6 {
        return None;
    }
    tau_cycles.sort_unstable();

    // the coclique containing the smaller minimum id is "L"
    let (l_mask, p_mask) = if first.trailing_zeros() <= second.trailing_zeros() {
        (first, second)
    } else {
        (second, first)
    };
    let mut dec = PltDecomposition {
        p: mask_to_vec(p_mask),
        l: mask_to_vec(l_mask),
        t: t_vertices,
        tau_cycles,
        pairings: Vec::new(),
    };
    dec.pairings = pair_four_cycles(g, &dec).ok()?;
    Some(dec)
}

/// Edges with both endpoints in `P u L`, as a bitset over edge ids.
pub fn pi_edge_set(g: &Graph, dec: &PltDecomposition) -> Bitset {
    let mut in_pi = Bitset::new(g.vertex_count());
    for &v in dec.p.iter().chain(&dec.l) {
        in_pi.set(v);
    }
    let mut edges = Bitset::new(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_pi.get(u) && in_pi.get(v) {
            edges.set(e);
        }
    }
    edges
}

/// Rim vertices of `Z_t` (the trapezohedral subgraph around `{t, t'}`):
/// the lines through `t` and the points through `t'`.
fn rim_vertices(g: &Graph, dec: &PltDecomposition, t: usize) -> Result<Vec<usize>> {
    let t_prime = dec
        .partner(t)
        .ok_or_else(|| Error::Contract(format!("{t} is not a T-vertex")))?;
    let mut rim: Vec<usize> = dec
        .l
        .iter()
        .copied()
        .filter(|&x| g.has_edge(t, x))
        .chain(dec.p.iter().copied().filter(|&x| g.has_edge(t_prime, x)))
        .collect();
    rim.sort_unstable();
    if rim.len() != 8 {
        return Err(Error::Structure(format!(
            "rim of Z_{t} has {} vertices, expected 8",
            rim.len()
        )));
    }
    Ok(rim)
}

/// Edge-id bitset of the rim 8-cycle of `Z_t`.
fn rim_edge_set(g: &Graph, dec: &PltDecomposition, t: usize) -> Result<Bitset> {
    let rim = rim_vertices(g, dec, t)?;
    let mut edges = Bitset::new(g.edge_count());
    let mut count = 0;
    for (i, &u) in rim.iter().enumerate() {
        for &v in &rim[i + 1..] {
            if let Some(e) = g.edge_id(u, v) {
                edges.set(e);
                count += 1;
            }
        }
    }
    if count != 8 {
        return Err(Error::Structure(format!(
            "rim of Z_{t} spans {count} edges, expected 8"
        )));
    }
    Ok(edges)
}

/// Union of the four rim-edge sets of one tau cycle: the edge set of
/// `pi_A - A`, which must be a 2-regular spanning half of `pi`.
fn cycle_rim_edges(g: &Graph, dec: &PltDecomposition, cycle_index: usize) -> Result<Bitset> {
    let mut acc = Bitset::new(g.edge_count());
    let mut total = 0;
    for &t in &dec.tau_cycles[cycle_index] {
        let rim = rim_edge_set(g, dec, t)?;
        total += rim.count_ones();
        for e in rim.ones() {
            acc.set(e);
        }
    }
    if acc.count_ones() != 32 || total != 32 {
        return Err(Error::Structure(format!(
            "rims of tau cycle {cycle_index} do not form 32 disjoint edges"
        )));
    }
    Ok(acc)
}

/// Pair the six tau cycles: `A` pairs with the unique `B` whose rim edges
/// complement `A`'s inside `pi`. Verifies that exactly three pairings
/// result and that together they cover every `pi` edge exactly three times
/// (once per pairing).
pub fn pair_four_cycles(g: &Graph, dec: &PltDecomposition) -> Result<Vec<(usize, usize)>> {
    let pi = pi_edge_set(g, dec);
    if pi.count_ones() != 64 {
        return Err(Error::Structure(format!(
            "pi has {} edges, expected 64",
            pi.count_ones()
        )));
    }
    let rim_sets: Vec<Bitset> = (0..6)
        .map(|i| cycle_rim_edges(g, dec, i))
        .collect::<Result<_>>()?;
    for set in &rim_sets {
        for e in set.ones() {
            if !pi.get(e) {
                return Err(Error::Structure("rim edge outside pi".into()));
            }
        }
    }
    let mut pairings = Vec::new();
    for a in 0..6 {
        let partners: Vec<usize> = (0..6)
            .filter(|&b| b != a)
            .filter(|&b| {
                !rim_sets[a].intersects(&rim_sets[b])
                    && rim_sets[a].count_ones() + rim_sets[b].count_ones() == 64
            })
            .collect();
        match partners.as_slice() {
            [b] => {
                if a < *b {
                    pairings.push((a, *b));
                }
            }
            _ => {
                return Err(Error::Structure(format!(
                    "tau cycle {a} has {} complementary partners, expected exactly 1",
                    partners.len()
                )))
            }
        }
    }
    if pairings.len() != 3 {
        return Err(Error::Structure(format!(
            "found {} pairings, expected 3",
            pairings.len()
        )));
    }
    // each pi edge is covered once per pairing, hence three times overall
    for e in pi.ones() {
        for &(a, b) in &pairings {
            let covered = usize::from(rim_sets[a].get(e)) + usize::from(rim_sets[b].get(e));
            if covered != 1 {
                return Err(Error::Structure(format!(
                    "pi edge {e} covered {covered} times by pairing ({a},{b})"
                )));
            }
        }
    }
    Ok(pairings)
}

/// Check that every edge lies in exactly `k - 1` four-cycles and that any
/// two of those cycles share no edge besides the common one.
pub fn verify_nine_four_cycles(g: &Graph) -> Result<bool> {
    let params = g.srg_parameters().ok_or_else(|| {
        Error::Applicability("edge/4-cycle counting requires an SRG(n,k,0,2)".into())
    })?;
    if params.lambda != 0 || params.mu != 2 {
        return Err(Error::Applicability(format!(
            "edge/4-cycle counting requires (n,k,0,2) parameters, got {params}"
        )));
    }
    let cycles = g.four_cycles();
    let mut per_edge: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for (i, cycle) in cycles.iter().enumerate() {
        for &e in &cycle.edges {
            per_edge[e].push(i);
        }
    }
    for (e, through) in per_edge.iter().enumerate() {
        if through.len() != params.k - 1 {
            return Ok(false);
        }
        for (x, &i) in through.iter().enumerate() {
            for &j in &through[x + 1..] {
                let shared = cycles[i]
                    .edges
                    .iter()
                    .filter(|&&ef| cycles[j].edges.contains(&ef))
                    .count();
                if shared != 1 {
                    return Ok(false);
                }
                debug_assert!(cycles[i].edges.contains(&e));
            }
        }
    }
    Ok(true)
}

/// Parallelism test: two lines (or two points) are parallel iff all their
/// common neighbors lie in `T`.
pub fn parallel_test(
    g: &Graph,
    dec: &PltDecomposition,
    x: usize,
    y: usize,
) -> Result<bool> {
    if x == y {
        return Err(Error::Contract("parallel test needs two distinct vertices".into()));
    }
    let both_l = dec.l.contains(&x) && dec.l.contains(&y);
    let both_p = dec.p.contains(&x) && dec.p.contains(&y);
    if !both_l && !both_p {
        return Err(Error::Contract(
            "parallel test needs two lines or two points".into(),
        ));
    }
    if g.has_edge(x, y) {
        return Err(Error::Contract("parallel test needs a non-adjacent pair".into()));
    }
    let mut in_t = Bitset::new(g.vertex_count());
    for &v in &dec.t {
        in_t.set(v);
    }
    for w in 0..g.vertex_count() {
        if g.has_edge(x, w) && g.has_edge(y, w) && !in_t.get(w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build and validate the 24 trapezohedral subgraphs `Z_t`.
///
/// For each `t` this checks isomorphism with `T_4`, extracts the rim
/// 8-cycle, and verifies that the rim alternates between lines adjacent to
/// `t` and points adjacent to `t'`. Also asserts the global facts that
/// every `P u L` vertex has exactly six `T`-neighbors, one per tau cycle,
/// and that the four rims of each tau cycle partition the 32 vertices of
/// `pi`.
pub fn trapezohedral_subgraphs(
    g: &Graph,
    dec: &PltDecomposition,
) -> Result<Vec<TrapSubgraph>> {
    let mut in_t = Bitset::new(g.vertex_count());
    for &v in &dec.t {
        in_t.set(v);
    }
    for &x in dec.p.iter().chain(&dec.l) {
        let t_neighbors: Vec<usize> = g
            .neighbors(x)
            .ones()
            .filter(|&w| in_t.get(w))
            .collect();
        if t_neighbors.len() != 6 {
            return Err(Error::Structure(format!(
                "vertex {x} has {} T-neighbors, expected 6",
                t_neighbors.len()
            )));
        }
        for (i, cycle) in dec.tau_cycles.iter().enumerate() {
            let hits = t_neighbors.iter().filter(|&&w| cycle.contains(&w)).count();
            if hits != 1 {
                return Err(Error::Structure(format!(
                    "vertex {x} meets tau cycle {i} in {hits} vertices, expected 1"
                )));
            }
        }
    }

    let reference = crate::constructors::trapezohedral(4).expect("4 >= 3");
    let mut out = Vec::with_capacity(dec.t.len());
    for &t in &dec.t {
        let t_prime = dec.partner(t).expect("t is a T-vertex");
        let rim = rim_vertices(g, dec, t).map_err(|e| name_t(e, t))?;
        let mut verts = rim.clone();
        verts.push(t);
        verts.push(t_prime);
        verts.sort_unstable();
        let (sub, _) = g.induced(&verts)?;
        if sub.vertex_count() != 10 || sub.edge_count() != 16 {
            return Err(Error::Structure(format!(
                "Z_{t} has {} vertices and {} edges, expected 10 and 16",
                sub.vertex_count(),
                sub.edge_count()
            )));
        }
        if !are_isomorphic(&sub, &reference)? {
            return Err(Error::Structure(format!(
                "Z_{t} is not a 4-trapezohedral graph"
            )));
        }
        let order = walk_rim(g, &rim).map_err(|e| name_t(e, t))?;
        // rim alternates: lines through t and points through t'
        for (i, &v) in order.iter().enumerate() {
            let expected_line = dec.l.contains(&order[0]) == (i % 2 == 0);
            let is_line = dec.l.contains(&v);
            let hub_ok = if is_line {
                g.has_edge(t, v)
            } else {
                g.has_edge(t_prime, v)
            };
            if is_line != expected_line || !hub_ok {
                return Err(Error::Structure(format!(
                    "rim of Z_{t} does not alternate lines and points"
                )));
            }
        }
        out.push(TrapSubgraph {
            t,
            t_prime,
            rim: order,
        });
    }

    // the four rims of each tau cycle are disjoint and cover all of pi
    for (i, cycle) in dec.tau_cycles.iter().enumerate() {
        let mut covered: BTreeMap<usize, usize> = BTreeMap::new();
        for &t in cycle {
            for &v in rim_vertices(g, dec, t)?.iter() {
                *covered.entry(v).or_insert(0) += 1;
            }
        }
        if covered.len() != 32 || covered.values().any(|&c| c != 1) {
            return Err(Error::Structure(format!(
                "rims of tau cycle {i} do not partition the 32 pi vertices"
            )));
        }
    }
    Ok(out)
}

fn name_t(e: Error, t: usize) -> Error {
    match e {
        Error::Structure(msg) => Error::Structure(format!("Z_{t}: {msg}")),
        other => other,
    }
}

/// Order the 8 rim vertices into a cycle starting at the minimal vertex,
/// stepping first to its smaller neighbor.
fn walk_rim(g: &Graph, rim: &[usize]) -> Result<[usize; 8]> {
    let in_rim = |v: usize| rim.contains(&v);
    let nbrs = |v: usize| -> Vec<usize> {
        g.neighbors(v).ones().filter(|&w| in_rim(w)).collect()
    };
    for &v in rim {
        if nbrs(v).len() != 2 {
            return Err(Error::Structure("rim is not 2-regular".into()));
        }
    }
    let start = *rim.iter().min().unwrap();
    let mut order = [0usize; 8];
    order[0] = start;
    order[1] = *nbrs(start).iter().min().unwrap();
    for i in 2..8 {
        let candidates = nbrs(order[i - 1]);
        let next = *candidates
            .iter()
            .find(|&&w| w != order[i - 2])
            .ok_or_else(|| Error::Structure("rim walk stuck".into()))?;
        if next == start {
            return Err(Error::Structure("rim closes early; not an 8-cycle".into()));
        }
        order[i] = next;
    }
    if !g.has_edge(order[7], start) {
        return Err(Error::Structure("rim does not close into an 8-cycle".into()));
    }
    Ok(order)
}

/// Combined check of the two matching facts: the perfect-matching property
/// of [`perfect_matching_property`] and the exclusivity property of
/// [`rim_exclusivity`], both against the decomposition's own pairings.
pub fn verify_matchings(g: &Graph, dec: &PltDecomposition) -> Result<bool> {
    Ok(perfect_matching_property(g, dec, &dec.pairings)?
        && rim_exclusivity(g, dec, &dec.pairings)?)
}

/// For every pairing `{A, B}` and every hub `c` from a different tau cycle,
/// the rim of `Z_c` meets the rim edges of `A`'s side and of `B`'s side in
/// two perfect matchings of the 8-cycle (four vertex-disjoint edges each).
/// Takes an explicit pairing list so a deliberately wrong pairing can be
/// shown to fail.
pub fn perfect_matching_property(
    g: &Graph,
    dec: &PltDecomposition,
    pairings: &[(usize, usize)],
) -> Result<bool> {
    let side_edges: Vec<Bitset> = (0..6)
        .map(|i| cycle_rim_edges(g, dec, i))
        .collect::<Result<_>>()?;
    for &(a, b) in pairings {
        for c_index in 0..6 {
            if c_index == a || c_index == b {
                continue;
            }
            for &c in &dec.tau_cycles[c_index] {
                let rim = rim_vertices(g, dec, c)?;
                let rim_edges = rim_edge_set(g, dec, c)?;
                for side in [a, b] {
                    let mut matched = Bitset::new(g.vertex_count());
                    let mut count = 0;
                    for e in rim_edges.ones() {
                        if side_edges[side].get(e) {
                            count += 1;
                            let (u, v) = g.endpoints(e)?;
                            if matched.get(u) || matched.get(v) {
                                return Ok(false); // not vertex-disjoint
                            }
                            matched.set(u);
                            matched.set(v);
                        }
                    }
                    // a perfect matching of the 8-cycle: 4 disjoint edges
                    if count != 4 || rim.iter().any(|&v| !matched.get(v)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Exclusivity: two rim 8-cycles whose hubs come from different pairings
/// never share more than one edge.
pub fn rim_exclusivity(
    g: &Graph,
    dec: &PltDecomposition,
    pairings: &[(usize, usize)],
) -> Result<bool> {
    let pairing_of = |cycle_index: usize| -> Option<usize> {
        pairings
            .iter()
            .position(|&(a, b)| a == cycle_index || b == cycle_index)
    };
    for &a in &dec.t {
        for &c in &dec.t {
            let (ca, cc) = (
                dec.tau_cycle_of(a).unwrap(),
                dec.tau_cycle_of(c).unwrap(),
            );
            if pairing_of(ca) == pairing_of(cc) {
                continue;
            }
            let shared = rim_edge_set(g, dec, a)?.intersection_count(&rim_edge_set(g, dec, c)?);
            if shared > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Distribution property: the eight rim edges of any `Z_a` (with `a` in
/// pairing `{A, B}`) land in eight distinct rims of any other pairing,
/// one edge each.
pub fn verify_distribution(g: &Graph, dec: &PltDecomposition) -> Result<bool> {
    for &(a_idx, b_idx) in &dec.pairings {
        for &(c_idx, d_idx) in &dec.pairings {
            if (a_idx, b_idx) == (c_idx, d_idx) {
                continue;
            }
            let other_hubs: Vec<usize> = dec.tau_cycles[c_idx]
                .iter()
                .chain(&dec.tau_cycles[d_idx])
                .copied()
                .collect();
            for &a in dec.tau_cycles[a_idx].iter().chain(&dec.tau_cycles[b_idx]) {
                let ra = rim_edge_set(g, dec, a)?;
                let mut hits = Vec::new();
                for &c in &other_hubs {
                    hits.push(ra.intersection_count(&rim_edge_set(g, dec, c)?));
                }
                hits.sort_unstable();
                if hits != vec![1; 8] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
