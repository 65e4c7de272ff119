//! Deterministic builders for the seven triangle-free strongly regular
//! graphs, the trapezohedral family, and the Golay-code/Steiner-system
//! pipeline behind the three largest graphs.
//!
//! Every named constructor asserts its strongly-regular parameters before
//! returning, so a successfully constructed graph is already verified
//! against the expected `(n, k, lambda, mu)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, SrgParams};

/// The pentagon `C_5 = SRG(5,2,0,1)`.
pub fn pentagon() -> Graph {
    let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    assert_srg(&g, (5, 2, 0, 1), "pentagon");
    g
}

/// The Petersen graph `SRG(10,3,0,1)`, built as the Kneser graph on the
/// 2-subsets of a 5-set: vertices are pairs, adjacent iff disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::build(10, &edges).unwrap();
    assert_srg(&g, (10, 3, 0, 1), "petersen");
    g
}

/// The Clebsch graph `SRG(16,5,0,2)`: vertices are 4-bit labels, two labels
/// adjacent iff they differ in exactly one bit or in all four bits.
pub fn clebsch() -> Graph {
    let mut edges = Vec::new();
    for u in 0..16usize {
        for v in (u + 1)..16 {
            let d = (u ^ v).count_ones();
            if d == 1 || d == 4 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::build(16, &edges).unwrap();
    assert_srg(&g, (16, 5, 0, 2), "clebsch");
    g
}

/// The Hoffman-Singleton graph `SRG(50,7,0,1)`, via the classical five
/// pentagons / five pentagrams construction: pentagon `P_h` joined to
/// pentagram `Q_i` by matching vertex `j` of `P_h` to vertex
/// `h*i + j (mod 5)` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    let g = Graph::build(50, &edges).unwrap();
    assert_srg(&g, (50, 7, 0, 1), "hoffman-singleton");
    g
}

/// The trapezohedral graph `T_n`: an outer cycle
/// `a_0, b_0, a_1, b_1, ..., a_{n-1}, b_{n-1}` plus hubs `alpha, beta` with
/// `alpha` adjacent to every `a_i` and `beta` to every `b_i`.
///
/// Vertex numbering: `a_i = 2i`, `b_i = 2i + 1`, `alpha = 2n`, `beta = 2n+1`
/// (rim first, hubs last).
pub fn trapezohedral(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "trapezohedral graphs require n >= 3, got {n}"
        )));
    }
    let a = |i: usize| 2 * (i % n);
    let b = |i: usize| 2 * (i % n) + 1;
    let (alpha, beta) = (2 * n, 2 * n + 1);
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((a(i), b(i)));
        edges.push((b(i), a(i + 1)));
        edges.push((alpha, a(i)));
        edges.push((beta, b(i)));
    }
    let g = Graph::build(2 * n + 2, &edges)?;
    debug_assert_eq!(g.edge_count(), 4 * n);
    Ok(g)
}

/// Check part of the extended binary Golay code generator in `[I12 | B]`
/// form: row `i` of the generator is `e_i` on the first 12 coordinates and
/// `GOLAY_CHECK[i]` on the last 12.
///
/// Rows are the systematic encodings of the unit messages under the perfect
/// (23,12,7) code with generator polynomial
/// `x^11 + x^9 + x^7 + x^6 + x^5 + x + 1`, extended by an overall parity bit.
const GOLAY_CHECK: [u32; 12] = [
    0xae3, 0xdc6, 0x16f, 0x2de, 0x5bc, 0x99b, 0xb36, 0xe6c, 0x63b, 0xe95, 0x7c9, 0xd71,
];

/// All 4096 codewords of the extended binary Golay code as 24-bit masks.
pub fn golay_codewords() -> Vec<u32> {
    let rows: Vec<u32> = (0..12).map(|i| (1 << i) | (GOLAY_CHECK[i] << 12)).collect();
    (0u32..4096)
        .map(|msg| {
            (0..12)
                .filter(|&i| msg >> i & 1 == 1)
                .fold(0u32, |acc, i| acc ^ rows[i])
        })
        .collect()
}

/// The 759 octads (weight-8 codewords) of the extended binary Golay code,
/// each as a sorted 8-element subset of `{0, ..., 23}`.
pub fn golay_octads() -> Vec<[usize; 8]> {
    let words = golay_codewords();
    let mut octads = Vec::with_capacity(759);
    let mut weight_counts = [0usize; 25];
    for &w in &words {
        let weight = w.count_ones() as usize;
        weight_counts[weight] += 1;
        if weight == 8 {
            let mut pts = [0usize; 8];
            let mut idx = 0;
            for bit in 0..24 {
                if w >> bit & 1 == 1 {
                    pts[idx] = bit;
                    idx += 1;
                }
            }
            octads.push(pts);
        }
    }
    // weight enumerator of the [24,12,8] code: 1, 759, 2576, 759, 1
    assert_eq!(weight_counts[0], 1, "golay code: zero word");
    assert_eq!(weight_counts[8], 759, "golay code: octad count");
    assert_eq!(weight_counts[12], 2576, "golay code: dodecad count");
    assert_eq!(weight_counts[16], 759, "golay code: 16-weight count");
    assert_eq!(weight_counts[24], 1, "golay code: all-ones word");
    assert!(
        (1..8).all(|w| weight_counts[w] == 0),
        "golay code: minimum nonzero weight 8"
    );
    octads.sort_unstable();
    octads
}

/// A Steiner system S(3,6,22): 77 six-element blocks on points `0..22`.
#[derive(Clone, Debug)]
pub struct SteinerSystem {
    pub blocks: Vec<[usize; 6]>,
}

/// Derive S(3,6,22) from the octads: fix the two largest points 22 and 23 of
/// the 24-set; the blocks are the octads through both, with those points
/// removed.
pub fn steiner_3_6_22() -> SteinerSystem {
    let mut blocks = Vec::with_capacity(77);
    for octad in golay_octads() {
        if octad.contains(&22) && octad.contains(&23) {
            let mut block = [0usize; 6];
            let mut idx = 0;
            for &p in &octad {
                if p < 22 {
                    block[idx] = p;
                    idx += 1;
                }
            }
            assert_eq!(idx, 6);
            blocks.push(block);
        }
    }
    blocks.sort_unstable();
    assert_eq!(blocks.len(), 77, "S(3,6,22): block count");
    // every point in exactly 21 blocks, every 3-subset in exactly one block
    let mut point_count = [0usize; 22];
    let mut triple_count = std::collections::HashMap::new();
    for block in &blocks {
        for i in 0..6 {
            point_count[block[i]] += 1;
            for j in (i + 1)..6 {
                for k in (j + 1)..6 {
                    *triple_count.entry((block[i], block[j], block[k])).or_insert(0usize) += 1;
                }
            }
        }
    }
    assert!(point_count.iter().all(|&c| c == 21), "S(3,6,22): point replication");
    assert_eq!(triple_count.len(), 1540, "S(3,6,22): triple coverage");
    assert!(triple_count.values().all(|&c| c == 1), "S(3,6,22): triple uniqueness");
    SteinerSystem { blocks }
}

fn block_mask(block: &[usize]) -> u32 {
    block.iter().fold(0u32, |acc, &p| acc | (1 << p))
}

/// The Mesner-M22 graph `SRG(77,16,0,4)`: vertices are the 77 blocks of
/// S(3,6,22), adjacent iff disjoint.
pub fn mesner() -> Graph {
    let system = steiner_3_6_22();
    let masks: Vec<u32> = system.blocks.iter().map(|b| block_mask(b)).collect();
    let g = disjointness_graph(&masks);
    assert_srg(&g, (77, 16, 0, 4), "mesner");
    g
}

/// The Sims-Gewirtz graph `SRG(56,10,0,2)`: the 56 blocks of S(3,6,22)
/// avoiding the largest point 21, adjacent iff disjoint.
pub fn gewirtz() -> Graph {
    let system = steiner_3_6_22();
    let masks: Vec<u32> = system
        .blocks
        .iter()
        .filter(|b| !b.contains(&21))
        .map(|b| block_mask(b))
        .collect();
    assert_eq!(masks.len(), 56);
    let g = disjointness_graph(&masks);
    assert_srg(&g, (56, 10, 0, 2), "gewirtz");
    g
}

/// The Higman-Sims graph `SRG(100,22,0,6)`: an apex vertex joined to the 22
/// points of S(3,6,22); points joined to the blocks containing them; blocks
/// joined iff disjoint.
///
/// Numbering: apex = 0, point `p` = `1 + p`, block `i` = `23 + i` with
/// blocks in sorted order.
pub fn higman_sims() -> Graph {
    let system = steiner_3_6_22();
    let mut edges = Vec::new();
    for p in 0..22 {
        edges.push((0, 1 + p));
    }
    for (i, block) in system.blocks.iter().enumerate() {
        for &p in block {
            edges.push((1 + p, 23 + i));
        }
    }
    let masks: Vec<u32> = system.blocks.iter().map(|b| block_mask(b)).collect();
    for i in 0..77 {
        for j in (i + 1)..77 {
            if masks[i] & masks[j] == 0 {
                edges.push((23 + i, 23 + j));
            }
        }
    }
    let g = Graph::build(100, &edges).unwrap();
    assert_srg(&g, (100, 22, 0, 6), "higman-sims");
    g
}

fn disjointness_graph(masks: &[u32]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(masks.len(), &edges).unwrap()
}

fn assert_srg(g: &Graph, expected: (usize, usize, usize, usize), name: &str) {
    let params = g
        .srg_parameters()
        .unwrap_or_else(|| panic!("{name}: constructed graph is not strongly regular"));
    let want = SrgParams {
        n: expected.0,
        k: expected.1,
        lambda: expected.2,
        mu: expected.3,
    };
    assert_eq!(params, want, "{name}: unexpected parameters");
}

/// `(n, k, lambda, mu)` as a plain tuple, for tables of expected values.
pub type ParamTuple = (usize, usize, usize, usize);

/// The seven triangle-free strongly regular graphs with their constructor
/// names and expected parameters, in the conventional order.
pub const SEVEN_GRAPHS: [(&str, ParamTuple); 7] = [
    ("pentagon", (5, 2, 0, 1)),
    ("petersen", (10, 3, 0, 1)),
    ("clebsch", (16, 5, 0, 2)),
    ("hoffman-singleton", (50, 7, 0, 1)),
    ("gewirtz", (56, 10, 0, 2)),
    ("mesner", (77, 16, 0, 4)),
    ("higman-sims", (100, 22, 0, 6)),
];

/// Look up a constructor by name. Accepts the seven graph names and
/// `trapezohedral:<n>`.
pub fn by_name(name: &str) -> Result<Graph> {
    if let Some(arg) = name.strip_prefix("trapezohedral:") {
        let n: usize = arg
            .parse()
            .map_err(|_| Error::Domain(format!("invalid trapezohedral size '{arg}'")))?;
        return trapezohedral(n);
    }
    match name {
        "pentagon" => Ok(pentagon()),
        "petersen" => Ok(petersen()),
        "clebsch" => Ok(clebsch()),
        "hoffman-singleton" => Ok(hoffman_singleton()),
        "gewirtz" => Ok(gewirtz()),
        "mesner" => Ok(mesner()),
        "higman-sims" => Ok(higman_sims()),
        _ => Err(Error::Domain(format!("unknown graph name '{name}'"))),
    }
}
