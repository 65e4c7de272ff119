//! Randomized invariants: field axioms for the quadratic arithmetic,
//! idempotent-trace-equals-rank on random projections, enumeration oracles,
//! isomorphism sanity, and the relative-plus subgraph property.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use srgq::constructors::clebsch;
use srgq::graph::Graph;
use srgq::iso::are_isomorphic;
use srgq::json::{graph_from_json, graph_to_json};
use srgq::plus::{plus_graph, relative_plus};
use srgq::quad::{QuadElem, QuadMatrix};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn arb_elem() -> impl Strategy<Value = QuadElem> {
    ((-20i64..=20, 1i64..=6), (-20i64..=20, 1i64..=6))
        .prop_map(|((an, ad), (bn, bd))| QuadElem::new(ratio(an, ad), ratio(bn, bd)))
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn field_axioms(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
        // associativity and commutativity of multiplication
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        // distributivity
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        // inverses
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.mul(&inv), QuadElem::one());
        }
        // sign is multiplicative
        prop_assert_eq!(x.mul(&y).sign(), x.sign() * y.sign());
    }

    /// Random orthogonal projections P = B (B^T B)^{-1} B^T are symmetric
    /// idempotents whose trace equals their rank.
    #[test]
    fn projection_trace_equals_rank(
        cols in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=3),
    ) {
        let n = 4;
        let k = cols.len();
        let b = QuadMatrix::from_fn(n, |i, j| {
            if j < k { QuadElem::from_int(cols[j][i]) } else { QuadElem::zero() }
        });
        // gram = B^T B restricted to the k x k block
        let gram = QuadMatrix::from_fn(k, |i, j| {
            let mut acc = QuadElem::zero();
            for r in 0..n {
                acc = acc.add(&b.get(r, i).mul(b.get(r, j)));
            }
            acc
        });
        if gram.rank() < k {
            return Ok(()); // B not full column rank; skip
        }
        let inv = invert(&gram);
        let projection = QuadMatrix::from_fn(n, |i, j| {
            let mut acc = QuadElem::zero();
            for a in 0..k {
                for c in 0..k {
                    acc = acc.add(&b.get(i, a).mul(inv.get(a, c)).mul(b.get(j, c)));
                }
            }
            acc
        });
        prop_assert!(projection.is_symmetric());
        prop_assert!(projection.is_idempotent());
        let rank = projection.rank();
        prop_assert_eq!(rank, k);
        prop_assert_eq!(projection.trace(), QuadElem::from_int(rank as i64));
    }

    /// Every 4-cycle found canonically is found by the quartic scan, and
    /// vice versa.
    #[test]
    fn four_cycles_match_naive_scan(g in arb_graph(20)) {
        prop_assert_eq!(g.four_cycles().len(), naive_four_cycle_count(&g));
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(16)) {
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn graph_json_round_trip(g in arb_graph(16)) {
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn isomorphism_reflexive_and_relabel_invariant(
        g in arb_graph(9),
        seed in any::<u64>(),
    ) {
        prop_assert!(are_isomorphic(&g, &g).unwrap());
        // relabel by a seeded permutation
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        let h = Graph::build(n, &edges).unwrap();
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert!(are_isomorphic(&h, &g).unwrap());
    }

    /// The relative plus graph on any edge subset is a subgraph of the full
    /// plus graph under the back-mapping.
    #[test]
    fn relative_plus_subgraph_property(mask in prop::collection::vec(any::<bool>(), 40)) {
        let g = clebsch();
        let subset: Vec<usize> = mask
            .iter()
            .enumerate()
            .filter_map(|(e, &keep)| keep.then_some(e))
            .collect();
        let full = plus_graph(&g);
        let rel = relative_plus(&subset, &g).unwrap();
        prop_assert_eq!(rel.graph.vertex_count(), subset.len());
        for (i, j) in rel.graph.edges() {
            let (e, f) = (rel.edge_of_vertex[*i], rel.edge_of_vertex[*j]);
            prop_assert!(full.graph.has_edge(e, f));
        }
    }
}

/// Gauss-Jordan inverse for small exact matrices (test helper).
#[allow(clippy::needless_range_loop)]
fn invert(m: &QuadMatrix) -> QuadMatrix {
    let n = m.dim();
    let mut work: Vec<Vec<QuadElem>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        m.get(i, j).clone()
                    } else if j - n == i {
                        QuadElem::one()
                    } else {
                        QuadElem::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .expect("matrix is invertible");
        work.swap(col, pivot);
        let inv = work[col][col].inverse().unwrap();
        for j in 0..2 * n {
            work[col][j] = work[col][j].mul(&inv);
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for j in 0..2 * n {
                    let delta = factor.mul(&work[col][j]);
                    work[r][j] = work[r][j].sub(&delta);
                }
            }
        }
    }
    QuadMatrix::from_fn(n, |i, j| work[i][n + j].clone())
}

fn naive_four_cycle_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || !g.has_edge(b, c) {
                    continue;
                }
                for d in 0..n {
                    if d != a && d != b && d != c && g.has_edge(c, d) && g.has_edge(d, a) {
                        count += 1;
                    }
                }
            }
        }
    }
    count / 8
}
