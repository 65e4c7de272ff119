//! Acceptance suite: one test per headline claim, each printing a PASS line
//! with its runtime. Everything here is exact arithmetic; the time limits
//! are generous ceilings, not tuning targets.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use srgq::analyzer::{
    analyze, expected_verdict, srg_adjacency_spectrum, unique_common_neighbor_obstruction,
    QVerdict,
};
use srgq::bitset::Bitset;
use srgq::constructors::{by_name, clebsch, gewirtz, trapezohedral, SEVEN_GRAPHS};
use srgq::gewirtz::{
    find_plt_decomposition, pair_four_cycles, perfect_matching_property, rim_exclusivity,
    trapezohedral_subgraphs, verify_nine_four_cycles, DEFAULT_SEARCH_BUDGET,
};
use srgq::graph::{FourCycle, Graph};
use srgq::iso::{are_isomorphic, is_cycle_graph};
use srgq::parity::{
    build_odd_four_cycle_system, check_consequences, extract_signs_from_matrix, solve_gf2,
    verify_assignment, verify_certificate, Gf2System, ParityRow, Solution,
};
use srgq::plus::{plus_components, plus_graph};
use srgq::quad::{
    clebsch_witness_matrix, psd_rank_bounds, two_eigenvalue_certificate, QuadElem, QuadMatrix,
};

fn finish(criterion: usize, label: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    println!(
        "criterion {criterion} ({label}): PASS ({:.3}s)",
        elapsed.as_secs_f64()
    );
    assert!(
        elapsed < limit,
        "criterion {criterion} took {elapsed:?}, limit {limit:?}"
    );
}

#[test]
fn criterion_01_seven_graph_parameter_table() {
    let started = Instant::now();
    for (name, (n, k, lambda, mu)) in SEVEN_GRAPHS {
        let g = by_name(name).unwrap();
        let p = g.srg_parameters().unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (n, k, lambda, mu), "{name}");
        assert!(p.feasibility_identity(), "{name}");
    }
    finish(1, "seven-graph parameter table", started, Duration::from_secs(30));
}

#[test]
fn criterion_02_clebsch_two_eigenvalue_certificate() {
    let started = Instant::now();
    let g = clebsch();
    let m = clebsch_witness_matrix();
    let cert = two_eigenvalue_certificate(&m, &g).unwrap();
    assert!(cert.pattern_ok);
    assert!(cert.idempotent_ok);
    assert!(cert.nontrivial);
    assert!(cert.pass);
    assert_eq!(m.trace(), QuadElem::from_int(8));
    assert_eq!(cert.rank, 8);
    assert_eq!(
        (cert.multiplicity_of_zero(), cert.multiplicity_of_one()),
        (8, 8)
    );
    // 2M - I is symmetric orthogonal
    let scaled = QuadMatrix::from_fn(16, |i, j| {
        let doubled = m.get(i, j).add(m.get(i, j));
        if i == j {
            doubled.sub(&QuadElem::one())
        } else {
            doubled
        }
    });
    assert!(scaled.is_symmetric());
    assert_eq!(scaled.mul(&scaled), QuadMatrix::identity(16));
    finish(2, "clebsch q=2 certificate", started, Duration::from_secs(1));
}

#[test]
fn criterion_03_psd_rank_bounds() {
    let started = Instant::now();
    let bounds = psd_rank_bounds(&clebsch(), Some(&clebsch_witness_matrix())).unwrap();
    assert_eq!(bounds, (8, 8));
    finish(3, "minimum psd rank bounds", started, Duration::from_secs(1));
}

#[test]
fn criterion_04_trapezohedral_family() {
    let started = Instant::now();
    for n in 3..=60usize {
        let t = trapezohedral(n).unwrap();
        let p = plus_graph(&t);
        assert_eq!(p.graph.vertex_count(), 4 * n, "T_{n}");
        assert!(
            (0..p.graph.vertex_count()).all(|v| p.graph.degree(v) == 2),
            "T_{n} plus graph must be 2-regular"
        );
        let connected = p.graph.is_connected();
        assert_eq!(connected, n % 3 != 0, "T_{n} connectivity");
        if connected {
            // a connected 2-regular graph on 4n vertices is the 4n-cycle
            assert!(is_cycle_graph(&p.graph), "T_{n} plus graph");
            if 4 * n <= 64 {
                // cross-check against an explicit cycle with the matcher
                let edges: Vec<(usize, usize)> =
                    (0..4 * n).map(|i| (i, (i + 1) % (4 * n))).collect();
                let reference = Graph::build(4 * n, &edges).unwrap();
                assert!(are_isomorphic(&p.graph, &reference).unwrap());
            }
        }
    }
    finish(4, "trapezohedral plus family", started, Duration::from_secs(5));
}

#[test]
fn criterion_05_clebsch_plus_structure() {
    let started = Instant::now();
    let p = plus_graph(&clebsch());
    let comps = plus_components(&p);
    assert_eq!(comps.len(), 5);
    let mut k44_edges = Vec::new();
    for u in 0..4usize {
        for v in 0..4usize {
            k44_edges.push((u, 4 + v));
        }
    }
    let k44 = Graph::build(8, &k44_edges).unwrap();
    for comp in &comps {
        assert_eq!(comp.source_edges.len(), 8);
        assert!(are_isomorphic(&comp.graph, &k44).unwrap());
    }
    finish(5, "clebsch plus structure", started, Duration::from_secs(1));
}

#[test]
fn criterion_06_gewirtz_plus_connected() {
    let started = Instant::now();
    let p = plus_graph(&gewirtz());
    assert_eq!(p.graph.vertex_count(), 280);
    assert_eq!(p.graph.components().len(), 1);
    finish(6, "gewirtz plus connectivity", started, Duration::from_secs(5));
}

#[test]
fn criterion_07_gewirtz_parity_infeasible() {
    let g = gewirtz();
    let sys = build_odd_four_cycle_system(&g, false).unwrap();
    assert_eq!(sys.rows.len(), 630);
    assert_eq!(sys.columns, 280);
    let started = Instant::now();
    let solution = solve_gf2(&sys);
    let elimination_time = started.elapsed();
    match solution {
        Solution::Feasible(_) => panic!("the 630x280 odd-4-cycle system must be infeasible"),
        Solution::Infeasible(cert) => {
            assert!(verify_certificate(&sys, &cert).unwrap());
            assert!(!cert.rows.is_empty());
        }
    }
    assert!(elimination_time < Duration::from_secs(1));
    println!(
        "criterion 7 (gewirtz parity infeasible): PASS ({:.3}s elimination)",
        elimination_time.as_secs_f64()
    );
}

#[test]
fn criterion_08_clebsch_parity_consistency() {
    let started = Instant::now();
    let g = clebsch();
    let sys = build_odd_four_cycle_system(&g, false).unwrap();
    assert_eq!(sys.rows.len(), 40);
    let signs = match solve_gf2(&sys) {
        Solution::Feasible(signs) => signs,
        Solution::Infeasible(_) => panic!("the clebsch system must be feasible"),
    };
    assert!(verify_assignment(&g, &signs).unwrap());
    // signs read off the explicit witness also satisfy every row
    let matrix_signs = extract_signs_from_matrix(&clebsch_witness_matrix(), &g).unwrap();
    assert!(verify_assignment(&g, &matrix_signs).unwrap());
    let report = check_consequences(&g, &matrix_signs).unwrap();
    assert!(report.crossbar_six_cycles > 0);
    assert!(report.crossbar_all_even);
    assert!(report.fan_eight_cycles > 0);
    assert!(report.fan_all_even);
    finish(8, "clebsch parity consistency", started, Duration::from_secs(1));
}

#[test]
fn criterion_09_basic_obstructions() {
    let started = Instant::now();
    for name in ["pentagon", "petersen", "hoffman-singleton"] {
        let g = by_name(name).unwrap();
        let (u, v, w) = unique_common_neighbor_obstruction(&g)
            .unwrap_or_else(|| panic!("{name} must have a unique-common-neighbor pair"));
        assert!(!g.has_edge(u, v));
        assert_eq!(g.common_neighbor_count(u, v), 1);
        assert!(g.has_edge(u, w) && g.has_edge(v, w));
    }
    let mesner = by_name("mesner").unwrap();
    assert!(srgq::analyzer::odd_order_obstruction(&mesner).unwrap());
    assert!(!srgq::analyzer::odd_order_obstruction(&clebsch()).unwrap());
    for (name, _) in SEVEN_GRAPHS {
        let g = by_name(name).unwrap();
        assert!(g.every_vertex_on_five_cycle(), "{name}");
    }
    finish(9, "preliminary obstructions", started, Duration::from_secs(5));
}

#[test]
fn criterion_10_gewirtz_structure_suite() {
    let started = Instant::now();
    let g = gewirtz();
    assert!(verify_nine_four_cycles(&g).unwrap());
    let dec = find_plt_decomposition(&g, DEFAULT_SEARCH_BUDGET).unwrap();
    assert_eq!(dec.p.len(), 16);
    assert_eq!(dec.l.len(), 16);
    assert_eq!(dec.t.len(), 24);
    // G[T] is six disjoint 4-cycles
    let (tau, _) = g.induced(&dec.t).unwrap();
    let comps = tau.components();
    assert_eq!(comps.len(), 6);
    assert!(comps.iter().all(|c| c.len() == 4));
    assert!(comps.iter().all(|c| c.iter().all(|&v| tau.degree(v) == 2)));
    // all 24 trapezohedral subgraphs
    let subs = trapezohedral_subgraphs(&g, &dec).unwrap();
    assert_eq!(subs.len(), 24);
    // three pairings partitioning the 64 internal edges
    let pairings = pair_four_cycles(&g, &dec).unwrap();
    assert_eq!(pairings.len(), 3);
    // perfect matchings and exclusivity
    assert!(perfect_matching_property(&g, &dec, &dec.pairings).unwrap());
    assert!(rim_exclusivity(&g, &dec, &dec.pairings).unwrap());
    finish(10, "gewirtz structure suite", started, Duration::from_secs(120));
}

/// Brute-force oracle: try all 2^m assignments.
fn brute_force_feasible(sys: &Gf2System) -> Option<Vec<bool>> {
    let m = sys.columns;
    assert!(m <= 20);
    'outer: for mask in 0u32..(1 << m) {
        for row in &sys.rows {
            let mut parity = false;
            for e in row.support.ones() {
                parity ^= mask >> e & 1 == 1;
            }
            if parity != row.rhs {
                continue 'outer;
            }
        }
        return Some((0..m).map(|e| mask >> e & 1 == 1).collect());
    }
    None
}

#[test]
fn criterion_11_solver_soundness_random_systems() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5247_5153);
    let mut feasible_count = 0usize;
    for _ in 0..1000 {
        // random graph with at most 12 edges; its edges are the variables
        let n = rng.random_range(5..=9usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        // shuffle by index sampling
        let keep = rng.random_range(4..=12usize.min(edges.len()));
        for i in 0..keep {
            let j = rng.random_range(i..edges.len());
            edges.swap(i, j);
        }
        edges.truncate(keep);
        let g = Graph::build(n, &edges).unwrap();
        let m = g.edge_count();
        if m < 4 {
            continue;
        }
        // random 4-subset parity rows over the edges
        let row_count = rng.random_range(0..=15usize);
        let mut rows = Vec::new();
        for _ in 0..row_count {
            let mut support_ids: Vec<usize> = (0..m).collect();
            for i in 0..4 {
                let j = rng.random_range(i..m);
                support_ids.swap(i, j);
            }
            support_ids.truncate(4);
            let mut support = Bitset::new(m);
            for &e in &support_ids {
                support.set(e);
            }
            rows.push(ParityRow {
                support,
                rhs: rng.random_range(0..2) == 1,
                cycle: FourCycle {
                    vertices: [0, 1, 2, 3],
                    edges: [
                        support_ids[0],
                        support_ids[1],
                        support_ids[2],
                        support_ids[3],
                    ],
                },
            });
        }
        let sys = Gf2System { columns: m, rows };
        let oracle = brute_force_feasible(&sys);
        match solve_gf2(&sys) {
            Solution::Feasible(signs) => {
                assert!(oracle.is_some(), "solver says feasible, oracle disagrees");
                for row in &sys.rows {
                    let edges: Vec<usize> = row.support.ones().collect();
                    assert_eq!(signs.parity(&edges), row.rhs);
                }
                feasible_count += 1;
            }
            Solution::Infeasible(cert) => {
                assert!(oracle.is_none(), "solver says infeasible, oracle disagrees");
                assert!(verify_certificate(&sys, &cert).unwrap());
            }
        }
    }
    // both outcomes must actually occur across the corpus
    assert!(feasible_count > 0 && feasible_count < 1000);
    finish(11, "solver soundness on random systems", started, Duration::from_secs(30));
}

#[test]
fn criterion_12_full_verdict_table() {
    let started = Instant::now();
    let expected = [
        ("pentagon", QVerdict::Three),
        ("petersen", QVerdict::Three),
        ("clebsch", QVerdict::Two),
        ("hoffman-singleton", QVerdict::Three),
        ("gewirtz", QVerdict::Three),
        ("mesner", QVerdict::Three),
        ("higman-sims", QVerdict::Open),
    ];
    for (name, want) in expected {
        let g = by_name(name).unwrap();
        let report = analyze(&g, name).unwrap();
        assert_eq!(report.verdict, want, "{name}");
        assert_eq!(expected_verdict(name), Some(want), "{name}");
        match want {
            QVerdict::Two => {
                let cert = report.two_eigenvalue.expect("q=2 verdict carries a witness");
                assert!(cert.pass);
            }
            QVerdict::Three => {
                assert!(!report.obstructions.is_empty(), "{name} needs an obstruction");
            }
            QVerdict::Open => {
                assert!(report.obstructions.is_empty());
                assert!(report.two_eigenvalue.is_none());
            }
        }
        // the spectrum is always exact with multiplicities summing to n
        let values = srg_adjacency_spectrum(&report.params).unwrap();
        assert_eq!(
            values.iter().map(|(_, m)| m).sum::<usize>(),
            report.params.n
        );
    }

    // the command-line `report --all` reproduces the table with exit 0
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_srgq"))
        .args(["report", "--all"])
        .output()
        .expect("report binary runs");
    assert!(output.status.success(), "report --all must exit 0");
    let stdout = String::from_utf8(output.stdout).unwrap();
    for line in [
        "pentagon (5,2,0,1): q=3",
        "petersen (10,3,0,1): q=3",
        "clebsch (16,5,0,2): q=2",
        "hoffman-singleton (50,7,0,1): q=3",
        "gewirtz (56,10,0,2): q=3",
        "mesner (77,16,0,4): q=3",
        "higman-sims (100,22,0,6): q=open",
    ] {
        assert!(stdout.contains(line), "missing line: {line}");
    }
    finish(12, "full verdict table", started, Duration::from_secs(120));
}

/// The structural counts quoted throughout: 40 and 630 4-cycles, cycles per
/// edge, and agreement with the naive oracle on the small graphs.
#[test]
fn derived_counts_match_oracles() {
    let c = clebsch();
    let cycles = c.four_cycles();
    assert_eq!(cycles.len(), 40);
    let mut per_edge = vec![0usize; c.edge_count()];
    for cy in &cycles {
        for &e in &cy.edges {
            per_edge[e] += 1;
        }
    }
    assert!(per_edge.iter().all(|&x| x == 4));

    let g = gewirtz();
    let cycles = g.four_cycles();
    assert_eq!(cycles.len(), 630);
    let mut per_edge = vec![0usize; g.edge_count()];
    for cy in &cycles {
        for &e in &cy.edges {
            per_edge[e] += 1;
        }
    }
    assert!(per_edge.iter().all(|&x| x == 9));
}
