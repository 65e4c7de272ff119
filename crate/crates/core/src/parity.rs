//! Edge-sign parity engine over GF(2).
//!
//! Convention: one bit per edge, `0` for a positive matrix entry and `1`
//! for a negative one, so a cycle whose sign product is `-1` ("odd") is a
//! cycle whose edge bits sum to `1 (mod 2)`. Requiring every 4-cycle to be
//! odd yields one linear constraint per 4-cycle; feasibility is decided by
//! exact elimination, and infeasibility is returned as a row subset whose
//! XOR is the contradiction `0 = 1`, checkable without re-running the
//! solver.
//!
//! The system is only built for graphs with parameters `(n, k, 0, 2)`; for
//! any other graph the two-common-neighbor cancellation that forces odd
//! 4-cycles does not apply, so feasibility would carry no spectral meaning.
//! An explicit override constructs the system anyway.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{FourCycle, Graph};
use crate::quad::{pattern_matches, QuadMatrix};

/// A `+-1` sign for every edge of a graph, stored as bits (`1` = negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAssignment {
    bits: Bitset,
}

impl SignAssignment {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        let mut set = Bitset::new(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                set.set(i);
            }
        }
        SignAssignment { bits: set }
    }

    pub fn edge_count(&self) -> usize {
        self.bits.len()
    }

    /// True when edge `e` carries a negative sign.
    pub fn is_negative(&self, e: usize) -> bool {
        self.bits.get(e)
    }

    pub fn to_bit_vec(&self) -> Vec<u8> {
        (0..self.bits.len()).map(|e| u8::from(self.bits.get(e))).collect()
    }

    /// Parity of the bits on the given edges: true = odd sign product.
    pub fn parity(&self, edges: &[usize]) -> bool {
        edges.iter().filter(|&&e| self.bits.get(e)).count() % 2 == 1
    }
}

/// One parity constraint: the edges in `support` must sum to `rhs` mod 2.
#[derive(Clone, Debug)]
pub struct ParityRow {
    pub support: Bitset,
    pub rhs: bool,
    /// The 4-cycle this row was generated from.
    pub cycle: FourCycle,
}

/// A linear system over GF(2) on edge-sign bits.
#[derive(Clone, Debug)]
pub struct Gf2System {
    pub columns: usize,
    pub rows: Vec<ParityRow>,
}

/// A subset of rows whose XOR has empty support and odd right-hand side:
/// a self-contained proof that the system is unsatisfiable.
#[derive(Clone, Debug)]
pub struct InfeasibilityCertificate {
    /// Indices of the cited rows, ascending.
    pub rows: Vec<usize>,
    /// The 4-cycles behind the cited rows, in the same order.
    pub cycles: Vec<FourCycle>,
}

#[derive(Clone, Debug)]
pub enum Solution {
    Feasible(SignAssignment),
    Infeasible(InfeasibilityCertificate),
}

/// Build the odd-4-cycle system for `g`: one row per canonical 4-cycle,
/// requiring its four edge bits to sum to 1 mod 2.
///
/// Rejects graphs that are not `SRG(n, k, 0, 2)` unless `force` is set.
pub fn build_odd_four_cycle_system(g: &Graph, force: bool) -> Result<Gf2System> {
    if !force {
        match g.srg_parameters() {
            None => {
                return Err(Error::Applicability(
                    "graph is not strongly regular; the odd-4-cycle derivation needs (n,k,0,2)"
                        .into(),
                ))
            }
            Some(p) if p.lambda != 0 => {
                return Err(Error::Applicability(format!(
                    "lambda = {} but the odd-4-cycle derivation needs lambda = 0",
                    p.lambda
                )))
            }
            Some(p) if p.mu != 2 => {
                return Err(Error::Applicability(format!(
                    "mu = {} but the odd-4-cycle derivation needs mu = 2",
                    p.mu
                )))
            }
            Some(_) => {}
        }
    }
    let columns = g.edge_count();
    let rows = g
        .four_cycles()
        .into_iter()
        .map(|cycle| {
            let mut support = Bitset::new(columns);
            for &e in &cycle.edges {
                support.set(e);
            }
            ParityRow {
                support,
                rhs: true,
                cycle,
            }
        })
        .collect();
    Ok(Gf2System { columns, rows })
}

/// Solve by Gauss-Jordan elimination with bitset rows.
///
/// Deterministic: rows are consumed in order and pivots take the lowest
/// available column. Each working row carries the set of original rows it
/// is a combination of, so an inconsistent row immediately yields its
/// certificate. Feasible systems get the unique solution with all free
/// variables set to 0.
pub fn solve_gf2(sys: &Gf2System) -> Solution {
    let row_count = sys.rows.len();
    // (support, rhs, history over original row indices), pivot column per row
    let mut reduced: Vec<(Bitset, bool, Bitset)> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();

    for (index, row) in sys.rows.iter().enumerate() {
        let mut support = row.support.clone();
        let mut rhs = row.rhs;
        let mut history = Bitset::new(row_count);
        history.set(index);
        for (r, &col) in pivot_cols.iter().enumerate() {
            if support.get(col) {
                support.xor_with(&reduced[r].0);
                rhs ^= reduced[r].1;
                history.xor_with(&reduced[r].2);
            }
        }
        let col = match support.first_set() {
            Some(col) => col,
            None => {
                if rhs {
                    let rows: Vec<usize> = history.ones().collect();
                    let cycles = rows.iter().map(|&r| sys.rows[r].cycle).collect();
                    return Solution::Infeasible(InfeasibilityCertificate { rows, cycles });
                }
                continue; // redundant row
            }
        };
        // clear the new pivot column from every existing row
        for row in reduced.iter_mut() {
            if row.0.get(col) {
                row.0.xor_with(&support);
                row.1 ^= rhs;
                row.2.xor_with(&history);
            }
        }
        reduced.push((support, rhs, history));
        pivot_cols.push(col);
    }

    // free variables 0: each pivot row's support meets other pivots nowhere,
    // so its variable equals its right-hand side
    let mut bits = Bitset::new(sys.columns);
    for (r, &col) in pivot_cols.iter().enumerate() {
        if reduced[r].1 {
            bits.set(col);
        }
    }
    Solution::Feasible(SignAssignment { bits })
}

/// True iff every 4-cycle of `g` is odd under `signs`.
pub fn verify_assignment(g: &Graph, signs: &SignAssignment) -> Result<bool> {
    if signs.edge_count() != g.edge_count() {
        return Err(Error::Contract(format!(
            "assignment covers {} edges but graph has {}",
            signs.edge_count(),
            g.edge_count()
        )));
    }
    Ok(g.four_cycles().iter().all(|c| signs.parity(&c.edges)))
}

/// Re-check an infeasibility certificate against the original rows only:
/// the XOR of the cited supports must be empty while the XOR of the cited
/// right-hand sides is 1. No elimination is involved.
pub fn verify_certificate(sys: &Gf2System, cert: &InfeasibilityCertificate) -> Result<bool> {
    let mut support = Bitset::new(sys.columns);
    let mut rhs = false;
    for &r in &cert.rows {
        let row = sys.rows.get(r).ok_or(Error::Contract(format!(
            "certificate cites row {r} but the system has {} rows",
            sys.rows.len()
        )))?;
        support.xor_with(&row.support);
        rhs ^= row.rhs;
    }
    Ok(support.is_zero() && rhs)
}

/// Read the per-edge signs off a matrix whose pattern matches `g`:
/// bit 1 where the entry is negative.
pub fn extract_signs_from_matrix(m: &QuadMatrix, g: &Graph) -> Result<SignAssignment> {
    if !pattern_matches(m, g)? {
        return Err(Error::Contract(
            "matrix zero pattern does not match the graph".into(),
        ));
    }
    let mut bits = Bitset::new(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if m.get(u, v).sign() < 0 {
            bits.set(e);
        }
    }
    Ok(SignAssignment { bits })
}

/// Audit of the derived parity consequences under an assignment that makes
/// every 4-cycle odd: every crossbar 6-cycle must be even, and every
/// 8-cycle with an off-cycle vertex adjacent to four of its vertices (a
/// "fan" 8-cycle) must be even.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConsequenceReport {
    pub crossbar_six_cycles: usize,
    pub crossbar_all_even: bool,
    pub fan_eight_cycles: usize,
    pub fan_all_even: bool,
}

impl ConsequenceReport {
    pub fn all_even(&self) -> bool {
        self.crossbar_all_even && self.fan_all_even
    }
}

pub fn check_consequences(g: &Graph, signs: &SignAssignment) -> Result<ConsequenceReport> {
    if !verify_assignment(g, signs)? {
        return Err(Error::Contract(
            "assignment does not make every 4-cycle odd".into(),
        ));
    }
    let crossbars = g.crossbar_six_cycles();
    let crossbar_all_even = crossbars.iter().all(|cb| !signs.parity(&cb.rim));

    let mut fan_count = 0usize;
    let mut fan_all_even = true;
    for cycle in g.cycles_of_length(8) {
        let mut on_cycle = Bitset::new(g.vertex_count());
        for &v in &cycle {
            on_cycle.set(v);
        }
        let fans = (0..g.vertex_count()).filter(|&v| {
            !on_cycle.get(v) && g.neighbors(v).intersection_count(&on_cycle) == 4
        });
        let fan_vertices = fans.count();
        if fan_vertices > 0 {
            fan_count += fan_vertices;
            let rim: Vec<usize> = (0..8)
                .map(|i| g.edge_id(cycle[i], cycle[(i + 1) % 8]).unwrap())
                .collect();
            if signs.parity(&rim) {
                fan_all_even = false;
            }
        }
    }
    Ok(ConsequenceReport {
        crossbar_six_cycles: crossbars.len(),
        crossbar_all_even,
        fan_eight_cycles: fan_count,
        fan_all_even,
    })
}
