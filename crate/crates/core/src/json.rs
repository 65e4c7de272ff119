//! Stable interchange formats.
//!
//! Graphs: `{"n": <int>, "edges": [[u, v], ...]}` with `u < v` and the list
//! sorted lexicographically. Matrices over `Q(sqrt 5)`: row-major entries
//! as `[a_num, a_den, b_num, b_den]` quadruples meaning `a + b*sqrt5`.
//! DOT output is provided for visualization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quad::{QuadElem, QuadMatrix};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
    };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    Graph::build(doc.n, &doc.edges)
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    /// Row-major `[a_num, a_den, b_num, b_den]` per entry.
    entries: Vec<Vec<[i128; 4]>>,
}

pub fn matrix_to_json(m: &QuadMatrix) -> Result<String> {
    let dim = m.dim();
    let mut entries = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            let e = m.get(i, j);
            row.push([
                to_i128(e.a.numer())?,
                to_i128(e.a.denom())?,
                to_i128(e.b.numer())?,
                to_i128(e.b.denom())?,
            ]);
        }
        entries.push(row);
    }
    serde_json::to_string(&MatrixJson { dim, entries }).map_err(|e| Error::Json(e.to_string()))
}

pub fn matrix_from_json(text: &str) -> Result<QuadMatrix> {
    let doc: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if doc.entries.len() != doc.dim || doc.entries.iter().any(|r| r.len() != doc.dim) {
        return Err(Error::Json("matrix entry grid does not match dim".into()));
    }
    for row in &doc.entries {
        for quad in row {
            if quad[1] == 0 || quad[3] == 0 {
                return Err(Error::Json("zero denominator in matrix entry".into()));
            }
        }
    }
    Ok(QuadMatrix::from_fn(doc.dim, |i, j| {
        let quad = doc.entries[i][j];
        QuadElem::new(
            BigRational::new(BigInt::from(quad[0]), BigInt::from(quad[1])),
            BigRational::new(BigInt::from(quad[2]), BigInt::from(quad[3])),
        )
    }))
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128()
        .ok_or_else(|| Error::Json("matrix entry too large for JSON export".into()))
}
