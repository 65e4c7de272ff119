//! Exact arithmetic over the field `Q(sqrt 5)` and the dense symmetric
//! matrices needed to certify a two-distinct-eigenvalue witness.
//!
//! An element is stored as `a + b*sqrt5` with arbitrary-precision rational
//! `a, b`; all operations are exact and there is no numerical tolerance
//! anywhere in this module. Idempotency (`M^2 = M`) together with the right
//! zero pattern is exactly what certifies that a graph admits a matrix with
//! eigenvalues `{0, 1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An element `a + b*sqrt5` of `Q(sqrt 5)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadElem {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadElem { a, b }
    }

    pub fn zero() -> Self {
        QuadElem {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        QuadElem {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        QuadElem {
            a: BigRational::from_integer(BigInt::from(v)),
            b: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        QuadElem {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
        }
    }

    /// `num/den * sqrt5`.
    pub fn surd(num: i64, den: i64) -> Self {
        QuadElem {
            a: BigRational::zero(),
            b: BigRational::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &QuadElem) -> QuadElem {
        QuadElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub fn sub(&self, rhs: &QuadElem) -> QuadElem {
        QuadElem {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    pub fn neg(&self) -> QuadElem {
        QuadElem {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn mul(&self, rhs: &QuadElem) -> QuadElem {
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 5 b1 b2 + (a1 b2 + b1 a2) r
        let five = BigRational::from_integer(BigInt::from(5));
        QuadElem {
            a: &self.a * &rhs.a + five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    /// Multiplicative inverse; `None` for zero. The field norm
    /// `a^2 - 5 b^2` vanishes only at zero since `sqrt5` is irrational.
    pub fn inverse(&self) -> Option<QuadElem> {
        let five = BigRational::from_integer(BigInt::from(5));
        let norm = &self.a * &self.a - five * &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(QuadElem {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
        })
    }

    /// Exact sign as a real number: -1, 0, or 1.
    ///
    /// Decided by rational comparison only; when `a` and `b` disagree in
    /// sign the comparison reduces to `a^2` versus `5 b^2`.
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (s, t) if s == t => s,
            _ => {
                let five = BigRational::from_integer(BigInt::from(5));
                let lhs = &self.a * &self.a;
                let rhs = five * &self.b * &self.b;
                // a and b have opposite signs; the larger square wins
                match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    std::cmp::Ordering::Equal => 0, // unreachable: norm is nonzero off 0
                }
            }
        }
    }
}

fn rational_sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl std::fmt::Display for QuadElem {
    /// Exact rendering: `p/q`, `r/s*sqrt5`, or `p/q + r/s*sqrt5`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt5", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt5", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}*sqrt5", self.a, self.b)
        }
    }
}

impl serde::Serialize for QuadElem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A dense square matrix over `Q(sqrt 5)`, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadMatrix {
    dim: usize,
    entries: Vec<QuadElem>,
}

impl QuadMatrix {
    pub fn zeros(dim: usize) -> Self {
        QuadMatrix {
            dim,
            entries: vec![QuadElem::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = QuadElem::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> QuadElem) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        QuadMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadElem {
        &self.entries[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut QuadElem {
        &mut self.entries[i * self.dim + j]
    }

    pub fn mul(&self, rhs: &QuadMatrix) -> QuadMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        QuadMatrix::from_fn(n, |i, j| {
            let mut acc = QuadElem::zero();
            for k in 0..n {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                acc = acc.add(&lhs.mul(rhs.get(k, j)));
            }
            acc
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact check that `M * M = M`.
    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    pub fn trace(&self) -> QuadElem {
        let mut acc = QuadElem::zero();
        for i in 0..self.dim {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Rank over `Q(sqrt 5)` by exact Gaussian elimination with
    /// first-nonzero pivot selection.
    #[allow(clippy::needless_range_loop)] // rows of `work` are borrowed disjointly
    pub fn rank(&self) -> usize {
        let n = self.dim;
        let mut work: Vec<Vec<QuadElem>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let pivot = match (rank..n).find(|&r| !work[r][col].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            work.swap(rank, pivot);
            let inv = work[rank][col].inverse().expect("pivot is nonzero");
            for j in col..n {
                work[rank][j] = work[rank][j].mul(&inv);
            }
            for r in 0..n {
                if r != rank && !work[r][col].is_zero() {
                    let factor = work[r][col].clone();
                    for j in col..n {
                        let delta = factor.mul(&work[rank][j]);
                        work[r][j] = work[r][j].sub(&delta);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Sign pattern of the explicit 16x16 Clebsch witness: the full matrix is
/// `(1/(2*sqrt5)) * (sqrt5 * I + S)` for this integer matrix `S`, with rows
/// and columns indexed by the 4-bit vertex labels of [`crate::constructors::clebsch`]
/// in natural binary order.
const CLEBSCH_WITNESS_SIGNS: [[i8; 16]; 16] = [
    [0, -1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    [-1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0],
    [1, 0, 0, 1, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0],
    [0, 0, 1, 0, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, 1, 0, 0],
    [0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, -1],
    [1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, -1, 0],
];

/// The explicit Clebsch witness matrix: diagonal `1/2`, off-diagonal entries
/// `0` or `+-1/(2*sqrt5) = +-sqrt5/10` following the stored sign pattern.
pub fn clebsch_witness_matrix() -> QuadMatrix {
    let m = QuadMatrix::from_fn(16, |i, j| {
        if i == j {
            QuadElem::from_ratio(1, 2)
        } else {
            match CLEBSCH_WITNESS_SIGNS[i][j] {
                0 => QuadElem::zero(),
                1 => QuadElem::surd(1, 10),
                -1 => QuadElem::surd(-1, 10),
                _ => unreachable!(),
            }
        }
    });
    // transcription checksums: symmetry and five nonzeros per row
    debug_assert!(m.is_symmetric());
    debug_assert!((0..16).all(|i| (0..16).filter(|&j| j != i && !m.get(i, j).is_zero()).count() == 5));
    m
}

/// True iff the off-diagonal zero pattern of `m` matches the non-adjacency
/// pattern of `g` (that is, `m` lies in the matrix class described by `g`).
pub fn pattern_matches(m: &QuadMatrix, g: &Graph) -> Result<bool> {
    if m.dim() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            matrix: m.dim(),
            graph: g.vertex_count(),
        });
    }
    for i in 0..m.dim() {
        for j in (i + 1)..m.dim() {
            if m.get(i, j).is_zero() == g.has_edge(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of checking a candidate two-eigenvalue witness for a graph.
///
/// `pass` requires: the zero pattern matches the graph, `M^2 = M` exactly,
/// and `M` is neither the zero matrix nor the identity. A passing witness
/// has eigenvalues `0` and `1` with multiplicities `(dim - rank, rank)`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TwoEigenvalueCertificate {
    pub dim: usize,
    pub pattern_ok: bool,
    pub idempotent_ok: bool,
    pub nontrivial: bool,
    pub rank: usize,
    pub pass: bool,
}

impl TwoEigenvalueCertificate {
    pub fn multiplicity_of_zero(&self) -> usize {
        self.dim - self.rank
    }

    pub fn multiplicity_of_one(&self) -> usize {
        self.rank
    }
}

pub fn two_eigenvalue_certificate(m: &QuadMatrix, g: &Graph) -> Result<TwoEigenvalueCertificate> {
    let pattern_ok = pattern_matches(m, g)?;
    let idempotent_ok = m.is_idempotent();
    let nontrivial = *m != QuadMatrix::zeros(m.dim()) && *m != QuadMatrix::identity(m.dim());
    let rank = m.rank();
    Ok(TwoEigenvalueCertificate {
        dim: m.dim(),
        pattern_ok,
        idempotent_ok,
        nontrivial,
        rank,
        pass: pattern_ok && idempotent_ok && nontrivial,
    })
}

/// Bounds on the minimum positive semidefinite rank of `g`.
///
/// Lower bound: `ceil(n/2)` when `g` is triangle-free with no isolated
/// vertices, else the trivial `1`. Upper bound: the rank of a certified
/// two-eigenvalue witness when one is supplied, else `n`.
pub fn psd_rank_bounds(g: &Graph, witness: Option<&QuadMatrix>) -> Result<(usize, usize)> {
    let n = g.vertex_count();
    let triangle_free = g
        .edges()
        .iter()
        .all(|&(u, v)| g.common_neighbor_count(u, v) == 0);
    let no_isolated = (0..n).all(|v| g.degree(v) > 0);
    let lower = if triangle_free && no_isolated {
        n.div_ceil(2)
    } else {
        1
    };
    let upper = match witness {
        Some(m) => {
            let cert = two_eigenvalue_certificate(m, g)?;
            if !cert.pass {
                return Err(Error::Contract(
                    "witness matrix does not pass the two-eigenvalue certificate".into(),
                ));
            }
            cert.rank
        }
        None => n,
    };
    Ok((lower, upper))
}
