//! The Gotzmann certifier and the exhaustive star-graph verifier.
//!
//! An ideal `I` generated in degree `d >= 1` is Gotzmann exactly when
//! `H(P/I, d+1) = H(P/I, d)^<d>`. The certifier evaluates both sides from
//! monomial enumeration; the degree-2 closed form and the graph counting
//! formulas are only used to cross-check it.

use core::fmt;
use core::ops::Range;

use num_bigint::BigUint;

use crate::combinatorics::{kruskal_katona_pseudopower, macaulay_pseudopower};
use crate::complexes::face_counts;
use crate::graphs::Graph;
use crate::monomials::{hilbert_quotient, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GotzmannError {
    /// The ideal has no single generation degree.
    NotEquigenerated,
    /// The degree-2 closed form needs `m <= n`.
    TooManyGenerators { n: u64, m: u64 },
}

impl fmt::Display for GotzmannError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GotzmannError::NotEquigenerated => {
                f.write_str("ideal is not generated in a single degree")
            }
            GotzmannError::TooManyGenerators { n, m } => {
                write!(f, "closed form needs m <= n, got m = {m}, n = {n}")
            }
        }
    }
}

impl core::error::Error for GotzmannError {}

/// Face counts around the generation degree of a square-free ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KruskalKatonaCheck {
    /// `f_{d-1}`: faces with `d` vertices.
    pub f_prev: BigUint,
    /// `f_d`: faces with `d + 1` vertices.
    pub f_d: BigUint,
    /// `f_{d-1}^(d)`.
    pub bound: BigUint,
}

impl KruskalKatonaCheck {
    pub fn holds(&self) -> bool {
        self.f_d == self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotzmannReport {
    pub num_vars: usize,
    pub degree: u32,
    /// `H(P/I, d)`.
    pub h_quotient_d: BigUint,
    /// `H(P/I, d + 1)`.
    pub h_quotient_d1: BigUint,
    /// `H(P/I, d)^<d>`.
    pub macaulay_bound: BigUint,
    pub is_gotzmann: bool,
    /// Present for square-free ideals.
    pub kruskal_katona: Option<KruskalKatonaCheck>,
}

impl GotzmannReport {
    /// `f_d = f_{d-1}^(d)`, when the ideal is square-free.
    pub fn square_free_check(&self) -> Option<bool> {
        self.kruskal_katona.as_ref().map(KruskalKatonaCheck::holds)
    }

    /// Macaulay's bound `H(P/I, d+1) <= H(P/I, d)^<d>`. Failing this means
    /// an arithmetic bug, not a property of the ideal.
    pub fn respects_macaulay_bound(&self) -> bool {
        self.h_quotient_d1 <= self.macaulay_bound
    }
}

/// Decides whether `ideal` is Gotzmann in its generation degree.
///
/// The zero ideal is accepted when it carries a declared degree, and is
/// always Gotzmann.
pub fn certify(ideal: &MonomialIdeal) -> Result<GotzmannReport, GotzmannError> {
    let d = ideal
        .generation_degree()
        .ok_or(GotzmannError::NotEquigenerated)?;
    let h_quotient_d = hilbert_quotient(ideal, d);
    let h_quotient_d1 = hilbert_quotient(ideal, d + 1);
    let macaulay_bound = macaulay_pseudopower(&h_quotient_d, d as usize);
    let kruskal_katona = face_counts(ideal).ok().map(|fv| {
        let f_prev = fv.faces_with_vertices(d as usize);
        let f_d = fv.faces_with_vertices(d as usize + 1);
        let bound = kruskal_katona_pseudopower(&f_prev, d as usize);
        KruskalKatonaCheck { f_prev, f_d, bound }
    });
    Ok(GotzmannReport {
        num_vars: ideal.num_vars(),
        degree: d,
        is_gotzmann: h_quotient_d1 == macaulay_bound,
        h_quotient_d,
        h_quotient_d1,
        macaulay_bound,
        kruskal_katona,
    })
}

/// `mn + m/2 - m²/2 = m(2n + 1 - m)/2`, the degree-3 Hilbert value of a
/// Gotzmann ideal with `m <= n` quadratic generators.
pub fn gotzmann_value_deg2(n: u64, m: u64) -> Result<BigUint, GotzmannError> {
    if m > n {
        return Err(GotzmannError::TooManyGenerators { n, m });
    }
    // m and 2n + 1 - m have opposite parity, so the product is even.
    Ok(BigUint::from(m) * BigUint::from(2 * n + 1 - m) / 2u32)
}

/// `|E| < n`, necessary for `I(G)` to be Gotzmann.
pub fn check_edge_bound(g: &Graph) -> bool {
    g.edge_count() < g.vertex_count()
}

/// What went wrong on a graph during verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Star-ness and the certifier disagree.
    StarMismatch { is_star: bool, is_gotzmann: bool },
    /// Gotzmann with `e >= n`.
    EdgeBound { edges: usize },
    /// Gotzmann square-free ideal with `f_2 != f_1^(2)`.
    KruskalKatonaBound,
    /// `H(P/I, 3) > H(P/I, 2)^<2>`.
    MacaulayBound,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::StarMismatch {
                is_star,
                is_gotzmann,
            } => write!(f, "is_star={is_star} but is_gotzmann={is_gotzmann}"),
            Violation::EdgeBound { edges } => {
                write!(
                    f,
                    "Gotzmann edge ideal with {edges} edges, not fewer than vertices"
                )
            }
            Violation::KruskalKatonaBound => {
                f.write_str("Gotzmann square-free ideal misses the Kruskal-Katona bound")
            }
            Violation::MacaulayBound => f.write_str("Hilbert value exceeds the Macaulay bound"),
        }
    }
}

/// A graph on which some checked statement failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub violation: Violation,
}

impl Counterexample {
    /// Enumeration position `(n, edge mask)`; smaller comes first.
    pub fn position(&self) -> (usize, u64) {
        (
            self.graph.vertex_count(),
            self.graph.edge_mask().unwrap_or(u64::MAX),
        )
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self.violation, self.graph)
    }
}

/// Outcome of a verification run. Merging is commutative and associative,
/// so ranges can be checked in any order or in parallel.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StarTheoremSummary {
    /// Vertex counts covered, `min..=max`; `None` before anything is checked.
    pub vertex_range: Option<(usize, usize)>,
    pub graphs_checked: u64,
    pub stars: u64,
    pub gotzmann: u64,
    pub mismatches: u64,
    /// The counterexample earliest in enumeration order.
    pub first_counterexample: Option<Counterexample>,
}

impl StarTheoremSummary {
    pub fn merge(self, other: Self) -> Self {
        let vertex_range = match (self.vertex_range, other.vertex_range) {
            (Some((a, b)), Some((c, d))) => Some((a.min(c), b.max(d))),
            (r, None) | (None, r) => r,
        };
        let first_counterexample = match (self.first_counterexample, other.first_counterexample) {
            (Some(a), Some(b)) => Some(if b.position() < a.position() { b } else { a }),
            (c, None) | (None, c) => c,
        };
        StarTheoremSummary {
            vertex_range,
            graphs_checked: self.graphs_checked + other.graphs_checked,
            stars: self.stars + other.stars,
            gotzmann: self.gotzmann + other.gotzmann,
            mismatches: self.mismatches + other.mismatches,
            first_counterexample,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches == 0
    }
}

/// Star-ness and Gotzmann verdict of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphVerdict {
    pub is_star: bool,
    pub is_gotzmann: bool,
}

/// Certifies `I(G)` and checks every statement the verifier asserts:
/// Gotzmann iff star, Gotzmann implies `e < n`, Gotzmann implies
/// `f_2 = f_1^(2)`, and Macaulay's bound.
pub fn check_graph(g: &Graph) -> Result<GraphVerdict, Violation> {
    let report = certify(&g.edge_ideal()).expect("edge ideals are generated in degree 2");
    if !report.respects_macaulay_bound() {
        return Err(Violation::MacaulayBound);
    }
    let is_star = g.is_star();
    let is_gotzmann = report.is_gotzmann;
    if is_gotzmann {
        if !check_edge_bound(g) {
            return Err(Violation::EdgeBound {
                edges: g.edge_count(),
            });
        }
        if report.square_free_check() != Some(true) {
            return Err(Violation::KruskalKatonaBound);
        }
    }
    if is_star != is_gotzmann {
        return Err(Violation::StarMismatch {
            is_star,
            is_gotzmann,
        });
    }
    Ok(GraphVerdict {
        is_star,
        is_gotzmann,
    })
}

/// Number of labelled graphs on `n` vertices, `2^C(n,2)`; `None` past `n = 11`.
pub fn labelled_graph_count(n: usize) -> Option<u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    (pairs < 64).then(|| 1u64 << pairs)
}

/// Checks the graphs on `n` vertices whose dense edge masks lie in `masks`,
/// in increasing mask order, stopping at the first violation.
pub fn verify_masks(n: usize, masks: Range<u64>) -> StarTheoremSummary {
    let mut summary = StarTheoremSummary {
        vertex_range: Some((n, n)),
        ..Default::default()
    };
    for mask in masks {
        let g = Graph::from_edge_mask(n, mask).expect("mask within the dense encoding");
        summary.graphs_checked += 1;
        match check_graph(&g) {
            Ok(v) => {
                summary.stars += v.is_star as u64;
                summary.gotzmann += v.is_gotzmann as u64;
            }
            Err(violation) => {
                summary.mismatches += 1;
                summary.first_counterexample = Some(Counterexample {
                    graph: g,
                    violation,
                });
                break;
            }
        }
    }
    summary
}

/// Every labelled graph on `1..=max_vertices` vertices, in order of vertex
/// count and then edge mask. Returns the first counterexample, if any.
///
/// # Panics
///
/// Panics unless `1 <= max_vertices <= 11`.
pub fn verify_star_theorem(max_vertices: usize) -> Result<StarTheoremSummary, Counterexample> {
    assert!(
        (1..=11).contains(&max_vertices),
        "labelled enumeration supports 1..=11 vertices"
    );
    let mut total = StarTheoremSummary::default();
    for n in 1..=max_vertices {
        let count = labelled_graph_count(n).expect("n <= 11");
        let mut part = verify_masks(n, 0..count);
        if let Some(c) = part.first_counterexample.take() {
            return Err(c);
        }
        total = total.merge(part);
    }
    Ok(total)
}
