//! Exact Hilbert-function combinatorics for equigenerated monomial ideals.
//!
//! The crate is `no_std` and only needs `alloc`. It covers
//!
//! * exact binomials, Macaulay representations and the Macaulay and
//!   Kruskal-Katona pseudo-powers ([`combinatorics`]),
//! * monomials, monomial ideals, brute-force Hilbert functions and
//!   lexicographic segments ([`monomials`]),
//! * simplicial complexes, Stanley-Reisner complexes and f-vectors
//!   ([`complexes`]),
//! * simple graphs, edge ideals and dependent-triple counts ([`graphs`]),
//! * the Gotzmann certifier and the exhaustive star-graph verifier
//!   ([`gotzmann`]).
//!
//! Every Hilbert value is computed by enumerating monomials; closed forms
//! exist only as cross-checks.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
pub mod complexes;
pub mod gotzmann;
pub mod graphs;
pub mod monomials;

pub use num_bigint::BigUint;

pub use combinatorics::{
    binomial, binomial_big, kruskal_katona_pseudopower, macaulay_pseudopower, macaulay_rep,
    MacaulayRep,
};
pub use complexes::{
    compressed_complex, f_vector, face_counts, hilbert_stanley_reisner, ideal_of_complex,
    is_valid_f_vector, stanley_reisner_complex, ComplexError, FVector, SimplicialComplex,
    VertexSet,
};
pub use gotzmann::{
    certify, check_edge_bound, gotzmann_value_deg2, verify_star_theorem, Counterexample,
    GotzmannError, GotzmannReport, KruskalKatonaCheck, StarTheoremSummary, Violation,
};
pub use graphs::{Graph, GraphError};
pub use monomials::{
    contains, hilbert_ideal, hilbert_quotient, hilbert_ring, lex_segment_ideal, IdealError,
    Monomial, MonomialIdeal,
};
