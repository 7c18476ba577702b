//! Simplicial complexes, the Stanley-Reisner correspondence and f-vectors.
//!
//! Vertex sets are bit sets over a ground set of at most 64 vertices. Faces
//! are never stored; they are enumerated from the facets on demand.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{binomial, kruskal_katona_pseudopower};
use crate::monomials::{Monomial, MonomialIdeal};

pub const MAX_GROUND_SIZE: usize = 64;

/// A set of vertices, bit `i` standing for `x_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | (1 << v)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    /// Ground sets must have between 1 and 64 vertices.
    GroundSize(usize),
    VertexOutOfRange {
        vertex: usize,
        ground_size: usize,
    },
    /// Only the empty face; excluded.
    Empty,
    NotSquareFree,
    InvalidFVector,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::GroundSize(n) => {
                write!(f, "ground set size {n} outside 1..={MAX_GROUND_SIZE}")
            }
            ComplexError::VertexOutOfRange {
                vertex,
                ground_size,
            } => write!(
                f,
                "vertex {} outside ground set of size {ground_size}",
                vertex + 1
            ),
            ComplexError::Empty => f.write_str("complex has no non-empty face"),
            ComplexError::NotSquareFree => f.write_str("ideal is not square-free"),
            ComplexError::InvalidFVector => {
                f.write_str("sequence violates the Kruskal-Katona inequalities")
            }
        }
    }
}

impl core::error::Error for ComplexError {}

/// A non-empty simplicial complex stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`: every subset of a listed face.
    /// Non-maximal entries are dropped.
    pub fn from_faces(
        ground_size: usize,
        faces: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self, ComplexError> {
        if ground_size == 0 || ground_size > MAX_GROUND_SIZE {
            return Err(ComplexError::GroundSize(ground_size));
        }
        let mut faces: Vec<VertexSet> = faces.into_iter().collect();
        for f in &faces {
            if let Some(v) = f.max_vertex().filter(|&v| v >= ground_size) {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: v,
                    ground_size,
                });
            }
        }
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        if facets.iter().all(|f| f.is_empty()) {
            return Err(ComplexError::Empty);
        }
        facets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        Ok(SimplicialComplex {
            ground_size,
            facets,
        })
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self, ComplexError> {
        if n == 0 || n > MAX_GROUND_SIZE {
            return Err(ComplexError::GroundSize(n));
        }
        Self::from_faces(n, [VertexSet(u64::MAX >> (64 - n))])
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Maximal faces, largest first.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.facets[0].len() - 1
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Every non-empty face, in depth-first order.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        walk_faces(self.ground_size, |f| self.is_face(f), |f| out.push(f));
        out
    }
}

/// Visits every non-empty set in the down-closed family `is_face` over
/// vertices `0..n`. Each face is reached exactly once, by adding vertices in
/// increasing order.
fn walk_faces(n: usize, is_face: impl Fn(VertexSet) -> bool, mut visit: impl FnMut(VertexSet)) {
    let mut stack = vec![(VertexSet::EMPTY, 0usize)];
    while let Some((face, next)) = stack.pop() {
        for v in next..n {
            let bigger = face.with(v);
            if is_face(bigger) {
                visit(bigger);
                stack.push((bigger, v + 1));
            }
        }
    }
}

/// Maximal elements of the down-closed family `is_face`.
fn maximal_faces(n: usize, is_face: impl Fn(VertexSet) -> bool) -> Vec<VertexSet> {
    let mut facets = Vec::new();
    walk_faces(n, &is_face, |f| {
        if (0..n).all(|v| f.contains(v) || !is_face(f.with(v))) {
            facets.push(f);
        }
    });
    facets
}

/// Supports of square-free generators, or `NotSquareFree`.
fn supports(ideal: &MonomialIdeal) -> Result<Vec<VertexSet>, ComplexError> {
    let n = ideal.num_vars();
    if n > MAX_GROUND_SIZE {
        return Err(ComplexError::GroundSize(n));
    }
    ideal
        .generators()
        .iter()
        .map(|g| {
            g.support_mask()
                .map(VertexSet)
                .ok_or(ComplexError::NotSquareFree)
        })
        .collect()
}

/// `Δ(I)`: all `F` with `Π_{x ∈ F} x ∉ I`, returned by facets.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex, ComplexError> {
    let gens = supports(ideal)?;
    let n = ideal.num_vars();
    let is_face = |f: VertexSet| !gens.iter().any(|g| g.is_subset(f));
    SimplicialComplex::from_faces(n, maximal_faces(n, is_face))
}

/// f-vector of `Δ(I)` counted straight from a square-free ideal. Unlike
/// [`stanley_reisner_complex`] this accepts ideals whose only face is the
/// empty set, returning an empty vector.
pub fn face_counts(ideal: &MonomialIdeal) -> Result<FVector, ComplexError> {
    let gens = supports(ideal)?;
    let n = ideal.num_vars();
    let mut counts = vec![0u64; n];
    walk_faces(
        n,
        |f| !gens.iter().any(|g| g.is_subset(f)),
        |f| counts[f.len() - 1] += 1,
    );
    Ok(FVector::new(counts.into_iter().map(BigUint::from)))
}

/// The minimal non-faces of `complex`, as a square-free monomial ideal.
pub fn ideal_of_complex(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.ground_size();
    let mut minimal = BTreeSet::new();
    let mut consider = |f: VertexSet| {
        for v in (0..n).filter(|&v| !f.contains(v)) {
            let candidate = f.with(v);
            if !complex.is_face(candidate)
                && candidate
                    .iter()
                    .all(|u| complex.is_face(candidate.without(u)))
            {
                minimal.insert(candidate);
            }
        }
    };
    // Every minimal non-face is a face plus one vertex.
    consider(VertexSet::EMPTY);
    for f in complex.faces() {
        consider(f);
    }
    let gens = minimal.into_iter().map(|s| Monomial::from_support(n, s.0));
    MonomialIdeal::new(n, gens).expect("non-empty square-free generators over n variables")
}

/// Face counts `(f_0, ..., f_dim)`; `f_i` counts faces with `i + 1`
/// vertices. Trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    pub fn new(counts: impl IntoIterator<Item = BigUint>) -> Self {
        let mut counts: Vec<BigUint> = counts.into_iter().collect();
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        FVector { counts }
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)))
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `f_i`, zero past the dimension.
    pub fn get(&self, i: usize) -> BigUint {
        self.counts.get(i).cloned().unwrap_or_default()
    }

    /// Number of faces with exactly `k >= 1` vertices, i.e. `f_{k-1}`.
    ///
    /// This is also the degree-`k` value of the Hilbert function of the
    /// matching quotient of `P/(x_1^2, ..., x_n^2)`; all index shifting
    /// between face dimensions and degrees goes through here.
    pub fn faces_with_vertices(&self, k: usize) -> BigUint {
        assert!(k >= 1, "faces are indexed from one vertex");
        self.get(k - 1)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn f_vector(complex: &SimplicialComplex) -> FVector {
    let mut counts = vec![0u64; complex.dimension() + 1];
    walk_faces(
        complex.ground_size(),
        |f| complex.is_face(f),
        |f| counts[f.len() - 1] += 1,
    );
    FVector::new(counts.into_iter().map(BigUint::from))
}

/// `H(k[Δ], k)`: `1` at `k = 0`, else `Σ f_i C(k - 1, i)`.
pub fn hilbert_stanley_reisner(fv: &FVector, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::from(1u32);
    }
    fv.counts()
        .iter()
        .enumerate()
        .map(|(i, f)| f * binomial(k - 1, i as u64))
        .sum()
}

/// Kruskal-Katona: `0 < f_{k+1} <= f_k^(k+1)` for every consecutive pair,
/// with `f_0 > 0`.
pub fn is_valid_f_vector(fv: &FVector) -> bool {
    let c = fv.counts();
    if c.is_empty() || c.iter().any(Zero::is_zero) {
        return false;
    }
    c.windows(2)
        .enumerate()
        .all(|(k, w)| w[1] <= kruskal_katona_pseudopower(&w[0], k + 1))
}

/// The compressed complex realizing `fv`: its `i`-faces are the first `f_i`
/// sets of size `i + 1` in colex order.
pub fn compressed_complex(fv: &FVector) -> Result<SimplicialComplex, ComplexError> {
    if !is_valid_f_vector(fv) {
        return Err(ComplexError::InvalidFVector);
    }
    let ground = fv.get(0).to_usize().filter(|&n| n <= MAX_GROUND_SIZE);
    let ground = ground.ok_or(ComplexError::GroundSize(
        fv.get(0).to_usize().unwrap_or(usize::MAX),
    ))?;
    // Colex order on k-sets is numeric order of their bit masks.
    let levels: Vec<Vec<u64>> = fv
        .counts()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let want = f.to_u64().expect("face count fits the ground set");
            first_colex_sets(i + 1, want)
        })
        .collect();
    let mut facets = Vec::new();
    for (i, level) in levels.iter().enumerate() {
        let covered: BTreeSet<u64> = levels
            .get(i + 1)
            .map(|up| {
                up.iter()
                    .flat_map(|&g| VertexSet(g).iter().map(move |v| g & !(1 << v)))
                    .collect()
            })
            .unwrap_or_default();
        facets.extend(
            level
                .iter()
                .filter(|s| !covered.contains(s))
                .map(|&s| VertexSet(s)),
        );
    }
    SimplicialComplex::from_faces(ground, facets)
}

/// First `count` subsets of size `k` in colex order (Gosper's hack).
fn first_colex_sets(k: usize, count: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if count == 0 {
        return out;
    }
    let mut s: u64 = if k == 64 { u64::MAX } else { (1 << k) - 1 };
    loop {
        out.push(s);
        if out.len() as u64 == count {
            return out;
        }
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 {
            return out;
        }
        s = (((r ^ s) >> 2) / c) | r;
    }
}
