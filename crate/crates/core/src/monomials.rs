//! Monomials, monomial ideals and their Hilbert functions.
//!
//! Variables are 0-indexed here; `x1` in printed output is index 0. The
//! monomial order is lexicographic with `x1 > x2 > ... > xn`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;

use crate::combinatorics::binomial;

/// An exponent vector over a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// Square-free monomial `Π x_i` over the given 0-based variable indices.
    ///
    /// # Panics
    ///
    /// Panics if an index is `>= n`.
    pub fn square_free(n: usize, vars: &[usize]) -> Self {
        let mut exponents = vec![0; n];
        for &v in vars {
            exponents[v] = 1;
        }
        Monomial { exponents }
    }

    /// Square-free monomial whose support is the bit set `mask`.
    pub fn from_support(n: usize, mask: u64) -> Self {
        let exponents = (0..n).map(|i| ((mask >> i) & 1) as u32).collect();
        Monomial { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Support as a bit set, when the monomial is square-free over at most
    /// 64 variables.
    pub fn support_mask(&self) -> Option<u64> {
        if self.exponents.len() > 64 || !self.is_square_free() {
            return None;
        }
        Some(
            self.exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == 1)
                .fold(0u64, |m, (i, _)| m | (1 << i)),
        )
    }

    /// `self | other`, for monomials over the same variables.
    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.exponents, &other.exponents)
    }
}

impl Ord for Monomial {
    /// Lexicographic, `x1` largest. Monomials of equal degree compare as in
    /// the graded lex order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[inline]
fn divides(small: &[u32], big: &[u32]) -> bool {
    small.len() == big.len() && small.iter().zip(big).all(|(a, b)| a <= b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealError {
    /// The ambient ring must have at least one variable.
    NoVariables,
    /// Generation degree 0 is not allowed.
    ZeroDegree,
    /// A constant generator would make the ideal the whole ring.
    UnitGenerator {
        generator: usize,
    },
    WrongVariableCount {
        generator: usize,
        found: usize,
        expected: usize,
    },
    WrongDegree {
        generator: usize,
        found: u32,
        expected: u32,
    },
    /// The ideal has generators in several degrees, or is the zero ideal
    /// without a declared degree.
    NotEquigenerated,
    LexCountOutOfRange {
        count: usize,
        available: BigUint,
    },
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::NoVariables => f.write_str("ambient ring needs at least one variable"),
            IdealError::ZeroDegree => f.write_str("generation degree must be at least 1"),
            IdealError::UnitGenerator { generator } => {
                write!(f, "generator {} is the constant 1", generator + 1)
            }
            IdealError::WrongVariableCount {
                generator,
                found,
                expected,
            } => write!(
                f,
                "generator {} has {found} variables, expected {expected}",
                generator + 1
            ),
            IdealError::WrongDegree {
                generator,
                found,
                expected,
            } => write!(
                f,
                "generator {} has degree {found}, expected {expected}",
                generator + 1
            ),
            IdealError::NotEquigenerated => {
                f.write_str("ideal is not generated in a single degree")
            }
            IdealError::LexCountOutOfRange { count, available } => write!(
                f,
                "segment size {count} exceeds the {available} monomials of that degree"
            ),
        }
    }
}

impl core::error::Error for IdealError {}

/// A monomial ideal given by its minimal monomial generators.
///
/// Construction drops duplicates and generators divisible by another
/// generator. Generators are kept sorted by degree, then descending lex.
/// The Gotzmann machinery works with equigenerated ideals; see
/// [`MonomialIdeal::equigenerated`] and [`MonomialIdeal::generation_degree`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
    declared_degree: Option<u32>,
}

impl MonomialIdeal {
    /// Ideal generated by arbitrary non-constant monomials.
    pub fn new(
        num_vars: usize,
        generators: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, IdealError> {
        if num_vars == 0 {
            return Err(IdealError::NoVariables);
        }
        let mut gens = Vec::new();
        for (i, g) in generators.into_iter().enumerate() {
            if g.num_vars() != num_vars {
                return Err(IdealError::WrongVariableCount {
                    generator: i,
                    found: g.num_vars(),
                    expected: num_vars,
                });
            }
            if g.degree() == 0 {
                return Err(IdealError::UnitGenerator { generator: i });
            }
            gens.push(g);
        }
        gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // Divisors have degree <= deg g, so they were already kept.
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            generators: minimal,
            declared_degree: None,
        })
    }

    /// Ideal generated in degree `degree`; every generator must have it.
    pub fn equigenerated(
        num_vars: usize,
        degree: u32,
        generators: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, IdealError> {
        if degree == 0 {
            return Err(IdealError::ZeroDegree);
        }
        let mut gens = Vec::new();
        for (i, g) in generators.into_iter().enumerate() {
            if g.num_vars() == num_vars && g.degree() != degree {
                return Err(IdealError::WrongDegree {
                    generator: i,
                    found: g.degree(),
                    expected: degree,
                });
            }
            gens.push(g);
        }
        let mut ideal = Self::new(num_vars, gens)?;
        // Non-zero ideals carry their degree in the generators.
        if ideal.is_zero() {
            ideal.declared_degree = Some(degree);
        }
        Ok(ideal)
    }

    /// The zero ideal, carrying a declared generation degree.
    pub fn zero(num_vars: usize, degree: u32) -> Result<Self, IdealError> {
        Self::equigenerated(num_vars, degree, core::iter::empty())
    }

    /// Checks that every generator has degree `degree`, declaring it when
    /// the ideal is zero.
    pub fn with_degree(self, degree: u32) -> Result<Self, IdealError> {
        Self::equigenerated(self.num_vars, degree, self.generators)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The common degree of all generators, or the declared degree of a
    /// zero ideal. `None` for mixed degrees.
    pub fn generation_degree(&self) -> Option<u32> {
        if let Some(d) = self.declared_degree {
            return Some(d);
        }
        let first = self.generators.first()?.degree();
        self.generators
            .iter()
            .all(|g| g.degree() == first)
            .then_some(first)
    }

    /// Smallest generator degree; `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u32> {
        self.generators.first().map(Monomial::degree)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(Monomial::is_square_free)
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.contains_exponents(m.exponents())
    }

    fn contains_exponents(&self, exps: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(&g.exponents, exps))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.generators.is_empty() {
            f.write_str("0")?;
        }
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// True iff some generator of `ideal` divides `m`.
///
/// # Panics
///
/// Panics if `m` lives over a different number of variables.
pub fn contains(ideal: &MonomialIdeal, m: &Monomial) -> bool {
    assert_eq!(
        m.num_vars(),
        ideal.num_vars(),
        "monomial and ideal over different rings"
    );
    ideal.contains(m)
}

/// Calls `f` with every degree-`k` exponent vector in `n` variables, in
/// descending lex order. The slice is reused between calls.
pub fn for_each_monomial(n: usize, k: u32, mut f: impl FnMut(&[u32])) {
    if n == 0 {
        if k == 0 {
            f(&[]);
        }
        return;
    }
    let mut e = vec![0u32; n];
    e[0] = k;
    loop {
        f(&e);
        // Move one unit from the last non-zero position before the tail to
        // its right neighbour, and fold the tail back into that neighbour.
        let tail = core::mem::replace(&mut e[n - 1], 0);
        match (0..n - 1).rev().find(|&i| e[i] > 0) {
            Some(i) => {
                e[i] -= 1;
                e[i + 1] = tail + 1;
            }
            None => return,
        }
    }
}

/// All degree-`k` monomials in `n` variables, descending lex order.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_monomial(n, k, |e| out.push(Monomial::new(e.to_vec())));
    out
}

/// `H(P, k) = C(n + k - 1, n - 1)`.
pub fn hilbert_ring(n: usize, k: u32) -> BigUint {
    assert!(n >= 1, "polynomial ring needs at least one variable");
    binomial(n as u64 + k as u64 - 1, n as u64 - 1)
}

/// `H(I, k)`: the number of degree-`k` monomials lying in `ideal`, counted
/// by enumerating every degree-`k` monomial.
pub fn hilbert_ideal(ideal: &MonomialIdeal, k: u32) -> BigUint {
    match ideal.min_degree() {
        Some(d) if k >= d => {}
        _ => return BigUint::default(),
    }
    let mut count: u64 = 0;
    for_each_monomial(ideal.num_vars(), k, |e| {
        if ideal.contains_exponents(e) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// `H(P/I, k) = H(P, k) - H(I, k)`.
pub fn hilbert_quotient(ideal: &MonomialIdeal, k: u32) -> BigUint {
    hilbert_ring(ideal.num_vars(), k) - hilbert_ideal(ideal, k)
}

/// The ideal generated by the first `count` degree-`d` monomials in lex order.
pub fn lex_segment_ideal(n: usize, d: u32, count: usize) -> Result<MonomialIdeal, IdealError> {
    if n == 0 {
        return Err(IdealError::NoVariables);
    }
    if d == 0 {
        return Err(IdealError::ZeroDegree);
    }
    let available = hilbert_ring(n, d);
    if BigUint::from(count) > available {
        return Err(IdealError::LexCountOutOfRange { count, available });
    }
    let mut gens = Vec::with_capacity(count);
    if count > 0 {
        // Stop enumerating early by short-circuiting once full.
        for_each_monomial(n, d, |e| {
            if gens.len() < count {
                gens.push(Monomial::new(e.to_vec()));
            }
        });
    }
    MonomialIdeal::equigenerated(n, d, gens)
}
