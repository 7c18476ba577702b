//! Exact binomials, Macaulay representations and pseudo-powers.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `C(p, q)` as an exact integer, zero when `p < q`.
pub fn binomial(p: u64, q: u64) -> BigUint {
    binomial_big(&BigUint::from(p), q)
}

/// `C(p, q)` for an arbitrary-precision top argument.
pub fn binomial_big(p: &BigUint, q: u64) -> BigUint {
    let q_big = BigUint::from(q);
    if *p < q_big {
        return BigUint::zero();
    }
    // C(p, q) = C(p, p - q); iterate over the shorter side.
    let complement = p - &q_big;
    let steps = match complement.to_u64() {
        Some(c) if c < q => c,
        _ => q,
    };
    let base = p - BigUint::from(steps);
    let mut acc = BigUint::one();
    for i in 1..=steps {
        // acc = C(base + i, i) after this step, always an exact division.
        acc *= &base + BigUint::from(i);
        acc /= BigUint::from(i);
    }
    acc
}

/// The `d`-th Macaulay representation `a = C(b_d, d) + ... + C(b_1, 1)`.
///
/// Coefficients are stored highest degree first and always number exactly
/// `d`; vanishing terms carry the forced value `b_i = i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    value: BigUint,
    coefficients: Vec<BigUint>,
}

impl MacaulayRep {
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// The represented integer `a`.
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// `(b_d, b_{d-1}, ..., b_1)`.
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Pairs `(b_i, i)` from `i = d` down to `i = 1`.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, u64)> + '_ {
        let d = self.coefficients.len() as u64;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(k, b)| (b, d - k as u64))
    }

    /// Recomputes `Σ C(b_i, i)` from the coefficients.
    pub fn evaluate(&self) -> BigUint {
        self.terms().map(|(b, i)| binomial_big(b, i)).sum()
    }

    /// `a^<d> = Σ C(b_i + 1, i + 1)`.
    pub fn macaulay_pseudopower(&self) -> BigUint {
        self.terms()
            .map(|(b, i)| binomial_big(&(b + 1u32), i + 1))
            .sum()
    }

    /// `a^(d) = Σ C(b_i, i + 1)`.
    pub fn kruskal_katona_pseudopower(&self) -> BigUint {
        self.terms().map(|(b, i)| binomial_big(b, i + 1)).sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.value)?;
        for (k, (b, i)) in self.terms().enumerate() {
            let sep = if k == 0 { " " } else { " + " };
            write!(f, "{sep}C({b},{i})")?;
        }
        Ok(())
    }
}

/// Greedy Macaulay decomposition of `a` at degree `d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn macaulay_rep(a: &BigUint, d: usize) -> MacaulayRep {
    assert!(d >= 1, "Macaulay representations need degree d >= 1");
    let mut remainder = a.clone();
    let mut coefficients = Vec::with_capacity(d);
    for i in (1..=d as u64).rev() {
        let b = largest_top(&remainder, i);
        remainder -= binomial_big(&b, i);
        coefficients.push(b);
    }
    debug_assert!(remainder.is_zero());
    MacaulayRep {
        value: a.clone(),
        coefficients,
    }
}

/// Largest `b` with `C(b, i) <= a`; at least `i - 1` since `C(i - 1, i) = 0`.
fn largest_top(a: &BigUint, i: u64) -> BigUint {
    if i == 1 {
        return a.clone();
    }
    let fits = |b: &BigUint| binomial_big(b, i) <= *a;
    let mut lo = BigUint::from(i - 1);
    let mut step = BigUint::one();
    // Gallop until C(lo + step, i) overshoots, then bisect.
    while fits(&(&lo + &step)) {
        lo += &step;
        step <<= 1u32;
    }
    let mut hi = &lo + &step;
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1u32;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `a^<d>`, the `d`-th Macaulay pseudo-power.
pub fn macaulay_pseudopower(a: &BigUint, d: usize) -> BigUint {
    macaulay_rep(a, d).macaulay_pseudopower()
}

/// `a^(d)`, the `d`-th Kruskal-Katona pseudo-power.
pub fn kruskal_katona_pseudopower(a: &BigUint, d: usize) -> BigUint {
    macaulay_rep(a, d).kruskal_katona_pseudopower()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn coeffs(a: u64, d: usize) -> Vec<u64> {
        macaulay_rep(&big(a), d)
            .coefficients()
            .iter()
            .map(|b| b.to_u64().unwrap())
            .collect()
    }

    /// Rows of Pascal's triangle, built only by addition.
    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut t: Vec<Vec<u128>> = vec![vec![1]];
        for p in 1..rows {
            let prev = &t[p - 1];
            let mut row = vec![1u128; p + 1];
            for q in 1..p {
                row[q] = prev[q - 1] + prev[q];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(3, 2), big(3));
        assert_eq!(binomial(2, 3), big(0));
        assert_eq!(binomial(9, 3), big(84));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(5, 0), big(1));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let t = pascal(121);
        for p in 0..121u64 {
            for q in 0..=p + 2 {
                let expected = t[p as usize].get(q as usize).copied().unwrap_or(0);
                assert_eq!(binomial(p, q), BigUint::from(expected), "C({p},{q})");
            }
        }
    }

    #[test]
    fn binomial_exceeds_machine_words() {
        // C(200, 100) has 59 decimal digits.
        let c = binomial(200, 100);
        assert_eq!(c.to_string().len(), 59);
        assert_eq!(binomial_big(&big(200), 100), binomial(200, 100));
        assert_eq!(&binomial(199, 99) + &binomial(199, 100), c);
    }

    #[test]
    fn representation_examples() {
        assert_eq!(coeffs(5, 2), vec![3, 2]);
        assert_eq!(coeffs(0, 3), vec![2, 1, 0]);
        assert_eq!(coeffs(23, 2), vec![7, 2]);
        assert_eq!(coeffs(16, 2), vec![6, 1]);
        assert_eq!(coeffs(3, 2), vec![3, 0]);
        assert_eq!(coeffs(7, 1), vec![7]);
    }

    #[test]
    fn pseudopower_examples() {
        assert_eq!(macaulay_pseudopower(&big(0), 2), big(0));
        assert_eq!(macaulay_pseudopower(&big(5), 2), big(7));
        assert_eq!(macaulay_pseudopower(&big(23), 2), big(59));
        assert_eq!(kruskal_katona_pseudopower(&big(0), 2), big(0));
        assert_eq!(kruskal_katona_pseudopower(&big(5), 2), big(2));
        assert_eq!(kruskal_katona_pseudopower(&big(16), 2), big(20));
    }

    #[test]
    fn full_ring_grows_to_next_degree() {
        // H(P, d)^<d> = H(P, d + 1) for P in n variables.
        for n in 1..8u64 {
            for d in 1..6u64 {
                let h = binomial(n + d - 1, n - 1);
                assert_eq!(macaulay_pseudopower(&h, d as usize), binomial(n + d, n - 1));
            }
        }
    }

    #[test]
    fn display_lists_terms() {
        let rep = macaulay_rep(&big(23), 2);
        assert_eq!(alloc::format!("{rep}"), "23 = C(7,2) + C(2,1)");
    }

    #[test]
    fn huge_values_round_trip() {
        let a = binomial(500, 7) + binomial(300, 5) + big(12345);
        for d in [1usize, 2, 5, 9] {
            let rep = macaulay_rep(&a, d);
            assert_eq!(rep.evaluate(), a);
            assert_eq!(rep.degree(), d);
        }
    }

    #[test]
    #[should_panic]
    fn degree_zero_rejected() {
        macaulay_rep(&big(1), 0);
    }

    #[test]
    fn pascal_rule_holds() {
        for i in 1..=60u64 {
            for j in 0..i {
                assert_eq!(binomial(i, j) + binomial(i, j + 1), binomial(i + 1, j + 1));
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn coefficients_strictly_decrease(a in 0u64..1_000_000, d in 1usize..8) {
                let rep = macaulay_rep(&big(a), d);
                prop_assert_eq!(rep.degree(), d);
                prop_assert_eq!(rep.evaluate(), big(a));
                let c = rep.coefficients();
                for w in c.windows(2) {
                    prop_assert!(w[0] > w[1]);
                }
            }

            #[test]
            fn pseudopowers_are_monotone(a in 0u64..5000, delta in 0u64..500, d in 1usize..6) {
                let (lo, hi) = (big(a), big(a + delta));
                prop_assert!(macaulay_pseudopower(&lo, d) <= macaulay_pseudopower(&hi, d));
                prop_assert!(
                    kruskal_katona_pseudopower(&lo, d) <= kruskal_katona_pseudopower(&hi, d)
                );
            }
        }
    }
}
