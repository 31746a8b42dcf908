//! Elementary number-theoretic helpers shared by the solver modules:
//! factorization, modular inverses, least positive residues, and residue
//! class counting.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Greatest common divisor (`gcd(0, 0) = 0`).
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization of a positive integer as `(prime, exponent)` pairs
/// with strictly increasing primes and exponents at least 1.
///
/// ```
/// use zerosum_core::numtheory::factorize;
///
/// assert_eq!(factorize(12).factors(), &[(2, 2), (3, 1)]);
/// assert!(factorize(1).factors().is_empty());
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Reassembles the factored integer.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product()
    }

    /// Number of prime factors counted with multiplicity
    /// (`Ω(12) = 3` since `12 = 2·2·3`).
    pub fn prime_factor_count(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// If the integer is `p^α` for a single prime `p`, returns `(p, α)`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }

    /// The smallest odd prime factor, if any.
    pub fn smallest_odd_prime(&self) -> Option<(u64, u32)> {
        self.factors.iter().copied().find(|&(p, _)| p != 2)
    }
}

/// Factors `n ≥ 1` by trial division.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p: u64 = 3;
    while p.saturating_mul(p) <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { factors }
}

/// Returns whether `n` is prime, by trial division.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).factors() == [(n, 1)]
}

/// Error for [`mod_inverse`] when the inverse does not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotInvertible {
    /// The offending residue, reduced into `[0, modulus)`.
    pub residue: u64,
    /// The modulus the inverse was requested for.
    pub modulus: u64,
}

impl fmt::Display for NotInvertible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is not invertible modulo {} (gcd != 1)",
            self.residue, self.modulus
        )
    }
}

impl core::error::Error for NotInvertible {}

/// Multiplicative inverse of `a` modulo `m ≥ 2`, in `[1, m - 1]`.
///
/// ```
/// use zerosum_core::numtheory::mod_inverse;
///
/// assert_eq!(mod_inverse(3, 7), Ok(5));
/// assert!(mod_inverse(2, 4).is_err());
/// ```
///
/// # Panics
///
/// Panics if `m < 2`.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64, NotInvertible> {
    assert!(m >= 2, "mod_inverse requires modulus >= 2");
    let residue = a.rem_euclid(m as i64) as u64;
    // Extended Euclid over (old_r, r), carrying only the s-coefficients:
    // the invariant old_s * a ≡ old_r (mod m) holds throughout.
    let (mut old_r, mut r) = (residue as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(NotInvertible { residue, modulus: m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Least positive residue of `x` modulo `n`: the unique element of
/// `[1, n]` congruent to `x`.
///
/// ```
/// use zerosum_core::numtheory::least_positive_residue;
///
/// assert_eq!(least_positive_residue(0, 3), 3);
/// assert_eq!(least_positive_residue(-1, 3), 2);
/// assert_eq!(least_positive_residue(7, 3), 1);
/// ```
///
/// # Panics
///
/// Panics if `n == 0` or `n` does not fit in `i64`.
pub fn least_positive_residue(x: i64, n: u64) -> u64 {
    assert!(n >= 1, "least_positive_residue requires n >= 1");
    assert!(n <= i64::MAX as u64, "modulus too large");
    let r = x.rem_euclid(n as i64) as u64;
    if r == 0 {
        n
    } else {
        r
    }
}

/// Number of distinct residue classes modulo `d` among `values`.
///
/// ```
/// use zerosum_core::numtheory::residue_class_count;
///
/// assert_eq!(residue_class_count(&[0, 1, 2, 3], 2), 2);
/// ```
///
/// # Panics
///
/// Panics if `d == 0` or `d` does not fit in `i64`.
pub fn residue_class_count(values: &[i64], d: u64) -> usize {
    assert!(d >= 1, "residue_class_count requires d >= 1");
    assert!(d <= i64::MAX as u64, "modulus too large");
    let classes: BTreeSet<i64> = values.iter().map(|v| v.rem_euclid(d as i64)).collect();
    classes.len()
}
