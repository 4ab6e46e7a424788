//! Exact integer building blocks shared by every closed formula.
//!
//! All sums in the closed forms run over "j ≥ 1" style unbounded ranges. They
//! are truncated by two conventions implemented here: binomials outside the
//! Pascal triangle are zero, and `1/m!` is zero for negative `m`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(a, b)` with the guard convention: zero whenever `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    // Multiplicative form; each prefix is itself a binomial so the division is exact.
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`, with `(a)_0 = 1`.
pub fn rising_factorial(a: i64, m: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..m {
        let factor = a + j as i64;
        if factor == 0 {
            return BigInt::zero();
        }
        acc *= factor;
    }
    acc
}

/// Rising factorial extended to negative lengths:
/// `(a)_{-m} = 1 / ((a-m)(a-m+1)...(a-1))`.
///
/// Returns `None` when that denominator contains a zero factor.
pub fn rising_factorial_extended(a: i64, m: i64) -> Option<BigRational> {
    if m >= 0 {
        return Some(BigRational::from_integer(rising_factorial(a, m as u64)));
    }
    let denominator = rising_factorial(a + m, m.unsigned_abs());
    if denominator.is_zero() {
        None
    } else {
        Some(BigRational::new(BigInt::one(), denominator))
    }
}

/// `m!` as a big natural.
pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// `1/m!` for `m ≥ 0`, and `0` for negative `m` (the whole term drops out).
pub fn reciprocal_factorial(m: i64) -> BigRational {
    if m < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), BigInt::from(factorial(m as u64)))
    }
}

/// Which family of integer compositions to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompositionKind {
    /// k-tuples of positive integers summing to n.
    Positive,
    /// k-tuples of non-negative integers summing to n.
    Weak,
    /// k-tuples of non-negative integers summing to at most n.
    Bounded,
}

/// Number of k-tuples of the given kind with sum `n` (or at most `n` for
/// [`CompositionKind::Bounded`]).
pub fn composition_count(n: u64, k: u64, kind: CompositionKind) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    // The empty tuple sums to zero; the binomial forms miss it for k = 0.
    if k == 0 {
        return match kind {
            CompositionKind::Bounded => BigUint::one(),
            _ if n == 0 => BigUint::one(),
            _ => BigUint::zero(),
        };
    }
    match kind {
        CompositionKind::Positive => binomial(n - 1, k - 1),
        CompositionKind::Weak => binomial(n + k - 1, k - 1),
        CompositionKind::Bounded => binomial(n + k, k),
    }
}
