//! Closed-form Whitney numbers.
//!
//! `f(n, k)` counts the order ideals of the fence `Z_n` with `k` elements and
//! `c(n, k)` those of the crown `Y_n`. Odd and even fences each have a triple
//! binomial sum and a single sum of rising factorials; both are exposed via
//! [`FormulaVariant`] so they can be checked against each other.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use num_integer::Integer;

use crate::combinatorics::{
    binomial, factorial, reciprocal_factorial, rising_factorial, rising_factorial_extended,
};
use crate::error::{Error, Result};
use crate::table::WhitneyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaVariant {
    /// Nested sums of guarded binomials.
    BinomialSum,
    /// Single sum of rising-factorial quotients.
    Hypergeometric,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 2] =
        [FormulaVariant::BinomialSum, FormulaVariant::Hypergeometric];
}

fn factorial_i64(m: i64) -> BigInt {
    BigInt::from(factorial(m.max(0) as u64))
}

/// `Σ_{j=first}^{last} t_j` for a series of naturals whose consecutive terms
/// satisfy `t_{j+1} = t_j * p / q` with `(p, q) = ratio(j)`, `q > 0`.
///
/// Only the first term is evaluated directly; the rest follow from the ratio
/// with exact division checked.
fn hypergeometric_sum(
    first: i64,
    last: i64,
    term: impl Fn(i64) -> BigUint,
    ratio: impl Fn(i64) -> (i64, i64),
) -> BigUint {
    if first > last {
        return BigUint::zero();
    }
    let mut current = term(first);
    let mut total = current.clone();
    for j in first..last {
        let (p, q) = ratio(j);
        debug_assert!(p >= 0 && q > 0, "ratio at j={j}: {p}/{q}");
        current = exact_quotient(
            BigInt::from(current * p as u64),
            BigInt::from(q),
            "hypergeometric term ratio",
        );
        total += &current;
    }
    total
}

/// `numerator / denominator`, which must be an exact natural number.
fn exact_quotient(numerator: BigInt, denominator: BigInt, context: &str) -> BigUint {
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(
        remainder.is_zero(),
        "{context}: closed form produced non-integral value {numerator}/{denominator}"
    );
    quotient
        .to_biguint()
        .unwrap_or_else(|| panic!("{context}: closed form produced negative value {quotient}"))
}

/// Number of size-`k` ideals of `Z_{2v+1}` containing exactly `j` of its
/// maximal (rank 1) elements.
///
/// For `j ≥ 1` the `j` maximal elements split into `r` runs of consecutive
/// peaks; each run of length `t` drags in `t + 1` minimal elements.
pub fn fence_peak_class_count(v: u64, k: i64, j: u64) -> BigUint {
    let (v, j) = (v as i64, j as i64);
    if k < 0 || k > 2 * v + 1 {
        return BigUint::zero();
    }
    if j == 0 {
        // only minimal elements, v + 1 of them
        return binomial(v + 1, k);
    }
    (1..=j)
        .map(|r| {
            binomial(j - 1, r - 1)
                * binomial(v - j + 1, r)
                * binomial(v + 1 - (j + r), k - (2 * j + r))
        })
        .sum()
}

/// `f(2v+1, k)`.
pub fn fence_whitney_odd(v: u64, k: i64, variant: FormulaVariant) -> BigUint {
    let vi = v as i64;
    if k < 0 || k > 2 * vi + 1 {
        return BigUint::zero();
    }
    match variant {
        FormulaVariant::BinomialSum => (0..=v).map(|j| fence_peak_class_count(v, k, j)).sum(),
        FormulaVariant::Hypergeometric => {
            // t_j = (k-2j+1)_{j-1} (v+j-k+2)_{k-2j} / (j! (k-2j-1)!) for 1 <= j < k/2
            let term = |j: i64| {
                exact_quotient(
                    rising_factorial(k - 2 * j + 1, (j - 1) as u64)
                        * rising_factorial(vi + j - k + 2, (k - 2 * j) as u64),
                    factorial_i64(j) * factorial_i64(k - 2 * j - 1),
                    "odd fence term",
                )
            };
            let ratio = |j: i64| {
                (
                    (k - 2 * j - 1) * (k - 2 * j) * (k - 2 * j - 1) * (k - 2 * j - 2),
                    (k - j - 1) * (vi + j - k + 2) * (vi - j + 1) * (j + 1),
                )
            };
            // (v+j-k+2)_{k-2j} vanishes while its first factor is not positive
            let first = (k - vi - 1).max(1);
            binomial(vi + 1, k) + hypergeometric_sum(first, (k - 1) / 2, term, ratio)
        }
    }
}

/// `f(2v, k)`.
pub fn fence_whitney_even(v: u64, k: i64, variant: FormulaVariant) -> BigUint {
    let vi = v as i64;
    if k < 0 || k > 2 * vi {
        return BigUint::zero();
    }
    match variant {
        FormulaVariant::BinomialSum => (0..=vi)
            .flat_map(|j| (0..=j).map(move |r| (j, r)))
            .map(|(j, r)| {
                binomial(j, r) * binomial(vi - j, r) * binomial(vi - (j + r), k - (2 * j + r))
            })
            .sum(),
        FormulaVariant::Hypergeometric => {
            // t_j = (k-2j+1)_j (v+j-k+1)_{k-2j} / (j! (k-2j)!) for 0 <= j <= k/2
            let term = |j: i64| {
                exact_quotient(
                    rising_factorial(k - 2 * j + 1, j as u64)
                        * rising_factorial(vi + j - k + 1, (k - 2 * j) as u64),
                    factorial_i64(j) * factorial_i64(k - 2 * j),
                    "even fence term",
                )
            };
            let ratio = |j: i64| {
                (
                    (k - 2 * j - 1) * (k - 2 * j) * (k - 2 * j) * (k - 2 * j - 1),
                    (k - j) * (vi + j - k + 1) * (vi - j) * (j + 1),
                )
            };
            let first = (k - vi).max(0);
            hypergeometric_sum(first, k / 2, term, ratio)
        }
    }
}

/// `f(n, k)` through the chosen closed form; zero for `k ∉ [0, n]` or `n < 0`.
pub fn fence_whitney_with(n: i64, k: i64, variant: FormulaVariant) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    let half = (n / 2) as u64;
    if n % 2 == 1 {
        fence_whitney_odd(half, k, variant)
    } else {
        fence_whitney_even(half, k, variant)
    }
}

/// `f(n, k)` through the rising-factorial closed forms.
pub fn fence_whitney(n: i64, k: i64) -> BigUint {
    fence_whitney_with(n, k, FormulaVariant::Hypergeometric)
}

/// Whole Whitney table of `Z_n`.
pub fn fence_table(n: u64, variant: FormulaVariant) -> WhitneyTable {
    WhitneyTable::new(
        (0..=n as i64)
            .map(|k| fence_whitney_with(n as i64, k, variant))
            .collect(),
    )
}

fn check_crown(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "crown needs n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// `c(n, k) = f(2n, k) - f(2n-4, k-2)`.
///
/// This is the reference crown evaluator; it reproduces `c(n, 0) = 1` and
/// `c(n, 1) = n` through the zero conventions of `f`.
pub fn crown_whitney(n: u64, k: i64) -> Result<BigUint> {
    check_crown(n)?;
    if k < 0 || k > 2 * n as i64 {
        return Ok(BigUint::zero());
    }
    let n = n as i64;
    let value =
        BigInt::from(fence_whitney(2 * n, k)) - BigInt::from(fence_whitney(2 * n - 4, k - 2));
    Ok(value
        .to_biguint()
        .expect("crown Whitney number must be non-negative"))
}

pub fn crown_table(n: u64) -> Result<WhitneyTable> {
    (0..=2 * n as i64)
        .map(|k| crown_whitney(n, k))
        .collect::<Result<Vec<_>>>()
        .map(WhitneyTable::new)
}

/// Experimental single-sum crown formula, returned as the raw rational it
/// evaluates to.
///
/// Rising factorials of negative length use `(a)_{-m} = 1/((a-m)...(a-1))`,
/// and terms whose denominator would contain a zero factor are dropped. Under
/// this convention the value does not always equal [`crown_whitney`]; use
/// [`crown_closed_disagreements`] to list where.
pub fn crown_whitney_closed(n: u64, k: i64) -> Result<BigRational> {
    check_crown(n)?;
    if k < 0 || k > 2 * n as i64 {
        return Ok(BigRational::zero());
    }
    let n = n as i64;
    let mut total = BigRational::zero();
    let mut j = 0;
    while 2 * j <= k {
        let (Some(left), Some(right)) = (
            rising_factorial_extended(k - 2 * j + 1, j - 2),
            rising_factorial_extended(n + j - k + 1, k - 2 * j - 2),
        ) else {
            j += 1;
            continue;
        };
        let bracket = rising_factorial(k - j - 1, 2) * rising_factorial(n - j - 1, 2)
            - rising_factorial(k - 2 * j - 1, 2).pow(2);
        total += left
            * right
            * reciprocal_factorial(j)
            * reciprocal_factorial(k - 2 * j)
            * BigRational::from_integer(bracket);
        j += 1;
    }
    Ok(total)
}

/// A cell where the experimental crown formula differs from [`crown_whitney`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrownDisagreement {
    pub n: u64,
    pub k: i64,
    pub reference: BigUint,
    pub experimental: BigRational,
}

/// All cells `2 ≤ n ≤ n_max`, `0 ≤ k ≤ 2n` where the experimental formula
/// and the reference evaluator differ.
pub fn crown_closed_disagreements(n_max: u64) -> Vec<CrownDisagreement> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for k in 0..=2 * n as i64 {
            let reference = crown_whitney(n, k).expect("n >= 2");
            let experimental = crown_whitney_closed(n, k).expect("n >= 2");
            if experimental != BigRational::from_integer(BigInt::from(reference.clone())) {
                out.push(CrownDisagreement {
                    n,
                    k,
                    reference,
                    experimental,
                });
            }
        }
    }
    out
}

/// Whitney numbers of the asymmetric peak `AP(mu, nu)`: a trapezoid rising by
/// one per step up to `min(mu, nu) + 1`, flat until `max(mu, nu)`, then
/// falling back to 1.
pub fn ap_whitney(mu: u64, nu: u64, k: i64) -> Result<BigUint> {
    if mu == 0 || nu == 0 {
        return Err(Error::InvalidParameters(format!(
            "asymmetric peak needs mu, nu >= 1, got ({mu}, {nu})"
        )));
    }
    let (mu, nu) = (mu as i64, nu as i64);
    let top = mu + nu + 1;
    let (lo, hi) = (mu.min(nu), mu.max(nu));
    let value = match k {
        k if k < 0 || k > top => 0,
        k if k == 0 || k == top => 1,
        k if k <= lo => k + 1,
        k if k <= hi => lo + 1,
        k => 1 + mu + nu - k,
    };
    Ok(BigUint::from(value as u64))
}

pub fn ap_table(mu: u64, nu: u64) -> Result<WhitneyTable> {
    (0..=(mu + nu + 1) as i64)
        .map(|k| ap_whitney(mu, nu, k))
        .collect::<Result<Vec<_>>>()
        .map(WhitneyTable::new)
}

/// Number of minimal elements of `Z_n`, i.e. `f(n, 1)` for `n ≥ 1`.
pub fn fence_minimal_count(n: u64) -> BigUint {
    BigUint::from(n.div_ceil(2))
}
