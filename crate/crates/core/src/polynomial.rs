//! Rank polynomials of order-ideal lattices and the ⊛ composition rule
//! `R(P1 ⊛ P2) = R(P1) R(P2) + X^3 R(P1 - x1) R(P2 - x2)`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closed::{ap_table, fence_table, FormulaVariant};
use crate::error::Result;
use crate::families::star_compose;
use crate::poset::{whitney_oracle, OracleLimits, Poset};
use crate::table::WhitneyTable;

/// `Σ W(k) X^k` with trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RankPolynomial {
    #[serde(with = "crate::table::decimal_vec")]
    coeffs: Vec<BigUint>,
}

impl RankPolynomial {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        Self::new(values.iter().copied().map(BigUint::from).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigUint::one()])
    }

    pub fn from_table(table: &WhitneyTable) -> Self {
        Self::new(table.counts.clone())
    }

    /// `1 + X + ... + X^len`, the rank polynomial of a chain with `len` elements.
    pub fn chain(len: usize) -> Self {
        Self::new(vec![BigUint::one(); len + 1])
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplication by `X^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigUint::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }

    pub fn to_table(&self) -> WhitneyTable {
        WhitneyTable::new(self.coeffs.clone())
    }
}

impl Add for &RankPolynomial {
    type Output = RankPolynomial;

    fn add(self, rhs: &RankPolynomial) -> RankPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        RankPolynomial::new(coeffs)
    }
}

impl Mul for &RankPolynomial {
    type Output = RankPolynomial;

    fn mul(self, rhs: &RankPolynomial) -> RankPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RankPolynomial::default();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RankPolynomial::new(coeffs)
    }
}

impl fmt::Display for RankPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{c}X")?,
                (_, true) => write!(f, "X^{k}")?,
                (_, false) => write!(f, "{c}X^{k}")?,
            }
        }
        Ok(())
    }
}

/// Rank polynomial of `P1(x1) ⊛ P2(x2)` from the rank polynomials of `P1`,
/// `P1 - x1`, `P2` and `P2 - x2`.
///
/// Ideals avoiding the new top element are pairs of ideals of `P1` and `P2`;
/// ideals containing it must contain `x1`, `x2` and itself.
pub fn star_rank_polynomial(
    whole1: &RankPolynomial,
    deleted1: &RankPolynomial,
    whole2: &RankPolynomial,
    deleted2: &RankPolynomial,
) -> RankPolynomial {
    &(whole1 * whole2) + &(deleted1 * deleted2).shift(3)
}

/// Applies [`star_rank_polynomial`] with all four inputs computed by the
/// oracle. Works for arbitrary posets within the oracle limits.
pub fn star_rank_polynomial_by_oracle(
    p1: &Poset,
    x1: &str,
    p2: &Poset,
    x2: &str,
    limits: &OracleLimits,
) -> Result<RankPolynomial> {
    // validates minimality
    star_compose(p1, x1, p2, x2)?;
    let oracle = |p: &Poset| whitney_oracle(p, limits).map(|t| RankPolynomial::from_table(&t));
    Ok(star_rank_polynomial(
        &oracle(p1)?,
        &oracle(&p1.delete_element(x1)?)?,
        &oracle(p2)?,
        &oracle(&p2.delete_element(x2)?)?,
    ))
}

fn fence_poly(n: u64) -> RankPolynomial {
    RankPolynomial::from_table(&fence_table(n, FormulaVariant::Hypergeometric))
}

fn ap_poly(mu: u64, nu: u64) -> RankPolynomial {
    RankPolynomial::from_table(&ap_table(mu, nu).expect("mu, nu >= 1"))
}

/// `AP(mu, nu)` with the bottom of its first chain removed.
fn ap_poly_without_first_bottom(mu: u64, nu: u64) -> RankPolynomial {
    if mu >= 2 {
        ap_poly(mu - 1, nu)
    } else {
        // only the second chain and the top remain
        RankPolynomial::chain(nu as usize + 1)
    }
}

/// Which association of the two ⊛ steps builds the FAP poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FapAssociation {
    /// `(Z_{w-2} ⊛ AP) ⊛ Z_{z-2}`
    LeftFirst,
    /// `Z_{w-2} ⊛ (AP ⊛ Z_{z-2})`
    RightFirst,
}

/// Rank polynomial of `FAP(w, x, y, z)` built from closed forms.
///
/// The poset splits as `Z_{w-2}`, an asymmetric peak `AP(x+1, y+1)` (chains
/// `a_w, b1..bx` and `d1, c1..cy` under `omega`) and `Z_{z-2}`, glued by
/// the two ⊛ apexes `a_{w-1}` and `d2`. Every deletion needed is again a
/// fence, an asymmetric peak or a chain.
pub fn fap_rank_polynomial(w: u64, x: u64, y: u64, z: u64) -> Result<RankPolynomial> {
    fap_rank_polynomial_with(w, x, y, z, FapAssociation::LeftFirst)
}

pub fn fap_rank_polynomial_with(
    w: u64,
    x: u64,
    y: u64,
    z: u64,
    association: FapAssociation,
) -> Result<RankPolynomial> {
    crate::families::FamilySpec::Fap { w, x, y, z }.validate()?;
    let left = fence_poly(w - 2);
    let left_del = fence_poly(w - 3);
    let right = fence_poly(z - 2);
    let right_del = fence_poly(z - 3);
    // AP(mu, nu) with mu counting a_w, b1..bx and nu counting d1, c1..cy;
    // a_w and d1 are the bottoms of the two chains. Deleting d1 leaves
    // AP(mu, nu - 1) since nu = y + 1 >= 2.
    let (mu, nu) = (x + 1, y + 1);
    let peak = ap_poly(mu, nu);

    Ok(match association {
        FapAssociation::LeftFirst => {
            // Q = Z_{w-2}(a_{w-2}) ⊛ AP(a_w); then Q(d1) ⊛ Z_{z-2}(d3)
            let q = star_rank_polynomial(
                &left,
                &left_del,
                &peak,
                &ap_poly_without_first_bottom(mu, nu),
            );
            let q_del = star_rank_polynomial(
                &left,
                &left_del,
                &ap_poly(mu, nu - 1),
                &ap_poly_without_first_bottom(mu, nu - 1),
            );
            star_rank_polynomial(&q, &q_del, &right, &right_del)
        }
        FapAssociation::RightFirst => {
            // S = AP(d1) ⊛ Z_{z-2}(d3); then Z_{w-2}(a_{w-2}) ⊛ S(a_w)
            let s = star_rank_polynomial(&peak, &ap_poly(mu, nu - 1), &right, &right_del);
            let s_del = star_rank_polynomial(
                &ap_poly_without_first_bottom(mu, nu),
                &ap_poly_without_first_bottom(mu, nu - 1),
                &right,
                &right_del,
            );
            star_rank_polynomial(&left, &left_del, &s, &s_del)
        }
    })
}
