//! Exact Whitney numbers and rank polynomials for lattices of order ideals.
//!
//! The library covers fences `Z_n`, crowns `Y_n`, asymmetric peaks
//! `AP(mu, nu)`, fences with one higher asymmetric peak `FAP(w, x, y, z)`,
//! and the ⊛ composition of posets at minimal elements. Every quantity has
//! up to three independent routes:
//!
//! - a brute-force order-ideal enumerator ([`poset::whitney_oracle`]),
//! - bottom-up recurrence tables ([`recurrences::FenceTable`]),
//! - closed forms ([`closed`]) and the ⊛ product rule ([`polynomial`]).
//!
//! All arithmetic is exact, on arbitrary-precision integers and rationals.

pub mod analysis;
pub mod closed;
pub mod combinatorics;
pub mod error;
pub mod families;
pub mod polynomial;
pub mod poset;
pub mod recurrences;
pub mod table;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use polynomial::RankPolynomial;
pub use poset::{OracleLimits, Poset};
pub use table::WhitneyTable;
