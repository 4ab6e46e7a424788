//! Unimodality and (strict) log-concavity checks, and the sweep over fences
//! and crowns up to a given cardinality.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::families::FamilySpec;
use crate::recurrences::FenceTable;
use crate::table::WhitneyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Unimodal,
    LogConcave,
    StrictlyLogConcave,
}

/// Three entries that together break a predicate.
///
/// For log-concavity the indices are `k-1, k, k+1` and the middle square is
/// too small. For unimodality they are `i < j < l` with `a[i] > a[j] < a[l]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub predicate: Predicate,
    pub indices: [usize; 3],
    #[serde(with = "triple")]
    pub values: [BigUint; 3],
}

impl Violation {
    fn at(predicate: Predicate, seq: &[BigUint], indices: [usize; 3]) -> Self {
        Self {
            predicate,
            indices,
            values: indices.map(|i| seq[i].clone()),
        }
    }

    /// Re-checks that the recorded values break the predicate.
    pub fn is_genuine(&self) -> bool {
        let [a, b, c] = &self.values;
        match self.predicate {
            Predicate::Unimodal => {
                let [i, j, l] = self.indices;
                i < j && j < l && a > b && b < c
            }
            Predicate::LogConcave => b * b < a * c,
            Predicate::StrictlyLogConcave => b * b <= a * c,
        }
    }
}

/// Weakly increasing, then weakly decreasing. On failure returns a valley:
/// an earlier larger entry, the valley, and the entry that rises after it.
pub fn is_unimodal(seq: &[BigUint]) -> Result<(), Violation> {
    let mut descent_from = None;
    for k in 1..seq.len() {
        if seq[k] < seq[k - 1] {
            descent_from.get_or_insert(k - 1);
        } else if seq[k] > seq[k - 1] {
            if let Some(i) = descent_from {
                // entries from i+1 up to k-1 never rise, so seq[i] > seq[k-1]
                return Err(Violation::at(Predicate::Unimodal, seq, [i, k - 1, k]));
            }
        }
    }
    Ok(())
}

/// `seq[k]^2 >= seq[k-1] seq[k+1]` (strictly `>` when `strict`) for every
/// interior index `1 ≤ k ≤ len - 2`. Returns the first failing index.
pub fn is_log_concave(seq: &[BigUint], strict: bool) -> Result<(), Violation> {
    let predicate = if strict {
        Predicate::StrictlyLogConcave
    } else {
        Predicate::LogConcave
    };
    for k in 1..seq.len().saturating_sub(1) {
        let square = &seq[k] * &seq[k];
        let outer = &seq[k - 1] * &seq[k + 1];
        let holds = if strict {
            square > outer
        } else {
            square >= outer
        };
        if !holds {
            return Err(Violation::at(predicate, seq, [k - 1, k, k + 1]));
        }
    }
    Ok(())
}

/// The claim a sweep instance is tested against, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Fences with `n ≥ 1`, `n ≠ 3`.
    LogConcave,
    /// Crowns with `n ≥ 4`.
    StrictlyLogConcave,
    /// Reported for information only.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub instance: FamilySpec,
    pub unimodal: bool,
    pub log_concave: bool,
    pub strictly_log_concave: bool,
    /// First violated predicate, in the order unimodal, log-concave, strict.
    pub first_violation: Option<Violation>,
    /// One witness per violated predicate.
    pub violations: Vec<Violation>,
    pub claim: Claim,
    /// Whether the claimed predicate holds; `None` outside the claimed range.
    pub claim_holds: Option<bool>,
}

impl ConjectureReport {
    pub fn evaluate(instance: FamilySpec, table: &WhitneyTable, claim: Claim) -> Self {
        let seq = table.as_slice();
        let unimodal = is_unimodal(seq);
        let log_concave = is_log_concave(seq, false);
        let strict = is_log_concave(seq, true);
        let (unimodal, log_concave, strict_ok) = (unimodal.err(), log_concave.err(), strict.err());
        let flags = (
            unimodal.is_none(),
            log_concave.is_none(),
            strict_ok.is_none(),
        );
        let violations: Vec<Violation> = [unimodal, log_concave, strict_ok]
            .into_iter()
            .flatten()
            .collect();
        let claim_holds = match claim {
            Claim::LogConcave => Some(flags.1),
            Claim::StrictlyLogConcave => Some(flags.2),
            Claim::None => None,
        };
        Self {
            instance,
            unimodal: flags.0,
            log_concave: flags.1,
            strictly_log_concave: flags.2,
            first_violation: violations.first().cloned(),
            violations,
            claim,
            claim_holds,
        }
    }
}

/// Aggregate outcome of [`conjecture_sweep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub reports: Vec<ConjectureReport>,
}

impl SweepOutcome {
    /// Every instance inside a claimed range satisfies its claim.
    pub fn all_claims_hold(&self) -> bool {
        self.reports.iter().all(|r| r.claim_holds != Some(false))
    }

    pub fn claim_failures(&self) -> impl Iterator<Item = &ConjectureReport> {
        self.reports.iter().filter(|r| r.claim_holds == Some(false))
    }

    /// Out-of-range instances that are not log-concave (fence 3) or not
    /// unimodal (crown 2).
    pub fn known_exceptions(&self) -> impl Iterator<Item = &ConjectureReport> {
        self.reports
            .iter()
            .filter(|r| r.claim == Claim::None && (!r.log_concave || !r.unimodal))
    }
}

/// Checks every fence `Z_n` with `1 ≤ n ≤ max_cardinality` and every crown
/// `Y_n` with `2 ≤ n` and `2n ≤ max_cardinality`.
///
/// Tables come from the fence recurrence, crowns via
/// `c(n, k) = f(2n, k) - f(2n-4, k-2)`. Reports are ordered fences first,
/// then crowns, each by increasing `n`.
pub fn conjecture_sweep(max_cardinality: u64) -> SweepOutcome {
    let fences = FenceTable::recursive(max_cardinality);
    let mut reports = Vec::new();
    for n in 1..=max_cardinality {
        let claim = if n == 3 {
            Claim::None
        } else {
            Claim::LogConcave
        };
        reports.push(ConjectureReport::evaluate(
            FamilySpec::Fence { n },
            &fences.row(n),
            claim,
        ));
    }
    for n in 2..=max_cardinality / 2 {
        let claim = if n >= 4 {
            Claim::StrictlyLogConcave
        } else {
            Claim::None
        };
        reports.push(ConjectureReport::evaluate(
            FamilySpec::Crown { n },
            &fences.crown_row(n),
            claim,
        ));
    }
    SweepOutcome { reports }
}

mod triple {
    use num_bigint::BigUint;
    use serde::{Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigUint; 3], s: S) -> Result<S::Ok, S::Error> {
        values
            .iter()
            .map(|v| v.to_str_radix(10))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[BigUint; 3], D::Error> {
        let values = crate::table::decimal_vec::deserialize(d)?;
        <[BigUint; 3]>::try_from(values)
            .map_err(|_| serde::de::Error::custom("expected three values"))
    }
}
