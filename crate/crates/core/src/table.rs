use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Whitney numbers of an order-ideal lattice: `counts[k]` is the number of
/// ideals with exactly `k` elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WhitneyTable {
    #[serde(with = "decimal_vec")]
    pub counts: Vec<BigUint>,
}

impl WhitneyTable {
    pub fn new(counts: Vec<BigUint>) -> Self {
        Self { counts }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        Self::new(values.iter().copied().map(BigUint::from).collect())
    }

    /// Value at `k`, zero outside the table.
    pub fn get(&self, k: i64) -> BigUint {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.counts.get(k))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Total number of order ideals.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.counts
    }
}

impl fmt::Display for WhitneyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Serializes big naturals as decimal strings so JSON consumers never lose
/// precision.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| de::Error::custom(format!("not a decimal natural: {text:?}")))
    }
}

/// [`decimal`] for sequences.
pub mod decimal_vec {
    use num_bigint::BigUint;
    use serde::ser::SerializeSeq;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_str_radix(10))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|text| {
                text.parse()
                    .map_err(|_| de::Error::custom(format!("not a decimal natural: {text:?}")))
            })
            .collect()
    }
}
