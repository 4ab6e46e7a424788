//! Constructors for fences, crowns, asymmetric peaks, fences with one higher
//! asymmetric peak, and the ⊛ composition of two posets at minimal elements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A named instance of one of the supported poset families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Fence { n: u64 },
    Crown { n: u64 },
    Ap { mu: u64, nu: u64 },
    Fap { w: u64, x: u64, y: u64, z: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Fence { .. } => Ok(()),
            FamilySpec::Crown { n } => check_crown(n),
            FamilySpec::Ap { mu, nu } => check_ap(mu, nu),
            FamilySpec::Fap { w, x, y, z } => check_fap(w, x, y, z),
        }
    }

    /// Number of poset elements.
    pub fn cardinality(&self) -> u64 {
        match *self {
            FamilySpec::Fence { n } => n,
            FamilySpec::Crown { n } => 2 * n,
            FamilySpec::Ap { mu, nu } => mu + nu + 1,
            FamilySpec::Fap { w, x, y, z } => w + x + y + z + 1,
        }
    }

    pub fn poset(&self) -> Result<Poset> {
        match *self {
            FamilySpec::Fence { n } => Ok(fence(n)),
            FamilySpec::Crown { n } => crown(n),
            FamilySpec::Ap { mu, nu } => asymmetric_peak(mu, nu),
            FamilySpec::Fap { w, x, y, z } => fap(w, x, y, z),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Fence { n } => write!(f, "fence({n})"),
            FamilySpec::Crown { n } => write!(f, "crown({n})"),
            FamilySpec::Ap { mu, nu } => write!(f, "ap({mu},{nu})"),
            FamilySpec::Fap { w, x, y, z } => write!(f, "fap({w},{x},{y},{z})"),
        }
    }
}

fn check_crown(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "crown needs n >= 2, got {n}"
        )));
    }
    Ok(())
}

fn check_ap(mu: u64, nu: u64) -> Result<()> {
    if mu == 0 || nu == 0 {
        return Err(Error::InvalidParameters(format!(
            "asymmetric peak needs mu, nu >= 1, got ({mu}, {nu})"
        )));
    }
    Ok(())
}

fn check_fap(w: u64, x: u64, y: u64, z: u64) -> Result<()> {
    let end_ok = |v: u64| v >= 3 && v % 2 == 1;
    if !end_ok(w) || !end_ok(z) || x == 0 || y == 0 {
        return Err(Error::InvalidParameters(format!(
            "fap needs w, z odd and >= 3 and x, y >= 1, got ({w}, {x}, {y}, {z})"
        )));
    }
    Ok(())
}

fn numbered(prefix: &str, n: u64) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

/// Zigzag covers on `prefix1 .. prefix{n}`: odd-indexed elements are below
/// their even-indexed neighbours.
fn zigzag_covers(prefix: &str, n: u64) -> Vec<(String, String)> {
    (2..=n)
        .step_by(2)
        .flat_map(|peak| {
            let top = format!("{prefix}{peak}");
            let mut pairs = vec![(format!("{prefix}{}", peak - 1), top.clone())];
            if peak < n {
                pairs.push((format!("{prefix}{}", peak + 1), top));
            }
            pairs
        })
        .collect()
}

fn chain_covers(prefix: &str, n: u64) -> Vec<(String, String)> {
    (1..n)
        .map(|i| (format!("{prefix}{i}"), format!("{prefix}{}", i + 1)))
        .collect()
}

/// The fence `Z_n` on `z1 .. zn`.
pub fn fence(n: u64) -> Poset {
    let names: Vec<String> = numbered("z", n).collect();
    Poset::from_covers(&names, &zigzag_covers("z", n)).expect("fence is a valid poset")
}

/// The crown `Y_n` on `y0 .. y{2n-1}`; each even-indexed element lies below
/// its two cyclic neighbours.
pub fn crown(n: u64) -> Result<Poset> {
    check_crown(n)?;
    let size = 2 * n;
    let names: Vec<String> = (0..size).map(|i| format!("y{i}")).collect();
    let mut covers = Vec::with_capacity(size as usize);
    for h in 0..n {
        let low = 2 * h;
        covers.push((
            names[low as usize].clone(),
            names[(low + 1) as usize].clone(),
        ));
        let left = (low + size - 1) % size;
        covers.push((names[low as usize].clone(), names[left as usize].clone()));
    }
    Poset::from_covers(&names, &covers)
}

/// Two chains `a1 < .. < a_mu` and `b1 < .. < b_nu` below a common top `omega`.
pub fn asymmetric_peak(mu: u64, nu: u64) -> Result<Poset> {
    check_ap(mu, nu)?;
    let mut names: Vec<String> = numbered("a", mu).collect();
    names.extend(numbered("b", nu));
    names.push("omega".into());
    let mut covers = chain_covers("a", mu);
    covers.extend(chain_covers("b", nu));
    covers.push((format!("a{mu}"), "omega".into()));
    covers.push((format!("b{nu}"), "omega".into()));
    Poset::from_covers(&names, &covers)
}

/// Fence `a1..aw`, chain `b1..bx` rising from `aw` to `omega`, chain
/// `c1..cy` descending from `omega` to `d1`, then fence `d1..dz`.
pub fn fap(w: u64, x: u64, y: u64, z: u64) -> Result<Poset> {
    check_fap(w, x, y, z)?;
    let mut names: Vec<String> = numbered("a", w).collect();
    names.extend(numbered("b", x));
    names.push("omega".into());
    names.extend(numbered("c", y));
    names.extend(numbered("d", z));

    let mut covers = zigzag_covers("a", w);
    covers.push((format!("a{w}"), "b1".into()));
    covers.extend(chain_covers("b", x));
    covers.extend(chain_covers("c", y));
    covers.push((format!("b{x}"), "omega".into()));
    covers.push((format!("c{y}"), "omega".into()));
    covers.push(("d1".into(), "c1".into()));
    covers.extend(zigzag_covers("d", z));
    Poset::from_covers(&names, &covers)
}

/// Name given to the element adjoined by [`star_compose`].
pub const STAR_APEX: &str = "x~";

/// `P1(x1) ⊛ P2(x2)`: the disjoint union of both posets plus a new element
/// covering `x1` and `x2`, which must be minimal.
///
/// Element names are kept when the two name sets are disjoint; otherwise
/// every name is prefixed with `l.` or `r.`. The new element is named
/// [`STAR_APEX`] (with primes appended if taken) and is the last element.
pub fn star_compose(p1: &Poset, x1: &str, p2: &Poset, x2: &str) -> Result<Poset> {
    let i1 = p1
        .index_of(x1)
        .ok_or_else(|| Error::UnknownElement(x1.to_owned()))?;
    let i2 = p2
        .index_of(x2)
        .ok_or_else(|| Error::UnknownElement(x2.to_owned()))?;
    if !p1.is_minimal(i1) {
        return Err(Error::NotMinimal(x1.to_owned()));
    }
    if !p2.is_minimal(i2) {
        return Err(Error::NotMinimal(x2.to_owned()));
    }

    let clash = p2.names().iter().any(|n| p1.index_of(n).is_some());
    let rename = |prefix: &str, name: &str| {
        if clash {
            format!("{prefix}{name}")
        } else {
            name.to_owned()
        }
    };
    let mut names: Vec<String> = p1.names().iter().map(|n| rename("l.", n)).collect();
    names.extend(p2.names().iter().map(|n| rename("r.", n)));
    let mut apex = STAR_APEX.to_owned();
    while names.contains(&apex) {
        apex.push('\'');
    }
    names.push(apex.clone());

    let offset = p1.len();
    let mut covers: Vec<(String, String)> = p1
        .covers()
        .iter()
        .map(|&(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    covers.extend(
        p2.covers()
            .iter()
            .map(|&(a, b)| (names[a + offset].clone(), names[b + offset].clone())),
    );
    covers.push((names[i1].clone(), apex.clone()));
    covers.push((names[i2 + offset].clone(), apex));
    Poset::from_covers(&names, &covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::whitney_oracle_default;
    use crate::table::WhitneyTable;

    #[test]
    fn small_fences() {
        let f1 = fence(1);
        assert_eq!(f1.len(), 1);
        assert!(f1.covers().is_empty());
        assert_eq!(
            fence(4).cover_names(),
            vec![("z1", "z2"), ("z3", "z2"), ("z3", "z4")]
        );
        assert!(fence(0).is_empty());
        assert_eq!(fence(5).minimal_elements(), vec!["z1", "z3", "z5"]);
    }

    #[test]
    fn fence_minimal_count() {
        for n in 0..30u64 {
            assert_eq!(fence(n).minimal_elements().len() as u64, n.div_ceil(2));
        }
    }

    #[test]
    fn fence_oracle() {
        assert_eq!(
            whitney_oracle_default(&fence(5)).unwrap(),
            WhitneyTable::from_u64s(&[1, 3, 3, 3, 2, 1])
        );
    }

    #[test]
    fn crown_two_is_complete_bipartite() {
        let c = crown(2).unwrap();
        assert_eq!(c.minimal_elements(), vec!["y0", "y2"]);
        for lo in ["y0", "y2"] {
            for hi in ["y1", "y3"] {
                assert!(c.less_than(c.index_of(lo).unwrap(), c.index_of(hi).unwrap()));
            }
        }
        assert_eq!(
            whitney_oracle_default(&c).unwrap(),
            WhitneyTable::from_u64s(&[1, 2, 1, 2, 1])
        );
    }

    #[test]
    fn crown_is_a_cycle() {
        for n in 2..10 {
            let c = crown(n).unwrap();
            assert_eq!(c.len() as u64, 2 * n);
            assert_eq!(c.covers().len() as u64, 2 * n);
            for i in 0..c.len() {
                assert_eq!(c.lower_covers(i).len() + c.upper_covers(i).len(), 2);
            }
            assert_eq!(c.minimal_elements().len() as u64, n);
            assert_eq!(c.maximal_elements().len() as u64, n);
        }
    }

    #[test]
    fn crown_rejects_small_n() {
        assert!(matches!(crown(1), Err(Error::InvalidParameters(_))));
        assert!(matches!(crown(0), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn asymmetric_peaks() {
        let p = asymmetric_peak(1, 1).unwrap();
        assert_eq!(p.cover_names(), vec![("a1", "omega"), ("b1", "omega")]);
        for (mu, nu) in [(1, 1), (2, 5), (4, 3)] {
            assert_eq!(asymmetric_peak(mu, nu).unwrap().len() as u64, mu + nu + 1);
        }
        assert_eq!(
            whitney_oracle_default(&asymmetric_peak(2, 1).unwrap()).unwrap(),
            WhitneyTable::from_u64s(&[1, 2, 2, 1, 1])
        );
        assert!(asymmetric_peak(0, 2).is_err());
        assert!(asymmetric_peak(2, 0).is_err());
    }

    #[test]
    fn fap_shape() {
        let p = fap(7, 10, 6, 7).unwrap();
        assert_eq!(p.len(), 31);
        assert_eq!(p.covers().len(), 30);
        assert!(fap(4, 1, 1, 3).is_err());
        assert!(fap(3, 1, 1, 4).is_err());
        assert!(fap(1, 1, 1, 3).is_err());
        assert!(fap(3, 0, 1, 3).is_err());
        assert!(fap(3, 1, 0, 3).is_err());
    }

    #[test]
    fn star_of_singletons() {
        let a = Poset::from_covers::<_, &str>(&["p"], &[]).unwrap();
        let b = Poset::from_covers::<_, &str>(&["q"], &[]).unwrap();
        let s = star_compose(&a, "p", &b, "q").unwrap();
        assert_eq!(s.names(), &["p", "q", "x~"]);
        assert_eq!(s.cover_names(), vec![("p", "x~"), ("q", "x~")]);
    }

    #[test]
    fn star_renames_on_clash() {
        let s = star_compose(&fence(3), "z3", &fence(1), "z1").unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.names()[0], "l.z1");
        assert_eq!(s.names()[3], "r.z1");
        assert_eq!(s.covers().len(), fence(3).covers().len() + 2);
    }

    #[test]
    fn star_rejects_non_minimal() {
        assert_eq!(
            star_compose(&fence(3), "z2", &fence(1), "z1").unwrap_err(),
            Error::NotMinimal("z2".into())
        );
        assert_eq!(
            star_compose(&fence(1), "z1", &fence(2), "z2").unwrap_err(),
            Error::NotMinimal("z2".into())
        );
    }

    #[test]
    fn family_spec_json() {
        let spec = FamilySpec::Fence { n: 5 };
        assert_eq!(
            serde_json::to_string(&spec).unwrap(),
            r#"{"family":"fence","n":5}"#
        );
        let ap: FamilySpec = serde_json::from_str(r#"{"family":"ap","mu":2,"nu":1}"#).unwrap();
        assert_eq!(ap, FamilySpec::Ap { mu: 2, nu: 1 });
        assert_eq!(ap.cardinality(), 4);
        assert_eq!(ap.to_string(), "ap(2,1)");
    }
}
