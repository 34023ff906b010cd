//! Exact finite and co-finite subsets of the naturals.
//!
//! A co-finite value stores only its finite complement, so the whole of
//! the naturals, and everything the elimination process carves out of it,
//! stays exactly representable: the starting universe is co-finite and
//! every step removes a single element. Finite and co-finite shapes never
//! denote the same set, which makes equality plain structural equality.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A finite or co-finite subset of the naturals. `CoFinite([])` is the
/// canonical form of the full set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NatSet {
    /// Exactly these members, sorted strictly ascending.
    Finite(Vec<u64>),
    /// Every natural except these, sorted strictly ascending.
    CoFinite(Vec<u64>),
}

/// Exact cardinality class; co-finite sets are always infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CardClass {
    Finite(u64),
    CountablyInfinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatSetError {
    #[error("duplicate element {0} in set constructor input")]
    DuplicateInput(u64),
    #[error("the least-element choice is undefined on the empty set")]
    EmptyChoice,
    #[error("unreadable set text {0:?}")]
    Parse(String),
}

fn sorted_strict(mut values: Vec<u64>) -> Result<Vec<u64>, NatSetError> {
    values.sort_unstable();
    for pair in values.windows(2) {
        if pair[0] == pair[1] {
            return Err(NatSetError::DuplicateInput(pair[0]));
        }
    }
    Ok(values)
}

impl NatSet {
    /// The full set of naturals.
    pub fn full() -> NatSet {
        NatSet::CoFinite(Vec::new())
    }

    /// The empty set.
    pub fn empty() -> NatSet {
        NatSet::Finite(Vec::new())
    }

    /// Exactly `members`; sorts, rejects duplicates.
    pub fn finite(members: Vec<u64>) -> Result<NatSet, NatSetError> {
        Ok(NatSet::Finite(sorted_strict(members)?))
    }

    /// Everything except `excluded`; sorts, rejects duplicates.
    pub fn cofinite(excluded: Vec<u64>) -> Result<NatSet, NatSetError> {
        Ok(NatSet::CoFinite(sorted_strict(excluded)?))
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            NatSet::Finite(members) => members.binary_search(&n).is_ok(),
            NatSet::CoFinite(excluded) => excluded.binary_search(&n).is_err(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, NatSet::Finite(members) if members.is_empty())
    }

    pub fn card(&self) -> CardClass {
        match self {
            NatSet::Finite(members) => CardClass::Finite(members.len() as u64),
            NatSet::CoFinite(_) => CardClass::CountablyInfinite,
        }
    }

    /// The least member.
    pub fn min(&self) -> Result<u64, NatSetError> {
        match self {
            NatSet::Finite(members) => members.first().copied().ok_or(NatSetError::EmptyChoice),
            NatSet::CoFinite(excluded) => {
                // First gap in the excluded run starting at 0.
                let mut candidate = 0;
                for &e in excluded {
                    if e != candidate {
                        break;
                    }
                    candidate += 1;
                }
                Ok(candidate)
            }
        }
    }

    /// The k-th smallest member, 1-indexed.
    pub fn kth_smallest(&self, k: u64) -> Option<u64> {
        if k == 0 {
            return None;
        }
        match self {
            NatSet::Finite(members) => members.get(k as usize - 1).copied(),
            NatSet::CoFinite(excluded) => {
                let mut remaining = k;
                let mut cursor = 0;
                for &e in excluded {
                    let gap = e - cursor;
                    if remaining <= gap {
                        return Some(cursor + remaining - 1);
                    }
                    remaining -= gap;
                    cursor = e + 1;
                }
                Some(cursor + remaining - 1)
            }
        }
    }

    /// `self` without `n`; removing an absent element is the identity.
    pub fn remove(&self, n: u64) -> NatSet {
        match self {
            NatSet::Finite(members) => {
                let mut members = members.clone();
                if let Ok(slot) = members.binary_search(&n) {
                    members.remove(slot);
                }
                NatSet::Finite(members)
            }
            NatSet::CoFinite(excluded) => {
                let mut excluded = excluded.clone();
                if let Err(slot) = excluded.binary_search(&n) {
                    excluded.insert(slot, n);
                }
                NatSet::CoFinite(excluded)
            }
        }
    }

    /// `self` minus a finite list (sorted or not; duplicates harmless).
    pub fn diff_finite(&self, removed: &[u64]) -> NatSet {
        match self {
            NatSet::Finite(members) => NatSet::Finite(
                members
                    .iter()
                    .copied()
                    .filter(|m| !removed.contains(m))
                    .collect(),
            ),
            NatSet::CoFinite(excluded) => {
                let mut excluded = excluded.clone();
                excluded.extend_from_slice(removed);
                excluded.sort_unstable();
                excluded.dedup();
                NatSet::CoFinite(excluded)
            }
        }
    }

    pub fn is_subset_of(&self, other: &NatSet) -> bool {
        match (self, other) {
            (NatSet::Finite(a), _) => a.iter().all(|&n| other.contains(n)),
            (NatSet::CoFinite(_), NatSet::Finite(_)) => false,
            (NatSet::CoFinite(a), NatSet::CoFinite(b)) => {
                // Complement containment reverses the direction.
                b.iter().all(|e| a.binary_search(e).is_ok())
            }
        }
    }

    pub fn intersect(&self, other: &NatSet) -> NatSet {
        match (self, other) {
            (NatSet::Finite(a), _) => {
                NatSet::Finite(a.iter().copied().filter(|&n| other.contains(n)).collect())
            }
            (NatSet::CoFinite(_), NatSet::Finite(b)) => {
                NatSet::Finite(b.iter().copied().filter(|&n| self.contains(n)).collect())
            }
            (NatSet::CoFinite(a), NatSet::CoFinite(b)) => {
                let mut excluded = a.clone();
                excluded.extend_from_slice(b);
                excluded.sort_unstable();
                excluded.dedup();
                NatSet::CoFinite(excluded)
            }
        }
    }

    pub fn union(&self, other: &NatSet) -> NatSet {
        match (self, other) {
            (NatSet::Finite(a), NatSet::Finite(b)) => {
                let mut members = a.clone();
                members.extend_from_slice(b);
                members.sort_unstable();
                members.dedup();
                NatSet::Finite(members)
            }
            (NatSet::Finite(_), NatSet::CoFinite(b)) => {
                NatSet::CoFinite(b.iter().copied().filter(|&e| !self.contains(e)).collect())
            }
            (NatSet::CoFinite(a), _) => {
                NatSet::CoFinite(a.iter().copied().filter(|&e| !other.contains(e)).collect())
            }
        }
    }

    /// The complement in the naturals; swaps the two shapes exactly.
    pub fn complement(&self) -> NatSet {
        match self {
            NatSet::Finite(members) => NatSet::CoFinite(members.clone()),
            NatSet::CoFinite(excluded) => NatSet::Finite(excluded.clone()),
        }
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn braced(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
            write!(f, "{{")?;
            for (i, v) in values.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")
        }
        match self {
            NatSet::Finite(members) => braced(f, members),
            NatSet::CoFinite(excluded) if excluded.is_empty() => write!(f, "N"),
            NatSet::CoFinite(excluded) => {
                write!(f, "N\\")?;
                braced(f, excluded)
            }
        }
    }
}

impl FromStr for NatSet {
    type Err = NatSetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn list(body: &str, original: &str) -> Result<Vec<u64>, NatSetError> {
            let inner = body
                .strip_prefix('{')
                .and_then(|rest| rest.strip_suffix('}'))
                .ok_or_else(|| NatSetError::Parse(original.to_string()))?;
            if inner.trim().is_empty() {
                return Ok(Vec::new());
            }
            inner
                .split(',')
                .map(|piece| {
                    piece
                        .trim()
                        .parse()
                        .map_err(|_| NatSetError::Parse(original.to_string()))
                })
                .collect()
        }
        let text = s.trim();
        if text == "N" {
            return Ok(NatSet::full());
        }
        if let Some(rest) = text.strip_prefix("N\\") {
            return NatSet::cofinite(list(rest, s)?);
        }
        NatSet::finite(list(text, s)?)
    }
}

impl serde::Serialize for NatSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for NatSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
