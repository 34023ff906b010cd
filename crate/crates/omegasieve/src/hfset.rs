//! Hereditarily finite sets with a canonical total order.
//!
//! Values are immutable and share substructure through [`Arc`]; equality
//! and ordering are structural, with a pointer fast path when two values
//! share the same allocation. The canonical order (cardinality first, then
//! lexicographic on the ordered elements) makes every constructor output
//! deterministic, so rendered sets are stable across runs.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest `n` accepted by [`vn_encode`] unless a caller widens the limit.
pub const DEFAULT_VN_LIMIT: u64 = 16;

/// A hereditarily finite set: a canonically ordered, duplicate-free list
/// of smaller such sets. Well-founded by construction.
#[derive(Clone)]
pub struct HFSet {
    elems: Arc<[HFSet]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfError {
    #[error("numeral {requested} exceeds the encoding limit {limit}")]
    LimitExceeded { requested: u64, limit: u64 },
    #[error("{0} is not a von Neumann numeral")]
    NotANumeral(HFSet),
}

impl HFSet {
    /// The empty set.
    pub fn empty() -> HFSet {
        HFSet {
            elems: Arc::from(Vec::new()),
        }
    }

    /// Builds a set from arbitrary elements; sorts and deduplicates.
    pub fn from_elements(mut elements: Vec<HFSet>) -> HFSet {
        elements.sort();
        elements.dedup();
        HFSet {
            elems: Arc::from(elements),
        }
    }

    /// The set successor `x ∪ {x}`. Defined for every set, numeral or not.
    pub fn succ(&self) -> HFSet {
        let mut elements: Vec<HFSet> = self.elems.to_vec();
        if let Err(slot) = elements.binary_search(self) {
            elements.insert(slot, self.clone());
        }
        HFSet {
            elems: Arc::from(elements),
        }
    }

    /// Membership under canonical equality.
    pub fn contains(&self, candidate: &HFSet) -> bool {
        self.elems.binary_search(candidate).is_ok()
    }

    pub fn card(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The elements in canonical order.
    pub fn elements(&self) -> &[HFSet] {
        &self.elems
    }

    /// True iff every element of `self` is an element of `other`.
    pub fn is_subset_of(&self, other: &HFSet) -> bool {
        self.elems.iter().all(|e| other.contains(e))
    }

    /// The union of all elements: `⋃x`.
    pub fn union_all(&self) -> HFSet {
        self.elems
            .iter()
            .fold(HFSet::empty(), |acc, e| acc.union(e))
    }

    fn union(&self, other: &HFSet) -> HFSet {
        HFSet {
            elems: merge(&self.elems, &other.elems, true),
        }
    }

    /// Canonical intersection.
    pub fn intersect(&self, other: &HFSet) -> HFSet {
        HFSet {
            elems: merge(&self.elems, &other.elems, false),
        }
    }

    /// True iff `self ∉ self`. Always true here (the values are
    /// well-founded); exposed so the audit can assert it explicitly.
    pub fn is_regular(&self) -> bool {
        !self.contains(self)
    }
}

/// Merges two canonical element lists; `keep_unmatched` selects union
/// versus intersection.
fn merge(a: &[HFSet], b: &[HFSet], keep_unmatched: bool) -> Arc<[HFSet]> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                if keep_unmatched {
                    out.push(a[i].clone());
                }
                i += 1;
            }
            Ordering::Greater => {
                if keep_unmatched {
                    out.push(b[j].clone());
                }
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    if keep_unmatched {
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
    }
    Arc::from(out)
}

/// The von Neumann numeral `vn(n) = {vn(0), …, vn(n-1)}`, refusing `n`
/// above [`DEFAULT_VN_LIMIT`].
pub fn vn_encode(n: u64) -> Result<HFSet, HfError> {
    vn_encode_with_limit(n, DEFAULT_VN_LIMIT)
}

/// [`vn_encode`] with an explicit limit, for callers that accept the
/// linear growth in breadth and comparison depth.
pub fn vn_encode_with_limit(n: u64, limit: u64) -> Result<HFSet, HfError> {
    if n > limit {
        return Err(HfError::LimitExceeded {
            requested: n,
            limit,
        });
    }
    let mut value = HFSet::empty();
    for _ in 0..n {
        value = value.succ();
    }
    Ok(value)
}

/// Recovers `n` from `vn(n)`, or `None` when the set is not a numeral.
pub fn vn_decode(x: &HFSet) -> Option<u64> {
    // vn(n) lists vn(0)..vn(n-1) in canonical order, so each element must
    // restate the prefix before it.
    let elems = x.elements();
    for (i, e) in elems.iter().enumerate() {
        if e.card() != i || e.elements() != &elems[..i] {
            return None;
        }
    }
    Some(elems.len() as u64)
}

/// Numeral comparison `x ≥ y`, read as `y ∈ x ∨ y = x`.
pub fn vn_ge(x: &HFSet, y: &HFSet) -> Result<bool, HfError> {
    for side in [x, y] {
        if vn_decode(side).is_none() {
            return Err(HfError::NotANumeral(side.clone()));
        }
    }
    Ok(ge_raw(x, y))
}

/// The defining clause of [`vn_ge`], for callers whose inputs are
/// numerals by construction.
fn ge_raw(x: &HFSet, y: &HFSet) -> bool {
    x.contains(y) || x == y
}

/// The element of a duplicate-free finite universe that is `≥` every
/// other element under [`vn_ge`] on encodings; `None` when empty.
pub fn has_greatest(universe: &[u64]) -> Option<u64> {
    let max = universe.iter().copied().max()?;
    // One successor chain, so every numeral shares substructure and the
    // pairwise comparisons below stay cheap.
    let mut chain = Vec::with_capacity(max as usize + 1);
    chain.push(HFSet::empty());
    for i in 0..max {
        chain.push(chain[i as usize].succ());
    }
    let encoded: Vec<&HFSet> = universe.iter().map(|&n| &chain[n as usize]).collect();
    universe
        .iter()
        .zip(&encoded)
        .find(|(_, x)| encoded.iter().all(|y| ge_raw(x, y)))
        .map(|(&n, _)| n)
}

/// `b = {2}`: the first end-of-construction marker.
pub fn sentinel_b() -> HFSet {
    HFSet::from_elements(vec![vn_encode(2).expect("2 is below the limit")])
}

/// `c = {2, 3}`: the second end-of-construction marker.
pub fn sentinel_c() -> HFSet {
    HFSet::from_elements(vec![
        vn_encode(2).expect("2 is below the limit"),
        vn_encode(3).expect("3 is below the limit"),
    ])
}

impl PartialEq for HFSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.elems, &other.elems) || *self.elems == *other.elems
    }
}

impl Eq for HFSet {}

impl Ord for HFSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.elems, &other.elems) {
            return Ordering::Equal;
        }
        self.elems
            .len()
            .cmp(&other.elems.len())
            .then_with(|| self.elems.iter().cmp(other.elems.iter()))
    }
}

impl PartialOrd for HFSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match vn_decode(self) {
            Some(n) => write!(f, "{self} (={n})"),
            None => write!(f, "{self}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vn(n: u64) -> HFSet {
        vn_encode(n).expect("test numeral within limit")
    }

    #[test]
    fn empty_set_basics() {
        assert_eq!(HFSet::empty().card(), 0);
        assert_eq!(vn_decode(&HFSet::empty()), Some(0));
        assert_eq!(HFSet::empty().to_string(), "{}");
    }

    #[test]
    fn succ_cases() {
        assert_eq!(HFSet::empty().succ(), vn(1));
        assert_eq!(vn(1).succ(), vn(2));
        assert_eq!(vn(2).to_string(), "{{},{{}}}");
        // Successor of a non-numeral: b ∪ {b} = {vn(2), b}.
        let b = sentinel_b();
        assert_eq!(b.succ(), HFSet::from_elements(vec![vn(2), b]));
    }

    #[test]
    fn membership_cases() {
        assert!(vn(2).contains(&vn(1)));
        assert!(!vn(2).contains(&vn(2)));
        assert!(!sentinel_c().contains(&vn(0)));
        assert!(sentinel_c().contains(&vn(3)));
    }

    #[test]
    fn encode_limit() {
        assert!(vn_encode(16).is_ok());
        assert_eq!(
            vn_encode(17),
            Err(HfError::LimitExceeded {
                requested: 17,
                limit: 16
            })
        );
        assert!(vn_encode_with_limit(40, 64).is_ok());
        assert_eq!(vn_encode(5).unwrap().card(), 5);
    }

    #[test]
    fn decode_cases() {
        assert_eq!(vn_decode(&vn(1)), Some(1));
        assert_eq!(vn_decode(&vn(12)), Some(12));
        assert_eq!(vn_decode(&sentinel_b()), None);
        assert_eq!(vn_decode(&sentinel_c()), None);
        // Right cardinality, wrong element: {1} is not a numeral.
        assert_eq!(vn_decode(&HFSet::from_elements(vec![vn(1)])), None);
    }

    #[test]
    fn union_all_cases() {
        assert_eq!(vn(3).union_all(), vn(2));
        assert_eq!(HFSet::empty().union_all(), HFSet::empty());
        assert_eq!(HFSet::from_elements(vec![vn(5)]).union_all(), vn(5));
        let bc = HFSet::from_elements(vec![sentinel_b(), sentinel_c()]);
        assert_eq!(bc.union_all(), sentinel_c());
    }

    #[test]
    fn intersect_cases() {
        assert_eq!(vn(2).intersect(&vn(3)), vn(2));
        let c = sentinel_c();
        assert_eq!(c.intersect(&c), c);
        assert_eq!(vn(4).intersect(&c), c);
        assert_eq!(vn(3).intersect(&c), HFSet::from_elements(vec![vn(2)]));
    }

    #[test]
    fn vn_ge_cases() {
        assert_eq!(vn_ge(&vn(3), &vn(1)), Ok(true));
        assert_eq!(vn_ge(&vn(2), &vn(2)), Ok(true));
        assert_eq!(vn_ge(&vn(1), &vn(3)), Ok(false));
        assert!(matches!(
            vn_ge(&sentinel_b(), &vn(1)),
            Err(HfError::NotANumeral(_))
        ));
    }

    #[test]
    fn vn_ge_matches_numeric_order() {
        for i in 0..=12u64 {
            for j in 0..=12u64 {
                assert_eq!(vn_ge(&vn(i), &vn(j)), Ok(i >= j), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn intersect_table_matches_min() {
        for i in 0..=12u64 {
            for j in 0..=12u64 {
                assert_eq!(vn(i).intersect(&vn(j)), vn(i.min(j)), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn numerals_are_transitive_sets() {
        for n in 0..=12u64 {
            let x = vn(n);
            assert!(x.elements().iter().all(|e| e.is_subset_of(&x)), "n={n}");
        }
    }

    #[test]
    fn union_contracts_each_numeral_by_one() {
        for k in 1..=12u64 {
            assert_eq!(vn(k).union_all(), vn(k - 1), "k={k}");
        }
    }

    #[test]
    fn has_greatest_cases() {
        assert_eq!(has_greatest(&[0, 1, 2, 3]), Some(3));
        assert_eq!(has_greatest(&[]), None);
        assert_eq!(has_greatest(&[7]), Some(7));
        assert_eq!(has_greatest(&[4, 9, 1]), Some(9));
        for k in 1..=50u64 {
            let universe: Vec<u64> = (0..k).collect();
            assert_eq!(has_greatest(&universe), Some(k - 1), "k={k}");
        }
    }

    #[test]
    fn regularity_cases() {
        assert!(vn(5).is_regular());
        assert!(sentinel_c().is_regular());
        assert!(vn(9).union_all().is_regular());
    }

    #[test]
    fn sentinels_shape() {
        assert_eq!(sentinel_b(), HFSet::from_elements(vec![vn(2)]));
        assert_eq!(sentinel_c(), HFSet::from_elements(vec![vn(2), vn(3)]));
        assert_eq!(sentinel_b().to_string(), "{{{},{{}}}}");
        assert!(sentinel_b() != sentinel_c());
    }

    fn arb_hfset() -> impl Strategy<Value = HFSet> {
        let leaf = Just(HFSet::empty());
        leaf.prop_recursive(3, 24, 4, |inner| {
            proptest::collection::vec(inner, 0..4).prop_map(HFSet::from_elements)
        })
    }

    proptest! {
        #[test]
        fn constructor_is_canonical(xs in proptest::collection::vec(arb_hfset(), 0..6)) {
            let built = HFSet::from_elements(xs.clone());
            // Sorted, duplicate-free, and insensitive to input order.
            prop_assert!(built.elements().windows(2).all(|w| w[0] < w[1]));
            let mut reversed = xs;
            reversed.reverse();
            prop_assert_eq!(HFSet::from_elements(reversed), built);
        }

        #[test]
        fn order_is_total_and_consistent(a in arb_hfset(), b in arb_hfset()) {
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
            prop_assert_eq!(a.cmp(&b).reverse(), b.cmp(&a));
        }

        #[test]
        fn union_all_matches_brute_force(x in arb_hfset()) {
            let mut collected = Vec::new();
            for e in x.elements() {
                collected.extend_from_slice(e.elements());
            }
            prop_assert_eq!(x.union_all(), HFSet::from_elements(collected));
        }

        #[test]
        fn intersect_matches_brute_force(a in arb_hfset(), b in arb_hfset()) {
            let collected: Vec<HFSet> = a
                .elements()
                .iter()
                .filter(|e| b.contains(e))
                .cloned()
                .collect();
            prop_assert_eq!(a.intersect(&b), HFSet::from_elements(collected));
            prop_assert!(a.intersect(&b).is_subset_of(&a));
        }

        #[test]
        fn every_construction_is_regular(x in arb_hfset()) {
            prop_assert!(x.is_regular());
            prop_assert!(x.succ().is_regular());
        }

        #[test]
        fn round_trip_small_numerals(n in 0u64..=16) {
            prop_assert_eq!(vn_decode(&vn(n)), Some(n));
        }
    }
}
