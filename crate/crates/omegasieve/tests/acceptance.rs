//! The acceptance gate: one test per shipping criterion. Each test prints
//! a PASS line (visible with `--nocapture`), and the harness itself emits
//! one ok/FAILED line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use omegasieve::audit::{replay_witness, Witness};
use omegasieve::hfset::{sentinel_b, sentinel_c, vn_decode, vn_encode, vn_ge};
use omegasieve::{
    cannot_deduct_all_upto, first_end_stage, run_audit, simulate_each, simulate_steps,
    simulation_end, stage_closed_form, AuditReport, CardClass, ClaimId, EndKind, HFSet, NatSet,
    Ordinal, StageSnapshot, Status, StepOutcome, Strategy,
};

fn ord(text: &str) -> Ordinal {
    text.parse().expect("test ordinal parses")
}

/// Criterion 1: the closed form and the literal simulation agree snapshot
/// by snapshot on every stage up to 10 000, inside the time budget.
#[test]
fn criterion_1_closed_form_equals_simulation_through_10000() {
    let start = Instant::now();
    let mut checked = 0u64;
    simulate_each(&Strategy::MinChoice, &NatSet::full(), 10_001, |snap| {
        let expected = stage_closed_form(&snap.alpha);
        assert_eq!(*snap, expected, "stage {}", snap.alpha);
        checked += 1;
    })
    .expect("min strategy never errors");
    assert_eq!(checked, 10_001);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("PASS criterion 1: stages 0..=10000 identical, {elapsed:?}");
}

/// Criterion 2: the three limit-stage facts hold at once: the pool at the
/// first limit is already empty with the second marker placed, the first
/// end stage below w*2 is (w, empty), and deduction was still possible at
/// every stage below w.
#[test]
fn criterion_2_limit_stage_facts_hold_simultaneously() {
    let w = Ordinal::omega();
    let at_limit = stage_closed_form(&w);
    assert!(at_limit.b_set.is_empty());
    assert_eq!(at_limit.outcome, StepOutcome::SentinelC);
    assert_eq!(
        first_end_stage(&ord("w*2")),
        Some((w.clone(), EndKind::Empty))
    );
    assert!(cannot_deduct_all_upto(&w));
    println!("PASS criterion 2: empty pool, (w, empty) first end, and stagewise deductibility");
}

/// Criterion 3: the stage laws, exactly, on every finite stage up to 1000
/// and on the landmark stages past the first limit. Conditional laws go
/// vacuous where their antecedents fail; nothing is ever violated.
#[test]
fn criterion_3_stage_laws_hold_through_the_landmarks() {
    let mut stages: Vec<StageSnapshot> = (0..=1000)
        .map(|n| stage_closed_form(&Ordinal::from_nat(n)))
        .collect();
    for text in ["w", "w+1", "w+50", "w*2"] {
        stages.push(stage_closed_form(&ord(text)));
    }
    let mut vacuous = 0u64;

    // Nesting: A grows, B shrinks, placed markers stay placed. Adjacent
    // pairs suffice because inclusion is transitive.
    for pair in stages.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        assert!(
            lo.a_naturals.is_subset_of(&hi.a_naturals),
            "A at {}",
            lo.alpha
        );
        assert!(hi.b_set.is_subset_of(&lo.b_set), "B at {}", hi.alpha);
        assert!(lo.a_has_b <= hi.a_has_b);
        assert!(lo.a_has_c <= hi.a_has_c);
    }

    // Non-repetition: no value is deducted twice.
    let deducted: Vec<u64> = stages
        .iter()
        .filter_map(|s| match s.outcome {
            StepOutcome::Deducted(n) => Some(n),
            _ => None,
        })
        .collect();
    assert_eq!(
        deducted.iter().collect::<BTreeSet<_>>().len(),
        deducted.len()
    );

    for stage in &stages {
        // Whatever is deducted is the least of the current pool.
        match (stage.outcome, stage.b_set.min()) {
            (StepOutcome::Deducted(n), Ok(least)) => assert_eq!(n, least, "at {}", stage.alpha),
            (StepOutcome::Deducted(_), Err(_)) => panic!("deduction from an empty pool"),
            _ => {}
        }
        // Everything already deducted sits below everything remaining.
        match (&stage.a_naturals, stage.b_set.min()) {
            (NatSet::Finite(a), Ok(least_b)) if !a.is_empty() => {
                assert!(*a.last().unwrap() < least_b, "at {}", stage.alpha);
            }
            (NatSet::CoFinite(_), Ok(_)) => panic!("A covers the universe yet B is nonempty"),
            _ => vacuous += 1,
        }
    }

    // The least remaining element never decreases.
    for pair in stages.windows(2) {
        match (pair[0].b_set.min(), pair[1].b_set.min()) {
            (Ok(lo), Ok(hi)) => assert!(lo <= hi),
            _ => vacuous += 1,
        }
    }

    assert!(
        vacuous > 0,
        "the limit stages must exercise the vacuous branches"
    );
    println!("PASS criterion 3: stage laws hold on 0..=1000 and w, w+1, w+50, w*2 ({vacuous} vacuous instances)");
}

/// Criterion 4: every universe {0..k-1} ends at stage k-1 with the
/// singleton {k-1}, the set-encoding greatest agrees, and one audit run
/// reports the finite and full-universe readings side by side.
#[test]
fn criterion_4_finite_universes_end_with_their_maximum() {
    for k in 1..=200u64 {
        let members: Vec<u64> = (0..k).collect();
        let universe = NatSet::finite(members.clone()).unwrap();
        assert_eq!(
            simulation_end(&Strategy::MinChoice, &universe, k + 1).unwrap(),
            Some((k - 1, EndKind::Singleton)),
            "size {k}"
        );
        let snaps = simulate_steps(&Strategy::MinChoice, &universe, k + 1).unwrap();
        let survivor = snaps.last().unwrap().b_set.min().unwrap();
        assert_eq!(survivor, k - 1, "size {k}");
        assert_eq!(omegasieve::hfset::has_greatest(&members), Some(survivor));
    }

    let report = run_audit(&ord("w*2+100"), 42, 1000).unwrap();
    let verdict = |id: ClaimId| {
        report
            .verdicts
            .iter()
            .find(|v| v.claim == id)
            .expect("claim present")
    };
    let singleton_end = verdict(ClaimId::Lemma13SingletonEnd);
    let greatest = verdict(ClaimId::Thm1GreatestExists);
    assert_eq!(singleton_end.status, Status::NotReproduced);
    assert_eq!(greatest.status, Status::NotReproduced);
    for v in [singleton_end, greatest] {
        let contrast = match &v.witness {
            Some(Witness::NoSingleton {
                finite_contrast, ..
            })
            | Some(Witness::GreatestSearch {
                finite_contrast, ..
            }) => finite_contrast,
            other => panic!("unexpected witness {other:?}"),
        };
        assert!(contrast.all_verified);
        assert!(contrast.survivor_is_max);
        assert!(contrast.greatest_matches_survivor);
        assert!(replay_witness(v));
    }
    println!("PASS criterion 4: all 200 finite universes verified, both readings in one report");
}

/// Exact bit-level model of a set whose members below 4096 are explicit
/// and whose membership at and beyond 4096 is uniform.
#[derive(Clone, PartialEq, Eq)]
struct Bits {
    in_window: Vec<bool>,
    tail: bool,
}

const WINDOW: usize = 4096;

impl Bits {
    fn finite(members: &[u64]) -> Bits {
        let mut in_window = vec![false; WINDOW];
        for &m in members {
            in_window[m as usize] = true;
        }
        Bits {
            in_window,
            tail: false,
        }
    }

    fn cofinite(excluded: &[u64]) -> Bits {
        let mut in_window = vec![true; WINDOW];
        for &e in excluded {
            in_window[e as usize] = false;
        }
        Bits {
            in_window,
            tail: true,
        }
    }

    fn contains(&self, n: u64) -> bool {
        match self.in_window.get(n as usize) {
            Some(&bit) => bit,
            None => self.tail,
        }
    }

    fn zip(&self, other: &Bits, op: impl Fn(bool, bool) -> bool) -> Bits {
        Bits {
            in_window: self
                .in_window
                .iter()
                .zip(&other.in_window)
                .map(|(&a, &b)| op(a, b))
                .collect(),
            tail: op(self.tail, other.tail),
        }
    }

    fn not(&self) -> Bits {
        Bits {
            in_window: self.in_window.iter().map(|&b| !b).collect(),
            tail: !self.tail,
        }
    }

    fn without(&self, removed: &[u64]) -> Bits {
        let mut next = self.clone();
        for &r in removed {
            next.in_window[r as usize] = false;
        }
        next
    }

    fn min(&self) -> Option<u64> {
        self.in_window
            .iter()
            .position(|&b| b)
            .map(|i| i as u64)
            .or(self.tail.then_some(WINDOW as u64))
    }

    fn kth(&self, k: u64) -> Option<u64> {
        if k == 0 {
            return None;
        }
        let mut seen = 0;
        for (i, &bit) in self.in_window.iter().enumerate() {
            if bit {
                seen += 1;
                if seen == k {
                    return Some(i as u64);
                }
            }
        }
        self.tail.then(|| WINDOW as u64 + (k - seen) - 1)
    }

    fn card(&self) -> CardClass {
        if self.tail {
            CardClass::CountablyInfinite
        } else {
            CardClass::Finite(self.in_window.iter().filter(|&&b| b).count() as u64)
        }
    }

    fn subset(&self, other: &Bits) -> bool {
        self.in_window
            .iter()
            .zip(&other.in_window)
            .all(|(&a, &b)| !a || b)
            && (!self.tail || other.tail)
    }
}

fn random_values(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<u64> {
    let len = rng.gen_range(0..=max_len);
    let mut values = BTreeSet::new();
    while values.len() < len {
        values.insert(rng.gen_range(0..WINDOW as u64));
    }
    values.into_iter().collect()
}

fn random_pair(rng: &mut ChaCha8Rng) -> (NatSet, Bits) {
    let values = random_values(rng, 64);
    if rng.gen_bool(0.5) {
        (
            NatSet::finite(values.clone()).unwrap(),
            Bits::finite(&values),
        )
    } else {
        (
            NatSet::cofinite(values.clone()).unwrap(),
            Bits::cofinite(&values),
        )
    }
}

fn agree(rng: &mut ChaCha8Rng, set: &NatSet, bits: &Bits) {
    assert_eq!(set.is_empty(), bits.min().is_none());
    assert_eq!(set.min().ok(), bits.min());
    assert_eq!(set.card(), bits.card());
    for k in [1, 2, 64, 128] {
        assert_eq!(set.kth_smallest(k), bits.kth(k), "k = {k}");
    }
    for _ in 0..8 {
        let probe = rng.gen_range(0..WINDOW as u64);
        assert_eq!(set.contains(probe), bits.contains(probe), "probe {probe}");
    }
}

/// Criterion 5: ten thousand seeded operation sequences agree with the
/// bit-vector model on the whole window, for every exposed operation.
#[test]
fn criterion_5_natset_agrees_with_the_bit_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_e55e);
    for sequence in 0..10_000u32 {
        let (a, a_bits) = random_pair(&mut rng);
        let (b, b_bits) = random_pair(&mut rng);
        let removed = random_values(&mut rng, 8);
        let single = rng.gen_range(0..WINDOW as u64);

        let derived = [
            (a.intersect(&b), a_bits.zip(&b_bits, |x, y| x && y)),
            (a.union(&b), a_bits.zip(&b_bits, |x, y| x || y)),
            (a.complement(), a_bits.not()),
            (a.remove(single), a_bits.without(&[single])),
            (a.diff_finite(&removed), a_bits.without(&removed)),
        ];
        for (set, bits) in &derived {
            agree(&mut rng, set, bits);
        }
        agree(&mut rng, &a, &a_bits);
        agree(&mut rng, &b, &b_bits);
        assert_eq!(a.is_subset_of(&b), a_bits.subset(&b_bits), "seq {sequence}");
        assert_eq!(b.is_subset_of(&a), b_bits.subset(&a_bits), "seq {sequence}");
        assert_eq!(a == b, a_bits == b_bits, "seq {sequence}");
    }
    println!("PASS criterion 5: 10000 sequences, zero mismatches on [0, 4096)");
}

fn random_ordinal(rng: &mut ChaCha8Rng, depth: u32) -> Ordinal {
    let mut value = Ordinal::from_nat(rng.gen_range(0..6));
    for _ in 0..rng.gen_range(0..3) {
        let exponent = if depth == 0 {
            Ordinal::from_nat(rng.gen_range(1..4))
        } else {
            random_ordinal(rng, depth - 1)
        };
        let term = Ordinal::omega_power(&exponent).mul(&Ordinal::from_nat(rng.gen_range(1..5)));
        value = value.add(&term);
    }
    value
}

/// Criterion 6: the ordinal laws on ten thousand seeded triples, plus the
/// fixed witnesses separating this arithmetic from the commutative kind.
#[test]
fn criterion_6_ordinal_laws_on_seeded_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e51_104d);
    for _ in 0..10_000 {
        let a = random_ordinal(&mut rng, 2);
        let b = random_ordinal(&mut rng, 2);
        let c = random_ordinal(&mut rng, 2);
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        let relations = [a < b, a == b, a > b];
        assert_eq!(relations.iter().filter(|&&r| r).count(), 1);
        assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    let w = Ordinal::omega();
    let one = Ordinal::one();
    let two = Ordinal::from_nat(2);
    assert_eq!(one.add(&w), w);
    assert_ne!(w.add(&one), w);
    assert_eq!(two.mul(&w), w);
    assert_ne!(w.mul(&two), w);
    assert_eq!(w.add(&one).mul(&two), ord("w*2+1"));
    assert_ne!(w.add(&one).mul(&two), ord("w*2+2"));
    println!("PASS criterion 6: 10000 triples and all fixed witnesses");
}

/// Criterion 7: the numeral tables. Intersection is min and inclusion is
/// order for all pairs up to 12, union contracts one successor, every
/// constructed set is well-founded, and the end markers are not numerals.
#[test]
fn criterion_7_numeral_tables_up_to_12() {
    let mut chain: Vec<HFSet> = vec![HFSet::empty()];
    for i in 0..16 {
        chain.push(chain[i].succ());
    }
    for i in 0..=12usize {
        assert_eq!(vn_encode(i as u64).unwrap(), chain[i]);
        for j in 0..=12usize {
            let meet = chain[i].intersect(&chain[j]);
            assert_eq!(meet, chain[i.min(j)], "({i}, {j})");
            assert!(meet.is_regular());
            assert_eq!(vn_ge(&chain[i], &chain[j]).unwrap(), i >= j, "({i}, {j})");
        }
    }
    for k in 1..=12usize {
        let union = chain[k].union_all();
        assert_eq!(union, chain[k - 1], "union of vn({k})");
        assert!(union.is_regular());
    }
    let b = sentinel_b();
    let c = sentinel_c();
    for set in chain.iter().take(13).chain([&b, &c]) {
        assert!(set.is_regular());
    }
    assert_eq!(vn_decode(&b), None);
    assert_eq!(vn_decode(&c), None);
    println!("PASS criterion 7: tables, contraction, regularity, and non-numeral markers");
}

/// Criterion 8: the audit binary is deterministic byte for byte and its
/// verdicts match the shipped profile, exiting 0.
#[test]
fn criterion_8_audit_binary_is_deterministic_and_on_profile() {
    let run = || {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_omegasieve"))
            .args([
                "audit",
                "--seed",
                "42",
                "--horizon",
                "w*2+100",
                "--format",
                "json",
            ])
            .output()
            .expect("binary runs");
        (out.status.code(), out.stdout)
    };
    let (first_code, first_bytes) = run();
    let (second_code, second_bytes) = run();
    assert_eq!(first_code, Some(0));
    assert_eq!(second_code, Some(0));
    assert_eq!(first_bytes, second_bytes, "reports must be byte-identical");

    let report: AuditReport = serde_json::from_slice(&first_bytes).unwrap();
    let expect = |id: ClaimId, status: Status| {
        let verdict = report.verdicts.iter().find(|v| v.claim == id).unwrap();
        assert_eq!(verdict.status, status, "{id}");
    };
    for id in [
        ClaimId::Eq4MinIsIntersection,
        ClaimId::Eq5ChoiceIsMin,
        ClaimId::Eq6ClosedForm,
        ClaimId::Eq7DeductedIsMin,
        ClaimId::Eq8PastBelowFuture,
        ClaimId::Eq9MonotoneMin,
        ClaimId::Lemma11Nesting,
        ClaimId::Lemma12NonRepetition,
        ClaimId::Def4CannotByStep,
        ClaimId::Def5CannotAll,
        ClaimId::Eq10UnionN,
        ClaimId::Regularity,
    ] {
        expect(id, Status::Verified);
    }
    for id in [
        ClaimId::Lemma13SingletonEnd,
        ClaimId::Thm1GreatestExists,
        ClaimId::Thm2SelfMember,
        ClaimId::Eq3GreatestSet,
    ] {
        expect(id, Status::NotReproduced);
    }
    // The unbounded-existence claim is reported as bounded: no witness at
    // or below the horizon, best candidate exceeded inside the window.
    let eq3 = report
        .verdicts
        .iter()
        .find(|v| v.claim == ClaimId::Eq3GreatestSet)
        .unwrap();
    assert!(eq3.checked_range.contains("1000"), "{}", eq3.checked_range);
    match &eq3.witness {
        Some(Witness::Exceeded {
            candidate,
            exceeded_by,
        }) => {
            assert_eq!(candidate + 1, *exceeded_by);
        }
        other => panic!("unexpected witness {other:?}"),
    }
    println!("PASS criterion 8: byte-identical audit, profile matched, exit 0");
}
