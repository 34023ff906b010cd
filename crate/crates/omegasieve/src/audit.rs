//! The claim registry and its audit.
//!
//! Each claim about the elimination process gets exactly one verdict per
//! run: `Verified` when every sampled instance holds with at least one
//! non-vacuous instance, `Vacuous` when only vacuous instances were seen,
//! and `NotReproduced` when the executed semantics reaches a different
//! outcome than the claim asserts. `NotReproduced` is deliberately not
//! "refuted": the audit checks one precisely stated semantics (least
//! choice, union at limit stages) and reports what that semantics does.
//!
//! Reports are deterministic functions of (horizon, seed, window): every
//! check draws from its own seeded stream, and verdicts are assembled in
//! registry order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{
    cannot_deduct_all_upto, cannot_deduct_by, first_end_stage, simulate_steps, simulation_end,
    stage_closed_form, EndKind, StepOutcome, Strategy,
};
use crate::hfset::{has_greatest, sentinel_b, sentinel_c, vn_decode, vn_ge, HFSet};
use crate::natset::{CardClass, NatSet};
use crate::ordinal::Ordinal;

/// Every audited claim, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "Eq3_GreatestSet")]
    Eq3GreatestSet,
    #[serde(rename = "Eq4_MinIsIntersection")]
    Eq4MinIsIntersection,
    #[serde(rename = "Eq5_ChoiceIsMin")]
    Eq5ChoiceIsMin,
    #[serde(rename = "Eq6_ClosedForm")]
    Eq6ClosedForm,
    #[serde(rename = "Eq7_DeductedIsMin")]
    Eq7DeductedIsMin,
    #[serde(rename = "Eq8_PastBelowFuture")]
    Eq8PastBelowFuture,
    #[serde(rename = "Eq9_MonotoneMin")]
    Eq9MonotoneMin,
    #[serde(rename = "Lemma1_1_Nesting")]
    Lemma11Nesting,
    #[serde(rename = "Lemma1_2_NonRepetition")]
    Lemma12NonRepetition,
    #[serde(rename = "Lemma1_3_SingletonEnd")]
    Lemma13SingletonEnd,
    #[serde(rename = "Def4_CannotByStep")]
    Def4CannotByStep,
    #[serde(rename = "Def5_CannotAll")]
    Def5CannotAll,
    #[serde(rename = "Thm1_GreatestExists")]
    Thm1GreatestExists,
    #[serde(rename = "Eq10_UnionN")]
    Eq10UnionN,
    #[serde(rename = "Thm2_SelfMember")]
    Thm2SelfMember,
    #[serde(rename = "Regularity")]
    Regularity,
}

impl ClaimId {
    pub const ALL: [ClaimId; 16] = [
        ClaimId::Eq3GreatestSet,
        ClaimId::Eq4MinIsIntersection,
        ClaimId::Eq5ChoiceIsMin,
        ClaimId::Eq6ClosedForm,
        ClaimId::Eq7DeductedIsMin,
        ClaimId::Eq8PastBelowFuture,
        ClaimId::Eq9MonotoneMin,
        ClaimId::Lemma11Nesting,
        ClaimId::Lemma12NonRepetition,
        ClaimId::Lemma13SingletonEnd,
        ClaimId::Def4CannotByStep,
        ClaimId::Def5CannotAll,
        ClaimId::Thm1GreatestExists,
        ClaimId::Eq10UnionN,
        ClaimId::Thm2SelfMember,
        ClaimId::Regularity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Eq3GreatestSet => "Eq3_GreatestSet",
            ClaimId::Eq4MinIsIntersection => "Eq4_MinIsIntersection",
            ClaimId::Eq5ChoiceIsMin => "Eq5_ChoiceIsMin",
            ClaimId::Eq6ClosedForm => "Eq6_ClosedForm",
            ClaimId::Eq7DeductedIsMin => "Eq7_DeductedIsMin",
            ClaimId::Eq8PastBelowFuture => "Eq8_PastBelowFuture",
            ClaimId::Eq9MonotoneMin => "Eq9_MonotoneMin",
            ClaimId::Lemma11Nesting => "Lemma1_1_Nesting",
            ClaimId::Lemma12NonRepetition => "Lemma1_2_NonRepetition",
            ClaimId::Lemma13SingletonEnd => "Lemma1_3_SingletonEnd",
            ClaimId::Def4CannotByStep => "Def4_CannotByStep",
            ClaimId::Def5CannotAll => "Def5_CannotAll",
            ClaimId::Thm1GreatestExists => "Thm1_GreatestExists",
            ClaimId::Eq10UnionN => "Eq10_UnionN",
            ClaimId::Thm2SelfMember => "Thm2_SelfMember",
            ClaimId::Regularity => "Regularity",
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Verified,
    NotReproduced,
    Vacuous,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Verified => "Verified",
            Status::NotReproduced => "NotReproduced",
            Status::Vacuous => "Vacuous",
        })
    }
}

/// An end stage of a run, replayable through the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndStageRecord {
    pub stage: Ordinal,
    pub end: EndKind,
    /// The sole member of `B` at a singleton end.
    pub survivor: Option<u64>,
}

/// One finite-universe run: `{0..size-1}` ends at `end_stage` with
/// `survivor` left in `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteEndRow {
    pub size: u64,
    pub end_stage: u64,
    pub survivor: u64,
}

/// Aggregate over all finite universes `{0..k-1}` for `k` in `sizes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteContrast {
    pub sizes: String,
    pub all_verified: bool,
    pub survivor_is_max: bool,
    pub greatest_matches_survivor: bool,
    pub sample: Vec<FiniteEndRow>,
}

/// One row of the finite union-contraction table: `⋃vn(k) = vn(k-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionRow {
    pub k: u64,
    pub union_decodes_to: u64,
}

/// Evidence attached to a verdict. Every variant re-validates against the
/// module that produced it; see [`replay_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An end stage reached by a run.
    EndStage(EndStageRecord),
    /// Every candidate below the window is exceeded by its successor.
    Exceeded { candidate: u64, exceeded_by: u64 },
    /// No singleton stage up to the horizon; the first end empties `B`.
    NoSingleton {
        first_end: EndStageRecord,
        note: String,
        finite_contrast: FiniteContrast,
    },
    /// The greatest-element search: no survivor on the full universe,
    /// every finite universe yields one.
    GreatestSearch {
        first_end: EndStageRecord,
        candidates_refuted_below: u64,
        finite_contrast: FiniteContrast,
    },
    /// A finite universe's verified greatest: the end-stage survivor and
    /// the order-theoretic greatest name the same element.
    FiniteGreatest {
        universe: String,
        end_stage: u64,
        survivor: u64,
        greatest: u64,
    },
    /// Self-membership needs the singleton survivor; none materializes,
    /// and every constructed set passes the regularity check instead.
    SelfMembership {
        first_end: EndStageRecord,
        regularity_checked: u64,
        all_regular: bool,
    },
    /// Pointwise union coverage below the window, with the finite
    /// contraction table that fails to cover anything.
    UnionCoverage {
        window: u64,
        contrast: Vec<UnionRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: ClaimId,
    pub status: Status,
    pub checked_range: String,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub horizon: Ordinal,
    pub seed: u64,
    pub window: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: u64,
    pub not_reproduced: u64,
    pub vacuous: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub config: AuditConfig,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("audit horizon {horizon} is below w+1, so the decisive stages would go unexamined")]
    HorizonTooLow { horizon: Ordinal },
    #[error("audit window must be at least 1")]
    WindowZero,
}

/// Size range of the finite-universe contrast embedded in the report.
const CONTRAST_SIZES: std::ops::RangeInclusive<u64> = 1..=200;

/// Exhaustive-table bound for numeral checks.
const TABLE_MAX: u64 = 12;

/// Finite stages checked exhaustively.
const DENSE_STAGE_MAX: u64 = 1000;

/// Upper bound (exclusive) for seeded random finite stages.
const SPARSE_STAGE_BOUND: u64 = 16384;

/// Runs every check and assembles the report in registry order.
pub fn run_audit(horizon: &Ordinal, seed: u64, window: u64) -> Result<AuditReport, AuditError> {
    let first_decisive = Ordinal::omega().succ();
    if *horizon < first_decisive {
        return Err(AuditError::HorizonTooLow {
            horizon: horizon.clone(),
        });
    }
    if window == 0 {
        return Err(AuditError::WindowZero);
    }

    let grid = StageGrid::build(horizon, seed);
    let contrast = finite_contrast();
    let verdicts: Vec<Verdict> = ClaimId::ALL
        .iter()
        .map(|&claim| {
            // Independent stream per claim keeps checks order-free.
            let rng = ChaCha8Rng::seed_from_u64(seed ^ (claim as u64));
            run_check(claim, &grid, window, rng, &contrast)
        })
        .collect();

    let summary = Summary {
        verified: count(&verdicts, Status::Verified),
        not_reproduced: count(&verdicts, Status::NotReproduced),
        vacuous: count(&verdicts, Status::Vacuous),
    };
    Ok(AuditReport {
        config: AuditConfig {
            horizon: horizon.clone(),
            seed,
            window,
        },
        verdicts,
        summary,
    })
}

fn count(verdicts: &[Verdict], status: Status) -> u64 {
    verdicts.iter().filter(|v| v.status == status).count() as u64
}

fn run_check(
    claim: ClaimId,
    grid: &StageGrid,
    window: u64,
    rng: ChaCha8Rng,
    contrast: &FiniteContrast,
) -> Verdict {
    match claim {
        ClaimId::Eq3GreatestSet => check_eq3(window),
        ClaimId::Eq4MinIsIntersection => check_eq4(),
        ClaimId::Eq5ChoiceIsMin => check_eq5(rng),
        ClaimId::Eq6ClosedForm => check_eq6(grid),
        ClaimId::Eq7DeductedIsMin => check_eq7(grid),
        ClaimId::Eq8PastBelowFuture => check_eq8(grid),
        ClaimId::Eq9MonotoneMin => check_eq9(grid, rng),
        ClaimId::Lemma11Nesting => check_lemma1_1(grid, rng),
        ClaimId::Lemma12NonRepetition => check_lemma1_2(grid, rng),
        ClaimId::Lemma13SingletonEnd => check_lemma1_3_inner(grid, contrast),
        ClaimId::Def4CannotByStep => check_def4(grid),
        ClaimId::Def5CannotAll => check_def5(grid),
        ClaimId::Thm1GreatestExists => check_thm1_inner(grid, window, contrast),
        ClaimId::Eq10UnionN => check_eq10(window),
        ClaimId::Thm2SelfMember => check_thm2_inner(grid, rng),
        ClaimId::Regularity => check_regularity(rng),
    }
}

/// The stage sample: all dense finite stages, a seeded sparse band, and
/// the closed-form landmarks at and past the limit, capped by the horizon.
struct StageGrid {
    finite: Vec<u64>,
    infinite: Vec<Ordinal>,
    horizon: Ordinal,
}

impl StageGrid {
    fn build(horizon: &Ordinal, seed: u64) -> StageGrid {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5741_47e5);
        let mut finite: Vec<u64> = (0..=DENSE_STAGE_MAX).collect();
        for _ in 0..24 {
            finite.push(rng.gen_range(DENSE_STAGE_MAX + 1..SPARSE_STAGE_BOUND));
        }
        finite.sort_unstable();
        finite.dedup();

        let omega = Ordinal::omega();
        let landmarks = [
            omega.clone(),
            omega.succ(),
            omega.add(&Ordinal::from_nat(50)),
            omega.mul(&Ordinal::from_nat(2)),
        ];
        let infinite = landmarks.into_iter().filter(|a| a <= horizon).collect();
        StageGrid {
            finite,
            infinite,
            horizon: horizon.clone(),
        }
    }

    fn describe(&self) -> String {
        format!(
            "stages 0..={} dense, {} seeded stages below {}, landmarks {}",
            DENSE_STAGE_MAX,
            self.finite.len() - (DENSE_STAGE_MAX as usize + 1),
            SPARSE_STAGE_BOUND,
            self.infinite
                .iter()
                .map(Ordinal::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Builds `vn(0), vn(1), …, vn(n)` as one shared chain, so comparisons
/// between entries stay cheap.
fn numeral_chain(n: u64) -> Vec<HFSet> {
    let mut chain = Vec::with_capacity(n as usize + 1);
    chain.push(HFSet::empty());
    for i in 0..n as usize {
        chain.push(chain[i].succ());
    }
    chain
}

/// No greatest natural: every candidate below the window is exceeded by
/// its successor, under the set reading of the order.
fn check_eq3(window: u64) -> Verdict {
    let mut prev = HFSet::empty();
    let mut all_refuted = true;
    for _ in 0..window {
        let next = prev.succ();
        // candidate >= successor would need successor ∈ candidate or equality.
        all_refuted &= !(prev.contains(&next) || prev == next);
        prev = next;
    }
    Verdict {
        claim: ClaimId::Eq3GreatestSet,
        status: if all_refuted {
            Status::NotReproduced
        } else {
            Status::Verified
        },
        checked_range: format!(
            "candidates x < {window}: each refuted by x+1; no witness at or below the horizon"
        ),
        witness: Some(Witness::Exceeded {
            candidate: window - 1,
            exceeded_by: window,
        }),
    }
}

/// Min of two numerals is their intersection, exhaustively on the table.
fn check_eq4() -> Verdict {
    let chain = numeral_chain(TABLE_MAX);
    let ok = (0..=TABLE_MAX).all(|i| {
        (0..=TABLE_MAX).all(|j| {
            let meet = chain[i as usize].intersect(&chain[j as usize]);
            meet == chain[i.min(j) as usize]
                && vn_ge(&chain[i as usize], &chain[j as usize]) == Ok(i >= j)
        })
    });
    Verdict {
        claim: ClaimId::Eq4MinIsIntersection,
        status: if ok {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!(
            "numeral pairs (i, j), i,j <= {TABLE_MAX}, exhaustive; order relation cross-checked"
        ),
        witness: None,
    }
}

/// The choice function as intersection: over a finite family of numerals
/// the intersection decodes to the least member.
fn check_eq5(mut rng: ChaCha8Rng) -> Verdict {
    let chain = numeral_chain(TABLE_MAX);
    let mut ok = true;
    for _ in 0..200 {
        let size = rng.gen_range(1..=6);
        let mut members: Vec<u64> = (0..size).map(|_| rng.gen_range(0..=TABLE_MAX)).collect();
        members.sort_unstable();
        members.dedup();
        let meet = members
            .iter()
            .skip(1)
            .fold(chain[members[0] as usize].clone(), |acc, &m| {
                acc.intersect(&chain[m as usize])
            });
        let least = NatSet::finite(members.clone())
            .expect("deduped")
            .min()
            .expect("non-empty");
        ok &= vn_decode(&meet) == Some(least) && least == members[0];
    }
    // The full universe's least element is 0 in the exact representation.
    ok &= NatSet::full().min() == Ok(0);
    Verdict {
        claim: ClaimId::Eq5ChoiceIsMin,
        status: if ok {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!(
            "200 seeded families of numerals <= {TABLE_MAX}; least of the full universe"
        ),
        witness: None,
    }
}

/// Closed form agrees with the recursion: literal simulation prefix, and
/// the deduction clause reduces to the least element at every grid stage.
fn check_eq6(grid: &StageGrid) -> Verdict {
    let prefix = 301;
    let snaps = simulate_steps(&Strategy::MinChoice, &NatSet::full(), prefix + 1)
        .expect("min choice cannot fail");
    let mut ok = snaps
        .iter()
        .enumerate()
        .all(|(n, snap)| *snap == stage_closed_form(&Ordinal::from_nat(n as u64)));
    let mut non_vacuous = false;
    for &n in &grid.finite {
        let snap = stage_closed_form(&Ordinal::from_nat(n));
        ok &= snap.outcome == StepOutcome::Deducted(snap.b_set.min().expect("co-finite"));
        non_vacuous = true;
    }
    for alpha in &grid.infinite {
        // Past the limit the deduction clause no longer applies; the stage
        // must report the empty-end branch instead.
        ok &= stage_closed_form(alpha).outcome == StepOutcome::SentinelC;
    }
    Verdict {
        claim: ClaimId::Eq6ClosedForm,
        status: status_of(ok, non_vacuous),
        checked_range: format!(
            "simulation prefix 0..={prefix} snapshot-equal; {}",
            grid.describe()
        ),
        witness: None,
    }
}

/// Every deducted value is the least of its stage's `B`.
fn check_eq7(grid: &StageGrid) -> Verdict {
    let mut ok = true;
    let mut non_vacuous = false;
    for &n in &grid.finite {
        let snap = stage_closed_form(&Ordinal::from_nat(n));
        if let StepOutcome::Deducted(v) = snap.outcome {
            ok &= Ok(v) == snap.b_set.min();
            non_vacuous = true;
        }
    }
    for alpha in &grid.infinite {
        if let StepOutcome::Deducted(v) = stage_closed_form(alpha).outcome {
            ok &= Ok(v) == stage_closed_form(alpha).b_set.min();
            non_vacuous = true;
        }
    }
    Verdict {
        claim: ClaimId::Eq7DeductedIsMin,
        status: status_of(ok, non_vacuous),
        checked_range: grid.describe(),
        witness: None,
    }
}

/// Everything already deducted sits below everything still left.
fn check_eq8(grid: &StageGrid) -> Verdict {
    let mut ok = true;
    let mut non_vacuous = false;
    for &n in &grid.finite {
        let snap = stage_closed_form(&Ordinal::from_nat(n));
        if snap.b_set.is_empty() {
            continue;
        }
        let frontier = snap.b_set.min().expect("non-empty");
        if let NatSet::Finite(members) = &snap.a_naturals {
            ok &= members.iter().all(|&m| m <= frontier);
            non_vacuous = true;
        }
    }
    // Stages at and past the limit have empty B: vacuous instances only.
    Verdict {
        claim: ClaimId::Eq8PastBelowFuture,
        status: status_of(ok, non_vacuous),
        checked_range: format!("{}; limit stages vacuous (empty B)", grid.describe()),
        witness: None,
    }
}

/// The running least of `B` is monotone along stages.
fn check_eq9(grid: &StageGrid, mut rng: ChaCha8Rng) -> Verdict {
    let mut ok = true;
    let mut non_vacuous = false;
    let mut check_pair = |beta: u64, alpha: u64| {
        let (lo, hi) = (beta.min(alpha), beta.max(alpha));
        let b_lo = stage_closed_form(&Ordinal::from_nat(lo)).b_set;
        let b_hi = stage_closed_form(&Ordinal::from_nat(hi)).b_set;
        if !b_lo.is_empty() && !b_hi.is_empty() {
            ok &= b_lo.min().expect("non-empty") <= b_hi.min().expect("non-empty");
            non_vacuous = true;
        }
    };
    for pair in grid.finite.windows(2) {
        check_pair(pair[0], pair[1]);
    }
    for _ in 0..64 {
        let beta = rng.gen_range(0..SPARSE_STAGE_BOUND);
        let alpha = rng.gen_range(0..SPARSE_STAGE_BOUND);
        check_pair(beta, alpha);
    }
    Verdict {
        claim: ClaimId::Eq9MonotoneMin,
        status: status_of(ok, non_vacuous),
        checked_range: format!(
            "adjacent grid pairs plus 64 seeded pairs below {SPARSE_STAGE_BOUND}; \
             pairs with empty B vacuous"
        ),
        witness: None,
    }
}

/// Later stages extend `A` and shrink `B`, sentinel flags included.
fn check_lemma1_1(grid: &StageGrid, mut rng: ChaCha8Rng) -> Verdict {
    let mut ok = true;
    let mut non_vacuous = false;
    let mut check_pair = |beta: &Ordinal, alpha: &Ordinal| {
        let (lo, hi) = if beta <= alpha {
            (beta, alpha)
        } else {
            (alpha, beta)
        };
        let s_lo = stage_closed_form(lo);
        let s_hi = stage_closed_form(hi);
        ok &= s_lo.a_naturals.is_subset_of(&s_hi.a_naturals);
        ok &= s_hi.b_set.is_subset_of(&s_lo.b_set);
        ok &= !s_lo.a_has_b || s_hi.a_has_b;
        ok &= !s_lo.a_has_c || s_hi.a_has_c;
        non_vacuous = true;
    };
    for pair in grid.finite.windows(2) {
        check_pair(&Ordinal::from_nat(pair[0]), &Ordinal::from_nat(pair[1]));
    }
    for _ in 0..48 {
        let beta = Ordinal::from_nat(rng.gen_range(0..SPARSE_STAGE_BOUND));
        let alpha = Ordinal::from_nat(rng.gen_range(0..SPARSE_STAGE_BOUND));
        check_pair(&beta, &alpha);
    }
    // Finite stages against each landmark, and landmarks pairwise.
    for (i, alpha) in grid.infinite.iter().enumerate() {
        for _ in 0..8 {
            let beta = Ordinal::from_nat(rng.gen_range(0..SPARSE_STAGE_BOUND));
            check_pair(&beta, alpha);
        }
        for later in &grid.infinite[i + 1..] {
            check_pair(alpha, later);
        }
    }
    Verdict {
        claim: ClaimId::Lemma11Nesting,
        status: status_of(ok, non_vacuous),
        checked_range: format!("{}; cross finite/limit pairs included", grid.describe()),
        witness: None,
    }
}

/// Distinct stages with more than one element left never repeat a `B`.
fn check_lemma1_2(grid: &StageGrid, mut rng: ChaCha8Rng) -> Verdict {
    let mut ok = true;
    let mut non_vacuous = false;
    let mut check_pair = |beta: u64, alpha: u64| {
        if beta == alpha {
            return;
        }
        let b_beta = stage_closed_form(&Ordinal::from_nat(beta)).b_set;
        let b_alpha = stage_closed_form(&Ordinal::from_nat(alpha)).b_set;
        let big = |s: &NatSet| match s.card() {
            CardClass::Finite(n) => n > 1,
            CardClass::CountablyInfinite => true,
        };
        if big(&b_beta) && big(&b_alpha) {
            ok &= b_beta != b_alpha;
            non_vacuous = true;
        }
    };
    for pair in grid.finite.windows(2) {
        check_pair(pair[0], pair[1]);
    }
    for _ in 0..64 {
        check_pair(
            rng.gen_range(0..SPARSE_STAGE_BOUND),
            rng.gen_range(0..SPARSE_STAGE_BOUND),
        );
    }
    Verdict {
        claim: ClaimId::Lemma12NonRepetition,
        status: status_of(ok, non_vacuous),
        checked_range: format!(
            "adjacent grid pairs plus 64 seeded distinct pairs; stages with Card(B) <= 1 vacuous"
        ),
        witness: None,
    }
}

/// The singleton end on the full universe: never reached; the first end
/// stage empties `B` instead. Every finite universe does reach it.
fn check_lemma1_3_inner(grid: &StageGrid, contrast: &FiniteContrast) -> Verdict {
    let first = first_end_stage(&grid.horizon).expect("horizon is at least w+1");
    let singleton_found = first.1 == EndKind::Singleton
        || grid.finite.iter().any(|&n| {
            stage_closed_form(&Ordinal::from_nat(n)).b_set.card() == CardClass::Finite(1)
        });
    let status = if singleton_found {
        Status::Verified
    } else {
        Status::NotReproduced
    };
    Verdict {
        claim: ClaimId::Lemma13SingletonEnd,
        status,
        checked_range: format!(
            "all stages at or below the horizon {} via closed form; finite contrast {}",
            grid.horizon, contrast.sizes
        ),
        witness: Some(Witness::NoSingleton {
            first_end: end_record(&first.0, first.1),
            note: "every stage below the limit leaves B non-empty, yet B at the limit \
                   is already empty; the one-element stage the claim needs never occurs"
                .to_string(),
            finite_contrast: contrast.clone(),
        }),
    }
}

/// Public form of the singleton-end check on the full universe.
pub fn check_lemma1_3(horizon: &Ordinal) -> Result<Verdict, AuditError> {
    let first_decisive = Ordinal::omega().succ();
    if *horizon < first_decisive {
        return Err(AuditError::HorizonTooLow {
            horizon: horizon.clone(),
        });
    }
    let grid = StageGrid::build(horizon, 0);
    Ok(check_lemma1_3_inner(&grid, &finite_contrast()))
}

/// The singleton-end check on a finite universe, by literal simulation.
pub fn check_lemma1_3_finite(members: &[u64]) -> Verdict {
    let universe = NatSet::finite(members.to_vec()).expect("duplicate-free finite universe");
    let steps = members.len() as u64 + 1;
    let end = simulation_end(&Strategy::MinChoice, &universe, steps)
        .expect("min choice cannot fail")
        .expect("every finite universe ends within |universe|+1 steps");
    let survivor = survivor_of(&universe, end.0);
    Verdict {
        claim: ClaimId::Lemma13SingletonEnd,
        status: if end.1 == EndKind::Singleton {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!("universe {universe}, simulated to its end"),
        witness: Some(Witness::EndStage(EndStageRecord {
            stage: Ordinal::from_nat(end.0),
            end: end.1,
            survivor,
        })),
    }
}

fn survivor_of(universe: &NatSet, end_stage: u64) -> Option<u64> {
    let snaps = simulate_steps(&Strategy::MinChoice, universe, end_stage + 1)
        .expect("min choice cannot fail");
    let last = snaps.last().expect("at least the end snapshot");
    match last.b_set.card() {
        CardClass::Finite(1) => Some(last.b_set.min().expect("singleton")),
        _ => None,
    }
}

/// Deduction is possible exactly at the finite stages.
fn check_def4(grid: &StageGrid) -> Verdict {
    let mut ok = true;
    for &n in &grid.finite {
        let alpha = Ordinal::from_nat(n);
        let literal = stage_closed_form(&alpha.succ()).b_set.card() != CardClass::Finite(0);
        ok &= cannot_deduct_by(&alpha) == literal && literal;
    }
    for alpha in &grid.infinite {
        let literal = stage_closed_form(&alpha.succ()).b_set.card() != CardClass::Finite(0);
        ok &= cannot_deduct_by(alpha) == literal && !literal;
    }
    Verdict {
        claim: ClaimId::Def4CannotByStep,
        status: if ok {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!("{}; both polarities exercised", grid.describe()),
        witness: None,
    }
}

/// The every-stage-below form, checked stagewise where feasible.
fn check_def5(grid: &StageGrid) -> Verdict {
    let mut ok = true;
    for beta in 0..=200u64 {
        let stagewise = (0..beta).all(|a| {
            stage_closed_form(&Ordinal::from_nat(a + 1)).b_set.card() != CardClass::Finite(0)
        });
        ok &= cannot_deduct_all_upto(&Ordinal::from_nat(beta)) == stagewise;
    }
    // At the limit the prefix condition still holds...
    ok &= cannot_deduct_all_upto(&Ordinal::omega());
    // ...even though B at the limit itself is already empty,
    ok &= stage_closed_form(&Ordinal::omega()).b_set.is_empty();
    // and one stage later the instance at the limit breaks the prefix.
    for alpha in &grid.infinite {
        let expected = *alpha <= Ordinal::omega();
        ok &= cannot_deduct_all_upto(alpha) == expected;
        if *alpha > Ordinal::omega() {
            ok &= stage_closed_form(&Ordinal::omega().succ()).b_set.is_empty();
        }
    }
    Verdict {
        claim: ClaimId::Def5CannotAll,
        status: if ok {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!(
            "stagewise for beta <= 200; landmarks {}; holds at the limit while B there \
             is already empty",
            grid.infinite
                .iter()
                .map(Ordinal::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ),
        witness: None,
    }
}

/// The greatest-element claim on the full universe, with the finite
/// contrast where it does hold.
fn check_thm1_inner(grid: &StageGrid, window: u64, contrast: &FiniteContrast) -> Verdict {
    let first = first_end_stage(&grid.horizon).expect("horizon is at least w+1");
    // Two independent paths must both fail: no singleton survivor, and no
    // order-theoretic greatest below the window.
    let survivor_path = first.1 == EndKind::Singleton;
    let chain = numeral_chain(window);
    let predicate_path = (0..window).any(|x| !chain[x as usize + 1].contains(&chain[x as usize]));
    let status = if survivor_path || predicate_path {
        Status::Verified
    } else {
        Status::NotReproduced
    };
    Verdict {
        claim: ClaimId::Thm1GreatestExists,
        status,
        checked_range: format!(
            "end stages at or below the horizon {}; greatest-candidates below {}; \
             finite contrast {}",
            grid.horizon, window, contrast.sizes
        ),
        witness: Some(Witness::GreatestSearch {
            first_end: end_record(&first.0, first.1),
            candidates_refuted_below: window,
            finite_contrast: contrast.clone(),
        }),
    }
}

/// Public form of the greatest-element check on the full universe.
pub fn check_thm1(horizon: &Ordinal) -> Result<Verdict, AuditError> {
    let first_decisive = Ordinal::omega().succ();
    if *horizon < first_decisive {
        return Err(AuditError::HorizonTooLow {
            horizon: horizon.clone(),
        });
    }
    let grid = StageGrid::build(horizon, 0);
    Ok(check_thm1_inner(&grid, 1000, &finite_contrast()))
}

/// The greatest-element check on a finite universe: the simulation
/// survivor and the order predicate must name the same element.
pub fn check_thm1_finite(members: &[u64]) -> Verdict {
    let universe = NatSet::finite(members.to_vec()).expect("duplicate-free finite universe");
    let steps = members.len() as u64 + 1;
    let end = simulation_end(&Strategy::MinChoice, &universe, steps)
        .expect("min choice cannot fail")
        .expect("every finite universe ends within |universe|+1 steps");
    let survivor = survivor_of(&universe, end.0);
    let greatest = has_greatest(members);
    let verified = survivor.is_some() && survivor == greatest;
    Verdict {
        claim: ClaimId::Thm1GreatestExists,
        status: if verified {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!("universe {universe}: simulation end and order predicate"),
        witness: match (survivor, greatest) {
            (Some(s), Some(g)) => Some(Witness::FiniteGreatest {
                universe: universe.to_string(),
                end_stage: end.0,
                survivor: s,
                greatest: g,
            }),
            _ => Some(Witness::EndStage(end_record(
                &Ordinal::from_nat(end.0),
                end.1,
            ))),
        },
    }
}

/// Self-membership of the universe: needs the survivor that never
/// materializes, while regularity holds on everything constructed.
fn check_thm2_inner(grid: &StageGrid, rng: ChaCha8Rng) -> Verdict {
    let first = first_end_stage(&grid.horizon).expect("horizon is at least w+1");
    let (checked, all_regular) = regularity_sweep(rng);
    let status = if first.1 == EndKind::Singleton {
        Status::Verified
    } else {
        Status::NotReproduced
    };
    Verdict {
        claim: ClaimId::Thm2SelfMember,
        status,
        checked_range: format!(
            "end stages at or below the horizon {}; regularity sweep over {} sets",
            grid.horizon, checked
        ),
        witness: Some(Witness::SelfMembership {
            first_end: end_record(&first.0, first.1),
            regularity_checked: checked,
            all_regular,
        }),
    }
}

/// Public form of the self-membership check.
pub fn check_thm2(horizon: &Ordinal) -> Result<Verdict, AuditError> {
    let first_decisive = Ordinal::omega().succ();
    if *horizon < first_decisive {
        return Err(AuditError::HorizonTooLow {
            horizon: horizon.clone(),
        });
    }
    let grid = StageGrid::build(horizon, 0);
    Ok(check_thm2_inner(
        &grid,
        ChaCha8Rng::seed_from_u64(ClaimId::Thm2SelfMember as u64),
    ))
}

/// Pointwise union coverage: every natural below the window is inside the
/// union of the universe, while every finite truncation falls one short.
pub fn check_eq10(window: u64) -> Verdict {
    let mut prev = HFSet::empty();
    let mut ok = window >= 1;
    for n in 0..window {
        let next = prev.succ();
        // n sits inside vn(n+1), and n+1 is itself in the universe.
        ok &= next.contains(&prev) && NatSet::full().contains(n + 1);
        prev = next;
    }
    ok &= vn_decode(&prev) == Some(window);

    let chain = numeral_chain(TABLE_MAX);
    let mut contrast = Vec::new();
    for k in 1..=TABLE_MAX {
        let union = chain[k as usize].union_all();
        ok &= union == chain[k as usize - 1];
        contrast.push(UnionRow {
            k,
            union_decodes_to: vn_decode(&union).expect("union of a numeral is a numeral"),
        });
    }
    Verdict {
        claim: ClaimId::Eq10UnionN,
        status: if ok {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!(
            "pointwise membership for n < {window}; contraction table k <= {TABLE_MAX}"
        ),
        witness: Some(Witness::UnionCoverage { window, contrast }),
    }
}

/// No constructed set is a member of itself.
fn check_regularity(rng: ChaCha8Rng) -> Verdict {
    let (checked, all_regular) = regularity_sweep(rng);
    Verdict {
        claim: ClaimId::Regularity,
        status: if all_regular {
            Status::Verified
        } else {
            Status::NotReproduced
        },
        checked_range: format!(
            "{checked} sets: numerals, sentinels, unions, meets, \
                                successors, and seeded constructions"
        ),
        witness: None,
    }
}

/// Checks `x ∉ x` across the audit's set inventory; returns (count, all ok).
fn regularity_sweep(mut rng: ChaCha8Rng) -> (u64, bool) {
    let chain = numeral_chain(TABLE_MAX);
    let mut inventory: Vec<HFSet> = chain.clone();
    inventory.push(sentinel_b());
    inventory.push(sentinel_c());
    inventory.push(sentinel_b().succ());
    inventory.push(sentinel_c().succ());
    for x in &chain {
        inventory.push(x.union_all());
    }
    for i in 0..=TABLE_MAX as usize {
        inventory.push(chain[i].intersect(&sentinel_c()));
    }
    for _ in 0..64 {
        inventory.push(random_hf(&mut rng, 3));
    }
    let all_regular = inventory.iter().all(HFSet::is_regular);
    (inventory.len() as u64, all_regular)
}

fn random_hf(rng: &mut ChaCha8Rng, depth: u32) -> HFSet {
    if depth == 0 {
        return HFSet::empty();
    }
    let breadth = rng.gen_range(0..=3);
    let elements = (0..breadth).map(|_| random_hf(rng, depth - 1)).collect();
    HFSet::from_elements(elements)
}

/// The finite-universe contrast: every `{0..k-1}` ends at a singleton
/// holding its maximum, and the order predicate names the same element.
fn finite_contrast() -> FiniteContrast {
    let mut all_verified = true;
    let mut survivor_is_max = true;
    let mut greatest_matches = true;
    let mut sample = Vec::new();
    for k in CONTRAST_SIZES {
        let members: Vec<u64> = (0..k).collect();
        let lemma = check_lemma1_3_finite(&members);
        let thm = check_thm1_finite(&members);
        all_verified &= lemma.status == Status::Verified && thm.status == Status::Verified;
        let (end_stage, survivor, greatest) = match thm.witness {
            Some(Witness::FiniteGreatest {
                end_stage,
                survivor,
                greatest,
                ..
            }) => (end_stage, survivor, greatest),
            _ => {
                all_verified = false;
                continue;
            }
        };
        survivor_is_max &= survivor == k - 1;
        greatest_matches &= survivor == greatest;
        if matches!(k, 1 | 2 | 10 | 200) {
            sample.push(FiniteEndRow {
                size: k,
                end_stage,
                survivor,
            });
        }
    }
    FiniteContrast {
        sizes: format!("{}..={}", CONTRAST_SIZES.start(), CONTRAST_SIZES.end()),
        all_verified,
        survivor_is_max,
        greatest_matches_survivor: greatest_matches,
        sample,
    }
}

fn end_record(stage: &Ordinal, end: EndKind) -> EndStageRecord {
    EndStageRecord {
        stage: stage.clone(),
        end,
        survivor: None,
    }
}

fn status_of(ok: bool, non_vacuous: bool) -> Status {
    match (ok, non_vacuous) {
        (true, true) => Status::Verified,
        (true, false) => Status::Vacuous,
        (false, _) => Status::NotReproduced,
    }
}

/// Re-validates a verdict's witness against the modules that produced it.
/// Returns false when the witness no longer replays.
pub fn replay_witness(verdict: &Verdict) -> bool {
    match &verdict.witness {
        None => true,
        Some(Witness::Exceeded {
            candidate,
            exceeded_by,
        }) => {
            let chain = numeral_chain(*exceeded_by);
            let x = &chain[*candidate as usize];
            let y = &chain[*exceeded_by as usize];
            *exceeded_by == candidate + 1 && !(x.contains(y) || x == y)
        }
        Some(Witness::EndStage(record)) => replay_end(record, None),
        Some(Witness::NoSingleton { first_end, .. }) => {
            replay_end(first_end, Some(EndKind::Empty)) && first_end.stage == Ordinal::omega()
        }
        Some(Witness::GreatestSearch {
            first_end,
            candidates_refuted_below,
            ..
        }) => {
            let chain = numeral_chain(*candidates_refuted_below);
            replay_end(first_end, Some(EndKind::Empty))
                && (0..*candidates_refuted_below as usize).all(|x| chain[x + 1].contains(&chain[x]))
        }
        Some(Witness::SelfMembership {
            first_end,
            all_regular,
            ..
        }) => {
            replay_end(first_end, Some(EndKind::Empty))
                && *all_regular
                && sentinel_b().is_regular()
                && sentinel_c().is_regular()
        }
        Some(Witness::FiniteGreatest {
            end_stage,
            survivor,
            greatest,
            ..
        }) => {
            let members: Vec<u64> = (0..=*survivor).collect();
            survivor == greatest
                && has_greatest(&members) == Some(*greatest)
                && *end_stage == *survivor
        }
        Some(Witness::UnionCoverage { contrast, .. }) => {
            let chain = numeral_chain(TABLE_MAX);
            contrast.iter().all(|row| {
                row.k >= 1
                    && row.union_decodes_to == row.k - 1
                    && chain[row.k as usize].union_all() == chain[row.k as usize - 1]
            })
        }
    }
}

fn replay_end(record: &EndStageRecord, expect: Option<EndKind>) -> bool {
    if let Some(kind) = expect {
        if record.end != kind {
            return false;
        }
    }
    match record.end {
        EndKind::Empty => {
            // Replays through the closed form on the full universe.
            let snap = stage_closed_form(&record.stage);
            snap.b_set.card() == CardClass::Finite(0) && record.survivor.is_none()
        }
        EndKind::Singleton => {
            // Replays through literal simulation on the recorded universe
            // shape {0..survivor}.
            let Some(survivor) = record.survivor else {
                return false;
            };
            let Some(stage) = record.stage.to_u64() else {
                return false;
            };
            let members: Vec<u64> = (0..=survivor).collect();
            let universe = NatSet::finite(members).expect("range is duplicate-free");
            simulation_end(&Strategy::MinChoice, &universe, stage + 1)
                == Ok(Some((stage, EndKind::Singleton)))
        }
    }
}
