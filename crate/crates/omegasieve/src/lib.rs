//! Exact model of a transfinite elimination process over the naturals.
//!
//! Time is indexed by ordinals below epsilon-0 in Cantor normal form
//! ([`ordinal`]). Each stage carries a pair of sets: `A`, what has been
//! deducted so far, and `B`, the remaining pool, an exact finite or
//! co-finite subset of the naturals ([`natset`]). The step rule picks two
//! elements of `B` and deducts the smaller; `Min` over von Neumann
//! numerals is intersection, which [`hfset`] implements literally on
//! hereditarily finite sets. The [`engine`] runs the rule both as a
//! literal simulation and as a closed form over arbitrary stages, and
//! [`audit`] re-derives every registered claim about the process and
//! reports which ones hold, with machine-checkable witnesses.
//!
//! Ordinal expressions everywhere use one grammar: `w^w*2+w*3+4` style,
//! with `w` for the first infinite ordinal. The [`cli`] front end exposes
//! traces, audits, finite-universe runs, and ordinal arithmetic.

#![forbid(unsafe_code)]

pub mod audit;
pub mod cli;
pub mod engine;
pub mod hfset;
pub mod natset;
pub mod ordinal;
pub mod render;

pub use audit::{run_audit, AuditReport, ClaimId, Status, Verdict};
pub use engine::{
    cannot_deduct_all_upto, cannot_deduct_by, first_end_stage, simulate_each, simulate_steps,
    simulation_end, stage_closed_form, EndKind, StageSnapshot, StepOutcome, Strategy,
};
pub use hfset::HFSet;
pub use natset::{CardClass, NatSet};
pub use ordinal::{Ordinal, OrdinalClass};
