//! The elimination process on the full universe: finite stages by literal
//! simulation, transfinite stages by closed form, and the point where the
//! pool is suddenly empty.

use omegasieve::render::{trace_text, TraceRow};
use omegasieve::{simulate_each, stage_closed_form, NatSet, Ordinal, Strategy};

fn main() {
    // Ten literal steps: stage n deducts n, because the two least
    // elements are chosen and the smaller one goes.
    let mut rows = Vec::new();
    simulate_each(&Strategy::MinChoice, &NatSet::full(), 10, |snap| {
        rows.push(TraceRow::from_snapshot(snap));
    })
    .unwrap();

    // Past every finite stage the closed form takes over. At the first
    // limit stage the union of all earlier deductions has swallowed the
    // whole universe: B is empty before any end marker was ever placed.
    for alpha in ["w", "w+1", "w+50", "w*2"] {
        let alpha: Ordinal = alpha.parse().unwrap();
        rows.push(TraceRow::from_snapshot(&stage_closed_form(&alpha)));
    }

    print!("{}", trace_text(&rows));

    // The same run under a different choice strategy: picking the 3rd
    // smallest pair still deducts the smaller of the two picks.
    println!("\nkth:3 strategy, first five stages:");
    let mut alt = Vec::new();
    simulate_each(&Strategy::KthSmallest(3), &NatSet::full(), 5, |snap| {
        alt.push(TraceRow::from_snapshot(snap));
    })
    .unwrap();
    print!("{}", trace_text(&alt));
}
