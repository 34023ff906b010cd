//! Finite universes end the way the infinite one never does: with a
//! singleton stage whose survivor is the greatest element.

use std::collections::BTreeMap;

use omegasieve::hfset::has_greatest;
use omegasieve::{simulate_steps, simulation_end, EndKind, NatSet, StepOutcome, Strategy};

fn main() {
    // {0..k-1} takes k-1 deductions, then flags the singleton.
    println!("size  end stage  survivor  greatest");
    for k in [1u64, 2, 3, 5, 10, 50] {
        let universe = NatSet::finite((0..k).collect()).unwrap();
        let (stage, end) = simulation_end(&Strategy::MinChoice, &universe, k + 1)
            .unwrap()
            .expect("finite universes end");
        assert_eq!(end, EndKind::Singleton);
        let members: Vec<u64> = (0..k).collect();
        let greatest = has_greatest(&members).unwrap();
        println!("{k:>4}  {stage:>9}  {:>8}  {greatest:>8}", k - 1);
    }

    // A scripted run on {1, 3, 4, 7}: the script names the first pick of
    // each step, the second pick is the least of the rest, and the
    // smaller of the two is deducted. The maximum can never be deducted,
    // so 7 survives no matter what the script says.
    let universe = NatSet::finite(vec![1, 3, 4, 7]).unwrap();
    let script = Strategy::Scripted(BTreeMap::from([(0, 7), (1, 4), (2, 4)]));
    println!("\nscripted run on {universe}:");
    for snap in simulate_steps(&script, &universe, 5).unwrap() {
        println!(
            "  stage {}: B = {}, {}",
            snap.alpha, snap.b_set, snap.outcome
        );
        if matches!(snap.outcome, StepOutcome::SentinelB) {
            println!("  survivor: {}", snap.b_set.min().unwrap());
        }
    }
}
