//! Exact arithmetic on finite and co-finite subsets of the naturals: the
//! two shapes the elimination process can ever produce.

use omegasieve::{CardClass, NatSet};

fn main() {
    let evens_start: NatSet = "{0,2,4,6,8}".parse().unwrap();
    let tail: NatSet = "N\\{0,1,2,3,4}".parse().unwrap();

    println!("a = {evens_start}");
    println!("b = {tail}");

    // Intersection and union are exact across all four shape combinations.
    println!("a ∩ b = {}", evens_start.intersect(&tail));
    println!("a ∪ b = {}", evens_start.union(&tail));
    println!("complement of b = {}", tail.complement());

    // Removing elements from a co-finite set keeps it co-finite: the
    // complement just grows.
    let pruned = tail.remove(7).remove(9);
    println!("b minus 7, 9 = {pruned}");

    // Cardinality is a class, not a number you might overflow.
    for s in [&evens_start, &pruned, &NatSet::empty()] {
        match s.card() {
            CardClass::Finite(n) => println!("|{s}| = {n}"),
            CardClass::CountablyInfinite => println!("|{s}| = countably infinite"),
        }
    }

    // min and k-th smallest walk the complement's gaps.
    println!("min(b) = {}", tail.min().unwrap());
    println!("3rd smallest of b = {:?}", tail.kth_smallest(3));

    // Subset answers are exact even between mixed shapes.
    println!("a ⊆ N: {}", evens_start.is_subset_of(&NatSet::full()));
    println!("b ⊆ a: {}", tail.is_subset_of(&evens_start));

    // Display output parses back to the same set.
    let text = pruned.to_string();
    let back: NatSet = text.parse().unwrap();
    println!("round-trip of {text}: {}", back == pruned);
}
