//! Von Neumann numerals as hereditarily finite sets: Min is literally
//! intersection, and the union of a numeral contracts one step.

use omegasieve::hfset::{sentinel_b, sentinel_c, vn_decode, vn_encode, vn_ge};

fn main() {
    // 0 = {}, n+1 = n ∪ {n}: each numeral is the set of smaller ones.
    for n in 0..5 {
        let v = vn_encode(n).unwrap();
        println!("vn({n}) = {v}");
    }

    let three = vn_encode(3).unwrap();
    let five = vn_encode(5).unwrap();

    // min(3, 5) computed with no arithmetic at all.
    let meet = three.intersect(&five);
    println!(
        "\nvn(3) ∩ vn(5) = {meet} which decodes to {:?}",
        vn_decode(&meet)
    );

    // The element order is set inclusion.
    println!("vn(5) ≥ vn(3): {}", vn_ge(&five, &three).unwrap());
    println!("vn(3) ≥ vn(5): {}", vn_ge(&three, &five).unwrap());

    // ⋃ vn(k) = vn(k-1): union undoes one successor.
    let union = five.union_all();
    println!("⋃ vn(5) = vn({:?})", vn_decode(&union));

    // The end-of-run markers are *not* numerals, which is what makes them
    // safe to mix into the deducted set.
    let b = sentinel_b();
    let c = sentinel_c();
    println!("\nb = {b}, decodes to {:?}", vn_decode(&b));
    println!("c = {c}, decodes to {:?}", vn_decode(&c));

    // Everything here satisfies the foundation check x ∉ x.
    for (name, set) in [("vn(5)", &five), ("b", &b), ("c", &c)] {
        println!("{name} is regular: {}", set.is_regular());
    }
}
