//! Ordinal arithmetic below epsilon-0: parsing, normal forms, and the
//! laws that fail on purpose.

use omegasieve::{Ordinal, OrdinalClass};

fn show(label: &str, value: &Ordinal) {
    let class = match value.classify() {
        OrdinalClass::Zero => "zero".to_string(),
        OrdinalClass::Successor(pred) => format!("successor of {pred}"),
        OrdinalClass::Limit => "limit".to_string(),
    };
    println!("{label:>18} = {value}  ({class})");
}

fn main() {
    let w = Ordinal::omega();
    let one = Ordinal::one();
    let two = Ordinal::from_nat(2);

    // Addition absorbs finite left summands into an infinite right one.
    show("1 + w", &one.add(&w));
    show("w + 1", &w.add(&one));
    show("2 * w", &two.mul(&w));
    show("w * 2", &w.mul(&two));

    // Multiplication distributes over the *second* argument only.
    let w_plus_1 = w.add(&one);
    show("(w+1) * 2", &w_plus_1.mul(&two));
    show("w*2 + 2", &w.mul(&two).add(&two));

    // Towers parse and print with the same grammar.
    let tall: Ordinal = "w^(w^2*3+w)*5+w^2+1".parse().unwrap();
    show("a tall ordinal", &tall);
    show("its square", &tall.mul(&tall));

    // Comparison is lexicographic on the normal form.
    let a: Ordinal = "w^2".parse().unwrap();
    let b: Ordinal = "w*1000+999".parse().unwrap();
    println!("\n{a} > {b}: {}", a > b);

    // Parse errors carry the byte offset of the problem.
    let bad = Ordinal::parse("w^w^w");
    println!("parsing \"w^w^w\": {}", bad.unwrap_err());
}
