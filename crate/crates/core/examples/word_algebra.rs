// Free-group words: reduction, conjugation, commutators, and the
// expansion of `[a, w]` into conjugates of `[a, b]`.

use gentorsion::derive::decompose_commutator;
use gentorsion::words::{commutator, product, Word};

pub fn run_example() -> gentorsion::Result<()> {
    let w = Word::parse("abBAab")?;
    println!("abBAab reduces to {w}");

    let g = Word::parse("a")?;
    let x = Word::parse("bA")?;
    println!("a^(bā) = {}", g.conjugate(&x));

    let (a, b) = (Word::parse("a")?, Word::parse("b")?);
    println!("[a, b] = {}", commutator(&a, &b));

    // [a, w] for w in ā and b only is a product of conjugates of [a, b].
    let w = Word::parse("bAbbAb")?;
    let conjugators = decompose_commutator(&w)?;
    let ab = commutator(&a, &b);
    let factors: Vec<Word> = conjugators.iter().map(|c| ab.conjugate(c)).collect();
    assert_eq!(commutator(&a, &w), product(&factors));
    println!("[a, {w}] is a product of {} conjugates of [a, b]:", conjugators.len());
    for c in &conjugators {
        println!("  [a, b]^({c})");
    }
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
