// Certificate that the meridian `a` is a generalized torsion element of a
// Whitehead-link filling `W(m/n)` with `m ≥ 2n`.

use gentorsion::certify::verify_certificate;
use gentorsion::derive::whitehead_certificate;

pub fn run_example() -> gentorsion::Result<()> {
    let (m, n) = (7, 2);
    let c = whitehead_certificate(m, n)?;
    println!("group:   {}", c.presentation);
    println!("element: {}", c.element);
    println!("k = {} conjugates:", c.conjugators.len());
    for x in &c.conjugators {
        println!("  a^({x})");
    }
    println!("proof:   {} relator insertions", c.triviality.steps.len());

    let report = verify_certificate(&c);
    println!("{report}");
    assert!(report.is_valid());

    // Below the m ≥ 2n threshold the construction refuses.
    let refused = whitehead_certificate(3, 2).unwrap_err();
    println!("W(3/2): {refused}");
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
