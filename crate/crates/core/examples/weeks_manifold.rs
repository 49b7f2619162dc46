// The Weeks manifold as the double filling `W(5/1)(5/2)`: the Whitehead
// proof carries over unchanged, only the witness is recomputed.

use gentorsion::abelian::homology;
use gentorsion::certify::verify_certificate;
use gentorsion::derive::{filled_quotient_certificate, whitehead_certificate};
use gentorsion::presentations::{double_filled, whitehead_filled, Slope};

pub fn run_example() -> gentorsion::Result<()> {
    let first = Slope::new(5, 1)?;
    let second = Slope::new(5, 2)?;

    println!("H₁ W(5)         = {}", homology(&whitehead_filled(first)?));
    println!("H₁ W(5/1)(5/2)  = {}", homology(&double_filled(first, second)?));

    let single = whitehead_certificate(5, 1)?;
    let weeks = filled_quotient_certificate(5, 1, second)?;
    assert_eq!(single.triviality, weeks.triviality);
    println!("witness: {:?}", weeks.nontriviality);

    let report = verify_certificate(&weeks);
    println!("{report}");
    assert!(report.is_valid());
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
