// `[a, b]` is a generalized torsion element in the link groups of the
// pretzel links `P(-2, 3, 2n)`, including the Whitehead sister (`n = 4`).

use gentorsion::certify::{verify_certificate, NontrivialityWitness};
use gentorsion::derive::{pretzel_certificate, DEFAULT_MAX_DEGREE};

pub fn run_example() -> gentorsion::Result<()> {
    for n in 1..=6 {
        let c = pretzel_certificate(n, DEFAULT_MAX_DEGREE)?;
        let degree = match &c.nontriviality {
            NontrivialityWitness::Quotient(q) => q.degree,
            NontrivialityWitness::Abelian { .. } => unreachable!("pretzel witnesses are quotients"),
        };
        let valid = verify_certificate(&c).is_valid();
        println!(
            "P(-2, 3, {:>2}): k = {}, {} insertion, quotient of degree {degree}, {}",
            2 * n,
            c.conjugators.len(),
            c.triviality.steps.len(),
            if valid { "VALID" } else { "INVALID" }
        );
        assert!(valid);
    }
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
