// Exhaustive search for a permutation representation in which an element
// survives, used when abelianization cannot see it.

use gentorsion::abelian::abelian_image;
use gentorsion::presentations::{pretzel, Presentation};
use gentorsion::quotients::find_quotient_witness;
use gentorsion::words::{Generator, Word};

pub fn run_example() -> gentorsion::Result<()> {
    let p = pretzel(4)?;
    let element = Word::parse("ABab")?;
    println!("[a, b] in H₁: {:?} (zero: commutators always vanish)", abelian_image(&element, &p)?);

    let witness = find_quotient_witness(&p, &element, 6)?.expect("degree 3 suffices");
    println!("smallest witness has degree {}", witness.degree);
    for (g, perm) in &witness.images {
        println!("  {g} -> {:?}", perm.to_one_based());
    }

    // The trefoil group maps onto S₃, where [a, b] becomes a 3-cycle.
    let trefoil = Presentation::new(
        vec![Generator::new("a"), Generator::new("b")],
        vec![Word::parse("abaBAB")?],
    )?;
    let found = find_quotient_witness(&trefoil, &element, 4)?;
    println!("trefoil: {}", found.map_or("none".into(), |q| format!("degree {}", q.degree)));
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
