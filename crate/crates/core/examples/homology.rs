// First homology from the Smith normal form of the relation matrix.

use gentorsion::abelian::{homology, relation_matrix, smith_normal_form};
use gentorsion::presentations::{pretzel, whitehead_filled, Slope};

pub fn run_example() -> gentorsion::Result<()> {
    let p = whitehead_filled(Slope::new(5, 2)?)?;
    let m = relation_matrix(&p);
    let s = smith_normal_form(&m);
    println!("relation matrix {m:?}");
    println!("smith form      {:?}", s.d);
    assert_eq!(&(&s.u * &m) * &s.v, s.d);

    for (m, n) in [(1, 1), (5, 1), (5, 2), (-7, 3), (0, 1), (12, 5)] {
        println!("H₁ W({m}/{n}) = {}", homology(&whitehead_filled(Slope::new(m, n)?)?));
    }
    for n in 1..=3 {
        println!("H₁ P(-2, 3, {}) = {}", 2 * n, homology(&pretzel(n)?));
    }
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
