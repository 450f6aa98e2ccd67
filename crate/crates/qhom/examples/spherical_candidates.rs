//! Generic spherical-class search on a degree slice: intersect the
//! Steenrod-annihilated subspace with the primitives.

use qhom::loopspace::SpaceSpec;
use qhom::spherical_search::{annihilated_subspace, spherical_candidates};

fn main() -> Result<(), qhom::Error> {
    let qs1 = SpaceSpec::load("qs1")?;
    print!("{}", spherical_candidates(&qs1, 2)?.render());
    println!();

    let gamma = SpaceSpec::load("gamma6s3")?;
    print!("{}", spherical_candidates(&gamma, 14)?.render());
    println!();

    let qs3 = SpaceSpec::load("qs3")?;
    let ann = annihilated_subspace(&qs3, 18)?;
    println!("Steenrod-annihilated subspace of H_18(QS^3):");
    for e in ann {
        println!("  {e}");
    }
    Ok(())
}
