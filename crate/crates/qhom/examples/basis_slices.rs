//! Enumerate monomial bases of free loop-space models, with the word-only
//! filter and the truncation guard.

use qhom::loopspace::{BasisFilter, SpaceSpec};

fn main() -> Result<(), qhom::Error> {
    let qs3 = SpaceSpec::load("qs3")?;

    println!("single-word classes of H_18(QS^3):");
    for m in qs3.basis(18, BasisFilter::WordsOnly)? {
        println!("  {m}");
    }

    println!("\nfull degree-14 slice of the six-fold loop model on S^3:");
    let gamma = SpaceSpec::load("gamma6s3")?;
    for m in gamma.basis(14, BasisFilter::All)? {
        println!("  {m}");
    }

    println!("\ndegree-8 slice of the zero component of QS^0:");
    let q0 = SpaceSpec::load("q0s0plus")?;
    for m in q0.basis(8, BasisFilter::All)? {
        println!("  {m}");
    }

    println!("\nslice sizes of QS^1 up to the default cap:");
    let qs1 = SpaceSpec::load("qs1")?;
    let counts: Vec<String> =
        (0..=12).map(|d| format!("{}", qs1.basis(d, BasisFilter::All).unwrap().len())).collect();
    println!("  degrees 0..12: {}", counts.join(", "));

    match qs1.basis(qs1.cap() + 1, BasisFilter::All) {
        Err(e) => println!("\nasking beyond the cap reports: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
