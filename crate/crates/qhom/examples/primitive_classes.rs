//! Reduced coproducts, primitive subspaces, and the square law for
//! decomposable primitives.

use qhom::loopspace::SpaceSpec;

fn main() -> Result<(), qhom::Error> {
    let gamma = SpaceSpec::load("gamma6s3")?;

    println!("reduced coproduct terms in the six-fold loop model on S^3:");
    for input in ["g3", "Q[3]g3*Q[5]g3", "Q[4]g3*Q[4]g3", "g3*Q[8]g3"] {
        let pairs = gamma.coproduct_cross(&gamma.parse(input)?)?;
        let rendered: Vec<String> =
            pairs.iter().map(|(l, r)| format!("{l} (x) {r}")).collect();
        println!(
            "  {input}: {}",
            if rendered.is_empty() { "primitive".into() } else { rendered.join(" + ") }
        );
    }

    println!("\nprimitive bases:");
    for (name, degree) in [("gamma6s3", 14u32), ("qs3", 18), ("qs3", 3), ("qs1", 2)] {
        let model = SpaceSpec::load(name)?;
        let prim = model.primitives(degree)?;
        let rendered: Vec<String> = prim.iter().map(|p| p.to_string()).collect();
        println!("  P_{degree}({name}) = [{}]", rendered.join(", "));
    }

    println!("\nevery decomposable primitive is a square:");
    let qs1 = SpaceSpec::load("qs1")?;
    for degree in [8u32, 12, 16] {
        for p in qs1.primitives(degree)? {
            let (dec, ind) = p.split_decomposable();
            if ind.is_zero() && !dec.is_zero() {
                println!("  degree {degree}: {p} = ({})^2", p.square_root().unwrap());
            }
        }
    }
    Ok(())
}
