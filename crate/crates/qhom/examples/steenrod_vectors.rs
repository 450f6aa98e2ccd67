//! Apply the dual Steenrod operations through the Nishida relations and the
//! Cartan formula, reproducing the hand calculations in degree 18 and 14.

use qhom::loopspace::SpaceSpec;

fn main() -> Result<(), qhom::Error> {
    let qs3 = SpaceSpec::load("qs3")?;
    let show = |t: u32, input: &str| {
        let out = qs3.steenrod(t, &qs3.parse(input).unwrap());
        println!("  Sq[{t}] {input} = {out}");
    };

    println!("on the degree-18 word classes of QS^3:");
    show(1, "Q[15]g3");
    show(1, "Q[10]Q[5]g3");
    show(2, "Q[9]Q[6]g3");

    println!("\non the degree-14 products that feed the mapping-cone run:");
    show(2, "Q[3]g3*Q[5]g3");
    show(2, "g3*Q[8]g3");
    show(2, "Q[4]g3*Q[4]g3");

    println!("\nthe parity rule Sq[1] Q[2t] = Q[2t-1], Sq[1] Q[2t+1] = 0:");
    let qs1 = SpaceSpec::load("qs1")?;
    for t in 1..=4u32 {
        let even = qs1.steenrod(1, &qs1.parse(&format!("Q[{}]g1", 2 * t))?);
        let odd = qs1.steenrod(1, &qs1.parse(&format!("Q[{}]g1", 2 * t + 1))?);
        println!("  Sq[1] Q[{}]g1 = {even},  Sq[1] Q[{}]g1 = {odd}", 2 * t, 2 * t + 1);
    }

    println!("\na declared table entry in the two-cell model:");
    let k = SpaceSpec::load("gamma6sigma4k")?;
    println!("  Sq[1] a2 = {}", k.steenrod(1, &k.parse("a2")?));
    println!("  Sq[1] Q[8]a2 = {}", k.steenrod(1, &k.parse("Q[8]a2")?));
    println!("  Sq[2] Q[9]a1 = {}", k.steenrod(2, &k.parse("Q[9]a1")?));
    Ok(())
}
