//! The mapping-cone Steenrod module: split basis, crossing relation, and the
//! warning raised when a crossing would be needed on an operated word.

use qhom::loopspace::BasisFilter;
use qhom::mapping_cone::{ConeClass, ConeSpec};

fn main() -> Result<(), qhom::Error> {
    let cone = ConeSpec::kappa();
    println!("cone: {} = {} with suspended {}", cone.name(), cone.base().name(), cone.cofiber().name());
    for c in cone.crossings() {
        println!("crossing relation: Sq[{}] S({}) = {}", c.t, c.word, c.to);
    }

    let (base, cof) = cone.cone_basis(14, BasisFilter::All)?;
    println!("\ndegree-14 slice:");
    for m in &base {
        println!("  {m}");
    }
    for m in &cof {
        println!("  S({m})");
    }

    println!("\nSteenrod action on the slice:");
    for m in &base {
        let class = ConeClass::from_base(qhom::f2poly::ClassExpr::from_monomial(m.clone()));
        let (out, _) = cone.steenrod(2, &class);
        println!("  Sq[2] {m} = {out}");
    }
    for m in &cof {
        let class = ConeClass::from_cofiber(qhom::f2poly::ClassExpr::from_monomial(m.clone()));
        for t in [1u32, 2] {
            let (out, warnings) = cone.steenrod(t, &class);
            println!("  Sq[{t}] S({m}) = {out}");
            for w in warnings {
                println!("    warning: {w}");
            }
        }
    }

    println!("\nthe crossing fires on the bottom cofiber generator:");
    let bottom = ConeClass::from_cofiber(cone.cofiber().parse("a1")?);
    let (out, _) = cone.steenrod(2, &bottom);
    println!("  Sq[2] S(a1) = {out}");

    println!("\npinch and desuspend discards the base component:");
    let mixed = ConeClass {
        base: cone.base().parse("g3*Q[8]g3")?,
        cofiber: cone.cofiber().parse("Q[8]a2")?,
    };
    println!("  {} |-> {}", mixed, cone.pinch_desuspend(&mixed));
    Ok(())
}
