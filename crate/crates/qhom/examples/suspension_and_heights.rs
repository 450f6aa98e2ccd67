//! The homology suspension, its kernel, the height filtration and the
//! James-Hopf projections.

use qhom::loopspace::{self, BasisFilter, SpaceSpec};

fn main() -> Result<(), qhom::Error> {
    let qs3 = SpaceSpec::load("qs3")?;
    println!("homology suspension out of QS^3:");
    for input in ["Q[15]g3", "g3*Q[8]g3", "Q[9]Q[6]g3"] {
        let out = qs3.suspend(&qs3.parse(input)?);
        println!("  e_* ({input}) = {out}");
    }

    println!("\nzero-component classes suspend onto word classes:");
    let q0 = SpaceSpec::load("q0s0plus")?;
    for input in ["Q[1]u", "Q[4]Q[2]u", "Q[2]Q[1]u"] {
        let class = q0.parse(input)?;
        println!("  e_* ({class}) = {}", q0.suspend(&class));
    }

    println!("\ninjectivity on the indecomposable quotient, low QS^1 slices:");
    let qs1 = SpaceSpec::load("qs1")?;
    for d in 1..=8 {
        println!("  degree {d}: {}", qs1.indecomposable_injectivity_check(d)?);
    }

    println!("\nheights and the James-Hopf projection:");
    let e = qs3.parse("Q[15]g3 + g3*Q[8]g3 + Q[4]g3*Q[4]g3")?;
    println!("  class: {e}");
    for m in qs3.basis(18, BasisFilter::All)? {
        if e.contains(&m) {
            println!("    ht({m}) = {}", loopspace::height(&m));
        }
    }
    for r in [2u64, 3, 4] {
        println!("  j_{r} keeps: {}", loopspace::james_hopf_project(&e, r));
    }

    println!("\nbottom cells of extended powers: D_8 S^1 starts in dimension {}",
             loopspace::bottom_cell_dim(8, 1));
    Ok(())
}
