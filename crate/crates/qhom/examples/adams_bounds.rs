//! Adams-filtration degree bounds and their verification on the
//! zero-component model: suspension, James-Hopf projection, bottom cells.

use qhom::loopspace::SpaceSpec;
use qhom::stems_audit::{degree_bound_chain, FactBase};

fn main() -> Result<(), qhom::Error> {
    let facts = FactBase::embedded();
    println!("degree bounds by filtration:");
    for k in 1..=8u32 {
        println!("  k = {k}: n >= {}", facts.adams_degree_bound(k, None));
    }
    println!("square-power refinements at k = 4:");
    for t in 1..=3u32 {
        println!("  t = {t}: n >= {}", facts.adams_degree_bound(4, Some(t)));
    }

    let q0 = SpaceSpec::load("q0s0plus")?;
    for k in [2u32, 3] {
        let report = degree_bound_chain(&q0, k, None, 24)?;
        println!(
            "\nchain at filtration {k} (bound {}): {} classes, all satisfy: {}",
            report.bound,
            report.links.len(),
            report.all_satisfy
        );
        for link in report.links.iter().take(5) {
            println!(
                "  {} (degree {}): e_* -> {}, height {}, bottom cell of the summand {}",
                link.class, link.degree, link.suspension, link.height, link.bottom_cell
            );
        }
        if let Some(min) = report.min_degree {
            println!("  least degree attained: {min}");
        }
    }
    Ok(())
}
