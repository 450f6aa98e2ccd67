//! The stable-stem audit: bracket tables for the three Hopf classes,
//! Hurewicz statuses with their deciding rules, and the two EHP bound modes.

use qhom::stems_audit::{
    bracket_audit, bracket_defined, ehp_bound, height_contradiction, render_row_inline,
    BoundMode, Element, FactBase,
};

fn main() -> Result<(), qhom::Error> {
    let facts = FactBase::embedded();

    for alpha in ["eta", "nu", "sigma"] {
        let table = bracket_audit(facts, alpha)?;
        println!("== bracket table for {alpha} ==");
        for row in &table.rows {
            println!("  s={} j={} k={}  {}", row.s, row.j, row.k, render_row_inline(row));
        }
        for note in &table.notes {
            println!("  note: {note}");
        }
        println!();
    }

    println!("== definedness checks ==");
    for (a, b, c) in [("eta", "eta", "2"), ("eta", "2", "eta"), ("nu", "8", "nu")] {
        let (a, b, c) = (Element::parse(a)?, Element::parse(b)?, Element::parse(c)?);
        match bracket_defined(facts, &a, &b, &c) {
            Ok(()) => println!("  {{{a},{b},{c}}} is defined"),
            Err(w) => println!("  {{{a},{b},{c}}} is not defined: {w}"),
        }
    }

    println!("\n== Hurewicz statuses ==");
    for name in ["sigma^2", "kappa", "nu_bar", "nu_star", "eta_4", "tau_3", "mu9", "eta*kappa", "2nu", "eps"] {
        let r = facts.hurewicz_status(name)?;
        println!("  h({}): {:?} [{}]", r.element, r.status, r.rule);
    }

    println!("\n== EHP bounds for {{sigma,2nu,nu}} ==");
    let (a, b, c) =
        (Element::parse("sigma")?, Element::parse("2nu")?, Element::parse("nu")?);
    for mode in [BoundMode::Stated, BoundMode::Sharper] {
        let (bound, detail) = ehp_bound(facts, mode, &a, &b, &c)?;
        let candidate = Element::parse("sigma^2")?;
        let excluded = height_contradiction(facts, bound, &candidate)?;
        println!("  bound {bound} ({detail}); h(sigma^2) = 7 exceeds it: {excluded}");
    }
    Ok(())
}
