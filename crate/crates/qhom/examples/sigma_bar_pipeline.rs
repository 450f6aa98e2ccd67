//! The degree-18 elimination over QS^3 (primitivity, suspension image,
//! Steenrod annihilation, loop-bound pull-back), plus the dimension-gap rule
//! in dimension 8.

fn main() -> Result<(), qhom::Error> {
    let cert = qhom::spherical_search::sigma_bar_pipeline()?;
    print!("{}", cert.render());
    println!();
    print!("{}", qhom::spherical_search::nu_bar_pipeline().render());
    Ok(())
}
