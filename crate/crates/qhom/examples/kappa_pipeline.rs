//! The full degree-14 mapping-cone elimination: no spherical class survives,
//! so the bracket class in dimension 14 has trivial Hurewicz image.

fn main() -> Result<(), qhom::Error> {
    let cert = qhom::spherical_search::kappa_pipeline()?;
    print!("{}", cert.render());
    Ok(())
}
