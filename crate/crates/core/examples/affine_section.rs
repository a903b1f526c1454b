//! The affine chart at e_{1m}: chart ideal, Jacobian rank and multiplicity.

use pluecker::verify::cmd_verify_section;
use pluecker::{GrassmannContext, Rational};

fn main() -> pluecker::Result<()> {
    let g = GrassmannContext::<Rational>::new(2, 5, ())?;
    let a = g.affine_chart_ideal()?;
    println!("chart ring: {:?}", a.ring().var_names());
    for gen in a.gens() {
        println!("  {gen}");
    }
    let report = cmd_verify_section(5, &[2, 3], 6)?;
    println!("{}", report.to_text());
    Ok(())
}
