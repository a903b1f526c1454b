//! Radicals, points and local multiplicities of zero-dimensional ideals.

use pluecker::zerodim::{local_multiplicity, quotient_dimension, variety_points, zero_dim_radical};
use pluecker::{Fp, Ideal, PolyRing};

fn main() -> pluecker::Result<()> {
    let r = PolyRing::<Fp>::new(&["x", "y"], 101)?;
    let i = Ideal::parse(&r, &["x^3 - x^2", "y^2 - x*y", "x*y^2"])?;
    println!("I = {i}");
    println!("dim R/I      = {}", quotient_dimension(&i)?);
    let rad = zero_dim_radical(&i)?;
    println!("rad I        = {}", rad.minimalized());
    for p in variety_points(&i)? {
        println!("point {p}: multiplicity {}", local_multiplicity(&i, &p)?);
    }
    Ok(())
}
