//! The two-point scheme on G(2, 4), its multiplicities and the involution τ.

use pluecker::zerodim::{projective_multiplicity, projective_points};
use pluecker::{GrassmannContext, Ideal, Rational};

fn main() -> pluecker::Result<()> {
    let g = GrassmannContext::<Rational>::new(2, 4, ())?;
    let i = g.pluecker_ideal().sum(&g.v_ideal()?);
    let sat = i.saturate(&Ideal::irrelevant(g.ring()));
    println!("I^sat = {}", sat.minimalized());
    for p in projective_points(&sat)? {
        println!("{} with multiplicity {}", p.describe(g.ring()), projective_multiplicity(&i, &p)?);
    }
    println!("τ(I^sat) = {}", g.tau_ideal(&sat)?.minimalized());

    let report = pluecker::verify::cmd_verify_two_points(&[2, 3]);
    println!("{}", report.to_text().lines().last().unwrap_or_default());
    Ok(())
}
