//! Reduced Gröbner bases under different orders, and ideal membership.

use pluecker::{Ideal, MonomialOrder, PolyRing, Rational};

fn main() -> pluecker::Result<()> {
    let r = PolyRing::<Rational>::new(&["x", "y", "z"], ())?;
    let i = Ideal::parse(&r, &["x^2 + y^2 + z^2 - 1", "x - y", "y*z - 1/2"])?;

    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let gb = i.groebner_with(order);
        println!("{order:?}:");
        for g in gb.elements() {
            println!("  {g}");
        }
    }

    let f = pluecker::parse::parse_poly("x*z - 1/2", &r)?;
    println!("x*z - 1/2 in I: {}", i.contains(&f));
    Ok(())
}
