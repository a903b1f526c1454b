//! Quotients, saturation, intersection and elimination.

use pluecker::{Ideal, PolyRing, Rational};

fn main() -> pluecker::Result<()> {
    let r = PolyRing::<Rational>::new(&["x", "y", "z"], ())?;
    // a line with an embedded point at the origin
    let i = Ideal::parse(&r, &["x^2", "x*y", "x*z"])?;
    let m = Ideal::irrelevant(&r);
    println!("I          = {i}");
    println!("I : m      = {}", i.quotient_ideal(&m).minimalized());
    println!("I : m^oo   = {}", i.saturate(&m).minimalized());

    let a = Ideal::parse(&r, &["x", "y"])?;
    let b = Ideal::parse(&r, &["y", "z"])?;
    println!("(x,y) ∩ (y,z) = {}", a.intersect(&b).minimalized());

    // twisted cubic as the image of t -> (t, t^2, t^3)
    let s = PolyRing::<Rational>::new(&["t", "x", "y", "z"], ())?;
    let graph = Ideal::parse(&s, &["x - t", "y - t^2", "z - t^3"])?;
    println!("eliminate t: {}", graph.eliminate(&[0]).minimalized());

    let f = pluecker::parse::parse_poly("x", &r)?;
    println!("x in rad(x^3, y): {}", Ideal::parse(&r, &["x^3", "y"])?.radical_contains(&f));
    Ok(())
}
