//! Hilbert series, projective dimension and degree.

use pluecker::{GrassmannContext, Ideal, PolyRing, Rational};

fn main() -> pluecker::Result<()> {
    let r = PolyRing::<Rational>::new(&["x", "y", "z", "w"], ())?;
    let cubic = Ideal::parse(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"])?;
    let h = cubic.hilbert_data()?;
    println!("twisted cubic: numerator {:?}, projDim {}, degree {}", h.numerator, h.proj_dim, h.degree);
    println!("  h(d) for d = 0..6: {:?}", (0..6).map(|d| h.hilbert_function(d)).collect::<Vec<_>>());

    for (d, m) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let g = GrassmannContext::<Rational>::new(d, m, ())?;
        let h = g.pluecker_ideal().hilbert_data()?;
        println!("G({d}, {m}): projDim {}, degree {}", h.proj_dim, h.degree);
    }
    Ok(())
}
