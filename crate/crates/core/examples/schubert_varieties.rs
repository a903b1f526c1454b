//! Schubert, opposite Schubert and Richardson ideals on G(2, m).

use pluecker::verify::cmd_verify_richardson;
use pluecker::{GrassmannContext, Ideal, Rational, SchubertVariant};

fn main() -> pluecker::Result<()> {
    let g = GrassmannContext::<Rational>::new(2, 5, ())?;
    let irr = Ideal::irrelevant(g.ring());
    for variant in [SchubertVariant::Standard, SchubertVariant::Opposite, SchubertVariant::Richardson] {
        let y = g.schubert_ideal((2, 4), variant)?;
        let h = y.hilbert_data()?;
        println!("{variant:?} (2, 4): dim {}, degree {}", h.proj_dim, h.degree);
    }
    let point = g.schubert_ideal((1, 5), SchubertVariant::Richardson)?.saturate(&irr);
    println!("Richardson (1, 5) = {}", point.minimalized());

    let report = cmd_verify_richardson(4)?;
    println!("{}", report.to_text());
    Ok(())
}
