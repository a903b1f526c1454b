//! Koszul complexes, graded homology and regular sequences.

use pluecker::complexes::is_regular_sequence;
use pluecker::io::ComplexFile;
use pluecker::{koszul_complex, Ideal, PolyRing, Rational};

fn main() -> pluecker::Result<()> {
    let r = PolyRing::<Rational>::new(&["x", "y", "z"], ())?;
    let p = |s: &str| pluecker::parse::parse_poly(s, &r);

    let regular = [p("x")?, p("y^2")?, p("z")?];
    let k = koszul_complex(&r, &regular)?;
    let window = k.default_window();
    let nonzero: Vec<_> = k.homology_table(&[1, 2, 3], window)?.into_iter().filter(|t| t.2 > 0).collect();
    println!("K(x, y^2, z): higher homology in {window:?}: {nonzero:?}");

    let not_regular = [p("x*y")?, p("x*z")?];
    let k = koszul_complex(&r, &not_regular)?;
    let nonzero: Vec<_> = k.homology_table(&[1, 2], (0, 4))?.into_iter().filter(|t| t.2 > 0).collect();
    println!("K(xy, xz): H_1 by degree: {nonzero:?}");
    println!("regular: {}", is_regular_sequence(&not_regular, &Ideal::zero(&r))?);

    println!("{}", ComplexFile::from_complex(&koszul_complex(&r, &regular[..2])?).to_json());
    Ok(())
}
