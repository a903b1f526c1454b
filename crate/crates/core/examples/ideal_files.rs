//! Reading ideal files and dispatching on their coefficient field.

use pluecker::io::{IdealFile, IdealTask};
use pluecker::{Field, Ideal};

struct Summary;

impl IdealTask for Summary {
    type Output = String;

    fn run<K: Field>(&self, ideal: Ideal<K>) -> pluecker::Result<String> {
        let h = ideal.hilbert_data()?;
        Ok(format!(
            "{} generators over {}, projDim {}, degree {}",
            ideal.gens().len(),
            ideal.ring().domain(),
            h.proj_dim,
            h.degree
        ))
    }
}

fn main() -> pluecker::Result<()> {
    for text in [
        "# rational normal curve\nring: x, y, z, w over Q\nx*z - y^2, y*w - z^2, x*w - y*z\n",
        "ring: x, y, z over F2\nx^2 + y^2 + z^2\n",
    ] {
        let file = IdealFile::parse(text)?;
        println!("{}", file.dispatch(&Summary)?);
    }
    Ok(())
}
