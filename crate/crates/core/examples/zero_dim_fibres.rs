//! Degrees of X ∩ V on G(2, m) over several fields.

use pluecker::verify::cmd_verify_zero_dim;

fn main() -> pluecker::Result<()> {
    for m in 4..=6 {
        let report = cmd_verify_zero_dim(m, &[2, 3, 5])?;
        println!("{}\n", report.to_text());
    }
    Ok(())
}
