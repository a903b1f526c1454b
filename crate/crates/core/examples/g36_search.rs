//! Every nine-form section of G(3, 6) is non-reduced.

use pluecker::verify::cmd_search_g36;

fn main() -> pluecker::Result<()> {
    let prime = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(101);
    let report = cmd_search_g36(prime, true)?;
    println!("{}", report.to_text());
    Ok(())
}
