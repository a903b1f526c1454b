//! The Koszul diagram on P^2: differentials, homology and the chain map.

use pluecker::verify::p2::{matrix_string, p2_diagram};
use pluecker::verify::{cmd_verify_p2, P2Options};

fn main() -> pluecker::Result<()> {
    let diagram = p2_diagram(false)?;
    for pos in 1..=3 {
        println!("top d{pos} = {}", matrix_string(diagram.top.differential(pos).unwrap()));
    }
    for pos in 1..=2 {
        println!("bottom d{pos} = {}", matrix_string(diagram.bottom.differential(pos).unwrap()));
    }
    let report = cmd_verify_p2(&P2Options::default());
    println!("{}", report.to_text());
    Ok(())
}
