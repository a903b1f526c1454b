//! Plücker relations, hyperplane forms and maximal minors.

use pluecker::{Field, Fp, GrassmannContext, Rational};

fn main() -> pluecker::Result<()> {
    let g = GrassmannContext::<Rational>::new(2, 5, ())?;
    println!("G(2, 5) relations:");
    for rel in g.pluecker_relations() {
        println!("  {rel}");
    }
    for s in g.v_indices()? {
        println!("l{s} = {}", g.hyperplane_form(s)?);
    }

    let g36 = GrassmannContext::<Fp>::new(3, 6, 32003)?;
    println!("G(3, 6): {} independent quadrics", g36.pluecker_relations().len());
    let rows: Vec<Vec<Fp>> = (0..6)
        .map(|i| (0..3).map(|j| Fp::new((i * 7 + j * j + 1) as i64, 32003)).collect())
        .collect();
    let minors = g36.minor_vector(&rows);
    let vanish = g36.pluecker_relations().iter().all(|r| r.evaluate(&minors).is_zero());
    println!("maximal minors of a 6 x 3 matrix satisfy every relation: {vanish}");
    Ok(())
}
