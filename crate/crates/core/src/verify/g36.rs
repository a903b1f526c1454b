use std::time::Instant;

use crate::complexes::is_regular_sequence;
use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Fp};
use crate::grassmann::GrassmannContext;
use crate::ideal::Ideal;
use crate::poly::{PolyRing, RingExt};
use crate::zerodim::{all_projective_components_nonreduced, projective_multiplicity, projective_points, projective_radical_degree};

use super::report::{Claim, Source, VerificationReport};

/// The section of `G(3, 6)` cut by the forms `l_s`, `s ∈ sums`, with the
/// lex-last coordinate of each form eliminated by substitution.
pub fn g36_section<K: Field>(g: &GrassmannContext<K>, sums: &[usize]) -> Result<Ideal<K>> {
    let tuples = g.tuples();
    let last_of = |s: usize| tuples.iter().rposition(|t| t.iter().sum::<usize>() == s);
    let mut eliminated = vec![false; tuples.len()];
    for &s in sums {
        let k = last_of(s).ok_or_else(|| Error::InvalidArgument(format!("no coordinate of index sum {s}")))?;
        eliminated[k] = true;
    }
    let kept: Vec<String> = (0..tuples.len())
        .filter(|&k| !eliminated[k])
        .map(|k| g.ring().var_names()[k].clone())
        .collect();
    let target = PolyRing::new(&kept, g.ring().ctx().clone())?;
    let mut position = vec![None; tuples.len()];
    for (j, k) in (0..tuples.len()).filter(|&k| !eliminated[k]).enumerate() {
        position[k] = Some(j);
    }
    let images = (0..tuples.len())
        .map(|k| match position[k] {
            Some(j) => target.var(j),
            None => {
                let s: usize = tuples[k].iter().sum();
                (0..tuples.len())
                    .filter(|&o| o != k && tuples[o].iter().sum::<usize>() == s)
                    .fold(target.zero(), |acc, o| &acc - &target.var(position[o].expect("one coordinate per form")))
            }
        })
        .collect::<Vec<_>>();
    g.pluecker_ideal().map(&target, &images)
}

fn subset_claims(g: &GrassmannContext<Fp>, omitted: usize, grass_degree: i64, label: &str) -> Result<Vec<Claim>> {
    let f = Some(label);
    let sums: Vec<usize> = (6..=15).filter(|&s| s != omitted).collect();
    let i = g36_section(g, &sums)?;
    let tag = format!("without l_{omitted}");
    let h = i.hilbert_data()?;
    let mut out = vec![
        Claim::equal(format!("{tag}: projective dimension"), f, 0, h.proj_dim, Source::Published),
        Claim::equal(format!("{tag}: degree equals deg G(3, 6)"), f, grass_degree, h.degree, Source::Derived),
    ];
    let radical = projective_radical_degree(&i)?;
    out.push(Claim::verdict(
        format!("{tag}: degree exceeds the degree of the radical"),
        f,
        format!("> {radical}"),
        h.degree,
        h.degree > radical as i64,
        Source::Published,
        None,
    ));
    let points = projective_points(&i)?;
    let mults = points.iter().map(|p| projective_multiplicity(&i, p)).collect::<Result<Vec<_>>>()?;
    let reduced = points.iter().zip(&mults).find(|(_, &m)| m < 2);
    out.push(Claim::verdict(
        format!("{tag}: every rational point has multiplicity at least 2"),
        f,
        ">= 2",
        format!("{} point(s), multiplicities [{}]", points.len(), mults.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")),
        reduced.is_none(),
        Source::Published,
        reduced.map(|(p, m)| format!("{p} has multiplicity {m}")),
    ));
    out.push(Claim::holds(
        format!("{tag}: no component is reduced ((I : rad I) ⊆ rad I in every chart)"),
        f,
        all_projective_components_nonreduced(&i)?,
        Source::Published,
        None,
    ));
    Ok(out)
}

/// Non-reducedness of every nine-form section of `G(3, 6)` over `F_p`.
pub fn cmd_search_g36(prime: u32, timings: bool) -> Result<VerificationReport> {
    let grass = GrassmannContext::<Fp>::new(3, 6, prime)?;
    let grass_degree = grass.pluecker_ideal().hilbert_data()?.degree;
    if !is_prime(prime as u64) {
        return Err(Error::NotPrime(prime as u64));
    }
    if prime as i64 <= grass_degree {
        return Err(Error::InvalidArgument(format!(
            "the prime must exceed the expected degree {grass_degree}, got {prime}"
        )));
    }
    let label = format!("F{prime}");
    let f = Some(label.as_str());
    let mut report = VerificationReport::new("g36");
    report.param("prime", prime);
    report.param("forms", "l_6..l_15");
    report.push(Claim::equal("degree of G(3, 6)", f, 42, grass_degree, Source::Derived));

    let forms = grass.g36_forms()?;
    report.push(Claim::holds(
        "l_6, ..., l_15 form a regular sequence on G(3, 6)",
        f,
        is_regular_sequence(&forms, &grass.pluecker_ideal())?,
        Source::Published,
        None,
    ));

    use rayon::prelude::*;
    let results: Vec<(usize, Result<Vec<Claim>>, u64)> = (6..=15usize)
        .into_par_iter()
        .map(|omitted| {
            let start = Instant::now();
            let r = subset_claims(&grass, omitted, grass_degree, &label);
            (omitted, r, start.elapsed().as_millis() as u64)
        })
        .collect();
    for (omitted, r, ms) in results {
        match r {
            Ok(c) => report.extend(c),
            Err(e) => report.push(Claim::error(format!("without l_{omitted}"), f, e, Source::Published)),
        }
        if timings {
            report.timing(&format!("without_l{omitted}"), ms);
        }
    }
    Ok(report)
}
