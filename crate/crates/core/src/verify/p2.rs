use std::collections::BTreeMap;

use crate::complexes::{koszul_complex, ChainMap, FreeComplex, FreeModule, PolyMatrix};
use crate::error::Result;
use crate::field::Rational;
use crate::ideal::Ideal;
use crate::poly::{PolyRing, Polynomial, Ring, RingExt};

use super::report::{Claim, Source, VerificationReport};

#[derive(Debug, Clone, Default)]
pub struct P2Options {
    /// Internal degrees `lo..=hi` for homology vanishing; default `1..=6`.
    pub window: Option<(i64, i64)>,
    /// Flip the sign of one projection entry, which must break commutativity.
    pub perturb: bool,
}

/// The two rows and the vertical maps of the projective plane example.
pub struct P2Diagram {
    pub ring: Ring<Rational>,
    /// Koszul complex on `x1, x2, x3`, positions 0..=3.
    pub top: FreeComplex<Rational>,
    /// Koszul complex on `x1, x2` twisted by -1, positions 0..=2.
    pub bottom: FreeComplex<Rational>,
    /// `bottom` followed by `O(-1) -> O_Z`, i.e. multiplication by `x3` modulo `(x1, x2)`.
    pub bottom_augmented: FreeComplex<Rational>,
    /// Projections `top_i -> bottom_{i-1}`.
    pub projection: ChainMap<Rational>,
    /// `projection` together with the canonical map `O_X -> O_Z`.
    pub augmented: ChainMap<Rational>,
    /// The ideal `(x1, x2)` of the point `Z`.
    pub point: Ideal<Rational>,
}

fn int_matrix(ring: &Ring<Rational>, rows: &[&[i64]]) -> PolyMatrix<Rational> {
    rows.iter().map(|r| r.iter().map(|&v| ring.int(v)).collect()).collect()
}

pub fn p2_diagram(perturb: bool) -> Result<P2Diagram> {
    let ring = PolyRing::<Rational>::new(&["x1", "x2", "x3"], ())?;
    let x: Vec<Polynomial<Rational>> = ring.vars();
    let top = koszul_complex(&ring, &x)?;
    let bottom = koszul_complex(&ring, &x[..2])?.twisted(-1);
    let bottom_augmented = bottom.augmented(FreeModule::new(vec![0]), vec![vec![x[2].clone()]])?;

    let sign = if perturb { -1 } else { 1 };
    let mut maps = BTreeMap::new();
    maps.insert(3, int_matrix(&ring, &[&[1]]));
    maps.insert(2, int_matrix(&ring, &[&[1, 0, 0], &[0, sign, 0]]));
    maps.insert(1, int_matrix(&ring, &[&[1, 0, 0]]));
    let projection = ChainMap::new(top.clone(), bottom.clone(), -1, maps.clone())?;
    maps.insert(0, int_matrix(&ring, &[&[1]]));
    let augmented = ChainMap::new(top.clone(), bottom_augmented.clone(), -1, maps)?;
    let point = Ideal::new(&ring, vec![x[0].clone(), x[1].clone()]);
    Ok(P2Diagram {
        ring,
        top,
        bottom,
        bottom_augmented,
        projection,
        augmented,
        point,
    })
}

pub fn matrix_string(m: &PolyMatrix<Rational>) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn vanishing_claims(name: &str, c: &FreeComplex<Rational>, positions: &[i64], window: (i64, i64), out: &mut Vec<Claim>) {
    match c.homology_table(positions, window) {
        Ok(table) => {
            let bad = table.iter().find(|(_, _, h)| *h != 0);
            let positions = positions.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            out.push(Claim::holds(
                format!("{name}: H_i vanishes for i in {{{positions}}}, degrees {}..{}", window.0, window.1),
                Some("Q"),
                bad.is_none(),
                Source::Derived,
                bad.map(|(p, d, h)| format!("dim H_{p} in degree {d} is {h}")),
            ));
        }
        Err(e) => out.push(Claim::error(format!("{name}: homology"), Some("Q"), e, Source::Derived)),
    }
}

pub fn cmd_verify_p2(opts: &P2Options) -> VerificationReport {
    let window = opts.window.unwrap_or((1, 6));
    let mut report = VerificationReport::new("p2");
    report.param("degree_window", [window.0, window.1]);
    report.param("perturb", opts.perturb);
    let diagram = match p2_diagram(opts.perturb) {
        Ok(d) => d,
        Err(e) => {
            report.push(Claim::error("build the diagram", Some("Q"), e, Source::Published));
            return report;
        }
    };
    let q = Some("Q");

    let literal = [
        ("top row d_1 = [x3 x2 x1]", &diagram.top, 1, "[[x3, x2, x1]]"),
        ("top row d_2", &diagram.top, 2, "[[x2, x1, 0], [-x3, 0, x1], [0, -x3, -x2]]"),
        ("top row d_3", &diagram.top, 3, "[[x1], [-x2], [x3]]"),
        ("bottom row d_1 = [x2 x1]", &diagram.bottom, 1, "[[x2, x1]]"),
        ("bottom row d_2", &diagram.bottom, 2, "[[x1], [-x2]]"),
    ];
    for (name, c, pos, expected) in literal {
        let computed = c.differential(pos).map(matrix_string).unwrap_or_default();
        report.push(Claim::equal(name, q, expected, computed, Source::Published));
    }
    let twists = |c: &FreeComplex<Rational>| {
        c.modules().iter().map(|m| format!("{:?}", m.twists)).collect::<Vec<_>>().join(" ")
    };
    report.push(Claim::equal("top row twists", q, "[0] [-1, -1, -1] [-2, -2, -2] [-3]", twists(&diagram.top), Source::Published));
    report.push(Claim::equal("bottom row twists", q, "[-1] [-2, -2] [-3]", twists(&diagram.bottom), Source::Published));

    for (name, c) in [("top row", &diagram.top), ("bottom row", &diagram.bottom)] {
        let bad = c.first_nonzero_square();
        report.push(Claim::holds(
            format!("{name} is a complex (d^2 = 0)"),
            q,
            bad.is_none(),
            Source::Trivial,
            bad.map(|(i, e)| format!("d_{} d_{i} has entry {e}", i - 1)),
        ));
    }
    report.push(Claim::holds(
        "bottom row followed by O(-1) -> O_Z is a complex modulo (x1, x2)",
        q,
        diagram.bottom_augmented.is_complex_modulo(&diagram.point),
        Source::Trivial,
        None,
    ));

    let mut claims = Vec::new();
    vanishing_claims("top row", &diagram.top, &[1, 2, 3], window, &mut claims);
    vanishing_claims("bottom row", &diagram.bottom, &[1, 2], window, &mut claims);
    report.extend(claims);

    let fail = diagram.projection.first_failure(None);
    report.push(Claim::holds(
        "projection squares commute",
        q,
        fail.is_none(),
        Source::Published,
        fail.map(|(i, r, c, e)| format!("square leaving position {i}, entry ({r}, {c}): {e}")),
    ));
    let fail = diagram.augmented.first_failure(Some(&diagram.point));
    report.push(Claim::holds(
        "all squares commute, the last one modulo (x1, x2) through the canonical map O_X -> O_Z",
        q,
        fail.is_none(),
        Source::Published,
        fail.map(|(i, r, c, e)| format!("square leaving position {i}, entry ({r}, {c}): {e}")),
    ));
    report
}
