//! Frozen values of derived quantities, each checked against an oracle
//! written independently of the library routine that produces it.

use pluecker::verify::g36::g36_section;
use pluecker::verify::{cmd_verify_p2, P2Options};
use pluecker::zerodim::{chart, local_multiplicity, PointZ};
use pluecker::{Field, Fp, GrassmannContext, Ideal, Monomial, Rational, SchubertVariant};

/// Rank of an integer matrix by fraction-free elimination.
fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            let (a, b) = (rows[rank][c], rows[r][c]);
            if b == 0 {
                continue;
            }
            for k in 0..cols {
                rows[r][k] = a * rows[r][k] - b * rows[rank][k];
            }
            let g = rows[r].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
            if g > 1 {
                rows[r].iter_mut().for_each(|v| *v /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn to_int(c: &Rational) -> i128 {
    assert!(c.denom() == &1.into(), "integral coefficient expected");
    c.numer().try_into().unwrap()
}

/// Linear parts of the generators as an integer matrix.
fn linear_part_matrix(a: &Ideal<Rational>) -> Vec<Vec<i128>> {
    let n = a.ring().nvars();
    a.gens()
        .iter()
        .map(|g| (0..n).map(|j| to_int(&g.coefficient(&Monomial::var(n, j, 1)))).collect())
        .collect()
}

#[test]
fn jacobian_rank_of_the_chart_ideal() {
    for (m, rank) in [(4, 5), (5, 9), (6, 14)] {
        let g = GrassmannContext::<Rational>::new(2, m, ()).unwrap();
        let a = g.affine_chart_ideal().unwrap();
        assert_eq!(integer_rank(linear_part_matrix(&a)), rank, "m = {m}");
        assert_eq!(rank, m * (m - 1) / 2 - 1);
    }
    // single chart generator of G(2, 4), differentiated by hand
    let g = GrassmannContext::<Rational>::new(2, 4, ()).unwrap();
    let r = g.chart_ring().unwrap();
    let quad = Ideal::parse(&r, &["q23 - q12*q34 + q13*q24"]).unwrap();
    assert_eq!(linear_part_matrix(&quad), vec![vec![0, 0, 1, 0, 0]]);
}

#[test]
fn hyperplane_forms_of_g36_are_independent() {
    let g = GrassmannContext::<Rational>::new(3, 6, ()).unwrap();
    let n = g.ring().nvars();
    let rows: Vec<Vec<i128>> = g
        .g36_forms()
        .unwrap()
        .iter()
        .map(|f| (0..n).map(|j| to_int(&f.coefficient(&Monomial::var(n, j, 1)))).collect())
        .collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(integer_rank(rows), 10);
}

/// Degree of G(d, m) by the hook length formula.
fn hook_length_degree(d: usize, m: usize) -> u128 {
    let (rows, cols) = (d, m - d);
    let mut hooks: u128 = 1;
    for i in 0..rows {
        for j in 0..cols {
            hooks *= ((rows - i - 1) + (cols - j - 1) + 1) as u128;
        }
    }
    (1..=(rows * cols) as u128).product::<u128>() / hooks
}

#[test]
fn grassmannian_degrees() {
    let expected = [((2, 4), 2), ((2, 5), 5), ((2, 6), 14), ((3, 6), 42)];
    for ((d, m), deg) in expected {
        assert_eq!(hook_length_degree(d, m), deg);
        let g = GrassmannContext::<Fp>::new(d, m, 32003).unwrap();
        let h = g.pluecker_ideal().hilbert_data().unwrap();
        assert_eq!((h.proj_dim, h.degree), ((d * (m - d)) as i64, deg as i64), "G({d}, {m})");
    }
}

/// All points of `P^{n-1}(F_p)` normalised with first nonzero coordinate 1.
fn projective_space(p: u32, n: usize) -> Vec<Vec<Fp>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for k in 0..(p as u64).pow(free as u32) {
            let mut v = vec![Fp::new(0, p); n];
            v[lead] = Fp::new(1, p);
            let mut rest = k;
            for c in v.iter_mut().skip(lead + 1) {
                *c = Fp::new((rest % p as u64) as i64, p);
                rest /= p as u64;
            }
            out.push(v);
        }
    }
    out
}

/// Sum of multiplicities over the F_p-points found by enumeration, each read
/// in its own affine chart through the saturation route.
fn enumerated_multiplicity_sum(i: &Ideal<Fp>, p: u32) -> (Vec<usize>, usize) {
    let n = i.ring().nvars();
    let mut mults = Vec::new();
    for pt in projective_space(p, n) {
        if i.gens().iter().all(|g| g.evaluate(&pt).is_zero()) {
            let lead = pt.iter().position(|c| !c.is_zero()).unwrap();
            mults.push(local_multiplicity(&chart(i, lead), &PointZ::new(pt)).unwrap());
        }
    }
    let total = mults.iter().sum();
    (mults, total)
}

#[test]
fn degrees_of_the_section_scheme() {
    let cases: [(usize, u32, &[usize], i64); 5] = [
        (4, 2, &[1, 1], 2),
        (4, 3, &[1, 1], 2),
        (5, 2, &[1, 4], 5),
        (5, 3, &[1, 4], 5),
        (6, 2, &[1, 9, 4], 14),
    ];
    for (m, p, mults, degree) in cases {
        let g = GrassmannContext::<Fp>::new(2, m, p).unwrap();
        let i = g.pluecker_ideal().sum(&g.v_ideal().unwrap());
        let h = i.hilbert_data().unwrap();
        assert_eq!((h.proj_dim, h.degree), (0, degree), "m = {m} over F{p}");
        let (found, total) = enumerated_multiplicity_sum(&i, p);
        assert_eq!(found, mults, "m = {m} over F{p}");
        assert_eq!(total as i64, degree);
    }
    let q = GrassmannContext::<Rational>::new(2, 5, ()).unwrap();
    let h = q.pluecker_ideal().sum(&q.v_ideal().unwrap()).hilbert_data().unwrap();
    assert_eq!((h.proj_dim, h.degree), (0, 5));
}

#[test]
fn nine_form_sections_of_g36() {
    // multiplicities of the F101-points, in enumeration order, per omitted form
    let frozen: [(usize, &[usize]); 10] = [
        (6, &[42]),
        (7, &[42]),
        (8, &[21, 21]),
        (9, &[5, 32, 5]),
        (10, &[15, 12, 15]),
        (11, &[15, 12, 15]),
        (12, &[5, 32, 5]),
        (13, &[21, 21]),
        (14, &[42]),
        (15, &[42]),
    ];
    let g = GrassmannContext::<Fp>::new(3, 6, 101).unwrap();
    for (omitted, mults) in frozen {
        let sums: Vec<usize> = (6..=15).filter(|&s| s != omitted).collect();
        let i = g36_section(&g, &sums).unwrap();
        let h = i.hilbert_data().unwrap();
        assert_eq!((h.proj_dim, h.degree), (0, 42), "without l_{omitted}");
        let points: Vec<Vec<Fp>> = pluecker::zerodim::projective_points(&i)
            .unwrap()
            .into_iter()
            .map(|p| p.coordinates)
            .collect();
        let found: Vec<usize> = points
            .iter()
            .map(|pt| {
                let lead = pt.iter().position(|c| !c.is_zero()).unwrap();
                let inv = pt[lead].inv().unwrap();
                let normal = PointZ::new(pt.iter().map(|c| c.mul(&inv)).collect());
                local_multiplicity(&chart(&i, lead), &normal).unwrap()
            })
            .collect();
        assert_eq!(found, mults, "without l_{omitted}");
        assert_eq!(found.iter().sum::<usize>(), 42);
        assert!(found.iter().all(|&k| k >= 2));
    }
}

#[test]
fn richardson_point_is_a_coordinate_point() {
    let g = GrassmannContext::<Rational>::new(2, 4, ()).unwrap();
    let r = g.schubert_ideal((1, 4), SchubertVariant::Richardson).unwrap();
    let by_hand = Ideal::parse(g.ring(), &["p12", "p13", "p23", "p24", "p34"]).unwrap();
    assert!(r.saturate(&Ideal::irrelevant(g.ring())).same_ideal(&by_hand));
}

#[test]
fn wider_homology_window_keeps_the_verdict() {
    let narrow = cmd_verify_p2(&P2Options::default());
    let wide = cmd_verify_p2(&P2Options {
        window: Some((1, 12)),
        perturb: false,
    });
    assert!(narrow.pass && wide.pass);
    assert_eq!(narrow.claims.len(), wide.claims.len());
}
