//! Random instances and checks shared by the property suites and the
//! acceptance run.

#![allow(dead_code)]

use pluecker::complexes::{is_regular_sequence, monomials_of_degree};
use pluecker::linalg::Matrix;
use pluecker::zerodim::zero_dim_radical;
use pluecker::{
    buchberger, koszul_complex, Field, Fp, GrassmannContext, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, Rational,
    Ring, RingExt,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

pub type Terms = Vec<(i64, Vec<u32>)>;

pub const VARS: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring_q(n: usize) -> Ring<Rational> {
    PolyRing::new(&VARS[..n], ()).unwrap()
}

pub fn ring_p(n: usize, p: u32) -> Ring<Fp> {
    PolyRing::new(&VARS[..n], p).unwrap()
}

pub fn build<K: Field>(ring: &Ring<K>, terms: &Terms) -> Polynomial<K> {
    ring.from_terms(
        terms
            .iter()
            .map(|(c, e)| (Monomial::from_exponents(e.clone()), K::from_i64(*c, ring.ctx())))
            .collect(),
    )
}

pub fn build_all<K: Field>(ring: &Ring<K>, gens: &[Terms]) -> Vec<Polynomial<K>> {
    gens.iter().map(|t| build(ring, t)).collect()
}

fn cap_degree(mut e: Vec<u32>, max_deg: u32) -> Vec<u32> {
    while e.iter().sum::<u32>() > max_deg {
        let i = (0..e.len()).max_by_key(|&i| e[i]).unwrap();
        e[i] -= 1;
    }
    e
}

/// Polynomial with at most `max_terms` terms of total degree `<= max_deg`.
pub fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(0..=max_deg, nvars)), 1..=max_terms)
        .prop_map(move |ts| ts.into_iter().map(|(c, e)| (c, cap_degree(e, max_deg))).collect())
}

/// Homogeneous polynomial of degree `deg`.
pub fn homogeneous(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    let mons = monomials_of_degree(&vec![1; nvars], deg);
    prop::collection::vec((-3i64..=3, any::<prop::sample::Index>()), 1..=max_terms).prop_map(move |ts| {
        ts.into_iter()
            .map(|(c, i)| (c, i.get(&mons).exponents().to_vec()))
            .collect()
    })
}

fn homogeneous_any(nvars: usize, degs: std::ops::RangeInclusive<u32>, max_terms: usize) -> impl Strategy<Value = Terms> {
    degs.prop_flat_map(move |d| homogeneous(nvars, d, max_terms))
}

// reduced GB under permutation and duplication

pub fn gb_instance() -> impl Strategy<Value = (usize, Vec<Terms>, u64)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(poly(n, 3, 4), 1..=4), any::<u64>()))
}

pub fn check_gb_permutation((n, gens, seed): (usize, Vec<Terms>, u64)) -> Result<(), String> {
    let r = ring_q(n);
    let polys = build_all(&r, &gens);
    let gb = buchberger(&r, &polys, MonomialOrder::Grevlex);
    if !gb.is_groebner() || !gb.is_reduced() {
        return Err(format!("basis of {polys:?} fails the S-pair or reducedness check"));
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut shuffled = polys.clone();
    shuffled.push(&polys[0] * &r.int(3));
    shuffled.shuffle(&mut rng);
    let other = buchberger(&r, &shuffled, MonomialOrder::Grevlex);
    if other.elements() != gb.elements() {
        return Err(format!("{:?} vs {:?}", gb.elements(), other.elements()));
    }
    Ok(())
}

// membership against linear algebra on graded pieces

pub fn membership_instance() -> impl Strategy<Value = (usize, Vec<Terms>, u32, Terms, Vec<Terms>, bool)> {
    (2usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(homogeneous_any(n, 1..=2, 3), 1..=3),
            2u32..=5,
        )
            .prop_flat_map(move |(n, gens, d)| {
                (
                    Just(n),
                    Just(gens),
                    Just(d),
                    homogeneous(n, d, 4),
                    prop::collection::vec(homogeneous_any(n, 0..=3, 3), 3),
                    any::<bool>(),
                )
            })
    })
}

/// Membership of `f` in the degree-`d` piece by Gaussian elimination.
pub fn in_graded_piece<K: Field>(ring: &Ring<K>, gens: &[Polynomial<K>], f: &Polynomial<K>, d: u32) -> bool {
    let basis = monomials_of_degree(ring.weights(), d);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let Some(e) = g.total_degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(ring.weights(), d - e) {
            let p = g.mul_term(&m, &K::one(ring.ctx()));
            rows.push(basis.iter().map(|b| p.coefficient(b)).collect::<Vec<K>>());
        }
    }
    let before = Matrix::from_rows(rows.clone(), ring.ctx()).rank();
    rows.push(basis.iter().map(|b| f.coefficient(b)).collect());
    Matrix::from_rows(rows, ring.ctx()).rank() == before
}

pub fn check_membership((n, gens, d, f, mult, combine): (usize, Vec<Terms>, u32, Terms, Vec<Terms>, bool)) -> Result<(), String> {
    let r = ring_q(n);
    let gens = build_all(&r, &gens);
    let mut f = build(&r, &f);
    if combine {
        // an element of I of degree d, plus possibly the random part
        for (g, m) in gens.iter().zip(&mult) {
            let m = build(&r, m);
            let prod = &g.clone() * &m;
            if prod.is_homogeneous() && prod.total_degree() == Some(d) {
                f = &f + &prod;
            }
        }
    }
    if !f.is_zero() && f.total_degree() != Some(d) {
        return Ok(());
    }
    let ideal = Ideal::new(&r, gens.clone());
    let expected = in_graded_piece(&r, &gens, &f, d);
    if ideal.contains(&f) != expected {
        return Err(format!("membership of {f} in {ideal}: linear algebra says {expected}"));
    }
    Ok(())
}

// saturation

pub fn saturation_instance() -> impl Strategy<Value = (Vec<Terms>, Vec<Terms>, Terms)> {
    (
        prop::collection::vec(poly(3, 3, 3), 1..=3),
        prop::collection::vec(poly(3, 2, 2), 1..=2),
        poly(3, 2, 2),
    )
}

pub fn check_saturation((i, j, extra): (Vec<Terms>, Vec<Terms>, Terms)) -> Result<(), String> {
    let r = ring_p(3, 32003);
    let i = Ideal::new(&r, build_all(&r, &i));
    let j = Ideal::new(&r, build_all(&r, &j));
    let s = i.saturate(&j);
    if !s.saturate(&j).same_ideal(&s) {
        return Err(format!("saturation of {i} by {j} is not idempotent"));
    }
    if !s.contains_ideal(&i) {
        return Err(format!("{i} is not contained in its saturation {s}"));
    }
    let bigger = i.with(&[build(&r, &extra)]);
    if !bigger.saturate(&j).contains_ideal(&s) {
        return Err(format!("saturation is not monotone for {i} ⊆ {bigger}"));
    }
    if !s.contains_ideal(&i.quotient_ideal(&j)) {
        return Err(format!("{i} : {j} is not contained in the saturation {s}"));
    }
    if let Some(f) = j.gens().first() {
        let q = i.quotient(f).map_err(|e| e.to_string())?;
        let sf = i.saturate_poly(f).map_err(|e| e.to_string())?;
        if !q.contains_ideal(&i) || !sf.contains_ideal(&q) {
            return Err(format!("I ⊆ I:f ⊆ I:f^∞ fails for f = {f}"));
        }
    }
    Ok(())
}

// Koszul homology against regular sequences

pub const KOSZUL_WINDOW: (i64, i64) = (0, 8);

pub fn koszul_instance() -> impl Strategy<Value = (usize, Vec<Terms>)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(homogeneous_any(n, 1..=2, 3), 1..=3)))
}

pub fn check_koszul((n, gens): (usize, Vec<Terms>)) -> Result<(), String> {
    let r = ring_q(n);
    let gens = build_all(&r, &gens);
    let regular = is_regular_sequence(&gens, &Ideal::zero(&r)).map_err(|e| e.to_string())?;
    let k = koszul_complex(&r, &gens).map_err(|e| e.to_string())?;
    let positions: Vec<i64> = (1..=gens.len() as i64).collect();
    let table = k.homology_table(&positions, KOSZUL_WINDOW).map_err(|e| e.to_string())?;
    let exact = table.iter().all(|t| t.2 == 0);
    if regular != exact {
        return Err(format!(
            "{gens:?}: regular = {regular}, Koszul homology vanishes in {KOSZUL_WINDOW:?} = {exact}"
        ));
    }
    Ok(())
}

// Hilbert data of monomial ideals against counting

pub fn monomial_instance() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(0u32..=6, n).prop_map(|e| cap_degree(e, 6)), 1..=5),
        )
    })
}

pub fn check_hilbert((n, gens): (usize, Vec<Vec<u32>>)) -> Result<(), String> {
    let r = ring_q(n);
    let mons: Vec<Monomial> = gens.into_iter().map(Monomial::from_exponents).collect();
    let ideal = Ideal::new(&r, mons.iter().map(|m| r.monomial(m.clone(), Rational::from_i64(1, &()))).collect());
    let h = ideal.hilbert_data().map_err(|e| e.to_string())?;
    for d in 0..=12u32 {
        let count = monomials_of_degree(&vec![1; n], d)
            .iter()
            .filter(|m| !mons.iter().any(|g| g.divides(m)))
            .count() as i64;
        if h.hilbert_function(d) != count {
            return Err(format!("{ideal}: h({d}) = {} but {count} standard monomials", h.hilbert_function(d)));
        }
    }
    Ok(())
}

// Plücker relations on maximal minors

pub const MINOR_PRIME: u32 = 32003;

/// Entries of an `m x d` matrix, one row per index.
pub fn matrix_instance(d: usize, m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..MINOR_PRIME as i64, d), m)
}

pub fn check_minors(g: &GrassmannContext<Fp>, rows: Vec<Vec<i64>>) -> Result<(), String> {
    let rows: Vec<Vec<Fp>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| Fp::new(v, MINOR_PRIME)).collect())
        .collect();
    let minors = g.minor_vector(&rows);
    match g.pluecker_relations().iter().find(|rel| !rel.evaluate(&minors).is_zero()) {
        Some(rel) => Err(format!("{rel} does not vanish on the minors of {rows:?}")),
        None => Ok(()),
    }
}

// zero-dimensional radicals over a small prime field

pub const RADICAL_PRIME: u32 = 7;

pub fn radical_instance() -> impl Strategy<Value = (usize, Vec<u32>, Vec<Terms>, Vec<Terms>)> {
    (2usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(1u32..=3, n),
            prop::collection::vec(poly(n, 2, 3), n),
            prop::collection::vec(poly(n, 3, 3), 0..=1),
        )
    })
}

pub fn check_radical((n, powers, tails, extra): (usize, Vec<u32>, Vec<Terms>, Vec<Terms>)) -> Result<(), String> {
    let r = ring_p(n, RADICAL_PRIME);
    let mut gens = Vec::new();
    for (i, (&a, tail)) in powers.iter().zip(&tails).enumerate() {
        // x_i^a plus terms of lower total degree keeps the ideal zero-dimensional
        let tail: Terms = tail.iter().filter(|(_, e)| e.iter().sum::<u32>() < a).cloned().collect();
        gens.push(&r.monomial(Monomial::var(n, i, a), Fp::new(1, RADICAL_PRIME)) + &build(&r, &tail));
    }
    gens.extend(build_all(&r, &extra));
    let ideal = Ideal::new(&r, gens);
    let rad = zero_dim_radical(&ideal).map_err(|e| e.to_string())?;
    if let Some(g) = ideal.gens().iter().find(|g| !rad.contains(g)) {
        return Err(format!("{g} is not in the computed radical {rad}"));
    }
    if let Some(g) = rad.gens().iter().find(|g| !ideal.radical_contains(g)) {
        return Err(format!("{g} from {rad} is not in the radical of {ideal}"));
    }
    let p = RADICAL_PRIME as i64;
    let total = (p as usize).pow(n as u32);
    for k in 0..total {
        let pt: Vec<Fp> = (0..n).map(|i| Fp::new((k as i64 / p.pow(i as u32)) % p, RADICAL_PRIME)).collect();
        let on_i = ideal.gens().iter().all(|g| g.evaluate(&pt).is_zero());
        let on_rad = rad.gens().iter().all(|g| g.evaluate(&pt).is_zero());
        if on_i != on_rad {
            return Err(format!("point {pt:?} separates {ideal} from its radical {rad}"));
        }
    }
    Ok(())
}
