use crate::complexes::is_regular_sequence;
use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::grassmann::{GrassmannContext, SchubertVariant};
use crate::ideal::Ideal;
use crate::linalg::{evaluate_matrix, matrix_rank};
use crate::poly::{jacobian, Polynomial};
use crate::zerodim::{local_multiplicity, projective_multiplicity, projective_points, projective_radical_degree, scan_projective_points, PointZ};

use super::fields::{over_fields, run_on, FieldSpec, FieldTask};
use super::report::{Claim, Source, VerificationReport};

/// First generator of either ideal missing from the other.
pub fn ideal_difference<K: Field>(a: &Ideal<K>, b: &Ideal<K>) -> Option<String> {
    if let Some(g) = a.gens().iter().find(|g| !b.contains(g)) {
        return Some(g.to_string());
    }
    b.gens().iter().find(|g| !a.contains(g)).map(|g| g.to_string())
}

fn equal_ideals<K: Field>(claim: &str, field: &str, expected: &Ideal<K>, computed: &Ideal<K>, source: Source) -> Claim {
    let diff = ideal_difference(expected, computed);
    Claim::verdict(claim, Some(field), expected.minimalized(), computed.minimalized(), diff.is_none(), source, diff)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
}

fn guard(what: &str, label: &str, source: Source, f: impl FnOnce() -> Result<Vec<Claim>>) -> Vec<Claim> {
    f().unwrap_or_else(|e| vec![Claim::error(what, Some(label), e, source)])
}

fn forms_label(k: usize, hi: usize) -> String {
    if k == hi {
        format!("(l_{k})")
    } else {
        format!("(l_{k}..l_{hi})")
    }
}

fn binomial2(m: usize) -> usize {
    m * (m - 1) / 2
}

struct TwoPoints;

impl FieldTask for TwoPoints {
    type Output = Vec<Claim>;

    fn run<K: Field>(&self, ctx: K::Ctx, label: &str) -> Vec<Claim> {
        guard("two-points computation", label, Source::Published, || two_points_over::<K>(ctx, label))
    }
}

fn two_points_over<K: Field>(ctx: K::Ctx, label: &str) -> Result<Vec<Claim>> {
    let f = Some(label);
    let g = GrassmannContext::<K>::new(2, 4, ctx)?;
    let ring = g.ring();
    let ix = g.pluecker_ideal();
    let v = g.v_forms()?;
    let i = ix.with(&v);
    let mut out = Vec::new();

    out.push(Claim::holds(
        "l3, l4, l6, l7 form a regular sequence on the Plücker quotient",
        f,
        is_regular_sequence(&v, &ix)?,
        Source::Published,
        None,
    ));
    let sat = i.saturate(&Ideal::irrelevant(ring));
    let expected = Ideal::parse(ring, &["p12", "p13", "p24", "p34", "p14*p23"])?;
    out.push(equal_ideals(
        "saturation of Plücker + (l3, l4, l6, l7) by the irrelevant ideal",
        label,
        &expected,
        &sat,
        Source::Published,
    ));
    let h = sat.hilbert_data()?;
    out.push(Claim::equal("projective dimension", f, 0, h.proj_dim, Source::Published));
    out.push(Claim::equal("degree", f, 2, h.degree, Source::Published));

    let points = projective_points(&sat)?;
    let p1 = PointZ::new(g.coordinate_point(&[1, 4]));
    let p2 = PointZ::new(g.coordinate_point(&[2, 3]));
    out.push(Claim::equal(
        "rational points P1 = e14, P2 = e23",
        f,
        join(&[&p1, &p2]),
        join(&points),
        Source::Published,
    ));
    out.push(Claim::equal(
        "number of geometric points",
        f,
        2,
        projective_radical_degree(&sat)?,
        Source::Published,
    ));
    let mults = points.iter().map(|p| projective_multiplicity(&i, p)).collect::<Result<Vec<_>>>()?;
    out.push(Claim::equal("multiplicities of P1, P2", f, "1, 1", join(&mults), Source::Published));
    out.push(Claim::equal(
        "degree equals the sum of local multiplicities",
        f,
        h.degree,
        mults.iter().sum::<usize>(),
        Source::Derived,
    ));

    let i1 = p1.projective_ideal(ring);
    let i2 = p2.projective_ideal(ring);
    out.push(equal_ideals("τ sends the ideal of P1 to the ideal of P2", label, &i2, &g.tau_ideal(&i1)?, Source::Published));
    out.push(equal_ideals("τ sends the ideal of P2 to the ideal of P1", label, &i1, &g.tau_ideal(&i2)?, Source::Published));
    out.push(equal_ideals("τ preserves the Plücker ideal", label, &ix, &g.tau_ideal(&ix)?, Source::Derived));
    let v_ideal = g.v_ideal()?;
    out.push(equal_ideals("τ preserves (l3, l4, l6, l7)", label, &v_ideal, &g.tau_ideal(&v_ideal)?, Source::Derived));
    Ok(out)
}

/// Two-point scheme `X ∩ V` on `G(2, 4)` over `Q` and the given primes.
pub fn cmd_verify_two_points(primes: &[u32]) -> VerificationReport {
    let mut report = VerificationReport::new("two-points");
    report.param("fields", FieldSpec::rationals_and(primes).iter().map(|f| f.label()).collect::<Vec<_>>());
    for claims in over_fields(&TwoPoints, &FieldSpec::rationals_and(primes)) {
        report.extend(claims);
    }
    report
}

struct Section {
    m: usize,
    multiplicity: bool,
}

impl FieldTask for Section {
    type Output = Vec<Claim>;

    fn run<K: Field>(&self, ctx: K::Ctx, label: &str) -> Vec<Claim> {
        guard("section computation", label, Source::Published, || section_over::<K>(ctx, label, self.m, self.multiplicity))
    }
}

fn section_over<K: Field>(ctx: K::Ctx, label: &str, m: usize, multiplicity: bool) -> Result<Vec<Claim>> {
    let f = Some(label);
    let g = GrassmannContext::<K>::new(2, m, ctx)?;
    let a = g.affine_chart_ideal()?;
    let chart = a.ring();
    let mut out = Vec::new();

    let maximal = Ideal::irrelevant(chart);
    let outside = a.gens().iter().find(|p| !maximal.contains(p));
    out.push(Claim::holds(
        "the chart ideal lies in the maximal ideal of the origin",
        f,
        outside.is_none(),
        Source::Published,
        outside.map(|p| p.to_string()),
    ));

    let vars: Vec<usize> = (0..chart.nvars()).collect();
    let origin = vec![K::zero(chart.ctx()); chart.nvars()];
    let jac = evaluate_matrix(&jacobian(a.gens(), &vars), &origin);
    let rank = matrix_rank(&jac)?;
    out.push(Claim::equal(
        format!("Jacobian rank at the origin equals N = C({m}, 2) - 1"),
        f,
        binomial2(m) - 1,
        rank,
        Source::Derived,
    ));
    let one = K::one(chart.ctx());
    let minus_one = one.neg();
    let no_unit = vars.iter().find(|&&j| {
        !jac.iter().any(|row| row[j].constant_value().is_some_and(|c| c == one || c == minus_one))
    });
    out.push(Claim::holds(
        "every chart variable has coefficient ±1 in the linear part of some generator",
        f,
        no_unit.is_none(),
        Source::Published,
        no_unit.map(|&j| chart.var_names()[j].clone()),
    ));
    if multiplicity {
        let pt = PointZ::new(origin.clone());
        out.push(Claim::equal(
            "local multiplicity of the origin",
            f,
            1,
            local_multiplicity(&a, &pt)?,
            Source::Published,
        ));
    }
    Ok(out)
}

pub const SECTION_MAX_M: usize = 6;

/// Reduced section of `X ∩ V` at `e_{1m}` via the Jacobian of the chart ideal.
pub fn cmd_verify_section(m: usize, primes: &[u32], max_m: usize) -> Result<VerificationReport> {
    if m < 4 || m > max_m {
        return Err(Error::InvalidArgument(format!("m = {m} is outside 4..={max_m}")));
    }
    let mut report = VerificationReport::new("section");
    report.param("m", m);
    report.param("fields", FieldSpec::rationals_and(primes).iter().map(|f| f.label()).collect::<Vec<_>>());
    let q = run_on(&Section { m, multiplicity: true }, FieldSpec::Rationals);
    report.extend(q);
    let fields: Vec<FieldSpec> = primes.iter().map(|&p| FieldSpec::Prime(p)).collect();
    for claims in over_fields(&Section { m, multiplicity: false }, &fields) {
        report.extend(claims);
    }
    Ok(report)
}

struct ZeroDim {
    m: usize,
}

impl FieldTask for ZeroDim {
    type Output = (Vec<Claim>, Option<i64>);

    fn run<K: Field>(&self, ctx: K::Ctx, label: &str) -> Self::Output {
        match zero_dim_over::<K>(ctx, label, self.m) {
            Ok(r) => r,
            Err(e) => (vec![Claim::error("zero-dimensionality computation", Some(label), e, Source::Published)], None),
        }
    }
}

fn zero_dim_over<K: Field>(ctx: K::Ctx, label: &str, m: usize) -> Result<(Vec<Claim>, Option<i64>)> {
    let f = Some(label);
    let g = GrassmannContext::<K>::new(2, m, ctx)?;
    let i = g.pluecker_ideal().sum(&g.v_ideal()?);
    let h = i.hilbert_data()?;
    let mut out = vec![Claim::equal("projective dimension of X ∩ V", f, 0, h.proj_dim, Source::Published)];
    let points = projective_points(&i)?;
    let mults = points.iter().map(|p| projective_multiplicity(&i, p)).collect::<Result<Vec<_>>>()?;
    let total: usize = mults.iter().sum();
    out.push(Claim::verdict(
        "degree equals the multiplicity sum over rational points",
        f,
        h.degree,
        format!("{total} ({})", join(&mults)),
        total as i64 == h.degree,
        Source::Derived,
        None,
    ));
    Ok((out, Some(h.degree)))
}

/// Largest `p^n` for which the zero-dim check enumerates projective space.
pub const ENUMERATION_LIMIT: u64 = 20_000_000;

fn enumeration_claim(m: usize, p: u32) -> Result<Option<Claim>> {
    let g = GrassmannContext::<Fp>::new(2, m, p)?;
    let n = g.ring().nvars();
    if (p as u64).checked_pow(n as u32).is_none_or(|size| size > ENUMERATION_LIMIT) {
        return Ok(None);
    }
    let i = g.pluecker_ideal().sum(&g.v_ideal()?);
    let found = projective_points(&i)?;
    let gens = i.gens().to_vec();
    let (count, _) = scan_projective_points(p, n, |pt| all_vanish(&gens, pt));
    let (missed, witness) = scan_projective_points(p, n, |pt| {
        all_vanish(&gens, pt) && !found.iter().any(|q| same_projective_point(&q.coordinates, pt))
    });
    Ok(Some(Claim::verdict(
        format!("exhaustive enumeration of F{p}-points of X ∩ V matches the algebraic point list"),
        Some(&format!("F{p}")),
        found.len(),
        count,
        count == found.len() as u64 && missed == 0,
        Source::Derived,
        witness.map(|w| w.to_string()),
    )))
}

fn same_projective_point(a: &[Fp], b: &[Fp]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i].mul(&b[j]) == a[j].mul(&b[i])))
}

/// Zero-dimensionality and degree of `X ∩ V` over `Q` and each prime.
pub fn cmd_verify_zero_dim(m: usize, primes: &[u32]) -> Result<VerificationReport> {
    if !(4..=6).contains(&m) {
        return Err(Error::InvalidArgument(format!("m = {m} is outside 4..=6")));
    }
    let fields = FieldSpec::rationals_and(primes);
    let mut report = VerificationReport::new("zero-dim");
    report.param("m", m);
    report.param("fields", fields.iter().map(|f| f.label()).collect::<Vec<_>>());
    let results = over_fields(&ZeroDim { m }, &fields);
    let mut degrees = Vec::new();
    for ((claims, degree), field) in results.into_iter().zip(&fields) {
        report.extend(claims);
        degrees.push((field.label(), degree));
    }
    let shown = degrees
        .iter()
        .map(|(f, d)| format!("{f}: {}", d.map_or("?".into(), |d| d.to_string())))
        .collect::<Vec<_>>()
        .join(", ");
    let first = degrees.first().and_then(|(_, d)| *d);
    let constant = first.is_some() && degrees.iter().all(|(_, d)| *d == first);
    report.push(Claim::verdict(
        "degree is the same over every field (flatness evidence)",
        None,
        "equal degrees",
        &shown,
        constant,
        Source::Derived,
        None,
    ));
    for &p in primes {
        match enumeration_claim(m, p) {
            Ok(Some(c)) => report.push(c),
            Ok(None) => report.note(format!("F{p}: projective space too large for exhaustive enumeration")),
            Err(e) => report.push(Claim::error("exhaustive enumeration", Some(&format!("F{p}")), e, Source::Derived)),
        }
    }
    if m == 4 {
        report.push(Claim::equal("common degree", None, 2, first.map_or("?".into(), |d| d.to_string()), Source::Published));
    } else if let Some(d) = first {
        report.note(format!("degree {d} for m = {m} is computed here; no published value exists"));
    }
    Ok(report)
}

struct Richardson {
    m: usize,
}

impl FieldTask for Richardson {
    type Output = Vec<Claim>;

    fn run<K: Field>(&self, ctx: K::Ctx, label: &str) -> Vec<Claim> {
        guard("Richardson computation", label, Source::Published, || richardson_over::<K>(ctx, label, self.m))
    }
}

type Labelled<K> = Vec<((usize, usize), Ideal<K>)>;

/// `I_X + (l_k, …, l_{2m-1})` and the Schubert ideals of dimension `k - 4`.
pub fn schubert_section<K: Field>(g: &GrassmannContext<K>, k: usize) -> Result<(Ideal<K>, Labelled<K>)> {
    let forms = (k..=2 * g.m() - 1).map(|s| g.hyperplane_form(s)).collect::<Result<Vec<_>>>()?;
    let ik = g.pluecker_ideal().with(&forms);
    let ys = g
        .schubert_pairs_of_dim(k - 4)
        .into_iter()
        .map(|p| g.schubert_ideal(p, SchubertVariant::Standard).map(|y| (p, y)))
        .collect::<Result<Vec<_>>>()?;
    Ok((ik, ys))
}

fn y_names(ys: &[((usize, usize), impl Sized)]) -> String {
    ys.iter().map(|((i, j), _)| format!("Y_{{{i},{j}}}")).collect::<Vec<_>>().join(" ∪ ")
}

fn richardson_over<K: Field>(ctx: K::Ctx, label: &str, m: usize) -> Result<Vec<Claim>> {
    let f = Some(label);
    let g = GrassmannContext::<K>::new(2, m, ctx)?;
    let ring = g.ring();
    let mut out = Vec::new();
    for k in (m + 2..=2 * m - 1).rev() {
        let (ik, ys) = schubert_section(&g, k)?;
        let names = y_names(&ys);
        let source = if k == 2 * m - 1 { Source::Published } else { Source::Derived };
        // V(Y) ⊆ V(I_k) for each Y, and the product of the Y ideals lies in rad(I_k)
        let not_contained = ys
            .iter()
            .find_map(|((i, j), y)| ik.gens().iter().find(|p| !y.contains(p)).map(|p| format!("{p} not in Y_{{{i},{j}}}")));
        let product = ys.iter().skip(1).fold(ys[0].1.clone(), |acc, (_, y)| acc.product(y));
        let outside = product.gens().iter().find(|p| !ik.radical_contains(p));
        let ok = not_contained.is_none() && outside.is_none();
        out.push(Claim::verdict(
            format!("k = {k}: V(I_X + {}) = {names}", forms_label(k, 2 * m - 1)),
            f,
            "both radical containments",
            if ok { "both radical containments".to_string() } else { "containment fails".to_string() },
            ok,
            source,
            not_contained.or(outside.map(|p| format!("{p} not in the radical"))),
        ));
        if m == 4 {
            let sat = ik.saturate(&Ideal::irrelevant(ring));
            let union = ys.iter().skip(1).fold(ys[0].1.clone(), |acc, (_, y)| acc.intersect(y));
            out.push(equal_ideals(
                &format!("k = {k}: saturated ideal equals the ideal of {names}"),
                label,
                &union,
                &sat,
                source,
            ));
        }
    }

    // components of X ∩ V against the Richardson points
    let xv = g.pluecker_ideal().sum(&g.v_ideal()?);
    let points = projective_points(&xv)?;
    let geometric = projective_radical_degree(&xv)?;
    let half = m / 2;
    let mut expected = Vec::new();
    for k in 1..=half {
        let pair = (k, m + 1 - k);
        let r = g.schubert_ideal(pair, SchubertVariant::Richardson)?.saturate(&Ideal::irrelevant(ring));
        let pt = PointZ::new(g.coordinate_point(&[pair.0, pair.1]));
        let diff = ideal_difference(&pt.projective_ideal(ring), &r);
        out.push(Claim::verdict(
            format!("Richardson variety Y^{{{k},{}}}_{{{k},{}}} is the point e{k}{}", m + 1 - k, m + 1 - k, m + 1 - k),
            f,
            pt.to_string(),
            r.minimalized(),
            diff.is_none(),
            Source::Derived,
            diff,
        ));
        expected.push(pt);
    }
    out.push(Claim::verdict(
        format!("X ∩ V is supported on the Richardson points for 1 <= k <= {half}"),
        f,
        format!("{} geometric points: {}", expected.len(), join(&expected)),
        format!("{geometric} geometric points: {}", join(&points)),
        geometric == expected.len() && points == expected,
        Source::Derived,
        points.iter().find(|p| !expected.contains(p)).map(|p| p.to_string()),
    ));
    Ok(out)
}

fn all_vanish(polys: &[Polynomial<Fp>], pt: &[Fp]) -> bool {
    polys.iter().all(|p| p.evaluate(pt).is_zero())
}

fn exhaustive_claims(m: usize, p: u32) -> Result<Vec<Claim>> {
    let g = GrassmannContext::<Fp>::new(2, m, p)?;
    let label = format!("F{p}");
    let mut out = Vec::new();
    for k in (m + 2..=2 * m - 1).rev() {
        let (ik, ys) = schubert_section(&g, k)?;
        let lhs = ik.gens().to_vec();
        let rhs: Vec<Vec<Polynomial<Fp>>> = ys.iter().map(|(_, y)| y.gens().to_vec()).collect();
        let n = g.ring().nvars();
        let (count, _) = scan_projective_points(p, n, |pt| all_vanish(&lhs, pt));
        let (bad, witness) = scan_projective_points(p, n, |pt| all_vanish(&lhs, pt) != rhs.iter().any(|y| all_vanish(y, pt)));
        out.push(Claim::verdict(
            format!(
                "k = {k}: exhaustive F{p} points of V(I_X + {}) and {} agree",
                forms_label(k, 2 * m - 1),
                y_names(&ys)
            ),
            Some(&label),
            "0 mismatches",
            format!("{bad} mismatches among {count} points"),
            bad == 0,
            Source::Derived,
            witness.map(|w| w.to_string()),
        ));
    }
    Ok(out)
}

/// Schubert decomposition of the sections `X ∩ (l_k, …, l_{2m-1})`.
pub fn cmd_verify_richardson(m: usize) -> Result<VerificationReport> {
    if !(4..=5).contains(&m) {
        return Err(Error::InvalidArgument(format!("m = {m} is outside 4..=5")));
    }
    let fields = [FieldSpec::Rationals, FieldSpec::Prime(5)];
    let mut report = VerificationReport::new("richardson");
    report.param("m", m);
    report.param("fields", fields.iter().map(|f| f.label()).collect::<Vec<_>>());
    for claims in over_fields(&Richardson { m }, &fields) {
        report.extend(claims);
    }
    match exhaustive_claims(m, 5) {
        Ok(c) => report.extend(c),
        Err(e) => report.push(Claim::error("exhaustive F5 enumeration", Some("F5"), e, Source::Derived)),
    }
    let stated = (1..m).filter(|&k| 2 * k < m).count();
    let computed = m / 2;
    if stated != computed {
        report.note(format!(
            "the range 1 <= k < m/2 lists {stated} Richardson component(s) for m = {m}; the computation finds {computed}"
        ));
    }
    Ok(report)
}
