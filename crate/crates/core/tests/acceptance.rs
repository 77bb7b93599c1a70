//! One line per acceptance criterion, then a single verdict.
//!
//! Criteria run in order inside one test so their wall-clock budgets are
//! measured without interference from other tests.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use gkz_core::lattice::member_of_image_lattice;
use gkz_core::orbit::{cofsupp, fsupp, OrbitSet};
use gkz_core::param::{
    dual_parameter, facet_classes, facet_values, find_gamma, find_lambda, in_cf_plus_zd,
    lambda_postconditions, HClass,
};
use gkz_core::presentation::{
    dual_system, ideal_contains, projection, restriction, toric_ideal_generators, GroebnerLimits,
    Mode,
};
use gkz_core::{
    cone, oracle, Configuration, Face, GaussRat, GkzError, Int, IntMatrix, NormalityOptions,
    Parameter,
};
use num_traits::{Signed, Zero};
use rand::Rng;

const CORPUS_SIZE: usize = 500;
const CORPUS_SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    summary: String,
}

fn pass(summary: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        summary: summary.into(),
    }
}

fn fail(summary: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        summary: summary.into(),
    }
}

fn within(limit: Duration, elapsed: Duration, outcome: Outcome) -> Outcome {
    if elapsed <= limit {
        Outcome {
            summary: format!("{} ({elapsed:.2?})", outcome.summary),
            ..outcome
        }
    } else {
        fail(format!(
            "{}; took {elapsed:.2?}, limit {limit:?}",
            outcome.summary
        ))
    }
}

fn set(faces: &[&[usize]]) -> OrbitSet {
    OrbitSet::new(faces.iter().map(|f| f.to_vec()))
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn g(s: &str) -> GaussRat {
    s.parse().unwrap()
}

fn twisted_cubic_example() -> Outcome {
    let c = Configuration::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]).unwrap();
    let beta = Parameter::from_i64(&[-1, 1]);
    let mut supports: Vec<(Vec<usize>, Vec<Int>)> = c
        .facets()
        .iter()
        .map(|f| (f.columns.clone(), f.support.coefficients.clone()))
        .collect();
    supports.sort();
    let expected = vec![(vec![0], ints(&[0, 1])), (vec![3], ints(&[3, -1]))];
    if supports != expected {
        return fail(format!("facets {supports:?}"));
    }
    if facet_values(&c, &beta) != vec![g("1"), g("-4")] {
        return fail(format!("facet values {:?}", facet_values(&c, &beta)));
    }
    let (f, cf) = (fsupp(&c, &beta).unwrap(), cofsupp(&c, &beta).unwrap());
    if f != set(&[&[3], &[0, 1, 2, 3]]) || cf != set(&[&[0], &[0, 1, 2, 3]]) {
        return fail(format!("fsupp {f:?}, cofsupp {cf:?}"));
    }
    pass("h = y, 3x - y; h(beta) = 1, -4; fsupp = {{a4}, A}; cofsupp = {{a1}, A}")
}

fn conic_example() -> Outcome {
    let c = Configuration::from_i64_rows(&[&[1, 1, 1], &[0, 1, 2]]).unwrap();
    let face = c.face(&[2]).unwrap();
    let frame = c.frame(face).unwrap();
    if frame.facets.len() != 1 || !frame.facets[0].columns.is_empty() {
        return fail("the face should have the empty face as its only facet");
    }
    for k in -3..=3 {
        let point = vec![g(&k.to_string()), g(&(2 * k).to_string())];
        if frame.eval_facet(0, &point) != Some(g(&k.to_string())) {
            return fail(format!("h_F({k}, {}) != {k}", 2 * k));
        }
    }
    let g_facet = c.facets().iter().find(|f| f.columns == vec![0]).unwrap();
    if g_facet.support.coefficients != ints(&[0, 1]) {
        return fail(format!("h_G = {:?}", g_facet.support.coefficients));
    }
    let beta = Parameter::parse(&["1/2", "1"]).unwrap();
    let lambda = match find_lambda(&c, face, &beta) {
        Ok(l) => l,
        Err(e) => return fail(format!("find_lambda: {e}")),
    };
    let mut rng = common::rng(7);
    let mut translates = vec![lambda.clone()];
    for _ in 0..20 {
        let z: i64 = rng.gen_range(-10..=10);
        translates.push(lambda.add_int(&ints(&[z, 2 * z])));
    }
    if let Some(bad) = translates
        .iter()
        .find(|l| HClass::of(&frame.eval_facet(0, l).unwrap()) != HClass::NonInt)
    {
        return fail(format!("h_F({bad}) is an integer"));
    }
    let h_g = g_facet.support.eval(&beta);
    if h_g != g("1") {
        return fail(format!("h_G(beta) = {h_g}"));
    }
    pass("h_F(c, 2c) = c; h_G = b; h_F(lambda + z(1,2)) not integral for 21 translates; h_G(beta) = 1")
}

/// Candidates `w + z` with `z ∈ [-r, r]^d ∩ QF` for a witness `w`.
fn coset_points(c: &Configuration, face: &Face, witness: &Parameter, r: i64) -> Vec<Parameter> {
    let m = c.matrix().select_columns(&face.columns);
    let rank = oracle::rational_rank(&m);
    let d = c.dim();
    let mut out = Vec::new();
    let mut z = vec![-r; d];
    loop {
        let zi = ints(&z);
        let mut cols = m.columns();
        cols.push(zi.clone());
        if oracle::rational_rank(&IntMatrix::from_columns(&cols, d)) == rank {
            out.push(witness.add_int(&zi));
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if z[i] < r {
                z[i] += 1;
                break;
            }
            z[i] = -r;
        }
    }
}

fn gamma_holds(c: &Configuration, beta: &Parameter, gamma: &[Int]) -> bool {
    c.facets()
        .iter()
        .zip(facet_classes(c, beta))
        .all(|(f, class)| {
            let v = f.support.eval_int(gamma);
            match class {
                HClass::NatInt => v.is_positive(),
                HClass::NegInt => v.is_negative(),
                HClass::NonInt => !v.is_zero(),
            }
        })
}

fn constructed_parameters(corpus: &[(Configuration, Vec<Parameter>)]) -> Outcome {
    let (mut cases, mut gamma_bad, mut lambda_cases, mut lambda_bad) =
        (0usize, 0usize, 0usize, 0usize);
    let mut first: Option<String> = None;
    let mut confirmed = 0usize;
    for (c, betas) in corpus {
        for beta in betas {
            cases += 1;
            match find_gamma(c, beta) {
                Ok(gamma) if gamma_holds(c, beta, &gamma) => {}
                other => {
                    gamma_bad += 1;
                    first.get_or_insert(format!(
                        "gamma for A = {:?}, beta = {beta}: {other:?}",
                        c.input()
                    ));
                }
            }
            for face in c.faces() {
                let Some(witness) = in_cf_plus_zd(c, face, beta) else {
                    continue;
                };
                lambda_cases += 1;
                let ok = match find_lambda(c, face, beta) {
                    Ok(lambda) => lambda_postconditions(c, face, beta, &lambda).is_ok(),
                    Err(GkzError::LambdaUnattainable { .. }) => {
                        // no candidate in a box of the coset satisfies the implications either
                        let searched = coset_points(c, face, &witness, 4);
                        if searched
                            .iter()
                            .all(|l| lambda_postconditions(c, face, beta, l).is_err())
                        {
                            confirmed += 1;
                        }
                        false
                    }
                    Err(_) => false,
                };
                if !ok {
                    lambda_bad += 1;
                    first.get_or_insert_with(|| {
                        format!(
                            "A = {:?}, F = {:?}, beta = {beta}: {}",
                            c.input()
                                .row_vecs()
                                .iter()
                                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                            face.columns,
                            match find_lambda(c, face, beta) {
                                Ok(l) => format!("{:?}", lambda_postconditions(c, face, beta, &l)),
                                Err(e) => e.to_string(),
                            }
                        )
                    });
                }
            }
        }
    }
    let summary = format!(
        "gamma {}/{cases}; lambda {}/{lambda_cases} (faces with beta in CF + Z^d)",
        cases - gamma_bad,
        lambda_cases - lambda_bad
    );
    match first {
        None => pass(summary),
        Some(example) => fail(format!(
            "{summary}; {confirmed} failures confirmed by coset search; first: {example}"
        )),
    }
}

fn duality(corpus: &[(Configuration, Vec<Parameter>)]) -> Outcome {
    let mut cases = 0usize;
    for (c, betas) in corpus {
        for beta in betas {
            cases += 1;
            let dual = match dual_parameter(c, beta) {
                Ok(d) => d,
                Err(e) => return fail(format!("dual_parameter({beta}): {e}")),
            };
            let (before, after) = (facet_classes(c, beta), facet_classes(c, &dual));
            if before
                .iter()
                .zip(&after)
                .any(|(b, a)| (*a == HClass::NatInt) != (*b == HClass::NegInt))
            {
                return fail(format!("classes {before:?} -> {after:?} for beta = {beta}"));
            }
            if (-beta.clone()).integer_difference(&dual).is_none() {
                return fail(format!("{dual} is not in -beta + Z^d for beta = {beta}"));
            }
            if fsupp(c, &dual).unwrap() != cofsupp(c, beta).unwrap() {
                return fail(format!("fsupp(beta') != cofsupp(beta) for beta = {beta}"));
            }
            if facet_values(c, beta).iter().all(|v| !v.is_zero()) {
                let double = dual_parameter(c, &dual).unwrap();
                if facet_classes(c, &double) != before {
                    return fail(format!("double dual of {beta} changes classes"));
                }
            }
        }
    }
    pass(format!(
        "{cases} parameters: classes exchanged, fsupp(beta') = cofsupp(beta), double dual stable"
    ))
}

fn one_or_the_other(corpus: &[(Configuration, Vec<Parameter>)]) -> Outcome {
    let (mut pairs, mut nonzero) = (0usize, 0usize);
    for (c, betas) in corpus {
        for beta in betas {
            for face in c
                .faces()
                .iter()
                .filter(|f| f.columns != c.top_face().columns)
            {
                pairs += 1;
                let p = match projection(c, face, beta) {
                    Ok(p) => p,
                    Err(e) => {
                        return fail(format!(
                            "projection F = {:?}, beta = {beta}: {e}",
                            face.columns
                        ))
                    }
                };
                let r = match restriction(c, face, beta, Mode::Default) {
                    Ok(r) => r,
                    Err(e) => {
                        return fail(format!(
                            "restriction F = {:?}, beta = {beta}: {e}",
                            face.columns
                        ))
                    }
                };
                if !p.zero && !r.zero {
                    return fail(format!(
                        "both nonzero at F = {:?}, beta = {beta}",
                        face.columns
                    ));
                }
                if !p.zero {
                    nonzero += 1;
                    let (d_af, n_af) = c.face_quantities(face);
                    let shift = n_af as i64 - d_af as i64;
                    let mut expected: Vec<(i64, u64)> = (0..=d_af)
                        .map(|k| (-(k as i64) - shift, gkz_core::orbit::binomial(d_af, k)))
                        .collect();
                    expected.sort();
                    if p.degrees != expected || p.total_multiplicity() != 1 << d_af {
                        return fail(format!(
                            "projection degrees {:?} at F = {:?}",
                            p.degrees, face.columns
                        ));
                    }
                }
            }
        }
    }
    pass(format!("{pairs} (face, beta) pairs, never both nonzero; {nonzero} nonzero projections with exterior degrees"))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = common::rng(6);
    let (mut facet_cmp, mut normal_cmp, mut member_cmp) = (0usize, 0usize, 0usize);
    let mut instances = 0usize;
    while instances < 200 {
        let (d, n) = common::random_shape(&mut rng);
        let a = common::random_matrix(&mut rng, d, n, 0, 3);
        let Ok(c) = Configuration::new(a.clone()) else {
            continue;
        };
        instances += 1;
        if c.is_pointed() {
            let mut fast: Vec<(Vec<usize>, Vec<Int>)> = c
                .facets()
                .iter()
                .map(|f| (f.columns.clone(), f.support.coefficients.clone()))
                .collect();
            fast.sort();
            if fast != oracle::facets(c.matrix()) {
                return fail(format!("facets of {a:?}"));
            }
            facet_cmp += 1;
            let working = match c.normality() {
                Ok(cert) => cert.normal,
                Err(e) => return fail(format!("normality of {a:?}: {e}")),
            };
            if working != oracle::non_normal_witness(c.matrix()).is_none() {
                return fail(format!("normality in ZA of {a:?}"));
            }
            let literal = cone::is_normal(&a, &NormalityOptions::default()).unwrap();
            if literal.normal != oracle::non_normal_witness(&a).is_none() {
                return fail(format!("normality in Z^d of {a:?}"));
            }
            normal_cmp += 2;
        }
        for _ in 0..5 {
            let k = rng.gen_range(1..=n);
            let cols: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            let m = a.select_columns(&cols);
            let v: Vec<Int> = (0..d).map(|_| Int::from(rng.gen_range(-6..=6))).collect();
            if member_of_image_lattice(&v, &m).is_some() != oracle::in_column_lattice(&v, &m) {
                return fail(format!(
                    "membership of {v:?} in the columns {cols:?} of {a:?}"
                ));
            }
            member_cmp += 1;
        }
    }
    pass(format!(
        "{instances} instances: {facet_cmp} facet sets, {normal_cmp} normality verdicts, {member_cmp} memberships agree"
    ))
}

fn toric_ideals() -> Vec<Outcome> {
    let cases: [(&[&[i64]], i64); 2] = [
        (&[&[1, 1, 1], &[0, 1, 2]], 2),
        (&[&[1, 1, 1, 1], &[0, 1, 2, 3]], 2),
    ];
    cases
        .iter()
        .map(|(rows, bound)| {
            let start = Instant::now();
            let a = IntMatrix::from_i64_rows(rows);
            let limits = GroebnerLimits::default();
            let outcome = (|| {
                let fast = toric_ideal_generators(&a, &limits)?;
                let slow = oracle::kernel_binomials(&a, *bound);
                let equal = ideal_contains(&fast, &slow, &limits)?
                    && ideal_contains(&slow, &fast, &limits)?;
                Ok::<_, GkzError>((fast.len(), slow.len(), equal))
            })();
            let outcome = match outcome {
                Ok((f, s, true)) => pass(format!(
                    "{rows:?}: {f} generators = ideal of {s} kernel binomials"
                )),
                Ok((f, s, false)) => {
                    fail(format!("{rows:?}: ideals of {f} and {s} generators differ"))
                }
                Err(e) => fail(format!("{rows:?}: {e}")),
            };
            within(Duration::from_secs(5), start.elapsed(), outcome)
        })
        .collect()
}

fn duality_gate(criterion4: bool) -> Outcome {
    let c = Configuration::from_i64_rows(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
    match dual_system(&c, &Parameter::from_i64(&[0, 0])) {
        Err(GkzError::NotHomogeneous) => {}
        other => return fail(format!("non-homogeneous [[1,0,1],[0,1,1]] gave {other:?}")),
    }
    let homogeneous: [&[&[i64]]; 3] = [
        &[&[1, 1, 1, 1], &[0, 1, 2, 3]],
        &[&[1, 1, 1], &[0, 1, 2]],
        &[&[1, 1, 1, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]],
    ];
    let mut rng = common::rng(8);
    for rows in homogeneous {
        let c = Configuration::from_i64_rows(rows).unwrap();
        for _ in 0..20 {
            let beta = common::random_beta(&mut rng, c.dim());
            if let Err(e) = dual_system(&c, &beta) {
                return fail(format!("dual_system on {rows:?}, beta = {beta}: {e}"));
            }
        }
    }
    if !criterion4 {
        return fail("the parameter-level certificate (criterion 4) failed");
    }
    pass("NotHomogeneous raised; 60 dual certificates on homogeneous matrices; criterion 4 holds")
}

#[test]
fn acceptance() {
    let mut lines: Vec<(String, Outcome)> = Vec::new();

    let start = Instant::now();
    let o = twisted_cubic_example();
    lines.push((
        "1".into(),
        within(Duration::from_secs(1), start.elapsed(), o),
    ));

    let start = Instant::now();
    let o = conic_example();
    lines.push((
        "2".into(),
        within(Duration::from_secs(1), start.elapsed(), o),
    ));

    let corpus = common::parameter_corpus(CORPUS_SEED, CORPUS_SIZE);
    lines.push(("3".into(), constructed_parameters(&corpus)));
    let c4 = duality(&corpus);
    let c4_ok = c4.ok;
    lines.push(("4".into(), c4));
    lines.push(("5".into(), one_or_the_other(&corpus)));

    let start = Instant::now();
    let o = oracle_equivalence();
    lines.push((
        "6".into(),
        within(Duration::from_secs(300), start.elapsed(), o),
    ));

    for (k, o) in toric_ideals().into_iter().enumerate() {
        lines.push((format!("7{}", ['a', 'b'][k]), o));
    }
    lines.push(("8".into(), duality_gate(c4_ok)));

    // written past the harness capture so the lines show on success too
    let mut out = std::io::stdout().lock();
    for (name, o) in &lines {
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {name:<3} {verdict}  {}", o.summary).unwrap();
    }
    out.flush().unwrap();
    let failed: Vec<&str> = lines
        .iter()
        .filter(|(_, o)| !o.ok)
        .map(|(n, _)| n.as_str())
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
