//! Fast paths against brute-force oracles, and the postconditions of the
//! constructed parameters.

use gkz_core::lattice::{clear_denominators, imag_parts, member_of_image_lattice, real_parts};
use gkz_core::param::{self, HClass};
use gkz_core::{
    oracle, presentation, Configuration, Face, GaussRat, GkzError, Int, IntMatrix, Parameter,
};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::instance::Instance;
use crate::report::classes;

/// Largest box the enumeration oracles are allowed to walk.
const MAX_BOX: u64 = 1_000_000;
const COSET_RADIUS: i64 = 2;

#[derive(Default)]
struct Checks {
    entries: Vec<Value>,
    passed: bool,
}

impl Checks {
    fn record(&mut self, name: &str, ok: bool, detail: Value) {
        self.passed &= ok;
        self.entries.push(
            json!({ "name": name, "status": if ok { "pass" } else { "fail" }, "detail": detail }),
        );
    }

    fn skip(&mut self, name: &str, reason: String) {
        self.entries
            .push(json!({ "name": name, "status": "skipped", "detail": reason }));
    }
}

pub fn verify(inst: &Instance) -> Result<Value, GkzError> {
    let c = &inst.config;
    let mut checks = Checks {
        passed: true,
        ..Checks::default()
    };
    let mut unattainable = Vec::new();

    if c.is_pointed() {
        let mut fast: Vec<(Vec<usize>, Vec<Int>)> = c
            .facets()
            .iter()
            .map(|f| (f.columns.clone(), f.support.coefficients.clone()))
            .collect();
        fast.sort();
        let slow = oracle::facets(c.matrix());
        checks.record(
            "facets",
            fast == slow,
            json!({ "facets": fast.len(), "oracle": slow.len() }),
        );
        normality(c, &mut checks);
    } else {
        checks.skip("facets", "the cone is not pointed".into());
        checks.skip("normality", "the cone is not pointed".into());
    }
    membership(c, &mut checks);

    if let Ok(beta) = inst.beta() {
        coset(c, &beta, &mut checks);
        match c.normality() {
            Ok(cert) if cert.normal => postconditions(c, &beta, &mut checks, &mut unattainable),
            Ok(_) => checks.skip("postconditions", "the semigroup is not normal".into()),
            Err(e) => checks.skip("postconditions", e.to_string()),
        }
    }
    Ok(json!({
        "passed": checks.passed,
        "checks": checks.entries,
        "lambda_unattainable": unattainable,
    }))
}

fn max_entry(a: &IntMatrix) -> u64 {
    a.columns()
        .iter()
        .flatten()
        .map(|x| x.abs().to_string().parse::<u64>().unwrap_or(u64::MAX))
        .max()
        .unwrap_or(0)
}

fn box_fits(a: &IntMatrix) -> bool {
    let side = 6u64.saturating_mul(max_entry(a).max(1)).saturating_add(1);
    side.checked_pow(a.rows() as u32)
        .is_some_and(|v| v <= MAX_BOX)
}

fn normality(c: &Configuration, checks: &mut Checks) {
    if !box_fits(c.matrix()) {
        checks.skip(
            "normality",
            "entries too large for the enumeration oracle".into(),
        );
        return;
    }
    // in working coordinates ZA = Z^d, so the literal oracle decides normality in ZA
    match c.normality() {
        Ok(cert) => {
            let slow = oracle::non_normal_witness(c.matrix());
            checks.record(
                "normality",
                cert.normal == slow.is_none(),
                json!({ "normal": cert.normal, "oracle_normal": slow.is_none() }),
            );
        }
        Err(e) => checks.skip("normality", e.to_string()),
    }
    if c.lattice_change().is_some() && box_fits(c.input()) {
        match gkz_core::cone::is_normal(c.input(), &gkz_core::NormalityOptions::default()) {
            Ok(cert) => {
                let slow = oracle::non_normal_witness(c.input());
                checks.record(
                    "normality_in_zd",
                    cert.normal == slow.is_none(),
                    json!({ "normal": cert.normal, "oracle_normal": slow.is_none() }),
                );
            }
            Err(e) => checks.skip("normality_in_zd", e.to_string()),
        }
    }
}

fn unit(d: usize, i: usize) -> Vec<Int> {
    (0..d).map(|j| Int::from(u8::from(i == j))).collect()
}

/// Membership of columns and unit vectors in the lattice of every face.
fn membership(c: &Configuration, checks: &mut Checks) {
    let d = c.dim();
    let a = c.matrix();
    let mut probes: Vec<Vec<Int>> = a.columns();
    probes.extend((0..d).map(|i| unit(d, i)));
    let mut lattices: Vec<IntMatrix> = c
        .faces()
        .iter()
        .filter(|f| f.rank > 0)
        .map(|f| a.select_columns(&f.columns))
        .collect();
    lattices.push(c.input().clone());
    let mut mismatches = Vec::new();
    let mut tested = 0usize;
    for m in &lattices {
        for v in &probes {
            tested += 1;
            if member_of_image_lattice(v, m).is_some() != oracle::in_column_lattice(v, m) {
                mismatches.push(json!({ "vector": gkz_core::json::ints(v), "lattice": gkz_core::json::matrix(m) }));
            }
        }
    }
    checks.record(
        "lattice_membership",
        mismatches.is_empty(),
        json!({ "tested": tested, "mismatches": mismatches }),
    );
}

/// Whether the rational vector `v` lies in the span of the columns of `m`.
fn in_span(v: &[gkz_core::Rat], m: &IntMatrix) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let mut cols = m.columns();
    cols.push(clear_denominators(v));
    oracle::rational_rank(m) == oracle::rational_rank(&IntMatrix::from_columns(&cols, m.rows()))
}

fn in_face_span(c: &Configuration, face: &Face, p: &[GaussRat]) -> bool {
    let m = c.matrix().select_columns(&face.columns);
    in_span(&real_parts(p), &m) && in_span(&imag_parts(p), &m)
}

/// `beta ∈ CF + Z^d`: witnesses are checked directly, absences against a box search.
fn coset(c: &Configuration, beta: &Parameter, checks: &mut Checks) {
    let d = c.dim();
    let mut bad = Vec::new();
    for face in c.faces() {
        let ok = match param::in_cf_plus_zd(c, face, beta) {
            Some(lambda) => {
                beta.integer_difference(&lambda).is_some() && in_face_span(c, face, &lambda)
            }
            None => {
                let mut z = vec![-COSET_RADIUS; d];
                let mut found = false;
                'search: loop {
                    let zi: Vec<Int> = z.iter().map(|&x| Int::from(x)).collect();
                    if in_face_span(c, face, &beta.sub_int(&zi)) {
                        found = true;
                        break;
                    }
                    let mut i = d;
                    loop {
                        if i == 0 {
                            break 'search;
                        }
                        i -= 1;
                        if z[i] < COSET_RADIUS {
                            z[i] += 1;
                            continue 'search;
                        }
                        z[i] = -COSET_RADIUS;
                    }
                }
                !found
            }
        };
        if !ok {
            bad.push(json!(face.columns));
        }
    }
    checks.record(
        "coset_membership",
        bad.is_empty(),
        json!({ "faces": c.faces().len(), "mismatches": bad }),
    );
}

fn postconditions(
    c: &Configuration,
    beta: &Parameter,
    checks: &mut Checks,
    unattainable: &mut Vec<Value>,
) {
    let before = param::facet_classes(c, beta);

    match param::find_gamma(c, beta) {
        Ok(gamma) => {
            let ok = c.facets().iter().zip(&before).all(|(f, class)| {
                let v = f.support.eval_int(&gamma);
                match class {
                    HClass::NatInt => v.is_positive(),
                    HClass::NegInt => v.is_negative(),
                    HClass::NonInt => !v.is_zero(),
                }
            });
            checks.record("gamma", ok, json!({ "facet_classes": classes(c, beta) }));
        }
        Err(e) => checks.record("gamma", false, json!(e.to_string())),
    }

    match param::dual_parameter(c, beta) {
        Ok(dual) => {
            let after = param::facet_classes(c, &dual);
            let exchanged = before
                .iter()
                .zip(&after)
                .all(|(b, a)| (*a == HClass::NatInt) == (*b == HClass::NegInt));
            let integral = (-beta.clone()).integer_difference(&dual).is_some();
            checks.record(
                "dual_parameter",
                exchanged && integral,
                json!({ "dual_classes": classes(c, &dual) }),
            );
        }
        Err(e) => checks.record("dual_parameter", false, json!(e.to_string())),
    }

    let mut failures = Vec::new();
    let mut verified = 0usize;
    for face in c.faces() {
        match param::find_lambda(c, face, beta) {
            Ok(lambda) => match param::lambda_postconditions(c, face, beta, &lambda) {
                Ok(()) => verified += 1,
                Err(v) => {
                    failures.push(json!({ "face": face.columns, "violation": format!("{v:?}") }))
                }
            },
            Err(GkzError::NotInCoset { .. }) if param::in_cf_plus_zd(c, face, beta).is_none() => {}
            Err(e @ GkzError::LambdaUnattainable { .. }) => {
                unattainable.push(json!({ "face": face.columns, "message": e.to_string() }))
            }
            Err(e) => failures.push(json!({ "face": face.columns, "error": e.to_string() })),
        }
    }
    checks.record(
        "lambda",
        failures.is_empty(),
        json!({ "verified": verified, "failures": failures }),
    );

    let mut both = Vec::new();
    for face in c
        .faces()
        .iter()
        .filter(|f| f.columns != c.top_face().columns)
    {
        let p = presentation::projection(c, face, beta);
        let r = presentation::restriction(c, face, beta, presentation::Mode::Default);
        match (p, r) {
            (Ok(p), Ok(r)) if p.zero || r.zero => {}
            (Ok(_), Ok(_)) => both.push(json!({ "face": face.columns })),
            (Err(e), _) | (_, Err(e)) => {
                both.push(json!({ "face": face.columns, "error": e.to_string() }))
            }
        }
    }
    checks.record(
        "projection_or_restriction",
        both.is_empty(),
        json!({ "violations": both }),
    );
}
