//! One JSON report per operation.

use clap::ValueEnum;
use gkz_core::json::{self, object};
use gkz_core::lattice::solve_rational;
use gkz_core::orbit::{self, MgmDescriptor};
use gkz_core::param::{self, HClass};
use gkz_core::presentation::{self, BinomialGenerator, ModuleDescriptor};
use gkz_core::{Configuration, Face, GkzError, Int, Parameter, Rat};
use serde_json::{json, Value};

use crate::instance::Instance;
use crate::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// Facets, support functions and the face lattice.
    Faces,
    /// Normality of the semigroup, with a Hilbert basis or a witness.
    NormalCheck,
    /// Whether all columns lie on an affine hyperplane.
    HomogeneousCheck,
    /// Fiber and cofiber supports as face sets.
    Supports,
    /// Mixed and dual mixed Gauss–Manin classification.
    ClassifyMgm,
    /// Integer vector following the facet classes of beta.
    Gamma,
    /// Coset representative on a face.
    Lambda,
    /// Parameter of the holonomic dual.
    Dual,
    /// Restriction to the coordinate subspace of a face.
    Restrict,
    /// Projection onto the coordinate subspace of a face.
    Project,
    /// Restriction of the dual mixed Gauss–Manin object over an open face set.
    MgmRestrict,
    /// Projection of the mixed Gauss–Manin object over an open face set.
    MgmProject,
    /// Euler operators and lattice-ideal generators.
    Presentation,
    /// Generators of the toric ideal.
    ToricIdeal,
    /// Cross-checks against brute-force oracles.
    Verify,
    /// One report per line of a JSON-lines file of instances.
    Catalog,
}

impl Op {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

pub fn error_report(e: &GkzError) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

pub fn run(op: Op, inst: &Instance) -> Result<Value, GkzError> {
    let c = &inst.config;
    match op {
        Op::Faces => faces(inst),
        Op::NormalCheck => normal_check(c),
        Op::HomogeneousCheck => Ok(match gkz_core::cone::is_homogeneous(c.input()) {
            Some(v) => json!({ "homogeneous": true, "c": json::rats(&v) }),
            None => json!({ "homogeneous": false, "c": null }),
        }),
        Op::Supports => {
            let beta = inst.beta()?;
            Ok(json!({
                "fsupp": orbit::fsupp(c, &beta)?,
                "cofsupp": orbit::cofsupp(c, &beta)?,
            }))
        }
        Op::ClassifyMgm => {
            let beta = inst.beta()?;
            let class = orbit::classify_mgm(c, &beta)?;
            Ok(json!({
                "mgm": class.mgm,
                "dual_mgm": class.dual_mgm,
                "fsupp": orbit::fsupp(c, &beta)?,
                "cofsupp": orbit::cofsupp(c, &beta)?,
                "not_strongly_resonant": param::not_strongly_resonant(c, &beta),
            }))
        }
        Op::Gamma => {
            let beta = inst.beta()?;
            let gamma = param::find_gamma(c, &beta)?;
            Ok(json!({
                "gamma": json::ints(&to_input(c, &gamma)),
                "facet_classes": classes(c, &beta),
            }))
        }
        Op::Lambda => {
            let beta = inst.beta()?;
            let face = inst.face()?;
            let choice = param::find_lambda_with(c, face, &beta, inst.options.policy)?;
            Ok(json!({
                "face": face.columns,
                "lambda": parameter(c, &choice.lambda),
                "conflicts": choice.conflicts,
            }))
        }
        Op::Dual => {
            let beta = inst.beta()?;
            let cert = presentation::dual_system(c, &beta)?;
            Ok(json!({
                "beta_prime": parameter(c, &cert.beta_prime),
                "fsupp_exchanged": cert.fsupp_exchanged,
                "cofsupp_exchanged": cert.cofsupp_exchanged,
            }))
        }
        Op::Restrict => {
            let d = presentation::restriction(c, inst.face()?, &inst.beta()?, inst.options.mode)?;
            Ok(descriptor(c, &d))
        }
        Op::Project => {
            let d = presentation::projection(c, inst.face()?, &inst.beta()?)?;
            Ok(descriptor(c, &d))
        }
        Op::MgmRestrict => {
            let d = orbit::mgm_restrict_dual(c, inst.face()?, &inst.open_set(), &inst.beta()?)?;
            Ok(mgm_descriptor(c, &d))
        }
        Op::MgmProject => {
            let d = orbit::mgm_project(c, inst.face()?, &inst.open_set(), &inst.beta()?)?;
            Ok(mgm_descriptor(c, &d))
        }
        Op::Presentation => {
            let beta = inst.beta_input()?;
            let euler: Vec<Value> = presentation::euler_operators(c.input(), &beta)
                .into_iter()
                .map(|e| {
                    json!({
                        "row": e.row,
                        "coefficients": json::ints(&e.coefficients),
                        "beta": json::gauss(&e.beta),
                    })
                })
                .collect();
            Ok(json!({
                "euler_operators": euler,
                "lattice_ideal": generators(&presentation::lattice_ideal_generators(c.input())),
            }))
        }
        Op::ToricIdeal => {
            let gens = presentation::toric_ideal_generators(c.input(), &inst.options.limits)?;
            Ok(json!({ "generators": generators(&gens) }))
        }
        Op::Verify => verify::verify(inst),
        Op::Catalog => Err(GkzError::InvalidInput(
            "catalog cannot be nested inside a catalog".into(),
        )),
    }
}

/// Writes a working-coordinate lattice vector in the input coordinates.
pub fn to_input(c: &Configuration, v: &[Int]) -> Vec<Int> {
    match c.lattice_change() {
        Some(change) => change.basis.mul_vec(v),
        None => v.to_vec(),
    }
}

pub fn parameter(c: &Configuration, p: &Parameter) -> Value {
    json::parameter(&c.from_working(p))
}

fn class_name(class: HClass) -> &'static str {
    match class {
        HClass::NatInt => "natural",
        HClass::NegInt => "negative",
        HClass::NonInt => "non-integral",
    }
}

pub fn classes(c: &Configuration, beta: &[gkz_core::GaussRat]) -> Vec<&'static str> {
    param::facet_classes(c, beta)
        .into_iter()
        .map(class_name)
        .collect()
}

fn lattice_change(c: &Configuration) -> Value {
    match c.lattice_change() {
        Some(change) => json!({
            "basis": json::matrix(&change.basis),
            "index": json::int(&change.index),
        }),
        None => Value::Null,
    }
}

fn faces(inst: &Instance) -> Result<Value, GkzError> {
    let c = &inst.config;
    let facets: Vec<Value> = c
        .facets()
        .iter()
        .map(|f| {
            let mut v = object(vec![
                ("columns", json!(f.columns)),
                ("support", json::ints(&f.support.coefficients)),
            ]);
            if let Some(change) = c.lattice_change() {
                let h: Vec<Rat> = f
                    .support
                    .coefficients
                    .iter()
                    .cloned()
                    .map(Rat::from_integer)
                    .collect();
                let input =
                    solve_rational(&change.basis.transpose(), &h).expect("basis is invertible");
                v["support_input"] = json::rats(&input);
            }
            v
        })
        .collect();
    let face_list: Vec<Value> = c.faces().iter().map(|f| face_summary(c, f)).collect();
    let mut out = object(vec![
        ("rows", json!(c.dim())),
        ("columns", json!(c.num_columns())),
        ("pointed", json!(c.is_pointed())),
        ("lattice_change", lattice_change(c)),
        ("facets", Value::Array(facets)),
        ("faces", Value::Array(face_list)),
    ]);
    if inst.has_face() {
        let face = inst.face()?;
        let mut detail = face_summary(c, face);
        if face.rank > 0 {
            let frame = c.frame(face)?;
            detail["lattice_basis"] = Value::Array(
                frame
                    .basis
                    .vectors
                    .iter()
                    .map(|v| json::ints(&to_input(c, v)))
                    .collect(),
            );
            detail["saturation_index"] = json::int(&param::saturation_index(c, face));
            detail["facets"] = Value::Array(
                frame
                    .facets
                    .iter()
                    .map(|f| json!({ "columns": f.columns, "support": json::ints(&f.support.coefficients) }))
                    .collect(),
            );
        }
        out["face"] = detail;
    }
    Ok(out)
}

fn face_summary(c: &Configuration, f: &Face) -> Value {
    let (d_af, n_af) = c.face_quantities(f);
    json!({
        "columns": f.columns,
        "rank": f.rank,
        "containing_facets": f.containing_facets,
        "d_af": d_af,
        "n_af": n_af,
    })
}

fn normal_check(c: &Configuration) -> Result<Value, GkzError> {
    let cert = c.normality()?;
    let points =
        |pts: &[Vec<Int>]| Value::Array(pts.iter().map(|p| json::ints(&to_input(c, p))).collect());
    let mut out = json!({
        "normal": cert.normal,
        "hilbert_basis": points(&cert.hilbert_basis),
        "witness": cert.witness.as_ref().map(|w| json::ints(&to_input(c, w))),
        "lattice_change": lattice_change(c),
    });
    if c.lattice_change().is_some() {
        let literal = gkz_core::cone::is_normal(c.input(), &gkz_core::NormalityOptions::default())?;
        out["saturated_in_zd"] = json!({
            "normal": literal.normal,
            "witness": literal.witness.as_ref().map(|w| json::ints(w)),
        });
    }
    Ok(out)
}

fn descriptor(c: &Configuration, d: &ModuleDescriptor) -> Value {
    let mode = match d.mode {
        presentation::Mode::Default => "default",
        presentation::Mode::AsPrinted => "as-printed",
    };
    json!({
        "zero": d.zero,
        "face": d.face,
        "lambda": d.lambda.as_ref().map(|l| parameter(c, l)),
        "degrees": d.degrees,
        "mode": mode,
        "shift": d.shift,
        "conflicts": d.conflicts,
    })
}

fn mgm_descriptor(c: &Configuration, d: &MgmDescriptor) -> Value {
    let classes: Vec<Value> = d
        .classes
        .iter()
        .map(|k| {
            json!({
                "representative": parameter(c, &k.representative),
                "modulus": k.modulus.vectors.iter().map(|v| json::ints(&to_input(c, v))).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "zero": d.zero,
        "face": d.face,
        "classes": classes,
        "exterior_rank": d.exterior_rank,
        "shift": d.shift,
        "degrees": d.degrees(),
    })
}

fn generators(gens: &[BinomialGenerator]) -> Value {
    let exps = |v: &[Int]| {
        v.iter()
            .map(|x| x.to_string().parse::<u64>().expect("exponents are small"))
            .collect::<Vec<_>>()
    };
    Value::Array(
        gens.iter()
            .map(|g| json!({ "u_plus": exps(&g.u_plus), "u_minus": exps(&g.u_minus) }))
            .collect(),
    )
}
