//! Coset representatives `lambda` in `CF ∩ (beta + Z^d)` whose facet values
//! on `F` mirror the facet values of `beta` on `A`.
//!
//! For a facet `F'` of `F`, every facet `G` of `A` with `G ∩ F = F'` restricts
//! on `ZF` to a positive integer multiple of `h_{F'}`. So `h_{F'}(lambda)` is an
//! integer exactly when a fixed residue is, and the target class of
//! `h_{F'}(lambda)` is dictated by the classes of those `h_G(beta)`. The search
//!
//! 1. takes the coset witness and adds the smallest multiple `t` of
//!    `sigma = Σ_{a_i ∈ F} a_i` making every integral value nonnegative,
//! 2. finds the lexicographically smallest `alpha ∈ ZF` that is `≥ 1` on the
//!    facets that must end up in `N` and `≤ -1` on those that must end up
//!    negative, and
//! 3. adds the smallest positive multiple of `alpha` pushing the latter below zero.
//!
//! When the facets `G` over one `F'` disagree (some in `N`, some negative), no
//! `lambda` can satisfy both implications; [`LambdaPolicy`] decides whether
//! that is an error or which side wins.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{facet_classes, in_cf_plus_zd, HClass};
use crate::cone::{is_subset, Configuration, Face, FaceFrame};
use crate::error::GkzError;
use crate::lattice::{clear_denominators, rational_lp_feasible, LinearConstraint};
use crate::{GaussRat, Int, Parameter};

/// How to treat a facet `F'` of `F` over which facets of `A` disagree in class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaPolicy {
    /// Report [`GkzError::LambdaUnattainable`].
    Strict,
    /// Make `h_{F'}(lambda)` nonnegative.
    PreferNonNegative,
    /// Make `h_{F'}(lambda)` negative.
    PreferNegative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaChoice {
    pub lambda: Parameter,
    /// Facets of `F` over which the facet classes of `beta` disagreed.
    pub conflicts: Vec<Vec<usize>>,
}

/// A failed postcondition of [`find_lambda`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaViolation {
    NotInFaceSpan,
    NotInCoset,
    Implication {
        face_facet: Vec<usize>,
        value: GaussRat,
        facet: Vec<usize>,
        facet_class: HClass,
    },
}

/// [`find_lambda_with`] under [`LambdaPolicy::Strict`].
pub fn find_lambda(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
) -> Result<Parameter, GkzError> {
    find_lambda_with(config, face, beta, LambdaPolicy::Strict).map(|c| c.lambda)
}

pub fn find_lambda_with(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
    policy: LambdaPolicy,
) -> Result<LambdaChoice, GkzError> {
    config.require_normal("the construction of lambda")?;
    let witness = in_cf_plus_zd(config, face, beta).ok_or_else(|| GkzError::NotInCoset {
        face: face.columns.clone(),
    })?;
    if face.columns.len() == config.num_columns() {
        return Ok(LambdaChoice {
            lambda: Parameter::new(beta.to_vec()),
            conflicts: Vec::new(),
        });
    }
    if face.rank == 0 {
        return Ok(LambdaChoice {
            lambda: witness,
            conflicts: Vec::new(),
        });
    }
    let frame = config.frame(face)?;
    let groups = facet_groups(config, face, &frame);
    let classes = facet_classes(config, beta);
    let sigma = column_sum(config, face);

    // Step 1: lift the witness along sigma.
    let mut t: Option<Int> = None;
    let mut require = |value: GaussRat, step: Int| {
        if let Some(v) = value.as_integer() {
            let need = Integer::div_ceil(&-v, &step);
            t = Some(match t.take() {
                Some(old) => old.max(need),
                None => need,
            });
        }
    };
    for k in 0..frame.facets.len() {
        let value = frame.eval_facet(k, &witness).expect("witness lies in CF");
        let step = frame.eval_facet_int(k, &sigma).expect("sigma lies in ZF");
        require(value, step);
    }
    for f in config.facets() {
        if !is_subset(&face.columns, &f.columns) {
            require(f.support.eval(&witness), f.support.eval_int(&sigma));
        }
    }
    let t = t.unwrap_or_else(Int::zero);
    let lambda0 = witness.add_int(&scaled(&sigma, &t));

    // Target classes on the facets of F with integral values.
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut conflicts = Vec::new();
    for (k, group) in groups.iter().enumerate() {
        if frame
            .eval_facet(k, &lambda0)
            .and_then(|v| v.as_integer())
            .is_none()
        {
            continue;
        }
        let natural: Vec<usize> = group
            .iter()
            .copied()
            .filter(|&g| classes[g] == HClass::NatInt)
            .collect();
        let negative: Vec<usize> = group
            .iter()
            .copied()
            .filter(|&g| classes[g] == HClass::NegInt)
            .collect();
        if natural.len() + negative.len() != group.len() {
            return Err(GkzError::Internal(format!(
                "facet {:?} of the face has an integral value but a facet above it does not",
                frame.facets[k].columns
            )));
        }
        let sign_plus = match (natural.is_empty(), negative.is_empty()) {
            (_, true) => true,
            (true, false) => false,
            (false, false) => {
                conflicts.push(frame.facets[k].columns.clone());
                match policy {
                    LambdaPolicy::Strict => {
                        let cols = |gs: &[usize]| {
                            gs.iter()
                                .map(|&g| config.facets()[g].columns.clone())
                                .collect()
                        };
                        return Err(GkzError::LambdaUnattainable {
                            face_facet: frame.facets[k].columns.clone(),
                            natural: cols(&natural),
                            negative: cols(&negative),
                        });
                    }
                    LambdaPolicy::PreferNonNegative => true,
                    LambdaPolicy::PreferNegative => false,
                }
            }
        };
        if sign_plus {
            plus.push(k);
        } else {
            minus.push(k);
        }
    }

    // Steps 2 and 3.
    let lambda = if minus.is_empty() {
        lambda0
    } else {
        let alpha = sign_point(&frame, &plus, &minus)?;
        let mut m = Int::from(1);
        for &k in &minus {
            let v = frame
                .eval_facet(k, &lambda0)
                .and_then(|v| v.as_integer())
                .expect("integral");
            let step = -frame.facets[k].support.eval_int(&alpha);
            m = m.max(Integer::div_ceil(&(v + Int::from(1)), &step));
        }
        lambda0.add_int(&frame.embed(&scaled(&alpha, &m)))
    };

    // Re-verify before returning.
    let realized = |k: usize| frame.eval_facet(k, &lambda).map(|v| HClass::of(&v));
    let signs_ok = plus.iter().all(|&k| realized(k) == Some(HClass::NatInt))
        && minus.iter().all(|&k| realized(k) == Some(HClass::NegInt));
    let post_ok =
        !conflicts.is_empty() || lambda_postconditions(config, face, beta, &lambda).is_ok();
    if !signs_ok
        || !post_ok
        || lambda
            .integer_difference(&Parameter::new(beta.to_vec()))
            .is_none()
    {
        return Err(GkzError::Internal(format!(
            "lambda {lambda} fails its postconditions for face {:?} and beta {:?}",
            face.columns, beta
        )));
    }
    Ok(LambdaChoice { lambda, conflicts })
}

/// Checks the defining properties of `lambda` verbatim: `lambda ∈ CF`,
/// `beta - lambda ∈ Z^d`, and for every facet `F'` of `F`, `h_{F'}(lambda) ∈ N`
/// (resp. negative integer) forces `h_G(beta) ∈ N` (resp. negative integer)
/// for every facet `G` of `A` with `G ∩ F = F'`.
pub fn lambda_postconditions(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
    lambda: &[GaussRat],
) -> Result<(), LambdaViolation> {
    if Parameter::new(beta.to_vec())
        .integer_difference(&Parameter::new(lambda.to_vec()))
        .is_none()
    {
        return Err(LambdaViolation::NotInCoset);
    }
    if face.rank == 0 {
        return if lambda.iter().all(GaussRat::is_zero) {
            Ok(())
        } else {
            Err(LambdaViolation::NotInFaceSpan)
        };
    }
    let frame = config
        .frame(face)
        .map_err(|_| LambdaViolation::NotInFaceSpan)?;
    if frame.coordinates(lambda).is_none() {
        return Err(LambdaViolation::NotInFaceSpan);
    }
    let classes = facet_classes(config, beta);
    for (k, group) in facet_groups(config, face, &frame).iter().enumerate() {
        let value = frame.eval_facet(k, lambda).expect("lambda lies in CF");
        let class = HClass::of(&value);
        if class == HClass::NonInt {
            continue;
        }
        if let Some(&g) = group.iter().find(|&&g| classes[g] != class) {
            return Err(LambdaViolation::Implication {
                face_facet: frame.facets[k].columns.clone(),
                value,
                facet: config.facets()[g].columns.clone(),
                facet_class: classes[g],
            });
        }
    }
    Ok(())
}

/// For each facet `F'` of `F`, the facets `G` of `A` with `G ∩ F = F'`.
fn facet_groups(config: &Configuration, face: &Face, frame: &FaceFrame) -> Vec<Vec<usize>> {
    frame
        .facets
        .iter()
        .map(|ff| {
            config
                .facets()
                .iter()
                .enumerate()
                .filter(|(_, g)| {
                    let meet: Vec<usize> = face
                        .columns
                        .iter()
                        .copied()
                        .filter(|i| g.columns.binary_search(i).is_ok())
                        .collect();
                    meet == ff.columns
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

fn column_sum(config: &Configuration, face: &Face) -> Vec<Int> {
    let a = config.matrix();
    (0..a.rows())
        .map(|i| face.columns.iter().map(|&j| a[(i, j)].clone()).sum())
        .collect()
}

fn scaled(v: &[Int], k: &Int) -> Vec<Int> {
    v.iter().map(|x| x * k).collect()
}

/// Beyond this box radius the search falls back to the scaled LP solution.
const MAX_BOX_RADIUS: i64 = 8;

/// The lexicographically smallest `alpha` (in frame coordinates) in the
/// smallest box `[-R, R]^r` holding any point with `h_k(alpha) ≥ 1` for `k`
/// in `plus` and `≤ -1` for `k` in `minus`.
fn sign_point(frame: &FaceFrame, plus: &[usize], minus: &[usize]) -> Result<Vec<Int>, GkzError> {
    let one = Int::from(1);
    let constraints: Vec<LinearConstraint<Int>> = plus
        .iter()
        .map(|&k| LinearConstraint::ge(frame.facets[k].support.coefficients.clone(), one.clone()))
        .chain(minus.iter().map(|&k| {
            LinearConstraint::le(frame.facets[k].support.coefficients.clone(), -one.clone())
        }))
        .collect();
    let Some(x) = rational_lp_feasible(frame.rank(), &constraints) else {
        let cols = |ks: &[usize]| {
            ks.iter()
                .map(|&k| frame.facets[k].columns.clone())
                .collect()
        };
        return Err(GkzError::SignPatternUnrealizable {
            positive: cols(plus),
            negative: cols(minus),
        });
    };
    let fallback = clear_denominators(&x);
    let satisfied = |p: &[Int]| {
        constraints.iter().all(|c| {
            c.is_satisfied_by(
                &p.iter()
                    .cloned()
                    .map(crate::Rat::from_integer)
                    .collect::<Vec<_>>(),
            )
        })
    };
    let radius = fallback
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Int::zero);
    let r = frame.rank();
    for big_r in 1..=MAX_BOX_RADIUS {
        if Int::from(big_r) > radius {
            break;
        }
        let (lo, hi) = (Int::from(-big_r), Int::from(big_r));
        let mut p = vec![lo.clone(); r];
        'odometer: loop {
            if satisfied(&p) {
                return Ok(p);
            }
            let mut i = r;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                if p[i] < hi {
                    p[i] += 1;
                    continue 'odometer;
                }
                p[i] = lo.clone();
            }
        }
    }
    Ok(fallback)
}
