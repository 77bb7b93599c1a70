//! Exact arithmetic on parameters `beta` in `Q(i)^d`.
//!
//! All functions here take parameters in the working coordinates of the
//! [`Configuration`] (see [`Configuration::to_working`]); when `ZA = Z^d`
//! those are the input coordinates.

mod dual;
mod gamma;
mod lambda;

use serde::Serialize;

pub use dual::dual_parameter;
pub use gamma::find_gamma;
pub use lambda::{
    find_lambda, find_lambda_with, lambda_postconditions, LambdaChoice, LambdaPolicy,
    LambdaViolation,
};

use crate::cone::{Configuration, Face, SupportFn};
use crate::error::GkzError;
use crate::lattice::{
    eval, kernel_lattice, member_of_image_lattice, quotient_representatives, LatticeBasis,
};
use crate::{GaussRat, Int, IntMatrix, Parameter};

/// Where a facet value lands: `N`, the negative integers, or outside `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HClass {
    NatInt,
    NegInt,
    NonInt,
}

impl HClass {
    pub fn of(value: &GaussRat) -> Self {
        match value.as_integer() {
            Some(v) if v >= Int::from(0) => HClass::NatInt,
            Some(_) => HClass::NegInt,
            None => HClass::NonInt,
        }
    }

    pub fn is_integral(self) -> bool {
        self != HClass::NonInt
    }
}

pub fn classify_h(h: &SupportFn, beta: &[GaussRat]) -> HClass {
    HClass::of(&h.eval(beta))
}

/// `h_G(beta)` for every facet `G`, in facet order.
pub fn facet_values(config: &Configuration, beta: &[GaussRat]) -> Vec<GaussRat> {
    config
        .facets()
        .iter()
        .map(|f| f.support.eval(beta))
        .collect()
}

pub fn facet_classes(config: &Configuration, beta: &[GaussRat]) -> Vec<HClass> {
    facet_values(config, beta).iter().map(HClass::of).collect()
}

/// True iff `beta` is not strongly resonant: no facet value is a negative integer.
pub fn not_strongly_resonant(config: &Configuration, beta: &[GaussRat]) -> bool {
    facet_classes(config, beta)
        .iter()
        .all(|&c| c != HClass::NegInt)
}

/// Integer functionals vanishing on `CF`, as the rows of a matrix.
///
/// The rows form a saturated lattice basis, so the matrix maps `Z^d` onto `Z^k`.
fn vanishing_functionals(config: &Configuration, face: &Face) -> IntMatrix {
    let a = config.matrix();
    let f = a.select_columns(&face.columns);
    let basis = kernel_lattice(&f.transpose());
    IntMatrix::from_rows(basis.vectors, a.rows()).expect("kernel vectors have ambient length")
}

/// A witness `lambda` in `CF` with `beta - lambda` in `Z^d`, if `beta` lies in `CF + Z^d`.
///
/// With `L` the saturated functionals vanishing on `CF`, membership holds iff
/// `L beta` is an integer vector; then `L z = L beta` has an integer solution
/// and `lambda = beta - z` is killed by `L`.
pub fn in_cf_plus_zd(config: &Configuration, face: &Face, beta: &[GaussRat]) -> Option<Parameter> {
    let l = vanishing_functionals(config, face);
    let values: Option<Vec<Int>> = (0..l.rows())
        .map(|i| eval(l.row(i), beta).as_integer())
        .collect();
    let z = member_of_image_lattice(&values?, &l)?;
    Some(Parameter::new(beta.to_vec()).sub_int(&z))
}

/// A class `lambda + ZF` with `lambda` in `CF` and `beta - lambda` in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClass {
    pub representative: Parameter,
    pub modulus: LatticeBasis<Int>,
}

/// Basis of the saturation `Z^d ∩ CF`.
fn saturation_basis(config: &Configuration, face: &Face) -> LatticeBasis<Int> {
    kernel_lattice(&vanishing_functionals(config, face))
}

/// All classes `lambda + ZF` with `lambda` in `CF` and `beta - lambda` in `Z^d`.
///
/// Their number is the index `[Z^d ∩ CF : ZF]`, read off the Smith form of
/// the columns of `F` written in a basis of the saturation.
pub fn coset_classes(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
) -> Result<Vec<CosetClass>, GkzError> {
    let witness = in_cf_plus_zd(config, face, beta).ok_or_else(|| GkzError::NotInCoset {
        face: face.columns.clone(),
    })?;
    let d = config.dim();
    let saturation = saturation_basis(config, face);
    let columns = config.matrix().select_columns(&face.columns).columns();
    let modulus = LatticeBasis::spanned_by(&columns, d);
    let local: Vec<Vec<Int>> = columns
        .iter()
        .map(|c| {
            saturation
                .coordinates(c)
                .expect("face columns lie in the saturation")
        })
        .collect();
    let local = IntMatrix::from_columns(&local, saturation.rank());
    let embed = saturation.column_matrix();
    Ok(quotient_representatives(&local)
        .into_iter()
        .map(|y| {
            let shift = if y.is_empty() {
                vec![Int::from(0); d]
            } else {
                embed.mul_vec(&y)
            };
            CosetClass {
                representative: witness.add_int(&shift),
                modulus: modulus.clone(),
            }
        })
        .collect())
}

/// The index `[Z^d ∩ CF : ZF]`.
pub fn saturation_index(config: &Configuration, face: &Face) -> Int {
    let saturation = saturation_basis(config, face);
    let columns = config.matrix().select_columns(&face.columns).columns();
    let local: Vec<Vec<Int>> = columns
        .iter()
        .map(|c| {
            saturation
                .coordinates(c)
                .expect("face columns lie in the saturation")
        })
        .collect();
    let local = IntMatrix::from_columns(&local, saturation.rank());
    crate::lattice::snf(&local)
        .invariant_factors()
        .into_iter()
        .fold(Int::from(1), |acc, s| acc * num_traits::Signed::abs(&s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic() -> Configuration {
        Configuration::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]).unwrap()
    }

    fn conic() -> Configuration {
        Configuration::from_i64_rows(&[&[1, 1, 1], &[0, 1, 2]]).unwrap()
    }

    fn p(s: &[&str]) -> Parameter {
        Parameter::parse(s).unwrap()
    }

    #[test]
    fn classification_of_facet_values() {
        let c = twisted_cubic();
        let beta = p(&["-1", "1"]);
        let values: Vec<String> = facet_values(&c, &beta)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(values, vec!["1", "-4"]);
        assert_eq!(
            facet_classes(&c, &beta),
            vec![HClass::NatInt, HClass::NegInt]
        );
        let h = SupportFn {
            coefficients: vec![Int::from(0), Int::from(1)],
        };
        assert_eq!(classify_h(&h, &p(&["0", "1/2"])), HClass::NonInt);
        assert_eq!(classify_h(&h, &p(&["0", "1+i"])), HClass::NonInt);
    }

    #[test]
    fn strong_resonance() {
        let c = twisted_cubic();
        assert!(not_strongly_resonant(&c, &p(&["0", "0"])));
        assert!(!not_strongly_resonant(&c, &p(&["-1", "1"])));
        assert!(not_strongly_resonant(&c, &p(&["1/3", "1/5"])));
    }

    #[test]
    fn coset_membership_on_a_ray() {
        let c = conic();
        let f = c.face(&[2]).unwrap();
        assert_eq!(
            in_cf_plus_zd(&c, f, &p(&["1/2", "1"])),
            Some(p(&["1/2", "1"]))
        );

        let c = twisted_cubic();
        let f = c.face(&[3]).unwrap();
        let lambda = in_cf_plus_zd(&c, f, &p(&["1/3", "0"])).unwrap();
        // lambda is a multiple of (1, 3) differing from beta by an integer vector
        assert_eq!(lambda[1].clone(), lambda[0].scale_int(&Int::from(3)));
        assert!(lambda.integer_difference(&p(&["1/3", "0"])).is_some());
        assert!(in_cf_plus_zd(&c, c.face(&[0]).unwrap(), &p(&["1/3", "1/5"])).is_none());
    }

    #[test]
    fn integer_parameters_lie_in_every_coset() {
        let c = twisted_cubic();
        for f in c.faces() {
            assert!(in_cf_plus_zd(&c, f, &p(&["-2", "5"])).is_some());
        }
        let empty = c.face(&[]).unwrap();
        assert_eq!(
            in_cf_plus_zd(&c, empty, &p(&["-2", "5"])),
            Some(p(&["0", "0"]))
        );
    }

    #[test]
    fn single_class_for_saturated_faces() {
        let c = twisted_cubic();
        for f in c.faces() {
            assert_eq!(saturation_index(&c, f), Int::from(1));
            assert_eq!(coset_classes(&c, f, &p(&["-1", "1"])).unwrap().len(), 1);
        }
        let top = coset_classes(&c, c.top_face(), &p(&["1/2", "1"])).unwrap();
        assert_eq!(top[0].representative, p(&["1/2", "1"]));
    }

    #[test]
    fn non_saturated_face_has_two_classes() {
        // F spans the plane z = 0 but ZF = {(x, y, 0) : y even}.
        let c =
            Configuration::from_i64_rows(&[&[1, 1, 0, 0], &[0, 2, 0, 1], &[0, 0, 1, 1]]).unwrap();
        let f = c.face(&[0, 1]).unwrap();
        assert_eq!(saturation_index(&c, f), Int::from(2));
        let classes = coset_classes(&c, f, &p(&["1/2", "0", "0"])).unwrap();
        assert_eq!(classes.len(), 2);
        let diff = classes[0]
            .representative
            .integer_difference(&classes[1].representative)
            .unwrap();
        assert!(!classes[0].modulus.contains(&diff));
        assert_eq!(
            coset_classes(&c, f, &p(&["0", "0", "1/2"])),
            Err(GkzError::NotInCoset { face: vec![0, 1] })
        );
    }
}
