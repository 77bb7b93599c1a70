//! GKZ presentations and the symbolic answers for restriction, projection
//! and holonomic duality.
//!
//! Descriptors record `M_F(lambda) ⊗ ⋀C^{d_{A/F}}` placed in degrees
//! `-k - s` with multiplicity `C(d_{A/F}, k)`. Parameters are in the working
//! coordinates of the [`Configuration`].

mod groebner;

use serde::Serialize;

pub use groebner::{groebner_basis, reduce, Binomial, GroebnerLimits, MonomialOrder};

use crate::cone::{Configuration, Face};
use crate::error::GkzError;
use crate::lattice::kernel_lattice;
use crate::orbit::{cofsupp, exterior_degrees, fsupp};
use crate::param::{
    dual_parameter, facet_classes, find_lambda_with, in_cf_plus_zd, HClass, LambdaPolicy,
};
use crate::{GaussRat, Int, IntMatrix, Parameter};

/// `E_i - beta_i` with `E_i = Σ_j a_ij x_j ∂_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerOperator {
    pub row: usize,
    pub coefficients: Vec<Int>,
    pub beta: GaussRat,
}

pub fn euler_operators(a: &IntMatrix, beta: &[GaussRat]) -> Vec<EulerOperator> {
    (0..a.rows())
        .map(|i| EulerOperator {
            row: i,
            coefficients: a.row(i).to_vec(),
            beta: beta[i].clone(),
        })
        .collect()
}

/// `∂^{u_plus} - ∂^{u_minus}` with `A (u_plus - u_minus) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialGenerator {
    pub u_plus: Vec<Int>,
    pub u_minus: Vec<Int>,
}

impl BinomialGenerator {
    pub fn from_kernel_vector(u: &[Int]) -> Self {
        let zero = Int::from(0);
        Self {
            u_plus: u.iter().map(|x| x.max(&zero).clone()).collect(),
            u_minus: u.iter().map(|x| (-x).max(zero.clone())).collect(),
        }
    }

    pub fn difference(&self) -> Vec<Int> {
        self.u_plus
            .iter()
            .zip(&self.u_minus)
            .map(|(p, m)| p - m)
            .collect()
    }

    fn to_binomial(
        &self,
        order: MonomialOrder,
        prefix: usize,
    ) -> Result<Option<Binomial>, GkzError> {
        let exps = |v: &[Int]| -> Result<Vec<u32>, GkzError> {
            std::iter::repeat_n(Ok(0), prefix)
                .chain(v.iter().map(|x| {
                    u32::try_from(x)
                        .map_err(|_| GkzError::ScaleLimit(format!("exponent {x} is too large")))
                }))
                .collect()
        };
        Ok(order.binomial(exps(&self.u_plus)?, exps(&self.u_minus)?))
    }

    fn from_binomial(b: &Binomial, skip: usize) -> Self {
        let ints = |v: &[u32]| v[skip..].iter().map(|&e| Int::from(e)).collect();
        Self {
            u_plus: ints(&b.lead),
            u_minus: ints(&b.trail),
        }
    }
}

/// Binomials of a basis of `ker_Z(A)`; they generate the lattice ideal,
/// which can be strictly smaller than the toric ideal.
pub fn lattice_ideal_generators(a: &IntMatrix) -> Vec<BinomialGenerator> {
    kernel_lattice(a)
        .vectors
        .iter()
        .map(|u| BinomialGenerator::from_kernel_vector(u))
        .collect()
}

/// The reduced grevlex Gröbner basis of the toric ideal `I_A`.
///
/// The lattice ideal is saturated by the product of all variables through an
/// auxiliary variable `t` and the generator `t ∂_1 ... ∂_n - 1`, eliminating `t`.
pub fn toric_ideal_generators(
    a: &IntMatrix,
    limits: &GroebnerLimits,
) -> Result<Vec<BinomialGenerator>, GkzError> {
    let n = a.cols();
    let order = MonomialOrder::EliminateFirst;
    let mut gens = Vec::new();
    for g in lattice_ideal_generators(a) {
        gens.extend(g.to_binomial(order, 1)?);
    }
    gens.push(Binomial {
        lead: vec![1; n + 1],
        trail: vec![0; n + 1],
    });
    Ok(groebner_basis(&gens, order, limits)?
        .iter()
        .filter(|b| b.lead[0] == 0 && b.trail[0] == 0)
        .map(|b| BinomialGenerator::from_binomial(b, 1))
        .collect())
}

/// Whether every binomial of `members` lies in the ideal generated by `generators`.
pub fn ideal_contains(
    generators: &[BinomialGenerator],
    members: &[BinomialGenerator],
    limits: &GroebnerLimits,
) -> Result<bool, GkzError> {
    let order = MonomialOrder::Grevlex;
    let mut gens = Vec::new();
    for g in generators {
        gens.extend(g.to_binomial(order, 0)?);
    }
    let gb = groebner_basis(&gens, order, limits)?;
    for m in members {
        if let Some(b) = m.to_binomial(order, 0)? {
            if reduce(&b, &gb, order).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How the vanishing condition of the restriction is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Nonzero iff `h_G(beta) ∈ N` on every facet `G ⊇ F`.
    #[default]
    Default,
    /// The condition of the projection, repeated verbatim.
    AsPrinted,
}

impl std::str::FromStr for Mode {
    type Err = GkzError;
    fn from_str(s: &str) -> Result<Self, GkzError> {
        match s {
            "default" => Ok(Mode::Default),
            "as-printed" => Ok(Mode::AsPrinted),
            other => Err(GkzError::InvalidInput(format!("unknown mode {other:?}"))),
        }
    }
}

/// `M_F(lambda) ⊗ ⋀C^{d_{A/F}}` in degrees `-k - shift`, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDescriptor {
    pub zero: bool,
    pub face: Vec<usize>,
    pub lambda: Option<Parameter>,
    pub shift: i64,
    pub degrees: Vec<(i64, u64)>,
    pub mode: Mode,
    /// Facets of `F` over which the classes of `beta` disagreed while choosing `lambda`.
    pub conflicts: Vec<Vec<usize>>,
}

impl ModuleDescriptor {
    fn zero(face: &Face, shift: i64, mode: Mode) -> Self {
        Self {
            zero: true,
            face: face.columns.clone(),
            lambda: None,
            shift,
            degrees: Vec::new(),
            mode,
            conflicts: Vec::new(),
        }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.degrees.iter().map(|(_, m)| m).sum()
    }
}

fn descriptor(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
    class: HClass,
    policy: LambdaPolicy,
    shift: i64,
    mode: Mode,
) -> Result<ModuleDescriptor, GkzError> {
    let classes = facet_classes(config, beta);
    let nonzero = in_cf_plus_zd(config, face, beta).is_some()
        && face.containing_facets.iter().all(|&g| classes[g] == class);
    if !nonzero {
        return Ok(ModuleDescriptor::zero(face, shift, mode));
    }
    let (d_af, _) = config.face_quantities(face);
    let choice = find_lambda_with(config, face, beta, policy)?;
    Ok(ModuleDescriptor {
        zero: false,
        face: face.columns.clone(),
        lambda: Some(choice.lambda),
        shift,
        degrees: exterior_degrees(d_af, shift),
        mode,
        conflicts: choice.conflicts,
    })
}

/// `pi_{F+} M_A(beta)`: nonzero iff `beta ∈ CF + Z^d` and `h_G(beta)` is a
/// negative integer for every facet `G ⊇ F`; shift `n_{A/F} - d_{A/F}`.
pub fn projection(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
) -> Result<ModuleDescriptor, GkzError> {
    config.require_normal("the projection formula")?;
    let (d_af, n_af) = config.face_quantities(face);
    let shift = n_af as i64 - d_af as i64;
    descriptor(
        config,
        face,
        beta,
        HClass::NegInt,
        LambdaPolicy::PreferNonNegative,
        shift,
        Mode::Default,
    )
}

/// `i_F^+ M_A(beta)` with shift `-n_{A/F}`. In [`Mode::Default`] it is nonzero
/// iff `beta ∈ CF + Z^d` and `h_G(beta) ∈ N` for every facet `G ⊇ F`.
pub fn restriction(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
    mode: Mode,
) -> Result<ModuleDescriptor, GkzError> {
    config.require_normal("the restriction formula")?;
    let (_, n_af) = config.face_quantities(face);
    let class = match mode {
        Mode::Default => HClass::NatInt,
        Mode::AsPrinted => HClass::NegInt,
    };
    descriptor(
        config,
        face,
        beta,
        class,
        LambdaPolicy::PreferNegative,
        -(n_af as i64),
        mode,
    )
}

/// Restriction of the Fourier–Laplace transform: the projection moved by
/// `[n_{A/F}]`, i.e. shift `-d_{A/F}`, under the projection's condition.
pub fn hat_restriction(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
) -> Result<ModuleDescriptor, GkzError> {
    config.require_normal("the projection formula")?;
    let (d_af, _) = config.face_quantities(face);
    descriptor(
        config,
        face,
        beta,
        HClass::NegInt,
        LambdaPolicy::PreferNonNegative,
        -(d_af as i64),
        Mode::Default,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCertificate {
    pub beta_prime: Parameter,
    /// `fsupp(beta') = cofsupp(beta)`.
    pub fsupp_exchanged: bool,
    /// `cofsupp(beta') = fsupp(beta)`.
    pub cofsupp_exchanged: bool,
}

/// The parameter of the holonomic dual, for homogeneous normal `A`.
pub fn dual_system(config: &Configuration, beta: &[GaussRat]) -> Result<DualCertificate, GkzError> {
    config.require_normal("the duality theorem")?;
    if config.is_homogeneous().is_none() {
        return Err(GkzError::NotHomogeneous);
    }
    let beta_prime = dual_parameter(config, beta)?;
    let fsupp_exchanged = fsupp(config, &beta_prime)? == cofsupp(config, beta)?;
    let cofsupp_exchanged = cofsupp(config, &beta_prime)? == fsupp(config, beta)?;
    if !fsupp_exchanged || !cofsupp_exchanged {
        return Err(GkzError::Internal(format!(
            "supports of {beta_prime} and {:?} are not exchanged",
            beta
        )));
    }
    Ok(DualCertificate {
        beta_prime,
        fsupp_exchanged,
        cofsupp_exchanged,
    })
}
