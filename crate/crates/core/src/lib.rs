//! Exact combinatorics of A-hypergeometric (GKZ) systems.
//!
//! The crate is layered bottom-up:
//!
//! - [`lattice`]: integer normal forms, kernels, lattice membership and exact
//!   Fourier–Motzkin feasibility, generic over [`lattice::ExactInt`].
//! - [`cone`]: facets, primitive support functions, the face lattice and
//!   normality certificates for the cone over the columns of `A`.
//! - [`param`]: classification of facet values of a parameter, cosets
//!   `CF + Z^d`, and the constructive parameters `gamma`, `lambda`, `beta'`.
//! - [`orbit`]: fiber and cofiber supports as face sets, Gauss–Manin
//!   classification and descriptors over open face sets.
//! - [`presentation`]: Euler operators, toric ideals, restriction and
//!   projection descriptors and the duality parameter.
//! - [`oracle`]: brute-force reference implementations used for
//!   cross-checking.
//!
//! Everything above the lattice layer runs on arbitrary-precision integers
//! through the aliases defined here.

pub mod cone;
pub mod error;
pub mod json;
pub mod lattice;
pub mod oracle;
pub mod orbit;
pub mod param;
pub mod presentation;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use cone::{Configuration, Face, Facet, NormalityCertificate, NormalityOptions, SupportFn};
pub use error::GkzError;

pub type Int = BigInt;
pub type Rat = Ratio<BigInt>;
pub type GaussRat = lattice::Gaussian<BigInt>;
pub type IntMatrix = lattice::Matrix<BigInt>;

/// A parameter `beta` in `Q(i)^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parameter(Vec<GaussRat>);

impl Parameter {
    pub fn new(entries: Vec<GaussRat>) -> Self {
        Self(entries)
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![GaussRat::zero(); d])
    }

    pub fn from_integers(v: &[Int]) -> Self {
        Self(lattice::from_integers(v))
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self(
            v.iter()
                .map(|&x| GaussRat::from_integer(Int::from(x)))
                .collect(),
        )
    }

    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self, GkzError> {
        entries
            .iter()
            .map(|s| s.as_ref().parse::<GaussRat>())
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<GaussRat> {
        self.0
    }

    /// The integer vector this parameter equals, if every entry is one.
    pub fn as_integers(&self) -> Option<Vec<Int>> {
        self.0.iter().map(GaussRat::as_integer).collect()
    }

    pub fn add_int(&self, z: &[Int]) -> Self {
        Self(lattice::add_int_vec(&self.0, z))
    }

    pub fn sub_int(&self, z: &[Int]) -> Self {
        Self(lattice::sub_int_vec(&self.0, z))
    }

    /// `self - other` when it is an integer vector.
    pub fn integer_difference(&self, other: &Parameter) -> Option<Vec<Int>> {
        lattice::integer_difference(&self.0, &other.0)
    }
}

impl std::ops::Neg for Parameter {
    type Output = Parameter;
    fn neg(self) -> Parameter {
        Parameter(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Deref for Parameter {
    type Target = [GaussRat];
    fn deref(&self) -> &[GaussRat] {
        &self.0
    }
}

impl FromStr for Parameter {
    type Err = GkzError;

    /// Comma-separated entries, e.g. `"-1, 1/2, 1+i/2"`.
    fn from_str(s: &str) -> Result<Self, GkzError> {
        let parts: Vec<&str> = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .collect();
        Self::parse(&parts)
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
