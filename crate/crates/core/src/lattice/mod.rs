//! Exact integer and rational linear algebra: normal forms, kernels,
//! lattice membership and small linear feasibility problems.
//!
//! Everything here is generic over [`ExactInt`], so the same routines run on
//! machine integers in tests and on `BigInt` in the rest of the crate.

mod gaussian;
mod hnf;
mod kernel;
mod lp;
mod matrix;
mod scalar;
mod snf;

pub use gaussian::{
    add_int_vec, add_vec, combine, eval, format_ratio, from_integers, imag_parts,
    integer_difference, parse_ratio, real_parts, sub_int_vec, Gaussian,
};
pub use hnf::{hnf, member_of_image_lattice, HermiteForm};
pub use kernel::{kernel_lattice, solve_rational, LatticeBasis};
pub use lp::{rational_lp_feasible, LinearConstraint, Relation};
pub use matrix::Matrix;
pub use scalar::{clear_denominators, common_denominator, dot, dot_ratio, gcd_all, ExactInt};
pub use snf::{inverse_unimodular, quotient_representatives, snf, SmithForm};
