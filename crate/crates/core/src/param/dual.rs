use super::{facet_classes, facet_values, find_gamma, HClass};
use crate::cone::Configuration;
use crate::error::GkzError;
use crate::{GaussRat, Parameter};

/// A parameter `beta' ∈ -beta + Z^d` with `h_G(beta') ∈ N` iff
/// `h_G(beta) ∈ Z_{<0}` for every facet `G`.
///
/// `-beta` works unless some facet value of `beta` is zero; then
/// `beta + gamma` has no zero facet value and `beta' = -(beta + gamma)`.
pub fn dual_parameter(config: &Configuration, beta: &[GaussRat]) -> Result<Parameter, GkzError> {
    let beta = Parameter::new(beta.to_vec());
    let candidate = if facet_values(config, &beta).iter().all(|v| !v.is_zero()) {
        -beta.clone()
    } else {
        let gamma = find_gamma(config, &beta)?;
        -beta.add_int(&gamma)
    };
    let before = facet_classes(config, &beta);
    let after = facet_classes(config, &candidate);
    let exchanged = before
        .iter()
        .zip(&after)
        .all(|(b, a)| (*a == HClass::NatInt) == (*b == HClass::NegInt));
    if !exchanged {
        return Err(GkzError::Internal(format!(
            "dual parameter {candidate} has classes {after:?} against {before:?}"
        )));
    }
    Ok(candidate)
}
