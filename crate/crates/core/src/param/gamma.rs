use super::{facet_classes, HClass};
use crate::cone::{combinations, Configuration};
use crate::error::GkzError;
use crate::lattice::{clear_denominators, rational_lp_feasible, LinearConstraint};
use crate::{GaussRat, Int};

/// An integer vector `gamma` whose facet values follow the classes of `beta`.
///
/// For every facet `G`: `h_G(gamma) > 0` when `h_G(beta)` is in `N`,
/// `h_G(gamma) < 0` when it is a negative integer, and `h_G(gamma) != 0` when
/// it is not an integer. Non-integral facets are first asked for a positive
/// value; when that sign pattern has no solution, patterns with more negative
/// non-integral facets are tried in order until one is feasible.
pub fn find_gamma(config: &Configuration, beta: &[GaussRat]) -> Result<Vec<Int>, GkzError> {
    let classes = facet_classes(config, beta);
    let free: Vec<usize> = (0..classes.len())
        .filter(|&k| classes[k] == HClass::NonInt)
        .collect();
    for flipped in 0..=free.len() {
        for negatives in combinations(free.len(), flipped) {
            let negative: Vec<usize> = negatives.iter().map(|&i| free[i]).collect();
            if let Some(gamma) = solve_pattern(config, &classes, &negative) {
                verify(config, &classes, &gamma)?;
                return Ok(gamma);
            }
        }
    }
    Err(GkzError::Internal(format!(
        "no gamma realizes facet classes {classes:?}; facets {:?}",
        config
            .facets()
            .iter()
            .map(|f| &f.columns)
            .collect::<Vec<_>>()
    )))
}

fn solve_pattern(
    config: &Configuration,
    classes: &[HClass],
    negative_free: &[usize],
) -> Option<Vec<Int>> {
    let one = Int::from(1);
    let constraints: Vec<LinearConstraint<Int>> = config
        .facets()
        .iter()
        .zip(classes)
        .enumerate()
        .map(|(k, (f, class))| {
            let h = f.support.coefficients.clone();
            let negative = *class == HClass::NegInt || negative_free.contains(&k);
            if negative {
                LinearConstraint::le(h, -one.clone())
            } else {
                LinearConstraint::ge(h, one.clone())
            }
        })
        .collect();
    let x = rational_lp_feasible(config.dim(), &constraints)?;
    // scaling by a positive integer keeps every strict sign
    Some(clear_denominators(&x))
}

fn verify(config: &Configuration, classes: &[HClass], gamma: &[Int]) -> Result<(), GkzError> {
    for (f, class) in config.facets().iter().zip(classes) {
        let v = f.support.eval_int(gamma);
        let ok = match class {
            HClass::NatInt => v > Int::from(0),
            HClass::NegInt => v < Int::from(0),
            HClass::NonInt => v != Int::from(0),
        };
        if !ok {
            return Err(GkzError::Internal(format!(
                "gamma {gamma:?} gives h = {v} on facet {:?} of class {class:?}",
                f.columns
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Parameter;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn twisted_cubic_examples() {
        let c = Configuration::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]).unwrap();
        assert_eq!(
            find_gamma(&c, &Parameter::from_i64(&[0, 0])).unwrap(),
            ints(&[1, 1])
        );
        assert_eq!(
            find_gamma(&c, &Parameter::from_i64(&[-1, 1])).unwrap(),
            ints(&[0, 1])
        );
    }

    #[test]
    fn positive_pattern_can_be_infeasible() {
        // Facets y, z, x - y, x - z. Here y and x - y are negative integers,
        // so x < 0 and the non-integral z and x - z cannot both be positive.
        let c =
            Configuration::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]]).unwrap();
        let beta = Parameter::parse(&["-2", "-1", "1/2"]).unwrap();
        let gamma = find_gamma(&c, &beta).unwrap();
        let classes = facet_classes(&c, &beta);
        verify(&c, &classes, &gamma).unwrap();
    }
}
