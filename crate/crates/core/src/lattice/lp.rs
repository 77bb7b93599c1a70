//! Exact rational feasibility of small systems of linear inequalities.
//!
//! Fourier–Motzkin elimination with back-substitution. Each variable is
//! eliminated from the last to the first; the intermediate systems are kept
//! so a witness can be rebuilt one coordinate at a time. Dimensions here are
//! single digits, so the quadratic blow-up per step is tolerable once
//! duplicate rows are removed.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::scalar::ExactInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
}

/// `coeffs · x  (>= | <=)  bound`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearConstraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub bound: T,
}

impl<T: ExactInt> LinearConstraint<T> {
    pub fn ge(coeffs: Vec<T>, bound: T) -> Self {
        Self {
            coeffs,
            relation: Relation::Ge,
            bound,
        }
    }

    pub fn le(coeffs: Vec<T>, bound: T) -> Self {
        Self {
            coeffs,
            relation: Relation::Le,
            bound,
        }
    }

    pub fn is_satisfied_by(&self, x: &[Ratio<T>]) -> bool {
        let lhs = super::scalar::dot_ratio(&self.coeffs, x);
        let b = Ratio::from_integer(self.bound.clone());
        match self.relation {
            Relation::Ge => lhs >= b,
            Relation::Le => lhs <= b,
        }
    }
}

/// Row `a · x >= b`, scaled so the first nonzero |a_i| is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Row<T: Clone + num_integer::Integer> {
    a: Vec<Ratio<T>>,
    b: Ratio<T>,
}

impl<T: ExactInt> Row<T> {
    fn normalized(a: Vec<Ratio<T>>, b: Ratio<T>) -> Self {
        match a.iter().find(|v| !v.is_zero()).map(|v| v.abs()) {
            Some(s) => Row {
                a: a.into_iter().map(|v| v / s.clone()).collect(),
                b: b / s,
            },
            None => Row { a, b },
        }
    }

    fn is_constant(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }
}

/// Returns a rational point satisfying every constraint, or `None`.
///
/// `dim` is the number of variables; every constraint must have `dim`
/// coefficients. Among admissible values each coordinate is chosen as the
/// integer closest to zero when one exists, otherwise the midpoint of its
/// feasible interval, so the result is deterministic.
pub fn rational_lp_feasible<T: ExactInt>(
    dim: usize,
    constraints: &[LinearConstraint<T>],
) -> Option<Vec<Ratio<T>>> {
    let mut system: BTreeSet<Row<T>> = BTreeSet::new();
    for c in constraints {
        assert_eq!(
            c.coeffs.len(),
            dim,
            "constraint has the wrong number of coefficients"
        );
        let sign = match c.relation {
            Relation::Ge => T::one(),
            Relation::Le => -T::one(),
        };
        let a = c
            .coeffs
            .iter()
            .map(|v| Ratio::from_integer(v.clone() * sign.clone()))
            .collect();
        let b = Ratio::from_integer(c.bound.clone() * sign.clone());
        let row = Row::normalized(a, b);
        if row.is_constant() {
            if row.b.is_positive() {
                return None;
            }
            continue;
        }
        system.insert(row);
    }

    // stages[k] only involves variables 0..k
    let mut stages: Vec<Vec<Row<T>>> = vec![Vec::new(); dim + 1];
    stages[dim] = system.into_iter().collect();
    for k in (0..dim).rev() {
        let mut next: BTreeSet<Row<T>> = BTreeSet::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for row in &stages[k + 1] {
            let c = &row.a[k];
            if c.is_zero() {
                next.insert(row.clone());
            } else if c.is_positive() {
                lower.push(row);
            } else {
                upper.push(row);
            }
        }
        for lo in &lower {
            for up in &upper {
                // lo: c x_k + ... >= b  (c > 0);  up: -e x_k + ... >= f  (e > 0)
                let c = lo.a[k].clone();
                let e = -up.a[k].clone();
                let a: Vec<Ratio<T>> =
                    lo.a.iter()
                        .zip(&up.a)
                        .map(|(x, y)| x.clone() * e.clone() + y.clone() * c.clone())
                        .collect();
                let b = lo.b.clone() * e.clone() + up.b.clone() * c;
                let row = Row::normalized(a, b);
                if row.is_constant() {
                    if row.b.is_positive() {
                        return None;
                    }
                    continue;
                }
                next.insert(row);
            }
        }
        stages[k] = next.into_iter().collect();
    }

    let mut x: Vec<Ratio<T>> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut lo: Option<Ratio<T>> = None;
        let mut hi: Option<Ratio<T>> = None;
        for row in &stages[k + 1] {
            let c = &row.a[k];
            if c.is_zero() {
                continue;
            }
            let partial = row.a[..k]
                .iter()
                .zip(&x)
                .fold(Ratio::zero(), |acc: Ratio<T>, (p, q)| {
                    acc + p.clone() * q.clone()
                });
            let bound = (row.b.clone() - partial) / c.clone();
            if c.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        x.push(pick(lo, hi));
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&x)));
    Some(x)
}

fn pick<T: ExactInt>(lo: Option<Ratio<T>>, hi: Option<Ratio<T>>) -> Ratio<T> {
    let zero = Ratio::zero();
    match (lo, hi) {
        (None, None) => zero,
        (Some(l), None) => {
            if l <= zero {
                zero
            } else {
                l.ceil()
            }
        }
        (None, Some(h)) => {
            if h >= zero {
                zero
            } else {
                h.floor()
            }
        }
        (Some(l), Some(h)) => {
            if l <= zero && zero <= h {
                zero
            } else if l > zero && l.ceil() <= h {
                l.ceil()
            } else if h < zero && h.floor() >= l {
                h.floor()
            } else {
                (l + h) / Ratio::from_integer(T::one() + T::one())
            }
        }
    }
}
