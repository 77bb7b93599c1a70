//! Normality of the semigroup NA via the Hilbert basis of its saturation.
//!
//! Every lattice point of the cone decomposes as `B floor(t) + p` where `B`
//! is an invertible d×d submatrix of columns and `p` lies in the half-open
//! parallelepiped spanned by `B`. The columns together with those
//! parallelepiped points therefore generate the saturated semigroup, and its
//! Hilbert basis is the set of irreducible elements among them. NA is normal
//! iff every Hilbert basis element is a nonnegative integer combination of
//! columns, which is decided by memoized descent on a positive grading.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use super::facets::{combinations, Facet};
use crate::error::GkzError;
use crate::lattice::{quotient_representatives, solve_rational};
use crate::{Int, IntMatrix, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalityOptions {
    /// Candidates of degree above `factor × (max column degree)` abort the check.
    pub degree_cap_factor: u32,
    /// Upper bound on the number of parallelepiped points examined.
    pub max_candidates: usize,
}

impl Default for NormalityOptions {
    fn default() -> Self {
        Self {
            degree_cap_factor: 10,
            max_candidates: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityCertificate {
    pub normal: bool,
    /// Hilbert basis of the saturation, sorted by degree then lexicographically.
    pub hilbert_basis: Vec<Vec<Int>>,
    /// A point of the saturation outside NA (present iff not normal).
    pub witness: Option<Vec<Int>>,
    /// The grading used for the degree bound.
    pub grading: Vec<Int>,
}

/// Decides membership in the semigroup generated by a set of columns.
pub struct SemigroupMembership<'a> {
    generators: Vec<Vec<Int>>,
    facets: &'a [Facet],
    memo: HashMap<Vec<Int>, bool>,
}

impl<'a> SemigroupMembership<'a> {
    /// `facets` are used only to prune points outside the cone, so they must
    /// be the facets of the cone over `columns`.
    pub fn new(columns: &[Vec<Int>], facets: &'a [Facet]) -> Self {
        let generators: BTreeSet<Vec<Int>> = columns
            .iter()
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        Self {
            generators: generators.into_iter().collect(),
            facets,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, x: &[Int]) -> bool {
        if x.iter().all(Zero::is_zero) {
            return true;
        }
        if self
            .facets
            .iter()
            .any(|f| f.support.eval_int(x).is_negative())
        {
            return false;
        }
        if let Some(&known) = self.memo.get(x) {
            return known;
        }
        let mut found = false;
        for i in 0..self.generators.len() {
            let rest: Vec<Int> = x
                .iter()
                .zip(&self.generators[i])
                .map(|(a, b)| a - b)
                .collect();
            if self.contains(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(x.to_vec(), found);
        found
    }
}

pub(crate) fn normality(
    a: &IntMatrix,
    facets: &[Facet],
    options: &NormalityOptions,
) -> Result<NormalityCertificate, GkzError> {
    let d = a.rows();
    let columns = a.columns();
    // Sum of all support functions: positive on every nonzero column of a pointed cone.
    let mut grading = vec![Int::zero(); d];
    for f in facets {
        for (g, c) in grading.iter_mut().zip(&f.support.coefficients) {
            *g += c;
        }
    }
    let degree = |v: &[Int]| crate::lattice::dot(&grading, v);
    let max_col_degree = columns
        .iter()
        .map(|c| degree(c))
        .max()
        .unwrap_or_else(Int::zero);
    let degree_cap = max_col_degree * Int::from(options.degree_cap_factor);

    let mut candidates: BTreeSet<Vec<Int>> = columns
        .iter()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut examined = 0usize;
    for subset in combinations(a.cols(), d) {
        let b = a.select_columns(&subset);
        let det = b.determinant();
        if det.is_zero() {
            continue;
        }
        examined += usize::try_from(det.abs()).unwrap_or(usize::MAX);
        if examined > options.max_candidates {
            return Err(GkzError::ScaleLimit(format!(
                "normality check would examine more than {} parallelepiped points",
                options.max_candidates
            )));
        }
        for p in parallelepiped_points(&b) {
            if p.iter().all(Zero::is_zero) {
                continue;
            }
            if degree(&p) > degree_cap {
                return Err(GkzError::ScaleLimit(format!(
                    "Hilbert basis candidate of degree {} exceeds the cap {degree_cap}",
                    degree(&p)
                )));
            }
            candidates.insert(p);
        }
    }

    let in_cone = |v: &[Int]| facets.iter().all(|f| !f.support.eval_int(v).is_negative());
    let candidates: Vec<Vec<Int>> = candidates.into_iter().collect();
    let mut hilbert_basis: Vec<Vec<Int>> = candidates
        .iter()
        .filter(|x| {
            !candidates.iter().any(|c| {
                if c == *x {
                    return false;
                }
                let diff: Vec<Int> = x.iter().zip(c).map(|(p, q)| p - q).collect();
                in_cone(&diff)
            })
        })
        .cloned()
        .collect();
    hilbert_basis.sort_by(|x, y| degree(x).cmp(&degree(y)).then_with(|| x.cmp(y)));

    let mut membership = SemigroupMembership::new(&columns, facets);
    let witness = hilbert_basis
        .iter()
        .find(|h| !membership.contains(h))
        .cloned();
    Ok(NormalityCertificate {
        normal: witness.is_none(),
        hilbert_basis,
        witness,
        grading,
    })
}

/// Lattice points of `{B t : t in [0,1)^d}` for an invertible square `B`.
fn parallelepiped_points(b: &IntMatrix) -> Vec<Vec<Int>> {
    let d = b.rows();
    quotient_representatives(b)
        .into_iter()
        .map(|x| {
            let xr: Vec<Rat> = x.into_iter().map(Rat::from_integer).collect();
            let t = solve_rational(b, &xr).expect("B is invertible");
            let frac: Vec<Rat> = t.iter().map(|v| v - v.floor()).collect();
            (0..d)
                .map(|i| {
                    (0..d)
                        .fold(Rat::zero(), |acc, j| {
                            acc + frac[j].clone() * Rat::from_integer(b[(i, j)].clone())
                        })
                        .to_integer()
                })
                .collect()
        })
        .collect()
}
