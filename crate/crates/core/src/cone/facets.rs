use num_traits::{One, Signed, Zero};

use crate::error::GkzError;
use crate::lattice::{
    eval, gcd_all, kernel_lattice, rational_lp_feasible, solve_rational, LinearConstraint,
};
use crate::{GaussRat, Int, IntMatrix, Rat};

/// Primitive integral support function of a facet: an integer linear form
/// with coprime coefficients, nonnegative on every column, vanishing exactly
/// on the facet's columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportFn {
    pub coefficients: Vec<Int>,
}

impl SupportFn {
    pub fn eval_int(&self, v: &[Int]) -> Int {
        crate::lattice::dot(&self.coefficients, v)
    }

    pub fn eval(&self, v: &[GaussRat]) -> GaussRat {
        eval(&self.coefficients, v)
    }

    pub fn is_primitive(&self) -> bool {
        gcd_all(&self.coefficients).is_one()
    }
}

/// A facet: its column set (sorted indices) and support function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub columns: Vec<usize>,
    pub support: SupportFn,
}

/// All facets of the cone over the columns of `a`, ordered by column set.
///
/// Brute force over (d-1)-subsets of columns; each subset of rank d-1 spans
/// a candidate hyperplane whose saturated integer normal is kept when the
/// columns all lie on one side.
pub fn facets(a: &IntMatrix) -> Result<Vec<Facet>, GkzError> {
    let d = a.rows();
    let n = a.cols();
    if d == 0 {
        return Err(GkzError::InvalidInput("matrix has no rows".into()));
    }
    let rank = a.rank();
    if rank < d {
        return Err(GkzError::NotFullRank { rank, rows: d });
    }
    let columns = a.columns();
    let mut found: Vec<Facet> = Vec::new();
    for subset in combinations(n, d - 1) {
        if found
            .iter()
            .any(|f| subset.iter().all(|i| f.columns.binary_search(i).is_ok()))
        {
            continue;
        }
        let sub = a.select_columns(&subset);
        let normal = kernel_lattice(&sub.transpose());
        if normal.rank() != 1 {
            continue;
        }
        let mut h = normal.vectors[0].clone();
        let values: Vec<Int> = columns.iter().map(|c| crate::lattice::dot(&h, c)).collect();
        let has_pos = values.iter().any(Signed::is_positive);
        let has_neg = values.iter().any(Signed::is_negative);
        if has_pos && has_neg {
            continue;
        }
        if has_neg {
            h.iter_mut().for_each(|x| *x = -x.clone());
        }
        let zero_set: Vec<usize> = (0..n).filter(|&i| values[i].is_zero()).collect();
        if found.iter().any(|f| f.columns == zero_set) {
            continue;
        }
        found.push(Facet {
            columns: zero_set,
            support: SupportFn { coefficients: h },
        });
    }
    found.sort_by(|x, y| x.columns.cmp(&y.columns));
    Ok(found)
}

/// True iff the cone over the columns contains no line.
pub fn is_pointed(a: &IntMatrix) -> bool {
    let constraints: Vec<LinearConstraint<Int>> = a
        .columns()
        .into_iter()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .map(|c| LinearConstraint::ge(c, Int::one()))
        .collect();
    rational_lp_feasible(a.rows(), &constraints).is_some()
}

/// A rational `c` with `<c, a_i> = 1` for all columns, if one exists.
pub fn is_homogeneous(a: &IntMatrix) -> Option<Vec<Rat>> {
    let ones = vec![Rat::one(); a.cols()];
    solve_rational(&a.transpose(), &ones)
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn coeffs(h: &SupportFn) -> Vec<i64> {
        h.coefficients
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn twisted_cubic_facets() {
        let fs = facets(&mat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].columns, vec![0]);
        assert_eq!(coeffs(&fs[0].support), vec![0, 1]);
        assert_eq!(fs[1].columns, vec![3]);
        assert_eq!(coeffs(&fs[1].support), vec![3, -1]);
    }

    #[test]
    fn orthant_facets() {
        let fs = facets(&mat(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(fs[0].columns, vec![0]);
        assert_eq!(coeffs(&fs[0].support), vec![0, 1]);
        assert_eq!(fs[1].columns, vec![1]);
        assert_eq!(coeffs(&fs[1].support), vec![1, 0]);
    }

    #[test]
    fn conic_facets() {
        let fs = facets(&mat(&[&[1, 1, 1], &[0, 1, 2]])).unwrap();
        assert_eq!(coeffs(&fs[0].support), vec![0, 1]);
        assert_eq!(fs[1].columns, vec![2]);
        assert_eq!(coeffs(&fs[1].support), vec![2, -1]);
    }

    #[test]
    fn rank_deficient_input_is_rejected() {
        assert_eq!(
            facets(&mat(&[&[1, 2], &[2, 4]])),
            Err(GkzError::NotFullRank { rank: 1, rows: 2 })
        );
    }

    #[test]
    fn one_dimensional_cones() {
        let fs = facets(&mat(&[&[2, 3]])).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(fs[0].columns.is_empty());
        assert_eq!(coeffs(&fs[0].support), vec![1]);
        assert!(facets(&mat(&[&[1, -1]])).unwrap().is_empty());
    }

    #[test]
    fn pointedness() {
        assert!(is_pointed(&mat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])));
        assert!(!is_pointed(&mat(&[&[1, -1]])));
        assert!(is_pointed(&mat(&[&[1, 0], &[0, 1]])));
    }

    #[test]
    fn homogeneity() {
        let c = is_homogeneous(&mat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])).unwrap();
        assert_eq!(c, vec![Rat::one(), Rat::zero()]);
        assert!(is_homogeneous(&mat(&[&[1, 0, 1], &[0, 1, 1]])).is_none());
        let c = is_homogeneous(&mat(&[&[2], &[0]])).unwrap();
        assert_eq!(c, vec![Rat::new(1.into(), 2.into()), Rat::zero()]);
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
