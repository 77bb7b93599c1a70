//! Brute-force reference implementations.
//!
//! These are deliberately naive and share no code with the fast paths
//! beyond the matrix type: facets come from signed minors instead of
//! Hermite forms, normality from enumerating a box of lattice points,
//! lattice membership from determinantal divisors, and toric ideals from
//! enumerating small kernel vectors.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::cone::combinations;
use crate::lattice::{LinearConstraint, Relation};
use crate::presentation::BinomialGenerator;
use crate::{Int, IntMatrix, Rat};

/// Facets as `(column set, primitive normal)`, sorted by column set.
///
/// Every (d-1)-subset of columns of rank d-1 yields a normal through its
/// signed maximal minors; sign-consistent normals are kept and deduplicated.
pub fn facets(a: &IntMatrix) -> Vec<(Vec<usize>, Vec<Int>)> {
    let d = a.rows();
    let n = a.cols();
    let mut out: BTreeSet<(Vec<usize>, Vec<Int>)> = BTreeSet::new();
    for subset in combinations(n, d - 1) {
        let sub = a.select_columns(&subset);
        // normal_j = (-1)^j det(sub with row j removed)
        let mut normal: Vec<Int> = (0..d)
            .map(|j| {
                let rows: Vec<usize> = (0..d).filter(|&r| r != j).collect();
                let minor = sub.select_rows(&rows).determinant();
                if j % 2 == 0 {
                    minor
                } else {
                    -minor
                }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let g = normal.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
        normal.iter_mut().for_each(|x| *x = &*x / &g);
        let values: Vec<Int> = (0..n)
            .map(|i| (0..d).map(|r| &normal[r] * &a[(r, i)]).sum())
            .collect();
        if values.iter().any(Signed::is_positive) && values.iter().any(Signed::is_negative) {
            continue;
        }
        if values.iter().any(Signed::is_negative) {
            normal.iter_mut().for_each(|x| *x = -x.clone());
        }
        let zero_set: Vec<usize> = (0..n).filter(|&i| values[i].is_zero()).collect();
        out.insert((zero_set, normal));
    }
    out.into_iter().collect()
}

/// Normality of NA inside `Z^d`: every lattice point of the cone with
/// coordinates bounded by `3 · max |a_ij|` must be a sum of columns.
///
/// Returns the first offending point in lexicographic order, if any.
/// Requires a pointed cone.
pub fn non_normal_witness(a: &IntMatrix) -> Option<Vec<Int>> {
    let d = a.rows();
    let cols: Vec<Vec<i64>> = a
        .columns()
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| i64::try_from(x).expect("oracle works at desk scale"))
                .collect()
        })
        .filter(|c: &Vec<i64>| c.iter().any(|&x| x != 0))
        .collect();
    let bound = 3 * cols.iter().flatten().map(|x| x.abs()).max().unwrap_or(1);
    let normals: Vec<Vec<i64>> = facets(a)
        .into_iter()
        .map(|(_, h)| h.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    let in_cone = |x: &[i64]| {
        normals
            .iter()
            .all(|h| h.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() >= 0)
    };
    // positive grading: sum of the normals
    let grading: Vec<i64> = (0..d).map(|r| normals.iter().map(|h| h[r]).sum()).collect();
    let deg = |x: &[i64]| grading.iter().zip(x).map(|(p, q)| p * q).sum::<i64>();

    let mut points: Vec<Vec<i64>> = Vec::new();
    let mut p = vec![-bound; d];
    'box_: loop {
        if in_cone(&p) {
            points.push(p.clone());
        }
        let mut i = d;
        loop {
            if i == 0 {
                break 'box_;
            }
            i -= 1;
            if p[i] < bound {
                p[i] += 1;
                continue 'box_;
            }
            p[i] = -bound;
        }
    }
    let max_deg = points.iter().map(|x| deg(x)).max().unwrap_or(0);

    // All of NA up to that degree, by breadth-first closure.
    let mut semigroup: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier = vec![vec![0; d]];
    semigroup.insert(vec![0; d]);
    while let Some(x) = frontier.pop() {
        for c in &cols {
            let y: Vec<i64> = x.iter().zip(c).map(|(p, q)| p + q).collect();
            if deg(&y) <= max_deg && semigroup.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    points
        .into_iter()
        .find(|x| !semigroup.contains(x))
        .map(|x| x.into_iter().map(Int::from).collect())
}

/// gcd of all `r × r` minors.
fn determinantal_divisor(m: &IntMatrix, r: usize) -> Int {
    let mut g = Int::zero();
    for rows in combinations(m.rows(), r) {
        let sub = m.select_rows(&rows);
        for cols in combinations(m.cols(), r) {
            g = g.gcd(&sub.select_columns(&cols).determinant());
        }
    }
    g
}

/// Rank over Q: the largest `r` with a nonzero `r × r` minor.
pub fn rational_rank(m: &IntMatrix) -> usize {
    (0..=m.rows().min(m.cols()))
        .rev()
        .find(|&r| !determinantal_divisor(m, r).is_zero())
        .unwrap_or(0)
}

/// Whether `v` is an integer combination of the columns of `m`.
///
/// For `L = ZM ⊆ L' = ZM + Zv` of equal rank `r`, the index `[L' : L]` is the
/// ratio of the gcds of the `r × r` minors, so `v ∈ L` iff they agree.
pub fn in_column_lattice(v: &[Int], m: &IntMatrix) -> bool {
    let mut cols = m.columns();
    cols.push(v.to_vec());
    let extended = IntMatrix::from_columns(&cols, m.rows());
    let r = rational_rank(m);
    if rational_rank(&extended) != r {
        return false;
    }
    determinantal_divisor(m, r) == determinantal_divisor(&extended, r)
}

/// An integer `z` with `|z_i| ≤ radius` and `m z = v`, by enumeration.
pub fn column_lattice_box(v: &[Int], m: &IntMatrix, radius: i64) -> Option<Vec<Int>> {
    let k = m.cols();
    let mut z = vec![-radius; k];
    loop {
        let zi: Vec<Int> = z.iter().map(|&x| Int::from(x)).collect();
        if m.mul_vec(&zi) == v {
            return Some(zi);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if z[i] < radius {
                z[i] += 1;
                break;
            }
            z[i] = -radius;
        }
    }
}

/// Feasibility of a system in two variables.
///
/// A nonempty polygon either has a vertex, which is the meet of two boundary
/// lines, or contains a line, in which case all boundaries are parallel and
/// each lies inside it. Candidates: pairwise meets, a point on each line, 0.
pub fn lp_feasible_2d(constraints: &[LinearConstraint<Int>]) -> Option<Vec<Rat>> {
    let r = |x: &Int| Rat::from_integer(x.clone());
    let mut candidates: Vec<Vec<Rat>> = vec![vec![Rat::zero(), Rat::zero()]];
    for c in constraints {
        let (a, b, e) = (&c.coeffs[0], &c.coeffs[1], &c.bound);
        if !a.is_zero() {
            candidates.push(vec![r(e) / r(a), Rat::zero()]);
        } else if !b.is_zero() {
            candidates.push(vec![Rat::zero(), r(e) / r(b)]);
        }
    }
    for (i, c1) in constraints.iter().enumerate() {
        for c2 in &constraints[i + 1..] {
            let det = &c1.coeffs[0] * &c2.coeffs[1] - &c1.coeffs[1] * &c2.coeffs[0];
            if det.is_zero() {
                continue;
            }
            let det = r(&det);
            let x =
                (r(&c1.bound) * r(&c2.coeffs[1]) - r(&c2.bound) * r(&c1.coeffs[1])) / det.clone();
            let y = (r(&c1.coeffs[0]) * r(&c2.bound) - r(&c2.coeffs[0]) * r(&c1.bound)) / det;
            candidates.push(vec![x, y]);
        }
    }
    candidates.into_iter().find(|p| {
        constraints.iter().all(|c| {
            let lhs: Ratio<Int> = c.coeffs.iter().zip(p).map(|(a, x)| r(a) * x.clone()).sum();
            match c.relation {
                Relation::Ge => lhs >= r(&c.bound),
                Relation::Le => lhs <= r(&c.bound),
            }
        })
    })
}

/// Binomials `∂^{u+} - ∂^{u-}` for every nonzero `u ∈ ker A` with
/// `|u_i| ≤ bound`, one per `±u`.
pub fn kernel_binomials(a: &IntMatrix, bound: i64) -> Vec<BinomialGenerator> {
    let n = a.cols();
    let mut out = Vec::new();
    let mut u = vec![-bound; n];
    loop {
        let ui: Vec<Int> = u.iter().map(|&x| Int::from(x)).collect();
        let first = ui.iter().find(|x| !x.is_zero());
        if first.is_some_and(Signed::is_positive) && a.mul_vec(&ui).iter().all(Zero::is_zero) {
            out.push(BinomialGenerator::from_kernel_vector(&ui));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if u[i] < bound {
                u[i] += 1;
                break;
            }
            u[i] = -bound;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn oracle_facets_of_the_twisted_cubic() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        assert_eq!(
            facets(&a),
            vec![(vec![0], ints(&[0, 1])), (vec![3], ints(&[3, -1]))]
        );
    }

    #[test]
    fn oracle_normality() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 2]]);
        assert_eq!(non_normal_witness(&a), Some(ints(&[1, 1])));
        let a = IntMatrix::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        assert_eq!(non_normal_witness(&a), None);
    }

    #[test]
    fn oracle_membership() {
        let m = IntMatrix::from_i64_rows(&[&[1, 0], &[1, 2]]);
        assert!(in_column_lattice(&ints(&[2, 4]), &m));
        assert!(!in_column_lattice(&ints(&[1, 2]), &m));
        assert_eq!(
            column_lattice_box(&ints(&[2, 4]), &m, 3),
            Some(ints(&[2, 1]))
        );
        let m = IntMatrix::from_i64_rows(&[&[2]]);
        assert!(!in_column_lattice(&ints(&[3]), &m));
    }

    #[test]
    fn oracle_lp() {
        let c = vec![
            LinearConstraint::ge(ints(&[0, 1]), Int::from(1)),
            LinearConstraint::le(ints(&[3, -1]), Int::from(-1)),
        ];
        assert!(lp_feasible_2d(&c).is_some());
        let c = vec![
            LinearConstraint::ge(ints(&[1, 0]), Int::from(1)),
            LinearConstraint::le(ints(&[1, 0]), Int::from(-1)),
        ];
        assert!(lp_feasible_2d(&c).is_none());
    }

    #[test]
    fn kernel_binomials_of_the_conic() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1, 1], &[0, 1, 2]]);
        let b = kernel_binomials(&a, 2);
        assert_eq!(
            b,
            vec![BinomialGenerator::from_kernel_vector(&ints(&[1, -2, 1]))]
        );
    }
}
