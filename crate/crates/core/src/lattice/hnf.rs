//! Row-style Hermite normal form.
//!
//! Convention: `U * M = H` with `U` unimodular and `H` in row echelon form.
//! Pivots are strictly positive and every entry above a pivot lies in
//! `[0, pivot)`. Zero rows sit at the bottom. For a fixed input the output is
//! unique, so certificates built from it are reproducible.

use super::matrix::Matrix;
use super::scalar::ExactInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    /// Pivot column of each nonzero row of `h`, in order.
    pub pivots: Vec<usize>,
}

impl<T: ExactInt> HermiteForm<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`: a basis of the row lattice of the input.
    pub fn basis_rows(&self) -> Vec<Vec<T>> {
        (0..self.rank()).map(|i| self.h.row(i).to_vec()).collect()
    }
}

pub fn hnf<T: ExactInt>(m: &Matrix<T>) -> HermiteForm<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = Matrix::identity(rows);
    let mut pivots = Vec::new();
    let mut p = 0;

    for col in 0..cols {
        if p == rows {
            break;
        }
        // Euclidean reduction of column `col` below row p.
        loop {
            let best = (p..rows)
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(p, best);
            u.swap_rows(p, best);
            let mut clean = true;
            for r in p + 1..rows {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = h[(r, col)].div_floor(&h[(p, col)]);
                h.sub_row_multiple(r, p, &q);
                u.sub_row_multiple(r, p, &q);
                if !h[(r, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(p, col)].is_zero() {
            continue;
        }
        if h[(p, col)].is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for r in 0..p {
            let q = h[(r, col)].div_floor(&h[(p, col)]);
            h.sub_row_multiple(r, p, &q);
            u.sub_row_multiple(r, p, &q);
        }
        pivots.push(col);
        p += 1;
    }
    HermiteForm { h, u, pivots }
}

/// Solves `M z = v` over the integers.
///
/// Returns `None` when `v` is not in the column lattice of `M`. The solution
/// is read off the Hermite form of `M^T`, so it is deterministic.
pub fn member_of_image_lattice<T: ExactInt>(v: &[T], m: &Matrix<T>) -> Option<Vec<T>> {
    assert_eq!(v.len(), m.rows(), "vector length must equal the row count");
    // U M^T = H  =>  M = H^T U^{-T};  M z = v  <=>  H^T w = v with z = U^T w.
    let form = hnf(&m.transpose());
    let mut residual = v.to_vec();
    let mut w = vec![T::zero(); m.cols()];
    let mut next_free = 0;
    for (i, &pc) in form.pivots.iter().enumerate() {
        // Entries strictly before the pivot column cannot be touched by later rows.
        if residual[next_free..pc].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let pivot = &form.h[(i, pc)];
        let (q, r) = residual[pc].div_rem(pivot);
        if !r.is_zero() {
            return None;
        }
        for (j, entry) in residual.iter_mut().enumerate() {
            *entry = entry.clone() - q.clone() * form.h[(i, j)].clone();
        }
        w[i] = q;
        next_free = pc + 1;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(form.u.transpose().mul_vec(&w))
}
