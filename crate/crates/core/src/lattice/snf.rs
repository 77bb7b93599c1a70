//! Smith normal form with both transforms: `U * M * V = S`.

use super::hnf::member_of_image_lattice;
use super::matrix::Matrix;
use super::scalar::ExactInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: ExactInt> SmithForm<T> {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn snf<T: ExactInt>(m: &Matrix<T>) -> SmithForm<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            let pivot = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !s[(i, j)].is_zero())
                .min_by(|&a, &b| s[a].abs().cmp(&s[b].abs()));
            let Some((pi, pj)) = pivot else {
                return finish(s, u, v);
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                let q = s[(i, k)].div_floor(&s[(k, k)]);
                s.sub_row_multiple(i, k, &q);
                u.sub_row_multiple(i, k, &q);
                dirty |= !s[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                let q = s[(k, j)].div_floor(&s[(k, k)]);
                s.sub_col_multiple(j, k, &q);
                v.sub_col_multiple(j, k, &q);
                dirty |= !s[(k, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into row k and go again.
            let offending = (k + 1..rows).find(|&i| {
                (k + 1..cols).any(|j| !(s[(i, j)].clone() % s[(k, k)].clone()).is_zero())
            });
            match offending {
                Some(i) => {
                    let minus_one = -T::one();
                    s.sub_row_multiple(k, i, &minus_one);
                    u.sub_row_multiple(k, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    finish(s, u, v)
}

fn finish<T: ExactInt>(s: Matrix<T>, u: Matrix<T>, v: Matrix<T>) -> SmithForm<T> {
    SmithForm { s, u, v }
}

/// Inverse of a unimodular matrix, exact over the integers.
pub fn inverse_unimodular<T: ExactInt>(u: &Matrix<T>) -> Matrix<T> {
    let n = u.rows();
    let cols: Vec<Vec<T>> = (0..n)
        .map(|j| {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            member_of_image_lattice(&e, u).expect("unimodular matrices are invertible over Z")
        })
        .collect();
    Matrix::from_columns(&cols, n)
}

/// One representative per coset of `Z^r / M Z^k` for `M` of full row rank `r`.
///
/// With `U M V = S`, the map `x -> U x` identifies the quotient with
/// `⊕ Z/s_i`, so the representatives are `U^{-1} y` for `y` in the box
/// `Π [0, s_i)`. They come out in the odometer order of that box, starting at 0.
pub fn quotient_representatives<T: ExactInt>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let r = m.rows();
    let form = snf(m);
    assert_eq!(
        form.rank(),
        r,
        "quotient is infinite: matrix lacks full row rank"
    );
    let u_inv = inverse_unimodular(&form.u);
    let moduli: Vec<T> = (0..r).map(|i| form.s[(i, i)].abs()).collect();
    let mut out = Vec::new();
    let mut y = vec![T::zero(); r];
    loop {
        out.push(u_inv.mul_vec(&y));
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            y[k] = y[k].clone() + T::one();
            if y[k] < moduli[k] {
                break;
            }
            y[k] = T::zero();
            k += 1;
        }
    }
}
