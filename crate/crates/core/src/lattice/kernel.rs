use num_rational::Ratio;
use num_traits::Zero;

use super::hnf::{hnf, member_of_image_lattice};
use super::matrix::Matrix;
use super::scalar::ExactInt;

/// A family of Z-linearly independent integer vectors in `Z^ambient`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis<T> {
    pub ambient: usize,
    pub vectors: Vec<Vec<T>>,
}

impl<T: ExactInt> LatticeBasis<T> {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Matrix whose columns are the basis vectors.
    pub fn column_matrix(&self) -> Matrix<T> {
        Matrix::from_columns(&self.vectors, self.ambient)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        member_of_image_lattice(v, &self.column_matrix())
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Basis of the lattice spanned by `generators`, in Hermite form.
    pub fn spanned_by(generators: &[Vec<T>], ambient: usize) -> Self {
        let m = Matrix::from_rows(generators.to_vec(), ambient).expect("generators share a length");
        Self {
            ambient,
            vectors: hnf(&m).basis_rows(),
        }
    }
}

/// Saturated basis of `{u in Z^n : A u = 0}`, returned in Hermite form.
pub fn kernel_lattice<T: ExactInt>(a: &Matrix<T>) -> LatticeBasis<T> {
    let n = a.cols();
    // U A^T = H; the rows of U facing zero rows of H span the integer kernel,
    // and span all of it because U is unimodular.
    let form = hnf(&a.transpose());
    let raw: Vec<Vec<T>> = (form.rank()..n).map(|i| form.u.row(i).to_vec()).collect();
    if raw.is_empty() {
        return LatticeBasis {
            ambient: n,
            vectors: Vec::new(),
        };
    }
    LatticeBasis::spanned_by(&raw, n)
}

/// A rational solution of `M x = b` with free variables set to zero.
pub fn solve_rational<T: ExactInt>(m: &Matrix<T>, b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    assert_eq!(
        b.len(),
        m.rows(),
        "right-hand side length must equal the row count"
    );
    let rows = m.rows();
    let cols = m.cols();
    let mut aug: Vec<Vec<Ratio<T>>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Ratio<T>> = m.row(i).iter().cloned().map(Ratio::from_integer).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut p = 0;
    for c in 0..cols {
        let Some(r) = (p..rows).find(|&r| !aug[r][c].is_zero()) else {
            continue;
        };
        aug.swap(p, r);
        let inv = aug[p][c].recip();
        for v in aug[p].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..rows {
            if r != p && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                let pivot_row = aug[p].clone();
                for (x, s) in aug[r].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * s;
                }
            }
        }
        pivot_cols.push(c);
        p += 1;
        if p == rows {
            break;
        }
    }
    if aug[p..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Ratio::from_integer(T::zero()); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}
