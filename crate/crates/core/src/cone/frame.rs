use super::facets::{facets, SupportFn};
use crate::error::GkzError;
use crate::lattice::{combine, imag_parts, real_parts, solve_rational, LatticeBasis};
use crate::{GaussRat, Int, IntMatrix};

/// A facet of a face, in the face's own lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceFacet {
    /// Columns of the sub-face, as indices into the full matrix.
    pub columns: Vec<usize>,
    /// Primitive support function on `ZF`, in the frame's basis coordinates.
    pub support: SupportFn,
}

/// A Z-basis of `ZF` for a face `F` together with the facets of `F`.
///
/// Support functions of the facets of `F` are normalized on `ZF`, so the
/// predicates "value in N / negative integer / not an integer" do not depend
/// on which basis was chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceFrame {
    pub columns: Vec<usize>,
    pub basis: LatticeBasis<Int>,
    /// Columns of `F` in basis coordinates (rank(F) × |F|).
    pub local_matrix: IntMatrix,
    pub facets: Vec<FaceFacet>,
}

impl FaceFrame {
    pub fn new(a: &IntMatrix, columns: &[usize]) -> Result<Self, GkzError> {
        let d = a.rows();
        let generators = a.select_columns(columns).columns();
        let basis = LatticeBasis::spanned_by(&generators, d);
        if basis.rank() == 0 {
            return Err(GkzError::EmptyFace);
        }
        let local_columns: Vec<Vec<Int>> = generators
            .iter()
            .map(|g| {
                basis
                    .coordinates(g)
                    .expect("generators lie in the lattice they span")
            })
            .collect();
        let local_matrix = IntMatrix::from_columns(&local_columns, basis.rank());
        let facets = facets(&local_matrix)?
            .into_iter()
            .map(|f| FaceFacet {
                columns: f.columns.iter().map(|&i| columns[i]).collect(),
                support: f.support,
            })
            .collect();
        Ok(Self {
            columns: columns.to_vec(),
            basis,
            local_matrix,
            facets,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// Coordinates of a vector of `CF` in the frame's basis; `None` if `v ∉ CF`.
    pub fn coordinates(&self, v: &[GaussRat]) -> Option<Vec<GaussRat>> {
        let m = self.basis.column_matrix();
        let re = solve_rational(&m, &real_parts(v))?;
        let im = solve_rational(&m, &imag_parts(v))?;
        Some(combine(&re, &im))
    }

    /// Coordinates of an integer vector of `ZF`.
    pub fn lattice_coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        self.basis.coordinates(v)
    }

    /// Value of the k-th facet function on a vector of `CF`.
    pub fn eval_facet(&self, k: usize, v: &[GaussRat]) -> Option<GaussRat> {
        let coords = self.coordinates(v)?;
        Some(self.facets[k].support.eval(&coords))
    }

    /// Value of the k-th facet function on an element of `ZF`.
    pub fn eval_facet_int(&self, k: usize, v: &[Int]) -> Option<Int> {
        let coords = self.lattice_coordinates(v)?;
        Some(self.facets[k].support.eval_int(&coords))
    }

    /// Maps basis coordinates back to the ambient space.
    pub fn embed(&self, coords: &[Int]) -> Vec<Int> {
        self.basis.column_matrix().mul_vec(coords)
    }
}
