//! Polyhedral combinatorics of the cone over the columns of `A`.
//!
//! [`Configuration`] is the entry point: it validates `A`, moves to a basis
//! of `ZA` when `ZA` is a proper sublattice of `Z^d`, and caches facets and
//! the face lattice. Faces are identified with their maximal column sets, so
//! "facets containing F" is a subset test.

mod facets;
mod frame;
mod normality;

use std::collections::BTreeSet;
use std::sync::OnceLock;

pub use facets::{combinations, facets, is_homogeneous, is_pointed, Facet, SupportFn};
pub use frame::{FaceFacet, FaceFrame};
pub use normality::{NormalityCertificate, NormalityOptions, SemigroupMembership};

use crate::error::GkzError;
use crate::lattice::{
    combine, hnf, imag_parts, member_of_image_lattice, real_parts, solve_rational,
};
use crate::{Int, IntMatrix, Parameter};

/// A face of the cone, by its maximal column set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub columns: Vec<usize>,
    pub rank: usize,
    /// Indices into [`Configuration::facets`] of the facets containing this face.
    pub containing_facets: Vec<usize>,
}

/// Change of coordinates into a basis of `ZA` when `[Z^d : ZA] > 1`.
///
/// `input = basis * matrix`, where the columns of `basis` span `ZA`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeChange {
    pub basis: IntMatrix,
    pub index: Int,
}

#[derive(Clone, Debug)]
pub struct Configuration {
    input: IntMatrix,
    matrix: IntMatrix,
    change: Option<LatticeChange>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
    pointed: bool,
    normality_options: NormalityOptions,
    normality: OnceLock<Result<NormalityCertificate, GkzError>>,
}

impl Configuration {
    pub fn new(input: IntMatrix) -> Result<Self, GkzError> {
        let d = input.rows();
        if d == 0 || input.cols() == 0 {
            return Err(GkzError::InvalidInput(
                "matrix must have at least one row and one column".into(),
            ));
        }
        let form = hnf(&input.transpose());
        if form.rank() < d {
            return Err(GkzError::NotFullRank {
                rank: form.rank(),
                rows: d,
            });
        }
        let basis = IntMatrix::from_columns(&form.basis_rows(), d);
        let index = basis.determinant();
        let (matrix, change) = if index == Int::from(1) || index == Int::from(-1) {
            (input.clone(), None)
        } else {
            let coords: Vec<Vec<Int>> = input
                .columns()
                .iter()
                .map(|c| member_of_image_lattice(c, &basis).expect("columns lie in ZA"))
                .collect();
            let index = num_traits::Signed::abs(&index);
            (
                IntMatrix::from_columns(&coords, d),
                Some(LatticeChange { basis, index }),
            )
        };
        let facets = facets(&matrix)?;
        let faces = face_lattice_of(&matrix, &facets);
        let pointed = is_pointed(&matrix);
        Ok(Self {
            input,
            matrix,
            change,
            facets,
            faces,
            pointed,
            normality_options: NormalityOptions::default(),
            normality: OnceLock::new(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, GkzError> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn input(&self) -> &IntMatrix {
        &self.input
    }

    /// The working matrix (columns of `A` in a basis of `ZA`).
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn lattice_change(&self) -> Option<&LatticeChange> {
        self.change.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn num_columns(&self) -> usize {
        self.matrix.cols()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All faces, ordered by rank and then by column set.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn top_face(&self) -> &Face {
        self.faces
            .last()
            .expect("the full column set is always a face")
    }

    /// Looks up a face by its column set (any order, duplicates ignored).
    pub fn face(&self, columns: &[usize]) -> Result<&Face, GkzError> {
        let key: Vec<usize> = columns
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(&bad) = key.iter().find(|&&i| i >= self.num_columns()) {
            return Err(GkzError::InvalidInput(format!(
                "column index {bad} out of range"
            )));
        }
        self.faces
            .iter()
            .find(|f| f.columns == key)
            .ok_or(GkzError::NotAFace(key))
    }

    /// `(d_{A/F}, n_{A/F}) = (d - rank F, n - |F|)`.
    pub fn face_quantities(&self, face: &Face) -> (usize, usize) {
        (
            self.dim() - face.rank,
            self.num_columns() - face.columns.len(),
        )
    }

    pub fn frame(&self, face: &Face) -> Result<FaceFrame, GkzError> {
        FaceFrame::new(&self.matrix, &face.columns)
    }

    /// Faces of `face` (faces of `A` contained in it).
    pub fn subfaces<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.faces
            .iter()
            .filter(move |g| is_subset(&g.columns, &face.columns))
    }

    pub fn is_normal(&self, options: &NormalityOptions) -> Result<NormalityCertificate, GkzError> {
        if !self.pointed {
            return Err(GkzError::NotPointed);
        }
        normality::normality(&self.matrix, &self.facets, options)
    }

    /// Sets the limits used by [`Configuration::normality`]; clears any cached verdict.
    pub fn with_normality_options(mut self, options: NormalityOptions) -> Self {
        self.normality_options = options;
        self.normality = OnceLock::new();
        self
    }

    /// The normality certificate, computed once with the configured limits.
    pub fn normality(&self) -> Result<&NormalityCertificate, GkzError> {
        self.normality
            .get_or_init(|| self.is_normal(&self.normality_options))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Fails with [`GkzError::NotNormal`] naming `required_by` unless NA is normal.
    pub fn require_normal(&self, required_by: &str) -> Result<(), GkzError> {
        let cert = self.normality()?;
        match &cert.witness {
            None => Ok(()),
            Some(w) => Err(GkzError::NotNormal {
                required_by: required_by.to_string(),
                witness: format!(
                    "({})",
                    w.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            }),
        }
    }

    pub fn is_homogeneous(&self) -> Option<Vec<crate::Rat>> {
        is_homogeneous(&self.matrix)
    }

    /// Expresses a parameter given in the input coordinates in the working basis.
    pub fn to_working(&self, beta: &Parameter) -> Result<Parameter, GkzError> {
        if beta.len() != self.dim() {
            return Err(GkzError::InvalidInput(format!(
                "parameter has {} entries but the matrix has {} rows",
                beta.len(),
                self.dim()
            )));
        }
        let Some(change) = &self.change else {
            return Ok(beta.clone());
        };
        let re = solve_rational(&change.basis, &real_parts(beta)).expect("basis is invertible");
        let im = solve_rational(&change.basis, &imag_parts(beta)).expect("basis is invertible");
        Ok(Parameter::new(combine(&re, &im)))
    }

    /// Inverse of [`Configuration::to_working`].
    pub fn from_working(&self, beta: &Parameter) -> Parameter {
        let Some(change) = &self.change else {
            return beta.clone();
        };
        let m = &change.basis;
        Parameter::new(
            (0..m.rows())
                .map(|i| crate::lattice::eval(m.row(i), beta))
                .collect(),
        )
    }
}

/// Normality of NA tested against the full lattice `Z^d` rather than `ZA`.
///
/// This agrees with [`Configuration::normality`] when `ZA = Z^d`; otherwise
/// it reports points of `Z^d` in the cone that no element of `ZA` reaches.
pub fn is_normal(
    a: &IntMatrix,
    options: &NormalityOptions,
) -> Result<NormalityCertificate, GkzError> {
    if !is_pointed(a) {
        return Err(GkzError::NotPointed);
    }
    let fs = facets(a)?;
    normality::normality(a, &fs, options)
}

pub fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|i| big.binary_search(i).is_ok())
}

/// All faces of a full-dimensional cone: intersections of facet column sets,
/// plus the full column set.
pub fn face_lattice(a: &IntMatrix) -> Result<Vec<Face>, GkzError> {
    let fs = facets(a)?;
    Ok(face_lattice_of(a, &fs))
}

fn face_lattice_of(a: &IntMatrix, facets: &[Facet]) -> Vec<Face> {
    let all: Vec<usize> = (0..a.cols()).collect();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    sets.insert(all);
    let mut frontier: Vec<Vec<usize>> = facets.iter().map(|f| f.columns.clone()).collect();
    while let Some(s) = frontier.pop() {
        if !sets.insert(s.clone()) {
            continue;
        }
        for f in facets {
            let meet: Vec<usize> = s
                .iter()
                .copied()
                .filter(|i| f.columns.binary_search(i).is_ok())
                .collect();
            if !sets.contains(&meet) {
                frontier.push(meet);
            }
        }
    }
    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|columns| {
            let rank = if columns.is_empty() {
                0
            } else {
                a.select_columns(&columns).rank()
            };
            let containing_facets = facets
                .iter()
                .enumerate()
                .filter(|(_, f)| is_subset(&columns, &f.columns))
                .map(|(k, _)| k)
                .collect();
            Face {
                columns,
                rank,
                containing_facets,
            }
        })
        .collect();
    faces.sort_by(|x, y| x.rank.cmp(&y.rank).then_with(|| x.columns.cmp(&y.columns)));
    faces
}
