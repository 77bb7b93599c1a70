//! Fiber and cofiber supports as sets of faces, Gauss–Manin classification,
//! and descriptors over open face sets.
//!
//! A torus-stable open subset of the toric variety is represented by the set
//! of faces whose orbits it contains; such sets are upward closed. Parameters
//! are in the working coordinates of the [`Configuration`].

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::cone::{is_subset, Configuration, Face};
use crate::error::GkzError;
use crate::param::{coset_classes, facet_classes, in_cf_plus_zd, CosetClass, HClass};
use crate::GaussRat;

/// A set of faces, each given by its column set.
///
/// Serializes as a list of column lists, smaller faces first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrbitSet {
    pub faces: BTreeSet<Vec<usize>>,
}

impl Serialize for OrbitSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut faces: Vec<&Vec<usize>> = self.faces.iter().collect();
        faces.sort_by_key(|f| (f.len(), *f));
        serializer.collect_seq(faces)
    }
}

impl OrbitSet {
    pub fn new<I: IntoIterator<Item = Vec<usize>>>(faces: I) -> Self {
        Self {
            faces: faces.into_iter().collect(),
        }
    }

    pub fn contains(&self, columns: &[usize]) -> bool {
        self.faces.contains(columns)
    }

    pub fn intersection(&self, other: &OrbitSet) -> OrbitSet {
        OrbitSet::new(self.faces.intersection(&other.faces).cloned())
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// All faces of `config`.
    pub fn all(config: &Configuration) -> OrbitSet {
        OrbitSet::new(config.faces().iter().map(|f| f.columns.clone()))
    }
}

/// Checks that every member is a face and that every face above a member is a member.
pub fn check_upward_closed(config: &Configuration, set: &OrbitSet) -> Result<(), GkzError> {
    for cols in &set.faces {
        config.face(cols)?;
    }
    for cols in &set.faces {
        for g in config.faces() {
            if is_subset(cols, &g.columns) && !set.contains(&g.columns) {
                return Err(GkzError::NotUpwardClosed {
                    missing: g.columns.clone(),
                });
            }
        }
    }
    Ok(())
}

const SUPPORT_CRITERIA: &str = "the fiber and cofiber support criteria";

fn orbit_criterion(config: &Configuration, face: &Face, beta: &[GaussRat], class: HClass) -> bool {
    if in_cf_plus_zd(config, face, beta).is_none() {
        return false;
    }
    let classes = facet_classes(config, beta);
    face.containing_facets.iter().all(|&g| classes[g] == class)
}

/// Whether the orbit of `face` lies in the fiber support: `beta ∈ CF + Z^d`
/// and `h_G(beta)` is a negative integer for every facet `G ⊇ F`.
pub fn orbit_in_fsupp(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
) -> Result<bool, GkzError> {
    config.require_normal(SUPPORT_CRITERIA)?;
    Ok(orbit_criterion(config, face, beta, HClass::NegInt))
}

/// Whether the orbit of `face` lies in the cofiber support: `beta ∈ CF + Z^d`
/// and `h_G(beta) ∈ N` for every facet `G ⊇ F`.
pub fn orbit_in_cofsupp(
    config: &Configuration,
    face: &Face,
    beta: &[GaussRat],
) -> Result<bool, GkzError> {
    config.require_normal(SUPPORT_CRITERIA)?;
    Ok(orbit_criterion(config, face, beta, HClass::NatInt))
}

pub fn fsupp(config: &Configuration, beta: &[GaussRat]) -> Result<OrbitSet, GkzError> {
    support(config, beta, HClass::NegInt)
}

pub fn cofsupp(config: &Configuration, beta: &[GaussRat]) -> Result<OrbitSet, GkzError> {
    support(config, beta, HClass::NatInt)
}

fn support(config: &Configuration, beta: &[GaussRat], class: HClass) -> Result<OrbitSet, GkzError> {
    config.require_normal(SUPPORT_CRITERIA)?;
    Ok(OrbitSet::new(
        config
            .faces()
            .iter()
            .filter(|f| orbit_criterion(config, f, beta, class))
            .map(|f| f.columns.clone()),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MgmClass {
    pub mgm: bool,
    pub dual_mgm: bool,
}

/// Both flags hold iff the fiber and cofiber supports meet only in the top face.
///
/// For normal `A` the semigroup ring is Cohen–Macaulay, so the Euler–Koszul
/// complex resolves the module, there are no exceptional parameters, and the
/// two criteria coincide.
pub fn classify_mgm(config: &Configuration, beta: &[GaussRat]) -> Result<MgmClass, GkzError> {
    config.require_normal("the Gauss–Manin classification")?;
    let meet = fsupp(config, beta)?.intersection(&cofsupp(config, beta)?);
    let only_top = meet.len() == 1 && meet.contains(&config.top_face().columns);
    Ok(MgmClass {
        mgm: only_top,
        dual_mgm: only_top,
    })
}

/// Faces `G'` of `face` whose orbit lies in `open`: the trace of the open set on
/// the closure of the orbit of `face`, as a face set of `face`.
pub fn preimage_open_set(
    config: &Configuration,
    face: &Face,
    open: &OrbitSet,
) -> Result<OrbitSet, GkzError> {
    check_upward_closed(config, open)?;
    Ok(OrbitSet::new(
        config
            .subfaces(face)
            .filter(|g| open.contains(&g.columns))
            .map(|g| g.columns.clone()),
    ))
}

/// `M ⊗ ⋀C^r` shifted so that it occupies degrees `-k - shift`, `0 ≤ k ≤ r`,
/// with multiplicity `C(r, k)`, once for each coset class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MgmDescriptor {
    pub face: Vec<usize>,
    pub classes: Vec<CosetClass>,
    pub exterior_rank: usize,
    pub shift: i64,
    pub zero: bool,
}

impl MgmDescriptor {
    /// `(degree, multiplicity)` per class, in increasing degree.
    pub fn degrees(&self) -> Vec<(i64, u64)> {
        if self.zero {
            return Vec::new();
        }
        exterior_degrees(self.exterior_rank, self.shift)
    }

    /// Total multiplicity over all classes.
    pub fn total_multiplicity(&self) -> u64 {
        self.degrees().iter().map(|(_, m)| m).sum::<u64>() * self.classes.len() as u64
    }
}

/// Degrees `-k - shift` with multiplicity `C(rank, k)`, sorted by degree.
pub fn exterior_degrees(rank: usize, shift: i64) -> Vec<(i64, u64)> {
    let mut out: Vec<(i64, u64)> = (0..=rank)
        .map(|k| (-(k as i64) - shift, binomial(rank, k)))
        .collect();
    out.sort();
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn mgm_descriptor(
    config: &Configuration,
    face: &Face,
    open: &OrbitSet,
    beta: &[GaussRat],
    shift: impl Fn(usize) -> i64,
) -> Result<MgmDescriptor, GkzError> {
    check_upward_closed(config, open)?;
    if !open.contains(&config.top_face().columns) {
        return Err(GkzError::InvalidInput(
            "the open set must contain the top face".into(),
        ));
    }
    let (d_af, _) = config.face_quantities(face);
    let zero = MgmDescriptor {
        face: face.columns.clone(),
        classes: Vec::new(),
        exterior_rank: d_af,
        shift: shift(d_af),
        zero: true,
    };
    if !open.contains(&face.columns) {
        return Ok(zero);
    }
    match coset_classes(config, face, beta) {
        Ok(classes) => Ok(MgmDescriptor {
            classes,
            zero: false,
            ..zero
        }),
        Err(GkzError::NotInCoset { .. }) => Ok(zero),
        Err(e) => Err(e),
    }
}

/// Projection of the mixed Gauss–Manin object: degrees `-d_{A/F}..0`.
pub fn mgm_project(
    config: &Configuration,
    face: &Face,
    open: &OrbitSet,
    beta: &[GaussRat],
) -> Result<MgmDescriptor, GkzError> {
    mgm_descriptor(config, face, open, beta, |_| 0)
}

/// Restriction of the dual object: the same exterior algebra twisted by
/// `[-d_{A/F}]`, so degrees `0..d_{A/F}` (stored as `shift = -d_{A/F}`).
pub fn mgm_restrict_dual(
    config: &Configuration,
    face: &Face,
    open: &OrbitSet,
    beta: &[GaussRat],
) -> Result<MgmDescriptor, GkzError> {
    mgm_descriptor(config, face, open, beta, |d_af| -(d_af as i64))
}
