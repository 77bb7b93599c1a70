//! Problem instances and run options as read from JSON.

use std::time::Duration;

use gkz_core::json::{parse_indices, parse_matrix, parse_parameter};
use gkz_core::orbit::OrbitSet;
use gkz_core::param::LambdaPolicy;
use gkz_core::presentation::{GroebnerLimits, Mode};
use gkz_core::{Configuration, Face, GkzError, NormalityOptions, Parameter};
use serde_json::{Map, Value};

#[derive(Clone, Debug)]
pub struct Options {
    pub mode: Mode,
    pub policy: LambdaPolicy,
    pub limits: GroebnerLimits,
    pub normality: NormalityOptions,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            mode: Mode::Default,
            policy: LambdaPolicy::Strict,
            limits: GroebnerLimits::default(),
            normality: NormalityOptions::default(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> GkzError {
    GkzError::InvalidInput(msg.into())
}

fn count(v: &Value, key: &str) -> Result<u64, GkzError> {
    v.as_u64().ok_or_else(|| {
        invalid(format!(
            "option {key} must be a nonnegative integer, found {v}"
        ))
    })
}

impl Options {
    /// These options overridden by the entries of an `"options"` object.
    pub fn overridden_by(&self, map: &Map<String, Value>) -> Result<Options, GkzError> {
        let mut out = self.clone();
        for (key, v) in map {
            match key.as_str() {
                "mode" => {
                    let s = v
                        .as_str()
                        .ok_or_else(|| invalid("option mode must be a string"))?;
                    out.mode = s.parse()?;
                }
                "policy" => {
                    out.policy = match v.as_str() {
                        Some("strict") => LambdaPolicy::Strict,
                        Some("prefer-non-negative") => LambdaPolicy::PreferNonNegative,
                        Some("prefer-negative") => LambdaPolicy::PreferNegative,
                        _ => return Err(invalid(format!("unknown lambda policy {v}"))),
                    }
                }
                "max_spairs" => out.limits.max_spairs = count(v, key)? as usize,
                "time_cap" => out.limits.time_cap = Duration::from_secs(count(v, key)?),
                "hilbert_degree_cap" => {
                    out.normality.degree_cap_factor = u32::try_from(count(v, key)?)
                        .map_err(|_| invalid("option hilbert_degree_cap is too large"))?
                }
                other => return Err(invalid(format!("unknown option {other:?}"))),
            }
        }
        Ok(out)
    }
}

/// A matrix with an optional parameter, face and open face set.
///
/// The parameter is kept in the input coordinates; see [`Instance::beta`].
#[derive(Debug)]
pub struct Instance {
    pub config: Configuration,
    beta: Option<Parameter>,
    face: Option<Vec<usize>>,
    open_set: Option<OrbitSet>,
    pub options: Options,
}

impl Instance {
    pub fn from_json(value: &Value, defaults: &Options) -> Result<Instance, GkzError> {
        let Value::Object(map) = value else {
            return Err(invalid("an instance must be a JSON object"));
        };
        if let Some(key) = map.keys().find(|k| {
            !matches!(
                k.as_str(),
                "A" | "matrix" | "beta" | "face" | "open_set" | "options"
            )
        }) {
            return Err(invalid(format!("unknown key {key:?}")));
        }
        let matrix = match (map.get("A"), map.get("matrix")) {
            (Some(m), None) | (None, Some(m)) => parse_matrix(m)?,
            (Some(_), Some(_)) => {
                return Err(invalid("give the matrix as either A or matrix, not both"))
            }
            (None, None) => return Err(invalid("missing matrix A")),
        };
        let options = match map.get("options") {
            None => defaults.clone(),
            Some(Value::Object(o)) => defaults.overridden_by(o)?,
            Some(other) => {
                return Err(invalid(format!("options must be an object, found {other}")))
            }
        };
        let config = Configuration::new(matrix)?.with_normality_options(options.normality);
        let beta = map.get("beta").map(parse_parameter).transpose()?;
        if let Some(b) = &beta {
            if b.len() != config.dim() {
                return Err(invalid(format!(
                    "beta has {} entries but A has {} rows",
                    b.len(),
                    config.dim()
                )));
            }
        }
        let face = map.get("face").map(parse_indices).transpose()?;
        let open_set = match map.get("open_set") {
            None => None,
            Some(Value::Array(items)) => Some(OrbitSet::new(
                items
                    .iter()
                    .map(parse_indices)
                    .collect::<Result<Vec<_>, _>>()?,
            )),
            Some(other) => {
                return Err(invalid(format!(
                    "open_set must be a list of faces, found {other}"
                )))
            }
        };
        let n = config.num_columns();
        let indices = face
            .iter()
            .flatten()
            .chain(open_set.iter().flat_map(|s| s.faces.iter().flatten()));
        if let Some(bad) = indices.into_iter().find(|&&i| i >= n) {
            return Err(invalid(format!(
                "column index {bad} out of range for {n} columns"
            )));
        }
        Ok(Instance {
            config,
            beta,
            face,
            open_set,
            options,
        })
    }

    /// The parameter in working coordinates.
    pub fn beta(&self) -> Result<Parameter, GkzError> {
        let beta = self
            .beta
            .as_ref()
            .ok_or_else(|| invalid("missing parameter beta"))?;
        self.config.to_working(beta)
    }

    /// The parameter as given.
    pub fn beta_input(&self) -> Result<Parameter, GkzError> {
        self.beta
            .clone()
            .ok_or_else(|| invalid("missing parameter beta"))
    }

    pub fn face(&self) -> Result<&Face, GkzError> {
        let cols = self.face.as_ref().ok_or_else(|| invalid("missing face"))?;
        self.config.face(cols)
    }

    pub fn has_face(&self) -> bool {
        self.face.is_some()
    }

    /// The open face set, defaulting to all faces.
    pub fn open_set(&self) -> OrbitSet {
        self.open_set
            .clone()
            .unwrap_or_else(|| OrbitSet::all(&self.config))
    }
}
