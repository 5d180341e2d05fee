//! Scenario files.
//!
//! A scenario is a small TOML document:
//!
//! ```toml
//! kind = "global_ci"        # "hypersurface" | "global_ci" | "union2"
//! degrees = [1, 2]          # global_ci: the last entry carries L
//!
//! [ambient]
//! dim = 4
//!
//! [singular_segre]          # s(Y, P^n) of the singular scheme
//! kind = "linear_subspace"
//! dim = 1
//! ```
//!
//! Explicit classes are given by codimension with exact rationals, either
//! integers or strings such as `"-3/2"`:
//!
//! ```toml
//! [singular_segre]
//! kind = "coefficients"
//! by_codim = [0, 0, 2, "-4"]
//! ```
//!
//! A `union2` scenario describes `X = M₁ ∩ M₂` through its two hypersurfaces.
//! It may carry `[[constituent_segre]]` (exactly two entries, the singular
//! schemes of `M₁` and `M₂`) and `[union_segre]` (the singular scheme of
//! `M₁ ∪ M₂`); `singular_segre` is optional there.

use std::path::Path;

use serde::Deserialize;

use crate::chow::{parse_rational, AmbientSpace, ChowClass, Rational};
use crate::classes::segre_linear_subspace;
use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    ambient: Option<RawAmbient>,
    kind: Option<String>,
    degrees: Option<Vec<i64>>,
    singular_segre: Option<RawSegre>,
    constituent_segre: Option<Vec<RawSegre>>,
    union_segre: Option<RawSegre>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAmbient {
    dim: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegre {
    kind: String,
    dim: Option<i64>,
    by_codim: Option<Vec<RawRational>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

/// Segre class of a singular scheme, either built in or given explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularSchemeSegre {
    /// The scheme is a reduced linear subspace `P^dim`.
    LinearSubspace { dim: usize },
    Class(ChowClass),
}

impl SingularSchemeSegre {
    pub fn resolve(&self, ambient: &AmbientSpace) -> Result<ChowClass> {
        match self {
            SingularSchemeSegre::LinearSubspace { dim } => {
                segre_linear_subspace(*dim, ambient.dim())
            }
            SingularSchemeSegre::Class(c) => {
                ambient.check(c)?;
                Ok(c.clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScenarioKind {
    Hypersurface {
        degree: u32,
    },
    /// Smooth degrees first; `last_degree` is the hypersurface carrying `L`.
    GlobalCi {
        smooth_degrees: Vec<u32>,
        last_degree: u32,
    },
    /// `X = M₁ ∩ M₂`, with optional singular-scheme data for `M₁`, `M₂` and
    /// `M₁ ∪ M₂`.
    Union2 {
        degrees: [u32; 2],
        constituents: Option<[SingularSchemeSegre; 2]>,
        union: Option<SingularSchemeSegre>,
    },
}

impl ScenarioKind {
    pub fn name(&self) -> &'static str {
        match self {
            ScenarioKind::Hypersurface { .. } => "hypersurface",
            ScenarioKind::GlobalCi { .. } => "global_ci",
            ScenarioKind::Union2 { .. } => "union2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub ambient: AmbientSpace,
    pub kind: ScenarioKind,
    pub singular_segre: Option<SingularSchemeSegre>,
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Scenario {
        field: field.into(),
        message: message.into(),
    }
}

fn convert_segre(raw: RawSegre, field: &str, ambient: &AmbientSpace) -> Result<SingularSchemeSegre> {
    let n = ambient.dim();
    let segre = match raw.kind.as_str() {
        "linear_subspace" => {
            if raw.by_codim.is_some() {
                return Err(field_err(
                    format!("{field}.by_codim"),
                    "not allowed for kind \"linear_subspace\"",
                ));
            }
            let dim = raw
                .dim
                .ok_or_else(|| field_err(format!("{field}.dim"), "missing"))?;
            if dim < 0 || dim as usize >= n {
                return Err(field_err(
                    format!("{field}.dim"),
                    format!("linear subspace dimension {dim} must lie in 0..{n}"),
                ));
            }
            SingularSchemeSegre::LinearSubspace { dim: dim as usize }
        }
        "coefficients" => {
            if raw.dim.is_some() {
                return Err(field_err(
                    format!("{field}.dim"),
                    "not allowed for kind \"coefficients\"",
                ));
            }
            let entries = raw
                .by_codim
                .ok_or_else(|| field_err(format!("{field}.by_codim"), "missing"))?;
            if entries.len() > n + 1 {
                return Err(field_err(
                    format!("{field}.by_codim"),
                    format!("{} entries exceed the {} codimensions of P^{n}", entries.len(), n + 1),
                ));
            }
            let coeffs = entries
                .into_iter()
                .enumerate()
                .map(|(i, e)| match e {
                    RawRational::Int(v) => Ok(Rational::from_integer(v.into())),
                    RawRational::Text(s) => parse_rational(&s).map_err(|_| {
                        field_err(
                            format!("{field}.by_codim[{i}]"),
                            format!("'{s}' is not a rational of the form p/q"),
                        )
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            SingularSchemeSegre::Class(ChowClass::new(n, coeffs)?)
        }
        other => {
            return Err(field_err(
                format!("{field}.kind"),
                format!("unknown kind \"{other}\" (expected \"linear_subspace\" or \"coefficients\")"),
            ))
        }
    };
    Ok(segre)
}

impl Scenario {
    pub fn from_toml_str(text: &str) -> Result<Scenario> {
        let raw: RawScenario =
            toml::from_str(text).map_err(|e| Error::Parse(format!("malformed scenario: {e}")))?;

        let has_union_data = raw.constituent_segre.is_some() || raw.union_segre.is_some();
        let dim = raw
            .ambient
            .ok_or_else(|| field_err("ambient", "missing table [ambient]"))?
            .dim
            .ok_or_else(|| field_err("ambient.dim", "missing"))?;
        if !(1..=64).contains(&dim) {
            return Err(field_err("ambient.dim", format!("{dim} is outside 1..=64")));
        }
        let ambient = AmbientSpace::projective(dim as usize);
        let n = ambient.dim();

        let kind_name = raw.kind.ok_or_else(|| field_err("kind", "missing"))?;
        let raw_degrees = raw.degrees.ok_or_else(|| field_err("degrees", "missing"))?;
        let mut degrees = Vec::with_capacity(raw_degrees.len());
        for (i, d) in raw_degrees.iter().enumerate() {
            if *d < 1 || *d > i64::from(u32::MAX) {
                return Err(field_err(
                    format!("degrees[{i}]"),
                    format!("{d} is not a positive integer degree"),
                ));
            }
            degrees.push(*d as u32);
        }
        if degrees.len() > n {
            return Err(field_err(
                "degrees",
                format!("{} hypersurfaces exceed the dimension of P^{n}", degrees.len()),
            ));
        }

        let singular_segre = raw
            .singular_segre
            .map(|s| convert_segre(s, "singular_segre", &ambient))
            .transpose()?;

        let kind = match kind_name.as_str() {
            "hypersurface" => {
                if degrees.len() != 1 {
                    return Err(field_err("degrees", "a hypersurface takes exactly one degree"));
                }
                ScenarioKind::Hypersurface { degree: degrees[0] }
            }
            "global_ci" => {
                let Some((&last_degree, smooth)) = degrees.split_last() else {
                    return Err(field_err("degrees", "a complete intersection needs at least one degree"));
                };
                ScenarioKind::GlobalCi {
                    smooth_degrees: smooth.to_vec(),
                    last_degree,
                }
            }
            "union2" => {
                if degrees.len() != 2 {
                    return Err(field_err("degrees", "union2 takes exactly two degrees"));
                }
                let constituents = match raw.constituent_segre {
                    None => None,
                    Some(list) => {
                        if list.len() != 2 {
                            return Err(field_err(
                                "constituent_segre",
                                format!("expected 2 entries, found {}", list.len()),
                            ));
                        }
                        let mut it = list.into_iter();
                        let a = convert_segre(it.next().unwrap(), "constituent_segre[0]", &ambient)?;
                        let b = convert_segre(it.next().unwrap(), "constituent_segre[1]", &ambient)?;
                        Some([a, b])
                    }
                };
                let union = raw
                    .union_segre
                    .map(|s| convert_segre(s, "union_segre", &ambient))
                    .transpose()?;
                ScenarioKind::Union2 {
                    degrees: [degrees[0], degrees[1]],
                    constituents,
                    union,
                }
            }
            other => {
                return Err(field_err(
                    "kind",
                    format!("unknown kind \"{other}\" (expected hypersurface, global_ci or union2)"),
                ))
            }
        };

        if !matches!(kind, ScenarioKind::Union2 { .. }) {
            if singular_segre.is_none() {
                return Err(field_err("singular_segre", "missing"));
            }
            if has_union_data {
                return Err(field_err(
                    "constituent_segre",
                    format!("union data is only accepted for kind \"union2\", not \"{kind_name}\""),
                ));
            }
        }

        Ok(Scenario {
            ambient,
            kind,
            singular_segre,
        })
    }

    /// All degrees, smooth ones first.
    pub fn degrees(&self) -> Vec<u32> {
        match &self.kind {
            ScenarioKind::Hypersurface { degree } => vec![*degree],
            ScenarioKind::GlobalCi {
                smooth_degrees,
                last_degree,
            } => {
                let mut d = smooth_degrees.clone();
                d.push(*last_degree);
                d
            }
            ScenarioKind::Union2 { degrees, .. } => degrees.to_vec(),
        }
    }

    pub fn singular_segre_class(&self) -> Result<ChowClass> {
        self.singular_segre
            .as_ref()
            .ok_or_else(|| Error::MissingData("singular_segre".into()))?
            .resolve(&self.ambient)
    }
}

/// Reads and validates a scenario file.
pub fn parse_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Scenario::from_toml_str(&text)
}
