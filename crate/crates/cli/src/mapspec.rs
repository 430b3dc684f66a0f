// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! The map spec mini-language (version 1).
//!
//! | spec            | map                          |
//! |-----------------|------------------------------|
//! | `identity`      | `z`                          |
//! | `affine:<mu>`   | `z + μ z̄`, `0 ≤ μ < 1`       |
//! | `radial:<K>`    | `z |z|^{K-1}`, `K ≥ 1`       |
//! | `square`        | `z²`                         |
//! | `grid:<path>`   | bilinear grid-map file       |
//! | `id3`           | identity of `ℝ³`             |
//! | `diag:<a,b,c>`  | `diag(a, b, c)` on `ℝ³`      |

use std::path::PathBuf;

use qcskew_core::highdim::{Diagonal, IdentityN, SpaceMap};
use qcskew_core::map::{make_affine, make_radial_stretch, Identity, Square};
use qcskew_core::PlanarMap;

use crate::gridfile::{load_grid_map_path, GridFileError};

pub const MAP_SPEC_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum MapSpecError {
    #[error("unknown map spec `{0}`")]
    Unknown(String),
    #[error("bad parameter in `{spec}`: {reason}")]
    BadParameter { spec: String, reason: String },
    #[error(transparent)]
    Grid(#[from] GridFileError),
    #[error("`{spec}` is a {found} map but a {wanted} map is required")]
    WrongKind {
        spec: String,
        found: &'static str,
        wanted: &'static str,
    },
}

/// Parsed map spec.
#[derive(Debug, Clone, PartialEq)]
pub enum MapSpec {
    Identity,
    Affine(f64),
    Radial(f64),
    Square,
    Grid(PathBuf),
    Id3,
    Diag(Vec<f64>),
}

pub enum ResolvedMap {
    Planar(Box<dyn PlanarMap + Send>),
    Space(Box<dyn SpaceMap + Send>),
}

impl std::fmt::Debug for ResolvedMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResolvedMap::Planar(m) => write!(f, "Planar({})", m.name()),
            ResolvedMap::Space(m) => write!(f, "Space({})", m.name()),
        }
    }
}

fn number(spec: &str, s: &str) -> Result<f64, MapSpecError> {
    s.trim().parse::<f64>().map_err(|e| MapSpecError::BadParameter {
        spec: spec.to_owned(),
        reason: format!("`{s}`: {e}"),
    })
}

impl std::str::FromStr for MapSpec {
    type Err = MapSpecError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let (head, arg) = match spec.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (spec, None),
        };
        fn need<'a>(spec: &str, arg: Option<&'a str>) -> Result<&'a str, MapSpecError> {
            arg.filter(|a| !a.is_empty()).ok_or_else(|| MapSpecError::BadParameter {
                spec: spec.to_owned(),
                reason: "missing parameter".into(),
            })
        }
        match (head, arg) {
            ("identity", None) => Ok(MapSpec::Identity),
            ("square", None) => Ok(MapSpec::Square),
            ("id3", None) => Ok(MapSpec::Id3),
            ("affine", a) => Ok(MapSpec::Affine(number(spec, need(spec, a)?)?)),
            ("radial", a) => Ok(MapSpec::Radial(number(spec, need(spec, a)?)?)),
            ("grid", a) => Ok(MapSpec::Grid(PathBuf::from(need(spec, a)?))),
            ("diag", a) => {
                let v = need(spec, a)?
                    .split(',')
                    .map(|s| number(spec, s))
                    .collect::<Result<Vec<_>, _>>()?;
                if v.len() != 3 {
                    return Err(MapSpecError::BadParameter {
                        spec: spec.to_owned(),
                        reason: format!("expected 3 entries, got {}", v.len()),
                    });
                }
                Ok(MapSpec::Diag(v))
            }
            _ => Err(MapSpecError::Unknown(spec.to_owned())),
        }
    }
}

impl MapSpec {
    pub fn resolve(&self) -> Result<ResolvedMap, MapSpecError> {
        let bad = |e: qcskew_core::Error| MapSpecError::BadParameter {
            spec: self.to_string(),
            reason: e.to_string(),
        };
        Ok(match self {
            MapSpec::Identity => ResolvedMap::Planar(Box::new(Identity)),
            MapSpec::Affine(mu) => ResolvedMap::Planar(Box::new(make_affine(*mu).map_err(bad)?)),
            MapSpec::Radial(k) => ResolvedMap::Planar(Box::new(make_radial_stretch(*k).map_err(bad)?)),
            MapSpec::Square => ResolvedMap::Planar(Box::new(Square)),
            MapSpec::Grid(path) => ResolvedMap::Planar(Box::new(load_grid_map_path(path)?)),
            MapSpec::Id3 => ResolvedMap::Space(Box::new(IdentityN { dim: 3 })),
            MapSpec::Diag(d) => ResolvedMap::Space(Box::new(Diagonal::new(d.clone()).map_err(bad)?)),
        })
    }

    pub fn planar(&self) -> Result<Box<dyn PlanarMap + Send>, MapSpecError> {
        match self.resolve()? {
            ResolvedMap::Planar(m) => Ok(m),
            ResolvedMap::Space(_) => Err(MapSpecError::WrongKind {
                spec: self.to_string(),
                found: "space",
                wanted: "planar",
            }),
        }
    }

    pub fn space(&self) -> Result<Box<dyn SpaceMap + Send>, MapSpecError> {
        match self.resolve()? {
            ResolvedMap::Space(m) => Ok(m),
            ResolvedMap::Planar(_) => Err(MapSpecError::WrongKind {
                spec: self.to_string(),
                found: "planar",
                wanted: "space",
            }),
        }
    }
}

impl std::fmt::Display for MapSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MapSpec::Identity => write!(f, "identity"),
            MapSpec::Affine(mu) => write!(f, "affine:{mu}"),
            MapSpec::Radial(k) => write!(f, "radial:{k}"),
            MapSpec::Square => write!(f, "square"),
            MapSpec::Grid(p) => write!(f, "grid:{}", p.display()),
            MapSpec::Id3 => write!(f, "id3"),
            MapSpec::Diag(d) => write!(f, "diag:{},{},{}", d[0], d[1], d[2]),
        }
    }
}
