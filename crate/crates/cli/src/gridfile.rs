// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Grid-map files.
//!
//! A grid map is a single JSON object:
//!
//! ```json
//! {"domain": [x0, y0, x1, y1], "nx": 3, "ny": 2,
//!  "points": [[X, Y], [X, Y], ...]}
//! ```
//!
//! with `nx·ny` image points in row-major order (`y` varies slowest).

use std::io::{Read, Write};
use std::path::Path;

use qcskew_core::map::GridMap;
use qcskew_core::Point2;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum GridFileError {
    #[error("reading grid file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed grid file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid grid: {0}")]
    Invalid(#[from] qcskew_core::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridFile {
    pub domain: [f64; 4],
    pub nx: usize,
    pub ny: usize,
    pub points: Vec<[f64; 2]>,
}

impl From<&GridMap> for GridFile {
    fn from(g: &GridMap) -> Self {
        Self {
            domain: g.bounds,
            nx: g.nx,
            ny: g.ny,
            points: g.points.iter().map(|p| [p.re, p.im]).collect(),
        }
    }
}

impl TryFrom<GridFile> for GridMap {
    type Error = qcskew_core::Error;

    fn try_from(f: GridFile) -> Result<Self, Self::Error> {
        let points = f.points.iter().map(|&[x, y]| Point2::new(x, y)).collect();
        GridMap::new(f.domain, f.nx, f.ny, points)
    }
}

pub fn load_grid_map(reader: impl Read) -> Result<GridMap, GridFileError> {
    let file: GridFile = serde_json::from_reader(reader)?;
    Ok(GridMap::try_from(file)?)
}

pub fn load_grid_map_path(path: impl AsRef<Path>) -> Result<GridMap, GridFileError> {
    let f = std::fs::File::open(path)?;
    load_grid_map(std::io::BufReader::new(f))
}

pub fn save_grid_map(map: &GridMap, mut writer: impl Write) -> Result<(), GridFileError> {
    serde_json::to_writer(&mut writer, &GridFile::from(map))?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn save_grid_map_path(map: &GridMap, path: impl AsRef<Path>) -> Result<(), GridFileError> {
    let f = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(f);
    save_grid_map(map, &mut w)?;
    w.flush()?;
    Ok(())
}
