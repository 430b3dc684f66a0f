// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

/// Errors raised by the core routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A triangle (or image triangle) has two coincident vertices.
    #[error("degenerate triangle: shortest side is zero")]
    DegenerateTriangle,
    /// An input was not a finite number.
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    /// A scalar parameter is outside the range where the operation is defined.
    #[error("parameter {name} = {value} out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    /// A map was evaluated outside of its declared domain.
    #[error("point ({re}, {im}) lies outside the map domain")]
    OutOfDomain { re: f64, im: f64 },
    /// The image of a circle or triangle collapsed at the sampled resolution.
    #[error("map is not injective at sampling resolution: {0}")]
    NonInjective(&'static str),
    /// Every scale or sample was discarded by domain clipping.
    #[error("no samples left after clipping to the domain")]
    EmptySample,
    /// A precondition of a geometric lemma does not hold.
    #[error("domain error: {0}")]
    Precondition(String),
    /// Inconsistent sampling configuration.
    #[error("invalid sampling plan: {0}")]
    InvalidPlan(&'static str),
    /// Requested lattice scale exceeds the memory guard.
    #[error("tiling scale k = {k} exceeds the cap {cap}")]
    ScaleTooLarge { k: u32, cap: u32 },
    /// An edge does not belong to the tiling.
    #[error("edge is not part of the tiling")]
    UnknownEdge,
    /// Malformed grid data.
    #[error("invalid grid map: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_finite(x: f64, what: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(what))
    }
}
