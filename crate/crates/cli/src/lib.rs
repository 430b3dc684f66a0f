// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `qcskew-core`: grid-map files, the map spec
//! language, rayon drivers and JSON/CSV reports.

pub mod commands;
pub mod gridfile;
pub mod mapspec;
pub mod par;
pub mod report;

pub use commands::{run, Cli};
pub use report::{Format, Report};
