// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Distortion of equilateral triangles under planar homeomorphisms.
//!
//! `qcskew-core` measures how far a map is from conformal by looking at what
//! it does to equilateral triangles, and ties that measurement to the classical
//! metric dilatation
//!
//! ```text
//! H(z) = limsup_{r→0} max_{|w-z|=r} |f(w)-f(z)| / min_{|w-z|=r} |f(w)-f(z)|.
//! ```
//!
//! The crate is `no_std` (it needs `alloc`) and every routine is a pure
//! function of its inputs. File formats, threads and the command line live in
//! the companion `qcskew` crate.
//!
//! Modules:
//!
//! - [`geometry`]: points as complex numbers, triangles, disks, the ±π/3
//!   rotations and the boundary-angle lemma.
//! - [`map`]: the [`PlanarMap`](map::PlanarMap) trait, a zoo of maps with known
//!   distortion and bilinear grid maps.
//! - [`sampling`]: seeded, prefix-stable sampling plans.
//! - [`skew`]: sampled estimators of triangle skew, dilatation and `k_f`.
//! - [`linear`]: closed forms for the linear model `z + μ z̄` and a brute-force
//!   oracle for them.
//! - [`lattice`]: exact Eisenstein-lattice tilings of the unit triangle and
//!   chain distances between their edges.
//! - [`constants`]: the explicit constant chain in log space and the certified
//!   static-geometry inequalities.
//! - [`highdim`]: the dimension ≥ 3 construction and its `σ³` check.
#![cfg_attr(not(test), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod bound;
pub mod certified;
pub mod constants;
pub mod error;
pub mod geometry;
pub mod highdim;
pub mod lattice;
pub mod linear;
pub mod map;
pub mod sampling;
pub mod skew;

pub use bound::{BoundEntry, BoundKind, BoundReport};
pub use error::{Error, Result};
pub use geometry::{Disk, Point2, Triangle2, OMEGA};
pub use map::PlanarMap;
pub use sampling::SamplingPlan;
pub use skew::DistortionReport;
