// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Maps of the plane.
//!
//! Every estimator consumes a [`PlanarMap`]: a deterministic, reentrant
//! evaluator together with the region where it may be evaluated. The zoo
//! covers the reference maps whose distortion is known in closed form:
//!
//! | map | formula | dilatation |
//! |-----|---------|------------|
//! | [`Identity`] | `z` | 1 |
//! | [`Affine`] | `z + μ z̄`, `0 ≤ μ < 1` | `(1+μ)/(1-μ)` everywhere |
//! | [`RadialStretch`] | `z |z|^{K-1}` | `K` away from the origin, 1 at the origin |
//! | [`Square`] | `z²` | 1 (conformal away from 0) |
//!
//! [`GridMap`] interpolates image points given on a rectangular grid.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{check_finite, Error, Result};
use crate::geometry::{check_point, Disk, Point2};
use crate::linear;

/// Region where a map may be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Domain {
    Plane,
    /// Closed rectangle `[x0, x1] × [y0, y1]`.
    Rect {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
    },
    Disk(Disk),
}

impl Domain {
    pub fn contains(&self, z: Point2) -> bool {
        match *self {
            Domain::Plane => z.re.is_finite() && z.im.is_finite(),
            Domain::Rect { x0, y0, x1, y1 } => z.re >= x0 && z.re <= x1 && z.im >= y0 && z.im <= y1,
            Domain::Disk(d) => d.contains(z),
        }
    }

    /// Distance from `z` to the complement of the domain (`+∞` for the plane,
    /// non-positive outside).
    pub fn clearance(&self, z: Point2) -> f64 {
        match *self {
            Domain::Plane => f64::INFINITY,
            Domain::Rect { x0, y0, x1, y1 } => (z.re - x0).min(x1 - z.re).min(z.im - y0).min(y1 - z.im),
            Domain::Disk(d) => d.radius - (z - d.center).norm(),
        }
    }

    /// Whether the closed disk lies strictly inside the domain.
    pub fn contains_disk_strictly(&self, disk: &Disk) -> bool {
        self.clearance(disk.center) > disk.radius
    }
}

/// Known distortion figures of a map, when available.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MapMetadata {
    /// Known metric dilatation `K`.
    pub dilatation: Option<f64>,
    /// Known `Skew(f)`.
    pub skew: Option<f64>,
    pub orientation_preserving: Option<bool>,
}

/// A deterministic map from (part of) the plane to the plane.
pub trait PlanarMap: Sync {
    /// Image of `z`. Callers guarantee `z` is in [`domain`](Self::domain).
    fn apply(&self, z: Point2) -> Point2;

    fn domain(&self) -> Domain;

    fn metadata(&self) -> MapMetadata {
        MapMetadata::default()
    }

    /// Short identifier, the same string the CLI map spec accepts where possible.
    fn name(&self) -> String;

    /// Checked evaluation: rejects points outside the domain and non-finite images.
    fn eval(&self, z: Point2) -> Result<Point2> {
        check_point(z, "evaluation point")?;
        if !self.domain().contains(z) {
            return Err(Error::OutOfDomain { re: z.re, im: z.im });
        }
        let w = self.apply(z);
        check_point(w, "map image")
    }
}

impl<M: PlanarMap + ?Sized> PlanarMap for &M {
    fn apply(&self, z: Point2) -> Point2 {
        (**self).apply(z)
    }
    fn domain(&self) -> Domain {
        (**self).domain()
    }
    fn metadata(&self) -> MapMetadata {
        (**self).metadata()
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

impl<M: PlanarMap + ?Sized + Send> PlanarMap for Box<M> {
    fn apply(&self, z: Point2) -> Point2 {
        (**self).apply(z)
    }
    fn domain(&self) -> Domain {
        (**self).domain()
    }
    fn metadata(&self) -> MapMetadata {
        (**self).metadata()
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Identity;

impl PlanarMap for Identity {
    fn apply(&self, z: Point2) -> Point2 {
        z
    }
    fn domain(&self) -> Domain {
        Domain::Plane
    }
    fn metadata(&self) -> MapMetadata {
        MapMetadata {
            dilatation: Some(1.0),
            skew: Some(1.0),
            orientation_preserving: Some(true),
        }
    }
    fn name(&self) -> String {
        "identity".into()
    }
}

/// The normalized linear model `z ↦ z + μ z̄` with real `0 ≤ μ < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Affine {
    mu: f64,
}

impl Affine {
    pub fn mu(&self) -> f64 {
        self.mu
    }
}

pub fn make_affine(mu: f64) -> Result<Affine> {
    check_finite(mu, "mu")?;
    if !(0.0..1.0).contains(&mu) {
        return Err(Error::OutOfRange {
            name: "mu",
            value: mu,
            expected: "0 <= mu < 1",
        });
    }
    Ok(Affine { mu })
}

impl PlanarMap for Affine {
    fn apply(&self, z: Point2) -> Point2 {
        z + self.mu * z.conj()
    }
    fn domain(&self) -> Domain {
        Domain::Plane
    }
    fn metadata(&self) -> MapMetadata {
        MapMetadata {
            dilatation: Some((1.0 + self.mu) / (1.0 - self.mu)),
            skew: linear::linear_skew(self.mu).ok(),
            orientation_preserving: Some(true),
        }
    }
    fn name(&self) -> String {
        format!("affine:{}", self.mu)
    }
}

/// `z ↦ z |z|^{K-1}`.
///
/// Circles about the origin go to circles, so the metric dilatation is 1 at
/// the origin itself; at every other point it is `K` (radial derivative
/// `K r^{K-1}` against tangential `r^{K-1}`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialStretch {
    k: f64,
}

impl RadialStretch {
    pub fn k(&self) -> f64 {
        self.k
    }
}

pub fn make_radial_stretch(k: f64) -> Result<RadialStretch> {
    check_finite(k, "K")?;
    if !(k >= 1.0) {
        return Err(Error::OutOfRange {
            name: "K",
            value: k,
            expected: "K >= 1",
        });
    }
    Ok(RadialStretch { k })
}

impl PlanarMap for RadialStretch {
    fn apply(&self, z: Point2) -> Point2 {
        let r = z.norm();
        if r == 0.0 {
            return z;
        }
        z * libm::pow(r, self.k - 1.0)
    }
    fn domain(&self) -> Domain {
        Domain::Plane
    }
    fn metadata(&self) -> MapMetadata {
        MapMetadata {
            dilatation: Some(self.k),
            skew: None,
            orientation_preserving: Some(true),
        }
    }
    fn name(&self) -> String {
        format!("radial:{}", self.k)
    }
}

/// `z ↦ z²`; conformal off the origin, injective on any half-plane.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Square;

impl PlanarMap for Square {
    fn apply(&self, z: Point2) -> Point2 {
        z * z
    }
    fn domain(&self) -> Domain {
        Domain::Plane
    }
    fn metadata(&self) -> MapMetadata {
        MapMetadata {
            dilatation: Some(1.0),
            skew: None,
            orientation_preserving: Some(true),
        }
    }
    fn name(&self) -> String {
        "square".into()
    }
}

/// `z ↦ inner(offset + scale·z)` with a real positive `scale`.
///
/// Used to place a fixed configuration (for instance the unit lattice triangle)
/// on a chosen patch of another map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precomposed<M> {
    pub inner: M,
    pub offset: Point2,
    pub scale: f64,
}

impl<M: PlanarMap> Precomposed<M> {
    pub fn new(inner: M, offset: Point2, scale: f64) -> Result<Self> {
        check_point(offset, "offset")?;
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::OutOfRange {
                name: "scale",
                value: scale,
                expected: "finite and > 0",
            });
        }
        Ok(Self { inner, offset, scale })
    }
}

impl<M: PlanarMap> PlanarMap for Precomposed<M> {
    fn apply(&self, z: Point2) -> Point2 {
        self.inner.apply(self.offset + z * self.scale)
    }
    fn domain(&self) -> Domain {
        let s = self.scale;
        let o = self.offset;
        match self.inner.domain() {
            Domain::Plane => Domain::Plane,
            Domain::Rect { x0, y0, x1, y1 } => Domain::Rect {
                x0: (x0 - o.re) / s,
                y0: (y0 - o.im) / s,
                x1: (x1 - o.re) / s,
                y1: (y1 - o.im) / s,
            },
            Domain::Disk(d) => Domain::Disk(Disk {
                center: (d.center - o) / s,
                radius: d.radius / s,
            }),
        }
    }
    fn metadata(&self) -> MapMetadata {
        self.inner.metadata()
    }
    fn name(&self) -> String {
        format!(
            "{}@({}+{}i)x{}",
            self.inner.name(),
            self.offset.re,
            self.offset.im,
            self.scale
        )
    }
}

/// Map given by its values on a regular grid, evaluated by bilinear
/// interpolation.
///
/// Node `(i, j)` sits at `(x0 + i·(x1-x0)/(nx-1), y0 + j·(y1-y0)/(ny-1))` and
/// its image is `points[j·nx + i]` (row-major, `y` varies slowest).
/// Injectivity of the supplied data is not checked.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GridMap {
    pub bounds: [f64; 4],
    pub nx: usize,
    pub ny: usize,
    pub points: Vec<Point2>,
}

impl GridMap {
    pub fn new(bounds: [f64; 4], nx: usize, ny: usize, points: Vec<Point2>) -> Result<Self> {
        let [x0, y0, x1, y1] = bounds;
        if bounds.iter().any(|b| !b.is_finite()) {
            return Err(Error::InvalidGrid("non-finite domain bound".into()));
        }
        if !(x1 > x0 && y1 > y0) {
            return Err(Error::InvalidGrid(format!("empty domain [{x0}, {x1}] x [{y0}, {y1}]")));
        }
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidGrid(format!("grid must be at least 2x2, got {nx}x{ny}")));
        }
        let expected = nx
            .checked_mul(ny)
            .ok_or_else(|| Error::InvalidGrid("grid too large".into()))?;
        if points.len() != expected {
            return Err(Error::InvalidGrid(format!(
                "expected nx*ny = {expected} points, got {}",
                points.len()
            )));
        }
        if let Some(k) = points.iter().position(|p| !(p.re.is_finite() && p.im.is_finite())) {
            return Err(Error::InvalidGrid(format!("non-finite image point at index {k}")));
        }
        Ok(Self { bounds, nx, ny, points })
    }

    /// Samples `map` on the grid nodes.
    pub fn sample<M: PlanarMap + ?Sized>(map: &M, bounds: [f64; 4], nx: usize, ny: usize) -> Result<Self> {
        let [x0, y0, x1, y1] = bounds;
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidGrid(format!("grid must be at least 2x2, got {nx}x{ny}")));
        }
        let mut points = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            let y = lerp(y0, y1, j as f64 / (ny - 1) as f64);
            for i in 0..nx {
                let x = lerp(x0, x1, i as f64 / (nx - 1) as f64);
                points.push(map.eval(Point2::new(x, y))?);
            }
        }
        Self::new(bounds, nx, ny, points)
    }

    pub fn node(&self, i: usize, j: usize) -> Point2 {
        self.points[j * self.nx + i]
    }

    fn cell(coord: f64, lo: f64, hi: f64, n: usize) -> (usize, f64) {
        let u = (coord - lo) / (hi - lo) * (n - 1) as f64;
        let i = (libm::floor(u).max(0.0) as usize).min(n - 2);
        (i, u - i as f64)
    }
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    a + (b - a) * t
}

impl PlanarMap for GridMap {
    fn apply(&self, z: Point2) -> Point2 {
        let [x0, y0, x1, y1] = self.bounds;
        let (i, s) = Self::cell(z.re, x0, x1, self.nx);
        let (j, t) = Self::cell(z.im, y0, y1, self.ny);
        let p00 = self.node(i, j);
        let p10 = self.node(i + 1, j);
        let p01 = self.node(i, j + 1);
        let p11 = self.node(i + 1, j + 1);
        p00 * ((1.0 - s) * (1.0 - t)) + p10 * (s * (1.0 - t)) + p01 * ((1.0 - s) * t) + p11 * (s * t)
    }
    fn domain(&self) -> Domain {
        let [x0, y0, x1, y1] = self.bounds;
        Domain::Rect { x0, y0, x1, y1 }
    }
    fn name(&self) -> String {
        format!("grid:{}x{}", self.nx, self.ny)
    }
}

/// Result of [`orientation_spot_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OrientationCheck {
    pub samples: usize,
    /// Points where the finite-difference Jacobian determinant is negative.
    pub negative: usize,
    pub min_det: f64,
}

impl OrientationCheck {
    pub fn orientation_preserving(&self) -> bool {
        self.negative == 0
    }
}

/// Signs of central-difference Jacobian determinants at the given points.
/// Points whose stencil leaves the domain are skipped.
pub fn orientation_spot_check<M: PlanarMap + ?Sized>(map: &M, points: &[Point2], h: f64) -> OrientationCheck {
    let dom = map.domain();
    let mut out = OrientationCheck {
        samples: 0,
        negative: 0,
        min_det: f64::INFINITY,
    };
    for &z in points {
        if dom.clearance(z) <= h {
            continue;
        }
        let dx = (map.apply(z + h) - map.apply(z - h)) / (2.0 * h);
        let i = Point2::new(0.0, h);
        let dy = (map.apply(z + i) - map.apply(z - i)) / (2.0 * h);
        let det = dx.re * dy.im - dx.im * dy.re;
        out.samples += 1;
        if det < 0.0 {
            out.negative += 1;
        }
        out.min_det = out.min_det.min(det);
    }
    out
}
