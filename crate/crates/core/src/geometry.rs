// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Planar primitives.
//!
//! Points are complex numbers. The lattice generator `ω = 1/2 + (√3/2)i`
//! (`e^{iπ/3}`) and the two rotations `R_x(z) = x + (z - x)ω` and
//! `R̄_x(z) = x + (z - x)ω̄` are the building blocks of every construction in
//! the crate.

use core::f64::consts::{FRAC_PI_3, PI, TAU};

use num_complex::Complex64;

use crate::error::{check_finite, Error, Result};

/// A point of the plane.
pub type Point2 = Complex64;

/// `ω = e^{iπ/3}`.
pub const OMEGA: Point2 = Complex64::new(0.5, 0.866_025_403_784_438_6);

/// Absolute tolerance used for exact geometric identities in floating point.
pub const GEOM_TOL: f64 = 1e-12;

pub(crate) fn check_point(z: Point2, what: &'static str) -> Result<Point2> {
    check_finite(z.re, what)?;
    check_finite(z.im, what)?;
    Ok(z)
}

/// Ordered vertex triple.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Triangle2 {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
}

impl Triangle2 {
    pub const fn new(a: Point2, b: Point2, c: Point2) -> Self {
        Self { a, b, c }
    }

    /// `|a - b|`, `|b - c|`, `|c - a|`.
    pub fn sides(&self) -> [f64; 3] {
        [
            (self.a - self.b).norm(),
            (self.b - self.c).norm(),
            (self.c - self.a).norm(),
        ]
    }

    /// `L(T)`: the largest pairwise vertex distance.
    pub fn longest(&self) -> f64 {
        let [x, y, z] = self.sides();
        x.max(y).max(z)
    }

    /// `l(T)`: the smallest pairwise vertex distance.
    pub fn shortest(&self) -> f64 {
        let [x, y, z] = self.sides();
        x.min(y).min(z)
    }

    /// `L(T) / l(T)`. Fails on triangles with a repeated vertex.
    pub fn skew(&self) -> Result<f64> {
        skew_of_sides(self.sides())
    }

    /// Whether all three sides agree to `tol` relative to the longest one.
    pub fn is_equilateral(&self, tol: f64) -> bool {
        let l = self.longest();
        l - self.shortest() <= tol * l.max(f64::MIN_POSITIVE)
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.c]
    }

    pub fn map(&self, mut f: impl FnMut(Point2) -> Point2) -> Self {
        Self::new(f(self.a), f(self.b), f(self.c))
    }

    pub fn try_map<E>(
        &self,
        mut f: impl FnMut(Point2) -> core::result::Result<Point2, E>,
    ) -> core::result::Result<Self, E> {
        Ok(Self::new(f(self.a)?, f(self.b)?, f(self.c)?))
    }

    pub fn is_finite(&self) -> bool {
        self.vertices().iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Skew of a triangle given by its three side lengths.
pub fn skew_of_sides(sides: [f64; 3]) -> Result<f64> {
    let [x, y, z] = sides;
    let lo = x.min(y).min(z);
    let hi = x.max(y).max(z);
    if !(lo > 0.0) {
        return Err(Error::DegenerateTriangle);
    }
    if !hi.is_finite() {
        return Err(Error::NonFinite("triangle side"));
    }
    Ok(hi / lo)
}

/// `skew(T) = L(T) / l(T)`.
pub fn skew(t: &Triangle2) -> Result<f64> {
    t.skew()
}

/// Closed disk `D(center, radius)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Disk {
    pub center: Point2,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        check_point(center, "disk center")?;
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::OutOfRange {
                name: "radius",
                value: radius,
                expected: "finite and >= 0",
            });
        }
        Ok(Self { center, radius })
    }

    pub fn contains(&self, z: Point2) -> bool {
        (z - self.center).norm() <= self.radius
    }

    /// Whether `other` lies inside `self`.
    pub fn contains_disk(&self, other: &Disk) -> bool {
        (other.center - self.center).norm() + other.radius <= self.radius
    }

    /// Point of the boundary circle `C(center, radius)` at angle `theta`.
    pub fn boundary_point(&self, theta: f64) -> Point2 {
        self.center + Point2::from_polar(self.radius, theta)
    }
}

/// Equilateral triangle with vertices `center + circumradius·e^{i(orientation + 2πj/3)}`.
pub fn equilateral_from(center: Point2, circumradius: f64, orientation: f64) -> Result<Triangle2> {
    check_point(center, "center")?;
    check_finite(orientation, "orientation")?;
    if !(circumradius > 0.0) || !circumradius.is_finite() {
        return Err(Error::OutOfRange {
            name: "circumradius",
            value: circumradius,
            expected: "finite and > 0",
        });
    }
    let vertex = |j: f64| center + Point2::from_polar(circumradius, orientation + j * TAU / 3.0);
    Ok(Triangle2::new(vertex(0.0), vertex(1.0), vertex(2.0)))
}

/// Direction of a ±π/3 rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sense {
    /// Counter-clockwise, multiplication by `ω`.
    Ccw,
    /// Clockwise, multiplication by `ω̄`.
    Cw,
}

impl Sense {
    pub fn factor(self) -> Point2 {
        match self {
            Sense::Ccw => OMEGA,
            Sense::Cw => OMEGA.conj(),
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Sense::Ccw => 1,
            Sense::Cw => -1,
        }
    }
}

/// `R_x(z)` for [`Sense::Ccw`], `R̄_x(z)` for [`Sense::Cw`].
pub fn rotate_about(x: Point2, z: Point2, sense: Sense) -> Point2 {
    x + (z - x) * sense.factor()
}

const GEO_LEMMA_RADIUS: f64 = 0.125;
const GEO_LEMMA_SLACK: f64 = 0.125;

/// Angle at `z` between `e^{iθ₊} - z` and `e^{iθ₋} - z`, measured across the
/// positive real axis.
///
/// Requires `|z| ≤ 1/8` and `|θ± ∓ π/3| ≤ 1/8`; under those conditions the
/// result lies in `(π/3, π)`.
pub fn geo_lemma_angle(z: Point2, theta_plus: f64, theta_minus: f64) -> Result<f64> {
    check_point(z, "z")?;
    check_finite(theta_plus, "theta_plus")?;
    check_finite(theta_minus, "theta_minus")?;
    if z.norm() > GEO_LEMMA_RADIUS {
        return Err(Error::Precondition(alloc::format!("|z| = {} exceeds 1/8", z.norm())));
    }
    if (theta_plus - FRAC_PI_3).abs() > GEO_LEMMA_SLACK {
        return Err(Error::Precondition(alloc::format!(
            "theta_plus = {theta_plus} is farther than 1/8 from pi/3"
        )));
    }
    if (theta_minus + FRAC_PI_3).abs() > GEO_LEMMA_SLACK {
        return Err(Error::Precondition(alloc::format!(
            "theta_minus = {theta_minus} is farther than 1/8 from -pi/3"
        )));
    }
    let up = (Point2::from_polar(1.0, theta_plus) - z).arg();
    let down = (Point2::from_polar(1.0, theta_minus) - z).arg();
    // the admissible region forces up ∈ (0, π) and down ∈ (-π, 0)
    debug_assert!(up > 0.0 && down < 0.0);
    let angle = up - down;
    debug_assert!(angle < PI);
    Ok(angle)
}
