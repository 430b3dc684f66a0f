// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed forms for the linear model `f̃(z) = z + μ z̄`, `0 ≤ μ < 1`.
//!
//! With `ν = μ + 1/μ` the skew of the image of the worst equilateral triangle
//! is `τ` where
//!
//! ```text
//! τ² = (ν² - 1 + √(3(ν² - 1))) / (ν² - 1 - √(3(ν² - 1)))
//! ```
//!
//! and inverting gives `μ = (√(τ⁴+τ²+1) - √3 τ)/(τ² - 1)` and the dilatation
//! bound `K(σ) = (σ² - 1 + √(σ⁴+σ²+1)) / (√3 σ)`.
//!
//! [`oracle_max_ratio`] evaluates the same extremum by brute force and never
//! touches the closed forms.

use core::f64::consts::{FRAC_PI_3, PI, TAU};

use crate::error::{check_finite, Error, Result};
use crate::geometry::Point2;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// `α = e^{iπ/3}`.
const ALPHA: Point2 = crate::geometry::OMEGA;

/// Normalized Beltrami coefficient together with `ν = μ + 1/μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BeltramiParams {
    pub mu: f64,
    /// `+∞` when `mu == 0`.
    pub nu: f64,
}

impl BeltramiParams {
    pub fn new(mu: f64) -> Result<Self> {
        check_mu(mu, 0.0..1.0)?;
        let nu = if mu == 0.0 { f64::INFINITY } else { mu + 1.0 / mu };
        Ok(Self { mu, nu })
    }

    /// `K = (1 + μ)/(1 - μ)`.
    pub fn dilatation(&self) -> f64 {
        (1.0 + self.mu) / (1.0 - self.mu)
    }
}

fn check_mu(mu: f64, range: core::ops::Range<f64>) -> Result<f64> {
    check_finite(mu, "mu")?;
    if range.contains(&mu) {
        Ok(mu)
    } else {
        Err(Error::OutOfRange {
            name: "mu",
            value: mu,
            expected: "0 <= mu < 1",
        })
    }
}

/// `τ = skew(f̃)` for `f̃(z) = z + μ z̄`. Exactly 1 at `μ = 0`.
pub fn linear_skew(mu: f64) -> Result<f64> {
    check_mu(mu, 0.0..1.0)?;
    if mu == 0.0 {
        return Ok(1.0);
    }
    // q = √((ν²-1)/3) and τ² = (q+1)/(q-1). Near μ = 1, q → 1; q - 1 is
    // formed from ν² - 4 = ((1-μ²)/μ)² to avoid cancellation.
    let nu = mu + 1.0 / mu;
    let q = libm::sqrt((nu * nu - 1.0) / 3.0);
    let gap = (1.0 - mu * mu) / mu;
    let q_minus_1 = gap * gap / (3.0 * (q + 1.0));
    Ok(libm::sqrt((q + 1.0) / q_minus_1))
}

/// Inverse of [`linear_skew`]: `μ = (√(τ⁴+τ²+1) - √3 τ)/(τ² - 1)`.
pub fn mu_from_skew(tau: f64) -> Result<f64> {
    check_finite(tau, "tau")?;
    if !(tau >= 1.0) {
        return Err(Error::OutOfRange {
            name: "tau",
            value: tau,
            expected: "tau >= 1",
        });
    }
    if tau == 1.0 {
        return Ok(0.0);
    }
    // rationalized: the numerator equals (τ²-1)² / (√(τ⁴+τ²+1) + √3 τ)
    let t2 = tau * tau;
    Ok((t2 - 1.0) / (libm::sqrt(t2 * t2 + t2 + 1.0) + SQRT_3 * tau))
}

/// `K(σ) = (σ² - 1 + √(σ⁴+σ²+1)) / (√3 σ)`.
pub fn k_of_sigma(sigma: f64) -> Result<f64> {
    check_finite(sigma, "sigma")?;
    if !(sigma >= 1.0) {
        return Err(Error::OutOfRange {
            name: "sigma",
            value: sigma,
            expected: "sigma >= 1",
        });
    }
    if sigma == 1.0 {
        return Ok(1.0);
    }
    let s2 = sigma * sigma;
    Ok((s2 - 1.0 + libm::sqrt(s2 * s2 + s2 + 1.0)) / (SQRT_3 * sigma))
}

/// `κ(z) = (ν + αz + ᾱz̄) / (ν + ᾱz + αz̄)` for unit `z`; this is
/// `|f̃(βw)|² / |f̃(β̄w)|²` with `z = w²`, `β = e^{iπ/6}`.
pub fn kappa(nu: f64, z: Point2) -> f64 {
    let num = nu + 2.0 * (ALPHA * z).re;
    let den = nu + 2.0 * (ALPHA.conj() * z).re;
    num / den
}

/// The two critical points of `κ` on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExtremalDirections {
    /// `cos x = -1/ν`.
    pub cos_x: f64,
    /// The `ε = -1` root, where `κ` is maximal.
    pub maximizer: Point2,
    /// The `ε = +1` root.
    pub minimizer: Point2,
    pub kappa_max: f64,
    pub kappa_min: f64,
}

/// Critical directions `z = (1/ν)(-1 + iε√(ν²-1))`, `ε = ±1`.
pub fn extremal_directions(mu: f64) -> Result<ExtremalDirections> {
    check_mu(mu, 0.0..1.0)?;
    if mu == 0.0 {
        return Err(Error::OutOfRange {
            name: "mu",
            value: mu,
            expected: "0 < mu < 1",
        });
    }
    let nu = mu + 1.0 / mu;
    let s = libm::sqrt(nu * nu - 1.0);
    let root = |eps: f64| Point2::new(-1.0 / nu, eps * s / nu);
    let maximizer = root(-1.0);
    let minimizer = root(1.0);
    Ok(ExtremalDirections {
        cos_x: -1.0 / nu,
        maximizer,
        minimizer,
        kappa_max: kappa(nu, maximizer),
        kappa_min: kappa(nu, minimizer),
    })
}

/// `κ` at the critical points in closed form,
/// `(ν²-1 - ε√(3(ν²-1))) / (ν²-1 + ε√(3(ν²-1)))`.
pub fn critical_kappa(mu: f64, eps: f64) -> Result<f64> {
    let p = BeltramiParams::new(mu)?;
    let s = p.nu * p.nu - 1.0;
    let r = libm::sqrt(3.0 * s);
    Ok((s - eps * r) / (s + eps * r))
}

/// `|f̃(z)| / |f̃(z e^{iπ/3})|` at `z = e^{iθ}`, evaluated directly.
pub fn side_ratio(mu: f64, theta: f64) -> f64 {
    let f = |w: Point2| w + mu * w.conj();
    let z = Point2::from_polar(1.0, theta);
    f(z).norm() / f(Point2::from_polar(1.0, theta + FRAC_PI_3)).norm()
}

/// Brute-force maximum of [`side_ratio`] together with its location.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OracleMax {
    pub ratio: f64,
    pub theta: f64,
}

/// Grid search over `grid` equally spaced angles followed by a golden-section
/// refinement around the best grid point.
pub fn oracle_search(mu: f64, grid: usize) -> Result<OracleMax> {
    check_mu(mu, 0.0..1.0)?;
    if grid < 3 {
        return Err(Error::OutOfRange {
            name: "grid",
            value: grid as f64,
            expected: "grid >= 3",
        });
    }
    let step = TAU / grid as f64;
    let (best_j, best) =
        (0..grid)
            .map(|j| (j, side_ratio(mu, j as f64 * step)))
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (j, v)| if v > acc.1 { (j, v) } else { acc },
            );
    Ok(refine_around(mu, best_j as f64 * step, best, step))
}

/// Golden-section refinement of a grid argmax at `theta` with grid spacing `step`.
pub fn refine_around(mu: f64, theta: f64, value: f64, step: f64) -> OracleMax {
    let (t, v) = golden_section_max(|x| side_ratio(mu, x), theta - step, theta + step, 1e-14);
    if v > value {
        OracleMax { ratio: v, theta: t }
    } else {
        OracleMax { ratio: value, theta }
    }
}

/// The oracle for [`linear_skew`]: `max_{|z|=1} |f̃(z)| / |f̃(z e^{iπ/3})|`.
pub fn oracle_max_ratio(mu: f64, grid: usize) -> Result<f64> {
    oracle_search(mu, grid).map(|m| m.ratio)
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes a unimodal `f` on `[a, b]`; returns `(argmax, max)`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Reduces an angle to `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta % TAU;
    if t < 0.0 {
        t + TAU
    } else {
        t
    }
}

/// Angle `θ*` with `side_ratio(μ, θ*) = τ`, read off the `ε = -1` root.
///
/// With `z = w²` the maximal ratio is `|f̃(βw)| / |f̃(β̄w)|`; reflecting by
/// `u ↦ ū e^{-iπ/3}` puts it in the form of [`side_ratio`] at `-arg w - π/6`.
pub fn maximizing_edge_angle(mu: f64) -> Result<f64> {
    let d = extremal_directions(mu)?;
    Ok(wrap_angle(-d.maximizer.arg() / 2.0 - PI / 6.0))
}
