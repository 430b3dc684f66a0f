// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! The explicit constants behind the skew-to-dilatation bound, and the
//! static-geometry inequalities they rest on.
//!
//! For a map with `Skew(f) ≤ σ` and a tiling of `N` triangles:
//!
//! ```text
//! C(σ) = σ(1 + 2σ³)
//! c(σ) = 1 / (N σᴺ)
//! α(σ) = c / ((2σ + 1) C)
//! H(σ) = α⁻²
//! ```
//!
//! `σᴺ` overflows every float long before `N = 2¹⁸`, so everything is kept as
//! natural logarithms and only rendered as a decimal string at the end.

use alloc::format;
use alloc::string::String;

use crate::bound::{BoundEntry, BoundKind, BoundReport};
use crate::certified::{rat, sqrt3, to_f64, Interval, Rational};
use crate::error::{Error, Result};
use crate::lattice::{eisenstein_norm, locate_pq};

/// Tiles of the scale-9 tiling, `4⁹ = 2¹⁸`.
pub const DEFAULT_N: u64 = 1 << 18;

/// Relative agreement required between the two evaluations of `ln H`.
pub const AGREEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstantChain {
    pub sigma: f64,
    pub n: u64,
    pub log_c: f64,
    pub log_big_c: f64,
    pub log_alpha: f64,
    pub log_h: f64,
    /// `ln H` expanded term by term, independent of the nested evaluation.
    pub log_h_expanded: f64,
}

/// `ln(1 + 2s³)` without overflowing for huge `s`.
fn ln_one_plus_two_cubed(s: f64) -> f64 {
    let cube = s * s * s;
    if cube.is_finite() {
        libm::log1p(2.0 * cube)
    } else {
        core::f64::consts::LN_2 + 3.0 * libm::log(s) + libm::log1p(0.5 / cube)
    }
}

pub fn constant_chain(sigma: f64, n: u64) -> Result<ConstantChain> {
    if !sigma.is_finite() || !(sigma >= 1.0) {
        return Err(Error::OutOfRange {
            name: "sigma",
            value: sigma,
            expected: "a finite value >= 1",
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "N",
            value: 0.0,
            expected: "N >= 1",
        });
    }
    let ln_s = libm::log(sigma);
    let ln_n = libm::log(n as f64);
    let log_big_c = ln_s + ln_one_plus_two_cubed(sigma);
    let log_c = -(ln_n + n as f64 * ln_s);
    let log_alpha = log_c - libm::log(2.0 * sigma + 1.0) - log_big_c;
    let log_h = -2.0 * log_alpha;

    // H = N² σ^{2N} (2σ+1)² σ² (1+2σ³)², summed in a different order
    let log_h_expanded = 2.0 * libm::log1p(2.0 * sigma)
        + 2.0 * ln_one_plus_two_cubed(sigma)
        + (2.0 * n as f64 + 2.0) * ln_s
        + 2.0 * ln_n;
    Ok(ConstantChain {
        sigma,
        n,
        log_c,
        log_big_c,
        log_alpha,
        log_h,
        log_h_expanded,
    })
}

/// Decimal rendering `d.ddddddddddddeE` of `exp(log_value)`.
pub fn render_exp(log_value: f64) -> Option<String> {
    if !log_value.is_finite() {
        return None;
    }
    let l10 = log_value / core::f64::consts::LN_10;
    let mut exponent = libm::floor(l10);
    let mut mantissa = libm::pow(10.0, l10 - exponent);
    if mantissa >= 10.0 {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    if exponent.abs() > 1e15 {
        return None;
    }
    Some(format!("{mantissa:.12}e{}", exponent as i64))
}

impl ConstantChain {
    pub fn big_c(&self) -> f64 {
        libm::exp(self.log_big_c)
    }

    pub fn c(&self) -> f64 {
        libm::exp(self.log_c)
    }

    pub fn alpha(&self) -> f64 {
        libm::exp(self.log_alpha)
    }

    /// `H` as a float; infinite when it overflows.
    pub fn h(&self) -> f64 {
        libm::exp(self.log_h)
    }

    pub fn log10_h(&self) -> f64 {
        self.log_h / core::f64::consts::LN_10
    }

    pub fn render_big_c(&self) -> Option<String> {
        render_exp(self.log_big_c)
    }

    pub fn render_inv_alpha(&self) -> Option<String> {
        render_exp(-self.log_alpha)
    }

    pub fn render_h(&self) -> Option<String> {
        render_exp(self.log_h)
    }

    pub fn orders_agree(&self) -> bool {
        (self.log_h - self.log_h_expanded).abs() <= AGREEMENT_TOL * self.log_h.abs().max(1.0)
    }

    /// Structural identities of the chain plus the agreement check.
    pub fn report(&self) -> BoundReport {
        let mut r = BoundReport::new(format!("constant chain, sigma = {}, N = {}", self.sigma, self.n));
        let tol = 1e-12 * self.log_h.abs().max(1.0);
        r.push(BoundEntry::identity(
            "ln alpha = ln c - ln(2 sigma + 1) - ln C",
            self.log_alpha,
            self.log_c - libm::log(2.0 * self.sigma + 1.0) - self.log_big_c,
            tol,
        ));
        r.push(BoundEntry::identity(
            "ln H = -2 ln alpha",
            self.log_h,
            -2.0 * self.log_alpha,
            tol,
        ));
        r.push(BoundEntry::identity(
            "nested and expanded ln H agree",
            self.log_h,
            self.log_h_expanded,
            AGREEMENT_TOL * self.log_h.abs().max(1.0),
        ));
        r
    }
}

fn strict(name: &str, lhs: &Interval, rhs: &Interval) -> BoundEntry {
    certified(name, BoundKind::Strict, lhs, rhs)
}

fn certified(name: &str, kind: BoundKind, lhs: &Interval, rhs: &Interval) -> BoundEntry {
    // lhs below rhs; the margin is a certified lower bound of rhs - lhs
    BoundEntry::with_margin(name, kind, lhs.midpoint(), rhs.midpoint(), to_f64(rhs.margin_over(lhs)))
}

/// Every numeric fact about the scale-9 configuration that the bound uses,
/// decided with rationals and the enclosure `1.7320508 < √3 < 1.7320509`.
pub fn verify_static_geometry() -> Result<BoundReport> {
    let s3 = sqrt3();
    let q = |n: i128, d: i128| Interval::point(rat(n, d));
    let mut r = BoundReport::new("static geometry");

    // for p = (m + nω)/512 the distances to the sides [0,1], [0,ω], [1,ω]
    // are n, m and 512 - m - n times √3/1024
    let pq = locate_pq(9)?;
    let (m, n) = (i128::from(pq.p.m), i128::from(pq.p.n));
    let coeffs = [rat(n, 1024), rat(m, 1024), rat(512 - m - n, 1024)];
    let nearest: Rational = coeffs.iter().copied().fold(coeffs[0], Rational::min);
    let dist = s3 * nearest;
    r.push(strict("dist(p, dT) > 1/4 + 2^-6", &q(17, 64), &dist));
    r.push(BoundEntry::exact_identity(
        "dist(p, dT) = 85*sqrt3*2^-9",
        dist.midpoint(),
        85.0 * libm::sqrt(3.0) / 512.0,
        nearest == rat(85, 512),
    ));
    r.push(strict("sqrt3 >= 8/5", &q(8, 5), &s3));

    let xi_norm = eisenstein_norm(512 - 3 * pq.p.m, 512 - 3 * pq.p.n);
    r.push(BoundEntry::exact_identity(
        "|xi - p| = sqrt3/(2^9*3)",
        libm::sqrt(xi_norm as f64) / 1536.0,
        (s3 * rat(1, 1536)).midpoint(),
        xi_norm == 3,
    ));

    let (pq_num, pq_den) = pq.p.dist_sq(pq.q);
    r.push(BoundEntry::exact_identity(
        "|p - q| = 2^-9",
        libm::sqrt(pq_num as f64 / pq_den as f64),
        1.0 / 512.0,
        (pq_num, pq_den) == (1, 1 << 18),
    ));
    r.push(strict("|p - q| = 2^-9 < sqrt3*2^-8", &q(1, 512), &(s3 * rat(1, 256))));

    // cos(π/6) = √3/2 exactly, so the clearance identity is a rational one
    r.push(BoundEntry::exact_identity(
        "cos(pi/6)*2^-6 = sqrt3*2^-7",
        libm::sqrt(3.0) / 2.0 / 64.0,
        libm::sqrt(3.0) / 128.0,
        rat(1, 2) * rat(1, 64) == rat(1, 128),
    ));

    // cos(π/3 + x) = cos x/2 - (√3/2) sin x with x = 1/8, cos x ≥ 1 - x²/2, sin x ≤ x
    let x = rat(1, 8);
    let cos_lo = Interval::point((Rational::from_integer(1) - x * x / 2) / 2) - s3 * (x / 2);
    r.push(strict("cos(theta) >= cos(pi/3 + 1/8) > 1/4", &q(1, 4), &cos_lo));
    r.push(strict("1/2 - 1/4 > 1/8", &q(1, 8), &(q(1, 2) - q(1, 4))));

    let tan_bound = (s3 * rat(2, 1) - Interval::int(1)) * rat(1, 3);
    r.push(strict("(2 sqrt3 - 1)/3 >= 2/3", &q(2, 3), &tan_bound));
    r.push(strict("2/3 > tan(pi/6) = sqrt3/3", &(s3 * rat(1, 3)), &q(2, 3)));

    // |θ_A - θ_a| ≤ 2|a - A|/(1/4) with |a - A| ≤ 2^-6 meets 1/8 with equality;
    // the exact deviation asin(|a - A|/(1/4)) = asin(1/16) ≤ 1/√255 < 1/15
    let slope = rat(2, 64) / rat(1, 4);
    r.push(BoundEntry::exact_identity(
        "2*2^-6/(1/4) = 1/8",
        to_f64(slope),
        0.125,
        slope == rat(1, 8),
    ));
    r.push(strict("asin(2^-6/(1/4)) < 1/8", &q(1, 15), &q(1, 8)));

    Ok(r)
}
