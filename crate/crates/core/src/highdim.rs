// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Equilateral triangles in `ℝⁿ`, `n ≥ 3`.
//!
//! Given a sphere point `a` and a reference point `m` at the same distance `r`
//! from `p`, the frame is normalized so that `p = 0`, `m = r e₁` and
//! `a = a₁e₁ + a₂e₂` with `a₂ ≥ 0`. When the angle between `a` and `e₁` is at
//! most `2π/3` the point
//!
//! ```text
//! b = (1/2, t, √(3/4 - t²)),   t = (1 - a₁)/(2a₂)      (r = 1)
//! ```
//!
//! makes `(0, e₁, b)` and `(0, b, a)` unit equilateral triangles sharing the
//! side `[0, b]`; otherwise `a` is first rotated by `-π/3`. Chaining the two
//! triangles bounds `|a|/|m|` by `σ³` in image space.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_3, PI, TAU};

use rand::Rng;
use rand_distr::StandardNormal;

use crate::bound::{BoundEntry, BoundKind, BoundReport};
use crate::error::{check_finite, Error, Result};
use crate::sampling::{stream_rng, SamplingPlan, Stream};
use crate::skew::CLIP;

/// Point of `ℝⁿ`.
pub type PointN = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

pub fn sub(a: &[f64], b: &[f64]) -> PointN {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    norm(&sub(a, b))
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn unit(n: usize, i: usize) -> PointN {
    let mut e = vec![0.0; n];
    e[i] = 1.0;
    e
}

/// Orthonormalizes `v` against `basis`; `None` when nothing is left of it.
fn orthonormalize(mut v: PointN, basis: &[PointN]) -> Option<PointN> {
    let scale = norm(&v);
    // two passes keep the result orthogonal to rounding level
    for _ in 0..2 {
        for b in basis {
            let c = dot(&v, b);
            axpy(-c, b, &mut v);
        }
    }
    let len = norm(&v);
    if len <= 1e-12 * scale.max(1.0) {
        return None;
    }
    v.iter_mut().for_each(|x| *x /= len);
    Some(v)
}

fn determinant(mut a: Vec<PointN>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty column");
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            let pivot_row = a[col].clone();
            axpy(-f, &pivot_row, &mut a[row]);
        }
    }
    det
}

/// `x ↦ R(x - origin)` with `R` orthogonal (rows are the new axes).
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    pub origin: PointN,
    pub rows: Vec<PointN>,
    /// `det R < 0`.
    pub reflected: bool,
}

impl Isometry {
    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    pub fn apply(&self, x: &[f64]) -> PointN {
        let d = sub(x, &self.origin);
        self.rows.iter().map(|r| dot(r, &d)).collect()
    }

    pub fn inverse_apply(&self, y: &[f64]) -> PointN {
        let mut x = self.origin.clone();
        for (r, yi) in self.rows.iter().zip(y) {
            axpy(*yi, r, &mut x);
        }
        x
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedFrame {
    pub transform: Isometry,
    /// Coordinates of the image of `a`, with `a₁² + a₂² = r²`.
    pub a1: f64,
    pub a2: f64,
    pub r: f64,
}

const SPHERE_TOL: f64 = 1e-9;

/// Moves `p` to `0`, `m` to `r e₁` and `a` into the `e₁e₂` half-plane
/// `a₂ ≥ 0`.
pub fn normalize_frame(p: &[f64], m: &[f64], a: &[f64]) -> Result<NormalizedFrame> {
    let n = p.len();
    if n < 3 || m.len() != n || a.len() != n {
        return Err(Error::Precondition(String::from(
            "points must share a dimension n >= 3",
        )));
    }
    for x in p.iter().chain(m).chain(a) {
        check_finite(*x, "point coordinate")?;
    }
    let r = dist(m, p);
    if !(r > 0.0) {
        return Err(Error::Precondition(String::from("|m - p| must be positive")));
    }
    if (dist(a, p) - r).abs() > SPHERE_TOL * r {
        return Err(Error::Precondition(String::from("|a - p| must equal |m - p|")));
    }
    let e1: PointN = sub(m, p).iter().map(|x| x / r).collect();
    let mut rows = vec![e1];
    if let Some(e2) = orthonormalize(sub(a, p), &rows) {
        rows.push(e2);
    }
    for i in 0..n {
        if rows.len() == n {
            break;
        }
        if let Some(e) = orthonormalize(unit(n, i), &rows) {
            rows.push(e);
        }
    }
    let reflected = determinant(rows.clone()) < 0.0;
    let transform = Isometry {
        origin: p.to_vec(),
        rows,
        reflected,
    };
    let ap = transform.apply(a);
    Ok(NormalizedFrame {
        a1: ap[0],
        a2: ap[1].max(0.0),
        r,
        transform,
    })
}

/// The apex `b` over the unit frame for `a' = (a₁, a₂, 0)`.
pub fn construct_b(a1: f64, a2: f64) -> Result<[f64; 3]> {
    check_finite(a1, "a1")?;
    check_finite(a2, "a2")?;
    if (a1 * a1 + a2 * a2 - 1.0).abs() > SPHERE_TOL {
        return Err(Error::Precondition(String::from("a1^2 + a2^2 must be 1")));
    }
    if !(a2 > 0.0) {
        return Err(Error::Precondition(String::from("a2 must be positive")));
    }
    let t = (1.0 - a1) / (2.0 * a2);
    let radicand = 0.75 - t * t;
    if radicand < -1e-12 {
        return Err(Error::Precondition(String::from(
            "the angle between a' and e1 exceeds 2pi/3",
        )));
    }
    Ok([0.5, t, libm::sqrt(radicand.max(0.0))])
}

/// `b` for an arbitrary admissible triple, in the original coordinates.
pub fn construct_b_for(p: &[f64], m: &[f64], a: &[f64]) -> Result<PointN> {
    let f = normalize_frame(p, m, a)?;
    let b = construct_b(f.a1 / f.r, f.a2 / f.r)?;
    let mut local = vec![0.0; p.len()];
    for (i, bi) in b.iter().enumerate() {
        local[i] = f.r * bi;
    }
    Ok(f.transform.inverse_apply(&local))
}

/// Angle between `a` and `e₁`.
pub fn angle_to_e1(a: &[f64]) -> f64 {
    let len = norm(a);
    libm::acos((a[0] / len).clamp(-1.0, 1.0))
}

/// Rotates a normalized `a'` with angle `> 2π/3` to `e₁` clockwise by `π/3`
/// in the `e₁e₂` plane (the `e₁e₃` plane when `a₂ = 0`).
pub fn case2_reflect_to_case1(a: &[f64]) -> Result<PointN> {
    if a.len() < 3 {
        return Err(Error::Precondition(String::from("dimension must be >= 3")));
    }
    let len = norm(a);
    if !(len > 0.0) || !len.is_finite() {
        return Err(Error::Precondition(String::from("a' must be a nonzero finite point")));
    }
    if a[2..].iter().any(|x| x.abs() > SPHERE_TOL * len) || a[1] < -SPHERE_TOL * len {
        return Err(Error::Precondition(String::from(
            "a' must lie in the e1e2 half-plane a2 >= 0",
        )));
    }
    if !(angle_to_e1(a) > 2.0 * FRAC_PI_3) {
        return Err(Error::Precondition(String::from("angle(a', e1) must exceed 2pi/3")));
    }
    let plane = if a[1] > 0.0 { 1 } else { 2 };
    let (s, c) = libm::sincos(FRAC_PI_3);
    let mut b = a.to_vec();
    let (x, y) = (a[0], a[plane]);
    b[0] = c * x + s * y;
    b[plane] = -s * x + c * y;
    Ok(b)
}

/// Domain of a [`SpaceMap`].
#[derive(Debug, Clone, PartialEq)]
pub enum DomainN {
    Everywhere,
    Ball { center: PointN, radius: f64 },
}

impl DomainN {
    pub fn contains_ball(&self, center: &[f64], radius: f64) -> bool {
        match self {
            DomainN::Everywhere => true,
            DomainN::Ball { center: c, radius: r } => dist(center, c) + radius < *r,
        }
    }
}

/// Homeomorphism between open subsets of `ℝⁿ`.
pub trait SpaceMap: Sync {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64]) -> PointN;
    fn domain(&self) -> DomainN {
        DomainN::Everywhere
    }
    fn name(&self) -> String;

    /// [`SpaceMap::apply`] with a finiteness check.
    fn eval(&self, x: &[f64]) -> Result<PointN> {
        let y = self.apply(x);
        for v in &y {
            check_finite(*v, "map value")?;
        }
        Ok(y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityN {
    pub dim: usize,
}

impl SpaceMap for IdentityN {
    fn dim(&self) -> usize {
        self.dim
    }
    fn apply(&self, x: &[f64]) -> PointN {
        x.to_vec()
    }
    fn name(&self) -> String {
        alloc::format!("id{}", self.dim)
    }
}

/// `x ↦ diag(d) x` with nonzero entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonal {
    pub entries: Vec<f64>,
}

impl Diagonal {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::Precondition(String::from("diagonal maps need n >= 3")));
        }
        for d in &entries {
            if check_finite(*d, "diagonal entry")? == 0.0 {
                return Err(Error::Precondition(String::from("diagonal entries must be nonzero")));
            }
        }
        Ok(Self { entries })
    }

    /// Ratio of the extreme singular values, the exact dilatation.
    pub fn dilatation(&self) -> f64 {
        let abs = self.entries.iter().map(|d| d.abs());
        abs.clone().fold(0.0, f64::max) / abs.fold(f64::INFINITY, f64::min)
    }
}

impl SpaceMap for Diagonal {
    fn dim(&self) -> usize {
        self.entries.len()
    }
    fn apply(&self, x: &[f64]) -> PointN {
        x.iter().zip(&self.entries).map(|(x, d)| x * d).collect()
    }
    fn name(&self) -> String {
        let mut s = String::from("diag:");
        for (i, d) in self.entries.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{d}"));
        }
        s
    }
}

impl<M: SpaceMap + ?Sized> SpaceMap for &M {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn apply(&self, x: &[f64]) -> PointN {
        (**self).apply(x)
    }
    fn domain(&self) -> DomainN {
        (**self).domain()
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

impl<M: SpaceMap + ?Sized> SpaceMap for alloc::boxed::Box<M> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn apply(&self, x: &[f64]) -> PointN {
        (**self).apply(x)
    }
    fn domain(&self) -> DomainN {
        (**self).domain()
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

fn gaussian_vector<R: Rng>(rng: &mut R, n: usize) -> PointN {
    (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
}

/// Random orthonormal pair `(u, v)` from Gram–Schmidt on Gaussian vectors.
pub fn random_frame<R: Rng>(rng: &mut R, n: usize) -> [PointN; 2] {
    loop {
        let Some(u) = orthonormalize(gaussian_vector(rng, n), &[]) else {
            continue;
        };
        if let Some(v) = orthonormalize(gaussian_vector(rng, n), core::slice::from_ref(&u)) {
            return [u, v];
        }
    }
}

/// Vertices `c + s(cos θⱼ u + sin θⱼ v)`, `θⱼ = 2πj/3`.
pub fn equilateral_n(center: &[f64], circumradius: f64, frame: &[PointN; 2]) -> [PointN; 3] {
    core::array::from_fn(|j| {
        let (s, c) = libm::sincos(TAU * j as f64 / 3.0);
        let mut x = center.to_vec();
        axpy(circumradius * c, &frame[0], &mut x);
        axpy(circumradius * s, &frame[1], &mut x);
        x
    })
}

/// Longest over shortest side of a triangle in `ℝⁿ`.
pub fn skew_n(t: &[PointN; 3]) -> Result<f64> {
    let sides = [dist(&t[0], &t[1]), dist(&t[1], &t[2]), dist(&t[2], &t[0])];
    crate::geometry::skew_of_sides(sides)
}

/// `i`-th of `count` roughly uniform directions: the Fibonacci lattice on
/// `S²`, Gaussian directions in higher dimensions.
pub fn sphere_direction(n: usize, i: usize, count: usize, seed: u64) -> PointN {
    if n == 3 {
        let z = 1.0 - (2.0 * i as f64 + 1.0) / count as f64;
        let rho = libm::sqrt((1.0 - z * z).max(0.0));
        // golden angle
        let phi = i as f64 * PI * (3.0 - libm::sqrt(5.0));
        let (s, c) = libm::sincos(phi);
        vec![rho * c, rho * s, z]
    } else {
        let mut rng = stream_rng(seed, Stream::Frame, (1 << 40) + i as u64);
        loop {
            if let Some(d) = orthonormalize(gaussian_vector(&mut rng, n), &[]) {
                return d;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HighDimEstimate {
    pub sigma_hat: f64,
    pub h_hat: f64,
    /// `Ĥ` at each radius of the ladder.
    pub h_per_scale: Vec<f64>,
    pub triangles: usize,
    pub report: BoundReport,
}

/// Sampled `σ̂` (image skew of equilateral triangles near `center`) and `Ĥ`
/// (sphere distortion at `center`), with the check `Ĥ ≤ σ̂³(1 + tol)`.
///
/// Triangles have the circumradii of the ladder and centers in the ball of
/// radius `ladder[0]`; `Ĥ` is the largest ratio over the smaller half of the
/// ladder, with `circle_samples` sphere points per radius.
pub fn estimate_sigma_and_h<M: SpaceMap + ?Sized>(
    map: &M,
    center: &[f64],
    plan: &SamplingPlan,
    tol: f64,
) -> Result<HighDimEstimate> {
    plan.validate()?;
    let n = map.dim();
    if center.len() != n || n < 3 {
        return Err(Error::Precondition(String::from(
            "center dimension must match the map and be >= 3",
        )));
    }
    let big_r = plan.scale_ladder[0];
    if !map.domain().contains_ball(center, big_r) {
        return Err(Error::Precondition(String::from("sampling ball leaves the domain")));
    }
    let ladder = &plan.scale_ladder;
    let mut sigma_hat: f64 = 1.0;
    let mut triangles = 0;
    for i in 0..plan.triangle_count {
        let s = ladder[i % ladder.len()];
        let mut rng = stream_rng(plan.seed, Stream::Frame, i as u64);
        // uniform in the ball of radius (R - s)(1 - clip)
        let dir = loop {
            if let Some(d) = orthonormalize(gaussian_vector(&mut rng, n), &[]) {
                break d;
            }
        };
        let rad = (big_r - s) * (1.0 - CLIP) * libm::pow(rng.random::<f64>(), 1.0 / n as f64);
        let mut c = center.to_vec();
        axpy(rad, &dir, &mut c);
        for _ in 0..plan.orientation_count {
            let frame = random_frame(&mut rng, n);
            let t = equilateral_n(&c, s, &frame);
            let image = [map.eval(&t[0])?, map.eval(&t[1])?, map.eval(&t[2])?];
            let sk = skew_n(&image).map_err(|_| Error::NonInjective("triangle image is degenerate"))?;
            sigma_hat = sigma_hat.max(sk);
            triangles += 1;
        }
    }
    let fc = map.eval(center)?;
    let mut h_per_scale = Vec::with_capacity(ladder.len());
    for (k, &r) in ladder.iter().enumerate() {
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for i in 0..plan.circle_samples {
            let d = sphere_direction(n, i, plan.circle_samples, plan.seed ^ k as u64);
            let mut w = center.to_vec();
            axpy(r, &d, &mut w);
            let len = dist(&map.eval(&w)?, &fc);
            lo = lo.min(len);
            hi = hi.max(len);
        }
        if !(lo > 0.0) {
            return Err(Error::NonInjective("sphere point maps onto the center"));
        }
        h_per_scale.push(hi / lo);
    }
    let h_hat = h_per_scale[ladder.len() / 2..].iter().copied().fold(1.0, f64::max);
    let mut report = BoundReport::new(alloc::format!("sigma^3 bound, {}", map.name()));
    let cube = sigma_hat * sigma_hat * sigma_hat;
    report.push(BoundEntry::compare(
        "H_hat <= sigma_hat^3 (1 + tol)",
        BoundKind::NonStrict,
        h_hat,
        cube * (1.0 + tol),
    ));
    Ok(HighDimEstimate {
        sigma_hat,
        h_hat,
        h_per_scale,
        triangles,
        report,
    })
}
