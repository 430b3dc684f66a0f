// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Sampled distortion estimators.
//!
//! The limits in the definitions of `skew(f, z)`, `H(z)` and `k_f` are replaced
//! by extrema over the plan's finite scale ladder; every report carries the
//! per-scale values so callers can look at trends rather than a single number.
//!
//! Triangle-based estimators are organized as a list of independent *cells*
//! (one triangle center and size each, tried at `orientation_count`
//! orientations). [`SkewSampling`] exposes the cells so a caller may evaluate
//! them on several threads and hand the results back to
//! [`SkewSampling::reduce`], which consumes them in cell order. The
//! sequential entry points below do exactly that on one thread.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{equilateral_from, Disk, Point2, Triangle2};
use crate::map::{Domain, PlanarMap};
use crate::sampling::{stream_rng, LowDiscrepancy, SamplingPlan, Stream};

/// Relative margin keeping sampled triangles and circles strictly inside their
/// regions.
pub const CLIP: f64 = 1e-9;

/// Sample that realized an estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Witness {
    Triangle { triangle: Triangle2 },
    CirclePoint { center: Point2, radius: f64, point: Point2 },
}

/// Value of an estimator at one rung of the scale ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScaleValue {
    pub radius: f64,
    pub value: f64,
    pub samples: usize,
    /// Set when the sample at this scale looks untrustworthy (for `k_f`: the
    /// image polygon self-intersects).
    pub unreliable: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DistortionReport {
    pub estimate: f64,
    pub witness: Option<Witness>,
    pub per_scale: Vec<ScaleValue>,
    /// Total number of triangles or circle points evaluated.
    pub samples: usize,
    pub unreliable: bool,
}

/// Skew of the image triangle `(f(a), f(b), f(c))`.
pub fn image_skew<M: PlanarMap + ?Sized>(map: &M, t: &Triangle2) -> Result<f64> {
    let image = t.try_map(|z| map.eval(z))?;
    image.skew().map_err(|e| match e {
        Error::DegenerateTriangle => Error::NonInjective("image triangle has coincident vertices"),
        other => other,
    })
}

/// Best orientation found in one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellMax {
    pub skew: f64,
    pub triangle: Triangle2,
}

#[derive(Debug, Clone)]
enum Layout {
    /// Centers spread over `region`, circumradius cycling through the ladder.
    Region { region: Disk },
    /// For each ladder radius `r`, triangles inside `D(z, r)`.
    Point { z: Point2, radii: Vec<Option<f64>> },
}

/// The equilateral-triangle families behind [`estimate_skew_sup`] and
/// [`estimate_skew_at`].
#[derive(Debug, Clone)]
pub struct SkewSampling {
    plan: SamplingPlan,
    layout: Layout,
    centers: LowDiscrepancy,
}

impl SkewSampling {
    /// Family for `Skew(f)` over `region`, clipped to the map's domain.
    pub fn for_region(domain: &Domain, region: Disk, plan: &SamplingPlan) -> Result<Self> {
        plan.validate()?;
        let clearance = domain.clearance(region.center);
        if !(clearance > 0.0) {
            return Err(Error::OutOfDomain {
                re: region.center.re,
                im: region.center.im,
            });
        }
        let radius = region.radius.min(clearance) * (1.0 - CLIP);
        if !plan.scale_ladder.iter().any(|&s| s < radius) {
            return Err(Error::EmptySample);
        }
        Ok(Self {
            plan: plan.clone(),
            layout: Layout::Region {
                region: Disk {
                    center: region.center,
                    radius,
                },
            },
            centers: LowDiscrepancy::new(plan.seed),
        })
    }

    /// Family for `skew(f, z, r)` at each ladder radius; radii whose disk
    /// leaves the domain are dropped.
    pub fn for_point(domain: &Domain, z: Point2, plan: &SamplingPlan) -> Result<Self> {
        plan.validate()?;
        let clearance = domain.clearance(z);
        let radii: Vec<Option<f64>> = plan
            .scale_ladder
            .iter()
            .map(|&r| (r < clearance).then_some(r))
            .collect();
        if radii.iter().all(Option::is_none) {
            return Err(Error::EmptySample);
        }
        Ok(Self {
            plan: plan.clone(),
            layout: Layout::Point { z, radii },
            centers: LowDiscrepancy::new(plan.seed),
        })
    }

    pub fn len(&self) -> usize {
        match &self.layout {
            Layout::Region { .. } => self.plan.triangle_count,
            Layout::Point { radii, .. } => radii.len() * self.plan.triangle_count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn scale_of(&self, cell: usize) -> usize {
        match &self.layout {
            Layout::Region { .. } => cell % self.plan.scale_ladder.len(),
            Layout::Point { .. } => cell / self.plan.triangle_count,
        }
    }

    /// Center and circumradius of the triangles of `cell`, `None` when the
    /// cell's scale was clipped away.
    fn placement(&self, cell: usize) -> Option<(Point2, f64)> {
        match &self.layout {
            Layout::Region { region } => {
                let s = self.plan.scale_ladder[self.scale_of(cell)];
                let room = region.radius - s;
                if !(room > 0.0) {
                    return None;
                }
                let disk = Disk {
                    center: region.center,
                    radius: room,
                };
                Some((self.centers.in_disk(&disk, cell as u64), s))
            }
            Layout::Point { z, radii } => {
                let r = radii[self.scale_of(cell)]?;
                let i = (cell % self.plan.triangle_count) as u64;
                let mut rng = stream_rng(self.plan.seed, Stream::Size, i);
                // circumradius in (0, r), center keeps the triangle inside D(z, r)
                let s = r * (1.0 - rng.random::<f64>()) * (1.0 - CLIP);
                let disk = Disk {
                    center: *z,
                    radius: (r - s) * (1.0 - CLIP),
                };
                Some((self.centers.in_disk(&disk, i), s))
            }
        }
    }

    /// Orientation stream of a cell; depends only on the triangle index so that
    /// every scale of a point family sees the same orientations.
    fn orientations(&self, cell: usize) -> impl Iterator<Item = f64> {
        let i = match &self.layout {
            Layout::Region { .. } => cell,
            Layout::Point { .. } => cell % self.plan.triangle_count,
        };
        let mut rng = stream_rng(self.plan.seed, Stream::Orientation, i as u64);
        (0..self.plan.orientation_count).map(move |_| rng.random::<f64>() * (TAU / 3.0))
    }

    /// Evaluates one cell: the largest image skew over its orientations.
    pub fn eval_cell<M: PlanarMap + ?Sized>(&self, map: &M, cell: usize) -> Result<Option<CellMax>> {
        let Some((center, s)) = self.placement(cell) else {
            return Ok(None);
        };
        let mut best: Option<CellMax> = None;
        for theta in self.orientations(cell) {
            let t = equilateral_from(center, s, theta)?;
            let v = image_skew(map, &t)?;
            if best.is_none_or(|b| v > b.skew) {
                best = Some(CellMax { skew: v, triangle: t });
            }
        }
        Ok(best)
    }

    /// Folds cell results, given in cell order, into a report.
    pub fn reduce(&self, cells: impl IntoIterator<Item = Result<Option<CellMax>>>) -> Result<DistortionReport> {
        let ladder = &self.plan.scale_ladder;
        let mut per: Vec<Option<(CellMax, usize)>> = alloc::vec![None; ladder.len()];
        for (cell, res) in cells.into_iter().enumerate() {
            let Some(m) = res? else { continue };
            let slot = &mut per[self.scale_of(cell)];
            match slot {
                Some((best, n)) => {
                    *n += 1;
                    if m.skew > best.skew {
                        *best = m;
                    }
                }
                None => *slot = Some((m, 1)),
            }
        }
        let orientations = self.plan.orientation_count;
        let per_scale: Vec<ScaleValue> = per
            .iter()
            .zip(ladder)
            .filter_map(|(p, &r)| {
                p.map(|(m, n)| ScaleValue {
                    radius: r,
                    value: m.skew,
                    samples: n * orientations,
                    unreliable: false,
                })
            })
            .collect();
        let used: Vec<CellMax> = per.iter().filter_map(|p| p.map(|(m, _)| m)).collect();
        if used.is_empty() {
            return Err(Error::EmptySample);
        }
        // Skew(f) is a supremum; skew(f, z) is a liminf over r, proxied by the
        // smallest per-scale supremum. Ties keep the first scale.
        let pick = match self.layout {
            Layout::Region { .. } => used.iter().fold(used[0], |a, b| if b.skew > a.skew { *b } else { a }),
            Layout::Point { .. } => used.iter().fold(used[0], |a, b| if b.skew < a.skew { *b } else { a }),
        };
        Ok(DistortionReport {
            estimate: pick.skew,
            witness: Some(Witness::Triangle {
                triangle: pick.triangle,
            }),
            samples: per_scale.iter().map(|s| s.samples).sum(),
            per_scale,
            unreliable: false,
        })
    }

    pub fn run<M: PlanarMap + ?Sized>(&self, map: &M) -> Result<DistortionReport> {
        self.reduce((0..self.len()).map(|cell| self.eval_cell(map, cell)))
    }
}

/// `Skew(f)` over `region`: the largest image skew over the sampled
/// equilateral triangles contained in it.
pub fn estimate_skew_sup<M: PlanarMap + ?Sized>(
    map: &M,
    region: Disk,
    plan: &SamplingPlan,
) -> Result<DistortionReport> {
    SkewSampling::for_region(&map.domain(), region, plan)?.run(map)
}

/// `skew(f, z)`: per ladder radius `r` the sampled `skew(f, z, r)`, reported
/// as their minimum.
pub fn estimate_skew_at<M: PlanarMap + ?Sized>(map: &M, z: Point2, plan: &SamplingPlan) -> Result<DistortionReport> {
    SkewSampling::for_point(&map.domain(), z, plan)?.run(map)
}

/// `M(z, r) / m(z, r)` on a sampled circle.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CircleRatio {
    pub ratio: f64,
    pub max_distance: f64,
    pub min_distance: f64,
    pub argmax: Point2,
}

/// Max over `n` equally spaced points `w` of `C(z, r)` of `|f(z) - f(w)|`,
/// divided by the min over the same points.
pub fn circle_ratio<M: PlanarMap + ?Sized>(map: &M, z: Point2, r: f64, n: usize) -> Result<CircleRatio> {
    if n < 3 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as f64,
            expected: "n >= 3",
        });
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::OutOfRange {
            name: "r",
            value: r,
            expected: "finite and > 0",
        });
    }
    if !map.domain().contains_disk_strictly(&Disk { center: z, radius: r }) {
        return Err(Error::OutOfDomain { re: z.re, im: z.im });
    }
    let fz = map.eval(z)?;
    let mut hi = (f64::NEG_INFINITY, z);
    let mut lo = f64::INFINITY;
    for j in 0..n {
        let w = z + Point2::from_polar(r, TAU * j as f64 / n as f64);
        let d = (map.eval(w)? - fz).norm();
        if d > hi.0 {
            hi = (d, w);
        }
        lo = lo.min(d);
    }
    if !(lo > 0.0) {
        return Err(Error::NonInjective("circle point maps onto the image of its center"));
    }
    Ok(CircleRatio {
        ratio: hi.0 / lo,
        max_distance: hi.0,
        min_distance: lo,
        argmax: hi.1,
    })
}

/// `M(z, r) / m(z, r)` estimated from `n` circle points.
pub fn dilatation_ratio<M: PlanarMap + ?Sized>(map: &M, z: Point2, r: f64, n: usize) -> Result<f64> {
    circle_ratio(map, z, r, n).map(|c| c.ratio)
}

/// Ladder radii whose closed disk about `z` stays strictly inside the domain.
fn usable_radii(domain: &Domain, z: Point2, plan: &SamplingPlan) -> Result<Vec<f64>> {
    plan.validate()?;
    let clearance = domain.clearance(z);
    let radii: Vec<f64> = plan.scale_ladder.iter().copied().filter(|&r| r < clearance).collect();
    if radii.is_empty() {
        return Err(Error::EmptySample);
    }
    Ok(radii)
}

/// `H(z)`: the dilatation ratio at every ladder radius; the estimate is the
/// maximum over the smaller half of the ladder (the `limsup` proxy).
pub fn estimate_h<M: PlanarMap + ?Sized>(map: &M, z: Point2, plan: &SamplingPlan) -> Result<DistortionReport> {
    let radii = usable_radii(&map.domain(), z, plan)?;
    let n = plan.circle_samples;
    let mut per_scale = Vec::with_capacity(radii.len());
    let mut ratios = Vec::with_capacity(radii.len());
    for &r in &radii {
        let c = circle_ratio(map, z, r, n)?;
        per_scale.push(ScaleValue {
            radius: r,
            value: c.ratio,
            samples: n,
            unreliable: false,
        });
        ratios.push(c);
    }
    let tail = radii.len() / 2;
    let (k, best) = ratios
        .iter()
        .enumerate()
        .skip(tail)
        .fold(
            (tail, ratios[tail]),
            |acc, (k, c)| if c.ratio > acc.1.ratio { (k, *c) } else { acc },
        );
    Ok(DistortionReport {
        estimate: best.ratio,
        witness: Some(Witness::CirclePoint {
            center: z,
            radius: radii[k],
            point: best.argmax,
        }),
        samples: n * radii.len(),
        per_scale,
        unreliable: false,
    })
}

/// Shape of a sampled image curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageCurve {
    pub diameter: f64,
    pub area: f64,
    pub self_intersecting: bool,
}

/// Diameter (largest pairwise distance), enclosed area (shoelace) and
/// simplicity of a closed polygon.
pub fn polygon_shape(points: &[Point2]) -> ImageCurve {
    let n = points.len();
    let mut diameter: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            diameter = diameter.max((points[i] - points[j]).norm());
        }
    }
    let twice: f64 = (0..n)
        .map(|i| {
            let (a, b) = (points[i], points[(i + 1) % n]);
            a.re * b.im - a.im * b.re
        })
        .sum();
    ImageCurve {
        diameter,
        area: twice.abs() / 2.0,
        self_intersecting: self_intersects(points),
    }
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segments_cross(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool {
    if p1.re.max(p2.re) < q1.re.min(q2.re)
        || q1.re.max(q2.re) < p1.re.min(p2.re)
        || p1.im.max(p2.im) < q1.im.min(q2.im)
        || q1.im.max(q2.im) < p1.im.min(p2.im)
    {
        return false;
    }
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0) && d1 != 0.0 && d2 != 0.0 && d3 != 0.0 && d4 != 0.0
}

/// Proper crossings between non-adjacent edges of the closed polygon.
fn self_intersects(points: &[Point2]) -> bool {
    let n = points.len();
    if n < 4 {
        return false;
    }
    for i in 0..n {
        let (a, b) = (points[i], points[(i + 1) % n]);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_cross(a, b, points[j], points[(j + 1) % n]) {
                return true;
            }
        }
    }
    false
}

/// Planar `k_f`: per ladder radius, `diam(f(C(z, r)))² / |f(D(z, r))|` from
/// the image polygon of `circle_samples` circle points; the estimate is the
/// minimum over the ladder (the `liminf` proxy).
///
/// A self-intersecting image polygon marks its scale (and the report) as
/// unreliable without aborting.
pub fn estimate_kf<M: PlanarMap + ?Sized>(map: &M, z: Point2, plan: &SamplingPlan) -> Result<DistortionReport> {
    let radii = usable_radii(&map.domain(), z, plan)?;
    let n = plan.circle_samples;
    if n < 3 {
        return Err(Error::InvalidPlan("k_f needs at least 3 circle samples"));
    }
    let mut per_scale = Vec::with_capacity(radii.len());
    let mut image = Vec::with_capacity(n);
    for &r in &radii {
        image.clear();
        for j in 0..n {
            image.push(map.eval(z + Point2::from_polar(r, TAU * j as f64 / n as f64))?);
        }
        let shape = polygon_shape(&image);
        if !(shape.area > 0.0) {
            return Err(Error::NonInjective("image of a circle encloses no area"));
        }
        per_scale.push(ScaleValue {
            radius: r,
            value: shape.diameter * shape.diameter / shape.area,
            samples: n,
            unreliable: shape.self_intersecting,
        });
    }
    let best = per_scale
        .iter()
        .fold(per_scale[0], |a, b| if b.value < a.value { *b } else { a });
    Ok(DistortionReport {
        estimate: best.value,
        witness: None,
        samples: n * radii.len(),
        unreliable: per_scale.iter().any(|s| s.unreliable),
        per_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{make_affine, make_radial_stretch, Identity, Square};
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Point2 {
        Point2::new(re, im)
    }

    fn small_plan() -> SamplingPlan {
        SamplingPlan::default().with_counts(200, 16)
    }

    #[test]
    fn image_skew_examples() {
        let t = equilateral_from(c(0.3, -0.1), 0.7, 0.4).unwrap();
        assert!((image_skew(&Identity, &t).unwrap() - 1.0).abs() < 1e-12);
        let a = make_affine(0.5).unwrap();
        let v = image_skew(&a, &equilateral_from(c(0., 0.), 1.0, 0.0).unwrap()).unwrap();
        assert!((1.0..=2.6823).contains(&v));
    }

    #[test]
    fn image_skew_rejects_collapsed_images() {
        struct Collapse;
        impl PlanarMap for Collapse {
            fn apply(&self, z: Point2) -> Point2 {
                Point2::new(z.re * z.re, 0.0)
            }
            fn domain(&self) -> Domain {
                Domain::Plane
            }
            fn name(&self) -> alloc::string::String {
                "collapse".into()
            }
        }
        let t = Triangle2::new(c(-1., 0.), c(1., 0.), c(0., 2.));
        assert!(matches!(image_skew(&Collapse, &t), Err(Error::NonInjective(_))));
    }

    #[test]
    fn skew_sup_identity_is_one() {
        let r = estimate_skew_sup(&Identity, Disk::new(c(0., 0.), 1.0).unwrap(), &small_plan()).unwrap();
        assert!((r.estimate - 1.0).abs() < 1e-12);
        assert_eq!(r.per_scale.len(), 5);
        assert_eq!(r.samples, 200 * 16);
    }

    #[test]
    fn skew_sup_clipping() {
        let g = crate::map::GridMap::sample(&Identity, [0., 0., 1., 1.], 3, 3).unwrap();
        let plan = small_plan().with_ladder(alloc::vec![0.6, 0.2]);
        // clipped to radius 0.5, which drops the 0.6 scale
        let r = estimate_skew_sup(&g, Disk::new(c(0.5, 0.5), 10.0).unwrap(), &plan).unwrap();
        assert_eq!(r.per_scale.len(), 1);
        assert!(matches!(
            estimate_skew_sup(&g, Disk::new(c(0.5, 0.5), 0.1).unwrap(), &plan),
            Err(Error::EmptySample)
        ));
        assert!(estimate_skew_sup(&g, Disk::new(c(2.0, 0.5), 0.1).unwrap(), &plan).is_err());
    }

    #[test]
    fn skew_at_linear_is_scale_independent() {
        let a = make_affine(0.5).unwrap();
        let r = estimate_skew_at(&a, c(0., 0.), &small_plan()).unwrap();
        let first = r.per_scale[0].value;
        for s in &r.per_scale {
            assert!((s.value - first).abs() <= 1e-9 * first);
        }
        assert!(r.estimate <= crate::linear::linear_skew(0.5).unwrap() + 1e-12);
    }

    #[test]
    fn square_map_skew_decreases_toward_one() {
        let plan = small_plan().with_ladder(alloc::vec![0.4, 0.2, 0.1, 0.05, 0.025]);
        let r = estimate_skew_at(&Square, c(1., 0.), &plan).unwrap();
        let v: Vec<f64> = r.per_scale.iter().map(|s| s.value).collect();
        assert!(v.windows(2).all(|w| w[1] < w[0]), "{v:?}");
        assert!(r.estimate < 1.05);
    }

    #[test]
    fn dilatation_ratio_examples() {
        assert!((dilatation_ratio(&Identity, c(0.2, 0.1), 0.5, 64).unwrap() - 1.0).abs() < 1e-12);
        let a = make_affine(0.5).unwrap();
        assert!((dilatation_ratio(&a, c(0., 0.), 0.3, 4096).unwrap() - 3.0).abs() < 0.03);
        assert!(dilatation_ratio(&a, c(0., 0.), 0.3, 2).is_err());
        let radial = make_radial_stretch(2.0).unwrap();
        let ratios: Vec<f64> = [0.1, 0.01, 0.001]
            .iter()
            .map(|&r| dilatation_ratio(&radial, c(0.3, 0.), r, 1024).unwrap())
            .collect();
        assert!((ratios[2] - 2.0).abs() < (ratios[0] - 2.0).abs());
        assert!((ratios[2] - 2.0).abs() < 0.01);
    }

    #[test]
    fn radial_stretch_is_round_at_the_origin() {
        let radial = make_radial_stretch(2.0).unwrap();
        let h = estimate_h(&radial, c(0., 0.), &SamplingPlan::default()).unwrap();
        assert!((h.estimate - 1.0).abs() < 1e-12);
    }

    #[test]
    fn h_uses_the_small_half_of_the_ladder() {
        let plan = SamplingPlan::default().with_ladder(alloc::vec![0.2, 0.1, 0.05, 0.025]);
        let radial = make_radial_stretch(2.0).unwrap();
        let h = estimate_h(&radial, c(0.3, 0.), &plan).unwrap();
        let tail_max = h.per_scale[2..].iter().map(|s| s.value).fold(0.0, f64::max);
        assert_eq!(h.estimate, tail_max);
        assert_eq!(h.per_scale.len(), 4);
    }

    #[test]
    fn kf_examples() {
        let plan = SamplingPlan::default().with_ladder(alloc::vec![0.1, 0.01]);
        let id = estimate_kf(&Identity, c(0.5, 0.5), &plan).unwrap();
        assert!((id.estimate - 4.0 / PI).abs() < 0.005 * 4.0 / PI);
        assert!(!id.unreliable);
        let a = estimate_kf(&make_affine(0.5).unwrap(), c(0., 0.), &plan).unwrap();
        let expect = 4.0 * 1.5 / (PI * 0.5);
        assert!((a.estimate - expect).abs() < 0.01 * expect);
    }

    #[test]
    fn polygon_shape_square() {
        let sq = [c(0., 0.), c(1., 0.), c(1., 1.), c(0., 1.)];
        let s = polygon_shape(&sq);
        assert!((s.area - 1.0).abs() < 1e-15);
        assert!((s.diameter - 2f64.sqrt()).abs() < 1e-15);
        assert!(!s.self_intersecting);
        let bow = [c(0., 0.), c(1., 1.), c(1., 0.), c(0., 1.)];
        assert!(polygon_shape(&bow).self_intersecting);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = make_affine(0.3).unwrap();
        let d = Disk::new(c(0., 0.), 1.0).unwrap();
        let r1 = estimate_skew_sup(&a, d, &small_plan()).unwrap();
        let r2 = estimate_skew_sup(&a, d, &small_plan()).unwrap();
        assert_eq!(r1, r2);
        let r3 = estimate_skew_sup(&a, d, &small_plan().with_seed(2)).unwrap();
        assert_ne!(r1.witness, r3.witness);
    }
}
