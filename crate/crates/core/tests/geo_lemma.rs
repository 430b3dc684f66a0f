// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{FRAC_PI_3, PI};

use qcskew_core::geometry::{geo_lemma_angle, rotate_about, Sense};
use qcskew_core::sampling::{stream_rng, Stream};
use qcskew_core::Point2;
use rand::Rng;

/// Admissible input number `i`: `|z| ≤ 1/8`, `|θ± ∓ π/3| ≤ 1/8`.
fn admissible(i: u64) -> (Point2, f64, f64) {
    let mut rng = stream_rng(42, Stream::Pairs, i);
    let r = 0.125 * rng.random::<f64>().sqrt();
    let z = Point2::from_polar(r, rng.random_range(0.0..2.0 * PI));
    let tp = FRAC_PI_3 + rng.random_range(-0.125..=0.125);
    let tm = -FRAC_PI_3 + rng.random_range(-0.125..=0.125);
    (z, tp, tm)
}

#[test]
fn angle_in_open_interval_for_100k_samples() {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..100_000 {
        let (z, tp, tm) = admissible(i);
        let a = geo_lemma_angle(z, tp, tm).unwrap();
        lo = lo.min(a);
        hi = hi.max(a);
    }
    assert!(lo > FRAC_PI_3 && hi < PI, "range [{lo}, {hi}]");
}

#[test]
fn extreme_corners_stay_inside() {
    for &r in &[0.0, 0.125] {
        for k in 0..64 {
            let z = Point2::from_polar(r, k as f64 * PI / 32.0);
            for &dp in &[-0.125, 0.125] {
                for &dm in &[-0.125, 0.125] {
                    let a = geo_lemma_angle(z, FRAC_PI_3 + dp, -FRAC_PI_3 + dm).unwrap();
                    assert!(a > FRAC_PI_3 && a < PI);
                }
            }
        }
    }
}

#[test]
fn central_value() {
    let a = geo_lemma_angle(Point2::new(0.0, 0.0), FRAC_PI_3, -FRAC_PI_3).unwrap();
    assert!((a - 2.0 * FRAC_PI_3).abs() < 1e-15);
}

#[test]
fn rotation_keeps_distance() {
    for i in 0..10_000 {
        let mut rng = stream_rng(3, Stream::Size, i);
        let x = Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let z = Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        for s in [Sense::Ccw, Sense::Cw] {
            // z turned about the center x
            let y = rotate_about(x, z, s);
            assert!(((y - x).norm() - (z - x).norm()).abs() < 1e-12);
            assert!(((y - z).norm() - (z - x).norm()).abs() < 1e-12);
        }
    }
}
