// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic sampling.
//!
//! Every random quantity is drawn from a ChaCha stream keyed by
//! `(seed, purpose, index)`, so sample `i` does not depend on how many samples
//! are requested. Growing a count therefore only ever adds samples, which makes
//! sampled suprema monotone in the counts.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Disk, Point2};

/// Shared configuration of all sampled estimators.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SamplingPlan {
    pub seed: u64,
    /// Triangle centers per estimate.
    pub triangle_count: usize,
    /// Orientations tried for each triangle center.
    pub orientation_count: usize,
    /// Strictly decreasing positive radii standing in for `r → 0`.
    pub scale_ladder: Vec<f64>,
    /// Points per sampled circle.
    pub circle_samples: usize,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        Self {
            seed: 1,
            triangle_count: 10_000,
            orientation_count: 64,
            scale_ladder: vec![0.1, 0.05, 0.025, 0.0125, 0.00625],
            circle_samples: 4096,
        }
    }
}

impl SamplingPlan {
    pub fn validate(&self) -> Result<()> {
        if self.triangle_count == 0 {
            return Err(Error::InvalidPlan("triangle_count must be >= 1"));
        }
        if self.orientation_count == 0 {
            return Err(Error::InvalidPlan("orientation_count must be >= 1"));
        }
        if self.circle_samples == 0 {
            return Err(Error::InvalidPlan("circle_samples must be >= 1"));
        }
        if self.scale_ladder.is_empty() {
            return Err(Error::InvalidPlan("scale_ladder is empty"));
        }
        if self.scale_ladder.iter().any(|r| !(*r > 0.0) || !r.is_finite()) {
            return Err(Error::InvalidPlan("scale_ladder entries must be finite and positive"));
        }
        if self.scale_ladder.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidPlan("scale_ladder must be strictly decreasing"));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_counts(mut self, triangles: usize, orientations: usize) -> Self {
        self.triangle_count = triangles;
        self.orientation_count = orientations;
        self
    }

    pub fn with_ladder(mut self, ladder: Vec<f64>) -> Self {
        self.scale_ladder = ladder;
        self
    }

    pub fn with_circle_samples(mut self, n: usize) -> Self {
        self.circle_samples = n;
        self
    }
}

/// Purpose tags separating the independent random streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    CenterShift = 0x0c3e_0001,
    Orientation = 0x0c3e_0002,
    Size = 0x0c3e_0003,
    Frame = 0x0c3e_0004,
    Pairs = 0x0c3e_0005,
}

/// Generator for sample `index` of the stream `purpose`.
pub fn stream_rng(seed: u64, purpose: Stream, index: u64) -> ChaCha8Rng {
    let key = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (purpose as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    rng.set_stream(index);
    rng
}

// 1/g and 1/g² for the plastic number g, the additive R2 sequence
const R2_A1: f64 = 0.754_877_666_246_692_7;
const R2_A2: f64 = 0.569_840_290_998_053_2;

/// Seeded two-dimensional low-discrepancy sequence in `[0, 1)²`
/// (the R2 sequence with a random Cranley–Patterson shift).
#[derive(Debug, Clone, Copy)]
pub struct LowDiscrepancy {
    shift: [f64; 2],
}

impl LowDiscrepancy {
    pub fn new(seed: u64) -> Self {
        let mut rng = stream_rng(seed, Stream::CenterShift, 0);
        Self {
            shift: [rng.random::<f64>(), rng.random::<f64>()],
        }
    }

    pub fn point(&self, index: u64) -> [f64; 2] {
        let n = index as f64 + 1.0;
        [frac(self.shift[0] + n * R2_A1), frac(self.shift[1] + n * R2_A2)]
    }

    /// Area-uniform point of `disk` for sample `index`.
    pub fn in_disk(&self, disk: &Disk, index: u64) -> Point2 {
        let [u, v] = self.point(index);
        disk.center + Point2::from_polar(disk.radius * libm::sqrt(u), TAU * v)
    }
}

fn frac(x: f64) -> f64 {
    x - libm::floor(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_plan_is_valid() {
        SamplingPlan::default().validate().unwrap();
    }

    #[test]
    fn invalid_plans() {
        let p = SamplingPlan::default();
        assert!(p.clone().with_counts(0, 1).validate().is_err());
        assert!(p.clone().with_counts(1, 0).validate().is_err());
        assert!(p.clone().with_ladder(vec![]).validate().is_err());
        assert!(p.clone().with_ladder(vec![0.1, 0.2]).validate().is_err());
        assert!(p.clone().with_ladder(vec![0.1, 0.1]).validate().is_err());
        assert!(p.clone().with_ladder(vec![0.1, -0.2]).validate().is_err());
        assert!(p.with_circle_samples(0).validate().is_err());
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: f64 = stream_rng(7, Stream::Orientation, 3).random();
        let b: f64 = stream_rng(7, Stream::Orientation, 3).random();
        let c: f64 = stream_rng(7, Stream::Orientation, 4).random();
        let d: f64 = stream_rng(7, Stream::Size, 3).random();
        let e: f64 = stream_rng(8, Stream::Orientation, 3).random();
        assert_eq!(a, b);
        assert!(a != c && a != d && a != e);
    }

    #[test]
    fn low_discrepancy_covers_the_square() {
        let ld = LowDiscrepancy::new(1);
        let mut bins = [0usize; 16];
        for i in 0..1600 {
            let [u, v] = ld.point(i);
            assert!((0.0..1.0).contains(&u) && (0.0..1.0).contains(&v));
            bins[(u * 4.0) as usize * 4 + (v * 4.0) as usize] += 1;
        }
        assert!(bins.iter().all(|&b| (90..=110).contains(&b)), "{bins:?}");
    }

    #[test]
    fn disk_points_stay_inside() {
        let ld = LowDiscrepancy::new(3);
        let d = Disk::new(Point2::new(1.0, -2.0), 0.5).unwrap();
        assert!((0..1000).all(|i| d.contains(ld.in_disk(&d, i))));
    }
}
