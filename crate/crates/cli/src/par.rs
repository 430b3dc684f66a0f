// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Parallel drivers with deterministic reduction.
//!
//! Work is split into the core crate's independent cells, evaluated on the
//! rayon pool and reduced in cell order, so results do not depend on the
//! number of threads.

use std::f64::consts::TAU;

use qcskew_core::linear::{refine_around, side_ratio, OracleMax};
use qcskew_core::skew::SkewSampling;
use qcskew_core::{Disk, DistortionReport, PlanarMap, Point2, Result, SamplingPlan};
use rayon::prelude::*;

/// Builds a pool with `threads` workers (all cores when `None`).
pub fn thread_pool(threads: Option<usize>) -> anyhow::Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        anyhow::ensure!(n > 0, "--threads must be at least 1");
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

pub fn run_sampling<M: PlanarMap + ?Sized>(sampling: &SkewSampling, map: &M) -> Result<DistortionReport> {
    let cells: Vec<_> = (0..sampling.len())
        .into_par_iter()
        .map(|cell| sampling.eval_cell(map, cell))
        .collect();
    sampling.reduce(cells)
}

pub fn skew_sup<M: PlanarMap + ?Sized>(map: &M, region: Disk, plan: &SamplingPlan) -> Result<DistortionReport> {
    run_sampling(&SkewSampling::for_region(&map.domain(), region, plan)?, map)
}

pub fn skew_at<M: PlanarMap + ?Sized>(map: &M, z: Point2, plan: &SamplingPlan) -> Result<DistortionReport> {
    run_sampling(&SkewSampling::for_point(&map.domain(), z, plan)?, map)
}

const ORACLE_CHUNK: usize = 1 << 14;

/// Parallel grid pass of the linear-map oracle; same result as
/// `qcskew_core::linear::oracle_search`.
pub fn oracle_search(mu: f64, grid: usize) -> Result<OracleMax> {
    // validates mu and grid
    qcskew_core::linear::oracle_search(mu, 3)?;
    if grid < 3 {
        return qcskew_core::linear::oracle_search(mu, grid);
    }
    let step = TAU / grid as f64;
    let chunks = grid.div_ceil(ORACLE_CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * ORACLE_CHUNK;
            let hi = (lo + ORACLE_CHUNK).min(grid);
            (lo..hi)
                .map(|j| (j, side_ratio(mu, j as f64 * step)))
                .fold((0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
    Ok(refine_around(mu, best.0 as f64 * step, best.1, step))
}
