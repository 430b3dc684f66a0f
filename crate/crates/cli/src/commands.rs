// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line surface and the subcommands behind it.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use qcskew_core::constants::{constant_chain, verify_static_geometry, DEFAULT_N};
use qcskew_core::highdim::{angle_to_e1, construct_b, dist, estimate_sigma_and_h, norm, SpaceMap};
use qcskew_core::lattice::{build_tiling, check_pq, locate_pq, verify_chain_inequality, verify_side_bound};
use qcskew_core::linear::{
    extremal_directions, k_of_sigma, linear_skew, maximizing_edge_angle, mu_from_skew, BeltramiParams,
};
use qcskew_core::map::{orientation_spot_check, GridMap, Precomposed};
use qcskew_core::skew::{estimate_h, estimate_kf};
use qcskew_core::{BoundEntry, BoundKind, BoundReport, Disk, PlanarMap, Point2, SamplingPlan};
use serde::Serialize;
use serde_json::json;

use crate::gridfile::save_grid_map_path;
use crate::mapspec::MapSpec;
use crate::par;
use crate::report::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "qcskew",
    version,
    about = "Triangle skew and metric dilatation of planar and spatial maps"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CommonArgs {
    /// Seed of every random stream.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Triangle centers per estimate.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub samples: usize,
    /// Orientations per triangle center.
    #[arg(long, global = true, default_value_t = 64)]
    pub orientations: usize,
    /// Strictly decreasing scale ladder, `r1,r2,...`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub scales: Option<Vec<f64>>,
    /// Points per sampled circle or sphere.
    #[arg(long, global = true, default_value_t = 4096)]
    pub circle_samples: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "QCSKEW_THREADS")]
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl CommonArgs {
    pub fn plan(&self) -> anyhow::Result<SamplingPlan> {
        let mut plan = SamplingPlan::default()
            .with_seed(self.seed)
            .with_counts(self.samples, self.orientations)
            .with_circle_samples(self.circle_samples);
        if let Some(s) = &self.scales {
            plan = plan.with_ladder(s.clone());
        }
        plan.validate()?;
        Ok(plan)
    }
}

fn parse_floats<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    v.try_into()
        .map_err(|v: Vec<f64>| format!("expected {N} comma-separated numbers, got {}", v.len()))
}

fn parse_point(s: &str) -> Result<[f64; 2], String> {
    parse_floats::<2>(s)
}

fn parse_vec(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}")))
        .collect()
}

/// `disk:x,y,r`.
fn parse_region(s: &str) -> Result<[f64; 3], String> {
    let body = s
        .strip_prefix("disk:")
        .ok_or_else(|| String::from("regions are written disk:x,y,r"))?;
    parse_floats::<3>(body)
}

fn parse_mapspec(s: &str) -> Result<MapSpec, String> {
    s.parse().map_err(|e: crate::mapspec::MapSpecError| e.to_string())
}

fn serialize_spec<S: serde::Serializer>(m: &MapSpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(m)
}

fn serialize_opt_spec<S: serde::Serializer>(m: &Option<MapSpec>, s: S) -> Result<S::Ok, S::Error> {
    match m {
        Some(m) => s.collect_str(m),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Sampled Skew(f) over a disk, or skew(f, z) at a point.
    SkewScan(SkewScanArgs),
    /// Metric dilatation H(z) and k_f at a point.
    Dilatation(DilatationArgs),
    /// Closed forms of the linear model z + mu conj(z).
    Linear(LinearArgs),
    /// Lattice tilings, chain inequality and side bound.
    Lattice(LatticeArgs),
    /// The explicit constant chain and static geometry.
    Constants(ConstantsArgs),
    /// The sigma^3 check in dimension 3 and the apex construction.
    Highdim(HighdimArgs),
    /// Samples a planar map onto a grid-map file.
    SampleGrid(SampleGridArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::SkewScan(_) => "skew-scan",
            Command::Dilatation(_) => "dilatation",
            Command::Linear(_) => "linear",
            Command::Lattice(_) => "lattice",
            Command::Constants(_) => "constants",
            Command::Highdim(_) => "highdim",
            Command::SampleGrid(_) => "sample-grid",
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SkewScanArgs {
    #[arg(long, value_parser = parse_mapspec)]
    #[serde(serialize_with = "serialize_spec")]
    pub map: MapSpec,
    /// Sampling region `disk:x,y,r`.
    #[arg(long, value_parser = parse_region, allow_hyphen_values = true, default_value = "disk:0,0,1", conflicts_with = "at")]
    pub region: [f64; 3],
    /// Estimate skew(f, z) at `x,y` instead of the supremum over the region.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub at: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DilatationArgs {
    #[arg(long, value_parser = parse_mapspec)]
    #[serde(serialize_with = "serialize_spec")]
    pub map: MapSpec,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
    pub at: [f64; 2],
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["mu", "sigma", "tau"])))]
pub struct LinearArgs {
    /// Beltrami coefficient in [0, 1).
    #[arg(long)]
    pub mu: Option<f64>,
    /// Skew bound sigma >= 1.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Skew tau >= 1 of a linear map.
    #[arg(long)]
    pub tau: Option<f64>,
    /// Grid size of the brute-force oracle.
    #[arg(long, default_value_t = 1_000_000)]
    pub oracle_grid: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LatticeArgs {
    #[arg(long)]
    pub k: u32,
    /// Map for the chain inequality and side bound.
    #[arg(long, value_parser = parse_mapspec)]
    #[serde(serialize_with = "serialize_opt_spec")]
    pub map: Option<MapSpec>,
    /// Precompose the map with `z -> offset + scale z`, given as `re,im,scale`.
    #[arg(long, value_parser = parse_floats::<3>, allow_hyphen_values = true)]
    pub patch: Option<[f64; 3]>,
    /// Exact checks of the distinguished pair p, q.
    #[arg(long)]
    pub check_pq: bool,
    /// Sampled edge pairs for the chain inequality.
    #[arg(long, default_value_t = 1000)]
    pub pairs: usize,
    /// Relative slack on the measured tile skew.
    #[arg(long, default_value_t = 0.01)]
    pub slack: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ConstantsArgs {
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    /// Number of tiles N.
    #[arg(long = "N", default_value_t = DEFAULT_N)]
    pub n: u64,
    /// Also check the static-geometry inequalities.
    #[arg(long)]
    pub verify_geometry: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct HighdimArgs {
    #[arg(long, value_parser = parse_mapspec, default_value = "id3")]
    #[serde(serialize_with = "serialize_spec")]
    pub map: MapSpec,
    /// Center of the estimate, `x,y,z` (default: origin).
    #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
    pub at: Option<Vec<f64>>,
    /// Relative slack of the check H <= sigma^3.
    #[arg(long, default_value_t = 0.02)]
    pub tol: f64,
    /// Only construct the apex b for `--a a1,a2`.
    #[arg(long, requires = "a")]
    pub construct_b: bool,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub a: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SampleGridArgs {
    #[arg(long, value_parser = parse_mapspec)]
    #[serde(serialize_with = "serialize_spec")]
    pub map: MapSpec,
    /// Grid bounds `x0,y0,x1,y1`.
    #[arg(long, value_parser = parse_floats::<4>, allow_hyphen_values = true)]
    pub domain: [f64; 4],
    #[arg(long, default_value_t = 33)]
    pub nx: usize,
    #[arg(long, default_value_t = 33)]
    pub ny: usize,
    /// Destination grid-map file.
    #[arg(long)]
    #[serde(skip)]
    pub to: PathBuf,
}

/// Runs a parsed command line and returns its report.
pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    let start = Instant::now();
    let config = json!({
        "common": cli.common,
        "command": cli.command,
    });
    let mut report = Report::new(cli.command.name(), config);
    let pool = par::thread_pool(cli.common.threads)?;
    pool.install(|| -> anyhow::Result<()> {
        match &cli.command {
            Command::SkewScan(a) => skew_scan(&cli.common, a, &mut report),
            Command::Dilatation(a) => dilatation(&cli.common, a, &mut report),
            Command::Linear(a) => linear(a, &mut report),
            Command::Lattice(a) => lattice(&cli.common, a, &mut report),
            Command::Constants(a) => constants(a, &mut report),
            Command::Highdim(a) => highdim(&cli.common, a, &mut report),
            Command::SampleGrid(a) => sample_grid(a, &mut report),
        }
    })?;
    report.timings.total_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

fn skew_scan(common: &CommonArgs, a: &SkewScanArgs, report: &mut Report) -> anyhow::Result<()> {
    let plan = common.plan()?;
    let map = a.map.planar()?;
    let d = match a.at {
        Some([x, y]) => par::skew_at(&map, Point2::new(x, y), &plan)?,
        None => {
            let [x, y, r] = a.region;
            par::skew_sup(&map, Disk::new(Point2::new(x, y), r)?, &plan)?
        }
    };
    report.result("mode", if a.at.is_some() { "point" } else { "region" })?;
    report.result("skew", &d)?;
    report.result("known_skew", map.metadata().skew)?;
    report.table("skew", &d.per_scale);
    Ok(())
}

fn dilatation(common: &CommonArgs, a: &DilatationArgs, report: &mut Report) -> anyhow::Result<()> {
    let plan = common.plan()?;
    let map = a.map.planar()?;
    let z = Point2::new(a.at[0], a.at[1]);
    let h = estimate_h(&map, z, &plan)?;
    let kf = estimate_kf(&map, z, &plan)?;
    report.result("h", &h)?;
    report.result("kf", &kf)?;
    report.result("known_dilatation", map.metadata().dilatation)?;
    report.table("h", &h.per_scale);
    report.table("kf", &kf.per_scale);
    if let MapSpec::Grid(_) = a.map {
        // advisory only
        let r = plan.scale_ladder[0];
        let pts: Vec<Point2> = (0..16)
            .map(|i| z + Point2::from_polar(r * 0.5, i as f64 * std::f64::consts::TAU / 16.0))
            .collect();
        report.result("orientation", orientation_spot_check(&map, &pts, r * 1e-3))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct LinearSummary {
    mu: f64,
    nu: f64,
    tau: f64,
    dilatation: f64,
    k_of_tau: f64,
    extremal: Option<qcskew_core::linear::ExtremalDirections>,
    maximizing_edge_angle: Option<f64>,
    oracle_ratio: f64,
    oracle_theta: f64,
    oracle_relative_delta: f64,
}

fn linear(a: &LinearArgs, report: &mut Report) -> anyhow::Result<()> {
    let (mu, input) = match (a.mu, a.sigma, a.tau) {
        (Some(mu), None, None) => (mu, "mu"),
        (None, Some(s), None) => (mu_from_skew(s)?, "sigma"),
        (None, None, Some(t)) => (mu_from_skew(t)?, "tau"),
        _ => bail!("give exactly one of --mu, --sigma, --tau"),
    };
    let p = BeltramiParams::new(mu)?;
    let tau = linear_skew(mu)?;
    let k_tau = k_of_sigma(tau)?;
    let oracle = par::oracle_search(mu, a.oracle_grid)?;
    let delta = (oracle.ratio - tau).abs() / tau;
    report.result("input", input)?;
    if let Some(s) = a.sigma {
        report.result("k_of_sigma", k_of_sigma(s)?)?;
    }
    report.result(
        "linear",
        LinearSummary {
            mu,
            nu: p.nu,
            tau,
            dilatation: p.dilatation(),
            k_of_tau: k_tau,
            extremal: (mu > 0.0).then(|| extremal_directions(mu)).transpose()?,
            maximizing_edge_angle: (mu > 0.0).then(|| maximizing_edge_angle(mu)).transpose()?,
            oracle_ratio: oracle.ratio,
            oracle_theta: oracle.theta,
            oracle_relative_delta: delta,
        },
    )?;
    let mut b = BoundReport::new("linear model");
    b.push(BoundEntry::compare(
        "oracle relative delta <= 1e-6",
        BoundKind::NonStrict,
        delta,
        1e-6,
    ));
    b.push(BoundEntry::identity(
        "mu_from_skew(tau) = mu",
        mu_from_skew(tau)?,
        mu,
        1e-9,
    ));
    b.push(BoundEntry::identity(
        "K(tau) = (1 + mu)/(1 - mu)",
        k_tau,
        p.dilatation(),
        1e-9 * p.dilatation(),
    ));
    report.check(b);
    Ok(())
}

#[derive(Serialize)]
struct ChainSummary {
    sigma_measured: f64,
    sigma_used: f64,
    pairs: usize,
    max_chain_length: u32,
    worst_margin: Option<f64>,
}

fn lattice(common: &CommonArgs, a: &LatticeArgs, report: &mut Report) -> anyhow::Result<()> {
    let tiling = build_tiling(a.k)?;
    let n = tiling.triangle_count();
    report.result("k", a.k)?;
    report.result("triangles", n)?;
    report.result("edges", tiling.edge_count())?;
    let mut counts = BoundReport::new("tiling");
    counts.push(BoundEntry::exact_identity(
        "triangles = 4^k",
        n as f64,
        4f64.powi(a.k as i32),
        n as u64 == 1u64 << (2 * a.k),
    ));
    report.check(counts);
    let pq = locate_pq(a.k)?;
    report.result("p", [pq.p.m, pq.p.n])?;
    report.result("q", [pq.q.m, pq.q.n])?;
    if a.check_pq {
        if a.k == 9 {
            report.check(check_pq()?);
        } else {
            let mut b = BoundReport::new(format!("p, q at k = {}", a.k));
            b.push(BoundEntry::exact_identity(
                "[p, q] is a tiling edge",
                1.0,
                1.0,
                tiling.edge_between(pq.p, pq.q).is_ok(),
            ));
            report.check(b);
        }
    }
    if let Some(spec) = &a.map {
        let base = spec.planar()?;
        let map: Box<dyn PlanarMap + Send> = match a.patch {
            Some([re, im, s]) => Box::new(Precomposed::new(base, Point2::new(re, im), s)?),
            None => base,
        };
        let chain = verify_chain_inequality(&map, a.k, None, a.slack, a.pairs, common.seed)?;
        report.result(
            "chain",
            ChainSummary {
                sigma_measured: chain.sigma_measured,
                sigma_used: chain.sigma_used,
                pairs: chain.pairs.len(),
                max_chain_length: chain.pairs.iter().map(|p| p.chain_length).max().unwrap_or(0),
                worst_margin: chain.report.worst_margin(),
            },
        )?;
        report.check(chain.report);
        report.check(verify_side_bound(&map, a.k)?);
    }
    Ok(())
}

#[derive(Serialize)]
struct ConstantsSummary {
    #[serde(flatten)]
    chain: qcskew_core::constants::ConstantChain,
    log10_h: f64,
    big_c: Option<String>,
    inv_alpha: Option<String>,
    h: Option<String>,
}

fn constants(a: &ConstantsArgs, report: &mut Report) -> anyhow::Result<()> {
    let chain = constant_chain(a.sigma, a.n)?;
    report.result(
        "constants",
        ConstantsSummary {
            log10_h: chain.log10_h(),
            big_c: chain.render_big_c(),
            inv_alpha: chain.render_inv_alpha(),
            h: chain.render_h(),
            chain: chain.clone(),
        },
    )?;
    report.check(chain.report());
    if a.verify_geometry {
        report.check(verify_static_geometry()?);
    }
    Ok(())
}

fn highdim(common: &CommonArgs, a: &HighdimArgs, report: &mut Report) -> anyhow::Result<()> {
    if a.construct_b {
        let [a1, a2] = a.a.context("--construct-b needs --a a1,a2")?;
        let b = construct_b(a1, a2)?;
        let ap = [a1, a2, 0.0];
        report.result("angle", angle_to_e1(&ap))?;
        report.result("b", b)?;
        let mut r = BoundReport::new("apex b");
        r.push(BoundEntry::identity("|b| = 1", norm(&b), 1.0, 1e-12));
        r.push(BoundEntry::identity(
            "|b - e1| = 1",
            dist(&b, &[1.0, 0.0, 0.0]),
            1.0,
            1e-12,
        ));
        r.push(BoundEntry::identity("|b - a'| = 1", dist(&b, &ap), 1.0, 1e-12));
        report.check(r);
        return Ok(());
    }
    let plan = common.plan()?;
    let map = a.map.space()?;
    let center = a.at.clone().unwrap_or_else(|| vec![0.0; map.dim()]);
    let e = estimate_sigma_and_h(&map, &center, &plan, a.tol)?;
    report.result("sigma_hat", e.sigma_hat)?;
    report.result("h_hat", e.h_hat)?;
    report.result("h_per_scale", &e.h_per_scale)?;
    report.result("triangles", e.triangles)?;
    report.check(e.report);
    Ok(())
}

fn sample_grid(a: &SampleGridArgs, report: &mut Report) -> anyhow::Result<()> {
    let map = a.map.planar()?;
    let g = GridMap::sample(&map, a.domain, a.nx, a.ny)?;
    save_grid_map_path(&g, &a.to).with_context(|| format!("writing {}", a.to.display()))?;
    report.result("nx", g.nx)?;
    report.result("ny", g.ny)?;
    report.result("domain", g.bounds)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Report {
        let cli = Cli::try_parse_from(std::iter::once("qcskew").chain(args.iter().copied())).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn parsers() {
        assert_eq!(parse_region("disk:0,0,1").unwrap(), [0.0, 0.0, 1.0]);
        assert!(parse_region("0,0,1").is_err());
        assert!(parse_point("1").is_err());
        assert!(parse_floats::<3>("1,2,x").is_err());
    }

    #[test]
    fn linear_requires_one_input() {
        assert!(Cli::try_parse_from(["qcskew", "linear"]).is_err());
        assert!(Cli::try_parse_from(["qcskew", "linear", "--mu", "0.5", "--tau", "2"]).is_err());
    }

    #[test]
    fn linear_sigma_one() {
        let r = run_args(&["linear", "--sigma", "1", "--oracle-grid", "1000"]);
        assert!(r.passed);
        assert_eq!(r.results["k_of_sigma"], 1.0);
    }

    #[test]
    fn lattice_k1() {
        let r = run_args(&["lattice", "--k", "1"]);
        assert_eq!(r.results["triangles"], 4);
        assert!(r.passed);
    }

    #[test]
    fn constants_minimal() {
        let r = run_args(&["constants", "--sigma", "1", "--N", "1"]);
        assert!(r.passed);
        assert_eq!(r.results["constants"]["h"], "8.100000000000e1");
    }

    #[test]
    fn config_echo_excludes_threads_and_out() {
        let r = run_args(&["--threads", "2", "constants"]);
        let c = &r.config["common"];
        assert!(c.get("threads").is_none() && c.get("out").is_none());
        assert_eq!(c["seed"], 1);
    }
}
