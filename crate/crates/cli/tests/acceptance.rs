// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::f64::consts::{FRAC_PI_3, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qcskew::par;
use qcskew_core::bound::BoundKind;
use qcskew_core::constants::{constant_chain, verify_static_geometry};
use qcskew_core::geometry::geo_lemma_angle;
use qcskew_core::highdim::{construct_b, dist, Diagonal, IdentityN};
use qcskew_core::lattice::{build_tiling, check_pq, verify_chain_inequality};
use qcskew_core::linear::{k_of_sigma, linear_skew, mu_from_skew, oracle_max_ratio};
use qcskew_core::map::{make_affine, make_radial_stretch, Identity, Precomposed, Square};
use qcskew_core::sampling::{stream_rng, Stream};
use qcskew_core::skew::{estimate_h, estimate_kf};
use qcskew_core::{Disk, PlanarMap, Point2, SamplingPlan};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn mu_grid() -> impl Iterator<Item = f64> {
    (1..=19).map(|i| i as f64 * 0.05)
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1() -> Outcome {
    let k1 = k_of_sigma(1.0).map_err(|e| e.to_string())?;
    let mut prev = k1;
    let mut increasing = true;
    for i in 1..1000 {
        let k = k_of_sigma(1.0 + 9.0 * i as f64 / 999.0).map_err(|e| e.to_string())?;
        increasing &= k > prev;
        prev = k;
    }
    ensure(
        (k1 - 1.0).abs() <= 1e-12 && increasing,
        format!("K(1) = {k1}, increasing on 1000 points: {increasing}"),
    )
}

fn c2() -> Outcome {
    let mut worst: f64 = 0.0;
    for mu in mu_grid() {
        let r = oracle_max_ratio(mu, 1_000_000).map_err(|e| e.to_string())?;
        worst = worst.max(rel(r, linear_skew(mu).unwrap()));
    }
    ensure(worst <= 1e-6, format!("worst relative delta {worst:.3e}"))
}

fn c3() -> Outcome {
    let (mut w1, mut w2): (f64, f64) = (0.0, 0.0);
    for mu in mu_grid() {
        let t = linear_skew(mu).unwrap();
        w1 = w1.max((mu_from_skew(t).unwrap() - mu).abs());
        w2 = w2.max((k_of_sigma(t).unwrap() - (1.0 + mu) / (1.0 - mu)).abs());
    }
    ensure(
        w1 <= 1e-9 && w2 <= 1e-9,
        format!("mu roundtrip {w1:.1e}, K identity {w2:.1e}"),
    )
}

fn c4() -> Outcome {
    let map = make_affine(0.5).unwrap();
    let plan = SamplingPlan::default();
    let h = estimate_h(&map, Point2::new(0.0, 0.0), &plan)
        .map_err(|e| e.to_string())?
        .estimate;
    let disk = Disk::new(Point2::new(0.0, 0.0), 1.0).unwrap();
    let s = par::skew_sup(&map, disk, &plan).map_err(|e| e.to_string())?.estimate;
    let tau = linear_skew(0.5).unwrap();
    ensure(
        rel(h, 3.0) <= 0.01 && rel(s, tau) <= 0.02,
        format!("H = {h:.6} (3), Skew = {s:.6} ({tau:.6})"),
    )
}

fn c5() -> Outcome {
    let map = make_radial_stretch(2.0).unwrap();
    let h = estimate_h(&map, Point2::new(0.0, 0.0), &SamplingPlan::default())
        .map_err(|e| e.to_string())?
        .estimate;
    ensure(rel(h, 2.0) <= 0.02, format!("H(0) = {h:.6}, expected 2"))
}

fn c6() -> Outcome {
    for k in 0..=6 {
        let t = build_tiling(k).map_err(|e| e.to_string())?;
        if t.triangles().len() != 1 << (2 * k) {
            return Err(format!("k = {k}: {} triangles", t.triangles().len()));
        }
    }
    let r = check_pq().map_err(|e| e.to_string())?;
    let bad: Vec<_> = r.failures().map(|e| e.name.clone()).collect();
    ensure(
        bad.is_empty(),
        format!("4^k for k <= 6, {} p/q assertions, failing {bad:?}", r.entries.len()),
    )
}

fn c7() -> Outcome {
    let maps: Vec<Box<dyn PlanarMap + Send>> = vec![
        Box::new(Identity),
        Box::new(make_affine(0.25).unwrap()),
        Box::new(make_affine(0.5).unwrap()),
        Box::new(Precomposed::new(Square, Point2::new(1.0, 0.0), 1.0).unwrap()),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for m in &maps {
        let c = verify_chain_inequality(m, 3, None, 0.01, 1000, 1).map_err(|e| e.to_string())?;
        ok &= c.report.passed() && c.pairs.len() == 1000;
        parts.push(format!("{} sigma {:.4}", m.name(), c.sigma_measured));
    }
    ensure(ok, parts.join(", "))
}

fn c8() -> Outcome {
    let big = constant_chain(1.0, 1 << 18).map_err(|e| e.to_string())?;
    let want = 81f64.ln() + 36.0 * 2f64.ln();
    let one = constant_chain(1.0, 1).map_err(|e| e.to_string())?;
    ensure(
        rel(big.log_h, want) <= 1e-9 && big.orders_agree() && rel(one.h(), 81.0) <= 1e-12,
        format!(
            "H = {}, orders agree {}, H(1, 1) = {}",
            big.render_h().unwrap_or_default(),
            big.orders_agree(),
            one.h()
        ),
    )
}

fn c9() -> Outcome {
    let r = verify_static_geometry().map_err(|e| e.to_string())?;
    let strict: Vec<_> = r.entries.iter().filter(|e| e.kind != BoundKind::Identity).collect();
    let worst = strict.iter().map(|e| e.margin).fold(f64::INFINITY, f64::min);
    ensure(
        r.passed() && strict.iter().all(|e| e.margin > 0.0),
        format!("{} inequalities, smallest margin {worst:.3e}", strict.len()),
    )
}

fn c10() -> Outcome {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..100_000u64 {
        let mut rng = stream_rng(1, Stream::Pairs, i);
        let r = 0.125 * rng.random::<f64>().sqrt();
        let z = Point2::from_polar(r, rng.random_range(0.0..2.0 * PI));
        let tp = FRAC_PI_3 + rng.random_range(-0.125..=0.125);
        let tm = -FRAC_PI_3 + rng.random_range(-0.125..=0.125);
        let a = geo_lemma_angle(z, tp, tm).map_err(|e| e.to_string())?;
        lo = lo.min(a);
        hi = hi.max(a);
    }
    ensure(lo > FRAC_PI_3 && hi < PI, format!("angles in [{lo:.4}, {hi:.4}]"))
}

fn c11() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..10_000u64 {
        let th = stream_rng(1, Stream::Frame, i).random_range(1e-9..=2.0 * FRAC_PI_3);
        let (a1, a2) = (th.cos(), th.sin());
        let b = construct_b(a1, a2).map_err(|e| e.to_string())?;
        for q in [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [a1, a2, 0.0]] {
            worst = worst.max((dist(&b, &q) - 1.0).abs());
        }
    }
    let plan = SamplingPlan::default();
    let id = qcskew_core::highdim::estimate_sigma_and_h(&IdentityN { dim: 3 }, &[0.0; 3], &plan, 0.02)
        .map_err(|e| e.to_string())?;
    let diag = Diagonal::new(vec![1.0, 1.0, 0.5]).unwrap();
    let dg = qcskew_core::highdim::estimate_sigma_and_h(&diag, &[0.0; 3], &plan, 0.02).map_err(|e| e.to_string())?;
    ensure(
        worst <= 1e-12 && id.report.passed() && dg.report.passed(),
        format!(
            "construct_b residual {worst:.1e}; id3 H {:.4} <= {:.4}; diag H {:.4} <= {:.4}",
            id.h_hat,
            id.sigma_hat.powi(3) * 1.02,
            dg.h_hat,
            dg.sigma_hat.powi(3) * 1.02
        ),
    )
}

fn c12() -> Outcome {
    let plan = SamplingPlan::default();
    let disk = 4.0 / PI;
    let mut worst: f64 = 0.0;
    for z in [Point2::new(0.0, 0.0), Point2::new(0.3, -0.7), Point2::new(-2.0, 5.0)] {
        let k = estimate_kf(&Identity, z, &plan).map_err(|e| e.to_string())?.estimate;
        worst = worst.max(rel(k, disk));
    }
    let a = estimate_kf(&make_affine(0.5).unwrap(), Point2::new(0.0, 0.0), &plan)
        .map_err(|e| e.to_string())?
        .estimate;
    let want = 4.0 * 1.5 / (PI * 0.5);
    ensure(
        worst <= 0.005 && rel(a, want) <= 0.01,
        format!("identity worst rel {worst:.2e}; affine {a:.5} ({want:.5})"),
    )
}

fn c13() -> Outcome {
    let fast = ["--samples", "500", "--orientations", "8", "--circle-samples", "512"];
    let dir = std::env::temp_dir().join(format!("qcskew-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let grid = dir.join("sq.json");
    let grid = grid.to_str().unwrap();
    let grid_spec = format!("grid:{grid}");
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "sample-grid",
            "--map",
            "square",
            "--domain",
            "0.5,-0.5,1.5,0.5",
            "--to",
            grid,
        ],
        vec!["skew-scan", "--map", "affine:0.5"],
        vec!["skew-scan", "--map", &grid_spec, "--region", "disk:1,0,0.4"],
        vec!["skew-scan", "--map", "square", "--at", "1,0.5"],
        vec!["dilatation", "--map", "radial:2", "--at", "0.3,0"],
        vec!["linear", "--sigma", "2", "--oracle-grid", "10000"],
        vec![
            "lattice",
            "--k",
            "3",
            "--map",
            "square",
            "--patch",
            "1,0,1",
            "--check-pq",
        ],
        vec!["constants", "--verify-geometry"],
        vec!["highdim", "--map", "diag:1,1,0.5"],
        vec!["highdim", "--construct-b", "--a", "0.5,0.8660254037844386"],
    ];
    for args in &commands {
        let run = || {
            let out = Command::new(env!("CARGO_BIN_EXE_qcskew"))
                .args(fast)
                .args(args)
                .output()
                .map_err(|e| e.to_string())?;
            let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: {e}"))?;
            v.as_object_mut().ok_or("report is not an object")?.remove("timings");
            serde_json::to_vec(&v).map_err(|e| e.to_string())
        };
        if run()? != run()? {
            return Err(format!("{args:?} differs between runs"));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} commands byte-identical without timings", commands.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("K_of_sigma endpoints and monotonicity", Duration::from_secs(1), c1),
        ("oracle equivalence", Duration::from_secs(30), c2),
        ("roundtrip identities", Duration::from_secs(1), c3),
        ("estimators vs closed form, affine 0.5", Duration::from_secs(60), c4),
        ("radial stretch K=2, H(0) = 2", Duration::from_secs(10), c5),
        ("lattice exactness", Duration::from_secs(30), c6),
        ("chain inequality at k=3", Duration::from_secs(60), c7),
        ("constant chain", Duration::from_secs(1), c8),
        ("static geometry", Duration::from_secs(1), c9),
        ("geo lemma, 1e5 samples", Duration::from_secs(5), c10),
        ("apex construction and sigma^3 bound", Duration::from_secs(60), c11),
        ("k_f estimator", Duration::from_secs(10), c12),
        ("CLI reproducibility", Duration::MAX, c13),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= *budget => (true, d),
            Ok(d) => (false, format!("{d}; over the time budget of {budget:?}")),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {} {name}: {detail} ({:.2} s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
