// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::{HashMap, HashSet, VecDeque};

use qcskew_core::lattice::{build_tiling, locate_pq, verify_chain_inequality, verify_side_bound, LatticeCoord};
use qcskew_core::map::{make_affine, make_radial_stretch, Identity, Square};
use qcskew_core::sampling::{stream_rng, Stream};
use qcskew_core::PlanarMap;
use rand::Rng;

type V = (i64, i64);

fn key(a: V, b: V) -> (V, V) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Tiles listed independently: every lattice triangle with vertices in `T`.
fn brute_tiles(k: u32) -> Vec<[V; 3]> {
    let s = 1i64 << k;
    let inside = |(m, n): V| m >= 0 && n >= 0 && m + n <= s;
    let mut out = Vec::new();
    for n in 0..=s {
        for m in 0..=s {
            let up = [(m, n), (m + 1, n), (m, n + 1)];
            let down = [(m + 1, n), (m, n + 1), (m + 1, n + 1)];
            for t in [up, down] {
                if t.iter().all(|&v| inside(v)) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force_up_to_six() {
    for k in 0..=6 {
        let t = build_tiling(k).unwrap();
        let brute = brute_tiles(k);
        assert_eq!(t.triangle_count(), 1 << (2 * k));
        assert_eq!(brute.len(), t.triangle_count());
        let mine: HashSet<[V; 3]> = t
            .triangle_corners()
            .iter()
            .map(|c| {
                let mut c = *c;
                c.sort();
                c
            })
            .collect();
        for mut b in brute {
            b.sort();
            assert!(mine.contains(&b), "k={k} missing {b:?}");
        }
        // every tile's edge ids really join its corners
        for (tri, corners) in t.triangles().iter().zip(t.triangle_corners()) {
            let want: HashSet<(V, V)> = [(0, 1), (1, 2), (2, 0)]
                .iter()
                .map(|&(i, j)| key(corners[i], corners[j]))
                .collect();
            let got: HashSet<(V, V)> = tri
                .iter()
                .map(|&e| {
                    let [a, b] = t.edge(e).endpoints();
                    key(a, b)
                })
                .collect();
            assert_eq!(want, got);
        }
    }
}

#[test]
fn boundary_edges_per_side() {
    for k in 0..=6 {
        let t = build_tiling(k).unwrap();
        let s = t.side_len();
        let mut sides = [0i64; 3];
        for id in 0..t.edge_count() as u32 {
            if !t.is_boundary(id) {
                assert_eq!(t.incident_triangles(id).count(), 2);
                continue;
            }
            let [a, b] = t.edge(id).endpoints();
            if a.1 == 0 && b.1 == 0 {
                sides[0] += 1;
            } else if a.0 == 0 && b.0 == 0 {
                sides[1] += 1;
            } else {
                assert_eq!((a.0 + a.1, b.0 + b.1), (s, s));
                sides[2] += 1;
            }
        }
        assert_eq!(sides, [s; 3], "k={k}");
    }
}

/// Edge distances from an adjacency built out of vertex pairs only.
fn oracle_distances(k: u32, source: (V, V)) -> HashMap<(V, V), u32> {
    let mut adj: HashMap<(V, V), Vec<(V, V)>> = HashMap::new();
    for c in brute_tiles(k) {
        let es = [key(c[0], c[1]), key(c[1], c[2]), key(c[2], c[0])];
        for &e in &es {
            for &f in &es {
                if e != f {
                    adj.entry(e).or_default().push(f);
                }
            }
        }
    }
    let mut dist = HashMap::from([(source, 0)]);
    let mut q = VecDeque::from([source]);
    while let Some(e) = q.pop_front() {
        let d = dist[&e];
        for &f in &adj[&e] {
            if let std::collections::hash_map::Entry::Vacant(v) = dist.entry(f) {
                v.insert(d + 1);
                q.push_back(f);
            }
        }
    }
    dist
}

#[test]
fn chain_distance_matches_independent_bfs() {
    for k in 1..=3 {
        let t = build_tiling(k).unwrap();
        for src in [0u32, (t.edge_count() / 2) as u32, t.edge_count() as u32 - 1] {
            let [a, b] = t.edge(src).endpoints();
            let oracle = oracle_distances(k, key(a, b));
            let mine = t.bfs(src);
            for id in 0..t.edge_count() as u32 {
                let [a, b] = t.edge(id).endpoints();
                assert_eq!(mine[id as usize], oracle[&key(a, b)]);
            }
        }
    }
}

#[test]
fn chain_distance_is_a_metric() {
    for k in 1..=4 {
        let t = build_tiling(k).unwrap();
        let n = t.edge_count() as u32;
        let mut rng = stream_rng(11, Stream::Pairs, u64::from(k));
        for _ in 0..200 {
            let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
            let ab = t.chain_distance(a, b).unwrap();
            assert_eq!(ab, t.chain_distance(b, a).unwrap());
            assert_eq!(ab == 0, a == b);
            assert!(ab <= t.chain_distance(a, c).unwrap() + t.chain_distance(c, b).unwrap());
        }
    }
}

#[test]
fn pq_is_exact_and_near_the_centroid() {
    let pq = locate_pq(9).unwrap();
    assert_eq!(pq.p, LatticeCoord::new(171, 170, 9));
    assert_eq!(pq.q, LatticeCoord::new(172, 170, 9));
    // |ξ - p|² = 3/1536² with ξ = (1 + ω)/3
    let d = qcskew_core::lattice::eisenstein_norm(512 - 3 * pq.p.m, 512 - 3 * pq.p.n);
    assert_eq!(d, 3);
    // no other lattice point is as close
    for n in 160..180 {
        for m in 160..180 {
            let e = qcskew_core::lattice::eisenstein_norm(512 - 3 * m, 512 - 3 * n);
            assert!(e > 3 || (m, n) == (171, 170) || e == 3 && n >= 170);
        }
    }
}

#[test]
fn every_zoo_map_passes_at_k3() {
    let maps: Vec<Box<dyn PlanarMap + Send>> = vec![
        Box::new(Identity),
        Box::new(make_affine(0.25).unwrap()),
        Box::new(make_affine(0.5).unwrap()),
        Box::new(make_radial_stretch(2.0).unwrap()),
        Box::new(Square),
    ];
    for m in &maps {
        let c = verify_chain_inequality(m, 3, None, 0.01, 1000, 1).unwrap();
        assert!(c.report.passed(), "{}: {:#?}", m.name(), c.report);
        assert!(verify_side_bound(m, 3).unwrap().passed(), "{}", m.name());
    }
}
