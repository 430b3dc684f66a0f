// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! The triangular lattice `Λ = ℤ ⊕ ωℤ` and its tilings of the unit triangle.
//!
//! The closed triangle `T` with vertices `0`, `1`, `ω` is tiled by the `4ᵏ`
//! triangles of `2⁻ᵏΛ`. Vertices are integer pairs `(m, n)` standing for
//! `(m + nω)/2ᵏ` with `m, n ≥ 0` and `m + n ≤ 2ᵏ`; squared lengths use the
//! norm form `|m + nω|² = m² + mn + n²`, so every statement about lattice
//! points is decided with integers.
//!
//! Edges come in three directions:
//!
//! ```text
//! East      (m, n) – (m+1, n)
//! North     (m, n) – (m, n+1)        (direction ω)
//! Diagonal  (m+1, n) – (m, n+1)      (direction ω - 1)
//! ```
//!
//! Two edges are adjacent in the chain graph when they are sides of a common
//! tile; the chain distance is the breadth-first distance in that graph, so
//! `n` steps bound the ratio of the image lengths by `σⁿ`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::bound::{BoundEntry, BoundKind, BoundReport};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Triangle2, OMEGA};
use crate::map::PlanarMap;
use crate::sampling::{stream_rng, Stream};

/// Largest `k` accepted by [`build_tiling`] unless a different cap is given.
pub const DEFAULT_MAX_K: u32 = 10;

/// `(m + nω) / 2ᵏ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LatticeCoord {
    pub m: i64,
    pub n: i64,
    pub k: u32,
}

impl LatticeCoord {
    pub const fn new(m: i64, n: i64, k: u32) -> Self {
        Self { m, n, k }
    }

    /// Same point written over the denominator `2^k` with `k ≥ self.k`.
    pub fn rescale(self, k: u32) -> Self {
        assert!(k >= self.k, "cannot coarsen a lattice coordinate");
        let f = 1i64 << (k - self.k);
        Self::new(self.m * f, self.n * f, k)
    }

    pub fn to_point(self) -> Point2 {
        let d = libm::ldexp(1.0, self.k as i32);
        (Point2::new(self.m as f64, 0.0) + OMEGA * self.n as f64) / d
    }

    /// Exact equality of the represented points.
    pub fn same_point(self, other: Self) -> bool {
        let k = self.k.max(other.k);
        let (a, b) = (self.rescale(k), other.rescale(k));
        a.m == b.m && a.n == b.n
    }

    /// `|self - other|²` as `(numerator, 4^k)`.
    pub fn dist_sq(self, other: Self) -> (i128, i128) {
        let k = self.k.max(other.k);
        let (a, b) = (self.rescale(k), other.rescale(k));
        (eisenstein_norm(a.m - b.m, a.n - b.n), 1i128 << (2 * k))
    }
}

/// `|m + nω|² = m² + mn + n²`.
pub fn eisenstein_norm(m: i64, n: i64) -> i128 {
    let (m, n) = (m as i128, n as i128);
    m * m + m * n + n * n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EdgeDir {
    East,
    North,
    Diagonal,
}

impl EdgeDir {
    const ALL: [EdgeDir; 3] = [EdgeDir::East, EdgeDir::North, EdgeDir::Diagonal];

    fn slot(self) -> usize {
        match self {
            EdgeDir::East => 0,
            EdgeDir::North => 1,
            EdgeDir::Diagonal => 2,
        }
    }
}

/// Edge of the tiling identified by its direction and base cell `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Edge {
    pub dir: EdgeDir,
    pub m: i64,
    pub n: i64,
}

impl Edge {
    pub fn endpoints(self) -> [(i64, i64); 2] {
        let Edge { dir, m, n } = self;
        match dir {
            EdgeDir::East => [(m, n), (m + 1, n)],
            EdgeDir::North => [(m, n), (m, n + 1)],
            EdgeDir::Diagonal => [(m + 1, n), (m, n + 1)],
        }
    }
}

/// Index of an edge inside a [`TilingK`].
pub type EdgeId = u32;

const NONE: u32 = u32::MAX;

/// The tiling of `T` by the `4ᵏ` triangles of `2⁻ᵏΛ` with its edge graph.
#[derive(Debug, Clone)]
pub struct TilingK {
    k: u32,
    side: i64,
    edges: Vec<Edge>,
    /// Edge ids of every tile.
    triangles: Vec<[EdgeId; 3]>,
    /// Lattice vertices of every tile.
    corners: Vec<[(i64, i64); 3]>,
    /// Tiles incident to each edge (`NONE` for the missing one on the boundary).
    incidence: Vec<[u32; 2]>,
    lookup: Vec<EdgeId>,
}

/// Enumerates the tiling at scale `2⁻ᵏ`, refusing `k > max_k`.
pub fn build_tiling_capped(k: u32, max_k: u32) -> Result<TilingK> {
    if k > max_k {
        return Err(Error::ScaleTooLarge { k, cap: max_k });
    }
    let s = 1i64 << k;
    let su = s as usize;
    let mut lookup = vec![NONE; 3 * su * su];
    let mut edges = Vec::with_capacity(3 * su * (su + 1) / 2);
    for dir in EdgeDir::ALL {
        for n in 0..s {
            for m in 0..s - n {
                lookup[dir.slot() * su * su + (n as usize) * su + m as usize] = edges.len() as u32;
                edges.push(Edge { dir, m, n });
            }
        }
    }
    let id = |dir: EdgeDir, m: i64, n: i64| lookup[dir.slot() * su * su + (n as usize) * su + m as usize];
    let mut triangles = Vec::with_capacity(su * su);
    let mut corners = Vec::with_capacity(su * su);
    let mut incidence = vec![[NONE; 2]; edges.len()];
    for n in 0..s {
        for m in 0..s - n {
            // upward tile with lower-left corner (m, n)
            let up = [
                id(EdgeDir::East, m, n),
                id(EdgeDir::North, m, n),
                id(EdgeDir::Diagonal, m, n),
            ];
            triangles.push(up);
            corners.push([(m, n), (m + 1, n), (m, n + 1)]);
            if m + n + 2 <= s {
                // downward tile sharing the diagonal (m+1, n) – (m, n+1)
                let down = [
                    id(EdgeDir::Diagonal, m, n),
                    id(EdgeDir::North, m + 1, n),
                    id(EdgeDir::East, m, n + 1),
                ];
                triangles.push(down);
                corners.push([(m + 1, n), (m, n + 1), (m + 1, n + 1)]);
            }
        }
    }
    for (t, tri) in triangles.iter().enumerate() {
        for &e in tri {
            let slot = &mut incidence[e as usize];
            if slot[0] == NONE {
                slot[0] = t as u32;
            } else {
                debug_assert_eq!(slot[1], NONE);
                slot[1] = t as u32;
            }
        }
    }
    Ok(TilingK {
        k,
        side: s,
        edges,
        triangles,
        corners,
        incidence,
        lookup,
    })
}

/// [`build_tiling_capped`] with [`DEFAULT_MAX_K`].
pub fn build_tiling(k: u32) -> Result<TilingK> {
    build_tiling_capped(k, DEFAULT_MAX_K)
}

impl TilingK {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// `2ᵏ`, the number of edges along each side of `T`.
    pub fn side_len(&self) -> i64 {
        self.side
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id as usize]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[EdgeId; 3]] {
        &self.triangles
    }

    pub fn triangle_corners(&self) -> &[[(i64, i64); 3]] {
        &self.corners
    }

    /// Tiles containing the edge (one on the boundary of `T`, two inside).
    pub fn incident_triangles(&self, id: EdgeId) -> impl Iterator<Item = usize> + '_ {
        self.incidence[id as usize]
            .iter()
            .filter(|&&t| t != NONE)
            .map(|&t| t as usize)
    }

    pub fn edge_id(&self, edge: Edge) -> Result<EdgeId> {
        let Edge { dir, m, n } = edge;
        if m < 0 || n < 0 || m + n >= self.side {
            return Err(Error::UnknownEdge);
        }
        let su = self.side as usize;
        Ok(self.lookup[dir.slot() * su * su + (n as usize) * su + m as usize])
    }

    /// Id of the edge joining two lattice vertices, if it is a tiling edge.
    pub fn edge_between(&self, a: LatticeCoord, b: LatticeCoord) -> Result<EdgeId> {
        if a.k > self.k || b.k > self.k {
            return Err(Error::UnknownEdge);
        }
        let (a, b) = (a.rescale(self.k), b.rescale(self.k));
        let (lo, hi) = if (a.n, a.m) <= (b.n, b.m) { (a, b) } else { (b, a) };
        let edge = match (hi.m - lo.m, hi.n - lo.n) {
            (1, 0) => Edge {
                dir: EdgeDir::East,
                m: lo.m,
                n: lo.n,
            },
            (0, 1) => Edge {
                dir: EdgeDir::North,
                m: lo.m,
                n: lo.n,
            },
            (-1, 1) => Edge {
                dir: EdgeDir::Diagonal,
                m: hi.m,
                n: lo.n,
            },
            _ => return Err(Error::UnknownEdge),
        };
        self.edge_id(edge)
    }

    /// Whether the edge lies on `∂T`.
    pub fn is_boundary(&self, id: EdgeId) -> bool {
        self.incidence[id as usize][1] == NONE
    }

    /// Edges adjacent to `id` in the chain graph.
    pub fn neighbors(&self, id: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incident_triangles(id)
            .flat_map(move |t| self.triangles[t].iter().copied())
            .filter(move |&e| e != id)
    }

    /// Chain distances from `source` to every edge.
    pub fn bfs(&self, source: EdgeId) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.edges.len()];
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(e) = queue.pop_front() {
            let d = dist[e as usize] + 1;
            for nb in self.neighbors(e) {
                if dist[nb as usize] == u32::MAX {
                    dist[nb as usize] = d;
                    queue.push_back(nb);
                }
            }
        }
        dist
    }

    /// Minimal chain length between two edges (0 iff they coincide).
    pub fn chain_distance(&self, e1: EdgeId, e2: EdgeId) -> Result<u32> {
        let n = self.edges.len() as u32;
        if e1 >= n || e2 >= n {
            return Err(Error::UnknownEdge);
        }
        if e1 == e2 {
            return Ok(0);
        }
        // bidirectional search would be faster; plain BFS is plenty for k ≤ 10
        let d = self.bfs(e1)[e2 as usize];
        debug_assert_ne!(d, u32::MAX, "chain graph is connected");
        Ok(d)
    }

    /// Point of the plane for lattice vertex `(m, n)` at this scale.
    pub fn vertex_point(&self, v: (i64, i64)) -> Point2 {
        LatticeCoord::new(v.0, v.1, self.k).to_point()
    }

    pub fn vertex_count(&self) -> usize {
        let s = self.side as usize;
        (s + 1) * (s + 2) / 2
    }

    fn vertex_index(&self, v: (i64, i64)) -> usize {
        v.1 as usize * (self.side as usize + 1) + v.0 as usize
    }

    /// Images of all lattice vertices, indexed by `vertex_index`.
    fn image_vertices<M: PlanarMap + ?Sized>(&self, map: &M) -> Result<Vec<Point2>> {
        let s = self.side as usize;
        let mut image = vec![Point2::new(f64::NAN, f64::NAN); (s + 1) * (s + 1)];
        for n in 0..=self.side {
            for m in 0..=self.side - n {
                image[self.vertex_index((m, n))] = map.eval(self.vertex_point((m, n)))?;
            }
        }
        Ok(image)
    }
}

/// Images of the tiling under a map: edge lengths and the largest tile skew.
#[derive(Debug, Clone)]
pub struct TilingImage {
    pub edge_lengths: Vec<f64>,
    /// Largest image skew over all tiles.
    pub sigma: f64,
    image: Vec<Point2>,
}

impl TilingImage {
    pub fn new<M: PlanarMap + ?Sized>(tiling: &TilingK, map: &M) -> Result<Self> {
        let image = tiling.image_vertices(map)?;
        let at = |v: (i64, i64)| image[tiling.vertex_index(v)];
        let mut edge_lengths = Vec::with_capacity(tiling.edge_count());
        for e in tiling.edges() {
            let [a, b] = e.endpoints();
            let len = (at(a) - at(b)).norm();
            if !(len > 0.0) {
                return Err(Error::NonInjective("tiling edge collapses under the map"));
            }
            edge_lengths.push(len);
        }
        let mut sigma: f64 = 1.0;
        for tri in tiling.triangles() {
            let sides = tri.map(|e| edge_lengths[e as usize]);
            sigma = sigma.max(crate::geometry::skew_of_sides(sides)?);
        }
        Ok(Self {
            edge_lengths,
            sigma,
            image,
        })
    }

    pub fn point(&self, tiling: &TilingK, v: (i64, i64)) -> Point2 {
        self.image[tiling.vertex_index(v)]
    }
}

/// The distinguished vertex `p` next to the centroid of `T` and `q = p + 2⁻ᵏ`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PqPair {
    pub p: LatticeCoord,
    pub q: LatticeCoord,
}

/// `p` is the lattice vertex of `2⁻ᵏΛ` closest to the centroid
/// `ξ = (1 + ω)/3`, ties going to the smallest imaginary part and then the
/// smallest real part; `q = p + 2⁻ᵏ`. At `k = 9` this is
/// `p = 1/2 - 85·2⁻⁹ + 85·2⁻⁸ω`.
pub fn locate_pq(k: u32) -> Result<PqPair> {
    if k > 30 {
        return Err(Error::ScaleTooLarge { k, cap: 30 });
    }
    let s = 1i64 << k;
    // compare 3·2ᵏ·(p - ξ) = (3m - s) + (3n - s)ω exactly
    let key = |m: i64, n: i64| (eisenstein_norm(3 * m - s, 3 * n - s), n, 2 * m + n);
    let base = s / 3;
    let (m, n) = ((base - 1).max(0)..=(base + 2).min(s))
        .flat_map(|n| ((base - 2).max(0)..=(base + 2).min(s - n)).map(move |m| (m, n)))
        .min_by_key(|&(m, n)| key(m, n))
        .expect("search window is never empty");
    Ok(PqPair {
        p: LatticeCoord::new(m, n, k),
        q: LatticeCoord::new(m + 1, n, k),
    })
}

/// Exact checks of `p`, `q` and `ξ` at `k = 9`.
pub fn check_pq() -> Result<BoundReport> {
    let tiling = build_tiling(9)?;
    let PqPair { p, q } = locate_pq(9)?;
    let mut r = BoundReport::new("p, q at k = 9");
    // 1/2 - 85·2⁻⁹ + 85·2⁻⁸ω = (256 - 85 + 170ω)/512
    let stated = LatticeCoord::new(256 - 85, 2 * 85, 9);
    r.push(BoundEntry::exact_identity(
        "p = 1/2 - 85*2^-9 + 85*2^-8*omega",
        p.to_point().im,
        stated.to_point().im,
        p.same_point(stated),
    ));
    // Re p = (m + n/2)/512 = 1/2 and Im p = (n/2)√3/512 = 85√3/512
    r.push(BoundEntry::exact_identity(
        "Re p = 1/2",
        p.to_point().re,
        0.5,
        2 * p.m + p.n == 512,
    ));
    r.push(BoundEntry::exact_identity(
        "Im p = 85*sqrt3*2^-9",
        p.to_point().im,
        85.0 * libm::sqrt(3.0) / 512.0,
        p.n == 170,
    ));
    r.push(BoundEntry::exact_identity(
        "q = p + 2^-9",
        q.to_point().re,
        p.to_point().re + 1.0 / 512.0,
        q.same_point(LatticeCoord::new(p.m + 1, p.n, 9)),
    ));
    let (num, den) = p.dist_sq(q);
    r.push(BoundEntry::exact_identity(
        "|p - q| = 2^-9",
        libm::sqrt(num as f64 / den as f64),
        1.0 / 512.0,
        num == 1 && den == 512 * 512,
    ));
    // 1536·(ξ - p) = (512 - 3m) + (512 - 3n)ω
    let xi_num = eisenstein_norm(512 - 3 * p.m, 512 - 3 * p.n);
    r.push(BoundEntry::exact_identity(
        "|xi - p| = sqrt3/(2^9*3)",
        libm::sqrt(xi_num as f64) / 1536.0,
        libm::sqrt(3.0) / 1536.0,
        xi_num == 3,
    ));
    let interior = |c: LatticeCoord| c.m > 0 && c.n > 0 && c.m + c.n < 512;
    r.push(BoundEntry::exact_identity("p in interior of T", 1.0, 1.0, interior(p)));
    r.push(BoundEntry::exact_identity("q in interior of T", 1.0, 1.0, interior(q)));
    let is_edge = tiling.edge_between(p, q).is_ok();
    r.push(BoundEntry::exact_identity(
        "[p, q] is an edge of the k = 9 tiling",
        1.0,
        1.0,
        is_edge,
    ));
    r.push(BoundEntry::exact_identity(
        "tiling of T has 2^18 triangles",
        tiling.triangle_count() as f64,
        (1u64 << 18) as f64,
        tiling.triangle_count() == 1 << 18,
    ));
    Ok(r)
}

/// One sampled pair of [`verify_chain_inequality`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairCheck {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub chain_length: u32,
    /// `ln |f(e1)| - ln |f(e2)|`.
    pub log_ratio: f64,
    /// `n ln σ`.
    pub log_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChainCheck {
    pub k: u32,
    /// Largest image skew over the tiles.
    pub sigma_measured: f64,
    /// `σ` used in the bound, `sigma_hat·(1 + tolerance)`.
    pub sigma_used: f64,
    pub pairs: Vec<PairCheck>,
    pub report: BoundReport,
}

/// Checks `|f(v) - f(w)| ≤ σⁿ |f(v') - f(w')|` on `pairs` random edge pairs
/// with `n` their chain distance and `σ = sigma_hat·(1 + tolerance)`.
///
/// `sigma_hat` defaults to the largest image skew over the tiles; a smaller
/// value is rejected.
pub fn verify_chain_inequality<M: PlanarMap + ?Sized>(
    map: &M,
    k: u32,
    sigma_hat: Option<f64>,
    tolerance: f64,
    pairs: usize,
    seed: u64,
) -> Result<ChainCheck> {
    let tiling = build_tiling(k)?;
    let image = TilingImage::new(&tiling, map)?;
    let sigma_hat = sigma_hat.unwrap_or(image.sigma);
    if !(sigma_hat >= image.sigma * (1.0 - 1e-12)) {
        return Err(Error::Precondition(format!(
            "sigma_hat = {sigma_hat} is below the measured tile skew {}",
            image.sigma
        )));
    }
    let sigma = sigma_hat * (1.0 + tolerance);
    let log_sigma = libm::log(sigma);
    let ne = tiling.edge_count() as u32;
    let mut rng = stream_rng(seed, Stream::Pairs, u64::from(k));
    let mut sampled: Vec<(EdgeId, EdgeId)> = (0..pairs)
        .map(|_| (rng.random_range(0..ne), rng.random_range(0..ne)))
        .collect();
    // one BFS per distinct source
    let order: Vec<(EdgeId, EdgeId)> = sampled.clone();
    sampled.sort_unstable();
    let mut dist_cache: Vec<(EdgeId, Vec<u32>)> = Vec::new();
    for &(e1, _) in &sampled {
        if dist_cache.last().is_none_or(|(s, _)| *s != e1) {
            dist_cache.push((e1, tiling.bfs(e1)));
        }
    }
    let lookup = |e1: EdgeId, e2: EdgeId| {
        let i = dist_cache
            .binary_search_by_key(&e1, |(s, _)| *s)
            .expect("source cached");
        dist_cache[i].1[e2 as usize]
    };
    let mut checks = Vec::with_capacity(pairs);
    let mut report = BoundReport::new(format!("chain inequality, k = {k}"));
    let mut worst: Option<(f64, PairCheck)> = None;
    for (e1, e2) in order {
        let n = lookup(e1, e2);
        let log_ratio = libm::log(image.edge_lengths[e1 as usize]) - libm::log(image.edge_lengths[e2 as usize]);
        let log_bound = f64::from(n) * log_sigma;
        let pc = PairCheck {
            e1,
            e2,
            chain_length: n,
            log_ratio,
            log_bound,
        };
        let margin = log_bound - log_ratio;
        // identical edges give 0 ≤ 0 up to rounding
        let margin = if n == 0 { margin.max(0.0) } else { margin };
        if margin < 0.0 {
            report.push(BoundEntry::compare(
                format!("pair ({e1}, {e2}), n = {n}"),
                BoundKind::NonStrict,
                log_ratio,
                log_bound,
            ));
        }
        if worst.is_none_or(|(m, _)| margin < m) {
            worst = Some((margin, pc));
        }
        checks.push(pc);
    }
    if let Some((margin, pc)) = worst {
        report.push(BoundEntry::with_margin(
            format!(
                "worst of {pairs} pairs: ln|f(e1)|/|f(e2)| <= n ln sigma (n = {})",
                pc.chain_length
            ),
            BoundKind::NonStrict,
            pc.log_ratio,
            pc.log_bound,
            margin,
        ));
    }
    report.push(BoundEntry::compare(
        "measured tile skew <= sigma",
        BoundKind::NonStrict,
        image.sigma,
        sigma,
    ));
    Ok(ChainCheck {
        k,
        sigma_measured: image.sigma,
        sigma_used: sigma,
        pairs: checks,
        report,
    })
}

/// Checks `L(f(T)) ≤ N σᴺ |f(p) - f(q)|` in log space with `N = 4ᵏ`, `σ` the
/// largest image skew over the tiles and `p`, `q` from [`locate_pq`].
pub fn verify_side_bound<M: PlanarMap + ?Sized>(map: &M, k: u32) -> Result<BoundReport> {
    let tiling = build_tiling(k)?;
    let image = TilingImage::new(&tiling, map)?;
    let PqPair { p, q } = locate_pq(k)?;
    let s = tiling.side_len();
    let fp = image.point(&tiling, (p.m, p.n));
    let fq = image.point(&tiling, (q.m, q.n));
    let pq = (fp - fq).norm();
    if !(pq > 0.0) {
        return Err(Error::NonInjective("f(p) = f(q)"));
    }
    let corners = Triangle2::new(
        image.point(&tiling, (0, 0)),
        image.point(&tiling, (s, 0)),
        image.point(&tiling, (0, s)),
    );
    let big_l = corners.longest();
    let log_n = 2.0 * f64::from(k) * core::f64::consts::LN_2;
    let n_tiles = tiling.triangle_count() as f64;
    let rhs = log_n + n_tiles * libm::log(image.sigma) + libm::log(pq);
    let mut r = BoundReport::new(format!("side bound, k = {k}"));
    r.push(BoundEntry::compare(
        "ln L(f(T)) <= ln N + N ln sigma + ln|f(p) - f(q)|",
        BoundKind::NonStrict,
        libm::log(big_l),
        rhs,
    ));
    r.push(BoundEntry::compare(
        "edges per side of T <= N",
        BoundKind::NonStrict,
        s as f64,
        n_tiles,
    ));
    r.push(BoundEntry::exact_identity(
        "[p, q] is a tiling edge",
        1.0,
        1.0,
        tiling.edge_between(p, q).is_ok(),
    ));
    Ok(r)
}
