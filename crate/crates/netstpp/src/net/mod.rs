//! Linear-network geometry: segment storage, point snapping, pixel
//! rasterization with arc-length mass, and shortest-path queries.

mod io;
mod raster;

pub use io::{load_network, read_segments_csv, read_segments_geojson, NetworkFormat};
pub use raster::{rasterize, NetworkRaster, SubSegment};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A planar point in projected metric coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Axis-aligned bounding rectangle.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl BBox {
    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }
}

/// A straight segment with endpoints `u`, `v` and derived Euclidean length.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Segment {
    pub u: Point,
    pub v: Point,
    pub length: f64,
}

impl Segment {
    /// Position on the segment for parameter `t` in `[0, 1]`:
    /// `t = 1` gives `u`, `t = 0` gives `v`.
    pub fn point_at(&self, t: f64) -> Point {
        Point::new(
            t * self.u.x + (1.0 - t) * self.v.x,
            t * self.u.y + (1.0 - t) * self.v.y,
        )
    }
}

/// A point constrained to the network: a segment index plus the position
/// parameter `t`, with `xy = t*u + (1-t)*v` of the host segment.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct NetworkLocation {
    pub segment_id: usize,
    pub t: f64,
    pub xy: Point,
}

#[derive(Debug, Clone, Copy)]
struct Edge {
    to: u32,
    #[allow(dead_code)]
    segment_id: u32,
    length: f64,
}

/// A linear network: merged segments, a node graph for routing and a
/// spatial index for snapping. Immutable after construction.
#[derive(Debug, Clone)]
pub struct LinearNetwork {
    segments: Vec<Segment>,
    seg_nodes: Vec<(u32, u32)>,
    nodes: Vec<Point>,
    node_index: HashMap<(i64, i64), u32>,
    adjacency: Vec<Vec<Edge>>,
    component: Vec<u32>,
    total_length: f64,
    bbox: BBox,
    snap_index: CellGrid,
    snap_tolerance: f64,
}

/// Merge endpoints within `snap_tolerance` into shared nodes, drop segments
/// that collapse to zero length, and build the routable graph.
pub fn build_network(raw: &[(Point, Point)], snap_tolerance: f64) -> Result<LinearNetwork> {
    if raw.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    if snap_tolerance < 0.0 || !snap_tolerance.is_finite() {
        return Err(Error::InvalidArg(format!(
            "snap_tolerance must be >= 0, got {snap_tolerance}"
        )));
    }
    // Quantization cell must be positive even for tolerance 0.
    let q = snap_tolerance.max(1e-9);

    let mut node_index: HashMap<(i64, i64), u32> = HashMap::new();
    let mut nodes: Vec<Point> = Vec::new();
    let mut intern = |p: Point| -> u32 {
        let key = ((p.x / q).round() as i64, (p.y / q).round() as i64);
        *node_index.entry(key).or_insert_with(|| {
            nodes.push(p);
            (nodes.len() - 1) as u32
        })
    };

    let mut segments = Vec::new();
    let mut seg_nodes = Vec::new();
    for (i, &(a, b)) in raw.iter().enumerate() {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFiniteCoordinate(i));
        }
        let na = intern(a);
        let nb = intern(b);
        if na == nb {
            continue; // collapsed after merging
        }
        let (u, v) = (nodes[na as usize], nodes[nb as usize]);
        segments.push(Segment {
            u,
            v,
            length: u.dist(&v),
        });
        seg_nodes.push((na, nb));
    }
    if segments.is_empty() {
        return Err(Error::EmptyNetwork);
    }

    let mut adjacency = vec![Vec::new(); nodes.len()];
    for (sid, &(na, nb)) in seg_nodes.iter().enumerate() {
        let len = segments[sid].length;
        adjacency[na as usize].push(Edge {
            to: nb,
            segment_id: sid as u32,
            length: len,
        });
        adjacency[nb as usize].push(Edge {
            to: na,
            segment_id: sid as u32,
            length: len,
        });
    }

    let component = label_components(&adjacency);
    let total_length = segments.iter().map(|s| s.length).sum();
    let bbox = bbox_of(&segments);
    let snap_index = CellGrid::new(&segments, &bbox);

    Ok(LinearNetwork {
        segments,
        seg_nodes,
        nodes,
        node_index,
        adjacency,
        component,
        total_length,
        bbox,
        snap_index,
        snap_tolerance,
    })
}

fn bbox_of(segments: &[Segment]) -> BBox {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for s in segments {
        for p in [s.u, s.v] {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
    }
    BBox { min, max }
}

fn label_components(adjacency: &[Vec<Edge>]) -> Vec<u32> {
    let n = adjacency.len();
    let mut component = vec![u32::MAX; n];
    let mut next = 0u32;
    let mut stack = Vec::new();
    for start in 0..n {
        if component[start] != u32::MAX {
            continue;
        }
        component[start] = next;
        stack.push(start);
        while let Some(node) = stack.pop() {
            for e in &adjacency[node] {
                let to = e.to as usize;
                if component[to] == u32::MAX {
                    component[to] = next;
                    stack.push(to);
                }
            }
        }
        next += 1;
    }
    component
}

impl LinearNetwork {
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment(&self, id: usize) -> &Segment {
        &self.segments[id]
    }

    pub fn num_segments(&self) -> usize {
        self.segments.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    pub fn bbox(&self) -> BBox {
        self.bbox
    }

    pub fn snap_tolerance(&self) -> f64 {
        self.snap_tolerance
    }

    pub fn node_id(&self, p: Point) -> Option<u32> {
        let q = self.snap_tolerance.max(1e-9);
        self.node_index
            .get(&((p.x / q).round() as i64, (p.y / q).round() as i64))
            .copied()
    }

    /// Raw endpoint pairs, suitable for rebuilding the network.
    pub fn segment_endpoints(&self) -> Vec<(Point, Point)> {
        self.segments.iter().map(|s| (s.u, s.v)).collect()
    }

    /// Node ids at the `u` and `v` end of a segment.
    pub fn segment_nodes(&self, id: usize) -> (u32, u32) {
        self.seg_nodes[id]
    }

    /// A location at parameter `t` on segment `segment_id`.
    pub fn location(&self, segment_id: usize, t: f64) -> NetworkLocation {
        let xy = self.segments[segment_id].point_at(t);
        NetworkLocation { segment_id, t, xy }
    }

    /// Project `p` onto the nearest segment. Returns `None` when the nearest
    /// segment is farther than `max_dist` (a rejection, not an error).
    pub fn snap_point(&self, p: Point, max_dist: f64) -> Option<NetworkLocation> {
        let (sid, t, d) = self.snap_index.nearest(&self.segments, p, max_dist)?;
        if d <= max_dist {
            Some(self.location(sid, t))
        } else {
            None
        }
    }

    /// Exact shortest-path length between two on-network locations, treating
    /// both as temporary nodes splitting their host segments.
    pub fn shortest_path_distance(
        &self,
        a: &NetworkLocation,
        b: &NetworkLocation,
    ) -> Result<f64> {
        let (ua, va) = self.seg_nodes[a.segment_id];
        let (ub, vb) = self.seg_nodes[b.segment_id];
        let ca = self.component[ua as usize];
        let cb = self.component[ub as usize];
        if ca != cb {
            return Err(Error::Unreachable(ca, cb));
        }

        let la = self.segments[a.segment_id].length;
        let lb = self.segments[b.segment_id].length;
        // Distance from a location to the segment's endpoints:
        // t = 1 at u, t = 0 at v.
        let a_to = [(ua, (1.0 - a.t) * la), (va, a.t * la)];
        let b_to = [(ub, (1.0 - b.t) * lb), (vb, b.t * lb)];

        let mut best = if a.segment_id == b.segment_id {
            (a.t - b.t).abs() * la
        } else {
            f64::INFINITY
        };

        let dist = self.dijkstra_from(&a_to, Some(cb));
        for &(nb, db) in &b_to {
            let via = dist[nb as usize] + db;
            if via < best {
                best = via;
            }
        }
        Ok(best)
    }

    /// Single-source Dijkstra seeded with `(node, offset)` pairs; distances
    /// for every node (infinity where unreached). `component` restricts work.
    fn dijkstra_from(&self, seeds: &[(u32, f64)], component: Option<u32>) -> Vec<f64> {
        use std::cmp::Reverse;
        use std::collections::BinaryHeap;

        let mut dist = vec![f64::INFINITY; self.nodes.len()];
        let mut heap = BinaryHeap::new();
        for &(node, d) in seeds {
            if d < dist[node as usize] {
                dist[node as usize] = d;
                heap.push(Reverse(HeapEntry { dist: d, node }));
            }
        }
        while let Some(Reverse(HeapEntry { dist: d, node })) = heap.pop() {
            if d > dist[node as usize] {
                continue;
            }
            if let Some(c) = component {
                if self.component[node as usize] != c {
                    continue;
                }
            }
            for e in &self.adjacency[node as usize] {
                let nd = d + e.length;
                if nd < dist[e.to as usize] {
                    dist[e.to as usize] = nd;
                    heap.push(Reverse(HeapEntry { dist: nd, node: e.to }));
                }
            }
        }
        dist
    }

    pub(crate) fn component_of_segment(&self, segment_id: usize) -> u32 {
        self.component[self.seg_nodes[segment_id].0 as usize]
    }

    pub(crate) fn adjacency_list(&self) -> Vec<Vec<(u32, f64)>> {
        self.adjacency
            .iter()
            .map(|edges| edges.iter().map(|e| (e.to, e.length)).collect())
            .collect()
    }
}

#[derive(PartialEq)]
struct HeapEntry {
    dist: f64,
    node: u32,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.dist
            .partial_cmp(&other.dist)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(self.node.cmp(&other.node))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Perpendicular-foot projection of `p` onto segment `s`.
/// Returns `(t, distance)` with `t` in the `xy = t*u + (1-t)*v` convention.
pub fn project_onto_segment(s: &Segment, p: Point) -> (f64, f64) {
    let dx = s.v.x - s.u.x;
    let dy = s.v.y - s.u.y;
    let len2 = dx * dx + dy * dy;
    // Fraction along u -> v, clamped to the segment.
    let f = if len2 > 0.0 {
        (((p.x - s.u.x) * dx + (p.y - s.u.y) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = Point::new(s.u.x + f * dx, s.u.y + f * dy);
    (1.0 - f, p.dist(&q))
}

/// Uniform cell grid over segment bounding boxes. Nearest-segment queries
/// expand ring by ring, so the result equals brute force.
#[derive(Debug, Clone)]
struct CellGrid {
    cell: f64,
    origin: Point,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
}

impl CellGrid {
    fn new(segments: &[Segment], bbox: &BBox) -> Self {
        let mean_len = segments.iter().map(|s| s.length).sum::<f64>() / segments.len() as f64;
        let cell = mean_len.max(bbox.width().max(bbox.height()) / 512.0).max(1e-6);
        let nx = ((bbox.width() / cell).ceil() as usize + 1).max(1);
        let ny = ((bbox.height() / cell).ceil() as usize + 1).max(1);
        let origin = bbox.min;
        let mut cells = vec![Vec::new(); nx * ny];
        for (sid, s) in segments.iter().enumerate() {
            let x0 = (((s.u.x.min(s.v.x) - origin.x) / cell).floor() as isize).clamp(0, nx as isize - 1);
            let x1 = (((s.u.x.max(s.v.x) - origin.x) / cell).floor() as isize).clamp(0, nx as isize - 1);
            let y0 = (((s.u.y.min(s.v.y) - origin.y) / cell).floor() as isize).clamp(0, ny as isize - 1);
            let y1 = (((s.u.y.max(s.v.y) - origin.y) / cell).floor() as isize).clamp(0, ny as isize - 1);
            for iy in y0..=y1 {
                for ix in x0..=x1 {
                    cells[iy as usize * nx + ix as usize].push(sid as u32);
                }
            }
        }
        CellGrid {
            cell,
            origin,
            nx,
            ny,
            cells,
        }
    }

    /// Nearest segment to `p` as `(segment_id, t, distance)`; exact whenever
    /// the distance is within `max_dist` (rejections may stop early).
    fn nearest(&self, segments: &[Segment], p: Point, max_dist: f64) -> Option<(usize, f64, f64)> {
        let cx = ((p.x - self.origin.x) / self.cell).floor() as isize;
        let cy = ((p.y - self.origin.y) / self.cell).floor() as isize;

        let mut best: Option<(usize, f64, f64)> = None;
        let mut ring = 0isize;
        loop {
            // Every cell in this ring is at least (ring - 1) cells away, so
            // once the best hit beats that bound the search is complete.
            let ring_min_dist = (ring - 1).max(0) as f64 * self.cell;
            if let Some((_, _, d)) = best {
                if d <= ring_min_dist {
                    break;
                }
            }
            if ring_min_dist > max_dist {
                break;
            }
            for (ix, iy) in ring_cells(cx, cy, ring) {
                if ix < 0 || iy < 0 || ix >= self.nx as isize || iy >= self.ny as isize {
                    continue;
                }
                for &sid in &self.cells[iy as usize * self.nx + ix as usize] {
                    let (t, d) = project_onto_segment(&segments[sid as usize], p);
                    let better = match best {
                        None => true,
                        Some((bsid, _, bd)) => d < bd || (d == bd && (sid as usize) < bsid),
                    };
                    if better {
                        best = Some((sid as usize, t, d));
                    }
                }
            }
            ring += 1;
        }
        best
    }
}

fn ring_cells(cx: isize, cy: isize, ring: isize) -> Vec<(isize, isize)> {
    if ring == 0 {
        return vec![(cx, cy)];
    }
    let mut out = Vec::with_capacity((8 * ring) as usize);
    for dx in -ring..=ring {
        out.push((cx + dx, cy - ring));
        out.push((cx + dx, cy + ring));
    }
    for dy in (-ring + 1)..ring {
        out.push((cx - ring, cy + dy));
        out.push((cx + ring, cy + dy));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn two_segments_sharing_endpoint() {
        let net = build_network(
            &[(pt(0.0, 0.0), pt(1.0, 0.0)), (pt(1.0, 0.0), pt(1.0, 1.0))],
            0.01,
        )
        .unwrap();
        assert_eq!(net.num_nodes(), 3);
        assert_eq!(net.num_segments(), 2);
        assert_relative_eq!(net.total_length(), 2.0);
    }

    #[test]
    fn tolerance_merges_close_endpoints() {
        let net = build_network(
            &[
                (pt(0.0, 0.0), pt(1.0, 0.0)),
                (pt(1.000_000_1, 0.0), pt(2.0, 0.0)),
            ],
            1e-3,
        )
        .unwrap();
        assert_eq!(net.num_nodes(), 3);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(build_network(&[], 0.01), Err(Error::EmptyNetwork)));
    }

    #[test]
    fn non_finite_coordinates_are_an_error() {
        let r = build_network(&[(pt(f64::NAN, 0.0), pt(1.0, 0.0))], 0.01);
        assert!(matches!(r, Err(Error::NonFiniteCoordinate(0))));
    }

    #[test]
    fn zero_length_segments_dropped_after_merge() {
        let net = build_network(
            &[
                (pt(0.0, 0.0), pt(1.0, 0.0)),
                (pt(5.0, 5.0), pt(5.0, 5.000_000_1)),
            ],
            1e-3,
        )
        .unwrap();
        assert_eq!(net.num_segments(), 1);
    }

    #[test]
    fn rebuild_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let raw: Vec<_> = (0..100)
            .map(|_| {
                (
                    pt(rng.gen::<f64>() * 100.0, rng.gen::<f64>() * 100.0),
                    pt(rng.gen::<f64>() * 100.0, rng.gen::<f64>() * 100.0),
                )
            })
            .collect();
        let net = build_network(&raw, 0.01).unwrap();
        let net2 = build_network(&net.segment_endpoints(), 0.01).unwrap();
        assert_eq!(net.num_nodes(), net2.num_nodes());
        assert_eq!(net.num_segments(), net2.num_segments());
        assert_relative_eq!(net.total_length(), net2.total_length());
    }

    #[test]
    fn snap_perpendicular_foot() {
        let net = build_network(&[(pt(0.0, 0.0), pt(1.0, 0.0))], 0.01).unwrap();
        let loc = net.snap_point(pt(0.5, 0.2), 50.0).unwrap();
        assert_eq!(loc.segment_id, 0);
        assert_relative_eq!(loc.t, 0.5, epsilon = 1e-12);
        assert_relative_eq!(loc.xy.dist(&pt(0.5, 0.2)), 0.2, epsilon = 1e-12);
    }

    #[test]
    fn snap_rejects_far_points() {
        let net = build_network(&[(pt(0.0, 0.0), pt(1.0, 0.0))], 0.01).unwrap();
        assert!(net.snap_point(pt(0.5, 60.0), 50.0).is_none());
    }

    #[test]
    fn snap_at_shared_node_matches_either_incident_segment() {
        let net = build_network(
            &[(pt(0.0, 0.0), pt(1.0, 0.0)), (pt(1.0, 0.0), pt(1.0, 1.0))],
            0.01,
        )
        .unwrap();
        let p = pt(1.0, 0.0);
        // Brute force over both candidates: both are at distance 0.
        for s in net.segments() {
            let (_, d) = project_onto_segment(s, p);
            assert_relative_eq!(d, 0.0, epsilon = 1e-12);
        }
        let loc = net.snap_point(p, 50.0).unwrap();
        assert_relative_eq!(loc.xy.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(loc.xy.y, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn snap_equals_brute_force_on_random_network() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let raw: Vec<_> = (0..300)
            .map(|_| {
                let a = pt(rng.gen::<f64>() * 1000.0, rng.gen::<f64>() * 1000.0);
                let ang = rng.gen::<f64>() * std::f64::consts::TAU;
                let len = 5.0 + rng.gen::<f64>() * 60.0;
                (a, pt(a.x + len * ang.cos(), a.y + len * ang.sin()))
            })
            .collect();
        let net = build_network(&raw, 0.01).unwrap();
        for _ in 0..200 {
            let p = pt(rng.gen::<f64>() * 1000.0, rng.gen::<f64>() * 1000.0);
            let brute = net
                .segments()
                .iter()
                .map(|s| project_onto_segment(s, p).1)
                .fold(f64::INFINITY, f64::min);
            match net.snap_point(p, 80.0) {
                Some(loc) => {
                    assert_relative_eq!(loc.xy.dist(&p), brute, epsilon = 1e-9);
                }
                None => assert!(brute > 80.0),
            }
        }
    }

    #[test]
    fn same_segment_distance() {
        let net = build_network(&[(pt(0.0, 0.0), pt(10.0, 0.0))], 0.01).unwrap();
        let a = net.location(0, 0.2);
        let b = net.location(0, 0.7);
        let d = net.shortest_path_distance(&a, &b).unwrap();
        assert_relative_eq!(d, 5.0, epsilon = 1e-12);
        let d2 = net.shortest_path_distance(&b, &a).unwrap();
        assert_relative_eq!(d2, d);
    }

    #[test]
    fn l_shaped_path_through_corner() {
        let net = build_network(
            &[(pt(0.0, 0.0), pt(4.0, 0.0)), (pt(4.0, 0.0), pt(4.0, 3.0))],
            0.01,
        )
        .unwrap();
        // Far ends: on segment 0 at u (t=1), on segment 1 at v (t=0).
        let a = net.location(0, 1.0);
        let b = net.location(1, 0.0);
        let d = net.shortest_path_distance(&a, &b).unwrap();
        assert_relative_eq!(d, 7.0, epsilon = 1e-12);
    }

    #[test]
    fn unreachable_pair_reports_components() {
        let net = build_network(
            &[(pt(0.0, 0.0), pt(1.0, 0.0)), (pt(10.0, 10.0), pt(11.0, 10.0))],
            0.01,
        )
        .unwrap();
        let a = net.location(0, 0.5);
        let b = net.location(1, 0.5);
        match net.shortest_path_distance(&a, &b) {
            Err(Error::Unreachable(ca, cb)) => assert_ne!(ca, cb),
            other => panic!("expected Unreachable, got {other:?}"),
        }
    }

    /// Independent oracle: Dijkstra over an explicitly split graph where the
    /// two query locations become real nodes.
    fn split_graph_distance(net: &LinearNetwork, a: &NetworkLocation, b: &NetworkLocation) -> f64 {
        let n = net.num_nodes();
        let mut adj: Vec<Vec<(usize, f64)>> = net
            .adjacency_list()
            .into_iter()
            .map(|es| es.into_iter().map(|(to, l)| (to as usize, l)).collect())
            .collect();
        adj.push(Vec::new()); // node n   = a
        adj.push(Vec::new()); // node n+1 = b
        let mut add = |x: usize, y: usize, l: f64| {
            adj[x].push((y, l));
            adj[y].push((x, l));
        };
        for (i, loc) in [(n, a), (n + 1, b)] {
            let (nu, nv) = net.segment_nodes(loc.segment_id);
            let len = net.segment(loc.segment_id).length;
            add(i, nu as usize, (1.0 - loc.t) * len);
            add(i, nv as usize, loc.t * len);
        }
        if a.segment_id == b.segment_id {
            add(n, n + 1, (a.t - b.t).abs() * net.segment(a.segment_id).length);
        }
        // plain Dijkstra
        let mut dist = vec![f64::INFINITY; adj.len()];
        let mut heap = std::collections::BinaryHeap::new();
        dist[n] = 0.0;
        heap.push(std::cmp::Reverse((ordered_float(0.0), n)));
        while let Some(std::cmp::Reverse((d, node))) = heap.pop() {
            let d = f64::from_bits(d);
            if d > dist[node] {
                continue;
            }
            for &(to, l) in &adj[node] {
                if d + l < dist[to] {
                    dist[to] = d + l;
                    heap.push(std::cmp::Reverse((ordered_float(d + l), to)));
                }
            }
        }
        dist[n + 1]
    }

    fn ordered_float(x: f64) -> u64 {
        // nonnegative floats order correctly by bit pattern
        x.to_bits()
    }

    #[test]
    fn shortest_path_matches_split_graph_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // random connected-ish network: chain plus chords, ~50 nodes
        let nodes: Vec<Point> = (0..50)
            .map(|_| pt(rng.gen::<f64>() * 500.0, rng.gen::<f64>() * 500.0))
            .collect();
        let mut raw: Vec<(Point, Point)> = (1..50).map(|i| (nodes[i - 1], nodes[i])).collect();
        for _ in 0..25 {
            let i = rng.gen_range(0..50);
            let j = rng.gen_range(0..50);
            if i != j {
                raw.push((nodes[i], nodes[j]));
            }
        }
        let net = build_network(&raw, 0.01).unwrap();
        for _ in 0..20 {
            let sa = rng.gen_range(0..net.num_segments());
            let sb = rng.gen_range(0..net.num_segments());
            let a = net.location(sa, rng.gen::<f64>());
            let b = net.location(sb, rng.gen::<f64>());
            let got = net.shortest_path_distance(&a, &b).unwrap();
            let want = split_graph_distance(&net, &a, &b);
            assert_relative_eq!(got, want, epsilon = 1e-9);
        }
    }

    #[test]
    fn triangle_inequality_over_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let nodes: Vec<Point> = (0..30)
            .map(|_| pt(rng.gen::<f64>() * 200.0, rng.gen::<f64>() * 200.0))
            .collect();
        let mut raw: Vec<(Point, Point)> = (1..30).map(|i| (nodes[i - 1], nodes[i])).collect();
        for _ in 0..15 {
            let i = rng.gen_range(0..30);
            let j = rng.gen_range(0..30);
            if i != j {
                raw.push((nodes[i], nodes[j]));
            }
        }
        let net = build_network(&raw, 0.01).unwrap();
        for _ in 0..30 {
            let l = |rng: &mut ChaCha8Rng| {
                let s = rng.gen_range(0..net.num_segments());
                net.location(s, rng.gen::<f64>())
            };
            let (a, b, c) = (l(&mut rng), l(&mut rng), l(&mut rng));
            let ab = net.shortest_path_distance(&a, &b).unwrap();
            let bc = net.shortest_path_distance(&b, &c).unwrap();
            let ac = net.shortest_path_distance(&a, &c).unwrap();
            assert!(ac <= ab + bc + 1e-9);
        }
    }
}
