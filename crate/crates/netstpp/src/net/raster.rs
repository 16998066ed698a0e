//! Pixel discretization of a linear network with exact arc-length mass.

use serde::{Deserialize, Serialize};

use super::{BBox, LinearNetwork, Point};
use crate::error::{Error, Result};

/// A clipped piece of a segment inside one pixel ("lixel"). Parameters use
/// the `xy = t*u + (1-t)*v` convention of the parent segment.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SubSegment {
    pub segment_id: u32,
    pub t0: f64,
    pub t1: f64,
    pub length: f64,
}

/// A pixel grid over the network with per-pixel clipped arc length.
/// Pixels are square, row-major with index `iy * nx + ix`.
#[derive(Debug, Clone)]
pub struct NetworkRaster {
    pub nx: usize,
    pub ny: usize,
    pub origin: Point,
    pub pixel_size: f64,
    pub mass: Vec<f64>,
    net_bbox: BBox,
    piece_start: Vec<u32>,
    pieces: Vec<SubSegment>,
    total_mass: f64,
}

/// Discretize the network onto an `nx x ny` grid of square pixels covering
/// the network bounding box expanded by `margin` metres on every side.
/// Per-pixel mass is the exact clipped arc length.
pub fn rasterize(net: &LinearNetwork, nx: usize, ny: usize, margin: f64) -> Result<NetworkRaster> {
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidArg("grid dimensions must be positive".into()));
    }
    if margin < 0.0 {
        return Err(Error::InvalidArg("margin must be >= 0".into()));
    }
    let bbox = net.bbox();
    let w = bbox.width() + 2.0 * margin;
    let h = bbox.height() + 2.0 * margin;
    let pixel_size = (w / nx as f64).max(h / ny as f64).max(1e-9);
    let cx = 0.5 * (bbox.min.x + bbox.max.x);
    let cy = 0.5 * (bbox.min.y + bbox.max.y);
    let origin = Point::new(
        cx - 0.5 * pixel_size * nx as f64,
        cy - 0.5 * pixel_size * ny as f64,
    );

    let mut tagged: Vec<(u32, SubSegment)> = Vec::new();
    for (sid, seg) in net.segments().iter().enumerate() {
        clip_segment(
            sid as u32,
            seg.u,
            seg.v,
            seg.length,
            origin,
            pixel_size,
            nx,
            ny,
            &mut tagged,
        );
    }

    let npix = nx * ny;
    let mut counts = vec![0u32; npix + 1];
    for &(pix, _) in &tagged {
        counts[pix as usize + 1] += 1;
    }
    for i in 0..npix {
        counts[i + 1] += counts[i];
    }
    let piece_start = counts.clone();
    let mut pieces = vec![
        SubSegment {
            segment_id: 0,
            t0: 0.0,
            t1: 0.0,
            length: 0.0
        };
        tagged.len()
    ];
    let mut cursor = piece_start.clone();
    for (pix, piece) in tagged {
        let at = cursor[pix as usize];
        pieces[at as usize] = piece;
        cursor[pix as usize] += 1;
    }

    let mut mass = vec![0.0; npix];
    for pix in 0..npix {
        let lo = piece_start[pix] as usize;
        let hi = piece_start[pix + 1] as usize;
        mass[pix] = pieces[lo..hi].iter().map(|p| p.length).sum();
    }
    let total_mass = mass.iter().sum();

    Ok(NetworkRaster {
        nx,
        ny,
        origin,
        pixel_size,
        mass,
        net_bbox: bbox,
        piece_start,
        pieces,
        total_mass,
    })
}

/// Split one segment at every gridline crossing; each resulting piece is
/// assigned to the pixel containing its midpoint.
#[allow(clippy::too_many_arguments)]
fn clip_segment(
    sid: u32,
    u: Point,
    v: Point,
    length: f64,
    origin: Point,
    px: f64,
    nx: usize,
    ny: usize,
    out: &mut Vec<(u32, SubSegment)>,
) {
    // Walk in s from u (s=0) to v (s=1); the stored parameter is t = 1 - s.
    let dx = v.x - u.x;
    let dy = v.y - u.y;
    let mut breaks = vec![0.0, 1.0];
    let gx0 = (u.x - origin.x) / px;
    let gx1 = (v.x - origin.x) / px;
    let gy0 = (u.y - origin.y) / px;
    let gy1 = (v.y - origin.y) / px;
    push_crossings(gx0, gx1, &mut breaks);
    push_crossings(gy0, gy1, &mut breaks);
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    for w in breaks.windows(2) {
        let (s0, s1) = (w[0], w[1]);
        if s1 <= s0 {
            continue;
        }
        let sm = 0.5 * (s0 + s1);
        let mx = (u.x + sm * dx - origin.x) / px;
        let my = (u.y + sm * dy - origin.y) / px;
        let ix = (mx.floor() as isize).clamp(0, nx as isize - 1) as usize;
        let iy = (my.floor() as isize).clamp(0, ny as isize - 1) as usize;
        out.push((
            (iy * nx + ix) as u32,
            SubSegment {
                segment_id: sid,
                t0: 1.0 - s0,
                t1: 1.0 - s1,
                length: (s1 - s0) * length,
            },
        ));
    }
}

/// Parameters in (0,1) where the grid coordinate crosses integer lines.
fn push_crossings(g0: f64, g1: f64, breaks: &mut Vec<f64>) {
    if (g1 - g0).abs() < 1e-300 {
        return;
    }
    let (lo, hi) = if g0 < g1 { (g0, g1) } else { (g1, g0) };
    let first = lo.ceil() as i64;
    let last = hi.floor() as i64;
    for m in first..=last {
        let s = (m as f64 - g0) / (g1 - g0);
        if s > 0.0 && s < 1.0 {
            breaks.push(s);
        }
    }
}

impl NetworkRaster {
    pub fn num_pixels(&self) -> usize {
        self.nx * self.ny
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn net_bbox(&self) -> BBox {
        self.net_bbox
    }

    /// Smallest distance from the network bounding box to the raster edge.
    pub fn margin(&self) -> f64 {
        let ex = self.origin.x + self.pixel_size * self.nx as f64;
        let ey = self.origin.y + self.pixel_size * self.ny as f64;
        (self.net_bbox.min.x - self.origin.x)
            .min(self.net_bbox.min.y - self.origin.y)
            .min(ex - self.net_bbox.max.x)
            .min(ey - self.net_bbox.max.y)
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.nx + ix
    }

    /// Pixel containing `p`, clamped to the grid.
    pub fn pixel_of(&self, p: Point) -> (usize, usize) {
        let ix = (((p.x - self.origin.x) / self.pixel_size).floor() as isize)
            .clamp(0, self.nx as isize - 1) as usize;
        let iy = (((p.y - self.origin.y) / self.pixel_size).floor() as isize)
            .clamp(0, self.ny as isize - 1) as usize;
        (ix, iy)
    }

    pub fn pixel_center(&self, ix: usize, iy: usize) -> Point {
        Point::new(
            self.origin.x + (ix as f64 + 0.5) * self.pixel_size,
            self.origin.y + (iy as f64 + 0.5) * self.pixel_size,
        )
    }

    pub fn pieces_in(&self, pixel: usize) -> &[SubSegment] {
        let lo = self.piece_start[pixel] as usize;
        let hi = self.piece_start[pixel + 1] as usize;
        &self.pieces[lo..hi]
    }

    /// Bilinear interpolation of a per-pixel image at an arbitrary point.
    /// Values are attached to pixel centers; the border is clamped.
    pub fn bilinear(&self, values: &[f64], p: Point) -> f64 {
        debug_assert_eq!(values.len(), self.num_pixels());
        let gx = (p.x - self.origin.x) / self.pixel_size - 0.5;
        let gy = (p.y - self.origin.y) / self.pixel_size - 0.5;
        let ix0 = (gx.floor() as isize).clamp(0, self.nx as isize - 1) as usize;
        let iy0 = (gy.floor() as isize).clamp(0, self.ny as isize - 1) as usize;
        let ix1 = (ix0 + 1).min(self.nx - 1);
        let iy1 = (iy0 + 1).min(self.ny - 1);
        let fx = (gx - ix0 as f64).clamp(0.0, 1.0);
        let fy = (gy - iy0 as f64).clamp(0.0, 1.0);
        let v00 = values[self.index(ix0, iy0)];
        let v10 = values[self.index(ix1, iy0)];
        let v01 = values[self.index(ix0, iy1)];
        let v11 = values[self.index(ix1, iy1)];
        v00 * (1.0 - fx) * (1.0 - fy)
            + v10 * fx * (1.0 - fy)
            + v01 * (1.0 - fx) * fy
            + v11 * fx * fy
    }
}
