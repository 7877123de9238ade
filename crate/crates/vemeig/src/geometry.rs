//! Planar polygon primitives: areas, centroids, diameters, star-shape tests
//! and triangulation.
//!
//! Polygons are open vertex lists in counter-clockwise (CCW) order; the
//! closing edge from the last vertex back to the first is implicit. All
//! quantities here are purely geometric — no basis functions, no quadrature.

use nalgebra::{Point2, Vector2};

use crate::error::{Error, Result};

/// A point in the plane.
pub type Point = Point2<f64>;
/// A displacement / direction in the plane.
pub type Vec2 = Vector2<f64>;

/// 2D cross product (z-component of the 3D cross product).
#[inline]
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Signed area of a polygon (positive iff the vertices are CCW).
pub fn signed_area(verts: &[Point]) -> f64 {
    let n = verts.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    0.5 * acc
}

/// Absolute polygon area.
pub fn area(verts: &[Point]) -> f64 {
    signed_area(verts).abs()
}

/// Area centroid of a simple polygon.
pub fn centroid(verts: &[Point]) -> Point {
    let n = verts.len();
    let a = signed_area(verts);
    if a.abs() < f64::MIN_POSITIVE {
        // Degenerate: fall back to the vertex average so callers can still
        // report a location in error messages.
        let mut c = Vec2::zeros();
        for v in verts {
            c += v.coords;
        }
        return Point::from(c / n as f64);
    }
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let p = verts[i];
        let q = verts[(i + 1) % n];
        let w = p.x * q.y - q.x * p.y;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    Point::new(cx / (6.0 * a), cy / (6.0 * a))
}

/// Polygon diameter: the maximum pairwise vertex distance.
pub fn diameter(verts: &[Point]) -> f64 {
    let mut d2: f64 = 0.0;
    for (i, p) in verts.iter().enumerate() {
        for q in &verts[i + 1..] {
            d2 = d2.max((p - q).norm_squared());
        }
    }
    d2.sqrt()
}

/// Whether the vertex list is counter-clockwise.
pub fn is_ccw(verts: &[Point]) -> bool {
    signed_area(verts) > 0.0
}

/// Whether every interior angle turns left (strictly convex up to `tol`,
/// relative to the edge lengths involved).
pub fn is_convex(verts: &[Point]) -> bool {
    let n = verts.len();
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let c = verts[(i + 2) % n];
        let u = b - a;
        let v = c - b;
        if cross(u, v) < -1e-12 * u.norm() * v.norm() {
            return false;
        }
    }
    true
}

/// Whether a CCW polygon is star-shaped with respect to `p`, i.e. `p` lies
/// strictly inside every edge's inner half-plane (so `p` sees the whole
/// boundary). This is the condition for the centroid fan triangulation to
/// produce positively oriented triangles.
pub fn is_star_shaped_wrt(verts: &[Point], p: Point) -> bool {
    let n = verts.len();
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let e = b - a;
        // Relative tolerance: p must clear the edge line by more than a sliver.
        if cross(e, p - a) <= 1e-12 * e.norm() * diameter(verts) {
            return false;
        }
    }
    true
}

/// Whether two closed segments intersect (excluding shared endpoints).
fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = cross(b - a, c - a);
    let d2 = cross(b - a, d - a);
    let d3 = cross(d - c, a - c);
    let d4 = cross(d - c, b - c);
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

/// Whether the polygon is simple (no two non-adjacent edges intersect).
/// O(n^2), intended for the small polygons that make up a mesh cell.
pub fn is_simple(verts: &[Point]) -> bool {
    let n = verts.len();
    for i in 0..n {
        let (a, b) = (verts[i], verts[(i + 1) % n]);
        for j in i + 1..n {
            // Skip adjacent edges (they share a vertex by construction).
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (c, d) = (verts[j], verts[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Triangulate a simple CCW polygon into coordinate triangles.
///
/// Star-shaped polygons (with respect to their centroid) get the centroid
/// fan, which keeps triangles well-shaped on convex cells; anything else
/// falls back to ear clipping. Returns positively oriented triangles whose
/// areas sum to the polygon area.
pub fn triangulate(verts: &[Point]) -> Result<Vec<[Point; 3]>> {
    let n = verts.len();
    if n < 3 {
        return Err(Error::Geometry(format!(
            "polygon needs at least 3 vertices, got {n}"
        )));
    }
    if !is_ccw(verts) {
        return Err(Error::Geometry(
            "polygon is not counter-clockwise".to_string(),
        ));
    }
    let c = centroid(verts);
    if is_star_shaped_wrt(verts, c) {
        let mut tris = Vec::with_capacity(n);
        for i in 0..n {
            tris.push([c, verts[i], verts[(i + 1) % n]]);
        }
        return Ok(tris);
    }
    ear_clip(verts)
}

/// Ear-clipping triangulation of a simple CCW polygon. O(n^2).
pub fn ear_clip(verts: &[Point]) -> Result<Vec<[Point; 3]>> {
    let mut idx: Vec<usize> = (0..verts.len()).collect();
    let mut tris = Vec::with_capacity(verts.len().saturating_sub(2));
    let mut guard = 0usize;
    while idx.len() > 3 {
        let m = idx.len();
        let mut clipped = false;
        for i in 0..m {
            let ia = idx[(i + m - 1) % m];
            let ib = idx[i];
            let ic = idx[(i + 1) % m];
            let (a, b, c) = (verts[ia], verts[ib], verts[ic]);
            // Convex corner?
            if cross(b - a, c - b) <= 0.0 {
                continue;
            }
            // No other remaining vertex inside the candidate ear.
            let ear_ok = idx
                .iter()
                .filter(|&&j| j != ia && j != ib && j != ic)
                .all(|&j| !point_in_triangle(verts[j], a, b, c));
            if ear_ok {
                tris.push([a, b, c]);
                idx.remove(i);
                clipped = true;
                break;
            }
        }
        if !clipped {
            return Err(Error::Geometry(
                "ear clipping failed: polygon is not simple or is degenerate".to_string(),
            ));
        }
        guard += 1;
        if guard > 10 * verts.len() {
            return Err(Error::Geometry("ear clipping did not terminate".to_string()));
        }
    }
    tris.push([verts[idx[0]], verts[idx[1]], verts[idx[2]]]);
    Ok(tris)
}

/// Strict point-in-triangle test for a CCW triangle.
fn point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let d1 = cross(b - a, p - a);
    let d2 = cross(c - b, p - b);
    let d3 = cross(a - c, p - c);
    d1 > 0.0 && d2 > 0.0 && d3 > 0.0
}
