//! Per-element machinery: DoF layout, prepared geometry with quadrature,
//! edge-trace reconstruction, projector matrices and local forms.

mod forms;
mod operators;
mod trace;

pub use forms::{
    local_load, local_mass, local_stiffness, FormConfig, MassMode, StabDivisor, StabKind,
};
pub use operators::LocalOperators;
pub use trace::{legendre_shifted, EdgeTraceBasis};

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::geometry::{self, Point, Vec2};
use crate::monomials::{dim_poly, ScaledMonomials};
use crate::quadrature::{edge_rule, outward_normal, EdgeNode, PolygonRule};

/// Degree-of-freedom layout of one element with `n_vertices` vertices.
///
/// Ordering: vertex values (CCW), then per-edge scaled moments (edges CCW,
/// `k - 1` moments each, graded), then internal scaled moments (graded).
/// Total `N_P = n_vertices * k + k(k-1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DofLayout {
    pub k: usize,
    pub n_vertices: usize,
}

impl DofLayout {
    pub fn new(k: usize, n_vertices: usize) -> Self {
        assert!(k >= 1, "polynomial degree must be at least 1");
        assert!(n_vertices >= 3);
        Self { k, n_vertices }
    }

    /// Scaled moments stored per edge (`k - 1`).
    #[inline]
    pub fn moments_per_edge(&self) -> usize {
        self.k - 1
    }

    /// Internal moment count (`dim P_{k-2}` = `k(k-1)/2`).
    #[inline]
    pub fn n_internal(&self) -> usize {
        if self.k >= 2 {
            dim_poly(self.k - 2)
        } else {
            0
        }
    }

    /// Total DoF count `N_P`.
    #[inline]
    pub fn n_dofs(&self) -> usize {
        self.n_vertices * self.k + self.n_internal()
    }

    #[inline]
    pub fn vertex_dof(&self, i: usize) -> usize {
        debug_assert!(i < self.n_vertices);
        i
    }

    /// DoF index of moment `j` on edge `e` (edge `e` runs CCW from vertex `e`).
    #[inline]
    pub fn edge_dof(&self, e: usize, j: usize) -> usize {
        debug_assert!(e < self.n_vertices && j < self.moments_per_edge());
        self.n_vertices + e * self.moments_per_edge() + j
    }

    /// DoF index of the `a`-th internal moment.
    #[inline]
    pub fn internal_dof(&self, a: usize) -> usize {
        debug_assert!(a < self.n_internal());
        self.n_vertices * self.k + a
    }
}

/// One prepared edge of an element.
#[derive(Debug, Clone)]
pub struct ElementEdge {
    /// Local CCW endpoint indices: edge runs from vertex `a` to vertex `b`.
    pub a: usize,
    pub b: usize,
    pub length: f64,
    /// Outward unit normal.
    pub normal: Vec2,
    /// Whether the edge's DoF orientation runs `b -> a` instead of `a -> b`.
    /// In a mesh this is fixed globally (from the lower-indexed vertex to the
    /// higher one) so that the two elements sharing the edge agree on the
    /// meaning of its moment DoFs.
    pub flip: bool,
    /// Quadrature nodes along the edge; `t` is the DoF-orientation parameter.
    pub nodes: Vec<EdgeNode>,
}

impl ElementEdge {
    /// Local DoF index (within the element) of the trace DoF `r` on this
    /// edge, where `r` enumerates: trace start value, trace end value, then
    /// moments — all in DoF orientation.
    #[inline]
    pub fn trace_dof(&self, layout: &DofLayout, e: usize, r: usize) -> usize {
        match r {
            0 => layout.vertex_dof(if self.flip { self.b } else { self.a }),
            1 => layout.vertex_dof(if self.flip { self.a } else { self.b }),
            _ => layout.edge_dof(e, r - 2),
        }
    }
}

/// A polygonal element prepared for degree-`k` operators: validated CCW
/// geometry, interior and edge quadrature of sufficient exactness, and the
/// shared edge-trace basis.
#[derive(Debug, Clone)]
pub struct ElementGeometry {
    pub vertices: Vec<Point>,
    pub area: f64,
    pub centroid: Point,
    pub diameter: f64,
    pub edges: Vec<ElementEdge>,
    pub interior: PolygonRule,
    pub trace: EdgeTraceBasis,
    pub k: usize,
}

impl ElementGeometry {
    /// Prepare an element. `flips[e]` states whether edge `e`'s DoF
    /// orientation opposes the CCW traversal (see [`ElementEdge::flip`]).
    ///
    /// Quadrature exactness: `2k + 2` on the interior, `2k + 1` on edges —
    /// one degree beyond the highest product appearing in the projector
    /// systems, so integration never enters the error budget.
    pub fn new(vertices: Vec<Point>, flips: &[bool], k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("degree k must be >= 1".into()));
        }
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Geometry(format!(
                "element needs at least 3 vertices, got {n}"
            )));
        }
        if flips.len() != n {
            return Err(Error::InvalidParameter(
                "flips must have one entry per edge".into(),
            ));
        }
        let area = geometry::signed_area(&vertices);
        if area <= 0.0 {
            return Err(Error::Geometry(if area == 0.0 {
                "degenerate cell with zero area".to_string()
            } else {
                "cell vertices are clockwise".to_string()
            }));
        }
        let diameter = geometry::diameter(&vertices);
        let centroid = geometry::centroid(&vertices);
        let interior = PolygonRule::build(&vertices, 2 * k + 2)?;
        let edge_exactness = 2 * k + 1;
        let mut edges = Vec::with_capacity(n);
        for e in 0..n {
            let (a, b) = (e, (e + 1) % n);
            let (pa, pb) = (vertices[a], vertices[b]);
            let length = (pb - pa).norm();
            if length < 1e-14 * diameter {
                return Err(Error::Geometry(format!(
                    "degenerate edge {e}: length {length:.3e}"
                )));
            }
            let flip = flips[e];
            let (start, end) = if flip { (pb, pa) } else { (pa, pb) };
            edges.push(ElementEdge {
                a,
                b,
                length,
                normal: outward_normal(pa, pb),
                flip,
                nodes: edge_rule(start, end, edge_exactness),
            });
        }
        Ok(Self {
            vertices,
            area,
            centroid,
            diameter,
            edges,
            interior,
            trace: EdgeTraceBasis::new(k),
            k,
        })
    }

    /// Prepare a free-standing element (not part of a mesh). Edge DoF
    /// orientation runs from the lower local vertex index to the higher one,
    /// the same rule a mesh applies with global indices.
    pub fn standalone(vertices: Vec<Point>, k: usize) -> Result<Self> {
        let n = vertices.len();
        let flips: Vec<bool> = (0..n).map(|e| e > (e + 1) % n).collect();
        Self::new(vertices, &flips, k)
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn layout(&self) -> DofLayout {
        DofLayout::new(self.k, self.n_vertices())
    }

    /// The scaled monomial basis attached to this element.
    pub fn basis(&self) -> ScaledMonomials {
        ScaledMonomials::new(self.centroid, self.diameter, self.k)
    }
}

/// DoF vector of a pointwise-evaluable function on one element: exact vertex
/// values, quadrature edge moments, quadrature internal moments. This is the
/// interpolation operator's input side and the tool for imposing non-zero
/// boundary data.
pub fn dofs_of_function(geom: &ElementGeometry, f: impl Fn(Point) -> f64) -> DVector<f64> {
    let layout = geom.layout();
    let k = geom.k;
    let mut dofs = DVector::zeros(layout.n_dofs());
    for (i, &v) in geom.vertices.iter().enumerate() {
        dofs[layout.vertex_dof(i)] = f(v);
    }
    if k >= 2 {
        for (e, edge) in geom.edges.iter().enumerate() {
            for j in 0..layout.moments_per_edge() {
                let m: f64 = edge
                    .nodes
                    .iter()
                    .map(|n| n.weight * f(n.point) * (n.t - 0.5).powi(j as i32))
                    .sum();
                dofs[layout.edge_dof(e, j)] = m / edge.length;
            }
        }
        let basis = geom.basis();
        for a in 0..layout.n_internal() {
            let m = geom.interior.integrate(|p| f(p) * basis.eval(a, p));
            dofs[layout.internal_dof(a)] = m / geom.area;
        }
    }
    dofs
}
