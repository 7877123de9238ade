//! Scaled monomial bases on polygons.
//!
//! On an element with centroid `c` and diameter `h`, the basis of the
//! polynomial space `P_k` is
//!
//! ```text
//! m_(s,t)(x, y) = ((x - c_x) / h)^s * ((y - c_y) / h)^t,    s + t <= k,
//! ```
//!
//! enumerated by ascending total degree and, within a degree, by descending
//! `x`-power: `1, x, y, x², xy, y², x³, x²y, …`. Because lower degrees form a
//! prefix of this ordering, one enumeration serves `P_k` and every subspace
//! `P_j`, `j < k` — derivative maps can return indices into the same list.
//!
//! The scaling makes all basis values O(1) on the element, which keeps the
//! projector systems well-conditioned independently of the element size.

use nalgebra::DMatrix;

use crate::geometry::{Point, Vec2};
use crate::quadrature::PolygonRule;

/// Dimension of the bivariate polynomial space `P_k`.
///
/// `degree + 2 <= k` cases degenerate gracefully: `dim_poly(-1)` is not
/// representable, so the internal-moment space of `P_{k-2}` for `k < 2` is
/// obtained via [`dim_poly_or_zero`].
#[inline]
pub fn dim_poly(k: usize) -> usize {
    (k + 1) * (k + 2) / 2
}

/// `dim P_k` where a "negative degree" (encoded as `None`) has dimension 0.
#[inline]
pub fn dim_poly_or_zero(k: Option<usize>) -> usize {
    k.map_or(0, dim_poly)
}

/// Exponent pairs `(s, t)` of the basis of `P_k` in canonical order.
pub fn exponents(k: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(dim_poly(k));
    for deg in 0..=k as u32 {
        for t in 0..=deg {
            out.push((deg - t, t));
        }
    }
    out
}

/// The scaled monomial basis of `P_k` attached to one element.
#[derive(Debug, Clone)]
pub struct ScaledMonomials {
    center: Point,
    h: f64,
    degree: usize,
    exps: Vec<(u32, u32)>,
}

impl ScaledMonomials {
    pub fn new(center: Point, h: f64, degree: usize) -> Self {
        assert!(h > 0.0, "element diameter must be positive");
        Self {
            center,
            h,
            degree,
            exps: exponents(degree),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn center(&self) -> Point {
        self.center
    }

    #[inline]
    pub fn diameter(&self) -> f64 {
        self.h
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> (u32, u32) {
        self.exps[i]
    }

    /// Index of the monomial with exponents `(s, t)` in the canonical order.
    pub fn index_of(s: u32, t: u32) -> usize {
        let deg = (s + t) as usize;
        deg * (deg + 1) / 2 + t as usize
    }

    /// Evaluate the `i`-th scaled monomial at `p`.
    pub fn eval(&self, i: usize, p: Point) -> f64 {
        let (s, t) = self.exps[i];
        let x = (p.x - self.center.x) / self.h;
        let y = (p.y - self.center.y) / self.h;
        x.powi(s as i32) * y.powi(t as i32)
    }

    /// Evaluate all monomials at `p` into `out` (length `self.len()`).
    /// Uses the prefix structure to fill by increasing degree in O(len).
    pub fn eval_all(&self, p: Point, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.len());
        let x = (p.x - self.center.x) / self.h;
        let y = (p.y - self.center.y) / self.h;
        out[0] = 1.0;
        for i in 1..self.exps.len() {
            let (s, t) = self.exps[i];
            out[i] = if t == 0 {
                // x^s = x * x^(s-1): predecessor is the first entry of the
                // previous degree block.
                x * out[Self::index_of(s - 1, 0)]
            } else {
                y * out[Self::index_of(s, t - 1)]
            };
        }
    }

    /// Gradient of the `i`-th monomial at `p`.
    pub fn grad(&self, i: usize, p: Point) -> Vec2 {
        let (s, t) = self.exps[i];
        let x = (p.x - self.center.x) / self.h;
        let y = (p.y - self.center.y) / self.h;
        let dx = if s == 0 {
            0.0
        } else {
            s as f64 / self.h * x.powi(s as i32 - 1) * y.powi(t as i32)
        };
        let dy = if t == 0 {
            0.0
        } else {
            t as f64 / self.h * x.powi(s as i32) * y.powi(t as i32 - 1)
        };
        Vec2::new(dx, dy)
    }

    /// `∂m_i/∂x` as a multiple of a single lower-degree monomial:
    /// returns `(j, c)` with `∂m_i/∂x = c · m_j`, or `None` if it vanishes.
    pub fn dx_map(&self, i: usize) -> Option<(usize, f64)> {
        let (s, t) = self.exps[i];
        (s > 0).then(|| (Self::index_of(s - 1, t), s as f64 / self.h))
    }

    /// `∂m_i/∂y` analogue of [`Self::dx_map`].
    pub fn dy_map(&self, i: usize) -> Option<(usize, f64)> {
        let (s, t) = self.exps[i];
        (t > 0).then(|| (Self::index_of(s, t - 1), t as f64 / self.h))
    }

    /// Laplacian of `m_i` as a combination of monomials of degree `|i| - 2`:
    /// at most two `(index, coefficient)` terms.
    pub fn laplacian_map(&self, i: usize) -> Vec<(usize, f64)> {
        let (s, t) = self.exps[i];
        let h2 = self.h * self.h;
        let mut terms = Vec::with_capacity(2);
        if s >= 2 {
            terms.push((
                Self::index_of(s - 2, t),
                (s * (s - 1)) as f64 / h2,
            ));
        }
        if t >= 2 {
            terms.push((
                Self::index_of(s, t - 2),
                (t * (t - 1)) as f64 / h2,
            ));
        }
        terms
    }

    /// Mass matrix `H_ij = ∫_P m_i m_j` of the first `n` monomials, computed
    /// with `rule` (which must be exact to degree `2·(degree of m_n)`).
    pub fn mass_matrix(&self, rule: &PolygonRule, n: usize) -> DMatrix<f64> {
        let mut h = DMatrix::zeros(n, n);
        let mut vals = vec![0.0; self.len()];
        for (q, &w) in rule.nodes.iter().zip(&rule.weights) {
            self.eval_all(*q, &mut vals);
            for i in 0..n {
                let wi = w * vals[i];
                for j in i..n {
                    h[(i, j)] += wi * vals[j];
                }
            }
        }
        // Symmetrize from the upper triangle.
        for i in 0..n {
            for j in 0..i {
                h[(i, j)] = h[(j, i)];
            }
        }
        h
    }
}
