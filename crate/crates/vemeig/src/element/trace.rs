//! Degree-k polynomial traces on edges, reconstructed from edge DoFs.
//!
//! On every edge a virtual function restricts to a polynomial of degree `k`,
//! uniquely determined by its `k + 1` edge DoFs: the two endpoint values and
//! the `k - 1` scaled moments `∫₀¹ v(t) (t - 1/2)^j dt`, `j = 0..k-2`, where
//! `t` parameterizes the edge in its DoF orientation and `(t - 1/2)^j` is the
//! midpoint-centered monomial scaled by the edge length.
//!
//! The reconstruction is expressed in the shifted Legendre basis
//! `L_l(t) = P_l(2t - 1)`; the monomial alternative becomes visibly
//! ill-conditioned by degree 4.

use nalgebra::DMatrix;

use crate::quadrature::gauss_legendre;

/// Evaluate the shifted Legendre polynomial `L_l(t) = P_l(2t - 1)` on `[0,1]`.
pub fn legendre_shifted(l: usize, t: f64) -> f64 {
    let x = 2.0 * t - 1.0;
    let mut p0 = 1.0;
    if l == 0 {
        return p0;
    }
    let mut p1 = x;
    for j in 2..=l {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Dual (cardinal) basis of the edge DoFs in the degree-k trace space.
///
/// `dual(r, t)` is the unique degree-k polynomial whose DoF vector is the
/// r-th unit vector, with DoFs ordered: value at `t=0`, value at `t=1`, then
/// moments `j = 0..k-2`. Traces of arbitrary DoF vectors are linear
/// combinations of these cardinal functions.
#[derive(Debug, Clone)]
pub struct EdgeTraceBasis {
    k: usize,
    /// `coeff[(l, r)]`: Legendre coefficient `l` of the r-th cardinal function.
    coeff: DMatrix<f64>,
}

impl EdgeTraceBasis {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1);
        let n = k + 1;
        // Rows: DoF functionals applied to the Legendre basis.
        let mut m = DMatrix::zeros(n, n);
        for l in 0..n {
            m[(0, l)] = if l % 2 == 0 { 1.0 } else { -1.0 }; // L_l(0) = (-1)^l
            m[(1, l)] = 1.0; // L_l(1) = 1
        }
        if k >= 2 {
            // Moment rows, integrated exactly (integrands have degree <= 2k-2).
            let rule = gauss_legendre(k + 1);
            for j in 0..k - 1 {
                for l in 0..n {
                    let mut v = 0.0;
                    for &(x, w) in &rule {
                        let t = 0.5 * (x + 1.0);
                        v += 0.5 * w * legendre_shifted(l, t) * (t - 0.5).powi(j as i32);
                    }
                    m[(2 + j, l)] = v;
                }
            }
        }
        let coeff = m
            .lu()
            .try_inverse()
            .expect("edge DoFs are unisolvent on P_k(e) for every k >= 1");
        Self { k, coeff }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.k
    }

    /// Number of edge DoFs (`k + 1`).
    #[inline]
    pub fn n_dofs(&self) -> usize {
        self.k + 1
    }

    /// Evaluate all cardinal functions at parameter `t` into `out`.
    pub fn eval_duals(&self, t: f64, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.k + 1);
        let mut leg = vec![0.0; self.k + 1];
        for (l, v) in leg.iter_mut().enumerate() {
            *v = legendre_shifted(l, t);
        }
        for (r, o) in out.iter_mut().enumerate() {
            *o = (0..=self.k).map(|l| self.coeff[(l, r)] * leg[l]).sum();
        }
    }

    /// Evaluate the trace with DoF vector `dofs` at parameter `t`.
    pub fn eval(&self, dofs: &[f64], t: f64) -> f64 {
        debug_assert_eq!(dofs.len(), self.k + 1);
        let mut duals = vec![0.0; self.k + 1];
        self.eval_duals(t, &mut duals);
        duals.iter().zip(dofs).map(|(d, v)| d * v).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linear_ramp() {
        let basis = EdgeTraceBasis::new(1);
        // Endpoint values 0, 1 -> v(t) = t.
        let dofs = [0.0, 1.0];
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            assert_relative_eq!(basis.eval(&dofs, t), t, epsilon = 1e-14);
        }
    }

    #[test]
    fn quadratic_bubble_roundtrip() {
        let basis = EdgeTraceBasis::new(2);
        // Endpoints 0, 0, average 1 -> v(t) = 6 t (1 - t).
        let dofs = [0.0, 0.0, 1.0];
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            assert_relative_eq!(basis.eval(&dofs, t), 6.0 * t * (1.0 - t), epsilon = 1e-13);
        }
        // Round-trip: re-extract the DoFs from the reconstructed polynomial.
        let rule = gauss_legendre(4);
        let avg: f64 = rule
            .iter()
            .map(|&(x, w)| 0.5 * w * basis.eval(&dofs, 0.5 * (x + 1.0)))
            .sum();
        assert_relative_eq!(avg, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn cardinal_property_up_to_k4() {
        for k in 1..=4 {
            let basis = EdgeTraceBasis::new(k);
            let rule = gauss_legendre(k + 2);
            for r in 0..=k {
                // DoFs of the r-th cardinal function must be the unit vector.
                let unit: Vec<f64> = (0..=k).map(|s| if s == r { 1.0 } else { 0.0 }).collect();
                // endpoint DoFs
                assert_relative_eq!(basis.eval(&unit, 0.0), unit[0] * 1.0 + 0.0, epsilon = 1e-12);
                let v0 = basis.eval(&unit, 0.0);
                let v1 = basis.eval(&unit, 1.0);
                assert_relative_eq!(v0, if r == 0 { 1.0 } else { 0.0 }, epsilon = 1e-12);
                assert_relative_eq!(v1, if r == 1 { 1.0 } else { 0.0 }, epsilon = 1e-12);
                // moment DoFs
                for j in 0..k.saturating_sub(1) {
                    let m: f64 = rule
                        .iter()
                        .map(|&(x, w)| {
                            let t = 0.5 * (x + 1.0);
                            0.5 * w * basis.eval(&unit, t) * (t - 0.5).powi(j as i32)
                        })
                        .sum();
                    let want = if r == 2 + j { 1.0 } else { 0.0 };
                    assert_relative_eq!(m, want, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn reconstructs_global_polynomial_traces() {
        // Trace of p(t) = 3 - 2t + t^3 on an edge, k = 3: reconstruct from
        // its DoFs and compare on sample points.
        let p = |t: f64| 3.0 - 2.0 * t + t * t * t;
        let k = 3;
        let basis = EdgeTraceBasis::new(k);
        let rule = gauss_legendre(k + 1);
        let mut dofs = vec![p(0.0), p(1.0)];
        for j in 0..k - 1 {
            dofs.push(
                rule.iter()
                    .map(|&(x, w)| {
                        let t = 0.5 * (x + 1.0);
                        0.5 * w * p(t) * (t - 0.5).powi(j as i32)
                    })
                    .sum(),
            );
        }
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            assert_relative_eq!(basis.eval(&dofs, t), p(t), epsilon = 1e-12);
        }
    }
}
