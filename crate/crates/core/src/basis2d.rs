//! Ridge-polynomial orthonormal basis of `Pi_n` on the unit disk and the
//! bubble basis derived from it.
//!
//! The degree-m block consists of `U_m(x . (cos kh, sin kh)) / sqrt(pi)` for
//! `k = 0..m` with `h = pi / (m + 1)`, where `U_m` is the Chebyshev
//! polynomial of the second kind. Blocks are stacked lexicographically in
//! `(m, k)`.

use crate::basis::BubbleBasis;

/// Values and derivatives `U_0..U_n`, `U_0'..U_n'` at one argument.
#[derive(Debug, Clone)]
pub struct ChebyshevEval {
    pub values: Vec<f64>,
    pub derivatives: Vec<f64>,
}

/// Number of basis functions of `Pi_n(B_2)`.
pub fn basis_len(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// Flat index of the `(m, k)` basis function, `0 <= k <= m <= n`.
pub fn index2d(m: usize, k: usize) -> usize {
    debug_assert!(k <= m);
    m * (m + 1) / 2 + k
}

/// Inverse of [`index2d`].
pub fn unindex2d(idx: usize) -> (usize, usize) {
    let mut m = 0;
    while (m + 1) * (m + 2) / 2 <= idx {
        m += 1;
    }
    (m, idx - m * (m + 1) / 2)
}

/// Arguments just past `[-1, 1]` from rounding are pulled back onto the
/// interval; anything further is evaluated as the polynomial it is.
fn clamp_arg(t: f64) -> f64 {
    if t > 1.0 && t <= 1.0 + 1e-12 {
        1.0
    } else if t < -1.0 && t >= -1.0 - 1e-12 {
        -1.0
    } else {
        t
    }
}

/// `(U_n(t), U_n'(t))` by the triple recursion, without allocating.
fn chebyshev_u_scalar(n: usize, t: f64) -> (f64, f64) {
    let t = clamp_arg(t);
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut u_prev = 1.0;
    let mut u = 2.0 * t;
    let mut du_prev = 0.0;
    let mut du = 2.0;
    for _ in 2..=n {
        let u_next = 2.0 * t * u - u_prev;
        let du_next = 2.0 * u + 2.0 * t * du - du_prev;
        u_prev = u;
        u = u_next;
        du_prev = du;
        du = du_next;
    }
    (u, du)
}

/// Chebyshev polynomials of the second kind `U_0..U_n` and derivatives at
/// `t`, seeded `U_0 = 1`, `U_1 = 2t`, `U_0' = 0`, `U_1' = 2`.
pub fn chebyshev_u(n: usize, t: f64) -> ChebyshevEval {
    let t = clamp_arg(t);
    let mut values = Vec::with_capacity(n + 1);
    let mut derivatives = Vec::with_capacity(n + 1);
    values.push(1.0);
    derivatives.push(0.0);
    if n >= 1 {
        values.push(2.0 * t);
        derivatives.push(2.0);
    }
    for k in 2..=n {
        values.push(2.0 * t * values[k - 1] - values[k - 2]);
        derivatives.push(2.0 * values[k - 1] + 2.0 * t * derivatives[k - 1] - derivatives[k - 2]);
    }
    ChebyshevEval { values, derivatives }
}

/// Ridge basis values at `x`, lexicographic `(m, k)` order.
pub fn ridge_basis(n: usize, x: [f64; 2]) -> Vec<f64> {
    let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
    let mut out = Vec::with_capacity(basis_len(n));
    for m in 0..=n {
        let h = std::f64::consts::PI / (m as f64 + 1.0);
        for k in 0..=m {
            let (c, s) = (h * k as f64).cos_sin();
            let t = x[0] * c + x[1] * s;
            out.push(inv_sqrt_pi * chebyshev_u_scalar(m, t).0);
        }
    }
    out
}

/// Bubble basis `(1 - |x|^2) phi` with gradients
/// `(1 - |x|^2) grad phi - 2 x phi`.
pub fn bubble_basis(n: usize, x: [f64; 2]) -> (Vec<f64>, Vec<[f64; 2]>) {
    let len = basis_len(n);
    let mut values = vec![0.0; len];
    let mut grad_flat = vec![0.0; 2 * len];
    Basis2d::new(n).values_gradients_into(&x, &mut values, &mut grad_flat);
    let gradients = grad_flat.chunks_exact(2).map(|g| [g[0], g[1]]).collect();
    (values, gradients)
}

trait CosSin {
    fn cos_sin(self) -> (f64, f64);
}

impl CosSin for f64 {
    fn cos_sin(self) -> (f64, f64) {
        (self.cos(), self.sin())
    }
}

/// The degree-n bubble basis on the unit disk.
#[derive(Debug, Clone, Copy)]
pub struct Basis2d {
    degree: usize,
}

impl Basis2d {
    pub fn new(degree: usize) -> Self {
        Basis2d { degree }
    }
}

impl BubbleBasis for Basis2d {
    fn dim(&self) -> usize {
        2
    }

    fn degree(&self) -> usize {
        self.degree
    }

    fn len(&self) -> usize {
        basis_len(self.degree)
    }

    fn ordering(&self) -> String {
        "lexicographic (m,k) with 0 <= k <= m: index = m*(m+1)/2 + k".to_string()
    }

    fn values_into(&self, x: &[f64], values: &mut [f64]) {
        debug_assert_eq!(values.len(), self.len());
        let bubble = 1.0 - (x[0] * x[0] + x[1] * x[1]);
        let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
        let mut idx = 0;
        for m in 0..=self.degree {
            let h = std::f64::consts::PI / (m as f64 + 1.0);
            for k in 0..=m {
                let (c, s) = (h * k as f64).cos_sin();
                let t = x[0] * c + x[1] * s;
                values[idx] = bubble * inv_sqrt_pi * chebyshev_u_scalar(m, t).0;
                idx += 1;
            }
        }
    }

    fn values_gradients_into(&self, x: &[f64], values: &mut [f64], gradients: &mut [f64]) {
        debug_assert_eq!(values.len(), self.len());
        debug_assert_eq!(gradients.len(), 2 * self.len());
        let bubble = 1.0 - (x[0] * x[0] + x[1] * x[1]);
        let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
        let mut idx = 0;
        for m in 0..=self.degree {
            let h = std::f64::consts::PI / (m as f64 + 1.0);
            for k in 0..=m {
                let (c, s) = (h * k as f64).cos_sin();
                let t = x[0] * c + x[1] * s;
                let (u, du) = chebyshev_u_scalar(m, t);
                let phi = inv_sqrt_pi * u;
                let dphi = inv_sqrt_pi * du;
                values[idx] = bubble * phi;
                gradients[2 * idx] = bubble * dphi * c - 2.0 * x[0] * phi;
                gradients[2 * idx + 1] = bubble * dphi * s - 2.0 * x[1] * phi;
                idx += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::disk_rule;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};

    #[test]
    fn chebyshev_low_degree_closed_forms() {
        assert_abs_diff_eq!(chebyshev_u(1, 0.3).values[1], 0.6, epsilon = 1e-15);
        // U_2 = 4t^2 - 1 vanishes at t = 1/2
        assert_abs_diff_eq!(chebyshev_u(2, 0.5).values[2], 0.0, epsilon = 1e-15);
        // U_2' = 8t
        assert_abs_diff_eq!(chebyshev_u(2, 1.0).derivatives[2], 8.0, epsilon = 1e-15);
    }

    #[test]
    fn chebyshev_recursion_residual_and_endpoint() {
        for &t in &[-1.0, -0.73, 0.0, 0.41, 1.0] {
            let e = chebyshev_u(12, t);
            for n in 1..12 {
                let residual = e.values[n + 1] - (2.0 * t * e.values[n] - e.values[n - 1]);
                assert!(residual.abs() < 1e-12);
            }
        }
        let e = chebyshev_u(15, 1.0);
        for n in 0..=15 {
            assert_abs_diff_eq!(e.values[n], (n + 1) as f64, epsilon = 1e-10);
        }
    }

    #[test]
    fn slight_overshoot_is_clamped() {
        let inside = chebyshev_u(9, 1.0);
        let outside = chebyshev_u(9, 1.0 + 1e-13);
        assert_eq!(inside.values, outside.values);
    }

    #[test]
    fn index_map_is_a_bijection() {
        for idx in 0..basis_len(9) {
            let (m, k) = unindex2d(idx);
            assert!(k <= m && m <= 9);
            assert_eq!(index2d(m, k), idx);
        }
    }

    #[test]
    fn first_ridge_function_is_constant() {
        for &x in &[[0.0, 0.0], [0.3, -0.4], [1.0, 0.0]] {
            let v = ridge_basis(5, x);
            assert_abs_diff_eq!(v[0], 1.0 / std::f64::consts::PI.sqrt(), epsilon = 1e-15);
        }
        assert_eq!(ridge_basis(3, [0.1, 0.2]).len(), 10);
    }

    #[test]
    fn ridge_gram_matrix_is_identity() {
        for n in [4usize, 10] {
            let rule = disk_rule(n + 1).unwrap();
            let len = basis_len(n);
            let mut gram = vec![0.0; len * len];
            for i in 0..rule.len() {
                let p = rule.node(i);
                let v = ridge_basis(n, [p[0], p[1]]);
                let w = rule.weights[i];
                for a in 0..len {
                    for b in a..len {
                        gram[a * len + b] += w * v[a] * v[b];
                    }
                }
            }
            for a in 0..len {
                for b in a..len {
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (gram[a * len + b] - expect).abs() < 1e-11,
                        "n={n} gram[{a},{b}] = {}",
                        gram[a * len + b]
                    );
                }
            }
        }
    }

    #[test]
    fn degree_blocks_are_orthogonal_to_lower_monomials() {
        // Each block m spans degree-m polynomials orthogonal to Pi_{m-1}.
        let n = 6;
        let rule = disk_rule(n + 1).unwrap();
        for m in 1..=n {
            for k in 0..=m {
                let idx = index2d(m, k);
                for i in 0..m {
                    for j in 0..(m - i) {
                        let mut ip = 0.0;
                        for node in 0..rule.len() {
                            let p = rule.node(node);
                            let v = ridge_basis(n, [p[0], p[1]])[idx];
                            ip += rule.weights[node] * v * p[0].powi(i as i32) * p[1].powi(j as i32);
                        }
                        assert!(ip.abs() < 1e-11, "block {m} vs monomial ({i},{j}): {ip}");
                    }
                }
            }
        }
    }

    #[test]
    fn bubble_vanishes_on_the_circle() {
        for j in 0..360 {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / 360.0;
            let (v, _) = bubble_basis(6, [theta.cos(), theta.sin()]);
            assert!(v.iter().all(|&y| y.abs() < 1e-14));
        }
    }

    #[test]
    fn constant_mode_gradient_is_radial() {
        // grad psi_{0,0} = -2 x / sqrt(pi)
        let x = [0.37, -0.18];
        let (_, g) = bubble_basis(4, x);
        let scale = -2.0 / std::f64::consts::PI.sqrt();
        assert_abs_diff_eq!(g[0][0], scale * x[0], epsilon = 1e-14);
        assert_abs_diff_eq!(g[0][1], scale * x[1], epsilon = 1e-14);
    }

    #[test]
    fn gradients_match_central_differences() {
        let n = 8;
        let len = basis_len(n);
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x2d_17);
        let h = 1e-6;
        for _ in 0..50 {
            let theta = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
            let r = 0.95 * rng.gen::<f64>().sqrt();
            let x = [r * theta.cos(), r * theta.sin()];
            let (_, g) = bubble_basis(n, x);
            for axis in 0..2 {
                let mut xp = x;
                let mut xm = x;
                xp[axis] += h;
                xm[axis] -= h;
                let (vp, _) = bubble_basis(n, xp);
                let (vm, _) = bubble_basis(n, xm);
                for i in 0..len {
                    let fd = (vp[i] - vm[i]) / (2.0 * h);
                    assert!(
                        (g[i][axis] - fd).abs() < 1e-6,
                        "basis {i} axis {axis}: {} vs {}",
                        g[i][axis],
                        fd
                    );
                }
            }
        }
    }
}
