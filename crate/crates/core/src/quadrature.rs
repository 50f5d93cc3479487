//! Quadrature rules on intervals, the unit disk, and the unit ball.
//!
//! All Galerkin integrals in this crate are evaluated with the product rules
//! built here: a tensor rule on the disk combining a radial Gauss-Legendre
//! rule with a trapezoidal rule in the angle, and its three dimensional
//! analogue combining an r^2-weighted radial Gauss rule, a Gauss rule in the
//! polar direction (with cos(polar) as the variable, absorbing the sin
//! factor), and a trapezoidal rule in the azimuth.

use std::f64::consts::PI;
use std::io::Write;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Nodes and weights of a one dimensional rule. The interval and weight
/// function are fixed by the constructor that produced the rule.
#[derive(Debug, Clone)]
pub struct Rule1D {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule1D {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Weighted sum of `f` over the nodes.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Product rule on the open unit ball in two or three dimensions.
///
/// Nodes are stored row major, `dim` coordinates per node.
#[derive(Debug, Clone)]
pub struct BallRule {
    pub dim: usize,
    pub q: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl BallRule {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i * self.dim..(i + 1) * self.dim]
    }

    pub fn integrate(&self, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
        (0..self.len()).map(|i| self.weights[i] * f(self.node(i))).sum()
    }

    /// CSV dump: `x1[,x2[,x3]],weight` with 17 significant digits.
    pub fn write_csv(&self, out: &mut impl Write) -> Result<()> {
        let coords = ["x1", "x2", "x3"];
        writeln!(out, "{},weight", coords[..self.dim].join(","))?;
        for i in 0..self.len() {
            for c in self.node(i) {
                write!(out, "{:.16e},", c)?;
            }
            writeln!(out, "{:.16e}", self.weights[i])?;
        }
        Ok(())
    }
}

/// Legendre polynomial of degree `m` and its derivative at `x`.
fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // (1 - x^2) P_m' = m (P_{m-1} - x P_m)
    let dp = m as f64 * (p0 - x * p1) / (1.0 - x * x);
    (p1, dp)
}

/// `m`-point Gauss-Legendre rule on `[a, b]`.
///
/// Nodes are the Legendre roots found by Newton iteration from Chebyshev
/// initial guesses; exact for polynomials of degree <= 2m - 1.
pub fn gauss_legendre(m: usize, a: f64, b: f64) -> Result<Rule1D> {
    if m == 0 {
        return Err(Error::invalid("gauss_legendre requires m >= 1"));
    }
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::invalid("gauss_legendre requires a finite interval a < b"));
    }
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    // Roots come in +/- pairs; compute the non-negative half and mirror so
    // the rule is exactly symmetric.
    for i in 0..m.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (p, d) = legendre_with_derivative(m, x);
                dp = d;
                x -= p / d;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x.abs();
        nodes[m - 1 - i] = x.abs();
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    // Map [-1, 1] onto [a, b].
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    for i in 0..m {
        nodes[i] = mid + half * nodes[i];
        weights[i] *= half;
    }
    Ok(Rule1D { nodes, weights })
}

fn ln_gamma(x: f64) -> f64 {
    // Lanczos approximation, g = 7, 9 terms.
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    let x = x - 1.0;
    let mut s = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + s.ln()
}

/// `m`-point Gauss-Jacobi rule on `[-1, 1]` for the weight
/// `(1 - t)^alpha (1 + t)^beta`, via Golub-Welsch on the three-term
/// recurrence of the monic Jacobi polynomials.
pub fn gauss_jacobi(m: usize, alpha: f64, beta: f64) -> Result<Rule1D> {
    if m == 0 {
        return Err(Error::invalid("gauss_jacobi requires m >= 1"));
    }
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::invalid("gauss_jacobi requires alpha, beta > -1"));
    }
    let mu0 = if alpha == 0.0 {
        2f64.powf(beta + 1.0) / (beta + 1.0)
    } else if beta == 0.0 {
        2f64.powf(alpha + 1.0) / (alpha + 1.0)
    } else {
        ((alpha + beta + 1.0) * 2f64.ln() + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
            - ln_gamma(alpha + beta + 2.0))
        .exp()
    };
    let ab = alpha + beta;
    let mut jac = DMatrix::<f64>::zeros(m, m);
    for k in 0..m {
        let kf = k as f64;
        let diag = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        jac[(k, k)] = diag;
        if k + 1 < m {
            let k1 = kf + 1.0;
            let b = 4.0 * k1 * (k1 + alpha) * (k1 + beta) * (k1 + ab)
                / ((2.0 * k1 + ab).powi(2) * (2.0 * k1 + ab + 1.0) * (2.0 * k1 + ab - 1.0));
            let off = b.sqrt();
            jac[(k, k + 1)] = off;
            jac[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(jac);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let nodes = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let weights = order
        .iter()
        .map(|&i| mu0 * eig.eigenvectors[(0, i)].powi(2))
        .collect();
    Ok(Rule1D { nodes, weights })
}

/// `q`-point Gauss rule on `[0, 1]` for the weight r^2:
/// `sum nu_k p(r_k) = int_0^1 r^2 p(r) dr` exactly for `deg p <= 2q - 1`.
///
/// Built from the Jacobi(0, 2) rule on `[-1, 1]` with nodes mapped by
/// `r = (zeta + 1) / 2`.
pub fn radial_r2_rule(q: usize) -> Result<Rule1D> {
    if q == 0 {
        return Err(Error::invalid("radial_r2_rule requires q >= 1"));
    }
    let jac = gauss_jacobi(q, 0.0, 2.0)?;
    let nodes = jac.nodes.iter().map(|&z| 0.5 * (z + 1.0)).collect();
    let weights = jac.weights.iter().map(|&w| w / 8.0).collect();
    Ok(Rule1D { nodes, weights })
}

/// Product rule on the unit disk with `(q + 1)(2q + 1)` nodes, exact for
/// all polynomials of total degree <= 2q.
///
/// Radial: `(q + 1)`-point Gauss-Legendre on `[0, 1]` with the extra factor
/// `r_l` folded into the weight; azimuthal: trapezoidal rule with `2q + 1`
/// equispaced angles.
pub fn disk_rule(q: usize) -> Result<BallRule> {
    if q == 0 {
        return Err(Error::invalid("disk_rule requires q >= 1"));
    }
    let radial = gauss_legendre(q + 1, 0.0, 1.0)?;
    let n_theta = 2 * q + 1;
    let w_theta = 2.0 * PI / n_theta as f64;
    let mut nodes = Vec::with_capacity(2 * radial.len() * n_theta);
    let mut weights = Vec::with_capacity(radial.len() * n_theta);
    for (&r, &wr) in radial.nodes.iter().zip(&radial.weights) {
        for m in 0..n_theta {
            let theta = w_theta * m as f64;
            nodes.push(r * theta.cos());
            nodes.push(r * theta.sin());
            weights.push(wr * w_theta * r);
        }
    }
    Ok(BallRule { dim: 2, q, nodes, weights })
}

/// Product rule on the unit ball with `2 q^3` nodes, exact for all
/// polynomials of total degree <= 2q - 1.
///
/// Radial: [`radial_r2_rule`] (the r^2 factor folded in); polar: `q`-point
/// Gauss-Legendre in `cos(polar)` (the sin factor folded in); azimuthal:
/// trapezoidal rule with `2q` equispaced angles of weight `pi / q`.
pub fn ball_rule(q: usize) -> Result<BallRule> {
    if q == 0 {
        return Err(Error::invalid("ball_rule requires q >= 1"));
    }
    let radial = radial_r2_rule(q)?;
    let polar = gauss_legendre(q, -1.0, 1.0)?;
    let n_theta = 2 * q;
    let w_theta = PI / q as f64;
    let mut nodes = Vec::with_capacity(3 * n_theta * q * q);
    let mut weights = Vec::with_capacity(n_theta * q * q);
    for i in 1..=n_theta {
        let theta = w_theta * i as f64;
        let (sin_t, cos_t) = theta.sin_cos();
        for (&xi, &wj) in polar.nodes.iter().zip(&polar.weights) {
            let cos_p = xi;
            let sin_p = (1.0 - xi * xi).sqrt();
            for (&r, &nk) in radial.nodes.iter().zip(&radial.weights) {
                nodes.push(r * sin_p * cos_t);
                nodes.push(r * sin_p * sin_t);
                nodes.push(r * cos_p);
                weights.push(w_theta * wj * nk);
            }
        }
    }
    Ok(BallRule { dim: 3, q, nodes, weights })
}
