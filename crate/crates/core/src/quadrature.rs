//! Composite Gauss–Legendre quadrature.

use std::f64::consts::PI;

/// Nodes per panel.
pub const PANEL_ORDER: usize = 8;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let m = order.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(order, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes and weights of a composite rule on `[a, b]`.
#[derive(Debug, Clone)]
pub struct CompositeRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl CompositeRule {
    pub fn new(a: f64, b: f64, panels: usize) -> Self {
        let (x, w) = gauss_legendre(PANEL_ORDER);
        let h = (b - a) / panels as f64;
        let mut nodes = Vec::with_capacity(panels * PANEL_ORDER);
        let mut weights = Vec::with_capacity(panels * PANEL_ORDER);
        for p in 0..panels {
            let mid = a + (p as f64 + 0.5) * h;
            for (xi, wi) in x.iter().zip(&w) {
                nodes.push(mid + 0.5 * h * xi);
                weights.push(0.5 * h * wi);
            }
        }
        Self { nodes, weights }
    }

    /// Symmetric rule on `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64, panels: usize) -> Self {
        Self::new(-half_width, half_width, panels)
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// The modular-flow kernel `1 / cosh(pi s)`.
pub fn sech_pi(s: f64) -> f64 {
    1.0 / (PI * s).cosh()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_polynomials() {
        let (x, w) = gauss_legendre(PANEL_ORDER);
        // exact through degree 15
        let int: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(14)).sum();
        assert!((int - 2.0 / 15.0).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn sech_kernel_integrates_to_one() {
        let rule = CompositeRule::symmetric(8.0, 256);
        let v = rule.integrate(sech_pi);
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn fourier_transform_of_kernel() {
        // ∫ e^{iks} / cosh(pi s) ds = 1 / cosh(k/2)
        let rule = CompositeRule::symmetric(8.0, 256);
        for k in [0.5, 3.0, 9.0] {
            let v = rule.integrate(|s| (k * s).cos() * sech_pi(s));
            assert!((v - 1.0 / (k / 2.0).cosh()).abs() < 1e-10, "k={k}");
        }
    }
}
