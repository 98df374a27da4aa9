//! Gauss-Legendre quadrature with adaptive panel subdivision, plus a
//! trapezoid rule for periodic integrands. These back the wavefunction
//! normalization checks.

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// computed by Newton iteration on the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P'_n(x)
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// A fixed Gauss-Legendre rule mapped onto an arbitrary interval.
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    pub fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        Self { nodes, weights }
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }
}

/// Adaptive Gauss-Legendre integration of `f` over `[a, b]` to absolute
/// tolerance `abs_tol`. The interval starts from 32 uniform panels (so
/// features much narrower than the interval cannot hide between the nodes
/// of a single top-level rule) and each panel is bisected until its
/// 20-point estimate agrees with the sum of its two halves.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, abs_tol: f64) -> f64 {
    let rule = GaussRule::new(20);
    let initial = 32;
    let width = (b - a) / initial as f64;
    let mut acc = 0.0;
    for i in 0..initial {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == initial { b } else { lo + width };
        let whole = rule.integrate(lo, hi, &mut f);
        acc += adaptive(&rule, &mut f, lo, hi, whole, abs_tol / initial as f64, 42);
    }
    acc
}

fn adaptive<F: FnMut(f64) -> f64>(
    rule: &GaussRule,
    f: &mut F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let mid = 0.5 * (a + b);
    let left = rule.integrate(a, mid, &mut *f);
    let right = rule.integrate(mid, b, &mut *f);
    let err = (left + right - whole).abs();
    if err <= tol || depth == 0 {
        return left + right;
    }
    adaptive(rule, f, a, mid, left, tol / 2.0, depth - 1)
        + adaptive(rule, f, mid, b, right, tol / 2.0, depth - 1)
}

/// Trapezoid rule over one period of a periodic integrand, which converges
/// spectrally for smooth periodic functions.
pub fn trapezoid_periodic<F: FnMut(f64) -> f64>(mut f: F, period: f64, n: usize) -> f64 {
    let h = period / n as f64;
    (0..n).map(|i| f(i as f64 * h)).sum::<f64>() * h
}
