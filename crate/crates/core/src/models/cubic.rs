//! The ground-state cubic in `y = tanh(sigma hbar)`:
//!
//! ```text
//! (w/2 - 2 rho^2) y^3 + rho (4 - w) y^2 - (w + 2) y + 2 rho w = 0
//! ```

use num_complex::Complex64;

/// Leading coefficients below this (relative to the others) take the
/// quadratic path.
const DEGENERATE: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq)]
pub struct CubicRoots {
    pub roots: Vec<Complex64>,
    /// Set when the cubic term vanished and the quadratic was solved.
    pub degenerate: bool,
}

/// Coefficients highest degree first.
pub fn cubic_coefficients(rho: f64, omega: f64) -> [f64; 4] {
    [
        omega / 2.0 - 2.0 * rho * rho,
        rho * (4.0 - omega),
        -(omega + 2.0),
        2.0 * rho * omega,
    ]
}

pub fn eval_poly(c: &[f64], y: Complex64) -> Complex64 {
    c.iter().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * y + k)
}

/// `|p(y)|` divided by the size of its largest term.
pub fn relative_residual(c: &[f64], y: Complex64) -> f64 {
    let n = c.len() - 1;
    let scale = c
        .iter()
        .enumerate()
        .map(|(i, k)| k.abs() * y.norm().powi((n - i) as i32))
        .fold(0.0, f64::max);
    let v = eval_poly(c, y).norm();
    if scale == 0.0 {
        v
    } else {
        v / scale
    }
}

/// All roots of a real polynomial by Aberth iteration.
pub fn aberth(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = c[0];
    let monic: Vec<f64> = c.iter().map(|k| k / lead).collect();
    let deriv: Vec<f64> = monic[..n]
        .iter()
        .enumerate()
        .map(|(i, k)| k * (n - i) as f64)
        .collect();
    let bound = 1.0 + monic[1..].iter().map(|k| k.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let p = eval_poly(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / eval_poly(&deriv, z[i]);
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-17 {
            break;
        }
    }
    z
}

fn quadratic(a: f64, b: f64, c: f64) -> Vec<Complex64> {
    if a == 0.0 {
        return if b == 0.0 { Vec::new() } else { vec![Complex64::new(-c / b, 0.0)] };
    }
    let d = Complex64::new(b * b - 4.0 * a * c, 0.0).sqrt();
    // avoid cancellation: q = -(b + sign(b) sqrt(d)) / 2
    let q = if b >= 0.0 { -(b + d) / 2.0 } else { -(b - d) / 2.0 };
    if q.norm() == 0.0 {
        return vec![Complex64::new(0.0, 0.0); 2];
    }
    vec![q / a, c / q]
}

/// Roots of the cubic, real roots first and sorted.
pub fn schrodinger_cubic_roots(rho: f64, omega: f64) -> CubicRoots {
    let c = cubic_coefficients(rho, omega);
    let rest = c[1..].iter().map(|k| k.abs()).fold(0.0, f64::max);
    let degenerate = c[0].abs() <= DEGENERATE * rest;
    let mut roots = if degenerate {
        quadratic(c[1], c[2], c[3])
    } else {
        let mut z = aberth(&c);
        for r in &mut z {
            if r.im.abs() < 1e-12 * (1.0 + r.re.abs()) {
                *r = Complex64::new(r.re, 0.0);
            }
        }
        z
    };
    roots.sort_by(|a, b| {
        (a.im != 0.0)
            .cmp(&(b.im != 0.0))
            .then(a.re.total_cmp(&b.re))
            .then(a.im.total_cmp(&b.im))
    });
    CubicRoots { roots, degenerate }
}
