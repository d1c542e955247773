//! Numeric action of the derivatives on functions of `(tau, x)` only.
//!
//! On this commutative subalgebra the first-order derivatives act by shifts:
//!
//! ```text
//! dtau~ h = [h(t+hb, x+hb) + h(t+hb, x-hb)] / (2 hb)
//! dx    h = [h(t+hb, x+hb) - h(t+hb, x-hb)] / (2 hb)
//! dy h = dz h = 0
//! ```
//!
//! Higher-order operators are compositions, which is how plane waves and the
//! permutation formulas for `f(x)` and `f(tau)` are checked on sampled data.

use std::sync::Arc;

use num_complex::Complex64;

pub type PlaneFn = Arc<dyn Fn(f64, f64) -> Complex64 + Send + Sync>;

pub fn plane<F: Fn(f64, f64) -> Complex64 + Send + Sync + 'static>(f: F) -> PlaneFn {
    Arc::new(f)
}

pub fn dtau_tilde(g: &PlaneFn, hb: f64) -> PlaneFn {
    let g = g.clone();
    Arc::new(move |t, x| (g(t + hb, x + hb) + g(t + hb, x - hb)) / (2.0 * hb))
}

pub fn dtau(g: &PlaneFn, hb: f64) -> PlaneFn {
    let g = g.clone();
    let s = dtau_tilde(&g, hb);
    Arc::new(move |t, x| s(t, x) - g(t, x) / hb)
}

pub fn dx(g: &PlaneFn, hb: f64) -> PlaneFn {
    let g = g.clone();
    Arc::new(move |t, x| (g(t + hb, x + hb) - g(t + hb, x - hb)) / (2.0 * hb))
}

pub fn zero() -> PlaneFn {
    Arc::new(|_, _| Complex64::new(0.0, 0.0))
}

pub fn add(a: &PlaneFn, b: &PlaneFn) -> PlaneFn {
    let (a, b) = (a.clone(), b.clone());
    Arc::new(move |t, x| a(t, x) + b(t, x))
}

pub fn sub(a: &PlaneFn, b: &PlaneFn) -> PlaneFn {
    let (a, b) = (a.clone(), b.clone());
    Arc::new(move |t, x| a(t, x) - b(t, x))
}

pub fn mul(a: &PlaneFn, b: &PlaneFn) -> PlaneFn {
    let (a, b) = (a.clone(), b.clone());
    Arc::new(move |t, x| a(t, x) * b(t, x))
}

pub fn scale(a: &PlaneFn, s: Complex64) -> PlaneFn {
    let a = a.clone();
    Arc::new(move |t, x| a(t, x) * s)
}

/// `h(t + a hb, x + b hb)` as a new function.
pub fn shifted(g: &PlaneFn, hb: f64, a: f64, b: f64) -> PlaneFn {
    let g = g.clone();
    Arc::new(move |t, x| g(t + a * hb, x + b * hb))
}

/// Laplacian on this subalgebra; only the `dx^2` part survives.
pub fn laplacian(g: &PlaneFn, hb: f64) -> PlaneFn {
    dx(&dx(g, hb), hb)
}
