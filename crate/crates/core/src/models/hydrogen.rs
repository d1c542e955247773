//! Ground state `f_E(tau) exp(-sigma r)` of `(a dtau + b Delta + q / r) psi = 0`.
//!
//! Substituting the ansatz and collecting powers of `r` gives
//!
//! ```text
//! a E + 2 a xi sinh^2(s/2) / hbar + b xi^2 sinh^2(s) / hbar^2 = 0
//! a xi sinh(s) + b xi^2 sinh(2s) / hbar - q = 0
//! ```
//!
//! with `s = sigma hbar` and `xi = 1 + hbar E`. Eliminating `xi` leaves a
//! cubic in `y = tanh(s)`; see [`super::cubic`].

use num_complex::Complex64;
use serde::Serialize;

use super::cubic::{schrodinger_cubic_roots, CubicRoots};
use crate::central::function::{self as cf, CentralFunction};
use crate::error::{Error, Result};

/// `sinh(s) / s`
fn sinhc(s: f64) -> f64 {
    if s.abs() < 1e-8 {
        1.0 + s * s / 6.0
    } else {
        s.sinh() / s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroundState {
    pub a: f64,
    pub b: f64,
    pub q: f64,
    pub hbar: f64,
    pub sigma: f64,
    #[serde(rename = "E")]
    pub e: f64,
    pub rho: f64,
    pub omega: f64,
    pub y: f64,
    pub xi: f64,
    /// Relative residuals of the two lines of the system.
    pub residuals: [f64; 2],
    /// Every root of the cubic; only `y` has a known meaning.
    #[serde(skip)]
    pub cubic: Option<CubicRoots>,
}

/// Residuals of the unreduced system, each divided by the sum of the
/// absolute values of its terms.
pub fn system_residuals(a: f64, b: f64, q: f64, hbar: f64, sigma: f64, e: f64) -> [f64; 2] {
    let s = sigma * hbar;
    let xi = 1.0 + hbar * e;
    let line1 = [
        a * e,
        a * xi * sigma * s * sinhc(s / 2.0).powi(2) / 2.0,
        b * xi * xi * sigma * sigma * sinhc(s).powi(2),
    ];
    let line2 = [a * xi * s * sinhc(s), 2.0 * b * xi * xi * sigma * sinhc(2.0 * s), -q];
    let rel = |t: &[f64]| {
        let scale: f64 = t.iter().map(|v| v.abs()).sum();
        let sum: f64 = t.iter().sum();
        if scale == 0.0 {
            0.0
        } else {
            sum.abs() / scale
        }
    };
    [rel(&line1), rel(&line2)]
}

/// Newton on the cubic written in `w = y / hbar`, which stays regular at
/// `hbar = 0` where its root is `q / 2b`.
fn newton_w(rho: f64, kappa: f64, hbar: f64, mut w: f64) -> Option<f64> {
    let omega = kappa * hbar;
    let c3 = (omega / 2.0 - 2.0 * rho * rho) * hbar * hbar;
    let c2 = rho * (4.0 - omega) * hbar;
    let c1 = -(omega + 2.0);
    let c0 = 2.0 * rho * kappa;
    for _ in 0..100 {
        let f = ((c3 * w + c2) * w + c1) * w + c0;
        let df = (3.0 * c3 * w + 2.0 * c2) * w + c1;
        if df == 0.0 || !df.is_finite() {
            return None;
        }
        let step = f / df;
        w -= step;
        if step.abs() <= 1e-16 * w.abs().max(1e-300) {
            return Some(w);
        }
    }
    let f = ((c3 * w + c2) * w + c1) * w + c0;
    (f.abs() <= 1e-13 * (c0.abs() + c1.abs() * w.abs())).then_some(w)
}

/// Solves by continuation in `hbar` from the classical root. Negative
/// `hbar` is accepted so one can difference across zero.
pub fn solve_ground_state(a: f64, b: f64, q: f64, hbar: f64) -> Result<GroundState> {
    if !(a > 0.0 && b > 0.0 && q > 0.0) {
        return Err(Error::Invalid(format!("need a, b, q > 0, got ({a}, {b}, {q})")));
    }
    if !hbar.is_finite() {
        return Err(Error::Invalid("hbar must be finite".into()));
    }
    let rho = q / (2.0 * a);
    let kappa = a / b;
    let sigma0 = q / (2.0 * b);
    let steps = 64;
    let mut w = sigma0;
    for i in 1..=steps {
        let h = hbar * i as f64 / steps as f64;
        w = newton_w(rho, kappa, h, w)
            .ok_or_else(|| Error::NoRoot(format!("continuation lost the root at hbar = {h}")))?;
        if (h * w).abs() >= 1.0 {
            return Err(Error::NoRoot(format!("|tanh(sigma hbar)| >= 1 at hbar = {h}")));
        }
    }
    let y = hbar * w;
    let sigma = if y == 0.0 { w } else { w * y.atanh() / y };
    let s = sigma * hbar;
    // E = (xi - 1) / hbar without the cancellation
    let e = -(sigma * s.powi(3) * sinhc(s / 2.0).powi(4) / 4.0 + 2.0 * rho * sigma * sinhc(s))
        / (1.0 + s.cosh().powi(2));
    let omega = kappa * hbar;
    Ok(GroundState {
        a,
        b,
        q,
        hbar,
        sigma,
        e,
        rho,
        omega,
        y,
        xi: 1.0 + hbar * e,
        residuals: system_residuals(a, b, q, hbar, sigma, e),
        cubic: (hbar != 0.0).then(|| schrodinger_cubic_roots(rho, omega)),
    })
}

/// Physical units: `a = h c`, `b = h^2 / 2m`, `q = e^2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhysicalConstants {
    pub alpha: f64,
    pub lambda_b: f64,
    pub mc2: f64,
}

impl PhysicalConstants {
    pub fn new(alpha: f64, lambda_b: f64, mc2: f64) -> Self {
        Self { alpha, lambda_b, mc2 }
    }

    /// `(a, b, q)` with `h c = lambda_B m c^2`.
    pub fn model_params(&self) -> (f64, f64, f64) {
        let hc = self.lambda_b * self.mc2;
        (hc, self.lambda_b * hc / 2.0, self.alpha * hc)
    }
}

/// `(dE/dhbar, dsigma/dhbar)` at `hbar = 0` from
/// `E = -mc^2 (alpha^2/2) (1 - (hbar / 4 lambda_B)(1 - alpha^2/2))` and
/// `sigma = (alpha / 2 lambda_B)(1 - (hbar / lambda_B)(1 - alpha^2))`.
pub fn first_order_coefficients(k: &PhysicalConstants) -> (f64, f64) {
    let (al, l) = (k.alpha, k.lambda_b);
    let de = -k.mc2 * al * al / 2.0 * (-1.0 / (4.0 * l)) * (1.0 - al * al / 2.0);
    let ds = -(al / (2.0 * l)) * (1.0 - al * al) / l;
    (de, ds)
}

/// The same coefficients from expanding the system to first order:
/// `sigma = (alpha / lambda_B)(1 - (hbar / lambda_B)(1 - alpha^2))`,
/// `E = -mc^2 (alpha^2 / 2)(1 - (hbar / lambda_B)(1 - alpha^2))`.
pub fn derived_first_order_coefficients(k: &PhysicalConstants) -> (f64, f64) {
    let (al, l) = (k.alpha, k.lambda_b);
    let de = k.mc2 * al * al / 2.0 * (1.0 - al * al) / l;
    let ds = -(al / l) * (1.0 - al * al) / l;
    (de, ds)
}

/// Central difference of the solver over `hbar = +-1e-6 lambda_B`, with the
/// energy in physical units (`E_phys = h c E`).
pub fn numeric_first_order_coefficients(k: &PhysicalConstants) -> Result<(f64, f64)> {
    let (a, b, q) = k.model_params();
    let d = 1e-6 * k.lambda_b;
    let p = solve_ground_state(a, b, q, d)?;
    let m = solve_ground_state(a, b, q, -d)?;
    Ok((a * (p.e - m.e) / (2.0 * d), (p.sigma - m.sigma) / (2.0 * d)))
}

/// Largest relative value of `(a dtau + b Delta_rad + q / r)` applied to
/// `xi^(tau/hbar) exp(-sigma r)` over the `(tau, r)` nodes.
pub fn eigenfunction_residual(
    a: f64,
    b: f64,
    q: f64,
    hbar: f64,
    sigma: f64,
    e: f64,
    nodes: &[(f64, f64)],
) -> Result<f64> {
    let f = CentralFunction::xi_power(Complex64::new(1.0 + hbar * e, 0.0), hbar)?
        .mul(&CentralFunction::exp_decay(sigma));
    let dt = cf::act_dtau(&f, hbar)?;
    let lap = cf::radial_laplacian(&f, hbar)?;
    let mut worst = 0.0f64;
    for &(t, r) in nodes {
        let terms = [
            a * dt.eval_real(t, r)?,
            b * lap.eval_real(t, r)?,
            q / r * f.eval_real(t, r)?,
        ];
        let scale: f64 = terms.iter().map(|v| v.norm()).sum();
        if scale > 0.0 {
            let sum: Complex64 = terms.iter().sum();
            worst = worst.max(sum.norm() / scale);
        }
    }
    Ok(worst)
}

impl GroundState {
    /// [`eigenfunction_residual`] at this solution.
    pub fn eigenfunction_residual(&self, nodes: &[(f64, f64)]) -> Result<f64> {
        eigenfunction_residual(self.a, self.b, self.q, self.hbar, self.sigma, self.e, nodes)
    }
}
