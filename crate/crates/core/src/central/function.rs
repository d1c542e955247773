//! Central functions `f(tau, r)` given by evaluators, and the difference
//! operators acting on them at a numeric `hbar`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::poly::{self, CentralPoly};
use crate::error::{Error, Result};

pub type Evaluator = Arc<dyn Fn(Complex64, Complex64) -> Result<Complex64> + Send + Sync>;

/// `r` values with `|r|` below this are treated as the pole `r = 0`.
const R_EPS: f64 = 1e-13;

#[derive(Clone)]
pub struct CentralFunction {
    eval: Evaluator,
    exact: Option<CentralPoly>,
}

impl fmt::Debug for CentralFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(p) => write!(f, "CentralFunction({p})"),
            None => f.write_str("CentralFunction(<evaluator>)"),
        }
    }
}

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn check_r(r: Complex64) -> Result<()> {
    if r.norm() < R_EPS {
        Err(Error::Pole(format!("r = {r}")))
    } else {
        Ok(())
    }
}

impl CentralFunction {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(Complex64, Complex64) -> Result<Complex64> + Send + Sync + 'static,
    {
        Self {
            eval: Arc::new(f),
            exact: None,
        }
    }

    /// Evaluator backed by an exact polynomial; `hbar` fixes any `hbar`
    /// appearing in its coefficients.
    pub fn from_poly(p: CentralPoly, hbar: f64) -> Self {
        let q = p.clone();
        Self {
            eval: Arc::new(move |t, r| q.eval(t, r, hbar)),
            exact: Some(p),
        }
    }

    pub fn with_exact(mut self, p: Option<CentralPoly>) -> Self {
        self.exact = p;
        self
    }

    pub fn exact(&self) -> Option<&CentralPoly> {
        self.exact.as_ref()
    }

    pub fn eval(&self, tau: Complex64, r: Complex64) -> Result<Complex64> {
        (self.eval)(tau, r)
    }

    pub fn eval_real(&self, tau: f64, r: f64) -> Result<Complex64> {
        self.eval(c(tau), c(r))
    }

    pub fn constant(v: Complex64) -> Self {
        Self::new(move |_, _| Ok(v))
    }

    /// `tau^i r^j`; negative `j` has a pole at `r = 0`.
    pub fn power(i: u32, j: i32) -> Self {
        let p = CentralPoly::monomial(i, j, crate::scalar::Scalar::from(1));
        Self::from_poly(p, 0.0)
    }

    pub fn inv_r() -> Self {
        Self::power(0, -1)
    }

    /// `exp(-sigma r)`
    pub fn exp_decay(sigma: f64) -> Self {
        Self::new(move |_, r| Ok((-r * sigma).exp()))
    }

    /// `xi^(tau / hbar)`, the solution of `dtau f = E f` with `xi = 1 + hbar E`.
    pub fn xi_power(xi: Complex64, hbar: f64) -> Result<Self> {
        if hbar == 0.0 {
            return Err(Error::Invalid("xi^(tau/hbar) needs hbar != 0".into()));
        }
        if xi.norm() == 0.0 {
            return Err(Error::Invalid("xi = 0".into()));
        }
        let ln = xi.ln();
        Ok(Self::new(move |t, _| Ok((ln * t / hbar).exp())))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = (self.eval.clone(), o.eval.clone());
        let exact = match (&self.exact, &o.exact) {
            (Some(p), Some(q)) => Some(p.add(q)),
            _ => None,
        };
        Self::new(move |t, r| Ok(a(t, r)? + b(t, r)?)).with_exact(exact)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (self.eval.clone(), o.eval.clone());
        let exact = match (&self.exact, &o.exact) {
            (Some(p), Some(q)) => Some(p.mul(q)),
            _ => None,
        };
        Self::new(move |t, r| Ok(a(t, r)? * b(t, r)?)).with_exact(exact)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let a = self.eval.clone();
        Self::new(move |t, r| Ok(a(t, r)? * s))
    }
}

/// `f(tau + alpha hbar, r + beta hbar)` closures share this helper.
fn at(f: &Evaluator, t: Complex64, r: Complex64, h: f64, alpha: f64, beta: f64) -> Result<Complex64> {
    f(t + alpha * h, r + beta * h)
}

fn check_hbar(h: f64) -> Result<()> {
    if h == 0.0 || !h.is_finite() {
        Err(Error::Invalid(format!("difference operators need finite hbar != 0, got {h}")))
    } else {
        Ok(())
    }
}

fn lift(
    f: &CentralFunction,
    exact: fn(&CentralPoly) -> Result<CentralPoly>,
    ev: impl Fn(&Evaluator, Complex64, Complex64) -> Result<Complex64> + Send + Sync + 'static,
) -> CentralFunction {
    let inner = f.eval.clone();
    let ex = f.exact.as_ref().and_then(|p| exact(p).ok());
    CentralFunction::new(move |t, r| ev(&inner, t, r)).with_exact(ex)
}

/// `[f(t+h, r+h)(r+h) + f(t+h, r-h)(r-h) - 2 r f(t, r)] / (2 r h)`
pub fn act_dtau(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    Ok(lift(f, poly::act_dtau, move |g, t, r| {
        check_r(r)?;
        let p = at(g, t, r, h, 1.0, 1.0)? * (r + h);
        let m = at(g, t, r, h, 1.0, -1.0)? * (r - h);
        Ok((p + m - 2.0 * r * g(t, r)?) / (2.0 * r * h))
    }))
}

/// `dtau + 1/hbar`
pub fn act_dtau_tilde(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    Ok(lift(f, poly::act_dtau_tilde, move |g, t, r| {
        check_r(r)?;
        let p = at(g, t, r, h, 1.0, 1.0)? * (r + h);
        let m = at(g, t, r, h, 1.0, -1.0)? * (r - h);
        Ok((p + m) / (2.0 * r * h))
    }))
}

/// Quantum radial derivative `[f(t+h, r+h) - f(t+h, r-h)] / (2h)`.
pub fn radial_derivative(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    Ok(lift(f, poly::radial_derivative, move |g, t, r| {
        Ok((at(g, t, r, h, 1.0, 1.0)? - at(g, t, r, h, 1.0, -1.0)?) / (2.0 * h))
    }))
}

/// Central factor `g` in `dx(f) = (x / r) g`; equal to the radial derivative.
pub fn act_dx_radial_factor(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    radial_derivative(f, h)
}

/// Central factor `g` in `iX(f) = x g`, namely `-(2h / r) d_r f`.
pub fn act_ix_factor(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    let d = radial_derivative(f, h)?;
    let inner = d.eval.clone();
    Ok(CentralFunction::new(move |t, r| {
        check_r(r)?;
        Ok(-2.0 * h * inner(t, r)? / r)
    }))
}

/// Radial part of `Q`: `((r^2 - h^2) / r) d_r f`.
pub fn radial_q(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    Ok(lift(f, poly::radial_q, move |g, t, r| {
        check_r(r)?;
        let d = (at(g, t, r, h, 1.0, 1.0)? - at(g, t, r, h, 1.0, -1.0)?) / (2.0 * h);
        Ok((r * r - h * h) / r * d)
    }))
}

/// Radial part of the Laplacian as a second difference plus a first
/// difference over `r`; `tau` is advanced by `2 hbar`.
pub fn radial_laplacian(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    Ok(lift(f, poly::radial_laplacian, move |g, t, r| {
        check_r(r)?;
        let p = at(g, t, r, h, 2.0, 2.0)?;
        let m = at(g, t, r, h, 2.0, -2.0)?;
        let c0 = at(g, t, r, h, 2.0, 0.0)?;
        Ok((p + m - 2.0 * c0) / (4.0 * h * h) + (p - m) / (2.0 * h * r))
    }))
}

/// The same operator written as `(1/r) d_r^2 (r f)`.
pub fn radial_laplacian_via_derivative(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    check_hbar(h)?;
    let inner = f.eval.clone();
    let rf = CentralFunction::new(move |t, r| Ok(r * inner(t, r)?));
    let d2 = radial_derivative(&radial_derivative(&rf, h)?, h)?;
    let e2 = d2.eval.clone();
    let ex = f
        .exact
        .as_ref()
        .and_then(|p| poly::radial_laplacian_via_derivative(p).ok());
    Ok(CentralFunction::new(move |t, r| {
        check_r(r)?;
        Ok(e2(t, r)? / r)
    })
    .with_exact(ex))
}

/// Infinitesimal radial boost `tau d_r + r dtau`.
pub fn radial_boost(f: &CentralFunction, h: f64) -> Result<CentralFunction> {
    let d = radial_derivative(f, h)?;
    let dt = act_dtau(f, h)?;
    let (de, te) = (d.eval.clone(), dt.eval.clone());
    let ex = f.exact.as_ref().and_then(|p| poly::radial_boost(p).ok());
    Ok(CentralFunction::new(move |t, r| Ok(t * de(t, r)? + r * te(t, r)?)).with_exact(ex))
}
