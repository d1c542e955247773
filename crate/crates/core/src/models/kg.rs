//! Plane waves `xi^(tau/hbar) eta^(x/hbar)` for `(dtau^2 - dx^2 + m^2) phi = 0`
//! with momentum along `x`.

use num_complex::Complex64;
use serde::Serialize;

use crate::central::line;
use crate::error::{Error, Result};

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// `sqrt(1 + (hbar p)^2)`
fn s(p: f64, hbar: f64) -> f64 {
    (hbar * p).hypot(1.0)
}

/// `hbar p^2 / (1 + sqrt(1 + (hbar p)^2))`, the shift of both branches.
fn shift(p: f64, hbar: f64) -> f64 {
    hbar * p * p / (1.0 + s(p, hbar))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaneWaveSolution {
    #[serde(rename = "E", serialize_with = "ser_complex")]
    pub e: Complex64,
    pub p: f64,
    pub m: f64,
    pub hbar: f64,
    #[serde(serialize_with = "ser_complex")]
    pub xi: Complex64,
    pub eta: f64,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if z.im == 0.0 {
        s.serialize_f64(z.re)
    } else {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&z.re)?;
        t.serialize_element(&z.im)?;
        t.end()
    }
}

impl PlaneWaveSolution {
    pub fn new(e: Complex64, p: f64, m: f64, hbar: f64) -> Self {
        Self {
            e,
            p,
            m,
            hbar,
            xi: 1.0 + hbar * e,
            eta: hbar * p + s(p, hbar),
        }
    }

    pub fn residual(&self) -> Complex64 {
        kg_dispersion_residual(self.e, self.p, self.m, self.hbar)
    }
}

/// `E^2 - 2 p^2 (1 + hbar E) / (1 + sqrt(1 + (hbar p)^2)) + m^2`
pub fn kg_dispersion_residual(e: Complex64, p: f64, m: f64, hbar: f64) -> Complex64 {
    e * e - 2.0 * p * p * (1.0 + hbar * e) / (1.0 + s(p, hbar)) + m * m
}

/// `(E+, E-)`; complex when `p^2 < m^2`.
pub fn kg_energy_branches(p: f64, m: f64, hbar: f64) -> (Complex64, Complex64) {
    let root = c(p * p - m * m).sqrt();
    let u = c(shift(p, hbar));
    (u + root, u - root)
}

/// The bracket `(xi (eta-1)^2 / (2 hbar eta) + E)^2 - xi^2 p^2 + m^2` that
/// multiplies the plane wave.
pub fn plane_wave_bracket(e: Complex64, p: f64, m: f64, hbar: f64) -> Result<Complex64> {
    if hbar == 0.0 {
        return Ok(e * e - p * p + m * m);
    }
    let w = PlaneWaveSolution::new(e, p, m, hbar);
    if w.eta <= 0.0 {
        return Err(Error::Invalid(format!("eta = {} is not positive", w.eta)));
    }
    let dt_g = (w.eta - 1.0).powi(2) / (2.0 * hbar * w.eta);
    let inner = w.xi * dt_g + e;
    Ok(inner * inner - w.xi * w.xi * p * p + m * m)
}

/// Largest relative value of `(dtau^2 - dx^2 + m^2) phi / phi` over the
/// nodes, with the derivatives applied as shift stencils to the sampled
/// plane wave. At `hbar = 0` the classical bracket is returned.
pub fn plane_wave_check(e: Complex64, p: f64, m: f64, hbar: f64, nodes: &[(f64, f64)]) -> Result<f64> {
    if hbar == 0.0 {
        return Ok(plane_wave_bracket(e, p, m, 0.0)?.norm());
    }
    let w = PlaneWaveSolution::new(e, p, m, hbar);
    if w.xi.norm() == 0.0 || w.eta <= 0.0 {
        return Err(Error::Pole("xi or eta vanishes".into()));
    }
    let (lx, le) = (w.xi.ln() / hbar, w.eta.ln() / hbar);
    let phi = line::plane(move |t, x| (lx * t + le * x).exp());
    let d2t = line::dtau(&line::dtau(&phi, hbar), hbar);
    let d2x = line::laplacian(&phi, hbar);
    let op = line::add(&line::sub(&d2t, &d2x), &line::scale(&phi, c(m * m)));
    // each term is phi times something of this size
    let scale = 1.0 + e.norm_sqr() + (w.xi * p).norm_sqr() + m * m;
    let mut worst = 0.0f64;
    for &(t, x) in nodes {
        let v = phi(t, x);
        if v.norm() == 0.0 || !v.is_finite() {
            return Err(Error::Invalid(format!("plane wave degenerate at ({t}, {x})")));
        }
        worst = worst.max((op(t, x) / v).norm() / scale);
    }
    Ok(worst)
}
