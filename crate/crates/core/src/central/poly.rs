//! Exact central functions: polynomials in `tau` and Laurent polynomials in
//! the quantum radius `r`, with [`Scalar`] coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial, GaussRational, Scalar};
use crate::weyl::WeylElement;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CentralPoly {
    /// `(tau power, r power) -> coefficient`
    terms: BTreeMap<(u32, i32), Scalar>,
}

impl CentralPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c * tau^i * r^j`
    pub fn monomial(i: u32, j: i32, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, &c);
        p
    }

    pub fn tau() -> Self {
        Self::monomial(1, 0, Scalar::one())
    }

    pub fn r() -> Self {
        Self::monomial(0, 1, Scalar::one())
    }

    pub fn r_pow(j: i32) -> Self {
        Self::monomial(0, j, Scalar::one())
    }

    /// `Cas = r^2 - hbar^2`.
    pub fn casimir() -> Self {
        Self::monomial(0, 2, Scalar::one()).sub(&Self::constant(Scalar::hbar_pow(2)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i32), &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, i: u32, j: i32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry((i, j)).or_insert_with(Scalar::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in &o.terms {
            out.add_term(*i, *j, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(*i, *j, &(c * s));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &o.terms {
                out.add_term(i + k, j + l, &(c * d));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiply by `r^k`, `k` of either sign.
    pub fn mul_r(&self, k: i32) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(*i, j + k, c);
        }
        out
    }

    pub fn min_r_power(&self) -> Option<i32> {
        self.terms.keys().map(|(_, j)| *j).min()
    }

    /// `f(tau + alpha hbar, r + beta hbar)`.
    ///
    /// Shifting `r` is only defined here for non-negative `r` powers; the
    /// evaluator layer handles the rest.
    pub fn shift(&self, alpha: i32, beta: i32) -> Result<Self> {
        if beta != 0 && self.min_r_power().is_some_and(|m| m < 0) {
            return Err(Error::Invalid(
                "r-shift of a negative power is not polynomial".into(),
            ));
        }
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            let tau_part = shifted_powers(*i, alpha);
            let r_part: Vec<(u32, Scalar)> = if beta == 0 {
                vec![(0, Scalar::one())]
            } else {
                shifted_powers(*j as u32, beta)
            };
            for (a, ca) in &tau_part {
                for (b, cb) in &r_part {
                    let (ti, rj) = (i - a, if beta == 0 { *j } else { *j - *b as i32 });
                    out.add_term(ti, rj, &(&(c * ca) * cb));
                }
            }
        }
        Ok(out)
    }

    /// Numeric value at `(tau, r)` with the given `hbar`.
    pub fn eval(&self, tau: Complex64, r: Complex64, hbar: f64) -> Result<Complex64> {
        let hb = Complex64::new(hbar, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for ((i, j), c) in &self.terms {
            if *j < 0 && r.norm() == 0.0 {
                return Err(Error::Pole("r = 0".into()));
            }
            acc += c.eval(hb)? * tau.powu(*i) * r.powi(*j);
        }
        Ok(acc)
    }

    pub fn is_even_in_r(&self) -> bool {
        self.terms.keys().all(|(_, j)| j % 2 == 0 && *j >= 0)
    }

    /// Element of `U` via `r^2 = Cas + hbar^2`; only for even polynomials.
    pub fn to_u(&self) -> Result<WeylElement> {
        if !self.is_even_in_r() {
            return Err(Error::Invalid(format!(
                "{self} is not a polynomial in tau and r^2"
            )));
        }
        let r2 = &WeylElement::casimir() + &WeylElement::scalar(Scalar::hbar_pow(2));
        let mut out = WeylElement::zero();
        for ((i, j), c) in &self.terms {
            let e = &WeylElement::tau().pow(*i) * &r2.pow((*j / 2) as u32);
            out.add_scaled(&e, c);
        }
        Ok(out)
    }

    /// Substitute a numeric `hbar` into the coefficients only.
    pub fn coefficients_at(&self, hbar: f64) -> Result<Vec<((u32, i32), Complex64)>> {
        self.terms
            .iter()
            .map(|(k, c)| Ok((*k, c.eval(Complex64::new(hbar, 0.0))?)))
            .collect()
    }
}

/// Expansion of `(v + s hbar)^n` as `(k, C(n,k) s^k hbar^k)` meaning the
/// term `v^(n-k)`.
fn shifted_powers(n: u32, s: i32) -> Vec<(u32, Scalar)> {
    if s == 0 {
        return vec![(0, Scalar::one())];
    }
    (0..=n)
        .map(|k| {
            let c = GaussRational::from(num_rational::BigRational::from_integer(
                binomial(n, k) * num_bigint::BigInt::from(s).pow(k),
            ));
            (k, Scalar::monomial(c, k as i32))
        })
        .collect()
}

impl fmt::Display for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            let mut m = Vec::new();
            match i {
                0 => {}
                1 => m.push("tau".to_string()),
                _ => m.push(format!("tau^{i}")),
            }
            match j {
                0 => {}
                1 => m.push("r".to_string()),
                _ => m.push(format!("r^{j}")),
            }
            let m = m.join("*");
            let neg = idx > 0 && c.is_negative_term();
            let c = if neg { -c } else { c.clone() };
            let body = if m.is_empty() {
                c.render(true)
            } else if c.is_one() {
                m
            } else {
                format!("{}*{m}", c.render(true))
            };
            match (idx, neg) {
                (0, _) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

fn two_hbar_inv(k: i32) -> Scalar {
    Scalar::monomial(GaussRational::ratio(1, 2i64.pow(k as u32)), -k)
}

/// `[f(t+h, r+h)(r+h) + f(t+h, r-h)(r-h) - 2 r f] / (2 r hbar)`
pub fn act_dtau(f: &CentralPoly) -> Result<CentralPoly> {
    let hb = CentralPoly::constant(Scalar::hbar());
    let r = CentralPoly::r();
    let num = f
        .shift(1, 1)?
        .mul(&r.add(&hb))
        .add(&f.shift(1, -1)?.mul(&r.sub(&hb)))
        .sub(&f.mul(&r).scale(&Scalar::int(2)));
    Ok(num.mul_r(-1).scale(&two_hbar_inv(1)))
}

/// Shifted derivative `dtau + 1/hbar` on central functions.
pub fn act_dtau_tilde(f: &CentralPoly) -> Result<CentralPoly> {
    Ok(act_dtau(f)?.add(&f.scale(&Scalar::hbar_pow(-1))))
}

/// `[f(t+h, r+h) - f(t+h, r-h)] / (2 hbar)`
pub fn radial_derivative(f: &CentralPoly) -> Result<CentralPoly> {
    Ok(f.shift(1, 1)?.sub(&f.shift(1, -1)?).scale(&two_hbar_inv(1)))
}

/// `((r^2 - hbar^2) / r) * radial_derivative(f)`
pub fn radial_q(f: &CentralPoly) -> Result<CentralPoly> {
    Ok(radial_derivative(f)?.mul(&CentralPoly::casimir()).mul_r(-1))
}

/// Second-difference form of the radial Laplacian; `tau` moves by `2 hbar`.
pub fn radial_laplacian(f: &CentralPoly) -> Result<CentralPoly> {
    let p = f.shift(2, 2)?;
    let m = f.shift(2, -2)?;
    let c = f.shift(2, 0)?;
    let second = p.add(&m).sub(&c.scale(&Scalar::int(2))).scale(&two_hbar_inv(2));
    let first = p.sub(&m).scale(&two_hbar_inv(1)).mul_r(-1);
    Ok(second.add(&first))
}

/// `(1/r) d_r^2 (r f)` with the quantum radial derivative.
pub fn radial_laplacian_via_derivative(f: &CentralPoly) -> Result<CentralPoly> {
    let rf = f.mul_r(1);
    Ok(radial_derivative(&radial_derivative(&rf)?)?.mul_r(-1))
}

/// `(tau d_r + r dtau) f`
pub fn radial_boost(f: &CentralPoly) -> Result<CentralPoly> {
    Ok(CentralPoly::tau()
        .mul(&radial_derivative(f)?)
        .add(&CentralPoly::r().mul(&act_dtau(f)?)))
}
