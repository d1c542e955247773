//! Exact coefficient ring.
//!
//! [`GaussRational`] is an element of `Q(i)`; [`Scalar`] is a Laurent
//! polynomial in the deformation parameter `hbar` with Gaussian-rational
//! coefficients. Every symbolic identity in the crate is checked in this ring,
//! so `hbar` is never specialized unless [`Scalar::eval`] is called.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    /// `(re_num/re_den) + (im_num/im_den) i`
    pub fn complex(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Exact conversion of a finite double (dyadic rational).
    pub fn from_f64(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(|re| Self::new(re, BigRational::zero()))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussRational {
    fn from(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        &self + &rhs
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        &self - &rhs
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        &self * &rhs
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl GaussRational {
    /// Text form accepted by the expression grammar.
    ///
    /// `wrap` forces parentheses around anything that is not a bare integer or
    /// a bare imaginary product, so the result can be followed by `*`.
    fn render(&self, wrap: bool) -> String {
        let re = fmt_rational(&self.re);
        let im_abs = self.im.abs();
        let im_body = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", fmt_rational(&im_abs))
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => "0".into(),
            (false, true) => {
                if wrap && !self.re.is_integer() {
                    format!("({re})")
                } else {
                    re
                }
            }
            (true, false) => {
                if self.im.is_negative() {
                    if im_abs.is_one() {
                        // the grammar has no unary minus on symbols
                        "-1*i".into()
                    } else {
                        format!("-{im_body}")
                    }
                } else {
                    im_body
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                format!("({re} {sign} {im_body})")
            }
        }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Laurent polynomial in `hbar` over `Q(i)`.
///
/// Invariant: no stored coefficient is zero, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<i32, GaussRational>,
}

impl Scalar {
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRational)>>(it: I) -> Self {
        let mut s = Scalar::zero();
        for (k, c) in it {
            s.add_term(k, &c);
        }
        s
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussRational::ratio(num, den))
    }

    /// `c * hbar^k`
    pub fn monomial(c: GaussRational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn i() -> Self {
        Self::constant(GaussRational::i())
    }

    pub fn hbar() -> Self {
        Self::hbar_pow(1)
    }

    pub fn hbar_pow(k: i32) -> Self {
        Self::monomial(GaussRational::one(), k)
    }

    /// The `(t, h)`-presentation parameter `h = 2 i hbar`.
    pub fn h() -> Self {
        Self::monomial(GaussRational::complex((0, 1), (2, 1)), 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i32) -> GaussRational {
        self.terms.get(&k).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant if `self` has no `hbar` dependence.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn min_power(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i32, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `hbar^k`.
    pub fn shift_power(&self, k: i32) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a single-term scalar `c hbar^k`; `None` otherwise.
    pub fn inv_monomial(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Scalar::monomial(c.inv()?, -k))
    }

    /// Exact quotient `self / rhs` when it exists in the Laurent ring.
    ///
    /// Long division over `Q(i)` after clearing negative powers; returns
    /// `None` if `rhs` is zero or does not divide `self`.
    pub fn div_exact(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let rlo = rhs.min_power()?;
        let slo = self.min_power()?;
        let mut rem: BTreeMap<i32, GaussRational> = self
            .terms
            .iter()
            .map(|(k, c)| (k - slo, c.clone()))
            .collect();
        let div: Vec<(i32, GaussRational)> =
            rhs.terms.iter().map(|(k, c)| (k - rlo, c.clone())).collect();
        let (dlead, dlc) = div.last().cloned()?;
        let dlc_inv = dlc.inv()?;
        let mut quot = Scalar::zero();
        while let Some((&top, _)) = rem.iter().next_back() {
            if top < dlead {
                break;
            }
            let c = &rem[&top] * &dlc_inv;
            let shift = top - dlead;
            for (k, d) in &div {
                let e = k + shift;
                let v = rem.remove(&e).unwrap_or_else(GaussRational::zero) - (&c * d);
                if !v.is_zero() {
                    rem.insert(e, v);
                }
            }
            quot.add_term(shift, &c);
        }
        if !rem.is_empty() {
            return None;
        }
        Some(quot.shift_power(slo - rlo))
    }

    /// Substitute a numeric `hbar`.
    pub fn eval(&self, hbar: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            if *k < 0 && hbar == Complex64::new(0.0, 0.0) {
                return Err(Error::Pole(format!(
                    "hbar^{k} evaluated at hbar = 0"
                )));
            }
            acc += c.to_complex() * hbar.powi(*k);
        }
        Ok(acc)
    }

    /// Substitute an exact Gaussian-rational `hbar`.
    pub fn eval_exact(&self, hbar: &GaussRational) -> Result<GaussRational> {
        let mut acc = GaussRational::zero();
        let inv = hbar.inv();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                hbar.pow(*k as u32)
            } else {
                inv.as_ref()
                    .ok_or_else(|| Error::Pole(format!("hbar^{k} evaluated at hbar = 0")))?
                    .pow((-k) as u32)
            };
            acc = &acc + &(c * &p);
        }
        Ok(acc)
    }

    /// Single-term scalars whose printed form starts with a minus sign;
    /// sums print these as ` - |c|`.
    pub(crate) fn is_negative_term(&self) -> bool {
        self.terms.len() == 1 && split_sign(self.terms.values().next().unwrap()).0
    }

    pub(crate) fn render(&self, wrap: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            return render_single(*k, c, wrap);
        }
        let mut out = String::new();
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = split_sign(c);
            let body = render_single(*k, &mag, false);
            if idx == 0 {
                if neg {
                    out.push_str(&render_single(*k, c, false));
                } else {
                    out.push_str(&body);
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if wrap {
            format!("({out})")
        } else {
            out
        }
    }
}

/// Pulls an overall minus sign out of a coefficient when that gives a
/// cleaner binary `-` in sums.
fn split_sign(c: &GaussRational) -> (bool, GaussRational) {
    let neg = if c.re.is_zero() {
        c.im.is_negative()
    } else {
        c.re.is_negative() && !c.im.is_positive()
    };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn render_single(k: i32, c: &GaussRational, wrap: bool) -> String {
    let hb = match k {
        0 => None,
        1 => Some("hbar".to_string()),
        _ => Some(format!("hbar^{k}")),
    };
    match hb {
        None => c.render(wrap),
        Some(h) => {
            if c.is_one() {
                h
            } else if (-c).is_one() {
                format!("-1*{h}")
            } else {
                format!("{}*{h}", c.render(true))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::int(1)
    }
}

impl From<GaussRational> for Scalar {
    fn from(c: GaussRational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

/// Minimal field interface shared by the numeric and exact lattice layers.
pub trait FieldValue:
    Clone
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
    /// Exact where the type allows it; `None` for non-finite input.
    fn from_f64(v: f64) -> Option<Self>;
    /// `None` when dividing by (numerical) zero.
    fn checked_div(&self, o: &Self) -> Option<Self>;
    fn to_complex(&self) -> Complex64;
}

/// Values closer than this to zero count as poles in the float layer.
pub const POLE_EPS: f64 = 1e-300;

impl FieldValue for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_f64(v: f64) -> Option<Self> {
        v.is_finite().then(|| Complex64::new(v, 0.0))
    }
    fn checked_div(&self, o: &Self) -> Option<Self> {
        if o.norm() <= POLE_EPS {
            None
        } else {
            Some(self / o)
        }
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

impl FieldValue for GaussRational {
    fn from_int(n: i64) -> Self {
        GaussRational::from_int(n)
    }
    fn from_f64(v: f64) -> Option<Self> {
        GaussRational::from_f64(v)
    }
    fn checked_div(&self, o: &Self) -> Option<Self> {
        GaussRational::checked_div(self, o)
    }
    fn to_complex(&self) -> Complex64 {
        GaussRational::to_complex(self)
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}
