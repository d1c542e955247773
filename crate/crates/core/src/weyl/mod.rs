//! PBW-ordered elements of the Weyl algebra over `U(u(2))`.
//!
//! Generators are ordered `tau < x < y < z < dtau < dx < dy < dz`; a
//! [`Monomial`] stores one exponent per generator in that order, so
//! coefficients sit on the left and derivatives on the right.

mod display;
mod normalize;
mod relations;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::scalar::{GaussRational, Scalar};

pub use normalize::{normalize, FreeElement};
pub use relations::bracket;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    Tau,
    X,
    Y,
    Z,
    DTau,
    DX,
    DY,
    DZ,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::Tau,
        Generator::X,
        Generator::Y,
        Generator::Z,
        Generator::DTau,
        Generator::DX,
        Generator::DY,
        Generator::DZ,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        Self::ALL[i]
    }

    pub fn is_derivative(self) -> bool {
        self.index() >= 4
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Tau => "tau",
            Generator::X => "x",
            Generator::Y => "y",
            Generator::Z => "z",
            Generator::DTau => "dtau",
            Generator::DX => "dx",
            Generator::DY => "dy",
            Generator::DZ => "dz",
        }
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        Self::ALL.iter().copied().find(|g| g.name() == s)
    }

    /// `x -> dx` and so on; derivatives map to themselves.
    pub fn derivative(self) -> Generator {
        if self.is_derivative() {
            self
        } else {
            Self::ALL[self.index() + 4]
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `tau^a0 x^a1 y^a2 z^a3 dtau^b0 dx^b1 dy^b2 dz^b3`
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(pub [u16; 8]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 8])
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 8];
        e[g.index()] = 1;
        Monomial(e)
    }

    pub fn from_pairs(pairs: &[(Generator, u16)]) -> Self {
        let mut e = [0; 8];
        for (g, k) in pairs {
            e[g.index()] += k;
        }
        Monomial(e)
    }

    pub fn exp(&self, g: Generator) -> u16 {
        self.0[g.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn generator_degree(&self) -> u32 {
        self.0[..4].iter().map(|&e| e as u32).sum()
    }

    pub fn derivative_degree(&self) -> u32 {
        self.0[4..].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Left factor in `U`, i.e. the monomial with the derivatives stripped.
    pub fn generator_part(&self) -> Monomial {
        let mut e = self.0;
        e[4..].iter_mut().for_each(|v| *v = 0);
        Monomial(e)
    }

    pub fn derivative_part(&self) -> Monomial {
        let mut e = self.0;
        e[..4].iter_mut().for_each(|v| *v = 0);
        Monomial(e)
    }

    /// The monomial as an ordered word of generators.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for g in Generator::ALL {
            for _ in 0..self.exp(g) {
                w.push(g);
            }
        }
        w
    }

    /// Largest generator present.
    pub fn last(&self) -> Option<Generator> {
        (0..8).rev().find(|&i| self.0[i] > 0).map(Generator::from_index)
    }

    pub(crate) fn with(&self, g: Generator, delta: i32) -> Monomial {
        let mut e = self.0;
        e[g.index()] = (e[g.index()] as i32 + delta) as u16;
        Monomial(e)
    }
}

/// Finite linear combination of PBW monomials over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WeylElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl WeylElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(Monomial::one(), s)
    }

    pub fn term(m: Monomial, s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(m, s);
        }
        Self { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn gen(g: Generator) -> Self {
        Self::monomial(Monomial::generator(g))
    }

    pub fn tau() -> Self {
        Self::gen(Generator::Tau)
    }
    pub fn x() -> Self {
        Self::gen(Generator::X)
    }
    pub fn y() -> Self {
        Self::gen(Generator::Y)
    }
    pub fn z() -> Self {
        Self::gen(Generator::Z)
    }
    pub fn dtau() -> Self {
        Self::gen(Generator::DTau)
    }
    pub fn dx() -> Self {
        Self::gen(Generator::DX)
    }
    pub fn dy() -> Self {
        Self::gen(Generator::DY)
    }
    pub fn dz() -> Self {
        Self::gen(Generator::DZ)
    }

    /// `t = i tau` of the `(t, h)` presentation.
    pub fn t() -> Self {
        Self::tau().scale(&Scalar::i())
    }

    /// `dt = -i dtau`.
    pub fn dt() -> Self {
        Self::dtau().scale(&-Scalar::i())
    }

    /// Shifted derivative `dtau + 1/hbar`.
    pub fn dtau_tilde() -> Self {
        &Self::dtau() + &Self::scalar(Scalar::hbar_pow(-1))
    }

    /// Shifted derivative `dt~ = -i (dtau + 1/hbar)`.
    pub fn dt_tilde() -> Self {
        Self::dtau_tilde().scale(&-Scalar::i())
    }

    /// `x^2 + y^2 + z^2`, central in `U`.
    pub fn casimir() -> Self {
        let x = Self::x();
        let y = Self::y();
        let z = Self::z();
        &(&(&x * &x) + &(&y * &y)) + &(&z * &z)
    }

    /// Product of generators in the given order, normalized.
    pub fn from_word(w: &[Generator]) -> Self {
        w.iter()
            .fold(Self::one(), |acc, g| normalize::mul_gen(&acc, *g))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True if no monomial carries a derivative.
    pub fn in_u(&self) -> bool {
        self.terms.keys().all(|m| m.derivative_degree() == 0)
    }

    /// True if no monomial carries a coordinate generator.
    pub fn in_d(&self) -> bool {
        self.terms.keys().all(|m| m.generator_degree() == 0)
    }

    pub fn add_term(&mut self, m: Monomial, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(s.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += s;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WeylElement, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, &(c * s));
        }
    }

    pub fn scale(&self, s: &Scalar) -> WeylElement {
        let mut out = WeylElement::zero();
        out.add_scaled(self, s);
        out
    }

    /// Keep only derivative-free monomials (`id (x) counit`).
    pub fn derivative_free_part(&self) -> WeylElement {
        WeylElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.derivative_degree() == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    pub fn pow(&self, n: u32) -> WeylElement {
        let mut acc = WeylElement::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        &(self * other) - &(other * self)
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> WeylElement {
        let mut out = WeylElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }

    /// Numeric coefficients at a given `hbar`.
    pub fn eval_coeffs(&self, hbar: Complex64) -> Result<Vec<(Monomial, Complex64)>> {
        self.terms
            .iter()
            .map(|(m, c)| Ok((*m, c.eval(hbar)?)))
            .collect()
    }

    /// Specialize `hbar` to an exact value; the result has constant scalars.
    pub fn specialize(&self, hbar: &GaussRational) -> Result<WeylElement> {
        let mut out = WeylElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &Scalar::constant(c.eval_exact(hbar)?));
        }
        Ok(out)
    }
}

impl From<Scalar> for WeylElement {
    fn from(s: Scalar) -> Self {
        WeylElement::scalar(s)
    }
}

impl From<Generator> for WeylElement {
    fn from(g: Generator) -> Self {
        WeylElement::gen(g)
    }
}

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        normalize::mul(self, rhs)
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.scale(&Scalar::int(-1))
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: WeylElement) -> WeylElement {
        &self + &rhs
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: WeylElement) -> WeylElement {
        &self - &rhs
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: WeylElement) -> WeylElement {
        &self * &rhs
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

/// Residual of the Cayley-Hamilton identity for
/// `N = [[t - iz, -ix - y], [-ix + y, t + iz]]`:
/// `N^2 - (2t + h) N + (t^2 + x^2 + y^2 + z^2 + h t) I`, entry-wise.
/// Every entry is zero.
pub fn ch_residual() -> [[WeylElement; 2]; 2] {
    let i = Scalar::i();
    let t = WeylElement::t();
    let x = WeylElement::x();
    let y = WeylElement::y();
    let z = WeylElement::z();
    let h = WeylElement::scalar(Scalar::h());
    let ix = x.scale(&i);
    let iz = z.scale(&i);
    let n = [
        [&t - &iz, &(-&ix) - &y],
        [&(-&ix) + &y, &t + &iz],
    ];
    let two_t_h = &t.scale(&Scalar::int(2)) + &h;
    let c0 = &(&(&t * &t) + &WeylElement::casimir()) + &(&h * &t);
    let mut out: [[WeylElement; 2]; 2] = Default::default();
    for r in 0..2 {
        for c in 0..2 {
            let mut e = &(&n[r][0] * &n[0][c]) + &(&n[r][1] * &n[1][c]);
            e = &e - &(&two_t_h * &n[r][c]);
            if r == c {
                e = &e + &c0;
            }
            out[r][c] = e;
        }
    }
    out
}
