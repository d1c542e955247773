//! The 4x4 matrix that moves the column `(dx, x dt~, x Q, X)` through the
//! Casimir, its spectral projectors, and powers of `mu`.
//!
//! Entries are rational functions in `mu` and `h` (with `h = 2 i hbar`,
//! `Cas = (h^2 - mu^2) / 4`) over `Q(i)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::derivative::BasicOperator;
use crate::scalar::{GaussRational, Scalar};
use crate::weyl::WeylElement;

/// Polynomial in `(mu, h)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), GaussRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::term(0, 0, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    /// `c mu^i h^j`
    pub fn term(i: u32, j: u32, c: GaussRational) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, &c);
        p
    }

    pub fn mu() -> Self {
        Self::term(1, 0, GaussRational::one())
    }

    pub fn h() -> Self {
        Self::term(0, 1, GaussRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, i: u32, j: u32, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry((i, j)).or_insert_with(GaussRational::zero);
        *v = &*v + c;
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

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(*i, *j, &-c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
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

    pub fn scale(&self, s: &GaussRational) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(*i, *j, &(c * s));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::int(1), |acc, _| acc.mul(self))
    }

    /// Substitute `h = 2 i hbar` and a numeric-free `mu`, returning the
    /// coefficient of `mu^i` as a [`Scalar`].
    pub fn mu_coefficients(&self) -> BTreeMap<u32, Scalar> {
        let two_i = GaussRational::complex((0, 1), (2, 1));
        let mut out: BTreeMap<u32, Scalar> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            let s = Scalar::monomial(c * &two_i.pow(*j), *j as i32);
            let e = out.entry(*i).or_insert_with(Scalar::zero);
            *e += &s;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let mut s = c.to_string();
                if *i > 0 {
                    s.push_str(&format!("*mu^{i}"));
                }
                if *j > 0 {
                    s.push_str(&format!("*h^{j}"));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Quotient of two [`BiPoly`]; equality by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl RatFn {
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    pub fn poly(p: BiPoly) -> Self {
        Self::new(p, BiPoly::int(1))
    }

    pub fn zero() -> Self {
        Self::poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        Self::poly(BiPoly::int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.num.neg(), self.den.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// `None` when `o` is zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        Some(Self::new(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, p: i32) -> Option<Self> {
        let base = if p < 0 { Self::one().div(self)? } else { self.clone() };
        Some(Self::new(
            base.num.pow(p.unsigned_abs()),
            base.den.pow(p.unsigned_abs()),
        ))
    }
}

impl PartialEq for RatFn {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

pub type Mat4 = [[RatFn; 4]; 4];

pub fn identity() -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { RatFn::one() } else { RatFn::zero() }))
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4).fold(RatFn::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))
        })
    })
}

pub fn mat_add(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].add(&b[i][j])))
}

pub fn mat_sub(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].sub(&b[i][j])))
}

pub fn mat_scale(a: &Mat4, s: &RatFn) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].mul(s)))
}

pub fn mat_pow(a: &Mat4, n: u32) -> Mat4 {
    (0..n).fold(identity(), |acc, _| mat_mul(&acc, a))
}

pub fn mat_eq(a: &Mat4, b: &Mat4) -> bool {
    (0..4).all(|i| (0..4).all(|j| a[i][j] == b[i][j]))
}

fn q(n: i64, d: i64) -> GaussRational {
    GaussRational::ratio(n, d)
}

/// `c1 mu^2 + c2 h^2` divided by 4
fn quad(mu2: i64, h2: i64) -> BiPoly {
    BiPoly::term(2, 0, q(mu2, 4)).add(&BiPoly::term(0, 2, q(h2, 4)))
}

fn r(p: BiPoly) -> RatFn {
    RatFn::poly(p)
}

/// The matrix with `Cas = (h^2 - mu^2) / 4` substituted.
pub fn psi_matrix() -> Mat4 {
    let h = BiPoly::h();
    let z = BiPoly::zero();
    let cas = quad(-1, 1);
    [
        [r(quad(-1, -2)), r(h.clone()), r(z.clone()), r(h.clone())],
        [r(z.clone()), r(quad(-1, -2)), r(h.neg()), r(z.clone())],
        [r(z.clone()), r(h.mul(&cas)), r(quad(-1, 2)), r(z.clone())],
        [r(h.mul(&cas).neg()), r(h.pow(2)), r(h), r(quad(-1, 2))],
    ]
}

/// `(lambda_1, lambda_2) = (-(mu^2 - 2 h mu)/4, -(mu^2 + 2 h mu)/4)`
pub fn eigenvalues() -> (RatFn, RatFn) {
    let mu2 = BiPoly::term(2, 0, q(-1, 4));
    let hmu = BiPoly::term(1, 1, q(1, 2));
    (r(mu2.add(&hmu)), r(mu2.sub(&hmu)))
}

/// The complementary projectors `(P1, P2)`.
pub fn projectors() -> (Mat4, Mat4) {
    let mu = BiPoly::mu();
    let h = BiPoly::h();
    let half = |p: BiPoly| p.scale(&q(1, 2));
    let mmh = half(mu.sub(&h));
    let mph = half(mu.add(&h));
    let one = BiPoly::int(1);
    let z = BiPoly::zero();
    let d = quad(1, -1); // (mu^2 - h^2)/4
    let over_mu = |p: BiPoly| RatFn::new(p, mu.clone());
    let p1 = [
        [mmh.clone(), one.clone(), z.clone(), one.clone()],
        [z.clone(), mmh.clone(), one.neg(), z.clone()],
        [z.clone(), d.neg(), mph.clone(), z.clone()],
        [d.clone(), h.clone(), one.clone(), mph.clone()],
    ];
    let p2 = [
        [mph.clone(), one.neg(), z.clone(), one.neg()],
        [z.clone(), mph.clone(), one.clone(), z.clone()],
        [z.clone(), d.clone(), mmh.clone(), z.clone()],
        [d.neg(), h.neg(), one.neg(), mmh],
    ];
    (
        p1.map(|row| row.map(over_mu)),
        p2.map(|row| row.map(over_mu)),
    )
}

/// `((mu - h)^p P1, (mu + h)^p P2)`, any integer `p`.
pub fn permute_through_mu_power(p: i32) -> (Mat4, Mat4) {
    let (p1, p2) = projectors();
    let mu = BiPoly::mu();
    let h = BiPoly::h();
    let a = RatFn::poly(mu.sub(&h)).powi(p).expect("mu - h is nonzero");
    let b = RatFn::poly(mu.add(&h)).powi(p).expect("mu + h is nonzero");
    (mat_scale(&p1, &a), mat_scale(&p2, &b))
}

/// `M(p) = (mu - h)^p P1 + (mu + h)^p P2`.
pub fn mu_power_matrix(p: i32) -> Mat4 {
    let (a, b) = permute_through_mu_power(p);
    mat_add(&a, &b)
}

/// Residual `col_i Cas - sum_j Psi_ij(Cas) col_j` computed in the Weyl
/// algebra, for the column `(dx, x dt~, x Q, X)` and its `y`, `z` analogues.
/// Every entry is zero.
pub fn theorem_residual() -> Vec<WeylElement> {
    use crate::weyl::Generator::*;
    let h = WeylElement::scalar(Scalar::h());
    let cas = WeylElement::casimir();
    let k = |n: i64, d: i64| WeylElement::scalar(Scalar::ratio(n, d));
    let h2 = &h * &h;
    let diag_a = &cas - &(&k(3, 4) * &h2);
    let diag_b = &cas + &(&k(1, 4) * &h2);
    let zero = WeylElement::zero();
    let psi = [
        [diag_a.clone(), h.clone(), zero.clone(), h.clone()],
        [zero.clone(), diag_a, -&h, zero.clone()],
        [zero.clone(), &h * &cas, diag_b.clone(), zero.clone()],
        [-(&h * &cas), h2, h.clone(), diag_b],
    ];
    let dtt = WeylElement::dt_tilde();
    let q_op = BasicOperator::Q.element();
    let mut out = Vec::new();
    for (a, op) in [
        (X, BasicOperator::X),
        (Y, BasicOperator::Y),
        (Z, BasicOperator::Z),
    ] {
        let g = WeylElement::gen(a);
        let col = [
            WeylElement::gen(a.derivative()),
            &g * &dtt,
            &g * &q_op,
            op.element(),
        ];
        for i in 0..4 {
            let mut e = &col[i] * &cas;
            for j in 0..4 {
                e = &e - &(&psi[i][j] * &col[j]);
            }
            out.push(e);
        }
    }
    out
}
