//! Independent realization of the algebra by classical differential
//! operators on commutative polynomials in `(T, X, Y, Z)`.
//!
//! With `N = T~ + h T~ D` written out in the real coordinates:
//!
//! ```text
//! tau -> T + hbar (T dT + X dX + Y dY + Z dZ)
//! x   -> X + hbar (T dX + X dT - i Y dZ + i Z dY)      (y, z cyclic)
//! da  -> plain partial derivative d/dA
//! ```
//!
//! The oracle never produces PBW forms; it only evaluates operators, which
//! makes it a check on the rewriter rather than a second copy of it.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{binomial, GaussRational, Scalar};
use crate::weyl::{Generator, Monomial, WeylElement};

pub type Exps = [u16; 4];

/// Commutative polynomial with [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClassicalPolynomial {
    terms: BTreeMap<Exps, Scalar>,
}

impl ClassicalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0; 4], Scalar::one())
    }

    pub fn monomial(e: Exps, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(e, &c);
        p
    }

    /// Variable `i` (0 = T, 1 = X, 2 = Y, 3 = Z).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::monomial(e, Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exps, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(e).or_insert_with(Scalar::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &(c * s));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(add_exps(a, b), &(ca * cb));
            }
        }
        out
    }

    /// Apply `d^alpha`.
    pub fn derive(&self, alpha: &Exps) -> Self {
        let mut out = Self::zero();
        'term: for (e, c) in &self.terms {
            let mut f = BigInt::one();
            let mut ne = *e;
            for i in 0..4 {
                if e[i] < alpha[i] {
                    continue 'term;
                }
                for j in 0..alpha[i] {
                    f *= BigInt::from(e[i] - j);
                }
                ne[i] = e[i] - alpha[i];
            }
            out.add_term(ne, &c.scale(&BigRational::from_integer(f).into()));
        }
        out
    }

    /// All monomials of total degree at most `d`.
    pub fn basis(d: u16) -> Vec<ClassicalPolynomial> {
        let mut out = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    for e in 0..=d - a - b - c {
                        out.push(Self::monomial([a, b, c, e], Scalar::one()));
                    }
                }
            }
        }
        out
    }
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// Normal-ordered classical differential operator
/// `sum c * T^a X^b Y^c Z^d * d^alpha`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClassicalOperator {
    terms: BTreeMap<(Exps, Exps), Scalar>,
}

impl ClassicalOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::term([0; 4], [0; 4], Scalar::one())
    }

    pub fn term(coef: Exps, alpha: Exps, c: Scalar) -> Self {
        let mut o = Self::zero();
        o.add_term(coef, alpha, &c);
        o
    }

    pub fn partial(i: usize) -> Self {
        let mut a = [0; 4];
        a[i] = 1;
        Self::term([0; 4], a, Scalar::one())
    }

    pub fn coordinate(i: usize) -> Self {
        let mut a = [0; 4];
        a[i] = 1;
        Self::term(a, [0; 4], Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Exps, Exps), &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, coef: Exps, alpha: Exps, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let k = (coef, alpha);
        let v = self.terms.entry(k).or_insert_with(Scalar::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((p, a), c) in &o.terms {
            out.add_term(*p, *a, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for ((p, a), c) in &self.terms {
            out.add_term(*p, *a, &(c * s));
        }
        out
    }

    /// `self o other`, brought back to normal order by the Leibniz rule.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((p, alpha), c1) in &self.terms {
            for ((q, beta), c2) in &other.terms {
                let c12 = c1 * c2;
                let qpoly = ClassicalPolynomial::monomial(*q, Scalar::one());
                for g0 in 0..=alpha[0] {
                    for g1 in 0..=alpha[1] {
                        for g2 in 0..=alpha[2] {
                            for g3 in 0..=alpha[3] {
                                let gamma = [g0, g1, g2, g3];
                                let dq = qpoly.derive(&gamma);
                                if dq.is_zero() {
                                    continue;
                                }
                                let mut bin = BigInt::one();
                                for i in 0..4 {
                                    bin *= binomial(alpha[i] as u32, gamma[i] as u32);
                                }
                                let rest = [
                                    alpha[0] - g0 + beta[0],
                                    alpha[1] - g1 + beta[1],
                                    alpha[2] - g2 + beta[2],
                                    alpha[3] - g3 + beta[3],
                                ];
                                let k = c12.scale(&BigRational::from_integer(bin).into());
                                for (e, dc) in dq.terms() {
                                    out.add_term(add_exps(p, e), rest, &(&k * dc));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, p: &ClassicalPolynomial) -> ClassicalPolynomial {
        let mut out = ClassicalPolynomial::zero();
        for ((coef, alpha), c) in &self.terms {
            let d = p.derive(alpha);
            out = out.add(&d.mul(&ClassicalPolynomial::monomial(*coef, c.clone())));
        }
        out
    }

    /// Operator formed by the `hbar^k` parts of the coefficients.
    pub fn hbar_order(&self, k: i32) -> ClassicalOperator {
        let mut out = Self::zero();
        for ((p, a), c) in &self.terms {
            out.add_term(*p, *a, &Scalar::constant(c.coeff(k)));
        }
        out
    }
}

const VARS: [&str; 4] = ["T", "X", "Y", "Z"];

fn factors(e: &Exps, prefix: &str, out: &mut Vec<String>) {
    for (v, k) in VARS.iter().zip(e) {
        match k {
            0 => {}
            1 => out.push(format!("{prefix}{v}")),
            _ => out.push(format!("{prefix}{v}^{k}")),
        }
    }
}

fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<String>, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = !first && c.is_negative_term();
        let c = if neg { -c } else { c.clone() };
        let body = if m.is_empty() {
            c.render(false)
        } else if c.is_one() {
            m.join("*")
        } else {
            format!("{}*{}", c.render(true), m.join("*"))
        };
        match (first, neg) {
            (true, _) => f.write_str(&body)?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ClassicalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().rev().map(|(e, c)| {
                let mut m = Vec::new();
                factors(e, "", &mut m);
                (m, c)
            }),
        )
    }
}

impl fmt::Display for ClassicalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().map(|((p, a), c)| {
                let mut m = Vec::new();
                factors(p, "", &mut m);
                factors(a, "d", &mut m);
                (m, c)
            }),
        )
    }
}

fn sc(re: i64, im: i64, k: i32) -> Scalar {
    Scalar::monomial(GaussRational::complex((re, 1), (im, 1)), k)
}

/// Image of a single generator.
pub fn realize_generator(g: Generator) -> ClassicalOperator {
    use ClassicalOperator as O;
    let c = O::coordinate;
    let d = O::partial;
    let hb = sc(1, 0, 1);
    let ihb = sc(0, 1, 1);
    match g {
        Generator::Tau => {
            let mut e = c(0).compose(&d(0));
            for i in 1..4 {
                e = e.add(&c(i).compose(&d(i)));
            }
            c(0).add(&e.scale(&hb))
        }
        Generator::X | Generator::Y | Generator::Z => {
            // (a, b, c) cyclic starting from the generator
            let a = g.index();
            let b = a % 3 + 1;
            let cc = b % 3 + 1;
            let sym = c(0).compose(&d(a)).add(&c(a).compose(&d(0)));
            let rot = c(cc).compose(&d(b)).sub(&c(b).compose(&d(cc)));
            c(a).add(&sym.scale(&hb)).add(&rot.scale(&ihb))
        }
        _ => d(g.index() - 4),
    }
}

thread_local! {
    static REAL_MEMO: RefCell<HashMap<Monomial, ClassicalOperator>> = RefCell::new(HashMap::new());
}

fn realize_monomial(m: &Monomial) -> ClassicalOperator {
    if let Some(hit) = REAL_MEMO.with(|c| c.borrow().get(m).cloned()) {
        return hit;
    }
    let op = m
        .word()
        .iter()
        .fold(ClassicalOperator::identity(), |acc, g| {
            acc.compose(&realize_generator(*g))
        });
    REAL_MEMO.with(|c| c.borrow_mut().insert(*m, op.clone()));
    op
}

/// Operator image of an element; multiplicative.
pub fn realize(e: &WeylElement) -> ClassicalOperator {
    let mut out = ClassicalOperator::zero();
    for (m, c) in e.terms() {
        out = out.add(&realize_monomial(m).scale(c));
    }
    out
}

/// Apply a word of generators right to left, without building the
/// composed operator.
pub fn apply_word(w: &[Generator], p: &ClassicalPolynomial) -> ClassicalPolynomial {
    w.iter()
        .rev()
        .fold(p.clone(), |acc, g| realize_generator(*g).apply(&acc))
}

/// `realize(e)(p)`, term by term.
pub fn apply_element(e: &WeylElement, p: &ClassicalPolynomial) -> ClassicalPolynomial {
    let mut out = ClassicalPolynomial::zero();
    for (m, c) in e.terms() {
        out = out.add(&apply_word(&m.word(), p).scale(c));
    }
    out
}

/// `realize(a) o realize(b)` applied to `p`.
pub fn apply_composed(a: &WeylElement, b: &WeylElement, p: &ClassicalPolynomial) -> ClassicalPolynomial {
    apply_element(a, &apply_element(b, p))
}

/// The polynomial `realize(u)(1)` that stands for `u` in the oracle.
pub fn symbol(u: &WeylElement) -> ClassicalPolynomial {
    apply_element(u, &ClassicalPolynomial::one())
}

/// Ordered classical monomial `T^a X^b Y^c Z^d d^beta` matching a PBW
/// monomial; the `hbar^0` part of its realization.
pub fn classical_symbol(m: &Monomial) -> ClassicalOperator {
    let mut p = [0; 4];
    let mut a = [0; 4];
    p.copy_from_slice(&m.0[..4]);
    a.copy_from_slice(&m.0[4..]);
    ClassicalOperator::term(p, a, Scalar::one())
}
