//! Action of derivatives on `U` by permutation plus counit, the coproduct
//! form of the Leibniz rule, isotypic components and the basic invariant
//! operators.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::central::poly::{self, CentralPoly};
use crate::error::{Error, Result};
use crate::scalar::{GaussRational, Scalar};
use crate::weyl::{Generator, Monomial, WeylElement};

/// `epsilon(1) = 1`, `epsilon(d) = 0`; defined on the derivative subalgebra.
pub fn counit(d: &WeylElement) -> Result<Scalar> {
    if !d.in_d() {
        return Err(Error::Invalid(format!("counit needs a pure derivative, got {d}")));
    }
    Ok(d.constant_term())
}

/// Operator meaning of `d` on `U`: normalize `d u` and drop every monomial
/// that still carries a derivative.
pub fn act(d: &WeylElement, u: &WeylElement) -> Result<WeylElement> {
    if !u.in_u() {
        return Err(Error::Invalid(format!("act needs u in U, got {u}")));
    }
    Ok((d * u).derivative_free_part())
}

/// Element of `D (x) D`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry((a, b)).or_insert_with(Scalar::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// `a (x) b` for elements, expanded bilinearly.
    pub fn pure(a: &WeylElement, b: &WeylElement) -> Self {
        let mut t = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(*ma, *mb, &(ca * cb));
            }
        }
        t
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(*a, *b, c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, &(c * s));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(epsilon (x) id)`
    pub fn counit_left(&self) -> WeylElement {
        let mut out = WeylElement::zero();
        for ((a, b), c) in &self.terms {
            if a.is_one() {
                out.add_term(*b, c);
            }
        }
        out
    }

    /// `(id (x) epsilon)`
    pub fn counit_right(&self) -> WeylElement {
        let mut out = WeylElement::zero();
        for ((a, b), c) in &self.terms {
            if b.is_one() {
                out.add_term(*a, c);
            }
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("{}*({a} # {b})", c.render(true)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn dgen(g: Generator) -> Monomial {
    Monomial::generator(g)
}

/// Coproduct of a single first-order derivative, in the `(tau, hbar)`
/// variables:
///
/// ```text
/// D(dtau) = dtau#1 + 1#dtau + hbar (dtau#dtau + dx#dx + dy#dy + dz#dz)
/// D(dx)   = dx#1 + 1#dx + hbar (dtau#dx + dx#dtau) + i hbar (dy#dz - dz#dy)
/// ```
/// and cyclically for `dy`, `dz`.
fn coproduct_gen(g: Generator) -> Tensor {
    use Generator::*;
    let one = Monomial::one();
    let hb = Scalar::hbar();
    let ihb = Scalar::monomial(GaussRational::i(), 1);
    let mut t = Tensor::zero();
    t.add_term(dgen(g), one, &Scalar::one());
    t.add_term(one, dgen(g), &Scalar::one());
    match g {
        DTau => {
            for d in [DTau, DX, DY, DZ] {
                t.add_term(dgen(d), dgen(d), &hb);
            }
        }
        DX | DY | DZ => {
            let (b, c) = match g {
                DX => (DY, DZ),
                DY => (DZ, DX),
                _ => (DX, DY),
            };
            t.add_term(dgen(DTau), dgen(g), &hb);
            t.add_term(dgen(g), dgen(DTau), &hb);
            t.add_term(dgen(b), dgen(c), &ihb);
            t.add_term(dgen(c), dgen(b), &-&ihb);
        }
        _ => unreachable!(),
    }
    t
}

/// Coproduct of an element of `span{1, dtau, dx, dy, dz}`.
pub fn coproduct(d: &WeylElement) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (m, c) in d.terms() {
        if m.is_one() {
            out.add_term(*m, *m, c);
            continue;
        }
        match m.last() {
            Some(g) if g.is_derivative() && m.degree() == 1 => {
                out = out.add(&coproduct_gen(g).scale(c));
            }
            _ => {
                return Err(Error::Invalid(format!(
                    "coproduct is only defined on first-order derivatives, got {d}"
                )))
            }
        }
    }
    Ok(out)
}

/// The same coproducts written directly in the `(t, h)` presentation
/// (`dt = -i dtau`, `h = 2 i hbar`), in the order `dt, dx, dy, dz`:
///
/// ```text
/// D(dt) = dt#1 + 1#dt + (h/2)(dt#dt - dx#dx - dy#dy - dz#dz)
/// D(dx) = dx#1 + 1#dx + (h/2)(dt#dx + dx#dt + dy#dz - dz#dy)
/// ```
pub fn coproduct_t_presentation() -> [Tensor; 4] {
    let dt = WeylElement::dt();
    let dx = WeylElement::dx();
    let dy = WeylElement::dy();
    let dz = WeylElement::dz();
    let one = WeylElement::one();
    let h2 = Scalar::h().scale(&GaussRational::ratio(1, 2));
    let prim = |d: &WeylElement| Tensor::pure(d, &one).add(&Tensor::pure(&one, d));
    let sq = |a: &WeylElement, b: &WeylElement| Tensor::pure(a, b);
    let neg = Scalar::int(-1);

    let t_part = sq(&dt, &dt)
        .add(&sq(&dx, &dx).scale(&neg))
        .add(&sq(&dy, &dy).scale(&neg))
        .add(&sq(&dz, &dz).scale(&neg));
    let cyc = |a: &WeylElement, b: &WeylElement, c: &WeylElement| {
        prim(a).add(
            &sq(&dt, a)
                .add(&sq(a, &dt))
                .add(&sq(b, c))
                .add(&sq(c, b).scale(&neg))
                .scale(&h2),
        )
    };
    [
        prim(&dt).add(&t_part.scale(&h2)),
        cyc(&dx, &dy, &dz),
        cyc(&dy, &dz, &dx),
        cyc(&dz, &dx, &dy),
    ]
}

/// Leibniz rule through the coproduct: `sum act(d', u) act(d'', v)`.
pub fn act_via_coproduct(d: &WeylElement, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
    let t = coproduct(d)?;
    let mut out = WeylElement::zero();
    for ((a, b), c) in t.terms() {
        let au = act(&WeylElement::monomial(*a), u)?;
        if au.is_zero() {
            continue;
        }
        let bv = act(&WeylElement::monomial(*b), v)?;
        out.add_scaled(&(&au * &bv), c);
    }
    Ok(out)
}

/// `b = -ix - y`, the highest-weight generator.
pub fn b() -> WeylElement {
    &WeylElement::x().scale(&-Scalar::i()) - &WeylElement::y()
}

/// `c = -ix + y`, the lowering generator.
pub fn c() -> WeylElement {
    &WeylElement::x().scale(&-Scalar::i()) + &WeylElement::y()
}

/// Basis of the spin-`k` component: `b^k` and its images under `ad_c`.
#[derive(Clone, Debug)]
pub struct IsotypicBasis {
    pub k: u32,
    pub vectors: Vec<WeylElement>,
}

pub fn isotypic_basis(k: u32) -> IsotypicBasis {
    let cc = c();
    let mut v = vec![b().pow(k)];
    for _ in 0..2 * k {
        let next = cc.commutator(v.last().unwrap());
        v.push(next);
    }
    IsotypicBasis { k, vectors: v }
}

/// `sum_a [a, [a, w]]` over `a = x, y, z`.
pub fn ad_casimir(w: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for a in [WeylElement::x(), WeylElement::y(), WeylElement::z()] {
        out = &out + &a.commutator(&a.commutator(w));
    }
    out
}

/// Whether `w` lies in the spin-`k` isotypic component of `U`, i.e. the
/// adjoint Casimir acts on it by `4 hbar^2 k (k + 1)`.
pub fn in_isotypic_component(w: &WeylElement, k: u32) -> bool {
    let lambda = Scalar::monomial(GaussRational::from_int(4 * (k * (k + 1)) as i64), 2);
    ad_casimir(w) == w.scale(&lambda)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicOperator {
    /// plain `dt = -i dtau`
    Dt,
    /// `dt~ = -i (dtau + 1/hbar)`
    DtTilde,
    Q,
    Laplacian,
    /// `dt~^2`
    Delta0,
    /// `Q dt~`
    Delta2,
    /// `Q^2`
    Delta3,
    X,
    Y,
    Z,
}

impl BasicOperator {
    pub const TABLE: [BasicOperator; 7] = [
        BasicOperator::Dt,
        BasicOperator::DtTilde,
        BasicOperator::Q,
        BasicOperator::Laplacian,
        BasicOperator::Delta0,
        BasicOperator::Delta2,
        BasicOperator::Delta3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasicOperator::Dt => "dt",
            BasicOperator::DtTilde => "dt~",
            BasicOperator::Q => "Q",
            BasicOperator::Laplacian => "Delta",
            BasicOperator::Delta0 => "Delta0",
            BasicOperator::Delta2 => "Delta2",
            BasicOperator::Delta3 => "Delta3",
            BasicOperator::X => "X",
            BasicOperator::Y => "Y",
            BasicOperator::Z => "Z",
        }
    }

    pub fn element(self) -> WeylElement {
        let (x, y, z) = (WeylElement::x(), WeylElement::y(), WeylElement::z());
        let (dx, dy, dz) = (WeylElement::dx(), WeylElement::dy(), WeylElement::dz());
        match self {
            BasicOperator::Dt => WeylElement::dt(),
            BasicOperator::DtTilde => WeylElement::dt_tilde(),
            BasicOperator::Q => &(&(&x * &dx) + &(&y * &dy)) + &(&z * &dz),
            BasicOperator::Laplacian => &(&(&dx * &dx) + &(&dy * &dy)) + &(&dz * &dz),
            BasicOperator::Delta0 => WeylElement::dt_tilde().pow(2),
            BasicOperator::Delta2 => &BasicOperator::Q.element() * &WeylElement::dt_tilde(),
            BasicOperator::Delta3 => BasicOperator::Q.element().pow(2),
            BasicOperator::X => &(&y * &dz) - &(&z * &dy),
            BasicOperator::Y => &(&z * &dx) - &(&x * &dz),
            BasicOperator::Z => &(&x * &dy) - &(&y * &dx),
        }
    }

    /// Value on `b^k` predicted by the classical formula, with `h = 2 i hbar`.
    pub fn expected_on_highest(self, k: u32) -> Option<Scalar> {
        let two_over_h = Scalar::int(2).div_exact(&Scalar::h())?;
        let k_s = Scalar::int(k as i64);
        Some(match self {
            BasicOperator::Dt => Scalar::zero(),
            BasicOperator::DtTilde => two_over_h,
            BasicOperator::Q => k_s,
            BasicOperator::Laplacian => Scalar::zero(),
            BasicOperator::Delta0 => two_over_h.pow(2),
            BasicOperator::Delta2 => &k_s * &two_over_h,
            BasicOperator::Delta3 => k_s.pow(2),
            _ => return None,
        })
    }
}

/// The `lambda` with `act(op, b^k) = lambda b^k`.
pub fn basic_action_on_highest(k: u32, op: BasicOperator) -> Result<Scalar> {
    let bk = b().pow(k);
    let img = act(&op.element(), &bk)?;
    let (m, c) = bk.terms().next().expect("b^k is nonzero");
    let lambda = img
        .coeff(m)
        .div_exact(c)
        .ok_or_else(|| Error::NotEigenvector(format!("{} on b^{k}", op.name())))?;
    if img != bk.scale(&lambda) {
        return Err(Error::NotEigenvector(format!("{} on b^{k}", op.name())));
    }
    Ok(lambda)
}

/// Element of `U (x) K(tau, r)` modulo the commutation ideal: central
/// factors are collected on the right of each `U`-monomial.
type Mixed = BTreeMap<Monomial, CentralPoly>;

fn mixed_add(acc: &mut Mixed, u: &WeylElement, f: &CentralPoly, s: &Scalar) {
    for (m, c) in u.terms() {
        let e = acc.entry(*m).or_default();
        *e = e.add(&f.scale(&(c * s)));
    }
}

/// Action of `1` or a first-order derivative on a central polynomial, as a
/// pair `(U-factor, central factor)`.
fn act_on_central(d: &Monomial, f: &CentralPoly) -> Result<(WeylElement, CentralPoly)> {
    if d.is_one() {
        return Ok((WeylElement::one(), f.clone()));
    }
    let g = d.last().expect("nonempty");
    match g {
        Generator::DTau => Ok((WeylElement::one(), poly::act_dtau(f)?)),
        Generator::DX | Generator::DY | Generator::DZ => {
            let coord = WeylElement::gen(Generator::from_index(g.index() - 4));
            Ok((coord, poly::radial_derivative(f)?.mul_r(-1)))
        }
        _ => unreachable!(),
    }
}

/// Checks that `d_v(u f - f u)` vanishes modulo the ideal generated by
/// `u' g - g u'`, with the derivative extended through the coproduct.
pub fn ideal_invariance_check(v: Generator, u: Generator, f: &CentralPoly) -> Result<bool> {
    if v.is_derivative() || u.is_derivative() {
        return Err(Error::Invalid("generators must be tau, x, y or z".into()));
    }
    let ue = WeylElement::gen(u);
    let t = coproduct(&WeylElement::gen(v.derivative()))?;
    let mut acc = Mixed::new();
    for ((a, b), c) in t.terms() {
        // d_v(u f) = sum a(u) b(f)
        let au = act(&WeylElement::monomial(*a), &ue)?;
        if !au.is_zero() {
            let (bu, bf) = act_on_central(b, f)?;
            mixed_add(&mut acc, &(&au * &bu), &bf, c);
        }
        // d_v(f u) = sum a(f) b(u)
        let bu = act(&WeylElement::monomial(*b), &ue)?;
        if !bu.is_zero() {
            let (au2, af) = act_on_central(a, f)?;
            mixed_add(&mut acc, &(&au2 * &bu), &af, &-c);
        }
    }
    Ok(acc.values().all(|p| p.is_zero()))
}
