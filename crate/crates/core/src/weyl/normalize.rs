//! Normal ordering.
//!
//! Two independent routes to the PBW form:
//! * [`normalize`] rewrites free words by swapping the leftmost adjacent
//!   out-of-order pair, `u v -> v u + [u, v]`;
//! * [`mul`] multiplies PBW monomials recursively with a per-thread memo,
//!   and is what `WeylElement * WeylElement` uses.
//!
//! Both terminate because each swap lowers either the total degree or the
//! inversion count of a word.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::relations::bracket_terms;
use super::{Generator, Monomial, WeylElement};
use crate::scalar::Scalar;

thread_local! {
    static GEN_MEMO: RefCell<HashMap<(Monomial, Generator), WeylElement>> =
        RefCell::new(HashMap::new());
    static MONO_MEMO: RefCell<HashMap<(Monomial, Monomial), WeylElement>> =
        RefCell::new(HashMap::new());
}

/// `m * g` for a PBW monomial `m`.
fn mono_times_gen(m: &Monomial, g: Generator) -> WeylElement {
    let last = match m.last() {
        Some(l) if l > g => l,
        _ => return WeylElement::monomial(m.with(g, 1)),
    };
    if let Some(hit) = GEN_MEMO.with(|c| c.borrow().get(&(*m, g)).cloned()) {
        return hit;
    }
    // m = m' last, and last g = g last + [last, g]
    let rest = m.with(last, -1);
    let mut out = WeylElement::zero();
    let head = mono_times_gen(&rest, g);
    for (mm, c) in head.terms() {
        out.add_scaled(&mono_times_gen(mm, last), c);
    }
    for (bm, bc) in bracket_terms(last, g) {
        match bm.last() {
            None => out.add_term(rest, bc),
            Some(h) => out.add_scaled(&mono_times_gen(&rest, h), bc),
        }
    }
    GEN_MEMO.with(|c| c.borrow_mut().insert((*m, g), out.clone()));
    out
}

pub(crate) fn mul_gen(a: &WeylElement, g: Generator) -> WeylElement {
    let mut out = WeylElement::zero();
    for (m, c) in a.terms() {
        out.add_scaled(&mono_times_gen(m, g), c);
    }
    out
}

fn mono_times_mono(a: &Monomial, b: &Monomial) -> WeylElement {
    if b.is_one() {
        return WeylElement::monomial(*a);
    }
    if a.is_one() {
        return WeylElement::monomial(*b);
    }
    if let Some(hit) = MONO_MEMO.with(|c| c.borrow().get(&(*a, *b)).cloned()) {
        return hit;
    }
    let mut acc = WeylElement::monomial(*a);
    for g in b.word() {
        acc = mul_gen(&acc, g);
    }
    MONO_MEMO.with(|c| c.borrow_mut().insert((*a, *b), acc.clone()));
    acc
}

pub(crate) fn mul(a: &WeylElement, b: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            out.add_scaled(&mono_times_mono(ma, mb), &(ca * cb));
        }
    }
    out
}

/// Linear combination of arbitrary (unordered) words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeElement {
    terms: BTreeMap<Vec<Generator>, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: &[Generator]) -> Self {
        Self::term(w.to_vec(), Scalar::one())
    }

    pub fn term(w: Vec<Generator>, c: Scalar) -> Self {
        let mut f = Self::zero();
        f.add_term(w, &c);
        f
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn add_term(&mut self, w: Vec<Generator>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Generator>, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn add(&self, o: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * s));
        }
        out
    }

    /// Concatenation product, no reordering.
    pub fn concat(&self, o: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &o.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, &(ca * cb));
            }
        }
        out
    }

    /// Embed a PBW element as its ordered words.
    pub fn from_element(e: &WeylElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (m, c) in e.terms() {
            out.add_term(m.word(), c);
        }
        out
    }
}

/// Normal form by adjacent-pair rewriting.
pub fn normalize(e: &FreeElement) -> WeylElement {
    let mut pending: BTreeMap<Vec<Generator>, Scalar> = e.terms.clone();
    let mut out = WeylElement::zero();
    // Longest words first so that lower-order debris is merged before it
    // is processed.
    while let Some(w) = pending
        .keys()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .cloned()
    {
        let c = pending.remove(&w).unwrap();
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            let mut m = Monomial::one();
            for g in &w {
                m = m.with(*g, 1);
            }
            out.add_term(m, &c);
            continue;
        };
        let (u, v) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        push(&mut pending, swapped, &c);
        for (bm, bc) in bracket_terms(u, v) {
            let mut nw = w[..i].to_vec();
            nw.extend(bm.word());
            nw.extend_from_slice(&w[i + 2..]);
            push(&mut pending, nw, &(&c * bc));
        }
    }
    out
}

fn push(p: &mut BTreeMap<Vec<Generator>, Scalar>, w: Vec<Generator>, c: &Scalar) {
    let e = p.entry(w.clone()).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&w);
    }
}
