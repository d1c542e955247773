//! Commutator table `[u, v]` for generator pairs.

use std::sync::OnceLock;

use super::{Generator, Monomial, WeylElement};
use crate::scalar::{GaussRational, Scalar};

use Generator::*;

type Entry = Vec<(Monomial, Scalar)>;

fn table() -> &'static [[Entry; 8]; 8] {
    static TABLE: OnceLock<[[Entry; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(build)
}

/// `c * hbar^k`
fn s(re: i64, im: i64, k: i32) -> Scalar {
    Scalar::monomial(GaussRational::complex((re, 1), (im, 1)), k)
}

fn build() -> [[Entry; 8]; 8] {
    let mut t: [[Entry; 8]; 8] = Default::default();
    let mut set = |u: Generator, v: Generator, e: Entry| {
        let neg: Entry = e.iter().map(|(m, c)| (*m, -c)).collect();
        t[u.index()][v.index()] = e;
        t[v.index()][u.index()] = neg;
    };
    let g = Monomial::generator;
    let one = Monomial::one();

    // U(u(2)): tau central, su(2) part with structure constant 2i hbar
    set(Y, X, vec![(g(Z), s(0, -2, 1))]);
    set(Z, X, vec![(g(Y), s(0, 2, 1))]);
    set(Z, Y, vec![(g(X), s(0, -2, 1))]);

    set(DTau, Tau, vec![(one, s(1, 0, 0)), (g(DTau), s(1, 0, 1))]);
    for (a, da) in [(X, DX), (Y, DY), (Z, DZ)] {
        set(DTau, a, vec![(g(da), s(1, 0, 1))]);
        set(da, Tau, vec![(g(da), s(1, 0, 1))]);
        set(da, a, vec![(one, s(1, 0, 0)), (g(DTau), s(1, 0, 1))]);
    }
    // [dx, y] = i hbar dz, [dx, z] = -i hbar dy, and cyclic
    for (da, b, c, db, dc) in [
        (DX, Y, Z, DY, DZ),
        (DY, Z, X, DZ, DX),
        (DZ, X, Y, DX, DY),
    ] {
        set(da, b, vec![(g(dc), s(0, 1, 1))]);
        set(da, c, vec![(g(db), s(0, -1, 1))]);
    }
    t
}

/// `[u, v]` as a normalized element of degree at most one.
pub fn bracket(u: Generator, v: Generator) -> WeylElement {
    let mut out = WeylElement::zero();
    for (m, c) in bracket_terms(u, v) {
        out.add_term(*m, c);
    }
    out
}

pub(crate) fn bracket_terms(u: Generator, v: Generator) -> &'static [(Monomial, Scalar)] {
    &table()[u.index()][v.index()]
}
