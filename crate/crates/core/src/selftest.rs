//! Randomized property suite behind `ncweyl selftest`.
//!
//! The seed comes from `NCWEYL_SEED` when set, so a failing run can be
//! replayed.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::central::{poly, psi, CentralPoly};
use crate::derivative::{basic_action_on_highest, BasicOperator};
use crate::expr;
use crate::lattice::{harmonic_coefficient_freedom_check, LatticeGrid};
use crate::models::{kg_dispersion_residual, kg_energy_branches, solve_ground_state};
use crate::oracle::{apply_composed, apply_element, ClassicalPolynomial};
use crate::scalar::{GaussRational, Scalar};
use crate::weyl::{ch_residual, normalize, FreeElement, Generator, Monomial, WeylElement};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// `NCWEYL_SEED`, or [`DEFAULT_SEED`] when unset or unparsable.
pub fn seed_from_env() -> u64 {
    std::env::var("NCWEYL_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn random_monomial<R: Rng>(rng: &mut R, max_degree: u32) -> Monomial {
    let n = rng.gen_range(0..=max_degree);
    let mut m = [0u16; 8];
    for _ in 0..n {
        m[rng.gen_range(0..8)] += 1;
    }
    Monomial(m)
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Generator> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| Generator::from_index(rng.gen_range(0..8))).collect()
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let mut s = Scalar::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = GaussRational::complex(
            (rng.gen_range(-3..=3), rng.gen_range(1..=3)),
            (rng.gen_range(-1..=1), 1),
        );
        s += &Scalar::monomial(c, rng.gen_range(-1..=2));
    }
    s
}

pub fn random_element<R: Rng>(rng: &mut R, terms: usize, max_degree: u32) -> WeylElement {
    let mut e = WeylElement::zero();
    for _ in 0..terms {
        e.add_term(random_monomial(rng, max_degree), &random_scalar(rng));
    }
    e
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(), String>) -> Check {
    match f() {
        Ok(()) => Check { name, passed: true, detail: String::new() },
        Err(detail) => Check { name, passed: false, detail },
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs every check; `rounds` scales the randomized ones.
pub fn run(seed: u64, rounds: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    out.push(check("ch_identity", || {
        let r = ch_residual();
        ensure(r.iter().flatten().all(WeylElement::is_zero), || "nonzero entry".into())
    }));

    let pairs: Vec<(Monomial, Monomial)> = (0..rounds)
        .map(|_| (random_monomial(&mut rng, 3), random_monomial(&mut rng, 3)))
        .collect();
    out.push(check("rewriter_vs_oracle", || {
        let basis = ClassicalPolynomial::basis(4);
        let gens = Generator::ALL.map(Monomial::generator);
        let all_pairs = gens.iter().flat_map(|a| gens.iter().map(move |b| (*a, *b)));
        for (a, b) in all_pairs.chain(pairs.iter().copied()) {
            let ab = normalize(&FreeElement::word(&[a.word(), b.word()].concat()));
            let (ea, eb) = (WeylElement::monomial(a), WeylElement::monomial(b));
            for p in &basis {
                ensure(apply_element(&ab, p) == apply_composed(&ea, &eb, p), || {
                    format!("{a} * {b} on {p:?}")
                })?;
            }
        }
        Ok(())
    }));

    let words: Vec<Vec<Generator>> = (0..rounds).map(|_| random_word(&mut rng, 5)).collect();
    out.push(check("rewriter_vs_multiplication", || {
        for w in &words {
            ensure(normalize(&FreeElement::word(w)) == WeylElement::from_word(w), || {
                format!("word {w:?}")
            })?;
        }
        Ok(())
    }));

    let triples: Vec<[WeylElement; 3]> = (0..rounds.min(20))
        .map(|_| [0, 1, 2].map(|_| random_element(&mut rng, 2, 2)))
        .collect();
    out.push(check("associativity", || {
        for [a, b, c] in &triples {
            ensure(&(a * b) * c == a * &(b * c), || format!("({a}) ({b}) ({c})"))?;
        }
        Ok(())
    }));

    out.push(check("casimir_central", || {
        let cas = WeylElement::casimir();
        for g in Generator::ALL.iter().take(4) {
            let v = WeylElement::gen(*g);
            ensure((&cas * &v - &v * &cas).is_zero(), || format!("[Cas, {g}]"))?;
        }
        Ok(())
    }));

    out.push(check("projectors", || {
        let (p1, p2) = psi::projectors();
        let id = psi::identity();
        ensure(psi::mat_eq(&psi::mat_mul(&p1, &p1), &p1), || "P1^2 != P1".into())?;
        ensure(psi::mat_eq(&psi::mat_add(&p1, &p2), &id), || "P1 + P2 != I".into())?;
        let (l1, l2) = psi::eigenvalues();
        let spectral = psi::mat_add(&psi::mat_scale(&p1, &l1), &psi::mat_scale(&p2, &l2));
        ensure(psi::mat_eq(&spectral, &psi::psi_matrix()), || "spectral sum".into())
    }));

    out.push(check("eigenvalue_table", || {
        for k in 0..=3 {
            for op in BasicOperator::TABLE {
                let got = basic_action_on_highest(k, op).map_err(|e| e.to_string())?;
                let want = op.expected_on_highest(k).expect("table entry");
                ensure(got == want, || format!("{} on b^{k}: {got} != {want}", op.name()))?;
            }
        }
        Ok(())
    }));

    let c_pairs: Vec<[(i64, i64); 2]> = (0..rounds.min(10))
        .map(|_| [0, 1].map(|_| (rng.gen_range(-5..=5), rng.gen_range(-5..=5))))
        .collect();
    out.push(check("harmonic_kernel", || {
        let grid = LatticeGrid::new(0.125, 0.0, 0.25, (2, 10), (0, 4)).map_err(|e| e.to_string())?;
        for pr in &c_pairs {
            let q = pr.map(|(a, b)| (GaussRational::from_int(a), GaussRational::from_int(b)));
            let ok = harmonic_coefficient_freedom_check(&grid, q, 0.0).map_err(|e| e.to_string())?;
            ensure(ok, || format!("pairs {pr:?}"))?;
        }
        Ok(())
    }));

    let kg: Vec<(f64, f64, f64)> = (0..rounds)
        .map(|_| (rng.gen_range(-10.0..10.0), rng.gen_range(0.0..10.0), rng.gen_range(0.0..1.0)))
        .collect();
    out.push(check("kg_branches", || {
        for &(p, m, h) in &kg {
            let (ep, em) = kg_energy_branches(p, m, h);
            for e in [ep, em] {
                let r = kg_dispersion_residual(e, p, m, h).norm();
                let scale = 1.0 + e.norm_sqr() + p * p + m * m;
                ensure(r <= 1e-12 * scale, || format!("(p, m, hbar) = ({p}, {m}, {h}): {r}"))?;
            }
        }
        let (ep, em) = kg_energy_branches(5.0, 3.0, 0.0);
        ensure(ep == Complex64::new(4.0, 0.0) && em == Complex64::new(-4.0, 0.0), || {
            "classical branches".into()
        })
    }));

    let hyd: Vec<(f64, f64, f64, f64)> = (0..rounds.min(20))
        .map(|_| {
            (
                rng.gen_range(0.5..2.0),
                rng.gen_range(0.5..2.0),
                rng.gen_range(0.1..2.0),
                rng.gen_range(0.0..1e-2),
            )
        })
        .collect();
    out.push(check("hydrogen_ground_state", || {
        for &(a, b, q, h) in &hyd {
            let g = solve_ground_state(a, b, q, h).map_err(|e| e.to_string())?;
            ensure(g.residuals.iter().all(|r| *r < 1e-10), || {
                format!("({a}, {b}, {q}, {h}): {:?}", g.residuals)
            })?;
            let g0 = solve_ground_state(a, b, q, 0.0).map_err(|e| e.to_string())?;
            let (s0, e0) = (q / (2.0 * b), -q * q / (4.0 * a * b));
            ensure((g0.sigma - s0).abs() <= 1e-12 * s0 && (g0.e - e0).abs() <= 1e-12 * e0.abs(), || {
                format!("classical limit at ({a}, {b}, {q})")
            })?;
        }
        Ok(())
    }));

    out.push(check("boost_identity", || {
        let f = CentralPoly::tau().pow(2).sub(&CentralPoly::r_pow(2));
        let got = poly::radial_boost(&f).map_err(|e| e.to_string())?;
        let want = CentralPoly::monomial(0, 1, Scalar::monomial(GaussRational::from_int(-2), 1));
        ensure(got == want, || format!("{got}"))
    }));

    let elems: Vec<WeylElement> = (0..rounds).map(|_| random_element(&mut rng, 3, 3)).collect();
    out.push(check("print_parse_round_trip", || {
        for e in &elems {
            let s = e.to_string();
            let ast = expr::parse(&s).map_err(|err| format!("{s}: {err}"))?;
            ensure(ast.to_string() == s, || format!("reprint of {s}"))?;
            let back = ast.eval().map_err(|err| err.to_string())?;
            ensure(&back == e, || format!("value of {s}"))?;
        }
        ensure(expr::parse("1").map(|a| a.eval() == Ok(WeylElement::one())).unwrap_or(false), || {
            "literal one".into()
        })?;
        ensure(Scalar::one().is_one(), || "unit".into())
    }));

    out
}
