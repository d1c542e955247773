//! Permutation identities shared by the permutations and acceptance targets.
//! Each check returns `(name, Ok | Err(detail))`.

#![allow(dead_code)]

use std::sync::Arc;

use ncweyl::central::{function as cf, line, poly, CentralFunction, CentralPoly};
use ncweyl::derivative::{act, BasicOperator};
use ncweyl::expr::parse_element;
use ncweyl::{GaussRational, Generator, Scalar, WeylElement};
use num_complex::Complex64;

pub type Outcome = (String, Result<(), String>);

pub fn seed() -> u64 {
    ncweyl::selftest::seed_from_env()
}

fn w(s: &str) -> WeylElement {
    parse_element(s).expect("valid expression")
}

fn sc(n: i64, d: i64) -> Scalar {
    Scalar::constant(GaussRational::ratio(n, d))
}

fn hb_pow(k: i32) -> Scalar {
    Scalar::hbar_pow(k)
}

/// Test polynomials of degree <= 3, as coefficient lists.
pub const POLYS: [&[i64]; 6] = [&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[2, -1, 3, 1], &[-5, 0, 7, -2]];

/// `f(v + s hbar)` in the algebra.
fn at(v: Generator, f: &[i64], s: i64) -> WeylElement {
    let arg = &WeylElement::gen(v) + &WeylElement::scalar(Scalar::monomial(GaussRational::from_int(s), 1));
    let mut out = WeylElement::zero();
    for (k, c) in f.iter().enumerate() {
        out.add_scaled(&arg.pow(k as u32), &Scalar::int(*c));
    }
    out
}

fn eq(name: &str, lhs: WeylElement, rhs: WeylElement) -> Outcome {
    let d = &lhs - &rhs;
    let r = if d.is_zero() { Ok(()) } else { Err(format!("difference {d}")) };
    (name.to_string(), r)
}

fn mul(a: &WeylElement, b: &WeylElement) -> WeylElement {
    a * b
}

fn half(e: &WeylElement) -> WeylElement {
    e.scale(&sc(1, 2))
}

/// Identities for `f(tau)` and `f(x)`, exactly in the algebra.
pub fn exact_single_variable() -> Vec<Outcome> {
    let mut out = Vec::new();
    let dtt = WeylElement::dtau_tilde();
    let dt = w("dtau");
    let dx = w("dx");
    let (dy, dz) = (w("dy"), w("dz"));
    let i = WeylElement::scalar(Scalar::i());
    let inv_h = WeylElement::scalar(hb_pow(-1));
    use Generator::{Tau, X};

    // matrix form
    let x = w("x");
    out.push(eq("dtau~ x = x dtau~ + hbar dx", &dtt * &x, &(&x * &dtt) + &dx.scale(&hb_pow(1))));
    out.push(eq("dx x = hbar dtau~ + x dx", &dx * &x, &dtt.scale(&hb_pow(1)) + &(&x * &dx)));

    for f in POLYS {
        let tag = format!("{f:?}");
        let (f0, fp, fm) = (at(X, f, 0), at(X, f, 1), at(X, f, -1));
        let (t0, tp, tp2) = (at(Tau, f, 0), at(Tau, f, 1), at(Tau, f, 2));

        out.push(eq(&format!("dtau~ f(tau) {tag}"), &dtt * &t0, &tp * &dtt));
        out.push(eq(
            &format!("dtau f(tau) {tag}"),
            &dt * &t0,
            &mul(&(&tp - &t0), &inv_h) + &(&tp * &dt),
        ));

        let plus = half(&(&dtt + &dx));
        let minus = half(&(&dtt - &dx));
        out.push(eq(&format!("dtau~ f(x) {tag}"), &dtt * &f0, &(&fp * &plus) + &(&fm * &minus)));
        out.push(eq(&format!("dx f(x) {tag} (shifted form)"), &dx * &f0, &(&fp * &plus) - &(&fm * &minus)));

        let second = mul(&(&(&fp + &fm) - &f0.scale(&Scalar::int(2))), &half(&inv_h));
        let plain_plus = half(&(&dt + &dx));
        let plain_minus = half(&(&dt - &dx));
        out.push(eq(
            &format!("dtau f(x) {tag}"),
            &dt * &f0,
            &(&second + &(&fp * &plain_plus)) + &(&fm * &plain_minus),
        ));
        let first = mul(&(&fp - &fm), &half(&inv_h));
        out.push(eq(
            &format!("dx f(x) {tag}"),
            &dx * &f0,
            &(&first + &(&fp * &plain_plus)) - &(&fm * &plain_minus),
        ));

        let idz = &i * &dz;
        let idy = &i * &dy;
        out.push(eq(
            &format!("dy f(x) {tag}"),
            &dy * &f0,
            &(&fp * &half(&(&dy - &idz))) + &(&fm * &half(&(&dy + &idz))),
        ));
        out.push(eq(
            &format!("dz f(x) {tag}"),
            &dz * &f0,
            &(&fp * &half(&(&dz + &idy))) + &(&fm * &half(&(&dz - &idy))),
        ));
        out.push(eq(&format!("(dy + i dz) f(x) {tag}"), &(&dy + &idz) * &f0, &fm * &(&dy + &idz)));
        out.push(eq(&format!("(dy - i dz) f(x) {tag}"), &(&dy - &idz) * &f0, &fp * &(&dy - &idz)));

        let dyz = &(&dy * &dy) + &(&dz * &dz);
        out.push(eq(&format!("(dy^2 + dz^2) f(x) {tag}"), &dyz * &f0, &f0 * &dyz));
        let lap = BasicOperator::Laplacian.element();
        out.push(eq(
            &format!("Delta(f(x)) = dx^2(f(x)) {tag}"),
            act(&lap, &f0).unwrap(),
            act(&(&dx * &dx), &f0).unwrap(),
        ));
        out.push(eq(&format!("Delta f(tau) {tag}"), &lap * &t0, &tp2 * &lap));

        let inv_h2 = WeylElement::scalar(hb_pow(-2));
        let c0 = mul(&(&(&tp2 + &t0) - &tp.scale(&Scalar::int(2))), &inv_h2);
        let c1 = mul(&(&tp2 - &tp), &inv_h).scale(&Scalar::int(2));
        out.push(eq(
            &format!("dtau^2 f(tau) {tag}"),
            &(&dt * &dt) * &t0,
            &(&c0 + &(&c1 * &dt)) + &(&tp2 * &(&dt * &dt)),
        ));

        let (fp2, fm2) = (at(X, f, 2), at(X, f, -2));
        let five = &(&(&(&fp2 - &fp.scale(&Scalar::int(4))) + &f0.scale(&Scalar::int(6))) - &fm.scale(&Scalar::int(4))) + &fm2;
        out.push(eq(
            &format!("dtau^2(f(x)) {tag}"),
            act(&(&dt * &dt), &f0).unwrap(),
            five.scale(&Scalar::monomial(GaussRational::ratio(1, 4), -2)),
        ));
        let three = &(&fp2 + &fm2) - &f0.scale(&Scalar::int(2));
        out.push(eq(
            &format!("dx^2(f(x)) {tag}"),
            act(&(&dx * &dx), &f0).unwrap(),
            three.scale(&Scalar::monomial(GaussRational::ratio(1, 4), -2)),
        ));
    }
    out
}

/// Even test functions of `r`: `1`, `r^2`, `r^4` and a combination.
pub fn even_polys() -> Vec<CentralPoly> {
    let r2 = CentralPoly::r_pow(2);
    vec![
        CentralPoly::one(),
        r2.clone(),
        CentralPoly::r_pow(4),
        CentralPoly::r_pow(4).scale(&Scalar::int(3)).sub(&r2).add(&CentralPoly::constant(Scalar::int(2))),
    ]
}

fn u(p: &CentralPoly) -> Result<WeylElement, String> {
    p.to_u().map_err(|e| e.to_string())
}

fn rh(s: i64) -> CentralPoly {
    CentralPoly::r().add(&CentralPoly::constant(Scalar::monomial(GaussRational::from_int(s), 1)))
}

fn over_2r(p: &CentralPoly) -> CentralPoly {
    p.mul_r(-1).scale(&sc(1, 2))
}

/// Identities for `f(r_hbar)`: coefficient functions are built in the
/// central layer, checked to be even, and pulled into `U`.
pub fn exact_radial() -> Vec<Outcome> {
    let mut out = Vec::new();
    let dtt = WeylElement::dtau_tilde();
    let q = BasicOperator::Q.element();
    let ix = BasicOperator::X.element().scale(&Scalar::i());
    let (x, dx) = (w("x"), w("dx"));
    let hb = Scalar::hbar();
    for (n, f) in even_polys().into_iter().enumerate() {
        let tag = format!("f_{n} = {f}");
        let run = || -> Result<Vec<Outcome>, String> {
            let fu = u(&f)?;
            let fp = f.shift(0, 1).map_err(|e| e.to_string())?;
            let fm = f.shift(0, -1).map_err(|e| e.to_string())?;
            let sum_shift = over_2r(&fp.mul(&rh(1)).add(&fm.mul(&rh(-1))));
            let diff = over_2r(&fp.sub(&fm));
            let cross = over_2r(&fp.mul(&rh(-1)).add(&fm.mul(&rh(1))));
            let r2h2 = CentralPoly::r_pow(2).sub(&CentralPoly::constant(hb.pow(2)));
            let (s_u, d_u, c_u) = (u(&sum_shift)?, u(&diff)?, u(&cross)?);
            let dd_u = u(&diff.mul(&r2h2))?;
            let mut v = Vec::new();
            v.push(eq(&format!("dtau~ f(r) {tag}"), &dtt * &fu, &(&s_u * &dtt) + &(&d_u * &q)));
            let xdt = &x * &dtt;
            v.push(eq(
                &format!("dx f(r) {tag}"),
                &dx * &fu,
                &(&s_u * &dx) + &(&d_u * &(&xdt + &ix)),
            ));
            let two_h_xdt = xdt.scale(&Scalar::monomial(GaussRational::from_int(2), 1));
            let xq = &x * &q;
            v.push(eq(
                &format!("iX f(r) {tag}"),
                &ix * &fu,
                &(&(&dd_u * &dx) - &(&d_u * &(&two_h_xdt + &xq))) + &(&c_u * &ix),
            ));
            v.push(eq(&format!("Q f(r) {tag}"), &q * &fu, &(&dd_u * &dtt) + &(&c_u * &q)));
            let lap_rhs = {
                let p2 = f.shift(0, 2).map_err(|e| e.to_string())?;
                let m2 = f.shift(0, -2).map_err(|e| e.to_string())?;
                let first = p2.sub(&m2).mul_r(-1).scale(&Scalar::monomial(GaussRational::ratio(1, 2), -1));
                let second = p2.add(&m2).sub(&f.scale(&Scalar::int(2))).scale(&Scalar::monomial(GaussRational::ratio(1, 4), -2));
                u(&first.add(&second))?
            };
            let lap = BasicOperator::Laplacian.element();
            v.push(eq(&format!("Delta(f(r)) {tag}"), act(&lap, &fu).map_err(|e| e.to_string())?, lap_rhs));
            let via_poly = u(&poly::radial_laplacian(&f).map_err(|e| e.to_string())?)?;
            v.push(eq(&format!("Delta(f(r)) via radial layer {tag}"), act(&lap, &fu).map_err(|e| e.to_string())?, via_poly));
            Ok(v)
        };
        match run() {
            Ok(v) => out.extend(v),
            Err(e) => out.push((tag, Err(e))),
        }
    }
    out
}

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn close(name: String, a: Complex64, b: Complex64, scale: f64) -> Outcome {
    let err = (a - b).norm() / (1.0 + scale);
    let r = if err < 1e-10 { Ok(()) } else { Err(format!("{a} vs {b}: {err:e}")) };
    (name, r)
}

/// The same identities applied to sampled smooth functions.
pub fn numeric(hbar: f64) -> Vec<Outcome> {
    let mut out = Vec::new();
    let h = hbar;
    let f1 = |v: f64| (0.8 * v).sin() + 0.3 * v * v * v;
    let g = line::plane(|t, x| Complex64::new((0.3 * t).exp() * (0.7 * x).cos() + t * x, 0.2 * x));
    let ft = line::plane(move |t, _| c(f1(t)));
    let fx = line::plane(move |_, x| c(f1(x)));
    let pts = [(0.1, -0.4), (0.7, 0.9), (-1.2, 1.7)];
    let sh = |v: f64, s: f64| f1(v + s * h);

    let dtt_g = line::dtau_tilde(&g, h);
    let dt_g = line::dtau(&g, h);
    let dx_g = line::dx(&g, h);
    let lhs_t = line::dtau(&line::mul(&ft, &g), h);
    let lhs_tt = line::dtau_tilde(&line::mul(&ft, &g), h);
    let lhs_xt = line::dtau_tilde(&line::mul(&fx, &g), h);
    let lhs_xx = line::dx(&line::mul(&fx, &g), h);
    let lhs_x_plain = line::dtau(&line::mul(&fx, &g), h);
    let lhs_lap = line::laplacian(&line::mul(&ft, &g), h);
    let lap_g = line::laplacian(&g, h);
    let dt2 = |p: &line::PlaneFn| line::dtau(&line::dtau(p, h), h);
    let lhs_t2 = dt2(&line::mul(&ft, &g));
    let dt2_g = dt2(&g);
    let dt2_fx = dt2(&fx);
    let dx2_fx = line::laplacian(&fx, h);

    for (t, x) in pts {
        let s = g(t, x).norm() + 1.0;
        out.push(close(format!("num dtau~ f(tau) at {t}"), lhs_tt(t, x), c(sh(t, 1.0)) * dtt_g(t, x), s / h));
        out.push(close(
            format!("num dtau f(tau) at {t}"),
            lhs_t(t, x),
            c((sh(t, 1.0) - f1(t)) / h) * g(t, x) + c(sh(t, 1.0)) * dt_g(t, x),
            s / h,
        ));
        let p = (dtt_g(t, x) + dx_g(t, x)) / 2.0;
        let m = (dtt_g(t, x) - dx_g(t, x)) / 2.0;
        out.push(close(format!("num dtau~ f(x) at {x}"), lhs_xt(t, x), c(sh(x, 1.0)) * p + c(sh(x, -1.0)) * m, s / h));
        out.push(close(format!("num dx f(x) at {x}"), lhs_xx(t, x), c(sh(x, 1.0)) * p - c(sh(x, -1.0)) * m, s / h));
        let pp = (dt_g(t, x) + dx_g(t, x)) / 2.0;
        let pm = (dt_g(t, x) - dx_g(t, x)) / 2.0;
        let second = (sh(x, 1.0) + sh(x, -1.0) - 2.0 * f1(x)) / (2.0 * h);
        out.push(close(
            format!("num dtau f(x) at {x}"),
            lhs_x_plain(t, x),
            c(second) * g(t, x) + c(sh(x, 1.0)) * pp + c(sh(x, -1.0)) * pm,
            s / h,
        ));
        out.push(close(format!("num Delta f(tau) at {t}"), lhs_lap(t, x), c(sh(t, 2.0)) * lap_g(t, x), s / (h * h)));
        let c0 = (sh(t, 2.0) + f1(t) - 2.0 * sh(t, 1.0)) / (h * h);
        let c1 = 2.0 * (sh(t, 2.0) - sh(t, 1.0)) / h;
        out.push(close(
            format!("num dtau^2 f(tau) at {t}"),
            lhs_t2(t, x),
            c(c0) * g(t, x) + c(c1) * dt_g(t, x) + c(sh(t, 2.0)) * dt2_g(t, x),
            s / (h * h),
        ));
        let five = (sh(x, 2.0) - 4.0 * sh(x, 1.0) + 6.0 * f1(x) - 4.0 * sh(x, -1.0) + sh(x, -2.0)) / (4.0 * h * h);
        out.push(close(format!("num dtau^2(f(x)) at {x}"), dt2_fx(t, x), c(five), 1.0 / (h * h)));
        let three = (sh(x, 2.0) + sh(x, -2.0) - 2.0 * f1(x)) / (4.0 * h * h);
        out.push(close(format!("num dx^2(f(x)) at {x}"), dx2_fx(t, x), c(three), 1.0 / (h * h)));
    }

    // central functions
    let fr = |r: f64| (-0.6 * r).exp() * (1.0 + r * r);
    let f = CentralFunction::new(move |_, r| Ok((-0.6 * r).exp() * (1.0 + r * r)));
    let gc = CentralFunction::new(|t, r| Ok((t * 0.5).cos() * (1.0 + r + 0.2 * r * r)));
    let fg = f.mul(&gc);
    let ev = |cf: &CentralFunction, t: f64, r: f64| cf.eval_real(t, r).unwrap();
    let dtt_fg = cf::act_dtau_tilde(&fg, h).unwrap();
    let dtt_g = cf::act_dtau_tilde(&gc, h).unwrap();
    let q_fg = cf::radial_q(&fg, h).unwrap();
    let q_g = cf::radial_q(&gc, h).unwrap();
    let dr_f = cf::radial_derivative(&f, h).unwrap();
    let ix_f = cf::act_ix_factor(&f, h).unwrap();
    let lap_f = cf::radial_laplacian(&f, h).unwrap();
    for (t, r) in [(0.0, 0.9), (0.4, 1.6), (-0.8, 2.7)] {
        let (fp, fm) = (fr(r + h), fr(r - h));
        let s = 1.0 / h;
        out.push(close(
            format!("num dtau~ f(r) at {r}"),
            ev(&dtt_fg, t, r),
            c(fp / (2.0 * r)) * (c(r + h) * ev(&dtt_g, t, r) + ev(&q_g, t, r))
                + c(fm / (2.0 * r)) * (c(r - h) * ev(&dtt_g, t, r) - ev(&q_g, t, r)),
            s,
        ));
        out.push(close(
            format!("num Q f(r) at {r}"),
            ev(&q_fg, t, r),
            c(fp / (2.0 * r)) * (c(r * r - h * h) * ev(&dtt_g, t, r) + c(r - h) * ev(&q_g, t, r))
                + c(fm / (2.0 * r)) * (c(h * h - r * r) * ev(&dtt_g, t, r) + c(r + h) * ev(&q_g, t, r)),
            s,
        ));
        // on the constant 1 only the x dtau~ term of dx and iX survives
        out.push(close(format!("num dx f(r) at {r}"), ev(&dr_f, t, r) / r, c((fp - fm) / (2.0 * r * h)), s));
        out.push(close(format!("num iX f(r) at {r}"), ev(&ix_f, t, r), c(-(fp - fm) / r), s));
        let lap = (fr(r + 2.0 * h) - fr(r - 2.0 * h)) / (2.0 * h * r)
            + (fr(r + 2.0 * h) + fr(r - 2.0 * h) - 2.0 * fr(r)) / (4.0 * h * h);
        out.push(close(format!("num Delta(f(r)) at {r}"), ev(&lap_f, t, r), c(lap), s * s));
    }
    let _ = Arc::new(());
    out
}

/// Every outcome, exact and numeric at two values of `hbar`.
pub fn permutation_suite() -> Vec<Outcome> {
    let mut v = exact_single_variable();
    v.extend(exact_radial());
    v.extend(numeric(0.1));
    v.extend(numeric(0.013));
    v
}
