//! Numbers as C's `%.17g` prints them.

use num_complex::Complex64;

pub fn g17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{v:.16e}");
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mant), exp.abs())
    } else {
        trim(&format!("{v:.*}", (16 - exp) as usize)).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `re`, or `re+imi` / `re-imi` when the imaginary part is nonzero.
pub fn g17_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        g17(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", g17(z.re), g17(-z.im))
    } else {
        format!("{}+{}i", g17(z.re), g17(z.im))
    }
}
