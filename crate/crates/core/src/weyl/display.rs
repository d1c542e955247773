use std::cmp::Reverse;
use std::fmt;

use num_traits::One;

use super::{Generator, Monomial, WeylElement};
use crate::scalar::Scalar;

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for g in Generator::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Output order: higher coordinate degree first, then lex on coordinate
/// exponents, then lower derivative degree, then lex on derivatives.
fn display_key(m: &Monomial) -> impl Ord {
    let mut g = [0u16; 4];
    let mut d = [0u16; 4];
    g.copy_from_slice(&m.0[..4]);
    d.copy_from_slice(&m.0[4..]);
    (
        Reverse(m.generator_degree()),
        Reverse(g),
        m.derivative_degree(),
        Reverse(d),
    )
}

fn body(m: &Monomial, c: &Scalar, alone: bool) -> String {
    if m.is_one() {
        return c.render(!alone && c.len() > 1);
    }
    if c.is_one() {
        return m.to_string();
    }
    format!("{}*{m}", c.render(true))
}

impl WeylElement {
    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<(Monomial, Scalar)> =
            self.terms().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by_key(|(m, _)| display_key(m));
        v
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let alone = terms.len() == 1;
        for (idx, (m, c)) in terms.iter().enumerate() {
            if idx == 0 {
                f.write_str(&body(m, c, alone))?;
            } else if c.is_negative_term() {
                write!(f, " - {}", body(m, &-c, alone))?;
            } else {
                write!(f, " + {}", body(m, c, alone))?;
            }
        }
        Ok(())
    }
}
