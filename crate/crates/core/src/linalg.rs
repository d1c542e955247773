//! Exact rank over the Laurent ring in `hbar`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// Rank of a dense matrix by fraction-free (Bareiss) elimination.
///
/// Intermediate divisions are exact in `Q(i)[hbar, 1/hbar]`; a failed
/// division would mean an arithmetic bug and is reported as an error.
pub fn rank(mut m: Vec<Vec<Scalar>>) -> Result<usize> {
    let rows = m.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = Scalar::from(1);
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Invalid("inexact Bareiss step".into()))?;
            }
            m[i][c] = Scalar::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Ok(r)
}

/// Rank of a family of elements, using their coefficient vectors.
pub fn element_rank(v: &[WeylElement]) -> Result<usize> {
    let mut cols: Vec<Monomial> = v.iter().flat_map(|e| e.terms().map(|(m, _)| *m)).collect();
    cols.sort();
    cols.dedup();
    let mat = v
        .iter()
        .map(|e| cols.iter().map(|m| e.coeff(m)).collect())
        .collect();
    rank(mat)
}
