//! Radial difference operators restricted to the lattice
//! `r = a + j hbar`, `tau = b + l hbar`.
//!
//! Even `j` form the sublattice `a + 2k hbar`, odd `j` the shifted one
//! `a + hbar + 2k hbar`. The Laplacian stencil stays on one sublattice; the
//! radial derivative maps one onto the other. Boundary nodes whose stencil
//! leaves the block are dropped from the output.

use std::fmt;
use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::g17;
use crate::scalar::FieldValue;

/// Lattice parameters as read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeConfig {
    #[serde(default)]
    pub a: Option<f64>,
    #[serde(default)]
    pub b: Option<f64>,
    pub hbar: f64,
    pub k_min: i64,
    pub k_max: i64,
    pub l_min: i64,
    pub l_max: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeGrid {
    pub a: f64,
    pub b: f64,
    pub hbar: f64,
    /// Index range in units of `hbar`: `2 k_min ..= 2 k_max`.
    pub j_range: (i64, i64),
    pub l_range: (i64, i64),
}

impl LatticeGrid {
    /// Validates the block and rejects nodes at `r in {0, +-hbar, +-2 hbar}`.
    pub fn new(a: f64, b: f64, hbar: f64, k: (i64, i64), l: (i64, i64)) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::Invalid(format!("hbar must be positive, got {hbar}")));
        }
        if k.0 > k.1 || l.0 > l.1 {
            return Err(Error::Invalid("empty index range".into()));
        }
        let g = Self {
            a,
            b,
            hbar,
            j_range: (2 * k.0, 2 * k.1),
            l_range: l,
        };
        for j in g.j_range.0..=g.j_range.1 {
            let r = g.r(j);
            for p in [0.0, 1.0, -1.0, 2.0, -2.0] {
                if (r - p * hbar).abs() <= 1e-12 * hbar {
                    return Err(Error::Pole(format!(
                        "lattice node r = {r} coincides with {p}*hbar"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Defaults `a = hbar / 2`, `b = 0`.
    pub fn from_config(c: &LatticeConfig) -> Result<Self> {
        Self::new(
            c.a.unwrap_or(c.hbar / 2.0),
            c.b.unwrap_or(0.0),
            c.hbar,
            (c.k_min, c.k_max),
            (c.l_min, c.l_max),
        )
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: LatticeConfig =
            serde_json::from_str(s).map_err(|e| Error::Invalid(format!("lattice config: {e}")))?;
        Self::from_config(&c)
    }

    pub fn r(&self, j: i64) -> f64 {
        self.a + j as f64 * self.hbar
    }

    pub fn tau(&self, l: i64) -> f64 {
        self.b + l as f64 * self.hbar
    }

    /// 0 for the `a + 2k hbar` sublattice, 1 for the shifted one.
    pub fn sublattice(j: i64) -> usize {
        j.rem_euclid(2) as usize
    }
}

/// Values on a rectangular block of lattice indices.
#[derive(Clone, Debug)]
pub struct GridFunction<V> {
    pub grid: LatticeGrid,
    pub j_range: (i64, i64),
    pub l_range: (i64, i64),
    values: Vec<Option<V>>,
}

/// Operators that can be restricted to the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOp {
    RadialLaplacian,
    DTau,
    RadialDerivative,
}

impl LatticeOp {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "radial_laplacian" | "laplacian" => Some(Self::RadialLaplacian),
            "d_tau" | "dtau" => Some(Self::DTau),
            "radial_derivative" | "dr" => Some(Self::RadialDerivative),
            _ => None,
        }
    }

    /// `(j margin on both sides, l margin at the top)`
    fn margins(self) -> (i64, i64) {
        match self {
            Self::RadialLaplacian => (2, 2),
            Self::DTau | Self::RadialDerivative => (1, 1),
        }
    }
}

impl fmt::Display for LatticeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::RadialLaplacian => "radial_laplacian",
            Self::DTau => "d_tau",
            Self::RadialDerivative => "radial_derivative",
        })
    }
}

fn conv<V: FieldValue>(v: f64) -> V {
    V::from_f64(v).expect("finite lattice coordinate")
}

impl<V: FieldValue> GridFunction<V> {
    /// Sample `f(tau, r)` on every node of the grid.
    pub fn sample<F>(grid: &LatticeGrid, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Result<V>,
    {
        let (j_range, l_range) = (grid.j_range, grid.l_range);
        let mut values = Vec::new();
        for l in l_range.0..=l_range.1 {
            for j in j_range.0..=j_range.1 {
                values.push(Some(f(grid.tau(l), grid.r(j))?));
            }
        }
        Ok(Self {
            grid: grid.clone(),
            j_range,
            l_range,
            values,
        })
    }

    /// Block with no values; fill with [`GridFunction::set`].
    pub fn empty(grid: &LatticeGrid) -> Self {
        let n = ((grid.j_range.1 - grid.j_range.0 + 1) * (grid.l_range.1 - grid.l_range.0 + 1)) as usize;
        Self {
            grid: grid.clone(),
            j_range: grid.j_range,
            l_range: grid.l_range,
            values: vec![None; n],
        }
    }

    fn index(&self, j: i64, l: i64) -> Option<usize> {
        if j < self.j_range.0 || j > self.j_range.1 || l < self.l_range.0 || l > self.l_range.1 {
            return None;
        }
        let w = self.j_range.1 - self.j_range.0 + 1;
        Some(((l - self.l_range.0) * w + (j - self.j_range.0)) as usize)
    }

    pub fn set(&mut self, j: i64, l: i64, v: V) -> Result<()> {
        let i = self
            .index(j, l)
            .ok_or_else(|| Error::OutOfRange(format!("node (j={j}, l={l})")))?;
        self.values[i] = Some(v);
        Ok(())
    }

    /// Value at an in-range node; a missing value is an error naming it.
    pub fn get(&self, j: i64, l: i64) -> Result<&V> {
        let i = self.index(j, l).ok_or_else(|| {
            Error::OutOfRange(format!(
                "node (j={j}, l={l}) at r={}, tau={} is outside the block",
                self.grid.r(j),
                self.grid.tau(l)
            ))
        })?;
        self.values[i].as_ref().ok_or_else(|| {
            Error::OutOfRange(format!(
                "no value at node (j={j}, l={l}) r={}, tau={}",
                self.grid.r(j),
                self.grid.tau(l)
            ))
        })
    }

    /// Nodes with values, as `(j, l, value)`.
    pub fn nodes(&self) -> impl Iterator<Item = (i64, i64, &V)> + '_ {
        let w = self.j_range.1 - self.j_range.0 + 1;
        self.values.iter().enumerate().filter_map(move |(i, v)| {
            let i = i as i64;
            v.as_ref()
                .map(|v| (self.j_range.0 + i % w, self.l_range.0 + i / w, v))
        })
    }

    pub fn len(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest `|value|` over the block.
    pub fn max_abs(&self) -> f64 {
        self.nodes()
            .map(|(_, _, v)| v.to_complex().norm())
            .fold(0.0, f64::max)
    }

    /// Apply a stencil on the interior; the output block is smaller.
    pub fn restrict(&self, op: LatticeOp) -> Result<GridFunction<V>> {
        let (mj, ml) = op.margins();
        let j_range = (self.j_range.0 + mj, self.j_range.1 - mj);
        let l_range = (self.l_range.0, self.l_range.1 - ml);
        if j_range.0 > j_range.1 || l_range.0 > l_range.1 {
            return Err(Error::OutOfRange(format!(
                "block too small for the {op} stencil"
            )));
        }
        let h: V = conv(self.grid.hbar);
        let two = V::from_int(2);
        let four = V::from_int(4);
        let mut out = GridFunction {
            grid: self.grid.clone(),
            j_range,
            l_range,
            values: Vec::new(),
        };
        for l in l_range.0..=l_range.1 {
            for j in j_range.0..=j_range.1 {
                let r: V = conv(self.grid.r(j));
                let pole = || Error::Pole(format!("r = 0 at node (j={j}, l={l})"));
                let v = match op {
                    LatticeOp::RadialLaplacian => {
                        let p = self.get(j + 2, l + 2)?.clone();
                        let m = self.get(j - 2, l + 2)?.clone();
                        let c = self.get(j, l + 2)?.clone();
                        let second = (p.clone() + m.clone() - two.clone() * c)
                            .checked_div(&(four.clone() * h.clone() * h.clone()))
                            .ok_or_else(pole)?;
                        let first = (p - m)
                            .checked_div(&(two.clone() * h.clone() * r))
                            .ok_or_else(pole)?;
                        second + first
                    }
                    LatticeOp::DTau => {
                        let p = self.get(j + 1, l + 1)?.clone();
                        let m = self.get(j - 1, l + 1)?.clone();
                        let c = self.get(j, l)?.clone();
                        let num = p * (r.clone() + h.clone()) + m * (r.clone() - h.clone())
                            - two.clone() * r.clone() * c;
                        num.checked_div(&(two.clone() * r * h.clone()))
                            .ok_or_else(pole)?
                    }
                    LatticeOp::RadialDerivative => {
                        let p = self.get(j + 1, l + 1)?.clone();
                        let m = self.get(j - 1, l + 1)?.clone();
                        (p - m).checked_div(&(two.clone() * h.clone())).ok_or_else(pole)?
                    }
                };
                out.values.push(Some(v));
            }
        }
        Ok(out)
    }

    /// `sum 2 hbar d_r g` over the midpoints `j_from + 1, j_from + 3, ...`
    /// at fixed `l`; telescopes to `g(l+1, j_to) - g(l+1, j_from)`.
    pub fn telescoping_integral(&self, l: i64, j_from: i64, j_to: i64) -> Result<V> {
        if j_to < j_from || (j_to - j_from) % 2 != 0 {
            return Err(Error::Invalid(
                "endpoints must be on one sublattice with j_from <= j_to".into(),
            ));
        }
        let h: V = conv(self.grid.hbar);
        let two = V::from_int(2);
        let mut acc = V::zero();
        let mut j = j_from + 1;
        while j < j_to {
            let d = (self.get(j + 1, l + 1)?.clone() - self.get(j - 1, l + 1)?.clone())
                .checked_div(&(two.clone() * h.clone()))
                .ok_or_else(|| Error::Invalid("hbar = 0".into()))?;
            acc = acc + two.clone() * h.clone() * d;
            j += 2;
        }
        Ok(acc)
    }
}

impl GridFunction<Complex64> {
    /// CSV with header `tau,r,value` (plus `value_im` when any value is
    /// complex).
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let complex = self.nodes().any(|(_, _, v)| v.im != 0.0);
        let mut wr = csv::Writer::from_writer(w);
        let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
        if complex {
            wr.write_record(["tau", "r", "value", "value_im"]).map_err(io)?;
        } else {
            wr.write_record(["tau", "r", "value"]).map_err(io)?;
        }
        for (j, l, v) in self.nodes() {
            let mut rec = vec![
                g17(self.grid.tau(l)),
                g17(self.grid.r(j)),
                g17(v.re),
            ];
            if complex {
                rec.push(g17(v.im));
            }
            wr.write_record(&rec).map_err(io)?;
        }
        wr.flush().map_err(|e| Error::Invalid(format!("csv: {e}")))?;
        Ok(())
    }

    /// Read values back onto `grid`; rows must sit on lattice nodes.
    pub fn read_csv<R: Read>(grid: &LatticeGrid, rd: R) -> Result<Self> {
        #[derive(Deserialize)]
        struct Row {
            tau: f64,
            r: f64,
            value: f64,
            #[serde(default)]
            value_im: Option<f64>,
        }
        let mut out = Self::empty(grid);
        let mut rdr = csv::Reader::from_reader(rd);
        for row in rdr.deserialize::<Row>() {
            let row = row.map_err(|e| Error::Invalid(format!("csv: {e}")))?;
            let jf = (row.r - grid.a) / grid.hbar;
            let lf = (row.tau - grid.b) / grid.hbar;
            let (j, l) = (jf.round() as i64, lf.round() as i64);
            if (jf - j as f64).abs() > 1e-9 || (lf - l as f64).abs() > 1e-9 {
                return Err(Error::Invalid(format!(
                    "row (tau={}, r={}) is not a lattice node",
                    row.tau, row.r
                )));
            }
            out.set(j, l, Complex64::new(row.value, row.value_im.unwrap_or(0.0)))?;
        }
        Ok(out)
    }
}

/// `C1 + C2 / r` with one `(C1, C2)` pair per sublattice, sampled on the
/// grid, then the restricted Laplacian; returns the largest residual.
pub fn harmonic_residual<V: FieldValue>(grid: &LatticeGrid, pairs: [(V, V); 2]) -> Result<f64> {
    let g = GridFunction::<V>::sample(grid, |_, r| {
        let j = ((r - grid.a) / grid.hbar).round() as i64;
        let (c1, c2) = pairs[LatticeGrid::sublattice(j)].clone();
        let rv: V = conv(r);
        Ok(c1 + c2.checked_div(&rv).ok_or_else(|| Error::Pole("r = 0".into()))?)
    })?;
    Ok(g.restrict(LatticeOp::RadialLaplacian)?.max_abs())
}

/// True iff sublattice-wise constant `(C1, C2)` pairs give a harmonic
/// function; `tol` is 0 for exact value types.
pub fn harmonic_coefficient_freedom_check<V: FieldValue>(
    grid: &LatticeGrid,
    pairs: [(V, V); 2],
    tol: f64,
) -> Result<bool> {
    Ok(harmonic_residual(grid, pairs)? <= tol)
}

/// Whether a grid function is annihilated by the restricted Laplacian.
pub fn is_harmonic<V: FieldValue>(g: &GridFunction<V>, tol: f64) -> Result<bool> {
    Ok(g.restrict(LatticeOp::RadialLaplacian)?.max_abs() <= tol)
}

/// Telescoping sum for an evaluator rather than stored data:
/// `sum 2 hbar d_r g(tau, m)` over `m = r_from + hbar, r_from + 3 hbar, ...`.
pub fn telescoping_sum<F>(g: F, tau: f64, r_from: f64, r_to: f64, hbar: f64) -> Result<Complex64>
where
    F: Fn(f64, f64) -> Complex64,
{
    let steps = (r_to - r_from) / (2.0 * hbar);
    let n = steps.round();
    if hbar <= 0.0 || n < 0.0 || (steps - n).abs() > 1e-9 {
        return Err(Error::Invalid(
            "r_to - r_from must be a non-negative multiple of 2 hbar".into(),
        ));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n as i64 {
        let m = r_from + hbar + 2.0 * hbar * i as f64;
        acc += g(tau + hbar, m + hbar) - g(tau + hbar, m - hbar);
    }
    Ok(acc)
}

/// Quantum radius on the spin-`n/2` module: `(n + 1) hbar`.
pub fn verma_radius(n: u32, hbar: f64) -> f64 {
    (n as f64 + 1.0) * hbar
}

/// `Cas = r^2 - hbar^2 = n (n + 2) hbar^2` on the same module.
pub fn verma_casimir(n: u32, hbar: f64) -> f64 {
    let r = verma_radius(n, hbar);
    r * r - hbar * hbar
}
