//! Restricting the radial Laplacian to the lattice `(a + k hbar, b + l hbar)`.

use ncweyl::lattice::{
    harmonic_coefficient_freedom_check, telescoping_sum, verma_casimir, verma_radius, GridFunction,
    LatticeGrid, LatticeOp,
};
use ncweyl::GaussRational;
use num_complex::Complex64;

fn main() -> ncweyl::Result<()> {
    let grid = LatticeGrid::from_json(r#"{"hbar": 0.25, "k_min": 2, "k_max": 10, "l_min": 0, "l_max": 4}"#)?;

    let inv = GridFunction::<GaussRational>::sample(&grid, |_, r| {
        Ok(GaussRational::from_f64(r).unwrap().inv().unwrap())
    })?;
    let lap = inv.restrict(LatticeOp::RadialLaplacian)?;
    println!("1/r: {} interior nodes, max |Delta| = {}", lap.len(), lap.max_abs());

    let q = GaussRational::from_int;
    let ok = harmonic_coefficient_freedom_check(&grid, [(q(1), q(2)), (q(3), q(-1))], 0.0)?;
    println!("different (C1, C2) on the two sublattices still harmonic: {ok}");

    let r = GridFunction::<Complex64>::sample(&grid, |_, r| Ok(Complex64::new(r * r, 0.0)))?;
    let mut csv = Vec::new();
    r.restrict(LatticeOp::RadialDerivative)?.write_csv(&mut csv)?;
    println!("{}", String::from_utf8_lossy(&csv).lines().take(4).collect::<Vec<_>>().join("\n"));

    let sum = telescoping_sum(|_, r| Complex64::new(r * r, 0.0), 0.0, 1.0, 2.0, 0.25)?;
    println!("telescoping r^2 over [1, 2]: {}", sum.re);

    for n in 0..4 {
        println!("n={n}: r = {} Cas = {}", verma_radius(n, 0.5), verma_casimir(n, 0.5));
    }
    Ok(())
}
