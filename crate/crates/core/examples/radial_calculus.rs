//! Difference operators on central functions `f(tau, r)`, exact and
//! numeric.

use ncweyl::central::{function as cf, poly, CentralFunction};
use ncweyl::expr::parse_central;

fn main() -> ncweyl::Result<()> {
    for (op, f) in [("dr", "r^2"), ("dtau", "tau*r"), ("laplacian", "tau*r^2"), ("boost", "tau^2 - r^2")] {
        let p = parse_central(f)?;
        let g = match op {
            "dr" => poly::radial_derivative(&p)?,
            "dtau" => poly::act_dtau(&p)?,
            "laplacian" => poly::radial_laplacian(&p)?,
            _ => poly::radial_boost(&p)?,
        };
        println!("{op}({f}) = {g}");
    }

    // 1/r is harmonic; its shifts leave the polynomial layer, so sample it
    let h = 0.05;
    let lap = cf::radial_laplacian(&CentralFunction::inv_r(), h)?;
    println!("Delta(1/r) at r=1.3: {:.1e}", lap.eval_real(0.0, 1.3)?.norm());

    // both forms of the Laplacian on a sampled function
    let f = CentralFunction::new(|t, r| Ok((-r).exp() * (t * 0.3).cos()));
    let a = cf::radial_laplacian(&f, h)?;
    let b = cf::radial_laplacian_via_derivative(&f, h)?;
    for r in [0.5, 1.0, 2.0] {
        println!("r={r}: {:.12} {:.12}", a.eval_real(0.2, r)?.re, b.eval_real(0.2, r)?.re);
    }

    // classical limit of the radial derivative of sin(r)
    let s = CentralFunction::new(|_, r| Ok(r.sin()));
    for h in [1e-1, 1e-2, 1e-3] {
        let d = cf::radial_derivative(&s, h)?.eval_real(0.0, 1.0)?.re;
        println!("hbar={h:e}: error {:.3e}", (d - 1f64.cos()).abs());
    }
    Ok(())
}
