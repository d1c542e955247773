//! Hydrogen-type ground state: classical limit, small-hbar residuals and
//! first-order coefficients in physical units.

use ncweyl::models::{
    derived_first_order_coefficients, first_order_coefficients, numeric_first_order_coefficients,
    solve_ground_state, PhysicalConstants,
};

fn main() -> ncweyl::Result<()> {
    let g = solve_ground_state(1.0, 1.0, 1.0, 0.0)?;
    println!("hbar=0: sigma={} E={}", g.sigma, g.e);

    for hbar in [1e-4, 1e-3, 1e-2, 5e-2] {
        let g = solve_ground_state(1.0, 1.0, 1.0, hbar)?;
        println!(
            "hbar={hbar:e}: sigma={:.12} E={:.12} residuals={:.1e},{:.1e}",
            g.sigma, g.e, g.residuals[0], g.residuals[1]
        );
    }

    for alpha in [0.0073, 0.01, 0.1] {
        let k = PhysicalConstants::new(alpha, 1.0, 1.0);
        let num = numeric_first_order_coefficients(&k)?;
        let quoted = first_order_coefficients(&k);
        let derived = derived_first_order_coefficients(&k);
        println!("alpha={alpha}");
        println!("  numeric  dE={:.6e} dsigma={:.6e}", num.0, num.1);
        println!("  quoted   dE={:.6e} dsigma={:.6e}", quoted.0, quoted.1);
        println!("  expanded dE={:.6e} dsigma={:.6e}", derived.0, derived.1);
    }
    Ok(())
}
