//! Deformed dispersion relation for plane waves along `x`.

use ncweyl::models::{kg_dispersion_residual, kg_energy_branches, plane_wave_check};

fn main() -> ncweyl::Result<()> {
    let (p, m) = (5.0, 3.0);
    for hbar in [0.0, 0.01, 0.1, 0.5] {
        let (ep, em) = kg_energy_branches(p, m, hbar);
        println!(
            "hbar={hbar}: E+={:.10} E-={:.10} residual={:.1e}",
            ep.re,
            em.re,
            kg_dispersion_residual(ep, p, m, hbar).norm()
        );
    }

    let nodes: Vec<(f64, f64)> = (0..6).flat_map(|i| (0..6).map(move |j| (0.1 * i as f64, 0.1 * j as f64))).collect();
    let (ep, _) = kg_energy_branches(p, m, 0.2);
    println!("on shell:  {:.1e}", plane_wave_check(ep, p, m, 0.2, &nodes)?);
    println!("off shell: {:.1e}", plane_wave_check(ep + 0.1, p, m, 0.2, &nodes)?);

    // below threshold the branches are complex
    let (ep, em) = kg_energy_branches(1.0, 2.0, 0.1);
    println!("p < m: E+={ep} E-={em}");
    Ok(())
}
