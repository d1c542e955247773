//! Spectral decomposition of the matrix that moves the Casimir through
//! the column `(dx, x dt~, x Q, X)`.

use ncweyl::central::psi;

fn main() {
    let m = psi::psi_matrix();
    let (p1, p2) = psi::projectors();
    let (l1, l2) = psi::eigenvalues();
    println!("lambda_1 = {l1}\nlambda_2 = {l2}");

    assert!(psi::mat_eq(&psi::mat_mul(&p1, &p1), &p1));
    assert!(psi::mat_eq(&psi::mat_mul(&p1, &p2), &[[0, 0, 0, 0]; 4].map(|r| r.map(|_| psi::RatFn::zero()))));
    assert!(psi::mat_eq(&psi::mat_add(&p1, &p2), &psi::identity()));

    for p in 1..=4 {
        let lhs = psi::mat_pow(&m, p);
        let rhs = psi::mat_add(
            &psi::mat_scale(&p1, &l1.powi(p as i32).unwrap()),
            &psi::mat_scale(&p2, &l2.powi(p as i32).unwrap()),
        );
        println!("Psi^{p} = l1^{p} P1 + l2^{p} P2: {}", psi::mat_eq(&lhs, &rhs));
    }

    let zero = psi::theorem_residual().iter().all(|w| w.is_zero());
    println!("col * Cas = Psi(Cas) * col in the algebra: {zero}");
}
