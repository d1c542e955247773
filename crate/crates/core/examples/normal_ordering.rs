//! PBW normal ordering: the word rewriter against direct multiplication.

use ncweyl::expr::parse_element;
use ncweyl::weyl::{bracket, ch_residual, normalize, FreeElement};
use ncweyl::{Generator, WeylElement};

fn main() -> ncweyl::Result<()> {
    for s in ["dx*x", "dtau*tau", "y*x", "dx*y", "(x + dy)^2", "dz*z*dx*x"] {
        println!("{s:>12}  =>  {}", parse_element(s)?);
    }

    // commutators straight from the relation table
    println!("[dx, x] = {}", bracket(Generator::DX, Generator::X));
    println!("[z, x]  = {}", bracket(Generator::Z, Generator::X));

    let w = [Generator::DZ, Generator::Y, Generator::DTau, Generator::X];
    let by_rewriting = normalize(&FreeElement::word(&w));
    assert_eq!(by_rewriting, WeylElement::from_word(&w));
    println!("dz*y*dtau*x = {by_rewriting}");

    let ch = ch_residual();
    let zero = ch.iter().flatten().all(WeylElement::is_zero);
    println!("CH residual vanishes: {zero}");
    Ok(())
}
