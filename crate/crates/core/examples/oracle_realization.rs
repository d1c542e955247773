//! Each generator as a differential operator on polynomials in `T, X, Y, Z`,
//! and the product check against the rewriter.

use ncweyl::oracle::{apply_composed, apply_element, realize_generator, symbol, ClassicalPolynomial};
use ncweyl::{Generator, WeylElement};

fn main() {
    for g in [Generator::Tau, Generator::X, Generator::DX] {
        println!("{g} -> {}", realize_generator(g));
    }

    let basis = ClassicalPolynomial::basis(3);
    let mut checked = 0;
    for a in Generator::ALL {
        for b in Generator::ALL {
            let (ea, eb) = (WeylElement::gen(a), WeylElement::gen(b));
            let ab = &ea * &eb;
            for p in &basis {
                assert_eq!(apply_element(&ab, p), apply_composed(&ea, &eb, p));
                checked += 1;
            }
        }
    }
    println!("{checked} products agree on polynomials of degree <= 3");

    // x*y as an element of U, seen through the realization applied to 1
    let xy = &WeylElement::x() * &WeylElement::y();
    println!("symbol of x*y: {}", symbol(&xy));
}
