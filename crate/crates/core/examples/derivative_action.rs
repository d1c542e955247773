//! Derivatives acting on `U` through the counit, and the coproduct.

use ncweyl::derivative::{act, act_via_coproduct, coproduct};
use ncweyl::expr::parse_element;

fn main() -> ncweyl::Result<()> {
    for (d, u) in [("dx", "x"), ("dx", "x^2"), ("dtau", "tau^2"), ("dy", "x*y"), ("dx*dx + dy*dy + dz*dz", "x^2 + y^2 + z^2")] {
        let d = parse_element(d)?;
        let u = parse_element(u)?;
        println!("{d} |> {u} = {}", act(&d, &u)?);
    }

    let dx = parse_element("dx")?;
    println!("coproduct(dx) = {}", coproduct(&dx)?);

    // deformed Leibniz rule
    let (u, v) = (parse_element("x*y")?, parse_element("z + tau")?);
    let lhs = act(&dx, &(&u * &v))?;
    assert_eq!(lhs, act_via_coproduct(&dx, &u, &v)?);
    println!("dx |> (x*y)(z + tau) = {lhs}");
    Ok(())
}
