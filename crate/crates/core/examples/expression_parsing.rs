//! The text grammar: parse, evaluate, print, and report errors.

use ncweyl::expr::{parse, parse_central};

fn main() -> ncweyl::Result<()> {
    let e = parse("(1/2)*hbar^-1*dtau + 3*tau^2*x*dx")?;
    println!("ast: {e}");
    let v = e.eval()?;
    println!("value: {v}");
    assert_eq!(parse(&v.to_string())?.eval()?, v);

    match parse("x**2") {
        Err(err) => println!("x**2: {err}"),
        Ok(_) => unreachable!(),
    }
    println!("central: {}", parse_central("tau^2 - r^2 + r^-1")?);
    Ok(())
}
