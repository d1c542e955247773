//! The highest vectors `b^k` and the invariant operators acting on them.

use ncweyl::derivative::{basic_action_on_highest, in_isotypic_component, isotypic_basis, b, BasicOperator};

fn main() -> ncweyl::Result<()> {
    for k in 0..=3u32 {
        let basis = isotypic_basis(k);
        let inside = basis.vectors.iter().all(|w| in_isotypic_component(w, k));
        println!("V^{k}: dim {} inside component: {inside}", basis.vectors.len());
    }
    println!("b = {}", b());

    for k in [1u32, 2, 4] {
        let row: Vec<String> = BasicOperator::TABLE
            .iter()
            .map(|op| Ok(format!("{}={}", op.name(), basic_action_on_highest(k, *op)?)))
            .collect::<ncweyl::Result<_>>()?;
        println!("k={k}: {}", row.join("  "));
    }
    Ok(())
}
