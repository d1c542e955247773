//! Permutation identities for `f(tau)`, `f(x)` and `f(r_hbar)`.

mod common;

fn assert_all(v: Vec<common::Outcome>) {
    let bad: Vec<String> = v
        .iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    assert!(bad.is_empty(), "{} failures:\n{}", bad.len(), bad.join("\n"));
    assert!(!v.is_empty());
}

#[test]
fn single_variable_exact() {
    assert_all(common::exact_single_variable());
}

#[test]
fn radial_exact() {
    assert_all(common::exact_radial());
}

#[test]
fn sampled_evaluators() {
    assert_all(common::numeric(0.1));
    assert_all(common::numeric(0.013));
}
