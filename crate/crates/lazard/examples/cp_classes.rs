//! Projective-space classes in the Lazard-ring model, two ways.
//!
//! The classes cp(n) are produced by the triangular recursion
//! `sum_{i+j=k} cp(i) a_{1j} = [k=0]` and cross-checked against the
//! logarithm: cp(n) = (n+1) m_n where log(t) = sum m_n t^(n+1) is the
//! compositional inverse of exp(t) = t + b1 t^2 + ...
//!
//! ```bash
//! cargo run --example cp_classes
//! ```

use lazard::text::to_canonical;
use lazard::verify::verify_cp_against_log;
use lazard::Fgl;

fn main() {
    let fgl = Fgl::universal(9);

    println!("classes of projective spaces from the recursion:");
    for n in 0..=6 {
        println!("  cp({n}) = {}", to_canonical(&fgl.cp_class(n).unwrap()));
    }

    println!("\ncross-check against the rational-log route, exact over Z[b]:");
    let report = verify_cp_against_log(&fgl, 8);
    for check in &report.checks {
        println!("  {}: {:?}", check.name, check.status);
    }
    assert!(report.passed());

    // The recursion needs a_{1,n}, so the truncation must exceed n.
    println!("\nbound behaviour: cp(9) at truncation 9 ->");
    match fgl.cp_class(9) {
        Err(e) => println!("  error as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
