//! Gysin pushforwards along projective-space projections.
//!
//! In the truncated model of `P^n`, a class is a polynomial in the
//! hyperplane class x with `x^(n+1) = 0`; the pushforward to the base pairs
//! its coefficient list with the eta' family. The example checks the
//! defining cases, the section identity, and the projection formula.
//!
//! ```bash
//! cargo run --example gysin_pushforward
//! ```

use std::sync::Arc;

use lazard::gysin::{self, Model};
use lazard::text::to_canonical;
use lazard::Fgl;

fn main() {
    let fgl = Fgl::universal(8);
    let n = 3;
    let model = Model::new(Arc::clone(&fgl), &[n]);
    let x = model.var("x1").unwrap();

    println!("pushforward along the projection from P^{n}:");
    println!("  p_!(x^{n})  = {}", to_canonical(&model.pushforward("x1", &x.pow(n)).unwrap()));
    println!("  p_!(1)    = {}", to_canonical(&model.pushforward("x1", &model.one()).unwrap()));
    println!("  (the latter is the class of P^{n} itself: eta'_{n} = cp({n}))");
    assert_eq!(fgl.eta_prime(n), fgl.cp_class(n).unwrap());

    println!("\nsection identity p_! Delta_!(1) = 1 over three laws:");
    for law in [Arc::clone(&fgl), Fgl::additive(8), Fgl::multiplicative(8)] {
        let label = law.kind().label();
        for k in 0..=4 {
            let report = gysin::verify_section_identity(Arc::clone(&law), k);
            assert!(report.passed(), "{label} n={k}");
        }
        println!("  {label}: n <= 4 pass");
    }

    println!("\nprojection formula and double projections on random classes:");
    let report =
        gysin::projection_properties_randomized(Arc::clone(&fgl), (3, 2), 50, 99);
    for check in &report.checks {
        println!("  {}: {:?}", check.name, check.status);
    }
    assert!(report.passed());

    println!("\nnaturality under coefficient specialization (b1 -> -1, rest -> 0):");
    let report =
        gysin::verify_specialization_naturality(fgl, &[("b1", -1)], (3, 3), 30, 7);
    for check in &report.checks {
        println!("  {}: {:?}", check.name, check.status);
    }
    assert!(report.passed());
}
