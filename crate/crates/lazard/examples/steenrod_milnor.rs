//! Mod-l Steenrod and Milnor operations and the obstruction class.
//!
//! Works in the cohomology ring with exterior generators u1, u2 and
//! polynomial generators v1, v2. The headline computation: the Milnor
//! operation applied to the Bockstein of u1*u2 is (up to a unit)
//! `v1^l v2 - v1 v2^l`, and it survives truncation to the
//! finite-dimensional approximation — the witness that the class does not
//! lift.
//!
//! ```bash
//! cargo run --example steenrod_milnor
//! ```

use lazard::steenrod::MotRing;
use lazard::text::to_canonical;

fn main() {
    for l in [2u32, 3, 5] {
        let ring = MotRing::new(l, 2).unwrap();
        let u1u2 = ring.u(1).unwrap().mul(&ring.u(2).unwrap()).unwrap();

        let beta = ring.bockstein(&u1u2);
        let q1 = ring.power_op(1, &beta);
        let val = ring.milnor_q(1, &beta);

        println!("l = {l}:");
        println!("  beta(u1*u2)       = {}", to_canonical(&beta));
        println!("  P^1 beta(u1*u2)    = {}", to_canonical(&q1));
        println!("  Q_1 beta(u1*u2)    = {}", to_canonical(&val));
        println!("  bidegree          = {:?}", ring.bidegree(&val).unwrap());

        // survives the truncation to the finite approximation
        let truncated = ring.truncate(&val, &[l, l]);
        assert_eq!(truncated, val);
        assert!(!truncated.is_zero());
        println!("  nonzero after truncation by (v1^{}, v2^{})", l + 1, l + 1);

        // and v^(l+1) itself dies there
        let big = ring.v(1).unwrap().pow(l + 1);
        assert!(ring.truncate(&big, &[l, l]).is_zero());
        println!();
    }

    // Operation identities on random classes.
    let ring = MotRing::new(3, 2).unwrap();
    let report = ring.verify_operations(100, 1);
    println!("operation properties at l = 3:");
    for check in &report.checks {
        println!("  {}: {:?}", check.name, check.status);
    }
    assert!(report.passed());
}
